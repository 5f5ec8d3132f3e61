use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Monomial, MAX_VARIABLES};

/// A point of `{0,1}^n`, stored in the same bit layout as [`Monomial`].
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    len: usize,
    bits: u64,
}

impl Assignment {
    pub fn new(bits: &[bool]) -> Result<Self> {
        if bits.len() > MAX_VARIABLES {
            return Err(Error::TooManyVariables {
                count: bits.len(),
                max: MAX_VARIABLES,
            });
        }
        let mask = bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .fold(0u64, |acc, (i, _)| acc | Monomial::bit(i));
        Ok(Self {
            len: bits.len(),
            bits: mask,
        })
    }

    /// Parses a string of `0`/`1` characters such as `"001100"`.
    pub fn from_str01(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse {
                    position: i,
                    message: format!("expected 0 or 1, found `{c}`"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&bits)
    }

    /// The point whose true coordinates are the variables of `m`.
    pub fn from_monomial(len: usize, m: Monomial) -> Self {
        Self {
            len,
            bits: m.bits(),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, index: usize) -> bool {
        index < self.len && self.bits & Monomial::bit(index) != 0
    }

    pub fn to_vec(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    /// The set of true coordinates as a monomial.
    pub fn support(&self) -> Monomial {
        Monomial::from_bits(self.bits)
    }

    pub fn count_ones(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Every point of `{0,1}^len`, in increasing binary order of the
    /// `0`/`1` string.
    pub fn all(len: usize) -> impl Iterator<Item = Assignment> {
        assert!(len < 64, "cannot enumerate {len}-dimensional cube");
        (0u64..(1u64 << len)).map(move |k| {
            // string position i is the (len-1-i)-th bit of k
            let bits = (0..len)
                .filter(|i| k >> (len - 1 - i) & 1 == 1)
                .fold(0u64, |acc, i| acc | Monomial::bit(i));
            Assignment { len, bits }
        })
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Assignment({self})")
    }
}
