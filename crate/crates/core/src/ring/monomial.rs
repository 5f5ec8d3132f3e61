use std::fmt;

use crate::ring::VariableContext;

/// A squarefree monomial: the product of a set of variables.
///
/// Variable `i` is stored at bit `63 - i`, so the derived `Ord` on the raw
/// mask is exactly the lexicographic order with `X_0 > X_1 > ...`.
/// The empty set is the constant monomial `1`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    #[inline]
    pub(crate) const fn bit(index: usize) -> u64 {
        1u64 << (63 - index)
    }

    #[inline]
    pub fn var(index: usize) -> Self {
        assert!(index < 64, "variable index {index} out of range");
        Monomial(Self::bit(index))
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(Monomial::ONE, |m, i| m.mul(Monomial::var(i)))
    }

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        Monomial(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    #[inline]
    pub fn contains(self, index: usize) -> bool {
        index < 64 && self.0 & Self::bit(index) != 0
    }

    /// Product in the quotient ring: union of the variable sets.
    #[inline]
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Monomial) -> Monomial {
        Monomial(self.0 | other.0)
    }

    #[inline]
    pub fn divides(self, other: Monomial) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn lcm(self, other: Monomial) -> Monomial {
        self.mul(other)
    }

    #[inline]
    pub fn gcd(self, other: Monomial) -> Monomial {
        Monomial(self.0 & other.0)
    }

    #[inline]
    pub fn is_coprime(self, other: Monomial) -> bool {
        self.0 & other.0 == 0
    }

    /// `self / divisor`; only meaningful when `divisor` divides `self`.
    #[inline]
    #[allow(clippy::should_implement_trait)]
    pub fn div(self, divisor: Monomial) -> Monomial {
        debug_assert!(divisor.divides(self));
        Monomial(self.0 & !divisor.0)
    }

    /// Variable indices in increasing order.
    pub fn vars(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.leading_zeros() as usize;
            bits &= !Self::bit(i);
            Some(i)
        })
    }

    pub fn render(self, ctx: &VariableContext) -> String {
        if self.is_one() {
            return "1".to_owned();
        }
        self.vars()
            .map(|i| ctx.name(i))
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.vars().map(|i| format!("x{i}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_semantics() {
        let xy = Monomial::from_indices([0, 1]);
        let yz = Monomial::from_indices([1, 2]);
        assert_eq!(xy.mul(xy), xy);
        assert_eq!(xy.lcm(yz), Monomial::from_indices([0, 1, 2]));
        assert_eq!(xy.gcd(yz), Monomial::var(1));
        assert!(Monomial::var(1).divides(xy));
        assert!(!yz.divides(xy));
        assert_eq!(xy.div(Monomial::var(0)), Monomial::var(1));
        assert_eq!(xy.vars().collect::<Vec<_>>(), vec![0, 1]);
        assert!(Monomial::ONE.divides(xy));
        assert_eq!(
            Monomial::from_indices([5, 63]).vars().collect::<Vec<_>>(),
            vec![5, 63]
        );
    }

    #[test]
    fn raw_order_is_lex() {
        // X_0 > X_1 X_2 > X_1 X_3 > X_1 > 1
        let chain = [
            Monomial::var(0),
            Monomial::from_indices([1, 2]),
            Monomial::from_indices([1, 3]),
            Monomial::var(1),
            Monomial::ONE,
        ];
        for w in chain.windows(2) {
            assert!(w[0] > w[1], "{:?} > {:?}", w[0], w[1]);
        }
    }
}
