use crate::aclus::BooleanTable;
use crate::error::Result;
use crate::ring::MonomialOrder;

/// Per-column weights `ones * (m - ones)`, counted over every row of the
/// table including repeated patterns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The weighted lexicographic order these weights induce.
    pub fn order(&self) -> Result<MonomialOrder> {
        MonomialOrder::from_unsigned(self.0.clone())
    }
}

impl From<Vec<u64>> for WeightVector {
    fn from(w: Vec<u64>) -> Self {
        WeightVector(w)
    }
}

pub fn compute_weights(table: &BooleanTable) -> WeightVector {
    let m = table.m() as u64;
    WeightVector(
        (0..table.n())
            .map(|i| {
                let ones = table.column_ones(i) as u64;
                ones * (m - ones)
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::VariableContext;

    #[test]
    fn constant_columns_weigh_zero() {
        let ctx = VariableContext::new(["z", "o", "h"]).unwrap();
        let t = BooleanTable::from_strings(&ctx, &["010", "011", "011", "010"]).unwrap();
        assert_eq!(compute_weights(&t).as_slice(), [0, 0, 4]);
    }

    #[test]
    fn empty_table_has_zero_weights() {
        let ctx = VariableContext::new(["a", "b"]).unwrap();
        let t = BooleanTable::new(&ctx, vec![]).unwrap();
        assert_eq!(compute_weights(&t).as_slice(), [0, 0]);
    }

    #[test]
    fn bounded_by_half_squared() {
        let ctx = VariableContext::new(["a"]).unwrap();
        for m in 0..12usize {
            for ones in 0..=m {
                let rows: Vec<String> = (0..m)
                    .map(|i| if i < ones { "1".into() } else { "0".into() })
                    .collect();
                let refs: Vec<&str> = rows.iter().map(String::as_str).collect();
                let t = BooleanTable::from_strings(&ctx, &refs).unwrap();
                let w = compute_weights(&t).as_slice()[0];
                assert_eq!(w, (ones * (m - ones)) as u64);
                assert!(w <= ((m / 2) * m.div_ceil(2)) as u64);
            }
        }
    }
}
