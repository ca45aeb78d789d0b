//! Exact rank over `Q(ζ)` by Gaussian elimination on sparse rows.

use std::collections::BTreeMap;

use crate::cyclotomic::CyclotomicNumber;
use crate::symmetrize::SymmetrizedVector;

/// Row echelon form built one row at a time.
///
/// Each stored pivot row has a unit entry at its pivot column and no entry at
/// the pivot columns of earlier rows, so reducing a new row against the
/// pivots in insertion order clears every pivot column.
#[derive(Clone, Debug, Default)]
pub struct Echelon<K: Ord + Clone> {
    pivots: Vec<(K, BTreeMap<K, CyclotomicNumber>)>,
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Echelon { pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `row` against the current pivots; returns the remainder.
    pub fn reduce(&self, mut row: BTreeMap<K, CyclotomicNumber>) -> BTreeMap<K, CyclotomicNumber> {
        for (key, prow) in &self.pivots {
            let Some(factor) = row.get(key).cloned() else { continue };
            for (k, v) in prow {
                let delta = &factor * v;
                match row.get_mut(k) {
                    Some(slot) => *slot -= &delta,
                    None => {
                        row.insert(k.clone(), -delta);
                    }
                }
            }
            row.retain(|_, v| !v.is_zero());
        }
        row
    }

    /// Insert a row; returns whether it was independent of the previous ones.
    pub fn insert(&mut self, row: BTreeMap<K, CyclotomicNumber>) -> bool {
        let row = self.reduce(row);
        let Some((key, lead)) = row.iter().next().map(|(k, v)| (k.clone(), v.clone())) else {
            return false;
        };
        let inv = lead.inverse().expect("nonzero field element is invertible");
        let normalized = row.into_iter().map(|(k, v)| (k, &v * &inv)).collect();
        self.pivots.push((key, normalized));
        true
    }
}

/// Rank of a dense matrix given by rows.
pub fn exact_rank(rows: &[Vec<CyclotomicNumber>]) -> usize {
    let mut ech = Echelon::new();
    for row in rows {
        let sparse = row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect();
        ech.insert(sparse);
    }
    ech.rank()
}

/// Dimension of the span of a family of symmetrized vectors.
pub fn span_rank(vectors: &[SymmetrizedVector]) -> usize {
    let mut ech = Echelon::new();
    for v in vectors {
        ech.insert(v.coeffs().clone());
    }
    ech.rank()
}
