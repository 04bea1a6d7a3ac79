//! Sparse exact elimination over the [`Scalar`] field.
//!
//! Rows are reduced incrementally against a reduced row echelon basis; each
//! new pivot row is normalized to a leading 1 and eliminated from the earlier
//! pivot rows, so the stored basis stays fully reduced. Zero tests are exact.

use std::collections::BTreeMap;

use crate::exactalg::Scalar;

pub type SparseRow = BTreeMap<usize, Scalar>;

#[derive(Clone, Debug, Default)]
pub struct Rref {
    ncols: usize,
    /// Pivot column -> row with a 1 there and zeros in every other pivot column.
    pivots: BTreeMap<usize, SparseRow>,
}

fn axpy(row: &mut SparseRow, c: &Scalar, other: &SparseRow) {
    for (j, v) in other {
        let slot = row.entry(*j).or_default();
        *slot -= &(c * v);
        if slot.is_zero() {
            row.remove(j);
        }
    }
}

impl Rref {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let hits: Vec<(usize, Scalar)> = row
            .iter()
            .filter(|(c, _)| self.pivots.contains_key(c))
            .map(|(c, v)| (*c, v.clone()))
            .collect();
        for (c, v) in hits {
            axpy(&mut row, &v, &self.pivots[&c]);
        }
        row
    }

    /// Adds an equation `sum row[j] x_j = 0`; returns whether the rank grew.
    pub fn push(&mut self, row: SparseRow) -> bool {
        debug_assert!(row.keys().all(|c| *c < self.ncols));
        let row = self.reduce(row);
        let Some((&col, lead)) = row.iter().next() else {
            return false;
        };
        let inv = lead.recip().expect("stored entries are nonzero");
        let row: SparseRow = row.iter().map(|(j, v)| (*j, v * &inv)).collect();
        for prow in self.pivots.values_mut() {
            if let Some(c) = prow.get(&col).cloned() {
                axpy(prow, &c, &row);
            }
        }
        self.pivots.insert(col, row);
        true
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the solution space, one vector per free column (in column
    /// order), with that free variable set to 1.
    pub fn nullspace(&self) -> Vec<SparseRow> {
        let mut out = Vec::new();
        for f in (0..self.ncols).filter(|c| !self.pivots.contains_key(c)) {
            let mut v = SparseRow::new();
            v.insert(f, Scalar::one());
            for (pc, prow) in &self.pivots {
                if let Some(c) = prow.get(&f) {
                    v.insert(*pc, -c);
                }
            }
            out.push(v);
        }
        out
    }
}

/// Nullspace of the homogeneous system given by `rows`.
pub fn nullspace(rows: impl IntoIterator<Item = SparseRow>, ncols: usize) -> Vec<SparseRow> {
    let mut r = Rref::new(ncols);
    for row in rows {
        r.push(row);
    }
    r.nullspace()
}
