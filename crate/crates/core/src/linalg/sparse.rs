use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::rational::Rational;

type Row = Vec<(usize, Rational)>;

/// Homogeneous linear system with sparse rows, kept in row echelon form as
/// equations arrive. Built for the intertwiner and invariant-form systems,
/// whose equations carry a handful of terms over thousands of unknowns.
#[derive(Clone, Debug)]
pub struct SparseSystem {
    nvars: usize,
    /// pivot variable -> row whose smallest variable is the pivot, normalized to 1
    pivots: BTreeMap<usize, Row>,
}

impl SparseSystem {
    pub fn new(nvars: usize) -> Self {
        SparseSystem {
            nvars,
            pivots: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.nvars - self.pivots.len()
    }

    fn is_pinned(&self, v: usize) -> bool {
        self.pivots.get(&v).is_some_and(|r| r.len() == 1)
    }

    /// Pivot variables in increasing order.
    pub fn pivot_vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Echelon rows, which span the same space as every inserted row.
    pub fn rows(&self) -> impl Iterator<Item = &[(usize, Rational)]> + '_ {
        self.pivots.values().map(Vec::as_slice)
    }

    /// Add the equation `Σ coeff·x_var = 0`. Repeated variables are summed.
    pub fn add_equation(&mut self, terms: impl IntoIterator<Item = (usize, Rational)>) {
        self.insert(terms);
    }

    /// Add a row; `false` when it was already in the row span.
    pub fn insert(&mut self, terms: impl IntoIterator<Item = (usize, Rational)>) -> bool {
        // variables already pinned to zero drop out without any arithmetic
        let mut row = normalize(terms.into_iter().filter(|(v, _)| !self.is_pinned(*v)));
        loop {
            let Some((lead, _)) = row.first() else { return false };
            let lead = *lead;
            match self.pivots.get(&lead) {
                Some(prow) => {
                    let f = row[0].1.clone();
                    row = axpy(&row, prow, &f);
                }
                None => {
                    let inv = row[0].1.recip();
                    for (_, c) in row.iter_mut() {
                        *c *= &inv;
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// The representative of `terms` modulo the row span whose pivot
    /// coordinates all vanish.
    pub fn reduce(&self, terms: impl IntoIterator<Item = (usize, Rational)>) -> Vec<(usize, Rational)> {
        let mut row = normalize(terms);
        let mut k = 0;
        while k < row.len() {
            match self.pivots.get(&row[k].0) {
                Some(prow) => {
                    let f = row[k].1.clone();
                    row = axpy(&row, prow, &f);
                }
                None => k += 1,
            }
        }
        row
    }

    /// Basis of the solution space as dense vectors of length `nvars`.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let free: Vec<usize> = (0..self.nvars).filter(|v| !self.pivots.contains_key(v)).collect();
        free.iter()
            .map(|&f| {
                let mut x = alloc::vec![Rational::zero(); self.nvars];
                x[f] = Rational::one();
                for (&p, row) in self.pivots.iter().rev() {
                    let mut acc = Rational::zero();
                    for (v, c) in row.iter().skip(1) {
                        if !x[*v].is_zero() {
                            acc += c * &x[*v];
                        }
                    }
                    x[p] = -acc;
                }
                x
            })
            .collect()
    }
}

fn normalize(terms: impl IntoIterator<Item = (usize, Rational)>) -> Row {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (v, c) in terms {
        if c.is_zero() {
            continue;
        }
        *acc.entry(v).or_insert_with(Rational::zero) += c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// `row − f·pivot_row`, both sorted by variable.
fn axpy(row: &Row, prow: &Row, f: &Rational) -> Row {
    let mut out = Vec::with_capacity(row.len() + prow.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < prow.len() {
        let take_row = j == prow.len() || (i < row.len() && row[i].0 < prow[j].0);
        let take_prow = i == row.len() || (j < prow.len() && prow[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_prow {
            out.push((prow[j].0, -(f * &prow[j].1)));
            j += 1;
        } else {
            let c = &row[i].1 - f * &prow[j].1;
            if !c.is_zero() {
                out.push((row[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn solves_small_system() {
        // x0 + x1 = 0, x1 - x2 = 0 over 3 unknowns: 1-dim solution (−1, 1, 1)
        let mut s = SparseSystem::new(3);
        s.add_equation([(0, int(1)), (1, int(1))]);
        s.add_equation([(1, int(1)), (2, int(-1))]);
        s.add_equation([(0, int(2)), (2, int(2))]);
        assert_eq!(s.rank(), 2);
        let ns = s.nullspace();
        assert_eq!(ns, alloc::vec![alloc::vec![int(-1), int(1), int(1)]]);
    }

    #[test]
    fn duplicate_and_cancelling_terms() {
        let mut s = SparseSystem::new(2);
        s.add_equation([(0, int(1)), (0, int(-1))]);
        assert_eq!(s.rank(), 0);
        s.add_equation([(1, int(3)), (1, int(1))]);
        assert_eq!(s.nullspace(), alloc::vec![alloc::vec![int(1), int(0)]]);
    }

    #[test]
    fn reduce_clears_pivots() {
        let mut s = SparseSystem::new(3);
        assert!(s.insert([(0, int(1)), (1, int(1))]));
        assert!(s.insert([(1, int(1)), (2, int(1))]));
        assert!(!s.insert([(0, int(1)), (2, int(-1))]));
        // e0 ≡ −e1 ≡ e2
        assert_eq!(s.reduce([(0, int(1))]), alloc::vec![(2, int(1))]);
        assert!(s.reduce([(0, int(2)), (1, int(2))]).is_empty());
    }
}
