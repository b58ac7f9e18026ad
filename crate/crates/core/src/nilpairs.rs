//! Commuting nilpotent pairs attached to skew shapes, their semisimple
//! pairs, centralizers, and the Borel subalgebras containing them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::hecke::Perm;
use crate::linalg::{int, Matrix, Rational, SparseSystem};
use crate::segments::{Coordinates, SkewDiagram};
use crate::tableaux::{enumerate, SkewTableau};
use crate::{Error, Result};

/// `e1` moves each box to its east neighbour, `e2` to its south neighbour,
/// boxes numbered in row-reading order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentPair {
    pub n: usize,
    pub e1: Matrix,
    pub e2: Matrix,
    pub diagram: SkewDiagram,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimplePair {
    pub h1: Matrix,
    pub h2: Matrix,
}

fn sheared_connected(sigma: &SkewDiagram) -> Result<()> {
    if sigma.system() != Coordinates::Sheared {
        return Err(Error::InvalidInput("expected a sheared skew shape".into()));
    }
    if !sigma.is_connected() {
        return Err(Error::InvalidInput(alloc::format!("{sigma} is not connected")));
    }
    Ok(())
}

pub fn from_skew(sigma: &SkewDiagram) -> Result<NilpotentPair> {
    sheared_connected(sigma)?;
    let boxes = sigma.boxes();
    let n = boxes.len();
    let index: BTreeMap<(usize, i64), usize> = boxes.iter().enumerate().map(|(k, &b)| (b, k)).collect();
    let mut e1 = Matrix::zeros(n, n);
    let mut e2 = Matrix::zeros(n, n);
    for (p, &(r, c)) in boxes.iter().enumerate() {
        if let Some(&q) = index.get(&(r, c + 1)) {
            e1[(q, p)] = Rational::one();
        }
        if let Some(&q) = index.get(&(r + 1, c)) {
            e2[(q, p)] = Rational::one();
        }
    }
    Ok(NilpotentPair {
        n,
        e1,
        e2,
        diagram: sigma.clone(),
    })
}

/// `h1` = column coordinate, `h2` = row coordinate, both made traceless.
pub fn semisimple_pair(sigma: &SkewDiagram) -> Result<SemisimplePair> {
    sheared_connected(sigma)?;
    let boxes = sigma.boxes();
    let n = int(boxes.len() as i64);
    let traceless = |vals: Vec<Rational>| {
        let mean = vals.iter().fold(Rational::zero(), |a, x| a + x) / &n;
        Matrix::diagonal(&vals.iter().map(|v| v - &mean).collect::<Vec<_>>())
    };
    let h1 = traceless(boxes.iter().map(|&(_, c)| int(c)).collect());
    let h2 = traceless(boxes.iter().map(|&(r, _)| int(r as i64)).collect());
    Ok(SemisimplePair { h1, h2 })
}

fn is_nilpotent(m: &Matrix) -> bool {
    m.pow(m.rows()).is_zero()
}

/// `[e1, e2] = 0`, both nilpotent, `[h1, h2] = 0`, `[h_i, e_j] = δ_ij e_j`.
pub fn verify_pair_relations(pair: &NilpotentPair, ss: &SemisimplePair) -> bool {
    let zero = Matrix::zeros(pair.n, pair.n);
    pair.e1.commutator(&pair.e2) == zero
        && is_nilpotent(&pair.e1)
        && is_nilpotent(&pair.e2)
        && ss.h1.commutator(&ss.h2) == zero
        && ss.h1.commutator(&pair.e1) == pair.e1
        && ss.h1.commutator(&pair.e2) == zero
        && ss.h2.commutator(&pair.e1) == zero
        && ss.h2.commutator(&pair.e2) == pair.e2
}

/// `dim {x ∈ sl(n) : [x, e1] = [x, e2] = 0}`.
pub fn centralizer_dim(pair: &NilpotentPair) -> usize {
    let n = pair.n;
    let var = |r: usize, c: usize| r * n + c;
    let mut sys = SparseSystem::new(n * n);
    for e in [&pair.e1, &pair.e2] {
        let cols = e.column_support();
        let rows = e.transpose().column_support();
        for r in 0..n {
            for c in 0..n {
                // (x e − e x)_{rc}
                let mut eq: Vec<(usize, Rational)> = cols[c].iter().map(|(k, v)| (var(r, *k), v.clone())).collect();
                eq.extend(rows[r].iter().map(|(k, v)| (var(*k, c), -v.clone())));
                sys.add_equation(eq);
            }
        }
    }
    sys.add_equation((0..n).map(|i| (var(i, i), Rational::one())));
    sys.nullity()
}

pub fn is_principal_by_dim(pair: &NilpotentPair) -> bool {
    centralizer_dim(pair) + 1 == pair.n
}

/// Dimensions of the joint `(ad h1, ad h2)`-eigenspaces on `sl(n)`.
pub fn bigrading_dims(ss: &SemisimplePair) -> BTreeMap<(Rational, Rational), usize> {
    let (d1, d2) = (ss.h1.diag(), ss.h2.diag());
    let n = d1.len();
    let mut out: BTreeMap<(Rational, Rational), usize> = BTreeMap::new();
    if n > 1 {
        out.insert((Rational::zero(), Rational::zero()), n - 1);
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                *out.entry((&d1[i] - &d1[j], &d2[i] - &d2[j])).or_default() += 1;
            }
        }
    }
    out
}

/// Every `w ∈ S_n` with `Ad(w⁻¹) e_1`, `Ad(w⁻¹) e_2` lower triangular, where
/// `w · E_ij = E_{w(i), w(j)}`.
pub fn borel_incidence(pair: &NilpotentPair, max_n: usize) -> Result<Vec<Perm>> {
    if pair.n > max_n {
        return Err(Error::Capacity {
            what: "rank for Borel enumeration",
            limit: max_n,
            requested: pair.n,
        });
    }
    let entries: Vec<(usize, usize)> = pair
        .e1
        .nonzeros()
        .chain(pair.e2.nonzeros())
        .map(|(q, p, _)| (q, p))
        .collect();
    Ok(Perm::all(pair.n)
        .filter(|w| {
            let inv = w.inverse();
            entries.iter().all(|&(q, p)| inv.apply(q) > inv.apply(p))
        })
        .collect())
}

/// Comparison of the Borel incidence set with the tableau permutations of
/// `C(σ, a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuvReport {
    pub borel: Vec<Perm>,
    pub tableaux: Vec<Perm>,
    /// The two sets coincide as written.
    pub literal_equal: bool,
    /// The Borel set is `{w⁻¹ : w ∈ W(Δ)}`.
    pub equal_up_to_inverse: bool,
    /// `w ↦ w(λ)` is injective on the tableau permutations.
    pub weights_injective: bool,
}

impl BuvReport {
    /// The bijection between Borel subalgebras and `A`-weights holds.
    pub fn passed(&self) -> bool {
        self.equal_up_to_inverse && self.weights_injective
    }
}

pub fn verify_buv(sigma: &SkewDiagram, a: i64, max_n: usize) -> Result<BuvReport> {
    let pair = from_skew(sigma)?;
    let m = sigma.to_multisegment(a)?;
    let lambda = m.lambda()?;
    let tableaux: Vec<Perm> = enumerate(&m)?.iter().map(SkewTableau::to_perm).collect();
    let borel = borel_incidence(&pair, max_n)?;
    let b: BTreeSet<&Perm> = borel.iter().collect();
    let t: BTreeSet<&Perm> = tableaux.iter().collect();
    let t_inv: BTreeSet<Perm> = tableaux.iter().map(Perm::inverse).collect();
    let weights: BTreeSet<_> = tableaux.iter().map(|w| w.act_on_weight(&lambda)).collect();
    Ok(BuvReport {
        literal_equal: b == t,
        equal_up_to_inverse: b == t_inv.iter().collect(),
        weights_injective: weights.len() == tableaux.len(),
        borel,
        tableaux,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;

    fn sheared(rows: &[(i64, usize)]) -> SkewDiagram {
        SkewDiagram::new(rows.to_vec(), Coordinates::Sheared).unwrap()
    }

    fn e(n: usize, entries: &[(usize, usize)]) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for &(i, j) in entries {
            m[(i - 1, j - 1)] = Rational::one();
        }
        m
    }

    #[test]
    fn rectangle_pair() {
        let sq = sheared(&[(0, 2), (0, 2)]);
        let pair = from_skew(&sq).unwrap();
        assert_eq!(pair.e1, e(4, &[(2, 1), (4, 3)]));
        assert_eq!(pair.e2, e(4, &[(3, 1), (4, 2)]));
        let ss = semisimple_pair(&sq).unwrap();
        let half = frac(1, 2);
        assert_eq!(ss.h1.diag(), alloc::vec![-half.clone(), half.clone(), -half.clone(), half.clone()]);
        assert_eq!(ss.h2.diag(), alloc::vec![-half.clone(), -half.clone(), half.clone(), half]);
        assert!(verify_pair_relations(&pair, &ss));
        assert_eq!(centralizer_dim(&pair), 3);
        assert_eq!(borel_incidence(&pair, 9).unwrap().len(), 2);
    }

    #[test]
    fn column_and_row() {
        let col = from_skew(&sheared(&[(0, 1), (0, 1)])).unwrap();
        assert!(col.e1.is_zero());
        assert_eq!(col.e2, e(2, &[(2, 1)]));
        assert_eq!(borel_incidence(&col, 9).unwrap(), alloc::vec![Perm::identity(2)]);
        let row_shape = sheared(&[(0, 3)]);
        let row = from_skew(&row_shape).unwrap();
        assert_eq!(row.e1, e(3, &[(2, 1), (3, 2)]));
        assert!(row.e2.is_zero());
        assert_eq!(centralizer_dim(&row), 2);
        assert_eq!(borel_incidence(&row, 9).unwrap(), alloc::vec![Perm::identity(3)]);
        let ss = semisimple_pair(&row_shape).unwrap();
        assert_eq!(ss.h1.diag(), alloc::vec![int(-1), int(0), int(1)]);
        assert!(ss.h2.is_zero());
    }

    #[test]
    fn bigrading_places_nilpotents() {
        let sigma = sheared(&[(1, 2), (0, 2)]);
        let ss = semisimple_pair(&sigma).unwrap();
        let dims = bigrading_dims(&ss);
        assert_eq!(dims.values().sum::<usize>(), 15);
        assert_eq!(dims[&(Rational::zero(), Rational::zero())], 3);
        assert!(dims[&(Rational::one(), Rational::zero())] >= 1);
        assert!(dims[&(Rational::zero(), Rational::one())] >= 1);
    }

    #[test]
    fn buv_holds_up_to_inverse() {
        let three_row = verify_buv(&sheared(&[(2, 3), (1, 3), (0, 2)]), 2, 9).unwrap();
        assert!(three_row.passed());
        assert_eq!(three_row.borel.len(), 344);
        for rows in [&[(0, 1), (0, 1)][..], &[(0, 2), (0, 2)][..]] {
            let r = verify_buv(&sheared(rows), 1, 9).unwrap();
            assert!(r.passed() && r.literal_equal);
        }
    }

    #[test]
    fn literal_set_equality_fails_on_hook() {
        // Young shape (3, 1): the Borel set is the set of inverses of W(Δ)
        let r = verify_buv(&sheared(&[(0, 3), (0, 1)]), 1, 9).unwrap();
        assert!(r.passed());
        assert!(!r.literal_equal);
    }

    #[test]
    fn disconnected_shape_is_rejected() {
        assert!(from_skew(&sheared(&[(1, 1), (0, 1)])).is_err());
    }
}
