use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::matrix::{solve_linear, Matrix};
use super::rational::{Rational, Weight};
use crate::{Error, Result};

/// One joint generalized eigenspace of a commuting family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JointEigenspace {
    pub weight: Weight,
    /// Basis, one column per vector.
    pub basis: Matrix,
    /// True iff every matrix acts on the space by its scalar weight coordinate,
    /// i.e. the eigenspace equals the generalized eigenspace.
    pub semisimple: bool,
}

impl JointEigenspace {
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }
}

/// Split the ambient space into joint generalized eigenspaces of commuting
/// `mats`, labelled by weights drawn from `candidates`.
///
/// Eigenvalues are never searched for: coordinate `j` of each label must be
/// the `j`-th coordinate of some candidate agreeing on the earlier
/// coordinates. If the candidates miss part of the spectrum the residual
/// dimension is reported.
pub fn simultaneous_eigenspaces(mats: &[Matrix], candidates: &[Weight]) -> Result<Vec<JointEigenspace>> {
    let Some(first) = mats.first() else {
        return Err(Error::InvalidInput("empty matrix family".into()));
    };
    let dim = first.rows();
    if mats.iter().any(|m| m.rows() != dim || m.cols() != dim) {
        return Err(Error::DimensionMismatch("commuting family must be square of equal size".into()));
    }
    if candidates.iter().any(|c| c.len() != mats.len()) {
        return Err(Error::DimensionMismatch("candidate weight length differs from family size".into()));
    }

    let mut groups: Vec<(Vec<Rational>, Matrix, Vec<usize>)> =
        alloc::vec![(Vec::new(), Matrix::identity(dim), (0..candidates.len()).collect())];
    for (j, a) in mats.iter().enumerate() {
        let mut next = Vec::new();
        for (prefix, basis, cands) in groups {
            let k = basis.cols();
            if k == 0 {
                continue;
            }
            let restricted = restrict(a, &basis)?;
            let values: BTreeSet<Rational> = cands.iter().map(|&c| candidates[c][j].clone()).collect();
            let mut found = 0;
            for v in values {
                let shifted = restricted.shift_diagonal(&-v.clone());
                let mut kernel = shifted.nullspace();
                if kernel.cols() == 0 {
                    continue;
                }
                // grow to the generalized eigenspace: ker N^m until the dimension stabilizes
                let mut power = shifted.clone();
                while kernel.cols() < k {
                    power = power.mul(&shifted);
                    let grown = power.nullspace();
                    if grown.cols() == kernel.cols() {
                        break;
                    }
                    kernel = grown;
                }
                found += kernel.cols();
                let mut pre = prefix.clone();
                pre.push(v.clone());
                let sub: Vec<usize> = cands.iter().copied().filter(|&c| candidates[c][j] == v).collect();
                next.push((pre, basis.mul(&kernel), sub));
            }
            if found < k {
                return Err(Error::ResidualSubspace { residual: k - found });
            }
        }
        groups = next;
    }

    let mut out: Vec<JointEigenspace> = groups
        .into_iter()
        .map(|(w, basis, _)| {
            let semisimple = mats.iter().zip(&w).all(|(a, v)| a.mul(&basis) == basis.scale(v));
            JointEigenspace {
                weight: Weight(w),
                basis,
                semisimple,
            }
        })
        .collect();
    out.sort_by(|x, y| x.weight.cmp(&y.weight));
    Ok(out)
}

/// Matrix of `a` on the invariant subspace spanned by the columns of `basis`.
fn restrict(a: &Matrix, basis: &Matrix) -> Result<Matrix> {
    if basis.cols() == basis.rows() && *basis == Matrix::identity(basis.rows()) {
        return Ok(a.clone());
    }
    let image = a.mul(basis);
    match solve_linear(basis, &image)? {
        Some(sol) if sol.is_unique() => Ok(sol.particular),
        _ => Err(Error::Inconsistent("subspace is not invariant under a commuting matrix".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn summary(spaces: &[JointEigenspace]) -> Vec<(Weight, usize, bool)> {
        spaces.iter().map(|s| (s.weight.clone(), s.dim(), s.semisimple)).collect()
    }

    #[test]
    fn diagonal_pair() {
        let mats = [Matrix::from_i64(&[&[1, 0], &[0, 0]]), Matrix::from_i64(&[&[0, 0], &[0, 1]])];
        let cands = [Weight::from_ints(&[1, 0]), Weight::from_ints(&[0, 1])];
        let out = simultaneous_eigenspaces(&mats, &cands).unwrap();
        assert_eq!(
            summary(&out),
            alloc::vec![(Weight::from_ints(&[0, 1]), 1, true), (Weight::from_ints(&[1, 0]), 1, true)]
        );
    }

    #[test]
    fn principal_series_eps1_is_diagonalizable() {
        let mats = [Matrix::from_i64(&[&[1, 1], &[0, 0]])];
        let cands = [Weight::from_ints(&[1]), Weight::from_ints(&[0])];
        let out = simultaneous_eigenspaces(&mats, &cands).unwrap();
        assert_eq!(out.len(), 2);
        assert!(out.iter().all(|s| s.dim() == 1 && s.semisimple));
    }

    #[test]
    fn jordan_block_is_flagged() {
        let mats = [Matrix::from_i64(&[&[0, 1], &[0, 0]])];
        let out = simultaneous_eigenspaces(&mats, &[Weight::from_ints(&[0])]).unwrap();
        assert_eq!(summary(&out), alloc::vec![(Weight::from_ints(&[0]), 2, false)]);
    }

    #[test]
    fn missing_candidate_reports_residual() {
        let mats = [Matrix::diagonal(&[int(1), int(2), int(2)])];
        let err = simultaneous_eigenspaces(&mats, &[Weight::from_ints(&[1])]).unwrap_err();
        assert_eq!(err, Error::ResidualSubspace { residual: 2 });
    }
}
