//! Invariant symmetric forms for the `•` and `★` operations, unitarity and
//! its relation to `A`-semisimplicity.

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::cherednik;
use crate::hecke::{HeckeAlgebra, ModuleRep};
use crate::linalg::{ldlt_signature, Inertia, Matrix, Rational, SparseSystem};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StarOp {
    Bullet,
    Star,
}

/// Images `π(κ(g))` of the generators `t_1..t_{n−1}, ε_1..ε_n` under the
/// chosen operation.
fn kappa_images(m: &ModuleRep, op: StarOp) -> Result<Vec<Matrix>> {
    match op {
        StarOp::Bullet => Ok(m.generator_matrices().into_iter().cloned().collect()),
        StarOp::Star => {
            let h = HeckeAlgebra::new(m.n);
            let mut out: Vec<Matrix> = m.t.clone();
            for j in 0..m.n {
                out.push(m.act(&h.star(&h.eps(j))?));
            }
            Ok(out)
        }
    }
}

/// Basis of the symmetric `G` with `π(g)ᵀ G = G π(κ(g))` for every generator,
/// i.e. `(π(g)x, y) = (x, π(κ(g))y)` for `(x, y) = xᵀ G y`.
pub fn invariant_form_space(m: &ModuleRep, op: StarOp) -> Result<Vec<Matrix>> {
    let d = m.dim;
    let var = |r: usize, c: usize| {
        let (i, j) = if r <= c { (r, c) } else { (c, r) };
        i * d - i * (i + 1) / 2 + j
    };
    let mut sys = SparseSystem::new(d * (d + 1) / 2);
    let kappa = kappa_images(m, op)?;
    // ε-generators first: on weight bases they clear off-diagonal unknowns
    let order: Vec<usize> = (m.n - 1..2 * m.n - 1).chain(0..m.n - 1).collect();
    let gens = m.generator_matrices();
    for g in order {
        let left = gens[g].column_support();
        let right = kappa[g].column_support();
        for r in 0..d {
            for c in 0..d {
                // (π(g)ᵀ G)_{rc} − (G π(κ g))_{rc}
                let mut eq: Vec<(usize, Rational)> = left[r].iter().map(|(k, v)| (var(*k, c), v.clone())).collect();
                eq.extend(right[c].iter().map(|(k, v)| (var(r, *k), -v.clone())));
                sys.add_equation(eq);
            }
        }
    }
    Ok(sys
        .nullspace()
        .into_iter()
        .map(|x| normalize(&Matrix::from_fn(d, d, |r, c| x[var(r, c)].clone())))
        .collect())
}

/// Scale so the first nonzero diagonal entry (or, failing that, the first
/// nonzero entry) is `+1`.
pub fn normalize(g: &Matrix) -> Matrix {
    let pivot = g
        .diag()
        .into_iter()
        .find(|x| !x.is_zero())
        .or_else(|| g.nonzeros().next().map(|(_, _, v)| v.clone()));
    match pivot {
        Some(p) => g.scale(&p.recip()),
        None => g.clone(),
    }
}

pub fn signature(g: &Matrix) -> Result<Inertia> {
    ldlt_signature(g)
}

/// The unique-up-to-scalar `•`-form, normalized.
pub fn bullet_form(m: &ModuleRep) -> Result<Matrix> {
    let mut space = invariant_form_space(m, StarOp::Bullet)?;
    if space.len() != 1 {
        return Err(Error::FormSpaceDimension(space.len()));
    }
    Ok(space.remove(0))
}

/// Positive definiteness of the normalized `•`-form. Errors when the form
/// is not unique up to scalar or is degenerate.
pub fn is_bullet_unitary(m: &ModuleRep) -> Result<bool> {
    let g = bullet_form(m)?;
    let inertia = signature(&g)?;
    if inertia.zero > 0 {
        return Err(Error::DegenerateForm {
            positive: inertia.positive,
            negative: inertia.negative,
            zero: inertia.zero,
        });
    }
    Ok(inertia.is_positive_definite())
}

/// Outcome of checking an implication on one module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Implication {
    /// The hypothesis does not hold.
    Vacuous,
    Satisfied,
    Violated,
}

/// `•`-unitary implies `A`-semisimple.
pub fn check_unit_ss(m: &ModuleRep) -> Result<Implication> {
    let unitary = match is_bullet_unitary(m) {
        Ok(u) => u,
        Err(Error::FormSpaceDimension(_) | Error::DegenerateForm { .. }) => false,
        Err(e) => return Err(e),
    };
    if !unitary {
        return Ok(Implication::Vacuous);
    }
    Ok(if cherednik::is_A_semisimple(m)? {
        Implication::Satisfied
    } else {
        Implication::Violated
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConverseCheck {
    /// The caller did not vouch for simplicity.
    Refused,
    /// The central character condition or `A`-semisimplicity fails.
    NotApplicable,
    Satisfied,
    Violated,
}

/// Sorted central character coordinates never differ by a gap strictly
/// between 0 and 1.
pub fn central_character_condition(cc: &[Rational]) -> bool {
    let mut c = cc.to_vec();
    c.sort();
    c.windows(2).all(|w| {
        let gap = (&w[1] - &w[0]).abs();
        gap.is_zero() || gap >= Rational::one()
    })
}

/// For a module the caller vouches is simple: an `A`-semisimple module whose
/// central character passes [`central_character_condition`] is `•`-unitary.
pub fn check_ss_converse(m: &ModuleRep, simple_hint: bool) -> Result<ConverseCheck> {
    if !simple_hint {
        return Ok(ConverseCheck::Refused);
    }
    let cc = m
        .central_character
        .as_ref()
        .ok_or_else(|| Error::InvalidInput("module has no recorded central character".into()))?;
    if !central_character_condition(cc.coords()) || !cherednik::is_A_semisimple(m)? {
        return Ok(ConverseCheck::NotApplicable);
    }
    Ok(match is_bullet_unitary(m) {
        Ok(true) => ConverseCheck::Satisfied,
        Ok(false) | Err(Error::FormSpaceDimension(_) | Error::DegenerateForm { .. }) => ConverseCheck::Violated,
        Err(e) => return Err(e),
    })
}

/// Summary of the invariant forms of one module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormReport {
    pub dim_space: usize,
    /// The normalized form when the space is one-dimensional.
    pub form: Option<Matrix>,
    pub signature: Option<Inertia>,
    pub unitary: Option<bool>,
}

pub fn form_report(m: &ModuleRep, op: StarOp) -> Result<FormReport> {
    let space = invariant_form_space(m, op)?;
    let dim_space = space.len();
    if dim_space != 1 {
        return Ok(FormReport {
            dim_space,
            form: None,
            signature: None,
            unitary: None,
        });
    }
    let g = space.into_iter().next().expect("one basis element");
    let inertia = signature(&g)?;
    Ok(FormReport {
        dim_space,
        unitary: Some(inertia.is_positive_definite()),
        signature: Some(inertia),
        form: Some(g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, int};
    use crate::segments::Multisegment;
    use crate::standard::build_standard;

    fn ms(p: &[(i64, i64)]) -> Multisegment {
        Multisegment::from_ints(p).unwrap()
    }

    #[test]
    fn one_dim_module_has_definite_form() {
        let m = cherednik::build(&ms(&[(1, 1), (0, 0)])).unwrap();
        let space = invariant_form_space(&m, StarOp::Bullet).unwrap();
        assert_eq!(space, alloc::vec![Matrix::identity(1)]);
        assert!(is_bullet_unitary(&m).unwrap());
    }

    #[test]
    fn principal_series_form_is_degenerate() {
        let m = build_standard(&ms(&[(1, 1), (0, 0)])).unwrap();
        let space = invariant_form_space(&m, StarOp::Bullet).unwrap();
        assert_eq!(space, alloc::vec![Matrix::from_i64(&[&[1, 1], &[1, 1]])]);
        let err = is_bullet_unitary(&m).unwrap_err();
        assert_eq!(err, Error::DegenerateForm { positive: 1, negative: 0, zero: 1 });
        assert!(cherednik::is_A_semisimple(&m).unwrap());
        assert_eq!(check_ss_converse(&m, false).unwrap(), ConverseCheck::Refused);
        assert_eq!(check_unit_ss(&m).unwrap(), Implication::Vacuous);
    }

    #[test]
    fn speh_form_is_diagonal_and_definite() {
        let m = cherednik::build(&ms(&[(1, 2), (0, 1)])).unwrap();
        let g = bullet_form(&m).unwrap();
        assert!(g.is_diagonal());
        assert!(is_bullet_unitary(&m).unwrap());
        assert_eq!(check_unit_ss(&m).unwrap(), Implication::Satisfied);
        assert_eq!(check_ss_converse(&m, true).unwrap(), ConverseCheck::Satisfied);
    }

    #[test]
    fn star_forms_need_symmetric_central_character() {
        // ★ sends central character χ to −χ
        let m = cherednik::build(&ms(&[(2, 3), (0, 1)])).unwrap();
        assert!(invariant_form_space(&m, StarOp::Star).unwrap().is_empty());
        let speh = cherednik::build(&ms(&[(0, 1), (-1, 0)])).unwrap();
        let report = form_report(&speh, StarOp::Star).unwrap();
        assert_eq!(report.dim_space, 1);
        assert_eq!(report.unitary, Some(true));
    }

    #[test]
    fn gap_condition() {
        assert!(central_character_condition(&[int(2), int(2), int(0)]));
        assert!(central_character_condition(&[int(1), int(0)]));
        assert!(!central_character_condition(&[frac(1, 2), int(0)]));
    }
}
