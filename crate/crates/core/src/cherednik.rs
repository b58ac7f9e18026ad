//! The calibrated ladder module on standard tableaux, and module-level
//! analysis: weights, `A`-semisimplicity, isomorphism, `W`-characters.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::hecke::{ModuleRep, Perm};
use crate::linalg::{modp, simultaneous_eigenspaces, Matrix, Rational, SparseSystem, Weight};
use crate::segments::Multisegment;
use crate::tableaux::{enumerate, SkewTableau};
use crate::{Error, Result};

/// `C(Δ_1, …, Δ_r)` in the tableau basis `{Y_w}`.
///
/// `ε_j` acts on `Y_w` by `w(λ)_j`; with `c = w(λ)_i − w(λ)_{i+1}`,
/// `t_{s_i} Y_w = c⁻¹ Y_w + (1 + c⁻¹) Y_{s_i w}`, the second term present only
/// when `s_i w` labels a tableau.
pub fn build(m: &Multisegment) -> Result<ModuleRep> {
    if !m.is_ladder() || !m.is_integral() || m.is_empty() {
        return Err(Error::InvalidInput(alloc::format!("{m} is not an integral ladder")));
    }
    let tableaux = enumerate(m)?;
    let lambda = m.lambda()?;
    let n = lambda.len();
    let perms: Vec<Perm> = tableaux.iter().map(SkewTableau::to_perm).collect();
    let index: BTreeMap<&Perm, usize> = perms.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let weights: Vec<Weight> = perms.iter().map(|w| w.act_on_weight(&lambda)).collect();
    let dim = perms.len();

    let eps = (0..n)
        .map(|j| Matrix::diagonal(&weights.iter().map(|mu| mu[j].clone()).collect::<Vec<_>>()))
        .collect();
    let mut t = Vec::with_capacity(n - 1);
    for i in 0..n - 1 {
        let s = Perm::simple(n, i);
        let mut mat = Matrix::zeros(dim, dim);
        for (k, w) in perms.iter().enumerate() {
            let c = &weights[k][i] - &weights[k][i + 1];
            if c.is_zero() {
                return Err(Error::Inconsistent(alloc::format!(
                    "root {} vanishes on the weight of {}",
                    i + 1,
                    tableaux[k]
                )));
            }
            let inv = c.recip();
            if let Some(&k2) = index.get(&s.compose(w)) {
                mat[(k2, k)] = Rational::one() + &inv;
            }
            mat[(k, k)] = inv;
        }
        t.push(mat);
    }
    let labels = tableaux.iter().map(ToString::to_string).collect();
    Ok(ModuleRep::new(n, t, eps, labels)?.with_central_character(lambda))
}

/// One joint generalized `A`-weight space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpace {
    pub weight: Weight,
    pub multiplicity: usize,
    /// The weight space equals the generalized weight space.
    pub semisimple: bool,
}

/// Generalized `A`-weight spaces, sorted by weight.
///
/// Candidates come from the `S_n`-orbit of the recorded central character;
/// without one, triangular `ε` matrices supply their diagonals.
pub fn weights(m: &ModuleRep) -> Result<Vec<WeightSpace>> {
    if m.dim == 0 {
        return Ok(Vec::new());
    }
    if m.eps_diagonal() {
        let mut counts: BTreeMap<Weight, usize> = BTreeMap::new();
        for k in 0..m.dim {
            *counts.entry(m.diagonal_weight(k)).or_default() += 1;
        }
        if let Some(cc) = &m.central_character {
            if let Some(w) = counts.keys().find(|w| w.dominant() != *cc) {
                return Err(Error::Inconsistent(alloc::format!("weight {w} is outside the orbit of {cc}")));
            }
        }
        return Ok(counts
            .into_iter()
            .map(|(weight, multiplicity)| WeightSpace {
                weight,
                multiplicity,
                semisimple: true,
            })
            .collect());
    }
    let candidates = candidate_weights(m)?;
    let spaces = simultaneous_eigenspaces(&m.eps, &candidates)?;
    Ok(spaces
        .into_iter()
        .map(|s| WeightSpace {
            multiplicity: s.dim(),
            weight: s.weight,
            semisimple: s.semisimple,
        })
        .collect())
}

fn candidate_weights(m: &ModuleRep) -> Result<Vec<Weight>> {
    if let Some(cc) = &m.central_character {
        return Ok(cc.orbit());
    }
    let triangular = |upper: bool| {
        m.eps.iter().all(|e| {
            e.nonzeros()
                .all(|(r, c, _)| if upper { r <= c } else { r >= c })
        })
    };
    if triangular(true) || triangular(false) {
        let set: BTreeSet<Weight> = (0..m.dim).map(|k| m.diagonal_weight(k)).collect();
        return Ok(set.into_iter().collect());
    }
    Err(Error::InvalidInput(
        "module has no central character and its eps matrices are not triangular".into(),
    ))
}

/// Every generalized weight space is an honest weight space.
#[allow(non_snake_case)]
pub fn is_A_semisimple(m: &ModuleRep) -> Result<bool> {
    Ok(weights(m)?.iter().all(|w| w.semisimple))
}

/// Whether an invertible `T` with `T π_1(g) = π_2(g) T` exists for every
/// generator `g`.
///
/// The intertwiner space is solved exactly. Invertibility is decided exactly
/// when that space is one-dimensional; otherwise a fixed sequence of integer
/// combinations is tried, so a `false` from a larger space is conclusive
/// only up to that search.
pub fn is_isomorphic(m1: &ModuleRep, m2: &ModuleRep) -> Result<bool> {
    if m1.n != m2.n || m1.dim != m2.dim {
        return Ok(false);
    }
    let (g1, g2) = (m1.generator_matrices(), m2.generator_matrices());
    if g1.iter().zip(&g2).any(|(a, b)| a.trace() != b.trace()) {
        return Ok(false);
    }
    let d = m1.dim;
    if d == 0 {
        return Ok(true);
    }
    let basis = intertwiners(m1, m2)?;
    if basis.is_empty() {
        return Ok(false);
    }
    let mut seed: u64 = 0x9e37_79b9_7f4a_7c15;
    for trial in 0..=basis.len().max(10) {
        let t = if trial < basis.len() {
            basis[trial].clone()
        } else {
            let mut acc = Matrix::zeros(d, d);
            for b in &basis {
                seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let c = (seed >> 33) % 1000 + 1;
                acc = acc.add(&b.scale(&Rational::from_integer((c as i64).into())));
            }
            acc
        };
        if !t.determinant().is_zero() {
            return Ok(true);
        }
        if basis.len() == 1 {
            return Ok(false);
        }
    }
    Ok(false)
}

/// Basis of `Hom_H(M_1, M_2)`, each map as a `dim_2 × dim_1` matrix.
pub fn intertwiners(m1: &ModuleRep, m2: &ModuleRep) -> Result<Vec<Matrix>> {
    if m1.n != m2.n {
        return Err(Error::DimensionMismatch("modules over different ranks".into()));
    }
    let (d1, d2) = (m1.dim, m2.dim);
    let var = |r: usize, c: usize| r * d1 + c;
    let mut sys = SparseSystem::new(d1 * d2);
    // ε-equations first: on weight bases they kill most unknowns outright
    let pairs: Vec<(&Matrix, &Matrix)> = m1.eps.iter().zip(&m2.eps).chain(m1.t.iter().zip(&m2.t)).collect();
    for (a1, a2) in pairs {
        let cols1 = a1.column_support();
        let rows2: Vec<Vec<(usize, Rational)>> = a2.transpose().column_support();
        for r in 0..d2 {
            for c in 0..d1 {
                // (T a1 − a2 T)_{rc} = Σ_k T_{rk} a1_{kc} − Σ_k a2_{rk} T_{kc}
                let mut eq: Vec<(usize, Rational)> = cols1[c].iter().map(|(k, v)| (var(r, *k), v.clone())).collect();
                eq.extend(rows2[r].iter().map(|(k, v)| (var(*k, c), -v.clone())));
                sys.add_equation(eq);
            }
        }
    }
    Ok(sys
        .nullspace()
        .into_iter()
        .map(|x| Matrix::from_fn(d2, d1, |r, c| x[var(r, c)].clone()))
        .collect())
}

/// Traces of `π(t_w)` at the given permutations.
pub fn w_character(m: &ModuleRep, class_reps: &[Perm]) -> Vec<Rational> {
    class_reps.iter().map(|w| m.t_trace(w)).collect()
}

/// `⟨χ, χ⟩ = (1/n!) Σ_{w ∈ S_n} χ(w) χ(w⁻¹)` for the restriction to `S_n`.
///
/// Character values are integers, so they are computed modulo a large prime
/// per conjugacy class and lifted; the sum then runs over every element of
/// `S_n`, reading each value from its cycle type.
pub fn w_irreducibility_norm(m: &ModuleRep, max_n: usize) -> Result<Rational> {
    if m.n > max_n {
        return Err(Error::Capacity {
            what: "rank for S_n summation",
            limit: max_n,
            requested: m.n,
        });
    }
    let values = class_values(m)?;
    let mut total = Rational::zero();
    let mut count: u64 = 0;
    for w in Perm::all(m.n) {
        let chi = values[&w.cycle_type()];
        total += Rational::from_integer((chi * chi).into());
        count += 1;
    }
    Ok(total / Rational::from_integer(count.into()))
}

/// Integer character value on each cycle type.
pub fn class_values(m: &ModuleRep) -> Result<BTreeMap<Vec<usize>, i64>> {
    let d = m.dim;
    let gens: Vec<Vec<Vec<(usize, u64)>>> = m
        .t
        .iter()
        .map(|t| {
            t.column_support()
                .into_iter()
                .map(|col| {
                    col.into_iter()
                        .map(|(r, v)| modp::reduce(&v).map(|x| (r, x)))
                        .collect::<Option<Vec<_>>>()
                })
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Inconsistent("denominator divisible by the working prime".into()))?;
    let mut out = BTreeMap::new();
    for w in Perm::class_representatives(m.n) {
        let word = w.reduced_word();
        let mut trace = 0u64;
        for k in 0..d {
            let mut v = alloc::vec![0u64; d];
            v[k] = 1;
            // π(t_w) = π(t_{i_1}) ⋯ π(t_{i_l}); apply the rightmost factor first
            for &i in word.iter().rev() {
                let mut next = alloc::vec![0u64; d];
                for (c, &x) in v.iter().enumerate() {
                    if x != 0 {
                        for &(r, a) in &gens[i][c] {
                            next[r] = modp::add(next[r], modp::mul(a, x));
                        }
                    }
                }
                v = next;
            }
            trace = modp::add(trace, v[k]);
        }
        let value = modp::lift(trace, d as u64)
            .ok_or_else(|| Error::Inconsistent(alloc::format!("character value at {w} is not an integer of size ≤ {d}")))?;
        out.insert(w.cycle_type(), value);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn ms(p: &[(i64, i64)]) -> Multisegment {
        Multisegment::from_ints(p).unwrap()
    }

    #[test]
    fn single_segment_is_sign() {
        let m = build(&ms(&[(0, 2)])).unwrap();
        assert_eq!(m.dim, 1);
        assert!(m.t.iter().all(|t| *t == Matrix::from_i64(&[&[-1]])));
        assert_eq!(m.diagonal_weight(0), Weight::from_ints(&[0, 1, 2]));
        assert!(m.verify_module_relations().is_empty());
    }

    #[test]
    fn column_is_trivial_on_s1() {
        let m = build(&ms(&[(1, 1), (0, 0)])).unwrap();
        assert_eq!(m.t[0], Matrix::from_i64(&[&[1]]));
        assert_eq!(
            weights(&m).unwrap(),
            alloc::vec![WeightSpace {
                weight: Weight::from_ints(&[1, 0]),
                multiplicity: 1,
                semisimple: true
            }]
        );
    }

    #[test]
    fn two_by_two_weights() {
        let m = build(&ms(&[(1, 2), (0, 1)])).unwrap();
        assert_eq!(m.dim, 2);
        assert_eq!(m.diagonal_weight(0), Weight::from_ints(&[1, 2, 0, 1]));
        assert_eq!(m.diagonal_weight(1), Weight::from_ints(&[1, 0, 2, 1]));
        assert!(m.verify_module_relations().is_empty());
        assert!(is_A_semisimple(&m).unwrap());
    }

    #[test]
    fn three_row_ladder_relations() {
        let m = build(&ms(&[(2, 4), (0, 2), (-2, -1)])).unwrap();
        assert_eq!(m.dim, 344);
        assert!(m.verify_module_relations().is_empty());
    }

    #[test]
    fn isomorphism_checks() {
        let a = build(&ms(&[(1, 2), (0, 1)])).unwrap();
        assert!(is_isomorphic(&a, &a).unwrap());
        // reversed basis order
        let p = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let mut b = a.clone();
        b.t = a.t.iter().map(|x| p.mul(x).mul(&p)).collect();
        b.eps = a.eps.iter().map(|x| p.mul(x).mul(&p)).collect();
        assert!(is_isomorphic(&a, &b).unwrap());
        let col = build(&ms(&[(1, 1), (0, 0)])).unwrap();
        let row = build(&ms(&[(0, 1)])).unwrap();
        assert!(!is_isomorphic(&col, &row).unwrap());
    }

    #[test]
    fn jordan_block_module_is_not_semisimple() {
        // ε acting by a Jordan block on a rank-one algebra
        let m = ModuleRep::new(
            1,
            Vec::new(),
            alloc::vec![Matrix::from_i64(&[&[0, 1], &[0, 0]])],
            alloc::vec!["a".into(), "b".into()],
        )
        .unwrap();
        assert!(!is_A_semisimple(&m).unwrap());
    }

    #[test]
    fn modular_characters_match_exact_traces() {
        let m = build(&ms(&[(3, 5), (1, 3), (0, 1)])).unwrap();
        let values = class_values(&m).unwrap();
        for w in Perm::class_representatives(m.n) {
            assert_eq!(int(values[&w.cycle_type()]), m.t_trace(&w), "class {w}");
        }
    }

    #[test]
    fn speh_norms() {
        let sign = build(&ms(&[(0, 3)])).unwrap();
        assert_eq!(w_irreducibility_norm(&sign, 8).unwrap(), int(1));
        let speh = build(&ms(&[(1, 2), (0, 1)])).unwrap();
        assert_eq!(w_irreducibility_norm(&speh, 8).unwrap(), int(1));
        assert!(w_irreducibility_norm(&speh, 3).is_err());
    }
}
