//! Standard modules `⟨Δ_1⟩ × ⋯ × ⟨Δ_r⟩`, formal characters and the
//! determinantal character identity for ladders.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, ToPrimitive, Zero};

use crate::cherednik;
use crate::hecke::{HeckeAlgebra, ModuleRep, Perm};
use crate::linalg::{next_permutation, Matrix, Rational, Weight};
use crate::segments::{Multisegment, Segment};
use crate::{Error, Result};

/// Minimal-length representatives of `S_n / (S_{m_1} × ⋯ × S_{m_r})`: the
/// permutations increasing on each block of consecutive positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedBasis {
    pub composition: Vec<usize>,
    pub reps: Vec<Perm>,
}

impl InducedBasis {
    pub fn new(composition: &[usize]) -> Self {
        let n: usize = composition.iter().sum();
        // block label of each value; each distinct arrangement is one coset
        let mut labels: Vec<usize> = composition
            .iter()
            .enumerate()
            .flat_map(|(k, &m)| core::iter::repeat_n(k, m))
            .collect();
        let starts = block_starts(composition);
        let mut reps = Vec::new();
        loop {
            let mut images = alloc::vec![0; n];
            let mut fill = starts.clone();
            for (value, &k) in labels.iter().enumerate() {
                images[fill[k]] = value;
                fill[k] += 1;
            }
            reps.push(Perm::from_images(images).expect("block filling is a permutation"));
            if !next_permutation(&mut labels) {
                break;
            }
        }
        InducedBasis {
            composition: composition.to_vec(),
            reps,
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Split `y = ỹ u` with `ỹ` minimal and `u` in the parabolic subgroup;
    /// returns `ỹ` and the sign of `u`.
    pub fn reduce(&self, y: &Perm) -> (Perm, i64) {
        let mut images = y.images().to_vec();
        let mut sign = 1;
        for (start, &m) in block_starts(&self.composition).iter().zip(&self.composition) {
            let block = &mut images[*start..start + m];
            for i in 0..m {
                for j in i + 1..m {
                    if block[i] > block[j] {
                        sign = -sign;
                    }
                }
            }
            block.sort_unstable();
        }
        (Perm::from_images(images).expect("sorted blocks stay a permutation"), sign)
    }
}

fn block_starts(composition: &[usize]) -> Vec<usize> {
    composition
        .iter()
        .scan(0, |acc, &m| {
            let s = *acc;
            *acc += m;
            Some(s)
        })
        .collect()
}

/// `n! / (m_1! ⋯ m_r!)`.
pub fn multinomial(composition: &[usize]) -> u128 {
    let mut out: u128 = 1;
    let mut total: u128 = 0;
    for &m in composition {
        for k in 1..=m as u128 {
            total += 1;
            out = out * total / k;
        }
    }
    out
}

/// The induced module in the basis `t_x ⊗ 1`, `x` minimal coset
/// representatives. Each `⟨Δ⟩` is one-dimensional with `t` acting by `−1`
/// and `ε` by the contents of `Δ`.
pub fn build_standard(m: &Multisegment) -> Result<ModuleRep> {
    if m.is_empty() || m.segments().iter().any(Segment::is_empty) {
        return Err(Error::InvalidInput("standard modules need nonempty segments".into()));
    }
    let lambda = m.lambda()?;
    let n = lambda.len();
    let basis = InducedBasis::new(&m.lengths());
    let index: BTreeMap<&Perm, usize> = basis.reps.iter().enumerate().map(|(k, x)| (x, k)).collect();
    let dim = basis.len();
    let h = HeckeAlgebra::new(n);

    let mut t = Vec::with_capacity(n - 1);
    for i in 0..n - 1 {
        let s = Perm::simple(n, i);
        let mut mat = Matrix::zeros(dim, dim);
        for (k, x) in basis.reps.iter().enumerate() {
            let (y, sign) = basis.reduce(&s.compose(x));
            mat[(index[&y], k)] = Rational::from_integer(sign.into());
        }
        t.push(mat);
    }
    let mut eps = Vec::with_capacity(n);
    for j in 0..n {
        let mut mat = Matrix::zeros(dim, dim);
        for (k, x) in basis.reps.iter().enumerate() {
            let prod = h.multiply(&h.eps(j), &h.t(x.clone()))?;
            for (y, p) in prod.terms() {
                let (yy, sign) = basis.reduce(y);
                let v = p.evaluate(lambda.coords()) * Rational::from_integer(sign.into());
                mat[(index[&yy], k)] += v;
            }
        }
        eps.push(mat);
    }
    let labels = basis.reps.iter().map(|x| alloc::format!("t{x}")).collect();
    Ok(ModuleRep::new(n, t, eps, labels)?.with_central_character(lambda))
}

/// Signed multiset of generalized `A`-weights.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalCharacter(BTreeMap<Weight, i64>);

impl FormalCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_weight(&mut self, w: Weight, mult: i64) {
        let e = self.0.entry(w.clone()).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.0.remove(&w);
        }
    }

    pub fn add(&self, other: &FormalCharacter) -> FormalCharacter {
        self.add_scaled(other, 1)
    }

    pub fn sub(&self, other: &FormalCharacter) -> FormalCharacter {
        self.add_scaled(other, -1)
    }

    pub fn add_scaled(&self, other: &FormalCharacter, c: i64) -> FormalCharacter {
        let mut out = self.clone();
        for (w, &k) in &other.0 {
            out.add_weight(w.clone(), c * k);
        }
        out
    }

    /// Total signed multiplicity.
    pub fn mass(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.0.iter().map(|(w, &k)| (w, k))
    }

    pub fn multiplicity(&self, w: &Weight) -> i64 {
        self.0.get(w).copied().unwrap_or(0)
    }
}

impl fmt::Display for FormalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (w, m)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}: {m}")?;
        }
        f.write_str("}")
    }
}

/// `dim X_λ^gen` for every `λ`.
pub fn formal_character(m: &ModuleRep) -> Result<FormalCharacter> {
    let mut out = FormalCharacter::new();
    for ws in cherednik::weights(m)? {
        out.add_weight(ws.weight, ws.multiplicity as i64);
    }
    Ok(out)
}

/// `Σ_x [x(λ)]` over minimal coset representatives: the character of the
/// standard module without building it.
pub fn standard_character(m: &Multisegment) -> Result<FormalCharacter> {
    let lambda = m.lambda()?;
    let mut out = FormalCharacter::new();
    for x in InducedBasis::new(&m.lengths()).reps {
        out.add_weight(x.act_on_weight(&lambda), 1);
    }
    Ok(out)
}

/// How segments `[a_{w(i)}, b_i]` with `a_{w(i)} > b_i` are treated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmptyRule {
    /// `a = b + 1` gives the empty segment, which is dropped; `a > b + 1`
    /// makes the whole term vanish.
    DropOrKill,
    /// Any `a > b` makes the whole term vanish.
    KillAll,
}

/// `w·m` with `w·Δ_i = [a_{w(i)}, b_i]`, or `None` if the term vanishes.
pub fn permuted_multisegment(m: &Multisegment, w: &Perm, rule: EmptyRule) -> Option<Multisegment> {
    let s = m.segments();
    let mut out = Vec::new();
    for i in 0..s.len() {
        let a = s[w.apply(i)].a.clone();
        let b = s[i].b.clone();
        let gap = &a - &b;
        if gap <= Rational::zero() {
            out.push(Segment { a, b });
        } else if rule == EmptyRule::DropOrKill && gap.is_one() {
            continue;
        } else {
            return None;
        }
    }
    Some(Multisegment(out))
}

/// `Σ_{w ∈ S_r} sgn(w) ch⟨w·Δ_1⟩ × ⋯ × ⟨w·Δ_r⟩` under the given rule.
pub fn determinantal_character_with(m: &Multisegment, rule: EmptyRule) -> Result<FormalCharacter> {
    if !m.is_ladder() {
        return Err(Error::InvalidInput(alloc::format!("{m} is not a ladder")));
    }
    let mut out = FormalCharacter::new();
    for w in Perm::all(m.len()) {
        if let Some(wm) = permuted_multisegment(m, &w, rule) {
            out = out.add_scaled(&standard_character(&wm)?, w.sign());
        }
    }
    Ok(out)
}

pub fn determinantal_character(m: &Multisegment) -> Result<FormalCharacter> {
    determinantal_character_with(m, EmptyRule::DropOrKill)
}

/// The determinantal sum equals the character of the tableau module.
pub fn verify_determinantal(m: &Multisegment) -> Result<bool> {
    Ok(determinantal_character(m)? == formal_character(&cherednik::build(m)?)?)
}

/// `Σ_w sgn(w) · multinomial(w·m)`: the dimension shadow of the
/// determinantal identity.
pub fn euler_dimension(m: &Multisegment) -> Result<i128> {
    if !m.is_ladder() {
        return Err(Error::InvalidInput(alloc::format!("{m} is not a ladder")));
    }
    let mut total: i128 = 0;
    for w in Perm::all(m.len()) {
        if let Some(wm) = permuted_multisegment(m, &w, EmptyRule::DropOrKill) {
            let d = multinomial(&wm.lengths()).to_i128().unwrap_or(i128::MAX);
            total += i128::from(w.sign()) * d;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn ms(p: &[(i64, i64)]) -> Multisegment {
        Multisegment::from_ints(p).unwrap()
    }

    fn chi(pairs: &[(&[i64], i64)]) -> FormalCharacter {
        let mut c = FormalCharacter::new();
        for (w, k) in pairs {
            c.add_weight(Weight::from_ints(w), *k);
        }
        c
    }

    #[test]
    fn coset_representatives() {
        let b = InducedBasis::new(&[2, 2]);
        assert_eq!(b.len(), 6);
        assert!(b.reps[0].is_identity());
        assert_eq!(InducedBasis::new(&[1, 1, 1]).len(), 6);
        assert_eq!(multinomial(&[3, 1]), 4);
        let (y, sign) = b.reduce(&Perm::from_one_based(&[2, 1, 3, 4]).unwrap());
        assert!(y.is_identity());
        assert_eq!(sign, -1);
    }

    #[test]
    fn two_point_principal_series() {
        let m = build_standard(&ms(&[(1, 1), (0, 0)])).unwrap();
        assert_eq!(m.eps[0], Matrix::from_i64(&[&[1, 1], &[0, 0]]));
        assert_eq!(m.eps[1], Matrix::from_i64(&[&[0, -1], &[0, 1]]));
        assert_eq!(m.t[0], Matrix::from_i64(&[&[0, 1], &[1, 0]]));
        assert!(m.verify_module_relations().is_empty());
        assert_eq!(formal_character(&m).unwrap(), chi(&[(&[1, 0], 1), (&[0, 1], 1)]));
    }

    #[test]
    fn single_segment_matches_tableau_module() {
        let seg = ms(&[(0, 2)]);
        assert_eq!(build_standard(&seg).unwrap().t, cherednik::build(&seg).unwrap().t);
        assert_eq!(build_standard(&ms(&[(1, 2), (0, 1)])).unwrap().dim, 6);
    }

    #[test]
    fn closed_form_matches_matrices() {
        for m in [ms(&[(1, 2), (0, 1)]), ms(&[(0, 0), (2, 3)]), ms(&[(2, 2), (0, 1), (1, 1)])] {
            let module = build_standard(&m).unwrap();
            assert!(module.verify_module_relations().is_empty(), "{m}");
            assert_eq!(formal_character(&module).unwrap(), standard_character(&m).unwrap(), "{m}");
        }
    }

    #[test]
    fn determinantal_anchors() {
        let col = ms(&[(1, 1), (0, 0)]);
        assert_eq!(determinantal_character(&col).unwrap(), chi(&[(&[1, 0], 1)]));
        assert!(verify_determinantal(&col).unwrap());
        assert_eq!(euler_dimension(&col).unwrap(), 1);
        let sq = ms(&[(1, 2), (0, 1)]);
        assert!(verify_determinantal(&sq).unwrap());
        assert_eq!(euler_dimension(&sq).unwrap(), 2);
        assert_eq!(determinantal_character(&ms(&[(0, 3)])).unwrap(), standard_character(&ms(&[(0, 3)])).unwrap());
    }

    #[test]
    fn literal_vanishing_rule_fails_on_column() {
        let col = ms(&[(1, 1), (0, 0)]);
        let literal = determinantal_character_with(&col, EmptyRule::KillAll).unwrap();
        assert_eq!(literal, chi(&[(&[1, 0], 1), (&[0, 1], 1)]));
        assert_ne!(literal, formal_character(&cherednik::build(&col).unwrap()).unwrap());
    }

    #[test]
    fn eps_action_uses_lambda() {
        let m = build_standard(&ms(&[(2, 2), (0, 0)])).unwrap();
        assert_eq!(m.eps[0][(0, 0)], int(2));
        assert_eq!(m.eps[0][(0, 1)], Rational::one());
    }
}
