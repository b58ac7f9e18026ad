use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use super::perm::Perm;
use crate::linalg::{MultiPoly, Rational};
use crate::{Error, Result};

/// Element `Σ_w t_w · p_w` of `H_n`, polynomials to the right of group elements.
///
/// Keys with a zero polynomial are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    n: usize,
    terms: BTreeMap<Perm, MultiPoly>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `t_w · p`.
    pub fn monomial(w: Perm, p: MultiPoly) -> Self {
        let mut out = Self::zero(w.n());
        out.add_term(w, p);
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &MultiPoly)> {
        self.terms.iter()
    }

    /// Coefficient polynomial of `t_w`.
    pub fn coefficient(&self, w: &Perm) -> MultiPoly {
        self.terms.get(w).cloned().unwrap_or_else(|| MultiPoly::zero(self.n))
    }

    pub fn degree(&self) -> u32 {
        self.terms.values().map(MultiPoly::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Perm, p: MultiPoly) {
        if p.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&w) {
            Some(q) => q.add(&p),
            None => p,
        };
        if !sum.is_zero() {
            self.terms.insert(w, sum);
        }
    }

    pub fn add(&self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (w, p) in &rhs.terms {
            out.add_term(w.clone(), p.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &AlgebraElement) -> AlgebraElement {
        self.add(&rhs.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> AlgebraElement {
        let mut out = Self::zero(self.n);
        for (w, p) in &self.terms {
            out.add_term(w.clone(), p.scale(c));
        }
        out
    }

    /// `t_u · self`.
    fn left_group(&self, u: &Perm) -> AlgebraElement {
        AlgebraElement {
            n: self.n,
            terms: self.terms.iter().map(|(w, p)| (u.compose(w), p.clone())).collect(),
        }
    }

    /// `self · q` for a polynomial `q`.
    fn right_poly(&self, q: &MultiPoly) -> AlgebraElement {
        let mut out = Self::zero(self.n);
        for (w, p) in &self.terms {
            out.add_term(w.clone(), p.mul(q));
        }
        out
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, p)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "t{w}·({p})")?;
        }
        Ok(())
    }
}

/// Divided difference `Δ_i(p) = (p − s_i p)/(ε_i − ε_{i+1})`, 0-based `i`.
///
/// Computed monomial by monomial, so the division is exact by construction.
pub fn delta_op(i: usize, p: &MultiPoly) -> MultiPoly {
    let n = p.nvars();
    assert!(i + 1 < n, "simple root index out of range");
    let mut out = MultiPoly::zero(n);
    for (e, c) in p.terms() {
        let (a, b) = (e[i], e[i + 1]);
        if a == b {
            continue;
        }
        // x^a y^b − x^b y^a = sign · x^m y^m (x^d − y^d)
        let (m, d, sign) = if a > b { (b, a - b, 1) } else { (a, b - a, -1) };
        for k in 0..d {
            let mut f = e.to_vec();
            f[i] = m + k;
            f[i + 1] = m + d - 1 - k;
            out.add_term(f, c * Rational::from_integer(sign.into()));
        }
    }
    debug_assert_eq!(
        out.mul(&MultiPoly::var(n, i).sub(&MultiPoly::var(n, i + 1))),
        p.sub(&p.permute_vars(&swap_images(n, i))),
    );
    out
}

fn swap_images(n: usize, i: usize) -> Vec<usize> {
    Perm::simple(n, i).images().to_vec()
}

/// `H_n` with `k = 1`, carrying a degree cap for symbolic products.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeckeAlgebra {
    n: usize,
    max_degree: u32,
}

impl HeckeAlgebra {
    pub fn new(n: usize) -> Self {
        Self::with_max_degree(n, 2)
    }

    pub fn with_max_degree(n: usize, max_degree: u32) -> Self {
        assert!(n >= 1, "rank must be positive");
        HeckeAlgebra { n, max_degree }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn one(&self) -> AlgebraElement {
        self.t(Perm::identity(self.n))
    }

    pub fn scalar(&self, c: Rational) -> AlgebraElement {
        self.poly(MultiPoly::constant(self.n, c))
    }

    pub fn t(&self, w: Perm) -> AlgebraElement {
        AlgebraElement::monomial(w, MultiPoly::one(self.n))
    }

    /// `t_{s_i}`, 0-based `i`.
    pub fn t_simple(&self, i: usize) -> AlgebraElement {
        self.t(Perm::simple(self.n, i))
    }

    /// `ε_{j+1}`, 0-based `j`.
    pub fn eps(&self, j: usize) -> AlgebraElement {
        self.poly(MultiPoly::var(self.n, j))
    }

    pub fn poly(&self, p: MultiPoly) -> AlgebraElement {
        AlgebraElement::monomial(Perm::identity(self.n), p)
    }

    /// Generators `t_{s_1}, …, t_{s_{n−1}}, ε_1, …, ε_n` in that order.
    pub fn generators(&self) -> Vec<(String, AlgebraElement)> {
        let mut out = Vec::new();
        for i in 0..self.n - 1 {
            out.push((alloc::format!("t{}", i + 1), self.t_simple(i)));
        }
        for j in 0..self.n {
            out.push((alloc::format!("e{}", j + 1), self.eps(j)));
        }
        out
    }

    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero(self.n);
        for (u, p) in &x.terms {
            for (v, q) in &y.terms {
                let moved = self.poly_times_t(p, v.reduced_word().as_slice());
                out = out.add(&moved.left_group(u).right_poly(q));
            }
        }
        if out.degree() > self.max_degree {
            return Err(Error::Capacity {
                what: "polynomial degree",
                limit: self.max_degree as usize,
                requested: out.degree() as usize,
            });
        }
        Ok(out)
    }

    pub fn product(&self, factors: &[AlgebraElement]) -> Result<AlgebraElement> {
        factors.iter().try_fold(self.one(), |acc, f| self.multiply(&acc, f))
    }

    /// `p · t_{s_{i_1}} ⋯ t_{s_{i_k}}` in normal form, via
    /// `p t_s = t_s s(p) + Δ_s(p)`.
    fn poly_times_t(&self, p: &MultiPoly, word: &[usize]) -> AlgebraElement {
        let Some((&i, rest)) = word.split_first() else {
            return self.poly(p.clone());
        };
        let s = Perm::simple(self.n, i);
        let swapped = p.permute_vars(s.images());
        let mut out = self.poly_times_t(&swapped, rest).left_group(&s);
        let d = delta_op(i, p);
        if !d.is_zero() {
            out = out.add(&self.poly_times_t(&d, rest));
        }
        out
    }

    /// Extend a map given on generators to all of `H_n`: `t_w` through a
    /// reduced word, polynomials through substitution. With `anti` the factor
    /// order is reversed.
    fn extend(
        &self,
        h: &AlgebraElement,
        anti: bool,
        t_image: &dyn Fn(usize) -> AlgebraElement,
        eps_image: &dyn Fn(usize) -> AlgebraElement,
    ) -> Result<AlgebraElement> {
        let eps: Vec<AlgebraElement> = (0..self.n).map(eps_image).collect();
        let mut out = AlgebraElement::zero(self.n);
        for (w, p) in &h.terms {
            let mut tw = self.one();
            for i in w.reduced_word() {
                let g = t_image(i);
                tw = if anti { self.multiply(&g, &tw)? } else { self.multiply(&tw, &g)? };
            }
            let mut pw = AlgebraElement::zero(self.n);
            for (e, c) in p.terms() {
                let mut m = self.scalar(c.clone());
                for (j, &k) in e.iter().enumerate() {
                    for _ in 0..k {
                        m = self.multiply(&m, &eps[j])?;
                    }
                }
                pw = pw.add(&m);
            }
            let term = if anti { self.multiply(&pw, &tw)? } else { self.multiply(&tw, &pw)? };
            out = out.add(&term);
        }
        Ok(out)
    }

    /// `t_w ↦ t_{w⁻¹}`, `ε_j ↦ ε_j`, anti-multiplicative.
    pub fn bullet(&self, h: &AlgebraElement) -> Result<AlgebraElement> {
        self.extend(h, true, &|i| self.t_simple(i), &|j| self.eps(j))
    }

    /// `t_w ↦ t_{w⁻¹}`, `ε_j ↦ −t_{w_0} ε_{n+1−j} t_{w_0}`, anti-multiplicative.
    pub fn star(&self, h: &AlgebraElement) -> Result<AlgebraElement> {
        let w0 = self.t(Perm::longest(self.n));
        let eps: Vec<AlgebraElement> = (0..self.n)
            .map(|j| {
                let e = self.eps(self.n - 1 - j);
                self.product(&[w0.clone(), e, w0.clone()]).map(|x| x.scale(&-Rational::one()))
            })
            .collect::<Result<_>>()?;
        self.extend(h, true, &|i| self.t_simple(i), &|j| eps[j].clone())
    }

    /// `t_w ↦ t_{w_0 w w_0}`, `ε_i ↦ −ε_{n+1−i}`, multiplicative.
    pub fn delta_aut(&self, h: &AlgebraElement) -> Result<AlgebraElement> {
        let n = self.n;
        self.extend(
            h,
            false,
            &|i| self.t_simple(n - 2 - i),
            &|j| self.eps(n - 1 - j).scale(&-Rational::one()),
        )
    }

    /// `t_{w_0} · bullet(delta_aut(h)) · t_{w_0}`, the right-hand side of the
    /// relation `★ = Ad t_{w_0} ∘ • ∘ δ`.
    pub fn star_via_relation(&self, h: &AlgebraElement) -> Result<AlgebraElement> {
        let w0 = self.t(Perm::longest(self.n));
        let inner = self.bullet(&self.delta_aut(h)?)?;
        self.product(&[w0.clone(), inner, w0])
    }
}

/// Outcome of checking `★ = Ad t_{w_0} ∘ • ∘ δ` on one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarCheck {
    pub element: String,
    pub passed: bool,
}

/// Check the star relation on every generator and every ordered product of two
/// generators of `H_n`.
pub fn verify_star_relation(n: usize, max_n: usize) -> Result<Vec<StarCheck>> {
    if n > max_n {
        return Err(Error::Capacity {
            what: "rank for star relation",
            limit: max_n,
            requested: n,
        });
    }
    let h = HeckeAlgebra::new(n);
    let gens = h.generators();
    let mut out = Vec::new();
    let mut check = |name: String, x: &AlgebraElement| -> Result<()> {
        let passed = h.star(x)? == h.star_via_relation(x)?;
        out.push(StarCheck { element: name, passed });
        Ok(())
    };
    for (name, g) in &gens {
        check(name.clone(), g)?;
    }
    for (a, x) in &gens {
        for (b, y) in &gens {
            check(alloc::format!("{a}*{b}"), &h.multiply(x, y)?)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn divided_differences() {
        let e = |n, j| MultiPoly::var(n, j);
        assert_eq!(delta_op(0, &e(2, 0)), MultiPoly::one(2));
        assert!(delta_op(0, &e(3, 2)).is_zero());
        assert_eq!(delta_op(0, &e(2, 0).mul(&e(2, 0))), e(2, 0).add(&e(2, 1)));
        assert_eq!(delta_op(0, &e(2, 1)), MultiPoly::constant(2, int(-1)));
    }

    #[test]
    fn cross_relation_examples() {
        let h = HeckeAlgebra::new(2);
        let t = h.t_simple(0);
        let lhs = h.multiply(&h.eps(0), &t).unwrap();
        let rhs = h.multiply(&t, &h.eps(1)).unwrap().add(&h.one());
        assert_eq!(lhs, rhs);
        let lhs = h.multiply(&h.eps(1), &t).unwrap();
        let rhs = h.multiply(&t, &h.eps(0)).unwrap().sub(&h.one());
        assert_eq!(lhs, rhs);
        assert_eq!(h.multiply(&t, &t).unwrap(), h.one());
    }

    #[test]
    fn generator_images() {
        let h = HeckeAlgebra::new(3);
        let w = Perm::from_one_based(&[2, 3, 1]).unwrap();
        assert_eq!(h.bullet(&h.t(w.clone())).unwrap(), h.t(w.inverse()));
        assert_eq!(h.bullet(&h.eps(1)).unwrap(), h.eps(1));
        assert_eq!(h.delta_aut(&h.eps(0)).unwrap(), h.eps(2).scale(&int(-1)));
        let w0 = Perm::longest(3);
        assert_eq!(h.delta_aut(&h.t(w.clone())).unwrap(), h.t(w0.compose(&w).compose(&w0)));
    }

    #[test]
    fn rank_one_star_is_negation() {
        let h = HeckeAlgebra::new(1);
        assert_eq!(h.star(&h.eps(0)).unwrap(), h.eps(0).scale(&int(-1)));
        assert!(verify_star_relation(1, 5).unwrap().iter().all(|c| c.passed));
    }

    #[test]
    fn star_relation_small_ranks() {
        for n in 2..=3 {
            let report = verify_star_relation(n, 5).unwrap();
            assert!(report.iter().all(|c| c.passed), "n = {n}");
        }
    }

    #[test]
    fn degree_cap_is_enforced() {
        let h = HeckeAlgebra::with_max_degree(2, 1);
        let err = h.multiply(&h.eps(0), &h.eps(1)).unwrap_err();
        assert!(matches!(err, Error::Capacity { .. }));
    }
}
