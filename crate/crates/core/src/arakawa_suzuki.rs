//! Finite-dimensional `gl(n)`-modules and the functor
//! `X ↦ H_0(n⁻, X ⊗ (Cⁿ)^{⊗ℓ})_λ` to `H_ℓ`-modules.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, ToPrimitive, Zero};

use crate::cherednik;
use crate::hecke::ModuleRep;
use crate::linalg::{frac, int, ldlt_signature, Matrix, Rational, SparseSystem, Weight};
use crate::segments::{Multisegment, Segment};
use crate::standard::{multinomial, InducedBasis};
use crate::{Error, Result};

/// Default bound on `dim X · nˡ`.
pub const DEFAULT_CAPACITY: usize = 20_000;

/// A `gl(n)`-module on a weight basis, with a positive definite form for
/// which `E_ijᵀ G = G E_ji`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlModule {
    pub n: usize,
    pub dim: usize,
    /// `e[i * n + j]` is the image of `E_ij` (0-based).
    pub e: Vec<Matrix>,
    pub weights: Vec<Weight>,
    pub form: Matrix,
}

impl GlModule {
    pub fn new(n: usize, e: Vec<Matrix>, form: Matrix) -> Result<Self> {
        if n == 0 || e.len() != n * n {
            return Err(Error::DimensionMismatch(alloc::format!("gl({n}) needs {} matrices", n * n)));
        }
        let dim = e[0].rows();
        if e.iter().chain([&form]).any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch("E-matrices must share one square size".into()));
        }
        if (0..n).any(|i| !e[i * n + i].is_diagonal()) {
            return Err(Error::InvalidInput("Cartan matrices must be diagonal".into()));
        }
        let weights = (0..dim)
            .map(|k| Weight((0..n).map(|i| e[i * n + i][(k, k)].clone()).collect()))
            .collect();
        Ok(GlModule {
            n,
            dim,
            e,
            weights,
            form,
        })
    }

    pub fn e(&self, i: usize, j: usize) -> &Matrix {
        &self.e[i * self.n + j]
    }

    /// `[E_ij, E_kl] = δ_jk E_il − δ_li E_kj` for all index quadruples.
    pub fn verify_relations(&self) -> bool {
        let n = self.n;
        let zero = Matrix::zeros(self.dim, self.dim);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut rhs = zero.clone();
                        if j == k {
                            rhs = rhs.add(self.e(i, l));
                        }
                        if l == i {
                            rhs = rhs.sub(self.e(k, j));
                        }
                        if self.e(i, j).commutator(self.e(k, l)) != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `E_ijᵀ G = G E_ji` and `G` positive definite.
    pub fn form_is_invariant(&self) -> Result<bool> {
        let n = self.n;
        let invariant = (0..n)
            .all(|i| (0..n).all(|j| self.e(i, j).transpose().mul(&self.form) == self.form.mul(self.e(j, i))));
        Ok(invariant && ldlt_signature(&self.form)?.is_positive_definite())
    }

    /// Twist by `det^c`: every `E_ii` shifts by `c`.
    pub fn twist(&self, c: &Rational) -> GlModule {
        let n = self.n;
        let e = (0..n * n)
            .map(|k| if k % (n + 1) == 0 { self.e[k].shift_diagonal(c) } else { self.e[k].clone() })
            .collect();
        GlModule {
            n,
            dim: self.dim,
            e,
            weights: self.weights.iter().map(|w| w.shifted(c)).collect(),
            form: self.form.clone(),
        }
    }
}

pub fn standard_rep(n: usize) -> GlModule {
    let e = (0..n * n).map(|k| Matrix::unit(n, k / n, k % n)).collect();
    GlModule::new(n, e, Matrix::identity(n)).expect("well-formed")
}

pub fn trivial(n: usize) -> GlModule {
    GlModule::new(n, alloc::vec![Matrix::zeros(1, 1); n * n], Matrix::identity(1)).expect("well-formed")
}

/// `X ⊗ Y` with basis `x ⊗ y` ordered by `x · dim Y + y`.
pub fn tensor(x: &GlModule, y: &GlModule) -> Result<GlModule> {
    if x.n != y.n {
        return Err(Error::DimensionMismatch("tensor factors of different rank".into()));
    }
    let (ix, iy) = (Matrix::identity(x.dim), Matrix::identity(y.dim));
    let e = x.e.iter().zip(&y.e).map(|(a, b)| a.kron(&iy).add(&ix.kron(b))).collect();
    GlModule::new(x.n, e, x.form.kron(&y.form))
}

pub fn tensor_power(x: &GlModule, ell: usize) -> Result<GlModule> {
    (0..ell).try_fold(trivial(x.n), |acc, _| tensor(&acc, x))
}

pub fn direct_sum(x: &GlModule, y: &GlModule) -> Result<GlModule> {
    if x.n != y.n {
        return Err(Error::DimensionMismatch("summands of different rank".into()));
    }
    let d = x.dim + y.dim;
    let block = |a: &Matrix, b: &Matrix| {
        Matrix::from_fn(d, d, |r, c| match (r < x.dim, c < x.dim) {
            (true, true) => a[(r, c)].clone(),
            (false, false) => b[(r - x.dim, c - x.dim)].clone(),
            _ => Rational::zero(),
        })
    };
    let e = x.e.iter().zip(&y.e).map(|(a, b)| block(a, b)).collect();
    GlModule::new(x.n, e, block(&x.form, &y.form))
}

/// `ρ = ((n−1)/2, (n−3)/2, …, −(n−1)/2)`.
pub fn rho(n: usize) -> Weight {
    Weight((0..n).map(|i| frac(n as i64 - 1 - 2 * i as i64, 2)).collect())
}

/// `μ_i − μ_{i+1} ∈ ℤ_{≥0}` for every simple root.
pub fn is_dominant_integral(mu: &Weight) -> bool {
    mu.coords()
        .windows(2)
        .all(|w| (&w[0] - &w[1]).is_integer() && w[0] >= w[1])
}

/// `Π_{i<j} (μ_i − μ_j + j − i)/(j − i)`.
pub fn weyl_dimension(mu: &[i64]) -> u128 {
    let n = mu.len();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..n {
        for j in i + 1..n {
            num *= (mu[i] - mu[j] + (j - i) as i64) as u128;
            den *= (j - i) as u128;
        }
    }
    num / den
}

type Sparse = BTreeMap<usize, Rational>;

fn word_index(word: &[usize], n: usize) -> usize {
    word.iter().fold(0, |acc, &d| acc * n + d)
}

fn index_word(mut k: usize, n: usize, len: usize) -> Vec<usize> {
    let mut w = alloc::vec![0; len];
    for slot in w.iter_mut().rev() {
        *slot = k % n;
        k /= n;
    }
    w
}

/// `E_ij` acting on `(Cⁿ)^{⊗len}` in the word basis.
fn apply_e_words(v: &Sparse, i: usize, j: usize, n: usize, len: usize) -> Sparse {
    let mut out = Sparse::new();
    for (&k, c) in v {
        let mut w = index_word(k, n, len);
        for p in 0..len {
            if w[p] == j {
                w[p] = i;
                *out.entry(word_index(&w, n)).or_insert_with(Rational::zero) += c;
                w[p] = j;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn dot(u: &Sparse, v: &Sparse) -> Rational {
    u.iter()
        .filter_map(|(k, a)| v.get(k).map(|b| a * b))
        .fold(Rational::zero(), |acc, x| acc + x)
}

/// The simple module `L(μ)` for dominant integral `μ`.
///
/// For a partition `p = μ + c`, `L(p)` is generated inside `(Cⁿ)^{⊗|p|}` by
/// the tensor product of the column wedges `e_1 ∧ … ∧ e_{p'_k}`, spanned by
/// lowering operators from it; the result is twisted back by `det^{−c}`.
pub fn l_of_weight(n: usize, mu: &[i64], capacity: usize) -> Result<GlModule> {
    if mu.len() != n || n == 0 || mu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidInput(alloc::format!("{mu:?} is not a dominant weight of gl({n})")));
    }
    let c = -mu[n - 1];
    let p: Vec<usize> = mu.iter().map(|&x| (x + c) as usize).collect();
    let len: usize = p.iter().sum();
    let ambient = n.checked_pow(len as u32).filter(|&d| d <= capacity).ok_or(Error::Capacity {
        what: "tensor space for L(μ)",
        limit: capacity,
        requested: n.saturating_pow(len as u32),
    })?;

    // highest weight vector: one wedge per column, columns left to right
    let columns: Vec<usize> = (0..p[0]).map(|k| p.iter().filter(|&&r| r > k).count()).collect();
    let mut top: Vec<(Vec<usize>, Rational)> = alloc::vec![(Vec::new(), Rational::one())];
    for &h in &columns {
        let mut next = Vec::new();
        for perm in crate::hecke::Perm::all(h) {
            let sign = int(perm.sign());
            for (w, c) in &top {
                let mut w = w.clone();
                w.extend(perm.images());
                next.push((w, c * &sign));
            }
        }
        top = next;
    }
    let highest: Sparse = top.into_iter().map(|(w, c)| (word_index(&w, n), c)).collect();

    let mut span = SparseSystem::new(ambient);
    span.insert(highest.clone());
    let mut basis = alloc::vec![highest];
    let mut k = 0;
    while k < basis.len() {
        for i in 0..n - 1 {
            let v = apply_e_words(&basis[k], i + 1, i, n, len);
            if !v.is_empty() && span.insert(v.clone()) {
                basis.push(v);
            }
        }
        k += 1;
    }
    let expected = weyl_dimension(mu);
    if basis.len() as u128 != expected {
        return Err(Error::Inconsistent(alloc::format!(
            "L({mu:?}) came out {}-dimensional, Weyl dimension is {expected}",
            basis.len()
        )));
    }

    // coordinates through the Gram matrix of each weight space
    let weight_of = |v: &Sparse| {
        let (&k, _) = v.iter().next().expect("nonzero vector");
        let w = index_word(k, n, len);
        (0..n).map(|i| w.iter().filter(|&&d| d == i).count()).collect::<Vec<_>>()
    };
    let mut by_weight: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (k, v) in basis.iter().enumerate() {
        by_weight.entry(weight_of(v)).or_default().push(k);
    }
    let dim = basis.len();
    let form = Matrix::from_fn(dim, dim, |r, c| dot(&basis[r], &basis[c]));
    let mut inverse_gram = BTreeMap::new();
    for (wt, members) in &by_weight {
        let g = Matrix::from_fn(members.len(), members.len(), |r, c| form[(members[r], members[c])].clone());
        inverse_gram.insert(wt.clone(), g.inverse().ok_or_else(|| Error::Inconsistent("singular Gram matrix".into()))?);
    }
    let mut e = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut mat = Matrix::zeros(dim, dim);
            for (k, v) in basis.iter().enumerate() {
                let image = apply_e_words(v, i, j, n, len);
                if image.is_empty() {
                    continue;
                }
                let wt = weight_of(&image);
                let members = &by_weight[&wt];
                let rhs: Vec<Rational> = members.iter().map(|&m| dot(&basis[m], &image)).collect();
                let coords = inverse_gram[&wt].mul_vec(&rhs);
                let mut check = Sparse::new();
                for (&m, a) in members.iter().zip(&coords) {
                    for (key, b) in &basis[m] {
                        *check.entry(*key).or_insert_with(Rational::zero) += a * b;
                    }
                    mat[(m, k)] = a.clone();
                }
                check.retain(|_, c| !c.is_zero());
                if check != image {
                    return Err(Error::Inconsistent("lowering closure is not E-stable".into()));
                }
            }
            e.push(mat);
        }
    }
    Ok(GlModule::new(n, e, form)?.twist(&int(-c)))
}

/// A basis vector `x ⊗ e_{w_1} ⊗ … ⊗ e_{w_ℓ}` of `X ⊗ V_ℓ`.
type Key = (usize, Vec<usize>);

/// Nonzero entries of each column of each `E_ij` on `X`.
struct Supports(Vec<Vec<Vec<(usize, Rational)>>>);

impl Supports {
    fn new(x: &GlModule) -> Self {
        Supports(x.e.iter().map(Matrix::column_support).collect())
    }
}

/// `Ω_{ij} = Σ_{k,m} (E_km)_i ⊗ (E_mk)_j` on a basis vector; factor 0 is `X`.
fn omega_key(x: &GlModule, sup: &Supports, i: usize, j: usize, key: &Key) -> Vec<(Key, Rational)> {
    let (xi, w) = key;
    if i == 0 {
        // only E_mk with k = w_j survives on the V-factor
        let k = w[j - 1];
        let mut out = Vec::new();
        for m in 0..x.n {
            for (r, c) in &sup.0[k * x.n + m][*xi] {
                let mut w2 = w.clone();
                w2[j - 1] = m;
                out.push(((*r, w2), c.clone()));
            }
        }
        out
    } else {
        let mut w2 = w.clone();
        w2.swap(i - 1, j - 1);
        alloc::vec![((*xi, w2), Rational::one())]
    }
}

/// Generator `g` of `H_ℓ` in the order `t_1..t_{ℓ−1}, ε_1..ε_ℓ`:
/// `t_i ↦ −Ω_{i,i+1}`, `ε_j ↦ Σ_{0≤i<j} Ω_ij + (n−1)/2`.
fn generator_key(x: &GlModule, sup: &Supports, ell: usize, g: usize, key: &Key) -> Vec<(Key, Rational)> {
    if g + 1 < ell {
        return omega_key(x, sup, g + 1, g + 2, key)
            .into_iter()
            .map(|(k, c)| (k, -c))
            .collect();
    }
    let j = g + 2 - ell;
    let mut out: Vec<(Key, Rational)> = (0..j).flat_map(|i| omega_key(x, sup, i, j, key)).collect();
    out.push((key.clone(), frac(x.n as i64 - 1, 2)));
    out
}

fn check_capacity(x: &GlModule, ell: usize, capacity: usize) -> Result<()> {
    let size = x.n.checked_pow(ell as u32).and_then(|p| p.checked_mul(x.dim));
    match size {
        Some(s) if s <= capacity => Ok(()),
        _ => Err(Error::Capacity {
            what: "dim X · n^ℓ",
            limit: capacity,
            requested: size.unwrap_or(usize::MAX),
        }),
    }
}

fn all_words(n: usize, ell: usize) -> Vec<Vec<usize>> {
    let count = n.pow(ell as u32);
    (0..count).map(|k| index_word(k, n, ell)).collect()
}

fn key_label((x, w): &Key) -> String {
    let word: Vec<String> = w.iter().map(|d| alloc::format!("{}", d + 1)).collect();
    alloc::format!("x{x}|{}", word.join(","))
}

fn assemble(keys: &[Key], columns: impl Fn(&Key) -> Vec<(Key, Rational)>) -> Result<Matrix> {
    let index: BTreeMap<&Key, usize> = keys.iter().enumerate().map(|(k, key)| (key, k)).collect();
    let mut mat = Matrix::zeros(keys.len(), keys.len());
    for (c, key) in keys.iter().enumerate() {
        for (image, v) in columns(key) {
            let r = *index
                .get(&image)
                .ok_or_else(|| Error::Inconsistent("operator leaves the basis".into()))?;
            mat[(r, c)] += v;
        }
    }
    Ok(mat)
}

/// `Ω_ij` on `X ⊗ V_ℓ` as a dense matrix, `0 ≤ i < j ≤ ℓ`.
pub fn omega(x: &GlModule, ell: usize, i: usize, j: usize, capacity: usize) -> Result<Matrix> {
    if !(i < j && j <= ell) {
        return Err(Error::InvalidInput(alloc::format!("Ω_({i},{j}) needs 0 ≤ i < j ≤ {ell}")));
    }
    check_capacity(x, ell, capacity)?;
    let sup = Supports::new(x);
    let keys: Vec<Key> = (0..x.dim).flat_map(|xi| all_words(x.n, ell).into_iter().map(move |w| (xi, w))).collect();
    assemble(&keys, |k| omega_key(x, &sup, i, j, k))
}

/// The `H_ℓ`-module `X ⊗ V_ℓ`.
pub fn hecke_action(x: &GlModule, ell: usize, capacity: usize) -> Result<ModuleRep> {
    if ell == 0 {
        return Err(Error::InvalidInput("ℓ must be positive".into()));
    }
    check_capacity(x, ell, capacity)?;
    let sup = Supports::new(x);
    let keys: Vec<Key> = (0..x.dim).flat_map(|xi| all_words(x.n, ell).into_iter().map(move |w| (xi, w))).collect();
    let mut gens = Vec::with_capacity(2 * ell - 1);
    for g in 0..2 * ell - 1 {
        gens.push(assemble(&keys, |k| generator_key(x, &sup, ell, g, k))?);
    }
    let eps = gens.split_off(ell - 1);
    ModuleRep::new(ell, gens, eps, keys.iter().map(key_label).collect())
}

/// Words with `counts[k]` copies of letter `k`, in lexicographic order.
fn words_with_counts(counts: &mut [usize], prefix: &mut Vec<usize>, remaining: usize, out: &mut Vec<Vec<usize>>) {
    if remaining == 0 {
        out.push(prefix.clone());
        return;
    }
    for k in 0..counts.len() {
        if counts[k] > 0 {
            counts[k] -= 1;
            prefix.push(k);
            words_with_counts(counts, prefix, remaining - 1, out);
            prefix.pop();
            counts[k] += 1;
        }
    }
}

/// Letter counts of a `V_ℓ`-weight, if `ν` is one.
fn v_weight_counts(nu: &Weight, ell: usize) -> Option<Vec<usize>> {
    let counts: Option<Vec<usize>> = nu
        .coords()
        .iter()
        .map(|c| if c.is_integer() { c.to_integer().to_usize() } else { None })
        .collect();
    counts.filter(|c| c.iter().sum::<usize>() == ell)
}

/// Basis of the `ν`-weight space of `(Cⁿ)^{⊗ℓ}`.
pub fn v_weight_words(nu: &Weight, ell: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if let Some(mut counts) = v_weight_counts(nu, ell) {
        words_with_counts(&mut counts, &mut Vec::new(), ell, &mut out);
    }
    out
}

fn weight_keys(x: &GlModule, ell: usize, nu: &Weight) -> Vec<Key> {
    (0..x.dim)
        .flat_map(|xi| {
            v_weight_words(&nu.sub(&x.weights[xi]), ell)
                .into_iter()
                .map(move |w| (xi, w))
        })
        .collect()
}

/// `f_k = E_{k+1,k}` acting diagonally on `X ⊗ V_ℓ`.
fn lower_key(x: &GlModule, sup: &Supports, k: usize, key: &Key) -> Vec<(Key, Rational)> {
    let (xi, w) = key;
    let mut out: Vec<(Key, Rational)> = sup.0[(k + 1) * x.n + k][*xi]
        .iter()
        .map(|(r, c)| ((*r, w.clone()), c.clone()))
        .collect();
    for p in 0..w.len() {
        if w[p] == k {
            let mut w2 = w.clone();
            w2[p] = k + 1;
            out.push(((*xi, w2), Rational::one()));
        }
    }
    out
}

/// The `λ`-weight space of `X ⊗ V_ℓ`, the lowering image inside it, and the
/// generators restricted to it.
struct WeightSlice {
    keys: Vec<Key>,
    image: SparseSystem,
    gens: Vec<Vec<Vec<(usize, Rational)>>>,
}

fn weight_slice(x: &GlModule, ell: usize, lambda: &Weight) -> Result<WeightSlice> {
    let sup = Supports::new(x);
    let keys = weight_keys(x, ell, lambda);
    let index: BTreeMap<&Key, usize> = keys.iter().enumerate().map(|(k, key)| (key, k)).collect();
    let to_index = |terms: Vec<(Key, Rational)>| -> Result<Vec<(usize, Rational)>> {
        terms
            .into_iter()
            .map(|(k, c)| {
                index
                    .get(&k)
                    .map(|&i| (i, c))
                    .ok_or_else(|| Error::Inconsistent("operator leaves the weight space".into()))
            })
            .collect()
    };
    let mut image = SparseSystem::new(keys.len());
    for k in 0..x.n - 1 {
        let mut above = lambda.clone();
        above.0[k] += Rational::one();
        above.0[k + 1] -= Rational::one();
        for key in weight_keys(x, ell, &above) {
            image.insert(to_index(lower_key(x, &sup, k, &key))?);
        }
    }
    let mut gens = Vec::with_capacity(2 * ell - 1);
    for g in 0..2 * ell - 1 {
        gens.push(
            keys.iter()
                .map(|key| to_index(generator_key(x, &sup, ell, g, key)))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Ok(WeightSlice { keys, image, gens })
}

/// `F_{λ,V_ℓ}(X) = H_0(n⁻, X ⊗ V_ℓ)_λ` with the induced `H_ℓ`-action, on the
/// complement of the lowering image spanned by its non-pivot basis vectors.
pub fn coinvariants_weight_space(x: &GlModule, ell: usize, lambda: &Weight, capacity: usize) -> Result<ModuleRep> {
    if ell == 0 || lambda.len() != x.n {
        return Err(Error::InvalidInput("need ℓ ≥ 1 and a weight of matching rank".into()));
    }
    check_capacity(x, ell, capacity)?;
    let slice = weight_slice(x, ell, lambda)?;
    let pivots: alloc::collections::BTreeSet<usize> = slice.image.pivot_vars().collect();
    let free: Vec<usize> = (0..slice.keys.len()).filter(|k| !pivots.contains(k)).collect();
    let position: BTreeMap<usize, usize> = free.iter().enumerate().map(|(p, &k)| (k, p)).collect();
    let apply = |g: usize, v: &[(usize, Rational)]| {
        let mut acc: Vec<(usize, Rational)> = Vec::new();
        for (k, c) in v {
            acc.extend(slice.gens[g][*k].iter().map(|(r, d)| (*r, c * d)));
        }
        acc
    };
    let d = free.len();
    let mut mats = Vec::with_capacity(2 * ell - 1);
    for g in 0..2 * ell - 1 {
        for row in slice.image.rows() {
            if !slice.image.reduce(apply(g, row)).is_empty() {
                return Err(Error::Inconsistent("Hecke operator does not preserve the lowering image".into()));
            }
        }
        let mut mat = Matrix::zeros(d, d);
        for (c, &k) in free.iter().enumerate() {
            for (r, v) in slice.image.reduce(apply(g, &[(k, Rational::one())])) {
                mat[(position[&r], c)] = v;
            }
        }
        mats.push(mat);
    }
    let eps = mats.split_off(ell - 1);
    let labels = free.iter().map(|&k| key_label(&slice.keys[k])).collect();
    if d == 0 {
        return Err(Error::InvalidInput("the coinvariant weight space is zero".into()));
    }
    ModuleRep::new(ell, mats, eps, labels)
}

/// `dim F_{λ,V_ℓ}(X)`, zero allowed.
pub fn coinvariant_dim(x: &GlModule, ell: usize, lambda: &Weight, capacity: usize) -> Result<usize> {
    check_capacity(x, ell, capacity)?;
    let slice = weight_slice(x, ell, lambda)?;
    Ok(slice.keys.len() - slice.image.rank())
}

/// The invariant form on `X ⊗ V_ℓ` against the functor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormTransport {
    /// Every generator is self-adjoint for `G_X ⊗ I` on the `λ`-weight space.
    pub tensor_invariant: bool,
    /// The induced form on the coinvariants, in the basis of
    /// [`coinvariants_weight_space`].
    pub quotient_form: Matrix,
    pub quotient_invariant: bool,
    pub quotient_positive: bool,
}

/// Transports the form of `X` to `F_{λ,V_ℓ}(X)` by identifying the quotient
/// with the orthogonal complement of the lowering image.
pub fn transport_form(x: &GlModule, ell: usize, lambda: &Weight, capacity: usize) -> Result<FormTransport> {
    let module = coinvariants_weight_space(x, ell, lambda, capacity)?;
    let slice = weight_slice(x, ell, lambda)?;
    let keys = &slice.keys;
    let n = keys.len();
    let g = Matrix::from_fn(n, n, |r, c| {
        if keys[r].1 == keys[c].1 {
            x.form[(keys[r].0, keys[c].0)].clone()
        } else {
            Rational::zero()
        }
    });
    let dense = |col: &[(usize, Rational)]| {
        let mut v = alloc::vec![Rational::zero(); n];
        for (k, c) in col {
            v[*k] = c.clone();
        }
        v
    };
    let tensor_invariant = slice.gens.iter().all(|cols| {
        let a = Matrix::from_columns(n, &cols.iter().map(|c| dense(c)).collect::<Vec<_>>());
        a.transpose().mul(&g) == g.mul(&a)
    });

    let pivots: alloc::collections::BTreeSet<usize> = slice.image.pivot_vars().collect();
    let image = Matrix::from_columns(n, &slice.image.rows().map(dense).collect::<Vec<_>>());
    let gram = image.transpose().mul(&g).mul(&image);
    let gram_inv = gram
        .inverse()
        .ok_or_else(|| Error::Inconsistent("form degenerates on the lowering image".into()))?;
    let reps: Vec<Vec<Rational>> = (0..n)
        .filter(|k| !pivots.contains(k))
        .map(|k| {
            let e = dense(&[(k, Rational::one())]);
            let alpha = gram_inv.mul_vec(&image.transpose().mul(&g).mul_vec(&e));
            let s = image.mul_vec(&alpha);
            e.iter().zip(&s).map(|(a, b)| a - b).collect()
        })
        .collect();
    let p = Matrix::from_columns(n, &reps);
    let quotient_form = p.transpose().mul(&g).mul(&p);
    let quotient_invariant = module
        .generator_matrices()
        .iter()
        .all(|a| a.transpose().mul(&quotient_form) == quotient_form.mul(a));
    let quotient_positive = ldlt_signature(&quotient_form)?.is_positive_definite();
    Ok(FormTransport {
        tensor_invariant,
        quotient_form,
        quotient_invariant,
        quotient_positive,
    })
}

fn v_weight_difference(lambda: &Weight, mu: &Weight) -> Result<Vec<usize>> {
    let diff = lambda.sub(mu);
    let ell = diff.coords().iter().fold(Rational::zero(), |a, c| a + c);
    ell.to_integer()
        .to_usize()
        .and_then(|l| v_weight_counts(&diff, l))
        .ok_or_else(|| Error::InvalidInput(alloc::format!("λ − μ = {diff:?} is not a weight of V_ℓ")))
}

/// `Δ_i = [⟨μ+ρ, ε_i⟩, ⟨λ+ρ, ε_i⟩ − 1]`, empty segments dropped.
pub fn phi_segments(lambda: &Weight, mu: &Weight) -> Result<Multisegment> {
    if lambda.len() != mu.len() {
        return Err(Error::DimensionMismatch("λ and μ of different rank".into()));
    }
    v_weight_difference(lambda, mu)?;
    let rho = rho(lambda.len());
    let segs = (0..lambda.len())
        .map(|i| Segment::new(&mu[i] + &rho[i], &lambda[i] + &rho[i] - Rational::one()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Multisegment(segs).without_empty())
}

/// `⟨μ+ρ, α^∨⟩ ∈ ℤ_{≤0}` for every positive root `α` with `⟨λ+ρ, α^∨⟩ = 0`.
pub fn mu_condition(lambda: &Weight, mu: &Weight) -> bool {
    let n = lambda.len();
    let rho = rho(n);
    let lr: Vec<Rational> = (0..n).map(|i| &lambda[i] + &rho[i]).collect();
    let mr: Vec<Rational> = (0..n).map(|i| &mu[i] + &rho[i]).collect();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            let d = &mr[i] - &mr[j];
            lr[i] != lr[j] || (d.is_integer() && d <= Rational::zero())
        })
    })
}

/// Dimension shadow of `F(M(μ)) = M(λ, μ)`: the induced module on `Φ_{λ,μ}`
/// has as many basis vectors as `V_ℓ` has words of weight `λ − μ`.
pub fn dim_check_verma(lambda: &Weight, mu: &Weight) -> Result<bool> {
    let counts = v_weight_difference(lambda, mu)?;
    let ell = counts.iter().sum();
    let phi = phi_segments(lambda, mu)?;
    let induced = InducedBasis::new(&phi.lengths()).len();
    let words = v_weight_words(&lambda.sub(mu), ell).len();
    Ok(induced == words && multinomial(&counts) == words as u128)
}

/// Outcome of comparing the functor image of `L(μ)` with the ladder module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsReport {
    /// Shift applied to every segment so that `μ` becomes a partition.
    pub shift: Rational,
    pub mu: Vec<i64>,
    pub lambda: Weight,
    pub ell: usize,
    pub functor_dim: usize,
    pub ladder_dim: usize,
    pub isomorphic: bool,
}

/// `F_{λ,V_ℓ}(L(μ)) ≅ C(Δ_1, …, Δ_n)` with `μ = a − ρ`, `λ = b + 1 − ρ`.
///
/// The segments are first shifted by `s` (half-integral when `n` is even) so
/// that `μ` is a partition with last part 0; the functor image is then
/// shifted back by `−s` before the comparison.
pub fn verify_as_ladder(m: &Multisegment, capacity: usize) -> Result<AsReport> {
    if !m.is_ladder() || !m.is_integral() || m.is_empty() {
        return Err(Error::InvalidInput(alloc::format!("{m} is not an integral ladder")));
    }
    let n = m.len();
    let rho = rho(n);
    let shift = &rho[n - 1] - &m.segments()[n - 1].a;
    let shifted = m.shifted(&shift);
    let mu_w = Weight(shifted.segments().iter().zip(rho.coords()).map(|(s, r)| &s.a - r).collect());
    let lambda = Weight(
        shifted
            .segments()
            .iter()
            .zip(rho.coords())
            .map(|(s, r)| &s.b + Rational::one() - r)
            .collect(),
    );
    let mu: Vec<i64> = mu_w
        .coords()
        .iter()
        .map(|c| c.to_integer().to_i64().expect("small weight"))
        .collect();
    let ell = m.n();
    let x_dim = weyl_dimension(&mu);
    let needed = (x_dim as usize).saturating_mul(n.saturating_pow(ell as u32));
    if needed > capacity {
        return Err(Error::Capacity {
            what: "dim L(μ) · n^ℓ",
            limit: capacity,
            requested: needed,
        });
    }
    let x = l_of_weight(n, &mu, capacity)?;
    let image = coinvariants_weight_space(&x, ell, &lambda, capacity)?.shift_eps(&-shift.clone());
    let ladder = cherednik::build(m)?;
    let isomorphic = cherednik::is_isomorphic(&image, &ladder)?;
    Ok(AsReport {
        shift,
        mu,
        lambda,
        ell,
        functor_dim: image.dim,
        ladder_dim: ladder.dim,
        isomorphic,
    })
}
