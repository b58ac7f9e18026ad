use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use super::algebra::AlgebraElement;
use super::perm::Perm;
use crate::linalg::{Matrix, Rational, Weight};
use crate::{Error, Result};

/// A finite-dimensional `H_n`-module given by the images of the generators.
///
/// `t[i]` is the image of `t_{s_{i+1}}`, `eps[j]` that of `ε_{j+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    pub n: usize,
    pub dim: usize,
    pub t: Vec<Matrix>,
    pub eps: Vec<Matrix>,
    pub labels: Vec<String>,
    /// Sorted representative of the central character, when known.
    pub central_character: Option<Weight>,
}

impl ModuleRep {
    pub fn new(n: usize, t: Vec<Matrix>, eps: Vec<Matrix>, labels: Vec<String>) -> Result<Self> {
        if n == 0 || t.len() + 1 != n || eps.len() != n {
            return Err(Error::DimensionMismatch(alloc::format!(
                "rank {n} needs {} t-matrices and {n} eps-matrices, got {} and {}",
                n.saturating_sub(1),
                t.len(),
                eps.len()
            )));
        }
        let dim = eps[0].rows();
        if t.iter().chain(&eps).any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch("generator matrices must share one square size".into()));
        }
        if labels.len() != dim {
            return Err(Error::DimensionMismatch(alloc::format!(
                "{} labels for dimension {dim}",
                labels.len()
            )));
        }
        Ok(ModuleRep {
            n,
            dim,
            t,
            eps,
            labels,
            central_character: None,
        })
    }

    pub fn with_central_character(mut self, cc: Weight) -> Self {
        self.central_character = Some(cc.dominant());
        self
    }

    /// Generator images in the order `t_1..t_{n−1}, ε_1..ε_n`.
    pub fn generator_matrices(&self) -> Vec<&Matrix> {
        self.t.iter().chain(&self.eps).collect()
    }

    /// `π(t_w)` through a reduced word.
    pub fn t_matrix(&self, w: &Perm) -> Matrix {
        w.reduced_word()
            .iter()
            .fold(Matrix::identity(self.dim), |acc, &i| acc.mul(&self.t[i]))
    }

    /// Image of an algebra element.
    pub fn act(&self, h: &AlgebraElement) -> Matrix {
        assert_eq!(h.n(), self.n, "rank mismatch");
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (w, p) in h.terms() {
            out = out.add(&self.t_matrix(w).mul(&p.evaluate_matrices(&self.eps)));
        }
        out
    }

    /// Shift every `ε_j` by `c`, i.e. twist by the character `ε_j ↦ c`.
    pub fn shift_eps(&self, c: &Rational) -> ModuleRep {
        let mut out = self.clone();
        out.eps = self.eps.iter().map(|m| m.shift_diagonal(c)).collect();
        out.central_character = self.central_character.as_ref().map(|w| w.shifted(c));
        out
    }

    /// Every defining relation of `H_n` that fails on this module; empty
    /// means the matrices define a module.
    pub fn verify_module_relations(&self) -> Vec<Relation> {
        let n = self.n;
        let id = Matrix::identity(self.dim);
        let mut bad = Vec::new();
        for i in 0..n - 1 {
            if self.t[i].mul(&self.t[i]) != id {
                bad.push(Relation::Involution(i));
            }
            for j in i + 1..n - 1 {
                let ok = if j == i + 1 {
                    let (a, b) = (&self.t[i], &self.t[j]);
                    a.mul(b).mul(a) == b.mul(a).mul(b)
                } else {
                    self.t[i].mul(&self.t[j]) == self.t[j].mul(&self.t[i])
                };
                if !ok {
                    bad.push(Relation::Braid(i, j));
                }
            }
        }
        for j in 0..n {
            for k in j + 1..n {
                if self.eps[j].mul(&self.eps[k]) != self.eps[k].mul(&self.eps[j]) {
                    bad.push(Relation::EpsCommute(j, k));
                }
            }
        }
        for i in 0..n - 1 {
            for j in 0..n {
                let sj = if j == i {
                    i + 1
                } else if j == i + 1 {
                    i
                } else {
                    j
                };
                let lhs = self.eps[j].mul(&self.t[i]);
                let mut rhs = self.t[i].mul(&self.eps[sj]);
                if j == i {
                    rhs = rhs.shift_diagonal(&Rational::one());
                } else if j == i + 1 {
                    rhs = rhs.shift_diagonal(&-Rational::one());
                }
                if lhs != rhs {
                    bad.push(Relation::Cross { eps: j, t: i });
                }
            }
        }
        bad
    }

    /// Whether every `ε_j` is diagonal in the given basis.
    pub fn eps_diagonal(&self) -> bool {
        self.eps.iter().all(Matrix::is_diagonal)
    }

    /// The weight of basis vector `k` when all `ε_j` are diagonal.
    pub fn diagonal_weight(&self, k: usize) -> Weight {
        Weight(self.eps.iter().map(|m| m[(k, k)].clone()).collect())
    }

    /// Trace of `π(t_w)`.
    pub fn t_trace(&self, w: &Perm) -> Rational {
        self.t_matrix(w).trace()
    }
}

/// A defining relation of `H_n`, indices 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `t_i² = 1`
    Involution(usize),
    /// braid relation (adjacent) or commutation (distant) between `t_i`, `t_j`
    Braid(usize, usize),
    /// `ε_j ε_k = ε_k ε_j`
    EpsCommute(usize, usize),
    /// `ε_j t_i = t_i ε_{s_i(j)} + correction`
    Cross { eps: usize, t: usize },
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Relation::Involution(i) => write!(f, "t{}^2 = 1", i + 1),
            Relation::Braid(i, j) if j == i + 1 => {
                write!(f, "t{a} t{b} t{a} = t{b} t{a} t{b}", a = i + 1, b = j + 1)
            }
            Relation::Braid(i, j) => write!(f, "t{a} t{b} = t{b} t{a}", a = i + 1, b = j + 1),
            Relation::EpsCommute(j, k) => write!(f, "e{a} e{b} = e{b} e{a}", a = j + 1, b = k + 1),
            Relation::Cross { eps, t } => write!(f, "cross relation e{} t{}", eps + 1, t + 1),
        }
    }
}
