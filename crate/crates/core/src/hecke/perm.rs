use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{Rational, Weight};
use crate::linalg::next_permutation;
use crate::{Error, Result};

/// Element of `S_n`, stored as 0-based images: `w(i) = images[i]`.
///
/// Composition is right-to-left: `(u·v)(i) = u(v(i))`. The simple reflection
/// `s_i` (0-based `i`) swaps `i` and `i + 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i + 1 < n, "simple reflection index out of range");
        let mut p = Self::identity(n);
        p.0.swap(i, i + 1);
        p
    }

    /// Longest element `w_0: i ↦ n − 1 − i`.
    pub fn longest(n: usize) -> Self {
        Perm((0..n).rev().collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidInput("not a permutation".into()));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// From 1-based images, e.g. a tableau reading word.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidInput("one-based images must be positive".into()));
        }
        Self::from_images(images.iter().map(|&i| i - 1).collect())
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i + 1).collect()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &Perm) -> Perm {
        assert_eq!(self.n(), rhs.n());
        Perm(rhs.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = alloc::vec![0; self.n()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        (0..n).map(|i| (i + 1..n).filter(|&j| self.0[i] > self.0[j]).count()).sum()
    }

    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// A reduced word `[i_1, …, i_k]` with `self = s_{i_1} s_{i_2} ⋯ s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        loop {
            let inv = w.inverse();
            // left descent: w⁻¹(i) > w⁻¹(i+1)
            let Some(i) = (0..w.n().saturating_sub(1)).find(|&i| inv.0[i] > inv.0[i + 1]) else {
                break;
            };
            word.push(i);
            w = Perm::simple(w.n(), i).compose(&w);
        }
        word
    }

    /// `(w·λ)_i = λ_{w⁻¹(i)}`.
    pub fn act_on_weight(&self, lambda: &Weight) -> Weight {
        let inv = self.inverse();
        Weight((0..self.n()).map(|i| lambda[inv.0[i]].clone()).collect::<Vec<Rational>>())
    }

    /// Cycle lengths in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = alloc::vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Every element of `S_n` in lexicographic order of images.
    pub fn all(n: usize) -> AllPerms {
        AllPerms {
            next: Some((0..n).collect()),
        }
    }

    /// One representative per conjugacy class (cycle type), classes ordered
    /// by partition in decreasing lexicographic order.
    pub fn class_representatives(n: usize) -> Vec<Perm> {
        partitions(n)
            .into_iter()
            .map(|parts| {
                let mut images = Vec::with_capacity(n);
                let mut start = 0;
                for len in parts {
                    for k in 0..len {
                        images.push(start + (k + 1) % len);
                    }
                    start += len;
                }
                Perm(images)
            })
            .collect()
    }
}

pub struct AllPerms {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPerms {
    type Item = Perm;
    fn next(&mut self) -> Option<Perm> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Perm(cur))
    }
}

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_word_multiplies_back() {
        for w in Perm::all(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            let prod = word
                .iter()
                .fold(Perm::identity(4), |acc, &i| acc.compose(&Perm::simple(4, i)));
            assert_eq!(prod, w);
        }
    }

    #[test]
    fn counts() {
        assert_eq!(Perm::all(5).count(), 120);
        assert_eq!(Perm::class_representatives(5).len(), 7);
        assert_eq!(Perm::longest(4).length(), 6);
        let cts: Vec<Vec<usize>> = Perm::class_representatives(4).iter().map(Perm::cycle_type).collect();
        assert_eq!(cts, partitions(4));
    }

    #[test]
    fn weight_action_convention() {
        // (w·λ)_i = λ_{w⁻¹(i)}; w = [2,3,1] sends 1→2, so λ_1 lands in slot 2
        let w = Perm::from_one_based(&[2, 3, 1]).unwrap();
        let l = Weight::from_ints(&[10, 20, 30]);
        assert_eq!(w.act_on_weight(&l), Weight::from_ints(&[30, 10, 20]));
    }
}
