use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use num_bigint::BigInt;
use num_traits::Zero;

/// Exact rational scalar, always kept in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`; panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A point of `V^∨ ≅ Q^n`, e.g. an `A`-weight or a central character
/// representative.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Weight(pub Vec<Rational>);

impl Weight {
    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(n: usize) -> Self {
        Weight(alloc::vec![Rational::zero(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    /// Coordinates sorted in decreasing order: the dominant representative of
    /// the `S_n`-orbit.
    pub fn dominant(&self) -> Weight {
        let mut c = self.0.clone();
        c.sort_by(|a, b| b.cmp(a));
        Weight(c)
    }

    /// All distinct permutations of the coordinates, in lexicographic order.
    pub fn orbit(&self) -> Vec<Weight> {
        let mut c = self.0.clone();
        c.sort();
        let mut out = alloc::vec![Weight(c.clone())];
        while next_permutation(&mut c) {
            out.push(Weight(c.clone()));
        }
        out
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn shifted(&self, by: &Rational) -> Weight {
        Weight(self.0.iter().map(|a| a + by).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }
}

impl Index<usize> for Weight {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Lexicographic successor in place; false once the sequence is the last one.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_matches_p_over_q() {
        assert_eq!(alloc::format!("{}", frac(-2, 4)), "-1/2");
        assert_eq!(alloc::format!("{}", frac(6, 3)), "2");
    }

    #[test]
    fn orbit_counts_distinct_arrangements() {
        assert_eq!(Weight::from_ints(&[1, 0]).orbit().len(), 2);
        assert_eq!(Weight::from_ints(&[1, 1, 0]).orbit().len(), 3);
        assert_eq!(Weight::from_ints(&[2, 1, 1, 0]).orbit().len(), 12);
    }
}
