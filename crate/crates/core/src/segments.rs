//! Zelevinsky segments, multisegments and skew diagrams.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, ToPrimitive, Zero};

use crate::linalg::{int, Rational, Weight};
use crate::{Error, Result};

/// Segment `[a, b] = {a, a+1, …, b}`. The value `[a, a−1]` is the empty
/// segment; it is kept only so it can be dropped explicitly.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Segment {
    pub a: Rational,
    pub b: Rational,
}

impl Segment {
    /// Requires `b − a ∈ ℤ_{≥ −1}`; `b = a − 1` yields the empty segment.
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        let d = &b - &a;
        if !d.is_integer() || d < -Rational::one() {
            return Err(Error::InvalidInput(alloc::format!("[{a},{b}] is not a segment")));
        }
        Ok(Segment { a, b })
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        Self::new(int(a), int(b))
    }

    pub fn is_empty(&self) -> bool {
        self.b < self.a
    }

    /// `|Δ| = b − a + 1`.
    pub fn len(&self) -> usize {
        (&self.b - &self.a + Rational::one()).to_integer().to_usize().unwrap_or(0)
    }

    pub fn is_integral(&self) -> bool {
        self.a.is_integer()
    }

    /// Contents `a, a+1, …, b`.
    pub fn contents(&self) -> Vec<Rational> {
        (0..self.len()).map(|k| &self.a + int(k as i64)).collect()
    }

    pub fn shifted(&self, c: &Rational) -> Segment {
        Segment {
            a: &self.a + c,
            b: &self.b + c,
        }
    }

    fn same_coset(&self, other: &Segment) -> bool {
        (&self.a - &other.a).is_integer()
    }

    fn contains(&self, other: &Segment) -> bool {
        self.a <= other.a && other.b <= self.b
    }

    /// Neither contains the other and the union is a segment.
    pub fn is_linked(&self, other: &Segment) -> bool {
        if self.is_empty() || other.is_empty() || !self.same_coset(other) {
            return false;
        }
        let (lo, hi) = if self.a <= other.a { (self, other) } else { (other, self) };
        !self.contains(other) && !other.contains(self) && hi.a <= &lo.b + Rational::one()
    }

    /// Linked and disjoint.
    pub fn is_juxtaposed(&self, other: &Segment) -> bool {
        self.is_linked(other) && (self.b < other.a || other.b < self.a)
    }

    /// Linked with `a_self < a_other`.
    pub fn precedes(&self, other: &Segment) -> bool {
        self.is_linked(other) && self.a < other.a
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

/// Ordered list of segments.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Multisegment(pub Vec<Segment>);

impl Multisegment {
    pub fn from_ints(pairs: &[(i64, i64)]) -> Result<Self> {
        pairs.iter().map(|&(a, b)| Segment::from_ints(a, b)).collect::<Result<_>>().map(Multisegment)
    }

    pub fn segments(&self) -> &[Segment] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of contents, `Σ |Δ_i|`.
    pub fn n(&self) -> usize {
        self.0.iter().map(Segment::len).sum()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.0.iter().map(Segment::len).collect()
    }

    pub fn without_empty(&self) -> Multisegment {
        Multisegment(self.0.iter().filter(|s| !s.is_empty()).cloned().collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Segment::is_integral)
    }

    pub fn shifted(&self, c: &Rational) -> Multisegment {
        Multisegment(self.0.iter().map(|s| s.shifted(c)).collect())
    }

    /// Shift everything into `ℤ`, returning the shifted multisegment and the
    /// shift `c` with `result = self + c`. Fails if the segments do not share
    /// one coset of `ℤ`.
    pub fn normalize_integral(&self) -> Result<(Multisegment, Rational)> {
        let Some(first) = self.0.first() else {
            return Ok((self.clone(), Rational::zero()));
        };
        let c = first.a.floor() - &first.a;
        let shifted = self.shifted(&c);
        if !shifted.is_integral() {
            return Err(Error::InvalidInput("segments lie in different cosets of ℤ".into()));
        }
        Ok((shifted, c))
    }

    /// `a_1 > … > a_r`, `b_1 > … > b_r`, one common coset, no empty segment.
    pub fn is_ladder(&self) -> bool {
        let s = &self.0;
        s.iter().all(|x| !x.is_empty())
            && s.windows(2).all(|w| w[0].a > w[1].a && w[0].b > w[1].b && w[0].same_coset(&w[1]))
    }

    /// Ladder with constant length and starts dropping by exactly one.
    pub fn is_speh(&self) -> bool {
        self.is_ladder()
            && self.0.windows(2).all(|w| w[0].len() == w[1].len() && &w[0].a - &w[1].a == Rational::one())
    }

    /// No two segments are linked.
    pub fn is_pairwise_unlinked(&self) -> bool {
        let s = &self.0;
        (0..s.len()).all(|i| (i + 1..s.len()).all(|j| !s[i].is_linked(&s[j])))
    }

    /// `λ = (a_1, …, b_1, a_2, …, b_2, …)`.
    pub fn lambda(&self) -> Result<Weight> {
        if self.0.iter().any(Segment::is_empty) {
            return Err(Error::InvalidInput("empty segment in multisegment".into()));
        }
        Ok(Weight(self.0.iter().flat_map(Segment::contents).collect()))
    }

    /// Content-aligned diagram: row `i` has `|Δ_i|` boxes starting at
    /// column `a_i − a_r`.
    pub fn to_skew_diagram(&self) -> Result<SkewDiagram> {
        if !self.is_ladder() || !self.is_integral() || self.0.is_empty() {
            return Err(Error::InvalidInput(alloc::format!("{self} is not an integral ladder")));
        }
        let last = &self.0[self.0.len() - 1].a;
        let rows = self
            .0
            .iter()
            .map(|s| ((&s.a - last).to_integer().to_i64().unwrap_or(0), s.len()))
            .collect();
        SkewDiagram::new(rows, Coordinates::ContentAligned)
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Coordinates {
    /// Column index equals content; offsets and right ends strictly decrease.
    ContentAligned,
    /// Genuine skew Young shape; offsets and right ends weakly decrease.
    Sheared,
}

/// Rows `(offset, length)` from top to bottom, normalized so the smallest
/// offset is 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SkewDiagram {
    rows: Vec<(i64, usize)>,
    system: Coordinates,
}

impl SkewDiagram {
    pub fn new(rows: Vec<(i64, usize)>, system: Coordinates) -> Result<Self> {
        if rows.is_empty() || rows.iter().any(|&(_, len)| len == 0) {
            return Err(Error::InvalidInput("skew diagram needs nonempty rows".into()));
        }
        let min = rows.iter().map(|r| r.0).min().unwrap_or(0);
        let rows: Vec<(i64, usize)> = rows.into_iter().map(|(o, l)| (o - min, l)).collect();
        let end = |r: &(i64, usize)| r.0 + r.1 as i64 - 1;
        let ok = rows.windows(2).all(|w| match system {
            Coordinates::ContentAligned => w[0].0 > w[1].0 && end(&w[0]) > end(&w[1]),
            Coordinates::Sheared => w[0].0 >= w[1].0 && end(&w[0]) >= end(&w[1]),
        });
        if !ok {
            return Err(Error::InvalidInput(alloc::format!("rows {rows:?} do not form a valid {system:?} diagram")));
        }
        Ok(SkewDiagram { rows, system })
    }

    pub fn rows(&self) -> &[(i64, usize)] {
        &self.rows
    }

    pub fn system(&self) -> Coordinates {
        self.system
    }

    pub fn n_boxes(&self) -> usize {
        self.rows.iter().map(|r| r.1).sum()
    }

    /// Boxes `(row, column)` in row-reading order.
    pub fn boxes(&self) -> Vec<(usize, i64)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, &(o, l))| (0..l as i64).map(move |k| (r, o + k)))
            .collect()
    }

    /// Consecutive rows touch: edge-adjacent in the sheared picture, which
    /// in content terms means `a_i ≤ b_{i+1} + 1`.
    pub fn is_connected(&self) -> bool {
        let slack = match self.system {
            Coordinates::Sheared => 0,
            Coordinates::ContentAligned => 1,
        };
        self.rows.windows(2).all(|w| w[0].0 <= w[1].0 + w[1].1 as i64 - 1 + slack)
    }

    /// Convert to the other coordinate system: row `i` moves right by `i`
    /// when shearing a content-aligned diagram, left by `i` in reverse.
    pub fn shear(&self) -> Result<SkewDiagram> {
        let (sign, target) = match self.system {
            Coordinates::ContentAligned => (1, Coordinates::Sheared),
            Coordinates::Sheared => (-1, Coordinates::ContentAligned),
        };
        let rows = self.rows.iter().enumerate().map(|(i, &(o, l))| (o + sign * i as i64, l)).collect();
        SkewDiagram::new(rows, target)
    }

    /// Sheared shape with every offset equal (an ordinary Young diagram).
    pub fn is_young(&self) -> bool {
        self.system == Coordinates::Sheared && self.rows.iter().all(|r| r.0 == 0)
    }

    pub fn is_rectangle(&self) -> bool {
        self.is_young() && self.rows.windows(2).all(|w| w[0].1 == w[1].1)
    }

    /// The multisegment of a connected sheared shape whose top-left box has
    /// content `a`: contents are constant on columns, then row `i` is
    /// shifted down by `i`.
    pub fn to_multisegment(&self, a: i64) -> Result<Multisegment> {
        if self.system != Coordinates::Sheared {
            return Err(Error::InvalidInput("expected a sheared skew shape".into()));
        }
        if !self.is_connected() {
            return Err(Error::InvalidInput(alloc::format!("{self} is not connected")));
        }
        let top = self.rows[0].0;
        let segs = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, &(o, l))| {
                let start = a + o - top - i as i64;
                Segment::from_ints(start, start + l as i64 - 1)
            })
            .collect::<Result<_>>()?;
        Ok(Multisegment(segs))
    }
}

/// `C(σ, a)`'s multisegment for a sheared shape `σ`.
pub fn from_skew(sigma: &SkewDiagram, a: i64) -> Result<Multisegment> {
    sigma.to_multisegment(a)
}

impl fmt::Display for SkewDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (o, l)) in self.rows.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{o}:{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(a: i64, b: i64) -> Segment {
        Segment::from_ints(a, b).unwrap()
    }

    fn ms(p: &[(i64, i64)]) -> Multisegment {
        Multisegment::from_ints(p).unwrap()
    }

    fn three_row_ladder() -> Multisegment {
        ms(&[(2, 4), (0, 2), (-2, -1)])
    }

    #[test]
    fn relations_between_segments() {
        assert!(seg(1, 2).is_linked(&seg(0, 1)));
        assert!(!seg(1, 2).is_juxtaposed(&seg(0, 1)));
        assert!(seg(0, 1).precedes(&seg(1, 2)));
        assert!(!seg(0, 3).is_linked(&seg(1, 2)));
        assert!(seg(0, 0).is_linked(&seg(1, 1)));
        assert!(seg(0, 0).is_juxtaposed(&seg(1, 1)));
        assert!(!seg(0, 0).is_linked(&seg(2, 2)));
        let half = Segment::new(crate::linalg::frac(1, 2), crate::linalg::frac(1, 2)).unwrap();
        assert!(!half.is_linked(&seg(0, 0)));
    }

    #[test]
    fn ladders_and_speh() {
        assert!(three_row_ladder().is_ladder());
        assert!(!ms(&[(0, 1), (1, 2)]).is_ladder());
        assert!(ms(&[(0, 5)]).is_ladder());
        assert!(ms(&[(1, 2), (0, 1)]).is_speh());
        assert!(!three_row_ladder().is_speh());
        assert!(ms(&[(3, 3)]).is_speh());
    }

    #[test]
    fn lambda_concatenates_contents() {
        assert_eq!(three_row_ladder().lambda().unwrap(), Weight::from_ints(&[2, 3, 4, 0, 1, 2, -2, -1]));
        assert_eq!(ms(&[(1, 1), (0, 0)]).lambda().unwrap(), Weight::from_ints(&[1, 0]));
        assert_eq!(ms(&[(1, 2), (0, 1)]).lambda().unwrap(), Weight::from_ints(&[1, 2, 0, 1]));
        assert!(ms(&[(1, 0)]).lambda().is_err());
    }

    #[test]
    fn content_aligned_diagrams() {
        assert_eq!(three_row_ladder().to_skew_diagram().unwrap().rows(), &[(4, 3), (2, 3), (0, 2)]);
        assert_eq!(ms(&[(0, 2)]).to_skew_diagram().unwrap().rows(), &[(0, 3)]);
        assert_eq!(ms(&[(1, 1), (0, 0)]).to_skew_diagram().unwrap().rows(), &[(1, 1), (0, 1)]);
        assert!(ms(&[(0, 1), (1, 2)]).to_skew_diagram().is_err());
    }

    #[test]
    fn sheared_shapes_to_multisegments() {
        let sigma = SkewDiagram::new(alloc::vec![(2, 3), (1, 3), (0, 2)], Coordinates::Sheared).unwrap();
        assert_eq!(from_skew(&sigma, 2).unwrap(), three_row_ladder());
        let row = SkewDiagram::new(alloc::vec![(0, 3)], Coordinates::Sheared).unwrap();
        assert_eq!(from_skew(&row, 0).unwrap(), ms(&[(0, 2)]));
        let col = SkewDiagram::new(alloc::vec![(0, 1), (0, 1)], Coordinates::Sheared).unwrap();
        assert_eq!(from_skew(&col, 1).unwrap(), ms(&[(1, 1), (0, 0)]));
        let split = SkewDiagram::new(alloc::vec![(1, 1), (0, 1)], Coordinates::Sheared).unwrap();
        assert!(!split.is_connected());
        assert!(from_skew(&split, 0).is_err());
    }

    #[test]
    fn shear_round_trip() {
        let ca = three_row_ladder().to_skew_diagram().unwrap();
        let sh = ca.shear().unwrap();
        assert_eq!(sh.rows(), &[(2, 3), (1, 3), (0, 2)]);
        assert_eq!(sh.shear().unwrap(), ca);
        let rect = SkewDiagram::new(alloc::vec![(0, 2), (0, 2)], Coordinates::Sheared).unwrap();
        assert_eq!(rect.shear().unwrap().rows(), &[(1, 2), (0, 2)]);
        let one = SkewDiagram::new(alloc::vec![(0, 4)], Coordinates::Sheared).unwrap();
        assert_eq!(one.shear().unwrap().rows(), one.rows());
    }

    #[test]
    fn normalize_shifts_into_integers() {
        let half = crate::linalg::frac(1, 2);
        let m = ms(&[(1, 2), (0, 1)]).shifted(&half);
        let (z, c) = m.normalize_integral().unwrap();
        assert_eq!(z, ms(&[(1, 2), (0, 1)]));
        assert_eq!(c, -half);
    }
}
