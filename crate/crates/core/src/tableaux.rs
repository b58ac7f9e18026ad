//! Standard fillings of the content-aligned diagram of a ladder.
//!
//! Entries increase along rows and down each anti-diagonal: box `(r, c)`
//! must be smaller than `(r, c+1)` and `(r+1, c−1)`.

use alloc::vec::Vec;
use core::fmt;

use crate::hecke::Perm;
use crate::linalg::Weight;
use crate::segments::{Multisegment, SkewDiagram};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SkewTableau {
    diagram: SkewDiagram,
    /// Entries in `1..=n`, row by row.
    rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    pub fn diagram(&self) -> &SkewDiagram {
        &self.diagram
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn offsets(&self) -> Vec<i64> {
        self.diagram.rows().iter().map(|r| r.0).collect()
    }

    /// Entries read row by row, left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// The `w` with `(w(1), …, w(n))` equal to the reading word.
    pub fn to_perm(&self) -> Perm {
        Perm::from_one_based(&self.reading_word()).expect("tableau entries form a permutation")
    }

    /// `w(λ)`: coordinate `i` is the content of the box holding `i`.
    pub fn weight(&self, lambda: &Weight) -> Weight {
        self.to_perm().act_on_weight(lambda)
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                f.write_str("/")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// Box poset of a content-aligned diagram in reading order.
struct BoxPoset {
    diagram: SkewDiagram,
    /// For each position, the earlier positions that must hold smaller entries.
    preds: Vec<Vec<usize>>,
}

impl BoxPoset {
    fn new(m: &Multisegment) -> Result<Self> {
        let diagram = m.to_skew_diagram()?;
        let boxes = diagram.boxes();
        let pos = |r: usize, c: i64| boxes.iter().position(|&b| b == (r, c));
        let preds = boxes
            .iter()
            .map(|&(r, c)| {
                let mut p = Vec::new();
                if let Some(left) = pos(r, c - 1) {
                    p.push(left);
                }
                if r > 0 {
                    if let Some(up) = pos(r - 1, c + 1) {
                        p.push(up);
                    }
                }
                p
            })
            .collect();
        Ok(BoxPoset { diagram, preds })
    }

    fn len(&self) -> usize {
        self.preds.len()
    }

    fn accepts(&self, word: &[usize]) -> bool {
        self.preds
            .iter()
            .enumerate()
            .all(|(p, ps)| ps.iter().all(|&q| word[q] < word[p]))
    }

    fn tableau(&self, word: &[usize]) -> SkewTableau {
        let mut it = word.iter().copied();
        let rows = self
            .diagram
            .rows()
            .iter()
            .map(|&(_, len)| it.by_ref().take(len).collect())
            .collect();
        SkewTableau {
            diagram: self.diagram.clone(),
            rows,
        }
    }
}

/// The row-reading filling `Y_1`.
pub fn y1(m: &Multisegment) -> Result<SkewTableau> {
    let poset = BoxPoset::new(m)?;
    let word: Vec<usize> = (1..=poset.len()).collect();
    Ok(poset.tableau(&word))
}

/// All standard fillings, in lexicographic order of reading words.
pub fn enumerate(m: &Multisegment) -> Result<Vec<SkewTableau>> {
    let poset = BoxPoset::new(m)?;
    let n = poset.len();
    let mut out = Vec::new();
    let mut word = alloc::vec![0; n];
    let mut used = alloc::vec![false; n + 1];
    let mut has_succ = alloc::vec![false; n];
    for &q in poset.preds.iter().flatten() {
        has_succ[q] = true;
    }
    fill(&poset, 0, &mut word, &mut used, &has_succ, &mut out);
    Ok(out)
}

fn fill(
    poset: &BoxPoset,
    p: usize,
    word: &mut [usize],
    used: &mut [bool],
    has_succ: &[bool],
    out: &mut Vec<SkewTableau>,
) {
    let n = word.len();
    if p == n {
        out.push(poset.tableau(word));
        return;
    }
    let floor = poset.preds[p].iter().map(|&q| word[q]).max().unwrap_or(0);
    for v in floor + 1..=n {
        // a box with a successor cannot hold the largest entry
        if used[v] || (has_succ[p] && v == n) {
            continue;
        }
        used[v] = true;
        word[p] = v;
        fill(poset, p + 1, word, used, has_succ, out);
        used[v] = false;
    }
}

/// The tableau whose reading word is `(w(1), …, w(n))`, if that filling is
/// standard.
pub fn perm_to_tableau(m: &Multisegment, w: &Perm) -> Result<Option<SkewTableau>> {
    let poset = BoxPoset::new(m)?;
    if w.n() != poset.len() {
        return Err(Error::DimensionMismatch(alloc::format!(
            "permutation of {} letters for {} boxes",
            w.n(),
            poset.len()
        )));
    }
    let word = w.one_based();
    Ok(poset.accepts(&word).then(|| poset.tableau(&word)))
}

/// Weights `w(λ)` of every tableau, in enumeration order.
pub fn tableau_weights(m: &Multisegment) -> Result<Vec<Weight>> {
    let lambda = m.lambda()?;
    Ok(enumerate(m)?.iter().map(|t| t.weight(&lambda)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(p: &[(i64, i64)]) -> Multisegment {
        Multisegment::from_ints(p).unwrap()
    }

    fn words(m: &Multisegment) -> Vec<Vec<usize>> {
        enumerate(m).unwrap().iter().map(SkewTableau::reading_word).collect()
    }

    #[test]
    fn canonical_filling() {
        let t = y1(&ms(&[(2, 4), (0, 2), (-2, -1)])).unwrap();
        assert_eq!(t.rows(), &[alloc::vec![1, 2, 3], alloc::vec![4, 5, 6], alloc::vec![7, 8]]);
        assert!(t.to_perm().is_identity());
        assert_eq!(y1(&ms(&[(1, 2), (0, 1)])).unwrap().rows(), &[alloc::vec![1, 2], alloc::vec![3, 4]]);
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(words(&ms(&[(0, 2)])), alloc::vec![alloc::vec![1, 2, 3]]);
        assert_eq!(words(&ms(&[(1, 2), (0, 1)])), alloc::vec![alloc::vec![1, 2, 3, 4], alloc::vec![1, 3, 2, 4]]);
        assert_eq!(words(&ms(&[(1, 1), (0, 0)])), alloc::vec![alloc::vec![1, 2]]);
        assert_eq!(enumerate(&ms(&[(2, 4), (0, 2), (-2, -1)])).unwrap().len(), 344);
        assert_eq!(enumerate(&ms(&[(3, 6), (2, 5)])).unwrap().len(), 14);
    }

    #[test]
    fn perm_round_trip() {
        let m = ms(&[(1, 2), (0, 1)]);
        let s2 = Perm::simple(4, 1);
        let t = perm_to_tableau(&m, &s2).unwrap().unwrap();
        assert_eq!(t.reading_word(), alloc::vec![1, 3, 2, 4]);
        assert_eq!(t.to_perm(), s2);
        assert!(perm_to_tableau(&ms(&[(1, 1), (0, 0)]), &Perm::simple(2, 0)).unwrap().is_none());
    }
}
