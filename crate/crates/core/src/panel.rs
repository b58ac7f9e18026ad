//! Deterministic enumeration of test inputs, and the per-ladder audit run by
//! the verification suites.

use alloc::vec::Vec;

use crate::cherednik;
use crate::forms::{self, Implication, StarOp};
use crate::segments::{Coordinates, Multisegment, Segment, SkewDiagram};
use crate::standard;
use crate::tableaux;
use crate::Result;

/// Integral ladders with `n ≤ max_n` boxes and all contents in
/// `[−window, window]`, ordered by `n` and then by the list of endpoints.
pub fn ladders(max_n: usize, window: i64) -> Vec<Multisegment> {
    fn extend(
        prefix: &mut Vec<(i64, i64)>,
        size: usize,
        max_n: usize,
        window: i64,
        out: &mut Vec<(usize, Vec<(i64, i64)>)>,
    ) {
        if !prefix.is_empty() {
            out.push((size, prefix.clone()));
        }
        let (a_max, b_max) = prefix.last().map_or((window, window), |&(a, b)| (a - 1, b - 1));
        for a in -window..=a_max {
            for b in a..=b_max {
                let len = (b - a + 1) as usize;
                if size + len > max_n {
                    break;
                }
                prefix.push((a, b));
                extend(prefix, size + len, max_n, window, out);
                prefix.pop();
            }
        }
    }
    let mut found = Vec::new();
    extend(&mut Vec::new(), 0, max_n, window, &mut found);
    found.sort();
    found
        .into_iter()
        .map(|(_, pairs)| Multisegment::from_ints(&pairs).expect("valid segments"))
        .collect()
}

/// Connected sheared skew shapes with at most `max_boxes` boxes, ordered by
/// size and then by rows.
pub fn connected_shapes(max_boxes: usize) -> Vec<SkewDiagram> {
    // rows are built bottom-up; the bottom row sits at offset 0
    fn extend(below: &mut Vec<(i64, usize)>, size: usize, max_boxes: usize, out: &mut Vec<(usize, Vec<(i64, usize)>)>) {
        let mut rows: Vec<(i64, usize)> = below.clone();
        rows.reverse();
        out.push((size, rows));
        let &(o, l) = below.last().expect("nonempty");
        let end = o + l as i64 - 1;
        for o2 in o..=end {
            let min_len = (end - o2 + 1).max(1) as usize;
            for l2 in min_len..=max_boxes - size {
                below.push((o2, l2));
                extend(below, size + l2, max_boxes, out);
                below.pop();
            }
        }
    }
    let mut found = Vec::new();
    for l in 1..=max_boxes {
        extend(&mut alloc::vec![(0, l)], l, max_boxes, &mut found);
    }
    found.sort();
    found
        .into_iter()
        .map(|(_, rows)| SkewDiagram::new(rows, Coordinates::Sheared).expect("valid shape"))
        .collect()
}

/// Every check run on one ladder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderAudit {
    pub multisegment: Multisegment,
    pub dim: usize,
    pub tableaux: usize,
    pub relations: bool,
    /// Simple `ε`-spectrum and `A`-semisimplicity.
    pub structure: bool,
    pub determinantal: bool,
    /// One-dimensional, diagonal, positive definite `•`-form.
    pub unitary: bool,
    pub unit_ss: bool,
}

impl LadderAudit {
    pub fn passed(&self) -> bool {
        self.dim == self.tableaux && self.relations && self.structure && self.determinantal && self.unitary && self.unit_ss
    }
}

pub fn audit_ladder(m: &Multisegment) -> Result<LadderAudit> {
    let module = cherednik::build(m)?;
    let tableaux = tableaux::enumerate(m)?.len();
    let spaces = cherednik::weights(&module)?;
    let structure = spaces.iter().all(|s| s.multiplicity == 1) && cherednik::is_A_semisimple(&module)?;
    let form_space = forms::invariant_form_space(&module, StarOp::Bullet)?;
    let unitary = match form_space.as_slice() {
        [g] => g.is_diagonal() && forms::signature(g)?.is_positive_definite(),
        _ => false,
    };
    Ok(LadderAudit {
        multisegment: m.clone(),
        dim: module.dim,
        tableaux,
        relations: module.verify_module_relations().is_empty(),
        structure,
        determinantal: standard::verify_determinantal(m)?,
        unitary,
        unit_ss: forms::check_unit_ss(&module)? == Implication::Satisfied,
    })
}

/// The shapes of `is_speh` ladders are exactly the rectangles: checked for
/// one anchor `a` on a set of shapes.
pub fn rectangles_match_speh(shapes: &[SkewDiagram], a: i64) -> Result<bool> {
    for sigma in shapes {
        let m = sigma.to_multisegment(a)?;
        if sigma.is_rectangle() != m.is_speh() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rectangular Speh multisegment with `rows` segments of length `len`, the
/// top one starting at `a`.
pub fn speh(rows: usize, len: usize, a: i64) -> Multisegment {
    let segs = (0..rows as i64)
        .map(|i| Segment::from_ints(a - i, a - i + len as i64 - 1).expect("valid segment"))
        .collect();
    Multisegment(segs)
}
