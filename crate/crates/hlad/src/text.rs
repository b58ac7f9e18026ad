//! Compact text forms used on the command line.
//!
//! - multisegment: `[2,4],[0,2],[-2,-1]` (endpoints may be fractions like `1/2`)
//! - sheared skew shape: `2:3,1:3,0:2`, rows `offset:length` from the top
//! - weight: `1,0,-1`

use hlad_core::segments::Coordinates;
use hlad_core::{Multisegment, Rational, Segment, SkewDiagram, Weight};

use crate::CliError;

fn rational(s: &str) -> Result<Rational, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Input(format!("not a rational number: {s:?}")))
}

pub fn parse_multisegment(s: &str) -> Result<Multisegment, CliError> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| CliError::Input(format!("expected [a,b],[c,d],..., got {s:?}")))?;
    let mut segments = Vec::new();
    for part in inner.split("],") {
        let part = part.trim().trim_start_matches('[');
        let (a, b) = part
            .split_once(',')
            .ok_or_else(|| CliError::Input(format!("segment {part:?} needs two endpoints")))?;
        segments.push(Segment::new(rational(a)?, rational(b)?)?);
    }
    Ok(Multisegment(segments))
}

pub fn parse_skew(s: &str) -> Result<SkewDiagram, CliError> {
    let rows = s
        .split(',')
        .map(|row| {
            let (o, l) = row
                .split_once(':')
                .ok_or_else(|| CliError::Input(format!("row {row:?} is not offset:length")))?;
            let offset = o.trim().parse().map_err(|_| CliError::Input(format!("bad offset {o:?}")))?;
            let len = l.trim().parse().map_err(|_| CliError::Input(format!("bad length {l:?}")))?;
            Ok((offset, len))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(SkewDiagram::new(rows, Coordinates::Sheared)?)
}

pub fn parse_weight(s: &str) -> Result<Weight, CliError> {
    let coords = s.split(',').map(rational).collect::<Result<Vec<_>, _>>()?;
    Ok(Weight(coords))
}

pub fn parse_int_weight(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|c| c.trim().parse().map_err(|_| CliError::Input(format!("not an integer: {c:?}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use hlad_core::linalg::frac;

    #[test]
    fn multisegments() {
        let m = parse_multisegment("[2,4],[0,2],[-2,-1]").unwrap();
        assert_eq!(m, Multisegment::from_ints(&[(2, 4), (0, 2), (-2, -1)]).unwrap());
        assert_eq!(parse_multisegment(&m.to_string()).unwrap(), m);
        let half = parse_multisegment("[1/2, 3/2]").unwrap();
        assert_eq!(half.segments()[0].a, frac(1, 2));
        assert!(parse_multisegment("[1,2").is_err());
        assert!(parse_multisegment("[3,1]").is_err());
    }

    #[test]
    fn skews_and_weights() {
        let s = parse_skew("2:3,1:3,0:2").unwrap();
        assert_eq!(s.rows(), &[(2, 3), (1, 3), (0, 2)]);
        assert_eq!(parse_skew(&s.to_string()).unwrap(), s);
        assert!(parse_skew("0:1,1:1").is_err());
        assert_eq!(parse_weight("1,1/2").unwrap().0, vec![frac(1, 1), frac(1, 2)]);
        assert_eq!(parse_int_weight("1,0,-1").unwrap(), vec![1, 0, -1]);
    }

    proptest::proptest! {
        #[test]
        fn printed_multisegments_parse_back(raw in proptest::collection::vec((-4i64..=4, 0i64..=3), 1..=4)) {
            let pairs: Vec<(i64, i64)> = raw.iter().map(|&(a, len)| (a, a + len)).collect();
            if let Ok(m) = Multisegment::from_ints(&pairs) {
                proptest::prop_assert_eq!(parse_multisegment(&m.to_string()).unwrap(), m);
            }
        }
    }
}
