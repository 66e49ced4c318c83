//! Text format for diagrams.
//!
//! A code is a whitespace-separated list of crossing records plus an
//! optional free-loop count:
//!
//! - `C(a,b,c,d)`: four 1-based arc ends counterclockwise; the under strand
//!   runs `a -> c` or `c -> a` (rotation by two is accepted).
//! - `X(a,b,c,d)`: the same, but `a` must be the incoming under arc.
//! - `O n`: `n` crossing-free loop components (at most once).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{DiagramError, LinkDiagram, RecordKind};

/// Parses a diagram code.
pub fn parse_diagram(input: &str) -> Result<LinkDiagram, DiagramError> {
    let s = input.as_bytes();
    let mut i = 0usize;
    let mut records: Vec<([usize; 4], RecordKind)> = Vec::new();
    let mut free: Option<usize> = None;

    let skip_ws = |s: &[u8], i: &mut usize| {
        while *i < s.len() && (s[*i] as char).is_whitespace() {
            *i += 1;
        }
    };
    let read_int = |s: &[u8], i: &mut usize| -> Result<usize, DiagramError> {
        skip_ws(s, i);
        let start = *i;
        let mut v: usize = 0;
        while *i < s.len() && s[*i].is_ascii_digit() {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add((s[*i] - b'0') as usize))
                .ok_or_else(|| DiagramError::Malformed("number too large".into()))?;
            *i += 1;
        }
        if *i == start {
            return Err(DiagramError::Malformed(format!(
                "expected a number at byte {start}"
            )));
        }
        Ok(v)
    };
    let expect = |s: &[u8], i: &mut usize, ch: u8| -> Result<(), DiagramError> {
        skip_ws(s, i);
        if *i < s.len() && s[*i] == ch {
            *i += 1;
            Ok(())
        } else {
            Err(DiagramError::Malformed(format!(
                "expected '{}' at byte {}",
                ch as char, *i
            )))
        }
    };

    loop {
        skip_ws(s, &mut i);
        if i >= s.len() {
            break;
        }
        match s[i] {
            b'C' | b'X' => {
                let kind = if s[i] == b'C' {
                    RecordKind::C
                } else {
                    RecordKind::X
                };
                i += 1;
                expect(s, &mut i, b'(')?;
                let mut ends = [0usize; 4];
                for (k, e) in ends.iter_mut().enumerate() {
                    if k > 0 {
                        expect(s, &mut i, b',')?;
                    }
                    let v = read_int(s, &mut i)?;
                    if v == 0 {
                        return Err(DiagramError::Malformed("arc numbers are 1-based".into()));
                    }
                    *e = v - 1;
                }
                expect(s, &mut i, b')')?;
                records.push((ends, kind));
            }
            b'O' => {
                i += 1;
                let n = read_int(s, &mut i)?;
                if n == 0 {
                    return Err(DiagramError::Malformed("O requires a positive count".into()));
                }
                if free.replace(n).is_some() {
                    return Err(DiagramError::Malformed("more than one O token".into()));
                }
            }
            c => {
                return Err(DiagramError::Malformed(format!(
                    "unexpected character '{}' at byte {i}",
                    c as char
                )));
            }
        }
    }

    if records.is_empty() && free.is_none() {
        return Err(DiagramError::Malformed("empty input".into()));
    }
    LinkDiagram::from_parts(&records, free.unwrap_or(0))
}

/// Renders a diagram as a code that parses back to the same diagram up to
/// arc relabeling (orientations included).
pub fn render_code(d: &LinkDiagram) -> String {
    // The text format carries orientation through under declarations and,
    // for two-arc components that pass over twice, through a convention:
    // the smaller-index crossing consumes the smaller arc.  Swap the two
    // labels of any such component that is stored the other way around.
    let mut relabel: Vec<usize> = (0..d.arc_count()).collect();
    for k in 0..d.crossing_component_count() {
        let (start, len) = d.component_block(k);
        if len != 2 {
            continue;
        }
        let mut under_somewhere = false;
        let mut over_passages: Vec<usize> = Vec::new();
        for x in 0..d.crossing_count() {
            let ends = d.crossing(x).ends;
            if d.component_of_arc(ends[0]) == k {
                under_somewhere = true;
            }
            if d.component_of_arc(ends[1]) == k {
                over_passages.push(x);
            }
        }
        if under_somewhere {
            continue;
        }
        over_passages.sort_unstable();
        let x = over_passages[0];
        if d.crossing(x).ends[d.over_in(x)] != start {
            relabel[start] = start + 1;
            relabel[start + 1] = start;
        }
    }

    let mut parts: Vec<String> = Vec::new();
    for x in 0..d.crossing_count() {
        let e = d.crossing(x).ends;
        parts.push(format!(
            "C({},{},{},{})",
            relabel[e[0]] + 1,
            relabel[e[1]] + 1,
            relabel[e[2]] + 1,
            relabel[e[3]] + 1
        ));
    }
    if d.free_loops() > 0 {
        parts.push(format!("O {}", d.free_loops()));
    }
    parts.join(" ")
}

#[cfg(test)]
mod tests {
    use super::super::{Crossing, Smoothing, TraversalContext};
    use super::*;
    use alloc::vec;

    #[test]
    fn parse_hopf() {
        let d = parse_diagram("C(1,3,2,4) C(3,1,4,2)").unwrap();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.mu(), 2);
        let r = d.classify(&TraversalContext::canonical(&d)).unwrap();
        assert_eq!(r.writhe, 2);
    }

    #[test]
    fn parse_pd_trefoil() {
        let d = parse_diagram("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        assert_eq!(d.mu(), 1);
        let r = d.classify(&TraversalContext::canonical(&d)).unwrap();
        assert_eq!(r.writhe, -3);
    }

    #[test]
    fn parse_loops_and_mixing() {
        assert_eq!(parse_diagram("O 1").unwrap().mu(), 1);
        assert_eq!(parse_diagram("O 2").unwrap().free_loops(), 2);
        let d = parse_diagram("C(1,1,2,2) O 1").unwrap();
        assert_eq!(d.mu(), 2);
        assert_eq!(d.crossing_count(), 1);
        // C and X records may be mixed.
        let m = parse_diagram("C(1,3,2,4) X(3,1,4,2)").unwrap();
        assert_eq!(m.crossing_count(), 2);
    }

    #[test]
    fn parse_whitespace_tolerance() {
        let a = parse_diagram("C(1, 3, 2, 4)  C( 3 ,1,4,2 )").unwrap();
        let b = parse_diagram("C(1,3,2,4) C(3,1,4,2)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "",
            "   ",
            "O 0",
            "O 1 O 1",
            "C(1,3,2,4",
            "C(1,3,2)",
            "C(0,1,1,0)",
            "Y(1,2,3,4)",
            "C(1,1,2,2) garbage",
        ] {
            assert!(parse_diagram(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn render_round_trip() {
        for code in [
            "C(1,1,2,2)",
            "C(1,2,2,1)",
            "C(1,3,2,4) C(3,1,4,2)",
            "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
            "C(1,1,2,2) O 1",
            "O 2",
        ] {
            let d = parse_diagram(code).unwrap();
            let again = parse_diagram(&render_code(&d)).unwrap();
            assert_eq!(d, again, "round trip changed {code}");
        }
    }

    #[test]
    fn render_normalizes_double_over_component() {
        // A two-arc component passing over twice cannot declare its
        // direction in the text format; rendering relabels it to match the
        // parse convention.
        let text = parse_diagram("C(1,4,2,3) C(2,4,1,3)").unwrap();
        assert_eq!(text.over_in(0), 3);
        let mut flipped = text.clone();
        flipped.crossings[0] = Crossing { ends: [0, 3, 1, 2] };
        flipped.crossings[1] = Crossing { ends: [1, 3, 0, 2] };
        flipped.over_in = vec![1, 3];
        assert_eq!(flipped.validate(), Ok(()));
        let restored = parse_diagram(&render_code(&flipped)).unwrap();
        // Same signs under the stored orientation either way.
        let a = flipped.classify(&TraversalContext::canonical(&flipped)).unwrap();
        let b = restored.classify(&TraversalContext::canonical(&restored)).unwrap();
        assert_eq!(a.writhe, b.writhe);
        assert_eq!(restored.crossing(0).ends[restored.over_in(0)], 2);
    }

    #[test]
    fn render_after_smoothing_round_trips() {
        let d = parse_diagram("C(1,3,2,4) C(3,1,4,2)").unwrap();
        for kind in [Smoothing::I, Smoothing::II] {
            let s = d.smooth(1, kind);
            let again = parse_diagram(&render_code(&s)).unwrap();
            assert_eq!(s, again);
        }
    }
}
