//! Braid closures.
//!
//! A braid word is read top to bottom: letter `k` with `1 <= |k| < strands`
//! crosses the strands at columns `|k|` and `|k| + 1`, a positive letter
//! carrying the right strand over the left so that the closure crossing is
//! positively signed.  The closure reconnects every bottom end to the top of
//! its own column.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{DiagramError, LinkDiagram, RecordKind};

/// Builds the trace closure of a braid word on `strands` strands.
///
/// Columns the word never touches close into free loops.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<LinkDiagram, DiagramError> {
    if strands == 0 {
        return Err(DiagramError::Malformed(
            "braid needs at least one strand".into(),
        ));
    }
    let mut levels = Vec::with_capacity(word.len());
    for &k in word {
        let col = k.unsigned_abs() as usize;
        if k == 0 || col >= strands {
            return Err(DiagramError::Malformed(format!(
                "letter {k} does not fit in {strands} strands"
            )));
        }
        levels.push((col, k > 0));
    }

    // Walk the closure one component at a time.  Arcs are numbered along
    // the traversal, so each crossing ends up with its left and right
    // entering arcs plus their continuations recorded.
    let mut visited = vec![false; strands + 1];
    let mut sides: Vec<[Option<(usize, usize)>; 2]> = vec![[None; 2]; levels.len()];
    let mut free_loops = 0usize;
    let mut next_arc = 0usize;
    for c0 in 1..=strands {
        if visited[c0] {
            continue;
        }
        let mut col = c0;
        let mut passages: Vec<(usize, bool)> = Vec::new();
        loop {
            visited[col] = true;
            for (l, &(lc, _)) in levels.iter().enumerate() {
                if col == lc {
                    passages.push((l, true));
                    col = lc + 1;
                } else if col == lc + 1 {
                    passages.push((l, false));
                    col = lc;
                }
            }
            if col == c0 {
                break;
            }
        }
        if passages.is_empty() {
            free_loops += 1;
            continue;
        }
        let base = next_arc;
        let count = passages.len();
        next_arc += count;
        for (j, &(l, left)) in passages.iter().enumerate() {
            let slot = if left { 0 } else { 1 };
            sides[l][slot] = Some((base + j, base + (j + 1) % count));
        }
    }

    // Around a crossing the four ends run counterclockwise as
    // left-in, right-in on top and their swapped continuations below.
    let mut records = Vec::with_capacity(levels.len());
    for (l, &(_, positive)) in levels.iter().enumerate() {
        let (left_in, left_out) = sides[l][0].expect("left entry visited");
        let (right_in, right_out) = sides[l][1].expect("right entry visited");
        let ends = if positive {
            [left_in, right_out, left_out, right_in]
        } else {
            [right_in, left_in, right_out, left_out]
        };
        records.push((ends, RecordKind::X));
    }
    LinkDiagram::from_parts(&records, free_loops)
}
