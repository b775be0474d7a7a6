//! Diagrams from braid words.
//!
//! `braid_closure` builds the trace closure of a braid word on `strands`
//! strands, all oriented the same way. A letter at position `p` crosses the
//! strands in columns `p` and `p+1`; a positive letter passes the right
//! strand over the left, which is the positive crossing for parallel
//! strands. Words whose odd-position letters all carry one sign and whose
//! even-position letters carry the other close up into alternating diagrams,
//! which makes this a convenient source of random alternating inputs.

use crate::diagram::{ArcId, Crossing, Diagram, Sign};
use crate::error::Error;

/// One braid-word letter: `position` counts columns from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BraidLetter {
    pub position: usize,
    pub sign: Sign,
}

impl BraidLetter {
    pub fn new(position: usize, sign: Sign) -> Self {
        BraidLetter { position, sign }
    }
}

/// Close a braid word into a diagram. Columns untouched by any letter close
/// into crossing-free unknot components.
pub fn braid_closure(strands: usize, word: &[BraidLetter]) -> Result<Diagram, Error> {
    if strands < 2 && !word.is_empty() {
        return Err(Error::Syntax("braid words need at least 2 strands".into()));
    }
    for l in word {
        if l.position == 0 || l.position + 1 > strands {
            return Err(Error::Syntax(format!(
                "braid letter at position {} does not fit {} strands",
                l.position, strands
            )));
        }
    }
    if word.is_empty() {
        return if strands <= 1 {
            Ok(Diagram::unknot())
        } else {
            Diagram::unlink(strands)
        };
    }

    let touches = |t: usize, col: usize| {
        let p = word[t].position;
        col == p || col == p + 1
    };

    // The next letter downward (cyclically, through the closure) touching a
    // column; every arc runs from a letter's bottom port to that letter.
    let next_passage = |t: usize, col: usize| -> usize {
        for dt in 1..=word.len() {
            let t2 = (t + dt) % word.len();
            if touches(t2, col) {
                return t2;
            }
        }
        unreachable!("column {col} is touched at least by letter {t}")
    };

    // One arc per (letter, bottom column); record where it arrives.
    let mut arriving = std::collections::HashMap::new();
    let mut arc_count = 0usize;
    let mut out_arcs = vec![[ArcId(0); 2]; word.len()];
    for (t, l) in word.iter().enumerate() {
        for (side, col) in [(0, l.position), (1, l.position + 1)] {
            let arc = ArcId(arc_count);
            arc_count += 1;
            out_arcs[t][side] = arc;
            let dest = next_passage(t, col);
            arriving.insert((dest, col), arc);
        }
    }

    let mut crossings = Vec::with_capacity(word.len());
    for (t, l) in word.iter().enumerate() {
        let enter_left = arriving[&(t, l.position)];
        let enter_right = arriving[&(t, l.position + 1)];
        let leave_left = out_arcs[t][0];
        let leave_right = out_arcs[t][1];
        // Strands swap columns; a positive letter sends the right strand
        // over the left.
        let (over_in, over_out, under_in, under_out) = match l.sign {
            Sign::Positive => (enter_right, leave_left, enter_left, leave_right),
            Sign::Negative => (enter_left, leave_right, enter_right, leave_left),
        };
        crossings.push(Crossing {
            under_in,
            under_out,
            over_in,
            over_out,
            sign: l.sign,
        });
    }

    let free_loops = (1..=strands)
        .filter(|&col| (0..word.len()).all(|t| !touches(t, col)))
        .count();
    let labels: Vec<u32> = (1..=arc_count as u32).collect();
    Diagram::from_parts(crossings, labels, free_loops)
}
