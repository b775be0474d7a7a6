//! Constructions of the standard alternating diagram families.
//!
//! The two-bridge family comes from continued-fraction twist vectors in
//! Conway's standard alternating form (all twists positive); the pretzel /
//! closed-chain family from cyclically wired vertical twist columns; open
//! chains cap the ends instead. Every wiring joins an even slot to an odd
//! slot, so all outputs are alternating by construction.

use crate::plane::{Assembler, Node, PlaneDiagram, Port};

fn port(crossing: usize, slot: usize) -> Node {
    Node::P(Port { crossing, slot })
}

/// A vertical twist column of `t` crossings inside `asm`. Returns
/// `(tl, tr, bl, br)` corner nodes (slots 3, 2, 0, 1 of the end crossings).
fn vertical_column(asm: &mut Assembler, t: usize) -> (Node, Node, Node, Node) {
    assert!(t >= 1);
    let first = asm.crossing();
    let mut last = first;
    for _ in 1..t {
        let c = asm.crossing();
        asm.connect(port(last, 0), port(c, 3));
        asm.connect(port(last, 1), port(c, 2));
        last = c;
    }
    (port(first, 3), port(first, 2), port(last, 0), port(last, 1))
}

/// Rational tangle state: four dangling corners.
struct TangleState {
    asm: Assembler,
    nw: Node,
    ne: Node,
    se: Node,
    sw: Node,
}

impl TangleState {
    /// The 0-tangle: two horizontal strands nw-ne and sw-se.
    fn zero() -> Self {
        let mut asm = Assembler::new();
        let (nw, ne, sw, se) = (asm.junction(), asm.junction(), asm.junction(), asm.junction());
        asm.connect(nw, ne);
        asm.connect(sw, se);
        TangleState { asm, nw, ne, se, sw }
    }

    /// Append `m` horizontal twists on the east side.
    fn twist_east(&mut self, m: usize) {
        for _ in 0..m {
            let c = self.asm.crossing();
            self.asm.connect(self.ne, port(c, 3));
            self.asm.connect(self.se, port(c, 0));
            self.ne = port(c, 2);
            self.se = port(c, 1);
        }
    }

    /// Append `m` vertical twists on the south side.
    fn twist_south(&mut self, m: usize) {
        for _ in 0..m {
            let c = self.asm.crossing();
            self.asm.connect(self.sw, port(c, 3));
            self.asm.connect(self.se, port(c, 2));
            self.sw = port(c, 0);
            self.se = port(c, 1);
        }
    }

    /// Numerator closure: join nw-ne and sw-se.
    fn close_numerator(mut self) -> PlaneDiagram {
        self.asm.connect(self.nw, self.ne);
        self.asm.connect(self.sw, self.se);
        self.asm.resolve()
    }
}

/// Numerator closure of the standard alternating rational tangle for a
/// twist vector: odd positions twist east, even positions twist south.
pub fn rational_link(vector: &[usize]) -> PlaneDiagram {
    assert!(!vector.is_empty());
    let mut t = TangleState::zero();
    for (i, &a) in vector.iter().enumerate() {
        if i % 2 == 0 {
            t.twist_east(a);
        } else {
            t.twist_south(a);
        }
    }
    t.close_numerator()
}

/// Pretzel wiring: vertical columns of `ts[i]` crossings joined cyclically
/// (column i's right ports to column i+1's left ports, wrapping around).
/// With all `ts[i]` even this is the closed chain of `ts.len()` rings.
pub fn pretzel(ts: &[usize]) -> PlaneDiagram {
    assert!(ts.len() >= 2);
    let mut asm = Assembler::new();
    let cols: Vec<_> = ts.iter().map(|&t| vertical_column(&mut asm, t)).collect();
    let k = cols.len();
    for i in 0..k {
        let (_, tr, _, br) = cols[i];
        let (tl2, _, bl2, _) = cols[(i + 1) % k];
        asm.connect(tr, tl2);
        asm.connect(br, bl2);
    }
    asm.resolve()
}

/// Open chain wiring: columns joined left to right, with the outer ends of
/// the first and last columns capped. With all `ts[i]` even this is the open
/// chain of `ts.len() + 1` rings.
pub fn open_chain(ts: &[usize]) -> PlaneDiagram {
    assert!(!ts.is_empty());
    let mut asm = Assembler::new();
    let cols: Vec<_> = ts.iter().map(|&t| vertical_column(&mut asm, t)).collect();
    for i in 0..cols.len() - 1 {
        let (_, tr, _, br) = cols[i];
        let (tl2, _, bl2, _) = cols[i + 1];
        asm.connect(tr, tl2);
        asm.connect(br, bl2);
    }
    let (tl, _, bl, _) = cols[0];
    asm.connect(tl, bl);
    let (_, tr, _, br) = cols[cols.len() - 1];
    asm.connect(tr, br);
    asm.resolve()
}

/// Montesinos wiring: rational-tangle columns joined cyclically like a
/// pretzel. Each column is the tangle of its twist vector, rotated so the
/// tangle's (nw, ne, sw, se) play the column's (tl, tr, bl, br).
pub fn montesinos(columns: &[Vec<usize>]) -> PlaneDiagram {
    assert!(columns.len() >= 2);
    let mut asm = Assembler::new();
    let mut corners = Vec::new();
    for vector in columns {
        // Inline the rational tangle construction inside the shared
        // assembler.
        let (nw, ne, sw, se) =
            (asm.junction(), asm.junction(), asm.junction(), asm.junction());
        asm.connect(nw, ne);
        asm.connect(sw, se);
        let (mut cnw, mut cne, mut cse, mut csw) = (nw, ne, se, sw);
        for (i, &a) in vector.iter().enumerate() {
            if i % 2 == 0 {
                for _ in 0..a {
                    let c = asm.crossing();
                    asm.connect(cne, port(c, 3));
                    asm.connect(cse, port(c, 0));
                    cne = port(c, 2);
                    cse = port(c, 1);
                }
            } else {
                for _ in 0..a {
                    let c = asm.crossing();
                    asm.connect(csw, port(c, 3));
                    asm.connect(cse, port(c, 2));
                    csw = port(c, 0);
                    cse = port(c, 1);
                }
            }
        }
        corners.push((cnw, cne, csw, cse));
    }
    let k = corners.len();
    for i in 0..k {
        let (_, tr, _, br) = corners[i];
        let (tl2, _, bl2, _) = corners[(i + 1) % k];
        asm.connect(tr, tl2);
        asm.connect(br, bl2);
    }
    asm.resolve()
}
