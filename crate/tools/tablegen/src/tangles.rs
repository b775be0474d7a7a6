//! Algebraic (arborescent) tangle enumeration.
//!
//! Every tangle here is generated from the single crossing by horizontal
//! sums (side by side) and vertical stacks (one above the other), the two
//! phase-preserving operations on alternating tangles. Associativity makes
//! flattened lists canonical: an H-list never directly contains an H-list,
//! likewise for V-lists. Closing a tangle by joining nw-ne and sw-se
//! (numerator) or nw-sw and ne-se (denominator) yields the algebraic link
//! diagrams.

use std::rc::Rc;

use crate::plane::{Assembler, Node, PlaneDiagram, Port};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tangle {
    /// One crossing.
    Crossing,
    /// Horizontal sum, left to right; members are not `HList`s.
    HList(Vec<Rc<Tangle>>),
    /// Vertical stack, top to bottom; members are not `VList`s.
    VList(Vec<Rc<Tangle>>),
}

impl Tangle {
    pub fn size(&self) -> usize {
        match self {
            Tangle::Crossing => 1,
            Tangle::HList(v) | Tangle::VList(v) => v.iter().map(|t| t.size()).sum(),
        }
    }

    pub fn notation(&self) -> String {
        match self {
            Tangle::Crossing => "1".to_string(),
            Tangle::HList(v) => {
                let parts: Vec<String> = v.iter().map(|t| t.notation()).collect();
                format!("h({})", parts.join(" "))
            }
            Tangle::VList(v) => {
                let parts: Vec<String> = v.iter().map(|t| t.notation()).collect();
                format!("v({})", parts.join(" "))
            }
        }
    }
}

/// All canonical tangles with exactly `n` crossings.
///
/// `kinds[0]`: every tangle, `kinds[1]`: non-H (crossing or V-list),
/// `kinds[2]`: non-V.
pub fn enumerate_tangles(n: usize) -> Vec<Rc<Tangle>> {
    let mut all: Vec<Vec<Rc<Tangle>>> = vec![Vec::new(); n + 1];
    let mut non_h: Vec<Vec<Rc<Tangle>>> = vec![Vec::new(); n + 1];
    let mut non_v: Vec<Vec<Rc<Tangle>>> = vec![Vec::new(); n + 1];
    if n == 0 {
        return Vec::new();
    }
    let one = Rc::new(Tangle::Crossing);
    all[1].push(one.clone());
    non_h[1].push(one.clone());
    non_v[1].push(one);

    for size in 2..=n {
        // H-lists: sequences of >= 2 non-H tangles with total `size`.
        let mut hs = Vec::new();
        let mut vs = Vec::new();
        fn seqs(
            rest: usize,
            min_parts: usize,
            pool: &[Vec<Rc<Tangle>>],
            cur: &mut Vec<Rc<Tangle>>,
            out: &mut Vec<Vec<Rc<Tangle>>>,
        ) {
            if rest == 0 {
                if cur.len() >= min_parts {
                    out.push(cur.clone());
                }
                return;
            }
            for part in 1..=rest {
                for t in &pool[part] {
                    cur.push(t.clone());
                    seqs(rest - part, min_parts, pool, cur, out);
                    cur.pop();
                }
            }
        }
        let mut hseqs = Vec::new();
        seqs(size, 2, &non_h, &mut Vec::new(), &mut hseqs);
        for s in hseqs {
            hs.push(Rc::new(Tangle::HList(s)));
        }
        let mut vseqs = Vec::new();
        seqs(size, 2, &non_v, &mut Vec::new(), &mut vseqs);
        for s in vseqs {
            vs.push(Rc::new(Tangle::VList(s)));
        }

        non_h[size].extend(vs.iter().cloned());
        non_v[size].extend(hs.iter().cloned());
        all[size].extend(hs);
        all[size].extend(vs);
    }
    all.swap_remove(n)
}

/// Corner nodes of an instantiated tangle: (nw, ne, se, sw).
pub struct Corners {
    pub nw: Node,
    pub ne: Node,
    pub se: Node,
    pub sw: Node,
}

/// Instantiate a tangle inside an assembler, returning its corners.
pub fn instantiate(t: &Tangle, asm: &mut Assembler) -> Corners {
    match t {
        Tangle::Crossing => {
            let c = asm.crossing();
            Corners {
                nw: Node::P(Port { crossing: c, slot: 3 }),
                ne: Node::P(Port { crossing: c, slot: 2 }),
                se: Node::P(Port { crossing: c, slot: 1 }),
                sw: Node::P(Port { crossing: c, slot: 0 }),
            }
        }
        Tangle::HList(parts) => {
            let corners: Vec<Corners> = parts.iter().map(|p| instantiate(p, asm)).collect();
            for w in corners.windows(2) {
                asm.connect(w[0].ne, w[1].nw);
                asm.connect(w[0].se, w[1].sw);
            }
            Corners {
                nw: corners.first().unwrap().nw,
                sw: corners.first().unwrap().sw,
                ne: corners.last().unwrap().ne,
                se: corners.last().unwrap().se,
            }
        }
        Tangle::VList(parts) => {
            let corners: Vec<Corners> = parts.iter().map(|p| instantiate(p, asm)).collect();
            for w in corners.windows(2) {
                asm.connect(w[0].sw, w[1].nw);
                asm.connect(w[0].se, w[1].ne);
            }
            Corners {
                nw: corners.first().unwrap().nw,
                ne: corners.first().unwrap().ne,
                sw: corners.last().unwrap().sw,
                se: corners.last().unwrap().se,
            }
        }
    }
}

/// Numerator closure: nw-ne and sw-se.
pub fn numerator(t: &Tangle) -> PlaneDiagram {
    let mut asm = Assembler::new();
    let c = instantiate(t, &mut asm);
    asm.connect(c.nw, c.ne);
    asm.connect(c.sw, c.se);
    asm.resolve()
}

/// Denominator closure: nw-sw and ne-se.
pub fn denominator(t: &Tangle) -> PlaneDiagram {
    let mut asm = Assembler::new();
    let c = instantiate(t, &mut asm);
    asm.connect(c.nw, c.sw);
    asm.connect(c.ne, c.se);
    asm.resolve()
}
