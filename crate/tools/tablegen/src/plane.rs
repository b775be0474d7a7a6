//! Unoriented plane-diagram assembly.
//!
//! A crossing has four ports in counterclockwise order, slots 0..3. The
//! strand through slots {0,2} passes under, the strand through {1,3} over.
//! Along any strand the slot parity therefore records the passage type, so
//! wiring that always joins an even slot to an odd slot produces alternating
//! diagrams by construction.
//!
//! Connections are recorded as segments between nodes (ports or temporary
//! junctions); junction chains contract to edges at resolution time, and
//! junction-only cycles become crossing-free unknot components.

use writhesplit::diagram::{Crossing as CoreCrossing, Diagram, Sign};
use writhesplit::ArcId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Port {
    pub crossing: usize,
    pub slot: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Node {
    P(Port),
    J(usize),
}

/// Accumulates crossings and segments; `resolve` turns it into a
/// [`PlaneDiagram`].
#[derive(Debug, Default, Clone)]
pub struct Assembler {
    crossing_count: usize,
    segments: Vec<(Node, Node)>,
    junction_count: usize,
}

impl Assembler {
    pub fn new() -> Self {
        Self::default()
    }

    /// Allocate a crossing; returns its index. Ports are `Port{crossing, slot}`
    /// with slots 0..3 counterclockwise and the under-strand on {0,2}.
    pub fn crossing(&mut self) -> usize {
        self.crossing_count += 1;
        self.crossing_count - 1
    }

    pub fn junction(&mut self) -> Node {
        self.junction_count += 1;
        Node::J(self.junction_count - 1)
    }

    pub fn connect(&mut self, a: Node, b: Node) {
        self.segments.push((a, b));
    }

    pub fn crossings(&self) -> usize {
        self.crossing_count
    }

    /// Contract junction chains into port-to-port edges.
    pub fn resolve(self) -> PlaneDiagram {
        let n = self.crossing_count;
        // Adjacency over nodes; ports have degree 1 here, junctions degree 2.
        use std::collections::HashMap;
        let mut adj: HashMap<Node, Vec<usize>> = HashMap::new();
        for (i, (a, b)) in self.segments.iter().enumerate() {
            adj.entry(*a).or_default().push(i);
            adj.entry(*b).or_default().push(i);
        }
        for (node, segs) in &adj {
            let expected = match node {
                Node::P(_) => 1,
                Node::J(_) => 2,
            };
            assert_eq!(
                segs.len(),
                expected,
                "node {node:?} has degree {}, expected {expected}",
                segs.len()
            );
        }
        for c in 0..n {
            for slot in 0..4 {
                assert!(
                    adj.contains_key(&Node::P(Port { crossing: c, slot })),
                    "port {c}/{slot} left unconnected"
                );
            }
        }

        let other =
            |seg: usize, node: Node| if self.segments[seg].0 == node { self.segments[seg].1 } else { self.segments[seg].0 };

        let mut used = vec![false; self.segments.len()];
        let mut edges = Vec::new();
        // Walk from each port through junctions to the far port.
        for c in 0..n {
            for slot in 0..4 {
                let start = Node::P(Port { crossing: c, slot });
                let first_seg = adj[&start][0];
                if used[first_seg] {
                    continue;
                }
                let mut seg = first_seg;
                let mut node = start;
                loop {
                    used[seg] = true;
                    let next = other(seg, node);
                    match next {
                        Node::P(q) => {
                            let p = match start {
                                Node::P(p) => p,
                                Node::J(_) => unreachable!(),
                            };
                            edges.push((p, q));
                            break;
                        }
                        Node::J(_) => {
                            let segs = &adj[&next];
                            seg = if segs[0] == seg { segs[1] } else { segs[0] };
                            node = next;
                        }
                    }
                }
            }
        }
        // Remaining unused segments form junction-only cycles: free loops.
        let mut free_loops = 0;
        for i in 0..self.segments.len() {
            if used[i] {
                continue;
            }
            let mut seg = i;
            let mut node = self.segments[i].0;
            loop {
                used[seg] = true;
                let next = other(seg, node);
                let segs = &adj[&next];
                let nseg = if segs[0] == seg { segs[1] } else { segs[0] };
                if used[nseg] {
                    break;
                }
                seg = nseg;
                node = next;
            }
            free_loops += 1;
        }

        PlaneDiagram {
            crossing_count: n,
            edges,
            free_loops,
        }
    }
}

/// A closed unoriented plane diagram: ports wired by edges.
#[derive(Debug, Clone)]
pub struct PlaneDiagram {
    crossing_count: usize,
    edges: Vec<(Port, Port)>,
    free_loops: usize,
}

impl PlaneDiagram {
    pub fn crossing_count(&self) -> usize {
        self.crossing_count
    }

    /// Closed curves of the underlying 4-valent graph, as port sequences in
    /// traversal order. Each curve lists the ports it meets; consecutive
    /// entries alternate through-crossing and along-edge steps.
    pub fn curves(&self) -> Vec<Vec<Port>> {
        use std::collections::HashMap;
        let mut edge_at: HashMap<Port, (usize, Port)> = HashMap::new();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            edge_at.insert(a, (i, b));
            edge_at.insert(b, (i, a));
        }
        let mut seen: std::collections::HashSet<Port> = Default::default();
        let mut curves = Vec::new();
        for c in 0..self.crossing_count {
            for slot in 0..4 {
                let start = Port { crossing: c, slot };
                if seen.contains(&start) {
                    continue;
                }
                let mut curve = Vec::new();
                let mut p = start;
                loop {
                    // Through the crossing...
                    seen.insert(p);
                    curve.push(p);
                    let through = Port {
                        crossing: p.crossing,
                        slot: (p.slot + 2) % 4,
                    };
                    seen.insert(through);
                    curve.push(through);
                    // ...then along the edge.
                    let (_, far) = edge_at[&through];
                    p = far;
                    if p == start {
                        break;
                    }
                }
                curves.push(curve);
            }
        }
        curves
    }

    /// Orient the diagram. `flip[i]` reverses the traversal direction of
    /// curve `i` (as returned by [`curves`]); crossing signs follow from the
    /// counterclockwise port order. Arc labels are edge indices + 1.
    pub fn orient(&self, flip: &[bool]) -> Result<Diagram, writhesplit::Error> {
        use std::collections::HashMap;
        let curves = self.curves();
        assert_eq!(flip.len(), curves.len());

        // Direction of each port: true = strand enters the crossing here.
        let mut enters: HashMap<Port, bool> = HashMap::new();
        for (ci, curve) in curves.iter().enumerate() {
            // In traversal order the curve alternates [in, out, in, out, ..]:
            // position 0 enters its crossing, position 1 leaves it.
            for (j, &p) in curve.iter().enumerate() {
                let inward = j % 2 == 0;
                enters.insert(p, inward != flip[ci]);
            }
        }

        let mut edge_index: HashMap<Port, usize> = HashMap::new();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            edge_index.insert(a, i);
            edge_index.insert(b, i);
        }

        let mut crossings = Vec::with_capacity(self.crossing_count);
        for c in 0..self.crossing_count {
            let port = |slot: usize| Port { crossing: c, slot };
            let arc = |slot: usize| ArcId(edge_index[&port(slot)]);
            let under_in_slot = if enters[&port(0)] { 0 } else { 2 };
            let over_in_slot = if enters[&port(1)] { 1 } else { 3 };
            debug_assert_ne!(enters[&port(under_in_slot)], enters[&port((under_in_slot + 2) % 4)]);
            // Counterclockwise from the under-in slot, the over-in sits at
            // +3 for a positive crossing and +1 for a negative one.
            let sign = if over_in_slot == (under_in_slot + 3) % 4 {
                Sign::Positive
            } else {
                Sign::Negative
            };
            crossings.push(CoreCrossing {
                under_in: arc(under_in_slot),
                under_out: arc((under_in_slot + 2) % 4),
                over_in: arc(over_in_slot),
                over_out: arc((over_in_slot + 2) % 4),
                sign,
            });
        }

        let labels: Vec<u32> = (1..=self.edges.len() as u32).collect();
        Diagram::from_parts(crossings, labels, self.free_loops)
    }

    /// All orientation classes: the first curve's direction is pinned (full
    /// reversal never changes the computed quantities), the remaining
    /// curves take both directions.
    pub fn orientation_classes(&self) -> Vec<Vec<bool>> {
        let m = self.curves().len();
        if m == 0 {
            return vec![vec![]];
        }
        (0..1usize << (m - 1))
            .map(|mask| {
                let mut flip = vec![false; m];
                for i in 1..m {
                    flip[i] = (mask >> (i - 1)) & 1 == 1;
                }
                flip
            })
            .collect()
    }
}
