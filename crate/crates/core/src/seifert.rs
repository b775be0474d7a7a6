//! Seifert circles and the signed Seifert multigraph.
//!
//! Smoothing every crossing coherently with orientation (under-in joins
//! over-out, over-in joins under-out) splits the diagram into Seifert
//! circles. Crushing each circle to a vertex and replacing each crossing by
//! a signed edge between the two circles it touched yields the Seifert
//! graph. The circle count `s` and the graph's connected-component count `k`
//! drive everything downstream: a spanning forest has `s - k` edges and the
//! nullification number is `n - s + k`.

use crate::diagram::{ArcId, Diagram, Sign};
use crate::error::Error;

/// One Seifert circle: a cycle of arcs under the smoothing successor map.
/// Crossing-free unknot components yield circles with no arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertCircle {
    pub id: usize,
    pub arcs: Vec<ArcId>,
}

/// A signed edge of the Seifert graph; one per crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphEdge {
    /// Index of the crossing this connection came from.
    pub crossing: usize,
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

/// The signed Seifert multigraph of a diagram.
#[derive(Debug, Clone)]
pub struct SeifertGraph {
    circle_count: usize,
    edges: Vec<GraphEdge>,
    component_of: Vec<usize>,
    component_count: usize,
    alternating: bool,
}

impl SeifertGraph {
    /// Number of vertices, i.e. Seifert circles (the symbol `s`).
    pub fn circle_count(&self) -> usize {
        self.circle_count
    }

    /// Signed edges, indexed in crossing order (the symbol `n` counts them).
    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of connected components (the symbol `k`).
    pub fn component_count(&self) -> usize {
        self.component_count
    }

    /// Component id of a vertex.
    pub fn component_of(&self, vertex: usize) -> usize {
        self.component_of[vertex]
    }

    /// Whether the source diagram was alternating; the well-definedness
    /// guarantees only hold in that case.
    pub fn alternating(&self) -> bool {
        self.alternating
    }

    /// Adjacency lists as `(neighbor, edge index)` pairs.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.circle_count];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.u].push((e.v, i));
            adj[e.v].push((e.u, i));
        }
        adj
    }

    /// Plain-text adjacency dump, one `u v sign` line per edge.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            out.push_str(&format!("{} {} {}1\n", e.u, e.v, e.sign.symbol()));
        }
        out
    }
}

/// The Seifert circles of a diagram, in deterministic order.
pub fn seifert_circles(d: &Diagram) -> Vec<SeifertCircle> {
    let arc_count = d.arc_count();
    // Smoothing successor: under-in -> over-out, over-in -> under-out.
    let mut next = vec![usize::MAX; arc_count];
    for x in d.crossings() {
        next[x.under_in.0] = x.over_out.0;
        next[x.over_in.0] = x.under_out.0;
    }

    let mut circles = Vec::new();
    let mut seen = vec![false; arc_count];
    for start in 0..arc_count {
        if seen[start] {
            continue;
        }
        let mut arcs = Vec::new();
        let mut a = start;
        loop {
            seen[a] = true;
            arcs.push(ArcId(a));
            a = next[a];
            if a == start {
                break;
            }
        }
        circles.push(SeifertCircle {
            id: circles.len(),
            arcs,
        });
    }
    let crossing_free = d.components().iter().filter(|c| c.is_empty()).count();
    for _ in 0..crossing_free {
        circles.push(SeifertCircle {
            id: circles.len(),
            arcs: Vec::new(),
        });
    }
    circles
}

/// Build the signed Seifert multigraph.
///
/// Fails with [`Error::LoopEdge`] when a crossing's smoothing touches only
/// one circle, which cannot happen for codes describing a coherent oriented
/// diagram on the sphere.
pub fn build_seifert_graph(d: &Diagram) -> Result<SeifertGraph, Error> {
    let circles = seifert_circles(d);
    let mut circle_of = vec![usize::MAX; d.arc_count()];
    for c in &circles {
        for a in &c.arcs {
            circle_of[a.0] = c.id;
        }
    }

    let mut edges = Vec::with_capacity(d.crossing_count());
    for (i, x) in d.crossings().iter().enumerate() {
        let u = circle_of[x.under_in.0];
        let v = circle_of[x.over_in.0];
        if u == v {
            return Err(Error::LoopEdge {
                crossing: i,
                circle: u,
            });
        }
        edges.push(GraphEdge {
            crossing: i,
            u,
            v,
            sign: x.sign,
        });
    }

    let mut dsu = Dsu::new(circles.len());
    for e in &edges {
        dsu.union(e.u, e.v);
    }
    let mut component_of = vec![0usize; circles.len()];
    let mut roots: Vec<usize> = Vec::new();
    for v in 0..circles.len() {
        let r = dsu.find(v);
        let id = match roots.iter().position(|&x| x == r) {
            Some(p) => p,
            None => {
                roots.push(r);
                roots.len() - 1
            }
        };
        component_of[v] = id;
    }

    Ok(SeifertGraph {
        circle_count: circles.len(),
        edges,
        component_of,
        component_count: roots.len(),
        alternating: d.is_alternating(),
    })
}

/// Number of connected components of the graph (the symbol `k`).
pub fn split_components(g: &SeifertGraph) -> usize {
    g.component_count()
}

/// True iff no edge is a bridge. Bridges correspond to nugatory crossings,
/// so this decides the reduced property. Parallel edges are never bridges.
pub fn is_reduced(g: &SeifertGraph) -> bool {
    find_bridges(g).is_empty()
}

/// Indices of all bridge edges.
pub fn find_bridges(g: &SeifertGraph) -> Vec<usize> {
    let n = g.circle_count();
    let adj = g.adjacency();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut bridges = Vec::new();

    // Iterative DFS; each frame is (vertex, entering edge, next adj index).
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while !stack.is_empty() {
            let top = stack.len() - 1;
            let (v, via) = (stack[top].0, stack[top].1);
            if stack[top].2 < adj[v].len() {
                let (to, eid) = adj[v][stack[top].2];
                stack[top].2 += 1;
                if eid == via {
                    continue;
                }
                if disc[to] == usize::MAX {
                    disc[to] = timer;
                    low[to] = timer;
                    timer += 1;
                    stack.push((to, eid, 0));
                } else {
                    low[v] = low[v].min(disc[to]);
                }
            } else {
                stack.pop();
                if let Some(&(parent, _, _)) = stack.last() {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        bridges.push(via);
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    bridges
}

/// Every set of parallel edges (same endpoint pair) carries a single sign.
/// Holds for alternating diagrams.
pub fn parallel_classes_monochromatic(g: &SeifertGraph) -> bool {
    use std::collections::HashMap;
    let mut class_sign: HashMap<(usize, usize), Sign> = HashMap::new();
    for e in g.edges() {
        let key = (e.u.min(e.v), e.u.max(e.v));
        match class_sign.insert(key, e.sign) {
            Some(prev) if prev != e.sign => return false,
            _ => {}
        }
    }
    true
}

/// Minimal union-find used for component counting.
pub(crate) struct Dsu {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl Dsu {
    pub(crate) fn new(len: usize) -> Self {
        Dsu {
            parent: (0..len).collect(),
            rank: vec![0; len],
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            self.parent[x] = self.find(self.parent[x]);
        }
        self.parent[x]
    }

    /// Returns false if the two were already connected.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.rank[ra] < self.rank[rb] {
            self.parent[ra] = rb;
        } else {
            if self.rank[ra] == self.rank[rb] {
                self.rank[ra] += 1;
            }
            self.parent[rb] = ra;
        }
        true
    }
}
