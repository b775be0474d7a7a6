//! Polyhedral diagrams: medial maps of small planar base maps, with
//! algebraic tangles substituted at the 4-valent vertices.
//!
//! A base map is a simple connected planar map with minimum degree 3 and
//! every face of size at least 3. Its medial is a 4-valent planar map with
//! one vertex per base edge and no bigon faces: exactly Conway's basic
//! polyhedra once duplicates are removed (medial(G) = medial(G*)).

use std::collections::BTreeMap;
use std::rc::Rc;

use crate::plane::{Assembler, Node, PlaneDiagram, Port};
use crate::tangles::{instantiate, Corners, Tangle};

/// A planar map: adjacency rotation (counterclockwise neighbor order per
/// vertex) over vertices 0..v, with edges labelled by index.
#[derive(Debug, Clone)]
pub struct BaseMap {
    /// rotation[u] lists (neighbor, edge index) in counterclockwise order.
    pub rotation: Vec<Vec<(usize, usize)>>,
    pub edge_count: usize,
}

/// Darts are (edge, side); side 0 runs tail -> head of the stored edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Dart {
    edge: usize,
    side: usize,
}

struct DartMaps {
    /// next dart along the face to the left of the dart.
    next_in_face: Vec<Vec<Dart>>,
    face_sizes: Vec<usize>,
}

impl BaseMap {
    fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    /// Endpoints (tail, head) of each dart.
    fn dart_ends(&self) -> BTreeMap<Dart, (usize, usize)> {
        let mut ends = BTreeMap::new();
        for (u, neighbors) in self.rotation.iter().enumerate() {
            for &(v, e) in neighbors {
                // Each edge appears in two rotations; give side 0 to the
                // smaller endpoint.
                let side = if u < v { 0 } else { 1 };
                ends.insert(Dart { edge: e, side }, (u, v));
            }
        }
        ends
    }

    /// Face structure via next = sigma(twin(d)) with sigma the
    /// counterclockwise rotation; returns None if the rotation system is
    /// not a sphere embedding (Euler check).
    fn trace_faces(&self) -> Option<DartMaps> {
        let ends = self.dart_ends();
        let succ = |d: Dart| -> Dart {
            // twin
            let twin = Dart { edge: d.edge, side: 1 - d.side };
            let (tail, _head) = ends[&twin];
            // sigma at the twin's tail: find the twin among the rotation
            // and take the next counterclockwise entry.
            let neighbors = &self.rotation[tail];
            let pos = neighbors
                .iter()
                .position(|&(v, e)| e == twin.edge && v == ends[&twin].1)
                .expect("dart present in rotation");
            let (nv, ne) = neighbors[(pos + 1) % neighbors.len()];
            let side = if tail < nv { 0 } else { 1 };
            Dart { edge: ne, side }
        };

        let mut next_map: BTreeMap<Dart, Dart> = BTreeMap::new();
        for (&d, _) in &ends {
            next_map.insert(d, succ(d));
        }

        // Count face orbits.
        let mut seen: std::collections::HashSet<Dart> = Default::default();
        let mut face_sizes = Vec::new();
        for (&start, _) in &ends {
            if seen.contains(&start) {
                continue;
            }
            let mut size = 0;
            let mut d = start;
            loop {
                seen.insert(d);
                size += 1;
                d = next_map[&d];
                if d == start {
                    break;
                }
            }
            face_sizes.push(size);
        }
        let v = self.vertex_count() as i64;
        let e = self.edge_count as i64;
        let f = face_sizes.len() as i64;
        if v - e + f != 2 {
            return None;
        }
        let mut next_in_face = vec![vec![Dart { edge: 0, side: 0 }; 2]; self.edge_count];
        for (&d, &nd) in &next_map {
            next_in_face[d.edge][d.side] = nd;
        }
        Some(DartMaps {
            next_in_face,
            face_sizes,
        })
    }
}

/// All sphere embeddings (rotation systems) of the graph given by an edge
/// list, kept when every face has size >= 3.
fn embeddings(v: usize, edges: &[(usize, usize)]) -> Vec<BaseMap> {
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); v];
    for (i, &(a, b)) in edges.iter().enumerate() {
        incident[a].push((b, i));
        incident[b].push((a, i));
    }
    // Fix the first vertex's rotation (sphere symmetry), permute the rest.
    let mut results = Vec::new();
    let mut rotation: Vec<Vec<(usize, usize)>> = vec![Vec::new(); v];
    rotation[0] = incident[0].clone();

    fn rec(
        u: usize,
        v: usize,
        incident: &[Vec<(usize, usize)>],
        rotation: &mut Vec<Vec<(usize, usize)>>,
        edge_count: usize,
        results: &mut Vec<BaseMap>,
    ) {
        if u == v {
            let map = BaseMap {
                rotation: rotation.clone(),
                edge_count,
            };
            if let Some(faces) = map.trace_faces() {
                if faces.face_sizes.iter().all(|&s| s >= 3) {
                    results.push(map);
                }
            }
            return;
        }
        // Cyclic orders: fix the first entry, permute the remainder.
        let items = &incident[u];
        let mut rest: Vec<(usize, usize)> = items[1..].to_vec();
        permute(&mut rest, 0, &mut |perm| {
            let mut order = vec![items[0]];
            order.extend_from_slice(perm);
            rotation[u] = order;
            rec(u + 1, v, incident, rotation, edge_count, results);
        });
        rotation[u] = Vec::new();
    }

    fn permute<F: FnMut(&[(usize, usize)])>(
        items: &mut Vec<(usize, usize)>,
        k: usize,
        f: &mut F,
    ) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, f);
            items.swap(k, i);
        }
    }

    rec(1, v, &incident, &mut rotation, edges.len(), &mut results);
    results
}

/// The medial of a base map as a 4-regular map, for canonical comparison:
/// dual base maps share their medial (the basic polyhedron itself).
fn medial_as_base_map(map: &BaseMap) -> BaseMap {
    let faces = map.trace_faces().expect("sphere map");
    // Medial edge per dart; endpoints are (edge-as-vertex, slot).
    let mut rotation: Vec<Vec<(usize, usize)>> = vec![vec![(0, 0); 4]; map.edge_count];
    let mut edge_id = 0usize;
    for e in 0..map.edge_count {
        for side in 0..2 {
            let nd = faces.next_in_face[e][side];
            let from_slot = if side == 0 { 0 } else { 2 };
            let to_slot = if nd.side == 0 { 1 } else { 3 };
            rotation[e][from_slot] = (nd.edge, edge_id);
            rotation[nd.edge][to_slot] = (e, edge_id);
            edge_id += 1;
        }
    }
    BaseMap {
        rotation,
        edge_count: edge_id,
    }
}

/// Enumerate base maps with `e` edges: simple connected graphs on up to 6
/// vertices, min degree 3, embedded with all faces >= 3. Deduplicated by a
/// canonical encoding of the medial map, so each basic polyhedron appears
/// once.
pub fn base_maps(e: usize) -> Vec<BaseMap> {
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for v in 4..=6usize {
        // Degree sum = 2e over v vertices, min degree 3.
        if 3 * v > 2 * e {
            continue;
        }
        let all_pairs: Vec<(usize, usize)> = (0..v)
            .flat_map(|a| (a + 1..v).map(move |b| (a, b)))
            .collect();
        let m = all_pairs.len();
        if e > m {
            continue;
        }
        // All e-subsets of the vertex pairs.
        let mut idx: Vec<usize> = (0..e).collect();
        'combos: loop {
            let edges: Vec<(usize, usize)> = idx.iter().map(|&i| all_pairs[i]).collect();
            if valid_graph(v, &edges) {
                for map in embeddings(v, &edges) {
                    let key = canonical_map_key(&medial_as_base_map(&map));
                    if seen.insert(key) {
                        out.push(map);
                    }
                }
            }
            // next combination
            let mut i = e;
            loop {
                if i == 0 {
                    break 'combos;
                }
                i -= 1;
                if idx[i] != i + m - e {
                    idx[i] += 1;
                    for j in i + 1..e {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    out
}

fn valid_graph(v: usize, edges: &[(usize, usize)]) -> bool {
    let mut deg = vec![0usize; v];
    for &(a, b) in edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    if deg.iter().any(|&d| d < 3) {
        return false;
    }
    // connectivity
    let mut adj = vec![Vec::new(); v];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; v];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Canonical string for a map: minimum BFS encoding over all starting darts
/// and both reflections.
fn canonical_map_key(map: &BaseMap) -> String {
    let mut best: Option<String> = None;
    for reflect in [false, true] {
        let rotation: Vec<Vec<(usize, usize)>> = if reflect {
            map.rotation
                .iter()
                .map(|r| {
                    let mut rr = r.clone();
                    rr.reverse();
                    rr
                })
                .collect()
        } else {
            map.rotation.clone()
        };
        let v = rotation.len();
        for start in 0..v {
            for first in 0..rotation[start].len() {
                // BFS relabeling: visit vertices in discovery order, each
                // vertex's rotation read cyclically from its discovery edge.
                let mut label = vec![usize::MAX; v];
                let mut order = Vec::new();
                label[start] = 0;
                order.push((start, first));
                let mut encoding = String::new();
                let mut qi = 0;
                while qi < order.len() {
                    let (u, anchor) = order[qi];
                    qi += 1;
                    let rot = &rotation[u];
                    let k = rot.len();
                    for j in 0..k {
                        let (nbr, _) = rot[(anchor + j) % k];
                        if label[nbr] == usize::MAX {
                            label[nbr] = order.len();
                            // The neighbor's anchor is its edge back to u.
                            let back = rotation[nbr]
                                .iter()
                                .position(|&(x, _)| x == u)
                                .unwrap();
                            order.push((nbr, back));
                        }
                        encoding.push_str(&format!("{},", label[nbr]));
                    }
                    encoding.push(';');
                }
                if best.as_ref().map_or(true, |b| encoding < *b) {
                    best = Some(encoding);
                }
            }
        }
    }
    best.unwrap()
}

/// Substitute tangles at medial vertices and resolve to a plane diagram.
/// `subs[e]` is `None` for a bare crossing, or `Some((tangle, rotated))`
/// where `rotated` turns the tangle by 180 degrees.
pub fn medial_with_tangles(
    map: &BaseMap,
    subs: &[Option<(Rc<Tangle>, bool)>],
) -> PlaneDiagram {
    let faces = map.trace_faces().expect("base maps are sphere maps");
    let mut asm = Assembler::new();

    // Counterclockwise slots at the medial vertex of edge e:
    // [next(d0), prev(d0), next(d1), prev(d1)] with d0/d1 the two darts.
    // For a bare crossing these are ports 0..3; for a tangle the corners
    // (ne, nw, sw, se), optionally rotated by 180 degrees.
    let mut slot_nodes: Vec<[Node; 4]> = Vec::with_capacity(map.edge_count);
    for e in 0..map.edge_count {
        match &subs[e] {
            None => {
                let c = asm.crossing();
                slot_nodes.push([
                    Node::P(Port { crossing: c, slot: 0 }),
                    Node::P(Port { crossing: c, slot: 1 }),
                    Node::P(Port { crossing: c, slot: 2 }),
                    Node::P(Port { crossing: c, slot: 3 }),
                ]);
            }
            Some((tangle, rotated)) => {
                let Corners { nw, ne, se, sw } = instantiate(tangle, &mut asm);
                if *rotated {
                    slot_nodes.push([sw, se, ne, nw]);
                } else {
                    slot_nodes.push([ne, nw, sw, se]);
                }
            }
        }
    }

    // One medial edge per dart: from the "next" slot of this dart to the
    // "prev" slot of the following dart in the face.
    for e in 0..map.edge_count {
        for side in 0..2 {
            let nd = faces.next_in_face[e][side];
            let from = slot_nodes[e][if side == 0 { 0 } else { 2 }];
            let to = slot_nodes[nd.edge][if nd.side == 0 { 1 } else { 3 }];
            asm.connect(from, to);
        }
    }
    asm.resolve()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orientation_reports;

    #[test]
    fn basic_polyhedra_counts() {
        // Conway's basic polyhedra: one with 6 crossings, none with 7, one
        // with 8, one with 9, three with 10.
        assert_eq!(base_maps(6).len(), 1);
        assert_eq!(base_maps(7).len(), 0);
        assert_eq!(base_maps(8).len(), 1);
        assert_eq!(base_maps(9).len(), 1);
        assert_eq!(base_maps(10).len(), 3);
    }

    #[test]
    fn bare_octahedral_medial_is_a_three_component_ring() {
        // medial(K4) with bare crossings: three components, six crossings,
        // alternating, all-zero writhe split in every orientation.
        let k4 = &base_maps(6)[0];
        let subs = vec![None; 6];
        let pd = medial_with_tangles(k4, &subs);
        assert_eq!(pd.crossing_count(), 6);
        let reports = orientation_reports(&pd);
        assert_eq!(reports[0].1.c, 3);
        for (_, r) in &reports {
            assert!(r.alternating);
            assert!(r.reduced);
            assert_eq!(r.w, 0);
            assert_eq!((r.w_x, r.w_y), (0, 0));
        }
    }
}
