//! The writhe split and its well-definedness checks.
//!
//! Nullifying a maximal set of crossings without disconnecting the diagram
//! corresponds, in the Seifert graph, to removing the complement of a
//! spanning forest. The removed signs sum to the nullification writhe `w_x`,
//! the forest signs to the remaining writhe `w_y`, and `w = w_x + w_y` holds
//! for any forest. For reduced alternating diagrams the pair (w_x, w_y) does
//! not depend on the forest: parallel edges share a sign and so do all
//! cycles, which the verifiers below check empirically by exhaustive forest
//! enumeration (when the forest count is small) or seeded sampling.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::ser::{Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;

use crate::diagram::Diagram;
use crate::error::Error;
use crate::seifert::{build_seifert_graph, is_reduced, Dsu, SeifertGraph};

/// Forest count threshold below which independence checks enumerate every
/// spanning forest instead of sampling.
pub const DEFAULT_EXHAUSTIVE_BOUND: u128 = 10_000;

/// A maximal acyclic edge subset of a Seifert graph, one tree per connected
/// component; always `s - k` edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningForest {
    /// Sorted indices into the graph's edge list.
    pub edges: Vec<usize>,
}

impl SpanningForest {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.edges.binary_search(&edge).is_ok()
    }
}

/// Deterministically select a spanning forest: shuffle the edges with a
/// seeded generator, then grow greedily.
pub fn spanning_forest(g: &SeifertGraph, seed: u64) -> SpanningForest {
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);
    let mut dsu = Dsu::new(g.circle_count());
    let mut edges: Vec<usize> = order
        .into_iter()
        .filter(|&i| {
            let e = g.edges()[i];
            dsu.union(e.u, e.v)
        })
        .collect();
    edges.sort_unstable();
    debug_assert_eq!(edges.len(), g.circle_count() - g.component_count());
    SpanningForest { edges }
}

/// The nullification number `o = n - s + k`: how many crossings any maximal
/// nullification removes.
pub fn nullification_number(g: &SeifertGraph) -> usize {
    // Evaluated as n + k - s; a connected component on v vertices carries at
    // least v - 1 edges, so this never underflows.
    g.edge_count() + g.component_count() - g.circle_count()
}

/// A writhe split `w = w_x + w_y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WritheSplit {
    pub w: i64,
    pub w_x: i64,
    pub w_y: i64,
}

/// Sum the signs of the nullified (non-forest) and remaining (forest) edges.
pub fn writhe_split(g: &SeifertGraph, f: &SpanningForest) -> WritheSplit {
    let mut in_forest = vec![false; g.edge_count()];
    for &i in &f.edges {
        in_forest[i] = true;
    }
    let (mut w_x, mut w_y) = (0i64, 0i64);
    for (i, e) in g.edges().iter().enumerate() {
        if in_forest[i] {
            w_y += e.sign.value();
        } else {
            w_x += e.sign.value();
        }
    }
    WritheSplit {
        w: w_x + w_y,
        w_x,
        w_y,
    }
}

/// Count spanning forests (product of per-component spanning-tree counts via
/// the integer matrix-tree determinant). Saturates at `u128::MAX` when the
/// arithmetic would overflow.
pub fn count_spanning_forests(g: &SeifertGraph) -> u128 {
    let mut total: u128 = 1;
    for comp in 0..g.component_count() {
        let verts: Vec<usize> = (0..g.circle_count())
            .filter(|&v| g.component_of(v) == comp)
            .collect();
        if verts.len() <= 1 {
            continue;
        }
        let index: HashMap<usize, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let m = verts.len();
        let mut lap = vec![vec![0i128; m]; m];
        for e in g.edges() {
            if g.component_of(e.u) != comp {
                continue;
            }
            let (a, b) = (index[&e.u], index[&e.v]);
            lap[a][a] += 1;
            lap[b][b] += 1;
            lap[a][b] -= 1;
            lap[b][a] -= 1;
        }
        let minor: Vec<Vec<i128>> = lap[..m - 1]
            .iter()
            .map(|row| row[..m - 1].to_vec())
            .collect();
        match integer_determinant(minor) {
            Some(trees) if trees >= 0 => {
                total = total.saturating_mul(trees as u128);
            }
            _ => return u128::MAX,
        }
    }
    total
}

/// Fraction-free Gaussian elimination (Bareiss); exact over the integers.
/// `None` on i128 overflow.
fn integer_determinant(mut m: Vec<Vec<i128>>) -> Option<i128> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].checked_mul(m[k][k])?;
                let b = m[i][k].checked_mul(m[k][j])?;
                m[i][j] = a.checked_sub(b)? / prev;
            }
        }
        prev = m[k][k];
    }
    Some(sign * m[n - 1][n - 1])
}

/// Enumerate every spanning forest, aborting with `None` if more than
/// `bound` would be produced.
pub fn enumerate_spanning_forests(
    g: &SeifertGraph,
    bound: usize,
) -> Option<Vec<SpanningForest>> {
    let target = g.circle_count() - g.component_count();
    let mut result = Vec::new();
    let mut chosen = Vec::new();
    if backtrack(g, target, 0, &mut chosen, &mut result, bound) {
        Some(result)
    } else {
        None
    }
}

fn backtrack(
    g: &SeifertGraph,
    target: usize,
    idx: usize,
    chosen: &mut Vec<usize>,
    result: &mut Vec<SpanningForest>,
    bound: usize,
) -> bool {
    if chosen.len() == target {
        if result.len() >= bound {
            return false;
        }
        result.push(SpanningForest {
            edges: chosen.clone(),
        });
        return true;
    }
    if idx == g.edge_count() {
        return true;
    }

    let rank_with = |chosen: &[usize], from: usize| -> usize {
        let mut dsu = Dsu::new(g.circle_count());
        let mut rank = 0;
        for &i in chosen {
            let e = g.edges()[i];
            if dsu.union(e.u, e.v) {
                rank += 1;
            }
        }
        for i in from..g.edge_count() {
            let e = g.edges()[i];
            if dsu.union(e.u, e.v) {
                rank += 1;
            }
        }
        rank
    };

    // Include edges[idx] if it joins two trees.
    let acyclic = {
        let mut dsu = Dsu::new(g.circle_count());
        for &i in chosen.iter() {
            let e = g.edges()[i];
            dsu.union(e.u, e.v);
        }
        let e = g.edges()[idx];
        dsu.union(e.u, e.v)
    };
    if acyclic {
        chosen.push(idx);
        let ok = backtrack(g, target, idx + 1, chosen, result, bound);
        chosen.pop();
        if !ok {
            return false;
        }
    }
    // Exclude edges[idx] if the rest can still span.
    if rank_with(chosen, idx + 1) == target {
        if !backtrack(g, target, idx + 1, chosen, result, bound) {
            return false;
        }
    }
    true
}

/// Empirically check that (w_x, w_y) does not depend on the forest choice:
/// exhaustively when at most `DEFAULT_EXHAUSTIVE_BOUND` forests exist,
/// otherwise across `trials` seeded samples.
///
/// Only meaningful for alternating diagrams; others are rejected.
pub fn verify_forest_independence(g: &SeifertGraph, trials: usize) -> Result<bool, Error> {
    verify_forest_independence_with_bound(g, trials, DEFAULT_EXHAUSTIVE_BOUND)
}

pub fn verify_forest_independence_with_bound(
    g: &SeifertGraph,
    trials: usize,
    bound: u128,
) -> Result<bool, Error> {
    if !g.alternating() {
        return Err(Error::NotAlternating(
            "forest independence is only asserted for alternating diagrams".into(),
        ));
    }
    let trials = trials.max(1);
    let reference = writhe_split(g, &spanning_forest(g, 0));

    let count = count_spanning_forests(g);
    if count <= bound {
        let forests = enumerate_spanning_forests(g, count as usize)
            .expect("enumeration fits the counted bound");
        debug_assert_eq!(forests.len() as u128, count);
        if !forests
            .iter()
            .all(|f| writhe_split(g, f) == reference)
        {
            return Ok(false);
        }
    }
    for seed in 0..trials as u64 {
        if writhe_split(g, &spanning_forest(g, seed)) != reference {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every non-forest edge closes a fundamental cycle in the forest; check
/// each such cycle carries a single sign. With monochromatic parallel
/// classes this implies forest independence for alternating diagrams.
pub fn fundamental_cycles_monochromatic(g: &SeifertGraph, f: &SpanningForest) -> bool {
    let mut adj = vec![Vec::new(); g.circle_count()];
    for &i in &f.edges {
        let e = g.edges()[i];
        adj[e.u].push((e.v, i));
        adj[e.v].push((e.u, i));
    }
    for (i, e) in g.edges().iter().enumerate() {
        if f.contains(i) {
            continue;
        }
        let Some(path) = forest_path(&adj, g.circle_count(), e.u, e.v) else {
            return false;
        };
        if path.iter().any(|&pe| g.edges()[pe].sign != e.sign) {
            return false;
        }
    }
    true
}

/// Edge indices along the unique forest path between two vertices.
fn forest_path(
    adj: &[Vec<(usize, usize)>],
    n: usize,
    from: usize,
    to: usize,
) -> Option<Vec<usize>> {
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut visited = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    visited[from] = true;
    queue.push_back(from);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &(u, eid) in &adj[v] {
            if !visited[u] {
                visited[u] = true;
                prev[u] = Some((v, eid));
                queue.push_back(u);
            }
        }
    }
    if !visited[to] {
        return None;
    }
    let mut path = Vec::new();
    let mut v = to;
    while v != from {
        let (p, eid) = prev[v]?;
        path.push(eid);
        v = p;
    }
    Some(path)
}

/// Why a diagram was judged chiral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiralReason {
    /// Non-zero nullification or remaining writhe.
    NonzeroWxWy,
    /// Non-split alternating link with an even number of components.
    EvenComponents,
}

impl ChiralReason {
    pub fn as_str(self) -> &'static str {
        match self {
            ChiralReason::NonzeroWxWy => "nonzero_wx_wy",
            ChiralReason::EvenComponents => "even_components",
        }
    }
}

/// One-sided chirality verdict; the method never certifies achirality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Chiral(Vec<ChiralReason>),
    Undetermined,
}

impl Verdict {
    pub fn is_chiral(&self) -> bool {
        matches!(self, Verdict::Chiral(_))
    }

    pub fn has_reason(&self, reason: ChiralReason) -> bool {
        match self {
            Verdict::Chiral(reasons) => reasons.contains(&reason),
            Verdict::Undetermined => false,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Undetermined => f.write_str("undetermined"),
            Verdict::Chiral(reasons) => {
                let list: Vec<&str> = reasons.iter().map(|r| r.as_str()).collect();
                write!(f, "chiral({})", list.join(","))
            }
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// All computed quantities for one diagram.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct InvariantReport {
    /// Crossing count.
    pub n: usize,
    /// Seifert circle count.
    pub s: usize,
    /// Connected components of the Seifert graph (split pieces).
    pub k: usize,
    /// Link components.
    pub c: usize,
    /// Nullification number `n - s + k`.
    pub o: usize,
    pub w: i64,
    pub w_x: i64,
    pub w_y: i64,
    pub alternating: bool,
    pub reduced: bool,
    pub split: bool,
    pub verdict: Verdict,
    pub warnings: Vec<String>,
}

/// Compute the full report, selecting the forest with the given seed. The
/// seed only matters for non-alternating or non-reduced inputs, whose
/// writhe split is forest-dependent and flagged as such.
pub fn report_with_seed(d: &Diagram, seed: u64) -> Result<InvariantReport, Error> {
    let g = build_seifert_graph(d)?;
    let n = d.crossing_count();
    let c = d.component_count();
    let s = g.circle_count();
    let k = g.component_count();
    let alternating = g.alternating();
    let reduced = is_reduced(&g);
    let split = k > 1;
    let forest = spanning_forest(&g, seed);
    let ws = writhe_split(&g, &forest);
    let o = nullification_number(&g);

    let mut reasons = Vec::new();
    if alternating && reduced {
        if ws.w_x != 0 || ws.w_y != 0 {
            reasons.push(ChiralReason::NonzeroWxWy);
        }
        if !split && c % 2 == 0 {
            reasons.push(ChiralReason::EvenComponents);
        }
    }
    let verdict = if reasons.is_empty() {
        Verdict::Undetermined
    } else {
        Verdict::Chiral(reasons)
    };

    let mut warnings = Vec::new();
    if !alternating {
        warnings.push("not_invariant:not_alternating".to_string());
    }
    if !reduced {
        warnings.push("not_invariant:not_reduced".to_string());
    }

    Ok(InvariantReport {
        n,
        s,
        k,
        c,
        o,
        w: ws.w,
        w_x: ws.w_x,
        w_y: ws.w_y,
        alternating,
        reduced,
        split,
        verdict,
        warnings,
    })
}

/// [`report_with_seed`] with the default seed 0.
pub fn chirality_verdict(d: &Diagram) -> Result<InvariantReport, Error> {
    report_with_seed(d, 0)
}

/// Check `o = c - 1 (mod 2)`: each nullification step flips the component
/// parity and a non-split diagram ends at one component.
pub fn verify_parity_law(d: &Diagram) -> Result<bool, Error> {
    let g = build_seifert_graph(d)?;
    if g.component_count() > 1 {
        return Err(Error::NotApplicable(
            "the parity law applies to non-split diagrams only".into(),
        ));
    }
    let o = nullification_number(&g);
    let c = d.component_count();
    Ok(o % 2 == (c + 1) % 2)
}

/// Check `w_x(K*) = -w_x(K)`, `w_y(K*) = -w_y(K)` and `o(K*) = o(K)` using
/// the corresponding forest on the mirror (whose Seifert graph has the same
/// shape with negated signs); for alternating inputs an independently
/// seeded forest must agree as well.
pub fn verify_mirror_antisymmetry(d: &Diagram) -> Result<bool, Error> {
    let g = build_seifert_graph(d)?;
    let gm = build_seifert_graph(&d.mirror())?;
    let f = spanning_forest(&g, 0);
    let ws = writhe_split(&g, &f);
    let wsm = writhe_split(&gm, &f);
    let mut ok = wsm.w_x == -ws.w_x
        && wsm.w_y == -ws.w_y
        && nullification_number(&g) == nullification_number(&gm);
    if ok && g.alternating() {
        let independent = writhe_split(&gm, &spanning_forest(&gm, 0x5eed));
        ok = independent.w_x == -ws.w_x && independent.w_y == -ws.w_y;
    }
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_diagram, CodeFormat};
    use crate::fixtures;

    fn graph(code: &str) -> SeifertGraph {
        let d = parse_diagram(code, CodeFormat::PdSigned).unwrap();
        build_seifert_graph(&d).unwrap()
    }

    fn report(code: &str) -> InvariantReport {
        let d = parse_diagram(code, CodeFormat::PdSigned).unwrap();
        chirality_verdict(&d).unwrap()
    }

    #[test]
    fn trefoil_splits_as_two_plus_one() {
        let g = graph(fixtures::RIGHT_TREFOIL);
        assert_eq!(nullification_number(&g), 2);
        for seed in 0..20 {
            let f = spanning_forest(&g, seed);
            assert_eq!(f.len(), 1);
            let ws = writhe_split(&g, &f);
            assert_eq!((ws.w, ws.w_x, ws.w_y), (3, 2, 1));
        }
    }

    #[test]
    fn figure_eight_splits_as_all_zero() {
        let g = graph(fixtures::FIGURE_EIGHT);
        assert_eq!(nullification_number(&g), 2);
        let f = spanning_forest(&g, 7);
        assert_eq!(f.len(), 2);
        assert_eq!(
            writhe_split(&g, &f),
            WritheSplit { w: 0, w_x: 0, w_y: 0 }
        );
    }

    #[test]
    fn hopf_splits_as_one_plus_one() {
        let g = graph(fixtures::POSITIVE_HOPF);
        assert_eq!(nullification_number(&g), 1);
        let ws = writhe_split(&g, &spanning_forest(&g, 0));
        assert_eq!((ws.w, ws.w_x, ws.w_y), (2, 1, 1));
    }

    #[test]
    fn forest_counts_match_hand_enumeration() {
        assert_eq!(count_spanning_forests(&graph(fixtures::RIGHT_TREFOIL)), 3);
        assert_eq!(count_spanning_forests(&graph(fixtures::FIGURE_EIGHT)), 4);
        assert_eq!(count_spanning_forests(&graph(fixtures::POSITIVE_HOPF)), 2);
        assert_eq!(count_spanning_forests(&graph("unlink 3")), 1);
    }

    #[test]
    fn enumeration_agrees_with_the_count() {
        for code in [
            fixtures::RIGHT_TREFOIL,
            fixtures::FIGURE_EIGHT,
            fixtures::POSITIVE_HOPF,
            fixtures::CHAIN_3,
            fixtures::BRIDGED_TREFOILS,
        ] {
            let g = graph(code);
            let count = count_spanning_forests(&g);
            let forests = enumerate_spanning_forests(&g, 100_000).unwrap();
            assert_eq!(forests.len() as u128, count, "{code}");
            for f in &forests {
                assert_eq!(f.len(), g.circle_count() - g.component_count());
            }
        }
    }

    #[test]
    fn figure_eight_independence_is_exhaustive_over_four_forests() {
        let g = graph(fixtures::FIGURE_EIGHT);
        let forests = enumerate_spanning_forests(&g, 100).unwrap();
        assert_eq!(forests.len(), 4);
        assert!(verify_forest_independence(&g, 100).unwrap());
        for f in &forests {
            assert_eq!(
                writhe_split(&g, f),
                WritheSplit { w: 0, w_x: 0, w_y: 0 }
            );
        }
    }

    #[test]
    fn trefoil_independence_three_forests() {
        let g = graph(fixtures::RIGHT_TREFOIL);
        assert!(verify_forest_independence(&g, 100).unwrap());
    }

    #[test]
    fn independence_rejects_non_alternating_input() {
        let g = graph("X+ 1 4 2 5 ; X+ 3 6 4 1 ; X- 2 5 3 6");
        let err = verify_forest_independence(&g, 10).unwrap_err();
        assert!(matches!(err, Error::NotAlternating(_)), "got {err:?}");
    }

    #[test]
    fn fundamental_cycles_are_monochromatic_on_alternating_fixtures() {
        for code in [
            fixtures::RIGHT_TREFOIL,
            fixtures::FIGURE_EIGHT,
            fixtures::POSITIVE_HOPF,
            fixtures::CHAIN_3,
            fixtures::BRIDGED_TREFOILS,
        ] {
            let g = graph(code);
            let f = spanning_forest(&g, 3);
            assert!(fundamental_cycles_monochromatic(&g, &f), "{code}");
        }
    }

    #[test]
    fn trefoil_report() {
        let r = report(fixtures::RIGHT_TREFOIL);
        assert_eq!((r.n, r.s, r.k, r.c, r.o), (3, 2, 1, 1, 2));
        assert_eq!((r.w, r.w_x, r.w_y), (3, 2, 1));
        assert!(r.alternating && r.reduced && !r.split);
        assert!(r.verdict.has_reason(ChiralReason::NonzeroWxWy));
        assert!(!r.verdict.has_reason(ChiralReason::EvenComponents));
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn figure_eight_report_is_undetermined() {
        let r = report(fixtures::FIGURE_EIGHT);
        assert_eq!((r.n, r.s, r.o), (4, 3, 2));
        assert_eq!((r.w, r.w_x, r.w_y), (0, 0, 0));
        assert_eq!(r.verdict, Verdict::Undetermined);
    }

    #[test]
    fn hopf_report_has_both_reasons() {
        let r = report(fixtures::POSITIVE_HOPF);
        assert_eq!((r.n, r.s, r.o, r.c), (2, 2, 1, 2));
        assert_eq!((r.w, r.w_x, r.w_y), (2, 1, 1));
        assert!(r.verdict.has_reason(ChiralReason::NonzeroWxWy));
        assert!(r.verdict.has_reason(ChiralReason::EvenComponents));
        assert_eq!(r.verdict.to_string(), "chiral(nonzero_wx_wy,even_components)");
    }

    #[test]
    fn non_reduced_input_is_undetermined_with_warning() {
        let r = report(fixtures::BRIDGED_TREFOILS);
        assert_eq!(r.w, 7);
        assert!(!r.reduced);
        assert_eq!(r.verdict, Verdict::Undetermined);
        assert_eq!(r.warnings, vec!["not_invariant:not_reduced".to_string()]);
    }

    #[test]
    fn split_even_component_diagram_does_not_use_the_parity_rule() {
        let r = report(fixtures::SPLIT_TREFOILS);
        assert!(r.split);
        assert_eq!(r.c, 2);
        assert!(r.verdict.has_reason(ChiralReason::NonzeroWxWy));
        assert!(!r.verdict.has_reason(ChiralReason::EvenComponents));
    }

    #[test]
    fn degenerate_reports_are_all_zero() {
        let u = report("unknot");
        assert_eq!((u.n, u.s, u.k, u.c, u.o), (0, 1, 1, 1, 0));
        assert_eq!((u.w, u.w_x, u.w_y), (0, 0, 0));
        assert_eq!(u.verdict, Verdict::Undetermined);

        let l = report("unlink 3");
        assert_eq!((l.n, l.s, l.k, l.c, l.o), (0, 3, 3, 3, 0));
        assert!(l.split);
        assert_eq!(l.verdict, Verdict::Undetermined);
    }

    #[test]
    fn parity_law_on_fixtures() {
        for code in [fixtures::RIGHT_TREFOIL, fixtures::POSITIVE_HOPF, fixtures::CHAIN_3] {
            let d = parse_diagram(code, CodeFormat::PdSigned).unwrap();
            assert!(verify_parity_law(&d).unwrap(), "{code}");
        }
        let split = parse_diagram(fixtures::SPLIT_TREFOILS, CodeFormat::PdSigned).unwrap();
        let err = verify_parity_law(&split).unwrap_err();
        assert!(matches!(err, Error::NotApplicable(_)), "got {err:?}");
    }

    #[test]
    fn mirror_antisymmetry_on_fixtures() {
        for code in [
            fixtures::RIGHT_TREFOIL,
            fixtures::FIGURE_EIGHT,
            fixtures::POSITIVE_HOPF,
            fixtures::CHAIN_3,
            fixtures::SPLIT_TREFOILS,
        ] {
            let d = parse_diagram(code, CodeFormat::PdSigned).unwrap();
            assert!(verify_mirror_antisymmetry(&d).unwrap(), "{code}");
            let m = chirality_verdict(&d.mirror()).unwrap();
            let r = chirality_verdict(&d).unwrap();
            assert_eq!(m.w_x, -r.w_x, "{code}");
            assert_eq!(m.w_y, -r.w_y, "{code}");
            assert_eq!(m.o, r.o, "{code}");
        }
    }

    #[test]
    fn report_serializes_to_flat_json() {
        let r = report(fixtures::RIGHT_TREFOIL);
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            concat!(
                r#"{"n":3,"s":2,"k":1,"c":1,"o":2,"w":3,"w_x":2,"w_y":1,"#,
                r#""alternating":true,"reduced":true,"split":false,"#,
                r#""verdict":"chiral(nonzero_wx_wy)","warnings":[]}"#
            )
        );
    }
}
