//! Parsers for the two diagram code grammars.
//!
//! pd-signed: statements separated by `;`, each `X+ a b c d` or `X- a b c d`
//! with positive integer arc labels, `a` the under-in arc and `c` the
//! under-out arc. The sign token is authoritative for the crossing sign. The
//! over-strand occupies `b` and `d`; its direction is recovered by requiring
//! every arc to be used exactly once as an in-slot and once as an out-slot.
//! Codes written with either planar handedness therefore parse; where both
//! directions of an over-strand would be consistent, the sign convention
//! (`+` runs d -> b, `-` runs b -> d) breaks the tie. The literals `unknot`
//! and `unlink <k>` stand for the crossing-free diagrams.
//!
//! gauss-signed: one parenthesized token sequence per component, tokens
//! `O<i><s>` / `U<i><s>` recording an over/under passage at crossing `i`
//! with sign `s`. Each crossing index must occur exactly once as `O` and
//! once as `U`, with matching signs.

use std::collections::BTreeMap;

use crate::diagram::{ArcId, Crossing, Diagram, Sign};
use crate::error::Error;

/// Input grammar selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeFormat {
    PdSigned,
    GaussSigned,
}

/// Parse a diagram code in the given format.
pub fn parse_diagram(text: &str, format: CodeFormat) -> Result<Diagram, Error> {
    match format {
        CodeFormat::PdSigned => parse_pd(text),
        CodeFormat::GaussSigned => parse_gauss(text),
    }
}

struct PdCrossing {
    sign: Sign,
    // Slots in code order: a = under-in, c = under-out, over strand on b, d.
    a: u32,
    b: u32,
    c: u32,
    d: u32,
}

fn parse_pd(text: &str) -> Result<Diagram, Error> {
    let statements: Vec<Vec<&str>> = text
        .split(';')
        .map(|s| s.split_whitespace().collect::<Vec<_>>())
        .filter(|v| !v.is_empty())
        .collect();

    if statements.is_empty() {
        return Err(Error::Degenerate(
            "zero crossings; use the `unknot` or `unlink <k>` literal".into(),
        ));
    }

    // Literals must stand alone.
    if let Some(first) = statements.first() {
        match first[0] {
            "unknot" => {
                if statements.len() > 1 || first.len() > 1 {
                    return Err(Error::Syntax("`unknot` must be the entire code".into()));
                }
                return Ok(Diagram::unknot());
            }
            "unlink" => {
                if statements.len() > 1 || first.len() != 2 {
                    return Err(Error::Syntax("expected `unlink <k>` as the entire code".into()));
                }
                let k: usize = first[1]
                    .parse()
                    .map_err(|_| Error::Syntax(format!("bad unlink count `{}`", first[1])))?;
                return Diagram::unlink(k);
            }
            _ => {}
        }
    }

    let mut raw = Vec::with_capacity(statements.len());
    for stmt in &statements {
        let sign = match stmt[0] {
            "X+" => Sign::Positive,
            "X-" => Sign::Negative,
            tok => {
                return Err(Error::Syntax(format!(
                    "expected `X+` or `X-`, found `{tok}`"
                )))
            }
        };
        let mut labels = Vec::with_capacity(4);
        for tok in &stmt[1..] {
            let v: u32 = tok
                .parse()
                .map_err(|_| Error::Syntax(format!("bad arc label `{tok}`")))?;
            if v == 0 {
                return Err(Error::Syntax("arc labels must be positive".into()));
            }
            labels.push(v);
        }
        if labels.len() != 4 {
            return Err(Error::ArcConsistency(format!(
                "crossing `{}` lists {} arcs, expected 4",
                stmt.join(" "),
                labels.len()
            )));
        }
        raw.push(PdCrossing {
            sign,
            a: labels[0],
            b: labels[1],
            c: labels[2],
            d: labels[3],
        });
    }

    let crossings = resolve_over_directions(&raw)?;
    let mut labels: Vec<u32> = raw
        .iter()
        .flat_map(|x| [x.a, x.b, x.c, x.d])
        .collect();
    labels.sort_unstable();
    labels.dedup();
    let dense = |v: u32| ArcId(labels.binary_search(&v).expect("label interned"));
    let crossings = crossings
        .into_iter()
        .map(|(sign, (ui, uo, oi, oo))| Crossing {
            under_in: dense(ui),
            under_out: dense(uo),
            over_in: dense(oi),
            over_out: dense(oo),
            sign,
        })
        .collect();
    Diagram::from_parts(crossings, labels, 0)
}

/// Occurrence of an arc label in some crossing slot.
#[derive(Clone, Copy)]
enum Occurrence {
    /// Under slots have a fixed direction; `is_in` marks the a-slot.
    Fixed { is_in: bool },
    /// Over slots b/d; direction depends on the crossing's orientation bit.
    /// `on_d` marks the d-slot, which is the over-in exactly when the bit is
    /// set.
    Flex { crossing: usize, on_d: bool },
}

/// Decide, for every crossing, which of `b`/`d` is the over-in slot.
///
/// Constraints ("each arc once in, once out") are equalities between the
/// per-crossing orientation bits, solved with a parity union-find. Bits left
/// free by the constraints default to the sign convention.
fn resolve_over_directions(
    raw: &[PdCrossing],
) -> Result<Vec<(Sign, (u32, u32, u32, u32))>, Error> {
    let n = raw.len();
    for x in raw {
        if x.a == x.c {
            return Err(Error::ArcConsistency(format!(
                "under-strand enters and leaves on the same arc {}",
                x.a
            )));
        }
        if x.b == x.d {
            return Err(Error::ArcConsistency(format!(
                "over-strand enters and leaves on the same arc {}",
                x.b
            )));
        }
    }

    let mut occurrences: BTreeMap<u32, Vec<Occurrence>> = BTreeMap::new();
    for (i, x) in raw.iter().enumerate() {
        occurrences.entry(x.a).or_default().push(Occurrence::Fixed { is_in: true });
        occurrences.entry(x.c).or_default().push(Occurrence::Fixed { is_in: false });
        occurrences.entry(x.b).or_default().push(Occurrence::Flex { crossing: i, on_d: false });
        occurrences.entry(x.d).or_default().push(Occurrence::Flex { crossing: i, on_d: true });
    }

    // Element n is the constant-false ground.
    let mut dsu = ParityDsu::new(n + 1);
    let ground = n;

    for (&label, occ) in &occurrences {
        if occ.len() != 2 {
            return Err(Error::ArcConsistency(format!(
                "arc {} appears {} time(s), expected exactly 2 (once in, once out)",
                label,
                occ.len()
            )));
        }
        let conflict = || {
            Error::ArcConsistency(format!(
                "arc {label} cannot be used once as an in-slot and once as an out-slot"
            ))
        };
        match (occ[0], occ[1]) {
            (Occurrence::Fixed { is_in: p }, Occurrence::Fixed { is_in: q }) => {
                if p == q {
                    return Err(conflict());
                }
            }
            (Occurrence::Fixed { is_in }, Occurrence::Flex { crossing, on_d })
            | (Occurrence::Flex { crossing, on_d }, Occurrence::Fixed { is_in }) => {
                // Flex slot must take the opposite role. The d-slot is an
                // in-slot exactly when the bit is true, the b-slot when it
                // is false.
                let bit = on_d != is_in;
                if !dsu.union(crossing, ground, bit) {
                    return Err(conflict());
                }
            }
            (
                Occurrence::Flex { crossing: i, on_d: di },
                Occurrence::Flex { crossing: j, on_d: dj },
            ) => {
                if i == j {
                    // b and d of one crossing share the arc; one is in, one
                    // is out for either bit value.
                    continue;
                }
                // Exactly one of the two slots is an in-slot:
                // (x_i ^ !di) ^ (x_j ^ !dj) = 1  =>  x_i ^ x_j = 1 ^ di ^ dj.
                let parity = !(di ^ dj);
                if !dsu.union(i, j, parity) {
                    return Err(conflict());
                }
            }
        }
    }

    // Pin the bits the constraints left free, lowest crossing first, to the
    // sign-preferred direction (`+`: over runs d -> b).
    for i in 0..n {
        if !dsu.connected(i, ground) {
            let preferred = raw[i].sign == Sign::Positive;
            let pinned = dsu.union(i, ground, preferred);
            debug_assert!(pinned);
        }
    }

    Ok(raw
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let over_in_on_d = dsu.parity_vs(i, ground);
            let (oi, oo) = if over_in_on_d { (x.d, x.b) } else { (x.b, x.d) };
            (x.sign, (x.a, x.c, oi, oo))
        })
        .collect())
}

/// Union-find tracking the xor of each element with its root.
struct ParityDsu {
    parent: Vec<usize>,
    parity: Vec<bool>,
    rank: Vec<u8>,
}

impl ParityDsu {
    fn new(len: usize) -> Self {
        ParityDsu {
            parent: (0..len).collect(),
            parity: vec![false; len],
            rank: vec![0; len],
        }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        if self.parent[x] == x {
            return (x, false);
        }
        let (root, p) = self.find(self.parent[x]);
        self.parent[x] = root;
        self.parity[x] ^= p;
        (root, self.parity[x])
    }

    /// Constrain `a ^ b == parity`; false on contradiction.
    fn union(&mut self, a: usize, b: usize, parity: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return (pa ^ pb) == parity;
        }
        let (child, parent, p) = if self.rank[ra] < self.rank[rb] {
            (ra, rb, pa ^ pb ^ parity)
        } else {
            if self.rank[ra] == self.rank[rb] {
                self.rank[ra] += 1;
            }
            (rb, ra, pa ^ pb ^ parity)
        };
        self.parent[child] = parent;
        self.parity[child] = p;
        true
    }

    fn connected(&mut self, a: usize, b: usize) -> bool {
        self.find(a).0 == self.find(b).0
    }

    fn parity_vs(&mut self, a: usize, b: usize) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        debug_assert_eq!(ra, rb);
        pa ^ pb
    }
}

fn parse_gauss(text: &str) -> Result<Diagram, Error> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::Degenerate("empty gauss code".into()));
    }

    // Split into parenthesized component groups.
    let mut groups: Vec<Vec<&str>> = Vec::new();
    let mut rest = trimmed;
    while !rest.is_empty() {
        rest = rest.trim_start();
        if rest.is_empty() {
            break;
        }
        if !rest.starts_with('(') {
            return Err(Error::Syntax(format!(
                "expected `(` to open a component, found `{}`",
                rest.chars().next().unwrap()
            )));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::Syntax("unbalanced `(` in gauss code".into()))?;
        let inner = &rest[1..close];
        let tokens: Vec<&str> = inner
            .split(|ch: char| ch.is_whitespace() || ch == ',')
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.is_empty() {
            return Err(Error::Syntax("empty component `()` in gauss code".into()));
        }
        groups.push(tokens);
        rest = &rest[close + 1..];
    }
    if groups.is_empty() {
        return Err(Error::Degenerate("gauss code lists no components".into()));
    }

    struct Passages {
        sign: Sign,
        over: Option<(usize, usize)>,
        under: Option<(usize, usize)>,
    }
    let mut by_index: BTreeMap<u32, Passages> = BTreeMap::new();

    let mut arc_total = 0usize;
    for tokens in &groups {
        let m = tokens.len();
        let base = arc_total;
        for (j, tok) in tokens.iter().enumerate() {
            let bytes = tok.as_bytes();
            if bytes.len() < 3 {
                return Err(Error::Syntax(format!("bad gauss token `{tok}`")));
            }
            let is_over = match bytes[0] {
                b'O' => true,
                b'U' => false,
                _ => return Err(Error::Syntax(format!("bad gauss token `{tok}`"))),
            };
            let sign = match bytes[bytes.len() - 1] {
                b'+' => Sign::Positive,
                b'-' => Sign::Negative,
                _ => return Err(Error::Syntax(format!("gauss token `{tok}` lacks a sign"))),
            };
            let idx: u32 = tok[1..tok.len() - 1]
                .parse()
                .map_err(|_| Error::Syntax(format!("bad crossing index in `{tok}`")))?;
            let in_arc = base + (j + m - 1) % m;
            let out_arc = base + j;
            let entry = by_index.entry(idx).or_insert(Passages {
                sign,
                over: None,
                under: None,
            });
            if entry.sign != sign {
                return Err(Error::Syntax(format!(
                    "crossing {idx} is declared with conflicting signs"
                )));
            }
            let slot = if is_over { &mut entry.over } else { &mut entry.under };
            if slot.replace((in_arc, out_arc)).is_some() {
                return Err(Error::ArcConsistency(format!(
                    "crossing {idx} has a duplicate {} passage",
                    if is_over { "over" } else { "under" }
                )));
            }
        }
        arc_total += m;
    }

    let mut crossings = Vec::with_capacity(by_index.len());
    for (idx, p) in by_index {
        let (over, under) = match (p.over, p.under) {
            (Some(o), Some(u)) => (o, u),
            (o, _) => {
                return Err(Error::ArcConsistency(format!(
                    "crossing {idx} lacks {} passage",
                    if o.is_none() { "an over" } else { "an under" }
                )))
            }
        };
        crossings.push(Crossing {
            under_in: ArcId(under.0),
            under_out: ArcId(under.1),
            over_in: ArcId(over.0),
            over_out: ArcId(over.1),
            sign: p.sign,
        });
    }

    let labels: Vec<u32> = (1..=arc_total as u32).collect();
    Diagram::from_parts(crossings, labels, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_trefoil_matches_pd_trefoil() {
        let g = parse_diagram("(O1+ U2+ O3+ U1+ O2+ U3+)", CodeFormat::GaussSigned).unwrap();
        assert_eq!(g.crossing_count(), 3);
        assert_eq!(g.component_count(), 1);
        assert_eq!(g.writhe(), 3);
        assert!(g.is_alternating());
    }

    #[test]
    fn gauss_hopf_link() {
        let g = parse_diagram("(O1+ U2+) (U1+ O2+)", CodeFormat::GaussSigned).unwrap();
        assert_eq!(g.crossing_count(), 2);
        assert_eq!(g.component_count(), 2);
        assert_eq!(g.writhe(), 2);
        assert!(g.is_alternating());
    }

    #[test]
    fn gauss_sign_conflict_is_rejected() {
        let err = parse_diagram("(O1+ U1-)", CodeFormat::GaussSigned).unwrap_err();
        assert!(matches!(err, Error::Syntax(_)), "got {err:?}");
    }

    #[test]
    fn gauss_unbalanced_passage_is_rejected() {
        let err = parse_diagram("(O1+ O1+)", CodeFormat::GaussSigned).unwrap_err();
        assert!(matches!(err, Error::ArcConsistency(_)), "got {err:?}");
    }

    #[test]
    fn pd_rejects_malformed_tokens() {
        for bad in ["X* 1 2 3 4", "X+ 1 2 three 4", "X+ 0 1 2 3", "hello"] {
            let err = parse_diagram(bad, CodeFormat::PdSigned).unwrap_err();
            assert!(matches!(err, Error::Syntax(_)), "{bad}: got {err:?}");
        }
    }

    #[test]
    fn pd_rejects_empty_input() {
        for bad in ["", "  ;  ; "] {
            let err = parse_diagram(bad, CodeFormat::PdSigned).unwrap_err();
            assert!(matches!(err, Error::Degenerate(_)), "{bad:?}: got {err:?}");
        }
    }

    #[test]
    fn pd_rejects_literals_mixed_with_crossings() {
        let err = parse_diagram("unknot ; X+ 1 3 2 4", CodeFormat::PdSigned).unwrap_err();
        assert!(matches!(err, Error::Syntax(_)), "got {err:?}");
    }

    #[test]
    fn pd_accepts_either_handedness() {
        // The same trefoil written in the two possible slot conventions.
        let lhs = parse_diagram("X+ 1 4 2 5 ; X+ 3 6 4 1 ; X+ 5 2 6 3", CodeFormat::PdSigned)
            .unwrap();
        let rhs = parse_diagram("X+ 1 5 2 4 ; X+ 3 1 4 6 ; X+ 5 3 6 2", CodeFormat::PdSigned)
            .unwrap();
        assert_eq!(lhs.writhe(), 3);
        assert_eq!(rhs.writhe(), 3);
        assert_eq!(lhs.component_count(), 1);
        assert_eq!(rhs.component_count(), 1);
        assert!(lhs.is_alternating() && rhs.is_alternating());
    }

    #[test]
    fn pd_rejects_unbalanced_arc_usage() {
        // Arc 1 would have to enter two crossings.
        let err =
            parse_diagram("X+ 1 3 2 4 ; X+ 1 4 2 3", CodeFormat::PdSigned).unwrap_err();
        assert!(matches!(err, Error::ArcConsistency(_)), "got {err:?}");
    }

    #[test]
    fn arc_labels_need_not_be_consecutive() {
        let d = parse_diagram(
            "X+ 10 40 20 50 ; X+ 30 60 40 10 ; X+ 50 20 60 30",
            CodeFormat::PdSigned,
        )
        .unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.writhe(), 3);
    }
}
