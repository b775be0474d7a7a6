//! Oriented link diagrams: crossing records, validation, components,
//! alternation, mirroring.
//!
//! A diagram is a list of crossings wired together by arcs. Every arc enters
//! exactly one crossing and leaves exactly one crossing; following
//! `under_in -> under_out` and `over_in -> over_out` decomposes the arcs into
//! the oriented strand components of the link.

mod braid;
mod parse;

pub use braid::{braid_closure, BraidLetter};
pub use parse::{parse_diagram, CodeFormat};

use std::fmt;

use crate::error::Error;

/// Index of one oriented arc segment between two crossing passages.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcId(pub usize);

/// Crossing sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// One crossing of an oriented diagram.
///
/// The under-strand runs `under_in -> under_out`, the over-strand
/// `over_in -> over_out`. The sign is declared by the input code and is not
/// recomputed from any embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub under_in: ArcId,
    pub under_out: ArcId,
    pub over_in: ArcId,
    pub over_out: ArcId,
    pub sign: Sign,
}

/// Where an arc enters a crossing: as the under-strand or the over-strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Passage {
    Under,
    Over,
}

/// A validated oriented link diagram.
///
/// Components with zero crossings (from the `unknot` / `unlink k` literals)
/// are stored as empty arc cycles.
#[derive(Debug, Clone)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    arc_labels: Vec<u32>,
    components: Vec<Vec<ArcId>>,
}

impl Diagram {
    /// Assemble and validate a diagram from raw crossing records.
    ///
    /// `arc_labels[i]` is the display label of `ArcId(i)`; `free_loops` adds
    /// that many crossing-free unknot components.
    pub fn from_parts(
        crossings: Vec<Crossing>,
        arc_labels: Vec<u32>,
        free_loops: usize,
    ) -> Result<Self, Error> {
        if crossings.is_empty() && free_loops == 0 {
            return Err(Error::Degenerate(
                "zero crossings; use the `unknot` or `unlink <k>` literal".into(),
            ));
        }

        let arc_count = arc_labels.len();
        let label = |a: ArcId| -> u32 {
            arc_labels.get(a.0).copied().unwrap_or(0)
        };

        // Each arc must be consumed exactly once and produced exactly once.
        let mut in_slot: Vec<Option<(usize, Passage)>> = vec![None; arc_count];
        let mut out_slot: Vec<Option<(usize, Passage)>> = vec![None; arc_count];
        for (i, x) in crossings.iter().enumerate() {
            for a in [x.under_in, x.under_out, x.over_in, x.over_out] {
                if a.0 >= arc_count {
                    return Err(Error::ArcConsistency(format!(
                        "crossing {} references unknown arc index {}",
                        i + 1,
                        a.0
                    )));
                }
            }
            if x.under_in == x.under_out {
                return Err(Error::ArcConsistency(format!(
                    "crossing {}: under-strand enters and leaves on the same arc {}",
                    i + 1,
                    label(x.under_in)
                )));
            }
            if x.over_in == x.over_out {
                return Err(Error::ArcConsistency(format!(
                    "crossing {}: over-strand enters and leaves on the same arc {}",
                    i + 1,
                    label(x.over_in)
                )));
            }
            for (a, p) in [(x.under_in, Passage::Under), (x.over_in, Passage::Over)] {
                if in_slot[a.0].replace((i, p)).is_some() {
                    return Err(Error::ArcConsistency(format!(
                        "arc {} enters more than one crossing passage",
                        label(a)
                    )));
                }
            }
            for (a, p) in [(x.under_out, Passage::Under), (x.over_out, Passage::Over)] {
                if out_slot[a.0].replace((i, p)).is_some() {
                    return Err(Error::ArcConsistency(format!(
                        "arc {} leaves more than one crossing passage",
                        label(a)
                    )));
                }
            }
        }
        for a in 0..arc_count {
            if in_slot[a].is_none() {
                return Err(Error::ArcConsistency(format!(
                    "arc {} never enters a crossing",
                    arc_labels[a]
                )));
            }
            if out_slot[a].is_none() {
                return Err(Error::ArcConsistency(format!(
                    "arc {} never leaves a crossing",
                    arc_labels[a]
                )));
            }
        }

        // Trace the strand successor map into closed components.
        let mut components = Vec::new();
        let mut seen = vec![false; arc_count];
        for start in 0..arc_count {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut a = start;
            loop {
                seen[a] = true;
                cycle.push(ArcId(a));
                let (i, passage) = in_slot[a].expect("checked above");
                let next = match passage {
                    Passage::Under => crossings[i].under_out,
                    Passage::Over => crossings[i].over_out,
                };
                a = next.0;
                if a == start {
                    break;
                }
                if seen[a] {
                    // Cannot happen once in/out slots are unique.
                    return Err(Error::ArcConsistency(format!(
                        "strand tracing re-entered arc {} mid-cycle",
                        arc_labels[a]
                    )));
                }
            }
            components.push(cycle);
        }
        components.extend(std::iter::repeat_with(Vec::new).take(free_loops));

        Ok(Diagram {
            crossings,
            arc_labels,
            components,
        })
    }

    /// The 0-crossing unknot.
    pub fn unknot() -> Self {
        Diagram {
            crossings: Vec::new(),
            arc_labels: Vec::new(),
            components: vec![Vec::new()],
        }
    }

    /// The k-component 0-crossing unlink.
    pub fn unlink(k: usize) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::Degenerate("unlink requires at least 1 component".into()));
        }
        Ok(Diagram {
            crossings: Vec::new(),
            arc_labels: Vec::new(),
            components: vec![Vec::new(); k],
        })
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Number of crossings (the symbol `n`).
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Number of arcs; `2n` for diagrams without crossing-free components.
    pub fn arc_count(&self) -> usize {
        self.arc_labels.len()
    }

    /// Display label of an arc.
    pub fn arc_label(&self, a: ArcId) -> u32 {
        self.arc_labels[a.0]
    }

    /// Oriented strand components as cycles of arcs; empty cycles are
    /// crossing-free unknot components.
    pub fn components(&self) -> &[Vec<ArcId>] {
        &self.components
    }

    /// Number of link components (the symbol `c`).
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Per-crossing signs, in crossing order. Their sum is the writhe.
    pub fn crossing_signs(&self) -> Vec<Sign> {
        self.crossings.iter().map(|x| x.sign).collect()
    }

    /// The writhe `w`: sum of all crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|x| x.sign.value()).sum()
    }

    /// The mirror image: over and under swap roles at every crossing and
    /// every sign is negated. Arc structure and components are unchanged.
    pub fn mirror(&self) -> Diagram {
        let crossings = self
            .crossings
            .iter()
            .map(|x| Crossing {
                under_in: x.over_in,
                under_out: x.over_out,
                over_in: x.under_in,
                over_out: x.under_out,
                sign: x.sign.flipped(),
            })
            .collect();
        Diagram {
            crossings,
            arc_labels: self.arc_labels.clone(),
            components: self.components.clone(),
        }
    }

    /// The passage through which an arc enters its crossing, or `None` for
    /// arcs of crossing-free components (which do not exist by construction).
    pub fn entering_passage(&self, a: ArcId) -> Passage {
        for x in &self.crossings {
            if x.under_in == a {
                return Passage::Under;
            }
            if x.over_in == a {
                return Passage::Over;
            }
        }
        unreachable!("validated diagrams have an in-slot for every arc")
    }

    /// True iff along every component the passages strictly alternate
    /// over/under. Crossing-free components count as alternating.
    pub fn is_alternating(&self) -> bool {
        // Precompute passage types to avoid the per-arc scan.
        let mut passage = vec![Passage::Under; self.arc_count()];
        for x in &self.crossings {
            passage[x.under_in.0] = Passage::Under;
            passage[x.over_in.0] = Passage::Over;
        }
        for cycle in &self.components {
            if cycle.is_empty() {
                continue;
            }
            if cycle.len() % 2 != 0 {
                return false;
            }
            for w in 0..cycle.len() {
                let here = passage[cycle[w].0];
                let next = passage[cycle[(w + 1) % cycle.len()].0];
                if here == next {
                    return false;
                }
            }
        }
        true
    }

    /// Render as a pd-signed code. Crossing-free diagrams render as the
    /// `unknot` / `unlink k` literals.
    pub fn to_pd_string(&self) -> String {
        if self.crossings.is_empty() {
            return if self.components.len() == 1 {
                "unknot".to_string()
            } else {
                format!("unlink {}", self.components.len())
            };
        }
        let stmts: Vec<String> = self
            .crossings
            .iter()
            .map(|x| {
                let a = self.arc_label(x.under_in);
                let c = self.arc_label(x.under_out);
                // Sign-preferred slot order: for `+` the over-strand runs
                // d -> b, for `-` it runs b -> d.
                let (b, d) = match x.sign {
                    Sign::Positive => (self.arc_label(x.over_out), self.arc_label(x.over_in)),
                    Sign::Negative => (self.arc_label(x.over_in), self.arc_label(x.over_out)),
                };
                format!("X{} {} {} {} {}", x.sign.symbol(), a, b, c, d)
            })
            .collect();
        stmts.join(" ; ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{CHAIN_3, FIGURE_EIGHT, POSITIVE_HOPF, RIGHT_TREFOIL};

    fn pd(text: &str) -> Diagram {
        parse_diagram(text, CodeFormat::PdSigned).expect("valid code")
    }

    #[test]
    fn trefoil_parses_to_three_positive_crossings() {
        let d = pd(RIGHT_TREFOIL);
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 1);
        assert!(d.crossing_signs().iter().all(|&s| s == Sign::Positive));
        assert_eq!(d.writhe(), 3);
        assert!(d.is_alternating());
    }

    #[test]
    fn hopf_link_has_two_components() {
        let d = pd(POSITIVE_HOPF);
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.writhe(), 2);
        assert!(d.is_alternating());
    }

    #[test]
    fn figure_eight_is_alternating_with_zero_writhe() {
        let d = pd(FIGURE_EIGHT);
        assert_eq!(d.crossing_count(), 4);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.writhe(), 0);
        assert!(d.is_alternating());
    }

    #[test]
    fn chain_of_three_rings_has_three_components() {
        let d = pd(CHAIN_3);
        assert_eq!(d.crossing_count(), 6);
        assert_eq!(d.component_count(), 3);
        assert!(d.is_alternating());
    }

    #[test]
    fn missing_arc_is_an_arc_consistency_error() {
        let err = parse_diagram("X+ 1 4 2 5 ; X+ 3 6 4 1 ; X+ 5 2 6", CodeFormat::PdSigned)
            .unwrap_err();
        assert!(matches!(err, Error::ArcConsistency(_)), "got {err:?}");
    }

    #[test]
    fn mirror_negates_every_sign() {
        let d = pd(RIGHT_TREFOIL);
        let m = d.mirror();
        assert!(m.crossing_signs().iter().all(|&s| s == Sign::Negative));
        assert_eq!(m.writhe(), -3);
        assert_eq!(m.component_count(), 1);
        assert!(m.is_alternating());
    }

    #[test]
    fn mirror_is_an_involution() {
        let d = pd(FIGURE_EIGHT);
        let mm = d.mirror().mirror();
        assert_eq!(mm.crossings(), d.crossings());
        assert_eq!(mm.components(), d.components());
    }

    #[test]
    fn flipped_passage_breaks_alternation() {
        // Right trefoil with the third crossing's over/under exchanged.
        let d = pd("X+ 1 4 2 5 ; X+ 3 6 4 1 ; X- 2 5 3 6");
        assert_eq!(d.crossing_count(), 3);
        assert!(!d.is_alternating());
    }

    #[test]
    fn one_crossing_kink_is_valid() {
        let d = pd("X+ 1 2 2 1");
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.component_count(), 1);
        assert!(d.is_alternating());
    }

    #[test]
    fn unknot_and_unlink_literals() {
        let u = pd("unknot");
        assert_eq!(u.crossing_count(), 0);
        assert_eq!(u.component_count(), 1);
        assert!(u.is_alternating());

        let l = pd("unlink 3");
        assert_eq!(l.component_count(), 3);
        assert_eq!(l.writhe(), 0);
    }

    #[test]
    fn pd_emission_round_trips() {
        for code in [RIGHT_TREFOIL, POSITIVE_HOPF, FIGURE_EIGHT, CHAIN_3, "unknot", "unlink 2"] {
            let d = pd(code);
            let emitted = d.to_pd_string();
            let d2 = pd(&emitted);
            assert_eq!(d.crossings(), d2.crossings(), "round trip of {code}");
            assert_eq!(d.component_count(), d2.component_count());
        }
    }
}
