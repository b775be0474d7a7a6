//! Property tests over random braid-closure diagrams and random code text.

use proptest::prelude::*;

use writhesplit::diagram::{braid_closure, parse_diagram, BraidLetter, CodeFormat, Sign};
use writhesplit::nullification::{
    chirality_verdict, nullification_number, spanning_forest, writhe_split,
};
use writhesplit::seifert::build_seifert_graph;

/// Braid words as (position, positive) pairs; positions are clamped into
/// range by the strategy itself.
fn braid_strategy(alternating: bool) -> impl Strategy<Value = (usize, Vec<BraidLetter>)> {
    (2usize..=5, proptest::collection::vec((1usize..=4, any::<bool>()), 1..=12)).prop_map(
        move |(strands, raw)| {
            let word: Vec<BraidLetter> = raw
                .into_iter()
                .map(|(p, pos)| {
                    let position = (p - 1) % (strands - 1) + 1;
                    let sign = if alternating {
                        if position % 2 == 1 {
                            Sign::Positive
                        } else {
                            Sign::Negative
                        }
                    } else if pos {
                        Sign::Positive
                    } else {
                        Sign::Negative
                    };
                    BraidLetter::new(position, sign)
                })
                .collect();
            (strands, word)
        },
    )
}

proptest! {
    /// w = w_x + w_y for every diagram and every forest seed.
    #[test]
    fn writhe_split_identity((strands, word) in braid_strategy(false), seed in 0u64..50) {
        let d = braid_closure(strands, &word).unwrap();
        let g = build_seifert_graph(&d).unwrap();
        let f = spanning_forest(&g, seed);
        let ws = writhe_split(&g, &f);
        prop_assert_eq!(ws.w, d.writhe());
        prop_assert_eq!(ws.w, ws.w_x + ws.w_y);
        prop_assert_eq!(f.len(), g.circle_count() - g.component_count());
        prop_assert_eq!(
            nullification_number(&g),
            g.edge_count() - f.len()
        );
    }

    /// Mirroring negates signs elementwise and the full report is
    /// antisymmetric in (w, w_x, w_y) with o, n, s, k, c unchanged.
    #[test]
    fn mirror_antisymmetry((strands, word) in braid_strategy(false)) {
        let d = braid_closure(strands, &word).unwrap();
        let m = d.mirror();
        let signs: Vec<i64> = d.crossing_signs().iter().map(|s| s.value()).collect();
        let mirrored: Vec<i64> = m.crossing_signs().iter().map(|s| s.value()).collect();
        prop_assert_eq!(signs.iter().map(|s| -s).collect::<Vec<_>>(), mirrored);
        prop_assert_eq!(d.is_alternating(), m.is_alternating());

        let r = chirality_verdict(&d).unwrap();
        let rm = chirality_verdict(&m).unwrap();
        prop_assert_eq!(r.w, -rm.w);
        prop_assert_eq!(r.w_x, -rm.w_x);
        prop_assert_eq!(r.w_y, -rm.w_y);
        prop_assert_eq!((r.n, r.s, r.k, r.c, r.o), (rm.n, rm.s, rm.k, rm.c, rm.o));

        let mm = m.mirror();
        prop_assert_eq!(d.crossings(), mm.crossings());
    }

    /// The pd emission round-trips through the parser.
    #[test]
    fn emission_round_trip((strands, word) in braid_strategy(false)) {
        let d = braid_closure(strands, &word).unwrap();
        let code = d.to_pd_string();
        let d2 = parse_diagram(&code, CodeFormat::PdSigned).unwrap();
        let r = chirality_verdict(&d).unwrap();
        let r2 = chirality_verdict(&d2).unwrap();
        prop_assert_eq!(r, r2);
    }

    /// Alternating-pattern braid closures are alternating and satisfy the
    /// parity law on their non-split pieces.
    #[test]
    fn alternating_closures((strands, word) in braid_strategy(true)) {
        let d = braid_closure(strands, &word).unwrap();
        prop_assert!(d.is_alternating());
        let g = build_seifert_graph(&d).unwrap();
        if g.component_count() == 1 {
            let o = nullification_number(&g);
            prop_assert_eq!(o % 2, (d.component_count() + 1) % 2);
        }
    }

    /// The parser never panics, whatever the input.
    #[test]
    fn parser_total_on_noise(text in "[X+\\-0-9a-z; ()OU]{0,80}") {
        let _ = parse_diagram(&text, CodeFormat::PdSigned);
        let _ = parse_diagram(&text, CodeFormat::GaussSigned);
    }

    /// Accepted pd codes satisfy the double-occurrence discipline: emission
    /// and re-parsing agree, and every arc label occurs exactly twice.
    #[test]
    fn accepted_codes_are_consistent(text in "(X[+\\-]( [1-9][0-9]?){4}( ; X[+\\-]( [1-9][0-9]?){4}){0,5})") {
        if let Ok(d) = parse_diagram(&text, CodeFormat::PdSigned) {
            prop_assert_eq!(d.arc_count() * 2, d.crossing_count() * 4);
            let r = chirality_verdict(&d);
            if let Ok(r) = r {
                prop_assert_eq!(r.w, r.w_x + r.w_y);
            }
        }
    }
}
