//! Generates and validates the bundled catalog tables from first-principles
//! constructions. See `anchors` for the self-checks the families must pass
//! before any table is emitted.

mod bracket;
mod families;
mod knots;
mod plane;
mod poly;
mod tangles;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use families::{montesinos, open_chain, pretzel, rational_link};
use plane::PlaneDiagram;
use writhesplit::diagram::Diagram;
use writhesplit::nullification::chirality_verdict;
use writhesplit::InvariantReport;

/// Continued fraction value a1 + 1/(a2 + 1/(...)) as p/q in lowest terms.
fn cf_value(vector: &[usize]) -> (u64, u64) {
    let mut p: u128 = *vector.last().unwrap() as u128;
    let mut q: u128 = 1;
    for &a in vector[..vector.len() - 1].iter().rev() {
        let np = a as u128 * p + q;
        q = p;
        p = np;
    }
    (p as u64, q as u64)
}

fn mod_inverse(q: u64, p: u64) -> u64 {
    // Extended Euclid; q is invertible since gcd(p, q) = 1.
    let (mut r0, mut r1) = (p as i128, q as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let quot = r0 / r1;
        (r0, r1) = (r1, r0 - quot * r1);
        (t0, t1) = (t1, t0 - quot * t1);
    }
    assert_eq!(r0, 1, "q must be invertible mod p");
    t0.rem_euclid(p as i128) as u64
}

/// Canonical fraction key up to the unoriented-link equivalences and
/// mirroring: min over {q, q^-1, p-q, p-q^-1} (mod p).
fn class_key(p: u64, q: u64) -> (u64, u64) {
    let q = q % p;
    let qi = mod_inverse(q, p);
    let canon = [q, qi, p - q, p - qi].into_iter().min().unwrap();
    (p, canon)
}

/// Amphichirality of the 2-bridge knot b(p, q): q^2 = -1 (mod p).
fn two_bridge_achiral(p: u64, q: u64) -> bool {
    ((q as u128 * q as u128) % p as u128) as u64 == p - 1
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for a in 1..=rest {
            cur.push(a);
            rec(rest - a, cur, out);
            cur.pop();
        }
    }
    rec(n, &mut cur, &mut out);
    out
}

/// Reports for every orientation class of a plane diagram.
fn orientation_reports(pd: &PlaneDiagram) -> Vec<(Vec<bool>, InvariantReport)> {
    pd.orientation_classes()
        .into_iter()
        .map(|flip| {
            let d = pd.orient(&flip).expect("constructed diagrams are valid");
            let r = chirality_verdict(&d).expect("constructed diagrams are coherent");
            (flip, r)
        })
        .collect()
}

#[derive(Debug, Clone)]
struct RationalClass {
    p: u64,
    q_canonical: u64,
    crossings: usize,
    components: usize,
    achiral_knot: bool,
    /// Sorted multiset of (w, w_x, w_y) over orientation classes.
    splits: Vec<(i64, i64, i64)>,
    /// One reduced representative vector.
    vector: Vec<usize>,
}

/// Enumerate all 2-bridge classes with reduced alternating diagrams of
/// exactly `n` crossings.
fn rational_classes(n: usize) -> Vec<RationalClass> {
    let mut classes: BTreeMap<(u64, u64), RationalClass> = BTreeMap::new();
    for vector in compositions(n) {
        let pd = rational_link(&vector);
        assert_eq!(pd.crossing_count(), n);
        let reports = orientation_reports(&pd);
        // Every orientation of the construction must be alternating.
        assert!(reports.iter().all(|(_, r)| r.alternating));
        if !reports[0].1.reduced {
            continue;
        }
        let (p, q) = cf_value(&vector);
        let key = class_key(p, q);
        let mut splits: Vec<(i64, i64, i64)> =
            reports.iter().map(|(_, r)| (r.w, r.w_x, r.w_y)).collect();
        splits.sort_unstable();
        let components = reports[0].1.c;
        assert_eq!(
            components,
            if p % 2 == 0 { 2 } else { 1 },
            "component count must follow the fraction parity: {vector:?}"
        );
        let achiral_knot = components == 1 && two_bridge_achiral(p, q % p);
        let entry = classes.entry(key).or_insert_with(|| RationalClass {
            p,
            q_canonical: key.1,
            crossings: n,
            components,
            achiral_knot,
            splits: splits.clone(),
            vector: vector.clone(),
        });
        // Invariance across flype-equivalent diagrams of one class: the
        // orientation multiset of writhe splits must coincide. Mirror
        // members have everything negated.
        let negated: Vec<(i64, i64, i64)> = {
            let mut v: Vec<_> = splits.iter().map(|&(w, x, y)| (-w, -x, -y)).collect();
            v.sort_unstable();
            v
        };
        assert!(
            entry.splits == splits || entry.splits == negated,
            "class {key:?}: inconsistent splits {splits:?} vs {:?} (vector {vector:?})",
            entry.splits
        );
        assert_eq!(entry.achiral_knot, achiral_knot);
    }
    classes.into_values().collect()
}

fn cmd_rational(n: usize) {
    let classes = rational_classes(n);
    let knots = classes.iter().filter(|c| c.components == 1).count();
    let links = classes.len() - knots;
    println!("n={n}: {} classes ({knots} knots, {links} links)", classes.len());
    for c in &classes {
        let zero = c.splits.iter().any(|&(w, _, _)| w == 0);
        if !zero {
            continue;
        }
        println!(
            "  p/q = {}/{} comps={} achiral={} splits={:?} vector={:?}",
            c.p, c.q_canonical, c.components, c.achiral_knot, c.splits, c.vector
        );
    }
}

/// Self-checks: classical counts and facts the families must reproduce
/// before the emitted tables can be trusted.
fn cmd_anchors() {
    let mut all_ok = true;
    let mut check = |label: &str, ok: bool| {
        println!("{}: {}", if ok { "ok  " } else { "FAIL" }, label);
        all_ok &= ok;
    };

    // Two-bridge knot counts per crossing number.
    let expected_knots = [(3usize, 1usize), (4, 1), (5, 2), (6, 3), (7, 7), (8, 12), (9, 24), (10, 45)];
    let mut by_n: BTreeMap<usize, Vec<RationalClass>> = BTreeMap::new();
    for &(n, _) in &expected_knots {
        by_n.insert(n, rational_classes(n));
    }
    for &(n, want) in &expected_knots {
        let got = by_n[&n].iter().filter(|c| c.components == 1).count();
        check(&format!("two-bridge knots with {n} crossings: {got} (want {want})"), got == want);
    }

    // Achiral two-bridge knots have w = w_x = 0 in every member diagram.
    for (n, classes) in &by_n {
        for c in classes.iter().filter(|c| c.components == 1 && c.achiral_knot) {
            check(
                &format!("achiral b({},{}) at n={n} has all-zero splits", c.p, c.q_canonical),
                c.splits.iter().all(|&(w, x, y)| w == 0 && x == 0 && y == 0),
            );
        }
    }

    // Zero-writhe knot classes per crossing number, split by chirality.
    let zero_stats = |n: usize| -> (usize, usize, Vec<u64>) {
        let classes = &by_n[&n];
        let zero: Vec<&RationalClass> = classes
            .iter()
            .filter(|c| c.components == 1 && c.splits.iter().any(|&(w, _, _)| w == 0))
            .collect();
        let achiral = zero.iter().filter(|c| c.achiral_knot).count();
        let chiral_ps = zero.iter().filter(|c| !c.achiral_knot).map(|c| c.p).collect();
        (zero.len(), achiral, chiral_ps)
    };

    let (z6, a6, ch6) = zero_stats(6);
    check(&format!("n=6 zero-writhe knots: {z6} ({a6} achiral, chiral {ch6:?})"), z6 == 1 && a6 == 1);
    let (z7, _, _) = zero_stats(7);
    check(&format!("n=7 zero-writhe knots: {z7}"), z7 == 0);
    let (z8, a8, ch8) = zero_stats(8);
    check(
        &format!("n=8 zero-writhe knots: {z8} ({a8} achiral, chiral {ch8:?})"),
        z8 == 4 && a8 == 3 && ch8 == vec![19],
    );
    let (z9, _, _) = zero_stats(9);
    check(&format!("n=9 zero-writhe knots: {z9}"), z9 == 0);
    let (z10, a10, ch10) = zero_stats(10);
    check(
        &format!("n=10 zero-writhe knots: {z10} ({a10} achiral, chiral {ch10:?})"),
        z10 == 9 && a10 == 5 && ch10.len() == 4,
    );

    // The chiral zero-writhe eight-crossing knot must have |w_x| = 2 (it is
    // the determinant-19 knot).
    let c19 = by_n[&8]
        .iter()
        .find(|c| c.components == 1 && c.p == 19)
        .expect("b(19,q) exists at n=8");
    check(
        &format!("b(19,4) splits {:?} have |w_x| = 2", c19.splits),
        c19.splits.iter().all(|&(w, x, y)| w == 0 && x.abs() == 2 && y == -x),
    );

    // Chiral zero-writhe ten-crossing knots: two with |w_x| = 2, two with 0.
    let tens: Vec<&RationalClass> = by_n[&10]
        .iter()
        .filter(|c| {
            c.components == 1 && !c.achiral_knot && c.splits.iter().any(|&(w, _, _)| w == 0)
        })
        .collect();
    let wx2 = tens
        .iter()
        .filter(|c| c.splits.iter().all(|&(_, x, _)| x.abs() == 2))
        .count();
    let wx0 = tens
        .iter()
        .filter(|c| c.splits.iter().all(|&(_, x, _)| x == 0))
        .count();
    check(
        &format!("n=10 chiral zero-writhe knots: {} with |w_x|=2, {} with w_x=0", wx2, wx0),
        wx2 == 2 && wx0 == 2,
    );
    for c in &tens {
        println!(
            "    candidate: p/q = {}/{} splits {:?} vector {:?}",
            c.p, c.q_canonical, c.splits, c.vector
        );
    }

    // Two-bridge links with 8 crossings and a zero-writhe orientation. The
    // other three two-component catalog links are Montesinos (see `survey 8 2`).
    let links8: Vec<&RationalClass> = by_n[&8].iter().filter(|c| c.components == 2).collect();
    println!("  two-bridge links at n=8: {} classes", links8.len());
    let mut detected = 0;
    for c in &links8 {
        let zero_nonzero: Vec<(i64, i64, i64)> = c
            .splits
            .iter()
            .copied()
            .filter(|&(w, x, _)| w == 0 && x != 0)
            .collect();
        if !zero_nonzero.is_empty() {
            detected += 1;
            println!(
                "    p/q = {}/{} splits {:?} vector {:?}",
                c.p, c.q_canonical, c.splits, c.vector
            );
            check(
                &format!("b({},{}) zero-writhe orientations have |w_x| = 1", c.p, c.q_canonical),
                zero_nonzero.iter().all(|&(_, x, y)| x.abs() == 1 && y == -x),
            );
        }
    }
    check(
        &format!("n=8 two-bridge links with w=0 and w_x != 0: {detected} (want 2)"),
        detected == 2,
    );

    println!();
    println!(
        "anchors: {}",
        if all_ok { "ALL CHECKS PASSED" } else { "FAILURES PRESENT" }
    );
    if !all_ok {
        std::process::exit(1);
    }
}

/// Survey pretzel / chain / Montesinos candidates with the given crossing
/// and component counts, printing zero-writhe orientation data.
fn cmd_survey(n: usize, want_c: usize) {
    let mut seen = std::collections::HashSet::new();
    let mut show = |label: String, pd: &PlaneDiagram| {
        let reports = orientation_reports(pd);
        let r0 = &reports[0].1;
        if r0.c != want_c || !r0.reduced || r0.n != n {
            return;
        }
        let mut splits: Vec<(i64, i64, i64)> =
            reports.iter().map(|(_, r)| (r.w, r.w_x, r.w_y)).collect();
        splits.sort_unstable();
        let zero: Vec<_> = splits.iter().filter(|&&(w, _, _)| w == 0).collect();
        if zero.is_empty() {
            return;
        }
        // Crude dedup on the full orientation data plus structure counts.
        let key = (splits.clone(), r0.s, r0.k);
        if !seen.insert(key) {
            return;
        }
        println!("{label}: s={} splits={:?}", r0.s, splits);
    };

    for ts in compositions(n) {
        if ts.len() >= 2 {
            show(format!("pretzel{ts:?}"), &pretzel(&ts));
        }
        show(format!("open_chain{ts:?}"), &open_chain(&ts));
    }
    // Montesinos candidates: columns of total size n, each a vector with at
    // least 2 crossings, at least 3 columns.
    for split in compositions(n) {
        if split.len() < 3 || split.iter().any(|&s| s < 2) {
            continue;
        }
        let per_column: Vec<Vec<Vec<usize>>> =
            split.iter().map(|&s| compositions(s)).collect();
        let mut idx = vec![0usize; split.len()];
        loop {
            let columns: Vec<Vec<usize>> = idx
                .iter()
                .enumerate()
                .map(|(i, &j)| per_column[i][j].clone())
                .collect();
            show(format!("montesinos{columns:?}"), &montesinos(&columns));
            let mut carry = idx.len();
            for i in (0..idx.len()).rev() {
                idx[i] += 1;
                if idx[i] < per_column[i].len() {
                    carry = i;
                    break;
                }
                idx[i] = 0;
            }
            if carry == idx.len() {
                break;
            }
        }
    }
}

/// Emit a catalog line after fixing the enantiomorph to the published sign.
fn catalog_line(
    name: &str,
    diagram: &Diagram,
    expected_w: i64,
    expected_wx: i64,
    source: &str,
) -> String {
    let r = chirality_verdict(diagram).unwrap();
    let d = if (r.w, r.w_x) == (expected_w, expected_wx) {
        diagram.clone()
    } else if (r.w, r.w_x) == (-expected_w, -expected_wx) {
        diagram.mirror()
    } else {
        panic!(
            "{name}: computed (w, w_x) = ({}, {}) matches neither ({expected_w}, {expected_wx}) nor its negation",
            r.w, r.w_x
        );
    };
    let check = chirality_verdict(&d).unwrap();
    assert_eq!((check.w, check.w_x), (expected_w, expected_wx), "{name}");
    assert!(check.alternating && check.reduced, "{name}");
    // Emitted codes must round-trip.
    let code = d.to_pd_string();
    let reparsed = writhesplit::parse_diagram(&code, writhesplit::CodeFormat::PdSigned).unwrap();
    let r2 = chirality_verdict(&reparsed).unwrap();
    assert_eq!(r2, check, "{name}: emission round trip");

    let mut line = String::new();
    write!(
        line,
        "{}",
        serde_json::json!({
            "name": name,
            "code": code,
            "expected": {"w": expected_w, "w_x": expected_wx},
            "source": source,
        })
    )
    .unwrap();
    line
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.first().map(|s| s.as_str()) {
        Some("rational") => {
            let n: usize = args[1].parse().unwrap();
            cmd_rational(n);
        }
        Some("anchors") => cmd_anchors(),
        Some("survey") => {
            let n: usize = args[1].parse().unwrap();
            let c: usize = args[2].parse().unwrap();
            cmd_survey(n, c);
        }
        Some("knots") => {
            let n: usize = args[1].parse().unwrap();
            knots::cmd_knots(n);
        }
        Some("gen") => gen::run(),
        _ => {
            eprintln!("usage: tablegen <rational N | anchors | survey N C | knots N | gen>");
            std::process::exit(2);
        }
    }
}

mod gen {
    //! Final table emission; the selections encoded here are justified by
    //! the `anchors` and `survey` outputs.

    use crate::families::{montesinos, pretzel, rational_link};
    use crate::plane::PlaneDiagram;
    use crate::{catalog_line, class_key, orientation_reports, rational_classes};
    use writhesplit::diagram::Diagram;

    /// The zero-writhe orientation of the two-bridge link b(p, q), using the
    /// reduced representative vector found by the class enumeration.
    fn rational_zero(n: usize, p: u64, q: u64) -> (Diagram, Vec<usize>) {
        let key = class_key(p, q);
        let class = rational_classes(n)
            .into_iter()
            .find(|c| (c.p, c.q_canonical) == key)
            .unwrap_or_else(|| panic!("no two-bridge class b({p},{q}) at n={n}"));
        let pd = rational_link(&class.vector);
        (zero_writhe_orientation(&pd, 0), class.vector)
    }

    fn zero_writhe_orientation(pd: &PlaneDiagram, _hint: usize) -> Diagram {
        for (flip, r) in orientation_reports(pd) {
            if r.w == 0 {
                return pd.orient(&flip).unwrap();
            }
        }
        panic!("no zero-writhe orientation");
    }

    /// Orientations of the closed 4-chain by the cyclic pattern of its
    /// column signs: one ring reversed gives two adjacent positive clasps
    /// and two adjacent negative ones; two adjacent rings reversed gives
    /// alternating clasp signs.
    fn chain4_orientation(alternating_pattern: bool) -> Diagram {
        let pd = pretzel(&[2, 2, 2, 2]);
        for (flip, r) in orientation_reports(&pd) {
            if r.w != 0 {
                continue;
            }
            let d = pd.orient(&flip).unwrap();
            let signs: Vec<i64> = d.crossing_signs().iter().map(|s| s.value()).collect();
            let mut columns = Vec::new();
            for i in 0..4 {
                assert_eq!(signs[2 * i], signs[2 * i + 1], "clasp columns share a sign");
                columns.push(signs[2 * i]);
            }
            let runs_of_one = (0..4).all(|i| columns[i] != columns[(i + 1) % 4]);
            if runs_of_one == alternating_pattern {
                return d;
            }
        }
        panic!("no matching chain orientation");
    }

    pub fn run() {
        let table1: Vec<(&str, (Diagram, Vec<usize>), i64, u64, u64)> = vec![
            ("8_4", rational_zero(8, 19, 4), -2, 19, 4),
            ("10_15", rational_zero(10, 43, 9), 2, 43, 9),
            ("10_19", rational_zero(10, 51, 11), -2, 51, 11),
            ("10_31", rational_zero(10, 57, 16), 0, 57, 16),
            ("10_42", rational_zero(10, 81, 31), 0, 81, 31),
        ];
        let assignment_note = "name within equal-|w_x| two-bridge classes assigned by ascending determinant";

        let mut lines = Vec::new();
        for (name, (diagram, vector), wx, p, q) in &table1 {
            let mut source = format!("two-bridge b({p}/{q}), twist vector {vector:?}");
            if name.starts_with("10") {
                source = format!("{source}; {assignment_note}");
            }
            lines.push(catalog_line(name, diagram, 0, *wx, &source));
        }
        std::fs::write("../../tables/table1.ndjson", lines.join("\n") + "\n").unwrap();
        println!("wrote table1.ndjson ({} rows)", lines.len());

        let m = |cols: &[&[usize]]| -> Diagram {
            let columns: Vec<Vec<usize>> = cols.iter().map(|c| c.to_vec()).collect();
            zero_writhe_orientation(&montesinos(&columns), 0)
        };
        let b20 = rational_zero(8, 20, 9);
        let b30 = rational_zero(8, 30, 11);
        let table2 = [
            ("8^2_6+-", b20.0.clone(), -1,
             format!("two-bridge b(20/9), twist vector {:?}", b20.1)),
            ("8^2_7++", b30.0.clone(), 1,
             format!("two-bridge b(30/11), twist vector {:?}", b30.1)),
            ("8^2_10++", zero_writhe_orientation(&pretzel(&[1, 2, 2, 3]), 0), -1,
             "pretzel (1,2,2,3)".to_string()),
            ("8^2_11+-", m(&[&[1, 1], &[1, 1], &[1, 1, 1, 1]]), 1,
             "Montesinos link, tangle columns [1,1],[1,1],[1,1,1,1]".to_string()),
            ("8^2_14+-", m(&[&[2], &[2, 1], &[2, 1]]), -1,
             "Montesinos link, tangle columns [2],[2,1],[2,1]".to_string()),
            ("8^3_1+-+", zero_writhe_orientation(&pretzel(&[2, 2, 4]), 0), -2,
             "pretzel (2,2,4): closed 3-chain with one doubled clasp".to_string()),
            ("8^3_2+--", m(&[&[1, 1], &[1, 1], &[3, 1]]), 0,
             "Montesinos link, tangle columns [1,1],[1,1],[3,1]".to_string()),
            ("8^4_1+++-", chain4_orientation(false), -1,
             "closed 4-chain (pretzel (2,2,2,2)), one ring reversed".to_string()),
            ("8^4_1++--", chain4_orientation(true), -1,
             "closed 4-chain (pretzel (2,2,2,2)), two adjacent rings reversed".to_string()),
        ];
        let table2_note = "two-component names assigned to the five zero-writhe classes in family order (two-bridge by determinant, then pretzel, then Montesinos)";

        let mut lines = Vec::new();
        for (name, diagram, wx, construction) in &table2 {
            let source = if name.starts_with("8^2") {
                format!("{construction}; {table2_note}")
            } else {
                construction.clone()
            };
            lines.push(catalog_line(name, diagram, 0, *wx, &source));
        }
        std::fs::write("../../tables/table2.ndjson", lines.join("\n") + "\n").unwrap();
        println!("wrote table2.ndjson ({} rows)", lines.len());
    }
}
