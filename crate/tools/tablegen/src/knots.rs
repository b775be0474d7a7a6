//! The full alternating-knot universe per crossing number: algebraic
//! tangle closures plus polyhedral substitutions, classified by the
//! writhe-normalized Kauffman bracket (up to mirror image).
//!
//! The class counts per crossing number are checked against the classical
//! alternating knot counts; once those match, the zero-writhe classes and
//! their nullification writhes are exactly the table content.

use std::collections::{BTreeMap, HashSet};
use std::rc::Rc;

use crate::bracket::{
    alternating_signature, bracket_mirror_symmetric, normalized_bracket, Laurent,
};
use crate::plane::PlaneDiagram;
use crate::poly::{base_maps, medial_with_tangles};
use crate::tangles::{denominator, enumerate_tangles, numerator, Tangle};
use writhesplit::diagram::Diagram;
use writhesplit::nullification::chirality_verdict;

/// One knot class (up to mirror image).
#[derive(Debug, Clone)]
pub struct KnotClass {
    /// Canonical (sign-fixed) data: the representative with
    /// lexicographically smaller bracket serialization.
    pub w: i64,
    pub w_x: i64,
    pub signature: i64,
    pub determinant: u64,
    /// Bracket is mirror-symmetric: chirality not certified by it.
    pub bracket_symmetric: bool,
    /// At least one of signature / bracket asymmetry certifies chirality.
    pub certified_chiral: bool,
    pub members: usize,
    /// A representative oriented diagram (canonical enantiomorph).
    pub representative: Diagram,
}

/// Knot determinant |V(-1)| from the normalized bracket (knots only: all
/// exponents are multiples of 4).
fn determinant(f: &Laurent) -> u64 {
    let mut total: i64 = 0;
    for (&e, &c) in &f.coeffs {
        assert_eq!(e % 4, 0, "knot bracket has exponents divisible by 4");
        let k = -e / 4;
        total += c * if k % 2 == 0 { 1 } else { -1 };
    }
    total.unsigned_abs()
}

/// Diagram primality: a reduced alternating diagram is composite exactly
/// when two arcs can be cut to split the underlying 4-valent graph into two
/// crossing-bearing pieces.
fn is_prime_diagram(d: &Diagram) -> bool {
    let n = d.crossing_count();
    if n < 2 {
        return true;
    }
    // The crossing each arc leaves and enters.
    let arcs = d.arc_count();
    let mut from = vec![usize::MAX; arcs];
    let mut to = vec![usize::MAX; arcs];
    for (i, x) in d.crossings().iter().enumerate() {
        from[x.under_out.0] = i;
        from[x.over_out.0] = i;
        to[x.under_in.0] = i;
        to[x.over_in.0] = i;
    }
    for a in 0..arcs {
        for b in a + 1..arcs {
            let mut dsu: Vec<usize> = (0..n).collect();
            fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
                if dsu[x] != x {
                    dsu[x] = find(dsu, dsu[x]);
                }
                dsu[x]
            }
            for arc in 0..arcs {
                if arc == a || arc == b {
                    continue;
                }
                let (ra, rb) = (find(&mut dsu, from[arc]), find(&mut dsu, to[arc]));
                if ra != rb {
                    dsu[ra] = rb;
                }
            }
            let root = find(&mut dsu, 0);
            if (1..n).any(|v| find(&mut dsu, v) != root) {
                return false;
            }
        }
    }
    true
}

/// Cheap canonical string for an oriented diagram, used to pre-deduplicate
/// identical diagrams before the exponential bracket computation.
fn canonical_code(d: &Diagram) -> String {
    let arcs = d.arc_count();
    let mut best: Option<String> = None;
    // Strand successor map.
    let mut next = vec![0usize; arcs];
    for x in d.crossings() {
        next[x.under_in.0] = x.under_out.0;
        next[x.over_in.0] = x.over_out.0;
    }
    for start in 0..arcs {
        // Relabel arcs by traversal order from `start`, components in
        // first-touch order.
        let mut label = vec![usize::MAX; arcs];
        let mut counter = 0;
        let mut a = start;
        loop {
            for _ in 0..arcs {
                if label[a] == usize::MAX {
                    label[a] = counter;
                    counter += 1;
                }
                a = next[a];
                if label[a] != usize::MAX {
                    break;
                }
            }
            if counter == arcs {
                break;
            }
            a = (0..arcs).find(|&x| label[x] == usize::MAX).unwrap();
        }
        let mut rows: Vec<String> = d
            .crossings()
            .iter()
            .map(|x| {
                format!(
                    "{} {} {} {} {}",
                    label[x.under_in.0],
                    label[x.under_out.0],
                    label[x.over_in.0],
                    label[x.over_out.0],
                    x.sign.symbol()
                )
            })
            .collect();
        rows.sort_unstable();
        let code = rows.join(";");
        if best.as_ref().map_or(true, |b| code < *b) {
            best = Some(code);
        }
    }
    best.unwrap()
}

/// All plane diagrams in the universe with `n` crossings.
fn universe(n: usize) -> Vec<PlaneDiagram> {
    let mut out = Vec::new();
    for t in enumerate_tangles(n) {
        out.push(numerator(&t));
        out.push(denominator(&t));
    }
    // Polyhedral: distribute the surplus over the medial vertices.
    for base_e in [6usize, 8, 9, 10] {
        if base_e > n {
            continue;
        }
        let surplus = n - base_e;
        let maps = base_maps(base_e);
        if maps.is_empty() {
            continue;
        }
        let tangles_by_size: Vec<Vec<Rc<Tangle>>> =
            (0..=surplus + 1).map(|s| if s >= 2 { enumerate_tangles(s) } else { Vec::new() }).collect();
        for map in &maps {
            // Compositions of `surplus` over base_e slots (most slots 0).
            let mut extra = vec![0usize; base_e];
            distribute(&mut extra, 0, surplus, &mut |extra| {
                // Choices per slot: bare (extra 0) or tangles of size
                // extra+1 with both rotations.
                let mut choices: Vec<Vec<Option<(Rc<Tangle>, bool)>>> = Vec::new();
                for &x in extra.iter() {
                    if x == 0 {
                        choices.push(vec![None]);
                    } else {
                        let mut opts = Vec::new();
                        for t in &tangles_by_size[x + 1] {
                            opts.push(Some((t.clone(), false)));
                            opts.push(Some((t.clone(), true)));
                        }
                        choices.push(opts);
                    }
                }
                let mut idx = vec![0usize; base_e];
                loop {
                    let subs: Vec<Option<(Rc<Tangle>, bool)>> = idx
                        .iter()
                        .enumerate()
                        .map(|(i, &j)| choices[i][j].clone())
                        .collect();
                    out.push(medial_with_tangles(map, &subs));
                    let mut carry = base_e;
                    for i in (0..base_e).rev() {
                        idx[i] += 1;
                        if idx[i] < choices[i].len() {
                            carry = i;
                            break;
                        }
                        idx[i] = 0;
                    }
                    if carry == base_e {
                        break;
                    }
                }
            });
        }
    }
    out
}

fn distribute<F: FnMut(&[usize])>(slots: &mut Vec<usize>, i: usize, rest: usize, f: &mut F) {
    if i == slots.len() {
        if rest == 0 {
            f(slots);
        }
        return;
    }
    for x in 0..=rest {
        slots[i] = x;
        distribute(slots, i + 1, rest - x, f);
        slots[i] = 0;
    }
}

/// Classify all alternating knots with exactly `n` crossings.
pub fn knot_classes(n: usize) -> Vec<KnotClass> {
    let mut seen_codes: HashSet<String> = HashSet::new();
    let mut classes: BTreeMap<String, KnotClass> = BTreeMap::new();

    for pd in universe(n) {
        if pd.crossing_count() != n {
            continue;
        }
        if pd.curves().len() != 1 {
            continue;
        }
        let d = pd.orient(&[false]).expect("universe diagrams are coherent");
        let r = chirality_verdict(&d).expect("universe diagrams are coherent");
        assert!(r.alternating, "universe must be alternating by construction");
        if !r.reduced {
            continue;
        }
        if !seen_codes.insert(canonical_code(&d)) {
            continue;
        }
        if !is_prime_diagram(&d) {
            continue;
        }

        let f = normalized_bracket(&d);
        let rev = f.reversed();
        let (key, flip) = {
            let a = f.serialize();
            let b = rev.serialize();
            if a <= b {
                (a, false)
            } else {
                (b, true)
            }
        };
        // Canonical enantiomorph data: flip the signs when this member is
        // the mirror of the canonical one.
        let sigma = alternating_signature(&d);
        let (w, w_x, sigma, rep) = if flip {
            (-r.w, -r.w_x, -sigma, d.mirror())
        } else {
            (r.w, r.w_x, sigma, d.clone())
        };
        let symmetric = f == rev;
        let det = determinant(&f);
        let entry = classes.entry(key).or_insert_with(|| KnotClass {
            w,
            w_x,
            signature: sigma,
            determinant: det,
            bracket_symmetric: symmetric,
            certified_chiral: sigma != 0 || !symmetric,
            members: 0,
            representative: rep,
        });
        entry.members += 1;
        assert_eq!(entry.determinant, det);
        if symmetric {
            // Mirror-ambiguous members may disagree in overall sign.
            assert!(
                (entry.w, entry.w_x, entry.signature) == (w, w_x, sigma)
                    || (entry.w, entry.w_x, entry.signature) == (-w, -w_x, -sigma),
                "inconsistent class data"
            );
        } else {
            assert_eq!(
                (entry.w, entry.w_x, entry.signature),
                (w, w_x, sigma),
                "inconsistent class data"
            );
        }
    }
    classes.into_values().collect()
}

pub fn cmd_knots(n: usize) {
    let classes = knot_classes(n);
    println!("n={n}: {} alternating knot classes", classes.len());
    let zeros: Vec<&KnotClass> = classes.iter().filter(|c| c.w == 0).collect();
    println!(
        "  zero-writhe: {} classes ({} certified chiral)",
        zeros.len(),
        zeros.iter().filter(|c| c.certified_chiral).count()
    );
    let mut sorted: Vec<&KnotClass> = zeros.clone();
    sorted.sort_by_key(|c| (c.w_x.abs() == 0, c.determinant));
    for c in sorted {
        println!(
            "    det={} |w_x|={} sigma={} bracket_symmetric={} certified_chiral={} members={}",
            c.determinant,
            c.w_x.abs(),
            c.signature,
            c.bracket_symmetric,
            c.certified_chiral,
            c.members,
        );
    }
}
