//! Kauffman bracket, normalized bracket polynomial, and the alternating
//! signature formula, used to separate knot classes during enumeration.

use std::collections::BTreeMap;

use writhesplit::diagram::{Diagram, Sign};

/// Sparse Laurent polynomial in one variable with i64 coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    pub coeffs: BTreeMap<i32, i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn monomial(exp: i32, coeff: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(exp, coeff);
        }
        Laurent { coeffs }
    }

    pub fn add_assign(&mut self, other: &Laurent) {
        for (&e, &c) in &other.coeffs {
            let v = self.coeffs.entry(e).or_insert(0);
            *v += c;
            if *v == 0 {
                self.coeffs.remove(&e);
            }
        }
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut coeffs: BTreeMap<i32, i64> = BTreeMap::new();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &other.coeffs {
                let v = coeffs.entry(e1 + e2).or_insert(0);
                *v += c1 * c2;
            }
        }
        coeffs.retain(|_, c| *c != 0);
        Laurent { coeffs }
    }

    /// Substitute A -> A^-1.
    pub fn reversed(&self) -> Laurent {
        Laurent {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    pub fn serialize(&self) -> String {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(e, c)| format!("{e}:{c}"))
            .collect();
        parts.join(",")
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            self.parent[x] = self.find(self.parent[x]);
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Loop count of one smoothing state. Bit i of `state` set means the
/// B-smoothing at crossing i. The A-smoothing of a positive crossing is the
/// orientation-respecting one.
fn state_loops(d: &Diagram, state: u32) -> usize {
    let arcs = d.arc_count();
    let mut dsu = Dsu::new(arcs);
    for (i, x) in d.crossings().iter().enumerate() {
        let a_smooth = (state >> i) & 1 == 0;
        let seifert = (x.sign == Sign::Positive) == a_smooth;
        if seifert {
            dsu.union(x.under_in.0, x.over_out.0);
            dsu.union(x.over_in.0, x.under_out.0);
        } else {
            dsu.union(x.under_in.0, x.over_in.0);
            dsu.union(x.under_out.0, x.over_out.0);
        }
    }
    let mut roots = std::collections::HashSet::new();
    for a in 0..arcs {
        roots.insert(dsu.find(a));
    }
    let crossing_free = d.components().iter().filter(|c| c.is_empty()).count();
    roots.len() + crossing_free
}

/// Kauffman bracket as a Laurent polynomial in A.
pub fn kauffman_bracket(d: &Diagram) -> Laurent {
    let n = d.crossing_count();
    assert!(n <= 20, "state sum is exponential in the crossing number");
    let delta = {
        let mut l = Laurent::monomial(2, -1);
        l.add_assign(&Laurent::monomial(-2, -1));
        l
    };
    // delta^k for k up to the max loop count.
    let mut delta_pows = vec![Laurent::monomial(0, 1)];
    for k in 1..=n + 1 + d.component_count() {
        let last = delta_pows.last().unwrap().clone();
        delta_pows.push(last.mul(&delta));
    }

    let mut total = Laurent::zero();
    for state in 0..1u32 << n {
        let b_count = state.count_ones() as i32;
        let a_count = n as i32 - b_count;
        let loops = state_loops(d, state);
        let term = Laurent::monomial(a_count - b_count, 1).mul(&delta_pows[loops - 1]);
        total.add_assign(&term);
    }
    total
}

/// Writhe-normalized bracket `(-A^3)^(-w) <D>`; an invariant of the
/// oriented link (and of the knot regardless of orientation).
pub fn normalized_bracket(d: &Diagram) -> Laurent {
    let w = d.writhe();
    let factor = if w >= 0 {
        let mut f = Laurent::monomial(0, 1);
        let neg_a3 = Laurent::monomial(-3, -1);
        for _ in 0..w {
            f = f.mul(&neg_a3);
        }
        f
    } else {
        let mut f = Laurent::monomial(0, 1);
        let neg_a3 = Laurent::monomial(3, -1);
        for _ in 0..-w {
            f = f.mul(&neg_a3);
        }
        f
    };
    factor.mul(&kauffman_bracket(d))
}

/// Class key up to mirror image: the lexicographically smaller of the
/// normalized bracket and its reversal.
pub fn amphichiral_class_key(d: &Diagram) -> String {
    let f = normalized_bracket(d);
    let a = f.serialize();
    let b = f.reversed().serialize();
    if a <= b {
        a
    } else {
        b
    }
}

/// True when the normalized bracket is mirror-symmetric; a chiral knot can
/// still be symmetric here, but an asymmetric one is certainly chiral.
pub fn bracket_mirror_symmetric(d: &Diagram) -> bool {
    let f = normalized_bracket(d);
    f == f.reversed()
}

/// Signature of an alternating link diagram: `s_A - 1 - n_+`, with `s_A`
/// the loop count of the all-A state and `n_+` the positive crossing count.
pub fn alternating_signature(d: &Diagram) -> i64 {
    assert!(d.is_alternating());
    let s_a = state_loops(d, 0) as i64;
    let n_plus = d
        .crossings()
        .iter()
        .filter(|x| x.sign == Sign::Positive)
        .count() as i64;
    s_a - 1 - n_plus
}
