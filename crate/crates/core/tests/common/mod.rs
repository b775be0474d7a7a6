//! Shared helpers for the integration suites: seeded random braid-closure
//! diagrams and catalog paths.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::path::PathBuf;

use writhesplit::diagram::{braid_closure, BraidLetter, Diagram, Sign};

pub fn table_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../tables")
        .join(name)
}

/// Random braid word on `strands` strands touching every column, so the
/// closure has no crossing-free components.
fn random_word(rng: &mut StdRng, strands: usize, len: usize, alternating: bool) -> Vec<BraidLetter> {
    loop {
        let word: Vec<BraidLetter> = (0..len)
            .map(|_| {
                let position = rng.gen_range(1..strands);
                let sign = if alternating {
                    // Odd columns one sign, even columns the other: such
                    // closures are alternating diagrams.
                    if position % 2 == 1 {
                        Sign::Positive
                    } else {
                        Sign::Negative
                    }
                } else if rng.gen_bool(0.5) {
                    Sign::Positive
                } else {
                    Sign::Negative
                };
                BraidLetter::new(position, sign)
            })
            .collect();
        let all_touched = (1..=strands)
            .all(|col| word.iter().any(|l| l.position == col || l.position + 1 == col));
        if all_touched {
            return word;
        }
    }
}

/// Deterministic sample of random braid-closure diagrams with at most
/// `max_crossings` crossings.
pub fn random_diagrams(seed: u64, count: usize, max_crossings: usize, alternating: bool) -> Vec<Diagram> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let strands = rng.gen_range(2..=5usize);
        let len = rng.gen_range(strands.max(2)..=max_crossings);
        let word = random_word(&mut rng, strands, len, alternating);
        let d = braid_closure(strands, &word).expect("valid braid word");
        if alternating {
            assert!(d.is_alternating(), "alternating-pattern closure must alternate");
        }
        out.push(d);
    }
    out
}
