//! Seeded random diagram generation.
//!
//! Diagrams are grown from crossing-free loops by upward Reidemeister moves,
//! so every output is a genuine planar diagram, then a random subset of
//! crossings is switched to mix over and under strands.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::moves::MoveSpec;
use super::LinkDiagram;

/// Builds a random diagram with at most `c_max` crossings.  The same seed
/// always yields the same diagram.
pub fn random_diagram(seed: u64, c_max: usize) -> LinkDiagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let loops = 1 + rng.gen_range(0..2);
    let mut d = LinkDiagram::from_parts(&[], loops).unwrap();
    let target = rng.gen_range(0..=c_max);
    while d.crossing_count() < target {
        let room = target - d.crossing_count();
        let ups: alloc::vec::Vec<MoveSpec> = d
            .find_moves()
            .into_iter()
            .filter(|m| match m {
                MoveSpec::R1Plus { .. } => true,
                MoveSpec::R2Plus { .. } => room >= 2,
                _ => false,
            })
            .collect();
        let m = ups.choose(&mut rng).expect("upward move always exists");
        d = d.apply_move(m).unwrap();
    }
    for x in 0..d.crossing_count() {
        if rng.gen_bool(0.5) {
            d = d.switch(x);
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::super::parse::render_code;
    use super::*;

    #[test]
    fn same_seed_same_diagram() {
        for seed in 0..10 {
            let a = random_diagram(seed, 8);
            let b = random_diagram(seed, 8);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn crossing_counts_vary_and_respect_the_cap() {
        let mut seen = alloc::collections::BTreeSet::new();
        for seed in 0..40 {
            let d = random_diagram(seed, 8);
            assert!(d.crossing_count() <= 8);
            seen.insert(d.crossing_count());
        }
        assert!(seen.len() >= 4);
    }

    #[test]
    fn generated_diagrams_round_trip_through_text() {
        use super::super::parse::parse_diagram;
        for seed in 0..25 {
            let d = random_diagram(seed, 7);
            if d.crossing_count() == 0 {
                continue;
            }
            let code = render_code(&d);
            let back = parse_diagram(&code).unwrap();
            assert_eq!(render_code(&back), code, "seed {seed}");
        }
    }
}
