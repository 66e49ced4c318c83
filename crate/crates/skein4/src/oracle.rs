//! Independent brute-force evaluators.
//!
//! These share the diagram layer with [`crate::skein`] but none of its
//! recursion machinery, presented rings, or memoization, so agreement
//! between the two is a real cross-check rather than a tautology.
//!
//! - [`bracket_state_sum`]: the Kauffman bracket by full enumeration of all
//!   `2^c` smoothing states.
//! - [`jones_from_bracket`]: `(-q^3)^-w` times the bracket in `q`.
//! - [`q_oracle`]: the four-term recursion specialized directly to Laurent
//!   polynomials in `x`, bypassing the symbolic module entirely.

use crate::diagram::{LinkDiagram, Smoothing, TraversalContext};
use crate::ring::LaurentPoly;
use crate::skein::{EvalConfig, EvalError};

fn guard(d: &LinkDiagram, cfg: &EvalConfig) -> Result<(), EvalError> {
    if d.crossing_count() > cfg.max_crossings {
        return Err(EvalError::TooManyCrossings {
            crossings: d.crossing_count(),
            limit: cfg.max_crossings,
        });
    }
    Ok(())
}

fn state_sum(d: &LinkDiagram, cfg: &EvalConfig, var: &str) -> Result<LaurentPoly, EvalError> {
    guard(d, cfg)?;
    let vars = [var];
    let c = d.crossing_count();
    let delta = LaurentPoly::monomial(&vars, 0, 2, -1).add(&LaurentPoly::monomial(&vars, 0, -2, -1));
    let mut total = LaurentPoly::zero(&vars);
    for state in 0..(1u64 << c) {
        let mut cur = d.clone();
        let mut exp = 0i64;
        for bit in 0..c {
            let kind = if state >> bit & 1 == 0 {
                exp += 1;
                Smoothing::I
            } else {
                exp -= 1;
                Smoothing::II
            };
            cur = cur.smooth(0, kind);
        }
        let loops = cur.mu() as i64;
        let term = LaurentPoly::monomial(&vars, 0, exp, 1)
            .mul(&delta.pow(loops - 1).expect("nonnegative power"));
        total = total.add(&term);
    }
    Ok(total)
}

/// The Kauffman bracket in `A`: smoothing I weighs `A`, smoothing II
/// weighs `A^-1`, and a state with `k` loops contributes
/// `(-A^2 - A^-2)^(k-1)`.
pub fn bracket_state_sum(d: &LinkDiagram, cfg: &EvalConfig) -> Result<LaurentPoly, EvalError> {
    state_sum(d, cfg, "A")
}

/// The Jones polynomial obtained from the bracket: `(-q^3)^-w` times the
/// state sum written in `q`, with the writhe taken under the canonical
/// traversal orientation. Matches [`crate::skein::jones`] exactly.
pub fn jones_from_bracket(d: &LinkDiagram, cfg: &EvalConfig) -> Result<LaurentPoly, EvalError> {
    let bracket = state_sum(d, cfg, "q")?;
    let report = d.classify(&TraversalContext::canonical(d))?;
    let weight = LaurentPoly::monomial(&["q"], 0, 3, -1)
        .pow(-report.writhe)
        .expect("monomial power");
    Ok(weight.mul(&bracket))
}

fn q_rec(d: &LinkDiagram) -> LaurentPoly {
    let vars = ["x"];
    let report = d
        .classify(&TraversalContext::canonical(d))
        .expect("canonical context is valid");
    match report.first_bad {
        None => {
            // Descending diagrams are unlinks: value (2x^-1 - 1)^(mu - 1).
            let circle = LaurentPoly::monomial(&vars, 0, -1, 2).sub(&LaurentPoly::one(&vars));
            circle.pow(d.mu() as i64 - 1).expect("nonnegative power")
        }
        Some(x) => {
            let smoothed = q_rec(&d.smooth(x, Smoothing::I)).add(&q_rec(&d.smooth(x, Smoothing::II)));
            LaurentPoly::monomial(&vars, 0, 1, 1)
                .mul(&smoothed)
                .sub(&q_rec(&d.switch(x)))
        }
    }
}

/// The Q polynomial in `x` by direct recursion: at the first
/// non-descending crossing, `Q(D) = x (Q(D_I) + Q(D_II)) - Q(D_switch)`,
/// with `(2x^-1 - 1)^(mu-1)` on descending diagrams.
pub fn q_oracle(d: &LinkDiagram, cfg: &EvalConfig) -> Result<LaurentPoly, EvalError> {
    guard(d, cfg)?;
    Ok(q_rec(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse::parse_diagram;

    fn diagram(code: &str) -> LinkDiagram {
        parse_diagram(code).expect("valid code")
    }

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn bracket_of_the_unknot_is_one() {
        assert_eq!(bracket_state_sum(&diagram("O 1"), &cfg()).unwrap().render(), "1");
        assert_eq!(
            bracket_state_sum(&diagram("O 2"), &cfg()).unwrap().render(),
            "-A^2 - A^-2"
        );
    }

    #[test]
    fn bracket_pins_the_smoothing_orientation() {
        // The positive kink must give -A^3; this nails down which joining
        // is smoothing I.
        assert_eq!(
            bracket_state_sum(&diagram("C(1,1,2,2)"), &cfg()).unwrap().render(),
            "-A^3"
        );
        assert_eq!(
            bracket_state_sum(&diagram("C(1,2,2,1)"), &cfg()).unwrap().render(),
            "-A^-3"
        );
    }

    #[test]
    fn bracket_of_the_hopf_link() {
        assert_eq!(
            bracket_state_sum(&diagram("C(1,3,2,4) C(3,1,4,2)"), &cfg())
                .unwrap()
                .render(),
            "-A^4 - A^-4"
        );
    }

    #[test]
    fn bracket_of_the_trefoil() {
        let t = bracket_state_sum(
            &diagram("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"),
            &cfg(),
        )
        .unwrap();
        let m = bracket_state_sum(
            &diagram("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").mirror(),
            &cfg(),
        )
        .unwrap();
        // Mirroring inverts A.
        assert_eq!(t.invert_var(0), m);
        let a = |k: i64, c: i64| LaurentPoly::monomial(&["A"], 0, k, c);
        let one_side = a(7, 1).add(&a(3, -1)).add(&a(-5, -1));
        assert!(t == one_side || t == one_side.invert_var(0));
    }

    #[test]
    fn q_oracle_small_values() {
        assert_eq!(q_oracle(&diagram("O 1"), &cfg()).unwrap().render(), "1");
        assert_eq!(
            q_oracle(&diagram("O 2"), &cfg()).unwrap().render(),
            "-1 + 2*x^-1"
        );
        assert_eq!(
            q_oracle(&diagram("C(1,1,2,2)"), &cfg()).unwrap().render(),
            "1"
        );
        assert_eq!(
            q_oracle(&diagram("C(1,3,2,4) C(3,1,4,2)"), &cfg()).unwrap().render(),
            "2*x + 1 - 2*x^-1"
        );
    }

    #[test]
    fn q_of_the_trefoil_is_chirality_blind() {
        let t = diagram("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
        let qt = q_oracle(&t, &cfg()).unwrap();
        assert_eq!(qt.render(), "2*x^2 + 2*x - 3");
        assert_eq!(q_oracle(&t.mirror(), &cfg()).unwrap(), qt);
    }

    #[test]
    fn the_cap_applies_to_state_sums() {
        let small = EvalConfig {
            max_crossings: 2,
            ..EvalConfig::default()
        };
        let t = diagram("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
        assert!(matches!(
            bracket_state_sum(&t, &small),
            Err(EvalError::TooManyCrossings { crossings: 3, limit: 2 })
        ));
    }
}
