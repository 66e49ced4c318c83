//! Specialization homomorphisms from the presented modules onto Laurent
//! polynomial rings.
//!
//! A homomorphism assigns a Laurent polynomial to each ring generator and
//! sends the module ladder `v_1, v_2, ...` to a geometric sequence
//! `v_first, v_first * ratio, ...`. [`Homomorphism::check`] evaluates every
//! defining relation of the target presentation under the assignment and
//! returns the residuals, so a claimed specialization can be verified
//! rather than trusted.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::laurent::LaurentPoly;
use super::{relations, Presentation, RingElement};

/// Ring generator names, used to key generator images.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Gen {
    E,
    Ep,
    Aa,
    Ap,
    B,
    Bp,
    BigA,
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Gen::E => "e",
            Gen::Ep => "e'",
            Gen::Aa => "a",
            Gen::Ap => "a'",
            Gen::B => "b",
            Gen::Bp => "b'",
            Gen::BigA => "A",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpecializeError {
    /// A monomial uses a generator the homomorphism gives no image to.
    MissingImage(Gen),
    /// A generator appears with a negative exponent but its image is not
    /// an invertible monomial.
    NonInvertibleImage(Gen),
}

impl fmt::Display for SpecializeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecializeError::MissingImage(g) => write!(f, "no image assigned to generator {g}"),
            SpecializeError::NonInvertibleImage(g) => {
                write!(f, "image of {g} is not invertible but a negative power is required")
            }
        }
    }
}

impl core::error::Error for SpecializeError {}

/// A ring-and-module map onto Laurent polynomials.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    pub name: String,
    pub pres: Presentation,
    /// For `B2`: check against the writhe-weighted module relations
    /// instead of the plain ones.
    pub writhe_module: bool,
    vars: Vec<String>,
    images: BTreeMap<Gen, LaurentPoly>,
    v_first: LaurentPoly,
    v_ratio: LaurentPoly,
}

impl Homomorphism {
    pub fn new(
        name: &str,
        pres: Presentation,
        writhe_module: bool,
        vars: &[&str],
        images: &[(Gen, LaurentPoly)],
        v_first: LaurentPoly,
        v_ratio: LaurentPoly,
    ) -> Homomorphism {
        let vars: Vec<String> = vars.iter().map(|v| String::from(*v)).collect();
        for (_, img) in images {
            assert_eq!(img.vars(), &vars[..], "image in wrong variable set");
        }
        assert_eq!(v_first.vars(), &vars[..]);
        assert_eq!(v_ratio.vars(), &vars[..]);
        Homomorphism {
            name: String::from(name),
            pres,
            writhe_module,
            vars,
            images: images.iter().cloned().collect(),
            v_first,
            v_ratio,
        }
    }

    pub fn vars(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    pub fn image(&self, g: Gen) -> Option<&LaurentPoly> {
        self.images.get(&g)
    }

    /// Image of the module generator `v_n` (`n >= 1`).
    pub fn v_image(&self, n: u32) -> LaurentPoly {
        debug_assert!(n >= 1);
        let ratio_pow = self.v_ratio.pow(i64::from(n) - 1).expect("nonnegative power");
        self.v_first.mul(&ratio_pow)
    }

    fn gen_power(&self, g: Gen, exp: i64) -> Result<LaurentPoly, SpecializeError> {
        if exp == 0 {
            let vars = self.vars();
            return Ok(LaurentPoly::one(&vars));
        }
        let img = self.images.get(&g).ok_or(SpecializeError::MissingImage(g))?;
        img.pow(exp).ok_or(SpecializeError::NonInvertibleImage(g))
    }

    /// Apply the homomorphism to a (normalized or not) element.
    pub fn specialize(&self, x: &RingElement) -> Result<LaurentPoly, SpecializeError> {
        let vars = self.vars();
        let mut acc = LaurentPoly::zero(&vars);
        for (m, c) in x.terms() {
            let mut term = LaurentPoly::one(&vars);
            for (g, exp) in [
                (Gen::E, i64::from(m.e)),
                (Gen::Ep, i64::from(m.ep)),
                (Gen::Aa, i64::from(m.a)),
                (Gen::Ap, i64::from(m.ap)),
                (Gen::B, i64::from(m.b)),
                (Gen::Bp, i64::from(m.bp)),
                (Gen::BigA, i64::from(m.big_a)),
            ] {
                if exp != 0 {
                    term = term.mul(&self.gen_power(g, exp)?);
                }
            }
            if m.n > 0 {
                term = term.mul(&self.v_image(m.n));
            }
            acc = acc.add(&term.scale_big(c));
        }
        Ok(acc)
    }

    /// Evaluate every relation of the target presentation under this
    /// assignment. Returns `(label, residual)` pairs; a genuine
    /// specialization has every residual zero.
    pub fn check(&self, n_max: u32) -> Result<Vec<(String, LaurentPoly)>, SpecializeError> {
        let mut out = Vec::new();
        for rel in relations(self.pres, self.writhe_module, n_max) {
            let lhs = self.specialize(&rel.lhs)?;
            let rhs = self.specialize(&rel.rhs)?;
            out.push((rel.label, lhs.sub(&rhs)));
        }
        Ok(out)
    }

    /// The Jones polynomial in `q`: smoothing weights `q` and `q^-1`, kink
    /// weight `-q^-3`, circle value `-q^2 - q^-2`.
    pub fn jones() -> Homomorphism {
        let v = ["q"];
        let q = |k: i64| LaurentPoly::monomial(&v, 0, k, 1);
        Homomorphism::new(
            "jones",
            Presentation::B2,
            true,
            &v,
            &[
                (Gen::Aa, q(1)),
                (Gen::Ap, q(1)),
                (Gen::B, q(-1)),
                (Gen::Bp, q(-1)),
                (Gen::BigA, LaurentPoly::monomial(&v, 0, -3, -1)),
            ],
            LaurentPoly::one(&v),
            q(2).neg().sub(&q(-2)),
        )
    }

    /// The Q polynomial in `x`: both involutions become 1, both twist
    /// generators `-x`, circle value `2x^-1 - 1`.
    pub fn q_poly() -> Homomorphism {
        let v = ["x"];
        let x = |k: i64, c: i64| LaurentPoly::monomial(&v, 0, k, c);
        Homomorphism::new(
            "q",
            Presentation::B1,
            false,
            &v,
            &[
                (Gen::E, LaurentPoly::one(&v)),
                (Gen::Ep, LaurentPoly::one(&v)),
                (Gen::Aa, x(1, -1)),
                (Gen::Ap, x(1, -1)),
            ],
            LaurentPoly::one(&v),
            x(-1, 2).sub(&LaurentPoly::one(&v)),
        )
    }

    /// The Dubrovnik-normalized two-variable specialization of the weighted
    /// presentation: involutions become -1, the twist generators map to the
    /// variable `a`, the weight to `A`.
    pub fn dubrovnik() -> Homomorphism {
        let v = ["a", "A"];
        let mono = |slot: usize, k: i64, c: i64| LaurentPoly::monomial(&v, slot, k, c);
        let neg_one = LaurentPoly::constant(&v, -1);
        let ratio = LaurentPoly::one(&v)
            .add(&mono(0, -1, 1).mul(&mono(1, -1, 1)))
            .sub(&mono(0, -1, 1).mul(&mono(1, 1, 1)));
        Homomorphism::new(
            "dubrovnik",
            Presentation::B1A,
            false,
            &v,
            &[
                (Gen::E, neg_one.clone()),
                (Gen::Ep, neg_one),
                (Gen::Aa, mono(0, 1, 1)),
                (Gen::Ap, mono(0, 1, 1)),
                (Gen::BigA, mono(1, 1, 1)),
            ],
            LaurentPoly::one(&v),
            ratio,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Monomial;

    fn assert_all_zero(hom: &Homomorphism, n_max: u32) {
        for (label, residual) in hom.check(n_max).expect("specialize") {
            assert!(
                residual.is_zero(),
                "{}: nonzero residual for {label}: {}",
                hom.name,
                residual.render()
            );
        }
    }

    #[test]
    fn jones_satisfies_the_writhe_weighted_relations() {
        assert_all_zero(&Homomorphism::jones(), 8);
    }

    #[test]
    fn q_satisfies_the_involution_presentation() {
        assert_all_zero(&Homomorphism::q_poly(), 8);
    }

    #[test]
    fn dubrovnik_satisfies_the_weighted_presentation() {
        assert_all_zero(&Homomorphism::dubrovnik(), 6);
    }

    #[test]
    fn a_wrong_assignment_leaves_a_residual() {
        let v = ["t"];
        let t = |k: i64| LaurentPoly::monomial(&v, 0, k, 1);
        let bad = Homomorphism::new(
            "bad",
            Presentation::B2,
            false,
            &v,
            &[
                (Gen::Aa, t(1)),
                (Gen::Ap, t(1)),
                (Gen::B, t(2)),
                (Gen::Bp, t(2)),
            ],
            LaurentPoly::one(&v),
            t(1).add(&t(2)),
        );
        let residuals = bad.check(3).expect("specialize");
        let quad = residuals
            .iter()
            .find(|(label, _)| label == "(1 - a)*a = (1 - b)*b")
            .expect("relation listed");
        assert!(!quad.1.is_zero());
    }

    #[test]
    fn specialize_matches_hand_computation() {
        // -e'*v_2 - a*v_1 - e*a*v_1 under the Q assignment.
        let x = RingElement::e_prime()
            .mul(&RingElement::v(2))
            .unwrap()
            .neg()
            .sub(&RingElement::a().mul(&RingElement::v(1)).unwrap())
            .sub(&RingElement::from_monomial(Monomial { e: 1, a: 1, n: 1, ..Monomial::ONE }));
        let img = Homomorphism::q_poly().specialize(&x).unwrap();
        assert_eq!(img.render(), "2*x + 1 - 2*x^-1");
    }

    #[test]
    fn missing_images_are_reported() {
        let x = RingElement::b().mul(&RingElement::v(1)).unwrap();
        assert_eq!(
            Homomorphism::q_poly().specialize(&x),
            Err(SpecializeError::MissingImage(Gen::B))
        );
    }

    #[test]
    fn v_images_follow_the_geometric_ladder() {
        let jones = Homomorphism::jones();
        let delta = LaurentPoly::monomial(&["q"], 0, 2, -1)
            .add(&LaurentPoly::monomial(&["q"], 0, -2, -1));
        assert_eq!(jones.v_image(1), LaurentPoly::one(&["q"]));
        assert_eq!(jones.v_image(3), delta.mul(&delta));
    }
}
