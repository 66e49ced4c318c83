//! Seeded random ring elements for the rewrite health checks.

use rand::Rng;
use skein4::ring::Monomial;
use skein4::{Presentation, RingElement};

/// A few random monomials over the generators the presentation uses,
/// with small exponents and coefficients.
pub fn random_element(rng: &mut impl Rng, pres: Presentation) -> RingElement {
    let mut x = RingElement::zero();
    for _ in 0..rng.gen_range(1..6) {
        let mut m = Monomial {
            e: rng.gen_range(0..2),
            ep: rng.gen_range(0..2),
            a: rng.gen_range(0..3),
            ap: rng.gen_range(0..3),
            b: rng.gen_range(0..3),
            bp: rng.gen_range(0..3),
            big_a: rng.gen_range(-3..4),
            n: rng.gen_range(0..4),
        };
        match pres {
            Presentation::B1 => {
                m.b = 0;
                m.bp = 0;
                m.big_a = 0;
            }
            Presentation::B1A => {
                m.b = 0;
                m.bp = 0;
            }
            Presentation::B2 => {
                m.e = 0;
                m.ep = 0;
                m.big_a = 0;
            }
        }
        x = x.add(&RingElement::from_monomial(m).scale(rng.gen_range(-6..7)));
    }
    x
}
