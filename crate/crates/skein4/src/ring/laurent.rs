//! Laurent polynomials in one or two variables with integer coefficients.
//!
//! These carry the values of specialization homomorphisms, so equality must
//! be exact: terms are a map from exponent vectors to `BigInt` coefficients
//! and zero coefficients are never stored. Unused variable slots keep
//! exponent 0, so a one-variable polynomial simply ignores the second slot.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<[i64; 2], BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: &[&str]) -> LaurentPoly {
        assert!(!vars.is_empty() && vars.len() <= 2, "one or two variables");
        LaurentPoly {
            vars: vars.iter().map(|v| String::from(*v)).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], value: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero(vars);
        out.insert([0, 0], BigInt::from(value));
        out
    }

    pub fn one(vars: &[&str]) -> LaurentPoly {
        LaurentPoly::constant(vars, 1)
    }

    /// The monomial `c * x^k` where `x` is the variable in slot `slot`.
    pub fn monomial(vars: &[&str], slot: usize, k: i64, c: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero(vars);
        assert!(slot < out.vars.len());
        let mut exps = [0i64; 2];
        exps[slot] = k;
        out.insert(exps, BigInt::from(c));
        out
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64; 2], &BigInt)> {
        self.terms.iter()
    }

    fn insert(&mut self, exps: [i64; 2], c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    fn assert_same_vars(&self, other: &LaurentPoly) {
        assert_eq!(self.vars, other.vars, "mixed Laurent variable sets");
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero_like(self);
        for (e, c) in &self.terms {
            out.terms.insert(*e, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        self.assert_same_vars(other);
        let mut out = LaurentPoly::zero_like(self);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.insert([e1[0] + e2[0], e1[1] + e2[1]], c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, k: i64) -> LaurentPoly {
        self.scale_big(&BigInt::from(k))
    }

    pub fn scale_big(&self, factor: &BigInt) -> LaurentPoly {
        let mut out = LaurentPoly::zero_like(self);
        if factor.is_zero() {
            return out;
        }
        for (e, c) in &self.terms {
            out.terms.insert(*e, c * factor);
        }
        out
    }

    /// `self^k`. Negative exponents require a single-term (monomial)
    /// base with coefficient 1 or -1; anything else returns `None`.
    pub fn pow(&self, k: i64) -> Option<LaurentPoly> {
        if k == 0 {
            return Some(LaurentPoly::one_like(self));
        }
        if k < 0 {
            if self.terms.len() != 1 {
                return None;
            }
            let (e, c) = self.terms.iter().next().expect("single term");
            let unit = if *c == BigInt::from(1) {
                BigInt::from(1)
            } else if *c == BigInt::from(-1) {
                if k % 2 == 0 {
                    BigInt::from(1)
                } else {
                    BigInt::from(-1)
                }
            } else {
                return None;
            };
            let mut out = LaurentPoly::zero_like(self);
            out.terms.insert([e[0] * k, e[1] * k], unit);
            return Some(out);
        }
        let mut acc = LaurentPoly::one_like(self);
        let mut base = self.clone();
        let mut exp = k as u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        Some(acc)
    }

    /// Substitute `x -> x^-1` for the variable in slot `slot`.
    pub fn invert_var(&self, slot: usize) -> LaurentPoly {
        assert!(slot < self.vars.len());
        let mut out = LaurentPoly::zero_like(self);
        for (e, c) in &self.terms {
            let mut flipped = *e;
            flipped[slot] = -flipped[slot];
            out.terms.insert(flipped, c.clone());
        }
        out
    }

    fn zero_like(other: &LaurentPoly) -> LaurentPoly {
        LaurentPoly {
            vars: other.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    fn one_like(other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero_like(other);
        out.terms.insert([0, 0], BigInt::from(1));
        out
    }

    /// Deterministic display, highest exponents first.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut order: Vec<(&[i64; 2], &BigInt)> = self.terms.iter().collect();
        order.sort_by(|(x, _), (y, _)| y.cmp(x));
        let mut out = String::new();
        for (i, (e, c)) in order.iter().enumerate() {
            let negative = c.sign() == num_bigint::Sign::Minus;
            let mag = if negative { -(*c).clone() } else { (*c).clone() };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut parts: Vec<String> = Vec::new();
            if mag != BigInt::from(1) {
                parts.push(format!("{mag}"));
            }
            for (slot, name) in self.vars.iter().enumerate() {
                match e[slot] {
                    0 => {}
                    1 => parts.push(name.clone()),
                    k => parts.push(format!("{name}^{k}")),
                }
            }
            if parts.is_empty() {
                parts.push(String::from("1"));
            }
            out.push_str(&parts.join("*"));
        }
        out
    }

    /// Parses the syntax `render` produces: terms joined by `+` or `-`,
    /// each a `*`-separated product of an integer and `var^exp` factors.
    pub fn parse(vars: &[&str], input: &str) -> Result<LaurentPoly, String> {
        fn skip_ws(s: &[u8], i: &mut usize) {
            while *i < s.len() && s[*i].is_ascii_whitespace() {
                *i += 1;
            }
        }
        fn read_digits<'a>(s: &'a [u8], i: &mut usize) -> Option<&'a [u8]> {
            let start = *i;
            while *i < s.len() && s[*i].is_ascii_digit() {
                *i += 1;
            }
            if *i == start {
                None
            } else {
                Some(&s[start..*i])
            }
        }

        let mut out = LaurentPoly::zero(vars);
        let s = input.as_bytes();
        let mut i = 0usize;
        skip_ws(s, &mut i);
        if i == s.len() {
            return Err(String::from("empty polynomial"));
        }
        let mut negative = false;
        if s[i] == b'+' || s[i] == b'-' {
            negative = s[i] == b'-';
            i += 1;
        }
        loop {
            let mut coeff = BigInt::from(if negative { -1 } else { 1 });
            let mut exps = [0i64; 2];
            loop {
                skip_ws(s, &mut i);
                if let Some(d) = read_digits(s, &mut i) {
                    let mag = BigInt::parse_bytes(d, 10)
                        .ok_or_else(|| String::from("bad integer"))?;
                    coeff *= mag;
                } else {
                    let mut hit: Option<usize> = None;
                    for (slot, name) in out.vars.iter().enumerate() {
                        if s[i..].starts_with(name.as_bytes())
                            && hit.is_none_or(|h| out.vars[h].len() < name.len())
                        {
                            hit = Some(slot);
                        }
                    }
                    let Some(slot) = hit else {
                        return Err(format!("expected a coefficient or variable at byte {i}"));
                    };
                    i += out.vars[slot].len();
                    let mut k = 1i64;
                    if i < s.len() && s[i] == b'^' {
                        i += 1;
                        let neg_exp = i < s.len() && s[i] == b'-';
                        if neg_exp {
                            i += 1;
                        }
                        let d = read_digits(s, &mut i)
                            .ok_or_else(|| format!("missing exponent at byte {i}"))?;
                        k = core::str::from_utf8(d)
                            .ok()
                            .and_then(|t| t.parse::<i64>().ok())
                            .ok_or_else(|| format!("exponent out of range at byte {i}"))?;
                        if neg_exp {
                            k = -k;
                        }
                    }
                    exps[slot] = exps[slot]
                        .checked_add(k)
                        .ok_or_else(|| String::from("exponent overflow"))?;
                }
                skip_ws(s, &mut i);
                if i < s.len() && s[i] == b'*' {
                    i += 1;
                } else {
                    break;
                }
            }
            out.insert(exps, coeff);
            skip_ws(s, &mut i);
            if i == s.len() {
                return Ok(out);
            }
            negative = match s[i] {
                b'+' => false,
                b'-' => true,
                _ => return Err(format!("expected '+' or '-' at byte {i}")),
            };
            i += 1;
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64, c: i64) -> LaurentPoly {
        LaurentPoly::monomial(&["q"], 0, k, c)
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let x = q(2, 1).add(&q(-2, 1));
        let y = x.mul(&x);
        assert_eq!(y, q(4, 1).add(&q(0, 2)).add(&q(-4, 1)));
        assert!(x.sub(&x).is_zero());
        assert_eq!(x.neg().scale(-1), x);
    }

    #[test]
    fn powers_including_negative_monomials() {
        let m = q(-3, -1);
        assert_eq!(m.pow(2).unwrap(), q(-6, 1));
        assert_eq!(m.pow(-2).unwrap(), q(6, 1));
        assert_eq!(m.pow(-3).unwrap(), q(9, -1));
        let x = q(1, 1).add(&q(-1, 1));
        assert_eq!(x.pow(0).unwrap(), LaurentPoly::one(&["q"]));
        assert!(x.pow(-1).is_none());
        assert_eq!(x.pow(3).unwrap(), q(3, 1).add(&q(1, 3)).add(&q(-1, 3)).add(&q(-3, 1)));
    }

    #[test]
    fn variable_inversion() {
        let x = q(2, 1).add(&q(-10, -3));
        assert_eq!(x.invert_var(0), q(-2, 1).add(&q(10, -3)));
        assert_eq!(x.invert_var(0).invert_var(0), x);
    }

    #[test]
    fn two_variable_display() {
        let vars = ["a", "A"];
        let x = LaurentPoly::monomial(&vars, 0, 1, 1)
            .mul(&LaurentPoly::monomial(&vars, 1, -2, 1))
            .add(&LaurentPoly::constant(&vars, -2));
        assert_eq!(x.render(), "a*A^-2 - 2");
        assert_eq!(q(0, 0).render(), "0");
        assert_eq!(q(-2, -1).add(&q(-10, -1)).render(), "-q^-2 - q^-10");
    }

    #[test]
    fn parse_round_trips_rendered_text() {
        for s in ["0", "1", "-1", "q^2 + 2 - q^-2", "-3*q^8 + q - 5*q^-1"] {
            let p = LaurentPoly::parse(&["q"], s).unwrap();
            assert_eq!(p.render(), s);
        }
        assert_eq!(
            LaurentPoly::parse(&["q"], "-q^2 - q^-2").unwrap(),
            q(2, -1).add(&q(-2, -1))
        );
        let vars = ["a", "A"];
        let two = LaurentPoly::parse(&vars, "1 + a^-1*A^-1 - a^-1*A").unwrap();
        assert_eq!(two.render(), "1 - a^-1*A + a^-1*A^-1");
        assert_eq!(LaurentPoly::parse(&vars, "a*a^-1").unwrap().render(), "1");
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(LaurentPoly::parse(&["q"], "").is_err());
        assert!(LaurentPoly::parse(&["q"], "q + t").is_err());
        assert!(LaurentPoly::parse(&["q"], "q q").is_err());
        assert!(LaurentPoly::parse(&["q"], "q^").is_err());
        assert!(LaurentPoly::parse(&["q"], "3 *").is_err());
    }
}
