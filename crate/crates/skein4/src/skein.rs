//! The skein evaluators.
//!
//! Each invariant is defined by a resolution recursion on diagrams: at a
//! chosen crossing the diagram is replaced by its switched and/or smoothed
//! versions with ring coefficients, and crossingless (or descending)
//! diagrams get an explicit base value. The recursion bottoms out because
//! every branch lowers the measure (crossing count, then the number of
//! descent violations).
//!
//! - `invariant_b1`: four-term recursion at the first non-descending
//!   crossing of a traversal; values in the [`Presentation::B1`] module.
//! - `invariant_b1_writhe`: the same recursion with writhe-weighted base
//!   values in [`Presentation::B1A`]; `A^-w * f` is fully move-invariant.
//! - `invariant_b2`: three-term smoothing recursion at the lowest-numbered
//!   crossing; values in the [`Presentation::B2`] module.
//! - `invariant_b2_writhe`: the same smoothing recursion evaluated through
//!   a specialization homomorphism, times the image of `A` to the writhe;
//!   with the Jones assignment this is the Jones polynomial.
//!
//! Resolution order must not matter; [`check_order_independence`] verifies
//! that directly. [`check_reidemeister`] verifies move invariance along a
//! random walk of Reidemeister moves.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::canonical::canonical_code;
use crate::diagram::moves::MoveSpec;
use crate::diagram::{DiagramError, LinkDiagram, Smoothing, TraversalContext};
use crate::ring::hom::SpecializeError;
use crate::ring::{Gen, Homomorphism, LaurentPoly, Presentation, RingElement};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// When to cache sub-diagram values keyed by canonical code.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MemoPolicy {
    /// Memoize when the top-level diagram has at least 6 crossings.
    Auto,
    On,
    Off,
}

/// Evaluation limits and caching behaviour.
#[derive(Clone, Copy, Debug)]
pub struct EvalConfig {
    /// Refuse diagrams with more crossings than this.
    pub max_crossings: usize,
    pub memo: MemoPolicy,
}

impl Default for EvalConfig {
    fn default() -> EvalConfig {
        EvalConfig {
            max_crossings: 16,
            memo: MemoPolicy::Auto,
        }
    }
}

impl EvalConfig {
    fn memo_enabled(&self, crossings: usize) -> bool {
        match self.memo {
            MemoPolicy::On => true,
            MemoPolicy::Off => false,
            MemoPolicy::Auto => crossings >= 6,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EvalError {
    TooManyCrossings { crossings: usize, limit: usize },
    Diagram(DiagramError),
    Specialize(SpecializeError),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::TooManyCrossings { crossings, limit } => {
                write!(f, "diagram has {crossings} crossings, limit is {limit}")
            }
            EvalError::Diagram(e) => write!(f, "{e}"),
            EvalError::Specialize(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for EvalError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            EvalError::TooManyCrossings { .. } => None,
            EvalError::Diagram(e) => Some(e),
            EvalError::Specialize(e) => Some(e),
        }
    }
}

impl From<DiagramError> for EvalError {
    fn from(e: DiagramError) -> EvalError {
        EvalError::Diagram(e)
    }
}

impl From<SpecializeError> for EvalError {
    fn from(e: SpecializeError) -> EvalError {
        EvalError::Specialize(e)
    }
}

/// A computed invariant together with the diagram statistics the
/// normalizations depend on.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantValue {
    /// Normal form in the presentation the invariant targets.
    pub element: RingElement,
    pub crossings: usize,
    /// Number of link components (including free loops).
    pub mu: usize,
    /// Writhe under the canonical traversal orientation.
    pub writhe: i64,
}

fn guard(d: &LinkDiagram, cfg: &EvalConfig) -> Result<(), EvalError> {
    if d.crossing_count() > cfg.max_crossings {
        return Err(EvalError::TooManyCrossings {
            crossings: d.crossing_count(),
            limit: cfg.max_crossings,
        });
    }
    Ok(())
}

struct Memo {
    on: bool,
    /// Quotient memo keys by component reversal (safe only for invariants
    /// that do not feel orientation).
    reversals: bool,
    map: BTreeMap<Vec<u32>, RingElement>,
}

impl Memo {
    fn new(on: bool, reversals: bool) -> Memo {
        Memo {
            on,
            reversals,
            map: BTreeMap::new(),
        }
    }

    fn get(&self, d: &LinkDiagram) -> Option<RingElement> {
        if !self.on {
            return None;
        }
        self.map.get(&canonical_code(d, self.reversals)).cloned()
    }

    fn put(&mut self, d: &LinkDiagram, v: &RingElement) {
        if self.on {
            self.map.insert(canonical_code(d, self.reversals), v.clone());
        }
    }
}

fn b1_base(d: &LinkDiagram, weighted: bool, writhe: i64) -> RingElement {
    let mu = d.mu() as u32;
    debug_assert!(mu >= 1, "empty diagrams carry no invariant");
    let v = RingElement::v(mu);
    if weighted {
        RingElement::big_a(writhe as i32).mul(&v).expect("ring product")
    } else {
        v
    }
}

/// Core four-term recursion with a per-diagram canonical context.
fn b1_rec(d: &LinkDiagram, weighted: bool, memo: &mut Memo) -> RingElement {
    if let Some(hit) = memo.get(d) {
        return hit;
    }
    let pres = if weighted { Presentation::B1A } else { Presentation::B1 };
    let ctx = TraversalContext::canonical(d);
    let report = d.classify(&ctx).expect("canonical context is valid");
    let val = match report.first_bad {
        None => b1_base(d, weighted, report.writhe),
        Some(x) => {
            let st = report.crossings[x];
            let (ge, ga) = if st.inter {
                (RingElement::e_prime(), RingElement::a_prime())
            } else {
                (RingElement::e(), RingElement::a())
            };
            let f_sw = b1_rec(&d.switch(x), weighted, memo);
            let f_i = b1_rec(&d.smooth(x, Smoothing::I), weighted, memo);
            let f_ii = b1_rec(&d.smooth(x, Smoothing::II), weighted, memo);
            let gea = ge.mul(&ga).expect("ring product");
            ge.mul(&f_sw)
                .expect("module scale")
                .add(&ga.mul(&f_i).expect("module scale"))
                .add(&gea.mul(&f_ii).expect("module scale"))
                .neg()
        }
    }
    .normalize(pres);
    memo.put(d, &val);
    val
}

/// Four-term recursion threading a caller-supplied context: the switch
/// branch keeps the context (switching preserves arc numbering), smoothing
/// branches fall back to canonical contexts. Memoization stays off so each
/// context genuinely recomputes.
fn b1_threaded(
    d: &LinkDiagram,
    ctx: &TraversalContext,
    weighted: bool,
) -> Result<RingElement, EvalError> {
    let pres = if weighted { Presentation::B1A } else { Presentation::B1 };
    let report = d.classify(ctx)?;
    let val = match report.first_bad {
        None => b1_base(d, weighted, report.writhe),
        Some(x) => {
            let st = report.crossings[x];
            let (ge, ga) = if st.inter {
                (RingElement::e_prime(), RingElement::a_prime())
            } else {
                (RingElement::e(), RingElement::a())
            };
            let mut memo = Memo::new(false, !weighted);
            let f_sw = b1_threaded(&d.switch(x), ctx, weighted)?;
            let f_i = b1_rec(&d.smooth(x, Smoothing::I), weighted, &mut memo);
            let f_ii = b1_rec(&d.smooth(x, Smoothing::II), weighted, &mut memo);
            let gea = ge.mul(&ga).expect("ring product");
            ge.mul(&f_sw)
                .expect("module scale")
                .add(&ga.mul(&f_i).expect("module scale"))
                .add(&gea.mul(&f_ii).expect("module scale"))
                .neg()
        }
    }
    .normalize(pres);
    Ok(val)
}

fn b1_wrap(d: &LinkDiagram, cfg: &EvalConfig, weighted: bool) -> Result<InvariantValue, EvalError> {
    guard(d, cfg)?;
    let report = d.classify(&TraversalContext::canonical(d))?;
    let mut memo = Memo::new(cfg.memo_enabled(d.crossing_count()), !weighted);
    let element = b1_rec(d, weighted, &mut memo);
    Ok(InvariantValue {
        element,
        crossings: d.crossing_count(),
        mu: d.mu(),
        writhe: report.writhe,
    })
}

/// The four-term invariant in the `B1` module, resolved at the first
/// non-descending crossing of the canonical traversal.
pub fn invariant_b1(d: &LinkDiagram, cfg: &EvalConfig) -> Result<InvariantValue, EvalError> {
    b1_wrap(d, cfg, false)
}

/// Same recursion driven by an arbitrary traversal context (memoization
/// off). The result must coincide with [`invariant_b1`].
pub fn invariant_b1_with_context(
    d: &LinkDiagram,
    ctx: &TraversalContext,
    cfg: &EvalConfig,
) -> Result<InvariantValue, EvalError> {
    guard(d, cfg)?;
    let report = d.classify(ctx)?;
    let element = b1_threaded(d, ctx, false)?;
    Ok(InvariantValue {
        element,
        crossings: d.crossing_count(),
        mu: d.mu(),
        writhe: report.writhe,
    })
}

/// Writhe-weighted variant with values in the `B1A` module: descending
/// unlink diagrams evaluate to `A^w * v_mu`. The element itself shifts by
/// `A^{+-1}` under first Reidemeister moves; `A^-w * element` is fully
/// move-invariant.
pub fn invariant_b1_writhe(d: &LinkDiagram, cfg: &EvalConfig) -> Result<InvariantValue, EvalError> {
    b1_wrap(d, cfg, true)
}

/// `A^-w * element` for a value of [`invariant_b1_writhe`], normalized.
pub fn writhe_normalized(value: &InvariantValue) -> RingElement {
    RingElement::big_a(-(value.writhe as i32))
        .mul(&value.element)
        .expect("module scale")
        .normalize(Presentation::B1A)
}

fn b2_rec(d: &LinkDiagram, first: Option<usize>, memo: &mut Memo) -> RingElement {
    if first.is_none() {
        if let Some(hit) = memo.get(d) {
            return hit;
        }
    }
    let val = if d.crossing_count() == 0 {
        RingElement::v(d.mu() as u32)
    } else {
        let x = first.unwrap_or(0);
        let (ca, cb) = if d.is_inter(x) {
            (RingElement::a_prime(), RingElement::b_prime())
        } else {
            (RingElement::a(), RingElement::b())
        };
        let f_i = b2_rec(&d.smooth(x, Smoothing::I), None, memo);
        let f_ii = b2_rec(&d.smooth(x, Smoothing::II), None, memo);
        ca.mul(&f_i)
            .expect("module scale")
            .add(&cb.mul(&f_ii).expect("module scale"))
    }
    .normalize(Presentation::B2);
    if first.is_none() {
        memo.put(d, &val);
    }
    val
}

/// The two-smoothing invariant in the `B2` module, resolved at the
/// lowest-numbered crossing.
pub fn invariant_b2(d: &LinkDiagram, cfg: &EvalConfig) -> Result<InvariantValue, EvalError> {
    guard(d, cfg)?;
    let report = d.classify(&TraversalContext::canonical(d))?;
    let mut memo = Memo::new(cfg.memo_enabled(d.crossing_count()), true);
    let element = b2_rec(d, None, &mut memo);
    Ok(InvariantValue {
        element,
        crossings: d.crossing_count(),
        mu: d.mu(),
        writhe: report.writhe,
    })
}

/// [`invariant_b2`] but resolving the given crossing first (memoization
/// off); the result must not depend on the choice.
pub fn invariant_b2_first_site(
    d: &LinkDiagram,
    first: usize,
    cfg: &EvalConfig,
) -> Result<InvariantValue, EvalError> {
    guard(d, cfg)?;
    if first >= d.crossing_count() {
        return Err(EvalError::Diagram(DiagramError::BadIndex(alloc::format!(
            "no crossing {first}"
        ))));
    }
    let report = d.classify(&TraversalContext::canonical(d))?;
    let mut memo = Memo::new(false, true);
    let element = b2_rec(d, Some(first), &mut memo);
    Ok(InvariantValue {
        element,
        crossings: d.crossing_count(),
        mu: d.mu(),
        writhe: report.writhe,
    })
}

struct MemoL {
    on: bool,
    map: BTreeMap<Vec<u32>, LaurentPoly>,
}

fn b2w_rec(d: &LinkDiagram, hom: &Homomorphism, memo: &mut MemoL) -> Result<LaurentPoly, EvalError> {
    if memo.on {
        if let Some(hit) = memo.map.get(&canonical_code(d, false)) {
            return Ok(hit.clone());
        }
    }
    let val = if d.crossing_count() == 0 {
        hom.v_image(d.mu() as u32)
    } else {
        let (ga, gb) = if d.is_inter(0) {
            (Gen::Ap, Gen::Bp)
        } else {
            (Gen::Aa, Gen::B)
        };
        let ca = hom
            .image(ga)
            .ok_or(EvalError::Specialize(SpecializeError::MissingImage(ga)))?
            .clone();
        let cb = hom
            .image(gb)
            .ok_or(EvalError::Specialize(SpecializeError::MissingImage(gb)))?
            .clone();
        let f_i = b2w_rec(&d.smooth(0, Smoothing::I), hom, memo)?;
        let f_ii = b2w_rec(&d.smooth(0, Smoothing::II), hom, memo)?;
        ca.mul(&f_i).add(&cb.mul(&f_ii))
    };
    if memo.on {
        memo.map.insert(canonical_code(d, false), val.clone());
    }
    Ok(val)
}

/// The smoothing recursion evaluated through `hom`, times
/// `image(A)^writhe`. With the Jones assignment this is the Jones
/// polynomial in `q` (with `t = q^-4`), normalized to 1 on the unknot.
pub fn invariant_b2_writhe(
    d: &LinkDiagram,
    hom: &Homomorphism,
    cfg: &EvalConfig,
) -> Result<LaurentPoly, EvalError> {
    guard(d, cfg)?;
    let report = d.classify(&TraversalContext::canonical(d))?;
    let mut memo = MemoL {
        on: cfg.memo_enabled(d.crossing_count()),
        map: BTreeMap::new(),
    };
    let unweighted = b2w_rec(d, hom, &mut memo)?;
    let weight = hom
        .image(Gen::BigA)
        .ok_or(EvalError::Specialize(SpecializeError::MissingImage(Gen::BigA)))?
        .pow(report.writhe)
        .ok_or(EvalError::Specialize(SpecializeError::NonInvertibleImage(Gen::BigA)))?;
    Ok(weight.mul(&unweighted))
}

/// The Jones polynomial in `q`.
pub fn jones(d: &LinkDiagram, cfg: &EvalConfig) -> Result<LaurentPoly, EvalError> {
    invariant_b2_writhe(d, &Homomorphism::jones(), cfg)
}

/// Enumerate traversal contexts that differ from canonical in base points,
/// directions, and component order.
fn context_family(d: &LinkDiagram, limit: usize) -> Vec<TraversalContext> {
    let ncomp = d.crossing_component_count();
    let mut out = Vec::new();
    let canonical = TraversalContext::canonical(d);
    out.push(canonical.clone());
    if ncomp == 0 {
        return out;
    }
    let blocks: Vec<(usize, usize)> = (0..ncomp).map(|k| d.component_block(k)).collect();
    let max_len = blocks.iter().map(|&(_, l)| l).max().unwrap_or(1);
    for shift in 0..max_len {
        for dir_mask in 0..(1usize << ncomp.min(4)) {
            for reverse_order in [false, true] {
                if shift == 0 && dir_mask == 0 && !reverse_order {
                    continue;
                }
                let mut ctx = canonical.clone();
                for (k, &(start, len)) in blocks.iter().enumerate() {
                    ctx.base[k] = start + (shift % len);
                    if k < 4 && dir_mask & (1 << k) != 0 {
                        ctx.dir[k] = false;
                    }
                }
                if reverse_order {
                    ctx.order.reverse();
                }
                out.push(ctx);
                if out.len() >= limit {
                    return out;
                }
            }
        }
    }
    out
}

/// Recompute `invariant_b1` under at least 20 traversal contexts (when the
/// diagram admits that many) and `invariant_b2` with every possible first
/// crossing, all without memoization; returns whether every recomputation
/// agreed with the canonical value.
pub fn check_order_independence(d: &LinkDiagram, cfg: &EvalConfig) -> Result<bool, EvalError> {
    guard(d, cfg)?;
    let no_memo = EvalConfig {
        memo: MemoPolicy::Off,
        ..*cfg
    };
    let reference = invariant_b1(d, &no_memo)?.element;
    for ctx in context_family(d, 24) {
        let v = invariant_b1_with_context(d, &ctx, &no_memo)?.element;
        if v != reference {
            return Ok(false);
        }
    }
    let b2_reference = invariant_b2(d, &no_memo)?.element;
    for x in 0..d.crossing_count() {
        let v = invariant_b2_first_site(d, x, &no_memo)?.element;
        if v != b2_reference {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Walk `trials` random Reidemeister moves from `d` (never exceeding the
/// crossing cap), checking after each move that the `B1` and `B2` elements,
/// the writhe-normalized `B1A` element, and the Jones polynomial all match
/// the starting diagram's. Returns whether every check passed.
pub fn check_reidemeister(
    d: &LinkDiagram,
    trials: usize,
    seed: u64,
    cfg: &EvalConfig,
) -> Result<bool, EvalError> {
    guard(d, cfg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ref_b1 = invariant_b1(d, cfg)?.element;
    let ref_b2 = invariant_b2(d, cfg)?.element;
    let ref_b1w = writhe_normalized(&invariant_b1_writhe(d, cfg)?);
    let ref_jones = jones(d, cfg)?;
    let mut current = d.clone();
    for _ in 0..trials {
        let budget = cfg.max_crossings.saturating_sub(current.crossing_count());
        let moves: Vec<MoveSpec> = current
            .find_moves()
            .into_iter()
            .filter(|m| match m {
                MoveSpec::R1Plus { .. } => budget >= 1,
                MoveSpec::R2Plus { .. } => budget >= 2,
                _ => true,
            })
            .collect();
        let Some(mv) = moves.choose(&mut rng) else {
            break;
        };
        current = current.apply_move(mv)?;
        if invariant_b1(&current, cfg)?.element != ref_b1 {
            return Ok(false);
        }
        if invariant_b2(&current, cfg)?.element != ref_b2 {
            return Ok(false);
        }
        if writhe_normalized(&invariant_b1_writhe(&current, cfg)?) != ref_b1w {
            return Ok(false);
        }
        if jones(&current, cfg)? != ref_jones {
            return Ok(false);
        }
    }
    Ok(true)
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
    fn unknot_and_unlinks_are_bases() {
        let unknot = diagram("O 1");
        let v = invariant_b1(&unknot, &cfg()).unwrap();
        assert_eq!(v.element.render(), "v_1");
        assert_eq!(v.mu, 1);
        let two = diagram("O 2");
        assert_eq!(invariant_b1(&two, &cfg()).unwrap().element.render(), "v_2");
        assert_eq!(invariant_b2(&two, &cfg()).unwrap().element.render(), "a*v_1 + b*v_1");
        assert_eq!(jones(&two, &cfg()).unwrap().render(), "-q^2 - q^-2");
    }

    #[test]
    fn kinks_evaluate_to_v1() {
        for code in ["C(1,1,2,2)", "C(2,2,1,1)", "C(1,2,2,1)", "C(2,1,1,2)"] {
            let d = diagram(code);
            assert_eq!(
                invariant_b1(&d, &cfg()).unwrap().element.render(),
                "v_1",
                "{code}"
            );
            assert_eq!(
                invariant_b2(&d, &cfg()).unwrap().element.render(),
                "v_1",
                "{code}"
            );
        }
    }

    #[test]
    fn kink_weighted_values_shift_by_big_a() {
        // Positive kink: f = A v_1, so A^-w f = v_1.
        let pos = diagram("C(1,1,2,2)");
        let v = invariant_b1_writhe(&pos, &cfg()).unwrap();
        assert_eq!(v.writhe, 1);
        assert_eq!(v.element.render(), "A*v_1");
        assert_eq!(writhe_normalized(&v).render(), "v_1");
        let neg = diagram("C(1,2,2,1)");
        let w = invariant_b1_writhe(&neg, &cfg()).unwrap();
        assert_eq!(w.writhe, -1);
        assert_eq!(w.element.render(), "A^-1*v_1");
        assert_eq!(writhe_normalized(&w).render(), "v_1");
    }

    #[test]
    fn hopf_link_all_four_values() {
        let hopf = diagram("C(1,3,2,4) C(3,1,4,2)");
        let b1 = invariant_b1(&hopf, &cfg()).unwrap();
        assert_eq!(b1.element.render(), "-e'*v_2 - a*v_1 - e*a*v_1");
        let b2 = invariant_b2(&hopf, &cfg()).unwrap();
        assert_eq!(b2.element.render(), "a*v_1 + b*v_1");
        let b1w = invariant_b1_writhe(&hopf, &cfg()).unwrap();
        assert_eq!(b1w.element.render(), "-e'*v_2 - A*a*v_1 - A^-1*e*a*v_1");
        assert_eq!(b1w.writhe, 2);
        assert_eq!(jones(&hopf, &cfg()).unwrap().render(), "-q^-2 - q^-10");
    }

    #[test]
    fn b1_separates_hopf_from_the_two_component_unlink() {
        let hopf = diagram("C(1,3,2,4) C(3,1,4,2)");
        let unlink = diagram("O 2");
        let vh = invariant_b1(&hopf, &cfg()).unwrap().element;
        let vu = invariant_b1(&unlink, &cfg()).unwrap().element;
        assert_eq!(vu.render(), "v_2");
        assert_ne!(vh, vu);
    }

    #[test]
    fn trefoil_jones_both_chiralities() {
        let left = diagram("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
        let right = left.mirror();
        let jl = jones(&left, &cfg()).unwrap();
        let jr = jones(&right, &cfg()).unwrap();
        assert_eq!(jl.invert_var(0), jr);
        let q = |k: i64, c: i64| LaurentPoly::monomial(&["q"], 0, k, c);
        let expect_left = q(16, -1).add(&q(12, 1)).add(&q(4, 1));
        let expect_right = q(-16, -1).add(&q(-12, 1)).add(&q(-4, 1));
        assert!(
            (jl == expect_left && jr == expect_right)
                || (jl == expect_right && jr == expect_left)
        );
    }

    #[test]
    fn order_independence_on_small_diagrams() {
        for code in [
            "O 1",
            "C(1,1,2,2)",
            "C(1,3,2,4) C(3,1,4,2)",
            "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
        ] {
            assert!(
                check_order_independence(&diagram(code), &cfg()).unwrap(),
                "{code}"
            );
        }
    }

    #[test]
    fn memoized_and_unmemoized_agree() {
        let fig8 = diagram("X(4,1,5,2) X(2,8,3,7) X(8,5,1,6) X(6,4,7,3)");
        let on = EvalConfig {
            memo: MemoPolicy::On,
            ..EvalConfig::default()
        };
        let off = EvalConfig {
            memo: MemoPolicy::Off,
            ..EvalConfig::default()
        };
        assert_eq!(
            invariant_b1(&fig8, &on).unwrap().element,
            invariant_b1(&fig8, &off).unwrap().element
        );
        assert_eq!(
            invariant_b2(&fig8, &on).unwrap().element,
            invariant_b2(&fig8, &off).unwrap().element
        );
        let v = jones(&fig8, &on).unwrap();
        assert_eq!(v, jones(&fig8, &off).unwrap());
        assert_eq!(v.render(), "q^8 - q^4 + 1 - q^-4 + q^-8");
        assert_eq!(v, jones(&fig8.mirror(), &on).unwrap());
    }

    #[test]
    fn crossing_cap_is_enforced() {
        let hopf = diagram("C(1,3,2,4) C(3,1,4,2)");
        let tiny = EvalConfig {
            max_crossings: 1,
            ..EvalConfig::default()
        };
        assert_eq!(
            invariant_b1(&hopf, &tiny),
            Err(EvalError::TooManyCrossings {
                crossings: 2,
                limit: 1
            })
        );
    }

    #[test]
    fn reidemeister_walk_from_the_trefoil() {
        let trefoil = diagram("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
        let small = EvalConfig {
            max_crossings: 7,
            ..EvalConfig::default()
        };
        assert!(check_reidemeister(&trefoil, 6, 9, &small).unwrap());
    }
}
