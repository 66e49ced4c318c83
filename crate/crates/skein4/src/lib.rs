//! Skein invariants of unoriented link diagrams, computed symbolically.
//!
//! The crate evaluates four families of diagram invariants defined by
//! four-term (and three-term) skein relations at a crossing, with values
//! in commutative rings given by generators and relations. Ring elements
//! are kept in normal form by a terminating rewrite system, so equality
//! of invariants is decidable and exact.
//!
//! - [`diagram`]: planar link diagrams as combinatorial crossing lists,
//!   parsing, Reidemeister moves, canonical codes.
//! - [`ring`]: presented rings, normal forms, Laurent polynomials, and
//!   specialization homomorphisms onto classical invariants.
//! - [`skein`]: the invariant evaluators themselves.
//! - [`oracle`]: independent brute-force evaluators used to cross-check
//!   the skein recursion (Kauffman bracket state sum, direct recursions).

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod diagram;
pub mod oracle;
pub mod ring;
pub mod skein;

pub use diagram::LinkDiagram;
pub use ring::{Presentation, RingElement};
pub use skein::{EvalConfig, InvariantValue, MemoPolicy};
