//! Support library for the `skein4` command line tool: the bundled diagram
//! census, homomorphism files, and report shapes shared with the tests.

pub mod census;
pub mod homs;
pub mod report;
pub mod sample;
