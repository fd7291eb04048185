//! Farey sequence ranks and the identities that govern them, each backed
//! by an independent brute-force check.
//!
//! The library computes, exactly:
//!
//! - ranks I_N(h/k) of fractions in the Farey sequence F_N by independent
//!   methods (enumeration walk, unit-fraction summation, coprime counting,
//!   complement symmetry), plus the (N²+N)/(2k) upper bound ([`farey`]);
//! - the order-preserving bijection h/k ↦ k/(kq−h) between F_i and the
//!   segment of F_N lying in [1/q, 1/(q−1)] ([`segment`]);
//! - closed-form unit-fraction ranks 2 + N·Σ φ(j)/j − k·Φ(i), valid when
//!   every integer in [2, i] divides N ([`closed_form`]);
//! - the series S(N) = Σ φ(k)·I_N(1/k) and its N³/(6ζ(3)) leading term,
//!   with the head/tail split that explains it ([`series`]);
//! - counts of primitive linear integer polynomials with a root in the
//!   unit cube, whose D = 1 case reproduces |F_N| ([`poly`]).
//!
//! Sieves for φ, μ, Φ and interval coprimality counts live in [`arith`].
//! Every operation is a pure function over immutable tables, so results
//! are deterministic and safely shareable across threads.
//!
//! The `fareylab` binary exposes each operation as a subcommand emitting
//! JSON, CSV, or text records; see [`cli`]. Runnable walkthroughs live in
//! the crate's `examples/` directory.

pub mod arith;
pub mod cli;
pub mod closed_form;
pub mod error;
pub mod farey;
pub mod parallel;
pub mod poly;
pub mod report;
pub mod segment;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use farey::{Fraction, RankMethod, RankResult};
