//! Exact sums of multiple zeta values with even arguments.
//!
//! `E(2n,k)` is the sum of all multiple zeta values `ζ(i_1,…,i_k)` whose
//! arguments are even and add up to `2n`. It is always a rational multiple
//! of `π^{2n}`. This crate computes it by four independent routes:
//!
//! * two closed forms ([`closed_form::e_sum_theorem1`],
//!   [`closed_form::e_sum_theorem3`]),
//! * coefficient extraction from the generating function
//!   `sin(π√((1−s)t)) / (√(1−s)·sin(π√t))` ([`series`]),
//! * the image of a symmetric function under the map `p_i ↦ ζ(2i)`
//!   ([`symfunc`]),
//!
//! and checks all of them against a floating point brute-force evaluation of
//! the nested series ([`oracle`]).
//!
//! All exact values are [`PiValue`]s, i.e. finite sums `Σ c_j π^{2j}` with
//! rational `c_j`.

pub mod arith;
pub mod closed_form;
mod error;
pub mod linalg;
pub mod oracle;
pub mod series;
pub mod symfunc;
pub mod verify;

pub use arith::{
    bernoulli, binomial, zeta_even, zt_of_e, zt_of_h, BernoulliTable, PiValue, Rational,
};
pub use closed_form::{e_row_sum, e_sum_theorem1, e_sum_theorem3, EvenZetaSum};
pub use error::{Error, Result};
pub use oracle::{MzvArgs, OracleEstimate};
pub use series::{GradedSeries, GradedSeries2};
pub use symfunc::{Partition, SymPoly};
pub use verify::{Check, Report};
