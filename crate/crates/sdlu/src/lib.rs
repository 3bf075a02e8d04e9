//! State-dependent linear utility toolkit.
//!
//! Evaluates portfolios of risky assets when utility is linear in money
//! within each state of nature but the marginal utility may differ across
//! states. On top of that engine sit first-order stochastic dominance with a
//! constructive converse, mean-preserving spreads, a monopolist insurer's
//! optimal contract with an independent grid oracle, piecewise-linear utility
//! with jump discontinuities, and a min-based evaluation of portfolios with
//! ambiguous returns.
//!
//! Every quantity runs on either of two arithmetic backends behind the
//! [`Scalar`] trait: `f64` with banded comparisons for general use, and exact
//! rationals for verification work where strict inequalities must be decided
//! without rounding error.
//!
//! The examples are the front door, one per capability:
//!
//! ```text
//! cargo run --example risk_attitudes
//! cargo run --example dominance
//! cargo run --example mean_preserving_spread
//! cargo run --example insurance_contract
//! cargo run --example almost_linear_utility
//! cargo run --example ambiguity_min
//! cargo run --example verification_suite
//! ```
//!
//! The thin `sdlu` binary exposes the same operations over JSON scenario
//! files; see the repository README for the schema and flags.

pub mod almost_linear;
pub mod ambiguity;
pub mod cli;
mod error;
pub mod insurance;
pub mod pora;
pub mod scalar;
pub mod stochastic;

pub use error::{Error, Result};
pub use pora::{
    certainty_equivalent, classify_risk_attitude, expected_utility, expected_utility_telescoped,
    expected_value, more_risk_averse, risk_premium, tail_probability, LinearUtilityProfile, Pora,
    ProbabilityVector, Relation, ReturnVector, RiskAttitude,
};
pub use scalar::{Scalar, EPS_NUM, EPS_SUM};
