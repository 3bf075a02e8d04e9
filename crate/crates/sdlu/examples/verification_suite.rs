//! Sweeps every ordered pair of strictly positive probability grids over a
//! fixed support and checks the dominance and spread characterizations in
//! exact arithmetic: dominant pairs keep positive margins across sampled
//! profiles, non-dominant pairs admit an adversarial profile, spreads are
//! disliked by concave profiles, and non-spreads admit a concave profile
//! that likes them.

use num_rational::BigRational;
use sdlu::scalar::Scalar;
use sdlu::stochastic::run_verification_suite;

fn rational(n: i64) -> BigRational {
    <BigRational as Scalar>::from_int(n)
}

fn main() {
    let x = sdlu::pora::ReturnVector::new(vec![rational(0), rational(1), rational(2)])
        .expect("valid returns");

    let summary = run_verification_suite(&x, 6, 100, 1000, 0).expect("valid grid");

    println!(
        "{} distributions on the grid, {} ordered pairs",
        summary.grid_size, summary.ordered_pairs
    );
    println!(
        "dominant pairs: {} ({} profiles each, smallest margin {})",
        summary.dominant_pairs,
        summary.dominance_samples_per_pair,
        summary
            .dominance_min_margin
            .as_ref()
            .expect("dominant pairs exist")
    );
    println!(
        "non-dominant pairs: {} (worst adversarial margin {})",
        summary.adversarial_pairs,
        summary
            .adversarial_worst_margin
            .as_ref()
            .expect("crossing pairs exist")
    );
    println!(
        "spread pairs: {} (smallest margin {})",
        summary.spread_pairs,
        summary
            .spread_min_margin
            .as_ref()
            .expect("spread pairs exist")
    );
    println!(
        "equal-mean non-spread pairs: {} (worst counterexample margin {})",
        summary.converse_pairs,
        summary
            .converse_worst_margin
            .as_ref()
            .expect("converse pairs exist")
    );
}
