//! Detects a mean-preserving spread, confirms every sampled
//! increasing-concave profile dislikes it, and searches out a
//! counterexample profile for a pair that moves middle mass inward
//! instead of outward.

use sdlu::pora::{ProbabilityVector, ReturnVector};
use sdlu::stochastic::{
    is_mean_preserving_spread, verify_spread_aversion, verify_spread_converse, SpreadConverse,
};

fn main() {
    let x = ReturnVector::new(vec![0.0, 1.0, 2.0]).expect("valid returns");
    let concentrated = ProbabilityVector::new(vec![0.2, 0.6, 0.2]).expect("valid probabilities");
    let spread_out = ProbabilityVector::new(vec![0.3, 0.4, 0.3]).expect("valid probabilities");

    let witness = is_mean_preserving_spread(&x, &concentrated, &spread_out)
        .expect("valid inputs")
        .expect("this pair is a spread");
    println!(
        "q spreads p: mass leaves state {} for states {} and {}",
        witness.j, witness.i, witness.k
    );

    let aversion =
        verify_spread_aversion(&x, &concentrated, &spread_out, 500, 7).expect("spread pair");
    println!(
        "all {} sampled increasing-concave profiles preferred the concentrated side; smallest margin {:.6}",
        aversion.samples,
        aversion.min_margin.expect("samples ran")
    );

    println!();
    println!("reverse direction (mass moves inward, so it is not a spread):");
    match verify_spread_converse(&x, &spread_out, &concentrated, 1000, 7).expect("searchable pair")
    {
        SpreadConverse::Counterexample { profile, margin } => println!(
            "profile {:?} is increasing-concave yet gives margin {margin:.4} <= 0",
            profile.slopes()
        ),
        SpreadConverse::SpreadHolds(_) => println!("unexpectedly a spread after all"),
    }
}
