//! Values a portfolio whose per-state return is only known to lie in a
//! finite candidate set. A sign-dependent profile that weights losses
//! more than gains evaluates the worst candidate in every state, which
//! floors the value of every concrete selection.

use sdlu::ambiguity::{
    min_expected_utility, min_pora, sign_dependent_expected_utility, GeneralizedPora,
    SignDependentProfile,
};
use sdlu::pora::{Pora, ProbabilityVector, ReturnVector};

fn main() {
    let probs = ProbabilityVector::new(vec![0.3, 0.7]).expect("valid probabilities");
    let gp = GeneralizedPora::new(vec![vec![-1.0, 5.0], vec![2.0, 9.0]], probs.clone())
        .expect("valid candidates");
    let profile =
        SignDependentProfile::new(vec![(2.0, 1.0), (2.0, 1.0)]).expect("losses weigh more");

    let worst = min_pora(&gp);
    println!(
        "worst-case returns per state: {:?}",
        worst.returns().entries()
    );

    let floor = min_expected_utility(&profile, &gp).expect("aligned lengths");
    println!("worst-case valuation: {floor:.4}");

    println!();
    println!("every concrete selection values at least that:");
    for (a, b) in [(-1.0, 2.0), (-1.0, 9.0), (5.0, 2.0), (5.0, 9.0)] {
        let returns = ReturnVector::new(vec![a, b]).expect("valid returns");
        let pora = Pora::new(returns, probs.clone()).expect("aligned lengths");
        let value = sign_dependent_expected_utility(&profile, &pora).expect("aligned lengths");
        println!("  returns ({a:>4}, {b}) -> {value:.4}");
    }
}
