//! Values a portfolio under state-dependent linear utility and classifies
//! the attitude its risk premium reveals, then compares two households by
//! how much certain payoff each would give up.

use sdlu::pora::{
    certainty_equivalent, classify_risk_attitude, expected_utility, expected_value,
    more_risk_averse, risk_premium, LinearUtilityProfile, Pora, ProbabilityVector, ReturnVector,
};

fn main() {
    let pora = Pora::new(
        ReturnVector::new(vec![-1.0, 1.0]).expect("valid returns"),
        ProbabilityVector::new(vec![0.5, 0.5]).expect("valid probabilities"),
    )
    .expect("matching lengths");

    // Dollars lost in the bad state weigh twice dollars gained in the good one.
    let cautious = LinearUtilityProfile::new(vec![2.0, 1.0]).expect("positive slopes");
    let bold = LinearUtilityProfile::new(vec![1.0, 2.0]).expect("positive slopes");
    let flat = LinearUtilityProfile::new(vec![1.0, 1.0]).expect("positive slopes");

    println!("portfolio: -1 or +1, fifty-fifty");
    println!("expected value: {}", expected_value(&pora));
    println!();

    for (name, profile) in [("cautious", &cautious), ("bold", &bold), ("flat", &flat)] {
        let eu = expected_utility(profile, &pora).expect("lengths match");
        let ce = certainty_equivalent(profile, &pora).expect("lengths match");
        let premium = risk_premium(profile, &pora).expect("lengths match");
        let attitude = classify_risk_attitude(profile, &pora).expect("lengths match");
        println!(
            "{name:8} slopes {:?}: Eu = {eu:.4}, certainty equivalent = {ce:.4}, premium = {premium:.4} -> {attitude}",
            profile.slopes(),
        );
    }

    println!();
    let more = more_risk_averse(&cautious, &pora, &bold, &pora).expect("lengths match");
    println!("cautious more risk averse than bold toward this portfolio: {more}");
}
