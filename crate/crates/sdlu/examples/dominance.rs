//! Checks first-order stochastic dominance between portfolio pairs and
//! exercises both directions of its equivalence with unanimous preference:
//! sampling profiles with increasing products for a dominant pair, and
//! constructing an adversarial profile for a pair whose cumulative
//! distributions cross.

use sdlu::pora::{expected_utility, Pora, ProbabilityVector, ReturnVector};
use sdlu::stochastic::{
    construct_adversarial_profile, first_order_dominates, verify_dominance_equivalence,
    DominanceEquivalence,
};

fn main() {
    let x = ReturnVector::new(vec![0.0, 1.0, 2.0]).expect("valid returns");
    let p = ProbabilityVector::new(vec![0.2, 0.3, 0.5]).expect("valid probabilities");
    let q = ProbabilityVector::new(vec![0.3, 0.3, 0.4]).expect("valid probabilities");

    let a = Pora::new(x.clone(), p.clone()).expect("matching lengths");
    let b = Pora::new(x.clone(), q.clone()).expect("matching lengths");
    let verdict = first_order_dominates(&a, &b);
    println!("p = {:?}, q = {:?} on x = 0,1,2", p.entries(), q.entries());
    match verdict.strict_at() {
        Some(t) => println!("p dominates q: {}, strictly above {t}", verdict.dominates()),
        None => println!("p dominates q: {}", verdict.dominates()),
    }

    match verify_dominance_equivalence(&x, &p, &q, 500, 42).expect("valid pair") {
        DominanceEquivalence::Dominates { samples, min_margin } => println!(
            "all {samples} sampled increasing-product profiles preferred p; smallest margin {min_margin:.6}"
        ),
        other => println!("unexpected outcome: {other:?}"),
    }

    println!();
    let c = ProbabilityVector::new(vec![0.4, 0.2, 0.4]).expect("valid probabilities");
    let d = ProbabilityVector::new(vec![0.2, 0.6, 0.2]).expect("valid probabilities");
    println!(
        "crossing pair: c = {:?}, d = {:?}",
        c.entries(),
        d.entries()
    );
    let forward = first_order_dominates(
        &Pora::new(x.clone(), c.clone()).expect("matching lengths"),
        &Pora::new(x.clone(), d.clone()).expect("matching lengths"),
    );
    println!("c dominates d: {}", forward.dominates());

    let adversarial = construct_adversarial_profile(&x, &c, &d).expect("not dominance-ordered");
    let eu_c = expected_utility(
        &adversarial,
        &Pora::new(x.clone(), c).expect("matching lengths"),
    )
    .expect("lengths match");
    let eu_d = expected_utility(&adversarial, &Pora::new(x, d).expect("matching lengths"))
        .expect("lengths match");
    println!(
        "adversarial slopes {:?} give Eu(c) = {eu_c:.4} < Eu(d) = {eu_d:.4} (margin {:.4})",
        adversarial.slopes(),
        eu_c - eu_d
    );
}
