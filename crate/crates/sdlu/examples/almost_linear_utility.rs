//! Builds a piecewise-linear utility with one loss kink and one gain kink,
//! evaluates it at a few points, derives the state partition it induces,
//! and classifies the local risk attitude at each interior breakpoint.

use sdlu::almost_linear::{AlmostLinearUtility, Side};

fn main() {
    let u = AlmostLinearUtility::new(
        250.0,
        vec![-10.0, -250.0],
        vec![2.0, 3.0],
        vec![Side::Right],
        vec![10.0],
        vec![1.0, 1.5],
        vec![Side::Left],
    )
    .expect("valid shape");

    println!("utility values:");
    for w in [-250.0, -20.0, -10.0, -5.0, 0.0, 10.0, 25.0] {
        println!("  u({w:>6.1}) = {:.2}", u.evaluate(&w).expect("in domain"));
    }

    println!();
    println!("induced states:");
    for event in u.derive_state_profile() {
        println!("  {:?} at slope {}", event.interval, event.slope);
    }

    println!();
    println!("local gambles straddling each kink:");
    for index in u.interior_breakpoint_indices() {
        let analysis = u
            .analyze_breakpoint(index, &u.default_delta(index).expect("interior kink"))
            .expect("interior kink");
        println!(
            "  kink {index} at {}: sure {:.2} vs gamble {:.2}, certainty equivalent {:.4} -> {}",
            analysis.breakpoint,
            analysis.sure_value,
            analysis.gamble_expected_utility,
            analysis.certainty_equivalent,
            analysis.attitude
        );
    }
}
