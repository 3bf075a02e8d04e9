//! Prices insurance for a buyer whose post-loss dollars outvalue intact
//! ones: baseline certainty equivalent, the seller's viable premium band,
//! optimal two- and three-state contracts, a brute-force grid cross-check,
//! and the diversification comparison.

use sdlu::insurance::{
    actuarially_fair_premium, diversification_comparison, grid_oracle_optimal_contract,
    no_insurance_certainty_equivalent, no_insurance_expected_utility, optimal_contract_three_state,
    optimal_contract_two_state, seller_premium_band, strict_profitability_holds, InsuranceScenario,
};

fn main() {
    let scenario = InsuranceScenario::new(250.0, 100.0, 0.1, 1.0, 2.0, Some(1.5), Some(0.25))
        .expect("valid scenario");

    println!(
        "wealth {} faces a {} loss with probability {}",
        scenario.wealth(),
        scenario.loss(),
        scenario.loss_prob()
    );
    println!(
        "no insurance: expected utility {:.4}, certainty equivalent {:.4}",
        no_insurance_expected_utility(&scenario),
        no_insurance_certainty_equivalent(&scenario)
    );
    println!(
        "actuarially fair premium {:.4}",
        actuarially_fair_premium(&scenario)
    );
    let (lo, hi) = seller_premium_band(&scenario).expect("invest_return set");
    println!(
        "a seller investing at {} profits for premiums in ({lo:.4}, {hi:.4})",
        scenario.invest_return().expect("set")
    );

    let contract = optimal_contract_two_state(&scenario).expect("distinct slopes");
    println!();
    println!(
        "two-state optimum: premium {:.4}, deductible {}, expected profit {:.4}",
        contract.premium(),
        contract.deductible(),
        contract.expected_profit()
    );

    let indexed = optimal_contract_three_state(&scenario).expect("u3 set");
    println!(
        "three-state optimum: premium {:.4}, deductible {}, expected profit {:.4}",
        indexed.premium(),
        indexed.deductible(),
        indexed.expected_profit()
    );

    let oracle = grid_oracle_optimal_contract(&scenario, 4000).expect("valid resolution");
    println!(
        "grid search (4000 cells per axis) lands on premium {:.4}, deductible {}",
        oracle.premium(),
        oracle.deductible()
    );

    println!();
    println!(
        "selling at a profit is possible here: {}",
        strict_profitability_holds(&scenario).expect("valid scenario")
    );

    let d = diversification_comparison(&100.0, &0.1, &1.0, &2.0, &3.0).expect("ordered slopes");
    println!(
        "one opportunity of 100 values at {:.2}; splitting across two independent ones values at {:.2}",
        d.single_opportunity, d.split_between_two
    );
}
