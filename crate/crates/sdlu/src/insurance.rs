//! Insurance against a binary loss under state-dependent linear utility:
//! closed-form premiums and certainty equivalents, the mutually profitable
//! premium band, diversification across independent risks, and optimal
//! contracts found both in closed form and by grid search.
//!
//! Wealth states are valued by different slopes: `u1` when intact, `u2`
//! after the loss. Post-loss dollars weakly outvaluing intact dollars
//! (`u1 <= u2` allowed, `u1 > u2` rejected) is what makes full insurance at
//! the fair premium worth strictly more than its expected cost.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pora::{
    classify_risk_attitude, LinearUtilityProfile, Pora, ProbabilityVector, ReturnVector,
    RiskAttitude,
};
use crate::scalar::Scalar;

/// A household facing a loss of `loss` with probability `loss_prob`, valuing
/// dollars at slope `u1` while intact and `u2` in the loss state.
///
/// `u3` is the slope of an intermediate state (strictly between `u1` and
/// `u2`): the loss event happened but an indemnity arrived, which stings
/// less than an uncompensated loss yet more than no loss at all.
/// `invest_return` is the insurer's return on collected premiums, used for
/// the seller's side of the premium band.
#[derive(Debug, Clone, PartialEq)]
pub struct InsuranceScenario<T: Scalar> {
    wealth: T,
    loss: T,
    loss_prob: T,
    u1: T,
    u2: T,
    u3: Option<T>,
    invest_return: Option<T>,
}

impl<T: Scalar> InsuranceScenario<T> {
    pub fn new(
        wealth: T,
        loss: T,
        loss_prob: T,
        u1: T,
        u2: T,
        u3: Option<T>,
        invest_return: Option<T>,
    ) -> Result<Self> {
        let zero = T::zero();
        let one = T::one();
        if !loss.band_gt(&zero) || !loss.band_lt(&wealth) {
            return Err(Error::invalid("loss", "must satisfy 0 < loss < wealth"));
        }
        if !loss_prob.band_gt(&zero) || !loss_prob.band_lt(&one) {
            return Err(Error::invalid(
                "loss_prob",
                "must lie strictly between 0 and 1",
            ));
        }
        if !u1.band_gt(&zero) {
            return Err(Error::invalid("u1", "must be positive"));
        }
        if u1.band_gt(&u2) {
            return Err(Error::invalid(
                "u2",
                "loss-state slope must be at least the intact slope",
            ));
        }
        if let Some(mid) = &u3 {
            if !mid.band_gt(&u1) || !mid.band_lt(&u2) {
                return Err(Error::invalid("u3", "must lie strictly between u1 and u2"));
            }
        }
        if let Some(r) = &invest_return {
            if !r.band_gt(&zero) {
                return Err(Error::invalid("invest_return", "must be positive"));
            }
        }
        Ok(Self {
            wealth,
            loss,
            loss_prob,
            u1,
            u2,
            u3,
            invest_return,
        })
    }

    pub fn wealth(&self) -> &T {
        &self.wealth
    }

    pub fn loss(&self) -> &T {
        &self.loss
    }

    pub fn loss_prob(&self) -> &T {
        &self.loss_prob
    }

    pub fn u1(&self) -> &T {
        &self.u1
    }

    pub fn u2(&self) -> &T {
        &self.u2
    }

    pub fn u3(&self) -> Option<&T> {
        self.u3.as_ref()
    }

    pub fn invest_return(&self) -> Option<&T> {
        self.invest_return.as_ref()
    }

    /// Same scenario in floating point, for handing to the grid oracle.
    pub fn to_f64(&self) -> InsuranceScenario<f64> {
        InsuranceScenario {
            wealth: self.wealth.to_f64(),
            loss: self.loss.to_f64(),
            loss_prob: self.loss_prob.to_f64(),
            u1: self.u1.to_f64(),
            u2: self.u2.to_f64(),
            u3: self.u3.as_ref().map(Scalar::to_f64),
            invest_return: self.invest_return.as_ref().map(Scalar::to_f64),
        }
    }
}

/// A premium/deductible pair together with the insurer's expected profit
/// `premium - loss_prob * (loss - deductible)`.
#[derive(Debug, Clone, PartialEq)]
pub struct InsuranceContract<T: Scalar> {
    premium: T,
    deductible: T,
    expected_profit: T,
}

impl<T: Scalar> InsuranceContract<T> {
    pub fn new(premium: T, deductible: T, scenario: &InsuranceScenario<T>) -> Result<Self> {
        let zero = T::zero();
        if deductible.band_lt(&zero) || deductible.band_gt(&scenario.loss) {
            return Err(Error::invalid("deductible", "must lie in [0, loss]"));
        }
        let expected_profit = premium.clone()
            - scenario.loss_prob.clone() * (scenario.loss.clone() - deductible.clone());
        Ok(Self {
            premium,
            deductible,
            expected_profit,
        })
    }

    pub fn premium(&self) -> &T {
        &self.premium
    }

    pub fn deductible(&self) -> &T {
        &self.deductible
    }

    pub fn expected_profit(&self) -> &T {
        &self.expected_profit
    }
}

/// Expected utility of staying uninsured, measured in gains and losses
/// relative to current wealth: `-loss_prob * u2 * loss`. The shortfall lands
/// in the loss state, so it is valued at `u2`.
pub fn no_insurance_expected_utility<T: Scalar>(s: &InsuranceScenario<T>) -> T {
    -(s.loss_prob.clone() * s.u2.clone() * s.loss.clone())
}

/// The sure payment whose utility loss matches staying uninsured:
/// `loss_prob * loss * u2 / ((1 - loss_prob) u1 + loss_prob * u2)`.
///
/// A sure premium is paid in both states, so it is valued at the blended
/// slope; with `u1 <= u2` the blend is at most `u2` and the certainty
/// equivalent weakly exceeds the fair premium.
pub fn no_insurance_certainty_equivalent<T: Scalar>(s: &InsuranceScenario<T>) -> T {
    let blended =
        (T::one() - s.loss_prob.clone()) * s.u1.clone() + s.loss_prob.clone() * s.u2.clone();
    s.loss_prob.clone() * s.loss.clone() * s.u2.clone() / blended
}

/// Expected indemnity of full coverage: `loss_prob * loss`.
pub fn actuarially_fair_premium<T: Scalar>(s: &InsuranceScenario<T>) -> T {
    s.loss_prob.clone() * s.loss.clone()
}

/// Premium range `(fair / (1 + invest_return), fair)` where full insurance
/// profits both sides: the seller invests premiums at `invest_return` so it
/// breaks even below the fair premium, while the buyer's certainty
/// equivalent sits above it.
pub fn seller_premium_band<T: Scalar>(s: &InsuranceScenario<T>) -> Result<(T, T)> {
    let r = s
        .invest_return
        .as_ref()
        .ok_or_else(|| Error::invalid("invest_return", "required for the premium band"))?;
    let fair = actuarially_fair_premium(s);
    Ok((fair.clone() / (T::one() + r.clone()), fair))
}

/// Expected utilities of insuring one indivisible risk versus half-shares of
/// two independent ones.
#[derive(Debug, Clone, PartialEq)]
pub struct DiversificationComparison<T: Scalar> {
    pub single_opportunity: T,
    pub split_between_two: T,
}

/// Compares underwriting a full independent risk of size `investment`
/// against splitting between two such risks, for an insurer whose slopes are
/// `u1 < u2 < u3` over zero, one, or two losses retained.
///
/// Single: `-p * u3 * investment`. Split halves the exposure per risk, so a
/// single loss costs `investment/2` valued at `u2` and a double loss costs
/// the full investment at `u3`:
/// `-p * ((1 - p) u2 + p u3) * investment`, strictly better since `u2 < u3`.
pub fn diversification_comparison<T: Scalar>(
    investment: &T,
    loss_prob: &T,
    u1: &T,
    u2: &T,
    u3: &T,
) -> Result<DiversificationComparison<T>> {
    let zero = T::zero();
    let one = T::one();
    if !investment.band_gt(&zero) {
        return Err(Error::invalid("investment", "must be positive"));
    }
    if !loss_prob.band_gt(&zero) || !loss_prob.band_lt(&one) {
        return Err(Error::invalid(
            "loss_prob",
            "must lie strictly between 0 and 1",
        ));
    }
    if !(u1.band_gt(&zero) && u2.band_gt(u1) && u3.band_gt(u2)) {
        return Err(Error::invalid("slopes", "need 0 < u1 < u2 < u3"));
    }
    let single = -(loss_prob.clone() * u3.clone() * investment.clone());
    let split = -(loss_prob.clone()
        * ((one - loss_prob.clone()) * u2.clone() + loss_prob.clone() * u3.clone())
        * investment.clone());
    Ok(DiversificationComparison {
        single_opportunity: single,
        split_between_two: split,
    })
}

/// Premium and profit of the buyer-constraint-binding full-coverage contract
/// in the two-state model, with no validity checks. Exposed for boundary
/// analysis around `u1 = u2`.
#[doc(hidden)]
pub fn two_state_contract_formulas<T: Scalar>(loss_prob: &T, loss: &T, u1: &T, u2: &T) -> (T, T) {
    let one = T::one();
    let blended = (one.clone() - loss_prob.clone()) * u1.clone() + loss_prob.clone() * u2.clone();
    let premium = loss_prob.clone() * u2.clone() * loss.clone() / blended.clone();
    let profit =
        loss_prob.clone() * (one - loss_prob.clone()) * (u2.clone() - u1.clone()) * loss.clone()
            / blended;
    (premium, profit)
}

/// The profit-maximizing contract a monopoly insurer offers in the two-state
/// model: full coverage (zero deductible) at the premium that leaves the
/// buyer indifferent to staying uninsured.
///
/// Requires `u1 < u2` strictly: at `u1 = u2` every feasible contract earns
/// zero and the maximizer is not unique.
pub fn optimal_contract_two_state<T: Scalar>(
    s: &InsuranceScenario<T>,
) -> Result<InsuranceContract<T>> {
    if s.u1.approx_eq(&s.u2) {
        return Err(Error::Degenerate(
            "u1 = u2 leaves no surplus to extract; every premium in the band ties".into(),
        ));
    }
    let (premium, _) = two_state_contract_formulas(&s.loss_prob, &s.loss, &s.u1, &s.u2);
    let contract = InsuranceContract::new(premium, T::zero(), s)?;
    let fair = actuarially_fair_premium(s);
    if !contract.premium().band_gt(&fair) {
        return Err(Error::Assertion(format!(
            "optimal premium {} does not exceed the fair premium {}",
            contract.premium(),
            fair
        )));
    }
    if !contract.expected_profit().is_strictly_positive() {
        return Err(Error::Assertion(format!(
            "optimal contract earns non-positive profit {}",
            contract.expected_profit()
        )));
    }
    Ok(contract)
}

/// The profit-maximizing full-coverage contract when payouts arrive in an
/// intermediate state valued at `u3` (loss recovered, but the triggering
/// event leaves slopes between `u1` and `u2`).
///
/// The buyer discounts the covered position at `u3 < u2`, yet the premium
/// `loss_prob * u2 * loss / ((1 - loss_prob) u1 + loss_prob * u3)` exceeds
/// the two-state one because the indifference blend shrinks.
pub fn optimal_contract_three_state<T: Scalar>(
    s: &InsuranceScenario<T>,
) -> Result<InsuranceContract<T>> {
    let u3 =
        s.u3.as_ref()
            .ok_or_else(|| Error::invalid("u3", "required for the three-state contract"))?;
    let one = T::one();
    let blended = (one - s.loss_prob.clone()) * s.u1.clone() + s.loss_prob.clone() * u3.clone();
    let premium = s.loss_prob.clone() * s.u2.clone() * s.loss.clone() / blended;
    let contract = InsuranceContract::new(premium, T::zero(), s)?;
    let two_state = optimal_contract_two_state(s)?;
    if !contract
        .expected_profit()
        .band_gt(two_state.expected_profit())
    {
        return Err(Error::Assertion(format!(
            "three-state profit {} does not exceed two-state profit {}",
            contract.expected_profit(),
            two_state.expected_profit()
        )));
    }
    Ok(contract)
}

/// Whether a monopoly insurer earns strictly positive profit from this
/// household: exactly when the household is risk averse toward the bare loss
/// gamble, `-loss` at slope `u2` with probability `loss_prob` against zero
/// at slope `u1`.
pub fn strict_profitability_holds<T: Scalar>(s: &InsuranceScenario<T>) -> Result<bool> {
    let gamble = Pora::new(
        ReturnVector::new(vec![-s.loss.clone(), T::zero()])?,
        ProbabilityVector::new(vec![s.loss_prob.clone(), T::one() - s.loss_prob.clone()])?,
    )?;
    let profile = LinearUtilityProfile::new(vec![s.u2.clone(), s.u1.clone()])?;
    Ok(classify_risk_attitude(&profile, &gamble)? == RiskAttitude::Averse)
}

/// Exhaustive search for the profit-maximizing contract on a uniform grid,
/// used as an oracle against the closed forms. `resolution` is the cell
/// count per axis: premiums sweep `[0, 2 * fair * u2/u1]` and deductibles
/// `[0, loss]`, each in `resolution + 1` points.
///
/// Feasibility: the buyer weakly prefers the contract to no insurance and
/// the premium covers expected indemnity. Among grid points within one
/// premium step of the best profit, the smallest deductible (then largest
/// premium) wins, so discretization jitter cannot displace the zero-
/// deductible optimum.
pub fn grid_oracle_optimal_contract(
    s: &InsuranceScenario<f64>,
    resolution: usize,
) -> Result<InsuranceContract<f64>> {
    if resolution < 2 {
        return Err(Error::invalid(
            "resolution",
            "need at least two cells per axis",
        ));
    }
    let p = s.loss_prob;
    let u_pol = s.u3.unwrap_or(s.u2);
    let blended = (1.0 - p) * s.u1 + p * u_pol;
    let no_insurance = no_insurance_expected_utility(s);
    let premium_max = 2.0 * actuarially_fair_premium(s) * s.u2 / s.u1;
    let premium_step = premium_max / resolution as f64;
    let deductible_step = s.loss / resolution as f64;

    // (profit, deductible, premium) for the best feasible point in each row
    let rows: Vec<Option<(f64, f64, f64)>> = (0..=resolution)
        .into_par_iter()
        .map(|di| {
            let d = di as f64 * deductible_step;
            let buyer_floor = no_insurance + p * u_pol * d;
            let insurer_floor = p * (s.loss - d);
            let slack = 1e-9 * (1.0 + buyer_floor.abs().max(insurer_floor.abs()));
            // buyer EU = -blended * premium - p * u_pol * d decreases in the
            // premium, and profit increases in it, so the best feasible
            // premium in a row is the largest one
            let mut best: Option<(f64, f64, f64)> = None;
            for pi in (0..=resolution).rev() {
                let premium = pi as f64 * premium_step;
                if -blended * premium < buyer_floor - slack {
                    continue;
                }
                if premium < insurer_floor - slack {
                    break;
                }
                best = Some((premium - insurer_floor, d, premium));
                break;
            }
            best
        })
        .collect();

    let best_profit = rows
        .iter()
        .flatten()
        .map(|&(profit, _, _)| profit)
        .fold(f64::NEG_INFINITY, f64::max);
    if best_profit == f64::NEG_INFINITY {
        return Err(Error::Assertion(
            "no feasible grid point; the full-coverage fair contract should always qualify".into(),
        ));
    }
    let (_, d, premium) = rows
        .iter()
        .flatten()
        .find(|&&(profit, _, _)| profit >= best_profit - premium_step)
        .copied()
        .expect("a row attains the maximum");
    InsuranceContract::new(premium, d, s)
}
