//! Portfolios of risky assets and the expected-utility engine.
//!
//! A portfolio (PORA) pairs one monetary return per state of nature with a
//! strictly positive probability vector. Utility is linear in money within
//! each state with a per-state marginal utility (the profile), so expected
//! utility, certainty equivalents, risk premia, and risk attitudes all have
//! closed forms.

use crate::error::{Error, Result};
use crate::scalar::{sums_to_one, Scalar};

/// Strictly positive state probabilities summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVector<T: Scalar> {
    entries: Vec<T>,
}

impl<T: Scalar> ProbabilityVector<T> {
    pub fn new(entries: Vec<T>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::invalid("probs", "need at least two states"));
        }
        for (i, p) in entries.iter().enumerate() {
            if !p.to_f64().is_finite() {
                return Err(Error::invalid("probs", format!("entry {i} is not finite")));
            }
            if !p.is_strictly_positive() {
                return Err(Error::invalid(
                    "probs",
                    format!("entry {i} must be strictly positive, got {p}"),
                ));
            }
        }
        let sum = entries.iter().cloned().fold(T::zero(), |acc, p| acc + p);
        if !sums_to_one(&sum) {
            return Err(Error::invalid(
                "probs",
                format!("entries must sum to 1, got {sum}"),
            ));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Componentwise equality under the backend band.
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.len() == other.len()
            && self
                .entries
                .iter()
                .zip(other.entries.iter())
                .all(|(a, b)| a.approx_eq(b))
    }
}

/// Monetary outcomes per state of nature: any finite reals, in any order.
#[derive(Debug, Clone, PartialEq)]
pub struct ReturnVector<T: Scalar> {
    entries: Vec<T>,
}

impl<T: Scalar> ReturnVector<T> {
    pub fn new(entries: Vec<T>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::invalid("returns", "need at least two states"));
        }
        for (i, x) in entries.iter().enumerate() {
            if !x.to_f64().is_finite() {
                return Err(Error::invalid(
                    "returns",
                    format!("entry {i} is not finite"),
                ));
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Strictly increasing under the backend band.
    pub fn is_strictly_increasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0].band_lt(&w[1]))
    }
}

/// A portfolio of risky assets: one return and one probability per state.
#[derive(Debug, Clone, PartialEq)]
pub struct Pora<T: Scalar> {
    returns: ReturnVector<T>,
    probs: ProbabilityVector<T>,
}

impl<T: Scalar> Pora<T> {
    pub fn new(returns: ReturnVector<T>, probs: ProbabilityVector<T>) -> Result<Self> {
        ensure_same_len("returns", returns.len(), "probs", probs.len())?;
        Ok(Self { returns, probs })
    }

    pub fn returns(&self) -> &ReturnVector<T> {
        &self.returns
    }

    pub fn probs(&self) -> &ProbabilityVector<T> {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.returns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.returns.is_empty()
    }
}

/// One strictly positive marginal utility of money per state.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearUtilityProfile<T: Scalar> {
    slopes: Vec<T>,
}

impl<T: Scalar> LinearUtilityProfile<T> {
    pub fn new(slopes: Vec<T>) -> Result<Self> {
        if slopes.is_empty() {
            return Err(Error::invalid("profile", "need at least one slope"));
        }
        for (i, u) in slopes.iter().enumerate() {
            if !u.to_f64().is_finite() {
                return Err(Error::invalid(
                    "profile",
                    format!("slope {i} is not finite"),
                ));
            }
            if !u.is_strictly_positive() {
                return Err(Error::invalid(
                    "profile",
                    format!("slope {i} must be strictly positive, got {u}"),
                ));
            }
        }
        Ok(Self { slopes })
    }

    pub fn slopes(&self) -> &[T] {
        &self.slopes
    }

    pub fn len(&self) -> usize {
        self.slopes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slopes.is_empty()
    }
}

/// Attitude toward a portfolio's risk relative to a utility profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RiskAttitude {
    Averse,
    Neutral,
    Loving,
}

impl std::fmt::Display for RiskAttitude {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RiskAttitude::Averse => write!(f, "Averse"),
            RiskAttitude::Neutral => write!(f, "Neutral"),
            RiskAttitude::Loving => write!(f, "Loving"),
        }
    }
}

/// Comparison relation for tail-probability queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Greater,
    GreaterEq,
    Less,
    LessEq,
    Equal,
}

fn ensure_same_len(
    left: &'static str,
    left_len: usize,
    right: &'static str,
    right_len: usize,
) -> Result<()> {
    if left_len != right_len {
        return Err(Error::DimensionMismatch {
            left,
            left_len,
            right,
            right_len,
        });
    }
    Ok(())
}

/// The probability-weighted mean return `sum_j p_j x_j`.
pub fn expected_value<T: Scalar>(pora: &Pora<T>) -> T {
    pora.returns()
        .entries()
        .iter()
        .zip(pora.probs().entries())
        .fold(T::zero(), |acc, (x, p)| acc + p.clone() * x.clone())
}

/// Total probability of the states whose return satisfies `relation`
/// against `threshold`.
///
/// The complement pairs are computed by subtraction, so
/// `P[X <= a] + P[X > a] = 1` and `P[X >= a] + P[X < a] = 1` hold exactly.
pub fn tail_probability<T: Scalar>(pora: &Pora<T>, threshold: &T, relation: Relation) -> T {
    let direct = |keep: fn(std::cmp::Ordering) -> bool| {
        pora.returns()
            .entries()
            .iter()
            .zip(pora.probs().entries())
            .filter(|(x, _)| keep(x.band_cmp(threshold)))
            .fold(T::zero(), |acc, (_, p)| acc + p.clone())
    };
    match relation {
        Relation::Greater => direct(|o| o == std::cmp::Ordering::Greater),
        Relation::Less => direct(|o| o == std::cmp::Ordering::Less),
        Relation::Equal => direct(|o| o == std::cmp::Ordering::Equal),
        Relation::LessEq => T::one() - tail_probability(pora, threshold, Relation::Greater),
        Relation::GreaterEq => T::one() - tail_probability(pora, threshold, Relation::Less),
    }
}

/// `Eu(x, p) = sum_j p_j u_j x_j`.
pub fn expected_utility<T: Scalar>(profile: &LinearUtilityProfile<T>, pora: &Pora<T>) -> Result<T> {
    ensure_same_len("profile", profile.len(), "pora", pora.len())?;
    Ok(profile
        .slopes()
        .iter()
        .zip(pora.returns().entries())
        .zip(pora.probs().entries())
        .fold(T::zero(), |acc, ((u, x), p)| {
            acc + p.clone() * u.clone() * x.clone()
        }))
}

/// Expected utility rearranged over cumulative probabilities:
/// `sum_{j<L} (sum_{k<=j} p_k)(u_j x_j - u_{j+1} x_{j+1}) + u_L x_L`.
///
/// Algebraically identical to [`expected_utility`]; kept as an independent
/// computation path so the identity can be checked.
pub fn expected_utility_telescoped<T: Scalar>(
    profile: &LinearUtilityProfile<T>,
    pora: &Pora<T>,
) -> Result<T> {
    ensure_same_len("profile", profile.len(), "pora", pora.len())?;
    let u = profile.slopes();
    let x = pora.returns().entries();
    let p = pora.probs().entries();
    let l = pora.len();
    let mut cumulative = T::zero();
    let mut acc = T::zero();
    for j in 0..l - 1 {
        cumulative = cumulative + p[j].clone();
        let gap = u[j].clone() * x[j].clone() - u[j + 1].clone() * x[j + 1].clone();
        acc = acc + cumulative.clone() * gap;
    }
    Ok(acc + u[l - 1].clone() * x[l - 1].clone())
}

/// The sure amount `c` with `sum_j p_j u_j c = Eu(x, p)`, i.e.
/// `Eu(x, p) / (p . u)`.
pub fn certainty_equivalent<T: Scalar>(
    profile: &LinearUtilityProfile<T>,
    pora: &Pora<T>,
) -> Result<T> {
    let eu = expected_utility(profile, pora)?;
    let weight = profile
        .slopes()
        .iter()
        .zip(pora.probs().entries())
        .fold(T::zero(), |acc, (u, p)| acc + p.clone() * u.clone());
    Ok(eu / weight)
}

/// Expected value minus certainty equivalent; positive for risk aversion.
pub fn risk_premium<T: Scalar>(profile: &LinearUtilityProfile<T>, pora: &Pora<T>) -> Result<T> {
    let ce = certainty_equivalent(profile, pora)?;
    Ok(expected_value(pora) - ce)
}

/// Classifies by the sign of the risk premium under the backend band, so the
/// label and the premium sign can never disagree.
pub fn classify_risk_attitude<T: Scalar>(
    profile: &LinearUtilityProfile<T>,
    pora: &Pora<T>,
) -> Result<RiskAttitude> {
    let premium = risk_premium(profile, pora)?;
    Ok(match premium.band_cmp(&T::zero()) {
        std::cmp::Ordering::Greater => RiskAttitude::Averse,
        std::cmp::Ordering::Less => RiskAttitude::Loving,
        std::cmp::Ordering::Equal => RiskAttitude::Neutral,
    })
}

/// True iff the first pairing carries the strictly larger risk premium.
pub fn more_risk_averse<T: Scalar>(
    u: &LinearUtilityProfile<T>,
    a: &Pora<T>,
    v: &LinearUtilityProfile<T>,
    b: &Pora<T>,
) -> Result<bool> {
    let ra = risk_premium(u, a)?;
    let rb = risk_premium(v, b)?;
    Ok(ra.band_gt(&rb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn pv(entries: &[f64]) -> ProbabilityVector<f64> {
        ProbabilityVector::new(entries.to_vec()).unwrap()
    }

    fn rv(entries: &[f64]) -> ReturnVector<f64> {
        ReturnVector::new(entries.to_vec()).unwrap()
    }

    fn pora(returns: &[f64], probs: &[f64]) -> Pora<f64> {
        Pora::new(rv(returns), pv(probs)).unwrap()
    }

    fn profile(slopes: &[f64]) -> LinearUtilityProfile<f64> {
        LinearUtilityProfile::new(slopes.to_vec()).unwrap()
    }

    fn rat(num: i64, den: i64) -> BigRational {
        <BigRational as Scalar>::from_ratio(num, den)
    }

    #[test]
    fn validation_rejects_bad_probability_vectors() {
        assert!(
            ProbabilityVector::new(vec![1.0]).is_err(),
            "one state is not enough"
        );
        assert!(ProbabilityVector::new(vec![0.5, 0.6]).is_err(), "sum 1.1");
        assert!(
            ProbabilityVector::new(vec![0.0, 1.0]).is_err(),
            "zero entry"
        );
        assert!(
            ProbabilityVector::new(vec![-0.2, 1.2]).is_err(),
            "negative entry"
        );
        assert!(ProbabilityVector::new(vec![f64::NAN, 1.0]).is_err());
        assert!(ProbabilityVector::new(vec![0.25, 0.25, 0.5]).is_ok());
    }

    #[test]
    fn validation_rejects_bad_returns_and_profiles() {
        assert!(ReturnVector::new(vec![1.0]).is_err());
        assert!(ReturnVector::new(vec![f64::INFINITY, 0.0]).is_err());
        assert!(
            ReturnVector::new(vec![2.0, -3.0]).is_ok(),
            "no ordering requirement"
        );
        assert!(LinearUtilityProfile::new(Vec::<f64>::new()).is_err());
        assert!(
            LinearUtilityProfile::new(vec![1.0, 0.0]).is_err(),
            "zero slope"
        );
        assert!(LinearUtilityProfile::new(vec![1.0, -2.0]).is_err());
    }

    #[test]
    fn pora_requires_matching_lengths() {
        let err = Pora::new(rv(&[0.0, 1.0, 2.0]), pv(&[0.5, 0.5])).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn two_state_portfolios_with_mirrored_payoffs() {
        let u = profile(&[1.0, 2.0]);
        let bad_state_pays_nothing = pora(&[2.0, 0.0], &[0.5, 0.5]);
        let good_state_pays_nothing = pora(&[0.0, 2.0], &[0.5, 0.5]);
        let riskless = pora(&[1.0, 1.0], &[0.5, 0.5]);

        for p in [&bad_state_pays_nothing, &good_state_pays_nothing, &riskless] {
            assert_eq!(expected_value(p), 1.0, "all three share mean 1");
        }

        assert_eq!(expected_utility(&u, &bad_state_pays_nothing).unwrap(), 1.0);
        assert_eq!(expected_utility(&u, &good_state_pays_nothing).unwrap(), 2.0);

        assert!(
            (certainty_equivalent(&u, &bad_state_pays_nothing).unwrap() - 2.0 / 3.0).abs() < 1e-15
        );
        assert!(
            (certainty_equivalent(&u, &good_state_pays_nothing).unwrap() - 4.0 / 3.0).abs() < 1e-15
        );
        assert_eq!(certainty_equivalent(&u, &riskless).unwrap(), 1.0);

        assert!((risk_premium(&u, &bad_state_pays_nothing).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!((risk_premium(&u, &good_state_pays_nothing).unwrap() + 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(risk_premium(&u, &riskless).unwrap(), 0.0);

        assert_eq!(
            classify_risk_attitude(&u, &bad_state_pays_nothing).unwrap(),
            RiskAttitude::Averse
        );
        assert_eq!(
            classify_risk_attitude(&u, &good_state_pays_nothing).unwrap(),
            RiskAttitude::Loving
        );
        assert_eq!(
            classify_risk_attitude(&u, &riskless).unwrap(),
            RiskAttitude::Neutral
        );

        assert!(
            more_risk_averse(&u, &bad_state_pays_nothing, &u, &good_state_pays_nothing).unwrap()
        );
        assert!(!more_risk_averse(&u, &riskless, &u, &bad_state_pays_nothing).unwrap());
        assert!(
            !more_risk_averse(&u, &bad_state_pays_nothing, &u, &bad_state_pays_nothing).unwrap()
        );
    }

    #[test]
    fn same_values_are_exact_on_the_rational_backend() {
        let u = LinearUtilityProfile::new(vec![rat(1, 1), rat(2, 1)]).unwrap();
        let p = ProbabilityVector::new(vec![rat(1, 2), rat(1, 2)]).unwrap();
        let x = ReturnVector::new(vec![rat(2, 1), rat(0, 1)]).unwrap();
        let pora = Pora::new(x, p).unwrap();
        assert_eq!(certainty_equivalent(&u, &pora).unwrap(), rat(2, 3));
        assert_eq!(risk_premium(&u, &pora).unwrap(), rat(1, 3));
        assert_eq!(
            classify_risk_attitude(&u, &pora).unwrap(),
            RiskAttitude::Averse
        );
    }

    #[test]
    fn telescoped_form_matches_on_a_three_state_example() {
        let u = profile(&[1.0, 1.9, 1.0]);
        let po = pora(&[0.0, 1.0, 2.0], &[0.2, 0.6, 0.2]);
        let direct = expected_utility(&u, &po).unwrap();
        let tele = expected_utility_telescoped(&u, &po).unwrap();
        assert!((direct - 1.54).abs() < 1e-12);
        assert!((tele - 1.54).abs() < 1e-12);
    }

    #[test]
    fn telescoped_form_dimension_checks() {
        let u = profile(&[1.0, 2.0, 3.0]);
        let po = pora(&[1.0, 2.0], &[0.5, 0.5]);
        assert!(expected_utility(&u, &po).is_err());
        assert!(expected_utility_telescoped(&u, &po).is_err());
    }

    #[test]
    fn tail_probabilities_enumerate_states() {
        let po = pora(&[0.0, 1.0, 2.0], &[0.2, 0.3, 0.5]);
        assert!((tail_probability(&po, &0.5, Relation::Greater) - 0.8).abs() < 1e-15);
        assert!((tail_probability(&po, &1.0, Relation::LessEq) - 0.5).abs() < 1e-15);
        assert!((tail_probability(&po, &1.0, Relation::Equal) - 0.3).abs() < 1e-15);
        assert!((tail_probability(&po, &1.0, Relation::GreaterEq) - 0.8).abs() < 1e-15);
        assert_eq!(
            tail_probability(&po, &-10.0, Relation::Greater),
            1.0,
            "threshold below support"
        );
        assert_eq!(tail_probability(&po, &10.0, Relation::Greater), 0.0);
    }

    #[test]
    fn constant_portfolios_are_riskless() {
        let u = profile(&[3.0, 0.5, 1.0]);
        let po = pora(&[7.0, 7.0, 7.0], &[0.1, 0.4, 0.5]);
        assert_eq!(expected_value(&po), 7.0);
        assert!((certainty_equivalent(&u, &po).unwrap() - 7.0).abs() < 1e-12);
        assert_eq!(
            classify_risk_attitude(&u, &po).unwrap(),
            RiskAttitude::Neutral
        );
    }

    #[test]
    fn strictly_increasing_check_uses_the_band() {
        assert!(rv(&[0.0, 1.0, 2.0]).is_strictly_increasing());
        assert!(!rv(&[0.0, 1.0, 1.0]).is_strictly_increasing());
        assert!(
            !rv(&[0.0, 1.0, 1.0 + 1e-12]).is_strictly_increasing(),
            "ties within the band are not strict"
        );
    }

    fn weights_strategy(len: usize) -> impl Strategy<Value = Vec<f64>> {
        proptest::collection::vec(1u32..1000, len).prop_map(|ws| {
            let total: u64 = ws.iter().map(|w| *w as u64).sum();
            ws.iter().map(|w| *w as f64 / total as f64).collect()
        })
    }

    fn case_strategy() -> impl Strategy<Value = (Vec<f64>, Vec<f64>, Vec<f64>)> {
        (2usize..=8).prop_flat_map(|l| {
            (
                proptest::collection::vec(0.01f64..50.0, l),
                proptest::collection::vec(-100.0f64..100.0, l),
                weights_strategy(l),
            )
        })
    }

    proptest! {
        #[test]
        fn telescoping_identity_holds((slopes, returns, probs) in case_strategy()) {
            let u = LinearUtilityProfile::new(slopes.clone()).unwrap();
            let po = Pora::new(
                ReturnVector::new(returns.clone()).unwrap(),
                ProbabilityVector::new(probs).unwrap(),
            ).unwrap();
            let direct = expected_utility(&u, &po).unwrap();
            let tele = expected_utility_telescoped(&u, &po).unwrap();
            let scale: f64 = slopes.iter().zip(&returns).map(|(a, b)| (a * b).abs()).sum();
            prop_assert!((direct - tele).abs() <= 1e-9 * (1.0 + scale));
        }

        #[test]
        fn expected_utility_and_ce_are_positively_homogeneous(
            (slopes, returns, probs) in case_strategy(),
            alpha in -5.0f64..5.0,
        ) {
            let u = LinearUtilityProfile::new(slopes).unwrap();
            let probs = ProbabilityVector::new(probs).unwrap();
            let base = Pora::new(ReturnVector::new(returns.clone()).unwrap(), probs.clone()).unwrap();
            let scaled_returns: Vec<f64> = returns.iter().map(|x| alpha * x).collect();
            let scaled = Pora::new(ReturnVector::new(scaled_returns).unwrap(), probs).unwrap();

            let eu = expected_utility(&u, &base).unwrap();
            let eu_scaled = expected_utility(&u, &scaled).unwrap();
            prop_assert!((eu_scaled - alpha * eu).abs() <= 1e-9 * (1.0 + eu_scaled.abs().max((alpha * eu).abs())));

            let ce = certainty_equivalent(&u, &base).unwrap();
            let ce_scaled = certainty_equivalent(&u, &scaled).unwrap();
            prop_assert!((ce_scaled - alpha * ce).abs() <= 1e-9 * (1.0 + ce_scaled.abs().max((alpha * ce).abs())));
        }

        #[test]
        fn tail_complement_laws_hold_exactly(
            (slopes, returns, probs) in case_strategy(),
            threshold in -120.0f64..120.0,
        ) {
            let _ = slopes;
            let po = Pora::new(
                ReturnVector::new(returns).unwrap(),
                ProbabilityVector::new(probs).unwrap(),
            ).unwrap();
            let gt = tail_probability(&po, &threshold, Relation::Greater);
            let le = tail_probability(&po, &threshold, Relation::LessEq);
            let lt = tail_probability(&po, &threshold, Relation::Less);
            let ge = tail_probability(&po, &threshold, Relation::GreaterEq);
            prop_assert_eq!(gt + le, 1.0);
            prop_assert_eq!(lt + ge, 1.0);
        }

        #[test]
        fn classification_matches_premium_sign((slopes, returns, probs) in case_strategy()) {
            let u = LinearUtilityProfile::new(slopes).unwrap();
            let po = Pora::new(
                ReturnVector::new(returns).unwrap(),
                ProbabilityVector::new(probs).unwrap(),
            ).unwrap();
            let premium = risk_premium(&u, &po).unwrap();
            let label = classify_risk_attitude(&u, &po).unwrap();
            let expected = match premium.band_cmp(&0.0) {
                std::cmp::Ordering::Greater => RiskAttitude::Averse,
                std::cmp::Ordering::Less => RiskAttitude::Loving,
                std::cmp::Ordering::Equal => RiskAttitude::Neutral,
            };
            prop_assert_eq!(label, expected);
        }

        #[test]
        fn riskless_portfolios_are_neutral_for_every_profile(
            (slopes, _, probs) in case_strategy(),
            c in -50.0f64..50.0,
        ) {
            let l = slopes.len();
            let u = LinearUtilityProfile::new(slopes).unwrap();
            let po = Pora::new(
                ReturnVector::new(vec![c; l]).unwrap(),
                ProbabilityVector::new(probs).unwrap(),
            ).unwrap();
            let ce = certainty_equivalent(&u, &po).unwrap();
            prop_assert!((ce - c).abs() <= 1e-9 * (1.0 + c.abs()));
            prop_assert_eq!(classify_risk_attitude(&u, &po).unwrap(), RiskAttitude::Neutral);
        }
    }
}
