//! Ambiguous portfolios: each state carries a set of candidate returns
//! rather than a single one, and a pessimistic household evaluates the
//! worst selection. Because sign-dependent valuation is increasing in the
//! return, the worst selection is simply the coordinate-wise minimum, so
//! ambiguity collapses to an ordinary portfolio before any expectation is
//! taken.

use crate::error::{Error, Result};
use crate::pora::{Pora, ProbabilityVector, ReturnVector};
use crate::scalar::Scalar;

/// A portfolio whose return in state `j` is only known to lie in
/// `candidate_returns[j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedPora<T: Scalar> {
    candidate_returns: Vec<Vec<T>>,
    probs: ProbabilityVector<T>,
}

impl<T: Scalar> GeneralizedPora<T> {
    pub fn new(candidate_returns: Vec<Vec<T>>, probs: ProbabilityVector<T>) -> Result<Self> {
        if candidate_returns.len() != probs.len() {
            return Err(Error::DimensionMismatch {
                left: "candidate_returns",
                left_len: candidate_returns.len(),
                right: "probs",
                right_len: probs.len(),
            });
        }
        for (j, set) in candidate_returns.iter().enumerate() {
            if set.is_empty() {
                return Err(Error::invalid(
                    "candidate_returns",
                    format!("state {} has no candidates", j + 1),
                ));
            }
            if set.iter().any(|v| !v.to_f64().is_finite()) {
                return Err(Error::invalid(
                    "candidate_returns",
                    format!("state {} has a non-finite candidate", j + 1),
                ));
            }
        }
        Ok(Self {
            candidate_returns,
            probs,
        })
    }

    pub fn candidate_returns(&self) -> &[Vec<T>] {
        &self.candidate_returns
    }

    pub fn probs(&self) -> &ProbabilityVector<T> {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Per-state slope pair `(u_minus, u_plus)`: losses in state `j` are valued
/// at `u_minus`, gains at `u_plus`, with `u_minus >= u_plus > 0` (losses
/// weigh at least as heavily as gains).
#[derive(Debug, Clone, PartialEq)]
pub struct SignDependentProfile<T: Scalar> {
    pairs: Vec<(T, T)>,
}

impl<T: Scalar> SignDependentProfile<T> {
    pub fn new(pairs: Vec<(T, T)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::invalid("pairs", "must be non-empty"));
        }
        for (j, (minus, plus)) in pairs.iter().enumerate() {
            if !plus.is_strictly_positive() || !plus.to_f64().is_finite() {
                return Err(Error::invalid(
                    "pairs",
                    format!("state {}: gain slope must be positive and finite", j + 1),
                ));
            }
            if minus.band_lt(plus) || !minus.to_f64().is_finite() {
                return Err(Error::invalid(
                    "pairs",
                    format!(
                        "state {}: loss slope must be at least the gain slope",
                        j + 1
                    ),
                ));
            }
        }
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> &[(T, T)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Collapses an ambiguous portfolio to the one a pessimist faces: each
/// state's smallest candidate return, under the same probabilities.
pub fn min_pora<T: Scalar>(gp: &GeneralizedPora<T>) -> Pora<T> {
    let mins: Vec<T> = gp
        .candidate_returns
        .iter()
        .map(|set| {
            set.iter()
                .min_by(|a, b| a.partial_cmp(b).expect("finite candidates"))
                .expect("non-empty candidate set")
                .clone()
        })
        .collect();
    let returns = ReturnVector::new(mins).expect("validated candidates stay valid");
    Pora::new(returns, gp.probs.clone()).expect("lengths already match")
}

/// Expected utility where each state's loss part and gain part carry their
/// own slopes: `sum_j p_j (u_minus_j min(x_j, 0) + u_plus_j max(x_j, 0))`.
pub fn sign_dependent_expected_utility<T: Scalar>(
    profile: &SignDependentProfile<T>,
    pora: &Pora<T>,
) -> Result<T> {
    if profile.len() != pora.len() {
        return Err(Error::DimensionMismatch {
            left: "profile",
            left_len: profile.len(),
            right: "portfolio",
            right_len: pora.len(),
        });
    }
    let zero = T::zero();
    let mut total = T::zero();
    for ((minus, plus), (x, p)) in profile
        .pairs
        .iter()
        .zip(pora.returns().entries().iter().zip(pora.probs().entries()))
    {
        let loss_part = if *x < zero { x.clone() } else { T::zero() };
        let gain_part = if *x > zero { x.clone() } else { T::zero() };
        total = total + p.clone() * (minus.clone() * loss_part + plus.clone() * gain_part);
    }
    Ok(total)
}

/// Worst-case expected utility of an ambiguous portfolio: the sign-dependent
/// expected utility of its coordinate-wise minimum selection.
pub fn min_expected_utility<T: Scalar>(
    profile: &SignDependentProfile<T>,
    gp: &GeneralizedPora<T>,
) -> Result<T> {
    sign_dependent_expected_utility(profile, &min_pora(gp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pora::{expected_utility, LinearUtilityProfile};
    use num_rational::BigRational;

    fn pv(entries: &[f64]) -> ProbabilityVector<f64> {
        ProbabilityVector::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn validation_guards_shapes_and_slopes() {
        let probs = pv(&[0.5, 0.5]);
        assert!(GeneralizedPora::new(vec![vec![1.0]], probs.clone()).is_err());
        assert!(GeneralizedPora::new(vec![vec![1.0], vec![]], probs.clone()).is_err());
        assert!(GeneralizedPora::new(vec![vec![1.0], vec![f64::NAN]], probs.clone()).is_err());
        assert!(GeneralizedPora::new(vec![vec![1.0], vec![2.0, 0.5]], probs).is_ok());

        assert!(SignDependentProfile::new(Vec::<(f64, f64)>::new()).is_err());
        assert!(SignDependentProfile::new(vec![(2.0, 0.0)]).is_err());
        assert!(
            SignDependentProfile::new(vec![(1.0, 2.0)]).is_err(),
            "losses must weigh more"
        );
        assert!(
            SignDependentProfile::new(vec![(1.0, 1.0)]).is_ok(),
            "equal slopes allowed"
        );
    }

    #[test]
    fn min_pora_takes_coordinate_minima() {
        let gp =
            GeneralizedPora::new(vec![vec![1.0, 3.0], vec![0.0, 2.0]], pv(&[0.5, 0.5])).unwrap();
        let worst = min_pora(&gp);
        assert_eq!(worst.returns().entries(), &[1.0, 0.0]);

        let mixed =
            GeneralizedPora::new(vec![vec![-1.0, 5.0], vec![2.0, 9.0]], pv(&[0.3, 0.7])).unwrap();
        assert_eq!(min_pora(&mixed).returns().entries(), &[-1.0, 2.0]);
    }

    #[test]
    fn worst_case_utilities_on_reference_portfolios() {
        let sp = SignDependentProfile::new(vec![(2.0, 1.0), (2.0, 1.0)]).unwrap();
        let gp =
            GeneralizedPora::new(vec![vec![1.0, 3.0], vec![0.0, 2.0]], pv(&[0.5, 0.5])).unwrap();
        assert!((min_expected_utility(&sp, &gp).unwrap() - 0.5).abs() < 1e-12);

        let mixed =
            GeneralizedPora::new(vec![vec![-1.0, 5.0], vec![2.0, 9.0]], pv(&[0.3, 0.7])).unwrap();
        assert!((min_expected_utility(&sp, &mixed).unwrap() - 0.8).abs() < 1e-12);
    }

    #[test]
    fn worst_case_utilities_exact_on_rationals() {
        type R = BigRational;
        let rat = <R as Scalar>::from_ratio;
        let sp = SignDependentProfile::new(vec![(rat(2, 1), rat(1, 1)), (rat(2, 1), rat(1, 1))])
            .unwrap();
        let probs = ProbabilityVector::new(vec![rat(3, 10), rat(7, 10)]).unwrap();
        let gp = GeneralizedPora::new(
            vec![vec![rat(-1, 1), rat(5, 1)], vec![rat(2, 1), rat(9, 1)]],
            probs,
        )
        .unwrap();
        assert_eq!(min_expected_utility(&sp, &gp).unwrap(), rat(4, 5));
    }

    #[test]
    fn minimum_lower_bounds_every_selection() {
        let sp = SignDependentProfile::new(vec![(3.0, 1.0), (2.0, 0.5)]).unwrap();
        let candidates = [vec![-2.0, 1.0, 4.0], vec![-1.0, 3.0]];
        let probs = pv(&[0.4, 0.6]);
        let gp = GeneralizedPora::new(candidates.to_vec(), probs.clone()).unwrap();
        let floor = min_expected_utility(&sp, &gp).unwrap();
        for a in &candidates[0] {
            for b in &candidates[1] {
                let selection =
                    Pora::new(ReturnVector::new(vec![*a, *b]).unwrap(), probs.clone()).unwrap();
                let eu = sign_dependent_expected_utility(&sp, &selection).unwrap();
                assert!(
                    eu >= floor - 1e-12,
                    "selection ({a},{b}) fell below the floor"
                );
            }
        }
    }

    #[test]
    fn positive_returns_reduce_to_plain_expected_utility() {
        let sp = SignDependentProfile::new(vec![(5.0, 1.5), (4.0, 0.7)]).unwrap();
        let pora = Pora::new(ReturnVector::new(vec![2.0, 3.0]).unwrap(), pv(&[0.4, 0.6])).unwrap();
        let plain = LinearUtilityProfile::new(vec![1.5, 0.7]).unwrap();
        let sign_dependent = sign_dependent_expected_utility(&sp, &pora).unwrap();
        assert!((sign_dependent - expected_utility(&plain, &pora).unwrap()).abs() < 1e-12);
    }
}
