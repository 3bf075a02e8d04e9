//! Almost linear utility: piecewise-linear valuation through the origin
//! whose slope steepens away from zero, with jump discontinuities at the
//! breakpoints. Each interior breakpoint carries a side tag saying which
//! adjacent segment's value is attained there; that single bit decides the
//! household's attitude toward small symmetric gambles around the kink.
//!
//! The domain is `[-wealth, +inf)`: losses below total wealth are ruled out.

use crate::error::{Error, Result};
use crate::pora::RiskAttitude;
use crate::scalar::Scalar;

/// Which adjacent segment's value a breakpoint attains. `Left` keeps the
/// segment below (smaller value at the point), `Right` the segment above.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Half-open-by-default interval of positions, with explicit endpoint
/// membership. `upper` of `None` means unbounded above.
#[derive(Debug, Clone, PartialEq)]
pub struct EventInterval<T: Scalar> {
    pub lower: T,
    pub lower_inclusive: bool,
    pub upper: Option<T>,
    pub upper_inclusive: bool,
}

impl<T: Scalar> EventInterval<T> {
    pub fn contains(&self, value: &T) -> bool {
        match value.band_cmp(&self.lower) {
            std::cmp::Ordering::Less => return false,
            std::cmp::Ordering::Equal => return self.lower_inclusive,
            std::cmp::Ordering::Greater => {}
        }
        match &self.upper {
            None => true,
            Some(upper) => match value.band_cmp(upper) {
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => self.upper_inclusive,
                std::cmp::Ordering::Less => true,
            },
        }
    }
}

/// One state of the equivalent state-dependent linear profile: positions in
/// `interval` are valued at `slope`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateEvent<T: Scalar> {
    pub interval: EventInterval<T>,
    pub slope: T,
}

/// Analysis of the 50/50 gamble `breakpoint +- delta` against receiving the
/// breakpoint for sure.
#[derive(Debug, Clone, PartialEq)]
pub struct KinkAnalysis<T: Scalar> {
    pub breakpoint: T,
    pub side: Side,
    pub sure_value: T,
    pub gamble_expected_utility: T,
    pub certainty_equivalent: T,
    pub attitude: RiskAttitude,
}

/// Piecewise-linear utility through the origin over `[-wealth, +inf)`.
///
/// Losses: `loss_slopes[j-1]` applies on `(loss_breakpoints[j-1],
/// loss_breakpoints[j-2])` (with zero as the upper edge of the first
/// segment); the last loss breakpoint must equal `-wealth` exactly and its
/// segment includes that endpoint. Gains: `gain_slopes[k]` applies on
/// `(gain_breakpoints[k-1], gain_breakpoints[k])`, the first segment
/// starting at zero inclusive and the last unbounded. Slopes strictly
/// increase away from zero on both sides, so every jump at a breakpoint is
/// upward in the direction of increasing position.
#[derive(Debug, Clone, PartialEq)]
pub struct AlmostLinearUtility<T: Scalar> {
    wealth: T,
    loss_breakpoints: Vec<T>,
    loss_slopes: Vec<T>,
    loss_sides: Vec<Side>,
    gain_breakpoints: Vec<T>,
    gain_slopes: Vec<T>,
    gain_sides: Vec<Side>,
}

impl<T: Scalar> AlmostLinearUtility<T> {
    pub fn new(
        wealth: T,
        loss_breakpoints: Vec<T>,
        loss_slopes: Vec<T>,
        loss_sides: Vec<Side>,
        gain_breakpoints: Vec<T>,
        gain_slopes: Vec<T>,
        gain_sides: Vec<Side>,
    ) -> Result<Self> {
        let zero = T::zero();
        if !wealth.band_gt(&zero) || !wealth.to_f64().is_finite() {
            return Err(Error::invalid("wealth", "must be positive and finite"));
        }
        let n = loss_slopes.len();
        let m = gain_slopes.len();
        if n == 0 || m == 0 {
            return Err(Error::invalid(
                "slopes",
                "need at least one segment per sign",
            ));
        }
        if loss_breakpoints.len() != n {
            return Err(Error::DimensionMismatch {
                left: "loss_breakpoints",
                left_len: loss_breakpoints.len(),
                right: "loss_slopes",
                right_len: n,
            });
        }
        if loss_sides.len() != n - 1 {
            return Err(Error::DimensionMismatch {
                left: "loss_sides",
                left_len: loss_sides.len(),
                right: "interior loss breakpoints",
                right_len: n - 1,
            });
        }
        if gain_breakpoints.len() != m - 1 {
            return Err(Error::DimensionMismatch {
                left: "gain_breakpoints",
                left_len: gain_breakpoints.len(),
                right: "interior gain breakpoints",
                right_len: m - 1,
            });
        }
        if gain_sides.len() != m - 1 {
            return Err(Error::DimensionMismatch {
                left: "gain_sides",
                left_len: gain_sides.len(),
                right: "interior gain breakpoints",
                right_len: m - 1,
            });
        }
        for b in &loss_breakpoints {
            if !b.band_lt(&zero) || !b.to_f64().is_finite() {
                return Err(Error::invalid(
                    "loss_breakpoints",
                    "must be negative and finite",
                ));
            }
        }
        if !loss_breakpoints.windows(2).all(|w| w[1].band_lt(&w[0])) {
            return Err(Error::invalid("loss_breakpoints", "must strictly decrease"));
        }
        if *loss_breakpoints.last().expect("n >= 1") != -wealth.clone() {
            return Err(Error::invalid(
                "loss_breakpoints",
                "deepest breakpoint must equal -wealth",
            ));
        }
        for b in &gain_breakpoints {
            if !b.band_gt(&zero) || !b.to_f64().is_finite() {
                return Err(Error::invalid(
                    "gain_breakpoints",
                    "must be positive and finite",
                ));
            }
        }
        if !gain_breakpoints.windows(2).all(|w| w[0].band_lt(&w[1])) {
            return Err(Error::invalid("gain_breakpoints", "must strictly increase"));
        }
        for s in loss_slopes.iter().chain(&gain_slopes) {
            if !s.band_gt(&zero) || !s.to_f64().is_finite() {
                return Err(Error::invalid("slopes", "must be positive and finite"));
            }
        }
        if !loss_slopes.windows(2).all(|w| w[0].band_lt(&w[1])) {
            return Err(Error::invalid(
                "loss_slopes",
                "must strictly increase with loss depth",
            ));
        }
        if !gain_slopes.windows(2).all(|w| w[0].band_lt(&w[1])) {
            return Err(Error::invalid("gain_slopes", "must strictly increase"));
        }
        Ok(Self {
            wealth,
            loss_breakpoints,
            loss_slopes,
            loss_sides,
            gain_breakpoints,
            gain_slopes,
            gain_sides,
        })
    }

    /// Builds without the strictly-increasing-slope checks, for probing
    /// boundary cases such as equal adjacent slopes. Dimension and sign
    /// checks still apply.
    #[doc(hidden)]
    pub fn new_unchecked(
        wealth: T,
        loss_breakpoints: Vec<T>,
        loss_slopes: Vec<T>,
        loss_sides: Vec<Side>,
        gain_breakpoints: Vec<T>,
        gain_slopes: Vec<T>,
        gain_sides: Vec<Side>,
    ) -> Self {
        Self {
            wealth,
            loss_breakpoints,
            loss_slopes,
            loss_sides,
            gain_breakpoints,
            gain_slopes,
            gain_sides,
        }
    }

    pub fn wealth(&self) -> &T {
        &self.wealth
    }

    pub fn loss_segments(&self) -> usize {
        self.loss_slopes.len()
    }

    pub fn gain_segments(&self) -> usize {
        self.gain_slopes.len()
    }

    /// Utility of a position, honoring each breakpoint's side tag. Positions
    /// below `-wealth` are outside the domain.
    pub fn evaluate(&self, position: &T) -> Result<T> {
        let zero = T::zero();
        let floor = -self.wealth.clone();
        if position.band_lt(&floor) {
            return Err(Error::invalid(
                "position",
                format!("{position} lies below -wealth = {floor}"),
            ));
        }
        if position.approx_eq(&zero) {
            return Ok(T::zero());
        }
        if position.band_gt(&zero) {
            for (idx, b) in self.gain_breakpoints.iter().enumerate() {
                if position.approx_eq(b) {
                    let slope = match self.gain_sides[idx] {
                        Side::Left => &self.gain_slopes[idx],
                        Side::Right => &self.gain_slopes[idx + 1],
                    };
                    return Ok(slope.clone() * position.clone());
                }
            }
            let seg = self
                .gain_breakpoints
                .iter()
                .position(|b| position.band_lt(b))
                .unwrap_or(self.gain_slopes.len() - 1);
            Ok(self.gain_slopes[seg].clone() * position.clone())
        } else {
            let n = self.loss_slopes.len();
            for idx in 0..n - 1 {
                if position.approx_eq(&self.loss_breakpoints[idx]) {
                    let slope = match self.loss_sides[idx] {
                        Side::Left => &self.loss_slopes[idx + 1],
                        Side::Right => &self.loss_slopes[idx],
                    };
                    return Ok(slope.clone() * position.clone());
                }
            }
            let seg = (0..n)
                .find(|&idx| self.loss_breakpoints[idx].band_lt(position))
                .unwrap_or(n - 1);
            Ok(self.loss_slopes[seg].clone() * position.clone())
        }
    }

    /// Interior breakpoints as signed indices in ascending position order:
    /// `-j` is the j-th loss breakpoint counting from zero, `k` the k-th
    /// gain breakpoint. The domain edge at `-wealth` is not interior.
    pub fn interior_breakpoint_indices(&self) -> Vec<i32> {
        let n = self.loss_slopes.len() as i32;
        let m = self.gain_slopes.len() as i32;
        (1..n).rev().map(|j| -j).chain(1..m).collect()
    }

    /// Breakpoint position, adjacent slopes (below, above), side tag, and
    /// strict interior bounds for admissible gamble offsets.
    fn kink(&self, index: i32) -> Result<(T, T, T, Side, T, Option<T>)> {
        let zero = T::zero();
        if index > 0 {
            let k = index as usize;
            if k >= self.gain_slopes.len() {
                return Err(Error::invalid("index", "no such interior gain breakpoint"));
            }
            let b = self.gain_breakpoints[k - 1].clone();
            let below = self.gain_slopes[k - 1].clone();
            let above = self.gain_slopes[k].clone();
            let side = self.gain_sides[k - 1];
            let lower = if k == 1 {
                zero
            } else {
                self.gain_breakpoints[k - 2].clone()
            };
            let upper = self.gain_breakpoints.get(k).cloned();
            Ok((b, below, above, side, lower, upper))
        } else if index < 0 {
            let j = (-index) as usize;
            if j >= self.loss_slopes.len() {
                return Err(Error::invalid("index", "no such interior loss breakpoint"));
            }
            let b = self.loss_breakpoints[j - 1].clone();
            let below = self.loss_slopes[j].clone();
            let above = self.loss_slopes[j - 1].clone();
            let side = self.loss_sides[j - 1];
            let lower = self.loss_breakpoints[j].clone();
            let upper = if j == 1 {
                Some(zero)
            } else {
                Some(self.loss_breakpoints[j - 2].clone())
            };
            Ok((b, below, above, side, lower, upper))
        } else {
            Err(Error::invalid(
                "index",
                "zero is the origin, not a breakpoint",
            ))
        }
    }

    /// A quarter of the narrower adjacent segment: an offset guaranteed
    /// admissible for [`Self::analyze_breakpoint`].
    pub fn default_delta(&self, index: i32) -> Result<T> {
        let (b, _, _, _, lower, upper) = self.kink(index)?;
        let mut width = b.clone() - lower;
        if let Some(u) = upper {
            let above = u - b;
            if above < width {
                width = above;
            }
        }
        Ok(width / T::from_int(4))
    }

    /// Compares the 50/50 gamble `b +- delta` with the sure breakpoint value.
    ///
    /// The gamble's outcomes land strictly inside the two adjacent segments,
    /// so its expected utility is `(below (b - delta) + above (b + delta))/2`
    /// and its state-dependent certainty equivalent divides by the average
    /// slope. A `Right` tag values the sure breakpoint on the higher side,
    /// which makes the household averse; `Left` makes it loving.
    pub fn analyze_breakpoint(&self, index: i32, delta: &T) -> Result<KinkAnalysis<T>> {
        let (b, below, above, side, lower, upper) = self.kink(index)?;
        if !delta.is_strictly_positive() {
            return Err(Error::invalid("delta", "must be positive"));
        }
        let low_outcome = b.clone() - delta.clone();
        let high_outcome = b.clone() + delta.clone();
        if !low_outcome.band_gt(&lower) {
            return Err(Error::invalid(
                "delta",
                "downside leaves the segment below the breakpoint",
            ));
        }
        if let Some(u) = &upper {
            if !high_outcome.band_lt(u) {
                return Err(Error::invalid(
                    "delta",
                    "upside leaves the segment above the breakpoint",
                ));
            }
        }
        let sure_value = match side {
            Side::Left => below.clone() * b.clone(),
            Side::Right => above.clone() * b.clone(),
        };
        let parts = below.clone() * low_outcome + above.clone() * high_outcome;
        let gamble_expected_utility = parts.clone() / T::from_int(2);
        let certainty_equivalent = parts / (below + above);
        let attitude = match sure_value.band_cmp(&gamble_expected_utility) {
            std::cmp::Ordering::Greater => RiskAttitude::Averse,
            std::cmp::Ordering::Less => RiskAttitude::Loving,
            std::cmp::Ordering::Equal => RiskAttitude::Neutral,
        };
        Ok(KinkAnalysis {
            breakpoint: b,
            side,
            sure_value,
            gamble_expected_utility,
            certainty_equivalent,
            attitude,
        })
    }

    /// Attitude toward the symmetric kink gamble; see
    /// [`Self::analyze_breakpoint`].
    pub fn risk_attitude_at_breakpoint(&self, index: i32, delta: &T) -> Result<RiskAttitude> {
        Ok(self.analyze_breakpoint(index, delta)?.attitude)
    }

    /// State-dependent certainty equivalent of the kink gamble: above the
    /// breakpoint for gains, below it for losses.
    pub fn perturbation_certainty_equivalent(&self, index: i32, delta: &T) -> Result<T> {
        Ok(self.analyze_breakpoint(index, delta)?.certainty_equivalent)
    }

    /// The equivalent state-dependent linear profile: one event per segment
    /// in ascending position order, with breakpoint membership following the
    /// side tags. The events partition `[-wealth, +inf)`.
    pub fn derive_state_profile(&self) -> Vec<StateEvent<T>> {
        let zero = T::zero();
        let n = self.loss_slopes.len();
        let m = self.gain_slopes.len();
        let mut events = Vec::with_capacity(n + m);
        for seg in (0..n).rev() {
            let lower = self.loss_breakpoints[seg].clone();
            let lower_inclusive = if seg == n - 1 {
                true
            } else {
                self.loss_sides[seg] == Side::Right
            };
            let (upper, upper_inclusive) = if seg == 0 {
                (zero.clone(), false)
            } else {
                (
                    self.loss_breakpoints[seg - 1].clone(),
                    self.loss_sides[seg - 1] == Side::Left,
                )
            };
            events.push(StateEvent {
                interval: EventInterval {
                    lower,
                    lower_inclusive,
                    upper: Some(upper),
                    upper_inclusive,
                },
                slope: self.loss_slopes[seg].clone(),
            });
        }
        for seg in 0..m {
            let (lower, lower_inclusive) = if seg == 0 {
                (zero.clone(), true)
            } else {
                (
                    self.gain_breakpoints[seg - 1].clone(),
                    self.gain_sides[seg - 1] == Side::Right,
                )
            };
            let (upper, upper_inclusive) = match self.gain_breakpoints.get(seg) {
                Some(b) => (Some(b.clone()), self.gain_sides[seg] == Side::Left),
                None => (None, false),
            };
            events.push(StateEvent {
                interval: EventInterval {
                    lower,
                    lower_inclusive,
                    upper,
                    upper_inclusive,
                },
                slope: self.gain_slopes[seg].clone(),
            });
        }
        events
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn gain_kink_alu(side: Side) -> AlmostLinearUtility<f64> {
        AlmostLinearUtility::new(
            100.0,
            vec![-100.0],
            vec![3.0],
            vec![],
            vec![10.0],
            vec![1.0, 2.0],
            vec![side],
        )
        .unwrap()
    }

    fn loss_kink_alu(side: Side) -> AlmostLinearUtility<f64> {
        AlmostLinearUtility::new(
            250.0,
            vec![-10.0, -250.0],
            vec![2.0, 3.0],
            vec![side],
            vec![],
            vec![1.0],
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn validation_rejects_malformed_shapes() {
        let bad = [
            AlmostLinearUtility::new(0.0, vec![0.0], vec![1.0], vec![], vec![], vec![1.0], vec![]),
            AlmostLinearUtility::new(
                100.0,
                vec![-50.0],
                vec![1.0],
                vec![],
                vec![],
                vec![1.0],
                vec![],
            ),
            AlmostLinearUtility::new(
                100.0,
                vec![-100.0, -10.0],
                vec![1.0, 2.0],
                vec![Side::Left],
                vec![],
                vec![1.0],
                vec![],
            ),
            AlmostLinearUtility::new(
                100.0,
                vec![-10.0, -100.0],
                vec![2.0, 1.0],
                vec![Side::Left],
                vec![],
                vec![1.0],
                vec![],
            ),
            AlmostLinearUtility::new(
                100.0,
                vec![-100.0],
                vec![1.0],
                vec![],
                vec![-5.0],
                vec![1.0, 2.0],
                vec![Side::Left],
            ),
            AlmostLinearUtility::new(
                100.0,
                vec![-100.0],
                vec![1.0],
                vec![],
                vec![5.0],
                vec![2.0, 1.0],
                vec![Side::Left],
            ),
            AlmostLinearUtility::new(
                100.0,
                vec![-100.0],
                vec![1.0],
                vec![],
                vec![5.0],
                vec![1.0, 2.0],
                vec![],
            ),
        ];
        for result in bad {
            assert!(result.is_err());
        }
    }

    #[test]
    fn evaluation_honors_segments_and_sides() {
        let u = gain_kink_alu(Side::Left);
        assert_eq!(u.evaluate(&0.0).unwrap(), 0.0);
        assert_eq!(u.evaluate(&5.0).unwrap(), 5.0);
        assert_eq!(
            u.evaluate(&10.0).unwrap(),
            10.0,
            "left side keeps the lower segment"
        );
        assert_eq!(u.evaluate(&12.0).unwrap(), 24.0);
        assert_eq!(u.evaluate(&-40.0).unwrap(), -120.0);
        assert_eq!(u.evaluate(&-100.0).unwrap(), -300.0, "domain edge included");
        assert!(u.evaluate(&-100.1).is_err());

        let right = gain_kink_alu(Side::Right);
        assert_eq!(right.evaluate(&10.0).unwrap(), 20.0);

        let loss = loss_kink_alu(Side::Right);
        assert_eq!(loss.evaluate(&-5.0).unwrap(), -10.0);
        assert_eq!(
            loss.evaluate(&-10.0).unwrap(),
            -20.0,
            "right side keeps the shallow segment"
        );
        assert_eq!(loss.evaluate(&-20.0).unwrap(), -60.0);
        let loss_left = loss_kink_alu(Side::Left);
        assert_eq!(loss_left.evaluate(&-10.0).unwrap(), -30.0);
    }

    #[test]
    fn jumps_are_upward_in_position() {
        let u = gain_kink_alu(Side::Left);
        let before = u.evaluate(&9.999999).unwrap();
        let after = u.evaluate(&10.000001).unwrap();
        assert!(after > before, "gain kink jumps up: {before} -> {after}");
        let loss = loss_kink_alu(Side::Right);
        let deep = loss.evaluate(&-10.000001).unwrap();
        let shallow = loss.evaluate(&-9.999999).unwrap();
        assert!(shallow > deep, "loss kink jumps up: {deep} -> {shallow}");
    }

    #[test]
    fn gain_kink_attitude_follows_the_side_tag() {
        let delta = 1.0;
        let left = gain_kink_alu(Side::Left)
            .analyze_breakpoint(1, &delta)
            .unwrap();
        assert_eq!(left.gamble_expected_utility, 15.5, "(1*9 + 2*11)/2");
        assert_eq!(left.sure_value, 10.0);
        assert_eq!(left.attitude, RiskAttitude::Loving);
        assert!((left.certainty_equivalent - 31.0 / 3.0).abs() < 1e-12);
        assert!(
            left.certainty_equivalent > 10.0,
            "gain kink pushes the equivalent above"
        );

        let right = gain_kink_alu(Side::Right)
            .analyze_breakpoint(1, &delta)
            .unwrap();
        assert_eq!(right.sure_value, 20.0);
        assert_eq!(right.attitude, RiskAttitude::Averse);
        assert_eq!(right.certainty_equivalent, left.certainty_equivalent);
    }

    #[test]
    fn loss_kink_attitude_follows_the_side_tag() {
        let delta = 1.0;
        let right = loss_kink_alu(Side::Right)
            .analyze_breakpoint(-1, &delta)
            .unwrap();
        assert_eq!(right.gamble_expected_utility, -25.5, "(3*(-11) + 2*(-9))/2");
        assert_eq!(right.sure_value, -20.0);
        assert_eq!(right.attitude, RiskAttitude::Averse);
        assert!((right.certainty_equivalent - -10.2).abs() < 1e-12);
        assert!(
            right.certainty_equivalent < -10.0,
            "loss kink pushes the equivalent below"
        );

        let left = loss_kink_alu(Side::Left)
            .analyze_breakpoint(-1, &delta)
            .unwrap();
        assert_eq!(left.sure_value, -30.0);
        assert_eq!(left.attitude, RiskAttitude::Loving);
    }

    #[test]
    fn loss_kink_exact_on_rationals() {
        type R = BigRational;
        let rat = <R as Scalar>::from_ratio;
        let u = AlmostLinearUtility::new(
            rat(250, 1),
            vec![rat(-10, 1), rat(-250, 1)],
            vec![rat(2, 1), rat(3, 1)],
            vec![Side::Right],
            vec![],
            vec![rat(1, 1)],
            vec![],
        )
        .unwrap();
        let ce = u.perturbation_certainty_equivalent(-1, &rat(1, 1)).unwrap();
        assert_eq!(ce, rat(-51, 5));
        let gain = AlmostLinearUtility::new(
            rat(100, 1),
            vec![rat(-100, 1)],
            vec![rat(3, 1)],
            vec![],
            vec![rat(10, 1)],
            vec![rat(1, 1), rat(2, 1)],
            vec![Side::Left],
        )
        .unwrap();
        assert_eq!(
            gain.perturbation_certainty_equivalent(1, &rat(1, 1))
                .unwrap(),
            rat(31, 3)
        );
    }

    #[test]
    fn delta_admissibility_and_defaults() {
        let u = gain_kink_alu(Side::Left);
        assert!(u.analyze_breakpoint(1, &0.0).is_err());
        assert!(
            u.analyze_breakpoint(1, &10.0).is_err(),
            "downside hits the origin"
        );
        assert!(
            u.analyze_breakpoint(1, &9.999).is_ok(),
            "upper segment is unbounded"
        );
        assert_eq!(
            u.default_delta(1).unwrap(),
            2.5,
            "quarter of the only finite width"
        );

        let loss = loss_kink_alu(Side::Right);
        assert!(
            loss.analyze_breakpoint(-1, &10.0).is_err(),
            "upside hits the origin"
        );
        assert!(loss.analyze_breakpoint(-1, &9.9).is_ok());
        assert_eq!(
            loss.default_delta(-1).unwrap(),
            2.5,
            "shallow width 10 beats deep width 240"
        );

        assert!(u.analyze_breakpoint(0, &1.0).is_err());
        assert!(u.analyze_breakpoint(2, &1.0).is_err());
        assert!(
            loss.analyze_breakpoint(-2, &1.0).is_err(),
            "-wealth is not interior"
        );
    }

    #[test]
    fn equal_adjacent_slopes_make_the_kink_neutral() {
        let u = AlmostLinearUtility::new_unchecked(
            100.0,
            vec![-100.0],
            vec![1.0],
            vec![],
            vec![10.0],
            vec![2.0, 2.0],
            vec![Side::Left],
        );
        let analysis = u.analyze_breakpoint(1, &1.0).unwrap();
        assert_eq!(analysis.attitude, RiskAttitude::Neutral);
        assert_eq!(
            analysis.certainty_equivalent, 10.0,
            "no kink, no adjustment"
        );
    }

    #[test]
    fn interior_indices_ascend_by_position() {
        let u = AlmostLinearUtility::new(
            300.0,
            vec![-10.0, -50.0, -300.0],
            vec![2.0, 3.0, 4.0],
            vec![Side::Left, Side::Right],
            vec![20.0, 80.0],
            vec![1.0, 1.5, 1.8],
            vec![Side::Right, Side::Left],
        )
        .unwrap();
        assert_eq!(u.interior_breakpoint_indices(), vec![-2, -1, 1, 2]);
    }

    #[test]
    fn state_profile_partitions_the_domain() {
        let u = AlmostLinearUtility::new(
            300.0,
            vec![-10.0, -50.0, -300.0],
            vec![2.0, 3.0, 4.0],
            vec![Side::Left, Side::Right],
            vec![20.0, 80.0],
            vec![1.0, 1.5, 1.8],
            vec![Side::Right, Side::Left],
        )
        .unwrap();
        let events = u.derive_state_profile();
        assert_eq!(events.len(), 6);
        assert!(
            events[0].interval.lower_inclusive,
            "domain edge belongs to the deepest event"
        );
        assert_eq!(events[0].interval.lower, -300.0);
        assert_eq!(events.last().unwrap().interval.upper, None);

        let probes = [
            -300.0, -299.0, -50.0, -49.0, -10.0, -9.0, 0.0, 5.0, 20.0, 21.0, 80.0, 81.0, 1e6,
        ];
        for probe in probes {
            let holders: Vec<usize> = events
                .iter()
                .enumerate()
                .filter(|(_, e)| e.interval.contains(&probe))
                .map(|(i, _)| i)
                .collect();
            assert_eq!(
                holders.len(),
                1,
                "exactly one event holds {probe}: {holders:?}"
            );
            let slope = &events[holders[0]].slope;
            assert_eq!(
                u.evaluate(&probe).unwrap(),
                slope * probe,
                "evaluation agrees with the owning event at {probe}"
            );
        }
        assert!(!events[0].interval.contains(&-300.1));
    }

    #[test]
    fn random_kinks_follow_their_sides() {
        use rand::Rng;
        use rand_chacha::rand_core::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let b1 = rng.gen_range(5.0..40.0);
            let gap = rng.gen_range(5.0..40.0);
            let wealth = rng.gen_range(50.0..200.0);
            let lb = -rng.gen_range(1.0..wealth / 2.0);
            let side_of = |bit: bool| if bit { Side::Left } else { Side::Right };
            let gain_sides = vec![side_of(rng.gen()), side_of(rng.gen())];
            let loss_sides = vec![side_of(rng.gen())];
            let u = AlmostLinearUtility::new(
                wealth,
                vec![lb, -wealth],
                vec![rng.gen_range(1.0..2.0), rng.gen_range(2.5..4.0)],
                loss_sides,
                vec![b1, b1 + gap],
                vec![
                    rng.gen_range(0.2..0.5),
                    rng.gen_range(0.6..1.0),
                    rng.gen_range(1.1..1.5),
                ],
                gain_sides,
            )
            .unwrap();
            for index in u.interior_breakpoint_indices() {
                let delta = u.default_delta(index).unwrap();
                let analysis = u.analyze_breakpoint(index, &delta).unwrap();
                let expected = match analysis.side {
                    Side::Right => RiskAttitude::Averse,
                    Side::Left => RiskAttitude::Loving,
                };
                assert_eq!(analysis.attitude, expected, "index {index}");
                if index > 0 {
                    assert!(analysis.certainty_equivalent > analysis.breakpoint);
                } else {
                    assert!(analysis.certainty_equivalent < analysis.breakpoint);
                }
            }
        }
    }
}
