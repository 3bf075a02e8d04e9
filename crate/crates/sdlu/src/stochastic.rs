//! First-order stochastic dominance, mean-preserving spreads, and machine
//! checks of the equivalences between distribution orderings and
//! expected-utility orderings.
//!
//! The dominance check and its converse are constructive: when one portfolio
//! fails to dominate another over a shared strictly increasing support, an
//! adversarial utility profile is built whose expected-utility gap is at most
//! -3/2, so "not dominant" is certified by an explicit witness rather than a
//! failed search.

use std::cmp::Ordering;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pora::{
    expected_utility, expected_value, tail_probability, LinearUtilityProfile, Pora,
    ProbabilityVector, Relation, ReturnVector,
};
use crate::scalar::Scalar;

/// States receiving probability in a mean-preserving spread: mass moves from
/// middle state `j` outward to `i` and `k`. Indices are 1-based with
/// `i < j < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpreadWitness {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

/// Outcome of a first-order dominance comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct DominanceVerdict<T: Scalar> {
    dominates: bool,
    strict_at: Option<T>,
}

impl<T: Scalar> DominanceVerdict<T> {
    pub fn dominates(&self) -> bool {
        self.dominates
    }

    /// The smallest threshold where the upper-tail inequality is strict;
    /// present exactly when `dominates` is true.
    pub fn strict_at(&self) -> Option<&T> {
        self.strict_at.as_ref()
    }
}

/// Checks whether `a` first-order stochastically dominates `b`: upper-tail
/// probabilities of `a` weakly exceed those of `b` at every threshold of the
/// merged support and strictly exceed them at some threshold.
pub fn first_order_dominates<T: Scalar>(a: &Pora<T>, b: &Pora<T>) -> DominanceVerdict<T> {
    let mut thresholds: Vec<T> = a
        .returns()
        .entries()
        .iter()
        .chain(b.returns().entries())
        .cloned()
        .collect();
    thresholds.sort_by(|x, y| x.partial_cmp(y).expect("finite returns"));
    thresholds.dedup_by(|x, y| x.approx_eq(y));

    let mut strict_at = None;
    for alpha in &thresholds {
        let ta = tail_probability(a, alpha, Relation::Greater);
        let tb = tail_probability(b, alpha, Relation::Greater);
        match ta.band_cmp(&tb) {
            Ordering::Less => {
                return DominanceVerdict {
                    dominates: false,
                    strict_at: None,
                }
            }
            Ordering::Greater => {
                if strict_at.is_none() {
                    strict_at = Some(alpha.clone());
                }
            }
            Ordering::Equal => {}
        }
    }
    DominanceVerdict {
        dominates: strict_at.is_some(),
        strict_at,
    }
}

fn require_strictly_increasing<T: Scalar>(x: &ReturnVector<T>) -> Result<()> {
    if !x.is_strictly_increasing() {
        return Err(Error::invalid("returns", "must be strictly increasing"));
    }
    Ok(())
}

fn require_matching<T: Scalar>(x: &ReturnVector<T>, p: &ProbabilityVector<T>) -> Result<()> {
    if x.len() != p.len() {
        return Err(Error::DimensionMismatch {
            left: "returns",
            left_len: x.len(),
            right: "probs",
            right_len: p.len(),
        });
    }
    Ok(())
}

/// True iff the state-utility products `u_j x_j` are strictly increasing and
/// strictly concave along the grid: for every `i < j < k`,
/// `u_j x_j > (1 - d) u_i x_i + d u_k x_k` with `d = (x_j - x_i)/(x_k - x_i)`.
pub fn is_increasing_concave<T: Scalar>(
    profile: &LinearUtilityProfile<T>,
    x: &ReturnVector<T>,
) -> Result<bool> {
    if x.len() < 3 {
        return Err(Error::invalid("returns", "need at least three states"));
    }
    require_strictly_increasing(x)?;
    if profile.len() != x.len() {
        return Err(Error::DimensionMismatch {
            left: "profile",
            left_len: profile.len(),
            right: "returns",
            right_len: x.len(),
        });
    }
    let xs = x.entries();
    let products: Vec<T> = profile
        .slopes()
        .iter()
        .zip(xs)
        .map(|(u, xj)| u.clone() * xj.clone())
        .collect();
    if !products.windows(2).all(|w| w[0].band_lt(&w[1])) {
        return Ok(false);
    }
    let l = xs.len();
    for i in 0..l {
        for j in i + 1..l {
            for k in j + 1..l {
                let delta = (xs[j].clone() - xs[i].clone()) / (xs[k].clone() - xs[i].clone());
                let chord =
                    (T::one() - delta.clone()) * products[i].clone() + delta * products[k].clone();
                if !products[j].band_gt(&chord) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Detects whether `(x, q)` arises from `(x, p)` by a single mean-preserving
/// spread: exactly three states change, with mass leaving a middle state for
/// one state on each side, and the mean is unchanged.
///
/// Returns the witness triple when the pattern holds; the triple is unique
/// because all other coordinates must match exactly.
pub fn is_mean_preserving_spread<T: Scalar>(
    x: &ReturnVector<T>,
    p: &ProbabilityVector<T>,
    q: &ProbabilityVector<T>,
) -> Result<Option<SpreadWitness>> {
    if x.len() < 3 {
        return Err(Error::invalid("returns", "need at least three states"));
    }
    require_strictly_increasing(x)?;
    require_matching(x, p)?;
    require_matching(x, q)?;

    let mean_p = expected_value(&Pora::new(x.clone(), p.clone())?);
    let mean_q = expected_value(&Pora::new(x.clone(), q.clone())?);
    if !mean_p.approx_eq(&mean_q) {
        return Ok(None);
    }

    let mut changed: Vec<(usize, Ordering)> = Vec::new();
    for (h, (ph, qh)) in p.entries().iter().zip(q.entries()).enumerate() {
        match qh.band_cmp(ph) {
            Ordering::Equal => {}
            ord => changed.push((h, ord)),
        }
    }
    match changed.as_slice() {
        [(i, Ordering::Greater), (j, Ordering::Less), (k, Ordering::Greater)] => {
            Ok(Some(SpreadWitness {
                i: i + 1,
                j: j + 1,
                k: k + 1,
            }))
        }
        _ => Ok(None),
    }
}

/// Cumulative probability differences `sum_{h<=j} (p_h - q_h)` for
/// `j = 1..L-1` (the full sum is always zero).
fn cumulative_differences<T: Scalar>(p: &ProbabilityVector<T>, q: &ProbabilityVector<T>) -> Vec<T> {
    let mut acc = T::zero();
    p.entries()
        .iter()
        .zip(q.entries())
        .take(p.len() - 1)
        .map(|(ph, qh)| {
            acc = acc.clone() + ph.clone() - qh.clone();
            acc.clone()
        })
        .collect()
}

/// Turns consecutive product gaps into a product sequence `v` with
/// `v_{j+1} - v_j = gaps[j]` and `sign(v_j) = sign(x_j)`, so positive slopes
/// can be recovered by division.
///
/// Anchoring: a zero return pins `v = 0` there; an all-positive grid starts
/// at `v_1 = edge_magnitude`; an all-negative grid ends at
/// `v_L = -edge_magnitude`; a sign change without a zero splits that gap
/// symmetrically across zero.
fn anchored_products<T: Scalar>(x: &[T], gaps: &[T], edge_magnitude: &T) -> Vec<T> {
    let l = x.len();
    debug_assert_eq!(gaps.len(), l - 1);
    let zero = T::zero();
    let mut v = vec![T::zero(); l];

    let anchor = if let Some(z) = x.iter().position(|xj| xj.approx_eq(&zero)) {
        v[z] = T::zero();
        z
    } else if x[0].band_gt(&zero) {
        v[0] = edge_magnitude.clone();
        0
    } else if x[l - 1].band_lt(&zero) {
        v[l - 1] = -edge_magnitude.clone();
        l - 1
    } else {
        let i = x
            .windows(2)
            .position(|w| w[0].band_lt(&zero) && w[1].band_gt(&zero))
            .expect("strictly increasing grid crosses zero somewhere");
        let half = gaps[i].clone() / T::from_int(2);
        v[i] = -half.clone();
        v[i + 1] = half;
        i
    };

    for j in anchor + 1..l {
        v[j] = v[j - 1].clone() + gaps[j - 1].clone();
    }
    for j in (0..anchor).rev() {
        v[j] = v[j + 1].clone() - gaps[j].clone();
    }
    v
}

/// Recovers slopes from products: `u_j = v_j / x_j`, with slope 1 where the
/// return is zero (and the product pinned to zero there).
fn products_to_profile<T: Scalar>(x: &[T], products: &[T]) -> Result<LinearUtilityProfile<T>> {
    let zero = T::zero();
    let mut slopes = Vec::with_capacity(x.len());
    for (xj, vj) in x.iter().zip(products) {
        let u = if xj.approx_eq(&zero) {
            T::one()
        } else {
            vj.clone() / xj.clone()
        };
        if !u.is_strictly_positive() {
            return Err(Error::Assertion(format!(
                "recovered slope {u} is not positive (return {xj}, product {vj})"
            )));
        }
        slopes.push(u);
    }
    LinearUtilityProfile::new(slopes)
        .map_err(|e| Error::Assertion(format!("constructed profile failed validation: {e}")))
}

fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random fraction in (0, 1], exact on both backends.
fn unit_fraction<T: Scalar>(rng: &mut ChaCha8Rng) -> T {
    T::from_ratio(rng.gen_range(1..=1000), 1000)
}

/// Builds a profile whose products `u_j x_j` strictly increase, the class of
/// profiles that rank portfolios consistently with first-order dominance.
pub fn random_increasing_product_profile<T: Scalar>(
    x: &ReturnVector<T>,
    seed: u64,
) -> Result<LinearUtilityProfile<T>> {
    require_strictly_increasing(x)?;
    let mut rng = rng_from(seed);
    random_increasing_product_with(x, &mut rng)
}

fn random_increasing_product_with<T: Scalar>(
    x: &ReturnVector<T>,
    rng: &mut ChaCha8Rng,
) -> Result<LinearUtilityProfile<T>> {
    let gaps: Vec<T> = (0..x.len() - 1).map(|_| unit_fraction::<T>(rng)).collect();
    let magnitude = unit_fraction::<T>(rng);
    let v = anchored_products(x.entries(), &gaps, &magnitude);
    products_to_profile(x.entries(), &v)
}

/// Builds a profile passing [`is_increasing_concave`] for the given grid.
///
/// Sampling happens in product space: strictly decreasing chord slopes are
/// drawn first, which makes the piecewise-linear product sequence strictly
/// concave with respect to `x` no matter how unevenly the grid is spaced.
pub fn random_increasing_concave_profile<T: Scalar>(
    x: &ReturnVector<T>,
    seed: u64,
) -> Result<LinearUtilityProfile<T>> {
    if x.len() < 3 {
        return Err(Error::invalid("returns", "need at least three states"));
    }
    require_strictly_increasing(x)?;
    let mut rng = rng_from(seed);
    random_increasing_concave_with(x, &mut rng)
}

fn random_increasing_concave_with<T: Scalar>(
    x: &ReturnVector<T>,
    rng: &mut ChaCha8Rng,
) -> Result<LinearUtilityProfile<T>> {
    let l = x.len();
    let mut slopes = vec![T::zero(); l - 1];
    slopes[l - 2] = unit_fraction::<T>(rng);
    for idx in (0..l - 2).rev() {
        slopes[idx] = slopes[idx + 1].clone() + unit_fraction::<T>(rng);
    }
    let xs = x.entries();
    let gaps: Vec<T> = slopes
        .iter()
        .enumerate()
        .map(|(j, s)| s.clone() * (xs[j + 1].clone() - xs[j].clone()))
        .collect();
    let magnitude = unit_fraction::<T>(rng);
    let v = anchored_products(xs, &gaps, &magnitude);
    let profile = products_to_profile(xs, &v)?;
    if !is_increasing_concave(&profile, x)? {
        return Err(Error::Assertion(
            "generated profile failed its own concavity postcondition".into(),
        ));
    }
    Ok(profile)
}

/// Builds a utility profile under which `(x, q)` is strictly preferred to
/// `(x, p)` by a margin of at least 3/2, certifying that `(x, p)` does not
/// first-order dominate `(x, q)`.
///
/// Product gaps are `2/eta` at indices where the cumulative distribution of
/// `p` exceeds that of `q` by at least `eta` (the smallest positive excess)
/// and `1/(4L)` elsewhere, which bounds the expected-utility difference by
/// `-2 + (L-1)/(4L) < -3/2`.
pub fn construct_adversarial_profile<T: Scalar>(
    x: &ReturnVector<T>,
    p: &ProbabilityVector<T>,
    q: &ProbabilityVector<T>,
) -> Result<LinearUtilityProfile<T>> {
    require_strictly_increasing(x)?;
    require_matching(x, p)?;
    require_matching(x, q)?;
    let a = Pora::new(x.clone(), p.clone())?;
    let b = Pora::new(x.clone(), q.clone())?;
    if first_order_dominates(&a, &b).dominates() {
        return Err(Error::invalid(
            "pair",
            "first portfolio dominates the second; no adversarial profile exists",
        ));
    }

    let cumdiff = cumulative_differences(p, q);
    let zero = T::zero();
    let positive: Vec<usize> = (0..cumdiff.len())
        .filter(|&j| cumdiff[j].band_gt(&zero))
        .collect();
    if positive.is_empty() {
        return Err(Error::Degenerate(
            "distributions agree within tolerance; no positive cumulative difference".into(),
        ));
    }
    let eta = positive
        .iter()
        .map(|&j| cumdiff[j].clone())
        .min_by(|a, b| a.partial_cmp(b).expect("finite"))
        .expect("non-empty");

    let l = x.len() as i64;
    let wide = T::from_int(2) / eta;
    let narrow = T::from_ratio(1, 4 * l);
    let gaps: Vec<T> = (0..cumdiff.len())
        .map(|j| {
            if positive.contains(&j) {
                wide.clone()
            } else {
                narrow.clone()
            }
        })
        .collect();

    let xs = x.entries();
    let edge = if xs[0].band_gt(&zero) {
        xs[0].clone()
    } else {
        T::from_ratio(1, 8 * l)
    };
    let v = anchored_products(xs, &gaps, &edge);
    products_to_profile(xs, &v)
}

/// Result of checking one portfolio pair against the equivalence between
/// first-order dominance and unanimous expected-utility preference.
#[derive(Debug, Clone, PartialEq)]
pub enum DominanceEquivalence<T: Scalar> {
    /// The pair is dominance-ordered and every sampled increasing-product
    /// profile strictly preferred the dominant portfolio.
    Dominates { samples: usize, min_margin: T },
    /// The pair is not dominance-ordered and the constructed profile reverses
    /// the preference by `margin <= -3/2`.
    NotDominates {
        adversarial: LinearUtilityProfile<T>,
        margin: T,
    },
    /// The distributions coincide, so every profile is indifferent.
    EqualDistributions,
}

/// Checks one direction of the dominance equivalence on a shared strictly
/// increasing support.
///
/// If `(x, p)` dominates `(x, q)`, samples `sample_count` increasing-product
/// profiles and requires `Eu(x,p) > Eu(x,q)` strictly for each. Otherwise
/// constructs the adversarial profile and requires its margin to be at most
/// -3/2. Margins are `Eu(x,p) - Eu(x,q)`.
pub fn verify_dominance_equivalence<T: Scalar>(
    x: &ReturnVector<T>,
    p: &ProbabilityVector<T>,
    q: &ProbabilityVector<T>,
    sample_count: usize,
    seed: u64,
) -> Result<DominanceEquivalence<T>> {
    require_strictly_increasing(x)?;
    require_matching(x, p)?;
    require_matching(x, q)?;
    let pora_p = Pora::new(x.clone(), p.clone())?;
    let pora_q = Pora::new(x.clone(), q.clone())?;

    if first_order_dominates(&pora_p, &pora_q).dominates() {
        let mut rng = rng_from(seed);
        let mut min_margin: Option<T> = None;
        for _ in 0..sample_count {
            let profile = random_increasing_product_with(x, &mut rng)?;
            let margin =
                expected_utility(&profile, &pora_p)? - expected_utility(&profile, &pora_q)?;
            if !margin.is_strictly_positive() {
                return Err(Error::Assertion(format!(
                    "dominant portfolio not strictly preferred: margin {margin}"
                )));
            }
            min_margin = Some(match min_margin {
                None => margin,
                Some(m) if margin < m => margin,
                Some(m) => m,
            });
        }
        Ok(DominanceEquivalence::Dominates {
            samples: sample_count,
            min_margin: min_margin.unwrap_or_else(T::zero),
        })
    } else if p.approx_eq(q) {
        Ok(DominanceEquivalence::EqualDistributions)
    } else {
        let adversarial = construct_adversarial_profile(x, p, q)?;
        let margin =
            expected_utility(&adversarial, &pora_p)? - expected_utility(&adversarial, &pora_q)?;
        let bound = T::from_ratio(-3, 2);
        if margin.band_gt(&bound) {
            return Err(Error::Assertion(format!(
                "adversarial margin {margin} exceeds the -3/2 bound"
            )));
        }
        Ok(DominanceEquivalence::NotDominates {
            adversarial,
            margin,
        })
    }
}

/// Report for one mean-preserving-spread pair: every sampled
/// increasing-concave profile strictly preferred the unspread portfolio.
#[derive(Debug, Clone, PartialEq)]
pub struct SpreadAversion<T: Scalar> {
    pub witness: SpreadWitness,
    pub samples: usize,
    /// Smallest observed `Eu(x,p) - Eu(x,q)`; absent when no samples ran.
    pub min_margin: Option<T>,
}

/// Requires `(x, q)` to be a mean-preserving spread of `(x, p)`, then checks
/// that `sample_count` random increasing-concave profiles all satisfy
/// `Eu(x,p) > Eu(x,q)` strictly.
pub fn verify_spread_aversion<T: Scalar>(
    x: &ReturnVector<T>,
    p: &ProbabilityVector<T>,
    q: &ProbabilityVector<T>,
    sample_count: usize,
    seed: u64,
) -> Result<SpreadAversion<T>> {
    let witness = is_mean_preserving_spread(x, p, q)?.ok_or_else(|| {
        Error::invalid(
            "pair",
            "second distribution is not a mean-preserving spread of the first",
        )
    })?;
    let pora_p = Pora::new(x.clone(), p.clone())?;
    let pora_q = Pora::new(x.clone(), q.clone())?;
    let mut rng = rng_from(seed);
    let mut min_margin: Option<T> = None;
    for _ in 0..sample_count {
        let profile = random_increasing_concave_with(x, &mut rng)?;
        let margin = expected_utility(&profile, &pora_p)? - expected_utility(&profile, &pora_q)?;
        if !margin.is_strictly_positive() {
            return Err(Error::Assertion(format!(
                "spread not strictly dispreferred: margin {margin}"
            )));
        }
        min_margin = Some(match min_margin {
            None => margin,
            Some(m) if margin < m => margin,
            Some(m) => m,
        });
    }
    Ok(SpreadAversion {
        witness,
        samples: sample_count,
        min_margin,
    })
}

/// Result of the converse spread check on a three-state grid.
#[derive(Debug, Clone, PartialEq)]
pub enum SpreadConverse<T: Scalar> {
    /// The pair turned out to be a spread after all; the forward check ran.
    SpreadHolds(SpreadAversion<T>),
    /// The pair is not a spread and this increasing-concave profile fails to
    /// prefer `(x, p)`: `margin = Eu(x,p) - Eu(x,q) <= 0`.
    Counterexample {
        profile: LinearUtilityProfile<T>,
        margin: T,
    },
}

/// Contrapositive check at three states: an equal-mean pair that differs in
/// the middle probability but is not a mean-preserving spread must admit an
/// increasing-concave profile that does not prefer `(x, p)`.
///
/// The search walks a coarse grid of product shapes (ten concavity levels by
/// ten tilt levels) and then falls back to random sampling until
/// `search_budget` profiles have been examined.
pub fn verify_spread_converse<T: Scalar>(
    x: &ReturnVector<T>,
    p: &ProbabilityVector<T>,
    q: &ProbabilityVector<T>,
    search_budget: usize,
    seed: u64,
) -> Result<SpreadConverse<T>> {
    if x.len() != 3 {
        return Err(Error::invalid(
            "returns",
            "converse check is defined for exactly three states",
        ));
    }
    require_strictly_increasing(x)?;
    require_matching(x, p)?;
    require_matching(x, q)?;
    let pora_p = Pora::new(x.clone(), p.clone())?;
    let pora_q = Pora::new(x.clone(), q.clone())?;
    let mean_p = expected_value(&pora_p);
    let mean_q = expected_value(&pora_q);
    if !mean_p.approx_eq(&mean_q) {
        return Err(Error::invalid("pair", "means must agree"));
    }
    if p.entries()[1].approx_eq(&q.entries()[1]) {
        return Err(Error::invalid("pair", "middle probabilities must differ"));
    }

    if is_mean_preserving_spread(x, p, q)?.is_some() {
        return Ok(SpreadConverse::SpreadHolds(verify_spread_aversion(
            x,
            p,
            q,
            search_budget,
            seed,
        )?));
    }

    let xs = x.entries();
    let mut examined = 0usize;
    let check = |profile: LinearUtilityProfile<T>| -> Result<Option<SpreadConverse<T>>> {
        let margin = expected_utility(&profile, &pora_p)? - expected_utility(&profile, &pora_q)?;
        if !margin.is_strictly_positive() {
            return Ok(Some(SpreadConverse::Counterexample { profile, margin }));
        }
        Ok(None)
    };

    'grid: for concavity in 1..=10i64 {
        for tilt in 1..=10i64 {
            if examined >= search_budget {
                break 'grid;
            }
            examined += 1;
            let s2 = T::from_ratio(tilt, 5);
            let s1 = s2.clone() * (T::one() + T::from_ratio(concavity, 5));
            let gaps = vec![
                s1 * (xs[1].clone() - xs[0].clone()),
                s2 * (xs[2].clone() - xs[1].clone()),
            ];
            let v = anchored_products(xs, &gaps, &T::one());
            let profile = products_to_profile(xs, &v)?;
            if !is_increasing_concave(&profile, x)? {
                continue;
            }
            if let Some(found) = check(profile)? {
                return Ok(found);
            }
        }
    }

    let mut rng = rng_from(seed);
    while examined < search_budget {
        examined += 1;
        let profile = random_increasing_concave_with(x, &mut rng)?;
        if let Some(found) = check(profile)? {
            return Ok(found);
        }
    }
    Err(Error::Assertion(format!(
        "no increasing-concave counterexample found within {search_budget} profiles"
    )))
}

/// Draws a mean-preserving spread of a random distribution over `x`: half of
/// a random middle state's mass moves outward, split so the mean is
/// unchanged.
pub fn random_spread_pair<T: Scalar>(
    x: &ReturnVector<T>,
    seed: u64,
) -> Result<(ProbabilityVector<T>, ProbabilityVector<T>)> {
    if x.len() < 3 {
        return Err(Error::invalid("returns", "need at least three states"));
    }
    require_strictly_increasing(x)?;
    let l = x.len();
    let mut rng = rng_from(seed);

    let weights: Vec<i64> = (0..l).map(|_| rng.gen_range(1..=9)).collect();
    let total: i64 = weights.iter().sum();
    let p: Vec<T> = weights.iter().map(|w| T::from_ratio(*w, total)).collect();

    let j = rng.gen_range(1..l - 1);
    let i = rng.gen_range(0..j);
    let k = rng.gen_range(j + 1..l);

    let xs = x.entries();
    let mass = p[j].clone() / T::from_int(2);
    let toward_low =
        mass.clone() * (xs[k].clone() - xs[j].clone()) / (xs[k].clone() - xs[i].clone());
    let toward_high = mass.clone() - toward_low.clone();

    let mut q = p.clone();
    q[i] = q[i].clone() + toward_low;
    q[j] = q[j].clone() - mass;
    q[k] = q[k].clone() + toward_high;

    Ok((ProbabilityVector::new(p)?, ProbabilityVector::new(q)?))
}

/// Enumerates every probability vector of the given length whose entries are
/// positive multiples of `1/denominator`, in lexicographic order.
pub fn probability_grid<T: Scalar>(
    len: usize,
    denominator: u32,
) -> Result<Vec<ProbabilityVector<T>>> {
    if len < 2 {
        return Err(Error::invalid("len", "need at least two states"));
    }
    if (denominator as usize) < len {
        return Err(Error::invalid(
            "denominator",
            format!("must be at least {len} so every entry can be positive"),
        ));
    }
    let mut out = Vec::new();
    let mut parts = vec![0u32; len];
    fn fill<T: Scalar>(
        parts: &mut Vec<u32>,
        idx: usize,
        remaining: u32,
        denominator: u32,
        out: &mut Vec<ProbabilityVector<T>>,
    ) {
        let slots_after = (parts.len() - idx - 1) as u32;
        if idx == parts.len() - 1 {
            parts[idx] = remaining;
            let entries = parts
                .iter()
                .map(|&n| T::from_ratio(n as i64, denominator as i64))
                .collect();
            out.push(ProbabilityVector::new(entries).expect("grid vectors are valid"));
            return;
        }
        for first in 1..=remaining - slots_after {
            parts[idx] = first;
            fill(parts, idx + 1, remaining - first, denominator, out);
        }
    }
    fill(&mut parts, 0, denominator, denominator, &mut out);
    Ok(out)
}

/// Aggregate results of sweeping every ordered pair of grid distributions
/// through the dominance and spread checks. A returned summary means every
/// strictness assertion inside the sweep held.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteSummary<T: Scalar> {
    pub grid_size: usize,
    pub ordered_pairs: usize,
    pub dominant_pairs: usize,
    pub dominance_samples_per_pair: usize,
    pub dominance_min_margin: Option<T>,
    pub adversarial_pairs: usize,
    /// Largest (least negative) adversarial margin seen; at most -3/2.
    pub adversarial_worst_margin: Option<T>,
    pub spread_pairs: usize,
    pub spread_min_margin: Option<T>,
    pub converse_pairs: usize,
    /// Largest counterexample margin seen; at most 0.
    pub converse_worst_margin: Option<T>,
}

struct PairOutcome<T: Scalar> {
    dominant: Option<T>,
    adversarial: Option<T>,
    spread: Option<T>,
    converse: Option<T>,
}

/// Sweeps every ordered pair of denominator-grid distributions over a shared
/// strictly increasing support through all three checks:
/// dominance-equivalence on every pair, spread-aversion on spread pairs, and
/// the converse search on equal-mean non-spread pairs (three states only).
pub fn run_verification_suite<T: Scalar>(
    x: &ReturnVector<T>,
    denominator: u32,
    samples: usize,
    budget: usize,
    seed: u64,
) -> Result<SuiteSummary<T>> {
    require_strictly_increasing(x)?;
    let grid = probability_grid::<T>(x.len(), denominator)?;
    let pairs: Vec<(usize, usize)> = (0..grid.len())
        .flat_map(|a| (0..grid.len()).map(move |b| (a, b)))
        .filter(|(a, b)| a != b)
        .collect();

    let outcomes: Result<Vec<PairOutcome<T>>> = pairs
        .par_iter()
        .enumerate()
        .map(|(idx, &(a, b))| {
            let pair_seed = seed.wrapping_add((idx as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let p = &grid[a];
            let q = &grid[b];
            let mut outcome = PairOutcome {
                dominant: None,
                adversarial: None,
                spread: None,
                converse: None,
            };
            match verify_dominance_equivalence(x, p, q, samples, pair_seed)? {
                DominanceEquivalence::Dominates { min_margin, .. } => {
                    outcome.dominant = Some(min_margin)
                }
                DominanceEquivalence::NotDominates { margin, .. } => {
                    outcome.adversarial = Some(margin)
                }
                DominanceEquivalence::EqualDistributions => {
                    return Err(Error::Assertion(
                        "grid vectors are distinct; equal-distribution branch is unreachable"
                            .into(),
                    ))
                }
            }
            if is_mean_preserving_spread(x, p, q)?.is_some() {
                let report = verify_spread_aversion(x, p, q, samples, pair_seed)?;
                outcome.spread = Some(report.min_margin.unwrap_or_else(T::zero));
            } else if x.len() == 3 {
                let mean_p = expected_value(&Pora::new(x.clone(), p.clone())?);
                let mean_q = expected_value(&Pora::new(x.clone(), q.clone())?);
                let middles_differ = !p.entries()[1].approx_eq(&q.entries()[1]);
                if mean_p.approx_eq(&mean_q) && middles_differ {
                    match verify_spread_converse(x, p, q, budget, pair_seed)? {
                        SpreadConverse::Counterexample { margin, .. } => {
                            outcome.converse = Some(margin)
                        }
                        SpreadConverse::SpreadHolds(_) => {
                            return Err(Error::Assertion(
                                "non-spread pair delegated to the forward check".into(),
                            ))
                        }
                    }
                }
            }
            Ok(outcome)
        })
        .collect();
    let outcomes = outcomes?;

    let mut summary = SuiteSummary {
        grid_size: grid.len(),
        ordered_pairs: pairs.len(),
        dominant_pairs: 0,
        dominance_samples_per_pair: samples,
        dominance_min_margin: None,
        adversarial_pairs: 0,
        adversarial_worst_margin: None,
        spread_pairs: 0,
        spread_min_margin: None,
        converse_pairs: 0,
        converse_worst_margin: None,
    };
    let keep_min = |slot: &mut Option<T>, value: T| {
        let replace = slot.as_ref().is_none_or(|m| value < *m);
        if replace {
            *slot = Some(value);
        }
    };
    let keep_max = |slot: &mut Option<T>, value: T| {
        let replace = slot.as_ref().is_none_or(|m| value > *m);
        if replace {
            *slot = Some(value);
        }
    };
    for outcome in outcomes {
        if let Some(m) = outcome.dominant {
            summary.dominant_pairs += 1;
            keep_min(&mut summary.dominance_min_margin, m);
        }
        if let Some(m) = outcome.adversarial {
            summary.adversarial_pairs += 1;
            keep_max(&mut summary.adversarial_worst_margin, m);
        }
        if let Some(m) = outcome.spread {
            summary.spread_pairs += 1;
            keep_min(&mut summary.spread_min_margin, m);
        }
        if let Some(m) = outcome.converse {
            summary.converse_pairs += 1;
            keep_max(&mut summary.converse_worst_margin, m);
        }
    }
    Ok(summary)
}
