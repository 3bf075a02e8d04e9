//! Scenario-driven command layer: parse a JSON scenario, run the matching
//! analysis, and render a structured report.
//!
//! Arithmetic backend selection: a run uses exact rationals when `--exact`
//! is passed, when the scenario contains any fraction literal, or for the
//! `verify` command (whose margin bounds are worth certifying exactly).
//! Everything else runs in banded floating point.

pub mod report;
pub mod scenario;

pub use report::{Entry, Format, Report, ReportNum, Section, Value};
pub use scenario::{
    parse_scenario, DiversificationSpec, Num, PoraSpec, ScenarioDocument, SideSpec,
};

use num_rational::BigRational;

use crate::almost_linear::{AlmostLinearUtility, EventInterval, Side};
use crate::ambiguity::{min_expected_utility, min_pora, GeneralizedPora, SignDependentProfile};
use crate::error::{Error, Result};
use crate::insurance::{
    actuarially_fair_premium, diversification_comparison, grid_oracle_optimal_contract,
    no_insurance_certainty_equivalent, no_insurance_expected_utility, optimal_contract_three_state,
    optimal_contract_two_state, seller_premium_band, strict_profitability_holds, InsuranceScenario,
};
use crate::pora::{
    certainty_equivalent, classify_risk_attitude, expected_utility, expected_utility_telescoped,
    expected_value, risk_premium, LinearUtilityProfile, Pora, ProbabilityVector, ReturnVector,
};
use crate::scalar::Scalar;
use crate::stochastic::{
    first_order_dominates, is_mean_preserving_spread, run_verification_suite,
    verify_dominance_equivalence, verify_spread_aversion, verify_spread_converse,
    DominanceEquivalence, DominanceVerdict, SpreadConverse,
};

/// Knobs shared by every subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOptions {
    pub format: Format,
    pub seed: u64,
    /// Grid resolution for the insurance oracle cross-check.
    pub oracle: Option<usize>,
    /// Force the exact rational backend.
    pub exact: bool,
    /// Kink gamble offset overriding per-kink defaults.
    pub delta: Option<Num>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            format: Format::Text,
            seed: 0,
            oracle: None,
            exact: false,
            delta: None,
        }
    }
}

/// Runs `command` on a parsed scenario and returns the report.
///
/// The scenario's kind must match the command; backend selection follows
/// the module-level rules.
pub fn run_command(doc: &ScenarioDocument, command: &str, opts: &RunOptions) -> Result<Report> {
    if doc.command_name() != command {
        return Err(Error::invalid(
            "kind",
            format!(
                "scenario is for `{}`, not `{}`",
                doc.command_name(),
                command
            ),
        ));
    }
    let exact =
        opts.exact || doc.has_exact_literals() || matches!(doc, ScenarioDocument::Verify { .. });
    if exact {
        run_typed::<BigRational>(doc, opts)
    } else {
        run_typed::<f64>(doc, opts)
    }
}

fn scalars<T: Scalar>(nums: &[Num]) -> Vec<T> {
    nums.iter().map(Num::to_scalar).collect()
}

fn to_returns<T: Scalar>(nums: &[Num]) -> Result<ReturnVector<T>> {
    ReturnVector::new(scalars(nums))
}

fn to_probs<T: Scalar>(nums: &[Num]) -> Result<ProbabilityVector<T>> {
    ProbabilityVector::new(scalars(nums))
}

fn run_typed<T: Scalar>(doc: &ScenarioDocument, opts: &RunOptions) -> Result<Report> {
    let exact = T::EXACT;
    match doc {
        ScenarioDocument::PoraEval {
            label,
            returns,
            probs,
            profile,
        } => {
            let pora = Pora::new(to_returns::<T>(returns)?, to_probs(probs)?)?;
            let profile = LinearUtilityProfile::new(scalars::<T>(profile))?;
            let ev = expected_value(&pora);
            let eu = expected_utility(&profile, &pora)?;
            let telescoped = expected_utility_telescoped(&profile, &pora)?;
            let ce = certainty_equivalent(&profile, &pora)?;
            let premium = risk_premium(&profile, &pora)?;
            let attitude = classify_risk_attitude(&profile, &pora)?;
            Ok(Report::new("eval", exact, None, label)
                .section(
                    Section::new("portfolio")
                        .nums("returns", pora.returns().entries())
                        .nums("probs", pora.probs().entries())
                        .nums("profile", profile.slopes()),
                )
                .section(
                    Section::new("valuation")
                        .num("expected_value", &ev)
                        .num("expected_utility", &eu)
                        .num("expected_utility_telescoped", &telescoped)
                        .num("certainty_equivalent", &ce)
                        .num("risk_premium", &premium)
                        .text("attitude", attitude.to_string()),
                ))
        }

        ScenarioDocument::Dominance {
            label,
            a,
            b,
            samples,
            ..
        } => {
            let pora_a = Pora::new(to_returns::<T>(&a.returns)?, to_probs(&a.probs)?)?;
            let pora_b = Pora::new(to_returns::<T>(&b.returns)?, to_probs(&b.probs)?)?;
            let forward = first_order_dominates(&pora_a, &pora_b);
            let reverse = first_order_dominates(&pora_b, &pora_a);
            let mut report = Report::new("dominance", exact, Some(opts.seed), label)
                .section(verdict_section("forward", &forward))
                .section(verdict_section("reverse", &reverse));

            let shared_support = pora_a.returns().len() == pora_b.returns().len()
                && pora_a
                    .returns()
                    .entries()
                    .iter()
                    .zip(pora_b.returns().entries())
                    .all(|(x, y)| x.approx_eq(y))
                && pora_a.returns().is_strictly_increasing();
            if shared_support {
                let outcome = verify_dominance_equivalence(
                    pora_a.returns(),
                    pora_a.probs(),
                    pora_b.probs(),
                    samples.unwrap_or(200),
                    opts.seed,
                )?;
                let section = match outcome {
                    DominanceEquivalence::Dominates {
                        samples,
                        min_margin,
                    } => Section::new("equivalence")
                        .text(
                            "outcome",
                            "dominant portfolio strictly preferred by every sampled profile",
                        )
                        .count("samples", samples)
                        .num("min_margin", &min_margin),
                    DominanceEquivalence::NotDominates {
                        adversarial,
                        margin,
                    } => Section::new("equivalence")
                        .text(
                            "outcome",
                            "constructed profile strictly prefers the second portfolio",
                        )
                        .num("margin", &margin)
                        .nums("adversarial_slopes", adversarial.slopes()),
                    DominanceEquivalence::EqualDistributions => Section::new("equivalence").text(
                        "outcome",
                        "distributions coincide; every profile is indifferent",
                    ),
                };
                report = report.section(section);
            }
            Ok(report)
        }

        ScenarioDocument::Spread {
            label,
            returns,
            p,
            q,
            samples,
            budget,
        } => {
            let x = to_returns::<T>(returns)?;
            let p = to_probs(p)?;
            let q = to_probs(q)?;
            let mean_p = expected_value(&Pora::new(x.clone(), p.clone())?);
            let mean_q = expected_value(&Pora::new(x.clone(), q.clone())?);
            let witness = is_mean_preserving_spread(&x, &p, &q)?;

            let mut detection = Section::new("detection").flag("is_spread", witness.is_some());
            if let Some(w) = &witness {
                detection = detection.text("witness", format!("i={}, j={}, k={}", w.i, w.j, w.k));
            }
            let mut report = Report::new("spread", exact, Some(opts.seed), label)
                .section(
                    Section::new("means")
                        .num("mean_p", &mean_p)
                        .num("mean_q", &mean_q),
                )
                .section(detection);

            if witness.is_some() {
                let aversion =
                    verify_spread_aversion(&x, &p, &q, samples.unwrap_or(200), opts.seed)?;
                let mut section = Section::new("aversion")
                    .text(
                        "outcome",
                        "every sampled increasing-concave profile strictly prefers the unspread portfolio",
                    )
                    .count("samples", aversion.samples);
                if let Some(m) = &aversion.min_margin {
                    section = section.num("min_margin", m);
                }
                report = report.section(section);
            } else if x.len() == 3
                && mean_p.approx_eq(&mean_q)
                && !p.entries()[1].approx_eq(&q.entries()[1])
            {
                match verify_spread_converse(&x, &p, &q, budget.unwrap_or(1000), opts.seed)? {
                    SpreadConverse::Counterexample { profile, margin } => {
                        report = report.section(
                            Section::new("converse")
                                .text(
                                    "outcome",
                                    "found an increasing-concave profile that does not prefer the first portfolio",
                                )
                                .num("margin", &margin)
                                .nums("profile_slopes", profile.slopes()),
                        );
                    }
                    SpreadConverse::SpreadHolds(_) => {
                        return Err(Error::Assertion(
                            "converse ran on a pair the detector called a spread".into(),
                        ))
                    }
                }
            }
            Ok(report)
        }

        ScenarioDocument::Insurance {
            label,
            wealth,
            loss,
            loss_prob,
            u1,
            u2,
            u3,
            invest_return,
            diversification,
        } => {
            let s = InsuranceScenario::new(
                wealth.to_scalar::<T>(),
                loss.to_scalar(),
                loss_prob.to_scalar(),
                u1.to_scalar(),
                u2.to_scalar(),
                u3.as_ref().map(Num::to_scalar),
                invest_return.as_ref().map(Num::to_scalar),
            )?;
            let mut scenario_section = Section::new("scenario")
                .num("wealth", s.wealth())
                .num("loss", s.loss())
                .num("loss_prob", s.loss_prob())
                .num("u1", s.u1())
                .num("u2", s.u2());
            if let Some(mid) = s.u3() {
                scenario_section = scenario_section.num("u3", mid);
            }
            if let Some(r) = s.invest_return() {
                scenario_section = scenario_section.num("invest_return", r);
            }

            let no_ins_eu = no_insurance_expected_utility(&s);
            let no_ins_ce = no_insurance_certainty_equivalent(&s);
            let fair = actuarially_fair_premium(&s);
            let mut baseline = Section::new("baseline")
                .num("no_insurance_expected_utility", &no_ins_eu)
                .num("no_insurance_certainty_equivalent", &no_ins_ce)
                .num("fair_premium", &fair);
            if s.invest_return().is_some() {
                let (low, high) = seller_premium_band(&s)?;
                baseline = baseline.num("band_low", &low).num("band_high", &high);
            }

            let mut report = Report::new("insure", exact, None, label)
                .section(scenario_section)
                .section(baseline);

            match optimal_contract_two_state(&s) {
                Ok(contract) => {
                    report = report.section(
                        Section::new("contract")
                            .num("premium", contract.premium())
                            .num("deductible", contract.deductible())
                            .num("expected_profit", contract.expected_profit()),
                    );
                }
                Err(Error::Degenerate(reason)) => {
                    report = report.section(
                        Section::new("contract").text("outcome", format!("degenerate: {reason}")),
                    );
                }
                Err(e) => return Err(e),
            }
            if s.u3().is_some() {
                let indexed = optimal_contract_three_state(&s)?;
                report = report.section(
                    Section::new("indexed_contract")
                        .num("premium", indexed.premium())
                        .num("deductible", indexed.deductible())
                        .num("expected_profit", indexed.expected_profit()),
                );
            }
            report = report.section(
                Section::new("profitability")
                    .flag("strictly_profitable", strict_profitability_holds(&s)?),
            );
            if let Some(resolution) = opts.oracle {
                let oracle = grid_oracle_optimal_contract(&s.to_f64(), resolution)?;
                report = report.section(
                    Section::new("oracle")
                        .count("resolution", resolution)
                        .num("premium", oracle.premium())
                        .num("deductible", oracle.deductible())
                        .num("expected_profit", oracle.expected_profit()),
                );
            }
            if let Some(spec) = diversification {
                let cmp = diversification_comparison(
                    &spec.investment.to_scalar::<T>(),
                    s.loss_prob(),
                    &spec.u1.to_scalar(),
                    &spec.u2.to_scalar(),
                    &spec.u3.to_scalar(),
                )?;
                report = report.section(
                    Section::new("diversification")
                        .num("single_opportunity", &cmp.single_opportunity)
                        .num("split_between_two", &cmp.split_between_two)
                        .flag(
                            "split_preferred",
                            cmp.split_between_two.band_gt(&cmp.single_opportunity),
                        ),
                );
            }
            Ok(report)
        }

        ScenarioDocument::AlmostLinear {
            label,
            wealth,
            loss_breakpoints,
            loss_slopes,
            loss_sides,
            gain_breakpoints,
            gain_slopes,
            gain_sides,
            evaluate_at,
        } => {
            let alu = AlmostLinearUtility::new(
                wealth.to_scalar::<T>(),
                scalars(loss_breakpoints),
                scalars(loss_slopes),
                loss_sides.iter().map(|&s| Side::from(s)).collect(),
                scalars(gain_breakpoints),
                scalars(gain_slopes),
                gain_sides.iter().map(|&s| Side::from(s)).collect(),
            )?;
            let mut report = Report::new("almost", exact, None, label).section(
                Section::new("shape")
                    .num("wealth", alu.wealth())
                    .count("loss_segments", alu.loss_segments())
                    .count("gain_segments", alu.gain_segments()),
            );

            let mut events = Section::new("events");
            for (idx, event) in alu.derive_state_profile().iter().enumerate() {
                events = events.text(
                    format!("event_{}", idx + 1),
                    render_event(&event.interval, &event.slope),
                );
            }
            report = report.section(events);

            if let Some(points) = evaluate_at {
                let mut section = Section::new("evaluations");
                for point in points {
                    let value = alu.evaluate(&point.to_scalar::<T>())?;
                    section = section.num(format!("u({})", point.raw()), &value);
                }
                report = report.section(section);
            }

            for index in alu.interior_breakpoint_indices() {
                let delta: T = match &opts.delta {
                    Some(num) => num.to_scalar(),
                    None => alu.default_delta(index)?,
                };
                let kink = alu.analyze_breakpoint(index, &delta)?;
                report = report.section(
                    Section::new(format!("kink {index}"))
                        .num("breakpoint", &kink.breakpoint)
                        .text(
                            "side",
                            match kink.side {
                                Side::Left => "left",
                                Side::Right => "right",
                            },
                        )
                        .num("delta", &delta)
                        .num("sure_value", &kink.sure_value)
                        .num("gamble_expected_utility", &kink.gamble_expected_utility)
                        .num("certainty_equivalent", &kink.certainty_equivalent)
                        .text("attitude", kink.attitude.to_string()),
                );
            }
            Ok(report)
        }

        ScenarioDocument::Ambiguity {
            label,
            candidate_returns,
            probs,
            u_minus,
            u_plus,
        } => {
            if u_minus.len() != u_plus.len() {
                return Err(Error::DimensionMismatch {
                    left: "u_minus",
                    left_len: u_minus.len(),
                    right: "u_plus",
                    right_len: u_plus.len(),
                });
            }
            let gp = GeneralizedPora::new(
                candidate_returns
                    .iter()
                    .map(|set| scalars::<T>(set))
                    .collect(),
                to_probs(probs)?,
            )?;
            let sp = SignDependentProfile::new(
                scalars::<T>(u_minus)
                    .into_iter()
                    .zip(scalars::<T>(u_plus))
                    .collect(),
            )?;
            let worst = min_pora(&gp);
            let floor = min_expected_utility(&sp, &gp)?;
            Ok(Report::new("ambiguity", exact, None, label)
                .section(
                    Section::new("portfolio")
                        .count("states", gp.len())
                        .nums("probs", gp.probs().entries()),
                )
                .section(
                    Section::new("worst_case")
                        .nums("min_returns", worst.returns().entries())
                        .num("min_expected_utility", &floor),
                ))
        }

        ScenarioDocument::Verify {
            label,
            returns,
            denominator,
            samples,
            budget,
        } => {
            let x = to_returns::<T>(returns)?;
            let summary = run_verification_suite(
                &x,
                *denominator,
                samples.unwrap_or(100),
                budget.unwrap_or(1000),
                opts.seed,
            )?;
            let mut dominance = Section::new("dominance-equivalence")
                .count("dominant_pairs", summary.dominant_pairs)
                .count("samples_per_pair", summary.dominance_samples_per_pair);
            if let Some(m) = &summary.dominance_min_margin {
                dominance = dominance.num("min_margin", m);
            }
            dominance = dominance.count("adversarial_pairs", summary.adversarial_pairs);
            if let Some(m) = &summary.adversarial_worst_margin {
                dominance = dominance.num("adversarial_worst_margin", m);
            }
            let mut aversion =
                Section::new("spread-aversion").count("spread_pairs", summary.spread_pairs);
            if let Some(m) = &summary.spread_min_margin {
                aversion = aversion.num("min_margin", m);
            }
            let mut converse =
                Section::new("spread-converse").count("converse_pairs", summary.converse_pairs);
            if let Some(m) = &summary.converse_worst_margin {
                converse = converse.num("worst_margin", m);
            }
            Ok(Report::new("verify", exact, Some(opts.seed), label)
                .section(
                    Section::new("grid")
                        .count("distributions", summary.grid_size)
                        .count("ordered_pairs", summary.ordered_pairs),
                )
                .section(dominance.text("status", "pass"))
                .section(aversion.text("status", "pass"))
                .section(converse.text("status", "pass")))
        }
    }
}

fn verdict_section<T: Scalar>(title: &str, verdict: &DominanceVerdict<T>) -> Section {
    let mut section = Section::new(title).flag("dominates", verdict.dominates());
    if let Some(alpha) = verdict.strict_at() {
        section = section.num("strict_at", alpha);
    }
    section
}

fn render_event<T: Scalar>(interval: &EventInterval<T>, slope: &T) -> String {
    let open = if interval.lower_inclusive { "[" } else { "(" };
    match &interval.upper {
        Some(upper) => {
            let close = if interval.upper_inclusive { "]" } else { ")" };
            format!("{open}{}, {}{close} slope {}", interval.lower, upper, slope)
        }
        None => format!("{open}{}, +inf) slope {}", interval.lower, slope),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(text: &str) -> ScenarioDocument {
        parse_scenario(text.as_bytes()).unwrap()
    }

    fn entry_value<'a>(report: &'a Report, section: &str, key: &str) -> &'a Value {
        &report
            .sections
            .iter()
            .find(|s| s.title == section)
            .unwrap_or_else(|| panic!("missing section {section}"))
            .entries
            .iter()
            .find(|e| e.key == key)
            .unwrap_or_else(|| panic!("missing entry {key}"))
            .value
    }

    fn decimal(report: &Report, section: &str, key: &str) -> f64 {
        match entry_value(report, section, key) {
            Value::Number(n) => n.decimal,
            other => panic!("{key} is not a number: {other:?}"),
        }
    }

    #[test]
    fn mismatched_kind_is_a_validation_error() {
        let doc = doc(
            r#"{"kind": "pora_eval", "label": "x", "returns": [1, 2], "probs": [0.5, 0.5], "profile": [1, 1]}"#,
        );
        let err = run_command(&doc, "insure", &RunOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Invalid { .. }));
    }

    #[test]
    fn eval_report_carries_the_valuation() {
        let doc = doc(
            r#"{"kind": "pora_eval", "label": "mirrored", "returns": [-1, 1],
                "probs": [0.5, 0.5], "profile": [2, 1]}"#,
        );
        let report = run_command(&doc, "eval", &RunOptions::default()).unwrap();
        assert_eq!(report.backend, "float");
        assert_eq!(report.seed, None);
        assert!((decimal(&report, "valuation", "expected_value") - 0.0).abs() < 1e-12);
        assert!((decimal(&report, "valuation", "certainty_equivalent") - -1.0 / 3.0).abs() < 1e-12);
        match entry_value(&report, "valuation", "attitude") {
            Value::Text(t) => assert_eq!(t, "Averse"),
            other => panic!("attitude not text: {other:?}"),
        }
    }

    #[test]
    fn fraction_literals_switch_to_the_exact_backend() {
        let doc = doc(
            r#"{"kind": "pora_eval", "label": "exact", "returns": [1, 2],
                "probs": ["1/3", "2/3"], "profile": [2, 1]}"#,
        );
        let report = run_command(&doc, "eval", &RunOptions::default()).unwrap();
        assert_eq!(report.backend, "exact");
        match entry_value(&report, "valuation", "certainty_equivalent") {
            Value::Number(n) => assert_eq!(n.rational.as_deref(), Some("3/2")),
            other => panic!("not a number: {other:?}"),
        }
    }

    #[test]
    fn dominance_report_includes_the_equivalence_check() {
        let doc = doc(r#"{"kind": "dominance", "label": "ordered pair",
                "a": {"returns": [0, 1, 2], "probs": [0.2, 0.3, 0.5]},
                "b": {"returns": [0, 1, 2], "probs": [0.3, 0.3, 0.4]},
                "samples": 50}"#);
        let report = run_command(&doc, "dominance", &RunOptions::default()).unwrap();
        assert_eq!(report.seed, Some(0));
        match entry_value(&report, "forward", "dominates") {
            Value::Bool(b) => assert!(b),
            other => panic!("not a bool: {other:?}"),
        }
        match entry_value(&report, "equivalence", "samples") {
            Value::Count(c) => assert_eq!(*c, 50),
            other => panic!("not a count: {other:?}"),
        }
        assert!(decimal(&report, "equivalence", "min_margin") > 0.0);
    }

    #[test]
    fn dominance_on_disjoint_supports_skips_the_equivalence_section() {
        let doc = doc(r#"{"kind": "dominance", "label": "disjoint",
                "a": {"returns": [10, 20], "probs": [0.5, 0.5]},
                "b": {"returns": [0, 1, 2], "probs": [0.2, 0.3, 0.5]}}"#);
        let report = run_command(&doc, "dominance", &RunOptions::default()).unwrap();
        assert!(report.sections.iter().all(|s| s.title != "equivalence"));
    }

    #[test]
    fn spread_report_runs_the_aversion_check() {
        let doc = doc(
            r#"{"kind": "spread", "label": "reference spread", "returns": [0, 1, 2],
                "p": [0.2, 0.6, 0.2], "q": [0.3, 0.4, 0.3], "samples": 25}"#,
        );
        let report = run_command(&doc, "spread", &RunOptions::default()).unwrap();
        match entry_value(&report, "detection", "witness") {
            Value::Text(t) => assert_eq!(t, "i=1, j=2, k=3"),
            other => panic!("not text: {other:?}"),
        }
        assert!(decimal(&report, "aversion", "min_margin") > 0.0);
    }

    #[test]
    fn spread_report_falls_back_to_the_converse_search() {
        let doc = doc(
            r#"{"kind": "spread", "label": "reverse direction", "returns": [0, 1, 2],
                "p": [0.3, 0.4, 0.3], "q": [0.2, 0.6, 0.2], "budget": 200}"#,
        );
        let report = run_command(&doc, "spread", &RunOptions::default()).unwrap();
        match entry_value(&report, "detection", "is_spread") {
            Value::Bool(b) => assert!(!b),
            other => panic!("not a bool: {other:?}"),
        }
        assert!(decimal(&report, "converse", "margin") <= 0.0);
    }

    #[test]
    fn insure_report_covers_contracts_and_oracle() {
        let doc = doc(
            r#"{"kind": "insurance", "label": "household", "wealth": 250, "loss": 100,
                "loss_prob": 0.1, "u1": 1, "u2": 2, "invest_return": 0.25,
                "diversification": {"investment": 100, "u1": 1, "u2": 2, "u3": 3}}"#,
        );
        let opts = RunOptions {
            oracle: Some(400),
            ..RunOptions::default()
        };
        let report = run_command(&doc, "insure", &opts).unwrap();
        assert!((decimal(&report, "baseline", "fair_premium") - 10.0).abs() < 1e-12);
        assert!((decimal(&report, "baseline", "band_low") - 8.0).abs() < 1e-12);
        assert!((decimal(&report, "contract", "premium") - 200.0 / 11.0).abs() < 1e-12);
        assert_eq!(decimal(&report, "oracle", "deductible"), 0.0);
        let step = 2.0 * 10.0 * 2.0 / 400.0;
        assert!((decimal(&report, "oracle", "premium") - 200.0 / 11.0).abs() <= step + 1e-9);
        match entry_value(&report, "profitability", "strictly_profitable") {
            Value::Bool(b) => assert!(b),
            other => panic!("not a bool: {other:?}"),
        }
        match entry_value(&report, "diversification", "split_preferred") {
            Value::Bool(b) => assert!(b),
            other => panic!("not a bool: {other:?}"),
        }
    }

    #[test]
    fn degenerate_insurance_reports_instead_of_failing() {
        let doc = doc(
            r#"{"kind": "insurance", "label": "flat slopes", "wealth": 250, "loss": 100,
                "loss_prob": 0.1, "u1": 2, "u2": 2}"#,
        );
        let report = run_command(&doc, "insure", &RunOptions::default()).unwrap();
        match entry_value(&report, "contract", "outcome") {
            Value::Text(t) => assert!(t.starts_with("degenerate:"), "got {t}"),
            other => panic!("not text: {other:?}"),
        }
        match entry_value(&report, "profitability", "strictly_profitable") {
            Value::Bool(b) => assert!(!b),
            other => panic!("not a bool: {other:?}"),
        }
    }

    #[test]
    fn almost_report_analyzes_each_kink() {
        let doc = doc(
            r#"{"kind": "almost_linear", "label": "one gain kink", "wealth": 100,
                "loss_breakpoints": [-100], "loss_slopes": [3], "loss_sides": [],
                "gain_breakpoints": [10], "gain_slopes": [1, 2], "gain_sides": ["left"],
                "evaluate_at": [5, 10, 12]}"#,
        );
        let opts = RunOptions {
            delta: Some(Num::Float(1.0)),
            ..RunOptions::default()
        };
        let report = run_command(&doc, "almost", &opts).unwrap();
        assert_eq!(decimal(&report, "evaluations", "u(10)"), 10.0);
        assert_eq!(decimal(&report, "kink 1", "gamble_expected_utility"), 15.5);
        match entry_value(&report, "kink 1", "attitude") {
            Value::Text(t) => assert_eq!(t, "Loving"),
            other => panic!("not text: {other:?}"),
        }
        let events = report
            .sections
            .iter()
            .find(|s| s.title == "events")
            .unwrap();
        assert_eq!(events.entries.len(), 3);
    }

    #[test]
    fn ambiguity_report_shows_the_worst_case() {
        let doc = doc(r#"{"kind": "ambiguity", "label": "two candidates",
                "candidate_returns": [[-1, 5], [2, 9]], "probs": [0.3, 0.7],
                "u_minus": [2, 2], "u_plus": [1, 1]}"#);
        let report = run_command(&doc, "ambiguity", &RunOptions::default()).unwrap();
        assert!((decimal(&report, "worst_case", "min_expected_utility") - 0.8).abs() < 1e-12);
    }

    #[test]
    fn verify_always_runs_exactly() {
        let doc = doc(
            r#"{"kind": "verify", "label": "sixths", "returns": [0, 1, 2],
                "denominator": 6, "samples": 5, "budget": 150}"#,
        );
        let report = run_command(&doc, "verify", &RunOptions::default()).unwrap();
        assert_eq!(report.backend, "exact");
        match entry_value(&report, "grid", "ordered_pairs") {
            Value::Count(c) => assert_eq!(*c, 90),
            other => panic!("not a count: {other:?}"),
        }
        match entry_value(&report, "dominance-equivalence", "status") {
            Value::Text(t) => assert_eq!(t, "pass"),
            other => panic!("not text: {other:?}"),
        }
        match entry_value(&report, "dominance-equivalence", "adversarial_worst_margin") {
            Value::Number(n) => {
                assert!(n.decimal <= -1.5);
                assert!(n.rational.is_some(), "exact backend reports the fraction");
            }
            other => panic!("not a number: {other:?}"),
        }
    }
}
