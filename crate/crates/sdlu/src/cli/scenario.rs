//! Scenario documents: the JSON input format shared by every subcommand.
//!
//! Numbers appear either as JSON numbers (floats) or as strings holding
//! integers or fractions like `"200/11"`. A document containing any
//! fraction literal is routed to exact rational arithmetic automatically.

use std::io::Read;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::almost_linear::Side;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A numeric literal as written in the scenario: float or rational string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Float(f64),
    Ratio(String),
}

impl Num {
    pub fn validate(&self, field: &'static str) -> Result<()> {
        match self {
            Num::Float(v) => {
                if !v.is_finite() {
                    return Err(Error::invalid(field, "must be finite"));
                }
            }
            Num::Ratio(s) => {
                s.parse::<BigRational>().map_err(|e| {
                    Error::invalid(field, format!("cannot parse {s:?} as a rational: {e}"))
                })?;
            }
        }
        Ok(())
    }

    pub fn to_scalar<T: Scalar>(&self) -> T {
        match self {
            Num::Float(v) => T::from_f64_lit(*v),
            Num::Ratio(s) => {
                let r: BigRational = s.parse().expect("validated before conversion");
                T::from_big_rational(&r)
            }
        }
    }

    pub fn is_exact_literal(&self) -> bool {
        matches!(self, Num::Ratio(_))
    }

    /// The literal as the user wrote it, for labeling report entries.
    pub fn raw(&self) -> String {
        match self {
            Num::Float(v) => format!("{v}"),
            Num::Ratio(s) => s.clone(),
        }
    }

    /// Parses a command-line number: fraction form when it contains `/`,
    /// decimal otherwise.
    pub fn parse_cli(text: &str, field: &'static str) -> Result<Num> {
        let num = if text.contains('/') {
            Num::Ratio(text.to_string())
        } else {
            Num::Float(text.parse::<f64>().map_err(|e| {
                Error::invalid(field, format!("cannot parse {text:?} as a number: {e}"))
            })?)
        };
        num.validate(field)?;
        Ok(num)
    }
}

/// Breakpoint side tag as written in scenarios.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideSpec {
    Left,
    Right,
}

impl From<SideSpec> for Side {
    fn from(s: SideSpec) -> Side {
        match s {
            SideSpec::Left => Side::Left,
            SideSpec::Right => Side::Right,
        }
    }
}

/// One portfolio: returns with their probabilities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PoraSpec {
    pub returns: Vec<Num>,
    pub probs: Vec<Num>,
}

/// Side bet on splitting an underwriting opportunity across two independent
/// risks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiversificationSpec {
    pub investment: Num,
    pub u1: Num,
    pub u2: Num,
    pub u3: Num,
}

/// A parsed scenario file, tagged by the command it feeds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ScenarioDocument {
    PoraEval {
        label: String,
        returns: Vec<Num>,
        probs: Vec<Num>,
        profile: Vec<Num>,
    },
    Dominance {
        label: String,
        a: PoraSpec,
        b: PoraSpec,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        samples: Option<usize>,
    },
    Spread {
        label: String,
        returns: Vec<Num>,
        p: Vec<Num>,
        q: Vec<Num>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        samples: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        budget: Option<usize>,
    },
    Insurance {
        label: String,
        wealth: Num,
        loss: Num,
        loss_prob: Num,
        u1: Num,
        u2: Num,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        u3: Option<Num>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        invest_return: Option<Num>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        diversification: Option<DiversificationSpec>,
    },
    AlmostLinear {
        label: String,
        wealth: Num,
        loss_breakpoints: Vec<Num>,
        loss_slopes: Vec<Num>,
        loss_sides: Vec<SideSpec>,
        gain_breakpoints: Vec<Num>,
        gain_slopes: Vec<Num>,
        gain_sides: Vec<SideSpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        evaluate_at: Option<Vec<Num>>,
    },
    Ambiguity {
        label: String,
        candidate_returns: Vec<Vec<Num>>,
        probs: Vec<Num>,
        u_minus: Vec<Num>,
        u_plus: Vec<Num>,
    },
    Verify {
        label: String,
        returns: Vec<Num>,
        denominator: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        samples: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        budget: Option<usize>,
    },
}

impl ScenarioDocument {
    /// The subcommand this document feeds.
    pub fn command_name(&self) -> &'static str {
        match self {
            ScenarioDocument::PoraEval { .. } => "eval",
            ScenarioDocument::Dominance { .. } => "dominance",
            ScenarioDocument::Spread { .. } => "spread",
            ScenarioDocument::Insurance { .. } => "insure",
            ScenarioDocument::AlmostLinear { .. } => "almost",
            ScenarioDocument::Ambiguity { .. } => "ambiguity",
            ScenarioDocument::Verify { .. } => "verify",
        }
    }

    pub fn label(&self) -> &str {
        match self {
            ScenarioDocument::PoraEval { label, .. }
            | ScenarioDocument::Dominance { label, .. }
            | ScenarioDocument::Spread { label, .. }
            | ScenarioDocument::Insurance { label, .. }
            | ScenarioDocument::AlmostLinear { label, .. }
            | ScenarioDocument::Ambiguity { label, .. }
            | ScenarioDocument::Verify { label, .. } => label,
        }
    }

    fn for_each_num(&self, f: &mut dyn FnMut(&'static str, &Num) -> Result<()>) -> Result<()> {
        let all = |field: &'static str,
                   nums: &[Num],
                   f: &mut dyn FnMut(&'static str, &Num) -> Result<()>| {
            nums.iter().try_for_each(|n| f(field, n))
        };
        match self {
            ScenarioDocument::PoraEval {
                returns,
                probs,
                profile,
                ..
            } => {
                all("returns", returns, f)?;
                all("probs", probs, f)?;
                all("profile", profile, f)
            }
            ScenarioDocument::Dominance { a, b, .. } => {
                all("a.returns", &a.returns, f)?;
                all("a.probs", &a.probs, f)?;
                all("b.returns", &b.returns, f)?;
                all("b.probs", &b.probs, f)
            }
            ScenarioDocument::Spread { returns, p, q, .. } => {
                all("returns", returns, f)?;
                all("p", p, f)?;
                all("q", q, f)
            }
            ScenarioDocument::Insurance {
                wealth,
                loss,
                loss_prob,
                u1,
                u2,
                u3,
                invest_return,
                diversification,
                ..
            } => {
                f("wealth", wealth)?;
                f("loss", loss)?;
                f("loss_prob", loss_prob)?;
                f("u1", u1)?;
                f("u2", u2)?;
                if let Some(n) = u3 {
                    f("u3", n)?;
                }
                if let Some(n) = invest_return {
                    f("invest_return", n)?;
                }
                if let Some(d) = diversification {
                    f("diversification.investment", &d.investment)?;
                    f("diversification.u1", &d.u1)?;
                    f("diversification.u2", &d.u2)?;
                    f("diversification.u3", &d.u3)?;
                }
                Ok(())
            }
            ScenarioDocument::AlmostLinear {
                wealth,
                loss_breakpoints,
                loss_slopes,
                gain_breakpoints,
                gain_slopes,
                evaluate_at,
                ..
            } => {
                f("wealth", wealth)?;
                all("loss_breakpoints", loss_breakpoints, f)?;
                all("loss_slopes", loss_slopes, f)?;
                all("gain_breakpoints", gain_breakpoints, f)?;
                all("gain_slopes", gain_slopes, f)?;
                if let Some(points) = evaluate_at {
                    all("evaluate_at", points, f)?;
                }
                Ok(())
            }
            ScenarioDocument::Ambiguity {
                candidate_returns,
                probs,
                u_minus,
                u_plus,
                ..
            } => {
                for set in candidate_returns {
                    all("candidate_returns", set, f)?;
                }
                all("probs", probs, f)?;
                all("u_minus", u_minus, f)?;
                all("u_plus", u_plus, f)
            }
            ScenarioDocument::Verify { returns, .. } => all("returns", returns, f),
        }
    }

    /// Whether any numeric field uses a fraction literal, which routes the
    /// run to exact arithmetic.
    pub fn has_exact_literals(&self) -> bool {
        let mut found = false;
        let _ = self.for_each_num(&mut |_, n| {
            found |= n.is_exact_literal();
            Ok(())
        });
        found
    }

    fn validate(&self) -> Result<()> {
        self.for_each_num(&mut |field, n| n.validate(field))
    }
}

/// Reads and validates a scenario document from JSON.
pub fn parse_scenario(reader: impl Read) -> Result<ScenarioDocument> {
    let doc: ScenarioDocument = serde_json::from_reader(reader)
        .map_err(|e| Error::invalid("input", format!("not a valid scenario: {e}")))?;
    doc.validate()?;
    Ok(doc)
}
