//! Evaluation of a statement on one analyzed graph.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::statement::{Conclusion, DegreeHypothesis, Direction, LambdaDomain, ResidualMetric, Statement};
use crate::analysis::CycleAnalysis;
use crate::cycles::{CycleSeq, ResidualProfile};
use crate::extended::ExtendedNat;
use crate::invariants::InvariantBundle;

/// How "let C be a longest cycle" is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Quantifier {
    /// The claim must hold for every longest cycle.
    #[default]
    ForallLongest,
    /// The claim must hold for at least one longest cycle.
    ExistsLongest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// The hypothesis fails.
    Vacuous,
    /// A reverse degree-sum conclusion with `σ_λ = +∞`.
    VacuousBySigma,
    Confirmed,
    Violated,
}

impl Verdict {
    pub fn is_vacuous(self) -> bool {
        matches!(self, Verdict::Vacuous | Verdict::VacuousBySigma)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Vacuous => "VACUOUS",
            Verdict::VacuousBySigma => "VACUOUS_BY_SIGMA",
            Verdict::Confirmed => "CONFIRMED",
            Verdict::Violated => "VIOLATED",
        })
    }
}

/// Slack of a degree inequality: exact rational, or infinite when a degree
/// sum over an empty family is involved. Serialized as `"p/q"`, `"p"` or `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slack {
    Finite(Ratio<i64>),
    Infinite,
}

impl Slack {
    pub fn is_nonnegative(self) -> bool {
        match self {
            Slack::Finite(r) => r >= Ratio::from_integer(0),
            Slack::Infinite => true,
        }
    }
}

impl fmt::Display for Slack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slack::Finite(r) => write!(f, "{r}"),
            Slack::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Slack {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slack {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        if text == "inf" {
            return Ok(Slack::Infinite);
        }
        text.parse::<Ratio<i64>>()
            .map(Slack::Finite)
            .map_err(|e| serde::de::Error::custom(format!("bad slack {text:?}: {e}")))
    }
}

/// Slack in each part of a statement's hypothesis. Negative means the part fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisMargin {
    /// κ minus the required connectivity.
    pub connectivity: i64,
    /// Degree or degree-sum slack (forward statements).
    pub degree: Option<Slack>,
    /// Residual slack of the reported cycle (reverse statements).
    pub residual: Option<i64>,
}

impl HypothesisMargin {
    /// The smallest slack among the parts present; the binding inequality.
    pub fn binding(&self) -> Slack {
        let mut parts = vec![Slack::Finite(Ratio::from_integer(self.connectivity))];
        parts.extend(self.degree);
        parts.extend(self.residual.map(|r| Slack::Finite(Ratio::from_integer(r))));
        parts.into_iter().min().expect("connectivity is always present")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub statement: String,
    pub lambda: usize,
    pub verdict: Verdict,
    pub mode: Quantifier,
    pub hypothesis_margin: HypothesisMargin,
    /// Slack in the conclusion; `None` when the statement is vacuous.
    pub conclusion_margin: Option<i64>,
    /// The longest cycle that decided the verdict: the offending one for a
    /// violation, otherwise the extremal one.
    pub witness: Option<CycleSeq>,
}

impl CheckResult {
    /// Confirmed with zero slack in the conclusion.
    pub fn is_tight(&self) -> bool {
        self.verdict == Verdict::Confirmed && self.conclusion_margin == Some(0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("λ = {lambda} is outside the domain of {statement} (1 ≤ λ ≤ δ = {delta})")]
    LambdaOutOfRange { statement: String, lambda: usize, delta: usize },
    #[error("{statement} is stated only for λ = {fixed}, not λ = {lambda}")]
    LambdaFixed { statement: String, lambda: usize, fixed: usize },
    #[error("the graph has no longest cycle to evaluate")]
    NoCycles,
}

/// The λ values a statement is evaluated at for a graph of minimum degree δ.
/// With `beyond_delta = Some(n)` parametric statements also get δ < λ ≤ n.
pub fn lambdas_for(statement: &Statement, delta: usize, beyond_delta: Option<usize>) -> Vec<usize> {
    match statement.lambda_domain {
        LambdaDomain::Fixed(l) => vec![l],
        LambdaDomain::UpToMinDegree => {
            let top = beyond_delta.map_or(delta, |n| n.max(delta));
            (1..=top).collect()
        }
    }
}

/// Checks `statement` at `lambda` on an analyzed graph. Parametric
/// statements require `1 ≤ λ ≤ δ`; classical ones only accept their own λ.
pub fn evaluate(
    bundle: &InvariantBundle,
    analysis: &CycleAnalysis,
    statement: &Statement,
    lambda: usize,
    mode: Quantifier,
) -> Result<CheckResult, EvalError> {
    check_domain(bundle, statement, lambda, false)?;
    evaluate_unchecked(bundle, analysis, statement, lambda, mode)
}

/// As [`evaluate`] but also accepts λ > δ for parametric statements.
pub fn evaluate_beyond_delta(
    bundle: &InvariantBundle,
    analysis: &CycleAnalysis,
    statement: &Statement,
    lambda: usize,
    mode: Quantifier,
) -> Result<CheckResult, EvalError> {
    check_domain(bundle, statement, lambda, true)?;
    evaluate_unchecked(bundle, analysis, statement, lambda, mode)
}

fn check_domain(bundle: &InvariantBundle, s: &Statement, lambda: usize, beyond: bool) -> Result<(), EvalError> {
    match s.lambda_domain {
        LambdaDomain::Fixed(fixed) if fixed != lambda => Err(EvalError::LambdaFixed {
            statement: s.id.to_string(),
            lambda,
            fixed,
        }),
        LambdaDomain::Fixed(_) => Ok(()),
        LambdaDomain::UpToMinDegree => {
            if lambda == 0 || (!beyond && lambda > bundle.min_degree) {
                Err(EvalError::LambdaOutOfRange {
                    statement: s.id.to_string(),
                    lambda,
                    delta: bundle.min_degree,
                })
            } else {
                Ok(())
            }
        }
    }
}

fn residual_of(p: &ResidualProfile, metric: ResidualMetric) -> i64 {
    match metric {
        ResidualMetric::PBar => p.p_bar as i64,
        ResidualMetric::CBar => p.c_bar as i64,
    }
}

fn degree_slack(d: DegreeHypothesis, b: &InvariantBundle, lambda: i64) -> Option<Slack> {
    let n = b.n as i64;
    let delta = b.min_degree as i64;
    let sum_slack = |sigma: ExtendedNat, rhs: i64| match sigma {
        ExtendedNat::Infinity => Slack::Infinite,
        ExtendedNat::Finite(v) => Slack::Finite(Ratio::from_integer(v as i64 - rhs)),
    };
    match d {
        DegreeHypothesis::None => None,
        DegreeHypothesis::MinDegree => {
            let rhs = Ratio::new(n + 2, lambda + 1) + Ratio::from_integer(lambda - 2);
            Some(Slack::Finite(Ratio::from_integer(delta) - rhs))
        }
        DegreeHypothesis::MinDegreeFixed { offset, divisor } => {
            Some(Slack::Finite(Ratio::from_integer(delta) - Ratio::new(n + offset, divisor)))
        }
        DegreeHypothesis::DegreeSum => {
            Some(sum_slack(b.sigma(lambda as usize + 1), n + lambda * (lambda - 1)))
        }
        DegreeHypothesis::DegreeSumFixed { k, offset } => Some(sum_slack(b.sigma(k), n + offset)),
    }
}

/// Upper bound on the residual for forward conclusions.
fn residual_bound(c: Conclusion, lambda: i64, delta: i64) -> i64 {
    match c {
        Conclusion::ResidualAtMostLambdaMinus1 => lambda - 1,
        Conclusion::ResidualAtMostMin => (lambda - 1).min(delta - lambda),
        Conclusion::ResidualAtMost(k) => k,
        _ => unreachable!("not a residual conclusion"),
    }
}

/// Lower bound on the circumference for reverse conclusions; `None` when
/// it involves an infinite degree sum.
fn circumference_bound(c: Conclusion, b: &InvariantBundle, lambda: i64) -> Option<i64> {
    let delta = b.min_degree as i64;
    let sigma = |k: usize| b.sigma(k).finite().map(|v| v as i64);
    match c {
        Conclusion::CircumferenceDelta => Some(lambda * (delta - lambda + 2)),
        Conclusion::CircumferenceSigma => sigma(lambda as usize).map(|s| s - lambda * (lambda - 2)),
        Conclusion::CircumferenceDeltaFixed { coeff, offset } => Some(coeff * delta + offset),
        Conclusion::CircumferenceSigmaFixed { k, offset } => sigma(k).map(|s| s + offset),
        _ => unreachable!("not a circumference conclusion"),
    }
}

/// First index attaining the minimum (or maximum) of `key`.
fn extremal(values: &[i64], want_max: bool) -> usize {
    let mut best = 0;
    for (i, &v) in values.iter().enumerate() {
        if (want_max && v > values[best]) || (!want_max && v < values[best]) {
            best = i;
        }
    }
    best
}

fn evaluate_unchecked(
    b: &InvariantBundle,
    a: &CycleAnalysis,
    s: &Statement,
    lambda: usize,
    mode: Quantifier,
) -> Result<CheckResult, EvalError> {
    if a.longest_cycles.is_empty() {
        return Err(EvalError::NoCycles);
    }
    let l = lambda as i64;
    let delta = b.min_degree as i64;
    let residuals: Vec<i64> = a.profiles.iter().map(|p| residual_of(p, s.residual_metric)).collect();
    let mut result = CheckResult {
        statement: s.id.to_string(),
        lambda,
        verdict: Verdict::Vacuous,
        mode,
        hypothesis_margin: HypothesisMargin {
            connectivity: b.connectivity as i64 - s.connectivity.required(l, delta),
            degree: degree_slack(s.degree, b, l),
            residual: None,
        },
        conclusion_margin: None,
        witness: None,
    };
    let graph_level_holds =
        result.hypothesis_margin.connectivity >= 0 && result.hypothesis_margin.degree.is_none_or(Slack::is_nonnegative);

    match s.direction {
        Direction::Forward => {
            if !graph_level_holds {
                return Ok(result);
            }
            let bound = residual_bound(s.conclusion, l, delta);
            let margins: Vec<i64> = residuals.iter().map(|r| bound - r).collect();
            // Every cycle must comply: report the worst. Some cycle must: report the best.
            let pick = extremal(&margins, mode == Quantifier::ExistsLongest);
            result.conclusion_margin = Some(margins[pick]);
            result.witness = Some(a.longest_cycles[pick].clone());
            result.verdict = if margins[pick] >= 0 {
                Verdict::Confirmed
            } else {
                Verdict::Violated
            };
        }
        Direction::Reverse => {
            let required = s
                .residual
                .expect("reverse statements carry a residual hypothesis")
                .required(l, delta);
            let slack: Vec<i64> = residuals.iter().map(|r| r - required).collect();
            // For every cycle: one cycle meeting the hypothesis suffices to
            // trigger the claim. For some cycle: all of them must meet it.
            let pick = extremal(&slack, mode == Quantifier::ForallLongest);
            result.hypothesis_margin.residual = Some(slack[pick]);
            if !graph_level_holds || slack[pick] < 0 {
                return Ok(result);
            }
            result.witness = Some(a.longest_cycles[pick].clone());
            match circumference_bound(s.conclusion, b, l) {
                None => result.verdict = Verdict::VacuousBySigma,
                Some(bound) => {
                    let margin = a.circumference as i64 - bound;
                    result.conclusion_margin = Some(margin);
                    result.verdict = if margin >= 0 {
                        Verdict::Confirmed
                    } else {
                        Verdict::Violated
                    };
                }
            }
        }
    }
    Ok(result)
}
