use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Provenance {
    Theorem,
    Conjecture,
    Classical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Proved,
    Open,
}

/// Whether the degree condition is on the minimum degree or on degree sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    Sigma,
    Delta,
}

/// Forward: degree condition ⇒ residual bound.
/// Reverse: residual lower bound ⇒ circumference bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Direction {
    Forward,
    Reverse,
}

/// Which residual order of a longest cycle `C` a statement talks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ResidualMetric {
    /// Longest path order in `G − C`.
    PBar,
    /// Longest cycle order in `G − C`.
    CBar,
}

impl ResidualMetric {
    pub fn symbol(self) -> &'static str {
        match self {
            ResidualMetric::PBar => "p̄",
            ResidualMetric::CBar => "c̄",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LambdaDomain {
    /// Every `1 ≤ λ ≤ δ`.
    UpToMinDegree,
    /// A single value.
    Fixed(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConnectivityReq {
    /// κ ≥ λ
    Lambda,
    /// κ ≥ min{λ, δ − λ + 1}
    MinWithDeltaPlus1,
    /// κ ≥ min{λ, δ − λ + 2}
    MinWithDeltaPlus2,
    /// κ ≥ k
    AtLeast(i64),
}

impl ConnectivityReq {
    pub fn required(self, lambda: i64, delta: i64) -> i64 {
        match self {
            ConnectivityReq::Lambda => lambda,
            ConnectivityReq::MinWithDeltaPlus1 => lambda.min(delta - lambda + 1),
            ConnectivityReq::MinWithDeltaPlus2 => lambda.min(delta - lambda + 2),
            ConnectivityReq::AtLeast(k) => k,
        }
    }
}

impl fmt::Display for ConnectivityReq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConnectivityReq::Lambda => f.write_str("κ ≥ λ"),
            ConnectivityReq::MinWithDeltaPlus1 => f.write_str("κ ≥ min{λ, δ−λ+1}"),
            ConnectivityReq::MinWithDeltaPlus2 => f.write_str("κ ≥ min{λ, δ−λ+2}"),
            ConnectivityReq::AtLeast(k) => write!(f, "κ ≥ {k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegreeHypothesis {
    None,
    /// δ ≥ (n+2)/(λ+1) + λ − 2
    MinDegree,
    /// σ_{λ+1} ≥ n + λ(λ−1)
    DegreeSum,
    /// δ ≥ (n + offset)/divisor
    MinDegreeFixed { offset: i64, divisor: i64 },
    /// σ_k ≥ n + offset
    DegreeSumFixed { k: usize, offset: i64 },
}

fn signed(offset: i64) -> String {
    match offset {
        0 => String::new(),
        o if o > 0 => format!("+{o}"),
        o => format!("−{}", -o),
    }
}

impl fmt::Display for DegreeHypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeHypothesis::None => f.write_str("none"),
            DegreeHypothesis::MinDegree => f.write_str("δ ≥ (n+2)/(λ+1)+λ−2"),
            DegreeHypothesis::DegreeSum => f.write_str("σ_{λ+1} ≥ n+λ(λ−1)"),
            DegreeHypothesis::MinDegreeFixed { offset: 0, divisor } => write!(f, "δ ≥ n/{divisor}"),
            DegreeHypothesis::MinDegreeFixed { offset, divisor } => {
                write!(f, "δ ≥ (n{})/{divisor}", signed(*offset))
            }
            DegreeHypothesis::DegreeSumFixed { k, offset } => write!(f, "σ_{k} ≥ n{}", signed(*offset)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ResidualHypothesis {
    /// r ≥ λ − 1
    LambdaMinus1,
    /// r ≥ min{λ − 1, δ − λ + 1}
    MinWithDeltaPlus1,
    /// r ≥ k
    AtLeast(i64),
}

impl ResidualHypothesis {
    pub fn required(self, lambda: i64, delta: i64) -> i64 {
        match self {
            ResidualHypothesis::LambdaMinus1 => lambda - 1,
            ResidualHypothesis::MinWithDeltaPlus1 => (lambda - 1).min(delta - lambda + 1),
            ResidualHypothesis::AtLeast(k) => k,
        }
    }

    pub fn describe(self, metric: ResidualMetric) -> String {
        let r = metric.symbol();
        match self {
            ResidualHypothesis::LambdaMinus1 => format!("{r} ≥ λ−1"),
            ResidualHypothesis::MinWithDeltaPlus1 => format!("{r} ≥ min{{λ−1, δ−λ+1}}"),
            ResidualHypothesis::AtLeast(k) => format!("{r} ≥ {k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conclusion {
    /// r ≤ λ − 1
    ResidualAtMostLambdaMinus1,
    /// r ≤ min{λ − 1, δ − λ}
    ResidualAtMostMin,
    /// r ≤ k
    ResidualAtMost(i64),
    /// c ≥ λ(δ − λ + 2)
    CircumferenceDelta,
    /// c ≥ σ_λ − λ(λ − 2)
    CircumferenceSigma,
    /// c ≥ coeff·δ + offset
    CircumferenceDeltaFixed { coeff: i64, offset: i64 },
    /// c ≥ σ_k + offset
    CircumferenceSigmaFixed { k: usize, offset: i64 },
}

impl Conclusion {
    pub fn bounds_residual(self) -> bool {
        matches!(
            self,
            Conclusion::ResidualAtMostLambdaMinus1 | Conclusion::ResidualAtMostMin | Conclusion::ResidualAtMost(_)
        )
    }

    pub fn describe(self, metric: ResidualMetric) -> String {
        let r = metric.symbol();
        match self {
            Conclusion::ResidualAtMostLambdaMinus1 => format!("{r} ≤ λ−1"),
            Conclusion::ResidualAtMostMin => format!("{r} ≤ min{{λ−1, δ−λ}}"),
            Conclusion::ResidualAtMost(k) => format!("{r} ≤ {k}"),
            Conclusion::CircumferenceDelta => "c ≥ λ(δ−λ+2)".to_string(),
            Conclusion::CircumferenceSigma => "c ≥ σ_λ−λ(λ−2)".to_string(),
            Conclusion::CircumferenceDeltaFixed { coeff, offset } => {
                let lead = if coeff == 1 { "δ".to_string() } else { format!("{coeff}δ") };
                format!("c ≥ {lead}{}", signed(offset))
            }
            Conclusion::CircumferenceSigmaFixed { k, offset } => format!("c ≥ σ_{k}{}", signed(offset)),
        }
    }
}

/// One claim about longest cycles, in machine-checkable form.
///
/// Every statement reads: for a longest cycle `C` of `G` and the given λ,
/// if the connectivity requirement, the degree hypothesis and (for reverse
/// statements) the residual hypothesis hold, then the conclusion holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Statement {
    pub id: &'static str,
    pub title: &'static str,
    pub attribution: &'static str,
    pub provenance: Provenance,
    pub status: Status,
    pub family: Family,
    pub direction: Direction,
    pub residual_metric: ResidualMetric,
    pub connectivity: ConnectivityReq,
    pub degree: DegreeHypothesis,
    pub residual: Option<ResidualHypothesis>,
    pub conclusion: Conclusion,
    pub lambda_domain: LambdaDomain,
}

impl Statement {
    pub fn hypothesis_text(&self) -> String {
        let mut parts = vec![self.connectivity.to_string()];
        if self.degree != DegreeHypothesis::None {
            parts.push(self.degree.to_string());
        }
        if let Some(r) = self.residual {
            parts.push(r.describe(self.residual_metric));
        }
        parts.join(", ")
    }

    pub fn conclusion_text(&self) -> String {
        self.conclusion.describe(self.residual_metric)
    }

    /// The whole statement on one line, e.g. `κ ≥ λ, δ ≥ (n+2)/(λ+1)+λ−2 ⇒ c̄ ≤ λ−1`.
    pub fn formula(&self) -> String {
        format!("{} ⇒ {}", self.hypothesis_text(), self.conclusion_text())
    }

    pub fn is_open(&self) -> bool {
        self.status == Status::Open
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.id, self.formula())
    }
}

/// Serializable view of a [`Statement`], with formulas rendered as text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatementRecord {
    pub id: String,
    pub title: String,
    pub attribution: String,
    pub provenance: Provenance,
    pub status: Status,
    pub family: Family,
    pub direction: Direction,
    pub residual_metric: ResidualMetric,
    pub lambda_domain: LambdaDomain,
    pub connectivity: String,
    pub degree_hypothesis: Option<String>,
    pub residual_hypothesis: Option<String>,
    pub conclusion: String,
    pub formula: String,
}

impl From<&Statement> for StatementRecord {
    fn from(s: &Statement) -> Self {
        StatementRecord {
            id: s.id.to_string(),
            title: s.title.to_string(),
            attribution: s.attribution.to_string(),
            provenance: s.provenance,
            status: s.status,
            family: s.family,
            direction: s.direction,
            residual_metric: s.residual_metric,
            lambda_domain: s.lambda_domain,
            connectivity: s.connectivity.to_string(),
            degree_hypothesis: (s.degree != DegreeHypothesis::None).then(|| s.degree.to_string()),
            residual_hypothesis: s.residual.map(|r| r.describe(s.residual_metric)),
            conclusion: s.conclusion_text(),
            formula: s.formula(),
        }
    }
}
