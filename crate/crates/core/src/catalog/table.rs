//! The statements under test.
//!
//! Classical results carry their own fixed λ and literal constants rather
//! than being instantiated from the parametric forms, so that they act as
//! independent cross-checks of the parametric encodings at λ = 1..4.

use super::statement::{
    ConnectivityReq as K, Conclusion as Con, DegreeHypothesis as Deg, Direction, Family, LambdaDomain,
    Provenance, ResidualHypothesis as Res, ResidualMetric, Statement, Status,
};

use Direction::{Forward, Reverse};
use Family::{Delta, Sigma};
use ResidualMetric::{CBar, PBar};

const fn forward(
    id: &'static str,
    title: &'static str,
    provenance: Provenance,
    family: Family,
    metric: ResidualMetric,
    connectivity: K,
    degree: Deg,
    conclusion: Con,
) -> Statement {
    Statement {
        id,
        title,
        attribution: "",
        provenance,
        status: match provenance {
            Provenance::Conjecture => Status::Open,
            _ => Status::Proved,
        },
        family,
        direction: Forward,
        residual_metric: metric,
        connectivity,
        degree,
        residual: None,
        conclusion,
        lambda_domain: LambdaDomain::UpToMinDegree,
    }
}

const fn reverse(
    id: &'static str,
    title: &'static str,
    provenance: Provenance,
    family: Family,
    metric: ResidualMetric,
    connectivity: K,
    residual: Res,
    conclusion: Con,
) -> Statement {
    let mut s = forward(id, title, provenance, family, metric, connectivity, Deg::None, conclusion);
    s.direction = Reverse;
    s.residual = Some(residual);
    s
}

const fn by(mut s: Statement, attribution: &'static str) -> Statement {
    s.attribution = attribution;
    s
}

const fn at(mut s: Statement, lambda: usize) -> Statement {
    s.lambda_domain = LambdaDomain::Fixed(lambda);
    s
}

const CONJ: Provenance = Provenance::Conjecture;
const THM: Provenance = Provenance::Theorem;
const CL: Provenance = Provenance::Classical;

const fn classical_min_degree(id: &'static str, who: &'static str, lambda: usize, offset: i64, divisor: i64) -> Statement {
    let s = forward(
        id,
        "minimum degree, path residue",
        CL,
        Delta,
        PBar,
        K::AtLeast(lambda as i64),
        Deg::MinDegreeFixed { offset, divisor },
        Con::ResidualAtMost(lambda as i64 - 1),
    );
    at(by(s, who), lambda)
}

const fn classical_degree_sum(id: &'static str, who: &'static str, lambda: usize, offset: i64) -> Statement {
    let s = forward(
        id,
        "degree sum, path residue",
        CL,
        Sigma,
        PBar,
        K::AtLeast(lambda as i64),
        Deg::DegreeSumFixed { k: lambda + 1, offset },
        Con::ResidualAtMost(lambda as i64 - 1),
    );
    at(by(s, who), lambda)
}

const fn classical_reverse_delta(id: &'static str, who: &'static str, lambda: usize, coeff: i64, offset: i64) -> Statement {
    let s = reverse(
        id,
        "reverse, minimum degree, path residue",
        CL,
        Delta,
        PBar,
        K::AtLeast(lambda as i64),
        Res::AtLeast(lambda as i64 - 1),
        Con::CircumferenceDeltaFixed { coeff, offset },
    );
    at(by(s, who), lambda)
}

const fn classical_reverse_sigma(id: &'static str, who: &'static str, lambda: usize, offset: i64) -> Statement {
    let s = reverse(
        id,
        "reverse, degree sum, path residue",
        CL,
        Sigma,
        PBar,
        K::AtLeast(lambda as i64),
        Res::AtLeast(lambda as i64 - 1),
        Con::CircumferenceSigmaFixed { k: lambda, offset },
    );
    at(by(s, who), lambda)
}

pub(super) static CATALOG: [Statement; 32] = [
    by(forward("C1", "(σ, p̄)-version", CONJ, Sigma, PBar, K::Lambda, Deg::DegreeSum, Con::ResidualAtMostLambdaMinus1), "Bondy, 1980"),
    reverse("C2", "(reverse, σ, p̄)-version", CONJ, Sigma, PBar, K::Lambda, Res::LambdaMinus1, Con::CircumferenceSigma),
    by(forward("C3", "(δ, p̄)-version", CONJ, Delta, PBar, K::Lambda, Deg::MinDegree, Con::ResidualAtMostLambdaMinus1), "Bondy, 1980"),
    by(reverse("C4", "(reverse, δ, p̄)-version", CONJ, Delta, PBar, K::Lambda, Res::LambdaMinus1, Con::CircumferenceDelta), "Jung, 2001"),
    forward("C5", "(σ, c̄)-version", CONJ, Sigma, CBar, K::Lambda, Deg::DegreeSum, Con::ResidualAtMostLambdaMinus1),
    reverse("C6", "(reverse, σ, c̄)-version", CONJ, Sigma, CBar, K::Lambda, Res::LambdaMinus1, Con::CircumferenceSigma),
    forward("C7", "(σ, c̄)-version, (c̄, κ)-improvement", CONJ, Sigma, CBar, K::MinWithDeltaPlus1, Deg::DegreeSum, Con::ResidualAtMostMin),
    reverse("C8", "(reverse, σ, c̄)-version, (c̄, κ)-improvement", CONJ, Sigma, CBar, K::MinWithDeltaPlus2, Res::MinWithDeltaPlus1, Con::CircumferenceSigma),
    forward("C9", "(σ, p̄)-version, (p̄, κ)-improvement", CONJ, Sigma, PBar, K::MinWithDeltaPlus1, Deg::DegreeSum, Con::ResidualAtMostMin),
    reverse("C10", "(reverse, σ, p̄)-version, (p̄, κ)-improvement", CONJ, Sigma, PBar, K::MinWithDeltaPlus2, Res::MinWithDeltaPlus1, Con::CircumferenceSigma),
    forward("T1", "(δ, c̄)-version", THM, Delta, CBar, K::Lambda, Deg::MinDegree, Con::ResidualAtMostLambdaMinus1),
    reverse("T2", "(reverse, δ, c̄)-version", THM, Delta, CBar, K::Lambda, Res::LambdaMinus1, Con::CircumferenceDelta),
    forward("T3", "(δ, c̄)-version, c̄-improvement", THM, Delta, CBar, K::Lambda, Deg::MinDegree, Con::ResidualAtMostMin),
    reverse("T4", "(reverse, δ, c̄)-version, c̄-improvement", THM, Delta, CBar, K::Lambda, Res::MinWithDeltaPlus1, Con::CircumferenceDelta),
    forward("T5", "(δ, c̄)-version, κ-improvement", THM, Delta, CBar, K::MinWithDeltaPlus1, Deg::MinDegree, Con::ResidualAtMostLambdaMinus1),
    reverse("T6", "(reverse, δ, c̄)-version, κ-improvement", THM, Delta, CBar, K::MinWithDeltaPlus2, Res::LambdaMinus1, Con::CircumferenceDelta),
    forward("T7", "(δ, c̄)-version, (c̄, κ)-improvement", THM, Delta, CBar, K::MinWithDeltaPlus1, Deg::MinDegree, Con::ResidualAtMostMin),
    reverse("T8", "(reverse, δ, c̄)-version, (c̄, κ)-improvement", THM, Delta, CBar, K::MinWithDeltaPlus2, Res::MinWithDeltaPlus1, Con::CircumferenceDelta),
    classical_min_degree("CL-a", "Dirac, 1952", 1, 0, 2),
    classical_min_degree("CL-b", "Nash-Williams, 1971", 2, 2, 3),
    classical_min_degree("CL-c", "Fan, 1987", 3, 6, 4),
    classical_reverse_delta("CL-d", "Dirac, 1952", 1, 1, 1),
    classical_reverse_delta("CL-e", "Dirac, 1952", 2, 2, 0),
    classical_reverse_delta("CL-f", "Voss, Zuluaga, 1977", 3, 3, -3),
    classical_reverse_delta("CL-g", "Jung, 1990", 4, 4, -8),
    classical_degree_sum("CL-h", "Ore, 1960", 1, 0),
    classical_degree_sum("CL-i", "Bondy, 1980", 2, 2),
    classical_degree_sum("CL-j", "Zou, 1987", 3, 6),
    classical_reverse_sigma("CL-k", "Dirac, 1952", 1, 1),
    classical_reverse_sigma("CL-l", "Bondy, 1971; Bermond, 1976; Linial, 1976", 2, 0),
    classical_reverse_sigma("CL-m", "Fraisse, Jung, 1989", 3, -3),
    classical_reverse_sigma("CL-n", "Chiba, Tsugaki, Yamashita, 2014", 4, -8),
];
