//! The statements under test: classical results, proved theorems and open
//! conjectures about the residue of a longest cycle, and their evaluation.

mod evaluate;
mod identities;
mod statement;
mod table;

use thiserror::Error;

pub use evaluate::{
    evaluate, evaluate_beyond_delta, lambdas_for, CheckResult, EvalError, HypothesisMargin, Quantifier, Slack,
    Verdict,
};
pub use identities::{
    check_reduction_identity, check_reduction_identity_thm8, sweep_identities, IdentityError, IdentitySweep,
};
pub use statement::{
    Conclusion, ConnectivityReq, DegreeHypothesis, Direction, Family, LambdaDomain, Provenance, ResidualHypothesis,
    ResidualMetric, Statement, StatementRecord, Status,
};

/// All 32 statements: C1–C10, T1–T8, CL-a–CL-n.
pub fn catalog() -> &'static [Statement] {
    &table::CATALOG
}

pub fn lookup(id: &str) -> Option<&'static Statement> {
    catalog().iter().find(|s| s.id.eq_ignore_ascii_case(id))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown statement id {0:?}")]
pub struct UnknownStatement(pub String);

/// Resolves a selector: `all`, `proved`, `open`, or a comma-separated list
/// of ids and ranges such as `T1-T8,CL-a`. Ranges run over catalog order.
pub fn select(selector: &str) -> Result<Vec<&'static Statement>, UnknownStatement> {
    let mut out: Vec<&'static Statement> = Vec::new();
    for part in selector.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let chosen: Vec<&'static Statement> = match part.to_ascii_lowercase().as_str() {
            "all" => catalog().iter().collect(),
            "proved" => catalog().iter().filter(|s| s.status == Status::Proved).collect(),
            "open" => catalog().iter().filter(|s| s.status == Status::Open).collect(),
            _ => match lookup(part) {
                Some(s) => vec![s],
                None => range(part).ok_or_else(|| UnknownStatement(part.to_string()))?,
            },
        };
        for s in chosen {
            if !out.iter().any(|o| o.id == s.id) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// `A-B` or `A..B` over catalog order, e.g. `T1-T8`, `C7..C10`, `CL-d..CL-g`.
fn range(part: &str) -> Option<Vec<&'static Statement>> {
    let position = |id: &str| catalog().iter().position(|s| s.id.eq_ignore_ascii_case(id));
    let (a, b) = if let Some((a, b)) = part.split_once("..") {
        (position(a)?, position(b)?)
    } else {
        // Ids may contain '-', so try every split point.
        part.match_indices('-')
            .find_map(|(i, _)| Some((position(&part[..i])?, position(&part[i + 1..])?)))?
    };
    (a <= b).then(|| catalog()[a..=b].iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::analyze;
    use crate::graph::NamedGraph;

    #[test]
    fn thirty_two_unique_entries() {
        assert_eq!(catalog().len(), 32);
        let mut ids: Vec<&str> = catalog().iter().map(|s| s.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 32);
        assert_eq!(catalog().iter().filter(|s| s.is_open()).count(), 10);
    }

    #[test]
    fn spot_entries() {
        assert_eq!(lookup("T7").unwrap().conclusion_text(), "c̄ ≤ min{λ−1, δ−λ}");
        assert_eq!(lookup("CL-d").unwrap().formula(), "κ ≥ 1, p̄ ≥ 0 ⇒ c ≥ δ+1");
        assert_eq!(
            lookup("C10").unwrap().residual.unwrap().describe(ResidualMetric::PBar),
            "p̄ ≥ min{λ−1, δ−λ+1}"
        );
        assert_eq!(lookup("CL-f").unwrap().formula(), "κ ≥ 3, p̄ ≥ 2 ⇒ c ≥ 3δ−3");
        assert_eq!(lookup("cl-n").unwrap().formula(), "κ ≥ 4, p̄ ≥ 3 ⇒ c ≥ σ_4−8");
    }

    #[test]
    fn selectors() {
        let ids = |sel: &str| select(sel).unwrap().iter().map(|s| s.id).collect::<Vec<_>>();
        assert_eq!(ids("T1-T3"), vec!["T1", "T2", "T3"]);
        assert_eq!(ids("CL-d..CL-g"), vec!["CL-d", "CL-e", "CL-f", "CL-g"]);
        assert_eq!(ids("CL-m-CL-n"), vec!["CL-m", "CL-n"]);
        assert_eq!(ids("T1,T1,c7"), vec!["T1", "C7"]);
        assert_eq!(select("open").unwrap().len(), 10);
        assert_eq!(select("proved").unwrap().len(), 22);
        assert_eq!(select("T9"), Err(UnknownStatement("T9".into())));
        assert!(select("T3-T1").is_err());
    }

    #[test]
    fn worked_evaluations() {
        let (b, a) = analyze(&NamedGraph::Complete(4).build().unwrap()).unwrap();
        let r = evaluate(&b, &a, lookup("T1").unwrap(), 1, Quantifier::ForallLongest).unwrap();
        assert_eq!(r.verdict, Verdict::Confirmed);
        assert_eq!(r.conclusion_margin, Some(0));

        let (b, a) = analyze(&NamedGraph::Petersen.build().unwrap()).unwrap();
        let r = evaluate(&b, &a, lookup("CL-e").unwrap(), 2, Quantifier::ForallLongest).unwrap();
        assert_eq!((r.verdict, r.conclusion_margin), (Verdict::Confirmed, Some(3)));
        assert_eq!(r.hypothesis_margin.residual, Some(0));
        assert_eq!(r.hypothesis_margin.connectivity, 1);

        let r = evaluate(&b, &a, lookup("T1").unwrap(), 2, Quantifier::ForallLongest).unwrap();
        assert_eq!(r.verdict, Verdict::Vacuous);
        // δ − ((10+2)/3 + 0) = −1
        assert_eq!(r.hypothesis_margin.degree, Some(Slack::Finite((-1).into())));
        assert_eq!(r.hypothesis_margin.binding(), Slack::Finite((-1).into()));
    }

    #[test]
    fn domain_errors() {
        let (b, a) = analyze(&NamedGraph::Petersen.build().unwrap()).unwrap();
        let t1 = lookup("T1").unwrap();
        assert!(matches!(
            evaluate(&b, &a, t1, 4, Quantifier::ForallLongest),
            Err(EvalError::LambdaOutOfRange { lambda: 4, delta: 3, .. })
        ));
        assert!(evaluate(&b, &a, t1, 0, Quantifier::ForallLongest).is_err());
        assert!(evaluate_beyond_delta(&b, &a, t1, 4, Quantifier::ForallLongest).is_ok());
        assert!(matches!(
            evaluate(&b, &a, lookup("CL-e").unwrap(), 3, Quantifier::ForallLongest),
            Err(EvalError::LambdaFixed { fixed: 2, .. })
        ));
        assert_eq!(lambdas_for(t1, 3, None), vec![1, 2, 3]);
        assert_eq!(lambdas_for(t1, 3, Some(5)), vec![1, 2, 3, 4, 5]);
        assert_eq!(lambdas_for(lookup("CL-g").unwrap(), 3, None), vec![4]);
    }

    #[test]
    fn sigma_infinite_in_reverse_conclusion() {
        // Hubs 0 and 1 joined to three disjoint triangles: κ = 2, α = 3, δ = 4,
        // and the longest cycle misses a whole triangle.
        let mut edges = Vec::new();
        for t in 0..3 {
            let base = 2 + 3 * t;
            for i in 0..3 {
                edges.extend([(0, base + i), (1, base + i)]);
                for j in i + 1..3 {
                    edges.push((base + i, base + j));
                }
            }
        }
        let g = crate::graph::Graph::from_edges(11, edges).unwrap();
        let (b, a) = analyze(&g).unwrap();
        assert_eq!((b.min_degree, b.connectivity, b.independence_number), (4, 2, 3));
        assert_eq!(a.circumference, 8);
        let r = evaluate(&b, &a, lookup("C8").unwrap(), 4, Quantifier::ForallLongest).unwrap();
        assert_eq!(r.verdict, Verdict::VacuousBySigma);
        assert!(r.witness.is_some());
        assert_eq!(r.conclusion_margin, None);
    }
}
