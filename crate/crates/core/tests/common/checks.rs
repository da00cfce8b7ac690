//! Whole-graph checks shared by the structural tests and the acceptance run.
//! Each returns a description of the first failure.

use std::collections::BTreeMap;

use super::Oracle;
use cyclelab::cycles::{is_cd_lambda_cycle, is_d_lambda_cycle, is_pd_lambda_cycle, CycleSeq};
use cyclelab::{analyze, Graph};

/// Implications between the residual notions, on every cycle of `g`.
pub fn structural(g: &Graph) -> Result<(), String> {
    let o = Oracle::new(g);
    let n = g.order();
    let (_, a) = analyze(g).map_err(|e| e.to_string())?;
    for (c, p) in a.longest_cycles.iter().zip(&a.profiles) {
        if p.c_bar > p.p_bar {
            return Err(format!("{g:?}: c̄ > p̄ on {c}"));
        }
    }
    let mut by_set: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for seq in o.cycles_within(&o.all()) {
        let mut key = seq.clone();
        key.sort_unstable();
        by_set.entry(key).or_insert(seq);
    }
    for (set, seq) in by_set {
        let q = CycleSeq::new(g, seq).map_err(|e| e.to_string())?;
        let (p_bar, c_bar, _) = o.residual(&set);
        let hamilton = set.len() == n;
        let rest = o.complement_of(&set);
        let dominating = (0..n).all(|u| (0..n).all(|v| !(rest[u] && rest[v] && o.adjacent(u, v))));
        for lambda in 1..=n + 1 {
            let d = is_d_lambda_cycle(g, &q, lambda).map_err(|e| e.to_string())?;
            let pd = is_pd_lambda_cycle(g, &q, lambda).map_err(|e| e.to_string())?;
            let cd = is_cd_lambda_cycle(g, &q, lambda).map_err(|e| e.to_string())?;
            if (d && !pd) || (pd && !cd) {
                return Err(format!("{g:?} {q} λ={lambda}: D={d} PD={pd} CD={cd}"));
            }
            if d != o.dominates_connected_sets(&set, lambda)
                || pd != o.dominates_paths(&set, lambda)
                || cd != o.dominates_cycles(&set, lambda)
            {
                return Err(format!("{g:?} {q} λ={lambda}: disagrees with the definitions"));
            }
            let expected = match lambda {
                1 => Some(hamilton),
                2 => Some(dominating),
                _ => None,
            };
            if let Some(e) = expected {
                if d != e || pd != e || cd != e {
                    return Err(format!("{g:?} {q} λ={lambda}: D/PD/CD do not characterize the cycle"));
                }
            }
        }
        if hamilton != (p_bar == 0) || hamilton != (c_bar == 0) {
            return Err(format!("{g:?} {q}: Hamilton cycle vs empty residue"));
        }
        if dominating != (p_bar <= 1) || dominating != (c_bar <= 1) {
            return Err(format!("{g:?} {q}: dominating cycle vs residue of order ≤ 1"));
        }
    }
    Ok(())
}
