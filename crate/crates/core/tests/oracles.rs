mod common;

use common::Oracle;
use cyclelab::cycles::{circumference, circumference_dfs, longest_path_order, longest_path_order_dfs};
use cyclelab::invariants::{independence_number, min_degree, sigma_table, vertex_connectivity};
use cyclelab::search::isomorphism_classes;
use cyclelab::{analyze, ExtendedNat};

fn check_graph(g: &cyclelab::Graph) {
    let o = Oracle::new(g);
    let shown = format!("{g:?}");
    assert_eq!(longest_path_order(g), o.longest_path(), "p of {shown}");
    assert_eq!(longest_path_order_dfs(g), o.longest_path(), "dfs p of {shown}");
    assert_eq!(circumference(g), o.circumference(), "c of {shown}");
    assert_eq!(circumference_dfs(g), o.circumference(), "dfs c of {shown}");
    assert_eq!(independence_number(g), o.independence_number(), "α of {shown}");
    assert_eq!(vertex_connectivity(g), o.connectivity(), "κ of {shown}");
    assert_eq!(min_degree(g), o.min_degree(), "δ of {shown}");
    let table = sigma_table(g);
    for k in 0..=g.order() + 1 {
        let expected = o.sigma(k).map_or(ExtendedNat::Infinity, ExtendedNat::Finite);
        assert_eq!(table.get(k), expected, "σ_{k} of {shown}");
    }
}

#[test]
fn invariants_match_brute_force_on_all_graphs_up_to_seven_vertices() {
    for n in 1..=7 {
        for g in isomorphism_classes(n) {
            check_graph(&g);
        }
    }
}

#[test]
fn longest_cycles_and_profiles_match_brute_force() {
    for n in 1..=7 {
        for g in isomorphism_classes(n) {
            let o = Oracle::new(&g);
            let (_, a) = analyze(&g).unwrap();
            assert_eq!(a.longest_cycles.len(), o.longest_cycle_count(), "{g:?}");
            let mut sets: Vec<Vec<usize>> = a
                .longest_cycles
                .iter()
                .map(|c| {
                    let mut v = c.vertices().to_vec();
                    v.sort_unstable();
                    v
                })
                .collect();
            for (c, p) in a.longest_cycles.iter().zip(&a.profiles) {
                let (p_bar, c_bar, comp) = o.residual(c.vertices());
                assert_eq!((p.p_bar, p.c_bar, p.largest_component), (p_bar, c_bar, comp), "{g:?} {c}");
            }
            sets.sort();
            sets.dedup();
            assert_eq!(sets, o.longest_cycle_sets(), "{g:?}");
        }
    }
}
