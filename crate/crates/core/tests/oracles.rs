//! The crate's enumeration and graph algorithms against naive oracles.

mod common;

use common::{
    catalog_groups, clique_number_by_subsets, delta_matrix, from_edges, gamma_matrix, hamiltonian_by_permutations,
    hamiltonian_by_subsets, is_cycle_in, matrix_of, planar_by_subdivision_search, Table,
};
use indigraph_core::analysis::{clique_number, hamiltonian_cycle, independence_number, is_clique, planarity, HamiltonResult};
use indigraph_core::{Graph, GraphKind, GroupContext};
use proptest::prelude::*;

fn crate_sets(ctx: &GroupContext) -> Vec<Vec<usize>> {
    let e = ctx.enumeration().unwrap();
    assert!(e.complete);
    let mut out: Vec<Vec<usize>> = e.all_sets().map(|(_, s)| s.iter().map(|&x| x as usize).collect()).collect();
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

#[test]
fn enumeration_matches_subset_filtering() {
    for (name, g) in catalog_groups(16) {
        let oracle = Table::of(&g).min_gen_sets();
        let ctx = GroupContext::new(name.clone(), g);
        assert_eq!(crate_sets(&ctx), oracle, "{name}");
        let sizes: Vec<usize> = oracle.iter().map(Vec::len).collect();
        assert_eq!(ctx.d().unwrap(), *sizes.iter().min().unwrap(), "{name}");
        assert_eq!(ctx.m().unwrap(), *sizes.iter().max().unwrap(), "{name}");
    }
}

#[test]
fn graphs_match_oracle() {
    for (name, g) in catalog_groups(16) {
        let n = g.order();
        let oracle = Table::of(&g).min_gen_sets();
        let ctx = GroupContext::new(name.clone(), g);
        let (d, m) = (ctx.d().unwrap(), ctx.m().unwrap());
        let kinds = std::iter::once((GraphKind::Full, None)).chain((d..=m).map(|u| (GraphKind::Rank(u), Some(u))));
        for (kind, u) in kinds {
            let full = gamma_matrix(n, &oracle, u);
            let ig = ctx.graph(kind, false).unwrap();
            assert_eq!(ig.vertices, (0..n).collect::<Vec<_>>());
            assert_eq!(matrix_of(&ig.graph), full, "{name} {kind}");
            let (keep, sub) = delta_matrix(&full);
            let ig = ctx.graph(kind, true).unwrap();
            assert_eq!(ig.vertices, keep, "{name} {kind} induced");
            assert_eq!(matrix_of(&ig.graph), sub, "{name} {kind} induced");
        }
    }
}

#[test]
fn planarity_matches_subdivision_search_on_group_graphs() {
    for (name, g) in catalog_groups(16) {
        let ctx = GroupContext::new(name.clone(), g);
        let (d, m) = (ctx.d().unwrap(), ctx.m().unwrap());
        for kind in std::iter::once(GraphKind::Full).chain((d..=m).map(GraphKind::Rank)) {
            let ig = ctx.graph(kind, true).unwrap();
            let p = planarity(&ig.graph);
            assert!(p.validate(&ig.graph), "{name} {kind}");
            assert_eq!(p.planar, planar_by_subdivision_search(&matrix_of(&ig.graph)), "{name} {kind}");
        }
    }
}

#[test]
fn hamiltonicity_matches_subset_search_on_group_graphs() {
    for (name, g) in catalog_groups(16) {
        let ctx = GroupContext::new(name.clone(), g);
        let (d, m) = (ctx.d().unwrap(), ctx.m().unwrap());
        for kind in std::iter::once(GraphKind::Full).chain((d..=m).map(GraphKind::Rank)) {
            let ig = ctx.graph(kind, true).unwrap();
            if ig.vertex_count() < 3 {
                continue;
            }
            let adj = matrix_of(&ig.graph);
            match hamiltonian_cycle(&ig.graph, 50_000_000).unwrap() {
                HamiltonResult::Yes(c) => assert!(is_cycle_in(&adj, &c), "{name} {kind}"),
                HamiltonResult::No => assert!(!hamiltonian_by_subsets(&adj), "{name} {kind}"),
                HamiltonResult::Unknown => panic!("{name} {kind}: undecided"),
            }
            assert_eq!(
                hamiltonian_cycle(&ig.graph, 50_000_000).unwrap().is_yes(),
                hamiltonian_by_subsets(&adj),
                "{name} {kind}"
            );
        }
    }
}

#[test]
fn clique_numbers_match_on_group_graphs() {
    for (name, g) in catalog_groups(16) {
        let ctx = GroupContext::new(name.clone(), g);
        let ig = ctx.delta().unwrap();
        let adj = matrix_of(&ig.graph);
        let (w, c) = clique_number(&ig.graph, u64::MAX).unwrap();
        assert!(is_clique(&ig.graph, &c));
        assert_eq!(w, clique_number_by_subsets(&adj), "{name}");
    }
}

#[test]
fn oracles_agree_with_each_other() {
    let k5 = from_edges(5, &(0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect::<Vec<_>>());
    assert!(!planar_by_subdivision_search(&k5));
    assert!(hamiltonian_by_permutations(&k5) && hamiltonian_by_subsets(&k5));
    let k33 = from_edges(6, &(0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect::<Vec<_>>());
    assert!(!planar_by_subdivision_search(&k33));
    // Petersen graph: nonplanar, not Hamiltonian
    let mut pe: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    pe.extend((0..5).map(|i| (i, i + 5)));
    pe.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    let pe = from_edges(10, &pe);
    assert!(!planar_by_subdivision_search(&pe));
    assert!(!hamiltonian_by_permutations(&pe) && !hamiltonian_by_subsets(&pe));
    let cube: Vec<(usize, usize)> =
        (0..8usize).flat_map(|a| (0..3).map(move |b| (a, a ^ 1 << b))).filter(|(a, b)| a < b).collect();
    let cube = from_edges(8, &cube);
    assert!(planar_by_subdivision_search(&cube));
    assert!(hamiltonian_by_permutations(&cube));
}

fn random_graph(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let k = pairs.len();
        (Just(n), proptest::collection::vec(any::<bool>(), k)).prop_map(move |(n, keep)| {
            let e = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&p, _)| p).collect();
            (n, e)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn planarity_matches_subdivision_search((n, edges) in random_graph(9)) {
        let g = Graph::from_edges(n, edges.clone());
        let p = planarity(&g);
        prop_assert!(p.validate(&g));
        prop_assert_eq!(p.planar, planar_by_subdivision_search(&from_edges(n, &edges)));
    }

    #[test]
    fn hamiltonicity_matches_permutation_search((n, edges) in random_graph(9)) {
        let g = Graph::from_edges(n, edges.clone());
        let adj = from_edges(n, &edges);
        let expected = hamiltonian_by_permutations(&adj);
        prop_assert_eq!(expected, hamiltonian_by_subsets(&adj));
        if n >= 3 {
            match hamiltonian_cycle(&g, u64::MAX).unwrap() {
                HamiltonResult::Yes(c) => prop_assert!(expected && is_cycle_in(&adj, &c)),
                HamiltonResult::No => prop_assert!(!expected),
                HamiltonResult::Unknown => prop_assert!(false, "undecided"),
            }
        }
    }

    #[test]
    fn clique_and_independence_match_subsets((n, edges) in random_graph(12)) {
        let g = Graph::from_edges(n, edges.clone());
        let adj = from_edges(n, &edges);
        prop_assert_eq!(clique_number(&g, u64::MAX).unwrap().0, clique_number_by_subsets(&adj));
        let co: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| a != b && !adj[a][b]).collect()).collect();
        prop_assert_eq!(independence_number(&g, u64::MAX).unwrap().0, clique_number_by_subsets(&co));
    }
}
