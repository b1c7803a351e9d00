//! Structural invariants over the catalog, checked with naive oracles.

mod common;

use common::{catalog_groups, delta_matrix, gamma_matrix, Table};
use indigraph_core::analysis::{components, recognize_complete_multipartite};
use indigraph_core::verify::{run_suite, Catalog, CheckId, Limits, Status};
use indigraph_core::{make_named_group, ElementSet, GroupContext};
use proptest::prelude::*;

/// Frattini subgroup as the intersection of the maximal subgroups, where the
/// subgroups are found by closing every set of at most three elements.
fn naive_frattini(t: &Table) -> Vec<bool> {
    let n = t.n;
    let mut subs: Vec<Vec<bool>> = Vec::new();
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                let s = t.closure(&[a, b, c]);
                if !s.iter().all(|&x| x) && !subs.contains(&s) {
                    subs.push(s);
                }
            }
        }
    }
    let inside = |x: &Vec<bool>, y: &Vec<bool>| x.iter().zip(y).all(|(&p, &q)| !p || q);
    let maximal: Vec<&Vec<bool>> =
        subs.iter().filter(|s| !subs.iter().any(|t| t != *s && inside(s, t))).collect();
    (0..n).map(|g| maximal.iter().all(|m| m[g])).collect()
}

#[test]
fn frattini_matches_maximal_subgroup_intersection() {
    for (name, g) in catalog_groups(24) {
        let t = Table::of(&g);
        let expected = naive_frattini(&t);
        let ctx = GroupContext::new(name.clone(), g);
        let frat = &ctx.lattice().unwrap().frattini().elements;
        assert_eq!((0..t.n).map(|x| frat.contains(x)).collect::<Vec<_>>(), expected, "{name}");
    }
}

#[test]
fn frattini_is_the_set_of_non_generators() {
    for (name, g) in catalog_groups(16) {
        let t = Table::of(&g);
        let sets = t.min_gen_sets();
        let ctx = GroupContext::new(name.clone(), g);
        let frat = &ctx.lattice().unwrap().frattini().elements;
        for x in 0..t.n {
            let used = sets.iter().any(|s| s.contains(&x));
            assert_eq!(frat.contains(x), !used, "{name} element {x}");
        }
    }
}

#[test]
fn isolated_vertices_are_frattini_or_generators() {
    for (name, g) in catalog_groups(16) {
        let t = Table::of(&g);
        let adj = gamma_matrix(t.n, &t.min_gen_sets(), None);
        let (keep, _) = delta_matrix(&adj);
        let frat = naive_frattini(&t);
        for x in 0..t.n {
            let generator = t.generates(&[x]);
            assert_eq!(!keep.contains(&x), frat[x] || generator, "{name} element {x}");
        }
    }
}

#[test]
fn quotients_are_homomorphic_images() {
    for (name, g) in catalog_groups(24) {
        let ctx = GroupContext::new(name.clone(), g.clone());
        let lat = ctx.lattice().unwrap();
        for (_, n) in lat.normal() {
            let (q, proj) = g.quotient(&n.elements).unwrap();
            assert_eq!(q.order() * n.order(), g.order(), "{name}");
            assert_eq!(proj[0], 0);
            for a in g.elements() {
                assert_eq!(proj[a] == 0, n.elements.contains(a));
                for b in g.elements() {
                    assert_eq!(proj[g.mul(a, b)], q.mul(proj[a], proj[b]), "{name}");
                }
            }
        }
    }
}

#[test]
fn structure_flags_are_consistent() {
    for (name, g) in catalog_groups(60) {
        let f = g.structure_flags();
        let t = Table::of(&g);
        let abelian = (0..t.n).all(|a| (0..t.n).all(|b| t.mul[a][b] == t.mul[b][a]));
        let cyclic = (0..t.n).any(|x| t.generates(&[x]));
        assert_eq!(f.is_abelian, abelian, "{name}");
        assert_eq!(f.is_cyclic, cyclic, "{name}");
        assert!(!f.is_cyclic || f.is_abelian, "{name}");
        assert!(!f.is_abelian || f.is_nilpotent, "{name}");
        assert!(!f.is_nilpotent || f.is_soluble, "{name}");
    }
    assert!(!make_named_group("alternating(5)").unwrap().structure_flags().is_soluble);
    let s3 = make_named_group("symmetric(3)").unwrap().structure_flags();
    assert!(s3.is_soluble && !s3.is_nilpotent);
}

#[test]
fn elementary_abelian_rank_two_is_complete_multipartite() {
    for p in [2usize, 3, 5] {
        let g = make_named_group(&format!("elementary_abelian({p},2)")).unwrap();
        let ctx = GroupContext::new("e", g);
        let delta = ctx.delta().unwrap();
        assert_eq!(delta.vertex_count(), p * p - 1);
        assert_eq!(recognize_complete_multipartite(&delta.graph), Some(vec![p - 1; p + 1]), "p={p}");
    }
}

#[test]
fn cyclic_of_two_primes_is_complete_bipartite() {
    for (p, q) in [(2usize, 3usize), (2, 5), (3, 5), (2, 7), (3, 7), (5, 7), (2, 11), (3, 11), (5, 11), (7, 11)] {
        let g = make_named_group(&format!("cyclic({})", p * q)).unwrap();
        let ctx = GroupContext::new("c", g);
        let delta = ctx.delta().unwrap();
        assert_eq!(delta.vertex_count(), p - 1 + q - 1, "{p}x{q}");
        assert_eq!(delta.edge_count(), (p - 1) * (q - 1), "{p}x{q}");
        let mut parts = recognize_complete_multipartite(&delta.graph).unwrap();
        parts.sort_unstable();
        assert_eq!(parts, vec![p - 1, q - 1], "{p}x{q}");
        for &v in &delta.vertices {
            let o = ctx.group().element_order(v);
            assert!(o == p || o == q);
        }
    }
}

fn is_prime_power(n: usize) -> bool {
    let p = (2..=n).find(|d| n % d == 0).unwrap();
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    m == 1
}

#[test]
fn p_group_degrees_follow_frattini_cosets() {
    let mut seen = 0;
    for (name, g) in catalog_groups(32) {
        let n = g.order();
        if n < 2 || !is_prime_power(n) || g.structure_flags().is_cyclic {
            continue;
        }
        seen += 1;
        let ctx = GroupContext::new(name.clone(), g);
        let lat = ctx.lattice().unwrap();
        let delta = ctx.delta().unwrap();
        for &x in &delta.vertices {
            let h = lat.get(lat.join(lat.frattini_id(), x)).order();
            assert_eq!(delta.degree_of(x), n - h, "{name} element {x}");
        }
    }
    assert!(seen >= 10, "{seen}");
}

#[test]
fn spanning_tree_certificates_check_out() {
    let cat = Catalog::default_catalog();
    let names: Vec<&str> =
        cat.entries().iter().filter(|e| e.order() <= 24).map(|e| e.name.as_str()).collect();
    let cat = cat.select(&names).unwrap();
    let report = run_suite(&cat, &[CheckId::ConnectivityMain], &Limits::default());
    for e in &report.entries {
        assert_eq!(e.status, Status::Pass, "{}", e.group);
        let g = cat.get(&e.group).unwrap().build(24).unwrap();
        let t = Table::of(&g);
        let tree = e.witness["spanning_tree"].as_array().unwrap();
        let n = e.witness["vertices"].as_u64().unwrap() as usize;
        assert_eq!(tree.len(), n.saturating_sub(1), "{}", e.group);
        let mut touched = ElementSet::empty(g.order());
        let mut edges = Vec::new();
        for item in tree {
            let x = item["edge"][0].as_u64().unwrap() as usize;
            let y = item["edge"][1].as_u64().unwrap() as usize;
            let set: Vec<usize> = item["set"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap() as usize).collect();
            assert!(set.contains(&x) && set.contains(&y));
            assert!(t.generates(&set), "{} {:?}", e.group, set);
            for i in 0..set.len() {
                let rest: Vec<usize> = set.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                assert!(!t.generates(&rest), "{} {:?} not minimal", e.group, set);
            }
            touched.insert(x);
            touched.insert(y);
            edges.push((x, y));
        }
        // the tree edges connect everything they touch
        let ids = touched.to_vec();
        let pos = |v: usize| ids.iter().position(|&w| w == v).unwrap();
        let g2 = indigraph_core::Graph::from_edges(ids.len(), edges.iter().map(|&(a, b)| (pos(a), pos(b))));
        assert!(components(&g2).len() <= 1, "{}", e.group);
        if n > 1 {
            assert_eq!(ids.len(), n);
        }
    }
}

#[test]
fn probes_only_observe() {
    let cat = Catalog::default_catalog().select(&["a5", "d6", "s4", "c2xc2"]).unwrap();
    let probes: Vec<CheckId> = CheckId::ALL.into_iter().filter(|c| c.is_probe()).collect();
    let limits = Limits {
        node_budget: 200_000,
        ..Limits::default()
    };
    let r = run_suite(&cat, &probes, &limits);
    assert!(!r.entries.is_empty());
    for e in &r.entries {
        assert!(
            matches!(e.status, Status::Observation | Status::SkippedBudget | Status::SkippedNotApplicable),
            "{} {} {:?}",
            e.group,
            e.check,
            e.status
        );
    }
}

fn small_names() -> Vec<String> {
    Catalog::default_catalog()
        .entries()
        .iter()
        .filter(|e| e.order() <= 16)
        .map(|e| e.name.clone())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn suite_is_monotone_under_catalog_extension(
        picks in proptest::sample::subsequence(small_names(), 1..6),
        extra in proptest::sample::subsequence(small_names(), 1..4),
    ) {
        let full = Catalog::default_catalog();
        let base: Vec<&str> = picks.iter().map(String::as_str).collect();
        let mut wider = base.clone();
        wider.extend(extra.iter().map(String::as_str).filter(|x| !base.contains(x)));
        let checks = [CheckId::ConnectivityMain, CheckId::IsolatedCharacterization, CheckId::TarskiRange, CheckId::EdgeLift];
        let mut a = run_suite(&full.select(&base).unwrap(), &checks, &Limits::default());
        let mut b = run_suite(&full.select(&wider).unwrap(), &checks, &Limits::default());
        a.strip_timing();
        b.strip_timing();
        for e in &a.entries {
            prop_assert!(b.entries.contains(e), "{} {}", e.group, e.check);
        }
        let mut again = run_suite(&full.select(&base).unwrap(), &checks, &Limits::default());
        again.strip_timing();
        prop_assert_eq!(a, again);
    }
}
