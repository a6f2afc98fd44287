//! Property-based invariants over randomly generated inputs.

mod common;

use num_traits::{One, Signed, Zero};
use onelap::eigen::{self, binary_vector, ternary_vector};
use onelap::feasibility::{EdgeVariableSystem, VertexConstraint};
use onelap::graph::{Graph, VertexSubset};
use onelap::rational::{rat, Ratio};
use proptest::prelude::*;

/// Strategy: a connected graph with 2..=7 vertices.
fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..=7)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (1..=n)
                .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
                .collect();
            let count = pairs.len();
            (Just(n), Just(pairs), proptest::bits::u32::between(0, count))
        })
        .prop_filter_map("connected", |(n, pairs, mask)| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(n, &edges).ok()?;
            g.is_connected().then_some(g)
        })
}

fn nonempty_proper_subset(n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::bits::u32::between(0, n).prop_filter_map("proper nonempty", move |mask| {
        let members: Vec<usize> = (1..=n).filter(|v| mask & (1 << (v - 1)) != 0).collect();
        (!members.is_empty() && members.len() < n).then_some(members)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn boundary_symmetric_and_volumes_complementary(
        g in connected_graph(),
        raw in proptest::bits::u32::between(0, 7),
    ) {
        let n = g.vertex_count();
        let members: Vec<usize> = (1..=n).filter(|v| raw & (1 << (v - 1)) != 0).collect();
        prop_assume!(!members.is_empty() && members.len() < n);
        let s = VertexSubset::new(&g, members).unwrap();
        let c = g.complement(&s);
        prop_assert_eq!(g.boundary_size(&s).unwrap(), g.boundary_size(&c).unwrap());
        prop_assert_eq!(g.subset_volume(&s) + g.subset_volume(&c), g.volume());
        // Connectivity forces every proper cut to be crossed.
        prop_assert!(g.boundary_size(&s).unwrap() >= 1);
    }

    #[test]
    fn components_partition_their_subset(
        g in connected_graph(),
        raw in proptest::bits::u32::between(0, 7),
    ) {
        let n = g.vertex_count();
        let members: Vec<usize> = (1..=n).filter(|v| raw & (1 << (v - 1)) != 0).collect();
        let s = VertexSubset::new(&g, members).unwrap();
        let pieces = g.components_within(&s);
        let mut seen = std::collections::BTreeSet::new();
        for piece in &pieces {
            for &v in piece.iter() {
                prop_assert!(seen.insert(v), "pieces must be disjoint");
                prop_assert!(s.contains(v));
            }
        }
        prop_assert_eq!(seen.len(), s.len(), "pieces must cover the subset");
    }

    #[test]
    fn enumeration_matches_naive_filter_under_random_caps(
        g in connected_graph(),
        numer in 1i64..30,
    ) {
        let cap = rat(numer, 2);
        let fast = g.enumerate_connected_subsets(&cap).unwrap();
        let n = g.vertex_count();
        let mut naive = Vec::new();
        for mask in 1u64..(1 << n) {
            let members: Vec<usize> = (1..=n).filter(|v| mask & (1 << (v - 1)) != 0).collect();
            let s = VertexSubset::new(&g, members).unwrap();
            if g.subset_connected(&s)
                && onelap::rational::from_usize(g.subset_volume(&s)) <= cap
            {
                naive.push(s);
            }
        }
        naive.sort_by(VertexSubset::cmp_canonical);
        prop_assert_eq!(fast, naive);
    }

    #[test]
    fn ternary_vectors_live_on_the_sphere(
        g in connected_graph(),
        raw_p in proptest::bits::u32::between(0, 7),
        raw_n in proptest::bits::u32::between(0, 7),
    ) {
        let n = g.vertex_count();
        let p: Vec<usize> = (1..=n).filter(|v| raw_p & (1 << (v - 1)) != 0).collect();
        let q: Vec<usize> = (1..=n)
            .filter(|v| raw_n & (1 << (v - 1)) != 0 && !p.contains(v))
            .collect();
        prop_assume!(!p.is_empty() || !q.is_empty());
        let ps = VertexSubset::new(&g, p).unwrap();
        let qs = VertexSubset::new(&g, q).unwrap();
        let x = ternary_vector(&g, &ps, &qs).unwrap();
        prop_assert!(eigen::one_norm(&g, &x).is_one());
        let pattern = eigen::sign_pattern(&g, &x);
        prop_assert_eq!(
            pattern.delta_plus + pattern.delta_minus + pattern.delta_zero,
            g.volume()
        );
    }

    #[test]
    fn binary_energy_equals_psi(
        g in connected_graph(),
        members in (2usize..=7).prop_flat_map(nonempty_proper_subset),
    ) {
        prop_assume!(members.iter().all(|&v| v <= g.vertex_count()));
        prop_assume!(members.len() < g.vertex_count());
        let s = VertexSubset::new(&g, members).unwrap();
        let phi = binary_vector(&g, &s).unwrap();
        prop_assert_eq!(eigen::energy(&g, &phi), eigen::psi(&g, &s).unwrap());
    }

    #[test]
    fn solver_scaling_invariance(
        lo_a in -3i64..3, hi_a in 0i64..4,
        lo_b in -3i64..3, hi_b in 0i64..4,
        target in -4i64..=4,
        scale_n in 1i64..9, scale_d in 1i64..9,
    ) {
        let build = |s: &Ratio| {
            let mut sys = EdgeVariableSystem::new(3);
            sys.add_edge(1, 2, rat(lo_a, 2) * s, rat(lo_a + hi_a, 2) * s).unwrap();
            sys.add_edge(2, 3, rat(lo_b, 3) * s, rat(lo_b + hi_b, 3) * s).unwrap();
            sys.set_vertex(2, VertexConstraint::Equal(rat(target, 2) * s)).unwrap();
            sys
        };
        let baseline = build(&Ratio::one()).solve().unwrap().is_feasible();
        let scaled = build(&rat(scale_n, scale_d)).solve().unwrap().is_feasible();
        prop_assert_eq!(baseline, scaled);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn feasible_witnesses_re_verify(
        g in connected_graph(),
        numer in 0i64..=4, denom in 1i64..=4,
    ) {
        // Any box system from a real eigen candidate: witnesses must check.
        let mu = rat(numer.min(denom), denom);
        let s = VertexSubset::new(&g, [1]).unwrap();
        let phi = binary_vector(&g, &s).unwrap();
        if let Some(cert) = eigen::is_eigenpair(&g, &mu, &phi).unwrap() {
            // Re-substitute into a fresh system.
            let mut sums = vec![Ratio::zero(); g.vertex_count() + 1];
            for (&(i, j), z) in &cert.witness {
                prop_assert!(z.clone().abs() <= Ratio::one());
                sums[i] += z;
                sums[j] -= z;
            }
            for v in 1..=g.vertex_count() {
                let bound = mu.clone() * onelap::rational::from_usize(g.degree(v));
                if phi.get(v).is_zero() {
                    prop_assert!(sums[v].clone().abs() <= bound);
                } else {
                    prop_assert_eq!(sums[v].clone(), bound);
                }
            }
        }
    }
}

#[test]
fn singletons_are_always_eigenvectors_at_one() {
    // sigma max = 1 with singleton supports, on a spread of graphs.
    for g in [
        Graph::path(7).unwrap(),
        Graph::cycle(5).unwrap(),
        Graph::complete(6).unwrap(),
        Graph::new(5, &[(1, 2), (1, 3), (1, 4), (1, 5)]).unwrap(),
    ] {
        for v in 1..=g.vertex_count() {
            let s = VertexSubset::new(&g, [v]).unwrap();
            let phi = binary_vector(&g, &s).unwrap();
            assert!(eigen::is_eigenpair(&g, &rat(1, 1), &phi).unwrap().is_some());
        }
    }
}
