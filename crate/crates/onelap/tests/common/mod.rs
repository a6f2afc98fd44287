//! Shared helpers for the integration suites.
#![allow(dead_code)] // each test binary uses its own slice of these

use onelap::graph::{Graph, VertexSubset};
use onelap::rational::Ratio;

/// Searches for a graph isomorphism `g1 -> g2` under a per-vertex
/// compatibility predicate (used to force value correspondence). Plain
/// backtracking with degree pruning; fine for the small graphs here.
pub fn find_isomorphism(
    g1: &Graph,
    g2: &Graph,
    compatible: &dyn Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let mut mapping = vec![0usize; n + 1];
    let mut used = vec![false; n + 1];
    fn assign(
        g1: &Graph,
        g2: &Graph,
        compatible: &dyn Fn(usize, usize) -> bool,
        mapping: &mut Vec<usize>,
        used: &mut Vec<bool>,
        v: usize,
    ) -> bool {
        let n = g1.vertex_count();
        if v > n {
            return true;
        }
        for w in 1..=n {
            if used[w] || g1.degree(v) != g2.degree(w) || !compatible(v, w) {
                continue;
            }
            let consistent = (1..v).all(|u| g1.adjacent(u, v) == g2.adjacent(mapping[u], w));
            if consistent {
                mapping[v] = w;
                used[w] = true;
                if assign(g1, g2, compatible, mapping, used, v + 1) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }
    if assign(g1, g2, compatible, &mut mapping, &mut used, 1) {
        Some(mapping)
    } else {
        None
    }
}

/// True when the two graphs are isomorphic by an isomorphism carrying the
/// first value assignment onto the second (up to an optional global sign
/// flip).
pub fn isomorphic_with_values(
    g1: &Graph,
    values1: &[Ratio],
    g2: &Graph,
    values2: &[Ratio],
) -> bool {
    let direct = |v: usize, w: usize| values1[v - 1] == values2[w - 1];
    let flipped = |v: usize, w: usize| -&values1[v - 1] == values2[w - 1];
    find_isomorphism(g1, g2, &direct).is_some() || find_isomorphism(g1, g2, &flipped).is_some()
}

pub fn subset(g: &Graph, vs: &[usize]) -> VertexSubset {
    VertexSubset::new(g, vs.iter().copied()).unwrap()
}
