//! Graphs, vertex subsets and connected-subset enumeration.
//!
//! Vertices are the integers `1..=n`. Graphs are simple and undirected;
//! construction of a disconnected graph is allowed, but every spectral
//! operation rejects one.

use std::collections::BTreeSet;
use std::fmt;

use crate::rational::{from_usize, Ratio};
use crate::{Error, Result};

/// A finite simple undirected graph on vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    degrees: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges and out-of-range endpoints. Edge orientation is normalized to
    /// `i < j`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut canonical = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w < 1 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            canonical.push(e);
        }
        canonical.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        for &(i, j) in &canonical {
            adj[i - 1].push(j);
            adj[j - 1].push(i);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        let degrees = adj.iter().map(Vec::len).collect();
        Ok(Graph {
            n,
            edges: canonical,
            adj,
            degrees,
        })
    }

    /// Parses the edge-list text format: optional `#` comment lines, then a
    /// line with the vertex count `n`, then one `u v` pair per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if n.is_none() {
                n = Some(line.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("expected vertex count, found {line:?}"),
                })?);
                continue;
            }
            let mut it = line.split_whitespace();
            let (u, v) = match (it.next(), it.next(), it.next()) {
                (Some(u), Some(v), None) => (u, v),
                _ => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("expected an edge \"u v\", found {line:?}"),
                    })
                }
            };
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("bad vertex id {s:?}"),
                })
            };
            edges.push((parse(u)?, parse(v)?));
        }
        let n = n.ok_or(Error::Parse {
            line: 1,
            message: "missing vertex count".into(),
        })?;
        Graph::new(n, &edges)
    }

    /// The path graph `P_n`, `n >= 2`.
    pub fn path(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::BelowMinimumOrder {
                family: "path",
                minimum: 2,
                n,
            });
        }
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges)
    }

    /// The cycle graph `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::BelowMinimumOrder {
                family: "cycle",
                minimum: 3,
                n,
            });
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        Graph::new(n, &edges)
    }

    /// The complete graph `K_n`, `n >= 2`.
    pub fn complete(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::BelowMinimumOrder {
                family: "complete",
                minimum: 2,
                n,
            });
        }
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                edges.push((i, j));
            }
        }
        Graph::new(n, &edges)
    }

    /// One of the named graphs; see [`NamedGraph`].
    pub fn named(name: NamedGraph) -> Self {
        let (n, edges): (usize, &[(usize, usize)]) = match name {
            NamedGraph::G6 => (
                6,
                &[
                    (1, 2),
                    (1, 3),
                    (1, 4),
                    (1, 5),
                    (1, 6),
                    (2, 3),
                    (2, 4),
                    (2, 5),
                    (3, 4),
                    (5, 6),
                ],
            ),
            NamedGraph::Ex10G => (
                10,
                &[
                    (1, 2),
                    (1, 3),
                    (1, 4),
                    (1, 5),
                    (2, 3),
                    (2, 4),
                    (3, 4),
                    (3, 6),
                    (5, 7),
                    (5, 8),
                    (7, 8),
                    (6, 9),
                    (6, 10),
                    (9, 10),
                ],
            ),
            NamedGraph::Ex5G => (5, &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5)]),
            NamedGraph::Ex7G => (7, &[(1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (3, 7)]),
            NamedGraph::Ex9G => (
                9,
                &[
                    (1, 2),
                    (1, 3),
                    (2, 3),
                    (1, 4),
                    (1, 5),
                    (4, 5),
                    (2, 6),
                    (2, 7),
                    (6, 7),
                    (3, 8),
                    (3, 9),
                    (8, 9),
                ],
            ),
            NamedGraph::Ex5Order => (5, &[(1, 2), (1, 5), (2, 5), (3, 4), (3, 5), (4, 5)]),
        };
        Graph::new(n, edges).expect("named graphs are valid by construction")
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Canonical edge list, each edge `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Degree of a vertex.
    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v - 1]
    }

    /// Sorted neighbors of a vertex.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v - 1]
    }

    /// Whether `u` and `v` are adjacent.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u - 1].binary_search(&v).is_ok()
    }

    /// Total volume `vol(V) = sum of degrees = 2 |E|`.
    pub fn volume(&self) -> usize {
        2 * self.edges.len()
    }

    /// All vertices as a subset.
    pub fn full_subset(&self) -> VertexSubset {
        VertexSubset::from_sorted((1..=self.n).collect())
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let all = self.full_subset();
        self.components_within(&all).len() == 1
    }

    /// Errors with [`Error::Disconnected`] unless the graph is connected.
    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    fn check_subset(&self, s: &VertexSubset) {
        if let Some(&v) = s.iter().next_back() {
            assert!(v <= self.n, "subset vertex {v} out of range 1..={}", self.n);
        }
    }

    /// `vol(S)`, the sum of degrees over `S`.
    pub fn subset_volume(&self, s: &VertexSubset) -> usize {
        self.check_subset(s);
        s.iter().map(|&v| self.degree(v)).sum()
    }

    /// `|boundary(S)|`, the number of edges with exactly one endpoint in `S`.
    /// `S` must be nonempty and proper.
    pub fn boundary_size(&self, s: &VertexSubset) -> Result<usize> {
        self.check_subset(s);
        if s.is_empty() {
            return Err(Error::EmptySubset);
        }
        if s.len() == self.n {
            return Err(Error::FullSubset);
        }
        Ok(self.boundary_size_unchecked(s))
    }

    pub(crate) fn boundary_size_unchecked(&self, s: &VertexSubset) -> usize {
        self.edges
            .iter()
            .filter(|(i, j)| s.contains(*i) != s.contains(*j))
            .count()
    }

    /// Complement of a subset.
    pub fn complement(&self, s: &VertexSubset) -> VertexSubset {
        self.check_subset(s);
        VertexSubset::from_sorted((1..=self.n).filter(|v| !s.contains(*v)).collect())
    }

    /// Connected components of the subgraph induced by `S`, each sorted,
    /// ordered by smallest member.
    pub fn components_within(&self, s: &VertexSubset) -> Vec<VertexSubset> {
        self.check_subset(s);
        let mut unseen: BTreeSet<usize> = s.iter().copied().collect();
        let mut components = Vec::new();
        while let Some(&start) = unseen.iter().next() {
            unseen.remove(&start);
            let mut stack = vec![start];
            let mut comp = BTreeSet::new();
            comp.insert(start);
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if unseen.remove(&w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            components.push(VertexSubset { members: comp });
        }
        components
    }

    /// Whether the subgraph induced by `S` is connected (empty sets are not).
    pub fn subset_connected(&self, s: &VertexSubset) -> bool {
        !s.is_empty() && self.components_within(s).len() == 1
    }

    /// Every nonempty connected subset `S` with `vol(S) <= vol_cap`, each
    /// exactly once, sorted by size then lexicographically.
    ///
    /// Uses fixed-anchor expansion: for each anchor `a` (the smallest member)
    /// subsets are grown through the neighborhood using only vertices `> a`,
    /// with a banned set guaranteeing single emission. The volume cap prunes
    /// whole branches since volume is strictly monotone under insertion.
    pub fn enumerate_connected_subsets(&self, vol_cap: &Ratio) -> Result<Vec<VertexSubset>> {
        use num_traits::Zero;
        if *vol_cap <= Ratio::zero() {
            return Err(Error::NonPositiveCap);
        }
        if self.n > 64 {
            return Err(Error::OverCap { n: self.n, cap: 64 });
        }
        let fits = |vol: usize| from_usize(vol) <= *vol_cap;
        let mut out = Vec::new();
        for anchor in 1..=self.n {
            if !fits(self.degree(anchor)) {
                continue;
            }
            let mut members = vec![anchor];
            self.grow(
                anchor,
                &mut members,
                self.degree(anchor),
                0u64,
                vol_cap,
                &mut out,
            );
        }
        out.sort_by(VertexSubset::cmp_canonical);
        Ok(out)
    }

    fn grow(
        &self,
        anchor: usize,
        members: &mut Vec<usize>,
        vol: usize,
        banned: u64,
        cap: &Ratio,
        out: &mut Vec<VertexSubset>,
    ) {
        out.push(VertexSubset::from_iter_unchecked(members.iter().copied()));
        let in_members = |v: usize| members.contains(&v);
        let mut frontier: Vec<usize> = members
            .iter()
            .flat_map(|&v| self.neighbors(v).iter().copied())
            .filter(|&w| w > anchor && banned & (1 << (w - 1)) == 0 && !in_members(w))
            .collect();
        frontier.sort_unstable();
        frontier.dedup();
        let mut local_banned = banned;
        for w in frontier {
            let new_vol = vol + self.degree(w);
            if from_usize(new_vol) <= *cap {
                members.push(w);
                self.grow(anchor, members, new_vol, local_banned, cap, out);
                members.pop();
            }
            local_banned |= 1 << (w - 1);
        }
    }
}

/// Names of the worked graphs available through [`Graph::named`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    /// 6 vertices, 10 edges, nine distinct eigenvalues.
    G6,
    /// Two triangles plugged onto a 4-clique; 10 vertices.
    Ex10G,
    /// Triangle with two pendants on its top vertex; 5 vertices.
    Ex5G,
    /// Path with two extra leaves on the middle vertex; 7 vertices.
    Ex7G,
    /// Three triangles joined through a central triangle of null vertices.
    Ex9G,
    /// Two triangles pasted at a shared vertex; 5 vertices.
    Ex5Order,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 6] = [
        NamedGraph::G6,
        NamedGraph::Ex10G,
        NamedGraph::Ex5G,
        NamedGraph::Ex7G,
        NamedGraph::Ex9G,
        NamedGraph::Ex5Order,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            NamedGraph::G6 => "G6",
            NamedGraph::Ex10G => "EX_10G",
            NamedGraph::Ex5G => "EX_5G",
            NamedGraph::Ex7G => "EX_7G",
            NamedGraph::Ex9G => "EX_9G",
            NamedGraph::Ex5Order => "EX_5ORDER",
        }
    }
}

impl std::str::FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedGraph::ALL
            .iter()
            .copied()
            .find(|g| g.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A set of vertices of some graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSubset {
    members: BTreeSet<usize>,
}

impl VertexSubset {
    /// Builds a subset, validating membership in `1..=n` of the graph.
    pub fn new(graph: &Graph, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for v in members {
            if v < 1 || v > graph.vertex_count() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: graph.vertex_count(),
                });
            }
            set.insert(v);
        }
        Ok(VertexSubset { members: set })
    }

    pub(crate) fn from_sorted(members: BTreeSet<usize>) -> Self {
        VertexSubset { members }
    }

    pub(crate) fn from_iter_unchecked(members: impl IntoIterator<Item = usize>) -> Self {
        VertexSubset {
            members: members.into_iter().collect(),
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::collections::btree_set::Iter<'_, usize> {
        self.members.iter()
    }

    pub fn is_disjoint(&self, other: &VertexSubset) -> bool {
        self.members.is_disjoint(&other.members)
    }

    pub fn is_subset(&self, other: &VertexSubset) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn union(&self, other: &VertexSubset) -> VertexSubset {
        VertexSubset {
            members: self.members.union(&other.members).copied().collect(),
        }
    }

    /// Canonical order: by size, then lexicographically on sorted members.
    pub fn cmp_canonical(&self, other: &VertexSubset) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.members.cmp(&other.members))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.iter().copied().collect()
    }
}

impl fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.members.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn subset(g: &Graph, vs: &[usize]) -> VertexSubset {
        VertexSubset::new(g, vs.iter().copied()).unwrap()
    }

    #[test]
    fn parses_the_5g_example_graph() {
        let g = Graph::parse("5\n1 2\n1 3\n2 3\n3 4\n3 5").unwrap();
        assert_eq!(g.vertex_count(), 5);
        let degrees: Vec<_> = (1..=5).map(|v| g.degree(v)).collect();
        assert_eq!(degrees, vec![2, 2, 4, 1, 1]);
    }

    #[test]
    fn parses_k2_and_comments() {
        let g = Graph::parse("# smallest connected graph\n2\n1 2").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.degree(1), 1);
        assert_eq!(g.degree(2), 1);
    }

    #[test]
    fn rejects_duplicate_edges_self_loops_and_bad_ids() {
        assert!(matches!(
            Graph::parse("3\n1 2\n1 2"),
            Err(Error::DuplicateEdge(1, 2))
        ));
        assert!(matches!(
            Graph::parse("3\n1 2\n2 1"),
            Err(Error::DuplicateEdge(1, 2))
        ));
        assert!(matches!(Graph::parse("3\n2 2"), Err(Error::SelfLoop(2))));
        assert!(matches!(
            Graph::parse("3\n1 4"),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        ));
        assert!(matches!(
            Graph::parse("x"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Graph::parse("3\n1"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn generates_families() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!((1..=4).all(|v| k4.degree(v) == 3));
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::path(1).is_err());

        let g6 = Graph::named(NamedGraph::G6);
        assert_eq!(g6.vertex_count(), 6);
        assert_eq!(g6.edge_count(), 10);
        assert_eq!(g6.volume(), 20);

        let g10 = Graph::named(NamedGraph::Ex10G);
        assert_eq!(g10.vertex_count(), 10);
        assert_eq!(g10.edge_count(), 14);
    }

    #[test]
    fn named_graph_degrees_match_the_figures() {
        let g10 = Graph::named(NamedGraph::Ex10G);
        let degrees: Vec<_> = (1..=10).map(|v| g10.degree(v)).collect();
        assert_eq!(degrees, vec![4, 3, 4, 3, 3, 3, 2, 2, 2, 2]);
        let g9 = Graph::named(NamedGraph::Ex9G);
        let degrees: Vec<_> = (1..=9).map(|v| g9.degree(v)).collect();
        assert_eq!(degrees, vec![4, 4, 4, 2, 2, 2, 2, 2, 2]);
        let g7 = Graph::named(NamedGraph::Ex7G);
        let degrees: Vec<_> = (1..=7).map(|v| g7.degree(v)).collect();
        assert_eq!(degrees, vec![1, 2, 4, 2, 1, 1, 1]);
    }

    #[test]
    fn boundary_and_volume() {
        let k4 = Graph::complete(4).unwrap();
        let s = subset(&k4, &[1, 2]);
        assert_eq!(k4.boundary_size(&s).unwrap(), 4);
        assert_eq!(k4.subset_volume(&s), 6);

        let p4 = Graph::path(4).unwrap();
        let s = subset(&p4, &[1, 2]);
        assert_eq!(p4.boundary_size(&s).unwrap(), 1);
        assert_eq!(p4.subset_volume(&s), 3);
        assert_eq!(p4.subset_volume(&subset(&p4, &[])), 0);

        assert!(matches!(
            p4.boundary_size(&subset(&p4, &[])),
            Err(Error::EmptySubset)
        ));
        assert!(matches!(
            p4.boundary_size(&subset(&p4, &[1, 2, 3, 4])),
            Err(Error::FullSubset)
        ));
    }

    #[test]
    fn components_within_subsets() {
        let p5 = Graph::path(5).unwrap();
        let comps = p5.components_within(&subset(&p5, &[1, 2, 4, 5]));
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![1, 2]);
        assert_eq!(comps[1].to_vec(), vec![4, 5]);

        let k4 = Graph::complete(4).unwrap();
        let comps = k4.components_within(&subset(&k4, &[1, 3]));
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].to_vec(), vec![1, 3]);

        let g = Graph::named(NamedGraph::G6);
        assert_eq!(g.components_within(&g.full_subset()).len(), 1);
    }

    #[test]
    fn enumerates_connected_subsets_with_cap() {
        let p3 = Graph::path(3).unwrap();
        let subsets = p3.enumerate_connected_subsets(&rat(2, 1)).unwrap();
        let got: Vec<Vec<usize>> = subsets.iter().map(|s| s.to_vec()).collect();
        assert_eq!(got, vec![vec![1], vec![2], vec![3]]);

        let k2 = Graph::complete(2).unwrap();
        let subsets = k2.enumerate_connected_subsets(&rat(1, 1)).unwrap();
        assert_eq!(subsets.len(), 2);

        let g6 = Graph::named(NamedGraph::G6);
        let subsets = g6.enumerate_connected_subsets(&rat(10, 1)).unwrap();
        let has = |vs: &[usize]| subsets.iter().any(|s| s.to_vec() == vs.to_vec());
        assert!(has(&[1, 3, 6]));
        assert!(!has(&[1, 2, 5])); // vol 12 over the cap

        assert!(matches!(
            p3.enumerate_connected_subsets(&rat(0, 1)),
            Err(Error::NonPositiveCap)
        ));
    }

    #[test]
    fn boundary_is_symmetric_under_complement() {
        let g = Graph::named(NamedGraph::Ex10G);
        let full = g.volume();
        for s in g.enumerate_connected_subsets(&rat(full as i64, 1)).unwrap() {
            if s.len() == g.vertex_count() {
                continue;
            }
            let c = g.complement(&s);
            assert_eq!(g.boundary_size(&s).unwrap(), g.boundary_size(&c).unwrap());
            assert_eq!(g.subset_volume(&s) + g.subset_volume(&c), full);
        }
    }

    #[test]
    fn connected_enumeration_matches_naive_filter() {
        // Oracle: brute 2^n filter over all subsets.
        for g in [
            Graph::path(6).unwrap(),
            Graph::cycle(6).unwrap(),
            Graph::named(NamedGraph::G6),
            Graph::named(NamedGraph::Ex5G),
        ] {
            let n = g.vertex_count();
            let cap = rat(g.volume() as i64, 1);
            let fast = g.enumerate_connected_subsets(&cap).unwrap();
            let mut naive = Vec::new();
            for mask in 1u64..(1 << n) {
                let members: Vec<usize> = (1..=n).filter(|v| mask & (1 << (v - 1)) != 0).collect();
                let s = VertexSubset::from_iter_unchecked(members);
                if g.subset_connected(&s) {
                    naive.push(s);
                }
            }
            naive.sort_by(VertexSubset::cmp_canonical);
            assert_eq!(fast, naive);
        }
    }

    #[test]
    fn disconnected_graphs_are_constructible_but_flagged() {
        let g = Graph::new(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(!g.is_connected());
        assert!(matches!(g.require_connected(), Err(Error::Disconnected)));
    }
}
