//! Complete 1-Laplacian spectra of small graphs, closed forms for the three
//! special families, and the census of connected graphs of order at most 6.
//!
//! Every eigenvalue `mu > 0` of a connected graph admits a binary
//! eigenvector `1_A / vol(A)` with `A` connected and `vol(A) <= vol(V)/2`,
//! so enumerating those candidates and verifying each against the inclusion
//! system yields the entire spectrum; `mu = 0` always belongs to the
//! constant.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::eigen::{self, binary_vector};
use crate::graph::{Graph, VertexSubset};
use crate::rational::{format_ratio, rat, Ratio};
use crate::{Error, Result};

/// Default refusal threshold for the exponential enumeration.
pub const DEFAULT_SPECTRUM_CAP: usize = 20;

/// One eigenvalue with all its connected binary eigenvector supports of
/// volume at most half the total.
#[derive(Clone, Debug)]
pub struct SpectrumEntry {
    pub mu: Ratio,
    pub supports: Vec<VertexSubset>,
}

/// The sorted spectrum of a graph.
#[derive(Clone, Debug)]
pub struct SpectrumReport {
    pub n: usize,
    pub vol: usize,
    pub entries: Vec<SpectrumEntry>,
}

#[derive(Serialize)]
struct SpectrumJson {
    n: usize,
    vol: usize,
    spectrum: Vec<SpectrumEntryJson>,
}

#[derive(Serialize)]
struct SpectrumEntryJson {
    mu: String,
    supports: Vec<Vec<usize>>,
}

impl SpectrumReport {
    /// Distinct eigenvalues in increasing order.
    pub fn eigenvalues(&self) -> Vec<Ratio> {
        self.entries.iter().map(|e| e.mu.clone()).collect()
    }

    pub fn contains(&self, mu: &Ratio) -> bool {
        self.entries.iter().any(|e| &e.mu == mu)
    }

    pub fn supports_of(&self, mu: &Ratio) -> Option<&[VertexSubset]> {
        self.entries
            .iter()
            .find(|e| &e.mu == mu)
            .map(|e| e.supports.as_slice())
    }

    /// JSON form: `{"n":…,"vol":…,"spectrum":[{"mu":"p/q","supports":[[…]]}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let dto = SpectrumJson {
            n: self.n,
            vol: self.vol,
            spectrum: self
                .entries
                .iter()
                .map(|e| SpectrumEntryJson {
                    mu: format_ratio(&e.mu),
                    supports: e.supports.iter().map(VertexSubset::to_vec).collect(),
                })
                .collect(),
        };
        serde_json::to_value(dto).expect("report serializes")
    }
}

/// Computes the full spectrum with the default size cap.
pub fn spectrum(g: &Graph) -> Result<SpectrumReport> {
    spectrum_capped(g, DEFAULT_SPECTRUM_CAP)
}

/// Computes the full spectrum of a connected graph with `2 <= n <= cap`
/// vertices.
///
/// Candidates are the connected subsets `A` with `vol(A) <= vol(V)/2`
/// (inclusive); each is screened by the blocking lemma and then settled by
/// the feasibility engine at `mu = |boundary(A)| / vol(A)`. The eigenvalue 0
/// is inserted with the full vertex set as its representative.
pub fn spectrum_capped(g: &Graph, cap: usize) -> Result<SpectrumReport> {
    g.require_connected()?;
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::BelowMinimumOrder {
            family: "spectrum",
            minimum: 2,
            n,
        });
    }
    if n > cap {
        return Err(Error::OverCap { n, cap });
    }
    let half = rat(g.volume() as i64, 2);
    let candidates = g.enumerate_connected_subsets(&half)?;
    let verified: Vec<(Ratio, VertexSubset)> = candidates
        .into_par_iter()
        .filter_map(|a| {
            let mu = eigen::psi(g, &a).ok()?;
            if a.len() >= 2 && eigen::lemma_minor_check(g, &a).ok()? {
                // Blocked for every mu < 1, and connected |A| >= 2 has an
                // internal edge, so mu < 1 here.
                return None;
            }
            if a.len() == 2 {
                let mut it = a.iter();
                let (&u, &v) = (it.next().unwrap(), it.next().unwrap());
                if g.adjacent(u, v) && !eigen::lemma_important_check(g, &a).ok()? {
                    // Not certified; fall through to the exact check.
                }
            }
            let phi = binary_vector(g, &a).ok()?;
            eigen::is_eigenpair(g, &mu, &phi)
                .ok()
                .flatten()
                .map(|_| (mu, a))
        })
        .collect();

    let mut grouped: BTreeMap<Ratio, Vec<VertexSubset>> = BTreeMap::new();
    grouped.insert(Ratio::from_integer(0.into()), vec![g.full_subset()]);
    for (mu, a) in verified {
        grouped.entry(mu).or_default().push(a);
    }
    let entries = grouped
        .into_iter()
        .map(|(mu, mut supports)| {
            supports.sort_by(VertexSubset::cmp_canonical);
            SpectrumEntry { mu, supports }
        })
        .collect();
    Ok(SpectrumReport {
        n,
        vol: g.volume(),
        entries,
    })
}

/// Graph families with closed-form spectra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

impl Family {
    pub fn generate(&self, n: usize) -> Result<Graph> {
        match self {
            Family::Path => Graph::path(n),
            Family::Cycle => Graph::cycle(n),
            Family::Complete => Graph::complete(n),
        }
    }
}

/// Closed-form spectrum of `P_n`, `C_n` or `K_n`, sorted increasing.
///
/// Paths: `{0} ∪ {1/(2k+1) : 0 <= k <= floor(n/2)-1}` together with the
/// even-denominator terms `{1/(2r) : 1 <= r <= floor((n-2)/4)}`. Cycles:
/// `{0} ∪ {1/r : 1 <= r <= floor(n/2)}`. Complete graphs:
/// `{0} ∪ {(n-k)/(n-1) : 1 <= k <= floor(n/2)}`.
pub fn spectrum_closed_form(family: Family, n: usize) -> Result<Vec<Ratio>> {
    let mut out = vec![rat(0, 1)];
    match family {
        Family::Path => {
            if n < 2 {
                return Err(Error::BelowMinimumOrder {
                    family: "path",
                    minimum: 2,
                    n,
                });
            }
            for k in 0..n / 2 {
                out.push(rat(1, 2 * k as i64 + 1));
            }
            for r in 1..=(n.saturating_sub(2)) / 4 {
                out.push(rat(1, 2 * r as i64));
            }
        }
        Family::Cycle => {
            if n < 3 {
                return Err(Error::BelowMinimumOrder {
                    family: "cycle",
                    minimum: 3,
                    n,
                });
            }
            for r in 1..=n / 2 {
                out.push(rat(1, r as i64));
            }
        }
        Family::Complete => {
            if n < 2 {
                return Err(Error::BelowMinimumOrder {
                    family: "complete",
                    minimum: 2,
                    n,
                });
            }
            for k in 1..=n / 2 {
                out.push(rat((n - k) as i64, n as i64 - 1));
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// One isomorphism class in the census.
#[derive(Clone, Debug)]
pub struct CensusClass {
    /// Canonically labeled representative edge list.
    pub edges: Vec<(usize, usize)>,
    pub spectrum: Vec<Ratio>,
}

/// All connected graphs of one order, up to isomorphism.
#[derive(Clone, Debug)]
pub struct CensusOrder {
    pub n: usize,
    pub classes: Vec<CensusClass>,
    /// The largest number of distinct eigenvalues over the order.
    pub max_distinct: usize,
}

/// Census of connected graphs of orders `1..=max_n`.
#[derive(Clone, Debug)]
pub struct CensusReport {
    pub orders: Vec<CensusOrder>,
}

impl CensusReport {
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct OrderJson {
            n: usize,
            classes: Vec<ClassJson>,
            max_distinct: usize,
        }
        #[derive(Serialize)]
        struct ClassJson {
            edges: Vec<(usize, usize)>,
            spectrum: Vec<String>,
        }
        let orders: Vec<OrderJson> = self
            .orders
            .iter()
            .map(|o| OrderJson {
                n: o.n,
                classes: o
                    .classes
                    .iter()
                    .map(|c| ClassJson {
                        edges: c.edges.clone(),
                        spectrum: c.spectrum.iter().map(format_ratio).collect(),
                    })
                    .collect(),
                max_distinct: o.max_distinct,
            })
            .collect();
        serde_json::json!({ "orders": serde_json::to_value(orders).unwrap() })
    }
}

/// Pair index of `(i, j)`, `1 <= i < j <= n`, in lexicographic order.
fn pair_bit(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j);
    (i - 1) * n - (i - 1) * i / 2 + (j - i - 1)
}

/// Minimum adjacency bit-sequence over all vertex permutations.
fn canonical_code(n: usize, edges: &[(usize, usize)]) -> u32 {
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut best = u32::MAX;
    // Heap's algorithm over all n! permutations.
    let mut c = vec![0usize; n];
    let mut eval = |perm: &[usize]| {
        let mut code = 0u32;
        for &(u, v) in edges {
            let (a, b) = (perm[u - 1], perm[v - 1]);
            code |= 1 << pair_bit(a.min(b), a.max(b), n);
        }
        if code < best {
            best = code;
        }
    };
    eval(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            eval(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

fn edges_of_code(n: usize, code: u32) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            if code & (1 << pair_bit(i, j, n)) != 0 {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// Enumerates connected graphs of each order up to isomorphism (brute-force
/// canonical labeling) and computes their spectra and the per-order maximum
/// number of distinct eigenvalues.
pub fn census(max_n: usize) -> Result<CensusReport> {
    if !(1..=6).contains(&max_n) {
        return Err(Error::CensusOrderOutOfRange(max_n));
    }
    let mut orders = Vec::new();
    for n in 1..=max_n {
        if n == 1 {
            // The one-vertex graph: only the constant, sigma = {0}.
            orders.push(CensusOrder {
                n: 1,
                classes: vec![CensusClass {
                    edges: Vec::new(),
                    spectrum: vec![rat(0, 1)],
                }],
                max_distinct: 1,
            });
            continue;
        }
        let bits = n * (n - 1) / 2;
        let all_pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
            .collect();
        let codes: Vec<u32> = (0u32..1 << bits)
            .into_par_iter()
            .filter_map(|mask| {
                let edges: Vec<(usize, usize)> = all_pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask & (1 << k) != 0)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::new(n, &edges).ok()?;
                if !g.is_connected() {
                    return None;
                }
                Some(canonical_code(n, &edges))
            })
            .collect();
        let mut distinct: Vec<u32> = codes;
        distinct.sort_unstable();
        distinct.dedup();
        let classes: Vec<CensusClass> = distinct
            .into_par_iter()
            .map(|code| {
                let edges = edges_of_code(n, code);
                let g = Graph::new(n, &edges).expect("census representative");
                let report = spectrum(&g).expect("census graphs are small and connected");
                CensusClass {
                    edges,
                    spectrum: report.eigenvalues(),
                }
            })
            .collect();
        let max_distinct = classes.iter().map(|c| c.spectrum.len()).max().unwrap_or(0);
        orders.push(CensusOrder {
            n,
            classes,
            max_distinct,
        });
    }
    Ok(CensusReport { orders })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;
    use num_traits::{One, Zero};

    fn ratios(pairs: &[(i64, i64)]) -> Vec<Ratio> {
        pairs.iter().map(|&(p, q)| rat(p, q)).collect()
    }

    #[test]
    fn k2_spectrum() {
        let k2 = Graph::complete(2).unwrap();
        let report = spectrum(&k2).unwrap();
        assert_eq!(report.eigenvalues(), ratios(&[(0, 1), (1, 1)]));
        assert_eq!(report.supports_of(&rat(1, 1)).unwrap().len(), 2);
    }

    #[test]
    fn example_5g_contains_one_half_with_support_12() {
        let g = Graph::named(NamedGraph::Ex5G);
        let report = spectrum(&g).unwrap();
        let supports = report.supports_of(&rat(1, 2)).expect("1/2 present");
        assert_eq!(supports.len(), 1);
        assert_eq!(supports[0].to_vec(), vec![1, 2]);
    }

    #[test]
    fn closed_forms_match_the_paper() {
        assert_eq!(
            spectrum_closed_form(Family::Path, 4).unwrap(),
            ratios(&[(0, 1), (1, 3), (1, 1)])
        );
        assert_eq!(
            spectrum_closed_form(Family::Cycle, 6).unwrap(),
            ratios(&[(0, 1), (1, 3), (1, 2), (1, 1)])
        );
        assert_eq!(
            spectrum_closed_form(Family::Complete, 4).unwrap(),
            ratios(&[(0, 1), (2, 3), (1, 1)])
        );
        // First corrected even term appears at n = 6: 1/2 in sigma(P_6).
        assert!(spectrum_closed_form(Family::Path, 6)
            .unwrap()
            .contains(&rat(1, 2)));
        assert!(!spectrum_closed_form(Family::Path, 5)
            .unwrap()
            .contains(&rat(1, 2)));
        assert!(spectrum_closed_form(Family::Cycle, 2).is_err());
    }

    #[test]
    fn spectrum_bounds_and_gap() {
        let g = Graph::named(NamedGraph::G6);
        let report = spectrum(&g).unwrap();
        let eigs = report.eigenvalues();
        assert!(eigs.first().unwrap().is_zero());
        assert!(eigs.last().unwrap().is_one());
        let n = g.vertex_count() as i64;
        let gap = rat(4, n * n * (n - 1) * (n - 1));
        for pair in eigs.windows(2) {
            assert!(&pair[1] - &pair[0] >= gap);
        }
    }

    #[test]
    fn rejects_disconnected_and_oversized() {
        let g = Graph::new(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(matches!(spectrum(&g), Err(Error::Disconnected)));
        let p = Graph::path(25).unwrap();
        assert!(matches!(spectrum(&p), Err(Error::OverCap { .. })));
    }

    #[test]
    fn census_small_orders() {
        let report = census(4).unwrap();
        let class_counts: Vec<usize> = report.orders.iter().map(|o| o.classes.len()).collect();
        assert_eq!(class_counts, vec![1, 1, 2, 6]);
        let sharps: Vec<usize> = report.orders.iter().map(|o| o.max_distinct).collect();
        assert_eq!(sharps, vec![1, 2, 2, 3]);
        assert!(matches!(census(0), Err(Error::CensusOrderOutOfRange(0))));
        assert!(matches!(census(7), Err(Error::CensusOrderOutOfRange(7))));
    }

    #[test]
    fn census_order_4_spectra() {
        // Directly verified spectra of the six order-4 classes, as multisets.
        let report = census(4).unwrap();
        let order4 = &report.orders[3];
        let mut got: Vec<Vec<Ratio>> = order4.classes.iter().map(|c| c.spectrum.clone()).collect();
        got.sort();
        let mut want = vec![
            ratios(&[(0, 1), (1, 3), (1, 1)]), // P4
            ratios(&[(0, 1), (1, 2), (1, 1)]), // C4
            ratios(&[(0, 1), (1, 2), (1, 1)]), // triangle with a pendant
            ratios(&[(0, 1), (3, 5), (1, 1)]), // K4 minus an edge
            ratios(&[(0, 1), (2, 3), (1, 1)]), // K4
            ratios(&[(0, 1), (1, 1)]),         // star
        ];
        want.sort();
        assert_eq!(got, want);
    }
}
