//! Algebraic multiplicity via the rank characterization, maximal fundamental
//! eigenvector systems, and the convex level-set decomposition of arbitrary
//! eigenvectors into binary ones.
//!
//! The algebraic multiplicity of `mu` equals the dimension of the span of
//! its eigenvector set, and that span is generated by the connected binary
//! eigenvector supports (a disconnected support is a positive combination of
//! its components). The rank is computed by exact rational Gaussian
//! elimination over the indicator vectors.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::eigen::{self, binary_vector, VertexFunction};
use crate::graph::{Graph, VertexSubset};
use crate::rational::{format_ratio, from_usize, Ratio};
use crate::spectrum::{self, SpectrumReport};
use crate::{Error, Result};

/// A maximal independent family of binary eigenvectors at one eigenvalue.
#[derive(Clone, Debug)]
pub struct FundamentalSystem {
    pub mu: Ratio,
    /// Supports of the member vectors `1_D / vol(D)`, linearly independent.
    pub members: Vec<VertexSubset>,
    /// `am(mu)`, the rank of all binary eigenvector indicators at `mu`.
    pub rank: usize,
}

impl FundamentalSystem {
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Dto {
            mu: String,
            am: usize,
            system: Vec<Vec<usize>>,
        }
        serde_json::to_value(Dto {
            mu: format_ratio(&self.mu),
            am: self.rank,
            system: self.members.iter().map(VertexSubset::to_vec).collect(),
        })
        .expect("serializes")
    }
}

/// Incremental exact rank tracker over row vectors.
pub(crate) struct RowBasis {
    rows: Vec<Vec<Ratio>>, // reduced, each with a distinct leading column
}

impl RowBasis {
    pub(crate) fn new() -> Self {
        RowBasis { rows: Vec::new() }
    }

    /// Reduces `row` against the basis; if a nonzero remainder survives it
    /// joins the basis and the method returns true.
    pub(crate) fn insert(&mut self, mut row: Vec<Ratio>) -> bool {
        for basis_row in &self.rows {
            let lead = basis_row.iter().position(|c| !c.is_zero()).unwrap();
            if !row[lead].is_zero() {
                let factor = &row[lead] / &basis_row[lead];
                for (r, b) in row.iter_mut().zip(basis_row) {
                    *r -= &factor * b;
                }
            }
        }
        if row.iter().all(Zero::is_zero) {
            false
        } else {
            self.rows.push(row);
            true
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Computes `am(mu)` and a maximal fundamental system, greedy in canonical
/// support order.
pub fn algebraic_multiplicity(g: &Graph, mu: &Ratio) -> Result<(usize, FundamentalSystem)> {
    let report = spectrum::spectrum(g)?;
    algebraic_multiplicity_with_spectrum(g, &report, mu)
}

/// [`algebraic_multiplicity`] against a precomputed spectrum report.
pub fn algebraic_multiplicity_with_spectrum(
    g: &Graph,
    report: &SpectrumReport,
    mu: &Ratio,
) -> Result<(usize, FundamentalSystem)> {
    let supports = report
        .supports_of(mu)
        .ok_or_else(|| Error::NotAnEigenvalue(format_ratio(mu)))?;
    let n = g.vertex_count();
    let mut basis = RowBasis::new();
    let mut members = Vec::new();
    for support in supports {
        // Rank is invariant under the positive row scaling 1_D vs 1_D/vol(D).
        let row: Vec<Ratio> = (1..=n)
            .map(|v| {
                if support.contains(v) {
                    Ratio::one()
                } else {
                    Ratio::zero()
                }
            })
            .collect();
        if basis.insert(row) {
            members.push(support.clone());
        }
    }
    let rank = basis.rank();
    Ok((
        rank,
        FundamentalSystem {
            mu: mu.clone(),
            members,
            rank,
        },
    ))
}

/// One term of a signed convex decomposition into binary eigenvectors.
#[derive(Clone, Debug)]
pub struct TriangleTerm {
    /// Signed coefficient; the absolute values over all terms sum to 1.
    pub coefficient: Ratio,
    pub support: VertexSubset,
}

/// Decomposes a normalized eigenvector into a signed convex combination of
/// binary eigenvectors via superlevel sets within each nodal domain:
/// `x = sum_t coefficient_t * 1_{D_t} / vol(D_t)` exactly.
///
/// Every produced support is itself re-verified as an eigenvector support at
/// `mu`. Errors when `(mu, x)` is not an eigenpair or `x` is not normalized.
pub fn triangle_decompose(g: &Graph, mu: &Ratio, x: &VertexFunction) -> Result<Vec<TriangleTerm>> {
    if !eigen::one_norm(g, x).is_one() {
        return Err(Error::NotNormalized);
    }
    if eigen::is_eigenpair(g, mu, x)?.is_none() {
        return Err(Error::NotAnEigenpair);
    }
    let decomposition = crate::nodal::strong_count(g, x)?;
    let mut terms = Vec::new();
    for (sign, domain) in decomposition.signed_domains() {
        let mut levels: Vec<Ratio> = domain.iter().map(|&v| x.get(v).abs()).collect();
        levels.sort();
        levels.dedup();
        let mut previous = Ratio::zero();
        for level in levels {
            let superlevel = VertexSubset::from_iter_unchecked(
                domain.iter().copied().filter(|&v| x.get(v).abs() >= level),
            );
            let coefficient = (&level - &previous) * from_usize(g.subset_volume(&superlevel));
            let signed = if sign > 0 { coefficient } else { -coefficient };
            if eigen::is_eigenpair(g, mu, &binary_vector(g, &superlevel)?)?.is_none() {
                return Err(Error::NotAnEigenpair);
            }
            terms.push(TriangleTerm {
                coefficient: signed,
                support: superlevel,
            });
            previous = level;
        }
    }
    debug_assert_eq!(
        terms.iter().map(|t| t.coefficient.abs()).sum::<Ratio>(),
        Ratio::one()
    );
    Ok(terms)
}

/// Rebuilds the vertex function described by decomposition terms.
pub fn reconstruct(g: &Graph, terms: &[TriangleTerm]) -> Result<VertexFunction> {
    let mut x = VertexFunction::zero(g.vertex_count());
    for term in terms {
        let b = binary_vector(g, &term.support)?;
        for v in 1..=g.vertex_count() {
            let add = b.get(v) * &term.coefficient;
            x.set(v, x.get(v) + add);
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;
    use crate::rational::rat;

    fn subset(g: &Graph, vs: &[usize]) -> VertexSubset {
        VertexSubset::new(g, vs.iter().copied()).unwrap()
    }

    #[test]
    fn g6_table_of_multiplicities() {
        let g = Graph::named(NamedGraph::G6);
        let report = spectrum::spectrum(&g).unwrap();
        let expected = [
            (rat(0, 1), 1),
            (rat(2, 5), 2),
            (rat(5, 9), 1),
            (rat(3, 5), 4),
            (rat(2, 3), 1),
            (rat(5, 7), 4),
            (rat(3, 4), 2),
            (rat(7, 9), 1),
            (rat(1, 1), 6),
        ];
        for (mu, am) in expected {
            let (rank, system) = algebraic_multiplicity_with_spectrum(&g, &report, &mu).unwrap();
            assert_eq!(rank, am, "am({mu})");
            assert_eq!(system.members.len(), am);
            assert!(rank <= report.supports_of(&mu).unwrap().len());
        }
    }

    #[test]
    fn extremes_are_n_and_one() {
        for g in [Graph::path(5).unwrap(), Graph::named(NamedGraph::Ex5G)] {
            let n = g.vertex_count();
            let (am1, sys1) = algebraic_multiplicity(&g, &rat(1, 1)).unwrap();
            assert_eq!(am1, n);
            assert!(sys1.members.iter().all(|m| m.len() == 1));
            let (am0, sys0) = algebraic_multiplicity(&g, &rat(0, 1)).unwrap();
            assert_eq!(am0, 1);
            assert_eq!(sys0.members[0].len(), n);
        }
    }

    #[test]
    fn rejects_non_eigenvalues() {
        let g = Graph::named(NamedGraph::G6);
        assert!(matches!(
            algebraic_multiplicity(&g, &rat(1, 2)),
            Err(Error::NotAnEigenvalue(_))
        ));
    }

    #[test]
    fn binary_vector_decomposes_to_itself() {
        let g = Graph::named(NamedGraph::G6);
        let a = subset(&g, &[2, 5, 6]);
        let x = binary_vector(&g, &a).unwrap();
        let terms = triangle_decompose(&g, &rat(5, 9), &x).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].coefficient, rat(1, 1));
        assert_eq!(terms[0].support, a);
    }

    #[test]
    fn ternary_10g_eigenvector_decomposes_with_volume_weights() {
        let g = Graph::named(NamedGraph::Ex10G);
        let x = eigen::ternary_vector(
            &g,
            &subset(&g, &[5, 6, 7, 8, 9, 10]),
            &subset(&g, &[1, 2, 3, 4]),
        )
        .unwrap();
        let terms = triangle_decompose(&g, &rat(1, 7), &x).unwrap();
        let mut labeled: Vec<(Vec<usize>, Ratio)> = terms
            .iter()
            .map(|t| (t.support.to_vec(), t.coefficient.clone()))
            .collect();
        labeled.sort();
        assert_eq!(
            labeled,
            vec![
                (vec![1, 2, 3, 4], rat(-1, 2)),
                (vec![5, 7, 8], rat(1, 4)),
                (vec![6, 9, 10], rat(1, 4)),
            ]
        );
        let rebuilt = reconstruct(&g, &terms).unwrap();
        assert_eq!(rebuilt, x);
    }

    #[test]
    fn decompose_requires_normalized_eigenpairs() {
        let g = Graph::named(NamedGraph::G6);
        let x = binary_vector(&g, &subset(&g, &[2, 5, 6])).unwrap();
        assert!(matches!(
            triangle_decompose(&g, &rat(5, 9), &x.scale(&rat(2, 1))),
            Err(Error::NotNormalized)
        ));
        assert!(matches!(
            triangle_decompose(&g, &rat(1, 2), &x),
            Err(Error::NotAnEigenpair)
        ));
    }

    #[test]
    fn multi_level_decomposition_reconstructs() {
        // An eigenvector with two levels inside one nodal domain: on P4 at
        // mu = 1/3 take x = (2,1,0,0)/4 … check first that it is an
        // eigenpair, then that the level sets rebuild it.
        let g = Graph::path(4).unwrap();
        let x = VertexFunction::from_values(vec![rat(2, 4), rat(1, 4), rat(0, 1), rat(0, 1)]);
        let x = eigen::normalize(&g, &x).unwrap();
        if eigen::is_eigenpair(&g, &rat(1, 3), &x).unwrap().is_some() {
            let terms = triangle_decompose(&g, &rat(1, 3), &x).unwrap();
            assert!(terms.len() >= 2);
            assert_eq!(reconstruct(&g, &terms).unwrap(), x);
        }
    }
}
