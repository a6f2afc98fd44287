//! Strong and weak nodal domains, the maximum nodal-domain number
//! `nu(mu, G)`, and constructive maximum-nodal eigenvectors for paths and
//! cycles.

use num_traits::{One, Zero};

use crate::eigen::{self, binary_vector, ternary_vector, VertexFunction};
use crate::graph::{Graph, VertexSubset};
use crate::rational::{format_ratio, Ratio};
use crate::spectrum::{self, Family, SpectrumReport};
use crate::{Error, Result};

/// Default vertex cap for the exhaustive ternary search in [`nu`].
pub const DEFAULT_NU_CAP: usize = 12;

/// Nodal structure of a nonzero vertex function.
#[derive(Clone, Debug)]
pub struct NodalDecomposition {
    /// Connected components of the strictly positive set.
    pub positive_domains: Vec<VertexSubset>,
    /// Connected components of the strictly negative set.
    pub negative_domains: Vec<VertexSubset>,
    pub null: VertexSubset,
    /// `S`, the number of strong nodal domains.
    pub strong: usize,
    /// `W`, the number of weak nodal domains.
    pub weak: usize,
}

impl NodalDecomposition {
    /// All strong domains with their signs (`+1` / `-1`).
    pub fn signed_domains(&self) -> impl Iterator<Item = (i8, &VertexSubset)> {
        self.positive_domains
            .iter()
            .map(|d| (1i8, d))
            .chain(self.negative_domains.iter().map(|d| (-1i8, d)))
    }
}

/// Counts strong and weak nodal domains. Errors on the zero function.
///
/// A strong domain is a component of `{x > 0}` or `{x < 0}`; a weak domain
/// is a component of `{x >= 0}` containing a strictly positive vertex, or of
/// `{x <= 0}` containing a strictly negative one.
pub fn strong_count(g: &Graph, x: &VertexFunction) -> Result<NodalDecomposition> {
    if x.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let pattern = eigen::sign_pattern(g, x);
    let positive_domains = g.components_within(&pattern.positive);
    let negative_domains = g.components_within(&pattern.negative);
    let weak_of = |signed: &VertexSubset| {
        let closure = signed.union(&pattern.null);
        g.components_within(&closure)
            .into_iter()
            .filter(|comp| comp.iter().any(|&v| signed.contains(v)))
            .count()
    };
    let weak = weak_of(&pattern.positive) + weak_of(&pattern.negative);
    let strong = positive_domains.len() + negative_domains.len();
    Ok(NodalDecomposition {
        positive_domains,
        negative_domains,
        null: pattern.null,
        strong,
        weak,
    })
}

/// The number of weak nodal domains.
pub fn weak_count(g: &Graph, x: &VertexFunction) -> Result<usize> {
    Ok(strong_count(g, x)?.weak)
}

/// The largest strong nodal-domain count over all eigenvectors at `mu`,
/// with a maximizing witness. Uses the default search cap.
pub fn nu(g: &Graph, mu: &Ratio) -> Result<(usize, VertexFunction)> {
    nu_capped(g, mu, DEFAULT_NU_CAP)
}

/// [`nu`] with an explicit vertex cap.
pub fn nu_capped(g: &Graph, mu: &Ratio, cap: usize) -> Result<(usize, VertexFunction)> {
    if g.vertex_count() > cap {
        return Err(Error::OverCap {
            n: g.vertex_count(),
            cap,
        });
    }
    let report = spectrum::spectrum_capped(g, cap.max(spectrum::DEFAULT_SPECTRUM_CAP))?;
    nu_with_spectrum(g, &report, mu)
}

/// [`nu`] against a precomputed spectrum report.
///
/// It suffices to search ternary vectors `r (1_P - 1_N)`: the normalization
/// step behind the binary decomposition theorem preserves signs and hence
/// the strong count. Every nodal domain of such an eigenvector is itself a
/// connected binary eigenvector support at `mu`, so candidates are exactly
/// the sign-assigned families of pairwise disjoint supports in which two
/// same-signed members are never adjacent (they would merge into one
/// domain). Each candidate is screened by the `pi` membership bound and the
/// Rayleigh identity before the exact feasibility check.
pub fn nu_with_spectrum(
    g: &Graph,
    report: &SpectrumReport,
    mu: &Ratio,
) -> Result<(usize, VertexFunction)> {
    let supports = report
        .supports_of(mu)
        .ok_or_else(|| Error::NotAnEigenvalue(format_ratio(mu)))?;
    if mu.is_zero() {
        return Ok((1, binary_vector(g, &g.full_subset())?));
    }

    let k = supports.len();
    let disjoint: Vec<Vec<bool>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| supports[i].is_disjoint(&supports[j]))
                .collect()
        })
        .collect();
    let touching: Vec<Vec<bool>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    supports[i]
                        .iter()
                        .any(|&u| g.neighbors(u).iter().any(|&w| supports[j].contains(w)))
                })
                .collect()
        })
        .collect();

    let mut best: usize = 1;
    let mut witness = binary_vector(g, &supports[0])?;

    struct Search<'a> {
        g: &'a Graph,
        mu: &'a Ratio,
        supports: &'a [VertexSubset],
        disjoint: &'a [Vec<bool>],
        touching: &'a [Vec<bool>],
        chosen: Vec<(usize, i8)>,
        best: usize,
        witness: VertexFunction,
    }

    impl Search<'_> {
        fn admissible(&self, idx: usize, sign: i8) -> bool {
            self.chosen
                .iter()
                .all(|&(j, s)| self.disjoint[idx][j] && (s != sign || !self.touching[idx][j]))
        }

        fn candidate(&mut self) -> Result<()> {
            let mut p = VertexSubset::default();
            let mut n = VertexSubset::default();
            for &(idx, sign) in &self.chosen {
                if sign > 0 {
                    p = p.union(&self.supports[idx]);
                } else {
                    n = n.union(&self.supports[idx]);
                }
            }
            let x = ternary_vector(self.g, &p, &n)?;
            if !eigen::in_pi(self.g, &x)? {
                return Ok(());
            }
            if &eigen::energy(self.g, &x) != self.mu {
                return Ok(());
            }
            if eigen::is_eigenpair(self.g, self.mu, &x)?.is_some() {
                self.best = self.chosen.len();
                self.witness = x;
            }
            Ok(())
        }

        fn recurse(&mut self, start: usize) -> Result<()> {
            if self.chosen.len() > self.best {
                self.candidate()?;
            }
            for idx in start..self.supports.len() {
                if self.chosen.len() + (self.supports.len() - idx) <= self.best {
                    break;
                }
                // Global sign symmetry: the first chosen support is positive.
                let signs: &[i8] = if self.chosen.is_empty() {
                    &[1]
                } else {
                    &[1, -1]
                };
                for &sign in signs {
                    if self.admissible(idx, sign) {
                        self.chosen.push((idx, sign));
                        self.recurse(idx + 1)?;
                        self.chosen.pop();
                    }
                }
            }
            Ok(())
        }
    }

    let mut search = Search {
        g,
        mu,
        supports,
        disjoint: &disjoint,
        touching: &touching,
        chosen: Vec::new(),
        best,
        witness: witness.clone(),
    };
    search.recurse(0)?;
    best = search.best;
    witness = search.witness;
    Ok((best, witness))
}

/// Closed-form `nu` for paths, cycles and complete graphs.
///
/// Paths: `nu(1/(2r+1), P_n) = floor((n+2r)/(2r+1))` for `n >= 2r+2` and
/// `nu(1/(2r), P_n) = floor((n-2)/(2r)) - 1` for `n >= 4r+2`. Cycles:
/// `nu(1/r, C_n) = 2 floor(n/(2r))`. Complete graphs: `nu(mu, K_n) = 2`.
pub fn nu_closed_form(family: Family, n: usize, mu: &Ratio) -> Result<usize> {
    let sigma = spectrum::spectrum_closed_form(family, n)?;
    if !sigma.contains(mu) {
        return Err(Error::NotAnEigenvalue(format_ratio(mu)));
    }
    let out_of_range = || Error::OutOfTheoremRange {
        n,
        mu: format_ratio(mu),
    };
    if mu.is_zero() {
        return Err(out_of_range());
    }
    match family {
        Family::Path => {
            if !mu.numer().is_one() {
                return Err(out_of_range());
            }
            let denom: usize = mu.denom().try_into().map_err(|_| out_of_range())?;
            if denom % 2 == 1 {
                let r = (denom - 1) / 2;
                if n < 2 * r + 2 {
                    return Err(out_of_range());
                }
                Ok((n + 2 * r) / (2 * r + 1))
            } else {
                let r = denom / 2;
                if n < 4 * r + 2 {
                    return Err(out_of_range());
                }
                Ok((n - 2) / (2 * r) - 1)
            }
        }
        Family::Cycle => {
            if !mu.numer().is_one() {
                return Err(out_of_range());
            }
            let r: usize = mu.denom().try_into().map_err(|_| out_of_range())?;
            if n < 2 * r {
                return Err(out_of_range());
            }
            Ok(2 * (n / (2 * r)))
        }
        Family::Complete => Ok(2),
    }
}

/// Builds an eigenvector of `P_n` or `C_n` at `mu` attaining the
/// closed-form maximum number of strong nodal domains. The layout places
/// end blocks, interior constant blocks of length `1/mu`, and zero runs
/// exactly as in the constructive proofs, with signs alternating from block
/// to block and across the zero run.
pub fn build_max_nodal(family: Family, n: usize, mu: &Ratio) -> Result<VertexFunction> {
    let count = nu_closed_form(family, n, mu)?;
    let out_of_range = || Error::OutOfTheoremRange {
        n,
        mu: format_ratio(mu),
    };
    let denom: usize = mu.denom().try_into().map_err(|_| out_of_range())?;
    let mut signs: Vec<i8> = Vec::with_capacity(n);
    match family {
        Family::Path => {
            if denom % 2 == 1 {
                // (A) blocks of r+1 on both ends, (B) blocks of 2r+1 between,
                // zero run just before the final block.
                let r = (denom - 1) / 2;
                let zeros = n + 2 * r - (2 * r + 1) * count;
                let mut sign = 1i8;
                signs.extend(std::iter::repeat_n(sign, r + 1));
                for _ in 0..count.saturating_sub(2) {
                    sign = -sign;
                    signs.extend(std::iter::repeat_n(sign, 2 * r + 1));
                }
                signs.extend(std::iter::repeat_n(0, zeros));
                sign = -sign;
                signs.extend(std::iter::repeat_n(sign, r + 1));
            } else {
                // Zero runs of length >= r+1 on both ends, (B) blocks of 2r
                // between.
                let r = denom / 2;
                let zeros = n - 2 * r * count;
                signs.extend(std::iter::repeat_n(0, r + 1));
                let mut sign = 1i8;
                for _ in 0..count {
                    signs.extend(std::iter::repeat_n(sign, 2 * r));
                    sign = -sign;
                }
                signs.extend(std::iter::repeat_n(0, zeros - (r + 1)));
            }
        }
        Family::Cycle => {
            let r = denom;
            let mut sign = 1i8;
            for _ in 0..count {
                signs.extend(std::iter::repeat_n(sign, r));
                sign = -sign;
            }
            signs.extend(std::iter::repeat_n(0, n - r * count));
        }
        Family::Complete => return Err(out_of_range()),
    }
    debug_assert_eq!(signs.len(), n);
    let g = family.generate(n)?;
    let positive = VertexSubset::from_iter_unchecked((1..=n).filter(|&v| signs[v - 1] > 0));
    let negative = VertexSubset::from_iter_unchecked((1..=n).filter(|&v| signs[v - 1] < 0));
    let x = ternary_vector(&g, &positive, &negative)?;
    debug_assert!(
        eigen::is_eigenpair(&g, mu, &x).is_ok_and(|c| c.is_some()),
        "constructed vector must verify at mu = {}",
        format_ratio(mu)
    );
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;
    use crate::rational::{int, rat};

    fn subset(g: &Graph, vs: &[usize]) -> VertexSubset {
        VertexSubset::new(g, vs.iter().copied()).unwrap()
    }

    #[test]
    fn strong_and_weak_counts_on_10g() {
        let g = Graph::named(NamedGraph::Ex10G);
        let phi = ternary_vector(
            &g,
            &subset(&g, &[5, 6, 7, 8, 9, 10]),
            &subset(&g, &[1, 2, 3, 4]),
        )
        .unwrap();
        let d = strong_count(&g, &phi).unwrap();
        assert_eq!(d.strong, 3);
        assert_eq!(d.weak, 3);
    }

    #[test]
    fn counts_on_simple_patterns() {
        let p5 = Graph::path(5).unwrap();
        let x = VertexFunction::from_values([1, -1, 1, -1, 1].iter().map(|&p| int(p)).collect());
        assert_eq!(strong_count(&p5, &x).unwrap().strong, 5);

        let p3 = Graph::path(3).unwrap();
        let x = VertexFunction::from_values([1, -1, 1].iter().map(|&p| int(p)).collect());
        assert_eq!(weak_count(&p3, &x).unwrap(), 3);

        let g = Graph::named(NamedGraph::G6);
        let constant = binary_vector(&g, &g.full_subset()).unwrap();
        assert_eq!(weak_count(&g, &constant).unwrap(), 1);
        let d = strong_count(&g, &constant).unwrap();
        assert_eq!(d.strong, 1);

        let binary = binary_vector(&g, &subset(&g, &[2, 5, 6])).unwrap();
        assert_eq!(strong_count(&g, &binary).unwrap().strong, 1);

        assert!(matches!(
            strong_count(&g, &VertexFunction::zero(6)),
            Err(Error::ZeroFunction)
        ));
    }

    #[test]
    fn weak_le_strong() {
        let g = Graph::named(NamedGraph::Ex10G);
        let phi = ternary_vector(&g, &subset(&g, &[5, 7, 8]), &subset(&g, &[1, 2, 3, 4])).unwrap();
        let d = strong_count(&g, &phi).unwrap();
        assert!(d.weak <= d.strong);
    }

    #[test]
    fn nu_on_the_named_examples() {
        let g5 = Graph::named(NamedGraph::Ex5G);
        let (count, witness) = nu(&g5, &rat(1, 2)).unwrap();
        assert_eq!(count, 1);
        assert!(eigen::is_eigenpair(&g5, &rat(1, 2), &witness)
            .unwrap()
            .is_some());

        let (count, _) = nu(&g5, &rat(0, 1)).unwrap();
        assert_eq!(count, 1);

        assert!(matches!(
            nu(&g5, &rat(1, 3)),
            Err(Error::NotAnEigenvalue(_))
        ));
    }

    #[test]
    fn nu_matches_naive_ternary_search_on_small_graphs() {
        // Oracle: enumerate all ternary sign patterns directly.
        let naive_nu = |g: &Graph, mu: &Ratio| -> usize {
            let n = g.vertex_count();
            let mut best = 0;
            for mask in 1..3usize.pow(n as u32) {
                let mut digits = mask;
                let mut pos = Vec::new();
                let mut neg = Vec::new();
                for v in 1..=n {
                    match digits % 3 {
                        1 => pos.push(v),
                        2 => neg.push(v),
                        _ => {}
                    }
                    digits /= 3;
                }
                let p = VertexSubset::from_iter_unchecked(pos);
                let q = VertexSubset::from_iter_unchecked(neg);
                let x = match ternary_vector(g, &p, &q) {
                    Ok(x) => x,
                    Err(_) => continue,
                };
                if eigen::is_eigenpair(g, mu, &x).unwrap().is_some() {
                    best = best.max(strong_count(g, &x).unwrap().strong);
                }
            }
            best
        };
        for g in [
            Graph::path(5).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::named(NamedGraph::Ex5G),
        ] {
            let report = spectrum::spectrum(&g).unwrap();
            for mu in report.eigenvalues() {
                if mu.is_zero() {
                    continue;
                }
                let (fast, witness) = nu_with_spectrum(&g, &report, &mu).unwrap();
                assert_eq!(fast, naive_nu(&g, &mu), "graph {g:?} at mu={mu}");
                assert!(eigen::is_eigenpair(&g, &mu, &witness).unwrap().is_some());
                assert_eq!(strong_count(&g, &witness).unwrap().strong, fast);
            }
        }
    }

    #[test]
    fn closed_forms_match_the_theorems() {
        assert_eq!(nu_closed_form(Family::Path, 7, &rat(1, 3)).unwrap(), 3);
        assert_eq!(nu_closed_form(Family::Cycle, 6, &rat(1, 3)).unwrap(), 2);
        assert_eq!(nu_closed_form(Family::Complete, 5, &rat(3, 4)).unwrap(), 2);
        assert_eq!(nu_closed_form(Family::Path, 5, &rat(1, 1)).unwrap(), 5);
        assert!(nu_closed_form(Family::Path, 7, &rat(1, 4)).is_err());
        assert!(nu_closed_form(Family::Path, 7, &rat(0, 1)).is_err());
    }

    #[test]
    fn build_max_nodal_examples() {
        // Path of 10 at 1/3: four domains, pattern ++ --- +++ --.
        let x = build_max_nodal(Family::Path, 10, &rat(1, 3)).unwrap();
        let g = Graph::path(10).unwrap();
        assert!(eigen::is_eigenpair(&g, &rat(1, 3), &x).unwrap().is_some());
        assert_eq!(strong_count(&g, &x).unwrap().strong, 4);
        let signs: Vec<i8> = (1..=10)
            .map(|v| {
                use num_traits::Signed;
                let val = x.get(v);
                if val.is_positive() {
                    1
                } else if val.is_negative() {
                    -1
                } else {
                    0
                }
            })
            .collect();
        assert_eq!(signs, vec![1, 1, -1, -1, -1, 1, 1, 1, -1, -1]);

        // mu = 1 alternates everywhere.
        let x = build_max_nodal(Family::Path, 6, &rat(1, 1)).unwrap();
        let g = Graph::path(6).unwrap();
        assert_eq!(strong_count(&g, &x).unwrap().strong, 6);

        // Cycle of 8 at 1/2: four domains.
        let x = build_max_nodal(Family::Cycle, 8, &rat(1, 2)).unwrap();
        let g = Graph::cycle(8).unwrap();
        assert!(eigen::is_eigenpair(&g, &rat(1, 2), &x).unwrap().is_some());
        assert_eq!(strong_count(&g, &x).unwrap().strong, 4);
    }
}
