//! Cheeger constants, k-way Cheeger constants, optimal Cheeger cuts, and
//! minimax sandwich bounds.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::eigen::{self, binary_vector, VertexFunction};
use crate::graph::{Graph, VertexSubset};
use crate::multiplicity::RowBasis;
use crate::rational::{format_ratio, from_usize, Ratio};
use crate::simplex::{Cmp, Lp, LpOutcome};
use crate::spectrum;
use crate::{Error, Result};

/// Default refusal threshold for the exponential cut enumerations.
pub const DEFAULT_CUT_CAP: usize = 20;

/// `h(G) = min over proper nonempty S of |boundary(S)| / min(vol S, vol Sc)`,
/// by exact enumeration over the `2^(n-1)` complement-classes.
pub fn cheeger_h(g: &Graph) -> Result<Ratio> {
    cheeger_h_capped(g, DEFAULT_CUT_CAP)
}

/// [`cheeger_h`] with an explicit vertex cap.
pub fn cheeger_h_capped(g: &Graph, cap: usize) -> Result<Ratio> {
    g.require_connected()?;
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::BelowMinimumOrder {
            family: "cheeger",
            minimum: 2,
            n,
        });
    }
    if n > cap || n > 63 {
        return Err(Error::OverCap {
            n,
            cap: cap.min(63),
        });
    }
    let vol: Vec<usize> = (1..=n).map(|v| g.degree(v)).collect();
    let total = g.volume();
    let mut best: Option<Ratio> = None;
    // Vertex 1 stays inside S; complements are equivalent.
    for mask in 0u64..(1 << (n - 1)) {
        let mask = (mask << 1) | 1;
        if mask == (1 << n) - 1 {
            continue;
        }
        let vol_s: usize = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| vol[i]).sum();
        let boundary = g
            .edges()
            .iter()
            .filter(|&&(i, j)| (mask >> (i - 1) & 1) != (mask >> (j - 1) & 1))
            .count();
        let ratio = from_usize(boundary) / from_usize(vol_s.min(total - vol_s));
        if best.as_ref().is_none_or(|b| ratio < *b) {
            best = Some(ratio);
        }
    }
    Ok(best.expect("n >= 2 has a proper cut"))
}

/// `h_k`: the minimum over families of `k` pairwise-disjoint nonempty
/// subsets of the largest `|boundary(S_i)| / vol(S_i)`.
///
/// Computed by an exact dynamic program over vertex masks (`3^n` submask
/// steps), so it is limited to small graphs.
pub fn k_way_cheeger(g: &Graph, k: usize) -> Result<Ratio> {
    k_way_cheeger_capped(g, k, 16)
}

/// [`k_way_cheeger`] with an explicit vertex cap.
pub fn k_way_cheeger_capped(g: &Graph, k: usize, cap: usize) -> Result<Ratio> {
    g.require_connected()?;
    let n = g.vertex_count();
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    if n > cap || n > 24 {
        return Err(Error::OverCap {
            n,
            cap: cap.min(24),
        });
    }
    let size = 1usize << n;
    // psi for every nonempty mask; the full set has empty boundary.
    let mut psi = vec![Ratio::zero(); size];
    let edge_bits: Vec<(usize, usize)> = g.edges().iter().map(|&(i, j)| (i - 1, j - 1)).collect();
    let degree: Vec<usize> = (1..=n).map(|v| g.degree(v)).collect();
    #[allow(clippy::needless_range_loop)] // the mask is the subset itself
    for mask in 1..size {
        let vol: usize = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| degree[i])
            .sum();
        let boundary = edge_bits
            .iter()
            .filter(|&&(i, j)| (mask >> i & 1) != (mask >> j & 1))
            .count();
        psi[mask] = from_usize(boundary) / from_usize(vol);
    }

    // best[mask] at stage j: the smallest achievable max-psi using exactly j
    // disjoint nonempty subsets inside `mask`; None = impossible.
    let mut best: Vec<Option<Ratio>> = vec![Some(Ratio::zero()); size];
    for _stage in 1..=k {
        let mut next: Vec<Option<Ratio>> = vec![None; size];
        for mask in 1usize..size {
            let low = mask & mask.wrapping_neg();
            // Either the lowest vertex of `mask` is unused…
            let mut candidate = next[mask & !low].clone();
            // …or it belongs to the subset chosen at this stage.
            let rest = mask & !low;
            let mut sub = rest;
            loop {
                let s = sub | low;
                if let Some(prev) = &best[mask & !s] {
                    let value = psi[s].clone().max(prev.clone());
                    if candidate.as_ref().is_none_or(|c| value < *c) {
                        candidate = Some(value);
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
            next[mask] = candidate;
        }
        next[0] = None;
        best = next;
    }
    best[size - 1].clone().ok_or(Error::KOutOfRange { k, n })
}

/// One optimal support in a [`CutReport`].
#[derive(Clone, Debug)]
pub struct OptimalCut {
    pub support: VertexSubset,
    /// `delta_0 = vol(D^0)`, the volume left outside the support.
    pub delta_zero: usize,
    pub null_set: VertexSubset,
}

/// All Cheeger cuts of a graph (binary eigenvector supports at `h(G)`) and
/// the optimal ones, i.e. those of minimal null-set volume.
#[derive(Clone, Debug)]
pub struct CutReport {
    pub h_value: Ratio,
    pub cuts: Vec<VertexSubset>,
    pub optimal: Vec<OptimalCut>,
}

impl CutReport {
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct OptJson {
            support: Vec<usize>,
            delta_zero: usize,
            null_set: Vec<usize>,
        }
        #[derive(Serialize)]
        struct Dto {
            h: String,
            cuts: Vec<Vec<usize>>,
            optimal: Vec<OptJson>,
        }
        serde_json::to_value(Dto {
            h: format_ratio(&self.h_value),
            cuts: self.cuts.iter().map(VertexSubset::to_vec).collect(),
            optimal: self
                .optimal
                .iter()
                .map(|o| OptJson {
                    support: o.support.to_vec(),
                    delta_zero: o.delta_zero,
                    null_set: o.null_set.to_vec(),
                })
                .collect(),
        })
        .expect("serializes")
    }
}

/// Finds every Cheeger cut and the optimal ones.
///
/// Every subset `A` with `vol(A) <= vol(V)/2` (connected or not) is a
/// candidate; `1_A / vol(A)` can only be an eigenvector at `h(G)` when
/// `psi(A) = h(G)`, and each such candidate is settled exactly by the
/// feasibility engine. Optimality means maximal support volume, i.e.
/// minimal `delta_0`.
pub fn optimal_cheeger_cut(g: &Graph) -> Result<CutReport> {
    optimal_cheeger_cut_capped(g, DEFAULT_CUT_CAP)
}

/// [`optimal_cheeger_cut`] with an explicit vertex cap.
pub fn optimal_cheeger_cut_capped(g: &Graph, cap: usize) -> Result<CutReport> {
    let h = cheeger_h_capped(g, cap)?;
    let n = g.vertex_count();
    let total = g.volume();
    let degree: Vec<usize> = (1..=n).map(|v| g.degree(v)).collect();
    let candidates: Vec<u64> = (1u64..(1 << n))
        .filter(|mask| {
            let vol: usize = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| degree[i])
                .sum();
            2 * vol <= total
        })
        .collect();
    let mut cuts: Vec<VertexSubset> = candidates
        .into_par_iter()
        .filter_map(|mask| {
            let a = VertexSubset::from_iter_unchecked((1..=n).filter(|v| mask >> (v - 1) & 1 == 1));
            if eigen::psi(g, &a).ok()? != h {
                return None;
            }
            let phi = binary_vector(g, &a).ok()?;
            eigen::is_eigenpair(g, &h, &phi).ok().flatten().map(|_| a)
        })
        .collect();
    cuts.sort_by(VertexSubset::cmp_canonical);
    let best_volume = cuts
        .iter()
        .map(|a| g.subset_volume(a))
        .max()
        .expect("h(G) is attained by some cut");
    let optimal = cuts
        .iter()
        .filter(|a| g.subset_volume(a) == best_volume)
        .map(|a| OptimalCut {
            support: a.clone(),
            delta_zero: total - best_volume,
            null_set: g.complement(a),
        })
        .collect();
    Ok(CutReport {
        h_value: h,
        cuts,
        optimal,
    })
}

/// Exact infimum of the energy `I` over `span(basis) ∩ X`.
///
/// The sphere `X` is piecewise linear, so the infimum is found by fixing a
/// sign orthant, linearizing (`t_e >= ±(x_i - x_j)`, `sum d_i s_i x_i = 1`,
/// `s_i x_i >= 0`) and solving one exact LP per orthant; the answer is the
/// minimum over the feasible orthants. Sign symmetry halves the orthant
/// count.
pub fn min_i_on_subspace(g: &Graph, basis: &[VertexFunction]) -> Result<Ratio> {
    let n = g.vertex_count();
    if basis.is_empty() {
        return Err(Error::EmptyBasis);
    }
    for b in basis {
        if b.len() != n {
            return Err(Error::WrongFunctionLength {
                got: b.len(),
                expected: n,
            });
        }
    }
    let mut rank = RowBasis::new();
    for b in basis {
        if !rank.insert(b.values().to_vec()) {
            return Err(Error::DependentBasis);
        }
    }
    let m = basis.len();
    let edges = g.edges();

    let orthants: Vec<u64> = (0..(1u64 << (n - 1))).collect();
    let best = orthants
        .into_par_iter()
        .filter_map(|bits| {
            // Vertex 1 is nonnegative; the rest follow the bits.
            let sign = |v: usize| -> i64 {
                if v == 1 {
                    1
                } else if bits >> (v - 2) & 1 == 1 {
                    -1
                } else {
                    1
                }
            };
            let mut lp = Lp::new(m + edges.len());
            for e in 0..edges.len() {
                lp.objective[m + e] = Ratio::one();
                lp.bounds[m + e] = (Some(Ratio::zero()), None);
            }
            // t_e >= x_i - x_j and t_e >= x_j - x_i.
            for (e, &(i, j)) in edges.iter().enumerate() {
                for flip in [1i64, -1] {
                    let mut row = vec![Ratio::zero(); m + edges.len()];
                    for (k, b) in basis.iter().enumerate() {
                        row[k] = (b.get(i) - b.get(j)) * Ratio::from_integer(flip.into());
                    }
                    row[m + e] = -Ratio::one();
                    lp.add_row(row, Cmp::Le, Ratio::zero());
                }
            }
            // Orthant: s_v x_v >= 0.
            for v in 1..=n {
                let mut row = vec![Ratio::zero(); m + edges.len()];
                for (k, b) in basis.iter().enumerate() {
                    row[k] = b.get(v) * Ratio::from_integer(sign(v).into());
                }
                lp.add_row(row, Cmp::Ge, Ratio::zero());
            }
            // Norm: sum d_v s_v x_v = 1.
            let mut row = vec![Ratio::zero(); m + edges.len()];
            for (k, b) in basis.iter().enumerate() {
                row[k] = (1..=n)
                    .map(|v| {
                        b.get(v) * from_usize(g.degree(v)) * Ratio::from_integer(sign(v).into())
                    })
                    .sum();
            }
            lp.add_row(row, Cmp::Eq, Ratio::one());
            match lp.solve() {
                LpOutcome::Optimal { value, .. } => Some(value),
                LpOutcome::Infeasible => None,
                LpOutcome::Unbounded => unreachable!("I >= 0 on X"),
            }
        })
        .min();
    best.ok_or(Error::DependentBasis)
}

/// Resolution of a minimax value `c_k` from sandwich bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CkResolution {
    Exact(Ratio),
    /// The eigenvalues lying in `(lower, upper]`.
    Candidates(Vec<Ratio>),
}

/// Sandwich bounds for the k-th minimax value: `lower <= c_k <= h_k`, with
/// the candidate eigenvalues in between.
#[derive(Clone, Debug)]
pub struct CkBounds {
    pub k: usize,
    pub lower: Ratio,
    pub upper: Ratio,
    pub resolved: CkResolution,
}

impl CkBounds {
    pub fn to_json(&self) -> serde_json::Value {
        let resolved = match &self.resolved {
            CkResolution::Exact(r) => serde_json::json!({ "exact": format_ratio(r) }),
            CkResolution::Candidates(c) => serde_json::json!({
                "candidates": c.iter().map(format_ratio).collect::<Vec<_>>()
            }),
        };
        serde_json::json!({
            "k": self.k,
            "lower": format_ratio(&self.lower),
            "upper": format_ratio(&self.upper),
            "resolved": resolved,
        })
    }
}

/// Computes `c_k` bounds: the upper bound is `h_k`; the lower bound is the
/// best subspace bound over the supplied bases (each of dimension at least
/// `n + 1 - k`); `c_1 = 0` and `c_2 = h_2` are exact.
pub fn ck_bounds(g: &Graph, k: usize, lower_bases: &[Vec<VertexFunction>]) -> Result<CkBounds> {
    let n = g.vertex_count();
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let required = n + 1 - k;
    for basis in lower_bases {
        if basis.len() < required {
            return Err(Error::BasisDimensionTooSmall {
                dim: basis.len(),
                required,
            });
        }
    }
    let mut lower = Ratio::zero();
    for basis in lower_bases {
        let bound = min_i_on_subspace(g, basis)?;
        if bound > lower {
            lower = bound;
        }
    }
    let upper = k_way_cheeger(g, k)?;
    let resolved = if k == 1 {
        CkResolution::Exact(Ratio::zero())
    } else if k == 2 {
        CkResolution::Exact(upper.clone())
    } else {
        let sigma = spectrum::spectrum(g)?;
        let candidates: Vec<Ratio> = sigma
            .eigenvalues()
            .into_iter()
            .filter(|mu| *mu > lower && *mu <= upper)
            .collect();
        if candidates.len() == 1 {
            CkResolution::Exact(candidates[0].clone())
        } else {
            CkResolution::Candidates(candidates)
        }
    };
    Ok(CkBounds {
        k,
        lower,
        upper,
        resolved,
    })
}
