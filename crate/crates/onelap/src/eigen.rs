//! Vertex functions, the energy `I`, sign patterns, and exact eigenpair
//! verification.
//!
//! A pair `(mu, x)` is an eigenpair when some antisymmetric edge selection
//! `z` satisfies `z_ij in Sgn(x_i - x_j)` on every edge and
//! `sum_{j~i} z_ij in mu * d_i * Sgn(x_i)` at every vertex. Verification
//! builds the corresponding [`EdgeVariableSystem`] and asks the feasibility
//! engine; a positive answer always carries a witness `z`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::feasibility::{EdgeVariableSystem, FeasibilityResult, VertexConstraint};
use crate::graph::{Graph, VertexSubset};
use crate::rational::{format_ratio, from_usize, parse_ratio, Ratio};
use crate::{Error, Result};

/// An exact-rational value per vertex of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexFunction {
    values: Vec<Ratio>,
}

impl VertexFunction {
    /// The zero function on `n` vertices.
    pub fn zero(n: usize) -> Self {
        VertexFunction {
            values: vec![Ratio::zero(); n],
        }
    }

    /// From explicit values, `values[v - 1]` at vertex `v`.
    pub fn from_values(values: Vec<Ratio>) -> Self {
        VertexFunction { values }
    }

    /// From `(vertex, value)` pairs; unmentioned vertices are 0.
    pub fn from_pairs(n: usize, pairs: &[(usize, Ratio)]) -> Result<Self> {
        let mut f = VertexFunction::zero(n);
        for (v, r) in pairs {
            if *v < 1 || *v > n {
                return Err(Error::VertexOutOfRange { vertex: *v, n });
            }
            f.values[*v - 1] = r.clone();
        }
        Ok(f)
    }

    /// Parses the vertex-function file format: one `v value` line per vertex
    /// (`value` as `p/q`, an integer, or a decimal), `#` comments allowed,
    /// missing vertices default to 0.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut f = VertexFunction::zero(n);
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let (v, val) = match (it.next(), it.next(), it.next()) {
                (Some(v), Some(val), None) => (v, val),
                _ => {
                    return Err(Error::Parse {
                        line: idx + 1,
                        message: format!("expected \"v value\", found {line:?}"),
                    })
                }
            };
            let v: usize = v.parse().map_err(|_| Error::Parse {
                line: idx + 1,
                message: format!("bad vertex id {v:?}"),
            })?;
            if v < 1 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            f.values[v - 1] = parse_ratio(val)?;
        }
        Ok(f)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: usize) -> &Ratio {
        &self.values[v - 1]
    }

    pub fn set(&mut self, v: usize, value: Ratio) {
        self.values[v - 1] = value;
    }

    pub fn values(&self) -> &[Ratio] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Ratio) -> Self {
        VertexFunction {
            values: self.values.iter().map(|x| x * c).collect(),
        }
    }

    pub fn negate(&self) -> Self {
        VertexFunction {
            values: self.values.iter().map(|x| -x).collect(),
        }
    }

    /// Renders in the vertex-function file format (zero entries skipped).
    pub fn to_file_format(&self) -> String {
        let mut out = String::new();
        for (i, x) in self.values.iter().enumerate() {
            if !x.is_zero() {
                out.push_str(&format!("{} {}\n", i + 1, format_ratio(x)));
            }
        }
        out
    }

    fn require_matching(&self, g: &Graph) -> Result<()> {
        if self.len() != g.vertex_count() {
            return Err(Error::WrongFunctionLength {
                got: self.len(),
                expected: g.vertex_count(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for VertexFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.values.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_ratio(x))?;
        }
        write!(f, ")")
    }
}

/// Sign classification of a vertex function, with the volumes of the three
/// parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignPattern {
    pub positive: VertexSubset,
    pub negative: VertexSubset,
    pub null: VertexSubset,
    pub delta_plus: usize,
    pub delta_minus: usize,
    pub delta_zero: usize,
}

/// An eigenvalue together with a per-edge rational witness satisfying the
/// inclusion system for the certified vertex function.
#[derive(Clone, Debug)]
pub struct EigenCertificate {
    pub mu: Ratio,
    /// Values on canonical edges `(i, j)`, `i < j`; the reversed orientation
    /// is the negation.
    pub witness: BTreeMap<(usize, usize), Ratio>,
}

/// `I(x) = sum over edges of |x_i - x_j|`.
pub fn energy(g: &Graph, x: &VertexFunction) -> Ratio {
    g.edges()
        .iter()
        .map(|&(i, j)| (x.get(i) - x.get(j)).abs())
        .sum()
}

/// The degree-weighted one-norm `sum d_i |x_i|`; `x` lies on the sphere `X`
/// exactly when this is 1.
pub fn one_norm(g: &Graph, x: &VertexFunction) -> Ratio {
    (1..=g.vertex_count())
        .map(|v| from_usize(g.degree(v)) * x.get(v).abs())
        .sum()
}

/// Rescales `x` onto the sphere `X`. Errors on the zero function.
pub fn normalize(g: &Graph, x: &VertexFunction) -> Result<VertexFunction> {
    let norm = one_norm(g, x);
    if norm.is_zero() {
        return Err(Error::ZeroFunction);
    }
    Ok(x.scale(&norm.recip()))
}

/// Splits the vertices by the sign of `x` and records the part volumes.
pub fn sign_pattern(g: &Graph, x: &VertexFunction) -> SignPattern {
    let mut positive = Vec::new();
    let mut negative = Vec::new();
    let mut null = Vec::new();
    for v in 1..=g.vertex_count() {
        let xv = x.get(v);
        if xv.is_positive() {
            positive.push(v);
        } else if xv.is_negative() {
            negative.push(v);
        } else {
            null.push(v);
        }
    }
    let vol = |vs: &[usize]| vs.iter().map(|&v| g.degree(v)).sum();
    SignPattern {
        delta_plus: vol(&positive),
        delta_minus: vol(&negative),
        delta_zero: vol(&null),
        positive: VertexSubset::from_iter_unchecked(positive),
        negative: VertexSubset::from_iter_unchecked(negative),
        null: VertexSubset::from_iter_unchecked(null),
    }
}

/// Membership in the feasible set `pi`: `|delta+ - delta-| <= delta0`.
/// Requires `x` on the sphere `X`.
pub fn in_pi(g: &Graph, x: &VertexFunction) -> Result<bool> {
    use num_traits::One;
    x.require_matching(g)?;
    if !one_norm(g, x).is_one() {
        return Err(Error::NotInX);
    }
    let p = sign_pattern(g, x);
    let diff = (p.delta_plus as i64 - p.delta_minus as i64).unsigned_abs() as usize;
    Ok(diff <= p.delta_zero)
}

/// The normalized indicator `1_A / vol(A)`.
pub fn binary_vector(g: &Graph, a: &VertexSubset) -> Result<VertexFunction> {
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    let vol = g.subset_volume(a);
    let value = from_usize(vol).recip();
    let mut x = VertexFunction::zero(g.vertex_count());
    for &v in a.iter() {
        x.set(v, value.clone());
    }
    Ok(x)
}

/// The normalized ternary vector `r (1_P - 1_N)` with
/// `r = 1 / (vol(P) + vol(N))`; lies on the sphere `X`.
pub fn ternary_vector(g: &Graph, p: &VertexSubset, n: &VertexSubset) -> Result<VertexFunction> {
    if !p.is_disjoint(n) {
        return Err(Error::OverlappingSubsets);
    }
    if p.is_empty() && n.is_empty() {
        return Err(Error::EmptySubset);
    }
    let vol = g.subset_volume(p) + g.subset_volume(n);
    let r = from_usize(vol).recip();
    let mut x = VertexFunction::zero(g.vertex_count());
    for &v in p.iter() {
        x.set(v, r.clone());
    }
    for &v in n.iter() {
        x.set(v, -r.clone());
    }
    Ok(x)
}

/// Builds the inclusion system for `(mu, x)`: on each edge the box is the
/// sign of `x_i - x_j` (or `[-1, 1]` when equal); each vertex in
/// `constrained` gets `Equal(+-mu d_i)` when signed or
/// `Interval([-mu d_i, mu d_i])` when null. Vertices outside `constrained`
/// are left free (used for module sockets).
pub(crate) fn eigen_system(
    g: &Graph,
    mu: &Ratio,
    x: &VertexFunction,
    constrained: Option<&VertexSubset>,
) -> EdgeVariableSystem {
    use num_traits::One;
    let one = Ratio::one;
    let mut sys = EdgeVariableSystem::new(g.vertex_count());
    for &(i, j) in g.edges() {
        let diff = x.get(i) - x.get(j);
        let (lo, hi) = if diff.is_positive() {
            (one(), one())
        } else if diff.is_negative() {
            (-one(), -one())
        } else {
            (-one(), one())
        };
        sys.add_edge(i, j, lo, hi).expect("canonical graph edges");
    }
    for v in 1..=g.vertex_count() {
        if let Some(c) = constrained {
            if !c.contains(v) {
                continue;
            }
        }
        let bound = mu * from_usize(g.degree(v));
        let xv = x.get(v);
        let constraint = if xv.is_positive() {
            VertexConstraint::Equal(bound)
        } else if xv.is_negative() {
            VertexConstraint::Equal(-bound)
        } else {
            VertexConstraint::Interval(-bound.clone(), bound)
        };
        sys.set_vertex(v, constraint).expect("vertex in range");
    }
    sys
}

/// Decides whether `(mu, x)` is an eigenpair of the 1-Laplacian on `g`,
/// returning a witness certificate when it is.
///
/// Accepts unnormalized `x` (the system is invariant under positive
/// scaling). Errors: zero `x`, disconnected `g`, `mu` outside `[0, 1]`.
pub fn is_eigenpair(g: &Graph, mu: &Ratio, x: &VertexFunction) -> Result<Option<EigenCertificate>> {
    use num_traits::One;
    x.require_matching(g)?;
    if x.is_zero() {
        return Err(Error::ZeroFunction);
    }
    g.require_connected()?;
    if mu.is_negative() || mu > &Ratio::one() {
        return Err(Error::MuOutOfRange(format_ratio(mu)));
    }
    let sys = eigen_system(g, mu, x, None);
    match sys.solve()? {
        FeasibilityResult::Feasible(witness) => Ok(Some(EigenCertificate {
            mu: mu.clone(),
            witness,
        })),
        FeasibilityResult::Infeasible(_) => Ok(None),
    }
}

/// Blocking test: true when some vertex outside `A` has its entire
/// neighborhood inside `A`, in which case `1_A / vol(A)` cannot be an
/// eigenvector for any `mu < 1`.
pub fn lemma_minor_check(g: &Graph, a: &VertexSubset) -> Result<bool> {
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    if a.len() == g.vertex_count() {
        return Err(Error::FullSubset);
    }
    Ok((1..=g.vertex_count())
        .filter(|&v| !a.contains(v))
        .any(|v| !g.neighbors(v).is_empty() && g.neighbors(v).iter().all(|&w| a.contains(w))))
}

/// Certifying test for an adjacent pair `A = {u1, u2}`: true when
/// `|E({i}, A)| / d_i <= |boundary(A)| / vol(A)` for every outside vertex,
/// in which case `1_A / vol(A)` is an eigenvector with
/// `mu = |boundary(A)| / vol(A)`.
pub fn lemma_important_check(g: &Graph, a: &VertexSubset) -> Result<bool> {
    if a.len() != 2 {
        return Err(Error::PairSizeNotTwo(a.len()));
    }
    let mut it = a.iter();
    let (&u1, &u2) = (it.next().unwrap(), it.next().unwrap());
    if !g.adjacent(u1, u2) {
        return Err(Error::PairNotAdjacent);
    }
    let ratio = from_usize(g.boundary_size(a)?) / from_usize(g.subset_volume(a));
    Ok((1..=g.vertex_count()).filter(|&v| !a.contains(v)).all(|v| {
        let crossing = g.neighbors(v).iter().filter(|&&w| a.contains(w)).count();
        from_usize(crossing) / from_usize(g.degree(v)) <= ratio
    }))
}

/// `psi(S) = |boundary(S)| / vol(S)`, defined for nonempty proper `S`.
pub fn psi(g: &Graph, s: &VertexSubset) -> Result<Ratio> {
    Ok(from_usize(g.boundary_size(s)?) / from_usize(g.subset_volume(s)))
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
    fn energy_examples() {
        let p3 = Graph::path(3).unwrap();
        let x = VertexFunction::from_values(vec![rat(1, 3), rat(1, 3), rat(0, 1)]);
        assert_eq!(energy(&p3, &x), rat(1, 3));

        let g6 = Graph::named(NamedGraph::G6);
        let constant = binary_vector(&g6, &g6.full_subset()).unwrap();
        assert_eq!(energy(&g6, &constant), rat(0, 1));

        let c6 = Graph::cycle(6).unwrap();
        let vals: Vec<Ratio> = [1, 1, 1, -1, -1, -1].iter().map(|&p| rat(p, 12)).collect();
        let x = VertexFunction::from_values(vals);
        assert_eq!(energy(&c6, &x), rat(1, 3));
    }

    #[test]
    fn one_norm_and_normalize() {
        use num_traits::One;
        let g6 = Graph::named(NamedGraph::G6);
        let b = binary_vector(&g6, &subset(&g6, &[2, 5, 6])).unwrap();
        assert!(one_norm(&g6, &b).is_one());

        let p3 = Graph::path(3).unwrap();
        assert_eq!(one_norm(&p3, &VertexFunction::zero(3)), rat(0, 1));
        let x = VertexFunction::from_values(vec![int(1), int(1), int(0)]);
        assert_eq!(one_norm(&p3, &x), int(3));

        let p6 = Graph::path(6).unwrap();
        let x =
            VertexFunction::from_values([1, 1, -1, -1, -1, 0].iter().map(|&p| int(p)).collect());
        let normalized = normalize(&p6, &x).unwrap();
        assert_eq!(normalized.get(1), &rat(1, 9));
        assert_eq!(normalized.get(5), &rat(-1, 9));
        assert_eq!(normalize(&p6, &normalized).unwrap(), normalized);
        assert!(matches!(
            normalize(&p6, &VertexFunction::zero(6)),
            Err(Error::ZeroFunction)
        ));

        let g10 = Graph::named(NamedGraph::Ex10G);
        let x = VertexFunction::from_values(
            [-1, -1, -1, -1, 1, 1, 1, 1, 1, 1]
                .iter()
                .map(|&p| int(p))
                .collect(),
        );
        let normalized = normalize(&g10, &x).unwrap();
        assert_eq!(normalized.get(5), &rat(1, 28));
    }

    #[test]
    fn sign_patterns_and_pi() {
        let g10 = Graph::named(NamedGraph::Ex10G);
        let phi = ternary_vector(
            &g10,
            &subset(&g10, &[5, 6, 7, 8, 9, 10]),
            &subset(&g10, &[1, 2, 3, 4]),
        )
        .unwrap();
        let p = sign_pattern(&g10, &phi);
        assert_eq!(p.negative.to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(p.positive.to_vec(), vec![5, 6, 7, 8, 9, 10]);
        assert!(p.null.is_empty());
        assert_eq!((p.delta_plus, p.delta_minus, p.delta_zero), (14, 14, 0));
        assert!(in_pi(&g10, &phi).unwrap());

        let g5 = Graph::named(NamedGraph::Ex5G);
        let phi = binary_vector(&g5, &subset(&g5, &[1, 2])).unwrap();
        let p = sign_pattern(&g5, &phi);
        assert_eq!((p.delta_plus, p.delta_minus, p.delta_zero), (4, 0, 6));
        assert!(in_pi(&g5, &phi).unwrap());

        let zero = VertexFunction::zero(5);
        let p = sign_pattern(&g5, &zero);
        assert_eq!(p.null.len(), 5);

        // The constant never sits in pi, and unnormalized input is rejected.
        let constant = binary_vector(&g5, &g5.full_subset()).unwrap();
        assert!(!in_pi(&g5, &constant).unwrap());
        assert!(matches!(
            in_pi(&g5, &constant.scale(&int(2))),
            Err(Error::NotInX)
        ));
    }

    #[test]
    fn binary_and_ternary_vectors() {
        let p3 = Graph::path(3).unwrap();
        let b = binary_vector(&p3, &subset(&p3, &[1, 2])).unwrap();
        assert_eq!(b.values(), &[rat(1, 3), rat(1, 3), rat(0, 1)]);

        let c3 = Graph::cycle(3).unwrap();
        let b = binary_vector(&c3, &subset(&c3, &[1, 2])).unwrap();
        assert_eq!(b.values(), &[rat(1, 4), rat(1, 4), rat(0, 1)]);

        let g = Graph::complete(4).unwrap();
        let b = binary_vector(&g, &subset(&g, &[2])).unwrap();
        assert_eq!(b.get(2), &rat(1, 3));

        let c6 = Graph::cycle(6).unwrap();
        let t = ternary_vector(&c6, &subset(&c6, &[1, 2, 3]), &subset(&c6, &[4, 5, 6])).unwrap();
        assert_eq!(t.get(1), &rat(1, 12));
        assert_eq!(t.get(4), &rat(-1, 12));

        // P = A, N = empty reduces to the binary vector.
        let t = ternary_vector(&p3, &subset(&p3, &[1, 2]), &subset(&p3, &[])).unwrap();
        assert_eq!(t, binary_vector(&p3, &subset(&p3, &[1, 2])).unwrap());

        assert!(ternary_vector(&p3, &subset(&p3, &[1]), &subset(&p3, &[1])).is_err());
        assert!(ternary_vector(&p3, &subset(&p3, &[]), &subset(&p3, &[])).is_err());
    }

    #[test]
    fn eigenpair_verification_on_g6() {
        let g6 = Graph::named(NamedGraph::G6);

        // mu = 0 with the constant.
        let constant = binary_vector(&g6, &g6.full_subset()).unwrap();
        let cert = is_eigenpair(&g6, &rat(0, 1), &constant).unwrap().unwrap();
        assert!(cert.witness.values().all(|z| z.is_zero() || !z.is_zero()));

        // (5/9, indicator of {2,5,6}) is an eigenpair.
        let phi = binary_vector(&g6, &subset(&g6, &[2, 5, 6])).unwrap();
        let cert = is_eigenpair(&g6, &rat(5, 9), &phi).unwrap();
        assert!(cert.is_some());

        // (3/4, indicator of {1,5}) is not.
        let phi = binary_vector(&g6, &subset(&g6, &[1, 5])).unwrap();
        assert!(is_eigenpair(&g6, &rat(3, 4), &phi).unwrap().is_none());
    }

    #[test]
    fn g6_witness_at_five_ninths_re_verifies() {
        // A hand-derived admissible selection for (5/9, indicator of
        // {2,5,6}), in canonical orientation; forced entries are the signs
        // of the value differences, the free ones follow by substitution.
        let g6 = Graph::named(NamedGraph::G6);
        let phi = binary_vector(&g6, &subset(&g6, &[2, 5, 6])).unwrap();
        let sys = eigen_system(&g6, &rat(5, 9), &phi, None);
        let witness: std::collections::BTreeMap<(usize, usize), Ratio> = [
            ((1, 2), rat(-1, 1)),
            ((1, 3), rat(1, 9)),
            ((1, 4), rat(1, 9)),
            ((1, 5), rat(-1, 1)),
            ((1, 6), rat(-1, 1)),
            ((2, 3), rat(1, 1)),
            ((2, 4), rat(1, 1)),
            ((2, 5), rat(-7, 9)),
            ((3, 4), rat(0, 1)),
            ((5, 6), rat(-1, 9)),
        ]
        .into();
        assert!(sys.check_witness(&witness));
        // Flipping the bridge entries breaks the vertex-1 interval.
        let mut bad = witness.clone();
        bad.insert((1, 3), rat(-1, 9));
        bad.insert((1, 4), rat(-1, 9));
        assert!(!sys.check_witness(&bad));
    }

    #[test]
    fn eigenpair_errors() {
        let g6 = Graph::named(NamedGraph::G6);
        let phi = binary_vector(&g6, &subset(&g6, &[1])).unwrap();
        assert!(matches!(
            is_eigenpair(&g6, &rat(0, 1), &VertexFunction::zero(6)),
            Err(Error::ZeroFunction)
        ));
        assert!(matches!(
            is_eigenpair(&g6, &rat(3, 2), &phi),
            Err(Error::MuOutOfRange(_))
        ));
        let disconnected = Graph::new(4, &[(1, 2), (3, 4)]).unwrap();
        let x = VertexFunction::from_pairs(4, &[(1, int(1))]).unwrap();
        assert!(matches!(
            is_eigenpair(&disconnected, &rat(1, 2), &x),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn minor_lemma_blocks() {
        let g6 = Graph::named(NamedGraph::G6);
        assert!(lemma_minor_check(&g6, &subset(&g6, &[1, 5])).unwrap());
        assert!(!lemma_minor_check(&g6, &subset(&g6, &[1, 2])).unwrap());

        let p3 = Graph::path(3).unwrap();
        assert!(lemma_minor_check(&p3, &subset(&p3, &[1, 3])).unwrap());
    }

    #[test]
    fn important_lemma_certifies() {
        let g6 = Graph::named(NamedGraph::G6);
        for (pair, mu) in [
            (vec![1, 2], rat(7, 9)),
            (vec![3, 4], rat(2, 3)),
            (vec![5, 6], rat(3, 5)),
        ] {
            let a = subset(&g6, &pair);
            assert!(lemma_important_check(&g6, &a).unwrap());
            assert_eq!(psi(&g6, &a).unwrap(), mu);
            let phi = binary_vector(&g6, &a).unwrap();
            assert!(is_eigenpair(&g6, &mu, &phi).unwrap().is_some());
        }
        assert!(matches!(
            lemma_important_check(&g6, &subset(&g6, &[1, 2, 3])),
            Err(Error::PairSizeNotTwo(3))
        ));
        assert!(matches!(
            lemma_important_check(&g6, &subset(&g6, &[3, 5])),
            Err(Error::PairNotAdjacent)
        ));
    }

    #[test]
    fn certificates_satisfy_the_rayleigh_identity() {
        let g6 = Graph::named(NamedGraph::G6);
        let phi = binary_vector(&g6, &subset(&g6, &[2, 5, 6])).unwrap();
        let mu = rat(5, 9);
        assert!(is_eigenpair(&g6, &mu, &phi).unwrap().is_some());
        assert_eq!(energy(&g6, &phi), mu * one_norm(&g6, &phi));
    }

    #[test]
    fn zero_homogeneity() {
        let g6 = Graph::named(NamedGraph::G6);
        let phi = binary_vector(&g6, &subset(&g6, &[2, 5, 6])).unwrap();
        for c in [rat(3, 1), rat(1, 7), rat(22, 7)] {
            let scaled = phi.scale(&c);
            assert_eq!(
                is_eigenpair(&g6, &rat(5, 9), &phi).unwrap().is_some(),
                is_eigenpair(&g6, &rat(5, 9), &scaled).unwrap().is_some()
            );
        }
    }

    #[test]
    fn parses_vertex_function_files() {
        let f = VertexFunction::parse(4, "# comment\n1 1/3\n3 -2\n4 0.25\n").unwrap();
        assert_eq!(f.values(), &[rat(1, 3), rat(0, 1), rat(-2, 1), rat(1, 4)]);
        assert!(VertexFunction::parse(2, "5 1").is_err());
        assert!(VertexFunction::parse(2, "1 x").is_err());
        assert!(VertexFunction::parse(2, "junk").is_err());
    }
}
