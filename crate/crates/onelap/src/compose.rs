//! The module/eigencomponent algebra: verification of module-hood and the
//! four construction techniques (extension, joining, pasting, plugging).
//!
//! A `mu`-module is a connected graph `H` with a value assignment `phi` and
//! a core/socket vertex partition: socket vertices are attachment points
//! (never adjacent to each other) and the eigen-inclusion only has to hold
//! at core vertices. Composition is done on unnormalized ternary
//! representatives so values match across modules of different volumes;
//! normalization is deferred to final emission, which is sound because the
//! inclusion system is invariant under positive scaling.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};

use crate::eigen::{self, eigen_system, VertexFunction};
use crate::feasibility::FeasibilityResult;
use crate::graph::{Graph, VertexSubset};
use crate::rational::{format_ratio, parse_ratio, Ratio};
use crate::{Error, Result};

/// A subgraph piece with value assignment, core/socket partition and its
/// eigenvalue.
#[derive(Clone, Debug)]
pub struct MuModule {
    pub graph: Graph,
    pub phi: VertexFunction,
    pub core: VertexSubset,
    pub socket: VertexSubset,
    pub mu: Ratio,
}

/// Joining recipe: one chosen null socket vertex per module, the new edges
/// on them (as 1-based module-index pairs), and optional antisymmetric
/// `alpha` coefficients for the new edges.
#[derive(Clone, Debug, Default)]
pub struct JoinSpec {
    pub chosen: Vec<usize>,
    pub new_edges: Vec<(usize, usize)>,
    pub alpha: Option<Vec<((usize, usize), Ratio)>>,
}

impl MuModule {
    pub fn negate(&self) -> Self {
        MuModule {
            graph: self.graph.clone(),
            phi: self.phi.negate(),
            core: self.core.clone(),
            socket: self.socket.clone(),
            mu: self.mu.clone(),
        }
    }

    /// Rescales so the nonzero values are exactly `±1`. Errors when the
    /// nonzero values do not share one magnitude.
    pub fn ternary_form(&self) -> Result<Self> {
        let max = self
            .phi
            .values()
            .iter()
            .map(Signed::abs)
            .max()
            .ok_or(Error::ZeroFunction)?;
        if max.is_zero() {
            return Err(Error::ZeroFunction);
        }
        if self
            .phi
            .values()
            .iter()
            .any(|v| !v.is_zero() && v.abs() != max)
        {
            return Err(Error::NotTernary);
        }
        Ok(MuModule {
            graph: self.graph.clone(),
            phi: self.phi.scale(&max.recip()),
            core: self.core.clone(),
            socket: self.socket.clone(),
            mu: self.mu.clone(),
        })
    }

    fn is_ternary(&self) -> bool {
        self.phi
            .values()
            .iter()
            .all(|v| v.is_zero() || v.abs().is_one())
    }

    /// Parses the module description file: the edge-list graph section,
    /// `core:` / `socket:` vertex lists, vertex-function lines, `mu: p/q`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut graph_lines = String::new();
        let mut core: Option<Vec<usize>> = None;
        let mut socket: Option<Vec<usize>> = None;
        let mut value_lines = String::new();
        let mut mu = None;
        let parse_ids = |rest: &str, line: usize| -> Result<Vec<usize>> {
            rest.split_whitespace()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line,
                        message: format!("bad vertex id {t:?}"),
                    })
                })
                .collect()
        };
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("core:") {
                core = Some(parse_ids(rest, idx + 1)?);
            } else if let Some(rest) = line.strip_prefix("socket:") {
                socket = Some(parse_ids(rest, idx + 1)?);
            } else if let Some(rest) = line.strip_prefix("mu:") {
                mu = Some(parse_ratio(rest)?);
            } else if core.is_none() {
                graph_lines.push_str(line);
                graph_lines.push('\n');
            } else {
                value_lines.push_str(line);
                value_lines.push('\n');
            }
        }
        let graph = Graph::parse(&graph_lines)?;
        let n = graph.vertex_count();
        let core = VertexSubset::new(
            &graph,
            core.ok_or_else(|| Error::ModuleFile("missing core: line".into()))?,
        )?;
        let socket = VertexSubset::new(
            &graph,
            socket.ok_or_else(|| Error::ModuleFile("missing socket: line".into()))?,
        )?;
        let phi = VertexFunction::parse(n, &value_lines)?;
        let mu = mu.ok_or_else(|| Error::ModuleFile("missing mu: line".into()))?;
        Ok(MuModule {
            graph,
            phi,
            core,
            socket,
            mu,
        })
    }

    /// Renders in the module description file format.
    pub fn to_file_format(&self) -> String {
        let mut out = format!("{}\n", self.graph.vertex_count());
        for (i, j) in self.graph.edges() {
            out.push_str(&format!("{i} {j}\n"));
        }
        let ids = |s: &VertexSubset| {
            s.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        out.push_str(&format!("core: {}\n", ids(&self.core)));
        out.push_str(&format!("socket: {}\n", ids(&self.socket)));
        out.push_str(&self.phi.to_file_format());
        out.push_str(&format!("mu: {}\n", format_ratio(&self.mu)));
        out
    }
}

fn validate_shape(m: &MuModule) -> Result<()> {
    let n = m.graph.vertex_count();
    if m.phi.len() != n {
        return Err(Error::WrongFunctionLength {
            got: m.phi.len(),
            expected: n,
        });
    }
    if !m.core.is_disjoint(&m.socket) {
        return Err(Error::BadModulePartition(
            "core and socket overlap".to_string(),
        ));
    }
    if m.core.len() + m.socket.len() != n {
        return Err(Error::BadModulePartition(format!(
            "core and socket cover {} of {} vertices",
            m.core.len() + m.socket.len(),
            n
        )));
    }
    for &(i, j) in m.graph.edges() {
        if m.socket.contains(i) && m.socket.contains(j) {
            return Err(Error::SocketSocketEdge(i, j));
        }
    }
    if !m.graph.is_connected() {
        return Err(Error::DisconnectedModule);
    }
    Ok(())
}

/// Decides module-hood: whether some admissible edge selection satisfies
/// the inclusion system at every core vertex (socket vertices are
/// unconstrained). Returns the witness when it exists.
pub fn is_mu_module(m: &MuModule) -> Result<Option<BTreeMap<(usize, usize), Ratio>>> {
    verify_with_pins(m, &[])
}

fn verify_with_pins(
    m: &MuModule,
    pins: &[((usize, usize), Ratio)],
) -> Result<Option<BTreeMap<(usize, usize), Ratio>>> {
    validate_shape(m)?;
    let mut sys = eigen_system(&m.graph, &m.mu, &m.phi, Some(&m.core));
    for ((i, j), value) in pins {
        sys.pin_edge(*i, *j, value)?;
    }
    match sys.solve()? {
        FeasibilityResult::Feasible(witness) => Ok(Some(witness)),
        FeasibilityResult::Infeasible(_) => Ok(None),
    }
}

/// An eigencomponent is a module with connected core whose values are a
/// positive constant on a nonempty subset of the core and zero elsewhere
/// (an indicator up to scale).
pub fn is_eigencomponent(m: &MuModule) -> Result<bool> {
    if is_mu_module(m)?.is_none() {
        return Ok(false);
    }
    if !m.graph.subset_connected(&m.core) {
        return Ok(false);
    }
    let mut level: Option<Ratio> = None;
    for v in 1..=m.graph.vertex_count() {
        let value = m.phi.get(v);
        if value.is_zero() {
            continue;
        }
        if value.is_negative() || !m.core.contains(v) {
            return Ok(false);
        }
        match &level {
            None => level = Some(value.clone()),
            Some(c) if c == value => {}
            Some(_) => return Ok(false),
        }
    }
    Ok(level.is_some())
}

/// Zero-extends an eigencomponent through an induced-subgraph embedding,
/// producing an eigenvector of the host graph.
///
/// Requires `phi` to be an eigenvector of the module graph itself (the
/// inclusion must hold at socket vertices too, with module degrees), and
/// every host vertex outside the image that touches the image to be
/// non-adjacent to the embedded core.
pub fn extend(
    g: &Graph,
    m: &MuModule,
    embedding: &BTreeMap<usize, usize>,
) -> Result<VertexFunction> {
    if !is_eigencomponent(m)? {
        return Err(Error::NotEigencomponent(
            "extension needs a mu-eigencomponent".to_string(),
        ));
    }
    let hn = m.graph.vertex_count();
    if embedding.len() != hn {
        return Err(Error::EmbeddingNotInduced(format!(
            "embedding maps {} of {} module vertices",
            embedding.len(),
            hn
        )));
    }
    let mut image = BTreeSet::new();
    for (&a, &fa) in embedding {
        if a < 1 || a > hn {
            return Err(Error::VertexOutOfRange { vertex: a, n: hn });
        }
        if fa < 1 || fa > g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: fa,
                n: g.vertex_count(),
            });
        }
        if !image.insert(fa) {
            return Err(Error::EmbeddingNotInduced(format!(
                "vertex {fa} is hit twice"
            )));
        }
    }
    for a in 1..=hn {
        for b in (a + 1)..=hn {
            if m.graph.adjacent(a, b) != g.adjacent(embedding[&a], embedding[&b]) {
                return Err(Error::EmbeddingNotInduced(format!(
                    "pair ({a}, {b}) maps to ({}, {}) with different adjacency",
                    embedding[&a], embedding[&b]
                )));
            }
        }
    }
    if eigen::is_eigenpair(&m.graph, &m.mu, &m.phi)?.is_none() {
        return Err(Error::NotEigenvectorOnModule);
    }
    let embedded_core: BTreeSet<usize> = m.core.iter().map(|v| embedding[v]).collect();
    for w in 1..=g.vertex_count() {
        if image.contains(&w) {
            continue;
        }
        if g.neighbors(w).iter().any(|x| image.contains(x))
            && g.neighbors(w).iter().any(|x| embedded_core.contains(x))
        {
            return Err(Error::ExtensionBlocked(w));
        }
    }
    let mut extended = VertexFunction::zero(g.vertex_count());
    for (&a, &fa) in embedding {
        extended.set(fa, m.phi.get(a).clone());
    }
    debug_assert!(eigen::is_eigenpair(g, &m.mu, &extended).is_ok_and(|c| c.is_some()));
    Ok(extended)
}

/// Relabeling of one module's vertices into the assembly.
struct Placement {
    map: Vec<usize>, // old (1-based) -> new label
}

impl Placement {
    fn of(&self, v: usize) -> usize {
        self.map[v - 1]
    }
}

fn union_phi(
    total: usize,
    modules: &[&MuModule],
    placements: &[Placement],
    flip: impl Fn(usize) -> bool,
) -> VertexFunction {
    let mut phi = VertexFunction::zero(total);
    for (idx, (module, placement)) in modules.iter().zip(placements).enumerate() {
        for v in 1..=module.graph.vertex_count() {
            let target = placement.of(v);
            if target == 0 {
                continue;
            }
            let value = module.phi.get(v).clone();
            phi.set(target, if flip(idx) { -value } else { value });
        }
    }
    phi
}

/// Joins modules at chosen null socket vertices with a new edge set among
/// them. The chosen vertices become labels `1..=m` and move into the core;
/// when `alpha` is not supplied the admissible coefficients are found by
/// the feasibility engine, otherwise the supplied values are pinned and
/// verified.
pub fn join(modules: &[MuModule], spec: &JoinSpec) -> Result<MuModule> {
    let m = modules.len();
    if m == 0 || spec.chosen.len() != m {
        return Err(Error::BadModulePartition(format!(
            "join needs one chosen socket vertex per module, got {} for {m}",
            spec.chosen.len()
        )));
    }
    let mu = modules[0].mu.clone();
    for module in modules {
        validate_shape(module)?;
        if module.mu != mu {
            return Err(Error::MuMismatch);
        }
    }
    for (module, &u) in modules.iter().zip(&spec.chosen) {
        if !module.socket.contains(u) {
            return Err(Error::NotASocketVertex(u));
        }
        if !module.phi.get(u).is_zero() {
            return Err(Error::SocketValueNotZero(u));
        }
    }
    // Labels: chosen vertices first (in module order), then each module's
    // remaining vertices in original order.
    let mut placements = Vec::with_capacity(m);
    let mut next = m + 1;
    for (idx, module) in modules.iter().enumerate() {
        let mut map = vec![0usize; module.graph.vertex_count()];
        map[spec.chosen[idx] - 1] = idx + 1;
        for v in 1..=module.graph.vertex_count() {
            if v != spec.chosen[idx] {
                map[v - 1] = next;
                next += 1;
            }
        }
        placements.push(Placement { map });
    }
    let total = next - 1;
    let mut edges = Vec::new();
    for (module, placement) in modules.iter().zip(&placements) {
        for &(a, b) in module.graph.edges() {
            edges.push((placement.of(a), placement.of(b)));
        }
    }
    for &(i, j) in &spec.new_edges {
        if i < 1 || i > m || j < 1 || j > m || i == j {
            return Err(Error::BadModulePartition(format!(
                "new edge ({i}, {j}) does not name two distinct modules"
            )));
        }
        edges.push((i, j));
    }
    let graph = Graph::new(total, &edges)?;
    let phi = union_phi(
        total,
        &modules.iter().collect::<Vec<_>>(),
        &placements,
        |_| false,
    );
    let mut core_members: Vec<usize> = (1..=m).collect();
    let mut socket_members = Vec::new();
    for (idx, module) in modules.iter().enumerate() {
        for &v in module.core.iter() {
            core_members.push(placements[idx].of(v));
        }
        for &v in module.socket.iter() {
            if v != spec.chosen[idx] {
                socket_members.push(placements[idx].of(v));
            }
        }
    }
    let joined = MuModule {
        graph,
        phi,
        core: VertexSubset::from_iter_unchecked(core_members),
        socket: VertexSubset::from_iter_unchecked(socket_members),
        mu,
    };

    let mut pins = Vec::new();
    if let Some(alpha) = &spec.alpha {
        let mut seen: BTreeMap<(usize, usize), Ratio> = BTreeMap::new();
        for ((i, j), value) in alpha {
            if value.abs() > Ratio::one() {
                return Err(Error::AlphaInadmissible(*i, *j));
            }
            let (key, oriented) = if i < j {
                ((*i, *j), value.clone())
            } else {
                ((*j, *i), -value.clone())
            };
            if let Some(previous) = seen.get(&key) {
                if *previous != oriented {
                    return Err(Error::AlphaNotAntisymmetric);
                }
            }
            seen.insert(key, oriented);
        }
        for (key, value) in seen {
            pins.push((key, value));
        }
    }
    match verify_with_pins(&joined, &pins)? {
        Some(_) => Ok(joined),
        None => Err(Error::JoinInfeasible(
            "no admissible coefficients satisfy the joined system".to_string(),
        )),
    }
}

/// Pastes modules by identifying one chosen socket vertex per module (all
/// carrying the same value) into a single vertex, which joins the core. The
/// pasting assumption is checked by verifying the assembled module.
pub fn paste(modules: &[MuModule], chosen: &[usize]) -> Result<MuModule> {
    let m = modules.len();
    if m == 0 || chosen.len() != m {
        return Err(Error::BadModulePartition(format!(
            "paste needs one chosen socket vertex per module, got {} for {m}",
            chosen.len()
        )));
    }
    let mu = modules[0].mu.clone();
    for module in modules {
        validate_shape(module)?;
        if module.mu != mu {
            return Err(Error::MuMismatch);
        }
    }
    let pasted_value = modules[0].phi.get(chosen[0]).clone();
    for (module, &u) in modules.iter().zip(chosen) {
        if !module.socket.contains(u) {
            return Err(Error::NotASocketVertex(u));
        }
        if module.phi.get(u) != &pasted_value {
            return Err(Error::PastedValuesUnequal);
        }
    }
    // The first module keeps its labels (the fused vertex keeps the first
    // chosen label, the smallest label involved); later modules append
    // their non-pasted vertices in original order.
    let fused = chosen[0];
    let mut placements = Vec::with_capacity(m);
    let mut next = modules[0].graph.vertex_count() + 1;
    for (idx, module) in modules.iter().enumerate() {
        let mut map = vec![0usize; module.graph.vertex_count()];
        for v in 1..=module.graph.vertex_count() {
            if idx == 0 {
                map[v - 1] = v;
            } else if v == chosen[idx] {
                map[v - 1] = fused;
            } else {
                map[v - 1] = next;
                next += 1;
            }
        }
        placements.push(Placement { map });
    }
    let total = next - 1;
    let mut edges = Vec::new();
    for (module, placement) in modules.iter().zip(&placements) {
        for &(a, b) in module.graph.edges() {
            edges.push((placement.of(a), placement.of(b)));
        }
    }
    let graph = Graph::new(total, &edges)?;
    let phi = union_phi(
        total,
        &modules.iter().collect::<Vec<_>>(),
        &placements,
        |_| false,
    );
    let mut core_members = vec![fused];
    let mut socket_members = Vec::new();
    for (idx, module) in modules.iter().enumerate() {
        for &v in module.core.iter() {
            core_members.push(placements[idx].of(v));
        }
        for &v in module.socket.iter() {
            if v != chosen[idx] {
                socket_members.push(placements[idx].of(v));
            }
        }
    }
    let pasted = MuModule {
        graph,
        phi,
        core: VertexSubset::from_iter_unchecked(core_members),
        socket: VertexSubset::from_iter_unchecked(socket_members),
        mu,
    };
    match is_mu_module(&pasted)? {
        Some(_) => Ok(pasted),
        None => Err(Error::PasteInfeasible(
            "the identified vertex cannot satisfy the inclusion system".to_string(),
        )),
    }
}

/// Plugs `m2` into `m1`: each matched pair of null degree-1 socket vertices
/// is eliminated and their incident edges fuse into one direct core-core
/// edge; the second module's values are negated.
///
/// Both modules must be in ternary form with value exactly 1 at every
/// attachment neighbor. (Mixed-sign ternary modules are accepted: module
/// verification is all the construction needs, which makes chained plugs
/// possible.)
pub fn plug(m1: &MuModule, m2: &MuModule, matching: &[(usize, usize)]) -> Result<MuModule> {
    if m1.mu != m2.mu {
        return Err(Error::MuMismatch);
    }
    for module in [m1, m2] {
        validate_shape(module)?;
        if !module.is_ternary() {
            return Err(Error::NotTernary);
        }
        if is_mu_module(module)?.is_none() {
            return Err(Error::PlugInfeasible(
                "input is not a mu-module".to_string(),
            ));
        }
    }
    if matching.is_empty() {
        return Err(Error::BadModulePartition(
            "plug needs at least one matched socket pair".to_string(),
        ));
    }
    let mut matched = [BTreeSet::new(), BTreeSet::new()];
    let mut attachments = Vec::new(); // (v1, v2) in original labels
    for &(u1, u2) in matching {
        for (side, (module, u)) in [(0, (m1, u1)), (1, (m2, u2))] {
            if !module.socket.contains(u) {
                return Err(Error::NotASocketVertex(u));
            }
            if !module.phi.get(u).is_zero() {
                return Err(Error::SocketValueNotZero(u));
            }
            if module.graph.degree(u) != 1 {
                return Err(Error::PlugNeighborNotUnique(u));
            }
            let v = module.graph.neighbors(u)[0];
            if !module.phi.get(v).is_one() {
                return Err(Error::PlugValueNotOne(v));
            }
            if !matched[side].insert(u) {
                return Err(Error::DuplicateMatch(u));
            }
        }
        let v1 = m1.graph.neighbors(u1)[0];
        let v2 = m2.graph.neighbors(u2)[0];
        attachments.push((v1, v2));
    }
    // Remaining vertices of m1 first, then of m2, in original order.
    let mut placements = Vec::with_capacity(2);
    let mut next = 1;
    for (side, module) in [m1, m2].into_iter().enumerate() {
        let mut map = vec![0usize; module.graph.vertex_count()];
        for v in 1..=module.graph.vertex_count() {
            if !matched[side].contains(&v) {
                map[v - 1] = next;
                next += 1;
            }
        }
        placements.push(Placement { map });
    }
    let total = next - 1;
    let mut edges = Vec::new();
    for (side, module) in [m1, m2].into_iter().enumerate() {
        for &(a, b) in module.graph.edges() {
            if matched[side].contains(&a) || matched[side].contains(&b) {
                continue;
            }
            edges.push((placements[side].of(a), placements[side].of(b)));
        }
    }
    for &(v1, v2) in &attachments {
        edges.push((placements[0].of(v1), placements[1].of(v2)));
    }
    let graph = Graph::new(total, &edges)?;
    let phi = union_phi(total, &[m1, m2], &placements, |idx| idx == 1);
    let mut core_members = Vec::new();
    let mut socket_members = Vec::new();
    for (side, module) in [m1, m2].into_iter().enumerate() {
        for &v in module.core.iter() {
            core_members.push(placements[side].of(v));
        }
        for &v in module.socket.iter() {
            if !matched[side].contains(&v) {
                socket_members.push(placements[side].of(v));
            }
        }
    }
    let plugged = MuModule {
        graph,
        phi,
        core: VertexSubset::from_iter_unchecked(core_members),
        socket: VertexSubset::from_iter_unchecked(socket_members),
        mu: m1.mu.clone(),
    };
    match is_mu_module(&plugged)? {
        Some(_) => Ok(plugged),
        None => Err(Error::PlugInfeasible(
            "assembled module fails the inclusion system".to_string(),
        )),
    }
}

/// Ready-made components used throughout the worked examples and tests.
pub mod components {
    use super::*;
    use crate::rational::rat;

    fn build(
        n: usize,
        edges: &[(usize, usize)],
        values: &[(usize, Ratio)],
        core: &[usize],
        socket: &[usize],
        mu: Ratio,
    ) -> MuModule {
        let graph = Graph::new(n, edges).expect("valid component graph");
        let phi = VertexFunction::from_pairs(n, values).expect("valid values");
        MuModule {
            core: VertexSubset::new(&graph, core.iter().copied()).unwrap(),
            socket: VertexSubset::new(&graph, socket.iter().copied()).unwrap(),
            graph,
            phi,
            mu,
        }
    }

    /// An edge with one pendant null socket (`P_2 ~ o`), eigenvalue 1/3.
    pub fn pendant_edge() -> MuModule {
        build(
            3,
            &[(1, 2), (2, 3)],
            &[(1, rat(1, 3)), (2, rat(1, 3))],
            &[1, 2],
            &[3],
            rat(1, 3),
        )
    }

    /// A triangle with one null socket vertex, eigenvalue 1/2.
    pub fn triangle_with_socket() -> MuModule {
        build(
            3,
            &[(1, 2), (1, 3), (2, 3)],
            &[(1, rat(1, 4)), (2, rat(1, 4))],
            &[1, 2],
            &[3],
            rat(1, 2),
        )
    }

    /// A 4-clique with two bridging null sockets (`o ~ K_4 ~ o`),
    /// eigenvalue 1/7. Socket 5 hangs off vertex 1, socket 6 off vertex 3.
    pub fn clique4_bridge() -> MuModule {
        build(
            6,
            &[
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (3, 4),
                (3, 6),
            ],
            &[
                (1, rat(1, 14)),
                (2, rat(1, 14)),
                (3, rat(1, 14)),
                (4, rat(1, 14)),
            ],
            &[1, 2, 3, 4],
            &[5, 6],
            rat(1, 7),
        )
    }

    /// A 3-path with null sockets on both ends (`o ~ P_3 ~ o`),
    /// eigenvalue 1/3.
    pub fn path3_bridge() -> MuModule {
        build(
            5,
            &[(1, 2), (2, 3), (3, 4), (4, 5)],
            &[(2, rat(1, 6)), (3, rat(1, 6)), (4, rat(1, 6))],
            &[2, 3, 4],
            &[1, 5],
            rat(1, 3),
        )
    }

    /// A triangle with one pendant null socket (`K_3 ~ o`), eigenvalue 1/7.
    /// The socket hangs off vertex 1.
    pub fn triangle_arm() -> MuModule {
        build(
            4,
            &[(1, 2), (1, 3), (2, 3), (1, 4)],
            &[(1, rat(1, 7)), (2, rat(1, 7)), (3, rat(1, 7))],
            &[1, 2, 3],
            &[4],
            rat(1, 7),
        )
    }
}
