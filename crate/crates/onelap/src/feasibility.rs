//! Exact decision procedure for box-constrained edge-sum systems.
//!
//! A system has one variable `z_e` per canonical edge `(i, j)` with `i < j`,
//! confined to a rational box, and per-vertex constraints on the signed
//! incident sum `sum_e sigma(v, e) z_e` where `sigma(v, (i, j))` is `+1` when
//! `v = i` and `-1` when `v = j`. The reversed orientation of an edge is the
//! negation and is never stored.
//!
//! Solving clears all bounds to a common integer scale and reduces to a
//! feasible-circulation problem with lower bounds: each vertex constraint
//! becomes a node-imbalance interval routed through an auxiliary node, and
//! lower bounds are absorbed into supersource/supersink demands. A max-flow
//! run then either saturates the demands (yielding an exact rational witness
//! by unscaling) or certifies that some subset of vertex constraints cannot
//! be met. No floating point is involved anywhere.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::rational::Ratio;
use crate::{Error, Result};

/// Constraint on the signed incident sum at one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexConstraint {
    /// The sum must equal the value exactly.
    Equal(Ratio),
    /// The sum must lie in the closed interval `[lo, hi]`.
    Interval(Ratio, Ratio),
}

/// A box-constrained edge-sum system over vertices `1..=n`.
#[derive(Clone, Debug, Default)]
pub struct EdgeVariableSystem {
    n: usize,
    edges: Vec<(usize, usize)>,
    boxes: Vec<(Ratio, Ratio)>,
    constraints: BTreeMap<usize, VertexConstraint>,
}

/// Outcome of [`EdgeVariableSystem::solve`].
#[derive(Clone, Debug)]
pub enum FeasibilityResult {
    /// A witness assignment, one rational per canonical edge, lying inside
    /// every box and satisfying every vertex constraint exactly.
    Feasible(BTreeMap<(usize, usize), Ratio>),
    /// No assignment exists; carries a best-effort description of a
    /// certifying constraint subset.
    Infeasible(InfeasibilityReport),
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityResult::Feasible(_))
    }

    pub fn witness(&self) -> Option<&BTreeMap<(usize, usize), Ratio>> {
        match self {
            FeasibilityResult::Feasible(w) => Some(w),
            FeasibilityResult::Infeasible(_) => None,
        }
    }
}

/// Best-effort description of why a system is infeasible.
#[derive(Clone, Debug)]
pub struct InfeasibilityReport {
    /// Vertices whose constraints participate in the blocking cut.
    pub vertices: Vec<usize>,
    pub description: String,
}

impl EdgeVariableSystem {
    /// An empty system over vertices `1..=n`.
    pub fn new(n: usize) -> Self {
        EdgeVariableSystem {
            n,
            edges: Vec::new(),
            boxes: Vec::new(),
            constraints: BTreeMap::new(),
        }
    }

    /// Adds the variable for canonical edge `(i, j)`, `i < j`, with box
    /// `[lo, hi]`.
    pub fn add_edge(&mut self, i: usize, j: usize, lo: Ratio, hi: Ratio) -> Result<()> {
        if i >= j {
            return Err(Error::NonCanonicalEdge(i, j));
        }
        if j > self.n {
            return Err(Error::VertexOutOfRange {
                vertex: j,
                n: self.n,
            });
        }
        if self.edges.contains(&(i, j)) {
            return Err(Error::DuplicateSystemEdge(i, j));
        }
        self.edges.push((i, j));
        self.boxes.push((lo, hi));
        Ok(())
    }

    /// Constrains the signed incident sum at `v`.
    pub fn set_vertex(&mut self, v: usize, c: VertexConstraint) -> Result<()> {
        if v < 1 || v > self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        self.constraints.insert(v, c);
        Ok(())
    }

    /// Narrows the box of an existing edge to the single value `value`.
    /// Errors when the value lies outside the current box.
    pub fn pin_edge(&mut self, i: usize, j: usize, value: &Ratio) -> Result<()> {
        let idx = self
            .edges
            .iter()
            .position(|&e| e == (i, j))
            .ok_or(Error::NonCanonicalEdge(i, j))?;
        let (lo, hi) = &self.boxes[idx];
        if value < lo || value > hi {
            return Err(Error::AlphaInadmissible(i, j));
        }
        self.boxes[idx] = (value.clone(), value.clone());
        Ok(())
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn validate(&self) -> Result<()> {
        for (&(i, j), (lo, hi)) in self.edges.iter().zip(&self.boxes) {
            if lo > hi {
                return Err(Error::MalformedBox(i, j));
            }
        }
        for (&v, c) in &self.constraints {
            if let VertexConstraint::Interval(lo, hi) = c {
                if lo > hi {
                    return Err(Error::MalformedInterval(v));
                }
            }
        }
        Ok(())
    }

    /// Decides the system exactly, returning a rational witness or an
    /// infeasibility report. Malformed input (a box or interval with
    /// `lo > hi`) is an error, not infeasibility.
    #[allow(clippy::needless_range_loop)] // vertex ids are the semantic index
    pub fn solve(&self) -> Result<FeasibilityResult> {
        self.validate()?;

        // Common integer scale for all bounds.
        let mut scale = BigInt::one();
        let mut denoms = |r: &Ratio| {
            scale = scale.lcm(r.denom());
        };
        for (lo, hi) in &self.boxes {
            denoms(lo);
            denoms(hi);
        }
        for c in self.constraints.values() {
            match c {
                VertexConstraint::Equal(r) => denoms(r),
                VertexConstraint::Interval(lo, hi) => {
                    denoms(lo);
                    denoms(hi);
                }
            }
        }
        let scaled = |r: &Ratio| -> Result<i128> {
            let v = (r * Ratio::from_integer(scale.clone())).to_integer();
            v.to_i128().ok_or(Error::ScaleOverflow)
        };

        let m = self.edges.len();
        let lo: Vec<i128> = self
            .boxes
            .iter()
            .map(|b| scaled(&b.0))
            .collect::<Result<_>>()?;
        let hi: Vec<i128> = self
            .boxes
            .iter()
            .map(|b| scaled(&b.1))
            .collect::<Result<_>>()?;

        // After substituting z = lo + g, vertex v needs its signed sum of g
        // to land in [L - base, U - base] where base is the signed sum of the
        // lower bounds.
        let mut base = vec![0i128; self.n + 1];
        for (k, &(i, j)) in self.edges.iter().enumerate() {
            base[i] += lo[k];
            base[j] -= lo[k];
        }

        // Network nodes: 0..n-1 graph vertices, n = imbalance hub,
        // n+1 = supersource, n+2 = supersink.
        let hub = self.n;
        let source = self.n + 1;
        let sink = self.n + 2;
        let mut net = MaxFlow::new(self.n + 3);
        let mut excess = vec![0i128; self.n + 3];

        let mut total_cap: i128 = 0;
        let mut edge_arcs = Vec::with_capacity(m);
        for (k, &(i, j)) in self.edges.iter().enumerate() {
            let cap = hi[k] - lo[k];
            total_cap += cap;
            edge_arcs.push(net.add_arc(i - 1, j - 1, cap));
        }
        // Arc pair between v and the hub absorbing the imbalance interval:
        // the net hub-ward flow equals minus the signed sum at v.
        let arc_with_lower = |net: &mut MaxFlow,
                              excess: &mut Vec<i128>,
                              from: usize,
                              to: usize,
                              low: i128,
                              cap: i128| {
            debug_assert!(low <= cap);
            if low > 0 {
                excess[to] += low;
                excess[from] -= low;
            }
            net.add_arc(from, to, cap - low.max(0));
        };

        for v in 1..=self.n {
            match self.constraints.get(&v) {
                None => {
                    let inf = total_cap + 1;
                    net.add_arc(v - 1, hub, inf);
                    net.add_arc(hub, v - 1, inf);
                }
                Some(c) => {
                    let (l, u) = match c {
                        VertexConstraint::Equal(r) => {
                            let s = scaled(r)?;
                            (s, s)
                        }
                        VertexConstraint::Interval(a, b) => (scaled(a)?, scaled(b)?),
                    };
                    let l = l - base[v];
                    let u = u - base[v];
                    // net(v -> hub) must lie in [-u, -l]
                    arc_with_lower(&mut net, &mut excess, v - 1, hub, (-u).max(0), (-l).max(0));
                    arc_with_lower(&mut net, &mut excess, hub, v - 1, l.max(0), u.max(0));
                }
            }
        }

        let mut demand: i128 = 0;
        for node in 0..self.n + 1 {
            if excess[node] > 0 {
                net.add_arc(source, node, excess[node]);
                demand += excess[node];
            } else if excess[node] < 0 {
                net.add_arc(node, sink, -excess[node]);
            }
        }

        let pushed = net.run(source, sink);
        if pushed == demand {
            let scale_r = Ratio::from_integer(scale);
            let witness: BTreeMap<(usize, usize), Ratio> = self
                .edges
                .iter()
                .enumerate()
                .map(|(k, &e)| {
                    let g = net.flow_on(edge_arcs[k]);
                    (
                        e,
                        Ratio::from_integer(BigInt::from(lo[k] + g)) / scale_r.clone(),
                    )
                })
                .collect();
            debug_assert!(self.check_witness(&witness));
            Ok(FeasibilityResult::Feasible(witness))
        } else {
            let reachable = net.residual_reachable(source);
            let mut vertices: Vec<usize> = (1..=self.n)
                .filter(|&v| reachable[v - 1] && self.constraints.contains_key(&v))
                .collect();
            if vertices.is_empty() {
                vertices = self.constraints.keys().copied().collect();
            }
            let description = format!(
                "vertex constraints at {{{}}} cannot be met within the edge boxes",
                vertices
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            Ok(FeasibilityResult::Infeasible(InfeasibilityReport {
                vertices,
                description,
            }))
        }
    }

    /// Re-verifies a witness by direct substitution.
    #[allow(clippy::needless_range_loop)]
    pub fn check_witness(&self, witness: &BTreeMap<(usize, usize), Ratio>) -> bool {
        let mut sums: Vec<Ratio> = vec![Ratio::zero(); self.n + 1];
        for (k, &(i, j)) in self.edges.iter().enumerate() {
            let z = match witness.get(&(i, j)) {
                Some(z) => z,
                None => return false,
            };
            let (lo, hi) = &self.boxes[k];
            if z < lo || z > hi {
                return false;
            }
            sums[i] += z;
            sums[j] -= z;
        }
        self.constraints.iter().all(|(&v, c)| match c {
            VertexConstraint::Equal(r) => &sums[v] == r,
            VertexConstraint::Interval(lo, hi) => &sums[v] >= lo && &sums[v] <= hi,
        })
    }
}

/// Dinic max-flow over `i128` capacities.
struct MaxFlow {
    to: Vec<usize>,
    cap: Vec<i128>,
    head: Vec<Vec<usize>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl MaxFlow {
    fn new(nodes: usize) -> Self {
        MaxFlow {
            to: Vec::new(),
            cap: Vec::new(),
            head: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            iter: vec![0; nodes],
        }
    }

    /// Adds a forward arc with the given capacity plus its residual twin;
    /// returns the forward arc id.
    fn add_arc(&mut self, u: usize, v: usize, cap: i128) -> usize {
        debug_assert!(cap >= 0);
        let id = self.to.len();
        self.head[u].push(id);
        self.to.push(v);
        self.cap.push(cap);
        self.head[v].push(id + 1);
        self.to.push(u);
        self.cap.push(0);
        id
    }

    fn flow_on(&self, arc: usize) -> i128 {
        self.cap[arc ^ 1]
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        let mut queue = std::collections::VecDeque::new();
        self.level[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, limit: i128) -> i128 {
        if u == t {
            return limit;
        }
        while self.iter[u] < self.head[u].len() {
            let e = self.head[u][self.iter[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let pushed = self.dfs(v, t, limit.min(self.cap[e]));
                if pushed > 0 {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return pushed;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    fn run(&mut self, s: usize, t: usize) -> i128 {
        let mut total = 0;
        while self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let pushed = self.dfs(s, t, i128::MAX);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }

    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}
