//! Browser demo bindings: a thin JSON facade over the library for the
//! static page in `www/`.
//!
//! Three interactive operations are exposed: full spectrum analysis with
//! Cheeger-cut data, maximum-nodal eigenvector construction for paths and
//! cycles, and eigenpair verification of a user-supplied vector. All
//! results are JSON strings; errors come back as `{"error": …}` so the
//! page can render them inline.

use onelap::cheeger;
use onelap::eigen::{self, VertexFunction};
use onelap::graph::{Graph, NamedGraph};
use onelap::nodal;
use onelap::rational::{format_ratio, parse_ratio};
use onelap::spectrum::{self, Family};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn load_graph(spec: &str) -> Result<Graph, String> {
    let value: serde_json::Value =
        serde_json::from_str(spec).map_err(|e| format!("bad graph spec: {e}"))?;
    if let Some(name) = value.get("name").and_then(|v| v.as_str()) {
        let named: NamedGraph = name.parse().map_err(|e| format!("{e}"))?;
        return Ok(Graph::named(named));
    }
    if let Some(family) = value.get("family").and_then(|v| v.as_str()) {
        let n = value
            .get("n")
            .and_then(|v| v.as_u64())
            .ok_or("family spec needs n")? as usize;
        let family: Family = family.parse().map_err(|e| format!("{e}"))?;
        return family.generate(n).map_err(|e| format!("{e}"));
    }
    if let Some(edges) = value.get("edges").and_then(|v| v.as_str()) {
        return Graph::parse(edges).map_err(|e| format!("{e}"));
    }
    Err("graph spec needs \"name\", \"family\" or \"edges\"".to_string())
}

fn graph_json(g: &Graph) -> serde_json::Value {
    json!({
        "n": g.vertex_count(),
        "vol": g.volume(),
        "edges": g.edges(),
        "degrees": (1..=g.vertex_count()).map(|v| g.degree(v)).collect::<Vec<_>>(),
    })
}

fn err_json(message: impl std::fmt::Display) -> String {
    json!({ "error": message.to_string() }).to_string()
}

/// Spectrum, Cheeger constant and optimal-cut data for a graph spec like
/// `{"name":"G6"}`, `{"family":"cycle","n":8}` or `{"edges":"5\n1 2\n…"}`.
#[wasm_bindgen]
pub fn analyze(spec: &str) -> String {
    let g = match load_graph(spec) {
        Ok(g) => g,
        Err(e) => return err_json(e),
    };
    if g.vertex_count() > 12 {
        return err_json("demo cap: at most 12 vertices");
    }
    let report = match spectrum::spectrum(&g) {
        Ok(r) => r,
        Err(e) => return err_json(e),
    };
    let cut = match cheeger::optimal_cheeger_cut(&g) {
        Ok(c) => c,
        Err(e) => return err_json(e),
    };
    json!({
        "graph": graph_json(&g),
        "spectrum": report.to_json()["spectrum"],
        "cut": cut.to_json(),
    })
    .to_string()
}

/// A maximum-nodal eigenvector of `P_n` or `C_n` at the eigenvalue `mu`
/// (as `p/q` text), with its sign pattern and domain count.
#[wasm_bindgen]
pub fn max_nodal(family: &str, n: usize, mu: &str) -> String {
    let family: Family = match family.parse() {
        Ok(f) => f,
        Err(e) => return err_json(e),
    };
    let mu = match parse_ratio(mu) {
        Ok(m) => m,
        Err(e) => return err_json(e),
    };
    let g = match family.generate(n) {
        Ok(g) => g,
        Err(e) => return err_json(e),
    };
    let x = match nodal::build_max_nodal(family, n, &mu) {
        Ok(x) => x,
        Err(e) => return err_json(e),
    };
    let count = nodal::strong_count(&g, &x).map(|d| d.strong).unwrap_or(0);
    let signs: Vec<i8> = x
        .values()
        .iter()
        .map(|v| {
            use num_traits::Signed;
            if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            }
        })
        .collect();
    json!({
        "graph": graph_json(&g),
        "mu": format_ratio(&mu),
        "count": count,
        "signs": signs,
        "values": x.values().iter().map(format_ratio).collect::<Vec<_>>(),
        "sigma": spectrum::spectrum_closed_form(family, n)
            .map(|s| s.iter().map(format_ratio).collect::<Vec<_>>())
            .unwrap_or_default(),
    })
    .to_string()
}

/// Verifies `(mu, x)` for a vector given in the vertex-function file format
/// (`v value` lines); returns the witness on success.
#[wasm_bindgen]
pub fn verify_vector(spec: &str, mu: &str, vector: &str) -> String {
    let g = match load_graph(spec) {
        Ok(g) => g,
        Err(e) => return err_json(e),
    };
    let mu = match parse_ratio(mu) {
        Ok(m) => m,
        Err(e) => return err_json(e),
    };
    let x = match VertexFunction::parse(g.vertex_count(), vector) {
        Ok(x) => x,
        Err(e) => return err_json(e),
    };
    match eigen::is_eigenpair(&g, &mu, &x) {
        Ok(Some(cert)) => json!({
            "eigenpair": true,
            "mu": format_ratio(&mu),
            "witness": cert
                .witness
                .iter()
                .map(|((i, j), z)| json!([i, j, format_ratio(z)]))
                .collect::<Vec<_>>(),
        })
        .to_string(),
        Ok(None) => json!({ "eigenpair": false, "mu": format_ratio(&mu) }).to_string(),
        Err(e) => err_json(e),
    }
}
