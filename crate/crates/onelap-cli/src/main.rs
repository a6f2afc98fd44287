//! Command-line front end: exact 1-Laplacian spectra, Cheeger cuts, nodal
//! counts, multiplicities and module composition, with deterministic text
//! and JSON output.

use std::collections::BTreeMap;
use std::fs;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use onelap::cheeger;
use onelap::compose::{self, JoinSpec, MuModule};
use onelap::eigen::{self, VertexFunction};
use onelap::graph::{Graph, NamedGraph};
use onelap::multiplicity;
use onelap::nodal;
use onelap::rational::{format_ratio, parse_ratio, Ratio};
use onelap::spectrum::{self, Family};

#[derive(Parser)]
#[command(
    name = "onelap",
    about = "Exact 1-Laplacian spectral computations on finite graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Where the working graph comes from: a file, a family, or a named graph.
#[derive(Args, Clone)]
struct GraphSource {
    /// Edge-list file (first data line: n; then "u v" lines; '#' comments)
    #[arg(long, group = "graph_source")]
    graph: Option<String>,
    /// Graph family: path | cycle | complete (needs --n)
    #[arg(long, group = "graph_source", requires = "n")]
    family: Option<String>,
    /// Number of vertices for --family
    #[arg(long)]
    n: Option<usize>,
    /// Named graph: G6 | EX_10G | EX_5G | EX_7G | EX_9G | EX_5ORDER
    #[arg(long, group = "graph_source")]
    name: Option<String>,
}

impl GraphSource {
    fn load(&self) -> Result<Graph> {
        match (&self.graph, &self.family, &self.name) {
            (Some(path), None, None) => {
                let text = fs::read_to_string(path)
                    .with_context(|| format!("cannot read graph file {path}"))?;
                Ok(Graph::parse(&text)?)
            }
            (None, Some(family), None) => {
                let n = self.n.ok_or_else(|| anyhow!("--family requires --n"))?;
                let family: Family = family.parse()?;
                Ok(family.generate(n)?)
            }
            (None, None, Some(name)) => {
                let named: NamedGraph = name.parse()?;
                Ok(Graph::named(named))
            }
            (None, None, None) => bail!("missing graph source: --graph, --family or --name"),
            _ => bail!("give exactly one graph source (--graph, --family or --name)"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Complete spectrum with binary eigenvector supports
    Spectrum {
        #[command(flatten)]
        source: GraphSource,
        /// Emit JSON
        #[arg(long)]
        json: bool,
        /// Vertex cap for the exponential enumeration
        #[arg(long, default_value_t = spectrum::DEFAULT_SPECTRUM_CAP)]
        cap: usize,
    },
    /// Cheeger constant h(G), or the k-way constant with -k
    Cheeger {
        #[command(flatten)]
        source: GraphSource,
        /// Compute the k-way constant h_k instead of h = h(G)
        #[arg(short)]
        k: Option<usize>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = cheeger::DEFAULT_CUT_CAP)]
        cap: usize,
    },
    /// All Cheeger cuts and the optimal ones (minimal null-set volume)
    Cut {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = cheeger::DEFAULT_CUT_CAP)]
        cap: usize,
    },
    /// Maximum number of strong nodal domains at an eigenvalue
    Nu {
        #[command(flatten)]
        source: GraphSource,
        /// Eigenvalue as p/q
        #[arg(long)]
        mu: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = nodal::DEFAULT_NU_CAP)]
        cap: usize,
    },
    /// Algebraic multiplicity and a maximal fundamental system
    Am {
        #[command(flatten)]
        source: GraphSource,
        /// Eigenvalue as p/q
        #[arg(long)]
        mu: String,
        #[arg(long)]
        json: bool,
    },
    /// Verify an eigenpair from a vertex-function file
    Verify {
        #[command(flatten)]
        source: GraphSource,
        /// Candidate eigenvalue as p/q
        #[arg(long)]
        mu: String,
        /// Vertex-function file ("v value" lines)
        #[arg(long)]
        vector: String,
        #[arg(long)]
        json: bool,
    },
    /// Exact infimum of the energy I over span(basis) ∩ X
    #[command(name = "minI")]
    MinI {
        #[command(flatten)]
        source: GraphSource,
        /// Basis file(s); each holds vertex-function blocks separated by
        /// blank lines
        #[arg(long, required = true)]
        basis: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Compose modules: plug, paste, join or extend
    Compose {
        /// Technique: plug | paste | join | extend
        #[arg(long)]
        technique: String,
        /// Module description files
        #[arg(required = true)]
        modules: Vec<String>,
        /// plug: matched socket pairs "u:v[,u:v...]" (m1 socket : m2 socket)
        #[arg(long = "match")]
        matching: Option<String>,
        /// paste/join: chosen socket vertex per module "u1,u2,..."
        #[arg(long)]
        at: Option<String>,
        /// join: new edges between chosen vertices as module pairs "1-2,2-3"
        #[arg(long)]
        edges: Option<String>,
        /// join: optional alpha coefficients "1-2=0,2-3=1/3"
        #[arg(long)]
        alpha: Option<String>,
        /// extend: map "moduleVertex:hostVertex,..." into the host graph
        #[arg(long)]
        embed: Option<String>,
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        json: bool,
    },
    /// Census of connected graphs up to isomorphism with their spectra
    Census {
        /// Largest order to enumerate (1..=6)
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// List the available graph families and named graphs
    Families,
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("ONELAP_THREADS") {
        if let Ok(threads) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Spectrum { source, json, cap } => {
            let g = source.load()?;
            let report = spectrum::spectrum_capped(&g, cap)?;
            if json {
                println!("{}", serde_json::to_string(&report.to_json())?);
            } else {
                println!(
                    "sigma(G) on {} vertices (vol {}): {} distinct eigenvalues",
                    report.n,
                    report.vol,
                    report.entries.len()
                );
                for entry in &report.entries {
                    let supports: Vec<String> =
                        entry.supports.iter().map(|s| s.to_string()).collect();
                    println!(
                        "mu = {:<6} supports: {}",
                        format_ratio(&entry.mu),
                        supports.join(" ")
                    );
                }
            }
            Ok(())
        }
        Command::Cheeger {
            source,
            k,
            json,
            cap,
        } => {
            let g = source.load()?;
            let (label, value) = match k {
                None => ("h".to_string(), cheeger::cheeger_h_capped(&g, cap)?),
                Some(k) => (format!("h_{k}"), cheeger::k_way_cheeger_capped(&g, k, cap)?),
            };
            if json {
                println!(
                    "{}",
                    serde_json::json!({ "k": k.unwrap_or(1), "value": format_ratio(&value) })
                );
            } else {
                println!("{label}(G) = {}", format_ratio(&value));
            }
            Ok(())
        }
        Command::Cut { source, json, cap } => {
            let g = source.load()?;
            let report = cheeger::optimal_cheeger_cut_capped(&g, cap)?;
            if json {
                println!("{}", serde_json::to_string(&report.to_json())?);
            } else {
                println!("h(G) = {}", format_ratio(&report.h_value));
                let cuts: Vec<String> = report.cuts.iter().map(|c| c.to_string()).collect();
                println!("cuts at h: {}", cuts.join(" "));
                for cut in &report.optimal {
                    println!(
                        "optimal: support {} delta_0 = {} null set {}",
                        cut.support, cut.delta_zero, cut.null_set
                    );
                }
            }
            Ok(())
        }
        Command::Nu {
            source,
            mu,
            json,
            cap,
        } => {
            let g = source.load()?;
            let mu = parse_ratio(&mu)?;
            let (count, witness) = nodal::nu_capped(&g, &mu, cap)?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "mu": format_ratio(&mu),
                        "nu": count,
                        "witness": function_json(&witness),
                    })
                );
            } else {
                println!("nu({}, G) = {count}", format_ratio(&mu));
                println!("witness:");
                print!("{}", witness.to_file_format());
            }
            Ok(())
        }
        Command::Am { source, mu, json } => {
            let g = source.load()?;
            let mu = parse_ratio(&mu)?;
            let (rank, system) = multiplicity::algebraic_multiplicity(&g, &mu)?;
            if json {
                println!("{}", serde_json::to_string(&system.to_json())?);
            } else {
                println!("am({}) = {rank}", format_ratio(&mu));
                let members: Vec<String> = system.members.iter().map(|m| m.to_string()).collect();
                println!("system: {}", members.join(" "));
            }
            Ok(())
        }
        Command::Verify {
            source,
            mu,
            vector,
            json,
        } => {
            let g = source.load()?;
            let mu = parse_ratio(&mu)?;
            let text = fs::read_to_string(&vector)
                .with_context(|| format!("cannot read vector file {vector}"))?;
            let x = VertexFunction::parse(g.vertex_count(), &text)?;
            let verdict = eigen::is_eigenpair(&g, &mu, &x)?;
            if json {
                let witness = verdict.as_ref().map(|cert| {
                    cert.witness
                        .iter()
                        .map(|((i, j), z)| (format!("{i},{j}"), format_ratio(z)))
                        .collect::<BTreeMap<_, _>>()
                });
                println!(
                    "{}",
                    serde_json::json!({
                        "mu": format_ratio(&mu),
                        "eigenpair": verdict.is_some(),
                        "witness": witness,
                    })
                );
            } else {
                match verdict {
                    Some(cert) => {
                        println!("eigenpair: mu = {}", format_ratio(&mu));
                        for ((i, j), z) in &cert.witness {
                            println!("z[{i},{j}] = {}", format_ratio(z));
                        }
                    }
                    None => println!("not an eigenpair at mu = {}", format_ratio(&mu)),
                }
            }
            Ok(())
        }
        Command::MinI {
            source,
            basis,
            json,
        } => {
            let g = source.load()?;
            let mut vectors = Vec::new();
            for path in &basis {
                let text = fs::read_to_string(path)
                    .with_context(|| format!("cannot read basis file {path}"))?;
                vectors.extend(parse_basis_blocks(g.vertex_count(), &text)?);
            }
            let value = cheeger::min_i_on_subspace(&g, &vectors)?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "dim": vectors.len(),
                        "min_I": format_ratio(&value),
                    })
                );
            } else {
                println!(
                    "min I over span(basis) ∩ X = {} (basis dim {})",
                    format_ratio(&value),
                    vectors.len()
                );
            }
            Ok(())
        }
        Command::Compose {
            technique,
            modules,
            matching,
            at,
            edges,
            alpha,
            embed,
            source,
            json,
        } => {
            let parsed: Vec<MuModule> = modules
                .iter()
                .map(|path| {
                    let text = fs::read_to_string(path)
                        .with_context(|| format!("cannot read module file {path}"))?;
                    Ok(MuModule::parse(&text)?)
                })
                .collect::<Result<_>>()?;
            match technique.as_str() {
                "plug" => {
                    if parsed.len() != 2 {
                        bail!("plug takes exactly two module files");
                    }
                    let pairs = parse_pairs(
                        matching
                            .as_deref()
                            .ok_or_else(|| anyhow!("plug requires --match"))?,
                        ':',
                    )?;
                    let result = compose::plug(&parsed[0], &parsed[1], &pairs)?;
                    emit_module(&result, json)
                }
                "paste" => {
                    let at = parse_list(
                        at.as_deref()
                            .ok_or_else(|| anyhow!("paste requires --at"))?,
                    )?;
                    let result = compose::paste(&parsed, &at)?;
                    emit_module(&result, json)
                }
                "join" => {
                    let chosen =
                        parse_list(at.as_deref().ok_or_else(|| anyhow!("join requires --at"))?)?;
                    let new_edges = match edges.as_deref() {
                        Some(text) => parse_pairs(text, '-')?,
                        None => Vec::new(),
                    };
                    let alpha = match alpha.as_deref() {
                        Some(text) => Some(parse_alpha(text)?),
                        None => None,
                    };
                    let result = compose::join(
                        &parsed,
                        &JoinSpec {
                            chosen,
                            new_edges,
                            alpha,
                        },
                    )?;
                    emit_module(&result, json)
                }
                "extend" => {
                    if parsed.len() != 1 {
                        bail!("extend takes exactly one module file");
                    }
                    let host = source.load()?;
                    let map = parse_pairs(
                        embed
                            .as_deref()
                            .ok_or_else(|| anyhow!("extend requires --embed"))?,
                        ':',
                    )?;
                    let embedding: BTreeMap<usize, usize> = map.into_iter().collect();
                    let extended = compose::extend(&host, &parsed[0], &embedding)?;
                    if json {
                        println!(
                            "{}",
                            serde_json::json!({
                                "mu": format_ratio(&parsed[0].mu),
                                "vector": function_json(&extended),
                            })
                        );
                    } else {
                        println!("# eigenvector at mu = {}", format_ratio(&parsed[0].mu));
                        print!("{}", extended.to_file_format());
                    }
                    Ok(())
                }
                other => bail!("unknown technique {other:?} (plug | paste | join | extend)"),
            }
        }
        Command::Census { max_n, json } => {
            let report = spectrum::census(max_n)?;
            if json {
                println!("{}", serde_json::to_string(&report.to_json())?);
            } else {
                for order in &report.orders {
                    println!(
                        "order {}: {} connected graphs up to isomorphism",
                        order.n,
                        order.classes.len()
                    );
                    for class in &order.classes {
                        let edges: Vec<String> = class
                            .edges
                            .iter()
                            .map(|(i, j)| format!("({i},{j})"))
                            .collect();
                        let sigma: Vec<String> = class.spectrum.iter().map(format_ratio).collect();
                        println!("  edges [{}] sigma: {}", edges.join(" "), sigma.join(" < "));
                    }
                }
                let last = report.orders.last().expect("max_n >= 1");
                println!("#{} = {}", last.n, last.max_distinct);
            }
            Ok(())
        }
        Command::Families => {
            println!("families (use --family NAME --n N):");
            println!("  path      P_n, n >= 2");
            println!("  cycle     C_n, n >= 3");
            println!("  complete  K_n, n >= 2");
            println!("named graphs (use --name NAME):");
            for named in NamedGraph::ALL {
                let g = Graph::named(named);
                println!(
                    "  {:<10} {} vertices, {} edges",
                    named.as_str(),
                    g.vertex_count(),
                    g.edge_count()
                );
            }
            Ok(())
        }
    }
}

fn function_json(x: &VertexFunction) -> BTreeMap<usize, String> {
    (1..=x.len())
        .filter(|&v| !num_traits::Zero::is_zero(x.get(v)))
        .map(|v| (v, format_ratio(x.get(v))))
        .collect()
}

fn emit_module(m: &MuModule, json: bool) -> Result<()> {
    if json {
        println!(
            "{}",
            serde_json::json!({
                "mu": format_ratio(&m.mu),
                "n": m.graph.vertex_count(),
                "edges": m.graph.edges(),
                "core": m.core.to_vec(),
                "socket": m.socket.to_vec(),
                "phi": function_json(&m.phi),
            })
        );
    } else {
        println!("# verified mu-module (empty socket means eigenvector)");
        print!("{}", m.to_file_format());
    }
    Ok(())
}

/// Parses "a,b,c" into numbers.
fn parse_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| anyhow!("bad number {t:?}"))
        })
        .collect()
}

/// Parses "a:b,c:d" (or "a-b,c-d") into pairs.
fn parse_pairs(text: &str, sep: char) -> Result<Vec<(usize, usize)>> {
    text.split(',')
        .map(|t| {
            let (a, b) = t
                .trim()
                .split_once(sep)
                .ok_or_else(|| anyhow!("bad pair {t:?}, expected \"a{sep}b\""))?;
            Ok((
                a.trim().parse().map_err(|_| anyhow!("bad number {a:?}"))?,
                b.trim().parse().map_err(|_| anyhow!("bad number {b:?}"))?,
            ))
        })
        .collect()
}

/// Parses "1-2=0,2-3=1/3" into alpha coefficients.
fn parse_alpha(text: &str) -> Result<Vec<((usize, usize), Ratio)>> {
    text.split(',')
        .map(|t| {
            let (pair, value) = t
                .trim()
                .split_once('=')
                .ok_or_else(|| anyhow!("bad alpha {t:?}, expected \"i-j=p/q\""))?;
            let mut pairs = parse_pairs(pair, '-')?;
            let pair = pairs.pop().ok_or_else(|| anyhow!("bad alpha pair {t:?}"))?;
            Ok((pair, parse_ratio(value)?))
        })
        .collect()
}

/// Splits a basis file into vertex-function blocks at blank lines.
fn parse_basis_blocks(n: usize, text: &str) -> Result<Vec<VertexFunction>> {
    let mut blocks = Vec::new();
    let mut current = String::new();
    for line in text.lines().chain(std::iter::once("")) {
        if line.trim().is_empty() {
            if !current.trim().is_empty() {
                blocks.push(VertexFunction::parse(n, &current)?);
            }
            current.clear();
        } else {
            current.push_str(line);
            current.push('\n');
        }
    }
    if blocks.is_empty() {
        bail!("basis file holds no vectors");
    }
    Ok(blocks)
}
