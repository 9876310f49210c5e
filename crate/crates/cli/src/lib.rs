//! Command implementations behind the `leafpower` binary.
//!
//! Every command returns an [`Outcome`]: the exit status (0 accept, 1 reject,
//! 2 input error, 3 capability limit), the text for standard output, and the
//! files to write when an output directory was given.

use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use leafpower::cert::{Certificate, NamedGoodPartition, KINDS};
use leafpower::chordal::{chordality, Chordality};
use leafpower::dot::{certificate_to_dot, graph_to_dot};
use leafpower::io::{graph_to_json_value, parse_graph};
use leafpower::linear::{bluered_to_linear_leafroot, linear_leafroot_to_bluered, normalize_bluered};
use leafpower::oracle::{self, bruteforce_linear_leafpower};
use leafpower::star::{find_good_partition_detailed, synthesize_star_model, CliqueFailure, StarOutcome};
use leafpower::{Error, Graph};

pub const ACCEPT: u8 = 0;
pub const REJECT: u8 = 1;
pub const INPUT_ERROR: u8 = 2;
pub const LIMIT: u8 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    /// Machine-readable report; printed as JSON under `--json`.
    pub report: Value,
    /// Human-readable summary printed otherwise.
    pub summary: String,
    /// `(file name, contents)` pairs for `--out-dir`.
    pub files: Vec<(String, String)>,
}

impl Outcome {
    fn new(code: u8, report: Value, summary: impl Into<String>) -> Self {
        Self { code, report, summary: summary.into(), files: Vec::new() }
    }

    pub fn input_error(message: impl std::fmt::Display) -> Self {
        let message = message.to_string();
        Self::new(INPUT_ERROR, json!({"status": "input-error", "error": message}), format!("error: {message}"))
    }

    fn with_certificates(mut self, stem: &str, certs: &[Certificate]) -> Self {
        let mut inline = serde_json::Map::new();
        for c in certs {
            inline.insert(c.kind().to_owned(), c.to_json());
            self.files.push((format!("{stem}.{}.json", c.kind()), c.to_json_string() + "\n"));
        }
        self.report["certificates"] = Value::Object(inline);
        self
    }

    /// What goes to standard output.
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            serde_json::to_string_pretty(&self.report).expect("report serializes") + "\n"
        } else if self.summary.ends_with('\n') {
            self.summary.clone()
        } else {
            format!("{}\n", self.summary)
        }
    }

    pub fn write_files(&self, dir: &Path) -> std::io::Result<()> {
        std::fs::create_dir_all(dir)?;
        for (name, contents) in &self.files {
            std::fs::write(dir.join(name), contents)?;
        }
        Ok(())
    }
}

pub fn read_graph(path: &Path) -> Result<Graph, Outcome> {
    let text = std::fs::read_to_string(path).map_err(|e| Outcome::input_error(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Outcome::input_error(format!("{}: {e}", path.display())))
}

pub fn read_certificate(path: &Path) -> Result<Certificate, Outcome> {
    let text = std::fs::read_to_string(path).map_err(|e| Outcome::input_error(format!("{}: {e}", path.display())))?;
    Certificate::from_json_str(&text).map_err(|e| Outcome::input_error(format!("{}: {e}", path.display())))
}

fn stem(path: &Path) -> String {
    path.file_stem().map_or_else(|| "graph".to_owned(), |s| s.to_string_lossy().into_owned())
}

fn names(g: &Graph, vs: impl IntoIterator<Item = usize>) -> Vec<String> {
    vs.into_iter().map(|v| g.name(v).to_owned()).collect()
}

fn not_chordal(g: &Graph, cycle: &[usize]) -> Outcome {
    let cycle = names(g, cycle.iter().copied());
    Outcome::new(
        REJECT,
        json!({"status": "reject", "stage": "not-chordal", "cycle": cycle}),
        format!("reject: not chordal; chordless cycle {}", cycle.join(" ")),
    )
}

/// Star NeS recognition with good-partition and star-nes certificates.
pub fn recognize_star(g: &Graph, stem: &str) -> Outcome {
    match find_good_partition_detailed(g) {
        StarOutcome::NotChordal(cycle) => not_chordal(g, &cycle),
        StarOutcome::Found(gp) => {
            let model = match synthesize_star_model(g, &gp) {
                Ok(m) => m,
                Err(e) => return Outcome::input_error(format!("internal: synthesis failed: {e}")),
            };
            let named = NamedGoodPartition::from_indexed(g, &gp);
            let summary = format!(
                "accept: star NeS model with {} ray(s); central clique {}",
                model.ray_count(),
                named.x.join(" ")
            );
            Outcome::new(ACCEPT, json!({"status": "accept"}), summary)
                .with_certificates(stem, &[Certificate::GoodPartition(named), Certificate::StarNes(model)])
        }
        StarOutcome::NoGoodPartition(failures) => {
            let log: Vec<Value> = failures
                .iter()
                .map(|(x, f)| match f {
                    CliqueFailure::ComponentNotXInterval(c) => {
                        json!({"X": g.set_names(x), "failure": "component-not-x-interval", "component": g.set_names(c)})
                    }
                    CliqueFailure::Stuck { remaining, blocks } => json!({
                        "X": g.set_names(x),
                        "failure": "no-removable-vertex",
                        "remaining": g.set_names(remaining),
                        "blocks": blocks.blocks().iter().map(|b| g.set_names(b)).collect::<Vec<_>>(),
                    }),
                })
                .collect();
            let summary = format!("reject: no good partition ({} maximal clique(s) tried)", failures.len());
            Outcome::new(REJECT, json!({"status": "reject", "stage": "no-good-partition", "cliques": log}), summary)
        }
    }
}

fn linear_accept(g: &Graph, stem: &str, root: leafpower::linear::LinearLeafRoot, how: &str) -> Outcome {
    let bluered = match linear_leafroot_to_bluered(g, &root) {
        Ok(m) => m,
        Err(e) => return Outcome::input_error(format!("internal: conversion failed: {e}")),
    };
    Outcome::new(ACCEPT, json!({"status": "accept", "method": how}), format!("accept: linear leaf power ({how})"))
        .with_certificates(stem, &[Certificate::LinearLeafRoot(root), Certificate::BlueRed(bluered)])
}

/// Linear-leaf-power decision. With a model, the model is verified and
/// converted; otherwise small graphs go to the exhaustive oracle and larger
/// ones are refused with the capability-limit status.
pub fn recognize_linear(g: &Graph, stem: &str, max_oracle_n: usize, model: Option<&Certificate>) -> Outcome {
    if let Some(model) = model {
        let report = match model.verify(g) {
            Ok(r) => r,
            Err(e) => return Outcome::input_error(e),
        };
        if !report.valid {
            return Outcome::new(
                REJECT,
                json!({"status": "reject", "stage": "model-does-not-verify", "discrepancies": report.discrepancies}),
                format!("reject: the given model disagrees with the graph on {} pair(s)", report.discrepancies.len()),
            );
        }
        return match model {
            Certificate::LinearLeafRoot(root) => linear_accept(g, stem, root.clone(), "model"),
            Certificate::BlueRed(m) => match bluered_to_linear_leafroot(g, &normalize_bluered(m)) {
                Ok(root) => linear_accept(g, stem, root, "model"),
                Err(e) => Outcome::input_error(format!("internal: conversion failed: {e}")),
            },
            other => Outcome::input_error(format!("--model must be bluered or linear-leafroot, found {}", other.kind())),
        };
    }
    if let Chordality::NotChordal(cycle) = chordality(g) {
        return not_chordal(g, &cycle);
    }
    match bruteforce_linear_leafpower(g, max_oracle_n) {
        Ok(Some(root)) => linear_accept(g, stem, root, "oracle"),
        Ok(None) => Outcome::new(
            REJECT,
            json!({"status": "reject", "stage": "oracle", "detail": "no spine order admits a caterpillar"}),
            "reject: not a linear leaf power (exhaustive search)",
        ),
        Err(Error::SizeLimit { n, limit }) => Outcome::new(
            LIMIT,
            json!({"status": "model-required", "n": n, "max_oracle_n": limit}),
            format!("model required: {n} vertices exceeds --max-oracle-n {limit}; pass --model"),
        ),
        Err(e) => Outcome::input_error(e),
    }
}

/// Verifies a certificate against a graph, optionally insisting on its kind.
pub fn verify(g: &Graph, cert: &Certificate, expected_kind: Option<&str>) -> Outcome {
    if let Some(kind) = expected_kind {
        if kind != cert.kind() {
            return Outcome::input_error(format!("kind mismatch: expected {kind}, certificate is {}", cert.kind()));
        }
    }
    match cert.verify(g) {
        Ok(r) => {
            let code = if r.valid { ACCEPT } else { REJECT };
            let summary = match (&r.reason, r.valid) {
                (_, true) => format!("valid {} certificate", cert.kind()),
                (Some(reason), false) => format!("invalid: {reason}"),
                (None, false) => {
                    let lines: Vec<String> = r
                        .discrepancies
                        .iter()
                        .map(|d| format!("{} {}: graph {}, model {}", d.u, d.v, edge_word(d.expected_edge), edge_word(!d.expected_edge)))
                        .collect();
                    format!("invalid: {} discrepancy(ies)\n{}", lines.len(), lines.join("\n"))
                }
            };
            Outcome::new(code, json!({"status": if r.valid { "valid" } else { "invalid" }, "kind": cert.kind(), "report": r}), summary)
        }
        Err(e) => Outcome::input_error(e),
    }
}

fn edge_word(edge: bool) -> &'static str {
    if edge {
        "edge"
    } else {
        "non-edge"
    }
}

/// Conversions: bluered ↔ linear-leafroot, good-partition → star-nes (needs
/// the graph), star-nes → nes-model.
pub fn convert(cert: &Certificate, to: &str, graph: Option<&Graph>) -> Outcome {
    let converted = match (cert, to) {
        (Certificate::BlueRed(m), "linear-leafroot") => {
            let g = graph.cloned().unwrap_or_else(|| m.induced_graph());
            bluered_to_linear_leafroot(&g, &normalize_bluered(m)).map(Certificate::LinearLeafRoot)
        }
        (Certificate::LinearLeafRoot(r), "bluered") => {
            let g = match graph.cloned().map(Ok).unwrap_or_else(|| r.induced_graph()) {
                Ok(g) => g,
                Err(e) => return Outcome::input_error(e),
            };
            linear_leafroot_to_bluered(&g, r).map(Certificate::BlueRed)
        }
        (Certificate::GoodPartition(named), "star-nes") => {
            let Some(g) = graph else {
                return Outcome::input_error("good-partition → star-nes needs --graph");
            };
            named.to_indexed(g).and_then(|gp| synthesize_star_model(g, &gp)).map(Certificate::StarNes)
        }
        (Certificate::StarNes(m), "nes-model") => m.to_nes_model().map(Certificate::Nes),
        (c, to) => {
            return Outcome::input_error(format!("kind mismatch: no conversion from {} to {to}", c.kind()));
        }
    };
    match converted {
        Ok(c) => {
            let text = c.to_json_string();
            let mut out = Outcome::new(ACCEPT, c.to_json(), text.clone());
            out.files.push((format!("converted.{}.json", c.kind()), text + "\n"));
            out
        }
        Err(e) => Outcome::new(REJECT, json!({"status": "reject", "error": e.to_string()}), format!("conversion failed: {e}")),
    }
}

/// A generated `(graph, certificate)` pair.
pub fn generate(kind: &str, seed: u64, size: usize, rays: usize) -> Outcome {
    let (g, cert) = match kind {
        "bluered" => {
            let (g, m) = oracle::gen_bluered(seed, size);
            (g, Certificate::BlueRed(m))
        }
        "linear-leafroot" => {
            let (g, m) = oracle::gen_linear_root(seed, size);
            (g, Certificate::LinearLeafRoot(m))
        }
        "star-nes" => {
            let (g, m) = oracle::gen_star_model(seed, size, rays);
            (g, Certificate::StarNes(m))
        }
        "nes-model" => {
            let (g, m) = oracle::gen_nes_model(seed, size);
            (g, Certificate::Nes(m))
        }
        "good-partition" => {
            let (g, _) = oracle::gen_star_model(seed, size, rays);
            let StarOutcome::Found(gp) = find_good_partition_detailed(&g) else {
                return Outcome::input_error("internal: generated star graph was rejected");
            };
            let named = NamedGoodPartition::from_indexed(&g, &gp);
            (g, Certificate::GoodPartition(named))
        }
        other => return Outcome::input_error(format!("unknown kind `{other}` (expected one of {})", KINDS.join(", "))),
    };
    let graph = graph_to_json_value(&g);
    let mut out = Outcome::new(
        ACCEPT,
        json!({"graph": graph, "certificate": cert.to_json()}),
        format!("generated {kind}: {} vertices, {} edges (seed {seed})", g.order(), g.edge_count()),
    );
    out.files.push(("graph.json".into(), serde_json::to_string_pretty(&graph).unwrap() + "\n"));
    out.files.push((format!("certificate.{kind}.json"), cert.to_json_string() + "\n"));
    out
}

/// DOT for a certificate file, or for a graph file when it is not one.
pub fn export_dot(path: &Path) -> Outcome {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::input_error(format!("{}: {e}", path.display())),
    };
    let looks_like_cert = serde_json::from_str::<Value>(&text).ok().is_some_and(|v| v.get("kind").is_some());
    let dot = if looks_like_cert {
        match Certificate::from_json_str(&text) {
            Ok(c) => certificate_to_dot(&c),
            Err(e) => return Outcome::input_error(format!("{}: {e}", path.display())),
        }
    } else {
        match parse_graph(&text) {
            Ok(g) => graph_to_dot(&g),
            Err(e) => return Outcome::input_error(format!("{}: {e}", path.display())),
        }
    };
    let mut out = Outcome::new(ACCEPT, json!({"dot": dot}), dot.clone());
    out.files.push((format!("{}.dot", stem(path)), dot));
    out
}

/// Runs `run` over every input (in parallel with `jobs > 1`) and combines
/// the outcomes in input order. The combined status is the most severe one:
/// input error, then capability limit, then reject.
pub fn batch(inputs: &[PathBuf], jobs: usize, run: impl Fn(&Graph, &str) -> Outcome + Sync) -> Outcome {
    let one = |p: &PathBuf| match read_graph(p) {
        Ok(g) => run(&g, &stem(p)),
        Err(o) => o,
    };
    let outcomes: Vec<Outcome> = if jobs > 1 {
        use rayon::prelude::*;
        match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| inputs.par_iter().map(one).collect()),
            Err(e) => return Outcome::input_error(e),
        }
    } else {
        inputs.iter().map(one).collect()
    };
    if outcomes.len() == 1 {
        return outcomes.into_iter().next().unwrap();
    }
    let severity = |c: u8| match c {
        INPUT_ERROR => 3,
        LIMIT => 2,
        REJECT => 1,
        _ => 0,
    };
    let code = outcomes.iter().map(|o| o.code).max_by_key(|&c| severity(c)).unwrap_or(ACCEPT);
    let report = Value::Array(
        inputs.iter().zip(&outcomes).map(|(p, o)| json!({"input": p.display().to_string(), "code": o.code, "report": o.report})).collect(),
    );
    let summary = inputs.iter().zip(&outcomes).map(|(p, o)| format!("{}: {}", p.display(), o.summary.trim_end())).collect::<Vec<_>>().join("\n");
    let files = outcomes.into_iter().flat_map(|o| o.files).collect();
    Outcome { code, report, summary, files }
}

pub fn graph_stem(path: &Path) -> String {
    stem(path)
}
