//! Graphviz DOT export of graphs and certificates.

use std::fmt::Write;

use crate::cert::Certificate;
use crate::graph::Graph;
use crate::linear::{BlueRedModel, Color, LinearLeafRoot};
use crate::nes::{NesModel, TreePoint};
use crate::rational::display;
use crate::star::StarNesModel;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.names() {
        writeln!(out, "  {};", quote(v)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {} -- {};", quote(g.name(u)), quote(g.name(v))).unwrap();
    }
    out.push_str("}\n");
    out
}

/// The caterpillar: spine nodes `s0, s1, …`, one leaf per vertex, every edge
/// labelled with its weight.
pub fn linear_leafroot_to_dot(root: &LinearLeafRoot) -> String {
    let mut out = String::from("graph caterpillar {\n  rankdir=LR;\n");
    for (i, leg) in root.legs.iter().enumerate() {
        writeln!(out, "  s{i} [shape=point];").unwrap();
        if let Some(leg) = leg {
            writeln!(out, "  {} [shape=box];", quote(&leg.vertex)).unwrap();
            writeln!(out, "  s{i} -- {} [label={}];", quote(&leg.vertex), quote(&display(&leg.weight))).unwrap();
        }
    }
    for (i, w) in root.spine_weights.iter().enumerate() {
        writeln!(out, "  s{i} -- s{} [label={}, penwidth=2];", i + 1, quote(&display(w))).unwrap();
    }
    out.push_str("}\n");
    out
}

/// The star: center `c`, ray tips `r0, r1, …`; central subtrees are listed on
/// the center, block vertices hang off their ray with their extent.
pub fn star_nes_to_dot(m: &StarNesModel) -> String {
    let mut out = String::from("graph star {\n");
    let central: Vec<String> = m
        .central
        .iter()
        .map(|(v, reach)| format!("{v}: {}", reach.iter().map(display).collect::<Vec<_>>().join(", ")))
        .collect();
    let label = if central.is_empty() { "center".to_owned() } else { format!("center\\n{}", central.join("\\n")) };
    writeln!(out, "  c [shape=box, label={}];", quote(&label)).unwrap();
    for (j, len) in m.ray_lengths.iter().enumerate() {
        writeln!(out, "  r{j} [shape=point];").unwrap();
        writeln!(out, "  c -- r{j} [label={}];", quote(&display(len))).unwrap();
    }
    for (v, b) in &m.blocks {
        writeln!(out, "  {} [label={}];", quote(v), quote(&format!("{v} [{}, {}]", display(&b.start), display(&b.end)))).unwrap();
        writeln!(out, "  r{} -- {} [style=dashed];", b.ray, quote(v)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// The embedded tree with edge lengths; each ball is a box attached to the
/// node at (or the first endpoint of the edge holding) its center.
pub fn nes_model_to_dot(m: &NesModel) -> String {
    let mut out = String::from("graph nes {\n");
    for n in 0..m.tree.nodes {
        writeln!(out, "  n{n} [shape=circle, label=\"{n}\"];").unwrap();
    }
    for (a, b, len) in &m.tree.edges {
        writeln!(out, "  n{a} -- n{b} [label={}];", quote(&display(len))).unwrap();
    }
    for (v, ball) in &m.balls {
        let (anchor, at) = match &ball.center {
            TreePoint::Node(n) => (*n, format!("node {n}")),
            TreePoint::OnEdge { edge, offset } => (m.tree.edges[*edge].0, format!("edge {edge} + {}", display(offset))),
        };
        let label = format!("{v}\\n{at}\\nr = {}", display(&ball.radius));
        writeln!(out, "  {} [shape=box, label={}];", quote(v), quote(&label)).unwrap();
        writeln!(out, "  n{anchor} -- {} [style=dotted];", quote(v)).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn bluered_to_dot(m: &BlueRedModel) -> String {
    let g = m.induced_graph();
    let mut out = String::from("graph bluered {\n");
    for (v, (color, i)) in &m.intervals {
        let c = if *color == Color::Blue { "blue" } else { "red" };
        writeln!(out, "  {} [color={c}, label={}];", quote(v), quote(&format!("{v} [{}, {}]", display(&i.lo), display(&i.hi)))).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {} -- {};", quote(g.name(u)), quote(g.name(v))).unwrap();
    }
    out.push_str("}\n");
    out
}

/// DOT for any certificate. The good partition is drawn as clusters of vertex
/// names (its graph is not part of the certificate).
pub fn certificate_to_dot(c: &Certificate) -> String {
    match c {
        Certificate::BlueRed(m) => bluered_to_dot(m),
        Certificate::LinearLeafRoot(r) => linear_leafroot_to_dot(r),
        Certificate::StarNes(m) => star_nes_to_dot(m),
        Certificate::Nes(m) => nes_model_to_dot(m),
        Certificate::GoodPartition(gp) => {
            let mut out = String::from("graph partition {\n  subgraph cluster_x {\n    label=\"X\";\n");
            for (i, v) in gp.permutation.iter().enumerate() {
                writeln!(out, "    {} [label={}];", quote(v), quote(&format!("{v} ({})", i + 1))).unwrap();
            }
            out.push_str("  }\n");
            for (j, block) in gp.blocks.iter().enumerate() {
                writeln!(out, "  subgraph cluster_b{j} {{\n    label=\"B{j}\";").unwrap();
                for v in block {
                    writeln!(out, "    {};", quote(v)).unwrap();
                }
                out.push_str("  }\n");
            }
            out.push_str("}\n");
            out
        }
    }
}
