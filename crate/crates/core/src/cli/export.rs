//! JSON, DOT and line formats for graphs and element lists.

use serde::Serialize;

use crate::cartan::{DominantWeight, Weight};
use crate::graph::CrystalGraph;

#[derive(Serialize)]
struct GraphJson<'a> {
    lambda: Option<Weight>,
    realization: &'a str,
    nodes: Vec<NodeJson<'a>>,
    edges: Vec<EdgeJson>,
}

#[derive(Serialize)]
struct NodeJson<'a> {
    id: usize,
    repr: &'a str,
    weight: Weight,
}

#[derive(Serialize)]
struct EdgeJson {
    from: usize,
    to: usize,
    label: u8,
}

pub fn graph_to_json<E>(g: &CrystalGraph<E>, lambda: Option<DominantWeight>, realization: &str) -> String {
    let doc = GraphJson {
        lambda: lambda.map(DominantWeight::weight),
        realization,
        nodes: g
            .nodes
            .iter()
            .map(|n| NodeJson { id: n.id, repr: &n.repr, weight: n.weight })
            .collect(),
        edges: g
            .edges
            .iter()
            .map(|e| EdgeJson { from: e.from, to: e.to, label: e.label.number() })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("graph serializes");
    text.push('\n');
    text
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn graph_to_dot<E>(g: &CrystalGraph<E>, lambda: Option<DominantWeight>, realization: &str) -> String {
    let mut text = String::from("digraph crystal {\n");
    match lambda {
        Some(l) => text.push_str(&format!("  // realization={realization} lambda={},{}\n", l.h1(), l.h2())),
        None => text.push_str(&format!("  // realization={realization}\n")),
    }
    for n in &g.nodes {
        text.push_str(&format!("  n{} [label=\"{}\"];\n", n.id, dot_escape(&n.repr)));
    }
    for e in &g.edges {
        text.push_str(&format!("  n{} -> n{} [label=\"i={}\"];\n", e.from, e.to, e.label));
    }
    text.push_str("}\n");
    text
}

/// One row of `enumerate` output; `coords` are u- or t-values.
pub struct ListedElement {
    pub repr: String,
    pub weight: Weight,
    pub coords: [u32; 6],
}

#[derive(Serialize)]
struct ListJson<'a> {
    lambda: Weight,
    realization: &'a str,
    elements: Vec<ListedJson<'a>>,
}

#[derive(Serialize)]
struct ListedJson<'a> {
    repr: &'a str,
    weight: Weight,
    coords: [u32; 6],
}

pub fn list_to_json(lambda: DominantWeight, realization: &str, rows: &[ListedElement]) -> String {
    let doc = ListJson {
        lambda: lambda.weight(),
        realization,
        elements: rows
            .iter()
            .map(|r| ListedJson { repr: &r.repr, weight: r.weight, coords: r.coords })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("list serializes");
    text.push('\n');
    text
}

pub fn list_to_lines(monomial: bool, rows: &[ListedElement]) -> String {
    let tag = if monomial { "u" } else { "t" };
    rows.iter()
        .map(|r| {
            let c = r.coords.map(|v| v.to_string()).join(",");
            format!("{}\tweight={},{}\t{tag}={c}\n", r.repr, r.weight.h1, r.weight.h2)
        })
        .collect()
}
