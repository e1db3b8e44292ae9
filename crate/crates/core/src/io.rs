//! Text formats: graph JSON, the terse edge list, DOT, and the JSON shapes
//! of symbolic graphs, tooth functions, hub graphs and colorings.
//!
//! Graph JSON is `{"vertices": [..], "edges": [[u, v], ..]}` with an
//! optional `"basepoint"`. The terse form is a single line such as
//! `1-2,2-3,3-1`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::arrowing::{Color, Coloring};
use crate::error::{Error, Result};
use crate::families::{SymbolicGraph, ToothFn};
use crate::graph::{FiniteGraph, PointedGraph, Vertex};
use crate::hubgraph::HubGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(default)]
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<Vertex>,
}

impl GraphJson {
    pub fn from_graph(g: &FiniteGraph) -> Self {
        GraphJson {
            vertices: g.vertices().collect(),
            edges: g.edges().map(|e| e.endpoints()).collect(),
            basepoint: None,
        }
    }

    pub fn from_pointed(g: &PointedGraph) -> Self {
        GraphJson {
            basepoint: Some(g.basepoint()),
            ..Self::from_graph(g.graph())
        }
    }
}

fn parse_error(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

fn parse_terse(text: &str) -> Result<Vec<(Vertex, Vertex)>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (a, b) = t
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("expected u-v, got {t:?}")))?;
            let u = a.trim().parse().map_err(parse_error)?;
            let v = b.trim().parse().map_err(parse_error)?;
            Ok((u, v))
        })
        .collect()
}

fn parse_raw(text: &str) -> Result<GraphJson> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        serde_json::from_str(trimmed).map_err(parse_error)
    } else {
        Ok(GraphJson {
            vertices: Vec::new(),
            edges: parse_terse(trimmed)?,
            basepoint: None,
        })
    }
}

/// Parses graph JSON or the terse edge list. Isolated vertices are
/// rejected.
pub fn parse_graph(text: &str) -> Result<FiniteGraph> {
    let raw = parse_raw(text)?;
    build(&raw, None)
}

fn build(raw: &GraphJson, allow: Option<Vertex>) -> Result<FiniteGraph> {
    let mut vertices = raw.vertices.clone();
    for &(u, v) in &raw.edges {
        vertices.push(u);
        vertices.push(v);
    }
    vertices.extend(allow);
    let g = FiniteGraph::with_vertices(vertices, raw.edges.iter().copied(), true)?;
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == Some(0) && Some(v) != allow) {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(g)
}

/// Parses a pointed graph; the basepoint may be isolated (a one-vertex
/// pattern). Terse input is pointed at its least vertex.
pub fn parse_pointed(text: &str) -> Result<PointedGraph> {
    let raw = parse_raw(text)?;
    let base = match raw.basepoint {
        Some(b) => b,
        None => raw
            .vertices
            .iter()
            .copied()
            .chain(raw.edges.iter().flat_map(|&(u, v)| [u, v]))
            .min()
            .ok_or_else(|| Error::Parse("pointed graph without vertices".into()))?,
    };
    let listed = raw.vertices.contains(&base) || raw.edges.iter().any(|&(u, v)| u == base || v == base);
    if !listed {
        return Err(Error::UnknownVertex(base));
    }
    PointedGraph::new(build(&raw, Some(base))?, base)
}

pub fn graph_to_json(g: &FiniteGraph) -> String {
    serde_json::to_string(&GraphJson::from_graph(g)).expect("graph JSON serializes")
}

pub fn pointed_to_json(g: &PointedGraph) -> String {
    serde_json::to_string(&GraphJson::from_pointed(g)).expect("graph JSON serializes")
}

/// DOT rendering; colored edges get `color=red` / `color=blue`.
pub fn to_dot(g: &FiniteGraph, coloring: Option<&Coloring>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {v};");
    }
    for e in g.edges() {
        let attr = match coloring.and_then(|c| c.get(e)) {
            Some(Color::Red) => " [color=red]",
            Some(Color::Blue) => " [color=blue]",
            None => "",
        };
        let _ = writeln!(out, "  {} -- {}{attr};", e.u(), e.v());
    }
    out.push_str("}\n");
    out
}

pub fn parse_symbolic(text: &str) -> Result<SymbolicGraph> {
    let g: SymbolicGraph = serde_json::from_str(text).map_err(parse_error)?;
    g.validate()?;
    Ok(g)
}

/// Accepts a bare tooth function or a `{"family": "comb", ..}` object.
pub fn parse_tooth(text: &str) -> Result<ToothFn> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(parse_error)?;
    if value.get("family").is_some() {
        match serde_json::from_value(value).map_err(parse_error)? {
            SymbolicGraph::Comb(t) => Ok(t),
            _ => Err(Error::Parse("expected a comb".into())),
        }
    } else {
        serde_json::from_value(value).map_err(parse_error)
    }
}

pub fn parse_hub(text: &str) -> Result<HubGraph> {
    serde_json::from_str(text).map_err(parse_error)
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    serde_json::from_str(text).map_err(parse_error)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{Tail, truncate};

    #[test]
    fn graph_formats() {
        let g = parse_graph(r#"{"vertices":[1,2,3],"edges":[[1,2],[2,3]]}"#).unwrap();
        assert_eq!(g, FiniteGraph::from_edges([(1, 2), (2, 3)]).unwrap());
        assert_eq!(parse_graph("1-2, 2-3").unwrap(), g);
        assert_eq!(parse_graph(&graph_to_json(&g)).unwrap(), g);
        assert!(matches!(
            parse_graph(r#"{"vertices":[1,2,9],"edges":[[1,2]]}"#),
            Err(Error::IsolatedVertex(9))
        ));
        assert!(matches!(parse_graph("1-1"), Err(Error::SelfLoop(1))));
        assert!(matches!(parse_graph("1-2,2-1"), Err(Error::DuplicateEdge(_))));
        assert!(matches!(parse_graph("1=2"), Err(Error::Parse(_))));
    }

    #[test]
    fn pointed_formats() {
        let p = parse_pointed(r#"{"vertices":[4],"edges":[],"basepoint":4}"#).unwrap();
        assert_eq!(p, PointedGraph::point(4));
        let q = parse_pointed(r#"{"edges":[[0,1],[1,2]],"basepoint":1}"#).unwrap();
        assert_eq!(q.basepoint(), 1);
        assert_eq!(parse_pointed(&pointed_to_json(&q)).unwrap(), q);
        assert!(parse_pointed(r#"{"edges":[[0,1]],"basepoint":7}"#).is_err());
    }

    #[test]
    fn dot_output() {
        let g = FiniteGraph::path(3);
        let c = Coloring::monochromatic(&g, Color::Blue);
        let dot = to_dot(&g, Some(&c));
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("0 -- 1 [color=blue];"));
    }

    #[test]
    fn symbolic_formats() {
        let comb = parse_symbolic(r#"{"family":"comb","prefix":[3],"tail":{"kind":"periodic","cycle":[2]}}"#).unwrap();
        assert_eq!(truncate(&comb, 1).unwrap().edge_count(), 3);
        let t = parse_tooth(r#"{"prefix":[],"tail":{"kind":"arithmetic","start":1,"step":1}}"#).unwrap();
        assert_eq!(t, ToothFn::identity());
        let t = parse_tooth(r#"{"family":"comb","prefix":[2],"tail":{"kind":"periodic","cycle":[1]}}"#).unwrap();
        assert_eq!(t.tail(), &Tail::Periodic { cycle: vec![1] });
        assert!(parse_symbolic(r#"{"family":"kray","k":0}"#).is_err());
        let u = parse_symbolic(r#"{"family":"union","n":2,"of":{"family":"ray"}}"#).unwrap();
        assert_eq!(truncate(&u, 2).unwrap().components().len(), 2);
    }

    #[test]
    fn hub_and_coloring_formats() {
        let h = parse_hub(r#"{"n":2,"hub_edges":[[1,2]],"classes":[{"sig":[1,0],"count":"inf"},{"sig":[0,1],"count":5}]}"#).unwrap();
        assert_eq!(h.hubs(), 2);
        let c = parse_coloring(r#"{"red":[[0,1]],"blue":[[1,2]]}"#).unwrap();
        assert_eq!(c.len(), 2);
    }
}
