//! Compactness arguments made finite: level sets of partial pointed
//! embeddings, ray prefixes, finite arrowing subgraphs of symbolic graphs
//! and bounded pointed-arrowing transfer.
//!
//! Level `n` of a [`LevelSets`] holds every pointed embedding of the first
//! `n + 1` pattern vertices in breadth-first order, each linked to its
//! restriction on level `n - 1`. For locally finite hosts every level is
//! finite, and a path through all levels is an embedding of the pattern.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::arrowing::{arrows, arrows_pointed};
use crate::canonical::canonical_form_pointed;
use crate::error::{Error, Result};
use crate::families::{truncate, SymbolicGraph};
use crate::graph::{find_embedding, Edge, EmbeddingMap, FiniteGraph, PointedGraph, Vertex};
use crate::hubgraph::hub_truncate;

/// Vertices by distance from the basepoint, ascending id within a distance.
pub fn bfs_enumeration(g: &PointedGraph) -> Result<Vec<Vertex>> {
    let graph = g.graph();
    let mut order = vec![g.basepoint()];
    let mut seen = BTreeSet::from([g.basepoint()]);
    let mut frontier = vec![g.basepoint()];
    while !frontier.is_empty() {
        let next: BTreeSet<Vertex> = frontier
            .iter()
            .flat_map(|&v| graph.neighbors(v))
            .filter(|w| !seen.contains(w))
            .collect();
        seen.extend(next.iter().copied());
        order.extend(next.iter().copied());
        frontier = next.into_iter().collect();
    }
    if order.len() != graph.vertex_count() {
        return Err(Error::Disconnected);
    }
    Ok(order)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelSets {
    /// Pattern vertices in breadth-first order.
    pub order: Vec<Vertex>,
    /// `levels[n][i]` lists the images of `order[0..=n]`; each level is in
    /// lexicographic order.
    pub levels: Vec<Vec<Vec<Vertex>>>,
    /// `parents[n][i]` is the index on level `n - 1` of the restriction of
    /// `levels[n][i]` (empty for level 0).
    pub parents: Vec<Vec<usize>>,
}

impl LevelSets {
    pub fn sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn map_at(&self, level: usize, i: usize) -> Option<EmbeddingMap> {
        let images = self.levels.get(level)?.get(i)?;
        Some(EmbeddingMap::new(
            self.order.iter().copied().zip(images.iter().copied()).collect(),
            true,
        ))
    }

    /// Every map restricts to its linked parent.
    pub fn is_consistent(&self) -> bool {
        (1..self.levels.len()).all(|n| {
            self.levels[n].iter().zip(&self.parents[n]).all(|(m, &p)| {
                self.levels[n - 1].get(p).is_some_and(|parent| m[..n] == parent[..])
            })
        })
    }
}

/// Builds levels `0..=max_level` of partial pointed embeddings.
pub fn build_level_sets(pattern: &PointedGraph, host: &PointedGraph, max_level: usize) -> Result<LevelSets> {
    let order = bfs_enumeration(pattern)?;
    if max_level >= order.len() {
        return Err(Error::InvalidParameter(format!(
            "level {max_level} exceeds the pattern's {} vertices",
            order.len()
        )));
    }
    let position: BTreeMap<Vertex, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let back: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            pattern
                .graph()
                .neighbors(v)
                .map(|w| position[&w])
                .filter(|&j| j < i)
                .collect()
        })
        .collect();
    let h = host.graph();
    let mut levels = vec![vec![vec![host.basepoint()]]];
    let mut parents = vec![Vec::new()];
    for n in 1..=max_level {
        let prev = &levels[n - 1];
        let grown: Vec<Vec<Vec<Vertex>>> = prev
            .par_iter()
            .map(|m| {
                let anchor = m[back[n][0]];
                h.neighbors(anchor)
                    .filter(|w| !m.contains(w))
                    .filter(|&w| {
                        back[n].iter().all(|&j| h.has_edge(Edge::new(m[j], w).expect("w is unused")))
                    })
                    .map(|w| {
                        let mut next = m.clone();
                        next.push(w);
                        next
                    })
                    .collect()
            })
            .collect();
        let mut level = Vec::new();
        let mut links = Vec::new();
        for (p, children) in grown.into_iter().enumerate() {
            links.extend(std::iter::repeat_n(p, children.len()));
            level.extend(children);
        }
        levels.push(level);
        parents.push(links);
    }
    Ok(LevelSets { order, levels, parents })
}

/// The lexicographically least full embedding, when the levels reach the
/// whole pattern and the top level is nonempty.
pub fn stitch_embedding(levels: &LevelSets) -> Result<Option<EmbeddingMap>> {
    if levels.levels.len() != levels.order.len() {
        return Err(Error::InvalidParameter(
            "levels do not cover the whole pattern".into(),
        ));
    }
    Ok(levels.map_at(levels.levels.len() - 1, 0))
}

/// Finite truncation of any symbolic graph, hub graphs included.
pub fn truncate_any(g: &SymbolicGraph, depth: u32) -> Result<FiniteGraph> {
    match g {
        SymbolicGraph::Hub(h) => {
            h.validate()?;
            Ok(hub_truncate(h, u64::from(depth)))
        }
        _ => truncate(g, depth),
    }
}

fn pointed_truncation(g: &SymbolicGraph, depth: u32) -> Result<PointedGraph> {
    PointedGraph::new(truncate_any(g, depth)?, g.root())
}

/// A pointed path on `len + 1` vertices from the root of `host`, found
/// through the level sets of the depth-`depth` truncation.
pub fn ray_prefix_search(host: &SymbolicGraph, prefix_len: u32, depth: u32) -> Result<Option<EmbeddingMap>> {
    let path = PointedGraph::new(FiniteGraph::path(prefix_len + 1), 0)?;
    let host = pointed_truncation(host, depth)?;
    let levels = build_level_sets(&path, &host, prefix_len as usize)?;
    stitch_embedding(&levels)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteArrowingReport {
    /// Least depth whose truncation arrows, if any up to the cap.
    pub depth: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    /// `(depth, arrows)` for every depth examined.
    pub checked: Vec<(u32, bool)>,
    /// No arrowing truncation up to the cap; this does not refute arrowing.
    pub inconclusive: bool,
}

/// Searches depths `1..=cap` for the least truncation of `f` that arrows
/// `(g, h)`. Truncations grow with the depth, so every deeper truncation
/// arrows too.
pub fn finite_arrowing_subgraph(
    f: &SymbolicGraph,
    g: &FiniteGraph,
    h: &FiniteGraph,
    cap: u32,
) -> Result<(FiniteArrowingReport, Option<FiniteGraph>)> {
    let mut checked = Vec::new();
    for d in 1..=cap {
        let t = truncate_any(f, d)?;
        let yes = arrows(&t, g, h).arrows;
        checked.push((d, yes));
        if yes {
            let report = FiniteArrowingReport {
                depth: Some(d),
                graph: Some(t.to_terse()),
                checked,
                inconclusive: false,
            };
            return Ok((report, Some(t)));
        }
    }
    let report = FiniteArrowingReport {
        depth: None,
        graph: None,
        checked,
        inconclusive: true,
    };
    Ok((report, None))
}

/// Connected subgraphs of `g` containing the basepoint, one per pointed
/// isomorphism class, in order of edge count then label; at most `cap`.
pub fn connected_pointed_subgraphs(g: &PointedGraph, cap: usize) -> Vec<PointedGraph> {
    let base = g.basepoint();
    let mut classes: BTreeMap<String, PointedGraph> = BTreeMap::new();
    let mut out = Vec::new();
    let mut layer: BTreeSet<BTreeSet<Edge>> = BTreeSet::from([BTreeSet::new()]);
    let point = PointedGraph::point(base);
    classes.insert(canonical_form_pointed(&point), point.clone());
    out.push(point);
    while !layer.is_empty() && out.len() < cap {
        let mut next = BTreeSet::new();
        for edges in &layer {
            let mut reached: BTreeSet<Vertex> = edges.iter().flat_map(|e| [e.u(), e.v()]).collect();
            reached.insert(base);
            for &v in &reached {
                for w in g.graph().neighbors(v) {
                    let e = Edge::new(v, w).expect("simple graph");
                    if !edges.contains(&e) {
                        let mut grown = edges.clone();
                        grown.insert(e);
                        next.insert(grown);
                    }
                }
            }
        }
        let mut fresh: Vec<(String, PointedGraph)> = Vec::new();
        for edges in &next {
            let sub = g.graph().edge_subgraph(edges).expect("edges of g");
            let pg = PointedGraph::new(sub, base).expect("basepoint is covered");
            let label = canonical_form_pointed(&pg);
            if !classes.contains_key(&label) && !fresh.iter().any(|(l, _)| *l == label) {
                fresh.push((label, pg));
            }
        }
        fresh.sort_by(|a, b| a.0.cmp(&b.0));
        for (label, pg) in fresh {
            if out.len() >= cap {
                break;
            }
            classes.insert(label, pg.clone());
            out.push(pg);
        }
        layer = next;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransferEntry {
    /// Terse edge list of the subgraph.
    pub subgraph: String,
    pub vertices: usize,
    pub edges: usize,
    /// Least slack at which the pointed arrowing holds, if any.
    pub passing_slack: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransferReport {
    pub depth: u32,
    pub max_slack: u32,
    pub cap: usize,
    /// True when the enumeration stopped at the cap.
    pub truncated: bool,
    pub entries: Vec<TransferEntry>,
    pub all_pass: bool,
    /// The same check for the whole truncation of `g`.
    pub conclusion_slack: Option<u32>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

pub const TRANSFER_CAP: usize = 200;

/// Degree of the root in the infinite graph; `None` when infinite.
fn root_degree(f: &SymbolicGraph) -> Result<Option<usize>> {
    let infinite = match f {
        SymbolicGraph::Star | SymbolicGraph::CompleteInfinite | SymbolicGraph::Hub(_) => true,
        SymbolicGraph::UnionCopies { of, .. } => matches!(
            **of,
            SymbolicGraph::Star | SymbolicGraph::CompleteInfinite | SymbolicGraph::Hub(_)
        ),
        _ => false,
    };
    if infinite {
        return Ok(None);
    }
    let t = truncate_any(f, 1)?;
    Ok(t.degree(f.root()))
}

/// For each connected pointed subgraph `ĝ` of `g` (a finite truncation
/// pointed at its root), finds the least slack `≤ max_slack` for which the
/// depth-`depth + slack` truncation of `f` pointed-arrows `(ĝ, h)`.
pub fn bounded_pointed_arrowing_transfer(
    f: &SymbolicGraph,
    g: &PointedGraph,
    h: &FiniteGraph,
    depth: u32,
    max_slack: u32,
) -> Result<TransferReport> {
    if !g.graph().is_connected() {
        return Err(Error::Disconnected);
    }
    let hosts: Vec<PointedGraph> = (0..=max_slack)
        .map(|s| pointed_truncation(f, depth + s))
        .collect::<Result<_>>()?;
    let least = |pattern: &PointedGraph| {
        (0..=max_slack).find(|&s| arrows_pointed(&hosts[s as usize], pattern, h).arrows)
    };
    let subs = connected_pointed_subgraphs(g, TRANSFER_CAP);
    let truncated = subs.len() >= TRANSFER_CAP;
    let entries: Vec<TransferEntry> = subs
        .par_iter()
        .map(|sub| TransferEntry {
            subgraph: sub.graph().to_terse(),
            vertices: sub.graph().vertex_count(),
            edges: sub.graph().edge_count(),
            passing_slack: least(sub),
        })
        .collect();
    let mut warnings = Vec::new();
    if let Some(deg) = root_degree(f)? {
        let star = FiniteGraph::star(deg as u32);
        if !h.is_empty() && find_embedding(h, &star).is_none() {
            warnings.push(format!(
                "H does not embed in K_{{1,{deg}}}, the star at the root of F; pointed arrowing may be impossible"
            ));
        }
    }
    Ok(TransferReport {
        depth,
        max_slack,
        cap: TRANSFER_CAP,
        truncated,
        all_pass: entries.iter().all(|e| e.passing_slack.is_some()),
        conclusion_slack: least(g),
        entries,
        warnings,
    })
}

/// The spider with legs of lengths `1..=d` at center 0, pointed at the
/// center. Leg `j` has vertices `j(j-1)/2 + 1 ..= j(j-1)/2 + j` outward, so
/// `spider(d)` is a labeled subgraph of `spider(d + 1)`.
///
/// Its infinite union has a pointed path of every finite length from the
/// center but no ray: the center has infinite degree, and the level sets
/// for a path pattern shrink by one map per level.
pub fn spider(d: u32) -> PointedGraph {
    let mut edges = Vec::new();
    for j in 1..=d {
        let first = j * (j - 1) / 2 + 1;
        edges.push((0, first));
        for t in 1..j {
            edges.push((first + t - 1, first + t));
        }
    }
    let g = if edges.is_empty() {
        FiniteGraph::single_vertex(0)
    } else {
        FiniteGraph::from_edges(edges).expect("spider edges are simple")
    };
    PointedGraph::new(g, 0).expect("center is a vertex")
}
