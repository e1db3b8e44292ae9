//! Finite simple graphs, pointed graphs and embedding maps.
//!
//! Containment throughout the crate is non-induced: a pattern embeds into a
//! host when an injective vertex map sends every pattern edge onto a host
//! edge. Graphs carry no isolated vertices except where a constructor is
//! explicitly asked to allow them; deletions always drop vertices they leave
//! isolated.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::embed;
use crate::error::{Error, Result};

pub type Vertex = u32;

/// An unordered vertex pair, stored with the smaller endpoint first.
/// Serialized as a two-element array.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "(Vertex, Vertex)")]
pub struct Edge(Vertex, Vertex);

impl TryFrom<(Vertex, Vertex)> for Edge {
    type Error = Error;

    fn try_from((u, v): (Vertex, Vertex)) -> Result<Edge> {
        Edge::new(u, v)
    }
}

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Result<Edge> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Ok(Edge(u, v)),
            std::cmp::Ordering::Greater => Ok(Edge(v, u)),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(u)),
        }
    }

    pub fn u(self) -> Vertex {
        self.0
    }

    pub fn v(self) -> Vertex {
        self.1
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.0, self.1)
    }

    pub fn contains(self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }

    pub fn shares_endpoint(self, other: Edge) -> bool {
        self.contains(other.0) || self.contains(other.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FiniteGraph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
    edge_count: usize,
}

impl FiniteGraph {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a graph whose vertex set is exactly the set of edge endpoints.
    pub fn from_edges<I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Self::empty();
        for (u, v) in edges {
            g.insert_edge(Edge::new(u, v)?)?;
        }
        Ok(g)
    }

    /// Builds a graph from an explicit vertex list. Vertices without an
    /// incident edge are rejected unless `allow_isolated` is set.
    pub fn with_vertices<V, I>(vertices: V, edges: I, allow_isolated: bool) -> Result<Self>
    where
        V: IntoIterator<Item = Vertex>,
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Self::empty();
        for v in vertices {
            g.adj.entry(v).or_default();
        }
        for (u, v) in edges {
            let e = Edge::new(u, v)?;
            for x in [u, v] {
                if !g.adj.contains_key(&x) {
                    return Err(Error::UnknownVertex(x));
                }
            }
            g.insert_edge(e)?;
        }
        if !allow_isolated {
            if let Some((&v, _)) = g.adj.iter().find(|(_, n)| n.is_empty()) {
                return Err(Error::IsolatedVertex(v));
            }
        }
        Ok(g)
    }

    pub fn single_vertex(v: Vertex) -> Self {
        let mut g = Self::empty();
        g.adj.insert(v, BTreeSet::new());
        g
    }

    fn insert_edge(&mut self, e: Edge) -> Result<()> {
        let (u, v) = e.endpoints();
        if !self.adj.entry(u).or_default().insert(v) {
            return Err(Error::DuplicateEdge(e));
        }
        self.adj.entry(v).or_default().insert(u);
        self.edge_count += 1;
        Ok(())
    }

    /// Path on `n` vertices `0..n` (a single vertex when `n == 1`).
    pub fn path(n: u32) -> Self {
        if n == 1 {
            return Self::single_vertex(0);
        }
        Self::from_edges((1..n).map(|i| (i - 1, i))).expect("path edges are simple")
    }

    pub fn cycle(n: u32) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::from_edges((0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are simple")
    }

    /// `K_n`; for `n < 2` this is the empty graph.
    pub fn complete(n: u32) -> Self {
        Self::from_edges((0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
            .expect("complete graph edges are simple")
    }

    /// `K_{1,k}` with center 0 and leaves `1..=k`.
    pub fn star(k: u32) -> Self {
        Self::from_edges((1..=k).map(|i| (0, i))).expect("star edges are simple")
    }

    /// `nK_2` on vertices `0..2n`.
    pub fn matching(n: u32) -> Self {
        Self::from_edges((0..n).map(|i| (2 * i, 2 * i + 1))).expect("matching edges are simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    /// Edges in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().flat_map(|(&u, nbrs)| {
            nbrs.range(u + 1..).map(move |&v| Edge(u, v))
        })
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.adj.get(&e.0).is_some_and(|n| n.contains(&e.1))
    }

    pub fn degree(&self, v: Vertex) -> Option<usize> {
        self.adj.get(&v).map(BTreeSet::len)
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.adj.keys().next_back().copied()
    }

    /// `g - e`, dropping endpoints left isolated.
    pub fn delete_edge(&self, e: Edge) -> Result<Self> {
        if !self.has_edge(e) {
            return Err(Error::MissingEdge(e));
        }
        let mut g = self.clone();
        g.remove_edge_unchecked(e);
        g.drop_isolated();
        Ok(g)
    }

    /// Removes several edges at once; every edge must be present.
    pub fn delete_edges<'a, I>(&self, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut g = self.clone();
        for &e in edges {
            if !g.has_edge(e) {
                return Err(Error::MissingEdge(e));
            }
            g.remove_edge_unchecked(e);
        }
        g.drop_isolated();
        Ok(g)
    }

    /// `g - V`: removes the vertices and their edges, then drops vertices
    /// left isolated.
    pub fn delete_vertices(&self, vs: &BTreeSet<Vertex>) -> Result<Self> {
        if let Some(&v) = vs.iter().find(|v| !self.contains_vertex(**v)) {
            return Err(Error::UnknownVertex(v));
        }
        let edges = self
            .edges()
            .filter(|e| !vs.contains(&e.0) && !vs.contains(&e.1))
            .map(Edge::endpoints);
        Self::from_edges(edges)
    }

    fn remove_edge_unchecked(&mut self, e: Edge) {
        if let Some(n) = self.adj.get_mut(&e.0) {
            n.remove(&e.1);
        }
        if let Some(n) = self.adj.get_mut(&e.1) {
            n.remove(&e.0);
        }
        self.edge_count -= 1;
    }

    fn drop_isolated(&mut self) {
        self.adj.retain(|_, n| !n.is_empty());
    }

    /// The spanning subgraph on the given edges with isolated vertices dropped.
    pub fn edge_subgraph<'a, I>(&self, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut g = Self::empty();
        for &e in edges {
            if !self.has_edge(e) {
                return Err(Error::MissingEdge(e));
            }
            g.insert_edge(e)?;
        }
        Ok(g)
    }

    /// Applies an injective relabeling defined on every vertex.
    pub fn relabel(&self, map: &BTreeMap<Vertex, Vertex>) -> Result<Self> {
        let mut g = Self::empty();
        for v in self.vertices() {
            let w = *map.get(&v).ok_or(Error::UnknownVertex(v))?;
            if g.adj.insert(w, BTreeSet::new()).is_some() {
                return Err(Error::InvalidParameter(format!(
                    "relabeling is not injective at {w}"
                )));
            }
        }
        for e in self.edges() {
            g.insert_edge(Edge::new(map[&e.0], map[&e.1])?)?;
        }
        Ok(g)
    }

    /// Connected components, ordered by their least vertex.
    pub fn components(&self) -> Vec<FiniteGraph> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for w in self.neighbors(v) {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            let mut g = FiniteGraph::empty();
            for &v in &comp {
                g.adj.insert(v, self.adj[&v].clone());
            }
            g.edge_count = g.adj.values().map(BTreeSet::len).sum::<usize>() / 2;
            out.push(g);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Compact one-line form `1-2,2-3`.
    pub fn to_terse(&self) -> String {
        self.edges().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for FiniteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let isolated: Vec<String> = self
            .adj
            .iter()
            .filter(|(_, n)| n.is_empty())
            .map(|(v, _)| v.to_string())
            .collect();
        write!(f, "{}", self.to_terse())?;
        if !isolated.is_empty() {
            write!(f, " +[{}]", isolated.join(","))?;
        }
        Ok(())
    }
}

/// Disjoint union with vertices relabeled consecutively: the i-th graph's
/// vertices, in ascending order, follow those of the graphs before it.
pub fn disjoint_union(gs: &[FiniteGraph]) -> FiniteGraph {
    disjoint_union_with_maps(gs).0
}

/// [`disjoint_union`] together with the relabeling used for each input.
pub fn disjoint_union_with_maps(
    gs: &[FiniteGraph],
) -> (FiniteGraph, Vec<BTreeMap<Vertex, Vertex>>) {
    let mut out = FiniteGraph::empty();
    let mut maps = Vec::with_capacity(gs.len());
    let mut next: Vertex = 0;
    for g in gs {
        let map: BTreeMap<Vertex, Vertex> = g
            .vertices()
            .map(|v| {
                let w = next;
                next += 1;
                (v, w)
            })
            .collect();
        for &w in map.values() {
            out.adj.insert(w, BTreeSet::new());
        }
        for e in g.edges() {
            out.insert_edge(Edge(map[&e.0], map[&e.1]))
                .expect("relabeled edges are fresh");
        }
        maps.push(map);
    }
    (out, maps)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedGraph {
    graph: FiniteGraph,
    basepoint: Vertex,
}

impl PointedGraph {
    pub fn new(graph: FiniteGraph, basepoint: Vertex) -> Result<Self> {
        if !graph.contains_vertex(basepoint) {
            return Err(Error::UnknownVertex(basepoint));
        }
        Ok(Self { graph, basepoint })
    }

    /// The one-vertex pointed graph.
    pub fn point(v: Vertex) -> Self {
        Self {
            graph: FiniteGraph::single_vertex(v),
            basepoint: v,
        }
    }

    pub fn graph(&self) -> &FiniteGraph {
        &self.graph
    }

    pub fn basepoint(&self) -> Vertex {
        self.basepoint
    }
}

/// An injective vertex map from a pattern graph into a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EmbeddingMap {
    pub assignment: BTreeMap<Vertex, Vertex>,
    pub pointed: bool,
}

impl EmbeddingMap {
    pub fn new(assignment: BTreeMap<Vertex, Vertex>, pointed: bool) -> Self {
        Self { assignment, pointed }
    }

    pub fn get(&self, v: Vertex) -> Option<Vertex> {
        self.assignment.get(&v).copied()
    }

    pub fn image(&self) -> BTreeSet<Vertex> {
        self.assignment.values().copied().collect()
    }

    /// Host edges hit by pattern edges.
    pub fn edge_image(&self, pattern: &FiniteGraph) -> Vec<Edge> {
        let mut out: Vec<Edge> = pattern
            .edges()
            .filter_map(|e| Edge::new(self.get(e.u())?, self.get(e.v())?).ok())
            .collect();
        out.sort();
        out
    }

    /// `other ∘ self`: first apply this map, then `other`.
    pub fn then(&self, other: &EmbeddingMap) -> Result<EmbeddingMap> {
        let assignment = self
            .assignment
            .iter()
            .map(|(&k, &v)| other.get(v).map(|w| (k, w)).ok_or(Error::UnknownVertex(v)))
            .collect::<Result<_>>()?;
        Ok(EmbeddingMap::new(assignment, self.pointed && other.pointed))
    }

    /// Independent check of the embedding conditions: domain equals the
    /// pattern's vertex set, images are host vertices, the map is injective
    /// and every pattern edge lands on a host edge.
    pub fn validate(&self, pattern: &FiniteGraph, host: &FiniteGraph) -> Result<()> {
        let domain: BTreeSet<Vertex> = self.assignment.keys().copied().collect();
        let pattern_vertices: BTreeSet<Vertex> = pattern.vertices().collect();
        if domain != pattern_vertices {
            return Err(Error::InvalidEmbedding(
                "domain differs from the pattern's vertex set".into(),
            ));
        }
        let mut seen = BTreeSet::new();
        for (&v, &w) in &self.assignment {
            if !host.contains_vertex(w) {
                return Err(Error::InvalidEmbedding(format!(
                    "{v} maps to {w}, which is not a host vertex"
                )));
            }
            if !seen.insert(w) {
                return Err(Error::InvalidEmbedding(format!("{w} is hit twice")));
            }
        }
        for e in pattern.edges() {
            let (a, b) = (self.assignment[&e.u()], self.assignment[&e.v()]);
            let ok = Edge::new(a, b).map(|f| host.has_edge(f)).unwrap_or(false);
            if !ok {
                return Err(Error::InvalidEmbedding(format!(
                    "edge {e} maps to the non-edge {a}-{b}"
                )));
            }
        }
        Ok(())
    }

    pub fn validate_pointed(&self, pattern: &PointedGraph, host: &PointedGraph) -> Result<()> {
        self.validate(pattern.graph(), host.graph())?;
        if self.get(pattern.basepoint()) != Some(host.basepoint()) {
            return Err(Error::InvalidEmbedding(format!(
                "basepoint {} does not map to {}",
                pattern.basepoint(),
                host.basepoint()
            )));
        }
        Ok(())
    }
}

/// Searches for an embedding of `pattern` into `host`. Returns the first map
/// found when candidates are tried in ascending host id order.
pub fn find_embedding(pattern: &FiniteGraph, host: &FiniteGraph) -> Option<EmbeddingMap> {
    let p = embed::Dense::from_graph(pattern);
    let h = embed::Dense::from_graph(host);
    let map = embed::find(&p, &h, &[])?;
    Some(EmbeddingMap::new(p.lift(&h, &map), false))
}

/// Like [`find_embedding`], with the pattern basepoint sent to the host
/// basepoint.
pub fn find_pointed_embedding(pattern: &PointedGraph, host: &PointedGraph) -> Option<EmbeddingMap> {
    let p = embed::Dense::from_graph(pattern.graph());
    let h = embed::Dense::from_graph(host.graph());
    let fixed = [(p.index_of(pattern.basepoint())?, h.index_of(host.basepoint())?)];
    let map = embed::find(&p, &h, &fixed)?;
    Some(EmbeddingMap::new(p.lift(&h, &map), true))
}

pub fn contains(host: &FiniteGraph, pattern: &FiniteGraph) -> bool {
    find_embedding(pattern, host).is_some()
}
