//! Hub graphs: `n` hubs of infinite degree with every edge meeting a hub.
//!
//! Non-hub vertices ("leaves") are grouped by signature, the bit vector of
//! hubs they are adjacent to. Each signature class has a finite or infinite
//! size. Hubs have ids `1..=n`; the `t`-th leaf (1-based) of the `c`-th
//! class in signature order has id `n + 1 + (t - 1) * classes + c`, which
//! does not depend on the truncation depth.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Add;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::arrowing::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{disjoint_union_with_maps, Edge, EmbeddingMap, FiniteGraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Count {
    Finite(u64),
    Infinite,
}

impl Count {
    pub fn is_infinite(self) -> bool {
        matches!(self, Count::Infinite)
    }

    /// Concrete size used by a depth-`d` truncation.
    pub fn truncated(self, d: u64) -> u64 {
        match self {
            Count::Finite(k) => k,
            Count::Infinite => d,
        }
    }
}

impl Add for Count {
    type Output = Count;

    fn add(self, rhs: Count) -> Count {
        match (self, rhs) {
            (Count::Finite(a), Count::Finite(b)) => Count::Finite(a + b),
            _ => Count::Infinite,
        }
    }
}

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Count::Finite(k) => s.serialize_u64(*k),
            Count::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Count {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct CountVisitor;
        impl Visitor<'_> for CountVisitor {
            type Value = Count;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a nonnegative integer or \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Count, E> {
                Ok(Count::Finite(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Count, E> {
                u64::try_from(v)
                    .map(Count::Finite)
                    .map_err(|_| E::custom("count must be nonnegative"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Count, E> {
                match v {
                    "inf" | "infinite" | "∞" => Ok(Count::Infinite),
                    _ => Err(E::custom(format!("unknown count {v:?}"))),
                }
            }
        }
        d.deserialize_any(CountVisitor)
    }
}

/// Adjacency of a leaf to the hubs; bit `i` is hub `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Signature(pub Vec<u8>);

impl Signature {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has(&self, hub_index: usize) -> bool {
        self.0.get(hub_index) == Some(&1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeafClass {
    pub sig: Signature,
    pub count: Count,
}

#[derive(Deserialize)]
struct RawHubGraph {
    n: usize,
    #[serde(default)]
    hub_edges: Vec<(u32, u32)>,
    classes: Vec<LeafClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawHubGraph")]
pub struct HubGraph {
    n: usize,
    hub_edges: BTreeSet<Edge>,
    classes: Vec<LeafClass>,
}

impl TryFrom<RawHubGraph> for HubGraph {
    type Error = Error;

    fn try_from(raw: RawHubGraph) -> Result<Self> {
        HubGraph::new(raw.n, raw.hub_edges, raw.classes)
    }
}

impl HubGraph {
    /// Classes are stored in ascending signature order; a repeated
    /// signature has its counts added.
    pub fn new<I>(n: usize, hub_edges: I, classes: Vec<LeafClass>) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        if n == 0 {
            return Err(Error::InvalidHubGraph("needs at least one hub".into()));
        }
        let mut edges = BTreeSet::new();
        for (a, b) in hub_edges {
            let e = Edge::new(a, b)?;
            if a == 0 || b == 0 || a as usize > n || b as usize > n {
                return Err(Error::InvalidHubGraph(format!("hub edge {e} names a non-hub")));
            }
            if !edges.insert(e) {
                return Err(Error::DuplicateEdge(e));
            }
        }
        let mut merged: BTreeMap<Signature, Count> = BTreeMap::new();
        for class in classes {
            if class.sig.len() != n {
                return Err(Error::InvalidHubGraph(format!(
                    "signature {:?} has length {}, expected {n}",
                    class.sig.0,
                    class.sig.len()
                )));
            }
            if class.sig.0.iter().any(|&b| b > 1) {
                return Err(Error::InvalidHubGraph("signature bits must be 0 or 1".into()));
            }
            if class.sig.is_zero() {
                return Err(Error::InvalidHubGraph("zero signature gives isolated leaves".into()));
            }
            let entry = merged.entry(class.sig).or_insert(Count::Finite(0));
            *entry = *entry + class.count;
        }
        let g = Self {
            n,
            hub_edges: edges,
            classes: merged
                .into_iter()
                .map(|(sig, count)| LeafClass { sig, count })
                .collect(),
        };
        g.validate()?;
        Ok(g)
    }

    /// The infinite star as a one-hub graph.
    pub fn star() -> Self {
        Self::new(
            1,
            [],
            vec![LeafClass { sig: Signature(vec![1]), count: Count::Infinite }],
        )
        .expect("valid")
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if self.classes.iter().any(|c| c.sig.len() != self.n) {
            return Err(Error::InvalidHubGraph("signature length mismatch".into()));
        }
        Ok(())
    }

    pub fn hubs(&self) -> usize {
        self.n
    }

    pub fn hub_edges(&self) -> &BTreeSet<Edge> {
        &self.hub_edges
    }

    pub fn classes(&self) -> &[LeafClass] {
        &self.classes
    }

    /// Degree of hub `i` (1-based) counted over leaves and hub edges.
    pub fn hub_degree(&self, i: usize) -> Count {
        let hub = i as Vertex;
        let from_hubs = self.hub_edges.iter().filter(|e| e.contains(hub)).count() as u64;
        self.classes
            .iter()
            .filter(|c| c.sig.has(i - 1))
            .fold(Count::Finite(from_hubs), |acc, c| acc + c.count)
    }

    pub fn leaf_vertex(&self, class: usize, t: u64) -> Vertex {
        let id = self.n as u64 + 1 + (t - 1) * self.classes.len() as u64 + class as u64;
        Vertex::try_from(id).expect("leaf id fits in u32")
    }
}

/// Every hub has infinite degree, i.e. lies in some infinite class. That
/// every edge meets a hub holds by construction.
pub fn is_family_member(g: &HubGraph) -> bool {
    (1..=g.n).all(|i| g.hub_degree(i).is_infinite())
}

/// Expands every class to concrete leaves, infinite classes to `d` leaves.
pub fn hub_truncate(g: &HubGraph, d: u64) -> FiniteGraph {
    let mut edges: Vec<(Vertex, Vertex)> = g.hub_edges.iter().map(|e| e.endpoints()).collect();
    for (c, class) in g.classes.iter().enumerate() {
        for t in 1..=class.count.truncated(d) {
            let leaf = g.leaf_vertex(c, t);
            for i in 0..g.n {
                if class.sig.has(i) {
                    edges.push((i as Vertex + 1, leaf));
                }
            }
        }
    }
    FiniteGraph::from_edges(edges).expect("hub truncation is simple")
}

/// The pigeonhole self-embedding: within the least infinite signature class,
/// leaf `t` goes to leaf `t + 1`; every other vertex is fixed. Realized from
/// the depth-`depth` truncation into the depth-`depth + 1` one, where the
/// first leaf of the class is left out of the image.
pub fn construct_self_embedding(g: &HubGraph, depth: u64) -> Result<EmbeddingMap> {
    if !is_family_member(g) {
        return Err(Error::NotFamilyMember(
            "some hub has finite degree".into(),
        ));
    }
    let class = g
        .classes
        .iter()
        .position(|c| c.count.is_infinite())
        .ok_or_else(|| Error::NotFamilyMember("no infinite signature class".into()))?;
    let pattern = hub_truncate(g, depth);
    let host = hub_truncate(g, depth + 1);
    let shifted: BTreeMap<Vertex, Vertex> = (1..=depth)
        .map(|t| (g.leaf_vertex(class, t), g.leaf_vertex(class, t + 1)))
        .collect();
    let assignment = pattern
        .vertices()
        .map(|v| (v, shifted.get(&v).copied().unwrap_or(v)))
        .collect();
    let map = EmbeddingMap::new(assignment, false);
    map.validate(&pattern, &host)?;
    Ok(map)
}

/// Colors every edge at a vertex of `hubs` blue and everything else red.
/// Whether this is good for a given pair is left to the caller.
pub fn good_coloring_few_hubs(f: &FiniteGraph, hubs: &BTreeSet<Vertex>, n: usize) -> Result<Coloring> {
    if hubs.len() >= n {
        return Err(Error::TooManyHubs { hubs: hubs.len(), n });
    }
    if let Some(&v) = hubs.iter().find(|v| !f.contains_vertex(**v)) {
        return Err(Error::UnknownVertex(v));
    }
    let assignment = f
        .edges()
        .map(|e| {
            let blue = hubs.contains(&e.u()) || hubs.contains(&e.v());
            (e, if blue { Color::Blue } else { Color::Red })
        })
        .collect();
    Coloring::new(f, assignment)
}

/// Result of the blue-edge covering loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlueCover {
    pub vertices: BTreeSet<Vertex>,
    pub iterations: usize,
    /// The blue edges picked, in order; pairwise disjoint.
    pub chosen: Vec<Edge>,
}

/// Repeatedly picks the least blue edge avoiding `V` and adds both
/// endpoints to `V`, until no blue edge avoids `V`. Picking an `n`-th edge
/// means the picks form a blue `nK_2`, returned as [`Error::BlueMatching`].
pub fn blue_matching_vertex_set(f: &FiniteGraph, c: &Coloring, n: usize) -> Result<BlueCover> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    c.check_domain(f)?;
    let blue: Vec<Edge> = c.edges_of(Color::Blue).collect();
    let mut vertices = BTreeSet::new();
    let mut chosen = Vec::new();
    while let Some(&e) = blue
        .iter()
        .find(|e| !vertices.contains(&e.u()) && !vertices.contains(&e.v()))
    {
        chosen.push(e);
        if chosen.len() == n {
            return Err(Error::BlueMatching(chosen));
        }
        vertices.insert(e.u());
        vertices.insert(e.v());
    }
    Ok(BlueCover {
        iterations: chosen.len(),
        vertices,
        chosen,
    })
}

/// Builds `nG - e` (with `e` an edge of `g`, removed from copy
/// `component`) and colors the least edge of every other copy blue, all
/// else red. Requires `g` connected.
pub fn good_coloring_ng_minus_e(
    g: &FiniteGraph,
    n: usize,
    component: usize,
    e: Edge,
) -> Result<(FiniteGraph, Coloring)> {
    if n < 2 {
        return Err(Error::InvalidParameter("n must be >= 2".into()));
    }
    if g.is_empty() || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if component >= n {
        return Err(Error::InvalidParameter(format!(
            "component {component} out of range for {n} copies"
        )));
    }
    if !g.has_edge(e) {
        return Err(Error::MissingEdge(e));
    }
    let (union, maps) = disjoint_union_with_maps(&vec![g.clone(); n]);
    let removed = Edge::new(maps[component][&e.u()], maps[component][&e.v()])?;
    let host = union.delete_edge(removed)?;
    let blue: BTreeSet<Edge> = maps
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != component)
        .map(|(_, m)| {
            g.edges()
                .map(|x| Edge::new(m[&x.u()], m[&x.v()]).expect("relabeled edge"))
                .min()
                .expect("connected nonempty graph has an edge")
        })
        .collect();
    let coloring = Coloring::new(
        &host,
        host.edges()
            .map(|x| (x, if blue.contains(&x) { Color::Blue } else { Color::Red }))
            .collect(),
    )?;
    let blue_edges: Vec<Edge> = coloring.edges_of(Color::Blue).collect();
    let disjoint = blue_edges
        .iter()
        .enumerate()
        .all(|(i, a)| blue_edges[i + 1..].iter().all(|b| !a.shares_endpoint(*b)));
    if blue_edges.len() != n - 1 || !disjoint {
        return Err(Error::InvalidParameter(
            "blue subgraph is not a matching of size n - 1".into(),
        ));
    }
    Ok((host, coloring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrowing::verify_good_coloring;
    use crate::canonical::canonical_form;

    fn class(sig: &[u8], count: Count) -> LeafClass {
        LeafClass { sig: Signature(sig.to_vec()), count }
    }

    #[test]
    fn membership_examples() {
        assert!(is_family_member(&HubGraph::star()));
        let finite_hub = HubGraph::new(
            2,
            [(1, 2)],
            vec![class(&[1, 0], Count::Infinite), class(&[0, 1], Count::Finite(5))],
        )
        .unwrap();
        assert!(!is_family_member(&finite_hub));
        let shared = HubGraph::new(2, [], vec![class(&[1, 1], Count::Infinite)]).unwrap();
        assert!(is_family_member(&shared));
    }

    #[test]
    fn rejects_malformed() {
        assert!(HubGraph::new(2, [], vec![class(&[1], Count::Infinite)]).is_err());
        assert!(HubGraph::new(2, [], vec![class(&[0, 0], Count::Infinite)]).is_err());
        assert!(HubGraph::new(2, [(1, 3)], vec![]).is_err());
        assert!(HubGraph::new(0, [], vec![]).is_err());
    }

    #[test]
    fn truncation_examples() {
        assert_eq!(
            canonical_form(&hub_truncate(&HubGraph::star(), 4)),
            canonical_form(&FiniteGraph::star(4))
        );
        let shared = HubGraph::new(2, [], vec![class(&[1, 1], Count::Infinite)]).unwrap();
        assert_eq!(
            canonical_form(&hub_truncate(&shared, 2)),
            canonical_form(&FiniteGraph::cycle(4))
        );
        let split = HubGraph::new(
            2,
            [(1, 2)],
            vec![class(&[1, 0], Count::Infinite), class(&[0, 1], Count::Infinite)],
        )
        .unwrap();
        assert_eq!(
            canonical_form(&hub_truncate(&split, 1)),
            canonical_form(&FiniteGraph::path(4))
        );
    }

    #[test]
    fn self_embedding_examples() {
        let star = HubGraph::star();
        let m = construct_self_embedding(&star, 3).unwrap();
        let host = hub_truncate(&star, 4);
        assert_eq!(host.vertex_count() - m.image().len(), 1);
        assert!(!m.image().contains(&star.leaf_vertex(0, 1)));

        let split = HubGraph::new(
            2,
            [],
            vec![class(&[1, 0], Count::Infinite), class(&[0, 1], Count::Infinite)],
        )
        .unwrap();
        let m = construct_self_embedding(&split, 3).unwrap();
        // class [0,1] sorts first
        assert_eq!(split.classes()[0].sig, Signature(vec![0, 1]));
        assert_eq!(m.get(1), Some(1));
        assert_eq!(m.get(2), Some(2));
        assert_eq!(m.get(split.leaf_vertex(0, 1)), Some(split.leaf_vertex(0, 2)));
        assert_eq!(m.get(split.leaf_vertex(1, 1)), Some(split.leaf_vertex(1, 1)));

        let finite_hub = HubGraph::new(
            2,
            [(1, 2)],
            vec![class(&[1, 0], Count::Infinite), class(&[0, 1], Count::Finite(5))],
        )
        .unwrap();
        assert!(matches!(
            construct_self_embedding(&finite_hub, 3),
            Err(Error::NotFamilyMember(_))
        ));
    }

    #[test]
    fn few_hubs_coloring_examples() {
        let k15 = FiniteGraph::star(5);
        let c = good_coloring_few_hubs(&k15, &BTreeSet::from([0]), 2).unwrap();
        assert_eq!(c.edges_of(Color::Red).count(), 0);
        assert!(verify_good_coloring(&k15, &c, &FiniteGraph::complete(2), &FiniteGraph::matching(2)).unwrap());

        let p4 = FiniteGraph::path(4);
        let c = good_coloring_few_hubs(&p4, &BTreeSet::from([1]), 2).unwrap();
        assert_eq!(c.edges_of(Color::Red).collect::<Vec<_>>(), vec![Edge::new(2, 3).unwrap()]);
        assert!(verify_good_coloring(&p4, &c, &FiniteGraph::path(3), &FiniteGraph::matching(2)).unwrap());

        assert_eq!(
            good_coloring_few_hubs(&p4, &BTreeSet::from([1, 2]), 2),
            Err(Error::TooManyHubs { hubs: 2, n: 2 })
        );
    }

    #[test]
    fn blue_matching_examples() {
        let p4 = FiniteGraph::path(4);
        let all_red = Coloring::monochromatic(&p4, Color::Red);
        let cover = blue_matching_vertex_set(&p4, &all_red, 3).unwrap();
        assert!(cover.vertices.is_empty());
        assert_eq!(cover.iterations, 0);

        let k2 = FiniteGraph::complete(2);
        let one_blue = Coloring::monochromatic(&k2, Color::Blue);
        let cover = blue_matching_vertex_set(&k2, &one_blue, 2).unwrap();
        assert_eq!(cover.vertices, BTreeSet::from([0, 1]));
        assert_eq!(cover.iterations, 1);

        let two_k2 = FiniteGraph::matching(2);
        let both_blue = Coloring::monochromatic(&two_k2, Color::Blue);
        assert_eq!(
            blue_matching_vertex_set(&two_k2, &both_blue, 2),
            Err(Error::BlueMatching(vec![Edge::new(0, 1).unwrap(), Edge::new(2, 3).unwrap()]))
        );
    }

    #[test]
    fn ng_minus_e_examples() {
        let p3 = FiniteGraph::path(3);
        let (host, c) = good_coloring_ng_minus_e(&p3, 2, 0, Edge::new(0, 1).unwrap()).unwrap();
        assert_eq!(host.edge_count(), 3);
        assert!(verify_good_coloring(&host, &c, &p3, &FiniteGraph::matching(2)).unwrap());

        let k3 = FiniteGraph::complete(3);
        for e in k3.edges() {
            let (host, c) = good_coloring_ng_minus_e(&k3, 2, 1, e).unwrap();
            assert!(verify_good_coloring(&host, &c, &k3, &FiniteGraph::matching(2)).unwrap());
        }

        let two_k2 = FiniteGraph::matching(2);
        assert_eq!(
            good_coloring_ng_minus_e(&two_k2, 2, 0, Edge::new(0, 1).unwrap()),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn count_json() {
        let g: HubGraph = serde_json::from_str(
            r#"{"n":2,"hub_edges":[[1,2]],"classes":[{"sig":[1,0],"count":"inf"},{"sig":[0,1],"count":5}]}"#,
        )
        .unwrap();
        assert_eq!(g.hub_degree(1), Count::Infinite);
        assert_eq!(g.hub_degree(2), Count::Finite(6));
        let back = serde_json::to_string(&g).unwrap();
        assert!(back.contains("\"inf\""));
        let again: HubGraph = serde_json::from_str(&back).unwrap();
        assert_eq!(again, g);
    }
}
