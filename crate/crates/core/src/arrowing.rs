//! Deciding `F → (G, H)`, good colorings, Ramsey-minimality and bounded
//! enumeration of minimal graphs.
//!
//! The decider is a depth-first search over red/blue assignments of the
//! edges of `F` in ascending edge order, red first. After coloring an edge
//! it asks whether the new edge completes a monochromatic copy of the
//! pattern of its color; since the parent node had no such copy, only
//! embeddings through the new edge need to be searched. Such a branch is
//! pruned. A leaf reached without pruning is a good coloring.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canonical::canonical_form;
use crate::embed::{self, Dense};
use crate::error::{Error, Result};
use crate::graph::{
    disjoint_union, find_embedding, find_pointed_embedding, Edge, FiniteGraph, PointedGraph,
    Vertex,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    #[serde(default)]
    red: Vec<Edge>,
    #[serde(default)]
    blue: Vec<Edge>,
}

/// A red/blue assignment of edges. Serialized as
/// `{"red": [[u, v], ...], "blue": [[u, v], ...]}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ColoringJson", into = "ColoringJson")]
pub struct Coloring {
    assignment: BTreeMap<Edge, Color>,
}

impl TryFrom<ColoringJson> for Coloring {
    type Error = Error;

    fn try_from(raw: ColoringJson) -> Result<Self> {
        let mut assignment = BTreeMap::new();
        for (edges, color) in [(raw.red, Color::Red), (raw.blue, Color::Blue)] {
            for e in edges {
                if assignment.insert(e, color).is_some() {
                    return Err(Error::ColoringDomain(format!("edge {e} is colored twice")));
                }
            }
        }
        Ok(Coloring { assignment })
    }
}

impl From<Coloring> for ColoringJson {
    fn from(c: Coloring) -> Self {
        ColoringJson {
            red: c.edges_of(Color::Red).collect(),
            blue: c.edges_of(Color::Blue).collect(),
        }
    }
}

impl Coloring {
    /// A coloring of `f`; the assignment must cover exactly `f`'s edges.
    pub fn new(f: &FiniteGraph, assignment: BTreeMap<Edge, Color>) -> Result<Self> {
        let c = Coloring { assignment };
        c.check_domain(f)?;
        Ok(c)
    }

    pub fn monochromatic(f: &FiniteGraph, color: Color) -> Self {
        Coloring {
            assignment: f.edges().map(|e| (e, color)).collect(),
        }
    }

    pub fn check_domain(&self, f: &FiniteGraph) -> Result<()> {
        if let Some(e) = f.edges().find(|e| !self.assignment.contains_key(e)) {
            return Err(Error::ColoringDomain(format!("edge {e} is uncolored")));
        }
        if let Some(e) = self.assignment.keys().find(|e| !f.has_edge(**e)) {
            return Err(Error::ColoringDomain(format!("{e} is not an edge of the graph")));
        }
        Ok(())
    }

    pub fn get(&self, e: Edge) -> Option<Color> {
        self.assignment.get(&e).copied()
    }

    pub fn assignment(&self) -> &BTreeMap<Edge, Color> {
        &self.assignment
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Edges of one color in ascending order.
    pub fn edges_of(&self, color: Color) -> impl Iterator<Item = Edge> + '_ {
        self.assignment
            .iter()
            .filter(move |(_, &c)| c == color)
            .map(|(&e, _)| e)
    }

    /// The subgraph of `f` formed by one color class.
    pub fn subgraph(&self, color: Color) -> FiniteGraph {
        FiniteGraph::from_edges(self.edges_of(color).map(Edge::endpoints))
            .expect("color class edges are distinct")
    }

    /// Swaps red and blue.
    pub fn flipped(&self) -> Coloring {
        Coloring {
            assignment: self.assignment.iter().map(|(&e, &c)| (e, c.flip())).collect(),
        }
    }
}

/// One pruned branch of the search: after coloring `prefix`, the last edge
/// completed a monochromatic copy of the pattern of `color` on `witness`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateEntry {
    pub prefix: Vec<(Edge, Color)>,
    pub color: Color,
    pub witness: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrowingVerdict {
    pub arrows: bool,
    /// A good coloring, present exactly when `arrows` is false.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Coloring>,
    /// The pruned branches, when requested and `arrows` is true.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<CertificateEntry>>,
}

/// True iff the red class has no copy of `g` and the blue class no copy of
/// `h`.
pub fn verify_good_coloring(
    f: &FiniteGraph,
    c: &Coloring,
    g: &FiniteGraph,
    h: &FiniteGraph,
) -> Result<bool> {
    c.check_domain(f)?;
    let red = c.subgraph(Color::Red);
    let blue = c.subgraph(Color::Blue);
    Ok(find_embedding(g, &red).is_none() && find_embedding(h, &blue).is_none())
}

/// Pointed variant: the red class (with the basepoint of `f` kept even when
/// no red edge meets it) must have no pointed copy of `g`.
pub fn verify_good_coloring_pointed(
    f: &PointedGraph,
    c: &Coloring,
    g: &PointedGraph,
    h: &FiniteGraph,
) -> Result<bool> {
    c.check_domain(f.graph())?;
    let red = c.subgraph(Color::Red);
    let base = f.basepoint();
    let red = FiniteGraph::with_vertices(
        red.vertices().chain(std::iter::once(base)),
        red.edges().map(Edge::endpoints),
        true,
    )?;
    let red = PointedGraph::new(red, base)?;
    let blue = c.subgraph(Color::Blue);
    Ok(find_pointed_embedding(g, &red).is_none() && find_embedding(h, &blue).is_none())
}

struct Search<'a> {
    edges: Vec<(usize, usize)>,
    patterns: [&'a Dense; 2],
    hosts: [Dense; 2],
    /// Fixed pattern-to-host pairs per color.
    fixed: [Vec<(usize, usize)>; 2],
    colors: Vec<Color>,
    certificate: Option<Vec<CertificateEntry>>,
    ids: &'a Dense,
}

fn slot(c: Color) -> usize {
    match c {
        Color::Red => 0,
        Color::Blue => 1,
    }
}

impl Search<'_> {
    fn run(&mut self, i: usize) -> bool {
        let Some(&(a, b)) = self.edges.get(i) else {
            return true;
        };
        for color in [Color::Red, Color::Blue] {
            let k = slot(color);
            self.hosts[k].push_edge(a, b);
            self.colors.push(color);
            let hit = embed::find_through_edge(self.patterns[k], &self.hosts[k], &self.fixed[k], (a, b));
            let done = match hit {
                Some(map) => {
                    self.record(color, &map);
                    false
                }
                None => self.run(i + 1),
            };
            if done {
                return true;
            }
            self.colors.pop();
            self.hosts[k].pop_edge(a, b);
        }
        false
    }

    fn record(&mut self, color: Color, map: &[usize]) {
        let Some(cert) = self.certificate.as_mut() else {
            return;
        };
        let edge = |x: usize, y: usize| {
            Edge::new(self.ids.id(x), self.ids.id(y)).expect("distinct endpoints")
        };
        let prefix = self
            .edges
            .iter()
            .zip(&self.colors)
            .map(|(&(x, y), &c)| (edge(x, y), c))
            .collect();
        let mut witness: Vec<Edge> = self.patterns[slot(color)]
            .edges()
            .map(|(p, q)| edge(map[p], map[q]))
            .collect();
        witness.sort();
        cert.push(CertificateEntry {
            prefix,
            color,
            witness,
        });
    }
}

fn decide(
    f: &FiniteGraph,
    g: &Dense,
    h: &Dense,
    red_fixed: Vec<(usize, usize)>,
    certify: bool,
) -> ArrowingVerdict {
    let host = Dense::from_graph(f);
    let ids: Vec<Vertex> = (0..host.len()).map(|i| host.id(i)).collect();
    let empty = || Dense::from_index_edges(&ids, std::iter::empty());
    let mut search = Search {
        edges: host.edges().collect(),
        patterns: [g, h],
        hosts: [empty(), empty()],
        fixed: [red_fixed, Vec::new()],
        colors: Vec::new(),
        certificate: certify.then(Vec::new),
        ids: &host,
    };
    // a pattern without edges is already present before anything is colored
    for k in 0..2 {
        if embed::find(search.patterns[k], &search.hosts[k], &search.fixed[k]).is_some() {
            return ArrowingVerdict {
                arrows: true,
                witness: None,
                certificate: search.certificate,
            };
        }
    }
    if search.run(0) {
        let assignment = search
            .edges
            .iter()
            .zip(&search.colors)
            .map(|(&(a, b), &c)| (Edge::new(host.id(a), host.id(b)).expect("simple"), c))
            .collect();
        ArrowingVerdict {
            arrows: false,
            witness: Some(Coloring { assignment }),
            certificate: None,
        }
    } else {
        ArrowingVerdict {
            arrows: true,
            witness: None,
            certificate: search.certificate,
        }
    }
}

/// Decides `f → (g, h)`. A false verdict carries the good coloring found
/// first in the red-first search order.
pub fn arrows(f: &FiniteGraph, g: &FiniteGraph, h: &FiniteGraph) -> ArrowingVerdict {
    arrows_with(f, g, h, false)
}

/// [`arrows`], optionally recording the pruned branches as a certificate.
pub fn arrows_with(f: &FiniteGraph, g: &FiniteGraph, h: &FiniteGraph, certify: bool) -> ArrowingVerdict {
    let g = Dense::from_graph(g);
    let h = Dense::from_graph(h);
    decide(f, &g, &h, Vec::new(), certify)
}

/// Every coloring of `f` has a red copy of `g` with basepoint on basepoint,
/// or a blue copy of `h`.
pub fn arrows_pointed(f: &PointedGraph, g: &PointedGraph, h: &FiniteGraph) -> ArrowingVerdict {
    let base = f.basepoint();
    // keep the basepoint as a vertex of the search host even when isolated
    let host = FiniteGraph::with_vertices(
        f.graph().vertices(),
        f.graph().edges().map(Edge::endpoints),
        true,
    )
    .expect("copy of a valid graph");
    let gd = Dense::from_graph(g.graph());
    let hd = Dense::from_graph(h);
    let fd = Dense::from_graph(&host);
    let fixed = vec![(
        gd.index_of(g.basepoint()).expect("basepoint is a vertex"),
        fd.index_of(base).expect("basepoint is a vertex"),
    )];
    decide(&host, &gd, &hd, fixed, false)
}

/// `f` arrows `(g, h)` and no single-edge deletion does.
pub fn is_minimal(f: &FiniteGraph, g: &FiniteGraph, h: &FiniteGraph) -> bool {
    if !arrows(f, g, h).arrows {
        return false;
    }
    let edges: Vec<Edge> = f.edges().collect();
    edges.par_iter().all(|&e| {
        let sub = f.delete_edge(e).expect("edge of f");
        !arrows(&sub, g, h).arrows
    })
}

/// Relabels to `0..n` in ascending vertex order.
fn compact(g: &FiniteGraph) -> FiniteGraph {
    disjoint_union(std::slice::from_ref(g))
}

/// All graphs one edge larger than `g` (which has vertices `0..n`) within
/// the vertex bound: a new edge between old vertices, a pendant edge, or a
/// disjoint edge.
fn extensions(g: &FiniteGraph, max_v: usize) -> Vec<FiniteGraph> {
    let n = g.vertex_count() as Vertex;
    let base: Vec<(Vertex, Vertex)> = g.edges().map(Edge::endpoints).collect();
    let with = |extra: (Vertex, Vertex)| {
        FiniteGraph::from_edges(base.iter().copied().chain(std::iter::once(extra)))
            .expect("extension is simple")
    };
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(Edge::new(u, v).expect("u < v")) {
                out.push(with((u, v)));
            }
        }
    }
    if (n as usize) < max_v {
        for u in 0..n {
            out.push(with((u, n)));
        }
    }
    if (n as usize) + 2 <= max_v {
        out.push(with((n, n + 1)));
    }
    out
}

fn dedup(graphs: impl IntoIterator<Item = FiniteGraph>) -> BTreeMap<String, FiniteGraph> {
    let mut out = BTreeMap::new();
    for g in graphs {
        out.entry(canonical_form(&g)).or_insert_with(|| compact(&g));
    }
    out
}

/// All graphs without isolated vertices having between 1 and `max_e` edges
/// and at most `max_v` vertices, one per isomorphism class, relabeled to
/// `0..n` and ordered by edge count, then canonical label.
pub fn enumerate_graphs(max_v: usize, max_e: usize) -> Vec<FiniteGraph> {
    let mut out = Vec::new();
    let mut level = dedup([FiniteGraph::empty()]);
    for _ in 0..max_e {
        let next: Vec<FiniteGraph> = level.values().flat_map(|g| extensions(g, max_v)).collect();
        level = dedup(next);
        out.extend(level.values().cloned());
    }
    out
}

/// All `(g, h)`-minimal graphs within the bounds, one per isomorphism class,
/// ordered by edge count, then canonical label.
///
/// Non-arrowing graphs are closed under deletion, so they are grown level by
/// level from the empty graph. A graph with `k + 1` edges is minimal iff it
/// arrows and each single-edge deletion is a non-arrowing `k`-edge graph,
/// so every minimal graph extends some non-arrowing graph of the previous
/// level.
pub fn enumerate_minimal(g: &FiniteGraph, h: &FiniteGraph, max_v: usize, max_e: usize) -> Vec<FiniteGraph> {
    let mut out = Vec::new();
    if arrows(&FiniteGraph::empty(), g, h).arrows {
        return out;
    }
    let mut level = dedup([FiniteGraph::empty()]);
    for _ in 0..max_e {
        let candidates: Vec<(String, FiniteGraph)> = dedup(
            level.values().flat_map(|x| extensions(x, max_v)).collect::<Vec<_>>(),
        )
        .into_iter()
        .collect();
        let verdicts: Vec<bool> = candidates
            .par_iter()
            .map(|(_, c)| arrows(c, g, h).arrows)
            .collect();
        let mut next = BTreeMap::new();
        for ((label, c), arrowing) in candidates.into_iter().zip(verdicts) {
            if !arrowing {
                next.insert(label, c);
            } else if c.edges().all(|e| {
                let sub = c.delete_edge(e).expect("edge of c");
                level.contains_key(&canonical_form(&sub))
            }) {
                out.push(c);
            }
        }
        level = next;
        if level.is_empty() {
            break;
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum ContainmentStatus {
    Holds,
    /// Fewer than two members.
    Vacuous,
    /// Member `inner` embeds in member `outer`.
    Fails { inner: usize, outer: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    /// Every member arrows `(g, h)`; checked exactly.
    pub all_arrow: bool,
    /// Indices of members that do not arrow.
    pub non_arrowing: Vec<usize>,
    /// Every arrowing graph within the bounds contains a member. This is
    /// bounded evidence only: infinite and larger graphs are not covered.
    pub covers_within_bounds: bool,
    /// The bounded check above, as a label.
    pub coverage_kind: &'static str,
    pub bounds: (usize, usize),
    pub minimal_checked: usize,
    /// A minimal graph (terse edge list) containing no member.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub uncovered: Option<String>,
    /// No member embeds in another; checked exactly.
    pub antichain: ContainmentStatus,
}

/// Checks a family of finite graphs against `(g, h)`: all members arrow,
/// every arrowing graph within the bounds contains a member, and no member
/// contains another. The second condition reduces to the minimal graphs
/// within the bounds, since every arrowing graph contains one.
pub fn check_family_conditions(
    family: &[FiniteGraph],
    g: &FiniteGraph,
    h: &FiniteGraph,
    max_v: usize,
    max_e: usize,
) -> FamilyReport {
    let non_arrowing: Vec<usize> = family
        .iter()
        .enumerate()
        .filter(|(_, f)| !arrows(f, g, h).arrows)
        .map(|(i, _)| i)
        .collect();
    let minimal = enumerate_minimal(g, h, max_v, max_e);
    let uncovered = minimal
        .iter()
        .find(|m| !family.iter().any(|f| find_embedding(f, m).is_some()))
        .map(FiniteGraph::to_terse);
    let antichain = if family.len() < 2 {
        ContainmentStatus::Vacuous
    } else {
        let mut status = ContainmentStatus::Holds;
        'outer: for (i, a) in family.iter().enumerate() {
            for (j, b) in family.iter().enumerate() {
                if i != j && find_embedding(a, b).is_some() {
                    status = ContainmentStatus::Fails { inner: i, outer: j };
                    break 'outer;
                }
            }
        }
        status
    };
    FamilyReport {
        all_arrow: non_arrowing.is_empty(),
        non_arrowing,
        covers_within_bounds: uncovered.is_none(),
        coverage_kind: "bounded evidence",
        bounds: (max_v, max_e),
        minimal_checked: minimal.len(),
        uncovered,
        antichain,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::disjoint_union;

    fn coloring(f: &FiniteGraph, colors: &[Color]) -> Coloring {
        Coloring::new(f, f.edges().zip(colors.iter().copied()).collect()).unwrap()
    }

    /// Edge-map containment oracle: tries every injective vertex map.
    fn brute_contains(host: &FiniteGraph, pattern: &FiniteGraph) -> bool {
        fn go(
            pv: &[Vertex],
            hv: &[Vertex],
            i: usize,
            map: &mut BTreeMap<Vertex, Vertex>,
            pattern: &FiniteGraph,
            host: &FiniteGraph,
        ) -> bool {
            if i == pv.len() {
                return pattern
                    .edges()
                    .all(|e| host.has_edge(Edge::new(map[&e.u()], map[&e.v()]).unwrap()));
            }
            for &w in hv {
                if map.values().any(|&x| x == w) {
                    continue;
                }
                map.insert(pv[i], w);
                if go(pv, hv, i + 1, map, pattern, host) {
                    return true;
                }
                map.remove(&pv[i]);
            }
            false
        }
        let pv: Vec<Vertex> = pattern.vertices().collect();
        let hv: Vec<Vertex> = host.vertices().collect();
        go(&pv, &hv, 0, &mut BTreeMap::new(), pattern, host)
    }

    fn brute_arrows(f: &FiniteGraph, gp: &FiniteGraph, hp: &FiniteGraph) -> bool {
        let edges: Vec<Edge> = f.edges().collect();
        (0u32..1 << edges.len()).all(|mask| {
            let red: Vec<Edge> = edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 0).map(|(_, &e)| e).collect();
            let blue: Vec<Edge> = edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            brute_contains(&f.edge_subgraph(&red).unwrap(), gp)
                || brute_contains(&f.edge_subgraph(&blue).unwrap(), hp)
        })
    }

    #[test]
    fn verify_good_coloring_examples() {
        use Color::*;
        let p4 = FiniteGraph::path(4);
        let p3 = FiniteGraph::path(3);
        assert!(verify_good_coloring(&p4, &coloring(&p4, &[Red, Blue, Red]), &p3, &p3).unwrap());
        let k2 = FiniteGraph::complete(2);
        for c in [Red, Blue] {
            assert!(!verify_good_coloring(&k2, &Coloring::monochromatic(&k2, c), &k2, &k2).unwrap());
        }
        let two_p3 = disjoint_union(&[p3.clone(), p3.clone()]);
        let all_red = Coloring::monochromatic(&two_p3, Red);
        assert!(!verify_good_coloring(&two_p3, &all_red, &p3, &FiniteGraph::matching(2)).unwrap());
        let partial = Coloring::monochromatic(&p3, Red);
        assert!(matches!(
            verify_good_coloring(&p4, &partial, &p3, &p3),
            Err(Error::ColoringDomain(_))
        ));
    }

    #[test]
    fn arrows_examples() {
        let k2 = FiniteGraph::complete(2);
        let p3 = FiniteGraph::path(3);
        let p4 = FiniteGraph::path(4);
        assert!(arrows(&k2, &k2, &k2).arrows);
        let v = arrows(&p4, &p3, &p3);
        assert!(!v.arrows);
        assert_eq!(v.witness, Some(coloring(&p4, &[Color::Red, Color::Blue, Color::Red])));
        let two_p3 = disjoint_union(&[p3.clone(), p3.clone()]);
        assert!(arrows(&two_p3, &p3, &FiniteGraph::matching(2)).arrows);
        let k3 = FiniteGraph::complete(3);
        assert!(arrows(&FiniteGraph::complete(6), &k3, &k3).arrows);
        assert!(!arrows(&FiniteGraph::complete(5), &k3, &k3).arrows);
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        let pairs = [
            (FiniteGraph::path(3), FiniteGraph::path(3)),
            (FiniteGraph::path(3), FiniteGraph::matching(2)),
            (FiniteGraph::complete(3), FiniteGraph::complete(2)),
            (FiniteGraph::star(2), FiniteGraph::path(4)),
        ];
        for f in enumerate_graphs(6, 5) {
            for (gp, hp) in &pairs {
                let v = arrows(&f, gp, hp);
                assert_eq!(v.arrows, brute_arrows(&f, gp, hp), "{f} {gp} {hp}");
                if let Some(w) = &v.witness {
                    assert!(verify_good_coloring(&f, w, gp, hp).unwrap());
                }
                assert_eq!(v.arrows, arrows(&f, hp, gp).arrows);
            }
        }
    }

    #[test]
    fn certificate_entries_are_monochromatic_copies() {
        let k3 = FiniteGraph::complete(3);
        let p3 = FiniteGraph::path(3);
        let v = arrows_with(&k3, &p3, &FiniteGraph::complete(2), true);
        assert!(v.arrows);
        let cert = v.certificate.unwrap();
        assert!(!cert.is_empty());
        for entry in cert {
            assert!(entry.witness.iter().all(|e| entry.prefix.contains(&(*e, entry.color))));
        }
    }

    #[test]
    fn arrows_pointed_examples() {
        let k2 = FiniteGraph::complete(2);
        let cherry = PointedGraph::new(FiniteGraph::star(2), 0).unwrap();
        let edge_at_end = PointedGraph::new(k2.clone(), 0).unwrap();
        assert!(arrows_pointed(&cherry, &edge_at_end, &k2).arrows);

        let p3_end = PointedGraph::new(FiniteGraph::path(3), 0).unwrap();
        let v = arrows_pointed(&p3_end, &p3_end, &FiniteGraph::matching(2));
        assert!(!v.arrows);
        let w = v.witness.unwrap();
        assert!(verify_good_coloring_pointed(&p3_end, &w, &p3_end, &FiniteGraph::matching(2)).unwrap());

        // two blue edges and one red: no red cherry at the center, no blue 2K2
        let star3 = PointedGraph::new(FiniteGraph::star(3), 0).unwrap();
        let v = arrows_pointed(&star3, &cherry, &FiniteGraph::matching(2));
        assert!(!v.arrows);
        assert!(verify_good_coloring_pointed(&star3, &v.witness.unwrap(), &cherry, &FiniteGraph::matching(2)).unwrap());

        assert!(arrows_pointed(&star3, &PointedGraph::point(7), &k2).arrows);
    }

    #[test]
    fn minimality_examples() {
        let k2 = FiniteGraph::complete(2);
        let p3 = FiniteGraph::path(3);
        let m2 = FiniteGraph::matching(2);
        assert!(is_minimal(&k2, &k2, &k2));
        assert!(is_minimal(&disjoint_union(&[p3.clone(), p3.clone()]), &p3, &m2));
        assert!(!is_minimal(&disjoint_union(&[p3.clone(), p3.clone(), p3.clone()]), &p3, &m2));
        assert!(!is_minimal(&FiniteGraph::path(4), &p3, &p3));
    }

    #[test]
    fn enumerate_graphs_counts() {
        // graphs without isolated vertices by edge count: 1, 2, 5, 11, 26
        let all = enumerate_graphs(10, 5);
        let counts: Vec<usize> = (1..=5).map(|k| all.iter().filter(|g| g.edge_count() == k).count()).collect();
        assert_eq!(counts, vec![1, 2, 5, 11, 26]);
        assert!(enumerate_graphs(3, 3).iter().all(|g| g.vertex_count() <= 3));
    }

    #[test]
    fn enumerate_minimal_examples() {
        let k2 = FiniteGraph::complete(2);
        let p3 = FiniteGraph::path(3);
        let out = enumerate_minimal(&k2, &k2, 4, 4);
        assert_eq!(out, vec![k2.clone()]);
        let out = enumerate_minimal(&p3, &k2, 3, 2);
        assert_eq!(out.len(), 1);
        assert_eq!(canonical_form(&out[0]), canonical_form(&p3));
        let out = enumerate_minimal(&p3, &FiniteGraph::matching(2), 6, 4);
        let two_p3 = canonical_form(&disjoint_union(&[p3.clone(), p3.clone()]));
        assert!(out.iter().any(|x| canonical_form(x) == two_p3));
        for a in &out {
            assert!(is_minimal(a, &p3, &FiniteGraph::matching(2)));
            for b in &out {
                assert!(a == b || find_embedding(a, b).is_none());
            }
        }
    }

    #[test]
    fn family_condition_examples() {
        let k2 = FiniteGraph::complete(2);
        let p3 = FiniteGraph::path(3);
        let two_p3 = disjoint_union(&[p3.clone(), p3.clone()]);
        let m2 = FiniteGraph::matching(2);
        let r = check_family_conditions(std::slice::from_ref(&two_p3), &p3, &m2, 6, 5);
        assert!(r.all_arrow);
        assert_eq!(r.antichain, ContainmentStatus::Vacuous);
        assert_eq!(r.coverage_kind, "bounded evidence");
        // C4 arrows (P3, 2K2) without containing 2P3
        assert!(!r.covers_within_bounds);
        let c4 = FiniteGraph::cycle(4);
        assert!(brute_arrows(&c4, &p3, &m2));
        assert!(!brute_contains(&c4, &two_p3));
        let uncovered = crate::io::parse_graph(r.uncovered.as_deref().unwrap()).unwrap();
        assert_eq!(canonical_form(&uncovered), canonical_form(&c4));

        let r = check_family_conditions(std::slice::from_ref(&k2), &k2, &k2, 4, 4);
        assert!(r.all_arrow && r.covers_within_bounds);

        let r = check_family_conditions(&[p3.clone(), FiniteGraph::path(4)], &p3, &k2, 4, 3);
        assert_eq!(r.antichain, ContainmentStatus::Fails { inner: 0, outer: 1 });
    }

    #[test]
    fn coloring_json_round_trip() {
        let p4 = FiniteGraph::path(4);
        let c = coloring(&p4, &[Color::Red, Color::Blue, Color::Red]);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"red":[[0,1],[2,3]],"blue":[[1,2]]}"#);
        let back: Coloring = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<Coloring>(r#"{"red":[[0,1]],"blue":[[1,0]]}"#).is_err());
    }
}
