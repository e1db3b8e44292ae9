//! Backtracking subgraph-embedding search on index-dense graphs.
//!
//! Pattern vertices are placed connectivity-first: each next vertex is the
//! unplaced one with the most placed neighbours (ties: higher degree, then
//! lower index). Candidates come from the neighbourhood of an already-placed
//! neighbour when there is one, in ascending host index order, and must have
//! at least the pattern vertex's degree.

use std::collections::{BTreeMap, HashMap};

use fixedbitset::FixedBitSet;

use crate::graph::{FiniteGraph, Vertex};

#[derive(Clone, Debug)]
pub(crate) struct Dense {
    ids: Vec<Vertex>,
    index: HashMap<Vertex, usize>,
    nbrs: Vec<Vec<usize>>,
    adj: Vec<FixedBitSet>,
}

impl Dense {
    pub(crate) fn from_graph(g: &FiniteGraph) -> Self {
        let ids: Vec<Vertex> = g.vertices().collect();
        let index: HashMap<Vertex, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges: Vec<(usize, usize)> = g.edges().map(|e| (index[&e.u()], index[&e.v()])).collect();
        let mut d = Self::with_ids(ids, index);
        for (a, b) in edges {
            d.add_edge(a, b);
        }
        d.sort();
        d
    }

    /// `n` vertices with ids `0..n` and the given index edges.
    pub(crate) fn from_index_edges<I>(ids: &[Vertex], edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let index = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut d = Self::with_ids(ids.to_vec(), index);
        for (a, b) in edges {
            d.add_edge(a, b);
        }
        d.sort();
        d
    }

    fn with_ids(ids: Vec<Vertex>, index: HashMap<Vertex, usize>) -> Self {
        let n = ids.len();
        Self {
            ids,
            index,
            nbrs: vec![Vec::new(); n],
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        self.nbrs[a].push(b);
        self.nbrs[b].push(a);
        self.adj[a].insert(b);
        self.adj[b].insert(a);
    }

    /// Adds an edge; paired with [`Dense::pop_edge`] in last-in first-out
    /// order.
    pub(crate) fn push_edge(&mut self, a: usize, b: usize) {
        self.add_edge(a, b);
    }

    pub(crate) fn pop_edge(&mut self, a: usize, b: usize) {
        let x = self.nbrs[a].pop();
        let y = self.nbrs[b].pop();
        debug_assert_eq!((x, y), (Some(b), Some(a)), "edges popped out of order");
        self.adj[a].set(b, false);
        self.adj[b].set(a, false);
    }

    fn sort(&mut self) {
        for n in &mut self.nbrs {
            n.sort_unstable();
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.ids.len()
    }

    pub(crate) fn id(&self, i: usize) -> Vertex {
        self.ids[i]
    }

    pub(crate) fn index_of(&self, v: Vertex) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub(crate) fn degree(&self, i: usize) -> usize {
        self.nbrs[i].len()
    }

    pub(crate) fn neighbors(&self, i: usize) -> &[usize] {
        &self.nbrs[i]
    }

    pub(crate) fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub(crate) fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.nbrs
            .iter()
            .enumerate()
            .flat_map(|(a, ns)| ns.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    /// Translates an index map from `self` into `host` back to vertex ids.
    pub(crate) fn lift(&self, host: &Dense, map: &[usize]) -> BTreeMap<Vertex, Vertex> {
        map.iter()
            .enumerate()
            .map(|(i, &j)| (self.ids[i], host.ids[j]))
            .collect()
    }
}

struct Step {
    vertex: usize,
    anchor: Option<usize>,
    back: Vec<usize>,
}

fn plan(pattern: &Dense, fixed: &[(usize, usize)]) -> Vec<Step> {
    let n = pattern.len();
    let mut placed = vec![false; n];
    for &(p, _) in fixed {
        placed[p] = true;
    }
    let mut steps = Vec::with_capacity(n - fixed.len());
    for _ in fixed.len()..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let placed_nbrs = pattern.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (placed_nbrs, pattern.degree(v), std::cmp::Reverse(v))
            })
            .expect("an unplaced vertex remains");
        let back: Vec<usize> = pattern
            .neighbors(next)
            .iter()
            .copied()
            .filter(|&w| placed[w])
            .collect();
        steps.push(Step {
            vertex: next,
            anchor: back.first().copied(),
            back,
        });
        placed[next] = true;
    }
    steps
}

fn fixed_consistent(pattern: &Dense, host: &Dense, fixed: &[(usize, usize)]) -> bool {
    for (i, &(p, h)) in fixed.iter().enumerate() {
        if p >= pattern.len() || h >= host.len() || host.degree(h) < pattern.degree(p) {
            return false;
        }
        for &(q, k) in &fixed[..i] {
            if (q == p) != (k == h) {
                return false;
            }
            if pattern.adjacent(p, q) && !host.adjacent(h, k) {
                return false;
            }
        }
    }
    true
}

/// Finds an embedding extending the `fixed` pairs. The returned vector maps
/// pattern index to host index.
pub(crate) fn find(pattern: &Dense, host: &Dense, fixed: &[(usize, usize)]) -> Option<Vec<usize>> {
    if pattern.len() > host.len() || !fixed_consistent(pattern, host, fixed) {
        return None;
    }
    let mut fixed_dedup: Vec<(usize, usize)> = Vec::with_capacity(fixed.len());
    for &pair in fixed {
        if !fixed_dedup.contains(&pair) {
            fixed_dedup.push(pair);
        }
    }
    let steps = plan(pattern, &fixed_dedup);
    let mut map = vec![usize::MAX; pattern.len()];
    let mut used = FixedBitSet::with_capacity(host.len());
    for &(p, h) in &fixed_dedup {
        map[p] = h;
        used.insert(h);
    }
    if extend(pattern, host, &steps, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    pattern: &Dense,
    host: &Dense,
    steps: &[Step],
    depth: usize,
    map: &mut [usize],
    used: &mut FixedBitSet,
) -> bool {
    let Some(step) = steps.get(depth) else {
        return true;
    };
    let need = pattern.degree(step.vertex);
    let try_candidate = |h: usize, map: &mut [usize], used: &mut FixedBitSet| -> bool {
        if used.contains(h) || host.degree(h) < need {
            return false;
        }
        if !step.back.iter().all(|&w| host.adjacent(h, map[w])) {
            return false;
        }
        map[step.vertex] = h;
        used.insert(h);
        if extend(pattern, host, steps, depth + 1, map, used) {
            return true;
        }
        used.set(h, false);
        map[step.vertex] = usize::MAX;
        false
    };
    match step.anchor {
        Some(a) => {
            let anchor_image = map[a];
            host.neighbors(anchor_image)
                .iter()
                .any(|&h| try_candidate(h, map, used))
        }
        None => (0..host.len()).any(|h| try_candidate(h, map, used)),
    }
}

/// Searches for an embedding that uses the host edge `(u, v)` as the image
/// of some pattern edge, with the `fixed` pairs respected as well. Returns
/// the first one found, trying pattern edges in ascending order.
pub(crate) fn find_through_edge(
    pattern: &Dense,
    host: &Dense,
    fixed: &[(usize, usize)],
    (u, v): (usize, usize),
) -> Option<Vec<usize>> {
    let mut pairs = fixed.to_vec();
    for (a, b) in pattern.edges() {
        for (x, y) in [(u, v), (v, u)] {
            pairs.truncate(fixed.len());
            pairs.push((a, x));
            pairs.push((b, y));
            if let Some(m) = find(pattern, host, &pairs) {
                return Some(m);
            }
        }
    }
    None
}
