//! Exact canonical labels for small graphs.
//!
//! Each connected component is labeled by colour refinement followed by an
//! individualisation search over the remaining ties; the label is the
//! lexicographically least relabeled edge list over all leaves. Branches on
//! twin vertices (equal neighbourhoods apart from each other) are skipped
//! since swapping twins is an automorphism. The graph label is the sorted
//! list of component labels.

use fixedbitset::FixedBitSet;

use crate::embed::Dense;
use crate::graph::{FiniteGraph, PointedGraph, Vertex};

/// A string that is equal for two graphs iff they are isomorphic.
pub fn canonical_form(g: &FiniteGraph) -> String {
    label(g, None)
}

/// Canonical label of a pointed graph: isomorphisms must fix the basepoint.
pub fn canonical_form_pointed(g: &PointedGraph) -> String {
    label(g.graph(), Some(g.basepoint()))
}

fn label(g: &FiniteGraph, marked: Option<Vertex>) -> String {
    let mut parts: Vec<String> = g
        .components()
        .iter()
        .map(|c| {
            let mark = marked.filter(|&m| c.contains_vertex(m));
            let d = Dense::from_graph(c);
            let colors: Vec<u32> = (0..d.len())
                .map(|i| u32::from(Some(d.id(i)) == mark))
                .collect();
            let edges = canonical_edges(&d, &colors);
            let body = edges
                .iter()
                .map(|(a, b)| format!("{a}-{b}"))
                .collect::<Vec<_>>()
                .join(",");
            format!("{}{}:{}", if mark.is_some() { "*" } else { "" }, d.len(), body)
        })
        .collect();
    parts.sort();
    parts.join("|")
}

type Cells = Vec<Vec<usize>>;

fn canonical_edges(g: &Dense, colors: &[u32]) -> Vec<(usize, usize)> {
    let n = g.len();
    // marked vertices (colour 1) come first
    let mut initial: Cells = Vec::new();
    let mut by_color: Vec<(u32, usize)> = (0..n).map(|i| (colors[i], i)).collect();
    by_color.sort_by_key(|&(c, i)| (std::cmp::Reverse(c), i));
    for (c, i) in by_color {
        match initial.last_mut() {
            Some(cell) if colors[cell[0]] == c => cell.push(i),
            _ => initial.push(vec![i]),
        }
    }
    let nbr_sets: Vec<FixedBitSet> = (0..n)
        .map(|i| {
            let mut s = FixedBitSet::with_capacity(n);
            s.extend(g.neighbors(i).iter().copied());
            s
        })
        .collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    search(g, &nbr_sets, refine(g, initial), &mut best);
    best.unwrap_or_default()
}

fn refine(g: &Dense, mut cells: Cells) -> Cells {
    let n = g.len();
    let mut cell_of = vec![0usize; n];
    loop {
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = ci;
            }
        }
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<(usize, usize)>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = vec![0usize; cells.len()];
                    for &w in g.neighbors(v) {
                        counts[cell_of[w]] += 1;
                    }
                    let sig: Vec<(usize, usize)> = counts
                        .into_iter()
                        .enumerate()
                        .filter(|&(_, c)| c > 0)
                        .collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut group: Vec<usize> = Vec::new();
            let mut last: Option<&Vec<(usize, usize)>> = None;
            for (sig, v) in &keyed {
                if last.is_some_and(|l| l != sig) {
                    next.push(std::mem::take(&mut group));
                }
                group.push(*v);
                last = Some(sig);
            }
            next.push(group);
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn twins(nbr_sets: &[FixedBitSet], u: usize, v: usize) -> bool {
    let mut a = nbr_sets[u].clone();
    let mut b = nbr_sets[v].clone();
    a.set(v, false);
    b.set(u, false);
    a == b
}

fn search(g: &Dense, nbr_sets: &[FixedBitSet], cells: Cells, best: &mut Option<Vec<(usize, usize)>>) {
    let Some(ci) = cells.iter().position(|c| c.len() > 1) else {
        let mut pos = vec![0usize; g.len()];
        for (i, cell) in cells.iter().enumerate() {
            pos[cell[0]] = i;
        }
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .map(|(a, b)| {
                let (x, y) = (pos[a], pos[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            *best = Some(edges);
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cells[ci] {
        if tried.iter().any(|&u| twins(nbr_sets, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next: Cells = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..ci]);
        next.push(vec![v]);
        next.push(cells[ci].iter().copied().filter(|&w| w != v).collect());
        next.extend_from_slice(&cells[ci + 1..]);
        search(g, nbr_sets, refine(g, next), best);
    }
}
