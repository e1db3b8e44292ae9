//! Finite descriptions of infinite graph families and their truncations.
//!
//! Truncation depth is the edge radius from the natural root (ray endpoint,
//! k-ray center, star center, comb spine start). Vertex ids are stable
//! across depths, so `truncate(g, d)` is a labeled subgraph of
//! `truncate(g, d + 1)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{disjoint_union, FiniteGraph, PointedGraph, Vertex};
use crate::hubgraph::HubGraph;

/// Eventual behaviour of a tooth function after its explicit prefix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Tail {
    Periodic { cycle: Vec<u64> },
    Arithmetic { start: u64, step: u64 },
}

#[derive(Deserialize)]
struct RawToothFn {
    #[serde(default)]
    prefix: Vec<u64>,
    tail: Tail,
}

/// A map `ℓ: ℕ → ℕ` (ℕ starting at 1) given by a finite prefix and an
/// eventually periodic or eventually arithmetic tail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawToothFn")]
pub struct ToothFn {
    prefix: Vec<u64>,
    tail: Tail,
}

impl TryFrom<RawToothFn> for ToothFn {
    type Error = Error;

    fn try_from(raw: RawToothFn) -> Result<Self> {
        ToothFn::new(raw.prefix, raw.tail)
    }
}

impl ToothFn {
    /// Validates the values and rewrites a step-0 arithmetic tail as a
    /// constant periodic one.
    pub fn new(prefix: Vec<u64>, tail: Tail) -> Result<Self> {
        if prefix.contains(&0) {
            return Err(Error::InvalidToothFn("prefix values must be >= 1".into()));
        }
        let tail = match tail {
            Tail::Periodic { cycle } => {
                if cycle.is_empty() {
                    return Err(Error::InvalidToothFn("periodic cycle is empty".into()));
                }
                if cycle.contains(&0) {
                    return Err(Error::InvalidToothFn("cycle values must be >= 1".into()));
                }
                Tail::Periodic { cycle }
            }
            Tail::Arithmetic { start, step } => {
                if start == 0 {
                    return Err(Error::InvalidToothFn("arithmetic start must be >= 1".into()));
                }
                if step == 0 {
                    Tail::Periodic { cycle: vec![start] }
                } else {
                    Tail::Arithmetic { start, step }
                }
            }
        };
        Ok(Self { prefix, tail })
    }

    pub fn periodic(prefix: Vec<u64>, cycle: Vec<u64>) -> Result<Self> {
        Self::new(prefix, Tail::Periodic { cycle })
    }

    pub fn arithmetic(prefix: Vec<u64>, start: u64, step: u64) -> Result<Self> {
        Self::new(prefix, Tail::Arithmetic { start, step })
    }

    /// `ℓ(n) = n`.
    pub fn identity() -> Self {
        Self::arithmetic(Vec::new(), 1, 1).expect("valid")
    }

    pub fn prefix(&self) -> &[u64] {
        &self.prefix
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    /// `ℓ(n)` for `n >= 1`.
    pub fn eval(&self, n: u64) -> Result<u64> {
        if n == 0 {
            return Err(Error::ToothIndex(n));
        }
        Ok(self.at(n))
    }

    pub(crate) fn at(&self, n: u64) -> u64 {
        debug_assert!(n >= 1);
        let m = self.prefix.len() as u64;
        if n <= m {
            return self.prefix[(n - 1) as usize];
        }
        let offset = n - m - 1;
        match &self.tail {
            Tail::Periodic { cycle } => cycle[(offset % cycle.len() as u64) as usize],
            Tail::Arithmetic { start, step } => start + offset * step,
        }
    }

    /// Least `n` with `ℓ(n) > 1`, or `None` when every tooth is trivial.
    pub fn first_branch(&self) -> Option<u64> {
        if let Some(i) = self.prefix.iter().position(|&x| x > 1) {
            return Some(i as u64 + 1);
        }
        let m = self.prefix.len() as u64;
        match &self.tail {
            Tail::Periodic { cycle } => cycle.iter().position(|&x| x > 1).map(|i| m + 1 + i as u64),
            Tail::Arithmetic { start, .. } if *start > 1 => Some(m + 1),
            // start == 1 with a positive step
            Tail::Arithmetic { .. } => Some(m + 2),
        }
    }

    pub fn is_ray(&self) -> bool {
        self.first_branch().is_none()
    }

    /// Same function, shortest representation: the cycle is reduced to its
    /// primitive period and trailing prefix entries that continue the tail
    /// backwards are absorbed into it.
    pub fn simplified(&self) -> Self {
        let mut prefix = self.prefix.clone();
        let mut tail = self.tail.clone();
        if let Tail::Periodic { cycle } = &mut tail {
            let q = cycle.len();
            let period = (1..=q)
                .find(|&p| q % p == 0 && (0..q).all(|i| cycle[i] == cycle[i % p]))
                .unwrap_or(q);
            cycle.truncate(period);
        }
        while let Some(&last) = prefix.last() {
            match &mut tail {
                Tail::Periodic { cycle } => {
                    if *cycle.last().expect("nonempty") != last {
                        break;
                    }
                    cycle.rotate_right(1);
                }
                Tail::Arithmetic { start, step } => {
                    if *start <= *step || *start - *step != last {
                        break;
                    }
                    *start -= *step;
                }
            }
            prefix.pop();
        }
        Self { prefix, tail }
    }
}

/// Least `n` with `ℓ(n) > 1`: the first spine vertex of degree 3.
pub fn spine_degree_first_branch(teeth: &ToothFn) -> Option<u64> {
    teeth.first_branch()
}

pub fn eval_tooth(teeth: &ToothFn, n: u64) -> Result<u64> {
    teeth.eval(n)
}

/// Vertex id of the comb vertex `offset` steps along the tooth at spine
/// position `spine` (offset 0 is the spine vertex itself). Ids follow the
/// Cantor pairing so they never depend on the truncation depth.
pub fn comb_vertex(spine: u64, offset: u64) -> Vertex {
    let k = spine + offset;
    let id = k * (k + 1) / 2 + offset;
    Vertex::try_from(id).expect("comb vertex id fits in u32")
}

/// Inverse of [`comb_vertex`]: `(spine, offset)`.
pub fn comb_position(v: Vertex) -> (u64, u64) {
    let id = u64::from(v);
    let mut k = (((8 * id + 1) as f64).sqrt() as u64).saturating_sub(1) / 2;
    while (k + 1) * (k + 2) / 2 <= id {
        k += 1;
    }
    while k * (k + 1) / 2 > id {
        k -= 1;
    }
    let offset = id - k * (k + 1) / 2;
    (k - offset, offset)
}

/// Id of the double-ray vertex `x_n`, `n ∈ ℤ`.
pub fn double_ray_vertex(n: i64) -> Vertex {
    let id = match n {
        0 => 0,
        n if n > 0 => 2 * n - 1,
        n => -2 * n,
    };
    Vertex::try_from(id).expect("double ray id fits in u32")
}

/// Id of the vertex at distance `t >= 1` on ray `r` (0-based) of a k-ray.
pub fn kray_vertex(k: u32, ray: u32, t: u32) -> Vertex {
    1 + (t - 1) * k + ray
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum SymbolicGraph {
    Ray,
    #[serde(rename = "doubleray")]
    DoubleRay,
    #[serde(rename = "kray")]
    KRay { k: u32 },
    Star,
    #[serde(rename = "complete")]
    CompleteInfinite,
    Comb(ToothFn),
    /// `nK_2`, the only intrinsically finite member.
    Matching { n: u32 },
    Hub(HubGraph),
    #[serde(rename = "union")]
    UnionCopies { n: u32, of: Box<SymbolicGraph> },
}

impl SymbolicGraph {
    pub fn validate(&self) -> Result<()> {
        match self {
            SymbolicGraph::KRay { k: 0 } => Err(Error::InvalidSymbolic("k-ray needs k >= 1".into())),
            SymbolicGraph::Matching { n: 0 } => {
                Err(Error::InvalidSymbolic("matching needs n >= 1".into()))
            }
            SymbolicGraph::UnionCopies { n: 0, .. } => {
                Err(Error::InvalidSymbolic("union needs n >= 1".into()))
            }
            SymbolicGraph::UnionCopies { of, .. } => of.validate(),
            SymbolicGraph::Hub(h) => h.validate(),
            _ => Ok(()),
        }
    }

    /// Id of the natural root.
    pub fn root(&self) -> Vertex {
        match self {
            SymbolicGraph::Hub(_) => 1,
            SymbolicGraph::UnionCopies { n, of } => of.root() * n,
            _ => 0,
        }
    }

    pub fn is_locally_finite(&self) -> bool {
        match self {
            SymbolicGraph::Star | SymbolicGraph::CompleteInfinite | SymbolicGraph::Hub(_) => false,
            SymbolicGraph::UnionCopies { of, .. } => of.is_locally_finite(),
            _ => true,
        }
    }

    pub fn is_connected(&self) -> bool {
        match self {
            SymbolicGraph::Matching { n } => *n == 1,
            SymbolicGraph::UnionCopies { n, of } => *n == 1 && of.is_connected(),
            _ => true,
        }
    }

    /// The truncation pointed at the natural root.
    pub fn pointed_truncation(&self, depth: u32) -> Result<PointedGraph> {
        let g = truncate(self, depth)?;
        PointedGraph::new(g, self.root())
    }
}

/// Depth-`depth` finite approximation of a symbolic graph.
///
/// Ray: `P_{depth+1}`. Double ray: `depth` edges on each side of `x_0`.
/// k-ray: `k` paths of `depth` edges glued at the center. Star: `K_{1,depth}`.
/// Complete: `K_depth`. Comb: spine `x_0..x_depth` with the full tooth of
/// order `ℓ(n)` at each `x_n`, `1 <= n <= depth`. Union: one truncation per
/// copy, copy `c` relabeling `v` to `v * n + c`.
pub fn truncate(g: &SymbolicGraph, depth: u32) -> Result<FiniteGraph> {
    if depth == 0 {
        return Err(Error::InvalidParameter("truncation depth must be >= 1".into()));
    }
    g.validate()?;
    match g {
        SymbolicGraph::Ray => Ok(FiniteGraph::path(depth + 1)),
        SymbolicGraph::DoubleRay => {
            let d = i64::from(depth);
            FiniteGraph::from_edges(
                (-d..d).map(|i| (double_ray_vertex(i), double_ray_vertex(i + 1))),
            )
        }
        SymbolicGraph::KRay { k } => FiniteGraph::from_edges((0..*k).flat_map(|r| {
            (1..=depth).map(move |t| {
                let prev = if t == 1 { 0 } else { kray_vertex(*k, r, t - 1) };
                (prev, kray_vertex(*k, r, t))
            })
        })),
        SymbolicGraph::Star => Ok(FiniteGraph::star(depth)),
        SymbolicGraph::CompleteInfinite => Ok(FiniteGraph::complete(depth)),
        SymbolicGraph::Comb(teeth) => truncate_comb(teeth, depth),
        SymbolicGraph::Matching { n } => Ok(FiniteGraph::matching(*n)),
        SymbolicGraph::Hub(_) => Err(Error::HubTruncation),
        SymbolicGraph::UnionCopies { n, of } => {
            let base = truncate(of, depth)?;
            let mut edges = Vec::with_capacity(base.edge_count() * *n as usize);
            for c in 0..*n {
                edges.extend(base.edges().map(|e| (e.u() * n + c, e.v() * n + c)));
            }
            FiniteGraph::from_edges(edges)
        }
    }
}

fn truncate_comb(teeth: &ToothFn, depth: u32) -> Result<FiniteGraph> {
    let depth = u64::from(depth);
    let mut edges = Vec::new();
    for n in 1..=depth {
        edges.push((comb_vertex(n - 1, 0), comb_vertex(n, 0)));
        for j in 1..teeth.at(n) {
            edges.push((comb_vertex(n, j - 1), comb_vertex(n, j)));
        }
    }
    FiniteGraph::from_edges(edges)
}

/// `n` disjoint copies of a finite graph, relabeled consecutively.
pub fn copies(g: &FiniteGraph, n: usize) -> FiniteGraph {
    disjoint_union(&vec![g.clone(); n])
}
