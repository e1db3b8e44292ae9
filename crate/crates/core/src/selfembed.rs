//! Self-embeddability of combs, and embeddings of truncations that avoid
//! deleted vertices and edges.
//!
//! A comb whose first nontrivial tooth sits at `s` with order `ℓ(s) > s + 1`
//! is first rewritten by swapping the spine segment `x_0..x_s` with that
//! tooth. Afterwards it is self-embeddable iff some shift `p >= 1` has
//! `ℓ(n) <= ℓ(n + p)` for all `n`, which is a finite check for the tail
//! shapes [`ToothFn`] supports.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{comb_position, comb_vertex, truncate, SymbolicGraph, Tail, ToothFn};
use crate::graph::{Edge, EmbeddingMap, FiniteGraph, Vertex};

/// Rewrites `ℓ` so that `s >= ℓ(s) - 1`, describing an isomorphic comb.
/// Already normalized input is returned unchanged; otherwise the result is
/// in simplified form.
pub fn normalize_comb(teeth: &ToothFn) -> Result<ToothFn> {
    let s = teeth.first_branch().ok_or(Error::CombIsRay)?;
    let big = teeth.at(s);
    if s + 1 >= big {
        return Ok(teeth.clone());
    }
    // index shift between the two spines
    let c = big - s - 1;
    let m = teeth.prefix().len() as u64;
    let reach = s.max(m);
    let value = |n: u64| -> u64 {
        if n + 1 < big {
            1
        } else if n + 1 == big {
            s + 1
        } else {
            teeth.at(n - c)
        }
    };
    let prefix: Vec<u64> = (1..=reach + c).map(value).collect();
    let skip = reach - m;
    let tail = match teeth.tail() {
        Tail::Periodic { cycle } => {
            let mut cycle = cycle.clone();
            let q = cycle.len() as u64;
            cycle.rotate_left((skip % q) as usize);
            Tail::Periodic { cycle }
        }
        Tail::Arithmetic { start, step } => Tail::Arithmetic {
            start: start + skip * step,
            step: *step,
        },
    };
    Ok(ToothFn::new(prefix, tail)?.simplified())
}

/// Index shift `ℓ(s) - s - 1` applied by [`normalize_comb`], zero when the
/// input is already normalized.
pub fn normalization_offset(teeth: &ToothFn) -> Result<u64> {
    let s = teeth.first_branch().ok_or(Error::CombIsRay)?;
    Ok(teeth.at(s).saturating_sub(s + 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CombVerdict {
    pub self_embeddable: bool,
    /// The least shift `p` with `ℓ(n) <= ℓ(n + p)` for all `n`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shift: Option<u64>,
    pub normalized: bool,
    /// First branch index of the analyzed function.
    pub s_value: u64,
    /// The function the shift refers to (the normalized one if
    /// normalization applied).
    pub analyzed: ToothFn,
    /// Largest shift that had to be examined.
    pub search_bound: u64,
    /// For each rejected shift `p`, the least `n` with `ℓ(n) > ℓ(n + p)`.
    pub violations: Vec<(u64, u64)>,
}

/// Least `n` with `ℓ(n) > ℓ(n + p)`, or `None` if the shift works for every
/// `n`. Beyond the prefix both sides are periodic in `n` (or the tail is
/// strictly increasing), so a bounded range of `n` decides it.
pub fn shift_violation(teeth: &ToothFn, p: u64) -> Option<u64> {
    let m = teeth.prefix().len() as u64;
    let last = match teeth.tail() {
        Tail::Periodic { cycle } => m + cycle.len() as u64,
        Tail::Arithmetic { .. } => m,
    };
    (1..=last).find(|&n| teeth.at(n) > teeth.at(n + p))
}

/// Shifts beyond this bound behave like one within it, or (arithmetic
/// tails) a shift within it always works.
fn shift_bound(teeth: &ToothFn) -> u64 {
    let m = teeth.prefix().len() as u64;
    match teeth.tail() {
        Tail::Periodic { cycle } => m + cycle.len() as u64,
        Tail::Arithmetic { start, step } => {
            let top = teeth.prefix().iter().copied().max().unwrap_or(0);
            m + top.saturating_sub(*start).div_ceil(*step) + 1
        }
    }
}

struct ShiftSearch {
    shift: Option<u64>,
    bound: u64,
    violations: Vec<(u64, u64)>,
}

fn least_shift(teeth: &ToothFn) -> ShiftSearch {
    let bound = shift_bound(teeth);
    let mut violations = Vec::new();
    for p in 1..=bound {
        match shift_violation(teeth, p) {
            None => {
                return ShiftSearch {
                    shift: Some(p),
                    bound,
                    violations,
                }
            }
            Some(n) => violations.push((p, n)),
        }
    }
    ShiftSearch {
        shift: None,
        bound,
        violations,
    }
}

/// Decides self-embeddability of the comb `C^ℓ`, normalizing first.
pub fn comb_self_embeddable(teeth: &ToothFn) -> Result<CombVerdict> {
    let analyzed = normalize_comb(teeth)?;
    let normalized = analyzed != *teeth;
    let s_value = analyzed.first_branch().ok_or(Error::CombIsRay)?;
    let found = least_shift(&analyzed);
    Ok(CombVerdict {
        self_embeddable: found.shift.is_some(),
        shift: found.shift,
        normalized,
        s_value,
        analyzed,
        search_bound: found.bound,
        violations: found.violations,
    })
}

fn translation(teeth: &ToothFn, shift: u64, depth: u32, host: &FiniteGraph) -> Result<EmbeddingMap> {
    let pattern = truncate(&SymbolicGraph::Comb(teeth.clone()), depth)?;
    let assignment: BTreeMap<Vertex, Vertex> = pattern
        .vertices()
        .map(|v| {
            let (n, j) = comb_position(v);
            (v, comb_vertex(n + shift, j))
        })
        .collect();
    let map = EmbeddingMap::new(assignment, false);
    map.validate(&pattern, host)?;
    Ok(map)
}

fn check_shift(teeth: &ToothFn, shift: u64, upto: u64) -> Result<()> {
    for n in 1..=upto {
        let (left, right) = (teeth.at(n), teeth.at(n + shift));
        if left > right {
            return Err(Error::TranslationViolated { shift, n, left, right });
        }
    }
    Ok(())
}

fn depth_plus(depth: u32, shift: u64) -> Result<u32> {
    u32::try_from(u64::from(depth) + shift)
        .map_err(|_| Error::InvalidParameter("translated depth overflows".into()))
}

/// Embeds the depth-`depth` truncation of `C^ℓ` into the depth
/// `depth + p` one by `x_n ↦ x_{n+p}`, each tooth into the tooth `p` steps
/// later.
pub fn comb_translation_embedding(teeth: &ToothFn, p: u64, depth: u32) -> Result<EmbeddingMap> {
    if teeth.is_ray() {
        return Err(Error::CombIsRay);
    }
    if p == 0 {
        return Err(Error::InvalidParameter("shift must be >= 1".into()));
    }
    check_shift(teeth, p, u64::from(depth))?;
    let host = truncate(&SymbolicGraph::Comb(teeth.clone()), depth_plus(depth, p)?)?;
    translation(teeth, p, depth, &host)
}

/// A vertex of a comb: spine vertex `x_k`, or the vertex `offset >= 1`
/// steps along the tooth at `x_spine`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexDesignation {
    Spine(u64),
    Tooth { spine: u64, offset: u64 },
}

impl VertexDesignation {
    pub fn spine_index(self) -> u64 {
        match self {
            VertexDesignation::Spine(k) => k,
            VertexDesignation::Tooth { spine, .. } => spine,
        }
    }

    fn id(self, teeth: &ToothFn) -> Result<Vertex> {
        match self {
            VertexDesignation::Spine(k) => Ok(comb_vertex(k, 0)),
            VertexDesignation::Tooth { spine, offset } => {
                if spine == 0 || offset == 0 || offset >= teeth.at(spine) {
                    return Err(Error::InvalidParameter(format!(
                        "no tooth vertex at spine {spine}, offset {offset}"
                    )));
                }
                Ok(comb_vertex(spine, offset))
            }
        }
    }
}

/// An embedding into a truncation with a vertex removed, obtained by
/// translating by `total_shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AvoidingEmbedding {
    pub total_shift: u64,
    pub map: EmbeddingMap,
}

/// Translates by `a * p` with `a` least such that `a * p` exceeds the spine
/// index of `v`, giving an embedding of the depth-`depth` truncation into
/// the depth-`depth + a * p` truncation minus `v`.
pub fn comb_avoid_vertex_embedding(
    teeth: &ToothFn,
    v: VertexDesignation,
    p: u64,
    depth: u32,
) -> Result<AvoidingEmbedding> {
    if teeth.is_ray() {
        return Err(Error::CombIsRay);
    }
    if p == 0 {
        return Err(Error::InvalidParameter("shift must be >= 1".into()));
    }
    if let Some(n) = shift_violation(teeth, p) {
        return Err(Error::TranslationViolated {
            shift: p,
            n,
            left: teeth.at(n),
            right: teeth.at(n + p),
        });
    }
    let id = v.id(teeth)?;
    let a = v.spine_index() / p + 1;
    let total = a * p;
    let host = truncate(&SymbolicGraph::Comb(teeth.clone()), depth_plus(depth, total)?)?;
    let host = host.delete_vertices(&BTreeSet::from([id]))?;
    let map = translation(teeth, total, depth, &host)?;
    Ok(AvoidingEmbedding { total_shift: total, map })
}

/// A finite set of vertices and edges to delete.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Deletion {
    #[serde(default)]
    pub vertices: BTreeSet<Vertex>,
    #[serde(default)]
    pub edges: BTreeSet<Edge>,
}

impl Deletion {
    fn touched(&self) -> BTreeSet<Vertex> {
        let mut out = self.vertices.clone();
        for e in &self.edges {
            out.insert(e.u());
            out.insert(e.v());
        }
        out
    }

    fn apply(&self, host: &FiniteGraph) -> Result<FiniteGraph> {
        let g = host.delete_edges(&self.edges)?;
        let present: BTreeSet<Vertex> =
            self.vertices.iter().copied().filter(|&v| g.contains_vertex(v)).collect();
        if let Some(&v) = self.vertices.iter().find(|&&v| !host.contains_vertex(v)) {
            return Err(Error::UnknownVertex(v));
        }
        g.delete_vertices(&present)
    }
}

/// Embeds the depth-`depth` truncation of `g` into a deeper truncation with
/// the deleted vertices and edges removed, and validates the map. Supported
/// for rays (shift past the deletion), the infinite complete graph (use the
/// first untouched ids) and combs with a translation shift (translate past
/// the deletion).
pub fn verify_deletion_containment(g: &SymbolicGraph, delete: &Deletion, depth: u32) -> Result<bool> {
    let touched = delete.touched();
    let top = touched.iter().next_back().copied();
    let (pattern, host, assignment): (FiniteGraph, FiniteGraph, BTreeMap<Vertex, Vertex>) = match g {
        SymbolicGraph::Ray => {
            let shift = top.map_or(0, |t| t + 1);
            let pattern = truncate(g, depth)?;
            let host = truncate(g, depth + shift)?;
            let assignment = pattern.vertices().map(|v| (v, v + shift)).collect();
            (pattern, host, assignment)
        }
        SymbolicGraph::CompleteInfinite => {
            let size = (depth + touched.len() as u32).max(top.map_or(0, |t| t + 1));
            let pattern = truncate(g, depth)?;
            let host = truncate(g, size)?;
            let free = (0..size).filter(|v| !touched.contains(v));
            let assignment = pattern.vertices().zip(free).collect();
            (pattern, host, assignment)
        }
        SymbolicGraph::Comb(teeth) => {
            let p = least_shift(teeth).shift.ok_or_else(|| {
                Error::UnsupportedFamily("comb without a translation shift".into())
            })?;
            let k = touched.iter().map(|&v| comb_position(v).0).max();
            let total = k.map_or(p, |k| (k / p + 1) * p);
            let pattern = truncate(g, depth)?;
            let host = truncate(g, depth_plus(depth, total)?)?;
            let assignment = pattern
                .vertices()
                .map(|v| {
                    let (n, j) = comb_position(v);
                    (v, comb_vertex(n + total, j))
                })
                .collect();
            (pattern, host, assignment)
        }
        other => {
            return Err(Error::UnsupportedFamily(format!(
                "no deletion construction for {}",
                family_name(other)
            )))
        }
    };
    let host = delete.apply(&host)?;
    Ok(EmbeddingMap::new(assignment, false).validate(&pattern, &host).is_ok())
}

fn family_name(g: &SymbolicGraph) -> &'static str {
    match g {
        SymbolicGraph::Ray => "ray",
        SymbolicGraph::DoubleRay => "doubleray",
        SymbolicGraph::KRay { .. } => "kray",
        SymbolicGraph::Star => "star",
        SymbolicGraph::CompleteInfinite => "complete",
        SymbolicGraph::Comb(_) => "comb",
        SymbolicGraph::Matching { .. } => "matching",
        SymbolicGraph::Hub(_) => "hub",
        SymbolicGraph::UnionCopies { .. } => "union",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::find_embedding;

    fn ex56() -> ToothFn {
        ToothFn::identity()
    }
    fn ex57() -> ToothFn {
        ToothFn::periodic(vec![3], vec![2]).unwrap()
    }
    fn ex58() -> ToothFn {
        ToothFn::periodic(vec![2], vec![1]).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let n = normalize_comb(&ex57()).unwrap();
        assert_eq!(n.eval(1).unwrap(), 1);
        assert!((2..30).all(|k| n.eval(k).unwrap() == 2));
        assert_eq!(n, ToothFn::periodic(vec![1], vec![2]).unwrap());
        assert_eq!(normalize_comb(&ex58()).unwrap(), ex58());
        assert_eq!(normalize_comb(&ex56()).unwrap(), ex56());
        let ray = ToothFn::periodic(vec![1, 1], vec![1]).unwrap();
        assert_eq!(normalize_comb(&ray), Err(Error::CombIsRay));
    }

    #[test]
    fn normalize_matches_formula() {
        let cases = [
            ToothFn::periodic(vec![1, 6, 2], vec![3, 1]).unwrap(),
            ToothFn::arithmetic(vec![5], 2, 3).unwrap(),
            ToothFn::periodic(vec![], vec![4, 1, 1]).unwrap(),
        ];
        for l in cases {
            let s = l.first_branch().unwrap();
            let big = l.at(s);
            let n = normalize_comb(&l).unwrap();
            for k in 1..60 {
                let expected = if k + 1 < big {
                    1
                } else if k + 1 == big {
                    s + 1
                } else {
                    l.at(k + s + 1 - big)
                };
                assert_eq!(n.at(k), expected, "{l:?} at {k}");
            }
            let s2 = n.first_branch().unwrap();
            assert!(s2 + 1 >= n.at(s2));
        }
    }

    #[test]
    fn normalized_comb_is_isomorphic_at_truncation_level() {
        for l in [ex57(), ToothFn::periodic(vec![1, 6], vec![2, 3]).unwrap()] {
            let n = normalize_comb(&l).unwrap();
            let delta = normalization_offset(&l).unwrap() as u32;
            for d in 1..8 {
                let a = truncate(&SymbolicGraph::Comb(l.clone()), d).unwrap();
                let b = truncate(&SymbolicGraph::Comb(n.clone()), d).unwrap();
                let a_big = truncate(&SymbolicGraph::Comb(l.clone()), d + delta).unwrap();
                let b_big = truncate(&SymbolicGraph::Comb(n.clone()), d + delta).unwrap();
                assert!(find_embedding(&b, &a_big).is_some());
                assert!(find_embedding(&a, &b_big).is_some());
            }
        }
    }

    #[test]
    fn decider_examples() {
        let v = comb_self_embeddable(&ex56()).unwrap();
        assert!(v.self_embeddable && v.shift == Some(1) && !v.normalized && v.s_value == 2);
        let v = comb_self_embeddable(&ex58()).unwrap();
        assert!(!v.self_embeddable && v.shift.is_none());
        assert!(v.violations.iter().all(|&(p, n)| ex58().at(n) > ex58().at(n + p)));
        let v = comb_self_embeddable(&ex57()).unwrap();
        assert!(v.self_embeddable && v.normalized && v.shift == Some(1));
        let ray = ToothFn::periodic(vec![1], vec![1]).unwrap();
        assert_eq!(comb_self_embeddable(&ray), Err(Error::CombIsRay));
    }

    #[test]
    fn translation_examples() {
        let map = comb_translation_embedding(&ex56(), 1, 3).unwrap();
        assert_eq!(map.get(comb_vertex(2, 1)), Some(comb_vertex(3, 1)));
        let ray = ToothFn::periodic(vec![1], vec![1]).unwrap();
        assert_eq!(comb_translation_embedding(&ray, 1, 3), Err(Error::CombIsRay));
        let n = normalize_comb(&ex57()).unwrap();
        assert!(comb_translation_embedding(&n, 1, 4).is_ok());
        assert!(matches!(
            comb_translation_embedding(&ex58(), 1, 3),
            Err(Error::TranslationViolated { shift: 1, n: 1, left: 2, right: 1 })
        ));
    }

    #[test]
    fn avoid_vertex_examples() {
        let l = ex56();
        let r = comb_avoid_vertex_embedding(&l, VertexDesignation::Spine(0), 1, 3).unwrap();
        assert_eq!(r.total_shift, 1);
        assert!(!r.map.image().contains(&comb_vertex(0, 0)));
        let tooth = VertexDesignation::Tooth { spine: 2, offset: 1 };
        let r = comb_avoid_vertex_embedding(&l, tooth, 1, 3).unwrap();
        assert_eq!(r.total_shift, 3);
        assert!(!r.map.image().contains(&comb_vertex(2, 1)));
        let r = comb_avoid_vertex_embedding(&l, VertexDesignation::Spine(5), 1, 3).unwrap();
        assert_eq!(r.total_shift, 6);
        let bad = VertexDesignation::Tooth { spine: 2, offset: 2 };
        assert!(comb_avoid_vertex_embedding(&l, bad, 1, 3).is_err());
    }

    #[test]
    fn deletion_examples() {
        let x0 = Deletion {
            vertices: BTreeSet::from([0]),
            ..Deletion::default()
        };
        assert!(verify_deletion_containment(&SymbolicGraph::Ray, &x0, 4).unwrap());
        let two = Deletion {
            vertices: BTreeSet::from([1, 3]),
            ..Deletion::default()
        };
        assert!(verify_deletion_containment(&SymbolicGraph::CompleteInfinite, &two, 5).unwrap());
        let mixed = Deletion {
            vertices: BTreeSet::from([comb_vertex(1, 0), comb_vertex(3, 2)]),
            edges: BTreeSet::from([Edge::new(comb_vertex(4, 0), comb_vertex(5, 0)).unwrap()]),
        };
        assert!(verify_deletion_containment(&SymbolicGraph::Comb(ex56()), &mixed, 4).unwrap());
        assert!(matches!(
            verify_deletion_containment(&SymbolicGraph::Star, &x0, 3),
            Err(Error::UnsupportedFamily(_))
        ));
    }
}
