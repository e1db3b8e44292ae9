//! Ramsey arrowing and minimality for finite graphs, and constructive tools
//! for symbolic infinite graphs: truncations, self-embeddability of combs
//! and hub graphs, and finite forms of compactness arguments.
//!
//! `F → (G, H)` means every red/blue coloring of the edges of `F` contains a
//! red copy of `G` or a blue copy of `H`. Containment is always non-induced.

pub mod arrowing;
pub mod canonical;
mod embed;
pub mod error;
pub mod families;
pub mod graph;
pub mod hubgraph;
pub mod io;
pub mod konig;
pub mod selfembed;

pub use arrowing::{
    arrows, arrows_pointed, arrows_with, check_family_conditions, enumerate_graphs,
    enumerate_minimal, is_minimal, verify_good_coloring, verify_good_coloring_pointed,
    ArrowingVerdict, Color, Coloring,
};
pub use canonical::{canonical_form, canonical_form_pointed};
pub use error::{Error, Result};
pub use families::{eval_tooth, spine_degree_first_branch, truncate, SymbolicGraph, Tail, ToothFn};
pub use graph::{
    contains, disjoint_union, find_embedding, find_pointed_embedding, Edge, EmbeddingMap,
    FiniteGraph, PointedGraph, Vertex,
};
pub use hubgraph::{
    blue_matching_vertex_set, construct_self_embedding, good_coloring_few_hubs,
    good_coloring_ng_minus_e, hub_truncate, is_family_member, Count, HubGraph, LeafClass,
    Signature,
};
pub use konig::{
    bfs_enumeration, bounded_pointed_arrowing_transfer, build_level_sets, finite_arrowing_subgraph,
    ray_prefix_search, stitch_embedding, LevelSets,
};
pub use selfembed::{
    comb_avoid_vertex_embedding, comb_self_embeddable, comb_translation_embedding, normalize_comb,
    verify_deletion_containment, CombVerdict, Deletion, VertexDesignation,
};
