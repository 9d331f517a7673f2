//! Hamiltonian colorings of block graphs.
//!
//! A hamiltonian coloring of a graph of order `p` assigns non-negative
//! integers to vertices so that `D(u, v) + |c(u) - c(v)| ≥ p - 1` for all
//! distinct `u, v`, where `D` is the detour (longest path) distance. This
//! crate computes the general lower bound
//! `hc(G) ≥ (p - 1)(p - ω) - 2𝓛(G) + ξ` for block graphs, builds colorings
//! that meet it for symmetric block graphs, evaluates the known closed
//! forms, and checks all of it against exhaustive search on small graphs.
//!
//! ```
//! use blockhc::prelude::*;
//!
//! let spec = SymmetricSpec::new(4, 2, 4).unwrap();
//! let (g, coords) = gen_symmetric(spec).unwrap();
//! let profile = DetourProfile::compute(&g);
//! let ordering = sym_ordering(&g, &coords, &profile).unwrap();
//! let coloring = coloring_from_ordering(&g, &profile, &ordering).unwrap();
//! assert_eq!(coloring.span(), 327);
//! assert_eq!(lower_bound(&g, &profile), 327);
//! assert!(is_valid_coloring(&g, &coloring.colors));
//! ```

pub mod cli;
pub mod coloring;
pub mod detour;
pub mod exact;
pub mod export;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod pipeline;

pub mod prelude {
    pub use crate::coloring::{
        check_ordering_conditions, coloring_from_ordering, greedy_ordering, is_valid_coloring,
        sym_ordering, telescoped_span, union_coloring, validate_coloring, ColoringError,
        ConditionReport, HamColoring, VertexOrdering, Violation,
    };
    pub use crate::detour::{
        branch_relation, detour_center, detour_distance, detour_level, total_detour_level,
        BranchRelation, DetourProfile,
    };
    pub use crate::exact::{
        brute_longest_path, exact_hc, greedy_min_coloring_for_ordering, ExactError, ExactResult,
        SearchBudget,
    };
    pub use crate::families::{
        gen_path, gen_random_block_graph, gen_star, gen_symmetric, gen_union, FamilyError,
        SymmetricCoordinates, SymmetricSpec,
    };
    pub use crate::formulas::{
        family_hc, lower_bound, phi, sym_hc, sym_lower_bound, sym_order_count, sym_total_level,
        FamilyKind, FormulaError,
    };
    pub use crate::graph::{build_block_graph, BlockGraph, GraphError, GraphFile, GraphMeta, Vertex};
}
