//! Independent brute-force deciders and random instance generators used to
//! check the polynomial algorithms on small inputs.

pub mod enumerate;
pub mod generate;
pub mod linear;
pub mod partition;
pub mod simplex;

pub use enumerate::{canonical_code, connected_chordal_graphs};
pub use generate::{
    gen_bluered, gen_closure_case, gen_cut_vertex_case, gen_linear_root, gen_nes_model, gen_star_model, random_chordal, shrink_graph, ClosureRule,
};
pub use linear::bruteforce_linear_leafpower;
pub use partition::{bruteforce_clique_path, bruteforce_good_partition, bruteforce_x_interval, bruteforce_x_interval_on};
pub use simplex::{FeasibilitySystem, Relation};

/// Default size limit of the exhaustive deciders.
pub const DEFAULT_LIMIT: usize = 8;
