//! Sombor-index minimization over trees with a fixed degree sequence.
//!
//! The crate builds the greedy tree for an internal degree sequence, computes
//! the Sombor index `Σ √(d(u)² + d(v)²)` and related degree indices, improves
//! arbitrary trees by degree-preserving edge swaps, peels path-condition trees
//! back to a star, and checks the greedy tree against an exhaustive Prüfer-code
//! enumeration.
//!
//! ```
//! use sombor_core::{build_greedy_tree, verify_minimality, DegreeSequence, VerifyOptions};
//!
//! let degrees: DegreeSequence = "3,3,2".parse().unwrap();
//! let greedy = build_greedy_tree(&degrees);
//! assert!((greedy.tree().sombor() - 19.571_092_921).abs() < 1e-9);
//!
//! let report = verify_minimality(&degrees, VerifyOptions::default()).unwrap();
//! assert!(report.pass);
//! ```

pub mod decomposition;
pub mod greedy;
pub mod oracle;
pub mod sequence;
pub mod swap;
pub mod tree;
pub mod weight;

pub use decomposition::{
    attach, decompose, incremental_sombor, strip_last, Decomposition, DecompositionError, DecompositionStep,
};
pub use greedy::{
    build_greedy_tree, check_level_monotonicity, check_path_condition, check_subtree_property, PathCheck, PathWitness,
};
pub use oracle::{
    enumerate_trees, prufer_decode, prufer_encode, sweep, tree_count, verify_minimality, OracleError, PruferCode,
    SweepEntry, VerificationReport, VerifyOptions,
};
pub use sequence::{DegreeSequence, SequenceError};
pub use swap::{
    apply_swap, find_improving_swap, local_search, EdgeSwap, SearchConfig, SearchOutcome, Strategy, SwapError,
};
pub use tree::{DegreeIndex, IndexFunction, RootedTree, Tree, TreeError};
pub use weight::{edge_weight, gap, promotion_gap, Degree, WeightError};
