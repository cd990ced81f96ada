//! Arf semigroups, multiplicity trees and blowups of algebroid curves.
//!
//! * [`numerical`]: one-branch Arf semigroups, multiplicity sequences,
//!   restriction numbers and Arf characters.
//! * [`good_semigroup`]: good subsemigroups of ℕ^d on a conductor box.
//! * [`mult_tree`]: multiplicity trees, their order, intersections and
//!   canonical forms.
//! * [`char_vectors`]: finite vector sets determining an Arf semigroup.
//! * [`branch_ring`]: parametrized curves over ℚ and their blowups.
//! * [`format`]: JSON literals.
//!
//! Branch indices are 0-based throughout.

pub mod branch_ring;
pub mod char_vectors;
pub mod error;
pub mod exec;
pub mod format;
pub mod good_semigroup;
pub mod mult_tree;
pub mod numerical;

pub use branch_ring::{curves_equivalent, valuation, CurveAlgebra, CurveTree, SeriesTuple, TruncatedSeries};
pub use char_vectors::{
    build_character_vectors, build_character_vectors_with, is_minimal_character_set, reduce_characters,
    smallest_arf_containing, smallest_arf_tree, CharacterVectorSet, WitnessNode,
};
pub use error::{Error, Result};
pub use exec::Execution;
pub use format::{CurveSpec, Json};
pub use good_semigroup::{GoodSemigroup, GoodViolation};
pub use mult_tree::{MultiplicityTree, SplitProfile, TreeNode, TreeViolation};
pub use numerical::{
    arf_closure, arf_closure_sequence, semigroup_to_seq, seq_to_semigroup, CharacterSet1D, MultiplicitySequence,
    NumericalSemigroup,
};
