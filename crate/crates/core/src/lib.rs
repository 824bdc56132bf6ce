//! Realizers, boolean realizers and local realizers of finite posets.
//!
//! The crate verifies all three kinds of certificate, generates the standard
//! families with explicit certificates ([`generators`], [`thm6`]), converts
//! between certificate kinds ([`transforms`]), and decides small instances
//! exactly ([`solvers`]). [`io`] holds the line-oriented text formats.

pub mod error;
pub mod exec;
pub mod fixtures;
pub mod formula;
pub mod generators;
pub mod io;
pub mod poset;
pub mod realizer;
pub mod solvers;
pub mod stats;
pub mod thm6;
pub mod transforms;

pub use error::{Error, Result};
pub use exec::Exec;
pub use formula::{BooleanFormula, Cnf, Literal, TruthTable};
pub use poset::{critical_pairs, incomparability_graph, transitive_closure, Digraph, Poset};
pub use realizer::{
    eval_boolean_relation, local_width, normalize_truth_table, verify_boolean_realizer, verify_local_realizer,
    verify_realizer, BooleanRealizer, LinearOrder, LocalRealizer, PartialLinearExtension, Realizer,
};
pub use solvers::{
    decide_boolean_dimension_small, decide_dimension, decide_local_dimension_low, dimension, exact_chromatic_number,
    Budget, Decision,
};
pub use stats::{stats, PosetStats};
pub use transforms::{
    boolean_to_realizer, local2_to_realizer, local3_to_boolean, orientation_to_two_realizer, ramsey_cycle_witness,
    thm6_refute_boolean,
};
