//! Conversions between certificate kinds, and refuters.
//!
//! * [`boolean_to_realizer`]: boolean realizer with at most 3 orders to a
//!   realizer of no larger size.
//! * [`local2_to_realizer`]: local realizer of width at most 2 to a realizer of
//!   size at most 2.
//! * [`local3_to_boolean`]: local realizer of width at most 3 to a boolean
//!   realizer built from block partitions.
//! * [`ramsey_cycle_witness`] and [`thm6_refute_boolean`] search for the
//!   contradictions that rule out candidate certificates.

mod block_partitions;
mod orientation;
mod ramsey;
mod refute;
mod stacking;

pub use block_partitions::{local3_to_boolean, Local3Conversion, OccurrenceIndex, PartitionLabel, PartitionScheme};
pub use orientation::{
    boolean_to_realizer, classify_boolean_certificate, orientation_to_two_realizer, CertificateCase, SignedPermutation,
};
pub use ramsey::{ramsey_cycle_witness, ramsey_cycle_witness_with, RamseyWitness};
pub use refute::{thm6_refute_boolean, RefutationOutcome, Refuter};
pub use stacking::local2_to_realizer;
