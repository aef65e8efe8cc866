//! Knowlton-Graham partitions of `{1..n}` built from 0-1 matrices with
//! prescribed row and column sums, plus a simulator for using them to
//! identify the wires of a cable from both ends.
//!
//! * [`matrix`]: degree sequences, the gap-free matrix constructor, and
//!   Gale-Ryser / enumeration oracles.
//! * [`partition`]: order bounds, the representation of `n`, matrix and
//!   partition conversions, and the direct verifier.
//! * [`cable`]: seeded cables and the two-phase labelling protocol.
//! * [`format`]: JSON documents and text renderings.
//! * [`cli`]: the batch commands used by the `kgpart` binary.

pub mod cable;
pub mod cli;
mod error;
pub mod fixtures;
pub mod format;
pub mod matrix;
pub mod partition;

pub use cable::{
    make_cable, probe, run_protocol, CableInstance, ConnectionPlan, End, ProtocolTranscript,
};
pub use error::{Error, Result};
pub use matrix::{
    check_lemma2_preconditions, col_sums, enumerate_matrices, gale_ryser_feasible,
    lemma2_construct, permute_to_target, row_sums, BinaryMatrix, DegreeSequence, SortPermutation,
};
pub use partition::{
    construct, construct_detailed, j_bound, kg_violations, lower_bound, matrix_to_partition,
    matrix_to_partition_canonical, order_range, partition_to_matrix, represent, verify_kg,
    Construction, KgPartition, Representation,
};
