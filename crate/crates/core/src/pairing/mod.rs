//! Socle pairings of two associated ideals, the Gram matrix of
//! `psi_1 + nu psi_2`, its critical values, and the left kernel criterion for
//! the sum of two classes.

pub mod excess;
pub mod gram;
pub mod socle;
pub mod tsp;

pub use excess::{excess_report, ExcessReport, ExcessSample, Verdict};
pub use gram::{gram_matrix, left_kernel_at, rank_at_value, Block, BlockShape, CriticalNu, CriticalValue, GramReport};
pub use socle::{pairing_value, socle_generator, SoclePairing};
pub use tsp::{tsp_criterion, TspOutcome};
