//! Exact computations around Hodge loci of hypersurfaces containing two
//! linear spaces: associated (Artinian Gorenstein) ideals, Hilbert functions,
//! and the parametric socle pairing `psi_1 + nu * psi_2` whose left kernel
//! measures excess tangent dimension.

pub mod algebra;
pub mod error;
pub mod hodge;
pub mod ideal;
pub mod linalg;
pub mod pairing;
pub mod scenario;

pub use error::{Error, Result};
