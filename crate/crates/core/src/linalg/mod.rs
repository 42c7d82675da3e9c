pub mod dense;
pub mod modular;
pub mod parametric;
pub mod roots;
pub mod sparse;

pub use dense::Matrix;
pub use modular::{crt, independent_rows_mod_p, primes_below_2_31, rational_mod, rational_reconstruction, row_mod, ModEchelon};
pub use parametric::{bareiss, generic_left_kernel, rank_at, rank_modulo, specialize, BareissOutcome, NuMatrix};
pub use roots::{isolate_real_roots, rational_roots, split_rational, RealRoot};
pub use sparse::{SparseEchelon, SparseRow};
