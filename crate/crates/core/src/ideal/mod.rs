//! Graded ideals: Gröbner bases, graded pieces, Hilbert functions, sums,
//! intersections, and Jacobian ideals.

pub mod groebner;
pub mod hilbert;
pub mod intersection;
pub mod jacobian;
pub mod model;
pub mod span;

pub use groebner::{Fp, Field, GbBuilder, GroebnerBasis};
pub use intersection::{ideal_intersection_degreewise, intersection_by_elimination};
pub use jacobian::{is_smooth, is_smooth_modular, jacobian_ideal, SmoothnessCertificate};
pub use model::{standard_monomials, IdealModel, QuotientBasis};
pub use span::{DegreeSpan, MonomialBasis};
