//! Exact polynomial arithmetic over `Q` and over `Q[nu]`.

mod field;
mod monomial;
mod nu;
mod order;
pub mod parse;
mod polynomial;
pub mod rational;

pub use field::{Field, Fp};
pub use monomial::{binomial, enumerate_monomials, monomial_count, Monomial, MAX_VARS};
pub use nu::{NuFraction, NuPoly, Scalar};
pub use order::{MonomialOrder, OrderKey, OrderKind};
pub use parse::{parse_polynomial, parse_polynomial_list};
pub use polynomial::Polynomial;
pub use rational::Rational;
