//! Sparse multivariate polynomials over the integers.

mod monomial;
mod polynomial;
mod ring;

pub use monomial::{Monomial, MonomialOrder, MAX_EXPONENT};
pub use polynomial::Polynomial;
pub use ring::RingContext;

pub(crate) use ring::is_identifier;
