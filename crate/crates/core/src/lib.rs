//! Ideal lattices in residue class rings `Z[x1..xn]/a`.
//!
//! The crate decides whether a quotient of an integer polynomial ring is a
//! free, finitely generated `Z`-module (via short reduced Gröbner bases over
//! the integers), embeds its ideals as integer lattices in Hermite normal
//! form, and provides the tensor picture of multivariate cyclic lattices
//! together with lattice ideals, saturation and toric ideals.

pub mod cli;
pub mod cyclic;
pub mod error;
pub mod groebner;
pub mod json;
pub mod lattice;
pub mod lattice_ideal;
pub mod poly;
pub mod quotient;

pub use error::{Error, Result};
pub use groebner::GroebnerBasis;

pub use poly::{Monomial, MonomialOrder, Polynomial, RingContext};

pub use lattice::{IntegerLattice, IntegerMatrix};
pub use quotient::QuotientStructure;
