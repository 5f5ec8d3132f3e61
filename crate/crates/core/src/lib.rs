//! Algebraic clustering of binary data tables.
//!
//! A table with `n` binary columns is read as a set of points in `{0,1}^n`.
//! The ideal of Boolean polynomials vanishing on every observed row holds
//! all the rules the data never violates; reducing each row's indicator
//! polynomial modulo a Gröbner basis of that ideal leaves the part of the
//! row that no rule explains.

pub mod aclus;
pub mod error;
pub mod groebner;
pub mod interpret;
pub mod ring;

pub use error::{Error, Result};
pub use groebner::{buchberger, variety, GroebnerBasis, Ideal};
pub use ring::{Assignment, BooleanPolynomial, Monomial, MonomialOrder, VariableContext};
