//! The Boolean quotient ring `B[X_1..X_n] / <X_i^2 - X_i>`.
//!
//! Every element has a unique squarefree representative, so a monomial is a
//! set of variables and a polynomial is a set of monomials with coefficients
//! in GF(2).

mod assignment;
mod context;
mod monomial;
mod order;
mod parse;
mod poly;

pub use assignment::Assignment;
pub use context::{VariableContext, MAX_VARIABLES};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::parse_polynomial;
pub use poly::BooleanPolynomial;
