//! Prime-field polynomials: monomials under degrevlex, homogeneous
//! polynomials and the textual parser.

mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use monomial::{Monomial, MAX_VARS};
pub use parse::parse_polynomial;
pub use polynomial::Polynomial;
pub use ring::Ring;
