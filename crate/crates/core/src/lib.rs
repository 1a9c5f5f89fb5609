//! Exact graded commutative algebra over prime fields: Gröbner bases,
//! minimal free resolutions, Koszul homology, local cohomology through
//! graded local duality, Green modules, and a harness that checks bounds on
//! generators and syzygies against an independent dense oracle.

pub mod duality;
pub mod error;
pub mod field;
pub mod groebner;
pub mod harness;
pub mod input;
pub mod koszul;
pub mod linalg;
pub mod module;
pub mod oracle;
pub mod poly;
pub mod resolution;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use module::{FiniteHilbertFunction, GradedMatrix, PresentedModule};
pub use poly::{parse_polynomial, Monomial, Polynomial, Ring};
