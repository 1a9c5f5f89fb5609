//! Gröbner bases for submodules of twisted free modules, normal forms,
//! syzygies and Hilbert series.

mod buchberger;
mod hilbert;
mod syzygy;
mod vector;

pub use buchberger::{buchberger, groebner_run, minimal_generators, normal_form, GBasis, GbRun};
pub use hilbert::{hilbert_data, monomial_ideal_numerator, HilbertData, LaurentPoly};
pub use syzygy::{kernel_basis, kernel_generators, syzygy_basis};
pub use vector::{term_order, ModuleElement, Term, Vector};
