//! Presented graded modules, kernels and homology, and finite length data.

mod homology;
mod matrix;
mod presented;

pub use homology::{homology_at, kernel, kernel_into};
pub use matrix::GradedMatrix;
pub use presented::{
    dual_hilbert_function, FiniteHilbertFunction, ModuleInvariants, PresentedModule,
};

#[cfg(test)]
mod tests;
