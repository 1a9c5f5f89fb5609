//! Syzygies by elimination: a basis of the graph `{(phi(e_k), e_k)}` in
//! `F_target ⊕ F_source` under position-over-term, with target components
//! first, contains a Gröbner basis of `ker phi` as its elements with zero
//! target part.

use super::buchberger::{groebner_run, minimal_generators, GBasis};
use super::vector::Vector;
use crate::field::PrimeField;

/// Gröbner basis of the kernel of the map sending `e_k` to `columns[k]`.
///
/// `source_twists[k]` must equal the degree of `columns[k]` whenever the
/// column is nonzero.
pub fn kernel_basis(
    field: &PrimeField,
    target_twists: &[i32],
    columns: &[Vector],
    source_twists: &[i32],
) -> GBasis {
    let m = target_twists.len();
    let n = columns.len();
    debug_assert_eq!(n, source_twists.len());
    let twists: Vec<i32> = target_twists.iter().chain(source_twists).copied().collect();
    let gens: Vec<Vector> = columns
        .iter()
        .enumerate()
        .map(|(k, c)| c.add(&Vector::unit(m + k), field))
        .collect();
    let run = groebner_run(field, &twists, &gens, None);
    let kernel: Vec<Vector> = run
        .basis
        .elements()
        .iter()
        .filter(|g| g.lead().unwrap().comp as usize >= m)
        .map(|g| g.restrict(m..m + n))
        .collect();
    GBasis::from_parts(source_twists.to_vec(), kernel)
}

/// Minimal generators of the kernel of `e_k -> columns[k]`.
pub fn kernel_generators(
    field: &PrimeField,
    target_twists: &[i32],
    columns: &[Vector],
    source_twists: &[i32],
) -> Vec<Vector> {
    let basis = kernel_basis(field, target_twists, columns, source_twists);
    let keep = minimal_generators(field, source_twists, basis.elements());
    keep.into_iter()
        .map(|k| basis.elements()[k].clone())
        .collect()
}

/// Minimal generators of the syzygy module of the elements of `basis`,
/// living in the free module with twists equal to the elements' degrees.
pub fn syzygy_basis(basis: &GBasis, field: &PrimeField) -> Vec<Vector> {
    let degrees: Vec<i32> = basis
        .elements()
        .iter()
        .map(|g| g.degree(basis.twists()).unwrap())
        .collect();
    kernel_generators(field, basis.twists(), basis.elements(), &degrees)
}
