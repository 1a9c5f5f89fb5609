use super::matrix::GradedMatrix;
use super::presented::PresentedModule;
use crate::error::{Error, Result};
use crate::groebner::{kernel_basis, kernel_generators, Vector};

/// Generators of `{v in F_B : d(v) in N_C}` where `d: F_B -> F_C`, as
/// elements of `F_B`.
fn preimage_generators(d: &GradedMatrix, target: &PresentedModule) -> Vec<Vector> {
    let field = *target.field();
    let b = d.ncols();
    let mut cols = d.columns().to_vec();
    cols.extend(target.relations().columns().iter().cloned());
    let mut source = d.source().to_vec();
    source.extend_from_slice(target.relations().source());
    kernel_generators(&field, d.target(), &cols, &source)
        .into_iter()
        .map(|v| v.restrict(0..b))
        .filter(|v| !v.is_zero())
        .collect()
}

/// Presentation of `ker(d: F -> C)` for a map of the free module on the
/// source twists of `d` into the presented module `target`.
pub fn kernel_into(d: &GradedMatrix, target: &PresentedModule) -> Result<PresentedModule> {
    let gens = preimage_generators(d, target);
    submodule(target, d.source(), &gens)
}

/// The submodule of `⊕ R(-twists)` generated by `gens`, presented by its
/// syzygies.
fn submodule(like: &PresentedModule, twists: &[i32], gens: &[Vector]) -> Result<PresentedModule> {
    let field = *like.field();
    let degrees: Vec<i32> = gens.iter().map(|g| g.degree(twists).unwrap()).collect();
    let syz = kernel_generators(&field, twists, gens, &degrees);
    PresentedModule::new(like.ring(), degrees, syz)
}

/// Kernel of a map of free modules.
pub fn kernel(phi: &GradedMatrix, ring: &crate::poly::Ring) -> Result<PresentedModule> {
    kernel_into(phi, &PresentedModule::free(ring, phi.target().to_vec()))
}

/// Homology at `middle` of `A -> middle -> target`, where `incoming` maps
/// the generators of `A` into `middle` and `outgoing` maps the generators of
/// `middle` into `target`.
pub fn homology_at(
    incoming: &GradedMatrix,
    middle: &PresentedModule,
    outgoing: &GradedMatrix,
    target: &PresentedModule,
) -> Result<PresentedModule> {
    let field = *middle.field();
    if incoming.target() != middle.twists() || outgoing.source() != middle.twists() {
        return Err(Error::Structure(
            "maps do not match the middle module".into(),
        ));
    }
    if outgoing.target() != target.twists() {
        return Err(Error::Structure(
            "outgoing map does not match its target".into(),
        ));
    }
    for c in middle.relations().columns() {
        if !target.is_zero_element(&outgoing.apply(c, &field)) {
            return Err(Error::Contract(
                "outgoing map is not well defined on the middle module".into(),
            ));
        }
    }
    for c in incoming.columns() {
        if !target.is_zero_element(&outgoing.apply(c, &field)) {
            return Err(Error::Contract(
                "consecutive maps do not compose to zero".into(),
            ));
        }
    }
    let cycles = preimage_generators(outgoing, target);
    if cycles.is_empty() {
        return Ok(PresentedModule::zero(middle.ring()));
    }
    let twists = middle.twists();
    let degrees: Vec<i32> = cycles.iter().map(|z| z.degree(twists).unwrap()).collect();
    let z = cycles.len();
    // boundaries plus relations of the middle module
    let mut cols = cycles.clone();
    let mut source = degrees.clone();
    for (c, &d) in incoming.columns().iter().zip(incoming.source()) {
        if !c.is_zero() {
            cols.push(c.clone());
            source.push(d);
        }
    }
    cols.extend(middle.relations().columns().iter().cloned());
    source.extend_from_slice(middle.relations().source());
    let ker = kernel_basis(&field, twists, &cols, &source);
    let rels: Vec<Vector> = ker
        .elements()
        .iter()
        .map(|v| v.restrict(0..z))
        .filter(|v| !v.is_zero())
        .collect();
    PresentedModule::new(middle.ring(), degrees, rels)
}
