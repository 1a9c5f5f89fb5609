use super::*;
use crate::groebner::Vector;
use crate::poly::{parse_polynomial, Polynomial, Ring};

fn polys(ring: &Ring, gens: &[&str]) -> Vec<Polynomial> {
    gens.iter()
        .map(|g| parse_polynomial(g, ring).unwrap())
        .collect()
}

fn row(ring: &Ring, entries: &[&str]) -> Vector {
    Vector::from_polynomials(&polys(ring, entries))
}

fn hf(m: &PresentedModule, range: std::ops::Range<i32>) -> Vec<usize> {
    range.map(|n| m.dim_in_degree(n)).collect()
}

#[test]
fn kernel_of_two_variables_is_koszul_relation() {
    let ring = Ring::with_vars(&["x", "y"]).unwrap();
    let phi = GradedMatrix::from_rows(vec![1, 1], vec![0], &[polys(&ring, &["x", "y"])]).unwrap();
    let k = kernel(&phi, &ring).unwrap();
    assert_eq!(k.twists(), &[2]);
    assert!(k.relations().columns().is_empty());
    assert_eq!(hf(&k, 0..5), vec![0, 0, 1, 2, 3]);
}

#[test]
fn kernel_of_zero_map_is_source() {
    let ring = Ring::with_vars(&["x", "y"]).unwrap();
    let phi = GradedMatrix::zero(vec![0, 3], vec![1]);
    let k = kernel(&phi, &ring).unwrap();
    let mut t = k.twists().to_vec();
    t.sort();
    assert_eq!(t, vec![0, 3]);
    assert!(k.relations().columns().is_empty());
}

#[test]
fn twisted_cubic_syzygy_module() {
    let ring = Ring::with_vars(&["x", "y", "z", "w"]).unwrap();
    let phi = GradedMatrix::from_rows(
        vec![2, 2, 2],
        vec![0],
        &[polys(&ring, &["x*z - y^2", "y*w - z^2", "x*w - y*z"])],
    )
    .unwrap();
    let k = kernel(&phi, &ring).unwrap();
    assert_eq!(k.twists(), &[3, 3]);
    // free of rank two
    assert!(k.relations().columns().is_empty());
    assert_eq!(hf(&k, 2..6), vec![0, 2, 8, 20]);
}

#[test]
fn homology_of_isomorphism_vanishes() {
    let ring = Ring::with_vars(&["x"]).unwrap();
    let r = PresentedModule::free(&ring, vec![0]);
    let zero = PresentedModule::zero(&ring);
    let id = GradedMatrix::identity(vec![0]);
    let out = GradedMatrix::zero(vec![0], vec![]);
    let h = homology_at(&id, &r, &out, &zero).unwrap();
    assert!(h.is_zero());
}

fn koszul_xy(ring: &Ring, m: &PresentedModule) -> PresentedModule {
    // spot 1 of 0 -> M(-2) -> M(-1)^2 -> M -> 0 on (x, y), M cyclic
    let d2 = GradedMatrix::from_rows(
        vec![2],
        vec![1, 1],
        &[polys(ring, &["-y"]), polys(ring, &["x"])],
    )
    .unwrap();
    let d1 = GradedMatrix::from_rows(vec![1, 1], vec![0], &[polys(ring, &["x", "y"])]).unwrap();
    let mid = m.direct_sum_shifted(&[1, 1]);
    homology_at(&d2, &mid, &d1, m).unwrap()
}

#[test]
fn koszul_homology_detects_depth() {
    let ring = Ring::with_vars(&["x", "y"]).unwrap();
    let r = PresentedModule::free(&ring, vec![0]);
    assert!(koszul_xy(&ring, &r).is_zero());

    let m = PresentedModule::quotient_ring(&ring, &polys(&ring, &["x"])).unwrap();
    let h = koszul_xy(&ring, &m);
    assert_eq!(
        h.finite_hilbert().unwrap(),
        FiniteHilbertFunction::new([(1, 1)])
    );
}

#[test]
fn composition_must_vanish() {
    let ring = Ring::with_vars(&["x", "y"]).unwrap();
    let r = PresentedModule::free(&ring, vec![0]);
    let d2 = GradedMatrix::from_rows(
        vec![2],
        vec![1, 1],
        &[polys(&ring, &["y"]), polys(&ring, &["x"])],
    )
    .unwrap();
    let d1 = GradedMatrix::from_rows(vec![1, 1], vec![0], &[polys(&ring, &["x", "y"])]).unwrap();
    let mid = r.direct_sum_shifted(&[1, 1]);
    assert!(matches!(
        homology_at(&d2, &mid, &d1, &r),
        Err(crate::Error::Contract(_))
    ));
}

#[test]
fn square_of_maximal_ideal() {
    let ring = Ring::with_vars(&["x", "y"]).unwrap();
    let gens = polys(&ring, &["x^2", "x*y", "y^2"]);
    let m = PresentedModule::quotient_ring(&ring, &gens).unwrap();
    let inv = m.invariants();
    assert_eq!(inv.krull_dim, 0);
    assert_eq!(inv.mu, 1);
    assert_eq!(
        inv.finite.unwrap(),
        FiniteHilbertFunction::new([(0, 1), (1, 2)])
    );
    assert_eq!(m.relations().ncols(), 3);
    assert_eq!(m.socle_dimension(), 2);
}

#[test]
fn socle_of_small_modules() {
    let ring = Ring::with_vars(&["x", "y", "z"]).unwrap();
    assert_eq!(PresentedModule::residue_field(&ring).socle_dimension(), 1);
    let line = Ring::with_vars(&["x"]).unwrap();
    let m = PresentedModule::quotient_ring(&line, &polys(&line, &["x^3"])).unwrap();
    assert_eq!(m.socle_dimension(), 1);
    assert_eq!(PresentedModule::free(&ring, vec![0]).socle_dimension(), 0);
    assert_eq!(PresentedModule::zero(&ring).socle_dimension(), 0);
}

#[test]
fn socle_of_infinite_module() {
    // K[x,y]/(x^2, xy): socle spanned by x
    let ring = Ring::with_vars(&["x", "y"]).unwrap();
    let m = PresentedModule::quotient_ring(&ring, &polys(&ring, &["x^2", "x*y"])).unwrap();
    assert_eq!(m.krull_dim(), 1);
    assert_eq!(m.socle_dimension(), 1);
}

#[test]
fn invariants_of_free_and_cubic() {
    let ring = Ring::with_vars(&["x", "y", "z", "w"]).unwrap();
    let r = PresentedModule::free(&ring, vec![0]);
    assert_eq!(r.mu(), 1);
    assert_eq!(r.krull_dim(), 4);
    let ideal = polys(&ring, &["x*z - y^2", "y*w - z^2", "x*w - y*z"]);
    let cubic = PresentedModule::quotient_ring(&ring, &ideal).unwrap();
    assert_eq!(cubic.relations().ncols(), 3);
    assert_eq!(cubic.basis().initial_degree(), Some(2));
    assert_eq!(cubic.hilbert().multiplicity, 3);
}

#[test]
fn pruning_preserves_module() {
    // generators e0 (deg 0), e1 (deg 1); relations e1 - x e0, y e0
    let ring = Ring::with_vars(&["x", "y"]).unwrap();
    let rels = vec![
        row(&ring, &["-x", "1"]),
        row(&ring, &["y", "0"]),
        row(&ring, &["x^2", "x"]),
    ];
    let m = PresentedModule::new(&ring, vec![0, 1], rels).unwrap();
    assert_eq!(m.mu(), 1);
    assert_eq!(m.twists(), &[0]);
    let quotient = PresentedModule::quotient_ring(&ring, &polys(&ring, &["y", "x^2"])).unwrap();
    assert_eq!(hf(&m, -1..5), hf(&quotient, -1..5));
    assert_eq!(m.relations().ncols(), 2);
}

#[test]
fn lengths_add_in_short_exact_sequence() {
    // 0 -> (x)/(x^3) -> K[x]/(x^3) -> K[x]/(x) -> 0
    let ring = Ring::with_vars(&["x"]).unwrap();
    let whole = PresentedModule::quotient_ring(&ring, &polys(&ring, &["x^3"])).unwrap();
    let quotient = PresentedModule::quotient_ring(&ring, &polys(&ring, &["x"])).unwrap();
    let inclusion = GradedMatrix::from_rows(vec![1], vec![0], &[polys(&ring, &["x"])]).unwrap();
    let sub = kernel_into(&inclusion, &whole).unwrap();
    // kernel of K[x](-1) -> K[x]/(x^3) is x^2 * K[x](-1), the submodule is the cokernel
    let sub = PresentedModule::new(&ring, vec![1], sub_columns(&sub)).unwrap();
    let len = |m: &PresentedModule| m.finite_hilbert().unwrap().length();
    assert_eq!(len(&whole), len(&sub) + len(&quotient));
    assert_eq!(len(&sub), 2);
}

fn sub_columns(k: &PresentedModule) -> Vec<Vector> {
    // the kernel here is cyclic, generated in degree 3 by x^2 in R(-1)
    assert_eq!(k.twists(), &[3]);
    vec![Vector::from_polynomial(
        &parse_polynomial("x^2", k.ring()).unwrap(),
        0,
    )]
}

#[test]
fn direct_sum_series_add() {
    let ring = Ring::with_vars(&["x", "y", "z"]).unwrap();
    let k = PresentedModule::residue_field(&ring);
    let s = k.direct_sum_shifted(&[0, 2, 2]);
    assert_eq!(
        s.finite_hilbert().unwrap(),
        FiniteHilbertFunction::new([(0, 1), (2, 2)])
    );
    assert_eq!(s.socle_dimension(), 3);
}

#[test]
fn dual_functions() {
    let a = FiniteHilbertFunction::new([(0, 1)]);
    assert_eq!(dual_hilbert_function(&a), a);
    let b = FiniteHilbertFunction::new([(2, 3), (5, 1)]);
    assert_eq!(
        dual_hilbert_function(&b),
        FiniteHilbertFunction::new([(-5, 1), (-2, 3)])
    );
    let c = FiniteHilbertFunction::new([(0, 1), (1, 1), (2, 1)]);
    let d = dual_hilbert_function(&c);
    assert_eq!(d, FiniteHilbertFunction::new([(-2, 1), (-1, 1), (0, 1)]));
    assert_eq!(d.length(), 3);
    assert!(FiniteHilbertFunction::default().is_zero());
}

#[test]
fn dual_map_transposes() {
    let ring = Ring::with_vars(&["x", "y"]).unwrap();
    let phi = GradedMatrix::from_rows(vec![1, 1], vec![0], &[polys(&ring, &["x", "y"])]).unwrap();
    let dual = phi.dual(2, ring.field());
    assert_eq!(dual.source(), &[2]);
    assert_eq!(dual.target(), &[1, 1]);
    assert_eq!(dual.entry(1, 0, ring.field()), polys(&ring, &["y"])[0]);
}
