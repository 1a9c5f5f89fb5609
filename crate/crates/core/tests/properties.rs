use proptest::prelude::*;

use syzygy_core::oracle::DenseModule;
use syzygy_core::resolution::{minimal_free_resolution, regularity, RegularityMode};
use syzygy_core::{parse_polynomial, Monomial, Polynomial, PresentedModule, Ring};

fn ring() -> Ring {
    Ring::with_vars(&["x", "y", "z"]).unwrap()
}

/// A homogeneous form of degree `d` from monomial picks and coefficients.
fn form(ring: &Ring, d: u32, picks: &[(usize, u32)]) -> Polynomial {
    let monos = Monomial::all_of_degree(ring.nvars(), d);
    let terms = picks
        .iter()
        .map(|&(k, c)| (c, monos[k % monos.len()]))
        .collect();
    Polynomial::from_terms(ring.field(), terms)
}

fn ideal_strategy() -> impl Strategy<Value = Vec<(u32, Vec<(usize, u32)>)>> {
    prop::collection::vec(
        (
            2u32..=3,
            prop::collection::vec((0usize..10, 1u32..32003), 1..=3),
        ),
        1..=3,
    )
}

fn build(shape: &[(u32, Vec<(usize, u32)>)]) -> (Ring, Vec<Polynomial>) {
    let r = ring();
    let gens = shape
        .iter()
        .map(|(d, picks)| form(&r, *d, picks))
        .filter(|f| !f.is_zero())
        .collect();
    (r, gens)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn print_then_parse(shape in ideal_strategy()) {
        let (r, gens) = build(&shape);
        for f in gens {
            let text = r.format(&f);
            prop_assert_eq!(parse_polynomial(&text, &r).unwrap(), f);
        }
    }

    #[test]
    fn betti_numbers_match_dense_tor(shape in ideal_strategy()) {
        let (r, gens) = build(&shape);
        let m = PresentedModule::quotient_ring(&r, &gens).unwrap();
        let res = minimal_free_resolution(&m);
        prop_assert!(res.is_complex());
        prop_assert!(res.is_minimal());
        let betti = res.betti();
        let reg = betti.regularity().unwrap();
        let oracle = DenseModule::quotient(*r.field(), r.nvars(), &gens);
        let dense = oracle.tor_table(0, reg + r.nvars() as i32 + 1).unwrap();
        let fast: Vec<(usize, i32, usize)> = betti.entries().collect();
        let dense: Vec<(usize, i32, usize)> = dense.into_iter().map(|((i, j), b)| (i, j, b)).collect();
        prop_assert_eq!(fast, dense);
        for n in 0..=reg + 2 {
            prop_assert_eq!(m.dim_in_degree(n), oracle.dim(n).unwrap());
        }
    }

    #[test]
    fn hilbert_numerator_is_euler_characteristic(shape in ideal_strategy()) {
        let (r, gens) = build(&shape);
        let m = PresentedModule::quotient_ring(&r, &gens).unwrap();
        let betti = minimal_free_resolution(&m).betti();
        prop_assert_eq!(&m.hilbert().numerator, &betti.euler_polynomial());
    }

    #[test]
    fn regularity_from_betti_and_local_cohomology_agree(shape in ideal_strategy()) {
        let (r, gens) = build(&shape);
        let m = PresentedModule::quotient_ring(&r, &gens).unwrap();
        prop_assume!(!m.is_zero());
        let full = regularity(&m, RegularityMode::BettiFull).unwrap();
        let coh = regularity(&m, RegularityMode::Cohomological).unwrap();
        let tail = regularity(&m, RegularityMode::BettiTail(m.krull_dim() as usize)).unwrap();
        prop_assert_eq!(full, coh);
        prop_assert_eq!(full, tail);
    }
}
