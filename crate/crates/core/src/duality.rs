//! Modules of deficiency, local cohomology through graded local duality,
//! generic linear systems and Green modules.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::Vector;
use crate::koszul::{koszul_cohomology, koszul_homology};
use crate::module::{homology_at, FiniteHilbertFunction, GradedMatrix, PresentedModule};
use crate::poly::{Monomial, Polynomial};
use crate::resolution::{minimal_free_resolution, FreeResolution};

/// Resamples allowed after a failed certification.
pub const RETRY_BUDGET: usize = 8;

/// `K^i_M = Ext^{r-i}(M, R(-r))`.
#[derive(Clone, Debug)]
pub struct DeficiencyModule {
    pub index: usize,
    pub module: PresentedModule,
}

impl DeficiencyModule {
    /// `e(H^i_m(M)) = -a(K^i_M)`; `None` when `K^i_M = 0`.
    pub fn end_of_local_cohomology(&self) -> Option<i32> {
        self.module.hilbert().least_degree().map(|a| -a)
    }

    /// `dim H^i_m(M)_n = dim (K^i_M)_{-n}`.
    pub fn local_cohomology_dim(&self, n: i32) -> usize {
        self.module.dim_in_degree(-n)
    }
}

/// `Ext^k(M, R(-r))` from the dual of a free resolution of `M`.
pub fn ext_from_resolution(res: &FreeResolution, k: usize) -> Result<PresentedModule> {
    let ring = res.ring();
    let r = ring.nvars() as i32;
    let field = *ring.field();
    let twists = res.twists();
    if k >= twists.len() {
        return Ok(PresentedModule::zero(ring));
    }
    let dual_twists = |j: usize| -> Vec<i32> {
        twists
            .get(j)
            .map_or_else(Vec::new, |t| t.iter().map(|a| r - a).collect())
    };
    let middle = PresentedModule::free(ring, dual_twists(k));
    let incoming = if k == 0 {
        GradedMatrix::zero(Vec::new(), middle.twists().to_vec())
    } else {
        res.differential(k).dual(r, &field)
    };
    let (outgoing, target) = if k < res.differentials().len() {
        let d = res.differential(k + 1).dual(r, &field);
        let t = PresentedModule::free(ring, dual_twists(k + 1));
        (d, t)
    } else {
        (
            GradedMatrix::zero(middle.twists().to_vec(), Vec::new()),
            PresentedModule::zero(ring),
        )
    };
    homology_at(&incoming, &middle, &outgoing, &target)
}

/// `K^i_M` for `0 ≤ i ≤ dim M`, with the dimension bounds asserted.
pub fn deficiency_modules(m: &PresentedModule) -> Result<Vec<DeficiencyModule>> {
    if m.is_zero() {
        return Err(Error::ZeroModule("deficiency modules"));
    }
    let r = m.ring().nvars();
    let d = m.krull_dim() as usize;
    let res = minimal_free_resolution(m);
    let out: Vec<DeficiencyModule> = (0..=d)
        .into_par_iter()
        .map(|i| {
            ext_from_resolution(&res, r - i).map(|module| DeficiencyModule { index: i, module })
        })
        .collect::<Result<_>>()?;
    for k in &out {
        let dim = k.module.krull_dim();
        let ok = if k.index < d {
            dim <= k.index as i32
        } else {
            dim == d as i32
        };
        if !ok {
            return Err(Error::Invariant(format!(
                "K^{} has dimension {dim}, module dimension {d}",
                k.index
            )));
        }
    }
    Ok(out)
}

/// The canonical module `K_M = K^d_M`.
pub fn canonical_module(m: &PresentedModule) -> Result<PresentedModule> {
    Ok(deficiency_modules(m)?.pop().expect("d + 1 entries").module)
}

/// `n -> dim H^i_m(M)_n` on `lo..=hi`, zero entries omitted.
pub fn local_cohomology_hf(
    m: &PresentedModule,
    i: i64,
    lo: i32,
    hi: i32,
) -> Result<BTreeMap<i32, usize>> {
    if i < 0 || i > m.krull_dim() as i64 {
        return Ok(BTreeMap::new());
    }
    let k = &deficiency_modules(m)?[i as usize];
    Ok((lo..=hi)
        .map(|n| (n, k.local_cohomology_dim(n)))
        .filter(|&(_, d)| d > 0)
        .collect())
}

/// How far a linear system has been certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    None,
    Generic,
    Strong,
}

/// Linear forms `l_1, …, l_s` with their coefficient matrix.
#[derive(Clone, Debug, Serialize)]
pub struct LinearSystem {
    #[serde(skip)]
    pub forms: Vec<Polynomial>,
    pub coefficients: Vec<Vec<u32>>,
    pub seed: Option<u64>,
    /// Number of draws used, including the accepted one.
    pub attempts: usize,
    pub certificate: Certificate,
}

fn linear_form(field: &PrimeField, coeffs: &[u32]) -> Polynomial {
    let terms = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(v, &c)| (c, Monomial::var(v)))
        .collect();
    Polynomial::from_terms(field, terms)
}

impl LinearSystem {
    /// Explicit linear forms, uncertified.
    pub fn from_forms(forms: Vec<Polynomial>, nvars: usize) -> Result<Self> {
        let mut coefficients = Vec::with_capacity(forms.len());
        for f in &forms {
            if f.is_zero() || f.degree() != Some(1) || !f.is_homogeneous() {
                return Err(Error::Structure(
                    "linear system entries must be linear forms".into(),
                ));
            }
            let mut row = vec![0; nvars];
            for (c, m) in f.terms() {
                let v = (0..nvars)
                    .find(|&v| m.exponent(v) == 1)
                    .expect("linear monomial");
                row[v] = *c;
            }
            coefficients.push(row);
        }
        Ok(LinearSystem {
            forms,
            coefficients,
            seed: None,
            attempts: 0,
            certificate: Certificate::None,
        })
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// Certifies the system for `m` (and every `K^i_m` when `strong`).
    pub fn certify(&mut self, m: &PresentedModule, strong: bool) -> Result<()> {
        match failing_prefix(&self.forms, m, strong)? {
            Some((prefix, module)) => Err(Error::Sampling {
                attempts: self.attempts,
                prefix,
                module,
            }),
            None => {
                self.certificate = if strong {
                    Certificate::Strong
                } else {
                    Certificate::Generic
                };
                Ok(())
            }
        }
    }
}

/// `N / (f) N`.
pub fn quotient_by_forms(n: &PresentedModule, forms: &[Polynomial]) -> Result<PresentedModule> {
    let mut rels: Vec<Vector> = n.relations().columns().to_vec();
    for f in forms {
        for g in 0..n.num_generators() {
            rels.push(Vector::from_polynomial(f, g));
        }
    }
    PresentedModule::new(n.ring(), n.twists().to_vec(), rels)
}

/// First `k` (1-based) with `((l_1..l_{k-1})N : l_k)/(l_1..l_{k-1})N` of
/// positive dimension, if any.
pub fn generic_failure(forms: &[Polynomial], n: &PresentedModule) -> Result<Option<usize>> {
    let mut q = n.clone();
    for (k, l) in forms.iter().enumerate() {
        if q.has_finite_length() {
            return Ok(None);
        }
        let colon = koszul_homology(std::slice::from_ref(l), &q, 1)?;
        if !colon.has_finite_length() {
            return Ok(Some(k + 1));
        }
        if k + 1 < forms.len() {
            q = quotient_by_forms(&q, std::slice::from_ref(l))?;
        }
    }
    Ok(None)
}

/// `(prefix, module name)` of the first certification failure.
fn failing_prefix(
    forms: &[Polynomial],
    m: &PresentedModule,
    strong: bool,
) -> Result<Option<(usize, String)>> {
    if let Some(k) = generic_failure(forms, m)? {
        return Ok(Some((k, "M".into())));
    }
    if strong && !m.is_zero() {
        for def in deficiency_modules(m)? {
            if let Some(k) = generic_failure(forms, &def.module)? {
                return Ok(Some((k, format!("K^{}", def.index))));
            }
        }
    }
    Ok(None)
}

/// Random linear forms certified generic (or strongly generic) for `m`,
/// resampling up to [`RETRY_BUDGET`] times.
pub fn sample_generic_forms(
    m: &PresentedModule,
    s: usize,
    strong: bool,
    seed: u64,
) -> Result<LinearSystem> {
    let deficiency = if strong && !m.is_zero() {
        deficiency_modules(m)?
    } else {
        Vec::new()
    };
    sample_with_deficiency(m, &deficiency, s, strong, seed)
}

/// As [`sample_generic_forms`], with the deficiency modules of `m` supplied.
pub fn sample_with_deficiency(
    m: &PresentedModule,
    deficiency: &[DeficiencyModule],
    s: usize,
    strong: bool,
    seed: u64,
) -> Result<LinearSystem> {
    let r = m.ring().nvars();
    let p = m.field().characteristic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let deficiency = if strong { deficiency } else { &[] };
    let mut last = (0, String::new());
    for attempt in 1..=RETRY_BUDGET + 1 {
        let coefficients: Vec<Vec<u32>> = (0..s)
            .map(|_| loop {
                let row: Vec<u32> = (0..r).map(|_| rng.gen_range(0..p)).collect();
                if row.iter().any(|&c| c != 0) {
                    break row;
                }
            })
            .collect();
        let forms: Vec<Polynomial> = coefficients
            .iter()
            .map(|c| linear_form(m.field(), c))
            .collect();
        let mut failure = generic_failure(&forms, m)?.map(|k| (k, "M".to_string()));
        if failure.is_none() {
            for def in deficiency {
                if let Some(k) = generic_failure(&forms, &def.module)? {
                    failure = Some((k, format!("K^{}", def.index)));
                    break;
                }
            }
        }
        match failure {
            None => {
                return Ok(LinearSystem {
                    forms,
                    coefficients,
                    seed: Some(seed),
                    attempts: attempt,
                    certificate: if strong {
                        Certificate::Strong
                    } else {
                        Certificate::Generic
                    },
                })
            }
            Some(f) => last = f,
        }
    }
    Err(Error::Sampling {
        attempts: RETRY_BUDGET + 1,
        prefix: last.0,
        module: last.1,
    })
}

/// `H_i(l; H^j_m(M))`, held through its dual representative
/// `N = H^i(l; K^j_M)`.
#[derive(Clone, Debug)]
pub struct GreenModule {
    pub i: usize,
    pub j: usize,
    pub dual_representative: PresentedModule,
    /// Whether finite length is guaranteed (`i < s` or `s ≥ j`).
    pub finiteness_expected: bool,
}

impl GreenModule {
    /// Hilbert function of the Green module, when of finite length.
    pub fn hilbert(&self) -> Option<FiniteHilbertFunction> {
        self.dual_representative.finite_hilbert().map(|h| h.dual())
    }

    pub fn is_finite(&self) -> bool {
        self.dual_representative.has_finite_length()
    }

    pub fn length(&self) -> Option<usize> {
        self.hilbert().map(|h| h.length())
    }

    /// `μ` of the Green module, equal to the socle dimension of `N`.
    pub fn mu(&self) -> usize {
        self.dual_representative.socle_dimension()
    }

    /// Socle dimension of the Green module, equal to `μ(N)`.
    pub fn socle_dimension(&self) -> usize {
        self.dual_representative.mu()
    }

    /// Finiteness was promised but fails.
    pub fn contradicts_finiteness(&self) -> bool {
        self.finiteness_expected && !self.is_finite()
    }
}

fn green_from_deficiency(
    deficiency: &[DeficiencyModule],
    system: &LinearSystem,
    i: usize,
    j: usize,
) -> Result<GreenModule> {
    let ring = deficiency[0].module.ring();
    let dual_representative = match deficiency.get(j) {
        Some(k) => koszul_cohomology(&system.forms, &k.module, i as i64)?,
        None => PresentedModule::zero(ring),
    };
    Ok(GreenModule {
        i,
        j,
        dual_representative,
        finiteness_expected: i < system.len() || system.len() >= j,
    })
}

fn require_strong(system: &LinearSystem) -> Result<()> {
    if system.certificate != Certificate::Strong {
        return Err(Error::Contract(
            "Green modules need a strongly generic system".into(),
        ));
    }
    Ok(())
}

/// The Green module `H_i(l; H^j_m(M))`.
pub fn green_module(
    m: &PresentedModule,
    system: &LinearSystem,
    i: usize,
    j: usize,
) -> Result<GreenModule> {
    require_strong(system)?;
    let def = deficiency_modules(m)?;
    green_from_deficiency(&def, system, i, j)
}

/// All Green modules for `0 ≤ i ≤ s`, `0 ≤ j ≤ dim M`.
#[derive(Clone, Debug)]
pub struct GreenTable {
    pub system: LinearSystem,
    pub entries: BTreeMap<(usize, usize), GreenModule>,
}

#[derive(Serialize)]
struct GreenEntryJson {
    i: usize,
    j: usize,
    hf: Option<FiniteHilbertFunction>,
}

#[derive(Serialize)]
struct GreenTableJson<'a> {
    seed: Option<u64>,
    forms: &'a [Vec<u32>],
    entries: Vec<GreenEntryJson>,
}

impl GreenTable {
    pub fn get(&self, i: usize, j: usize) -> Option<&GreenModule> {
        self.entries.get(&(i, j))
    }

    /// Entries whose promised finiteness fails.
    pub fn finiteness_violations(&self) -> Vec<(usize, usize)> {
        self.entries
            .iter()
            .filter(|(_, g)| g.contradicts_finiteness())
            .map(|(&k, _)| k)
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries = self
            .entries
            .values()
            .map(|g| GreenEntryJson {
                i: g.i,
                j: g.j,
                hf: g.hilbert(),
            })
            .collect();
        serde_json::to_value(GreenTableJson {
            seed: self.system.seed,
            forms: &self.system.coefficients,
            entries,
        })
        .expect("plain data")
    }
}

pub fn green_table(m: &PresentedModule, system: &LinearSystem) -> Result<GreenTable> {
    require_strong(system)?;
    let def = deficiency_modules(m)?;
    green_table_from(&def, system)
}

/// Green table from precomputed deficiency modules.
pub fn green_table_from(def: &[DeficiencyModule], system: &LinearSystem) -> Result<GreenTable> {
    let s = system.len();
    let cells: Vec<(usize, usize)> = (0..=s)
        .flat_map(|i| (0..def.len()).map(move |j| (i, j)))
        .collect();
    let modules: Vec<GreenModule> = cells
        .par_iter()
        .map(|&(i, j)| green_from_deficiency(def, system, i, j))
        .collect::<Result<_>>()?;
    Ok(GreenTable {
        system: system.clone(),
        entries: cells.into_iter().zip(modules).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Ring};

    fn quotient(ring: &Ring, gens: &[&str]) -> PresentedModule {
        let p: Vec<Polynomial> = gens
            .iter()
            .map(|g| parse_polynomial(g, ring).unwrap())
            .collect();
        PresentedModule::quotient_ring(ring, &p).unwrap()
    }

    fn quartic() -> PresentedModule {
        let ring = Ring::with_vars(&["x", "y", "z", "w"]).unwrap();
        quotient(
            &ring,
            &["x*w - y*z", "y^3 - x^2*z", "z^3 - y*w^2", "x*z^2 - y^2*w"],
        )
    }

    #[test]
    fn free_module_has_only_top_deficiency() {
        let ring = Ring::with_vars(&["x", "y", "z"]).unwrap();
        let def = deficiency_modules(&PresentedModule::free(&ring, vec![0])).unwrap();
        assert_eq!(def.len(), 4);
        for k in &def[..3] {
            assert!(k.module.is_zero());
        }
        assert_eq!(def[3].module.twists(), &[3]);
        assert!(def[3].module.relations().columns().is_empty());
    }

    #[test]
    fn residue_field_cohomology() {
        let ring = Ring::with_vars(&["x", "y", "z"]).unwrap();
        let k = PresentedModule::residue_field(&ring);
        let hf = local_cohomology_hf(&k, 0, -5, 5).unwrap();
        assert_eq!(hf, BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn twisted_cubic_is_cohen_macaulay() {
        let ring = Ring::with_vars(&["x", "y", "z", "w"]).unwrap();
        let m = quotient(&ring, &["x*z - y^2", "y*w - z^2", "x*w - y*z"]);
        let def = deficiency_modules(&m).unwrap();
        assert!(def[0].module.is_zero() && def[1].module.is_zero());
        let canonical = &def[2];
        assert_eq!(canonical.module.krull_dim(), 2);
        assert_eq!(canonical.end_of_local_cohomology(), Some(-1));
    }

    #[test]
    fn rational_quartic_first_cohomology() {
        let m = quartic();
        let hf = local_cohomology_hf(&m, 1, -10, 10).unwrap();
        assert_eq!(hf, BTreeMap::from([(1, 1)]));
        let def = deficiency_modules(&m).unwrap();
        assert_eq!(def[2].module.krull_dim(), 2);
    }

    #[test]
    fn sampling_is_deterministic_and_certified() {
        let ring = Ring::with_vars(&["x", "y", "z", "w"]).unwrap();
        let m = quotient(&ring, &["x*z - y^2", "y*w - z^2", "x*w - y*z"]);
        let a = sample_generic_forms(&m, 2, true, 7).unwrap();
        let b = sample_generic_forms(&m, 2, true, 7).unwrap();
        assert_eq!(a.coefficients, b.coefficients);
        assert_eq!(a.certificate, Certificate::Strong);
        let c = sample_generic_forms(&m, 2, true, 8).unwrap();
        assert_ne!(a.coefficients, c.coefficients);
    }

    #[test]
    fn variables_certify_on_polynomial_ring() {
        let ring = Ring::with_vars(&["x", "y"]).unwrap();
        let r = PresentedModule::free(&ring, vec![0]);
        let mut sys = LinearSystem::from_forms(vec![ring.var(0)], 2).unwrap();
        sys.certify(&r, false).unwrap();
        assert_eq!(sys.certificate, Certificate::Generic);
        // x twice is not generic for K[x,y]: x kills nothing, but then
        // (xM : x)/xM = M/xM has dimension one
        let mut bad = LinearSystem::from_forms(vec![ring.var(0), ring.var(0)], 2).unwrap();
        assert!(matches!(
            bad.certify(&r, false),
            Err(Error::Sampling { prefix: 2, .. })
        ));
    }

    #[test]
    fn green_module_of_quartic() {
        let m = quartic();
        let sys = sample_generic_forms(&m, 2, true, 0).unwrap();
        let g = green_module(&m, &sys, 2, 1).unwrap();
        assert_eq!(g.hilbert().unwrap(), FiniteHilbertFunction::new([(3, 1)]));
        let table = green_table(&m, &sys).unwrap();
        assert!(table.finiteness_violations().is_empty());
        let json = table.to_json();
        assert_eq!(json["seed"], 0);
        assert_eq!(json["forms"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn green_needs_strong_system() {
        let m = quartic();
        let sys = sample_generic_forms(&m, 2, false, 0).unwrap();
        assert!(matches!(
            green_module(&m, &sys, 0, 1),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn green_of_residue_field() {
        let ring = Ring::with_vars(&["x", "y", "z"]).unwrap();
        let k = PresentedModule::residue_field(&ring);
        let sys = sample_generic_forms(&k, 2, true, 3).unwrap();
        for i in 0..=2 {
            let g = green_module(&k, &sys, i, 0).unwrap();
            let binom = [1, 2, 1][i];
            assert_eq!(
                g.hilbert().unwrap(),
                FiniteHilbertFunction::new([(i as i32, binom)])
            );
        }
    }
}
