use std::collections::BTreeMap;

use serde::Serialize;

use super::matrix::GradedMatrix;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::{groebner_run, hilbert_data, GBasis, HilbertData, Term, Vector};
use crate::linalg;
use crate::poly::{Monomial, Polynomial, Ring};

/// A finitely generated graded module `F / N` with `F = ⊕ R(-twists[i])`
/// and `N` spanned by the columns of `relations`.
///
/// Presentations are kept minimal: no relation has a unit entry and the
/// relations are a minimal generating set of `N`.
#[derive(Clone, Debug)]
pub struct PresentedModule {
    ring: Ring,
    relations: GradedMatrix,
    basis: GBasis,
    hilbert: HilbertData,
}

/// Hilbert function of a finite length module.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FiniteHilbertFunction {
    dims: BTreeMap<i32, usize>,
}

impl FiniteHilbertFunction {
    pub fn new(entries: impl IntoIterator<Item = (i32, usize)>) -> Self {
        let dims = entries.into_iter().filter(|&(_, d)| d > 0).collect();
        FiniteHilbertFunction { dims }
    }

    pub fn dims(&self) -> &BTreeMap<i32, usize> {
        &self.dims
    }

    pub fn get(&self, n: i32) -> usize {
        self.dims.get(&n).copied().unwrap_or(0)
    }

    pub fn length(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// Lowest degree of the support.
    pub fn initial_degree(&self) -> Option<i32> {
        self.dims.keys().next().copied()
    }

    /// Highest degree of the support.
    pub fn end_degree(&self) -> Option<i32> {
        self.dims.keys().next_back().copied()
    }

    /// The graded `K`-dual: degree `n` goes to `-n`.
    pub fn dual(&self) -> FiniteHilbertFunction {
        FiniteHilbertFunction {
            dims: self.dims.iter().map(|(&n, &d)| (-n, d)).collect(),
        }
    }

    /// The function of `N(k)`.
    pub fn twist(&self, k: i32) -> FiniteHilbertFunction {
        FiniteHilbertFunction {
            dims: self.dims.iter().map(|(&n, &d)| (n - k, d)).collect(),
        }
    }
}

/// Graded dual of a finite Hilbert function.
pub fn dual_hilbert_function(n: &FiniteHilbertFunction) -> FiniteHilbertFunction {
    n.dual()
}

/// Summary invariants of a presented module.
#[derive(Clone, Debug, Serialize)]
pub struct ModuleInvariants {
    pub krull_dim: i32,
    pub multiplicity: i64,
    pub mu: usize,
    pub hilbert: HilbertData,
    /// Present exactly when the module has finite length.
    pub finite: Option<FiniteHilbertFunction>,
}

fn unit_position(twists: &[i32], relations: &[Vector]) -> Option<(usize, usize, u32)> {
    let mut best: Option<(usize, usize, u32, i32)> = None;
    for (j, c) in relations.iter().enumerate() {
        for t in c.terms() {
            if t.mono.degree() != 0 {
                continue;
            }
            let key = twists[t.comp as usize];
            if best.is_none_or(|b| key < b.3) {
                best = Some((j, t.comp as usize, t.coeff, key));
            }
        }
    }
    best.map(|(j, i, c, _)| (j, i, c))
}

/// Removes generators killed by unit entries. Returns the surviving
/// generator indices and rewritten relations in the new numbering.
fn prune(field: &PrimeField, twists: &[i32], mut rels: Vec<Vector>) -> (Vec<usize>, Vec<Vector>) {
    let mut alive: Vec<usize> = (0..twists.len()).collect();
    rels.retain(|c| !c.is_zero());
    while let Some((j, i, c)) = unit_position(twists, &rels) {
        let pivot = rels.swap_remove(j);
        let inv = field.inv(c);
        for col in rels.iter_mut() {
            let p = col.component(i, field);
            if p.is_zero() {
                continue;
            }
            let q = p.scale(field.neg(inv), field);
            *col = col.add(&pivot.mul_poly(&q, field), field);
        }
        rels.retain(|c| !c.is_zero());
        let pos = alive.iter().position(|&a| a == i).unwrap();
        alive.remove(pos);
    }
    let index: BTreeMap<usize, usize> = alive.iter().enumerate().map(|(n, &o)| (o, n)).collect();
    let rels = rels
        .iter()
        .map(|c| c.remap(|k| index.get(&k).copied()))
        .collect();
    (alive, rels)
}

impl PresentedModule {
    /// The cokernel of `relations`, re-presented minimally.
    pub fn new(ring: &Ring, twists: Vec<i32>, relations: Vec<Vector>) -> Result<Self> {
        let field = *ring.field();
        for (j, c) in relations.iter().enumerate() {
            if c.max_comp().is_some_and(|m| m >= twists.len()) {
                return Err(Error::Structure(format!(
                    "relation {j} leaves the free module"
                )));
            }
            if !c.is_homogeneous(&twists) {
                return Err(Error::Structure(format!("relation {j} is not homogeneous")));
            }
        }
        let (alive, rels) = prune(&field, &twists, relations);
        let twists: Vec<i32> = alive.iter().map(|&i| twists[i]).collect();
        let run = groebner_run(&field, &twists, &rels, None);
        let kept: Vec<Vector> = run.minimal.iter().map(|&k| rels[k].clone()).collect();
        let source = kept.iter().map(|c| c.degree(&twists).unwrap()).collect();
        let relations = GradedMatrix::from_parts_unchecked(source, twists, kept);
        Ok(Self::assemble(ring, relations, run.basis))
    }

    fn assemble(ring: &Ring, relations: GradedMatrix, basis: GBasis) -> Self {
        let hilbert = hilbert_data(&basis, ring.nvars());
        PresentedModule {
            ring: ring.clone(),
            relations,
            basis,
            hilbert,
        }
    }

    /// `⊕ R(-twists[i])`.
    pub fn free(ring: &Ring, twists: Vec<i32>) -> Self {
        let relations = GradedMatrix::zero(Vec::new(), twists.clone());
        Self::assemble(ring, relations, GBasis::empty(twists))
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::free(ring, Vec::new())
    }

    /// `R / I` for homogeneous generators of `I`.
    pub fn quotient_ring(ring: &Ring, ideal: &[Polynomial]) -> Result<Self> {
        let rels = ideal
            .iter()
            .map(|f| Vector::from_polynomial(f, 0))
            .collect();
        Self::new(ring, vec![0], rels)
    }

    /// `K = R / m`.
    pub fn residue_field(ring: &Ring) -> Self {
        Self::quotient_ring(ring, &ring.variables()).expect("variables are homogeneous")
    }

    /// The cokernel of a graded matrix.
    pub fn cokernel(ring: &Ring, phi: &GradedMatrix) -> Result<Self> {
        Self::new(ring, phi.target().to_vec(), phi.columns().to_vec())
    }

    /// `⊕_k M(-shifts[k])`, with generator blocks in the order of `shifts`.
    pub fn direct_sum_shifted(&self, shifts: &[i32]) -> Self {
        let g = self.num_generators();
        let mut twists = Vec::with_capacity(g * shifts.len());
        let mut source = Vec::new();
        let mut cols = Vec::new();
        let mut elements = Vec::new();
        for (k, &s) in shifts.iter().enumerate() {
            twists.extend(self.twists().iter().map(|t| t + s));
            source.extend(self.relations.source().iter().map(|t| t + s));
            cols.extend(
                self.relations
                    .columns()
                    .iter()
                    .map(|c| c.shift_components(k * g)),
            );
            elements.extend(
                self.basis
                    .elements()
                    .iter()
                    .map(|c| c.shift_components(k * g)),
            );
        }
        let relations = GradedMatrix::from_parts_unchecked(source, twists.clone(), cols);
        Self::assemble(&self.ring, relations, GBasis::from_parts(twists, elements))
    }

    /// `M(k)`: every degree moves down by `k`.
    pub fn twist(&self, k: i32) -> Self {
        self.direct_sum_shifted(&[-k])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> &PrimeField {
        self.ring.field()
    }

    /// Generator degrees.
    pub fn twists(&self) -> &[i32] {
        self.relations.target()
    }

    pub fn num_generators(&self) -> usize {
        self.twists().len()
    }

    pub fn relations(&self) -> &GradedMatrix {
        &self.relations
    }

    pub fn basis(&self) -> &GBasis {
        &self.basis
    }

    pub fn hilbert(&self) -> &HilbertData {
        &self.hilbert
    }

    /// Minimal number of generators.
    pub fn mu(&self) -> usize {
        self.num_generators()
    }

    pub fn is_zero(&self) -> bool {
        self.hilbert.is_zero_module()
    }

    pub fn krull_dim(&self) -> i32 {
        self.hilbert.krull_dim
    }

    pub fn has_finite_length(&self) -> bool {
        self.hilbert.krull_dim <= 0
    }

    pub fn dim_in_degree(&self, n: i32) -> usize {
        self.hilbert.value(n) as usize
    }

    /// Hilbert function when the module has finite length.
    pub fn finite_hilbert(&self) -> Option<FiniteHilbertFunction> {
        let values = self.hilbert.finite_values()?;
        Some(FiniteHilbertFunction::new(
            values.into_iter().map(|(n, d)| (n, d as usize)),
        ))
    }

    pub fn invariants(&self) -> ModuleInvariants {
        ModuleInvariants {
            krull_dim: self.hilbert.krull_dim,
            multiplicity: self.hilbert.multiplicity,
            mu: self.mu(),
            hilbert: self.hilbert.clone(),
            finite: self.finite_hilbert(),
        }
    }

    /// Standard monomials `(generator, monomial)` spanning `M_n`.
    pub fn standard_basis(&self, n: i32) -> Vec<(usize, Monomial)> {
        let mut out = Vec::new();
        for (i, &t) in self.twists().iter().enumerate() {
            let d = n - t;
            if d < 0 {
                continue;
            }
            for m in Monomial::all_of_degree(self.ring.nvars(), d as u32) {
                if self.basis.is_standard(i, &m) {
                    out.push((i, m));
                }
            }
        }
        out
    }

    /// Normal form of an element of the ambient free module.
    pub fn reduce(&self, v: &Vector) -> Vector {
        self.basis.normal_form(v, self.field())
    }

    /// Whether `v` maps to zero in `M`.
    pub fn is_zero_element(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Socle dimension `dim (0 :_M m)`.
    pub fn socle_dimension(&self) -> usize {
        if let Some(hf) = self.finite_hilbert() {
            return hf.dims().keys().map(|&n| self.socle_in_degree(n)).sum();
        }
        socle_module(self)
            .finite_hilbert()
            .map_or(0, |h| h.length())
    }

    /// Dimension of the socle in degree `n`, by dense linear algebra.
    pub fn socle_in_degree(&self, n: i32) -> usize {
        let field = *self.field();
        let src = self.standard_basis(n);
        if src.is_empty() {
            return 0;
        }
        let dst = self.standard_basis(n + 1);
        let index: BTreeMap<(usize, Monomial), usize> = dst
            .iter()
            .enumerate()
            .map(|(k, &(i, m))| ((i, m), k))
            .collect();
        let r = self.ring.nvars();
        let mut rows = Vec::with_capacity(src.len());
        for &(i, m) in &src {
            let mut row = vec![0u32; r * dst.len()];
            for v in 0..r {
                let t = Term {
                    coeff: 1,
                    mono: m.mul(&Monomial::var(v)),
                    comp: i as u32,
                };
                let nf = self.reduce(&Vector::from_terms(&field, vec![t]));
                for t in nf.terms() {
                    row[v * dst.len() + index[&(t.comp as usize, t.mono)]] = t.coeff;
                }
            }
            rows.push(row);
        }
        src.len() - linalg::rank(&field, rows)
    }
}

/// `(0 :_M m)` as a presented module.
fn socle_module(m: &PresentedModule) -> PresentedModule {
    let r = m.ring.nvars();
    let g = m.num_generators();
    let target = m.direct_sum_shifted(&vec![-1; r]);
    let field = *m.field();
    let cols: Vec<Vector> = (0..g)
        .map(|i| {
            let terms = (0..r)
                .map(|v| Term {
                    coeff: 1,
                    mono: Monomial::var(v),
                    comp: (v * g + i) as u32,
                })
                .collect();
            Vector::from_terms(&field, terms)
        })
        .collect();
    let out =
        GradedMatrix::from_parts_unchecked(m.twists().to_vec(), target.twists().to_vec(), cols);
    let incoming = GradedMatrix::zero(Vec::new(), m.twists().to_vec());
    super::homology_at(&incoming, m, &out, &target).expect("multiplication maps compose to zero")
}
