//! Homogeneous Buchberger algorithm for submodules of twisted free modules.
//!
//! Generators are consumed degree by degree (normal strategy). Within a
//! degree all S-pairs are completed before the input generators of that
//! degree are reduced, so an input generator that survives reduction is a
//! minimal generator of the submodule. This gives minimal generating sets as
//! a by-product of the basis computation.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::poly::Monomial;

use super::vector::{merge_scaled, Term, Vector};

/// A Gröbner basis of a submodule of `⊕ R(-twists[i])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GBasis {
    twists: Vec<i32>,
    elements: Vec<Vector>,
    reduced: bool,
}

/// Result of a basis computation that also tracked which inputs were needed.
#[derive(Clone, Debug)]
pub struct GbRun {
    pub basis: GBasis,
    /// Indices of input generators forming a minimal generating set.
    pub minimal: Vec<usize>,
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    deg: i32,
}

struct Engine<'a> {
    field: &'a PrimeField,
    twists: &'a [i32],
    rank_one: bool,
    basis: Vec<Vector>,
    by_comp: Vec<Vec<usize>>,
    pairs: Vec<Pair>,
}

impl<'a> Engine<'a> {
    fn new(field: &'a PrimeField, twists: &'a [i32]) -> Self {
        Engine {
            field,
            twists,
            rank_one: twists.len() == 1,
            basis: Vec::new(),
            by_comp: vec![Vec::new(); twists.len()],
            pairs: Vec::new(),
        }
    }

    fn lead(&self, k: usize) -> &Term {
        self.basis[k].lead().expect("basis elements are nonzero")
    }

    fn divisor(&self, t: &Term) -> Option<usize> {
        self.by_comp[t.comp as usize]
            .iter()
            .copied()
            .find(|&k| self.lead(k).mono.divides(&t.mono))
    }

    /// Reduces until the leading term is not divisible by any leading term.
    fn reduce_top(&self, v: Vector) -> Vector {
        let mut terms = v.into_terms();
        while let Some(t) = terms.first().copied() {
            let Some(k) = self.divisor(&t) else { break };
            let g = &self.basis[k];
            let q = t.mono.div(&self.lead(k).mono);
            terms = merge_scaled(
                &terms[1..],
                self.field.neg(t.coeff),
                &q,
                &g.terms()[1..],
                self.field,
            );
        }
        Vector::from_sorted(terms)
    }

    fn s_vector(&self, p: &Pair) -> Vector {
        let (gi, gj) = (&self.basis[p.i], &self.basis[p.j]);
        let qi = p.lcm.div(&self.lead(p.i).mono);
        let qj = p.lcm.div(&self.lead(p.j).mono);
        // basis elements are monic, so the leading terms cancel exactly
        let a = Vector::zero().add_scaled(1, &qi, gi, self.field);
        a.add_scaled(self.field.neg(1), &qj, gj, self.field)
    }

    /// Inserts a nonzero, top-reduced vector and updates the pair set with
    /// the Gebauer–Möller criteria.
    fn insert(&mut self, v: Vector) {
        let v = v.monic(self.field);
        let k = self.basis.len();
        let lead = *v.lead().unwrap();
        let comp = lead.comp as usize;
        self.basis.push(v);

        let mut fresh: Vec<(Pair, bool)> = self.by_comp[comp]
            .iter()
            .map(|&i| {
                let li = self.lead(i).mono;
                let lcm = li.lcm(&lead.mono);
                let pair = Pair {
                    i,
                    j: k,
                    lcm,
                    deg: lcm.degree() as i32 + self.twists[comp],
                };
                (pair, self.rank_one && li.is_coprime(&lead.mono))
            })
            .collect();

        // old pairs whose lcm is a multiple of the new leading term
        let basis = &self.basis;
        let lead_of = |k: usize| basis[k].lead().unwrap();
        self.pairs.retain(|p| {
            if lead_of(p.i).comp as usize != comp || !lead.mono.divides(&p.lcm) {
                return true;
            }
            let li = lead_of(p.i).mono.lcm(&lead.mono);
            let lj = lead_of(p.j).mono.lcm(&lead.mono);
            li == p.lcm || lj == p.lcm
        });

        // among new pairs drop those whose lcm is a proper multiple of another
        let lcms: Vec<Monomial> = fresh.iter().map(|(p, _)| p.lcm).collect();
        fresh.retain(|(p, _)| !lcms.iter().any(|l| *l != p.lcm && l.divides(&p.lcm)));
        // keep one pair per lcm; discard the class if it holds a coprime pair
        let mut kept: Vec<Pair> = Vec::new();
        let mut seen: Vec<(Monomial, bool)> = Vec::new();
        for (p, coprime) in &fresh {
            if let Some(entry) = seen.iter_mut().find(|(l, _)| *l == p.lcm) {
                entry.1 |= *coprime;
            } else {
                seen.push((p.lcm, *coprime));
                kept.push(*p);
            }
        }
        for p in kept {
            let coprime = seen.iter().any(|(l, c)| *l == p.lcm && *c);
            if !coprime {
                self.pairs.push(p);
            }
        }
        self.by_comp[comp].push(k);
    }

    fn next_pair_degree(&self) -> Option<i32> {
        self.pairs.iter().map(|p| p.deg).min()
    }

    fn take_pairs_of_degree(&mut self, d: i32) -> Vec<Pair> {
        let mut taken = Vec::new();
        self.pairs.retain(|p| {
            if p.deg == d {
                taken.push(*p);
                false
            } else {
                true
            }
        });
        taken.sort_by(|a, b| a.lcm.cmp(&b.lcm).then(a.j.cmp(&b.j)).then(a.i.cmp(&b.i)));
        taken
    }

    /// Fully reduces every element against the others.
    fn finish(self) -> GBasis {
        let Engine {
            field,
            twists,
            basis,
            ..
        } = self;
        let mut reduced: Vec<Vector> = Vec::with_capacity(basis.len());
        for (k, g) in basis.iter().enumerate() {
            let lead = *g.lead().unwrap();
            let others: Vec<&Vector> = basis
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, h)| h)
                .collect();
            let tail = Vector::from_sorted(g.terms()[1..].to_vec());
            let tail = full_reduce(tail, &others, field);
            let mut terms = vec![lead];
            terms.extend_from_slice(tail.terms());
            reduced.push(Vector::from_sorted(terms));
        }
        GBasis {
            twists: twists.to_vec(),
            elements: reduced,
            reduced: true,
        }
    }
}

/// Reduces every term of `v` by the leading terms of `basis`.
fn full_reduce(v: Vector, basis: &[&Vector], field: &PrimeField) -> Vector {
    let mut rem = v.into_terms();
    let mut out: Vec<Term> = Vec::new();
    let mut at = 0;
    while at < rem.len() {
        let t = rem[at];
        let hit = basis.iter().find(|g| {
            let l = g.lead().unwrap();
            l.comp == t.comp && l.mono.divides(&t.mono)
        });
        match hit {
            Some(g) => {
                let l = g.lead().unwrap();
                let q = t.mono.div(&l.mono);
                let c = field.neg(field.div(t.coeff, l.coeff));
                rem = merge_scaled(&rem[at + 1..], c, &q, &g.terms()[1..], field);
                at = 0;
            }
            None => {
                out.push(t);
                at += 1;
            }
        }
    }
    Vector::from_sorted(out)
}

fn check_input(twists: &[i32], gens: &[Vector]) -> Result<()> {
    for (k, g) in gens.iter().enumerate() {
        if g.max_comp().is_some_and(|c| c >= twists.len()) {
            return Err(Error::Structure(format!(
                "generator {k} has a component outside the ambient module of rank {}",
                twists.len()
            )));
        }
        if !g.is_homogeneous(twists) {
            return Err(Error::Structure(format!(
                "generator {k} is not homogeneous"
            )));
        }
    }
    Ok(())
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
pub fn buchberger(field: &PrimeField, twists: &[i32], gens: &[Vector]) -> Result<GBasis> {
    check_input(twists, gens)?;
    Ok(groebner_run(field, twists, gens, None).basis)
}

/// Gröbner basis together with the indices of a minimal generating subset of
/// `gens`. Inputs must be homogeneous; with `degree_limit` the computation
/// stops after that degree (the basis is then only valid up to it).
pub fn groebner_run(
    field: &PrimeField,
    twists: &[i32],
    gens: &[Vector],
    degree_limit: Option<i32>,
) -> GbRun {
    debug_assert!(check_input(twists, gens).is_ok());
    let mut order: Vec<(i32, usize)> = gens
        .iter()
        .enumerate()
        .filter_map(|(k, g)| g.degree(twists).map(|d| (d, k)))
        .collect();
    order.sort();

    let mut engine = Engine::new(field, twists);
    let mut minimal = Vec::new();
    let mut next = 0;
    loop {
        let dp = engine.next_pair_degree();
        let dg = order.get(next).map(|x| x.0);
        let d = match (dp, dg) {
            (None, None) => break,
            (Some(a), None) | (None, Some(a)) => a,
            (Some(a), Some(b)) => a.min(b),
        };
        if degree_limit.is_some_and(|lim| d > lim) {
            break;
        }
        for p in engine.take_pairs_of_degree(d) {
            let s = engine.s_vector(&p);
            let r = engine.reduce_top(s);
            if !r.is_zero() {
                engine.insert(r);
            }
        }
        while next < order.len() && order[next].0 == d {
            let k = order[next].1;
            next += 1;
            let r = engine.reduce_top(gens[k].clone());
            if !r.is_zero() {
                minimal.push(k);
                engine.insert(r);
            }
        }
    }
    GbRun {
        basis: engine.finish(),
        minimal,
    }
}

impl GBasis {
    /// The basis of the zero submodule.
    pub fn empty(twists: Vec<i32>) -> GBasis {
        GBasis {
            twists,
            elements: Vec::new(),
            reduced: true,
        }
    }

    /// Assembles a basis from parts already known to form a reduced basis.
    pub(crate) fn from_parts(twists: Vec<i32>, elements: Vec<Vector>) -> GBasis {
        GBasis {
            twists,
            elements,
            reduced: true,
        }
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    pub fn elements(&self) -> &[Vector] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Leading monomials of the basis elements living in component `comp`.
    pub fn leading_monomials(&self, comp: usize) -> Vec<Monomial> {
        self.elements
            .iter()
            .filter_map(|g| g.lead())
            .filter(|t| t.comp as usize == comp)
            .map(|t| t.mono)
            .collect()
    }

    /// Whether `mono * e_comp` is a standard (non-leading) term.
    pub fn is_standard(&self, comp: usize, mono: &Monomial) -> bool {
        !self.elements.iter().any(|g| {
            let l = g.lead().unwrap();
            l.comp as usize == comp && l.mono.divides(mono)
        })
    }

    pub fn normal_form(&self, v: &Vector, field: &PrimeField) -> Vector {
        let refs: Vec<&Vector> = self.elements.iter().collect();
        full_reduce(v.clone(), &refs, field)
    }

    pub fn contains(&self, v: &Vector, field: &PrimeField) -> bool {
        self.normal_form(v, field).is_zero()
    }

    /// Checks the Buchberger criterion: every S-vector reduces to zero.
    pub fn satisfies_buchberger_criterion(&self, field: &PrimeField) -> bool {
        let n = self.elements.len();
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (
                    self.elements[i].lead().unwrap(),
                    self.elements[j].lead().unwrap(),
                );
                if a.comp != b.comp {
                    continue;
                }
                let lcm = a.mono.lcm(&b.mono);
                let s = Vector::zero()
                    .add_scaled(
                        field.inv(a.coeff),
                        &lcm.div(&a.mono),
                        &self.elements[i],
                        field,
                    )
                    .add_scaled(
                        field.neg(field.inv(b.coeff)),
                        &lcm.div(&b.mono),
                        &self.elements[j],
                        field,
                    );
                if !self.contains(&s, field) {
                    return false;
                }
            }
        }
        true
    }

    /// Minimum twist-shifted degree of an element; `None` for the zero submodule.
    pub fn initial_degree(&self) -> Option<i32> {
        self.elements
            .iter()
            .filter_map(|g| g.degree(&self.twists))
            .min()
    }
}

/// Indices of a minimal generating subset of `gens`.
pub fn minimal_generators(field: &PrimeField, twists: &[i32], gens: &[Vector]) -> Vec<usize> {
    groebner_run(field, twists, gens, None).minimal
}

/// Public normal form entry point.
pub fn normal_form(v: &Vector, basis: &GBasis, field: &PrimeField) -> Vector {
    basis.normal_form(v, field)
}
