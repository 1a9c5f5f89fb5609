//! Hilbert series of `F/N` read off the leading-term module of `N`.

use serde::Serialize;

use super::buchberger::GBasis;
use crate::poly::{Monomial, MAX_VARS};

/// Integer Laurent polynomial `Σ coeffs[k] t^(offset + k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Default)]
pub struct LaurentPoly {
    pub offset: i32,
    pub coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn from_map(entries: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in entries {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn coeff(&self, e: i32) -> i64 {
        let k = e - self.offset;
        if k < 0 {
            0
        } else {
            self.coeffs.get(k as usize).copied().unwrap_or(0)
        }
    }

    pub fn add_term(&mut self, e: i32, c: i64) {
        if c == 0 {
            return;
        }
        if self.coeffs.is_empty() {
            self.offset = e;
            self.coeffs.push(c);
            return;
        }
        if e < self.offset {
            let pad = (self.offset - e) as usize;
            let mut v = vec![0; pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.offset = e;
        }
        let k = (e - self.offset) as usize;
        if k >= self.coeffs.len() {
            self.coeffs.resize(k + 1, 0);
        }
        self.coeffs[k] += c;
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.offset += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.offset = 0;
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn shift(&self, by: i32) -> LaurentPoly {
        LaurentPoly {
            offset: if self.coeffs.is_empty() {
                0
            } else {
                self.offset + by
            },
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(k, &c)| (self.offset + k as i32, c))
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Exact division by `1 - t`; `None` when `1` is not a root.
    pub fn div_one_minus_t(&self) -> Option<LaurentPoly> {
        if self.eval_at_one() != 0 {
            return None;
        }
        // q_k = a_0 + ... + a_k (partial sums), quotient has one fewer term
        let mut q = Vec::with_capacity(self.coeffs.len());
        let mut acc = 0;
        for &c in &self.coeffs[..self.coeffs.len().saturating_sub(1)] {
            acc += c;
            q.push(acc);
        }
        let mut out = LaurentPoly {
            offset: self.offset,
            coeffs: q,
        };
        out.trim();
        Some(out)
    }

    pub fn max_exponent(&self) -> Option<i32> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.offset + self.coeffs.len() as i32 - 1)
        }
    }
}

/// Hilbert series data of a graded module `F/N` over a ring with `nvars`
/// variables: series = `numerator / (1 - t)^nvars`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    pub numerator: LaurentPoly,
    pub nvars: usize,
    /// Numerator after cancelling every `(1 - t)` factor.
    pub reduced_numerator: LaurentPoly,
    /// Krull dimension; `-1` for the zero module.
    pub krull_dim: i32,
    pub multiplicity: i64,
    /// Least degree of a nonzero element of `N`; `None` when `N = 0`.
    pub initial_degree: Option<i32>,
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

impl HilbertData {
    pub fn from_numerator(
        numerator: LaurentPoly,
        nvars: usize,
        initial_degree: Option<i32>,
    ) -> Self {
        let mut reduced = numerator.clone();
        let mut dim = nvars as i32;
        if numerator.is_zero() {
            dim = -1;
        } else {
            while dim > 0 {
                match reduced.div_one_minus_t() {
                    Some(q) => {
                        reduced = q;
                        dim -= 1;
                    }
                    None => break,
                }
            }
        }
        let multiplicity = reduced.eval_at_one();
        HilbertData {
            numerator,
            nvars,
            reduced_numerator: reduced,
            krull_dim: dim,
            multiplicity,
            initial_degree,
        }
    }

    /// Hilbert function value `dim_K (F/N)_n`.
    pub fn value(&self, n: i32) -> i64 {
        let r = self.nvars as i64;
        self.numerator
            .terms()
            .map(|(e, c)| c * binomial(n as i64 - e as i64 + r - 1, r - 1))
            .sum()
    }

    pub fn is_zero_module(&self) -> bool {
        self.krull_dim < 0
    }

    /// For a finite length module, the full Hilbert function as
    /// `(first degree, dims)`, i.e. the series itself.
    pub fn finite_values(&self) -> Option<Vec<(i32, i64)>> {
        if self.krull_dim > 0 {
            return None;
        }
        Some(self.reduced_numerator.terms().collect())
    }

    /// Least degree with a nonzero graded piece.
    pub fn least_degree(&self) -> Option<i32> {
        // the lowest numerator term is the lowest nonzero degree
        self.numerator.terms().next().map(|(e, _)| e)
    }
}

/// Numerator `N(t)` with `HS(R/J) = N(t) / (1-t)^nvars` for a monomial ideal.
pub fn monomial_ideal_numerator(gens: &[Monomial], nvars: usize) -> LaurentPoly {
    let mut gens = minimalize(gens.to_vec());
    let mut factor = LaurentPoly::from_map([(0, 1)]);
    // split off generators that are pure powers in a variable used nowhere else
    loop {
        let split = gens.iter().position(|m| {
            let support: Vec<usize> = m.support().collect();
            support.len() == 1 && gens.iter().filter(|o| o.exponent(support[0]) > 0).count() == 1
        });
        match split {
            Some(k) => {
                let m = gens.swap_remove(k);
                factor = mul_one_minus_tpow(&factor, m.degree() as i32);
            }
            None => break,
        }
    }
    if gens.is_empty() {
        return factor;
    }
    if gens.iter().any(|m| m.degree() == 0) {
        return LaurentPoly::zero();
    }
    // pivot on the variable occurring in the most generators
    let mut counts = [0usize; MAX_VARS];
    for m in &gens {
        for i in m.support() {
            counts[i] += 1;
        }
    }
    let x = (0..nvars)
        .max_by_key(|&i| (counts[i], std::cmp::Reverse(i)))
        .unwrap();
    let xv = Monomial::var(x);
    // N(J) = N(J + (x)) + t * N(J : x)
    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|m| m.exponent(x) == 0)
        .copied()
        .collect();
    plus.push(xv);
    let colon: Vec<Monomial> = gens.iter().map(|m| m.quotient(&xv)).collect();
    let a = monomial_ideal_numerator(&plus, nvars);
    let b = monomial_ideal_numerator(&colon, nvars).shift(1);
    mul_laurent(&factor, &a.add(&b))
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        // sorted by degree first, so divisors come earlier
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn mul_one_minus_tpow(p: &LaurentPoly, e: i32) -> LaurentPoly {
    let mut out = p.clone();
    for (k, c) in p.terms() {
        out.add_term(k + e, -c);
    }
    out
}

fn mul_laurent(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (ea, ca) in a.terms() {
        for (eb, cb) in b.terms() {
            out.add_term(ea + eb, ca * cb);
        }
    }
    out
}

/// Hilbert data of `F/N` from a Gröbner basis of `N`.
pub fn hilbert_data(basis: &GBasis, nvars: usize) -> HilbertData {
    let mut numerator = LaurentPoly::zero();
    for (comp, &twist) in basis.twists().iter().enumerate() {
        let leads = basis.leading_monomials(comp);
        numerator = numerator.add(&monomial_ideal_numerator(&leads, nvars).shift(twist));
    }
    HilbertData::from_numerator(numerator, nvars, basis.initial_degree())
}
