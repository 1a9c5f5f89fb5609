use std::cmp::Ordering;

use crate::field::PrimeField;
use crate::poly::{Monomial, Polynomial};

/// One term `coeff * mono * e_comp` of a free-module element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub coeff: u32,
    pub mono: Monomial,
    pub comp: u32,
}

/// Position-over-term: a lower component index is larger; within a
/// component, degrevlex. For homogeneous elements every term has the same
/// twist-shifted degree, so this agrees with the degree-first extension.
#[inline]
pub fn term_order(a: &Term, b: &Term) -> Ordering {
    b.comp.cmp(&a.comp).then_with(|| a.mono.cmp(&b.mono))
}

/// Sparse element of a twisted free module `⊕ R(-t_i)`, terms strictly
/// decreasing under [`term_order`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Vector {
    terms: Vec<Term>,
}

/// Module elements are plain vectors; the twists live with the ambient module.
pub type ModuleElement = Vector;

impl Vector {
    pub fn zero() -> Vector {
        Vector { terms: Vec::new() }
    }

    pub fn unit(comp: usize) -> Vector {
        Vector {
            terms: vec![Term {
                coeff: 1,
                mono: Monomial::ONE,
                comp: comp as u32,
            }],
        }
    }

    pub fn from_polynomial(f: &Polynomial, comp: usize) -> Vector {
        Vector {
            terms: f
                .terms()
                .iter()
                .map(|&(coeff, mono)| Term {
                    coeff,
                    mono,
                    comp: comp as u32,
                })
                .collect(),
        }
    }

    /// Builds a vector from polynomial entries, one per component.
    pub fn from_polynomials(entries: &[Polynomial]) -> Vector {
        Vector {
            terms: entries
                .iter()
                .enumerate()
                .flat_map(|(c, f)| {
                    f.terms().iter().map(move |&(coeff, mono)| Term {
                        coeff,
                        mono,
                        comp: c as u32,
                    })
                })
                .collect(),
        }
    }

    pub fn from_terms(field: &PrimeField, mut terms: Vec<Term>) -> Vector {
        terms.sort_by(|a, b| term_order(b, a));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.comp == t.comp && last.mono == t.mono => {
                    last.coeff = field.add(last.coeff, t.coeff)
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coeff != 0);
        Vector { terms: out }
    }

    pub(crate) fn from_sorted(terms: Vec<Term>) -> Vector {
        debug_assert!(terms
            .windows(2)
            .all(|w| term_order(&w[0], &w[1]) == Ordering::Greater));
        Vector { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Twist-shifted degree of the leading term.
    pub fn degree(&self, twists: &[i32]) -> Option<i32> {
        self.lead()
            .map(|t| t.mono.degree() as i32 + twists[t.comp as usize])
    }

    pub fn is_homogeneous(&self, twists: &[i32]) -> bool {
        match self.degree(twists) {
            None => true,
            Some(d) => self
                .terms
                .iter()
                .all(|t| t.mono.degree() as i32 + twists[t.comp as usize] == d),
        }
    }

    /// Entry in component `comp` as a polynomial.
    pub fn component(&self, comp: usize, field: &PrimeField) -> Polynomial {
        Polynomial::from_terms(
            field,
            self.terms
                .iter()
                .filter(|t| t.comp as usize == comp)
                .map(|t| (t.coeff, t.mono))
                .collect(),
        )
    }

    /// Dense list of entries for an ambient module of the given rank.
    pub fn to_polynomials(&self, rank: usize, field: &PrimeField) -> Vec<Polynomial> {
        (0..rank).map(|c| self.component(c, field)).collect()
    }

    pub fn max_comp(&self) -> Option<usize> {
        self.terms.iter().map(|t| t.comp as usize).max()
    }

    /// `self + c * m * other`.
    pub fn add_scaled(&self, c: u32, m: &Monomial, other: &Vector, field: &PrimeField) -> Vector {
        Vector {
            terms: merge_scaled(&self.terms, c, m, &other.terms, field),
        }
    }

    pub fn add(&self, other: &Vector, field: &PrimeField) -> Vector {
        self.add_scaled(1, &Monomial::ONE, other, field)
    }

    pub fn sub(&self, other: &Vector, field: &PrimeField) -> Vector {
        self.add_scaled(field.neg(1), &Monomial::ONE, other, field)
    }

    pub fn scale(&self, c: u32, field: &PrimeField) -> Vector {
        if c == 0 {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.mul(c, t.coeff),
                    ..*t
                })
                .collect(),
        }
    }

    pub fn mul_poly(&self, f: &Polynomial, field: &PrimeField) -> Vector {
        let mut acc = Vector::zero();
        for &(c, m) in f.terms() {
            acc = acc.add_scaled(c, &m, self, field);
        }
        acc
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self, field: &PrimeField) -> Vector {
        match self.lead() {
            Some(t) if t.coeff != 1 => self.scale(field.inv(t.coeff), field),
            _ => self.clone(),
        }
    }

    /// Renumbers components through `map`; components mapped to `None` must
    /// carry no terms. The map must be order preserving.
    pub fn remap(&self, map: impl Fn(usize) -> Option<usize>) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    comp: map(t.comp as usize).expect("remapped a nonzero component away") as u32,
                    ..*t
                })
                .collect(),
        }
    }

    /// Shifts every component index by `offset`.
    pub fn shift_components(&self, offset: usize) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    comp: t.comp + offset as u32,
                    ..*t
                })
                .collect(),
        }
    }

    /// Keeps only components in `range`, renumbered from zero.
    pub fn restrict(&self, range: std::ops::Range<usize>) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|t| range.contains(&(t.comp as usize)))
                .map(|t| Term {
                    comp: t.comp - range.start as u32,
                    ..*t
                })
                .collect(),
        }
    }
}

/// Merges `a + c * m * b` for sorted term lists.
pub(crate) fn merge_scaled(
    a: &[Term],
    c: u32,
    m: &Monomial,
    b: &[Term],
    field: &PrimeField,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let scaled = |t: &Term| Term {
        coeff: field.mul(c, t.coeff),
        mono: t.mono.mul(m),
        comp: t.comp,
    };
    if c == 0 {
        return a.to_vec();
    }
    while i < a.len() && j < b.len() {
        let bj = scaled(&b[j]);
        match term_order(&a[i], &bj) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push(bj);
                j += 1;
            }
            Ordering::Equal => {
                let s = field.add(a[i].coeff, bj.coeff);
                if s != 0 {
                    out.push(Term { coeff: s, ..a[i] });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(scaled));
    out
}
