use std::cmp::Ordering;

use super::monomial::Monomial;
use crate::field::PrimeField;

/// A polynomial as a list of `(coefficient, monomial)` pairs, strictly
/// decreasing in degrevlex with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Polynomial {
    terms: Vec<(u32, Monomial)>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(c: u32) -> Polynomial {
        Polynomial::monomial(c, Monomial::ONE)
    }

    pub fn monomial(c: u32, m: Monomial) -> Polynomial {
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![(c, m)],
            }
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(field: &PrimeField, mut terms: Vec<(u32, Monomial)>) -> Polynomial {
        terms.sort_by_key(|t| std::cmp::Reverse(t.1));
        let mut out: Vec<(u32, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = field.add(last.0, c),
                _ => out.push((c, m)),
            }
        }
        out.retain(|t| t.0 != 0);
        Polynomial { terms: out }
    }

    pub fn terms(&self) -> &[(u32, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(u32, Monomial)> {
        self.terms.first()
    }

    /// Degree of the leading term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.1.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.degree() {
            None => true,
            Some(d) => self.terms.iter().all(|t| t.1.degree() == d),
        }
    }

    pub fn add(&self, other: &Polynomial, field: &PrimeField) -> Polynomial {
        self.combine(other, 1, field)
    }

    pub fn sub(&self, other: &Polynomial, field: &PrimeField) -> Polynomial {
        self.combine(other, field.neg(1), field)
    }

    /// `self + c * other` by merging the sorted term lists.
    fn combine(&self, other: &Polynomial, c: u32, field: &PrimeField) -> Polynomial {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].1.cmp(&b[j].1) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((field.mul(c, b[j].0), b[j].1));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = field.add(a[i].0, field.mul(c, b[j].0));
                    if s != 0 {
                        out.push((s, a[i].1));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|t| (field.mul(c, t.0), t.1)));
        Polynomial { terms: out }
    }

    pub fn neg(&self, field: &PrimeField) -> Polynomial {
        self.scale(field.neg(1), field)
    }

    pub fn scale(&self, c: u32, field: &PrimeField) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| (field.mul(c, t.0), t.1))
                .collect(),
        }
    }

    /// `c * m * self`; monomial multiplication preserves the term order.
    pub fn mul_term(&self, c: u32, m: &Monomial, field: &PrimeField) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| (field.mul(c, t.0), t.1.mul(m)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial, field: &PrimeField) -> Polynomial {
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero();
        for (c, m) in &small.terms {
            acc = acc.add(&large.mul_term(*c, m, field), field);
        }
        acc
    }
}
