use std::cmp::Ordering;
use std::fmt::Write;

use super::monomial::{Monomial, MAX_VARS};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::field::PrimeField;

/// A standard graded polynomial ring `GF(p)[x_1, ..., x_r]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    field: PrimeField,
    vars: Vec<String>,
}

impl Ring {
    pub fn new(field: PrimeField, vars: Vec<String>) -> Result<Ring> {
        if vars.is_empty() {
            return Err(Error::Structure("ring needs at least one variable".into()));
        }
        if vars.len() > MAX_VARS {
            return Err(Error::Structure(format!(
                "at most {MAX_VARS} variables supported, got {}",
                vars.len()
            )));
        }
        for (i, v) in vars.iter().enumerate() {
            let valid = v
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::Structure(format!("invalid variable name '{v}'")));
            }
            if vars[..i].contains(v) {
                return Err(Error::Structure(format!("duplicate variable '{v}'")));
            }
        }
        if field.characteristic() as usize <= vars.len() {
            return Err(Error::Structure(
                "characteristic must exceed the number of variables".into(),
            ));
        }
        Ok(Ring { field, vars })
    }

    /// Ring over the default field with the given variable names.
    pub fn with_vars(names: &[&str]) -> Result<Ring> {
        Ring::new(
            PrimeField::default(),
            names.iter().map(|s| s.to_string()).collect(),
        )
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::monomial(1, Monomial::var(i))
    }

    pub fn variables(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    /// Monomial from an exponent vector of exactly `nvars` entries.
    pub fn monomial(&self, exps: &[u32]) -> Result<Monomial> {
        if exps.len() != self.nvars() {
            return Err(Error::Structure(format!(
                "exponent vector of length {} in a ring with {} variables",
                exps.len(),
                self.nvars()
            )));
        }
        Ok(Monomial::from_exponents(exps))
    }

    /// Degree reverse lexicographic comparison of two exponent vectors.
    pub fn compare(&self, a: &[u32], b: &[u32]) -> Result<Ordering> {
        Ok(self.monomial(a)?.cmp(&self.monomial(b)?))
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut s = String::new();
        for i in 0..self.nvars() {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(&self.vars[i]);
            if e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        s
    }

    /// Renders a polynomial in the input grammar.
    pub fn format(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (c, m)) in f.terms().iter().enumerate() {
            let c = self.field.to_signed(*c);
            let (neg, abs) = (c < 0, c.unsigned_abs());
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.format_monomial(m);
            if mono.is_empty() {
                let _ = write!(s, "{abs}");
            } else if abs == 1 {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "{abs}*{mono}");
            }
        }
        s
    }
}
