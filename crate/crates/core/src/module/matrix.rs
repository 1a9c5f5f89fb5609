use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::{Term, Vector};
use crate::poly::Polynomial;

/// A degree-zero map `⊕ R(-source[j]) -> ⊕ R(-target[i])`, stored column by
/// column: `columns[j]` is the image of the j-th source generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    source: Vec<i32>,
    target: Vec<i32>,
    columns: Vec<Vector>,
}

impl GradedMatrix {
    pub fn new(source: Vec<i32>, target: Vec<i32>, columns: Vec<Vector>) -> Result<Self> {
        if columns.len() != source.len() {
            return Err(Error::Structure(format!(
                "{} columns for {} source generators",
                columns.len(),
                source.len()
            )));
        }
        for (j, c) in columns.iter().enumerate() {
            if c.max_comp().is_some_and(|m| m >= target.len()) {
                return Err(Error::Structure(format!(
                    "column {j} leaves the target module"
                )));
            }
            if !c.is_homogeneous(&target) || c.degree(&target).is_some_and(|d| d != source[j]) {
                return Err(Error::Structure(format!(
                    "column {j} is not homogeneous of degree {}",
                    source[j]
                )));
            }
        }
        Ok(GradedMatrix {
            source,
            target,
            columns,
        })
    }

    /// Builds a matrix from rows of polynomial entries.
    pub fn from_rows(source: Vec<i32>, target: Vec<i32>, rows: &[Vec<Polynomial>]) -> Result<Self> {
        if rows.len() != target.len() || rows.iter().any(|r| r.len() != source.len()) {
            return Err(Error::Structure(
                "entry table does not match the twists".into(),
            ));
        }
        let columns = (0..source.len())
            .map(|j| {
                let entries: Vec<Polynomial> = rows.iter().map(|r| r[j].clone()).collect();
                Vector::from_polynomials(&entries)
            })
            .collect();
        GradedMatrix::new(source, target, columns)
    }

    pub fn zero(source: Vec<i32>, target: Vec<i32>) -> Self {
        let columns = vec![Vector::zero(); source.len()];
        GradedMatrix {
            source,
            target,
            columns,
        }
    }

    pub fn identity(twists: Vec<i32>) -> Self {
        let columns = (0..twists.len()).map(Vector::unit).collect();
        GradedMatrix {
            source: twists.clone(),
            target: twists,
            columns,
        }
    }

    pub(crate) fn from_parts_unchecked(
        source: Vec<i32>,
        target: Vec<i32>,
        columns: Vec<Vector>,
    ) -> Self {
        debug_assert!(GradedMatrix::new(source.clone(), target.clone(), columns.clone()).is_ok());
        GradedMatrix {
            source,
            target,
            columns,
        }
    }

    pub fn source(&self) -> &[i32] {
        &self.source
    }

    pub fn target(&self) -> &[i32] {
        &self.target
    }

    pub fn columns(&self) -> &[Vector] {
        &self.columns
    }

    pub fn nrows(&self) -> usize {
        self.target.len()
    }

    pub fn ncols(&self) -> usize {
        self.source.len()
    }

    pub fn entry(&self, i: usize, j: usize, field: &PrimeField) -> Polynomial {
        self.columns[j].component(i, field)
    }

    /// Image of a source vector.
    pub fn apply(&self, v: &Vector, field: &PrimeField) -> Vector {
        let mut acc = Vector::zero();
        for t in v.terms() {
            acc = acc.add_scaled(t.coeff, &t.mono, &self.columns[t.comp as usize], field);
        }
        acc
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMatrix, field: &PrimeField) -> Result<GradedMatrix> {
        if other.target != self.source {
            return Err(Error::Structure("composition of incompatible maps".into()));
        }
        Ok(GradedMatrix {
            source: other.source.clone(),
            target: self.target.clone(),
            columns: other.columns.iter().map(|c| self.apply(c, field)).collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    /// Whether some entry is a nonzero constant.
    pub fn has_unit_entry(&self) -> bool {
        self.columns
            .iter()
            .any(|c| c.terms().iter().any(|t| t.mono.degree() == 0))
    }

    /// The dual map `Hom(-, R(-shift))`: transpose with twists `t -> shift - t`.
    pub fn dual(&self, shift: i32, field: &PrimeField) -> GradedMatrix {
        let mut cols: Vec<Vec<Term>> = vec![Vec::new(); self.target.len()];
        for (a, c) in self.columns.iter().enumerate() {
            for t in c.terms() {
                cols[t.comp as usize].push(Term {
                    comp: a as u32,
                    ..*t
                });
            }
        }
        GradedMatrix {
            source: self.target.iter().map(|t| shift - t).collect(),
            target: self.source.iter().map(|t| shift - t).collect(),
            columns: cols
                .into_iter()
                .map(|ts| Vector::from_terms(field, ts))
                .collect(),
        }
    }
}
