//! Koszul complexes of homogeneous forms on presented modules.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groebner::{Term, Vector};
use crate::module::{homology_at, GradedMatrix, PresentedModule};
use crate::poly::Polynomial;
use crate::resolution::BettiTable;

/// Direction of a Koszul complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `K_•(f; M)`, differentials lower the index.
    Homological,
    /// `K^•(f; M)`, differentials raise the index.
    Cohomological,
}

/// `K_•(f; M)` or `K^•(f; M)`. Term `i` is `⊕_{|S| = i} M(∓ Σ_{k∈S} deg f_k)`
/// with subsets in colex order and blocks of `M`'s generators inside.
#[derive(Clone, Debug)]
pub struct KoszulComplex {
    direction: Direction,
    forms: Vec<Polynomial>,
    terms: Vec<PresentedModule>,
    subsets: Vec<Vec<u32>>,
    /// `maps[i]` leaves term `i` (towards `i - 1` or `i + 1`).
    maps: Vec<GradedMatrix>,
}

/// Subsets of `{0..s}` of size `i` as bitmasks in colex order.
fn subsets(s: usize, i: usize) -> Vec<u32> {
    (0u32..1 << s)
        .filter(|m| m.count_ones() as usize == i)
        .collect()
}

fn sign_position(mask: u32, k: usize) -> bool {
    (mask & ((1 << k) - 1)).count_ones() % 2 == 1
}

impl KoszulComplex {
    pub fn new(forms: &[Polynomial], m: &PresentedModule, direction: Direction) -> Result<Self> {
        let field = *m.field();
        let degrees: Vec<i32> = forms
            .iter()
            .map(|f| {
                if f.is_zero() || !f.is_homogeneous() {
                    Err(Error::Structure(
                        "Koszul forms must be nonzero and homogeneous".into(),
                    ))
                } else {
                    Ok(f.degree().unwrap() as i32)
                }
            })
            .collect::<Result<_>>()?;
        let s = forms.len();
        let sign = match direction {
            Direction::Homological => 1,
            Direction::Cohomological => -1,
        };
        let subsets: Vec<Vec<u32>> = (0..=s).map(|i| subsets(s, i)).collect();
        let weight = |mask: u32| -> i32 {
            (0..s)
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| degrees[k])
                .sum()
        };
        let terms: Vec<PresentedModule> = subsets
            .iter()
            .map(|subs| {
                let shifts: Vec<i32> = subs.iter().map(|&mask| sign * weight(mask)).collect();
                m.direct_sum_shifted(&shifts)
            })
            .collect();
        let g = m.num_generators();
        let mut maps = Vec::with_capacity(s + 1);
        for i in 0..=s {
            let (to_index, to_twists) = match direction {
                Direction::Homological if i == 0 => (None, Vec::new()),
                Direction::Homological => (Some(i - 1), terms[i - 1].twists().to_vec()),
                Direction::Cohomological if i == s => (None, Vec::new()),
                Direction::Cohomological => (Some(i + 1), terms[i + 1].twists().to_vec()),
            };
            let Some(t) = to_index else {
                maps.push(GradedMatrix::zero(terms[i].twists().to_vec(), to_twists));
                continue;
            };
            let mut columns = Vec::with_capacity(subsets[i].len() * g);
            for &mask in &subsets[i] {
                let mut images: Vec<(usize, bool, usize)> = Vec::new();
                for k in 0..s {
                    let inside = mask >> k & 1 == 1;
                    match direction {
                        Direction::Homological if inside => {
                            let to = mask & !(1 << k);
                            images.push((k, sign_position(mask, k), block(&subsets[t], to)));
                        }
                        Direction::Cohomological if !inside => {
                            let to = mask | (1 << k);
                            images.push((k, sign_position(to, k), block(&subsets[t], to)));
                        }
                        _ => {}
                    }
                }
                for gen in 0..g {
                    let mut terms_out = Vec::new();
                    for &(k, negative, b) in &images {
                        for &(c, mono) in forms[k].terms() {
                            terms_out.push(Term {
                                coeff: if negative { field.neg(c) } else { c },
                                mono,
                                comp: (b * g + gen) as u32,
                            });
                        }
                    }
                    columns.push(Vector::from_terms(&field, terms_out));
                }
            }
            maps.push(GradedMatrix::from_parts_unchecked(
                terms[i].twists().to_vec(),
                to_twists,
                columns,
            ));
        }
        Ok(KoszulComplex {
            direction,
            forms: forms.to_vec(),
            terms,
            subsets,
            maps,
        })
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn forms(&self) -> &[Polynomial] {
        &self.forms
    }

    pub fn length(&self) -> usize {
        self.forms.len()
    }

    pub fn term(&self, i: usize) -> &PresentedModule {
        &self.terms[i]
    }

    /// Exterior basis of term `i` as bitmasks over the forms.
    pub fn subsets(&self, i: usize) -> &[u32] {
        &self.subsets[i]
    }

    /// The map leaving term `i`.
    pub fn map(&self, i: usize) -> &GradedMatrix {
        &self.maps[i]
    }

    /// Whether every composite of consecutive maps vanishes on the modules.
    pub fn is_complex(&self) -> bool {
        let field = *self.terms[0].field();
        let s = self.length();
        (0..=s).all(|i| {
            let next = match self.direction {
                Direction::Homological if i >= 2 => i - 1,
                Direction::Cohomological if i + 2 <= s => i + 1,
                _ => return true,
            };
            let after = match self.direction {
                Direction::Homological => i - 2,
                Direction::Cohomological => i + 2,
            };
            self.maps[i]
                .columns()
                .iter()
                .all(|c| self.terms[after].is_zero_element(&self.maps[next].apply(c, &field)))
        })
    }

    /// Homology at term `i`; zero outside `0..=s`.
    pub fn homology(&self, i: i64) -> Result<PresentedModule> {
        let m = &self.terms[0];
        let s = self.length() as i64;
        if i < 0 || i > s {
            return Ok(PresentedModule::zero(m.ring()));
        }
        let i = i as usize;
        let zero = PresentedModule::zero(m.ring());
        let here = &self.terms[i];
        let (incoming, target) = match self.direction {
            Direction::Homological => {
                let inc = if (i as i64) < s {
                    self.maps[i + 1].clone()
                } else {
                    GradedMatrix::zero(Vec::new(), here.twists().to_vec())
                };
                (inc, if i > 0 { &self.terms[i - 1] } else { &zero })
            }
            Direction::Cohomological => {
                let inc = if i > 0 {
                    self.maps[i - 1].clone()
                } else {
                    GradedMatrix::zero(Vec::new(), here.twists().to_vec())
                };
                (
                    inc,
                    if (i as i64) < s {
                        &self.terms[i + 1]
                    } else {
                        &zero
                    },
                )
            }
        };
        homology_at(&incoming, here, &self.maps[i], target)
    }

    /// Homology at every spot, computed in parallel.
    pub fn all_homology(&self) -> Result<Vec<PresentedModule>> {
        (0..=self.length() as i64)
            .into_par_iter()
            .map(|i| self.homology(i))
            .collect()
    }
}

fn block(list: &[u32], mask: u32) -> usize {
    list.binary_search(&mask).expect("subset present")
}

/// `H_i(f; M)`.
pub fn koszul_homology(
    forms: &[Polynomial],
    m: &PresentedModule,
    i: i64,
) -> Result<PresentedModule> {
    KoszulComplex::new(forms, m, Direction::Homological)?.homology(i)
}

/// `H^i(f; M)`.
pub fn koszul_cohomology(
    forms: &[Polynomial],
    m: &PresentedModule,
    i: i64,
) -> Result<PresentedModule> {
    KoszulComplex::new(forms, m, Direction::Cohomological)?.homology(i)
}

/// `dim Tor_i(K, M)_j = dim H_i(x; M)_j` over the full variable sequence,
/// restricted to `window` when given.
pub fn tor_dimensions(m: &PresentedModule, window: Option<(i32, i32)>) -> Result<BettiTable> {
    let vars = m.ring().variables();
    let complex = KoszulComplex::new(&vars, m, Direction::Homological)?;
    let homology = complex.all_homology()?;
    let mut entries = Vec::new();
    for (i, h) in homology.iter().enumerate() {
        let hf = h
            .finite_hilbert()
            .ok_or_else(|| Error::Invariant(format!("Tor_{i} is not of finite length")))?;
        for (&j, &d) in hf.dims() {
            if window.is_none_or(|(lo, hi)| lo <= j && j <= hi) {
                entries.push((i, j, d));
            }
        }
    }
    Ok(BettiTable::from_entries(entries))
}
