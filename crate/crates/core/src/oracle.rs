//! Dense degreewise linear algebra, independent of the Gröbner machinery.
//!
//! Graded pieces are spanned by explicit monomial bases; dimensions of
//! quotients and homology come from ranks of the matrices of multiplication
//! and Koszul differentials. Only field arithmetic and the polynomial
//! containers are shared with the rest of the crate.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::poly::Polynomial;

/// Largest coordinate space the oracle agrees to work in.
pub const MAX_DIMENSION: usize = 5000;

type Exps = Vec<u32>;

/// A sparse polynomial as `(coefficient, exponents)`.
type Sparse = Vec<(u32, Exps)>;

fn sparse(f: &Polynomial, nvars: usize) -> Sparse {
    f.terms()
        .iter()
        .map(|(c, m)| (*c, m.exponents(nvars)))
        .collect()
}

fn total(e: &[u32]) -> i32 {
    e.iter().sum::<u32>() as i32
}

/// All exponent vectors of total degree `d` in `n` variables.
fn exponents_of_degree(n: usize, d: i32) -> Vec<Exps> {
    fn go(n: usize, left: u32, prefix: &mut Exps, out: &mut Vec<Exps>) {
        if prefix.len() + 1 == n {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            go(n, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d < 0 || n == 0 {
        if d == 0 && n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, d as u32, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Row echelon accumulator: rows are reduced against stored pivots as they
/// arrive, so the rank is the number of stored rows.
struct Echelon<'f> {
    field: &'f PrimeField,
    width: usize,
    pivots: Vec<(usize, Vec<u32>)>,
}

impl<'f> Echelon<'f> {
    fn new(field: &'f PrimeField, width: usize) -> Self {
        Echelon {
            field,
            width,
            pivots: Vec::new(),
        }
    }

    fn push(&mut self, mut row: Vec<u32>) {
        debug_assert_eq!(row.len(), self.width);
        let f = self.field;
        for (col, prow) in &self.pivots {
            let c = row[*col];
            if c == 0 {
                continue;
            }
            let nc = f.neg(c);
            for k in *col..self.width {
                if prow[k] != 0 {
                    row[k] = f.add(row[k], f.mul(nc, prow[k]));
                }
            }
        }
        if let Some(col) = row.iter().position(|&v| v != 0) {
            let inv = f.inv(row[col]);
            for v in row[col..].iter_mut() {
                *v = f.mul(*v, inv);
            }
            self.pivots.push((col, row));
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// A coordinate system for `(⊕_b R(-t_b))_n`: blocks of monomials.
struct Coordinates {
    index: HashMap<(usize, Exps), usize>,
    len: usize,
}

impl Coordinates {
    fn new(nvars: usize, twists: &[i32], n: i32) -> Self {
        let mut index = HashMap::new();
        let mut len = 0;
        for (b, &t) in twists.iter().enumerate() {
            for e in exponents_of_degree(nvars, n - t) {
                index.insert((b, e), len);
                len += 1;
            }
        }
        Coordinates { index, len }
    }

    fn guard(&self) -> Result<()> {
        if self.len > MAX_DIMENSION {
            return Err(Error::Resource(format!(
                "graded piece of dimension {} exceeds the oracle limit",
                self.len
            )));
        }
        Ok(())
    }
}

/// A column of a map between free modules: polynomial entries by block.
type Column = Vec<(usize, Sparse)>;

fn multiply_into(
    row: &mut [u32],
    coords: &Coordinates,
    col: &Column,
    mono: &[u32],
    coeff: u32,
    field: &PrimeField,
) {
    for (b, poly) in col {
        for (c, e) in poly {
            let key: Exps = e.iter().zip(mono).map(|(a, b)| a + b).collect();
            let k = coords.index[&(*b, key)];
            row[k] = field.add(row[k], field.mul(coeff, *c));
        }
    }
}

/// A graded module `⊕ R(-twists[b]) / (columns)`, read densely.
#[derive(Clone, Debug)]
pub struct DenseModule {
    field: PrimeField,
    nvars: usize,
    twists: Vec<i32>,
    relations: Vec<(i32, Column)>,
}

impl DenseModule {
    /// `R / (ideal)`.
    pub fn quotient(field: PrimeField, nvars: usize, ideal: &[Polynomial]) -> Self {
        let columns = ideal.iter().map(|f| vec![f.clone()]).collect();
        Self::presented(field, nvars, vec![0], columns).expect("one generator")
    }

    /// Cokernel of the columns; `columns[k][b]` is the entry at generator `b`.
    pub fn presented(
        field: PrimeField,
        nvars: usize,
        twists: Vec<i32>,
        columns: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        let mut relations = Vec::new();
        for col in columns {
            if col.len() != twists.len() {
                return Err(Error::Structure(
                    "relation length differs from generator count".into(),
                ));
            }
            let mut degree = None;
            let mut entries = Vec::new();
            for (b, f) in col.iter().enumerate() {
                if f.is_zero() {
                    continue;
                }
                let s = sparse(f, nvars);
                for (_, e) in &s {
                    let d = total(e) + twists[b];
                    if degree.is_some_and(|x| x != d) {
                        return Err(Error::Structure("inhomogeneous relation".into()));
                    }
                    degree = Some(d);
                }
                entries.push((b, s));
            }
            if let Some(d) = degree {
                relations.push((d, entries));
            }
        }
        Ok(DenseModule {
            field,
            nvars,
            twists,
            relations,
        })
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    /// Spans the relations in degree `n` inside `blocks` copies of the
    /// ambient module, block `k` shifted by `shifts[k]`.
    fn relation_rows(&self, shifts: &[i32], n: i32, coords: &Coordinates) -> Vec<Vec<u32>> {
        let g = self.twists.len();
        let mut rows = Vec::new();
        for (k, &s) in shifts.iter().enumerate() {
            for (d, col) in &self.relations {
                let shifted: Column = col.iter().map(|(b, p)| (k * g + b, p.clone())).collect();
                for mono in exponents_of_degree(self.nvars, n - d - s) {
                    let mut row = vec![0; coords.len];
                    multiply_into(&mut row, coords, &shifted, &mono, 1, &self.field);
                    rows.push(row);
                }
            }
        }
        rows
    }

    fn block_twists(&self, shifts: &[i32]) -> Vec<i32> {
        shifts
            .iter()
            .flat_map(|s| self.twists.iter().map(move |t| t + s))
            .collect()
    }

    fn rank_of(&self, width: usize, rows: impl IntoIterator<Item = Vec<u32>>) -> usize {
        let mut ech = Echelon::new(&self.field, width);
        for r in rows {
            ech.push(r);
        }
        ech.rank()
    }

    /// `dim M_n`.
    pub fn dim(&self, n: i32) -> Result<usize> {
        let coords = Coordinates::new(self.nvars, &self.twists, n);
        coords.guard()?;
        let rows = self.relation_rows(&[0], n, &coords);
        Ok(coords.len - self.rank_of(coords.len, rows))
    }

    /// `dim H_i(f; M)_n` for homogeneous forms `f`.
    pub fn koszul_homology_dim(&self, forms: &[Polynomial], i: usize, n: i32) -> Result<usize> {
        let s = forms.len();
        if i > s {
            return Ok(0);
        }
        let complex = DenseKoszul::new(forms, self.nvars);
        let here = complex.shifts(i);
        let coords = Coordinates::new(self.nvars, &self.block_twists(&here), n);
        coords.guard()?;
        // cycles: v with d(v) in the relations of the term below
        let cycles = if i == 0 {
            coords.len
        } else {
            let below = complex.shifts(i - 1);
            let bc = Coordinates::new(self.nvars, &self.block_twists(&below), n);
            bc.guard()?;
            let rel_rows = self.relation_rows(&below, n, &bc);
            let base = self.rank_of(bc.len, rel_rows.clone());
            let images = self.differential_rows(&complex, i, n, &bc);
            let with = self.rank_of(bc.len, rel_rows.into_iter().chain(images));
            coords.len - (with - base)
        };
        let mut rows = self.relation_rows(&here, n, &coords);
        if i < s {
            rows.extend(self.differential_rows(&complex, i + 1, n, &coords));
        }
        Ok(cycles - self.rank_of(coords.len, rows))
    }

    /// Images of the degree-`n` basis of term `i` in the coordinates of
    /// term `i - 1`.
    fn differential_rows(
        &self,
        complex: &DenseKoszul,
        i: usize,
        n: i32,
        below: &Coordinates,
    ) -> Vec<Vec<u32>> {
        let g = self.twists.len();
        let subsets = complex.subsets(i);
        let lower = complex.subsets(i - 1);
        let position: HashMap<u32, usize> =
            lower.iter().enumerate().map(|(k, &m)| (m, k)).collect();
        let mut rows = Vec::new();
        for &mask in &subsets {
            for b in 0..g {
                let t = self.twists[b] + complex.weight(mask);
                for mono in exponents_of_degree(self.nvars, n - t) {
                    let mut row = vec![0; below.len];
                    for k in 0..complex.forms.len() {
                        if mask >> k & 1 == 0 {
                            continue;
                        }
                        let before = (0..k).filter(|q| mask >> q & 1 == 1).count();
                        let coeff = if before % 2 == 0 {
                            1
                        } else {
                            self.field.neg(1)
                        };
                        let to = position[&(mask & !(1 << k))];
                        let col: Column = vec![(to * g + b, complex.forms[k].clone())];
                        multiply_into(&mut row, below, &col, &mono, coeff, &self.field);
                    }
                    rows.push(row);
                }
            }
        }
        rows
    }

    /// `dim Tor_i(K, M)_j`.
    pub fn tor_dim(&self, i: usize, j: i32) -> Result<usize> {
        let vars: Vec<Polynomial> = (0..self.nvars).map(|v| variable(v, self.nvars)).collect();
        self.koszul_homology_dim(&vars, i, j)
    }

    /// `(i, j) -> dim Tor_i(K, M)_j` for `j` in `lo..=hi`, zeros omitted.
    pub fn tor_table(&self, lo: i32, hi: i32) -> Result<BTreeMap<(usize, i32), usize>> {
        let mut out = BTreeMap::new();
        for i in 0..=self.nvars {
            for j in lo..=hi {
                let d = self.tor_dim(i, j)?;
                if d > 0 {
                    out.insert((i, j), d);
                }
            }
        }
        Ok(out)
    }
}

fn variable(v: usize, nvars: usize) -> Polynomial {
    let mut e = vec![0; nvars];
    e[v] = 1;
    Polynomial::monomial(1, crate::poly::Monomial::from_exponents(&e))
}

struct DenseKoszul {
    forms: Vec<Sparse>,
    degrees: Vec<i32>,
}

impl DenseKoszul {
    fn new(forms: &[Polynomial], nvars: usize) -> Self {
        let forms: Vec<Sparse> = forms.iter().map(|f| sparse(f, nvars)).collect();
        let degrees = forms
            .iter()
            .map(|f| f.first().map_or(0, |(_, e)| total(e)))
            .collect();
        DenseKoszul { forms, degrees }
    }

    fn subsets(&self, i: usize) -> Vec<u32> {
        (0u32..1 << self.forms.len())
            .filter(|m| m.count_ones() as usize == i)
            .collect()
    }

    fn weight(&self, mask: u32) -> i32 {
        (0..self.forms.len())
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| self.degrees[k])
            .sum()
    }

    fn shifts(&self, i: usize) -> Vec<i32> {
        self.subsets(i)
            .into_iter()
            .map(|m| self.weight(m))
            .collect()
    }
}

/// A degree-zero map of free modules for degreewise homology checks.
#[derive(Clone, Debug)]
pub struct DenseMap {
    pub source: Vec<i32>,
    pub target: Vec<i32>,
    /// `columns[k][b]`: entry at target generator `b` of the image of `e_k`.
    pub columns: Vec<Vec<Polynomial>>,
}

/// `dim` of the homology at the middle of `A --incoming--> B --outgoing--> C`
/// of free modules in degree `n`.
pub fn free_homology_dim(
    field: PrimeField,
    nvars: usize,
    incoming: &DenseMap,
    outgoing: &DenseMap,
    n: i32,
) -> Result<usize> {
    let mid = Coordinates::new(nvars, &outgoing.source, n);
    let low = Coordinates::new(nvars, &outgoing.target, n);
    mid.guard()?;
    low.guard()?;
    let image_rows = |map: &DenseMap, coords: &Coordinates| -> Vec<Vec<u32>> {
        let mut rows = Vec::new();
        for (k, col) in map.columns.iter().enumerate() {
            let c: Column = col
                .iter()
                .enumerate()
                .filter(|(_, f)| !f.is_zero())
                .map(|(b, f)| (b, sparse(f, nvars)))
                .collect();
            for mono in exponents_of_degree(nvars, n - map.source[k]) {
                let mut row = vec![0; coords.len];
                multiply_into(&mut row, coords, &c, &mono, 1, &field);
                rows.push(row);
            }
        }
        rows
    };
    let rank = |width: usize, rows: Vec<Vec<u32>>| {
        let mut e = Echelon::new(&field, width);
        for r in rows {
            e.push(r);
        }
        e.rank()
    };
    let out_rank = rank(low.len, image_rows(outgoing, &low));
    let in_rank = rank(mid.len, image_rows(incoming, &mid));
    Ok(mid.len - out_rank - in_rank)
}
