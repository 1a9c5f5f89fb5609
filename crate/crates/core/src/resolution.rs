//! Minimal graded free resolutions and Betti tables.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::duality;
use crate::error::{Error, Result};
use crate::groebner::{kernel_generators, LaurentPoly};
use crate::module::{GradedMatrix, PresentedModule};
use crate::poly::Ring;

/// Graded Betti numbers `β_{i,j}`; only nonzero entries are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i32), usize>,
}

#[derive(Serialize)]
struct BettiEntry {
    i: usize,
    j: i32,
    beta: usize,
}

impl BettiTable {
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, i32, usize)>) -> Self {
        let mut map = BTreeMap::new();
        for (i, j, b) in entries {
            if b > 0 {
                *map.entry((i, j)).or_insert(0) += b;
            }
        }
        BettiTable { entries: map }
    }

    /// Betti numbers read off the twists of a resolution's free modules.
    pub fn from_twists(twists: &[Vec<i32>]) -> Self {
        Self::from_entries(
            twists
                .iter()
                .enumerate()
                .flat_map(|(i, ts)| ts.iter().map(move |&j| (i, j, 1))),
        )
    }

    pub fn get(&self, i: usize, j: i32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i32, usize)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    /// `Σ_j β_{i,j}`.
    pub fn rank(&self, i: usize) -> usize {
        self.entries
            .range((i, i32::MIN)..=(i, i32::MAX))
            .map(|(_, b)| b)
            .sum()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// `e(Tor_i) = max{j : β_{i,j} ≠ 0}`.
    pub fn end(&self, i: usize) -> Option<i32> {
        self.entries
            .range((i, i32::MIN)..=(i, i32::MAX))
            .map(|(k, _)| k.1)
            .next_back()
    }

    /// `min{j : β_{i,j} ≠ 0}`.
    pub fn initial(&self, i: usize) -> Option<i32> {
        self.entries
            .range((i, i32::MIN)..=(i, i32::MAX))
            .map(|(k, _)| k.1)
            .next()
    }

    /// `max{e(Tor_i) - i}`; `None` for the zero module.
    pub fn regularity(&self) -> Option<i32> {
        self.entries.keys().map(|&(i, j)| j - i as i32).max()
    }

    /// `max{e(Tor_j) - j : lo ≤ j ≤ hi}`; `None` when all those vanish.
    pub fn regularity_between(&self, lo: usize, hi: usize) -> Option<i32> {
        self.entries
            .keys()
            .filter(|&&(i, _)| lo <= i && i <= hi)
            .map(|&(i, j)| j - i as i32)
            .max()
    }

    /// `Σ (-1)^i β_{i,j} t^j`, the Hilbert series numerator over `(1-t)^r`.
    pub fn euler_polynomial(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (&(i, j), &b) in &self.entries {
            p.add_term(j, if i % 2 == 0 { b as i64 } else { -(b as i64) });
        }
        p
    }

    /// Staircase layout: rows `j - i`, columns `i`, `.` for zero.
    pub fn to_text(&self) -> String {
        let Some(pd) = self.projective_dimension() else {
            return "0\n".to_string();
        };
        let rows: Vec<i32> = {
            let lo = self
                .entries
                .keys()
                .map(|&(i, j)| j - i as i32)
                .min()
                .unwrap();
            let hi = self.regularity().unwrap();
            (lo..=hi).collect()
        };
        let cell = |v: usize| {
            if v == 0 {
                ".".to_string()
            } else {
                v.to_string()
            }
        };
        let mut cells: Vec<Vec<String>> = Vec::new();
        cells.push((0..=pd).map(|i| i.to_string()).collect());
        cells.push((0..=pd).map(|i| cell(self.rank(i))).collect());
        for &r in &rows {
            cells.push((0..=pd).map(|i| cell(self.get(i, r + i as i32))).collect());
        }
        let width: Vec<usize> = (0..=pd)
            .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap())
            .collect();
        let labels: Vec<String> = std::iter::once(String::new())
            .chain(std::iter::once("total:".to_string()))
            .chain(rows.iter().map(|r| format!("{r}:")))
            .collect();
        let lw = labels.iter().map(|l| l.len()).max().unwrap();
        let mut out = String::new();
        for (label, row) in labels.iter().zip(&cells) {
            let _ = write!(out, "{label:>lw$}");
            for (c, v) in row.iter().enumerate() {
                let _ = write!(out, " {v:>w$}", w = width[c]);
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let list: Vec<BettiEntry> = self
            .entries()
            .map(|(i, j, beta)| BettiEntry { i, j, beta })
            .collect();
        serde_json::to_value(list).expect("plain data")
    }
}

/// `0 -> F_p -> ... -> F_0 -> M -> 0`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    ring: Ring,
    twists: Vec<Vec<i32>>,
    /// `differentials[k]` is `F_{k+1} -> F_k`.
    differentials: Vec<GradedMatrix>,
}

impl FreeResolution {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Twists of `F_0, F_1, …`.
    pub fn twists(&self) -> &[Vec<i32>] {
        &self.twists
    }

    /// `d_k: F_k -> F_{k-1}` for `k ≥ 1`.
    pub fn differential(&self, k: usize) -> &GradedMatrix {
        &self.differentials[k - 1]
    }

    pub fn differentials(&self) -> &[GradedMatrix] {
        &self.differentials
    }

    /// Length `p`; `None` for the zero module.
    pub fn length(&self) -> Option<usize> {
        if self.twists.first().is_none_or(|t| t.is_empty()) {
            None
        } else {
            Some(self.differentials.len())
        }
    }

    pub fn betti(&self) -> BettiTable {
        BettiTable::from_twists(&self.twists)
    }

    pub fn is_minimal(&self) -> bool {
        self.differentials.iter().all(|d| !d.has_unit_entry())
    }

    pub fn is_complex(&self) -> bool {
        let field = *self.ring.field();
        self.differentials
            .windows(2)
            .all(|w| w[0].compose(&w[1], &field).is_ok_and(|c| c.is_zero()))
    }
}

/// Minimal graded free resolution by iterated minimal syzygies.
pub fn minimal_free_resolution(m: &PresentedModule) -> FreeResolution {
    let ring = m.ring().clone();
    let field = *ring.field();
    let r = ring.nvars();
    let mut twists = vec![m.twists().to_vec()];
    let mut differentials = Vec::new();
    let mut current = m.relations().clone();
    while current.ncols() > 0 {
        twists.push(current.source().to_vec());
        let syz = kernel_generators(
            &field,
            current.target(),
            current.columns(),
            current.source(),
        );
        let next = if syz.is_empty() {
            None
        } else {
            let source = syz
                .iter()
                .map(|v| v.degree(current.source()).unwrap())
                .collect();
            Some(GradedMatrix::from_parts_unchecked(
                source,
                current.source().to_vec(),
                syz,
            ))
        };
        differentials.push(current);
        match next {
            Some(n) => current = n,
            None => break,
        }
    }
    assert!(
        differentials.len() <= r,
        "resolution of length {} over {r} variables",
        differentials.len()
    );
    FreeResolution {
        ring,
        twists,
        differentials,
    }
}

/// Which characterization of Castelnuovo–Mumford regularity to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularityMode {
    /// `max{e(Tor_i) - i : 0 ≤ i ≤ r}`.
    BettiFull,
    /// `max{e(Tor_j) - j : r - s ≤ j ≤ r}`.
    BettiTail(usize),
    /// `max{e(H^i_m) + i}` through the deficiency modules.
    Cohomological,
}

pub fn regularity(m: &PresentedModule, mode: RegularityMode) -> Result<i32> {
    if m.is_zero() {
        return Err(Error::ZeroModule("regularity"));
    }
    let r = m.ring().nvars();
    let betti = || minimal_free_resolution(m).betti();
    let value = match mode {
        RegularityMode::BettiFull => betti().regularity(),
        RegularityMode::BettiTail(s) => betti().regularity_between(r.saturating_sub(s), r),
        RegularityMode::Cohomological => duality::deficiency_modules(m)?
            .iter()
            .filter_map(|k| k.end_of_local_cohomology().map(|e| e + k.index as i32))
            .max(),
    };
    value.ok_or_else(|| Error::Invariant("regularity undefined".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DepthInfo {
    pub depth: usize,
    pub dim: usize,
    pub codim: usize,
    pub cohen_macaulay: bool,
    pub projective_dimension: usize,
}

/// Depth by Auslander–Buchsbaum, dimension from the Hilbert series.
pub fn depth_and_codim(m: &PresentedModule) -> Result<DepthInfo> {
    if m.is_zero() {
        return Err(Error::ZeroModule("depth"));
    }
    let r = m.ring().nvars();
    let pd = minimal_free_resolution(m).length().unwrap();
    let dim = m.krull_dim() as usize;
    let depth = r - pd;
    Ok(DepthInfo {
        depth,
        dim,
        codim: r - dim,
        cohen_macaulay: depth == dim,
        projective_dimension: pd,
    })
}

/// The numerical invariants of `R/I` printed by the front end.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealInvariants {
    /// `μ(I)`.
    pub mu: usize,
    /// `a(I)`; `None` for the zero ideal.
    pub a: Option<i32>,
    /// `dim R/I`; `None` when `I` is the unit ideal.
    pub dim: Option<usize>,
    pub depth: Option<usize>,
    pub codim: usize,
    /// Multiplicity, the length when `dim R/I = 0`.
    pub e: i64,
    pub reg: Option<i32>,
}

pub fn ideal_invariants(ring: &Ring, ideal: &[crate::poly::Polynomial]) -> Result<IdealInvariants> {
    let m = PresentedModule::quotient_ring(ring, ideal)?;
    let betti = minimal_free_resolution(&m).betti();
    let info = depth_and_codim(&m).ok();
    Ok(IdealInvariants {
        mu: betti.rank(1),
        a: m.basis().initial_degree(),
        dim: info.map(|i| i.dim),
        depth: info.map(|i| i.depth),
        codim: info.map_or(ring.nvars(), |i| i.codim),
        e: m.hilbert().multiplicity,
        reg: betti.regularity(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Polynomial};

    fn quotient(ring: &Ring, gens: &[&str]) -> PresentedModule {
        let p: Vec<Polynomial> = gens
            .iter()
            .map(|g| parse_polynomial(g, ring).unwrap())
            .collect();
        PresentedModule::quotient_ring(ring, &p).unwrap()
    }

    #[test]
    fn residue_field_resolution_is_koszul() {
        let ring = Ring::with_vars(&["x", "y"]).unwrap();
        let res = minimal_free_resolution(&PresentedModule::residue_field(&ring));
        assert!(res.is_minimal() && res.is_complex());
        let b = res.betti();
        assert_eq!(
            b,
            BettiTable::from_entries([(0, 0, 1), (1, 1, 2), (2, 2, 1)])
        );
    }

    #[test]
    fn twisted_cubic_resolution() {
        let ring = Ring::with_vars(&["x", "y", "z", "w"]).unwrap();
        let m = quotient(&ring, &["x*z - y^2", "y*w - z^2", "x*w - y*z"]);
        let res = minimal_free_resolution(&m);
        assert!(res.is_minimal() && res.is_complex());
        assert_eq!(res.twists(), &[vec![0], vec![2, 2, 2], vec![3, 3]]);
        assert_eq!(regularity(&m, RegularityMode::BettiFull).unwrap(), 1);
        let info = depth_and_codim(&m).unwrap();
        assert_eq!(
            (info.dim, info.depth, info.codim, info.cohen_macaulay),
            (2, 2, 2, true)
        );
    }

    #[test]
    fn complete_intersection_resolution() {
        let ring = Ring::with_vars(&["x", "y"]).unwrap();
        let m = quotient(&ring, &["x^2", "y^3"]);
        let b = minimal_free_resolution(&m).betti();
        assert_eq!(
            b,
            BettiTable::from_entries([(0, 0, 1), (1, 2, 1), (1, 3, 1), (2, 5, 1)])
        );
        assert_eq!(b.regularity(), Some(3));
        let euler = b.euler_polynomial();
        assert_eq!(euler, m.hilbert().numerator);
    }

    #[test]
    fn free_and_artinian() {
        let ring = Ring::with_vars(&["x", "y"]).unwrap();
        let r = PresentedModule::free(&ring, vec![0]);
        assert_eq!(regularity(&r, RegularityMode::BettiFull).unwrap(), 0);
        let m = quotient(&ring, &["x^2", "x*y", "y^2"]);
        let info = depth_and_codim(&m).unwrap();
        assert_eq!(
            (info.dim, info.depth, info.codim, info.cohen_macaulay),
            (0, 0, 2, true)
        );
        assert!(regularity(&PresentedModule::zero(&ring), RegularityMode::BettiFull).is_err());
    }

    #[test]
    fn staircase_text() {
        let b = BettiTable::from_entries([(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
        assert_eq!(
            b.to_text(),
            "       0 1 2\ntotal: 1 3 2\n    0: 1 . .\n    1: . 3 2\n"
        );
        let json = b.to_json();
        assert_eq!(json[1]["i"], 1);
        assert_eq!(json[1]["j"], 2);
        assert_eq!(json[1]["beta"], 3);
    }

    #[test]
    fn invariant_records() {
        let ring = Ring::with_vars(&["x", "y", "z", "w"]).unwrap();
        let cubic: Vec<Polynomial> = ["x*z - y^2", "y*w - z^2", "x*w - y*z"]
            .iter()
            .map(|g| parse_polynomial(g, &ring).unwrap())
            .collect();
        let inv = ideal_invariants(&ring, &cubic).unwrap();
        assert_eq!(
            inv,
            IdealInvariants {
                mu: 3,
                a: Some(2),
                dim: Some(2),
                depth: Some(2),
                codim: 2,
                e: 3,
                reg: Some(1)
            }
        );

        let plane = Ring::with_vars(&["x", "y"]).unwrap();
        let square: Vec<Polynomial> = ["x^2", "x*y", "y^2"]
            .iter()
            .map(|g| parse_polynomial(g, &plane).unwrap())
            .collect();
        let inv = ideal_invariants(&plane, &square).unwrap();
        assert_eq!((inv.mu, inv.a, inv.dim, inv.e), (3, Some(2), Some(0), 3));

        let zero = ideal_invariants(&plane, &[]).unwrap();
        assert_eq!((zero.mu, zero.a, zero.dim), (0, None, Some(2)));
    }
}
