//! Comparisons of the Gröbner-side numbers with the dense linear algebra oracle.

use std::collections::BTreeMap;

use super::context::EntryContext;
use super::report::{Quantity, Verdict, VerificationReport};
use crate::duality::{GreenTable, LinearSystem};
use crate::error::Result;
use crate::module::{GradedMatrix, PresentedModule};
use crate::oracle::{free_homology_dim, DenseMap, DenseModule};
use crate::poly::Polynomial;

type Dims = BTreeMap<String, i64>;

fn compare(ctx: &EntryContext, instance: &str, fast: Dims, dense: Dims) -> VerificationReport {
    let mut rep = VerificationReport::new("oracle", ctx.name())
        .instance(instance)
        .equality(Quantity::Map(fast), Quantity::Map(dense));
    if rep.verdict == Verdict::Falsified {
        rep.verdict = Verdict::OracleMismatch;
    }
    rep
}

fn dense_map(m: &GradedMatrix, ctx: &EntryContext) -> DenseMap {
    let field = ctx.ring().field();
    let columns = (0..m.ncols())
        .map(|k| (0..m.nrows()).map(|b| m.entry(b, k, field)).collect())
        .collect();
    DenseMap {
        source: m.source().to_vec(),
        target: m.target().to_vec(),
        columns,
    }
}

/// Dense copy of a presented module.
pub fn dense_of(m: &PresentedModule) -> Result<DenseModule> {
    let rel = m.relations();
    let field = m.field();
    let columns: Vec<Vec<Polynomial>> = (0..rel.ncols())
        .map(|k| (0..rel.nrows()).map(|b| rel.entry(b, k, field)).collect())
        .collect();
    DenseModule::presented(*field, m.ring().nvars(), m.twists().to_vec(), columns)
}

/// Hilbert function, Betti table and deficiency modules against the oracle.
pub fn structure_checks(ctx: &EntryContext) -> Result<Vec<VerificationReport>> {
    let reg = ctx.regularity().unwrap_or(0);
    let r = ctx.r();

    let mut fast = Dims::new();
    let mut dense = Dims::new();
    for n in 0..=reg + 3 {
        fast.insert(format!("n={n}"), ctx.module.dim_in_degree(n) as i64);
        dense.insert(format!("n={n}"), ctx.oracle.dim(n)? as i64);
    }
    let hilbert = compare(ctx, "hilbert", fast, dense);

    let a = ctx.initial_degree().unwrap_or(0).min(1);
    let mut fast = Dims::new();
    let mut dense = Dims::new();
    for i in 0..=r {
        let lo = if i == 0 { 0 } else { i as i32 - 1 + a };
        for j in lo..=i as i32 + reg + 1 {
            let key = format!("i={i},j={j}");
            fast.insert(key.clone(), ctx.betti.get(i, j) as i64);
            dense.insert(key, ctx.oracle.tor_dim(i, j)? as i64);
        }
    }
    let betti = compare(ctx, "betti", fast, dense);

    let mut fast = Dims::new();
    let mut dense = Dims::new();
    let res = &ctx.resolution;
    let twists = res.twists();
    let field = *ctx.ring().field();
    let rr = r as i32;
    let dual_twists = |k: usize| -> Vec<i32> {
        twists
            .get(k)
            .map_or_else(Vec::new, |t| t.iter().map(|x| rr - x).collect())
    };
    for def in &ctx.deficiency {
        let k = r - def.index;
        let mid = dual_twists(k);
        let Some(&lo) = mid.iter().min() else {
            continue;
        };
        let incoming = if k == 0 {
            DenseMap {
                source: Vec::new(),
                target: mid.clone(),
                columns: Vec::new(),
            }
        } else {
            dense_map(&res.differential(k).dual(rr, &field), ctx)
        };
        let outgoing = if k < res.differentials().len() {
            dense_map(&res.differential(k + 1).dual(rr, &field), ctx)
        } else {
            DenseMap {
                source: mid.clone(),
                target: Vec::new(),
                columns: Vec::new(),
            }
        };
        for n in lo..=lo + 2 {
            let key = format!("K{},n={n}", def.index);
            fast.insert(key.clone(), def.module.dim_in_degree(n) as i64);
            dense.insert(
                key,
                free_homology_dim(field, r, &incoming, &outgoing, n)? as i64,
            );
        }
    }
    let ext = compare(ctx, "ext", fast, dense);

    let mut fast = Dims::new();
    let mut dense = Dims::new();
    for (def, betti) in ctx.deficiency.iter().zip(&ctx.deficiency_betti) {
        let Some(lo) = def.module.twists().iter().min().copied() else {
            continue;
        };
        let reg = betti.regularity().unwrap_or(lo);
        let oracle = dense_of(&def.module)?;
        for i in 0..=r {
            for j in lo + i as i32..=reg + i as i32 + 1 {
                let key = format!("K{},i={i},j={j}", def.index);
                fast.insert(key.clone(), betti.get(i, j) as i64);
                dense.insert(key, oracle.tor_dim(i, j)? as i64);
            }
        }
    }
    let ext_betti = compare(ctx, "ext-betti", fast, dense);
    Ok(vec![hilbert, betti, ext, ext_betti])
}

fn koszul_window(m: &PresentedModule, n_forms: usize) -> Option<(i32, i32)> {
    let lo = m.twists().iter().min()?;
    let hi = match m.finite_hilbert() {
        Some(h) => h.end_degree().unwrap_or(*lo),
        None => lo + 2,
    };
    Some((*lo, hi + n_forms as i32))
}

/// `dim H_i(l; M)_n` for a sampled system.
pub fn koszul_checks(
    ctx: &EntryContext,
    sys: &LinearSystem,
    label: &str,
) -> Result<VerificationReport> {
    let mut fast = Dims::new();
    let mut dense = Dims::new();
    if !ctx.module.is_zero() {
        let (lo, hi) = koszul_window(&ctx.module, sys.len()).expect("nonzero module");
        let hi = hi.min(lo + ctx.regularity().unwrap_or(0) + sys.len() as i32 + 1);
        for i in 0..=sys.len() {
            let h = crate::koszul::koszul_homology(&sys.forms, &ctx.module, i as i64)?;
            for n in lo..=hi {
                let key = format!("i={i},n={n}");
                fast.insert(key.clone(), h.dim_in_degree(n) as i64);
                dense.insert(
                    key,
                    ctx.oracle.koszul_homology_dim(&sys.forms, i, n)? as i64,
                );
            }
        }
    }
    Ok(compare(ctx, &format!("koszul,{label}"), fast, dense))
}

/// Finite dual representatives `N = H^i(l; K^j)` against
/// `dim H_{s-i}(l; K^j)_{n+s}` computed densely.
pub fn green_checks(ctx: &EntryContext, table: &GreenTable) -> Result<VerificationReport> {
    let s = table.system.len();
    let mut fast = Dims::new();
    let mut dense = Dims::new();
    let mut oracles = BTreeMap::new();
    for ((i, j), g) in &table.entries {
        let n_rep = &g.dual_representative;
        let Some(h) = n_rep.finite_hilbert() else {
            continue;
        };
        let k = &ctx.deficiency[*j].module;
        if k.is_zero() {
            continue;
        }
        if !oracles.contains_key(j) {
            oracles.insert(*j, dense_of(k)?);
        }
        let oracle = &oracles[j];
        let (lo, hi) = match (h.initial_degree(), h.end_degree()) {
            (Some(a), Some(b)) => (a - 1, b + 1),
            _ => {
                let t = k.twists().iter().min().copied().unwrap_or(0) - s as i32;
                (t, t + 1)
            }
        };
        for n in lo..=hi {
            let key = format!("i={i},j={j},n={n}");
            fast.insert(key.clone(), n_rep.dim_in_degree(n) as i64);
            dense.insert(
                key,
                oracle.koszul_homology_dim(&table.system.forms, s - i, n + s as i32)? as i64,
            );
        }
    }
    Ok(compare(ctx, &format!("green,s={s}"), fast, dense))
}
