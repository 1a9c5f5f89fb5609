use std::collections::BTreeMap;

use super::context::EntryContext;
use super::report::{Hypothesis, Quantity, Verdict, VerificationReport};
use crate::duality::{green_table_from, GreenTable, LinearSystem};
use crate::error::{Error, Result};
use crate::koszul::{Direction, KoszulComplex};
use crate::module::PresentedModule;
use crate::poly::Polynomial;

type Dims = BTreeMap<String, i64>;

fn finite_length(m: &PresentedModule, what: &str) -> Result<usize> {
    m.finite_hilbert()
        .map(|h| h.length())
        .ok_or_else(|| Error::Invariant(format!("{what} is not of finite length")))
}

fn homology(forms: &[Polynomial], m: &PresentedModule) -> Result<Vec<PresentedModule>> {
    KoszulComplex::new(forms, m, Direction::Homological)?.all_homology()
}

fn hf_dims(m: &PresentedModule) -> Dims {
    m.finite_hilbert()
        .map(|h| {
            h.dims()
                .iter()
                .map(|(n, d)| (n.to_string(), *d as i64))
                .collect()
        })
        .unwrap_or_default()
}

fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn nonzero(ctx: &EntryContext) -> Hypothesis {
    Hypothesis::new("module is nonzero", !ctx.module.is_zero())
}

/// `dim Tor_n(K, M) ≤ Σ dim H_i(x; H_{n-i}(y; M))` for every split of the
/// variables, plus its `n = 1` case.
pub fn tor_split_bounds(ctx: &EntryContext) -> Result<Vec<VerificationReport>> {
    let r = ctx.r();
    let vars = ctx.ring().variables();
    let mut out = Vec::new();
    for split in 1..r {
        let (x, y) = vars.split_at(split);
        let hy = homology(y, &ctx.module)?;
        let mut table: Vec<Vec<usize>> = Vec::new();
        for (j, h) in hy.iter().enumerate() {
            let hx = homology(x, h)?;
            let lens = hx
                .iter()
                .enumerate()
                .map(|(i, m)| finite_length(m, &format!("H_{i}(x; H_{j}(y; M))")))
                .collect::<Result<Vec<_>>>()?;
            table.push(lens);
        }
        let term = |i: usize, j: usize| -> i64 {
            table.get(j).and_then(|t| t.get(i)).copied().unwrap_or(0) as i64
        };
        let mut lhs = Dims::new();
        let mut rhs = Dims::new();
        for n in 0..=r {
            let lo = n.saturating_sub(r - split);
            let hi = split.min(n);
            let bound: i64 = (lo..=hi).map(|i| term(i, n - i)).sum();
            lhs.insert(format!("n={n}"), ctx.betti.rank(n) as i64);
            rhs.insert(format!("n={n}"), bound);
        }
        out.push(
            VerificationReport::new("2.1", ctx.name())
                .instance(format!("split={split}"))
                .pointwise_at_most(lhs, rhs),
        );
        out.push(
            VerificationReport::new("2.2", ctx.name())
                .instance(format!("split={split}"))
                .at_most(ctx.betti.rank(1) as i64, term(0, 1) + term(1, 0)),
        );
    }
    Ok(out)
}

/// Finite length of `H^i(l; M)` for `i < s`, and for all `i` when `s ≥ dim M`.
pub fn koszul_finiteness(
    ctx: &EntryContext,
    sys: &LinearSystem,
    seed: u64,
) -> Result<VerificationReport> {
    let s = sys.len();
    let coh =
        KoszulComplex::new(&sys.forms, &ctx.module, Direction::Cohomological)?.all_homology()?;
    let d = ctx.dim();
    let mut expected = 0;
    let mut finite = 0;
    let mut witness = None;
    for (i, h) in coh.iter().enumerate() {
        if i < s || s as i32 >= d {
            expected += 1;
            if h.has_finite_length() {
                finite += 1;
            } else if witness.is_none() {
                witness = Some(format!("H^{i} has dimension {}", h.krull_dim()));
            }
        }
    }
    let mut rep = VerificationReport::new("3.2", ctx.name())
        .instance(format!("s={s}"))
        .hypothesis(Hypothesis::new(
            "system certified generic",
            sys.certificate != crate::duality::Certificate::None,
        ))
        .equality(Quantity::Int(expected), Quantity::Int(finite))
        .seeded(seed, &sys.coefficients);
    if let Some(w) = witness {
        rep = rep.note(w);
    }
    Ok(rep)
}

/// Finite length of the Green modules in the guaranteed cases.
pub fn green_finiteness(ctx: &EntryContext, table: &GreenTable, seed: u64) -> VerificationReport {
    let expected = table
        .entries
        .values()
        .filter(|g| g.finiteness_expected)
        .count() as i64;
    let finite = table
        .entries
        .values()
        .filter(|g| g.finiteness_expected && g.is_finite())
        .count() as i64;
    let violations = table.finiteness_violations();
    let mut rep = VerificationReport::new("3.4", ctx.name())
        .instance(format!("s={}", table.system.len()))
        .hypothesis(Hypothesis::new(
            "system certified strongly generic",
            table.system.certificate == crate::duality::Certificate::Strong,
        ))
        .equality(Quantity::Int(expected), Quantity::Int(finite))
        .seeded(seed, &table.system.coefficients);
    if !violations.is_empty() {
        rep = rep.note(format!("infinite cells (i, j): {violations:?}"));
    }
    rep
}

fn green_length(table: &GreenTable, i: usize, j: usize) -> Result<i64> {
    match table.get(i, j) {
        None => Ok(0),
        Some(g) => g.length().map(|l| l as i64).ok_or_else(|| {
            Error::Invariant(format!("Green module ({i}, {j}) is not of finite length"))
        }),
    }
}

/// Length bound from the spectral sequence, and the two degeneration
/// isomorphisms, for a system with `s ≥ dim M`.
pub fn spectral_corollaries(
    ctx: &EntryContext,
    table: &GreenTable,
    seed: u64,
) -> Result<Vec<VerificationReport>> {
    let sys = &table.system;
    let s = sys.len();
    let d = ctx.dim();
    let enough = Hypothesis::new("s >= dim M", s as i32 >= d);
    let strong = Hypothesis::new(
        "system certified strongly generic",
        sys.certificate == crate::duality::Certificate::Strong,
    );
    let inst = format!("s={s}");
    let mut out = Vec::new();
    if ctx.module.is_zero() || (s as i32) < d {
        for claim in ["3.6", "3.7a", "3.7b"] {
            out.push(
                VerificationReport::new(claim, ctx.name())
                    .instance(inst.clone())
                    .hypothesis(nonzero(ctx))
                    .hypothesis(enough.clone())
                    .not_met()
                    .seeded(seed, &sys.coefficients),
            );
        }
        return Ok(out);
    }
    let d = d as usize;
    let hl = homology(&sys.forms, &ctx.module)?;

    let mut lhs = Dims::new();
    let mut rhs = Dims::new();
    for (n, h) in hl.iter().enumerate() {
        lhs.insert(format!("n={n}"), finite_length(h, "H_n(l; M)")? as i64);
        let mut bound = 0;
        for i in 0..=(s - n).min(d) {
            bound += green_length(table, n + i, i)?;
        }
        rhs.insert(format!("n={n}"), bound);
    }
    out.push(
        VerificationReport::new("3.6", ctx.name())
            .instance(inst.clone())
            .hypothesis(enough.clone())
            .hypothesis(strong.clone())
            .pointwise_at_most(lhs, rhs)
            .seeded(seed, &sys.coefficients),
    );

    let t = ctx.depth().expect("nonzero module");
    let green_dims = |i: usize, j: usize| {
        table
            .get(i, j)
            .and_then(|g| g.hilbert())
            .map_or_else(Dims::new, |h| {
                h.dims()
                    .iter()
                    .map(|(n, d)| (n.to_string(), *d as i64))
                    .collect()
            })
    };
    out.push(
        VerificationReport::new("3.7a", ctx.name())
            .instance(format!("{inst},t={t}"))
            .hypothesis(enough.clone())
            .equality(
                Quantity::Map(hf_dims(&hl[s - t])),
                Quantity::Map(green_dims(s, t)),
            )
            .seeded(seed, &sys.coefficients),
    );

    let cm = Hypothesis::new("Cohen-Macaulay", ctx.is_cohen_macaulay());
    let mut lhs = Dims::new();
    let mut rhs = Dims::new();
    if ctx.is_cohen_macaulay() {
        for i in 0..=s {
            if i >= d {
                for (n, v) in hf_dims(&hl[i - d]) {
                    lhs.insert(format!("i={i},n={n}"), v);
                }
            }
            for (n, v) in green_dims(i, d) {
                rhs.insert(format!("i={i},n={n}"), v);
            }
        }
    }
    out.push(
        VerificationReport::new("3.7b", ctx.name())
            .instance(inst)
            .hypothesis(enough)
            .hypothesis(cm)
            .equality(Quantity::Map(lhs), Quantity::Map(rhs))
            .seeded(seed, &sys.coefficients),
    );
    Ok(out)
}

/// The generator bounds, with `y` a strongly generic system of `r - 2` forms.
pub fn dubreil(
    ctx: &EntryContext,
    sys: &LinearSystem,
    seed: u64,
) -> Result<Vec<VerificationReport>> {
    let r = ctx.r();
    let ids = ["4.1", "4.2", "4.3a", "4.3b", "4.4", "4.5", "4.6"];
    let proper = Hypothesis::new(
        "ideal is nonzero and proper",
        !ctx.entry.ideal.is_empty() && !ctx.module.is_zero(),
    );
    let codim2 = Hypothesis::new("codim I >= 2", ctx.codim() >= 2 && proper.holds);
    let base = |id: &str| {
        VerificationReport::new(id, ctx.name())
            .hypothesis(proper.clone())
            .hypothesis(codim2.clone())
    };
    if !codim2.holds || r < 2 || sys.len() != r - 2 {
        return Ok(ids
            .iter()
            .map(|id| base(id).not_met().seeded(seed, &sys.coefficients))
            .collect());
    }
    let d = ctx.dim() as usize;
    let s = sys.len();
    let mu = ctx.mu_ideal() as i64;
    let a = ctx.initial_degree().expect("nonzero ideal") as i64;
    let table = green_table_from(&ctx.deficiency, sys)?;
    let green = |i: usize, j: usize| table.get(i, j);
    let mut out = Vec::new();

    let h1 = homology(&sys.forms, &ctx.module)?;
    let mu_h1 = h1.get(1).map_or(0, |h| h.mu()) as i64;
    out.push(base("4.1").at_most(mu, a + 1 + mu_h1));

    let t = ctx.depth().expect("nonzero module");
    let mu_green = green(t + 1, t).map_or(0, |g| g.mu()) as i64;
    out.push(
        base("4.2")
            .hypothesis(Hypothesis::with_witness(
                "depth recorded",
                true,
                format!("t={t}"),
            ))
            .at_most(mu, a + 1 + mu_green),
    );

    let mut sum = 0;
    for i in 0..=d {
        if i < s {
            sum += green_length(&table, i + 1, i)?;
        }
    }
    out.push(base("4.3a").at_most(mu, a + 1 + sum));

    let finite_below = (0..d).all(|i| ctx.deficiency[i].module.has_finite_length());
    let rep = base("4.3b").hypothesis(Hypothesis::new(
        "H^i_m(R/I) of finite length for i < d",
        finite_below,
    ));
    if finite_below {
        let mut bound = a + 1;
        for i in 0..d {
            let len = finite_length(&ctx.deficiency[i].module, "K^i")? as i64;
            bound += binomial(r - 2, i + 1) * len;
        }
        if d < s {
            bound += green_length(&table, d + 1, d)?;
        }
        out.push(rep.at_most(mu, bound));
    } else {
        out.push(rep.not_met());
    }

    let cm = ctx.is_cohen_macaulay();
    let codim = ctx.codim();
    let perfect3 = |rep: VerificationReport| {
        rep.hypothesis(Hypothesis::new("R/I Cohen-Macaulay (I perfect)", cm))
            .hypothesis(Hypothesis::new("codim I >= 3", codim >= 3))
    };
    let socle = green(d + 1, d).map_or(0, |g| g.mu()) as i64;
    let rep = perfect3(base("4.4"));
    out.push(if rep.hypotheses_hold() {
        rep.at_most(mu, a + 1 + socle)
    } else {
        rep.not_met()
    });

    let top = ctx.betti.rank(codim as usize);
    let rep = perfect3(base("4.5"))
        .hypothesis(Hypothesis::new("codim I = 3", codim == 3))
        .hypothesis(Hypothesis::with_witness(
            "R/I Gorenstein",
            cm && top == 1,
            format!("last Betti number {top}"),
        ));
    out.push(if rep.hypotheses_hold() {
        rep.at_most(mu, 2 * a + 1)
    } else {
        rep.not_met()
    });

    let e = ctx.module.hilbert().multiplicity;
    let rep = perfect3(base("4.6")).hypothesis(Hypothesis::new("codim I = 3", codim == 3));
    out.push(if rep.hypotheses_hold() {
        rep.at_most(mu, a + 1 + e)
    } else {
        rep.not_met()
    });

    Ok(out
        .into_iter()
        .map(|r| r.seeded(seed, &sys.coefficients))
        .collect())
}

/// Regularity from the first `s + 1` local cohomology modules against the
/// tail of the Betti table.
pub fn regularity_tail(ctx: &EntryContext) -> Vec<VerificationReport> {
    if ctx.module.is_zero() {
        return vec![VerificationReport::new("5.2", ctx.name())
            .hypothesis(nonzero(ctx))
            .not_met()];
    }
    let r = ctx.r();
    let d = ctx.dim() as usize;
    let mut out = Vec::new();
    for s in 0..=d {
        let a = (0..=s)
            .filter_map(|i| ctx.local_end(i).map(|e| e + i as i32))
            .max();
        let b = ctx.betti.regularity_between(r.saturating_sub(s), r);
        out.push(
            VerificationReport::new("5.2", ctx.name())
                .instance(format!("s={s}"))
                .equality(Quantity::from_option(a), Quantity::from_option(b)),
        );
    }
    let c = r - d;
    out.push(
        VerificationReport::new("5.2", ctx.name())
            .instance("s=dim,full")
            .equality(
                Quantity::from_option(ctx.betti.regularity_between(c, r)),
                Quantity::from_option(ctx.regularity()),
            ),
    );
    let cm = Hypothesis::new("Cohen-Macaulay", ctx.is_cohen_macaulay());
    out.push(
        VerificationReport::new("5.2", ctx.name())
            .instance("cm-collapse")
            .hypothesis(cm)
            .equality(
                Quantity::from_option(ctx.regularity()),
                Quantity::from_option(ctx.betti.end(c).map(|e| e - c as i32)),
            ),
    );
    out
}

/// Every nonzero `Tor_s(K, M)_{s+t}` with `r - i ≤ s` is explained by some
/// `H^j_m(M)_{t-j} ≠ 0`, `j ≤ i`.
pub fn tor_explained(ctx: &EntryContext) -> VerificationReport {
    let r = ctx.r();
    let mut checked = 0;
    let mut explained = 0;
    let mut witness = None;
    for (s, n, _) in ctx.betti.entries() {
        let t = n - s as i32;
        for i in (r - s)..=r {
            checked += 1;
            if (0..=i).any(|j| ctx.local_dim(j as i64, t - j as i32) > 0) {
                explained += 1;
            } else if witness.is_none() {
                witness = Some(format!("s={s}, t={t}, i={i}"));
            }
        }
    }
    let rep = VerificationReport::new("5.3", ctx.name())
        .equality(Quantity::Int(checked), Quantity::Int(explained));
    match witness {
        Some(w) => rep.note(format!("unexplained: {w}")),
        None => rep,
    }
}

/// A socle generator of `H^s_m(M)` in degree `b - s` with the vanishing
/// condition below forces `Tor_{r-s}(K, M)_{b+r-s} ≠ 0`.
pub fn last_betti_nonvanishing(ctx: &EntryContext) -> VerificationReport {
    let r = ctx.r();
    let mut applicable = 0;
    let mut concluded = 0;
    let mut witness = None;
    for (s, betti) in ctx.deficiency_betti.iter().enumerate() {
        let generators: Vec<i32> = betti.entries().filter(|e| e.0 == 0).map(|e| e.1).collect();
        for g in generators {
            let b = s as i32 - g;
            let below = (0..s).all(|i| ctx.local_dim(i as i64, b + 1 - i as i32) == 0);
            if !below {
                continue;
            }
            applicable += 1;
            if ctx.betti.get(r - s, b + (r - s) as i32) > 0 {
                concluded += 1;
            } else if witness.is_none() {
                witness = Some(format!("s={s}, b={b}"));
            }
        }
    }
    let rep = VerificationReport::new("5.4", ctx.name())
        .equality(Quantity::Int(applicable), Quantity::Int(concluded))
        .note(
            "condition (b) evaluated as beta_{0,s-b}(K^s) != 0, i.e. dim H_r(m; H^s_m(M))_{b+r-s} \
             through dim H^r(m; K^s)_{s+b-r}",
        );
    match witness {
        Some(w) => rep.note(format!("conclusion fails at {w}")),
        None => rep,
    }
}

/// How the second alternative in the decomposition hypothesis is indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reading {
    /// Degrees `j + 1 - q` and `j - 1 - q`, as printed.
    Literal,
    /// Degrees `j + 1 - p` and `j - 1 - p`.
    PIndexed,
}

impl Reading {
    fn name(&self) -> &'static str {
        match self {
            Reading::Literal => "literal",
            Reading::PIndexed => "p-indexed",
        }
    }
}

/// First `q` at which neither alternative holds.
fn decomposition_failure(ctx: &EntryContext, j: i32, reading: Reading) -> Option<usize> {
    let d = ctx.dim() as usize;
    (0..=d).find(|&q| {
        let qi = q as i32;
        let a = ctx.local_dim(q as i64, j - qi) == 0;
        let shift = |p: usize| match reading {
            Reading::Literal => qi,
            Reading::PIndexed => p as i32,
        };
        let b = (0..q).all(|p| ctx.local_dim(p as i64, j + 1 - shift(p)) == 0)
            && (q + 1..=d).all(|p| ctx.local_dim(p as i64, j - 1 - shift(p)) == 0);
        !(a || b)
    })
}

fn decomposition_window(ctx: &EntryContext) -> std::ops::RangeInclusive<i32> {
    -2..=ctx.regularity().unwrap_or(0) + 2
}

/// Betti numbers of `M` in row `j` from the Tor of the local cohomology.
pub fn decomposition(ctx: &EntryContext, reading: Reading) -> Vec<VerificationReport> {
    if ctx.module.is_zero() {
        return vec![VerificationReport::new("5.5", ctx.name())
            .hypothesis(nonzero(ctx))
            .not_met()];
    }
    let r = ctx.r();
    let d = ctx.dim() as usize;
    let mut out = Vec::new();
    for j in decomposition_window(ctx) {
        let failure = decomposition_failure(ctx, j, reading);
        let hyp = match failure {
            None => Hypothesis::new("vanishing alternative holds for every q", true),
            Some(q) => Hypothesis::with_witness(
                "vanishing alternative holds for every q",
                false,
                format!("q={q}"),
            ),
        };
        let rep = VerificationReport::new("5.5", ctx.name())
            .instance(format!("j={j},reading={}", reading.name()))
            .hypothesis(hyp);
        if failure.is_some() {
            out.push(rep.not_met());
            continue;
        }
        let mut lhs = Dims::new();
        let mut rhs = Dims::new();
        for s in 0..=r {
            let key = format!("s={s}");
            lhs.insert(key.clone(), ctx.betti.get(s, s as i32 + j) as i64);
            let sum: usize = (0..=d).map(|i| ctx.tor_of_local(i, s as i64, j)).sum();
            rhs.insert(key, sum as i64);
        }
        out.push(rep.equality(Quantity::Map(lhs), Quantity::Map(rhs)));
    }
    out
}

/// Betti numbers of `M` against those of the canonical module.
pub fn canonical_comparison(ctx: &EntryContext) -> Vec<VerificationReport> {
    if ctx.module.is_zero() {
        return vec![VerificationReport::new("5.6", ctx.name())
            .hypothesis(nonzero(ctx))
            .not_met()];
    }
    let r = ctx.r() as i64;
    let d = ctx.dim() as usize;
    let c = r - d as i64;
    let canonical = |s: i64, j: i32| ctx.deficiency_beta(d, c - s, (r - s) as i32 - j) as i64;
    let mut out = Vec::new();
    for j in decomposition_window(ctx) {
        let vanish = (0..d).find(|&q| {
            ctx.local_dim(q as i64, j - q as i32) > 0
                || ctx.local_dim(q as i64, j + 1 - q as i32) > 0
        });
        let hyp = match vanish {
            None => Hypothesis::new(
                "H^q_m(M) vanishes in degrees j-q, j+1-q for q < dim M",
                true,
            ),
            Some(q) => Hypothesis::with_witness(
                "H^q_m(M) vanishes in degrees j-q, j+1-q for q < dim M",
                false,
                format!("q={q}"),
            ),
        };
        let rep = VerificationReport::new("5.6", ctx.name())
            .instance(format!("j={j}"))
            .hypothesis(hyp);
        if vanish.is_some() {
            out.push(rep.not_met());
            continue;
        }
        let mut lhs = Dims::new();
        let mut rhs = Dims::new();
        for s in 0..=r {
            lhs.insert(
                format!("s={s}"),
                ctx.betti.get(s as usize, s as i32 + j) as i64,
            );
            rhs.insert(format!("s={s}"), canonical(s, j));
        }
        out.push(rep.equality(Quantity::Map(lhs), Quantity::Map(rhs)));
    }

    // whole-table comparison for Cohen-Macaulay modules
    let cm = Hypothesis::new("Cohen-Macaulay", ctx.is_cohen_macaulay());
    let rep = VerificationReport::new("5.6", ctx.name())
        .instance("cm-table")
        .hypothesis(cm);
    if !ctx.is_cohen_macaulay() {
        out.push(rep.not_met());
        return out;
    }
    let mut lhs = Dims::new();
    for (s, n, b) in ctx.betti.entries() {
        lhs.insert(format!("s={s},j={}", n - s as i32), b as i64);
    }
    let mut rhs = Dims::new();
    for (k, n, b) in ctx.deficiency_betti[d].entries() {
        let s = c - k as i64;
        let j = (r - s) as i32 - n;
        rhs.insert(format!("s={s},j={j}"), b as i64);
    }
    out.push(rep.equality(Quantity::Map(lhs), Quantity::Map(rhs)));
    out
}

/// The genus-zero curve decomposition: rows `j ≥ 3` of the Betti table come
/// from the first local cohomology alone.
pub fn genus_zero_rows(ctx: &EntryContext) -> Vec<VerificationReport> {
    let d = ctx.dim();
    let two = Hypothesis::new("dim R/I = 2", d == 2);
    let mut rep = VerificationReport::new("5.7", ctx.name()).hypothesis(two);
    if d != 2 {
        return vec![rep.not_met()];
    }
    let k0 = &ctx.deficiency[0].module;
    let k1 = &ctx.deficiency[1].module;
    let k2 = &ctx.deficiency[2].module;
    // H^1_n = 0 for n ≤ 0 means K^1 vanishes in degrees ≥ 0
    let h1_low = k1.is_zero()
        || k1
            .finite_hilbert()
            .is_some_and(|h| h.end_degree().is_some_and(|e| e < 0));
    // H^2_n = 0 for n ≥ 0 means K^2 vanishes in degrees ≤ 0
    let h2_high = k2.hilbert().least_degree().is_none_or(|a| a > 0);
    rep = rep
        .hypothesis(Hypothesis::new("H^0_m(R/I) = 0", k0.is_zero()))
        .hypothesis(Hypothesis::new("H^1_m(R/I)_n = 0 for n <= 0", h1_low))
        .hypothesis(Hypothesis::new("H^2_m(R/I)_n = 0 for n >= 0", h2_high));
    if !rep.hypotheses_hold() {
        return vec![rep.not_met()];
    }
    let r = ctx.r();
    let hi = ctx.regularity().unwrap_or(0) + 2;
    let mut lhs = Dims::new();
    let mut rhs = Dims::new();
    let mut canonical = Dims::new();
    for s in 1..=r {
        for j in 3..=hi {
            let key = format!("s={s},j={j}");
            lhs.insert(key.clone(), ctx.betti.get(s, s as i32 + j) as i64);
            rhs.insert(key.clone(), ctx.tor_of_local(1, s as i64, j) as i64);
            canonical.insert(key, ctx.tor_of_local(2, s as i64, j) as i64);
        }
    }
    let zeros: Dims = canonical.keys().map(|k| (k.clone(), 0)).collect();
    let canonical_rep = VerificationReport {
        instance: Some("canonical-term".into()),
        ..rep.clone()
    }
    .equality(Quantity::Map(canonical), Quantity::Map(zeros));
    vec![
        rep.instance("rows")
            .equality(Quantity::Map(lhs), Quantity::Map(rhs)),
        canonical_rep,
    ]
}

/// Whether a report set contains a failure.
pub fn any_failure(reports: &[VerificationReport]) -> bool {
    reports.iter().any(|r| r.verdict.is_failure())
}

/// Counts of each verdict.
pub fn verdict_counts(reports: &[VerificationReport]) -> BTreeMap<Verdict, usize> {
    let mut m = BTreeMap::new();
    for r in reports {
        *m.entry(r.verdict).or_insert(0) += 1;
    }
    m
}
