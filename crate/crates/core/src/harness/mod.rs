//! Verifiers for the bounds on generators and syzygies, run over a corpus
//! of ideals and cross-checked by the dense oracle.

pub mod claims;
pub mod context;
pub mod oracle_check;
pub mod report;

use std::collections::BTreeSet;

use rayon::prelude::*;

pub use claims::Reading;
pub use context::{CorpusEntry, EntryContext};
pub use report::{
    reports_to_json, reports_to_text, sort_reports, Hypothesis, Quantity, Verdict,
    VerificationReport,
};

use crate::duality::{green_table_from, LinearSystem};
use crate::error::{Error, Result};
use crate::input::parse_document;

/// Every claim id the harness knows.
pub const CLAIMS: &[&str] = &[
    "oracle", "2.1", "2.2", "3.2", "3.4", "3.6", "3.7a", "3.7b", "4.1", "4.2", "4.3a", "4.3b",
    "4.4", "4.5", "4.6", "5.2", "5.3", "5.4", "5.5", "5.6", "5.7",
];

const SHIPPED: &str = include_str!("../../data/corpus.txt");

/// The shipped corpus file.
pub fn shipped_corpus_text() -> &'static str {
    SHIPPED
}

pub fn shipped_corpus() -> Vec<CorpusEntry> {
    load_corpus(SHIPPED, None).expect("shipped corpus parses")
}

/// Every `ideal` block of a document.
pub fn load_corpus(text: &str, char_override: Option<u32>) -> Result<Vec<CorpusEntry>> {
    let doc = parse_document(text, char_override)?;
    Ok(doc
        .ideals()
        .map(|b| CorpusEntry {
            name: b.name.clone(),
            ring: b.ring.clone(),
            ideal: b.polynomials.clone(),
        })
        .collect())
}

/// Parses a comma separated claim list.
pub fn parse_claims(list: &str) -> std::result::Result<BTreeSet<String>, String> {
    let mut out = BTreeSet::new();
    for id in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let id = id
            .strip_prefix("Thm ")
            .or_else(|| id.strip_prefix("Cor "))
            .unwrap_or(id);
        let id = id.strip_prefix("Lemma ").unwrap_or(id);
        if id == "4.3" {
            out.insert("4.3a".to_string());
            out.insert("4.3b".to_string());
        } else if id == "3.7" {
            out.insert("3.7a".to_string());
            out.insert("3.7b".to_string());
        } else if CLAIMS.contains(&id) {
            out.insert(id.to_string());
        } else {
            return Err(format!("unknown claim id `{id}`"));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub seed: u64,
    /// `None` runs every claim.
    pub claims: Option<BTreeSet<String>>,
    pub readings: Vec<Reading>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            seed: 0,
            claims: None,
            readings: vec![Reading::Literal],
        }
    }
}

impl RunOptions {
    fn wants(&self, ids: &[&str]) -> bool {
        self.claims
            .as_ref()
            .is_none_or(|c| ids.iter().any(|id| c.contains(*id)))
    }
}

/// Runs the selected verifiers on one entry.
pub fn run_entry(ctx: &EntryContext, opts: &RunOptions) -> Result<Vec<VerificationReport>> {
    let seed = opts.seed;
    let r = ctx.r();
    let d = ctx.dim();
    let mut out = Vec::new();
    if opts.wants(&["oracle"]) {
        out.extend(oracle_check::structure_checks(ctx)?);
    }
    if opts.wants(&["2.1", "2.2"]) {
        out.extend(claims::tor_split_bounds(ctx)?);
    }

    if opts.wants(&["3.2", "3.4", "3.6", "3.7a", "3.7b", "oracle"]) && !ctx.module.is_zero() {
        let top = d.max(1) as usize;
        let mut sizes = vec![top];
        if top > 1 {
            sizes.push(1);
        }
        for s in sizes {
            let sys = ctx.sample(s, true, seed)?;
            out.push(claims::koszul_finiteness(ctx, &sys, seed)?);
            let table = green_table_from(&ctx.deficiency, &sys)?;
            out.push(claims::green_finiteness(ctx, &table, seed));
            if s == top {
                out.extend(claims::spectral_corollaries(ctx, &table, seed)?);
            }
            if opts.wants(&["oracle"]) {
                out.push(oracle_check::koszul_checks(ctx, &sys, &format!("s={s}"))?);
                out.push(oracle_check::green_checks(ctx, &table)?);
            }
        }
    } else if ctx.module.is_zero() {
        for id in ["3.2", "3.4", "3.6", "3.7a", "3.7b"] {
            out.push(
                VerificationReport::new(id, ctx.name())
                    .hypothesis(Hypothesis::new("module is nonzero", false))
                    .not_met(),
            );
        }
    }

    if opts.wants(&["4.1", "4.2", "4.3a", "4.3b", "4.4", "4.5", "4.6"]) {
        let applicable = !ctx.module.is_zero() && !ctx.entry.ideal.is_empty() && ctx.codim() >= 2;
        let sys = if applicable {
            ctx.sample(r - 2, true, seed)?
        } else {
            LinearSystem::from_forms(Vec::new(), r)?
        };
        out.extend(claims::dubreil(ctx, &sys, seed)?);
        if applicable && opts.wants(&["oracle"]) {
            out.push(oracle_check::koszul_checks(
                ctx,
                &sys,
                &format!("s={}", r - 2),
            )?);
        }
    }

    if opts.wants(&["5.2"]) {
        out.extend(claims::regularity_tail(ctx));
    }
    if opts.wants(&["5.3"]) && !ctx.module.is_zero() {
        out.push(claims::tor_explained(ctx));
    }
    if opts.wants(&["5.4"]) && !ctx.module.is_zero() {
        out.push(claims::last_betti_nonvanishing(ctx));
    }
    if opts.wants(&["5.5"]) {
        for &reading in &opts.readings {
            out.extend(claims::decomposition(ctx, reading));
        }
    }
    if opts.wants(&["5.6"]) {
        out.extend(claims::canonical_comparison(ctx));
    }
    if opts.wants(&["5.7"]) {
        out.extend(claims::genus_zero_rows(ctx));
    }
    if let Some(c) = &opts.claims {
        out.retain(|r| c.contains(&r.claim));
    }
    Ok(out)
}

/// Runs every selected verifier on every entry; reports are sorted by
/// entry, claim and instance.
pub fn run_corpus(entries: &[CorpusEntry], opts: &RunOptions) -> Result<Vec<VerificationReport>> {
    let per_entry: Vec<Vec<VerificationReport>> = entries
        .par_iter()
        .map(|e| {
            EntryContext::new(e)
                .and_then(|ctx| run_entry(&ctx, opts))
                .map_err(|source| Error::Entry {
                    name: e.name.clone(),
                    source: Box::new(source),
                })
        })
        .collect::<Result<_>>()?;
    let mut all: Vec<VerificationReport> = per_entry.into_iter().flatten().collect();
    sort_reports(&mut all);
    Ok(all)
}
