use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

/// Outcome of one verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Verdict {
    #[serde(rename = "verified")]
    Verified,
    #[serde(rename = "hypothesis-not-met")]
    HypothesisNotMet,
    #[serde(rename = "FALSIFIED")]
    Falsified,
    #[serde(rename = "oracle-mismatch")]
    OracleMismatch,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::HypothesisNotMet => "hypothesis-not-met",
            Verdict::Falsified => "FALSIFIED",
            Verdict::OracleMismatch => "oracle-mismatch",
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, Verdict::Falsified | Verdict::OracleMismatch)
    }
}

/// A side of a claimed (in)equality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Quantity {
    Int(i64),
    Map(BTreeMap<String, i64>),
    /// `e(0) = -∞` and other undefined values; serialized as `null`.
    Undefined,
}

impl Quantity {
    pub fn from_option(v: Option<i32>) -> Self {
        v.map_or(Quantity::Undefined, |x| Quantity::Int(x as i64))
    }

    fn render(&self) -> String {
        match self {
            Quantity::Int(v) => v.to_string(),
            Quantity::Undefined => "-inf".to_string(),
            Quantity::Map(m) if m.is_empty() => "{}".to_string(),
            Quantity::Map(m) => {
                let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}:{v}")).collect();
                let joined = parts.join(" ");
                if joined.len() > 40 {
                    format!("{{{} entries}}", m.len())
                } else {
                    format!("{{{joined}}}")
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Hypothesis {
    pub fn new(name: impl Into<String>, holds: bool) -> Self {
        Hypothesis {
            name: name.into(),
            holds,
            witness: None,
        }
    }

    pub fn with_witness(name: impl Into<String>, holds: bool, witness: impl Into<String>) -> Self {
        Hypothesis {
            name: name.into(),
            holds,
            witness: Some(witness.into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub entry: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    pub hypotheses: Vec<Hypothesis>,
    pub lhs: Quantity,
    pub rhs: Quantity,
    pub verdict: Verdict,
    /// `lhs == rhs` for inequalities; `None` for equalities.
    pub tight: Option<bool>,
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forms: Option<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationReport {
    pub fn new(claim: &str, entry: &str) -> Self {
        VerificationReport {
            claim: claim.to_string(),
            entry: entry.to_string(),
            instance: None,
            hypotheses: Vec::new(),
            lhs: Quantity::Undefined,
            rhs: Quantity::Undefined,
            verdict: Verdict::HypothesisNotMet,
            tight: None,
            seed: None,
            forms: None,
            note: None,
        }
    }

    pub fn instance(mut self, s: impl Into<String>) -> Self {
        self.instance = Some(s.into());
        self
    }

    pub fn hypothesis(mut self, h: Hypothesis) -> Self {
        self.hypotheses.push(h);
        self
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.note = Some(n.into());
        self
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|h| h.holds)
    }

    /// Closes an equality claim.
    pub fn equality(mut self, lhs: Quantity, rhs: Quantity) -> Self {
        self.verdict = if !self.hypotheses_hold() {
            Verdict::HypothesisNotMet
        } else if lhs == rhs {
            Verdict::Verified
        } else {
            Verdict::Falsified
        };
        self.lhs = lhs;
        self.rhs = rhs;
        self
    }

    /// Closes an inequality `lhs ≤ rhs` on integers.
    pub fn at_most(mut self, lhs: i64, rhs: i64) -> Self {
        self.verdict = if !self.hypotheses_hold() {
            Verdict::HypothesisNotMet
        } else if lhs <= rhs {
            Verdict::Verified
        } else {
            Verdict::Falsified
        };
        self.tight = self.hypotheses_hold().then_some(lhs == rhs);
        self.lhs = Quantity::Int(lhs);
        self.rhs = Quantity::Int(rhs);
        self
    }

    /// Closes a family of inequalities `lhs[k] ≤ rhs[k]`.
    pub fn pointwise_at_most(
        mut self,
        lhs: BTreeMap<String, i64>,
        rhs: BTreeMap<String, i64>,
    ) -> Self {
        let ok = lhs
            .iter()
            .all(|(k, v)| *v <= rhs.get(k).copied().unwrap_or(0));
        self.verdict = if !self.hypotheses_hold() {
            Verdict::HypothesisNotMet
        } else if ok {
            Verdict::Verified
        } else {
            Verdict::Falsified
        };
        self.tight = self.hypotheses_hold().then_some(lhs == rhs);
        self.lhs = Quantity::Map(lhs);
        self.rhs = Quantity::Map(rhs);
        self
    }

    /// Marks the report as not applicable with the inputs recorded.
    pub fn not_met(mut self) -> Self {
        self.verdict = Verdict::HypothesisNotMet;
        self
    }

    pub fn seeded(mut self, seed: u64, forms: &[Vec<u32>]) -> Self {
        self.seed = Some(seed);
        self.forms = Some(forms.to_vec());
        self
    }

    fn sort_key(&self) -> (String, String, String, Option<u64>) {
        (
            self.entry.clone(),
            self.claim.clone(),
            self.instance.clone().unwrap_or_default(),
            self.seed,
        )
    }
}

/// Deterministic report order: entry, claim, instance, seed.
pub fn sort_reports(reports: &mut [VerificationReport]) {
    reports.sort_by_key(|r| r.sort_key());
}

pub fn reports_to_json(reports: &[VerificationReport]) -> String {
    serde_json::to_string_pretty(reports).expect("plain data")
}

pub fn reports_to_text(reports: &[VerificationReport]) -> String {
    let header = [
        "entry", "claim", "instance", "verdict", "lhs", "rhs", "tight",
    ];
    let rows: Vec<[String; 7]> = reports
        .iter()
        .map(|r| {
            [
                r.entry.clone(),
                r.claim.clone(),
                r.instance.clone().unwrap_or_default(),
                r.verdict.as_str().to_string(),
                r.lhs.render(),
                r.rhs.render(),
                r.tight.map_or(
                    String::new(),
                    |t| if t { "yes".into() } else { "no".into() },
                ),
            ]
        })
        .collect();
    let mut width = header.map(|h| h.len());
    for row in &rows {
        for (w, c) in width.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(&mut out, &header.map(String::from));
    for row in &rows {
        line(&mut out, row);
    }
    let failures = reports.iter().filter(|r| r.verdict.is_failure()).count();
    let _ = writeln!(out, "{} reports, {} failures", reports.len(), failures);
    out
}
