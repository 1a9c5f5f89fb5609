//! Line-oriented input files.
//!
//! ```text
//! ring: char=32003, vars=[x,y,z,w]
//! ideal twisted_cubic:
//!   x*z - y^2
//!   y*w - z^2
//!   x*w - y*z
//! forms hyperplanes:
//!   x + w
//! ```
//!
//! A file may contain several `ring:` headers; every block refers to the
//! most recent one. `#` starts a comment.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::poly::{parse_polynomial, Polynomial, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    Ideal,
    Forms,
}

/// A named list of homogeneous polynomials.
#[derive(Clone, Debug)]
pub struct Block {
    pub kind: BlockKind,
    pub name: String,
    pub ring: Ring,
    pub polynomials: Vec<Polynomial>,
    /// Line of the block header (1-based).
    pub line: usize,
}

#[derive(Clone, Debug, Default)]
pub struct InputDocument {
    pub blocks: Vec<Block>,
}

impl InputDocument {
    pub fn ideals(&self) -> impl Iterator<Item = &Block> {
        self.blocks.iter().filter(|b| b.kind == BlockKind::Ideal)
    }

    pub fn ideal(&self, name: &str) -> Option<&Block> {
        self.ideals().find(|b| b.name == name)
    }

    pub fn forms(&self, name: &str) -> Option<&Block> {
        self.blocks
            .iter()
            .find(|b| b.kind == BlockKind::Forms && b.name == name)
    }
}

fn input_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Input {
        line,
        msg: msg.into(),
    }
}

fn parse_ring(rest: &str, line: usize, char_override: Option<u32>) -> Result<Ring> {
    let mut p = None;
    let mut vars = None;
    let mut rest = rest.trim();
    while !rest.is_empty() {
        let (key, after) = rest
            .split_once('=')
            .ok_or_else(|| input_error(line, "expected key=value in ring header"))?;
        let after = after.trim_start();
        let (value, tail) = if let Some(list) = after.strip_prefix('[') {
            let (inside, tail) = list
                .split_once(']')
                .ok_or_else(|| input_error(line, "unterminated variable list"))?;
            (inside, tail)
        } else {
            after.split_once(',').unwrap_or((after, ""))
        };
        match key.trim() {
            "char" => {
                p = Some(value.trim().parse::<u32>().map_err(|_| {
                    input_error(line, format!("bad characteristic `{}`", value.trim()))
                })?)
            }
            "vars" => {
                vars = Some(
                    value
                        .split(',')
                        .map(|v| v.trim().to_string())
                        .collect::<Vec<_>>(),
                )
            }
            other => return Err(input_error(line, format!("unknown ring key `{other}`"))),
        }
        rest = tail.trim_start().trim_start_matches(',').trim_start();
    }
    let vars = vars.ok_or_else(|| input_error(line, "ring header needs vars=[...]"))?;
    let p = char_override
        .or(p)
        .unwrap_or(PrimeField::default().characteristic());
    let field = PrimeField::new(p).map_err(|e| input_error(line, e.to_string()))?;
    Ring::new(field, vars).map_err(|e| input_error(line, e.to_string()))
}

/// Parses a document; `char_override` replaces every header's characteristic.
pub fn parse_document(text: &str, char_override: Option<u32>) -> Result<InputDocument> {
    let mut doc = InputDocument::default();
    let mut ring: Option<Ring> = None;
    let mut names = BTreeSet::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let indented = content.starts_with(' ') || content.starts_with('\t');
        let trimmed = content.trim();
        if indented {
            let block = doc
                .blocks
                .last_mut()
                .ok_or_else(|| input_error(line, "polynomial outside of a block"))?;
            let f = parse_polynomial(trimmed, &block.ring)
                .map_err(|e| input_error(line, e.to_string()))?;
            if !f.is_homogeneous() {
                return Err(input_error(line, format!("`{trimmed}` is not homogeneous")));
            }
            if !f.is_zero() {
                block.polynomials.push(f);
            }
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("ring:") {
            ring = Some(parse_ring(rest, line, char_override)?);
            continue;
        }
        let (kind, rest) = if let Some(rest) = trimmed.strip_prefix("ideal ") {
            (BlockKind::Ideal, rest)
        } else if let Some(rest) = trimmed.strip_prefix("forms ") {
            (BlockKind::Forms, rest)
        } else {
            return Err(input_error(line, format!("unrecognized line `{trimmed}`")));
        };
        let name = rest
            .strip_suffix(':')
            .ok_or_else(|| input_error(line, "block header must end with `:`"))?
            .trim();
        if name.is_empty()
            || !name
                .chars()
                .all(|c| c.is_alphanumeric() || c == '_' || c == '-')
        {
            return Err(input_error(line, format!("invalid block name `{name}`")));
        }
        if !names.insert((kind == BlockKind::Ideal, name.to_string())) {
            return Err(input_error(line, format!("duplicate name `{name}`")));
        }
        let ring = ring
            .clone()
            .ok_or_else(|| input_error(line, "block before any ring header"))?;
        doc.blocks.push(Block {
            kind,
            name: name.to_string(),
            ring,
            polynomials: Vec::new(),
            line,
        });
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# sample
ring: char=101, vars=[x,y,z,w]
ideal twisted_cubic:
  x*z - y^2
  y*w - z^2   # trailing comment
  x*w - y*z
ideal zero:
forms lines:
  x + w
ring: vars=[a,b]
ideal ci:
  a^2
  b^3
";

    #[test]
    fn parses_blocks_and_rings() {
        let doc = parse_document(SAMPLE, None).unwrap();
        let cubic = doc.ideal("twisted_cubic").unwrap();
        assert_eq!(cubic.polynomials.len(), 3);
        assert_eq!(cubic.ring.field().characteristic(), 101);
        assert!(doc.ideal("zero").unwrap().polynomials.is_empty());
        assert_eq!(doc.forms("lines").unwrap().polynomials.len(), 1);
        let ci = doc.ideal("ci").unwrap();
        assert_eq!(ci.ring.nvars(), 2);
        assert_eq!(ci.ring.field().characteristic(), 32003);
        assert_eq!(doc.ideals().count(), 3);
    }

    #[test]
    fn characteristic_override() {
        let doc = parse_document(SAMPLE, Some(7)).unwrap();
        assert!(doc
            .blocks
            .iter()
            .all(|b| b.ring.field().characteristic() == 7));
    }

    #[test]
    fn inhomogeneous_entry_reports_line() {
        let text = "ring: vars=[x,y]\nideal bad:\n  x^2\n  x + y^2\n";
        assert_eq!(
            parse_document(text, None).unwrap_err(),
            Error::Input {
                line: 4,
                msg: "`x + y^2` is not homogeneous".into()
            }
        );
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(
            parse_document("ideal a:\n", None),
            Err(Error::Input { line: 1, .. })
        ));
        assert!(matches!(
            parse_document("ring: vars=[x]\nideal a:\nideal a:\n", None),
            Err(Error::Input { line: 3, .. })
        ));
        assert!(matches!(
            parse_document("ring: vars=[x]\nideal a:\n  q\n", None),
            Err(Error::Input { line: 3, .. })
        ));
        assert!(matches!(
            parse_document("ring: char=8, vars=[x]\n", None),
            Err(Error::Input { line: 1, .. })
        ));
        assert!(matches!(
            parse_document("  x\n", None),
            Err(Error::Input { line: 1, .. })
        ));
    }
}
