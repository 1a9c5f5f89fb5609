use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use syzygy_core::duality::{
    deficiency_modules, green_table_from, sample_with_deficiency, LinearSystem,
};
use syzygy_core::harness::{self, Reading, RunOptions};
use syzygy_core::input::{parse_document, Block, InputDocument};
use syzygy_core::resolution::{ideal_invariants, minimal_free_resolution};
use syzygy_core::{Error, PresentedModule};

#[derive(Parser)]
#[command(
    name = "syzygy",
    version,
    about = "Graded resolutions, local cohomology and Green modules over GF(p)"
)]
struct Cli {
    /// Override the characteristic of every ring header.
    #[arg(long = "char", global = true)]
    characteristic: Option<u32>,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReadingArg {
    Literal,
    PIndexed,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Graded Betti table of R/I.
    Betti { file: PathBuf, ideal: String },
    /// mu, a, dim, depth, codim, multiplicity and regularity of R/I.
    Invariants { file: PathBuf, ideal: String },
    /// Green modules H_i(l; H^j_m(R/I)) for s linear forms.
    Green {
        file: PathBuf,
        ideal: String,
        s: usize,
        /// Certify the forms on every module of deficiency as well.
        #[arg(long)]
        strong: bool,
        /// Only print degrees in lo:hi.
        #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
        window: Option<(i32, i32)>,
        /// Use a `forms` block of the file instead of sampling.
        #[arg(long)]
        forms: Option<String>,
    },
    /// Run verifiers over every ideal of a corpus file (the shipped corpus by default).
    Verify {
        file: Option<PathBuf>,
        /// Comma separated claim ids, e.g. 4.1,5.2,oracle.
        #[arg(long, value_parser = parse_claim_list)]
        claims: Option<BTreeSet<String>>,
        /// Indexing of the second vanishing alternative in 5.5.
        #[arg(long, value_enum, default_value_t = ReadingArg::Literal)]
        reading: ReadingArg,
    },
}

fn parse_window(s: &str) -> Result<(i32, i32), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected lo:hi")?;
    let lo: i32 = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad lower bound `{lo}`"))?;
    let hi: i32 = hi
        .trim()
        .parse()
        .map_err(|_| format!("bad upper bound `{hi}`"))?;
    if lo > hi {
        return Err("empty window".into());
    }
    Ok((lo, hi))
}

fn parse_claim_list(s: &str) -> Result<BTreeSet<String>, String> {
    harness::parse_claims(s)
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let inner = match &e {
            Error::Entry { source, .. } => source.as_ref(),
            other => other,
        };
        let code = match inner {
            Error::Input { .. } | Error::Parse { .. } => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: String) -> Failure {
    Failure { code: 2, message }
}

fn read_document(path: &Path, characteristic: Option<u32>) -> Result<InputDocument, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_document(&text, characteristic).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn find_ideal<'a>(doc: &'a InputDocument, name: &str) -> Result<&'a Block, Failure> {
    doc.ideal(name)
        .ok_or_else(|| usage(format!("no ideal named `{name}`")))
}

fn show_opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "none".to_string(), |x| x.to_string())
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Betti { file, ideal } => {
            let doc = read_document(&file, cli.characteristic)?;
            let block = find_ideal(&doc, &ideal)?;
            let m = PresentedModule::quotient_ring(&block.ring, &block.polynomials)?;
            let betti = minimal_free_resolution(&m).betti();
            match cli.format {
                Format::Text => print!("{}", betti.to_text()),
                Format::Json => println!("{}", betti.to_json()),
            }
        }
        Command::Invariants { file, ideal } => {
            let doc = read_document(&file, cli.characteristic)?;
            let block = find_ideal(&doc, &ideal)?;
            let inv = ideal_invariants(&block.ring, &block.polynomials)?;
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string(&inv).expect("plain data")),
                Format::Text => {
                    println!("mu     {}", inv.mu);
                    println!("a      {}", show_opt(inv.a));
                    println!("dim    {}", show_opt(inv.dim));
                    println!("depth  {}", show_opt(inv.depth));
                    println!("codim  {}", inv.codim);
                    println!("e      {}", inv.e);
                    println!("reg    {}", show_opt(inv.reg));
                }
            }
        }
        Command::Green {
            file,
            ideal,
            s,
            strong,
            window,
            forms,
        } => {
            let doc = read_document(&file, cli.characteristic)?;
            let block = find_ideal(&doc, &ideal)?;
            let m = PresentedModule::quotient_ring(&block.ring, &block.polynomials)?;
            let def = deficiency_modules(&m)?;
            let system = match forms {
                Some(name) => {
                    let fb = doc
                        .forms(&name)
                        .ok_or_else(|| usage(format!("no forms named `{name}`")))?;
                    if fb.ring.var_names() != block.ring.var_names() {
                        return Err(usage(format!("forms `{name}` live in a different ring")));
                    }
                    if fb.polynomials.len() != s {
                        return Err(usage(format!(
                            "forms `{name}` has {} entries, expected {s}",
                            fb.polynomials.len()
                        )));
                    }
                    let mut sys =
                        LinearSystem::from_forms(fb.polynomials.clone(), block.ring.nvars())?;
                    sys.certify(&m, strong)?;
                    sys
                }
                None => sample_with_deficiency(&m, &def, s, strong, cli.seed)?,
            };
            let table = green_table_from(&def, &system)?;
            let keep = |n: i32| window.is_none_or(|(lo, hi)| lo <= n && n <= hi);
            match cli.format {
                Format::Json => {
                    let mut value = table.to_json();
                    if let Some(entries) = value["entries"].as_array_mut() {
                        for e in entries {
                            if let Some(hf) = e["hf"].as_object_mut() {
                                hf.retain(|k, _| k.parse::<i32>().is_ok_and(keep));
                            }
                        }
                    }
                    value["certificate"] = json!(system.certificate);
                    value["attempts"] = json!(system.attempts);
                    println!("{value}");
                }
                Format::Text => {
                    let cert = serde_json::to_value(system.certificate).expect("plain data");
                    println!(
                        "forms (certificate {}, draws {}, seed {}):",
                        cert.as_str().unwrap_or_default(),
                        system.attempts,
                        show_opt(system.seed)
                    );
                    for (k, f) in system.forms.iter().enumerate() {
                        println!("  l{} = {}", k + 1, block.ring.format(f));
                    }
                    for g in table.entries.values() {
                        let hf = match g.hilbert() {
                            Some(h) => h
                                .dims()
                                .iter()
                                .filter(|(n, _)| keep(**n))
                                .map(|(n, d)| format!("{n}:{d}"))
                                .collect::<Vec<_>>()
                                .join(" "),
                            None => "infinite length".to_string(),
                        };
                        println!(
                            "H_{}(l; H^{}) {}",
                            g.i,
                            g.j,
                            if hf.is_empty() { "0" } else { &hf }
                        );
                    }
                }
            }
        }
        Command::Verify {
            file,
            claims,
            reading,
        } => {
            let text = match &file {
                Some(path) => std::fs::read_to_string(path)
                    .map_err(|e| usage(format!("{}: {e}", path.display())))?,
                None => harness::shipped_corpus_text().to_string(),
            };
            let entries = harness::load_corpus(&text, cli.characteristic)?;
            let readings = match reading {
                ReadingArg::Literal => vec![Reading::Literal],
                ReadingArg::PIndexed => vec![Reading::PIndexed],
                ReadingArg::Both => vec![Reading::Literal, Reading::PIndexed],
            };
            let opts = RunOptions {
                seed: cli.seed,
                claims,
                readings,
            };
            let reports = harness::run_corpus(&entries, &opts)?;
            match cli.format {
                Format::Json => println!("{}", harness::reports_to_json(&reports)),
                Format::Text => print!("{}", harness::reports_to_text(&reports)),
            }
            if reports.iter().any(|r| r.verdict.is_failure()) {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
