//! The `poset-mobius` command line.
//!
//! Results go to the output stream and diagnostics to the error stream.
//! Exit status is 0 on success and 2 on any input, validation or
//! hypothesis failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::constructions::{boolean_parts, chain_parts, direct_product, divisor_parts, rescale};
use crate::error::Error;
use crate::format::{
    parse_automorphism, parse_poset, parse_ranked_poset, write_parts, write_poset,
};
use crate::incidence::{mobius_matrix, mobius_polynomial, zeta_matrix};
use crate::polyalg::{IntPolynomial, RationalSeries};
use crate::poset::{mobius_row, validate, PosetAutomorphism, RankedPoset};
use crate::series::{graded_trace, hilbert_series};

const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "poset-mobius",
    version,
    about = "Möbius polynomials, Hilbert series and graded traces of ranked posets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Boolean,
    Chain,
    Divisor,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a poset from one of the built-in families
    Gen {
        family: Family,
        parameter: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Print the Möbius polynomial
    Mobius { file: PathBuf },
    /// Print the Hilbert series of the splitting algebra
    Hilbert {
        file: PathBuf,
        #[arg(long, default_value_t = 16)]
        terms: usize,
    },
    /// Print the graded trace generating function of an automorphism
    Trace {
        file: PathBuf,
        #[arg(long)]
        aut: PathBuf,
        #[arg(long, default_value_t = 16)]
        terms: usize,
    },
    /// Write the direct product of two posets
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Write the poset with every rank multiplied by n
    Rescale {
        file: PathBuf,
        n: u32,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Write the subposet fixed by an automorphism
    Fixed {
        file: PathBuf,
        #[arg(long)]
        aut: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check rank axioms and incidence-algebra identities
    Verify { file: PathBuf },
}

/// Failure of a command: everything here exits with status 2.
#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Runs the CLI with `args` (including the program name) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let result = match cli.command {
        Command::Gen {
            family,
            parameter,
            out: path,
        } => cmd_gen(family, parameter, path.as_deref(), out),
        Command::Mobius { file } => cmd_mobius(&file, out),
        Command::Hilbert { file, terms } => cmd_hilbert(&file, terms, out),
        Command::Trace { file, aut, terms } => cmd_trace(&file, &aut, terms, out),
        Command::Product { a, b, out: path } => cmd_product(&a, &b, path.as_deref(), out),
        Command::Rescale { file, n, out: path } => cmd_rescale(&file, n, path.as_deref(), out),
        Command::Fixed {
            file,
            aut,
            out: path,
        } => cmd_fixed(&file, &aut, path.as_deref(), out),
        Command::Verify { file } => return cmd_verify(&file, out, err),
    };
    match result {
        Ok(()) => 0,
        Err(failure) => {
            report(&failure, err);
            EXIT_INPUT
        }
    }
}

fn report(failure: &Failure, err: &mut dyn Write) {
    match failure {
        Failure::Lib(Error::Invalid(diags)) => {
            let _ = writeln!(err, "error: invalid ranked poset");
            for d in diags {
                let _ = writeln!(err, "  {d}");
            }
        }
        Failure::Lib(e) => {
            let _ = writeln!(err, "error: {e}");
        }
        Failure::Io(msg) => {
            let _ = writeln!(err, "error: {msg}");
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> std::result::Result<RankedPoset, Failure> {
    parse_ranked_poset(&read(path)?).map_err(|e| match e {
        Error::Parse { line, msg } => {
            Failure::Io(format!("{}: line {line}: {msg}", path.display()))
        }
        other => Failure::Lib(other),
    })
}

fn load_automorphism(
    poset: RankedPoset,
    path: &Path,
) -> std::result::Result<PosetAutomorphism, Failure> {
    let pairs = parse_automorphism(&read(path)?)?;
    Ok(PosetAutomorphism::from_label_map(Arc::new(poset), &pairs)?)
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(e.to_string())),
    }
}

fn coefficient_line(coeffs: &[BigInt]) -> String {
    let list: Vec<String> = coeffs.iter().map(BigInt::to_string).collect();
    format!("coeffs: {}", list.join(", "))
}

fn print_series(
    name: &str,
    series: &RationalSeries,
    terms: usize,
    out: &mut dyn Write,
) -> CmdResult {
    let coeffs = if terms == 0 {
        Vec::new()
    } else {
        series.expand(terms - 1)
    };
    let text = format!("{name} = {series}\n{}\n", coefficient_line(&coeffs));
    emit(&text, None, out)
}

fn cmd_gen(family: Family, parameter: u64, path: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let parts = match family {
        Family::Boolean => boolean_parts(parameter)?,
        Family::Chain => {
            let s = u32::try_from(parameter).map_err(|_| Error::TooLarge {
                what: "chain length",
                max: u64::from(u32::MAX),
                got: parameter,
            })?;
            chain_parts(s)
        }
        Family::Divisor => divisor_parts(parameter)?,
    };
    emit(&write_parts(&parts), path, out)
}

fn cmd_mobius(file: &Path, out: &mut dyn Write) -> CmdResult {
    let poset = load(file)?;
    emit(&format!("{}\n", mobius_polynomial(&poset)), None, out)
}

fn cmd_hilbert(file: &Path, terms: usize, out: &mut dyn Write) -> CmdResult {
    let poset = load(file)?;
    print_series("H", &hilbert_series(&poset)?, terms, out)
}

fn cmd_trace(file: &Path, aut: &Path, terms: usize, out: &mut dyn Write) -> CmdResult {
    let aut = load_automorphism(load(file)?, aut)?;
    print_series("Tr", &graded_trace(&aut)?, terms, out)
}

fn cmd_product(a: &Path, b: &Path, path: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let product = direct_product(&load(a)?, &load(b)?)?;
    emit(&write_poset(&product), path, out)
}

fn cmd_rescale(file: &Path, n: u32, path: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let scaled = rescale(&load(file)?, n)?;
    emit(&write_poset(&scaled), path, out)
}

fn cmd_fixed(file: &Path, aut: &Path, path: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let aut = load_automorphism(load(file)?, aut)?;
    emit(&write_poset(&aut.fixed_subposet()?), path, out)
}

enum Check {
    Pass,
    Fail(Vec<String>),
    Skip,
}

fn cmd_verify(file: &Path, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let parsed = read(file).and_then(|text| {
        parse_poset(&text).map_err(|e| match e {
            Error::Parse { line, msg } => {
                Failure::Io(format!("{}: line {line}: {msg}", file.display()))
            }
            other => Failure::Lib(other),
        })
    });
    let (poset, ranks) = match parsed {
        Ok(p) => p,
        Err(f) => {
            report(&f, err);
            return EXIT_INPUT;
        }
    };

    let diags = validate(&poset, &ranks);
    let mut checks: Vec<(&str, Check)> = Vec::new();
    if !diags.is_empty() {
        checks.push((
            "validate",
            Check::Fail(diags.iter().map(ToString::to_string).collect()),
        ));
        for name in ["zeta*mobius=delta", "recursion=inversion", "M(0)=|P|"] {
            checks.push((name, Check::Skip));
        }
    } else {
        checks.push(("validate", Check::Pass));
        let ranked = RankedPoset::new(poset, ranks).expect("validated above");
        checks.extend(incidence_checks(&ranked));
    }

    let mut all_pass = true;
    for (name, check) in &checks {
        let line = match check {
            Check::Pass => format!("{name}: PASS"),
            Check::Skip => format!("{name}: SKIP"),
            Check::Fail(details) => {
                all_pass = false;
                let mut s = format!("{name}: FAIL");
                for d in details {
                    s.push_str("\n  ");
                    s.push_str(d);
                }
                s
            }
        };
        let _ = writeln!(out, "{line}");
    }
    if all_pass {
        0
    } else {
        EXIT_INPUT
    }
}

fn incidence_checks(poset: &RankedPoset) -> Vec<(&'static str, Check)> {
    let zeta = zeta_matrix(poset);
    let mu = mobius_matrix(poset);

    let zm = zeta
        .matrix()
        .matrix_mul(mu.matrix())
        .map(|m| m.is_identity());
    let mz = mu
        .matrix()
        .matrix_mul(zeta.matrix())
        .map(|m| m.is_identity());
    let inverse = match (zm, mz) {
        (Ok(true), Ok(true)) => Check::Pass,
        _ => Check::Fail(vec!["zeta and mobius matrices are not inverse".into()]),
    };

    let p = poset.poset();
    let mut mismatches = Vec::new();
    for a in 0..p.len() {
        let row = mobius_row(p, a);
        for (b, &m) in row.iter().enumerate() {
            let expected = if p.leq(a, b) {
                IntPolynomial::monomial(m, (poset.rank(b) - poset.rank(a)) as usize)
            } else {
                IntPolynomial::zero()
            };
            if mu.value(a, b) != &expected {
                mismatches.push(format!(
                    "({},{}): inversion gives {}, recursion gives {}",
                    p.label(a),
                    p.label(b),
                    mu.value(a, b),
                    expected
                ));
            }
        }
    }
    let recursion = if mismatches.is_empty() {
        Check::Pass
    } else {
        Check::Fail(mismatches)
    };

    let m0 = mu.total().coeff(0);
    let size = if m0 == BigInt::from(p.len()) {
        Check::Pass
    } else {
        Check::Fail(vec![format!("M(0) = {m0}, |P| = {}", p.len())])
    };

    vec![
        ("zeta*mobius=delta", inverse),
        ("recursion=inversion", recursion),
        ("M(0)=|P|", size),
    ]
}
