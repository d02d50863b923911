//! The `parasym` command line: `order`, `verify`, `schur` and `rewrite`.
//!
//! [`run`] takes the argument list and output streams and returns the exit
//! code, so the whole front end is testable in-process.

mod report;
mod spec;
mod word;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

pub use report::{run_suite, Suite, Verdict, VerificationRecord};
pub use spec::parse_group_spec;
pub use word::{format_h_word, parse_word, resolve_word, to_transposition_letters, LetterKind, ParsedLetter};

use crate::enumeration::{todd_coxeter, DEFAULT_MAX_COSETS};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::homology::{schur_report, SchurMethod};
use crate::morphisms::{rewrite_tau, underlying_permutation};
use crate::presentation::{
    amalgam_presentation, coxeter_presentation, hs_presentation, interpolating_presentation,
    transposition_presentation, Presentation, AMALGAM_SIZE_CAP,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_BAD_INPUT: i32 = 1;
pub const EXIT_CAPACITY: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;
pub const EXIT_FAILED: i32 = 4;

/// Environment variable overriding the default coset cap.
pub const MAX_COSETS_ENV: &str = "PARASYM_MAX_COSETS";

#[derive(Parser, Debug)]
#[command(name = "parasym", version, about = "Parametrized symmetric groups S_n(G)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate S_n(G) from one of its presentations and print the order.
    Order {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FamilyArg::Transposition)]
        family: FamilyArg,
        /// Parameter of the interpolating family.
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        max_cosets: Option<usize>,
        #[arg(long)]
        dump_presentation: bool,
        #[arg(long)]
        dump_table: bool,
    },
    /// Run a verification suite and print one record per check.
    Verify {
        #[arg(value_parser = suite_names())]
        suite: String,
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        max_cosets: Option<usize>,
    },
    /// Compute the Schur multiplier of G.
    Schur {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        max_cosets: Option<usize>,
    },
    /// Rewrite a word in (ij)_a letters into h_{ij}(a) letters.
    Rewrite {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Coxeter,
    Transposition,
    Interpolating,
    Amalgam,
    Hs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Kernel,
    Exterior,
    Abelian,
    All,
}

fn suite_names() -> clap::builder::PossibleValuesParser {
    clap::builder::PossibleValuesParser::new(Suite::ALL.map(Suite::name))
}

fn max_cosets(flag: Option<usize>) -> Result<usize> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var(MAX_COSETS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse { line: 0, msg: format!("{MAX_COSETS_ENV}=`{v}` is not a number") }),
        Err(_) => Ok(DEFAULT_MAX_COSETS),
    }
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Order { group, n, family, t, max_cosets: cap, dump_presentation, dump_table } => {
            cmd_order(&group, n, family, t, cap, dump_presentation, dump_table, out)
        }
        Command::Verify { suite, group, n, max_cosets: cap } => cmd_verify(&suite, &group, n, cap, out),
        Command::Schur { group, method, n, max_cosets: cap } => cmd_schur(&group, method, n, cap, out),
        Command::Rewrite { n, word } => cmd_rewrite(n, &word, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_BAD_INPUT
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Parse { line: 0, msg: format!("write failed: {e}") }
}

fn build_presentation(g: &FiniteGroup, n: usize, family: FamilyArg, t: Option<usize>) -> Result<Presentation> {
    match family {
        FamilyArg::Coxeter => coxeter_presentation(n, g),
        FamilyArg::Transposition => transposition_presentation(n, g),
        FamilyArg::Interpolating => {
            let t = t.ok_or_else(|| Error::Parse { line: 0, msg: "--family interpolating needs --t".into() })?;
            interpolating_presentation(n, t, g)
        }
        FamilyArg::Amalgam => amalgam_presentation(n, g, AMALGAM_SIZE_CAP),
        FamilyArg::Hs => hs_presentation(n, g),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_order(
    spec: &str,
    n: usize,
    family: FamilyArg,
    t: Option<usize>,
    cap: Option<usize>,
    dump_presentation: bool,
    dump_table: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let g = parse_group_spec(spec)?;
    let cap = max_cosets(cap)?;
    let p = build_presentation(&g, n, family, t)?;
    if dump_presentation {
        out.write_all(p.dump().as_bytes()).map_err(io)?;
    }
    let table = todd_coxeter(&p, &[], cap)?;
    if !table.is_complete() {
        writeln!(out, "capacity-exceeded max-cosets={cap}").map_err(io)?;
        return Ok(EXIT_CAPACITY);
    }
    if dump_table {
        out.write_all(table.dump().as_bytes()).map_err(io)?;
    }
    writeln!(out, "{}", table.coset_count()).map_err(io)?;
    Ok(EXIT_OK)
}

fn cmd_verify(suite: &str, spec: &str, n: usize, cap: Option<usize>, out: &mut dyn Write) -> Result<i32> {
    let suite = Suite::from_name(suite).ok_or_else(|| Error::Parse { line: 0, msg: format!("unknown suite {suite}") })?;
    let g = parse_group_spec(spec)?;
    let records = run_suite(suite, spec, n, &g, max_cosets(cap)?)?;
    for r in &records {
        writeln!(out, "{r}").map_err(io)?;
    }
    Ok(exit_code(&records))
}

/// `0` if everything passed, `4` if anything failed, `3` otherwise.
pub fn exit_code(records: &[VerificationRecord]) -> i32 {
    if records.iter().any(|r| r.verdict == Verdict::Fail) {
        EXIT_FAILED
    } else if records.iter().all(|r| r.verdict == Verdict::Pass) {
        EXIT_OK
    } else {
        EXIT_TIMEOUT
    }
}

fn cmd_schur(spec: &str, method: MethodArg, n: usize, cap: Option<usize>, out: &mut dyn Write) -> Result<i32> {
    let g = parse_group_spec(spec)?;
    let method = match method {
        MethodArg::Kernel => SchurMethod::Kernel,
        MethodArg::Exterior => SchurMethod::Exterior,
        MethodArg::Abelian => SchurMethod::Abelian,
        MethodArg::All => SchurMethod::All,
    };
    let want = |m: SchurMethod| method == m || method == SchurMethod::All;
    let rep = schur_report(spec, n, &g, method, max_cosets(cap)?)?;
    writeln!(out, "group={}", rep.group).map_err(io)?;
    let mut missing = false;
    for (m, name, value) in [
        (SchurMethod::Kernel, "kernel", &rep.via_kernel),
        (SchurMethod::Exterior, "exterior", &rep.via_exterior),
        (SchurMethod::Abelian, "abelian", &rep.via_abelian_formula),
    ] {
        match value {
            Some(v) => writeln!(out, "{name}={v}").map_err(io)?,
            None if m == SchurMethod::Abelian && !g.is_abelian() => {}
            None if want(m) => {
                missing = true;
                writeln!(out, "{name}=capacity-exceeded").map_err(io)?
            }
            None => {}
        }
    }
    writeln!(out, "consistent={}", rep.consistent).map_err(io)?;
    Ok(if missing { EXIT_CAPACITY } else { EXIT_OK })
}

fn cmd_rewrite(n: usize, text: &str, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let letters = to_transposition_letters(&parse_word(text)?)?;
    let rewritten = rewrite_tau(&letters, n)?;
    if !underlying_permutation(&letters, n).is_identity() {
        writeln!(err, "warning: the underlying permutation is not trivial; the result is a coset expression")
            .map_err(io)?;
    }
    writeln!(out, "{}", format_h_word(&rewritten)).map_err(io)?;
    Ok(EXIT_OK)
}
