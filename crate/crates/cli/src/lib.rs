//! The `heffter` command. [`run`] is the whole program; `main` only wires up
//! the process streams.

pub mod document;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use heffter::oracle::{
    brute_force_search, find_skolem, skolem_to_triples, triples_exact_cover, verify_skolem,
    SkolemSequence,
};
use heffter::{
    assert_necessity, construct, verify, ClassFlags, HeffterError, HeffterKind, Necessity,
};
use rayon::prelude::*;
use thiserror::Error;

use document::{sidecar_path, ArrayDocument, Format, Metadata};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Heffter(#[from] HeffterError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("bad JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Failed(String),
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "heffter",
    version,
    about = "Generate and certify Heffter arrays"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Require {
    Any,
    Integer,
    Shiftable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Class {
    Modular,
    Integer,
    Shiftable,
}

impl From<Class> for HeffterKind {
    fn from(c: Class) -> Self {
        match c {
            Class::Modular => HeffterKind::Modular,
            Class::Integer => HeffterKind::Integer,
            Class::Shiftable => HeffterKind::Shiftable,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Construct H(M, N), verify it and print it.
    Generate {
        m: usize,
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, value_enum, default_value = "any")]
        require: Require,
        /// Write here instead of stdout; CSV also writes `<path>.meta.json`.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check an array file. Exit 0 iff it is a Heffter array.
    Verify {
        file: PathBuf,
        /// Defaults to the file extension (.json, .csv, otherwise text).
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Construct and verify every size in [min, max] x [min, max].
    Scan {
        #[arg(long, default_value_t = 3)]
        min: usize,
        #[arg(long)]
        max: usize,
        /// Worker threads; 0 picks the number of cores.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Exhaustive search for small arrays (M * N <= 12).
    Search {
        m: usize,
        n: usize,
        #[arg(long, value_enum, default_value = "modular")]
        class: Class,
        #[arg(long, default_value_t = 1)]
        limit: usize,
    },
    /// Skolem and near-Skolem sequences.
    Skolem {
        #[command(subcommand)]
        action: SkolemAction,
    },
    /// Partition {1..3N} into triples with a + b = c (or a + b + c = 6N + 1).
    Triples {
        n: usize,
        /// Also allow a + b + c = 6N + 1.
        #[arg(long)]
        modular: bool,
        /// Shuffle candidate order with this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
enum SkolemAction {
    /// Check a comma-separated sequence.
    Verify {
        sequence: String,
        /// Excluded values, comma-separated.
        #[arg(long, value_delimiter = ',')]
        near: Vec<usize>,
    },
    /// Find a sequence of order N.
    Find {
        n: usize,
        #[arg(long, value_delimiter = ',')]
        near: Vec<usize>,
        /// Also print the derived triple partition.
        #[arg(long)]
        triples: bool,
    },
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code: 0 success, 1 infeasible request or failed check, 2 usage.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let mut rendered = e.render().to_string();
            if code == 2 && !rendered.contains("Usage:") {
                rendered.push_str(&format!("\n{}\n", Cli::command().render_usage()));
            }
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

type Outcome = Result<i32, CliError>;

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Generate {
            m,
            n,
            format,
            require,
            output,
        } => generate(m, n, format, require, output.as_deref(), out, err),
        Command::Verify { file, format } => verify_file(&file, format, out),
        Command::Scan { min, max, jobs } => scan(min, max, jobs, out, err),
        Command::Search { m, n, class, limit } => search(m, n, class.into(), limit, out),
        Command::Skolem { action } => skolem(action, out),
        Command::Triples { n, modular, seed } => triples(n, modular, seed, out),
    }
}

fn write_out(out: &mut dyn Write, s: &str) -> Result<(), CliError> {
    out.write_all(s.as_bytes())
        .map_err(io_err(Path::new("<stdout>")))
}

fn generate(
    m: usize,
    n: usize,
    format: Format,
    require: Require,
    output: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let kind = match require {
        Require::Any => HeffterKind::Modular,
        Require::Integer => HeffterKind::Integer,
        Require::Shiftable => HeffterKind::Shiftable,
    };
    if let Necessity::Forbid(f) = assert_necessity(m, n, kind) {
        return Err(CliError::Failed(format!(
            "no {} H({m},{n}): {}",
            kind.name(),
            f.reason
        )));
    }
    let res = construct(m, n)?;
    let report = verify(res.array.matrix());
    if !report.flags().satisfies(kind) {
        let _ = writeln!(err, "{report}");
        return Err(CliError::Failed(format!(
            "constructed H({m},{n}) is not {}",
            kind.name()
        )));
    }
    let doc = ArrayDocument::new(res.array.matrix(), report.flags(), Some(res.provenance));
    let body = doc.render(format);
    match output {
        None => write_out(out, &body)?,
        Some(path) => {
            fs::write(path, &body).map_err(io_err(path))?;
            if format == Format::Csv {
                let side = sidecar_path(path);
                let mut meta = serde_json::to_string_pretty(&doc.metadata())?;
                meta.push('\n');
                fs::write(&side, meta).map_err(io_err(&side))?;
            }
        }
    }
    Ok(0)
}

fn load(path: &Path, format: Option<Format>) -> Result<ArrayDocument, CliError> {
    let format = format.unwrap_or_else(|| Format::from_path(path));
    let src = fs::read_to_string(path).map_err(io_err(path))?;
    let meta = if format == Format::Csv {
        let side = sidecar_path(path);
        match fs::read_to_string(&side) {
            Ok(s) => Some(serde_json::from_str::<Metadata>(&s)?),
            Err(e) if e.kind() == io::ErrorKind::NotFound => None,
            Err(e) => return Err(io_err(&side)(e)),
        }
    } else {
        None
    };
    ArrayDocument::parse(&src, format, meta)
}

fn verify_file(path: &Path, format: Option<Format>, out: &mut dyn Write) -> Outcome {
    let doc = load(path, format)?;
    let report = verify(&doc.matrix()?);
    write_out(out, &format!("{report}\n"))?;
    if doc.modulus != report.modulus as u64 {
        write_out(
            out,
            &format!(
                "note: header modulus {} differs from 2mn + 1\n",
                doc.modulus
            ),
        )?;
    }
    Ok(if report.is_modular_heffter { 0 } else { 1 })
}

struct SizeOutcome {
    m: usize,
    n: usize,
    flags: Option<ClassFlags>,
    problem: Option<String>,
}

fn check_size(m: usize, n: usize) -> SizeOutcome {
    let (flags, problem) = match construct(m, n) {
        Err(e) => (None, Some(e.to_string())),
        Ok(res) => {
            let rep = verify(res.array.matrix());
            let flags = rep.flags();
            let problem = if !rep.is_modular_heffter {
                rep.failures
                    .first()
                    .map(|f| f.to_string())
                    .or(Some("not a Heffter array".into()))
            } else if flags != ClassFlags::predicted(m, n) {
                Some(format!("class {flags:?} differs from prediction"))
            } else {
                None
            };
            (Some(flags), problem)
        }
    };
    SizeOutcome {
        m,
        n,
        flags,
        problem,
    }
}

fn scan(min: usize, max: usize, jobs: usize, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    if min < 3 || max < min {
        let _ = writeln!(err, "scan needs 3 <= min <= max");
        return Ok(2);
    }
    let pairs: Vec<(usize, usize)> = (min..=max)
        .flat_map(|m| (min..=max).map(move |n| (m, n)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Failed(e.to_string()))?;
    // collect() on an indexed parallel iterator keeps (m, n) order
    let results: Vec<SizeOutcome> =
        pool.install(|| pairs.par_iter().map(|&(m, n)| check_size(m, n)).collect());

    let count = |f: fn(&ClassFlags) -> bool| {
        results
            .iter()
            .filter(|r| r.flags.as_ref().is_some_and(f))
            .count()
    };
    let predicted = |f: fn(&ClassFlags) -> bool| {
        pairs
            .iter()
            .filter(|&&(m, n)| f(&ClassFlags::predicted(m, n)))
            .count()
    };
    let failures: Vec<&SizeOutcome> = results.iter().filter(|r| r.problem.is_some()).collect();
    let passed = results.len() - failures.len();

    let mut text = String::new();
    for f in &failures {
        text.push_str(&format!(
            "FAIL {}x{}: {}\n",
            f.m,
            f.n,
            f.problem.as_deref().unwrap_or("")
        ));
    }
    text.push_str("class      predicted  observed\n");
    for (name, f) in [
        (
            "modular",
            (|c: &ClassFlags| c.modular) as fn(&ClassFlags) -> bool,
        ),
        ("integer", |c: &ClassFlags| c.integer),
        ("shiftable", |c: &ClassFlags| c.shiftable),
    ] {
        text.push_str(&format!(
            "{name:<10} {:>9}  {:>8}\n",
            predicted(f),
            count(f)
        ));
    }
    text.push_str(&format!(
        "{} sizes, {passed} pass, integer: {}, {} failures\n",
        results.len(),
        count(|c| c.integer),
        failures.len()
    ));
    write_out(out, &text)?;
    Ok(if failures.is_empty() { 0 } else { 1 })
}

fn search(m: usize, n: usize, kind: HeffterKind, limit: usize, out: &mut dyn Write) -> Outcome {
    let found = brute_force_search(m, n, kind, limit)?;
    let mut text = String::new();
    for a in &found {
        let doc = ArrayDocument::new(a.matrix(), verify(a.matrix()).flags(), None);
        text.push_str(&doc.to_text());
        text.push('\n');
    }
    text.push_str(&format!(
        "{} {} array(s) of size {m}x{n} found\n",
        found.len(),
        kind.name()
    ));
    write_out(out, &text)?;
    Ok(0)
}

fn parse_sequence(src: &str) -> Result<Vec<usize>, CliError> {
    src.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse().map_err(|_| CliError::Parse {
                line: 1,
                message: format!("bad value {t:?}"),
            })
        })
        .collect()
}

fn skolem(action: SkolemAction, out: &mut dyn Write) -> Outcome {
    match action {
        SkolemAction::Verify { sequence, near } => {
            let values = parse_sequence(&sequence)?;
            let order = values.len() / 2 + near.len();
            let seq = SkolemSequence::near(order, near, values);
            match verify_skolem(&seq) {
                Ok(()) => {
                    write_out(out, &format!("pass: Skolem sequence of order {order}\n"))?;
                    Ok(0)
                }
                Err(f) => {
                    write_out(out, &format!("fail: {f}\n"))?;
                    Ok(1)
                }
            }
        }
        SkolemAction::Find { n, near, triples } => match find_skolem(n, &near) {
            None => {
                write_out(out, &format!("no sequence of order {n} exists\n"))?;
                Ok(1)
            }
            Some(seq) => {
                let mut text = format!("{seq}\n");
                if triples {
                    for t in skolem_to_triples(&seq)?.triples {
                        text.push_str(&format!("{t}\n"));
                    }
                }
                write_out(out, &text)?;
                Ok(0)
            }
        },
    }
}

fn triples(n: usize, modular: bool, seed: Option<u64>, out: &mut dyn Write) -> Outcome {
    match triples_exact_cover(n, modular, seed)? {
        None => {
            write_out(out, &format!("no partition of 1..{} exists\n", 3 * n))?;
            Ok(1)
        }
        Some(p) => {
            let text: String = p.triples.iter().map(|t| format!("{t}\n")).collect();
            write_out(out, &text)?;
            Ok(0)
        }
    }
}
