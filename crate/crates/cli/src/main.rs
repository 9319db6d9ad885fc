//! `twotone` command-line front end.
//!
//! Exit codes: 0 success, 1 data or verification failure, 2 usage error or
//! size guard exceeded.

use std::fs;
use std::io::{self, BufRead, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use twotone::textio::{self, TextError};
use twotone::{
    closed_form_count, enumerate_tilings, enumerate_words, gf_coefficient, verify_grid, xi,
    xi_inverse, BigCount, MnWord, TwoTonedTiling,
};

const DEFAULT_SIZE_GUARD: usize = 24;

#[derive(Parser)]
#[command(name = "twotone", version, about = "(m,n)-words and two-toned tilings")]
struct Cli {
    /// Largest m + n that may be enumerated without --force.
    #[arg(long, global = true, env = "MN_SIZE_GUARD", default_value_t = DEFAULT_SIZE_GUARD)]
    size_guard: usize,
    /// Skip the size guard.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count W(m,n) = T(m,n).
    Count {
        m: usize,
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// Stream every word or tiling for (m, n), one per line.
    Enumerate {
        m: usize,
        n: usize,
        #[arg(long, value_enum, default_value_t = Kind::Words)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Map words to tilings or back, one record per input line.
    Map {
        #[arg(long, value_enum)]
        direction: Direction,
        /// Input file; stdin when omitted.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// m for compact words, or a red-count check for tilings.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Cross-check counts and the bijection for all m <= max-m, n <= max-n.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_m: usize,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
    /// Render a tiling as SVG.
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 20)]
        unit: u32,
        #[arg(long)]
        m: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Enum,
    Formula,
    Gf,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Words,
    Tilings,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Jsonl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Word2tiling,
    Tiling2word,
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn data(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::data(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = out.flush();
            eprintln!("twotone: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<(), Failure> {
    match &cli.command {
        Command::Count { m, n, method } => count(cli, *m, *n, *method, out),
        Command::Enumerate { m, n, kind, format } => {
            guard(cli, *m + *n)?;
            enumerate(*m, *n, *kind, *format, out)
        }
        Command::Map {
            direction,
            input,
            m,
            format,
        } => {
            let text = read_input(input.as_ref())?;
            map(&text, *direction, *m, *format, out)
        }
        Command::Verify { max_m, max_n } => {
            guard(cli, *max_m + *max_n)?;
            let report = verify_grid(*max_m, *max_n);
            writeln!(out, "{report}")?;
            match report.first_failure() {
                None => Ok(()),
                Some(row) => Err(Failure::data(format!(
                    "verification failed at m={} n={}: {}",
                    row.m,
                    row.n,
                    row.counterexample
                        .as_deref()
                        .unwrap_or("counting methods disagree")
                ))),
            }
        }
        Command::Render {
            input,
            out: path,
            unit,
            m,
        } => {
            if *unit == 0 {
                return Err(Failure::usage("--unit must be positive"));
            }
            let text = read_input(Some(input))?;
            let tiling = parse_tiling_line(text.trim(), *m)
                .map_err(|e| Failure::data(format!("{}: {e}", input.display())))?;
            fs::write(path, textio::render_svg(&tiling, *unit))?;
            Ok(())
        }
    }
}

fn guard(cli: &Cli, size: usize) -> Result<(), Failure> {
    if !cli.force && size > cli.size_guard {
        return Err(Failure::usage(format!(
            "m + n = {size} exceeds the size guard {}; pass --force or raise MN_SIZE_GUARD",
            cli.size_guard
        )));
    }
    Ok(())
}

fn count(
    cli: &Cli,
    m: usize,
    n: usize,
    method: Method,
    out: &mut impl Write,
) -> Result<(), Failure> {
    if matches!(method, Method::Enum | Method::All) {
        guard(cli, m + n)?;
    }
    let enumerated = || -> Result<BigCount, Failure> {
        let words = enumerate_words(m, n).count();
        let tilings = enumerate_tilings(m, n).count();
        if words != tilings {
            return Err(Failure::data(format!(
                "enumeration found {words} words but {tilings} tilings"
            )));
        }
        Ok(BigCount::from(words))
    };
    match method {
        Method::Enum => writeln!(out, "{}", enumerated()?)?,
        Method::Formula => writeln!(out, "{}", closed_form_count(m, n))?,
        Method::Gf => writeln!(out, "{}", gf_coefficient(m, n))?,
        Method::All => {
            let counts = [
                ("enum", enumerated()?),
                ("formula", closed_form_count(m, n)),
                ("gf", gf_coefficient(m, n)),
            ];
            for (name, value) in &counts {
                writeln!(out, "{name}: {value}")?;
            }
            if counts.iter().any(|(_, v)| *v != counts[0].1) {
                return Err(Failure::data("counting methods disagree"));
            }
        }
    }
    Ok(())
}

fn enumerate(
    m: usize,
    n: usize,
    kind: Kind,
    format: Format,
    out: &mut impl Write,
) -> Result<(), Failure> {
    match (kind, format) {
        (Kind::Words, Format::Text) => {
            for w in enumerate_words(m, n) {
                writeln!(out, "{}", textio::format_word(&w))?;
            }
        }
        (Kind::Words, Format::Jsonl) => {
            for w in enumerate_words(m, n) {
                writeln!(out, "{}", textio::word_to_json(&w))?;
            }
        }
        (Kind::Tilings, Format::Text) => {
            for t in enumerate_tilings(m, n) {
                writeln!(out, "{}", textio::format_tiling(&t))?;
            }
        }
        (Kind::Tilings, Format::Jsonl) => {
            for t in enumerate_tilings(m, n) {
                writeln!(out, "{}", textio::tiling_to_json(&t))?;
            }
        }
    }
    Ok(())
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) => {
            text =
                fs::read_to_string(p).map_err(|e| Failure::data(format!("{}: {e}", p.display())))?
        }
        None => {
            io::stdin().lock().read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

/// A word in canonical form, compact form (needs `m`), or as a JSON record.
fn parse_word_line(line: &str, m: Option<usize>) -> Result<MnWord, TextError> {
    if line.starts_with('{') {
        let w = textio::word_from_json(line)?;
        match m {
            Some(expected) if expected != w.m() => Err(TextError::MismatchedM {
                expected,
                found: w.m(),
            }),
            _ => Ok(w),
        }
    } else {
        textio::parse_word(line, m)
    }
}

/// A tiling as tile tokens or a JSON record. Without `m` the red squares
/// present are taken as m.
fn parse_tiling_line(line: &str, m: Option<usize>) -> Result<TwoTonedTiling, TextError> {
    if line.starts_with('{') {
        let t = textio::tiling_from_json(line)?;
        match m {
            Some(expected) if expected != t.m() => Err(TextError::MismatchedM {
                expected,
                found: t.m(),
            }),
            _ => Ok(t),
        }
    } else {
        match m {
            Some(m) => textio::parse_tiling(line, m),
            None => textio::parse_tiling_infer_m(line),
        }
    }
}

fn map(
    text: &str,
    direction: Direction,
    m: Option<usize>,
    format: Format,
    out: &mut impl Write,
) -> Result<(), Failure> {
    for (i, line) in text.as_bytes().lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let line_no = i + 1;
        let fail = |e: TextError| Failure::data(format!("line {line_no}: {e}"));
        let rendered = match direction {
            Direction::Word2tiling => {
                let t = xi(&parse_word_line(line, m).map_err(fail)?);
                match format {
                    Format::Text => textio::format_tiling(&t),
                    Format::Jsonl => textio::tiling_to_json(&t),
                }
            }
            Direction::Tiling2word => {
                let w = xi_inverse(&parse_tiling_line(line, m).map_err(fail)?);
                match format {
                    Format::Text => textio::format_word(&w),
                    Format::Jsonl => textio::word_to_json(&w),
                }
            }
        };
        writeln!(out, "{rendered}")?;
    }
    Ok(())
}
