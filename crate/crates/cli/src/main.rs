use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mrat_core::report::{self, DegreeReport};
use mrat_core::series::{a_series, fp_series, olivier, sec_tan_series};
use mrat_core::verify::{self, Check};
use mrat_core::{ChordDiagram, Error, UpDownWord};

/// Largest degree enumerated without `--force`.
const MAX_UNFORCED_N: usize = 7;

/// Count real rational M-functions by enumerating labeled planar chord
/// diagrams, and cross-check the counts.
#[derive(Parser, Debug)]
#[command(name = "mrat", version, about, long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true, env = "MRAT_JOBS")]
    jobs: Option<usize>,
    /// Allow enumeration beyond n = 7.
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// ♯_n and the number of components for each n in a range.
    Count {
        /// Degree or range of degrees, e.g. `5` or `3..5`.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
    },
    /// Run the identity suites and list both sides of every check.
    Verify {
        /// Degrees for the counting identities.
        #[arg(long, value_parser = parse_range)]
        n: Option<RangeInclusive<usize>>,
        /// Determinant against brute force for all words up to this length.
        #[arg(long)]
        words: Option<usize>,
        /// Series identities up to this truncation order.
        #[arg(long)]
        series: Option<usize>,
    },
    /// Permutation counts for up-down words, or the path table.
    Tables {
        /// Word over {U, D}; may be repeated.
        #[arg(long)]
        updown: Vec<String>,
        /// Every word of this length.
        #[arg(long)]
        words: Option<usize>,
        /// ♯(P_n) by determinant and series, with r_n, for n up to this value.
        #[arg(long)]
        paths: Option<usize>,
    },
    /// Coefficients of a generating function.
    Series {
        #[arg(long, value_enum)]
        op: SeriesOp,
        /// Truncation order.
        #[arg(long)]
        order: usize,
    },
    /// Canonical planar chord diagrams with m chords.
    Diagrams {
        #[arg(long)]
        m: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeriesOp {
    Fp,
    A1,
    A3,
    Sectan,
    Olivier0,
    Olivier1,
    Olivier2,
    Olivier3,
    /// The path table; `--order` bounds 2n.
    Paths,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let a = parse(s)?;
            (a, a)
        }
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok(a..=b)
}

enum Failure {
    Usage(String),
    CrossCheck(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::CrossCheck(_) => 3,
            Failure::Io(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::CrossCheck(m) | Failure::Io(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CrossCheck(m) => Failure::CrossCheck(m),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

/// Output to emit, plus a failure to report once it is written.
struct Emitted {
    body: String,
    failure: Option<Failure>,
}

impl From<String> for Emitted {
    fn from(body: String) -> Self {
        Emitted {
            body,
            failure: None,
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> Outcome {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Failure::Io(e.to_string()))
}

fn check_degrees(range: &RangeInclusive<usize>, min: usize, force: bool) -> Result<(), Failure> {
    if *range.start() < min {
        return Err(Failure::Usage(format!("n must be at least {min}")));
    }
    if *range.end() > MAX_UNFORCED_N {
        if !force {
            return Err(Failure::Usage(format!(
                "n = {} exceeds {MAX_UNFORCED_N}; the label space grows factorially, pass --force to run anyway",
                range.end()
            )));
        }
        eprintln!("warning: n = {} may take a very long time", range.end());
    }
    Ok(())
}

fn cmd_count(n: RangeInclusive<usize>, format: Format, force: bool) -> Outcome {
    check_degrees(&n, 1, force)?;
    let reports: Vec<DegreeReport> = n.map(report::degree_report).collect::<Result<_, _>>()?;
    match format {
        Format::Json => json(&reports),
        Format::Csv => Ok(report::counts_csv(&reports)?),
        Format::Text => Ok(report::counts_text(&reports)),
    }
}

#[derive(serde::Serialize)]
struct CheckRow<'a> {
    name: &'a str,
    left: &'a str,
    right: &'a str,
    passed: bool,
    witness: Option<&'a str>,
}

fn cmd_verify(
    n: Option<RangeInclusive<usize>>,
    words: Option<usize>,
    series: Option<usize>,
    format: Format,
    force: bool,
) -> Result<Emitted, Failure> {
    let defaults = n.is_none() && words.is_none() && series.is_none();
    let n = if defaults { Some(3..=5) } else { n };
    let words = if defaults { Some(8) } else { words };
    let series = if defaults { Some(20) } else { series };

    let mut checks: Vec<Check> = Vec::new();
    if let Some(range) = n {
        check_degrees(&range, 3, force)?;
        for k in range {
            checks.extend(verify::verify_degree(k)?);
        }
    }
    if let Some(len) = words {
        checks.extend(verify::verify_words(len)?);
    }
    if let Some(order) = series {
        checks.extend(verify::verify_series(order)?);
    }

    let rows: Vec<CheckRow> = checks
        .iter()
        .map(|c| CheckRow {
            name: &c.name,
            left: &c.left,
            right: &c.right,
            passed: c.passed(),
            witness: c.witness.as_deref(),
        })
        .collect();
    let body = match format {
        Format::Json => json(&rows)?,
        Format::Csv => csv_rows(&rows)?,
        Format::Text => {
            let failed = checks.iter().filter(|c| !c.passed()).count();
            let mut out: String = checks.iter().map(|c| format!("{c}\n")).collect();
            out += &format!("{} checks, {} failed\n", checks.len(), failed);
            out
        }
    };
    let failure = checks
        .iter()
        .find(|c| !c.passed())
        .map(|c| Failure::CrossCheck(c.to_string()));
    Ok(Emitted { body, failure })
}

fn csv_rows<T: serde::Serialize>(rows: &[T]) -> Outcome {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Failure::Io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::Io(e.to_string()))
}

fn cmd_tables(
    updown: Vec<String>,
    words: Option<usize>,
    paths: Option<usize>,
    format: Format,
) -> Outcome {
    if let Some(max) = paths {
        if max == 0 {
            return Err(Failure::Usage("--paths must be at least 1".into()));
        }
        let rows = report::path_table(max)?;
        return match format {
            Format::Json => json(&rows),
            Format::Csv | Format::Text => Ok(report::path_table_csv(&rows)?),
        };
    }
    let mut list: Vec<UpDownWord> = updown
        .iter()
        .map(|w| UpDownWord::parse(w))
        .collect::<Result<_, _>>()?;
    if let Some(len) = words {
        list.extend(UpDownWord::all(len));
    }
    if list.is_empty() {
        return Err(Failure::Usage(
            "give --updown WORD, --words LEN or --paths N".into(),
        ));
    }
    let rows = report::word_counts(list);
    match format {
        Format::Json => json(&rows),
        Format::Csv => Ok(report::word_counts_csv(&rows)?),
        Format::Text => Ok(rows
            .iter()
            .map(|r| format!("{},{}\n", r.word, r.count))
            .collect()),
    }
}

fn cmd_series(op: SeriesOp, order: usize, format: Format) -> Outcome {
    let s = match op {
        SeriesOp::Fp => fp_series(order)?,
        SeriesOp::A1 => a_series(1, order)?,
        SeriesOp::A3 => a_series(3, order)?,
        SeriesOp::Sectan => sec_tan_series(order),
        SeriesOp::Olivier0 => olivier(0, order)?,
        SeriesOp::Olivier1 => olivier(1, order)?,
        SeriesOp::Olivier2 => olivier(2, order)?,
        SeriesOp::Olivier3 => olivier(3, order)?,
        SeriesOp::Paths => return cmd_tables(Vec::new(), None, Some((order / 2).max(1)), format),
    };
    let rows = report::series_rows(&s);
    match format {
        Format::Json => json(&rows),
        Format::Csv => Ok(report::series_csv(&rows)?),
        Format::Text => Ok(rows
            .iter()
            .map(|r| format!("{}\t{}\t{}\n", r.k, r.coefficient, r.scaled))
            .collect()),
    }
}

#[derive(serde::Serialize)]
struct DiagramEntry {
    matching: Vec<usize>,
    tree_signature: String,
}

#[derive(serde::Serialize)]
struct DiagramRow {
    matching: String,
    tree_signature: String,
}

fn cmd_diagrams(m: usize, format: Format) -> Outcome {
    if m > 2 * MAX_UNFORCED_N {
        return Err(Failure::Usage(format!("m = {m} is too large to list")));
    }
    match format {
        Format::Text => Ok(report::diagram_lines(m)?),
        Format::Json | Format::Csv => {
            let entries: Vec<DiagramEntry> = ChordDiagram::enumerate(m)?
                .iter()
                .map(|d| DiagramEntry {
                    matching: d.matching().to_vec(),
                    tree_signature: d.associated_tree().signature(),
                })
                .collect();
            if format == Format::Json {
                json(&entries)
            } else {
                let rows: Vec<DiagramRow> = entries
                    .into_iter()
                    .map(|e| DiagramRow {
                        matching: e
                            .matching
                            .iter()
                            .map(usize::to_string)
                            .collect::<Vec<_>>()
                            .join(" "),
                        tree_signature: e.tree_signature,
                    })
                    .collect();
                csv_rows(&rows)
            }
        }
    }
}

fn run(cli: Cli) -> Result<Emitted, Failure> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    match cli.command {
        Command::Count { n } => cmd_count(n, cli.format, cli.force).map(Emitted::from),
        Command::Verify { n, words, series } => cmd_verify(n, words, series, cli.format, cli.force),
        Command::Tables {
            updown,
            words,
            paths,
        } => cmd_tables(updown, words, paths, cli.format).map(Emitted::from),
        Command::Series { op, order } => cmd_series(op, order, cli.format).map(Emitted::from),
        Command::Diagrams { m } => cmd_diagrams(m, cli.format).map(Emitted::from),
    }
}

fn emit(body: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, body).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
        }
        None => io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| Failure::Io(e.to_string())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    let result = run(cli).and_then(|e| {
        emit(&e.body, out.as_ref())?;
        e.failure.map_or(Ok(()), Err)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
