//! `modasc`: generation, counting, table reproduction, invariant checks and
//! data export for pattern-avoiding modified ascent sequences.

mod experiment;
mod report;
mod suites;
mod tables;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use modasc::counting::{closed_counts, oracle_table, special_series, Caps, CountTable, Provenance, SpecialSeries};
use modasc::patterns::avoiders;
use modasc::seqcore::generate;
use modasc::{Class, PatternSet, Word};

use experiment::Experiment;
use report::RunReport;
use suites::Suite;
use tables::Which;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] modasc::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn stdout(source: io::Error) -> Self {
        CliError::Io {
            path: "<stdout>".into(),
            source,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Plain lines; count tables as `n a(n)`.
    Text,
    /// OEIS b-file, the same as `text` for count tables.
    Bfile,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(name = "modasc", version, about = "Pattern avoidance on modified ascent sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Size, or largest size, to work with.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Uniform cap on brute-force sizes; overrides FP_CAP and the defaults.
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Record in reports that no randomness is involved.
    #[arg(long, global = true)]
    seedless: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lists the words of a class, optionally avoiding patterns, in lexicographic order.
    Generate {
        #[arg(long, default_value = "modasc")]
        class: Class,
        /// Comma-separated patterns, e.g. `212,213`.
        #[arg(long)]
        avoid: Option<PatternSet>,
    },
    /// Prints a count table.
    Count(Source),
    /// Recomputes a table of counts and compares it with the known values.
    Table {
        #[arg(long, value_enum)]
        which: Which,
    },
    /// Runs an invariant suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Writes a count table to a file, or to stdout without `--out`.
    Export {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exploratory comparisons on unsolved patterns.
    Experiment {
        #[arg(long, value_enum)]
        check: Experiment,
        #[arg(long, default_value_t = 20)]
        order: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Exhaustive enumeration.
    Oracle,
    /// The closed form of a single pattern.
    Formula,
}

#[derive(Args, Debug)]
struct Source {
    #[arg(long, default_value = "modasc")]
    class: Class,
    #[arg(long, conflicts_with = "series")]
    avoid: Option<PatternSet>,
    /// A named power series instead of a pattern class.
    #[arg(long)]
    series: Option<SpecialSeries>,
    #[arg(long, value_enum, default_value_t = Method::Oracle)]
    method: Method,
    /// First size in the table.
    #[arg(long, default_value_t = 1)]
    from: usize,
}

fn require_n(n: Option<usize>) -> Result<usize, CliError> {
    n.ok_or_else(|| CliError::Usage("missing --n".into()))
}

fn encode(x: &Word) -> String {
    x.to_compact().unwrap_or_else(|| x.to_string())
}

fn count_table(src: &Source, n: usize, caps: &Caps) -> Result<CountTable, CliError> {
    if let Some(name) = src.series {
        let s = special_series(name, n)?;
        let values = (src.from..=n).map(|k| s.coeff(k).clone()).collect();
        return Ok(CountTable::new(name.name(), src.from, values, Provenance::Series));
    }
    let patterns = src.avoid.clone().unwrap_or_else(|| PatternSet::new([]));
    match src.method {
        Method::Oracle => Ok(oracle_table(&patterns, src.class, src.from, n, caps)?),
        Method::Formula => {
            let [y] = patterns.patterns() else {
                return Err(CliError::Usage("--method formula takes exactly one pattern".into()));
            };
            let values = (src.from..=n)
                .map(|k| closed_counts(y, src.class, k))
                .collect::<modasc::Result<Vec<_>>>()?;
            Ok(CountTable::new(format!("{}({y})", src.class), src.from, values, Provenance::Formula))
        }
    }
}

fn render_table(t: &CountTable, format: Format) -> String {
    match format {
        Format::Text | Format::Bfile => t.to_bfile(),
        Format::Json => t.to_json(),
        Format::Csv => t.to_csv(),
    }
}

fn print(s: &str) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    out.write_all(s.as_bytes()).and_then(|_| out.flush()).map_err(CliError::stdout)
}

fn generate_words(class: Class, avoid: Option<&PatternSet>, n: usize, format: Format) -> Result<(), CliError> {
    let words = match avoid {
        Some(p) => avoiders(n, p, class),
        None => generate(class, n),
    };
    let mut out = io::BufWriter::new(io::stdout().lock());
    let result = match format {
        Format::Json => {
            let encoded: Vec<String> = words.iter().map(encode).collect();
            serde_json::to_writer_pretty(&mut out, &encoded)
                .map_err(io::Error::from)
                .and_then(|_| writeln!(out))
        }
        _ => (|| {
            if format == Format::Csv {
                writeln!(out, "word")?;
            }
            for x in &words {
                writeln!(out, "{}", encode(x))?;
            }
            Ok(())
        })(),
    };
    result.and_then(|_| out.flush()).map_err(CliError::stdout)
}

fn report(cli: &Cli, caps: Caps, checks: Vec<report::Check>) -> Result<bool, CliError> {
    let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let mut r = RunReport::new(command, caps, cli.seedless);
    r.extend(checks);
    print(&r.render(cli.format))?;
    Ok(r.passed())
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    let caps = match cli.cap {
        Some(c) => Caps::uniform(c),
        None => Caps::from_env()?,
    };
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| CliError::Usage(format!("--jobs {j}: {e}")))?;
    }
    match &cli.command {
        Command::Generate { class, avoid } => {
            let n = require_n(cli.n)?;
            caps.check_oracle(n)?;
            generate_words(*class, avoid.as_ref(), n, cli.format)?;
            Ok(true)
        }
        Command::Count(src) => {
            let t = count_table(src, require_n(cli.n)?, &caps)?;
            print(&render_table(&t, cli.format))?;
            Ok(true)
        }
        Command::Export { source, out } => {
            let t = count_table(source, require_n(cli.n)?, &caps)?;
            let payload = render_table(&t, cli.format);
            match out {
                Some(path) => std::fs::write(path, payload).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?,
                None => print(&payload)?,
            }
            Ok(true)
        }
        Command::Table { which } => {
            let checks = tables::run(*which, require_n(cli.n)?, &caps)?;
            report(cli, caps, checks)
        }
        Command::Verify { suite } => {
            let checks = suites::run(*suite, require_n(cli.n)?, &caps)?;
            report(cli, caps, checks)
        }
        Command::Experiment { check, order } => {
            let checks = experiment::run(*check, *order, &caps)?;
            report(cli, caps, checks)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(&cli);
    eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
