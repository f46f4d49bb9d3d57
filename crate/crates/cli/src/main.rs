use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use paritygraph::bounds::{capacity_bounds, rank_certificate, verify_certificate};
use paritygraph::constructions::{clique_partition, complete, connected_chain};
use paritygraph::sim::{run_sim, SimConfig};
use paritygraph::sweep::{sweep, LocalityRule, SweepRow};
use paritygraph::{ratio_f64, ratio_string, CodeSummary, Error, ErrorKind, Graph, StorageCode};

#[derive(Parser, Debug)]
#[command(
    name = "paritygraph",
    version,
    about = "Binary storage codes on graphs with parity repair"
)]
struct Cli {
    /// Write the primary output to this file (atomically) instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Graph output format for `construct`.
    #[arg(long, global = true, value_enum, default_value_t = GraphFormat::Edgelist)]
    format: GraphFormat,

    /// Seed for `simulate`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Emit JSON on stdout instead of the human-readable summary.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Clique,
    Chain,
    Complete,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a graph from one of the constructions.
    Construct {
        family: Family,
        n: usize,
        /// Locality (required for `clique` and `chain`).
        r: Option<usize>,
    },
    /// Report rank, dimension, rate and capacity bounds of a graph's code.
    Analyze { graph: PathBuf },
    /// Emit and verify a rank certificate, giving a rate upper bound.
    Certify {
        graph: PathBuf,
        /// Print the rows covered by each pick to stderr.
        #[arg(long)]
        verbose: bool,
    },
    /// List every codeword, one per line.
    Enumerate {
        graph: PathBuf,
        #[arg(long, default_value_t = 1 << 20)]
        limit: u64,
    },
    /// Inject sequential single-server failures and repair them.
    Simulate {
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        failures: usize,
        /// Flip this vertex's stored bit before the run (test mode).
        #[arg(long)]
        corrupt: Option<usize>,
    },
    /// Tabulate achieved rates against the capacity bounds as CSV.
    Sweep {
        n_min: usize,
        n_max: usize,
        /// Locality rule: const:<k>, sqrt or log.
        #[arg(long)]
        rule: String,
        /// Also compute the rank of the connected construction.
        #[arg(long)]
        connected: bool,
    },
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Io { path: PathBuf, source: io::Error },
    Violation(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => match e.kind() {
                ErrorKind::Parameter => 2,
                ErrorKind::Format => 3,
                ErrorKind::Model => 4,
            },
            CliError::Io { .. } => 3,
            CliError::Violation(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Violation(msg) => f.write_str(msg),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Writes to `--out` through a temporary file in the same directory, or to
/// stdout when no path is given.
fn emit(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    let Some(path) = out else {
        print!("{content}");
        return io::stdout().flush().map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        });
    };
    let io_err = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(content.as_bytes()).map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(text.parse()?)
}

fn load_code(path: &Path) -> Result<StorageCode, CliError> {
    Ok(StorageCode::build(load_graph(path)?)?)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report types serialize infallibly");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct BoundsReport {
    lower_num: u64,
    lower_den: u64,
    upper_num: u64,
    upper_den: u64,
}

#[derive(Serialize)]
struct AnalyzeReport {
    #[serde(flatten)]
    code: CodeSummary,
    connected: bool,
    /// Absent when the locality falls outside `2..=n-1`.
    bounds: Option<BoundsReport>,
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Construct { family, n, r } => {
            let need_r = || {
                r.ok_or_else(|| {
                    Error::InvalidParameters(format!("family {family:?} needs a locality r"))
                })
            };
            let g = match family {
                Family::Clique => clique_partition(*n, need_r()?)?,
                Family::Chain => connected_chain(*n, need_r()?)?,
                Family::Complete => complete(*n)?,
            };
            let text = match cli.format {
                GraphFormat::Edgelist => g.to_edge_list(),
                GraphFormat::Dot => g.to_dot(),
            };
            emit(out, &text)
        }
        Command::Analyze { graph } => {
            let code = load_code(graph)?;
            let bounds = capacity_bounds(code.n(), code.locality())
                .ok()
                .map(|b| BoundsReport {
                    lower_num: *b.lower.numer(),
                    lower_den: *b.lower.denom(),
                    upper_num: *b.upper.numer(),
                    upper_den: *b.upper.denom(),
                });
            let report = AnalyzeReport {
                code: code.summary(),
                connected: code.graph().is_connected(),
                bounds,
            };
            emit(out, &to_json(&report))
        }
        Command::Certify { graph, verbose } => {
            let code = load_code(graph)?;
            let cert = rank_certificate(code.parity())?;
            let verified = verify_certificate(code.parity(), &cert);
            if *verbose {
                for (pick, rows) in cert.picks().iter().zip(cert.coverage(code.parity())?) {
                    let rows: Vec<String> = rows.iter().map(ToString::to_string).collect();
                    eprintln!(
                        "pick row={} column={} covers {}",
                        pick.pivot_row,
                        pick.column,
                        rows.join(",")
                    );
                }
            }
            let json = to_json(&cert);
            if out.is_some() {
                emit(out, &json)?;
            }
            if cli.json {
                print!("{json}");
            } else {
                println!("size={} verified={verified}", cert.size());
                println!(
                    "rate <= 1 - {}/{} = {}",
                    cert.size(),
                    cert.n(),
                    ratio_string(&cert.rate_upper_bound())
                );
            }
            if !verified {
                return Err(CliError::Violation(
                    "certificate failed verification".into(),
                ));
            }
            Ok(())
        }
        Command::Enumerate { graph, limit } => {
            let code = load_code(graph)?;
            let mut text = String::new();
            for word in code.enumerate_codewords(*limit)? {
                let _ = writeln!(text, "{word}");
            }
            emit(out, &text)
        }
        Command::Simulate {
            graph,
            failures,
            corrupt,
        } => {
            let code = load_code(graph)?;
            let cfg = SimConfig {
                failure_count: *failures,
                seed: cli.seed,
                message: None,
                corrupt: *corrupt,
            };
            let report = run_sim(&code, &cfg)?;
            let json = to_json(&report);
            if out.is_some() {
                emit(out, &json)?;
            }
            if cli.json {
                print!("{json}");
            } else {
                println!("{}", report.summary_line());
            }
            if !report.all_correct {
                return Err(CliError::Violation(
                    "repair produced wrong bits: stored word is not a codeword".into(),
                ));
            }
            Ok(())
        }
        Command::Sweep {
            n_min,
            n_max,
            rule,
            connected,
        } => {
            let rule: LocalityRule = rule.parse()?;
            let rows = sweep(*n_min, *n_max, rule, *connected)?;
            emit(out, &sweep_csv(&rows))
        }
    }
}

const SWEEP_HEADER: [&str; 10] = [
    "n",
    "r",
    "p",
    "rank_achieved",
    "rate_achieved",
    "rate_achieved_f64",
    "lower_bound",
    "upper_bound",
    "connected_rank",
    "connected_rate",
];

fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(SWEEP_HEADER).expect("writing to memory");
    for row in rows {
        w.write_record([
            row.n.to_string(),
            row.r.to_string(),
            row.p.to_string(),
            row.rank_achieved.to_string(),
            ratio_string(&row.rate_achieved),
            format!("{:.6}", ratio_f64(&row.rate_achieved)),
            ratio_string(&row.lower_bound),
            ratio_string(&row.upper_bound),
            row.connected_rank
                .map(|r| r.to_string())
                .unwrap_or_default(),
            row.connected_rate
                .as_ref()
                .map(ratio_string)
                .unwrap_or_default(),
        ])
        .expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}
