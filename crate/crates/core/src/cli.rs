//! Command-line front end. Data goes to standard output, diagnostics and
//! progress to standard error.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::canon::automorphism_group_order;
use crate::constructions::{
    big_h_graph, complete_graph, cycle, f_graph, h_graph, petersen, projective_plane_graph,
    subdivide_complete, subdivide_cut, subdivide_uniform, widespread_petersen, Cut,
};
use crate::error::Error;
use crate::graph::Graph;
use crate::graph6;
use crate::oracle::brute_force_counts;
use crate::search::{enumerate_geodetic, SearchOptions, DEFAULT_CACHE_SIZE};
use crate::treegen::rooted_trees;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    Usage = 1,
    Capacity = 2,
    /// An enumerated graph failed re-verification.
    Verification = 3,
}

impl From<&Error> for ExitStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::CapacityExceeded { .. } => ExitStatus::Capacity,
            _ => ExitStatus::Usage,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "geodetic",
    version,
    about = "Search and construct geodetic graphs"
)]
pub struct Cli {
    /// More log output on standard error (repeat for debug).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// All biconnected geodetic graphs on n vertices, as sorted graph6 lines.
    Enumerate {
        n: usize,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        threads: Option<usize>,
        /// Entries per isomorphism cache; 0 disables caching.
        #[arg(long, default_value_t = DEFAULT_CACHE_SIZE)]
        cache_size: usize,
        /// Regular graphs only.
        #[arg(long)]
        regular: bool,
        /// Only graphs with at least this minimum degree.
        #[arg(long)]
        min_degree: Option<usize>,
        /// Output file, `-` for standard output.
        #[arg(long, short, default_value = "-")]
        output: PathBuf,
    },
    /// Geodesy and connectivity of each graph6 line.
    Check {
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    /// `n r d δ regular hamiltonian |Aut|` for each graph6 line.
    Report {
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    /// Emit one graph of a family as graph6.
    ///
    /// Families: complete N, cycle N, petersen, h M N S, H M N P S, F K,
    /// wp T, plane K, subdiv-complete L1 L2 .., subdiv-uniform T GRAPH6,
    /// subdiv-cut K GRAPH6 S1,S2,..
    Construct {
        family: String,
        #[arg(allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Brute-force row `n total connected biconnected` (n <= 8).
    Oracle { n: usize },
    /// Rooted trees on n vertices as parent-array lines.
    Trees { n: usize },
}

/// Parse `args` (program name first) and run against the given streams.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() {
                ExitStatus::Usage
            } else {
                ExitStatus::Ok
            };
        }
    };
    init_logging(cli.verbose);
    match execute(cli, stdin, stdout, stderr) {
        Ok(s) => s,
        Err(Failure(status, msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            status
        }
    }
}

fn init_logging(verbose: u8) {
    let level = match verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    let _ = env_logger::Builder::new()
        .filter_level(level)
        .parse_default_env()
        .try_init();
}

struct Failure(ExitStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure((&e).into(), e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(ExitStatus::Usage, e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure(ExitStatus::Usage, msg.into())
}

fn execute(
    cli: Cli,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<ExitStatus, Failure> {
    match cli.command {
        Command::Enumerate {
            n,
            threads,
            cache_size,
            regular,
            min_degree,
            output,
        } => {
            let mut opts = SearchOptions {
                cache_size,
                regular_only: regular,
                min_degree,
                ..SearchOptions::default()
            };
            if let Some(t) = threads {
                opts.threads = t.max(1);
            }
            let out = enumerate_geodetic(n, &opts)?;
            if out
                .graphs
                .values()
                .any(|g| !g.is_geodetic() || !g.is_biconnected())
            {
                return Err(Failure(
                    ExitStatus::Verification,
                    "an enumerated graph failed re-verification".into(),
                ));
            }
            let mut sink: Box<dyn Write + '_> = if output.as_os_str() == "-" {
                Box::new(&mut *stdout)
            } else {
                Box::new(BufWriter::new(File::create(&output)?))
            };
            for g in out.graphs.values() {
                writeln!(sink, "{}", graph6::encode(g))?;
            }
            sink.flush()?;
            writeln!(stderr, "n={n} count={}", out.graphs.len())?;
            Ok(ExitStatus::Ok)
        }
        Command::Check { input } => for_each_graph(&input, stdin, stderr, |g| {
            let yn = |b: bool| if b { 'y' } else { 'n' };
            writeln!(
                stdout,
                "geodetic={} connected={} biconnected={}",
                yn(g.is_geodetic()),
                yn(g.is_connected()),
                yn(g.is_biconnected())
            )?;
            Ok(())
        }),
        Command::Report { input } => for_each_graph(&input, stdin, stderr, |g| {
            let r = g.report()?;
            let yn = |b: bool| if b { 'y' } else { 'n' };
            writeln!(
                stdout,
                "{} {} {} {} {} {} {}",
                r.order,
                r.radius,
                r.diameter,
                r.min_degree,
                yn(r.is_regular),
                yn(r.is_hamiltonian),
                automorphism_group_order(g)
            )?;
            Ok(())
        }),
        Command::Construct { family, params } => {
            let g = construct(&family, &params)?;
            writeln!(stdout, "{}", graph6::encode(&g))?;
            Ok(ExitStatus::Ok)
        }
        Command::Oracle { n } => {
            let c = brute_force_counts(n)?;
            writeln!(stdout, "{n} {} {} {}", c.total, c.connected, c.biconnected)?;
            Ok(ExitStatus::Ok)
        }
        Command::Trees { n } => {
            for t in rooted_trees(n)? {
                writeln!(stdout, "{}", t.parent_line())?;
            }
            Ok(ExitStatus::Ok)
        }
    }
}

/// Apply `f` to every graph of a graph6 stream. Bad lines and failing graphs
/// are reported with their line number; the run continues and exits with a
/// usage status if any line failed.
fn for_each_graph(
    input: &PathBuf,
    stdin: &mut dyn BufRead,
    stderr: &mut dyn Write,
    mut f: impl FnMut(&Graph) -> Result<(), Failure>,
) -> Result<ExitStatus, Failure> {
    let reader: Box<dyn BufRead + '_> = if input.as_os_str() == "-" {
        Box::new(stdin)
    } else {
        Box::new(BufReader::new(File::open(input)?))
    };
    let mut failures = 0usize;
    for rec in graph6::read_stream(reader) {
        let rec = rec?;
        let result = rec.graph.map_err(Failure::from).and_then(|g| f(&g));
        if let Err(Failure(_, msg)) = result {
            failures += 1;
            writeln!(stderr, "line {}: {msg}", rec.line_number)?;
        }
    }
    Ok(if failures == 0 {
        ExitStatus::Ok
    } else {
        ExitStatus::Usage
    })
}

fn construct(family: &str, params: &[String]) -> Result<Graph, Failure> {
    let nums = |want: usize| -> Result<Vec<usize>, Failure> {
        if params.len() != want {
            return Err(usage(format!(
                "{family} takes {want} parameter(s), got {}",
                params.len()
            )));
        }
        params
            .iter()
            .map(|p| {
                p.parse()
                    .map_err(|_| usage(format!("not a non-negative integer: {p}")))
            })
            .collect()
    };
    let g = match family {
        "complete" => complete_graph(nums(1)?[0])?,
        "cycle" => cycle(nums(1)?[0])?,
        "petersen" => {
            nums(0)?;
            petersen()
        }
        "h" => {
            let p = nums(3)?;
            h_graph(p[0], p[1], p[2])?
        }
        "H" => {
            let p = nums(4)?;
            big_h_graph(p[0], p[1], p[2], p[3])?
        }
        "F" => f_graph(nums(1)?[0])?,
        "wp" => widespread_petersen(nums(1)?[0])?,
        "plane" => projective_plane_graph(nums(1)?[0])?,
        "subdiv-complete" => {
            let labels = params
                .iter()
                .map(|p| {
                    p.parse()
                        .map_err(|_| usage(format!("not a non-negative integer: {p}")))
                })
                .collect::<Result<Vec<usize>, _>>()?;
            subdivide_complete(&labels)?
        }
        "subdiv-uniform" => {
            let [t, g6] = params else {
                return Err(usage("subdiv-uniform takes T GRAPH6"));
            };
            let t = t
                .parse()
                .map_err(|_| usage(format!("not a non-negative integer: {t}")))?;
            subdivide_uniform(&graph6::decode(g6)?, t)?
        }
        "subdiv-cut" => {
            let [k, g6, side] = params else {
                return Err(usage("subdiv-cut takes K GRAPH6 S1,S2,.."));
            };
            let k = k
                .parse()
                .map_err(|_| usage(format!("not a non-negative integer: {k}")))?;
            let g = graph6::decode(g6)?;
            let side = side
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse()
                        .map_err(|_| usage(format!("bad vertex: {s}")))
                })
                .collect::<Result<Vec<usize>, _>>()?;
            subdivide_cut(&g, &Cut::new(g.order(), &side)?, k)?
        }
        other => return Err(usage(format!("unknown family: {other}"))),
    };
    Ok(g)
}
