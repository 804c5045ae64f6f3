//! `oddcycles`: analyze single graphs, run theorem campaigns over graph
//! corpora, mine corpora for graphs with given invariants, and print named
//! graphs.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 at least one check failed,
//! 3 a budget left results incomplete.

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use oddcycles::verifier::{
    analyze, mine, run_campaign, Budget, CheckId, CheckOutcome, CorpusSource, MinePredicate, Report, SkipReason,
    Timing, Verdict,
};
use oddcycles::{named_graph, parse_graph6, to_graph6, Graph, NamedGraphId};

#[derive(Parser)]
#[command(name = "oddcycles", version, about = "Exact odd-cycle invariants and theorem campaigns")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct BudgetArgs {
    /// Cycles the spectrum enumeration may visit per graph.
    #[arg(long, default_value_t = Budget::default().cycles)]
    budget: u64,
    /// Branch nodes per exact coloring solve.
    #[arg(long, default_value_t = Budget::default().solver_nodes)]
    solver_nodes: u64,
}

impl From<BudgetArgs> for Budget {
    fn from(b: BudgetArgs) -> Self {
        Budget { cycles: b.budget, solver_nodes: b.solver_nodes }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the verdict for one graph: a graph6 line, `name:ID`, or `-`
    /// to read graph6 from standard input.
    Analyze {
        input: String,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Run checks over a corpus: a graph6 file, `gen:N[,connected][,triangle-free]`
    /// or `rand:N,P,COUNT,SEED`.
    Verify {
        #[arg(long)]
        corpus: CorpusSource,
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all", value_parser = CheckId::parse_list)]
        checks: std::collections::BTreeSet<CheckId>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Record wall time in the report (makes reports differ between runs).
        #[arg(long)]
        timing: bool,
    },
    /// Print the graph6 line of every corpus graph matching all given filters.
    Mine {
        #[arg(long)]
        corpus: CorpusSource,
        #[arg(long)]
        triangle_free: bool,
        /// Required number of distinct odd cycle lengths.
        #[arg(long)]
        odd_lengths: Option<usize>,
        /// Required chromatic number.
        #[arg(long)]
        chi: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print named graphs, as edge lists or with `--graph6` as graph6 lines.
    Gen {
        #[arg(long = "name", required = true)]
        names: Vec<NamedGraphId>,
        #[arg(long)]
        graph6: bool,
    },
}

/// Any usage or I/O error; all of them exit with code 1.
#[derive(Debug)]
struct Failure(String);

impl From<oddcycles::Error> for Failure {
    fn from(e: oddcycles::Error) -> Self {
        Failure(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(e.to_string())
    }
}

fn read_input(input: &str) -> Result<Graph, Failure> {
    if let Some(name) = input.strip_prefix("name:") {
        return Ok(named_graph(name.parse()?)?);
    }
    let line = if input == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        buf.lines()
            .find(|l| !l.trim().is_empty())
            .ok_or_else(|| Failure("no graph on standard input".into()))?
            .trim()
            .to_owned()
    } else {
        input.to_owned()
    };
    parse_graph6(line.as_bytes()).map_err(|e| Failure(format!("invalid graph6 input: {e}")))
}

fn emit(out: Option<&PathBuf>, data: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, data).map_err(|e| Failure(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(data.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn exit_code(failures: usize, budget_limited: bool) -> u8 {
    if failures > 0 {
        2
    } else if budget_limited {
        3
    } else {
        0
    }
}

fn render_verdict(v: &Verdict) -> String {
    let mut s = format!("graph6 {}\nn {} m {}\n", v.graph6, v.n, v.edge_count);
    let odd: Vec<String> = v.spectrum.odd_lengths.iter().map(ToString::to_string).collect();
    let complete = if v.spectrum.complete { "" } else { " (incomplete)" };
    s += &format!("odd cycle lengths {{{}}}{complete}\n", odd.join(", "));
    match v.chi {
        Some(chi) => s += &format!("chi {chi}\n"),
        None => s += "chi unknown (solver budget)\n",
    }
    s += &format!("omega {}\n", v.omega);
    for (id, outcome) in &v.checks {
        let status = match outcome {
            CheckOutcome::Pass => "pass".to_owned(),
            CheckOutcome::Fail { witness } => format!("FAIL: {}", witness.detail),
            CheckOutcome::Skip { reason: SkipReason::Hypothesis } => "skip (hypothesis)".to_owned(),
            CheckOutcome::Skip { reason: SkipReason::Budget } => "skip (budget)".to_owned(),
        };
        s += &format!("  {id:<22} {status}\n");
    }
    s
}

fn summarize(report: &Report) {
    eprintln!(
        "{} graphs, {} failures, {} budget skips",
        report.graphs,
        report.failure_count(),
        report.budget_skips()
    );
    for f in &report.failures {
        eprintln!("FAILURE at corpus index {}: {}", f.index, f.verdict.graph6);
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Analyze { input, json, budget } => {
            let g = read_input(&input)?;
            let v = analyze(&g, budget.into());
            let text = if json {
                serde_json::to_string_pretty(&v).expect("verdict serializes") + "\n"
            } else {
                render_verdict(&v)
            };
            emit(None, &text)?;
            let budget_limited = v.checks.values().any(|o| matches!(o, CheckOutcome::Skip { reason: SkipReason::Budget }));
            let failures = v.checks.values().filter(|o| o.is_fail()).count();
            Ok(exit_code(failures, budget_limited))
        }
        Command::Verify { corpus, checks, jobs, budget, out, format, timing } => {
            let start = Instant::now();
            let mut report = run_campaign(&corpus, &checks, jobs, budget.into())?;
            let wall_ms = start.elapsed().as_millis() as u64;
            eprintln!("wall time {wall_ms} ms");
            if timing {
                report.timing = Some(Timing { wall_ms });
            }
            summarize(&report);
            let data = match format {
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv(),
            };
            emit(out.as_ref(), &data)?;
            Ok(exit_code(report.failure_count(), report.budget_skips() > 0))
        }
        Command::Mine { corpus, triangle_free, odd_lengths, chi, jobs, budget, out } => {
            let pred = MinePredicate { triangle_free, odd_length_count: odd_lengths, chi };
            let result = mine(&corpus, &pred, jobs, budget.into())?;
            eprintln!(
                "scanned {} graphs: {} hits, {} undecided",
                result.scanned,
                result.hits.len(),
                result.undecided
            );
            let data: String = result.hits.iter().map(|h| format!("{h}\n")).collect();
            emit(out.as_ref(), &data)?;
            Ok(exit_code(0, result.undecided > 0))
        }
        Command::Gen { names, graph6 } => {
            let mut data = String::new();
            for id in names {
                let g = named_graph(id)?;
                if graph6 {
                    data += &to_graph6(&g).map_err(oddcycles::Error::from)?;
                    data.push('\n');
                } else {
                    data += &format!("# {id}\n{} {}\n", g.order(), g.size());
                    for (u, v) in g.edges() {
                        data += &format!("{u} {v}\n");
                    }
                }
            }
            emit(None, &data)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::exit_code;

    #[test]
    fn failures_take_precedence_over_budget() {
        assert_eq!(exit_code(0, false), 0);
        assert_eq!(exit_code(0, true), 3);
        assert_eq!(exit_code(1, true), 2);
        assert_eq!(exit_code(4, false), 2);
    }
}
