//! `lamplight`: generate graphs, solve and verify lamp-lighting instances,
//! export the matching gadget, and run property suites.
//!
//! Exit status: 0 success, 1 infeasible instance or rejected witness,
//! 2 usage or input error, 3 internal invariant violation.

mod checks;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lamplight::ev::build_gadget;
use lamplight::graph::{generate, parse_graph, random_connected, write_graph, Format, GraphKind};
use lamplight::matching::{min_weight_perfect_matching, parse_weighted};
use lamplight::oracle::{
    brute_solutions_ee, brute_solutions_ev, brute_solutions_ve, brute_solutions_vv,
};
use lamplight::{solve_report, verify_witness, Error, Graph, Problem, SolutionReport};

use checks::{run_suite, Suite};

#[derive(Parser)]
#[command(
    name = "lamplight",
    version,
    about = "Lamp-lighting problems on simple graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProblemArg {
    Vv,
    Ve,
    Ev,
    Ee,
}

impl From<ProblemArg> for Problem {
    fn from(p: ProblemArg) -> Problem {
        match p {
            ProblemArg::Vv => Problem::Vv,
            ProblemArg::Ve => Problem::Ve,
            ProblemArg::Ev => Problem::Ev,
            ProblemArg::Ee => Problem::Ee,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Auto,
    Edgelist,
    Dimacs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generated graph.
    ///
    /// Kinds and parameters: path N, cycle N, star N, complete N,
    /// bipartite A B, tree N, random N P, connected N EXTRA.
    Gen {
        kind: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
    },
    /// Solve one problem on a graph.
    Solve {
        #[arg(long, value_enum)]
        problem: ProblemArg,
        /// Search for a smallest witness.
        #[arg(long)]
        minimum: bool,
        /// Largest solution-space dimension enumerated by --minimum for vv/ee.
        #[arg(long, default_value_t = lamplight::gf2::DEFAULT_NULLITY_CAP)]
        nullity_cap: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long, value_enum, default_value_t = GraphFormat::Auto)]
        input_format: GraphFormat,
        /// Graph file, or - for stdin.
        graph: PathBuf,
    },
    /// Check a witness: a JSON report from `solve` or whitespace-separated ids.
    Verify {
        #[arg(long, value_enum)]
        problem: ProblemArg,
        #[arg(long)]
        witness: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphFormat::Auto)]
        input_format: GraphFormat,
        graph: PathBuf,
    },
    /// Print the Edge-Vertex matching gadget as a weighted edge list.
    Reduce {
        /// Write "cross <gadget-edge> <original-edge>" lines to this file.
        #[arg(long)]
        map: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Auto)]
        input_format: GraphFormat,
        graph: PathBuf,
    },
    /// Minimum-weight perfect matching of a weighted edge list.
    Match { graph: PathBuf },
    /// List every solution by exhaustive search (small graphs only).
    Oracle {
        #[arg(long, value_enum)]
        problem: ProblemArg,
        #[arg(long, value_enum, default_value_t = GraphFormat::Auto)]
        input_format: GraphFormat,
        graph: PathBuf,
    },
    /// Run a property suite over the seeded test corpus.
    Check {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 8)]
        limit_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failed command: exit status plus message for stderr.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Invariant(_) => 3,
            Error::IsolatedVertex(_) | Error::OddOrder(_) | Error::NotConnected => 1,
            _ => 2,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        msg: msg.into(),
    }
}

type CmdResult = Result<u8, Failure>;

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| usage(format!("reading stdin: {e}")))?;
    } else {
        text = fs::read_to_string(path)
            .map_err(|e| usage(format!("reading {}: {e}", path.display())))?;
    }
    Ok(text)
}

fn load_graph(path: &Path, format: GraphFormat) -> Result<(Graph, Format), Failure> {
    let text = read_input(path)?;
    let format = match format {
        GraphFormat::Auto => Format::detect(&text),
        GraphFormat::Edgelist => Format::EdgeList,
        GraphFormat::Dimacs => Format::Dimacs,
    };
    Ok((parse_graph(&text, format)?, format))
}

fn param<T: std::str::FromStr>(params: &[String], i: usize, what: &str) -> Result<T, Failure> {
    let raw = params
        .get(i)
        .ok_or_else(|| usage(format!("missing parameter {what}")))?;
    raw.parse()
        .map_err(|_| usage(format!("invalid {what} '{raw}'")))
}

fn cmd_gen(kind: &str, params: &[String], seed: u64, format: GraphFormat) -> CmdResult {
    let n = || param::<usize>(params, 0, "N");
    let g = match kind {
        "path" => generate(GraphKind::Path(n()?))?,
        "cycle" => generate(GraphKind::Cycle(n()?))?,
        "star" => generate(GraphKind::Star(n()?))?,
        "complete" => generate(GraphKind::Complete(n()?))?,
        "bipartite" => generate(GraphKind::CompleteBipartite(
            param(params, 0, "A")?,
            param(params, 1, "B")?,
        ))?,
        "tree" => generate(GraphKind::RandomTree { n: n()?, seed })?,
        "random" => generate(GraphKind::RandomGraph {
            n: n()?,
            p: param(params, 1, "P")?,
            seed,
        })?,
        "connected" => random_connected(n()?, param(params, 1, "EXTRA")?, seed)?,
        other => return Err(usage(format!("unknown graph kind '{other}'"))),
    };
    let format = match format {
        GraphFormat::Dimacs => Format::Dimacs,
        _ => Format::EdgeList,
    };
    print!("{}", write_graph(&g, format));
    Ok(0)
}

// Vertex ids are printed in the input's numbering; edge ids are always the
// 0-based position in the input.
fn shift_report(r: &mut SolutionReport, offset: usize) {
    if !r.problem.presses_edges() {
        r.witness.iter_mut().for_each(|v| *v += offset);
    }
    if let Some(edges) = r.edges.as_mut() {
        edges.iter_mut().for_each(|(u, v)| {
            *u += offset;
            *v += offset;
        });
    }
}

fn cmd_solve(
    problem: Problem,
    minimum: bool,
    nullity_cap: usize,
    format: OutputFormat,
    graph: (Graph, Format),
) -> CmdResult {
    let (g, input_format) = graph;
    let mut report = solve_report(&g, problem, minimum, nullity_cap)?;
    shift_report(&mut report, input_format.id_offset());
    match format {
        OutputFormat::Json => {
            println!(
                "{}",
                serde_json::to_string(&report).expect("report serialises")
            )
        }
        OutputFormat::Text => print!("{}", report.to_text()),
    }
    Ok(if report.feasible { 0 } else { 1 })
}

fn parse_witness(text: &str) -> Result<Vec<usize>, Failure> {
    if text.trim_start().starts_with('{') {
        let report: SolutionReport = serde_json::from_str(text)
            .map_err(|e| usage(format!("witness is not a solve report: {e}")))?;
        if !report.feasible {
            return Err(usage("witness report is infeasible"));
        }
        return Ok(report.witness);
    }
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| usage(format!("invalid witness id '{t}'")))
        })
        .collect()
}

fn cmd_verify(problem: Problem, witness: &Path, graph: (Graph, Format)) -> CmdResult {
    let (g, format) = graph;
    let mut ids = parse_witness(&read_input(witness)?)?;
    if !problem.presses_edges() {
        let offset = format.id_offset();
        if ids.iter().any(|&v| v < offset) {
            return Err(usage("vertex ids start at 1 for DIMACS input"));
        }
        ids.iter_mut().for_each(|v| *v -= offset);
    }
    let ok = verify_witness(&g, problem, &ids)?;
    println!("{}", if ok { "valid" } else { "invalid" });
    Ok(if ok { 0 } else { 1 })
}

fn cmd_reduce(map: Option<&Path>, g: &Graph) -> CmdResult {
    let gadget = build_gadget(g)?;
    print!("{}", lamplight::matching::write_weighted(&gadget.star));
    if let Some(path) = map {
        let mut text = String::new();
        for (e, &c) in gadget.cross_of.iter().enumerate() {
            text.push_str(&format!("cross {c} {e}\n"));
        }
        fs::write(path, text).map_err(|e| usage(format!("writing {}: {e}", path.display())))?;
    }
    Ok(0)
}

fn cmd_match(path: &Path) -> CmdResult {
    let wg = parse_weighted(&read_input(path)?)?;
    match min_weight_perfect_matching(&wg) {
        None => {
            println!("none");
            Ok(1)
        }
        Some(m) => {
            let mut out = format!("weight {}\n", m.total_weight);
            for &e in &m.edges {
                let (u, v) = wg.graph.edge(e);
                out.push_str(&format!("{u} {v} {}\n", wg.weights[e]));
            }
            print!("{out}");
            Ok(0)
        }
    }
}

fn cmd_oracle(problem: Problem, graph: (Graph, Format)) -> CmdResult {
    let (g, format) = graph;
    let sols = match problem {
        Problem::Vv => brute_solutions_vv(&g)?,
        Problem::Ve => brute_solutions_ve(&g)?,
        Problem::Ev => brute_solutions_ev(&g)?,
        Problem::Ee => brute_solutions_ee(&g)?,
    };
    let offset = if problem.presses_edges() {
        0
    } else {
        format.id_offset()
    };
    let mut out = format!("solutions {}\n", sols.len());
    for s in &sols {
        let ids: Vec<String> = s.iter_ones().map(|i| (i + offset).to_string()).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    print!("{out}");
    Ok(if sols.is_empty() { 1 } else { 0 })
}

fn cmd_check(suite: Suite, limit_n: usize, seed: u64) -> CmdResult {
    let summary = run_suite(suite, limit_n, seed)?;
    if summary.passed() {
        println!("suite {suite}: pass ({} instances)", summary.instances);
        Ok(0)
    } else {
        println!(
            "suite {suite}: FAIL ({} of {} instances)",
            summary.failures.len(),
            summary.instances
        );
        for f in &summary.failures {
            println!("  {f}");
        }
        Ok(1)
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Gen {
            kind,
            params,
            seed,
            format,
        } => cmd_gen(&kind, &params, seed, format),
        Command::Solve {
            problem,
            minimum,
            nullity_cap,
            format,
            input_format,
            graph,
        } => {
            let graph = load_graph(&graph, input_format)?;
            cmd_solve(problem.into(), minimum, nullity_cap, format, graph)
        }
        Command::Verify {
            problem,
            witness,
            input_format,
            graph,
        } => cmd_verify(problem.into(), &witness, load_graph(&graph, input_format)?),
        Command::Reduce {
            map,
            input_format,
            graph,
        } => cmd_reduce(map.as_deref(), &load_graph(&graph, input_format)?.0),
        Command::Match { graph } => cmd_match(&graph),
        Command::Oracle {
            problem,
            input_format,
            graph,
        } => cmd_oracle(problem.into(), load_graph(&graph, input_format)?),
        Command::Check {
            suite,
            limit_n,
            seed,
        } => cmd_check(suite, limit_n, seed),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            f.code
        }
    };
    let _ = io::stdout().flush();
    ExitCode::from(code)
}
