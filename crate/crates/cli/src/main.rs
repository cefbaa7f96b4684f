//! Command-line front end: parse ideal and graph files, run the library
//! computations, emit text or JSON, and execute the named verification
//! scenarios.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or parse
//! error, 3 enumeration cap exceeded.

mod formats;
mod scenarios;

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use sympow_core::caps::Caps;
use sympow_core::error::Error as CoreError;
use sympow_core::graphs::{self, Graph};
use sympow_core::homology::{self, FieldSpec, SplitVerdict};
use sympow_core::monomial::MonomialIdeal;
use sympow_core::polyhedra;
use sympow_core::symbolic;

use formats::{emit_graph, emit_ideal, parse_graph, parse_ideal, IdealFile};

#[derive(Parser)]
#[command(
    name = "sympow",
    version,
    about = "Exact symbolic powers, polyhedral degrees and Betti tables of monomial ideals"
)]
struct Cli {
    /// Worker threads for the Betti-table scan (1 = sequential).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Override an enumeration cap, e.g. --cap betti-box=2000000.
    #[arg(long = "cap", global = true, value_name = "NAME=VALUE")]
    cap_overrides: Vec<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on monomial ideals given as ideal files.
    Ideal {
        #[command(subcommand)]
        command: IdealCommand,
    },
    /// Operations on graphs given as graph files.
    Graph {
        #[command(subcommand)]
        command: GraphCommand,
    },
    /// Run a named verification scenario; exits nonzero on mismatch.
    Verify {
        /// Scenario name, or `all`.
        scenario: String,
    },
}

#[derive(Args)]
struct FileArg {
    /// Input file path.
    file: String,
}

#[derive(Subcommand)]
enum IdealCommand {
    /// Echo the canonical minimal generators.
    Show(FileArg),
    /// Print the generators and maximal degree of the n-th symbolic power.
    Symbolic {
        #[arg(short = 'n', long = "n")]
        n: u32,
        file: String,
    },
    /// Print delta(I) as an exact rational.
    Delta(FileArg),
    /// Print the multigraded Betti table as JSON.
    Betti {
        /// Coefficient field: `q` or `zp:P` for a prime P.
        #[arg(long, default_value = "q")]
        field: String,
        file: String,
    },
    /// Decide componentwise linearity; `--prove` also searches for a
    /// splitting certificate.
    Cwl {
        #[arg(long)]
        prove: bool,
        file: String,
    },
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Print the cover ideal as an ideal file.
    Cover(FileArg),
    /// Emit the corona graph cg(G, s) as a graph file.
    Corona {
        #[arg(short = 's', long = "s")]
        s: u32,
        file: String,
    },
    /// Print delta(J(G)) by the combinatorial formula.
    Delta {
        /// Also compute delta polyhedrally and compare.
        #[arg(long)]
        cross_check: bool,
        file: String,
    },
    /// Print the symbolic degree profile and predicted d(J^(n)) table.
    Profile {
        /// Largest n in the prediction table.
        #[arg(short = 'n', long = "n", default_value_t = 6)]
        n: u64,
        file: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut caps = Caps::default();
    for override_spec in &cli.cap_overrides {
        let Some((name, value)) = override_spec.split_once('=') else {
            eprintln!("invalid --cap `{override_spec}`, expected NAME=VALUE");
            return ExitCode::from(2);
        };
        let Ok(value) = value.parse::<u64>() else {
            eprintln!("invalid --cap value in `{override_spec}`");
            return ExitCode::from(2);
        };
        if !caps.set(name, value) {
            eprintln!("unknown cap `{name}`");
            return ExitCode::from(2);
        }
    }
    if cli.threads == 0 {
        eprintln!("--threads must be at least 1");
        return ExitCode::from(2);
    }
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("failed to build thread pool: {e}");
            return ExitCode::from(2);
        }
    };
    pool.install(|| run(&cli.command, &caps))
}

fn run(command: &Command, caps: &Caps) -> ExitCode {
    match dispatch(command, caps) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

enum CliError {
    Parse(String),
    Core(CoreError),
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Core(CoreError::CapExceeded { .. } | CoreError::VertexDimension { .. }) => 3,
            CliError::Core(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(m) | CliError::Usage(m) => write!(f, "{m}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

fn read_ideal(path: &str) -> Result<IdealFile, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read `{path}`: {e}")))?;
    parse_ideal(&text).map_err(|e| CliError::Parse(format!("{path}: {e}")))
}

fn read_graph(path: &str) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read `{path}`: {e}")))?;
    parse_graph(&text).map_err(|e| CliError::Parse(format!("{path}: {e}")))
}

fn parse_field(field: &str) -> Result<FieldSpec, CliError> {
    field
        .parse::<FieldSpec>()
        .map_err(|_| CliError::Usage(format!("invalid --field `{field}`, expected `q` or `zp:P`")))
}

fn dispatch(command: &Command, caps: &Caps) -> Result<ExitCode, CliError> {
    match command {
        Command::Ideal { command } => ideal_command(command, caps),
        Command::Graph { command } => graph_command(command, caps),
        Command::Verify { scenario } => verify(scenario, caps),
    }
}

fn ideal_command(command: &IdealCommand, caps: &Caps) -> Result<ExitCode, CliError> {
    match command {
        IdealCommand::Show(arg) => {
            let file = read_ideal(&arg.file)?;
            print!("{}", emit_ideal(&file.names, &file.ideal));
        }
        IdealCommand::Symbolic { n, file } => {
            if *n == 0 {
                return Err(CliError::Usage("-n must be at least 1".into()));
            }
            let file = read_ideal(file)?;
            let power = symbolic::symbolic_power(&file.ideal, *n, caps)?;
            print!("{}", emit_ideal(&file.names, &power));
            println!("d = {}", power.max_gen_degree());
        }
        IdealCommand::Delta(arg) => {
            let file = read_ideal(&arg.file)?;
            let components: Vec<MonomialIdeal> = symbolic::minimal_components(&file.ideal, caps)?
                .into_iter()
                .map(|(_, q)| q)
                .collect();
            println!("{}", polyhedra::delta_from_components(&components, caps)?);
        }
        IdealCommand::Betti { field, file } => {
            let field = parse_field(field)?;
            let file = read_ideal(file)?;
            let table = homology::betti_table(&file.ideal, field, caps)?;
            let entries: Vec<serde_json::Value> = table
                .entries()
                .iter()
                .map(|((i, degree), beta)| {
                    json!({
                        "i": i,
                        "degree": degree,
                        "beta": beta,
                    })
                })
                .collect();
            let out = json!({
                "field": field.to_string(),
                "entries": entries,
                "reg": table.reg(),
                "pd": table.pd(),
                "depth_quotient": table.depth_quotient(),
            });
            println!("{}", serde_json::to_string(&out).expect("serialisable"));
        }
        IdealCommand::Cwl { prove, file } => {
            let file = read_ideal(file)?;
            let linear =
                homology::is_componentwise_linear(&file.ideal, FieldSpec::Rationals, caps)?;
            println!("{linear}");
            if *prove {
                match homology::koszul_split_prover(&file.ideal, FieldSpec::Rationals, caps)? {
                    SplitVerdict::Proved(cert) => {
                        println!("certificate:");
                        println!("{}", cert.render(&file.names, 1));
                    }
                    SplitVerdict::Unknown => {
                        println!("no certificate found (the search proves nothing)");
                    }
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn graph_command(command: &GraphCommand, caps: &Caps) -> Result<ExitCode, CliError> {
    match command {
        GraphCommand::Cover(arg) => {
            let graph = read_graph(&arg.file)?;
            let cover = graphs::cover_ideal(&graph)?;
            print!("{}", emit_ideal(graph.labels(), &cover));
        }
        GraphCommand::Corona { s, file } => {
            if *s == 0 {
                return Err(CliError::Usage("-s must be at least 1".into()));
            }
            let graph = read_graph(file)?;
            print!("{}", emit_graph(&graphs::corona(&graph, *s)?));
        }
        GraphCommand::Delta { cross_check, file } => {
            let graph = read_graph(file)?;
            let formula = graphs::delta_formula(&graph, caps)?;
            println!("{formula}");
            if *cross_check {
                let cover = graphs::cover_ideal(&graph)?;
                let components: Vec<MonomialIdeal> = symbolic::minimal_components(&cover, caps)?
                    .into_iter()
                    .map(|(_, q)| q)
                    .collect();
                let polyhedral = polyhedra::delta_from_components(&components, caps)?;
                if polyhedral != formula {
                    eprintln!("cross-check mismatch: polyhedral delta = {polyhedral}");
                    return Ok(ExitCode::from(1));
                }
                eprintln!("cross-check passed: polyhedral delta agrees");
            }
        }
        GraphCommand::Profile { n, file } => {
            let graph = read_graph(file)?;
            let profile = graphs::compute_e(&graph, caps)?;
            println!("delta = {}", profile.delta);
            println!("d(J) = {}", profile.d1);
            println!("e = {}", profile.e);
            for k in 1..=*n {
                match graphs::d_symbolic_formula(&profile, k) {
                    Ok(d) => println!("d(J^({k})) = {d}"),
                    Err(CoreError::FormulaNotGuaranteed { .. }) => {
                        println!("d(J^({k})) not guaranteed by the formula")
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(scenario: &str, caps: &Caps) -> Result<ExitCode, CliError> {
    let checks = scenarios::run(scenario, caps).map_err(CliError::Usage)?;
    let mut failures = 0usize;
    for check in &checks {
        if check.pass {
            println!("PASS {}", check.name);
        } else {
            println!("FAIL {}", check.name);
            failures += 1;
        }
    }
    if failures > 0 {
        eprintln!("{failures} of {} checks failed", checks.len());
        return Ok(ExitCode::from(1));
    }
    eprintln!("{} checks passed", checks.len());
    Ok(ExitCode::SUCCESS)
}
