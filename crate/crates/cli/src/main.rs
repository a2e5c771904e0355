use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sdualkit::commands::{parse_diagram, run_coulomb, run_diagram, run_dual, run_orbit, CoulombOptions, DiagramAction, OrbitAction};
use sdualkit::repl::run_repl;
use sdualkit::verify::run_verify;
use sdualkit::{read_input, seed_from_env, CliError, CliResult};
use sdualkit_core::coulomb::DEFAULT_TABLE_CUTOFF;

/// Abelian Coulomb branches, brane diagrams and S-dual pairs.
#[derive(Parser, Debug)]
#[command(name = "sdualkit", version)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coulomb branch of a torus gauge theory given as JSON (file, literal or `-`).
    Coulomb {
        /// Print structure constants instead of a presentation.
        #[arg(long)]
        table: bool,
        /// Bound on |λ|_∞ for --table.
        #[arg(long, default_value_t = DEFAULT_TABLE_CUTOFF)]
        cutoff: i64,
        input: String,
    },
    /// Operations on a brane diagram such as `0 o 1 x 1 o 0`.
    Diagram {
        #[command(subcommand)]
        action: DiagramCmd,
    },
    /// Nilpotent orbits and Slodowy slices in gl(n).
    Orbit {
        #[command(subcommand)]
        action: OrbitCmd,
    },
    /// S-dual of a space descriptor with its dimension checks.
    Dual { input: String },
    /// Run the verification suite.
    Verify {
        /// Only run checks whose name contains this string.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Interactive diagram session reading commands from stdin.
    Repl { diagram: String },
}

#[derive(Subcommand, Debug)]
enum DiagramCmd {
    Sdual { diagram: String },
    Hw { index: usize, diagram: String },
    Linking { diagram: String },
}

#[derive(Subcommand, Debug)]
enum OrbitCmd {
    /// Jordan type of the orbit reached by an NS5 chain with these dims.
    Chain { dims: String },
    /// Dual of GL(n) x Slice[λ].
    Dual { partition: String },
    /// Centralizer and orbit dimensions and rank profile.
    Dims { partition: String },
}

fn run(cli: Cli) -> CliResult<String> {
    let json = cli.json;
    match cli.command {
        Command::Coulomb { table, cutoff, input } => {
            if cutoff < 0 {
                return Err(CliError::Parse("--cutoff must be nonnegative".into()));
            }
            run_coulomb(&read_input(&input)?, CoulombOptions { table, cutoff, json })
        }
        Command::Diagram { action } => {
            let (action, text) = match action {
                DiagramCmd::Sdual { diagram } => (DiagramAction::Sdual, diagram),
                DiagramCmd::Hw { index, diagram } => (DiagramAction::Hw(index), diagram),
                DiagramCmd::Linking { diagram } => (DiagramAction::Linking, diagram),
            };
            run_diagram(action, &read_input(&text)?, json)
        }
        Command::Orbit { action } => {
            let action = match action {
                OrbitCmd::Chain { dims } => OrbitAction::Chain(dims),
                OrbitCmd::Dual { partition } => OrbitAction::Dual(partition),
                OrbitCmd::Dims { partition } => OrbitAction::Dims(partition),
            };
            run_orbit(&action, json)
        }
        Command::Dual { input } => run_dual(&read_input(&input)?, json),
        Command::Verify { filter } => {
            let report = run_verify(filter.as_deref(), seed_from_env()?);
            if report.checks.is_empty() {
                return Err(CliError::Parse(format!("no check matches {:?}", filter.unwrap_or_default())));
            }
            let text = if json {
                let mut s = serde_json::to_string_pretty(&report).expect("serializable report");
                s.push('\n');
                s
            } else {
                report.render()
            };
            if report.all_passed() {
                Ok(text)
            } else {
                print!("{text}");
                Err(CliError::CheckFailed(format!("{} check(s) failed", report.failures())))
            }
        }
        Command::Repl { diagram } => {
            let d = parse_diagram(&read_input(&diagram)?)?;
            let stdin = std::io::stdin();
            run_repl(d, stdin.lock(), std::io::stdout().lock())
                .map_err(|e| CliError::Parse(format!("i/o error: {e}")))?;
            Ok(String::new())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("sdualkit: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
