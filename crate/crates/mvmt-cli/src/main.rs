//! Command-line front end: frame checking, formula evaluation, sequent
//! truth, countermodel search, concept listing and the bundled scenario
//! report.
//!
//! Exit codes: 0 when the command succeeds and the checked property holds,
//! 1 when a property fails or a countermodel is found, 2 on input errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use mvmt::algebra::{countermodel_search, SearchBounds, SearchOutcome};
use mvmt::case_study;
use mvmt::formats;
use mvmt::fuzzy::graded_index;
use mvmt::language;
use mvmt::polarity::{EnumerationMode, DEFAULT_ENUMERATION_LIMIT};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "mvmt", version, about = "Many-valued multi-type modal logic tool")]
struct Cli {
    /// Seed for all sampled subcommands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Report format where applicable.
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Truth lattice for commands that do not read one from a file, either
    /// `lukasiewicz:N` or a lattice spec path.
    #[arg(long, global = true, default_value = "lukasiewicz:2")]
    lattice: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Text,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Check the compatibility conditions of a frame file.
    CheckFrame {
        /// Frame spec (JSON).
        path: PathBuf,
    },
    /// Evaluate a formula at one value/state cell of a model.
    Eval {
        /// Model spec (JSON).
        model: PathBuf,
        #[command(flatten)]
        formula: FormulaArg,
        /// Grade coordinate, e.g. 0.0.
        #[arg(long)]
        beta: f64,
        /// State name, e.g. zF.
        #[arg(long)]
        state: String,
    },
    /// Print the full graded valuation table and refutation vector of a
    /// formula in a model.
    Table {
        /// Model spec (JSON).
        model: PathBuf,
        #[command(flatten)]
        formula: FormulaArg,
    },
    /// Decide whether a sequent is true in a model.
    Sequent {
        /// Model spec (JSON).
        model: PathBuf,
        /// Sequent, e.g. "SD: p & q |- p".
        sequent: String,
    },
    /// Search for a model falsifying a sequent.
    Countermodel {
        /// Sequent, e.g. "SD: p |- q".
        sequent: String,
        /// Maximum states per side.
        #[arg(long, default_value_t = 1)]
        max_states: usize,
        /// Enumerate every frame and assignment within bounds instead of
        /// sampling.
        #[arg(long)]
        exhaustive: bool,
        /// Sample count when not exhaustive.
        #[arg(long, default_value_t = 2000)]
        samples: usize,
    },
    /// Enumerate the concepts of a context file.
    Concepts {
        /// Context spec (JSON).
        context: PathBuf,
        /// Use the brute-force scan instead of closure generation.
        #[arg(long)]
        exhaustive: bool,
        /// Candidate limit for the brute-force scan.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
        limit: f64,
    },
    /// Rebuild the bundled socio-political scenario and print the
    /// recomputation report.
    CaseStudy {
        /// Emit the full comparison report.
        #[arg(long)]
        report: bool,
    },
}

#[derive(Args)]
struct FormulaArg {
    /// Formula with sort annotation, e.g. "PP: pi_L".
    #[arg(long)]
    formula: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> mvmt::Result<u8> {
    match cli.command {
        Command::CheckFrame { path } => {
            let frame = formats::load_frame(&path)?;
            let violations = frame.compat_check();
            if violations.is_empty() {
                println!("compatible");
                Ok(0)
            } else {
                println!("incompatible: {} violated singleton images", violations.len());
                for v in &violations {
                    println!("  {v}");
                }
                Ok(1)
            }
        }
        Command::Eval { model, formula, beta, state } => {
            let model = formats::load_model(&model)?;
            let parsed = language::parse(&formula.formula)?;
            let lat = model.lattice().clone();
            let beta = lat.value_from_number(beta)?;
            let side = model.side(parsed.sort);
            let z = side.states().index_of(&state)?;
            let (interp, warnings) =
                model.extend_with_warnings(&parsed.formula, parsed.sort)?;
            for w in warnings {
                eprintln!("warning: {w}");
            }
            let cell = interp.val.get(graded_index(side.states().len(), beta, z));
            println!("{}", lat.label(cell));
            Ok(0)
        }
        Command::Table { model, formula } => {
            let model = formats::load_model(&model)?;
            let parsed = language::parse(&formula.formula)?;
            let lat = model.lattice().clone();
            let side = model.side(parsed.sort);
            let n = side.states().len();
            let (interp, warnings) =
                model.extend_with_warnings(&parsed.formula, parsed.sort)?;
            for w in warnings {
                eprintln!("warning: {w}");
            }
            println!("val[{}]\t{}", parsed.formula, side.states().names().join("\t"));
            for beta in lat.values() {
                let cells: Vec<&str> = (0..n)
                    .map(|z| lat.label(interp.val.get(graded_index(n, beta, z))))
                    .collect();
                println!("{}\t{}", lat.label(beta), cells.join("\t"));
            }
            println!("descr[{}] = {}", parsed.formula, interp.descr.render(&lat));
            Ok(0)
        }
        Command::Sequent { model, sequent } => {
            let model = formats::load_model(&model)?;
            let sequent = language::parse_sequent(&sequent)?;
            if model.sequent_true(&sequent)? {
                println!("true");
                Ok(0)
            } else {
                println!("false");
                Ok(1)
            }
        }
        Command::Countermodel { sequent, max_states, exhaustive, samples } => {
            let sequent = language::parse_sequent(&sequent)?;
            let lat = formats::lattice_from_arg(&cli.lattice)?;
            let levels = lat.chain_levels().ok_or(mvmt::Error::UnsupportedLattice(
                "Łukasiewicz chain (countermodel search enumerates chain grids)",
            ))?;
            let bounds = SearchBounds {
                max_states,
                chain_levels: levels,
                exhaustive,
                samples,
                seed: cli.seed,
            };
            match countermodel_search(&sequent, &bounds)? {
                SearchOutcome::Witness(w) => {
                    println!("countermodel found");
                    println!("{}", w.describe());
                    Ok(1)
                }
                SearchOutcome::Exhausted { frames_checked, models_checked } => {
                    println!(
                        "exhausted: no countermodel within bounds \
                         ({frames_checked} frames, {models_checked} models); \
                         inconclusive beyond these bounds"
                    );
                    Ok(0)
                }
                SearchOutcome::NoneFoundSampled { frames_checked, models_checked } => {
                    println!(
                        "sampled: no countermodel in {models_checked} models \
                         over {frames_checked} frames; inconclusive"
                    );
                    Ok(0)
                }
            }
        }
        Command::Concepts { context, exhaustive, limit } => {
            let polarity = formats::load_context(&context)?;
            let mode = if exhaustive {
                EnumerationMode::Exhaustive
            } else {
                EnumerationMode::ClosureGeneration
            };
            let lat = polarity.lattice().clone();
            let lattice = polarity.enumerate_concepts(mode, limit)?;
            println!("{} concepts", lattice.len());
            for (i, c) in lattice.concepts().iter().enumerate() {
                println!("{i}: extent {} intent {}", c.extent.render(&lat), c.intent.render(&lat));
            }
            Ok(0)
        }
        Command::CaseStudy { report } => {
            let scenario = case_study::build_scenario()?;
            let full = scenario.report()?;
            if report {
                match cli.output {
                    Output::Csv => print!("{}", full.to_csv()),
                    Output::Text => print!("{}", full.to_text()),
                }
            } else {
                let mismatches = full.discrepancies().len();
                println!(
                    "scenario rebuilt: {} report rows, {} mismatching published entries, frame {}",
                    full.rows.len(),
                    mismatches,
                    if full.frame_compatible { "compatible" } else { "incompatible" }
                );
            }
            Ok(0)
        }
    }
}
