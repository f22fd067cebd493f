use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use holekit::classify::{classify_all_edges, to_csv};
use holekit::decide::{decide_balanced_convex_4hole, decide_with_witness};
use holekit::generators::{generate, Family, GeneratorSpec};
use holekit::holes::find_balanced_2khole;
use holekit::render::{render_svg, Overlays, RenderOptions};
use holekit::report;
use holekit::{BicoloredSet, Error};

#[derive(Parser)]
#[command(name = "holekit", version, about = "Balanced 4-holes in bicolored point sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count balanced 4-holes and empty triangles.
    Count {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
        /// Cross-check against the exhaustive oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Decide whether a balanced convex 4-hole exists.
    Decide {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
        /// Also construct a witness quadrilateral.
        #[arg(long)]
        witness: bool,
    },
    /// Color every red-blue edge and check the counting lemmas.
    Classify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Find a balanced 2k-hole (k from --k) in a set with |R| = |B|.
    Khole {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Generate a point family in the text format.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Draw the set as SVG.
    Render {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
        /// Overlay a balanced convex 4-hole witness, if one exists.
        #[arg(long)]
        witness: bool,
        /// Overlay the edge classification.
        #[arg(long)]
        classify: bool,
        #[arg(long, default_value_t = 600)]
        svg_size: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct FamilyArgs {
    /// double-chain | regular-gon-black | random-general | random-separable |
    /// separable-no-convex | two-red-few-holes
    #[arg(long)]
    family: Option<String>,
    /// Points per color.
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Polygon parameter of regular-gon-black; for khole, red vertices of the hole.
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Blue count of two-red-few-holes.
    #[arg(long, default_value_t = 5)]
    m: usize,
    /// Blocker offset of regular-gon-black; omitted runs the built-in schedule.
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct Input {
    /// Point file (`x y R|B` per line).
    #[arg(long = "in", conflicts_with = "family")]
    input: Option<PathBuf>,
    #[command(flatten)]
    family: FamilyArgs,
}

#[derive(Args)]
struct Output {
    /// Output file; standard output if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::CollinearInput(..)
            | Error::DuplicatePoint { .. }
            | Error::CoordinateRange(_)
            | Error::Parse { .. } => 2,
            Error::OracleCapExceeded { .. } => 3,
            Error::Precondition(_) => 4,
            Error::ClassificationInvariantViolated { .. } => 5,
            Error::NotSimple | Error::WitnessConstructionFailed(_) | Error::ConstructionUnverified(_) => 1,
        };
        Failure { code, msg: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure { code: 1, msg: e.to_string() }
    }
}

fn family_spec(args: &FamilyArgs, name: &str) -> Result<GeneratorSpec, Failure> {
    let family = Family::parse(name).ok_or_else(|| Failure { code: 4, msg: format!("unknown family {name}") })?;
    Ok(GeneratorSpec { family, n: args.n, k: args.k, m: args.m, epsilon: args.eps, seed: args.seed })
}

fn load(input: &Input) -> Result<BicoloredSet, Failure> {
    match (&input.input, &input.family.family) {
        (Some(path), _) => Ok(BicoloredSet::parse(&std::fs::read_to_string(path)?)?),
        (None, Some(name)) => Ok(generate(&family_spec(&input.family, name)?)?),
        (None, None) => Err(Failure { code: 4, msg: "give --in FILE or --family NAME".into() }),
    }
}

fn emit(out: &Output, text: &str) -> Result<(), Failure> {
    match &out.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Count { input, out, oracle } => {
            let s = load(&input)?;
            emit(&out, &report::to_json(&report::count_report(&s, oracle)?))
        }
        Command::Decide { input, out, witness } => {
            let s = load(&input)?;
            if s.red_count() < 2 || s.blue_count() < 2 {
                return Err(Error::Precondition("decide needs at least two points of each color".into()).into());
            }
            let d = if witness { decide_with_witness(&s)? } else { decide_balanced_convex_4hole(&s) };
            emit(&out, &report::to_json(&report::decision_report(&s, &d)))
        }
        Command::Classify { input, out, format } => {
            let s = load(&input)?;
            let c = classify_all_edges(&s)?;
            let summary = report::classify_report(&s, &c)?;
            match format {
                Format::Json => emit(&out, &report::to_json(&summary)),
                Format::Csv => {
                    eprint!("{}", report::to_json(&summary));
                    emit(&out, &to_csv(&c))
                }
            }
        }
        Command::Khole { input, out } => {
            let size = input.family.k;
            let s = load(&input)?;
            let h = find_balanced_2khole(&s, size)?;
            emit(&out, &report::to_json(&report::khole_report(&s, size, &h)))
        }
        Command::Gen { family, out } => {
            let name = family.family.clone().ok_or_else(|| Failure { code: 4, msg: "gen needs --family".into() })?;
            let s = generate(&family_spec(&family, &name)?)?;
            emit(&out, &s.to_text())
        }
        Command::Render { input, out, witness, classify, svg_size } => {
            let s = load(&input)?;
            let decision = if witness && s.red_count() >= 2 && s.blue_count() >= 2 {
                Some(decide_with_witness(&s)?)
            } else {
                None
            };
            let edges = if classify { Some(classify_all_edges(&s)?) } else { None };
            let overlays = Overlays { hole: decision.as_ref().and_then(|d| d.witness.as_ref()), edges: edges.as_ref() };
            let opts = RenderOptions { size: svg_size, ..RenderOptions::default() };
            emit(&out, &render_svg(&s, overlays, &opts))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("holekit: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
