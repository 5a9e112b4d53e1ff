//! `relcm` — relative homological invariants of monomial quotients.
//!
//! Exit codes: 0 success or property holds, 1 property fails or a suite
//! reports violations, 2 input error, 3 engine disagreement.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use relcm::complex::Functor;
use relcm::parse::parse_ideal;
use relcm::verifier::{self, fixtures, CorpusParams, Fault, RunConfig};
use relcm::{Engine, Error, ExecMode, MonomialIdeal, PrimeField, RingSpec, Verdict};

const EXIT_FALSE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_DISAGREEMENT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "relcm",
    version,
    about = "Relative Cohen-Macaulay, Gorenstein and regular invariants of monomial quotients"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every invariant and property verdict of (a, S/I).
    Analyze {
        #[command(flatten)]
        pair: PairArgs,
        /// Also list every nonzero graded piece of Ext(S/a, S/I) or H_a(S/I).
        #[arg(long, value_enum)]
        dump_slices: Option<SliceKind>,
    },
    /// Decide one property; exit 0 if it holds and 1 if it fails.
    Check {
        property: Property,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Replay the built-in worked examples against their known values.
    #[command(alias = "verify-paper")]
    VerifyExamples {
        /// Replay a single example by id.
        #[arg(long)]
        example: Option<String>,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Generate a seeded random corpus and run every theorem suite on it.
    Corpus {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Number of variables.
        #[arg(long, default_value_t = 4)]
        vars: usize,
        #[arg(long, default_value_t = 3)]
        max_exponent: u32,
        #[arg(long, default_value_t = 1)]
        min_gens: usize,
        #[arg(long, default_value_t = 5)]
        max_gens: usize,
        #[arg(long)]
        squarefree: bool,
        /// Write one JSON line per instance here; violations go to
        /// `<stem>.counterexamples.jsonl` beside it.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Perturb a checker on purpose to confirm the suites notice.
        #[arg(long, value_enum)]
        inject_fault: Option<FaultArg>,
        #[command(flatten)]
        engine: EngineArgs,
    },
}

#[derive(Args)]
struct EngineArgs {
    /// Characteristic of the coefficient field (must be prime).
    #[arg(long = "char", default_value_t = relcm::ring::DEFAULT_CHAR)]
    characteristic: u32,
    /// Enlarge every stabilization box by this much.
    #[arg(long, default_value_t = 0)]
    box_pad: u32,
    /// Total degree bound of the s.o.p. search [default: max(6, top
    /// generator degree of a)].
    #[arg(long)]
    degree_bound: Option<u32>,
    /// Run engines on one thread.
    #[arg(long)]
    sequential: bool,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PairArgs {
    /// Comma separated variable names, e.g. `x1,x2,y1,y2`.
    #[arg(long)]
    ring: String,
    /// Generators of the relative ideal a.
    #[arg(long)]
    a: String,
    /// Generators of I, where M = S/I (`0` for the ring itself).
    #[arg(long)]
    i: String,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum SliceKind {
    Ext,
    Lc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Property {
    Cm,
    MaxCm,
    Gorenstein,
    RegularRing,
    Regular,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    FlipRelativeCm,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_engine_disagreement() {
                EXIT_DISAGREEMENT
            } else {
                EXIT_INPUT
            },
            message: e.to_string(),
        }
    }
}

fn input_error(message: String) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message,
    }
}

impl EngineArgs {
    fn engine(&self) -> Result<Engine, Failure> {
        let field = PrimeField::new(self.characteristic)?;
        let mode = if self.sequential {
            ExecMode::Sequential
        } else {
            ExecMode::Parallel
        };
        Ok(Engine {
            degree_bound: self.degree_bound,
            ..Engine::new(field).with_mode(mode).with_box_pad(self.box_pad)
        })
    }
}

/// Parsed ring and ideals, with parse errors pointing into the flag value.
struct Pair {
    ring: RingSpec,
    a: MonomialIdeal,
    i: MonomialIdeal,
    engine: Engine,
}

fn parse_flag(ring: &RingSpec, flag: &str, text: &str) -> Result<MonomialIdeal, Failure> {
    parse_ideal(ring, text).map_err(|e| match e {
        Error::Parse { pos, .. } => input_error(format!("--{flag}: {e}\n  {text}\n  {}^", " ".repeat(pos))),
        other => input_error(format!("--{flag}: {other}")),
    })
}

impl PairArgs {
    fn parse(&self) -> Result<Pair, Failure> {
        let engine = self.engine.engine()?;
        let ring = RingSpec::parse(&self.ring, self.engine.characteristic)?;
        let a = parse_flag(&ring, "a", &self.a)?;
        let i = parse_flag(&ring, "i", &self.i)?;
        if a.is_unit() {
            return Err(input_error("--a: the relative ideal must be proper".into()));
        }
        Ok(Pair { ring, a, i, engine })
    }
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("JSON values serialize")
    );
}

fn analyze(pair: &PairArgs, dump: Option<SliceKind>) -> Result<u8, Failure> {
    let p = pair.parse()?;
    let report = relcm::properties::full_report(&p.engine, &p.a, &p.i)?;
    let slices = match dump {
        Some(_) if p.i.is_unit() => Some(Vec::new()),
        Some(kind) => {
            let functor = match kind {
                SliceKind::Ext => Functor::Ext,
                SliceKind::Lc => Functor::LocalCohomology,
            };
            Some(p.engine.slices(functor, &p.a, &p.i)?)
        }
        None => None,
    };
    if pair.engine.json {
        print_json(&render::analysis_json(&p.ring, &p.a, &p.i, &report, slices.as_deref()));
    } else {
        print!(
            "{}",
            render::analysis_text(&p.ring, &p.a, &p.i, &report, slices.as_deref())
        );
    }
    Ok(0)
}

fn check(property: Property, pair: &PairArgs) -> Result<u8, Failure> {
    let p = pair.parse()?;
    let report = relcm::properties::full_report(&p.engine, &p.a, &p.i)?;
    let (name, verdict) = match property {
        Property::Cm => ("relative Cohen-Macaulay", report.rel_cm),
        Property::MaxCm => ("relative maximal Cohen-Macaulay", report.rel_max_cm),
        Property::Gorenstein => ("relative Gorenstein", report.rel_gorenstein),
        Property::RegularRing => ("relative regular ring", report.rel_regular_ring),
        Property::Regular => ("relative regular module", report.rel_regular_module),
    };
    if verdict == Verdict::NotApplicable {
        return Err(input_error(format!(
            "{name} is not applicable: I is the unit ideal, so M = aM"
        )));
    }
    if pair.engine.json {
        print_json(&serde_json::json!({ "property": name, "holds": verdict.holds() }));
    } else {
        println!("{name}: {verdict}");
    }
    Ok(if verdict.holds() { 0 } else { EXIT_FALSE })
}

fn verify_examples(example: Option<&str>, args: &EngineArgs) -> Result<u8, Failure> {
    let engine = args.engine()?;
    let reports = match example {
        Some(id) => vec![fixtures::reproduce_example(&engine, id)?],
        None => fixtures::reproduce_all(&engine)?,
    };
    if args.json {
        print_json(&serde_json::to_value(&reports).expect("reports serialize"));
    } else {
        print!("{}", render::examples_text(&reports));
    }
    Ok(if reports.iter().all(|r| r.passed()) {
        0
    } else {
        EXIT_FALSE
    })
}

fn corpus(
    params: CorpusParams,
    out: Option<&PathBuf>,
    fault: Option<FaultArg>,
    args: &EngineArgs,
) -> Result<u8, Failure> {
    let mut config = RunConfig::new(params, args.engine()?);
    if let Some(FaultArg::FlipRelativeCm) = fault {
        config = config.with_fault(Fault::FlipRelativeCm);
    }
    let run = verifier::run_corpus(&config)?;
    let written = match out {
        Some(path) => Some((path.clone(), run.write_jsonl(path)?)),
        None => None,
    };
    if args.json {
        print_json(&run.summary());
    } else {
        print!("{}", render::corpus_text(&run));
        if let Some((log, cex)) = written {
            println!("instances written to {}", log.display());
            println!("counterexamples written to {}", cex.display());
        }
    }
    Ok(if run.passed() { 0 } else { EXIT_FALSE })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Analyze { pair, dump_slices } => analyze(&pair, dump_slices),
        Command::Check { property, pair } => check(property, &pair),
        Command::VerifyExamples { example, engine } => verify_examples(example.as_deref(), &engine),
        Command::Corpus {
            seed,
            count,
            vars,
            max_exponent,
            min_gens,
            max_gens,
            squarefree,
            out,
            inject_fault,
            engine,
        } => {
            let params = CorpusParams {
                n: vars,
                max_exponent,
                gen_count_range: min_gens..=max_gens,
                squarefree,
                count,
                seed,
            };
            corpus(params, out.as_ref(), inject_fault, &engine)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
