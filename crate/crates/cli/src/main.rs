mod cache;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use uwf_core::coeffs::NestedSeries;
use uwf_core::representations::{bethe_check, check_factorization, validate_relations, Bethe, EvalModule, Factorization, ModeWindow, Spin};
use uwf_core::roots::{parse_word, AffineCartanData, AffineRoot, NormalOrdering};
use uwf_core::suite::{self, CRITERIA, DEFAULT_MODE_WINDOW};
use uwf_core::weight::{check_antisymmetry, check_classical, default_ceiling, universal_weight, OrderedMultiset};
use uwf_core::report::Report;
use uwf_core::Error;

#[derive(Parser)]
#[command(name = "wf", version, about = "Universal weight functions for quantum affine sl2")]
struct Cli {
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Computes the universal weight function of n same-colored variables.
    Compute {
        #[arg(long)]
        n: usize,
        /// `default` or comma-separated depth ceilings, one per variable.
        #[arg(long, default_value = "default")]
        window: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Runs a verification suite.
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
    /// Root-system combinatorics.
    Roots {
        #[command(subcommand)]
        command: RootsCommand,
    },
    /// Evaluation modules.
    Module {
        #[command(subcommand)]
        command: ModuleCommand,
    },
}

#[derive(Subcommand)]
enum VerifySuite {
    ClosedForm,
    Projection,
    Antisymmetry {
        #[arg(long)]
        n: Option<usize>,
    },
    Classical {
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=2))]
        rank: u8,
    },
    Q1,
    Factorization {
        #[arg(long)]
        n: Option<usize>,
        /// Two modules, e.g. `spin-half,spin-one`.
        #[arg(long, value_delimiter = ',')]
        modules: Option<Vec<ModuleArg>>,
    },
    Bethe {
        #[arg(long)]
        n: Option<usize>,
    },
    Modules,
    Roots,
    Reconstruction,
    All,
}

#[derive(Subcommand)]
enum RootsCommand {
    Ladder {
        #[arg(long = "type", default_value = "A1~")]
        kind: String,
        #[arg(long, default_value = "0,1")]
        word: String,
        #[arg(long, default_value_t = 4)]
        count: usize,
    },
    VerifyOrd1 {
        #[arg(long = "type", default_value = "A1~")]
        kind: String,
        #[arg(long, default_value = "0,1")]
        word: String,
        #[arg(long, default_value_t = 8)]
        height: i64,
    },
    VerifyShift {
        #[arg(long = "type", default_value = "A1~")]
        kind: String,
        #[arg(long, default_value = "0,1")]
        word: String,
        #[arg(long)]
        c: usize,
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
}

#[derive(Subcommand)]
enum ModuleCommand {
    Validate {
        #[arg(long, value_enum)]
        spin: SpinArg,
        /// Modes `m, n` range over `[-r, r]`.
        #[arg(long)]
        radius: Option<i64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SpinArg {
    Trivial,
    Half,
    One,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleArg {
    Trivial,
    SpinHalf,
    SpinOne,
}

impl From<SpinArg> for EvalModule {
    fn from(s: SpinArg) -> Self {
        EvalModule::new(match s {
            SpinArg::Trivial => Spin::Trivial,
            SpinArg::Half => Spin::Half,
            SpinArg::One => Spin::One,
        })
    }
}

impl From<ModuleArg> for EvalModule {
    fn from(s: ModuleArg) -> Self {
        EvalModule::new(match s {
            ModuleArg::Trivial => Spin::Trivial,
            ModuleArg::SpinHalf => Spin::Half,
            ModuleArg::SpinOne => Spin::One,
        })
    }
}

/// Outcome of a command: JSON on stdout and whether every check passed.
struct Outcome {
    value: serde_json::Value,
    text: Option<String>,
    ok: bool,
}

impl Outcome {
    fn data(value: impl Serialize) -> Result<Self, Error> {
        Ok(Outcome { value: to_json(value)?, text: None, ok: true })
    }

    fn report(r: Report) -> Result<Self, Error> {
        let ok = r.passed();
        Ok(Outcome { value: to_json(r)?, text: None, ok })
    }
}

fn to_json(v: impl Serialize) -> Result<serde_json::Value, Error> {
    serde_json::to_value(v).map_err(|e| Error::Invalid(e.to_string()))
}

fn parse_window(s: &str, n: usize) -> Result<Vec<i64>, Error> {
    if s == "default" {
        return Ok(default_ceiling(n));
    }
    let c: Vec<i64> = s.split(',').map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad window entry {x:?}")))).collect::<Result<_, _>>()?;
    if c.len() != n {
        return Err(Error::Invalid(format!("window has {} entries for {n} variables", c.len())));
    }
    if c.windows(2).any(|p| p[1] < p[0]) {
        return Err(Error::Invalid("window ceilings must be nondecreasing".into()));
    }
    Ok(c)
}

fn render_text<C: uwf_core::coeffs::Coefficient + std::fmt::Display>(s: &NestedSeries<C>) -> String {
    let mut out = String::new();
    for (e, c) in s.terms() {
        let mono: Vec<String> = s.vars().iter().zip(e).filter(|(_, x)| **x != 0).map(|(v, x)| format!("{v}^{x}")).collect();
        let mono = if mono.is_empty() { "1".to_string() } else { mono.join(" ") };
        out.push_str(&format!("{mono} : {c}\n"));
    }
    out
}

fn ladder_json(ord: &NormalOrdering, count: usize) -> serde_json::Value {
    let entry = |k: i64, r: &AffineRoot| json!({ "index": k, "root": r.0, "display": r.to_string() });
    let forward: Vec<_> = ord.forward().iter().take(count).enumerate().map(|(i, r)| entry(i as i64 + 1, r)).collect();
    let backward: Vec<_> = ord.backward().iter().take(count).enumerate().map(|(i, r)| entry(-(i as i64), r)).collect();
    json!({ "word": ord.word(), "forward": forward, "backward": backward })
}

fn all_criteria() -> Result<Outcome, Error> {
    let mut ok = true;
    let mut items = Vec::new();
    for c in CRITERIA {
        let r = suite::run(c.id)?;
        ok &= r.passed();
        eprintln!("{} {:>2} {}", if r.passed() { "PASS" } else { "FAIL" }, c.id, c.name);
        items.push(json!({ "id": c.id, "name": c.name, "report": r }));
    }
    let value = json!({ "status": if ok { "pass" } else { "fail" }, "criteria": items });
    Ok(Outcome { value, text: None, ok })
}

fn verify(suite: VerifySuite) -> Result<Outcome, Error> {
    let r = match suite {
        VerifySuite::ClosedForm => suite::closed_form()?,
        VerifySuite::Projection => suite::projection_identities()?,
        VerifySuite::Antisymmetry { n: None } => suite::antisymmetry()?,
        VerifySuite::Antisymmetry { n: Some(n) } => check_antisymmetry(n, &default_ceiling(n))?,
        VerifySuite::Classical { rank: 2 } => suite::classical()?,
        VerifySuite::Classical { .. } => {
            Report::all((1..=3).map(|n| check_classical(&vec![1; n], &default_ceiling(n))).collect::<Result<Vec<_>, _>>()?)
        }
        VerifySuite::Q1 => suite::q1_limit()?,
        VerifySuite::Factorization { n, modules } => match (n, modules) {
            (None, None) => suite::factorization()?,
            (n, modules) => {
                let (a, b) = match modules.as_deref() {
                    Some([a, b]) => (EvalModule::from(*a), EvalModule::from(*b)),
                    None => (EvalModule::spin_half(), EvalModule::spin_one()),
                    Some(_) => return Err(Error::Invalid("--modules takes exactly two modules".into())),
                };
                let ns: Vec<usize> = n.map(|n| vec![n]).unwrap_or_else(|| vec![1, 2, 3]);
                Report::all(ns.iter().map(|&n| check_factorization(&a, &b, n, &default_ceiling(n), Factorization::Full)).collect::<Result<Vec<_>, _>>()?)
            }
        },
        VerifySuite::Bethe { n: None } => suite::bethe()?,
        VerifySuite::Bethe { n: Some(n) } => bethe_check(&EvalModule::spin_one(), n, suite::BETHE_STEP, Bethe::Full)?,
        VerifySuite::Modules => suite::module_validation()?,
        VerifySuite::Roots => suite::roots()?,
        VerifySuite::Reconstruction => suite::reconstruction()?,
        VerifySuite::All => return all_criteria(),
    };
    Outcome::report(r)
}

fn ordering(kind: &str, word: &str, count: usize) -> Result<NormalOrdering, Error> {
    let cartan = AffineCartanData::from_name(kind)?;
    NormalOrdering::build(&cartan, &parse_word(word)?, count)
}

fn execute(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Compute { n, window, format } => {
            let ceiling = parse_window(&window, n)?;
            let w = universal_weight(&OrderedMultiset::uniform(n), &ceiling)?;
            let mut out = Outcome::data(&w)?;
            if format == Format::Text {
                out.text = Some(render_text(&w));
            }
            Ok(out)
        }
        Command::Verify { suite } => verify(suite),
        Command::Roots { command } => match command {
            RootsCommand::Ladder { kind, word, count } => {
                let ord = ordering(&kind, &word, count)?;
                Ok(Outcome { value: ladder_json(&ord, count), text: None, ok: true })
            }
            RootsCommand::VerifyOrd1 { kind, word, height } => {
                let count = (4 * height.max(1)) as usize;
                Outcome::report(ordering(&kind, &word, count)?.verify_ord1(height))
            }
            RootsCommand::VerifyShift { kind, word, c, bound } => Outcome::report(ordering(&kind, &word, 40)?.verify_shift_correspondence(c, bound)?),
        },
        Command::Module { command: ModuleCommand::Validate { spin, radius } } => {
            let window = radius.map(ModeWindow::symmetric).unwrap_or(DEFAULT_MODE_WINDOW);
            Outcome::report(validate_relations(&EvalModule::from(spin), window))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("wf: {e}");
            return ExitCode::from(2);
        }
    }
    let dir = cache::cache_dir();
    if let Some(d) = &dir {
        cache::load(d);
    }
    let result = execute(cli.command);
    if let Some(d) = &dir {
        if let Err(e) = cache::save(d) {
            eprintln!("wf: cache not written: {e}");
        }
    }
    match result {
        Ok(out) => {
            match out.text {
                Some(t) => print!("{t}"),
                None => println!("{}", serde_json::to_string_pretty(&out.value).expect("JSON values serialize")),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("wf: {e}");
            ExitCode::from(2)
        }
    }
}
