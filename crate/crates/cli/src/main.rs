use std::fmt::Write as _;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use plat_core::canonical::{canonical_form, normal_form, symmetry_group};
use plat_core::hilden::{apply_moves, coset_consistency, parse_moves, random_hilden_element};
use plat_core::invariants::{summarize, InvariantSummary, Jones, DEFAULT_BRACKET_CAP};
use plat_core::spheres::maximal_collection;
use plat_core::twobridge::{cf_reconstruct, format_rational, numerator_abs, parse_rational, schubert_pair};
use plat_core::{ClosureStyle, PlanarDiagram, PlatError, TwistMatrix};

#[derive(Parser)]
#[command(name = "plat", version, about = "Canonical forms and invariants of highly twisted plats")]
struct Cli {
    /// Emit one JSON document per result instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a twist-matrix file.
    Validate { file: PathBuf },
    /// Print the canonical twist matrix.
    Canon {
        file: PathBuf,
        /// Compute the rotation normal form even outside the uniqueness range.
        #[arg(long)]
        force: bool,
    },
    /// Decide whether two plats give the same knot or link (exit 0 yes, 1 no).
    Equiv {
        first: PathBuf,
        second: PathBuf,
        /// Compare rotation normal forms even outside the uniqueness range.
        #[arg(long)]
        force: bool,
    },
    /// List the rotations fixing the coefficient array.
    Symmetries { file: PathBuf },
    /// Print the standard-form braid word.
    Braid { file: PathBuf },
    /// Print the PD code of the plat closure.
    Pd(DiagramArgs),
    /// Print the Gauss code of the plat closure.
    Gauss(DiagramArgs),
    /// Components, writhe, determinant and Jones polynomial of the closure.
    Invariants {
        #[command(flatten)]
        diagram: DiagramArgs,
        #[arg(long, default_value_t = DEFAULT_BRACKET_CAP)]
        jones_cap: usize,
    },
    /// Schubert pair of a coefficient list, or the expansion of a rational.
    Twobridge(TwobridgeArgs),
    /// Hilden subgroup moves.
    Hilden {
        #[command(subcommand)]
        action: HildenCommand,
    },
    /// Canonical maximal collection of vertical spheres.
    Spheres {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
struct DiagramArgs {
    file: PathBuf,
    /// standard, even or doubly-even
    #[arg(long, default_value = "standard")]
    style: ClosureStyle,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct TwobridgeArgs {
    /// Twist coefficients of a 2-bridge plat, e.g. "3,-3,3".
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    /// A rational p/q to expand with partial quotients of modulus >= 3.
    #[arg(long, allow_hyphen_values = true)]
    rational: Option<String>,
}

#[derive(Subcommand)]
enum HildenCommand {
    /// Multiply the plat's braid by moves on the left and right.
    Apply {
        file: PathBuf,
        /// Comma-separated moves such as "h2@1,h1@3^-1".
        #[arg(long, default_value = "")]
        left: String,
        #[arg(long, default_value = "")]
        right: String,
        #[arg(long, default_value_t = DEFAULT_BRACKET_CAP)]
        jones_cap: usize,
    },
    /// A seeded random element of the Hilden subgroup.
    Random {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        length: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sample double-coset translates of the first plat against the second.
    Coset {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Moves per side in each translate.
        #[arg(long, default_value_t = 3)]
        length: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug)]
enum CliError {
    Plat(PlatError),
    Io(PathBuf, std::io::Error),
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Plat(e) => e.code(),
            CliError::Io(..) => "Io",
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Plat(e) => e.to_string(),
            CliError::Io(path, e) => format!("{}: {e}", path.display()),
        }
    }
}

impl From<PlatError> for CliError {
    fn from(e: PlatError) -> Self {
        CliError::Plat(e)
    }
}

/// Result of a command: the text and JSON renderings, and whether the
/// answer was negative (exit status 1).
struct Report {
    text: String,
    json: Value,
    negative: bool,
}

impl Report {
    fn new(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            negative: false,
        }
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(path.to_path_buf(), e))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn load(path: &Path) -> Result<TwistMatrix, CliError> {
    Ok(TwistMatrix::parse_any(&read_input(path)?)?)
}

fn matrix_json(m: &TwistMatrix) -> Value {
    m.to_json()
}

fn jones_json(j: &Jones) -> Value {
    // exponents are in units of t^(1/2)
    let terms: Vec<Value> = j.poly().terms().map(|(e, c)| json!([e, c])).collect();
    json!({ "text": j.to_string(), "half_exponent_terms": terms })
}

fn summary_text(s: &InvariantSummary, cap: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "crossings: {}", s.crossings);
    let _ = writeln!(out, "components: {}", s.components);
    let _ = writeln!(out, "writhe: {}", s.writhe);
    let _ = writeln!(out, "determinant: {}", s.determinant);
    match &s.jones {
        Some(j) => {
            let _ = writeln!(out, "jones: {j}");
        }
        None => {
            let _ = writeln!(out, "jones: not computed ({} crossings exceed the cap of {cap})", s.crossings);
        }
    }
    out
}

fn summary_json(s: &InvariantSummary, cap: usize) -> Value {
    json!({
        "crossings": s.crossings,
        "components": s.components,
        "writhe": s.writhe,
        "determinant": s.determinant.to_string(),
        "jones": s.jones.as_ref().map(jones_json),
        "jones_cap": cap,
    })
}

fn canonical(m: &TwistMatrix, force: bool) -> Result<TwistMatrix, CliError> {
    if force {
        Ok(normal_form(m))
    } else {
        Ok(canonical_form(m)?)
    }
}

fn run(command: Command) -> Result<Report, CliError> {
    match command {
        Command::Validate { file } => {
            let m = load(&file)?;
            let min_twist = m.entries().map(i64::unsigned_abs).min().unwrap_or(0);
            let in_range = plat_core::canonical::check_theorem_range(&m).is_ok();
            let text = format!(
                "valid: width {}, height {}, {} crossings, {min_twist}-highly twisted{}\n",
                m.width(),
                m.height(),
                m.crossing_count(),
                if in_range { ", canonical form applies" } else { "" }
            );
            Ok(Report::new(
                text,
                json!({
                    "valid": true,
                    "m": m.width(),
                    "n": m.height(),
                    "crossings": m.crossing_count(),
                    "highly_twisted": min_twist,
                    "canonical_range": in_range,
                }),
            ))
        }
        Command::Canon { file, force } => {
            let c = canonical(&load(&file)?, force)?;
            Ok(Report::new(c.to_text(), matrix_json(&c)))
        }
        Command::Equiv { first, second, force } => {
            let a = canonical(&load(&first)?, force)?;
            let b = canonical(&load(&second)?, force)?;
            let same = a == b;
            let mut report = Report::new(
                format!("{}\n", if same { "equivalent" } else { "not equivalent" }),
                json!({
                    "equivalent": same,
                    "canonical_first": matrix_json(&a),
                    "canonical_second": matrix_json(&b),
                }),
            );
            report.negative = !same;
            Ok(report)
        }
        Command::Symmetries { file } => {
            let group = symmetry_group(&load(&file)?);
            let names: Vec<String> = group.iter().map(ToString::to_string).collect();
            Ok(Report::new(format!("{}\n", names.join(" ")), json!({ "symmetries": names })))
        }
        Command::Braid { file } => {
            let m = load(&file)?;
            let word = m.to_braid_word();
            Ok(Report::new(
                format!("{word}\n"),
                json!({ "strands": word.strands(), "word": word.to_string() }),
            ))
        }
        Command::Pd(args) => {
            let d = load(&args.file)?.closure(args.style);
            Ok(Report::new(
                d.pd_code(),
                json!({
                    "style": args.style.to_string(),
                    "crossings": d.crossings(),
                    "free_loops": d.free_loops(),
                }),
            ))
        }
        Command::Gauss(args) => {
            let d = load(&args.file)?.closure(args.style);
            let code = d.gauss_code();
            Ok(Report::new(
                format!("{code}\n"),
                json!({ "style": args.style.to_string(), "gauss": code }),
            ))
        }
        Command::Invariants { diagram, jones_cap } => {
            let d = load(&diagram.file)?.closure(diagram.style);
            let s = summarize(&d, jones_cap);
            Ok(Report::new(summary_text(&s, jones_cap), summary_json(&s, jones_cap)))
        }
        Command::Twobridge(args) => twobridge(args),
        Command::Hilden { action } => hilden(action),
        Command::Spheres { m, n } => {
            let chain = maximal_collection(m, n)?;
            let mut text: String = chain.iter().map(|s| format!("{s}\n")).collect();
            let _ = writeln!(text, "r = {}", chain.len());
            let spheres: Vec<&[usize]> = chain.iter().map(|s| s.counts()).collect();
            Ok(Report::new(text, json!({ "m": m, "n": n, "r": chain.len(), "spheres": spheres })))
        }
    }
}

fn parse_coefficients(text: &str) -> Result<Vec<i64>, CliError> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse().map_err(|_| {
                CliError::Plat(PlatError::Parse {
                    line: 1,
                    message: format!("`{t}` is not an integer"),
                })
            })
        })
        .collect()
}

fn twobridge(args: TwobridgeArgs) -> Result<Report, CliError> {
    if let Some(coeffs) = args.coeffs {
        let coeffs = parse_coefficients(&coeffs)?;
        let pair = schubert_pair(&coeffs)?;
        let (r, r2) = pair.members();
        let det = numerator_abs(r);
        return Ok(Report::new(
            format!("{}\n{}\ndeterminant: {det}\n", format_rational(r), format_rational(r2)),
            json!({
                "coefficients": coeffs,
                "pair": [format_rational(r), format_rational(r2)],
                "determinant": det.to_string(),
            }),
        ));
    }
    let text = args.rational.expect("clap requires one of the two flags");
    let r = parse_rational(&text)?;
    let e = cf_reconstruct(&r)?;
    Ok(Report::new(
        format!("{e}\n"),
        json!({ "rational": format_rational(&r), "expansion": e.coefficients() }),
    ))
}

fn hilden(action: HildenCommand) -> Result<Report, CliError> {
    match action {
        HildenCommand::Apply {
            file,
            left,
            right,
            jones_cap,
        } => {
            let word = load(&file)?.to_braid_word();
            let moved = apply_moves(&word, &parse_moves(&left)?, &parse_moves(&right)?)?;
            let s = summarize(&PlanarDiagram::plat_closure(&moved, ClosureStyle::Standard), jones_cap);
            Ok(Report::new(
                format!("{moved}\n{}", summary_text(&s, jones_cap)),
                json!({ "word": moved.to_string(), "invariants": summary_json(&s, jones_cap) }),
            ))
        }
        HildenCommand::Random { strands, length, seed } => {
            let word = random_hilden_element(strands, length, seed)?;
            Ok(Report::new(
                format!("{word}\n"),
                json!({ "strands": strands, "length": length, "seed": seed, "word": word.to_string() }),
            ))
        }
        HildenCommand::Coset {
            first,
            second,
            samples,
            length,
            seed,
        } => {
            let r = coset_consistency(&load(&first)?, &load(&second)?, samples, length, seed)?;
            let rotation = r.rotation.map(|g| g.to_string());
            let text = format!(
                "verdict: {}\nconsistent: {}\nrotation: {}\nsamples: {}\nfingerprint mismatches: {}\nword collisions: {}\n",
                r.verdict,
                r.consistent,
                rotation.as_deref().unwrap_or("none"),
                r.samples,
                r.fingerprint_mismatches,
                r.word_collisions
            );
            let mut report = Report::new(
                text,
                json!({
                    "verdict": r.verdict.to_string(),
                    "consistent": r.consistent,
                    "rotation": rotation,
                    "samples": r.samples,
                    "fingerprint_mismatches": r.fingerprint_mismatches,
                    "word_collisions": r.word_collisions,
                }),
            );
            report.negative = !r.consistent;
            Ok(report)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.json);
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(if report.negative { 1 } else { 0 })
        }
        Err(e) => {
            if cli.json {
                eprintln!("{}", json!({ "error": e.code(), "message": e.message() }));
            } else {
                eprintln!("error[{}]: {}", e.code(), e.message());
            }
            ExitCode::from(2)
        }
    }
}
