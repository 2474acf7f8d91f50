use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use latfano::catalog::{
    builtin, builtin_fan, gen_random_polytope, gen_reflexive_polygons, parse_fan, parse_polytope,
    parse_vertex_blocks, random_divisor, random_smooth_fan, run_suite_streaming, thread_limit,
    write_fan, write_polytope, SeededRng, FAN_NAMES, FIXTURE_NAMES,
};
use latfano::normality::{
    check_decomposition, check_fano_minkowski, check_idp, check_pair_identity, check_sum_equality,
    decompose_empty_simplices,
};
use latfano::{adjoint_polytope, CheckReport, Fan, Int, PolarDual, Polytope, TDivisor};

#[derive(Parser)]
#[command(
    name = "latfano",
    version,
    about = "Exact lattice polytope and toric surface checks"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output to FILE instead of stdout.
    #[arg(short = 'o', value_name = "FILE", global = true)]
    output: Option<PathBuf>,
    /// Zero all timings so repeated runs are byte-identical.
    #[arg(long, global = true)]
    stable: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Integer decomposition property of a polytope.
    CheckIdp {
        polytope: Option<String>,
        /// Check every block of a vertex-matrix file instead.
        #[arg(long, value_name = "FILE")]
        ks: Option<PathBuf>,
    },
    /// P∩M + Q∩M = (P+Q)∩M.
    CheckSum { p: String, q: String },
    /// (R + kQ)∩M + Q∩M = (R + (k+1)Q)∩M.
    CheckMink {
        r: String,
        q: String,
        #[arg(long, default_value_t = 1)]
        k: Int,
    },
    /// (R+Q)∩M + Q∩M = (R+2Q)∩M for reflexive R in dimension 3.
    FanoMink { r: String, q: String },
    /// Whether a polytope is reflexive.
    Reflexive {
        polytope: Option<String>,
        #[arg(long, value_name = "FILE")]
        ks: Option<PathBuf>,
    },
    /// Polar dual, when it is a lattice polytope.
    Polar { polytope: String },
    /// Triangulation into empty simplices with width-1 certificates.
    Decompose {
        polytope: Option<String>,
        #[arg(long, value_name = "FILE")]
        ks: Option<PathBuf>,
    },
    /// A lattice direction of width at most 1.
    Width {
        polytope: String,
        /// Search bound on direction coordinates (default: from the facets).
        #[arg(long)]
        bound: Option<Int>,
    },
    /// Whether a divisor on a smooth fan is nef.
    Nef {
        fan: String,
        /// Divisor coefficients in the fan's canonical ray order (default:
        /// the file's divisor, else the anticanonical one).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        divisor: Option<Vec<Int>>,
    },
    /// Fixed-component multiplicities of a divisor.
    Fixed {
        fan: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        divisor: Option<Vec<Int>>,
    },
    /// Hull of the interior lattice points.
    Adjoint { polytope: String },
    /// Print a built-in fixture, or list them.
    Builtin {
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
    /// Generate instances.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Run a seeded verification suite as JSON lines.
    Suite {
        name: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short = 'n', default_value_t = 100)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Hull of random points of [0, box]^dim.
    Polytope {
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "box", default_value_t = 3)]
        box_size: Int,
        #[arg(long, default_value_t = 6)]
        npoints: usize,
    },
    /// All reflexive polygons up to lattice equivalence.
    ReflexivePolygons,
    /// A smooth complete fan by stellar subdivisions, with a random divisor.
    Fan {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        blowups: usize,
    },
}

/// Exit status classes.
enum Failure {
    /// A check ran and does not hold.
    Negative,
    /// Usage, input or precondition error.
    Usage(String),
}

type Outcome = Result<(), Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

struct Ctx {
    format: Format,
    stable: bool,
    out: Box<dyn Write>,
}

impl Ctx {
    fn line(&mut self, s: &str) -> Outcome {
        writeln!(self.out, "{s}").map_err(usage)
    }

    fn json(&mut self, v: &impl Serialize) -> Outcome {
        let s = serde_json::to_string(v).map_err(usage)?;
        self.line(&s)
    }

    fn report(&mut self, r: CheckReport) -> Outcome {
        let r = if self.stable { r.stable() } else { r };
        match self.format {
            Format::Json => self.json(&r)?,
            Format::Text => {
                let text = report_text(&r);
                self.out.write_all(text.as_bytes()).map_err(usage)?;
            }
        }
        if r.holds {
            Ok(())
        } else {
            Err(Failure::Negative)
        }
    }

    fn polytope(&mut self, p: &Polytope) -> Outcome {
        match self.format {
            Format::Json => self.json(&json!({ "vertices": p.vertices() })),
            Format::Text => self
                .out
                .write_all(write_polytope(p).as_bytes())
                .map_err(usage),
        }
    }
}

fn report_text(r: &CheckReport) -> String {
    let mut s = format!("check: {}\nholds: {}\n", r.check_name, r.holds);
    if let Some(k) = r.level {
        s += &format!("level: {k}\n");
    }
    s += &format!("lhs_count: {}\nrhs_count: {}\n", r.lhs_count, r.rhs_count);
    if !r.gap_points.is_empty() {
        let pts: Vec<String> = r.gap_points.iter().map(|p| p.to_string()).collect();
        s += &format!("gap: {}\n", pts.join(" "));
    }
    if r.elapsed_ms > 0 {
        s += &format!("elapsed_ms: {}\n", r.elapsed_ms);
    }
    s
}

fn load_polytope(arg: &str) -> Result<Polytope, Failure> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        return builtin(name).map(|f| f.polytope).map_err(usage);
    }
    let text = fs::read_to_string(arg).map_err(|e| usage(format!("{arg}: {e}")))?;
    parse_polytope(&text).map_err(|e| usage(format!("{arg}: {e}")))
}

fn load_fan(arg: &str) -> Result<(Fan, Option<TDivisor>), Failure> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        return builtin_fan(name).map(|f| (f, None)).map_err(usage);
    }
    let text = fs::read_to_string(arg).map_err(|e| usage(format!("{arg}: {e}")))?;
    parse_fan(&text).map_err(|e| usage(format!("{arg}: {e}")))
}

fn load_blocks(path: &PathBuf) -> Result<Vec<Polytope>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_vertex_blocks(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Either the single positional polytope or every block of `--ks`.
fn inputs(polytope: Option<String>, ks: Option<PathBuf>) -> Result<Vec<Polytope>, Failure> {
    match (polytope, ks) {
        (Some(p), None) => Ok(vec![load_polytope(&p)?]),
        (None, Some(path)) => load_blocks(&path),
        _ => Err(usage(
            "give exactly one of a polytope argument or --ks FILE",
        )),
    }
}

/// Runs `f` on each input; with several inputs every result is printed and
/// the exit status reflects the worst one.
fn each(
    ctx: &mut Ctx,
    items: Vec<Polytope>,
    mut f: impl FnMut(&mut Ctx, &Polytope) -> Outcome,
) -> Outcome {
    let mut negative = false;
    for p in &items {
        match f(ctx, p) {
            Ok(()) => {}
            Err(Failure::Negative) => negative = true,
            Err(e) => return Err(e),
        }
    }
    if negative {
        Err(Failure::Negative)
    } else {
        Ok(())
    }
}

fn divisor_for(
    fan: &Fan,
    from_file: Option<TDivisor>,
    flag: Option<Vec<Int>>,
) -> Result<TDivisor, Failure> {
    match flag {
        Some(c) => fan.divisor(c).map_err(usage),
        None => Ok(from_file.unwrap_or_else(|| fan.anticanonical())),
    }
}

fn run(cli: Cli, ctx: &mut Ctx) -> Outcome {
    match cli.command {
        Command::CheckIdp { polytope, ks } => each(ctx, inputs(polytope, ks)?, |ctx, p| {
            let r = check_idp(p).map_err(usage)?;
            ctx.report(r)
        }),
        Command::CheckSum { p, q } => {
            let r = check_sum_equality(&load_polytope(&p)?, &load_polytope(&q)?).map_err(usage)?;
            ctx.report(r)
        }
        Command::CheckMink { r, q, k } => {
            let rep =
                check_pair_identity(&load_polytope(&r)?, &load_polytope(&q)?, k).map_err(usage)?;
            ctx.report(rep)
        }
        Command::FanoMink { r, q } => {
            let rep =
                check_fano_minkowski(&load_polytope(&r)?, &load_polytope(&q)?).map_err(usage)?;
            ctx.report(rep)
        }
        Command::Reflexive { polytope, ks } => each(ctx, inputs(polytope, ks)?, |ctx, p| {
            let verdict = p.reflexivity();
            match ctx.format {
                Format::Json => ctx.json(&json!({
                    "reflexive": verdict.is_ok(),
                    "reason": verdict.as_ref().err().map(|e| e.code()),
                }))?,
                Format::Text => match &verdict {
                    Ok(()) => ctx.line("reflexive")?,
                    Err(e) => ctx.line(&format!("not reflexive: {e}"))?,
                },
            }
            verdict.map_err(|_| Failure::Negative)
        }),
        Command::Polar { polytope } => match load_polytope(&polytope)?
            .polar_dual()
            .map_err(usage)?
        {
            PolarDual::Lattice(d) => ctx.polytope(&d),
            PolarDual::NotLattice { witness } => {
                match ctx.format {
                    Format::Json => ctx.json(&json!({ "lattice": false, "witness": witness.0 }))?,
                    Format::Text => ctx.line(&format!(
                        "polar dual is not a lattice polytope: vertex {witness}"
                    ))?,
                }
                Err(Failure::Negative)
            }
        },
        Command::Decompose { polytope, ks } => each(ctx, inputs(polytope, ks)?, |ctx, p| {
            if ctx.format == Format::Text {
                let dec = decompose_empty_simplices(p).map_err(usage)?;
                for (piece, cert) in dec.pieces.iter().zip(&dec.certificates) {
                    let vs: Vec<String> = piece.vertices().iter().map(|v| v.to_string()).collect();
                    ctx.line(&format!(
                        "{}  width-1 direction {} base {}",
                        vs.join(" "),
                        cert.direction,
                        cert.base
                    ))?;
                }
            }
            let r = check_decomposition(p).map_err(usage)?;
            ctx.report(r)
        }),
        Command::Width { polytope, bound } => {
            let p = load_polytope(&polytope)?;
            let cert = match bound {
                Some(b) if b < 1 => return Err(usage("--bound must be positive")),
                Some(b) => p.width_certificate(b),
                None => p.width_certificate_default(),
            };
            match ctx.format {
                Format::Json => ctx.json(&json!({
                    "found": cert.is_some(),
                    "direction": cert.map(|c| c.direction),
                    "base": cert.map(|c| c.base),
                }))?,
                Format::Text => match cert {
                    Some(c) => ctx.line(&format!("direction {} base {}", c.direction, c.base))?,
                    None => ctx.line("no width-1 direction found")?,
                },
            }
            cert.map(|_| ()).ok_or(Failure::Negative)
        }
        Command::Nef { fan, divisor } => {
            let (f, file_d) = load_fan(&fan)?;
            let d = divisor_for(&f, file_d, divisor)?;
            let nef = f.is_nef(&d).map_err(usage)?;
            match ctx.format {
                Format::Json => ctx.json(&json!({ "nef": nef, "divisor": d.coeffs }))?,
                Format::Text => ctx.line(if nef { "nef" } else { "not nef" })?,
            }
            if nef {
                Ok(())
            } else {
                Err(Failure::Negative)
            }
        }
        Command::Fixed { fan, divisor } => {
            let (f, file_d) = load_fan(&fan)?;
            let d = divisor_for(&f, file_d, divisor)?;
            let c = f.fixed_components(&d).map_err(usage)?;
            match ctx.format {
                Format::Json => ctx.json(&json!({ "divisor": d.coeffs, "fixed": c })),
                Format::Text => {
                    let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                    ctx.line(&s.join(" "))
                }
            }
        }
        Command::Adjoint { polytope } => {
            match adjoint_polytope(&load_polytope(&polytope)?).map_err(usage)? {
                Some(a) => ctx.polytope(&a),
                None => match ctx.format {
                    Format::Json => ctx.json(&json!({ "vertices": null })),
                    Format::Text => ctx.line("empty"),
                },
            }
        }
        Command::Builtin { name, list } => match (name, list) {
            (None, true) => {
                for n in FIXTURE_NAMES.iter().chain(FAN_NAMES) {
                    ctx.line(n)?;
                }
                Ok(())
            }
            (Some(n), false) => match builtin(&n) {
                Ok(f) => ctx.polytope(&f.polytope),
                Err(_) => {
                    let fan =
                        builtin_fan(&n).map_err(|_| usage(format!("unknown fixture {n:?}")))?;
                    ctx.out
                        .write_all(write_fan(&fan, None).as_bytes())
                        .map_err(usage)
                }
            },
            _ => Err(usage("give a fixture name or --list")),
        },
        Command::Gen { kind } => match kind {
            GenKind::Polytope {
                dim,
                seed,
                box_size,
                npoints,
            } => {
                let p = gen_random_polytope(dim, seed, box_size, npoints).map_err(usage)?;
                ctx.polytope(&p)
            }
            GenKind::ReflexivePolygons => {
                for p in gen_reflexive_polygons() {
                    ctx.polytope(&p)?;
                }
                Ok(())
            }
            GenKind::Fan { seed, blowups } => {
                let mut rng = SeededRng::new(seed);
                let fan = random_smooth_fan(&mut rng, blowups);
                let d = random_divisor(&mut rng, &fan, 3);
                ctx.out
                    .write_all(write_fan(&fan, Some(&d)).as_bytes())
                    .map_err(usage)
            }
        },
        Command::Suite { name, seed, n } => {
            let stable = ctx.stable;
            let mut io_error = None;
            let result = run_suite_streaming(&name, seed, n, thread_limit(), |_, r| {
                let r = if stable {
                    r.clone().stable()
                } else {
                    r.clone()
                };
                let line = serde_json::to_string(&r).expect("report serializes");
                if let Err(e) = writeln!(ctx.out, "{line}") {
                    io_error.get_or_insert(e);
                }
            })
            .map_err(usage)?;
            if let Some(e) = io_error {
                return Err(usage(e));
            }
            ctx.json(&result.summary())?;
            if result.failed == 0 {
                Ok(())
            } else {
                Err(Failure::Negative)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out: Box<dyn Write> = match &cli.output {
        Some(path) => match fs::File::create(path) {
            Ok(f) => Box::new(io::BufWriter::new(f)),
            Err(e) => {
                eprintln!("latfano: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    };
    let mut ctx = Ctx {
        format: cli.format,
        stable: cli.stable,
        out,
    };
    let outcome = run(cli, &mut ctx);
    let flushed = ctx.out.flush();
    match outcome {
        Ok(()) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(()) => ExitCode::from(2),
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("latfano: {msg}");
            ExitCode::from(2)
        }
    }
}
