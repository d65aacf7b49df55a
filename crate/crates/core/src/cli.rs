//! The `p3walls` command line.
//!
//! Exit codes: 0 on success, 1 on a domain error, 2 on a usage error. Data
//! goes to standard output and diagnostics to standard error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::chern::{
    curve_ideal_ch, euler_pairing, from_resolution, ChernCharacter, ResolutionTerm, Sign,
};
use crate::error::Error;
use crate::genus4;
use crate::rational::{parse_rational, Rational};
use crate::stability::{
    bmt_form, bmt_zero_circle, lambda, mu_beta, nu, BridgelandParams, TiltPoint,
};
use crate::svg::{render_svg, Scene, Viewport};
use crate::walls::{
    brute_force_walls, enumerate_tilt_walls, hyperbola_alpha_sq, Region, SearchBounds,
    WallCandidate,
};

pub const SCHEMA: &str = "p3walls/1";

fn rational_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

fn chern_arg(text: &str) -> Result<ChernCharacter, String> {
    text.parse().map_err(|e: crate::error::ParseError| e.to_string())
}

/// `t:+` or `t:-`, one term `+-O(t)` of a resolution.
fn term_arg(text: &str) -> Result<ResolutionTerm, String> {
    let (t, sign) = text
        .rsplit_once(':')
        .ok_or_else(|| format!("expected `<twist>:+` or `<twist>:-`, got `{text}`"))?;
    let twist: i64 = t
        .trim()
        .parse()
        .map_err(|_| format!("twist `{t}` is not an integer"))?;
    let sign = match sign.trim() {
        "+" | "+1" => Sign::Plus,
        "-" | "-1" => Sign::Minus,
        other => return Err(format!("sign `{other}` must be + or -")),
    };
    Ok(ResolutionTerm { twist, sign })
}

#[derive(Parser, Debug)]
#[command(
    name = "p3walls",
    version,
    about = "Exact tilt and Bridgeland wall computations on P^3"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Chern character arithmetic.
    Chern {
        #[command(subcommand)]
        op: ChernOp,
    },
    /// Euler pairing chi(a, b).
    Euler {
        #[arg(long, value_parser = chern_arg, allow_hyphen_values = true)]
        a: ChernCharacter,
        #[arg(long, value_parser = chern_arg, allow_hyphen_values = true)]
        b: ChernCharacter,
    },
    /// Numerical tilt walls of a class.
    Walls(WallsArgs),
    /// alpha^2 on the hyperbola Im Z(v) = 0 over beta.
    Hyperbola {
        #[arg(long, value_parser = chern_arg, allow_hyphen_values = true)]
        v: ChernCharacter,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        beta: Rational,
    },
    /// BMT form at a point, or its zero circle when no point is given.
    Bmt {
        #[arg(long, value_parser = chern_arg, allow_hyphen_values = true)]
        v: ChernCharacter,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, requires = "alpha2")]
        beta: Option<Rational>,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, requires = "beta")]
        alpha2: Option<Rational>,
    },
    /// mu, nu and lambda of a class at a point.
    Slopes {
        #[arg(long, value_parser = chern_arg, allow_hyphen_values = true)]
        v: ChernCharacter,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        beta: Rational,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        alpha2: Rational,
        /// Bridgeland parameter s > 0.
        #[arg(long, value_parser = rational_arg, default_value = "1/3")]
        s: Rational,
    },
    /// The genus-4 scenario for v = (1,0,-6,15).
    Genus4 {
        #[command(subcommand)]
        op: Genus4Op,
    },
    /// Write an SVG wall diagram.
    Plot {
        #[arg(long, value_parser = chern_arg, allow_hyphen_values = true)]
        v: ChernCharacter,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, default_value = "-12")]
        beta_min: Rational,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, default_value = "0")]
        beta_max: Rational,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, default_value = "8")]
        alpha_max: Rational,
    },
}

#[derive(Subcommand, Debug)]
enum ChernOp {
    /// e^{-beta H} . ch
    Twist {
        #[arg(long, value_parser = chern_arg, allow_hyphen_values = true)]
        ch: ChernCharacter,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        beta: Rational,
    },
    /// (r, -c, d, -e)
    Dual {
        #[arg(long, value_parser = chern_arg, allow_hyphen_values = true)]
        ch: ChernCharacter,
    },
    /// Alternating sum of line bundles, terms given as `<twist>:+` or `<twist>:-`.
    Resolve {
        #[arg(long = "term", value_parser = term_arg, allow_hyphen_values = true, required = true)]
        terms: Vec<ResolutionTerm>,
    },
    /// Ideal sheaf of a curve of given degree and arithmetic genus.
    Curve {
        #[arg(long)]
        degree: u64,
        #[arg(long, allow_hyphen_values = true)]
        genus: i64,
    },
    /// Discriminant, lattice membership and chi(O, ch).
    Info {
        #[arg(long, value_parser = chern_arg, allow_hyphen_values = true)]
        ch: ChernCharacter,
    },
}

#[derive(Subcommand, Debug)]
enum Genus4Op {
    Report {
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WallFormat {
    Json,
    Table,
}

#[derive(Args, Debug)]
struct WallsArgs {
    #[arg(long, value_parser = chern_arg, allow_hyphen_values = true)]
    v: ChernCharacter,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, default_value = "-12")]
    beta_min: Rational,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, default_value = "0")]
    beta_max: Rational,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, default_value = "64")]
    alpha2_max: Rational,
    /// Scan a fixed box instead of the derived search space.
    #[arg(long)]
    brute_force: bool,
    /// Box bound on |ch0|; implies --brute-force.
    #[arg(long)]
    r_max: Option<u32>,
    /// Box bound on |ch1|; implies --brute-force.
    #[arg(long)]
    c_max: Option<u32>,
    /// Box bound on |2 ch2|; implies --brute-force.
    #[arg(long)]
    two_d_max: Option<u32>,
    /// Also list walls of -v in the reflected window (beta > 0 side).
    #[arg(long)]
    mirrored: bool,
    #[arg(long, value_enum, default_value_t = WallFormat::Json)]
    format: WallFormat,
}

enum Failure {
    Domain(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Runs the command line on `argv` (including the program name).
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                2
            } else {
                let _ = write!(stdout, "{rendered}");
                0
            };
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(()) => 0,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Chern { op } => chern(op, out),
        Command::Euler { a, b } => {
            writeln!(out, "{}", euler_pairing(&a, &b))?;
            Ok(())
        }
        Command::Walls(args) => walls(args, out),
        Command::Hyperbola { v, beta } => {
            match hyperbola_alpha_sq(&v, &beta)? {
                Some(a) => writeln!(out, "{a}")?,
                None => writeln!(out, "none")?,
            }
            Ok(())
        }
        Command::Bmt { v, beta, alpha2 } => {
            match (beta, alpha2) {
                (Some(beta), Some(alpha2)) => {
                    let p = TiltPoint::new(beta, alpha2)?;
                    writeln!(out, "{}", bmt_form(&v, &p))?;
                }
                _ => match bmt_zero_circle(&v) {
                    Some((c, r)) => writeln!(out, "(beta - ({c}))^2 + alpha^2 = {r}")?,
                    None => writeln!(out, "none")?,
                },
            }
            Ok(())
        }
        Command::Slopes { v, beta, alpha2, s } => {
            let p = TiltPoint::new(beta, alpha2)?;
            let params = BridgelandParams::new(p.clone(), s)?;
            writeln!(out, "mu {}", mu_beta(&v, p.beta()))?;
            writeln!(out, "nu {}", nu(&v, &p))?;
            writeln!(out, "lambda {}", lambda(&v, &params))?;
            Ok(())
        }
        Command::Genus4 {
            op: Genus4Op::Report { format },
        } => {
            match format {
                ReportFormat::Text => write!(out, "{}", genus4::report_text()?)?,
                ReportFormat::Json => {
                    let doc = genus4::report_json()?;
                    writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
                }
            }
            Ok(())
        }
        Command::Plot {
            v,
            out: path,
            beta_min,
            beta_max,
            alpha_max,
        } => {
            let viewport = Viewport::new(beta_min, beta_max, alpha_max)?;
            let scene = Scene::for_class(&v, viewport)?;
            let bytes = render_svg(&scene)?;
            std::fs::write(&path, bytes)?;
            writeln!(out, "{}", path.display())?;
            Ok(())
        }
    }
}

fn chern(op: ChernOp, out: &mut dyn Write) -> Result<(), Failure> {
    match op {
        ChernOp::Twist { ch, beta } => writeln!(out, "{}", ch.twist(&beta))?,
        ChernOp::Dual { ch } => writeln!(out, "{}", ch.dual())?,
        ChernOp::Resolve { terms } => writeln!(out, "{}", from_resolution(&terms)?)?,
        ChernOp::Curve { degree, genus } => writeln!(out, "{}", curve_ideal_ch(degree, genus)?)?,
        ChernOp::Info { ch } => {
            let o = ChernCharacter::from_ints(1, 0, 0, 0);
            writeln!(out, "ch {ch}")?;
            writeln!(out, "discriminant {}", ch.discriminant())?;
            writeln!(out, "integral {}", ch.is_integral())?;
            writeln!(out, "chi(O, ch) {}", euler_pairing(&o, &ch))?;
        }
    }
    Ok(())
}

fn walls(args: WallsArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let region = Region::new(args.beta_min, args.beta_max, args.alpha2_max)?;
    let explicit = args.r_max.is_some() || args.c_max.is_some() || args.two_d_max.is_some();
    let defaults = SearchBounds::default();
    let bounds = SearchBounds {
        r_max: args.r_max.unwrap_or(defaults.r_max),
        c_max: args.c_max.unwrap_or(defaults.c_max),
        two_d_max: args.two_d_max.unwrap_or(defaults.two_d_max),
    };
    let brute = args.brute_force || explicit;
    let search = |v: &ChernCharacter, region: &Region| -> Result<Vec<WallCandidate>, Error> {
        if brute {
            brute_force_walls(v, region, bounds)
        } else {
            enumerate_tilt_walls(v, region)
        }
    };
    let found = search(&args.v, &region)?;
    let mirror_region = region.mirrored();
    let mirrored = if args.mirrored {
        Some(search(&-args.v.clone(), &mirror_region)?)
    } else {
        None
    };
    match args.format {
        WallFormat::Json => {
            let records = |ws: &[WallCandidate]| -> Vec<serde_json::Value> {
                ws.iter()
                    .map(|w| serde_json::to_value(w.to_record()).expect("json"))
                    .collect()
            };
            let region_json = |r: &Region| {
                json!({
                    "beta_min": r.beta_min.to_string(),
                    "beta_max": r.beta_max.to_string(),
                    "alpha2_max": r.alpha_sq_max.to_string(),
                })
            };
            let mut doc = json!({
                "schema": SCHEMA,
                "class": args.v.to_string(),
                "region": region_json(&region),
                "walls": records(&found),
            });
            if let Some(m) = &mirrored {
                doc["mirrored"] = json!({
                    "class": (-args.v.clone()).to_string(),
                    "region": region_json(&mirror_region),
                    "walls": records(m),
                });
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        }
        WallFormat::Table => {
            write_table(out, &found)?;
            if let Some(m) = &mirrored {
                writeln!(out, "mirrored (class {})", -args.v.clone())?;
                write_table(out, m)?;
            }
        }
    }
    Ok(())
}

fn write_table(out: &mut dyn Write, walls: &[WallCandidate]) -> std::io::Result<()> {
    writeln!(out, "{:>8} {:>10} {:>14} {:>14}", "center", "radius^2", "sub", "quotient")?;
    for w in walls {
        writeln!(
            out,
            "{:>8} {:>10} {:>14} {:>14}",
            w.center().to_string(),
            w.radius_sq().to_string(),
            w.sub().to_string(),
            w.quotient().to_string()
        )?;
    }
    Ok(())
}

/// Parses the JSON document printed by `walls --format json` back into candidates.
pub fn parse_walls_json(text: &str) -> Result<Vec<WallCandidate>, String> {
    let doc: serde_json::Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if doc["schema"] != SCHEMA {
        return Err(format!("unexpected schema {}", doc["schema"]));
    }
    let records: Vec<crate::walls::WallRecord> =
        serde_json::from_value(doc["walls"].clone()).map_err(|e| e.to_string())?;
    records
        .iter()
        .map(|r| WallCandidate::from_record(r).map_err(|e| e.to_string()))
        .collect()
}
