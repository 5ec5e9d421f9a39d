//! Command-line front end. Every payload on stdout is JSON; SVG figures go
//! to files.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 inconclusive.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::atlas::{certify_path, certify_segment, enumerate_components, verify_against_table1, SamplingConfig, DEFAULT_BUDGET};
use crate::classify::classify;
use crate::error::Error;
use crate::exactpoly::{parse_rational, Rational};
use crate::models::{
    f4_sigma0_eliminant, f4_sigma1_polynomial, is_squarefree_certified, Parameter, SingularityClass,
};
use crate::render::{default_viewport, figure_file_name, render_parameter_slice, render_zero_set, Viewport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "boundsing", version, about = "Discriminants and lower-set types of simple boundary singularities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal form, parameters and component count of a class.
    Info {
        class: String,
    },
    /// Discriminant membership and lower-set type of a parameter.
    Classify {
        class: String,
        #[arg(num_args = 0..)]
        lambda: Vec<String>,
    },
    /// Enumerates the components of the complement of the discriminant.
    Atlas {
        class: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Half-width of the sampling box; an integer or p/q.
        #[arg(long = "box", default_value = "5")]
        box_radius: String,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads; the report does not depend on it.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Certifies a path between two parameters of the same type.
    Certify {
        class: String,
        /// Both endpoints, concatenated.
        #[arg(num_args = 0..)]
        lambdas: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Writes an SVG of the zero set, or of a parameter slice with --slice.
    Render {
        class: String,
        #[arg(num_args = 0..)]
        lambda: Vec<String>,
        /// Two parameter names, e.g. `b,d`; the others are fixed with --fix.
        #[arg(long)]
        slice: Option<String>,
        /// `name=value`, repeatable.
        #[arg(long = "fix")]
        fix: Vec<String>,
        /// Half-width of the square viewport.
        #[arg(long)]
        radius: Option<String>,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// The discriminant polynomial of the F4 family.
    Eliminant,
}

/// Outcome of a subcommand: exit code and JSON payload.
struct Outcome {
    code: i32,
    payload: Value,
}

impl Outcome {
    fn ok<T: Serialize>(v: &T) -> Self {
        Outcome { code: EXIT_OK, payload: serde_json::to_value(v).expect("serializable") }
    }

    fn usage(message: impl Into<String>) -> Self {
        Outcome { code: EXIT_USAGE, payload: json!({ "error": "usage", "message": message.into() }) }
    }

    fn from_error(e: &Error) -> Self {
        let code = match e {
            Error::NotFound { .. } => EXIT_INCONCLUSIVE,
            Error::Parse(_) | Error::ArityMismatch { .. } | Error::BadAxes(_) | Error::EmptyViewport => EXIT_USAGE,
            _ => EXIT_DOMAIN,
        };
        let mut payload = json!({ "error": error_kind(e), "message": e.to_string() });
        if let Error::DiscriminantParameter(m) = e {
            payload["membership"] = serde_json::to_value(m).expect("serializable");
        }
        Outcome { code, payload }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::ZeroPolynomial => "ZeroPolynomial",
        Error::ArityMismatch { .. } => "ArityMismatch",
        Error::DegreeZero(_) => "DegreeZero",
        Error::UnknownVariable(_) => "UnknownVariable",
        Error::Parse(_) => "Parse",
        Error::DiscriminantParameter(_) => "DiscriminantParameter",
        Error::NonGenericConfiguration => "NonGenericConfiguration",
        Error::SeedNotSmallEnough => "SeedNotSmallEnough",
        Error::CatalogMissing => "CatalogMissing",
        Error::InvalidSignature { .. } => "InvalidSignature",
        Error::DiscriminantEndpoint => "DiscriminantEndpoint",
        Error::TypeMismatch => "TypeMismatch",
        Error::NotFound { .. } => "NotFound",
        Error::EmptyViewport => "EmptyViewport",
        Error::BadAxes(_) => "BadAxes",
    }
}

/// Parses `args` (including the program name), runs the subcommand, prints
/// the JSON payload and returns the exit code.
pub fn run<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    use std::io::Write;
    let (code, text) = run_to_string(args);
    // a closed pipe downstream is not an error of ours
    let _ = writeln!(std::io::stdout(), "{text}");
    code
}

/// Like [`run`] but returns the output instead of printing it.
pub fn run_to_string<I: IntoIterator<Item = OsString>>(args: I) -> (i32, String) {
    let cli = match Cli::try_parse_from(separate_positionals(args.into_iter().collect())) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let code = if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand { EXIT_USAGE } else { EXIT_OK };
                    (code, e.render().to_string().trim_end().to_string())
                }
                _ => {
                    let o = Outcome::usage(e.render().to_string().trim_end());
                    (o.code, pretty(&o.payload))
                }
            };
        }
    };
    let o = dispatch(cli.command);
    (o.code, pretty(&o.payload))
}

/// Options taking a value.
const VALUED: [&str; 10] = ["--seed", "--samples", "--box", "--out", "--jobs", "--budget", "--slice", "--fix", "--radius", "--out-dir"];

/// Moves options ahead of the positional arguments and inserts `--` before
/// the latter, so that `-3/2` or `-B5` is never read as a flag.
fn separate_positionals(args: Vec<OsString>) -> Vec<OsString> {
    if args.len() < 3 {
        return args;
    }
    let mut flags = Vec::new();
    let mut positional = Vec::new();
    let mut rest = args[2..].iter();
    while let Some(a) = rest.next() {
        let text = a.to_string_lossy();
        if text == "--" {
            positional.extend(rest.by_ref().cloned());
        } else if text.starts_with("--") || text == "-h" || text == "-V" {
            flags.push(a.clone());
            if VALUED.contains(&text.as_ref()) {
                flags.extend(rest.next().cloned());
            }
        } else {
            positional.push(a.clone());
        }
    }
    let mut out = args[..2].to_vec();
    out.extend(flags);
    out.push("--".into());
    out.extend(positional);
    out
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Info { class } => with_class(&class, |c| Outcome::ok(&info(&c))),
        Command::Classify { class, lambda } => with_class(&class, |c| {
            let l = match parameter(&c, &lambda) {
                Ok(l) => l,
                Err(o) => return o,
            };
            match classify(&c, &l) {
                Ok(r) => Outcome::ok(&r),
                Err(e) => Outcome::from_error(&e),
            }
        }),
        Command::Atlas { class, seed, samples, box_radius, out, jobs } => with_class(&class, |c| {
            let radius = match parse_rational(&box_radius) {
                Ok(r) if r > Rational::from_integer(0.into()) => r,
                _ => return Outcome::usage(format!("--box expects a positive rational, got `{box_radius}`")),
            };
            let cfg = SamplingConfig { box_radius: radius, random_count: samples, rng_seed: seed, ..SamplingConfig::default() };
            let report = match jobs {
                Some(0) => return Outcome::usage("--jobs must be at least 1"),
                Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                    Ok(pool) => pool.install(|| enumerate_components(&c, &cfg)),
                    Err(e) => return Outcome::usage(format!("cannot start {n} workers: {e}")),
                },
                None => enumerate_components(&c, &cfg),
            };
            let check = verify_against_table1(&report);
            let code = if check.pass { EXIT_OK } else { EXIT_INCONCLUSIVE };
            let full = json!({ "report": report, "check": check });
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, pretty(&full) + "\n") {
                        return Outcome { code: EXIT_USAGE, payload: json!({ "error": "io", "message": e.to_string() }) };
                    }
                    Outcome {
                        code,
                        payload: json!({
                            "written": path.display().to_string(),
                            "class": c,
                            "expected_count": report.expected_count,
                            "realized_count": report.realized_count,
                            "match": report.matches,
                        }),
                    }
                }
                None => Outcome { code, payload: full },
            }
        }),
        Command::Certify { class, lambdas, budget } => with_class(&class, |c| {
            let mu = c.mu();
            if lambdas.len() != 2 * mu {
                return Outcome::usage(format!("certify {c} expects {} values (two endpoints), got {}", 2 * mu, lambdas.len()));
            }
            let (l0, l1) = match (parameter(&c, &lambdas[..mu]), parameter(&c, &lambdas[mu..])) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(o), _) | (_, Err(o)) => return o,
            };
            match certify_path(&c, &l0, &l1, budget) {
                Ok(cert) => Outcome::ok(&json!({ "certified": cert.verify(), "certificate": cert })),
                Err(Error::TypeMismatch) => {
                    let mut o = Outcome::from_error(&Error::TypeMismatch);
                    if let Ok(w) = certify_segment(&c, &l0, &l1) {
                        o.payload["segment"] = serde_json::to_value(w).expect("serializable");
                    }
                    o
                }
                Err(e) => Outcome::from_error(&e),
            }
        }),
        Command::Render { class, lambda, slice, fix, radius, out_dir } => {
            with_class(&class, |c| render(&c, &lambda, slice.as_deref(), &fix, radius.as_deref(), &out_dir))
        }
        Command::Eliminant => {
            let e = f4_sigma0_eliminant();
            Outcome::ok(&json!({
                "variables": e.vars(),
                "total_degree": e.total_degree(),
                "terms": e.num_terms(),
                "squarefree_certified": is_squarefree_certified(e),
                "sigma0": e.to_text(),
                "sigma1": f4_sigma1_polynomial().to_text(),
            }))
        }
    }
}

fn with_class(text: &str, f: impl FnOnce(SingularityClass) -> Outcome) -> Outcome {
    match text.parse::<SingularityClass>() {
        Ok(c) => f(c),
        Err(e) => Outcome::usage(format!("cannot parse class `{text}`: {e}")),
    }
}

fn parameter(class: &SingularityClass, literals: &[String]) -> std::result::Result<Parameter, Outcome> {
    let refs: Vec<&str> = literals.iter().map(String::as_str).collect();
    let l = Parameter::parse(&refs).map_err(|e| Outcome::usage(e.to_string()))?;
    l.check_arity(class).map_err(|e| {
        Outcome::usage(format!("{e}; parameters of {class} are {}", class.param_names().join(" ")))
    })?;
    Ok(l)
}

#[derive(Serialize)]
struct Info {
    class: SingularityClass,
    normal_form: String,
    mu: usize,
    k: Option<usize>,
    parameters: Vec<String>,
    components: usize,
    asymptotic_sectors: usize,
    decomposition: (String, String),
}

fn info(c: &SingularityClass) -> Info {
    Info {
        class: *c,
        normal_form: c.normal_form(),
        mu: c.mu(),
        k: c.k(),
        parameters: c.param_names(),
        components: c.expected_component_count(),
        asymptotic_sectors: c.asymptotic_sector_count(),
        decomposition: c.decomposition(),
    }
}

fn render(
    c: &SingularityClass,
    lambda: &[String],
    slice: Option<&str>,
    fix: &[String],
    radius: Option<&str>,
    out_dir: &std::path::Path,
) -> Outcome {
    let radius = match radius.map(parse_rational).transpose() {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let write = |name: String, svg: &str, extra: Value| {
        let path = out_dir.join(&name);
        if let Err(e) = std::fs::write(&path, svg) {
            return Outcome { code: EXIT_USAGE, payload: json!({ "error": "io", "message": e.to_string() }) };
        }
        let mut payload = json!({ "file": path.display().to_string() });
        if let (Value::Object(p), Value::Object(x)) = (&mut payload, extra) {
            p.extend(x);
        }
        Outcome { code: EXIT_OK, payload }
    };
    match slice {
        Some(axes) => {
            if !lambda.is_empty() {
                return Outcome::usage("--slice takes no parameter values; fix the other parameters with --fix name=value");
            }
            let Some((a, b)) = axes.split_once(',') else {
                return Outcome::usage(format!("--slice expects two names separated by a comma, got `{axes}`"));
            };
            let mut fixed = Vec::new();
            for f in fix {
                let Some((n, v)) = f.split_once('=') else {
                    return Outcome::usage(format!("--fix expects name=value, got `{f}`"));
                };
                match parse_rational(v) {
                    Ok(v) => fixed.push((n.to_string(), v)),
                    Err(e) => return Outcome::usage(e.to_string()),
                }
            }
            let vp = match Viewport::square(radius.unwrap_or_else(|| Rational::from_integer(3.into()))) {
                Ok(vp) => vp,
                Err(e) => return Outcome::from_error(&e),
            };
            match render_parameter_slice(c, &fixed, (a, b), &vp) {
                Ok(fig) => {
                    let key = format!("{a},{b};{}", fix.join(";"));
                    let name = format!("{}_slice_{}.svg", c.file_tag(), short_hash(&key));
                    write(name, &fig.svg, json!({
                        "viewport": vp,
                        "sigma0_segments": fig.sigma0_segments,
                        "sigma1_segments": fig.sigma1_segments,
                    }))
                }
                Err(e) => Outcome::from_error(&e),
            }
        }
        None => {
            if !fix.is_empty() {
                return Outcome::usage("--fix is only meaningful with --slice");
            }
            let l = match parameter(c, lambda) {
                Ok(l) => l,
                Err(o) => return o,
            };
            let vp = match radius {
                Some(r) => Viewport::square(r),
                None => default_viewport(c, &l),
            };
            let vp = match vp {
                Ok(vp) => vp,
                Err(e) => return Outcome::from_error(&e),
            };
            match render_zero_set(c, &l, &vp) {
                Ok(fig) => write(
                    figure_file_name(c, &l),
                    &fig.svg,
                    json!({ "viewport": vp, "boundary_crossings": fig.boundary_crossings }),
                ),
                Err(e) => Outcome::from_error(&e),
            }
        }
    }
}

fn short_hash(text: &str) -> String {
    use sha2::{Digest, Sha256};
    hex::encode(Sha256::digest(text.as_bytes()))[..16].to_string()
}
