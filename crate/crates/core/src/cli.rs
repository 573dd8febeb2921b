//! Command-line front end. [`run`] does all the work and returns the exit
//! code and output streams, so the binary is a thin wrapper and tests can
//! drive it in-process.
//!
//! Exit codes: 0 success, 1 usage error or unknown input, 2 the algebra
//! fails validation, 3 parse error, 4 a verification failed.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{catalog, format, subalgebra, Algebra, Element};
use crate::chnorm::{self, Mode, NormOptions, DEFAULT_SEED};
use crate::error::Error;
use crate::kernel::parse::{parse_element, parse_poly, parse_vectors};
use crate::report::{Format, Report};
use crate::structure;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_UNVERIFIED: i32 = 4;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Exact,
    Randomized,
    Auto,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Property {
    Ch,
    Mult,
}

/// Parsed command line.
#[derive(Debug, Parser)]
#[command(name = "chnorm", version, about = "Minimal Cayley-Hamilton norms of algebras over Q")]
pub struct RunConfig {
    #[command(subcommand)]
    command: Command,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: FormatArg,
    /// Multiplicativity check: exact expands the identity, randomized
    /// samples points, auto picks exact when 2*dim <= 12.
    #[arg(long, global = true, value_enum, default_value = "auto")]
    mode: ModeArg,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Append wall-clock time to the report (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the algebra axioms.
    Validate { input: String },
    /// Minimal norm, degree, regular norm and all verification flags.
    Norm { input: String },
    /// Minimal polynomial of the generic element.
    Minpoly { input: String },
    /// Degree with a nonzero-minor certificate.
    Degree { input: String },
    /// Characteristic polynomial of one element.
    Charpoly {
        input: String,
        /// Coordinates, e.g. "1,-2,3/4".
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Re-run one verification.
    Verify {
        input: String,
        #[arg(long, value_enum)]
        property: Property,
        /// Polynomial to test for multiplicativity (default: the minimal norm).
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
    },
    /// Jacobson radical.
    Radical { input: String },
    /// Radical, simple factors, reduced norms and exponents.
    Decompose { input: String },
    /// List the built-in algebras, describe one, or print its file.
    Catalog {
        name: Option<String>,
        #[arg(long)]
        emit: bool,
    },
    /// Restrict the minimal norm to the subalgebra spanned by vectors.
    Restrict {
        input: String,
        /// Spanning vectors separated by ';', e.g. "1,0,0,0;0,0,0,1".
        #[arg(long, allow_hyphen_values = true)]
        subspace: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
    /// A report to print even though the command failed.
    report: Option<Report>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse { .. } | Error::DimensionMismatch { .. } | Error::ArityMismatch { .. } => EXIT_PARSE,
            Error::Invalid(_) => EXIT_INVALID,
            Error::Internal(_) | Error::RetryLimit { .. } => EXIT_UNVERIFIED,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string(), report: None }
    }
}

fn unverified(report: Report, what: &str) -> Failure {
    Failure { code: EXIT_UNVERIFIED, message: format!("verification failed: {what}"), report: Some(report) }
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let format = match config.format {
        FormatArg::Text => Format::Text,
        FormatArg::Structured => Format::Structured,
    };
    let start = Instant::now();
    let (code, body, stderr) = match execute(&config) {
        Ok(Output::Report(mut r)) => {
            if config.timing {
                r.int("elapsed_ms", start.elapsed().as_millis() as usize);
            }
            (EXIT_OK, r.render(format), String::new())
        }
        Ok(Output::Raw(text)) => (EXIT_OK, text, String::new()),
        Err(f) => {
            let body = f.report.map(|r| r.render(format)).unwrap_or_default();
            (f.code, body, format!("error: {}\n", f.message))
        }
    };
    match &config.output {
        Some(path) if !body.is_empty() => match std::fs::write(path, &body) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr },
            Err(e) => Outcome {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr: format!("{stderr}error: cannot write {}: {e}\n", path.display()),
            },
        },
        _ => Outcome { code, stdout: body, stderr },
    }
}

enum Output {
    Report(Report),
    Raw(String),
}

/// A file path if one exists, otherwise a catalog name.
fn load(input: &str) -> Result<Algebra, Failure> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("cannot read {input}: {e}"),
            report: None,
        })?;
        return Ok(format::parse_algebra(&text)?);
    }
    catalog::get(input).map_err(|_| Failure {
        code: EXIT_USAGE,
        message: format!("`{input}` is neither a readable file nor a catalog entry"),
        report: None,
    })
}

fn load_valid(input: &str) -> Result<Algebra, Failure> {
    let alg = load(input)?;
    alg.ensure_valid()?;
    Ok(alg)
}

fn mode(config: &RunConfig) -> Mode {
    match config.mode {
        ModeArg::Exact => Mode::Exact,
        ModeArg::Randomized => Mode::Randomized,
        ModeArg::Auto => Mode::Auto,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn execute(config: &RunConfig) -> Result<Output, Failure> {
    let seed = config.seed;
    let mut r = Report::new();
    match &config.command {
        Command::Validate { input } => {
            let alg = load(input)?;
            let v = alg.validate();
            r.text("algebra", alg.name()).int("dim", alg.dim()).flag("valid", v.is_valid());
            r.list("failures", &v.failures);
            if !v.is_valid() {
                return Err(Failure {
                    code: EXIT_INVALID,
                    message: format!("{} fails {} axiom checks", alg.name(), v.failures.len()),
                    report: Some(r),
                });
            }
        }
        Command::Norm { input } => {
            let alg = load_valid(input)?;
            let opts = NormOptions { mode: mode(config), seed, ..NormOptions::default() };
            let n = chnorm::minimal_norm(&alg, &opts)?;
            let f = &n.flags;
            r.text("algebra", alg.name())
                .int("dim", alg.dim())
                .text("min_poly", &n.min_poly.poly)
                .text("minimal_norm", &n.minimal_norm)
                .int("degree", n.degree)
                .text("regular_norm", &n.regular_norm)
                .text("regular_char_poly", &n.regular_char_poly)
                .text("cofactor", &n.cofactor)
                .text("regular_cofactor_norm", &n.regular_cofactor_norm)
                .flag("ch_verified", f.ch_verified)
                .flag("denominator_free", f.denominator_free)
                .flag("cofactor_exact", f.cofactor_exact)
                .flag("norm_divides_regular", f.norm_divides_regular)
                .flag("norm_of_unit_is_one", f.norm_of_unit_is_one)
                .flag("homogeneous_of_degree_k", f.homogeneous_of_degree_k)
                .text("multiplicativity_mode", f.multiplicative.mode)
                .flag("multiplicative", f.multiplicative.holds)
                .text("multiplicativity_note", &f.multiplicative.note)
                .flag("cofactor_multiplicative", f.cofactor_multiplicative.holds)
                .seed(seed);
            if !f.all_hold() {
                return Err(unverified(r, "minimal norm flags"));
            }
        }
        Command::Minpoly { input } => {
            let alg = load_valid(input)?;
            let mp = chnorm::generic_min_poly(&alg)?;
            r.text("algebra", alg.name())
                .text("min_poly", &mp.poly)
                .int("degree", mp.degree())
                .flag("ch_verified", mp.annihilates_generic());
        }
        Command::Degree { input } => {
            let alg = load_valid(input)?;
            let c = chnorm::degree_certificate(&alg, seed)?;
            let cols: Vec<String> = c.columns.iter().map(|i| (i + 1).to_string()).collect();
            r.text("algebra", alg.name())
                .int("degree", chnorm::degree(&alg)?)
                .text("certificate_columns", cols.join(","))
                .text("certificate_minor", &c.minor)
                .list("locus_minors", c.locus.iter().map(|(_, p)| p))
                .flag("locus_is_empty", c.locus_is_empty())
                .seed(seed);
        }
        Command::Charpoly { input, element } => {
            let alg = load_valid(input)?;
            let a = Element(parse_element(element, alg.dim())?);
            let chi = chnorm::char_poly_of(&alg, &a)?;
            r.text("algebra", alg.name())
                .text("element", &a)
                .text("char_poly", &chi)
                .int("element_degree", chnorm::element_degree(&alg, &a)?)
                .int("degree", chnorm::degree(&alg)?)
                .flag("annihilates_element", true);
        }
        Command::Verify { input, property: Property::Ch, .. } => {
            let alg = load_valid(input)?;
            let ok = chnorm::verify_ch(&alg)?;
            r.text("algebra", alg.name()).text("property", "ch").flag("holds", ok);
            if !ok {
                return Err(unverified(r, "cayley-hamilton identity"));
            }
        }
        Command::Verify { input, property: Property::Mult, poly } => {
            let alg = load_valid(input)?;
            let p = match poly {
                Some(text) => parse_poly(text, alg.dim())?,
                None => chnorm::generic_min_poly(&alg)?.norm(),
            };
            let v = chnorm::verify_multiplicative(
                &p,
                &alg,
                mode(config),
                seed,
                chnorm::DEFAULT_TRIALS,
                chnorm::DEFAULT_BOUND,
            )?;
            r.text("algebra", alg.name())
                .text("property", "mult")
                .text("polynomial", &p)
                .text("mode", v.mode)
                .flag("holds", v.holds)
                .int("trials", v.trials)
                .text("note", &v.note);
            match &v.witness {
                Some((a, b)) => r.text("witness", format!("{a} * {b}")),
                None => r.text("witness", "none"),
            };
            r.seed(seed);
            if !v.holds {
                return Err(unverified(r, "polynomial is not multiplicative"));
            }
        }
        Command::Radical { input } => {
            let alg = load_valid(input)?;
            let rad = structure::radical(&alg)?;
            let q = structure::quotient(&alg, &rad)?;
            r.text("algebra", alg.name())
                .int("dim", alg.dim())
                .int("radical_dim", rad.dim())
                .list("radical_basis", &rad.vectors)
                .int("nilpotency_index", rad.nilpotency_index)
                .int("quotient_dim", q.algebra.dim());
        }
        Command::Decompose { input } => {
            let alg = load_valid(input)?;
            let d = structure::decompose(&alg, mode(config), seed)?;
            r.text("algebra", alg.name())
                .int("dim", alg.dim())
                .int("radical_dim", d.radical.dim())
                .list("radical_basis", &d.radical.vectors)
                .int("nilpotency_index", d.radical.nilpotency_index)
                .int("quotient_dim", d.quotient.algebra.dim())
                .list("idempotents", d.factors.iter().map(|f| &f.lifted_idempotent))
                .ints("block_dims", d.factors.iter().map(|f| f.block.algebra.dim()))
                .list("irreducible_norms", d.factors.iter().map(|f| &f.norm))
                .ints("norm_degrees", d.factors.iter().map(|f| f.degree))
                .ints("exponents", d.exponents())
                .text("minimal_norm", &d.minimal_norm)
                .int("degree", d.degree)
                .flag("product_identity", d.product_identity)
                .flag("degree_sum", d.degree_sum)
                .flag("radical_invariance", d.radical_invariance)
                .flag("factors_multiplicative", d.factors.iter().all(|f| f.multiplicative.holds))
                .flag("factors_homogeneous", d.factors.iter().all(|f| f.homogeneous))
                .flag("factors_unit_value_one", d.factors.iter().all(|f| f.unit_value_one));
            match &d.nilpotency {
                Some(o) => r.text(
                    "nilpotency_observation",
                    format!(
                        "{}: exponent {} vs maximal element nilpotency {}",
                        if o.matches() { "observed" } else { "violated" },
                        o.exponent,
                        o.max_element_nilpotency
                    ),
                ),
                None => r.text("nilpotency_observation", "not applicable"),
            };
            r.seed(seed);
            if !d.all_verified() {
                return Err(unverified(r, "decomposition identities"));
            }
        }
        Command::Catalog { name: None, .. } => {
            r.list("catalog", catalog::NAMES.iter());
        }
        Command::Catalog { name: Some(name), emit } => {
            let alg = catalog::get(name)?;
            if *emit {
                return Ok(Output::Raw(format::emit_algebra(&alg)));
            }
            r.text("algebra", alg.name()).int("dim", alg.dim()).list("basis", alg.basis());
            r.text("unit", alg.unit());
        }
        Command::Restrict { input, subspace } => {
            let alg = load_valid(input)?;
            let vectors: Vec<Element> = parse_vectors(subspace, alg.dim())?.into_iter().map(Element).collect();
            let sub = subalgebra(&alg, &vectors)?;
            let rep = chnorm::restriction_report(&alg, &sub.algebra, &sub.inclusion)?;
            let basis: Vec<Element> = (0..sub.inclusion.cols()).map(|j| Element(sub.inclusion.column(j))).collect();
            r.text("algebra", alg.name())
                .int("subalgebra_dim", sub.algebra.dim())
                .list("subalgebra_basis", &basis)
                .text("restricted_norm", &rep.restricted)
                .text("subalgebra_norm", &rep.sub_norm)
                .int("degree", rep.degree)
                .int("subalgebra_degree", rep.sub_degree);
            match rep.equal {
                Some(eq) => r.text("restriction_equals_subalgebra_norm", yes_no(eq)),
                None => r.text("restriction_equals_subalgebra_norm", "not compared (degrees differ)"),
            };
            if rep.equal == Some(false) {
                return Err(unverified(r, "restriction differs from the subalgebra norm"));
            }
        }
    }
    Ok(Output::Report(r))
}
