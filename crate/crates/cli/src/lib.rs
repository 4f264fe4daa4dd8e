//! Command-line front end for `theta-lab`.
//!
//! [`run`] parses arguments and returns the exit code together with the text
//! destined for stdout and stderr, so the whole interface can be exercised in
//! tests without spawning processes.

pub mod report;

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use theta_lab::bundle::{self, BundleSymbol};
use theta_lab::hyperelliptic::{parse_class, AnyCurve};
use theta_lab::lefschetz::{lefschetz_number, split_eigendims, ScenarioKind};
use theta_lab::verlinde::{self, admissible_pairs, s_factor, s_factor_f64};
use theta_lab::{fit_hilbert, Field, HyperellipticCurve, Rational};

use report::{build_report, reference_table, ReferenceEntry};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "theta-lab",
    version,
    about = "Exact computations for the rank-4 symplectic theta map on a genus-2 curve"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Level-2 Verlinde data: the S(s,t) table and p(2).
    Verlinde {
        /// Also print floating-point approximations.
        #[arg(long)]
        approx: bool,
    },
    /// Fit the Hilbert polynomial of Xi to p(0), p(1), p(2).
    Fit {
        /// Three comma-separated integers.
        #[arg(
            long,
            value_delimiter = ',',
            num_args = 1,
            required = true,
            allow_hyphen_values = true
        )]
        values: Vec<i64>,
    },
    /// Eigenspace split of H^1 from the Lefschetz number.
    Lefschetz {
        #[arg(long, value_enum)]
        scenario: ScenarioArg,
    },
    /// Jacobian arithmetic on a genus-2 curve.
    Jac {
        /// Curve, e.g. "field=Fp:13; f=0,-1,0,0,0".
        #[arg(long)]
        curve: String,
        #[command(subcommand)]
        op: JacOp,
    },
    /// Rank/degree bookkeeping for vector bundles.
    Bundle {
        #[command(subcommand)]
        op: BundleOp,
    },
    /// Recompute every pinned constant and compare with the reference table.
    Report {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// JSON file replacing the built-in reference table.
        #[arg(long)]
        reference: Option<std::path::PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ScenarioArg {
    Sym2,
    #[value(name = "sym2-rejected")]
    Sym2Rejected,
    #[value(name = "hom-ee")]
    HomEe,
    #[value(name = "hom-ow")]
    HomOw,
}

impl From<ScenarioArg> for ScenarioKind {
    fn from(s: ScenarioArg) -> Self {
        match s {
            ScenarioArg::Sym2 => ScenarioKind::Sym2,
            ScenarioArg::Sym2Rejected => ScenarioKind::Sym2Rejected,
            ScenarioArg::HomEe => ScenarioKind::HomEe,
            ScenarioArg::HomOw => ScenarioKind::HomOw,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum JacOp {
    /// Sum of two classes given as "u=...; v=...[; deg=d]".
    Add {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// h^0 of a class.
    H0 {
        #[arg(long)]
        class: String,
    },
    /// The sixteen two-torsion classes.
    TwoTorsion,
    /// The two classes of Theta . (Theta + M) in Pic^1.
    ThetaInt {
        #[arg(long)]
        m: String,
    },
    /// The six Weierstrass points.
    Weierstrass,
    /// All classes of a given degree (finite fields only).
    Enumerate {
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
    },
}

#[derive(Debug, Args)]
pub struct SymbolArgs {
    #[arg(long)]
    rank: i64,
    #[arg(long, allow_hyphen_values = true)]
    degree: i64,
    #[arg(long, default_value_t = 2)]
    genus: i64,
}

#[derive(Debug, Subcommand)]
pub enum BundleOp {
    /// Euler characteristic d + r(1 - g).
    Chi(SymbolArgs),
    /// Slope d/r.
    Slope(SymbolArgs),
    /// n(2n+1)(g-1).
    ModuliDim {
        #[arg(long)]
        n: i64,
        #[arg(long, default_value_t = 2)]
        genus: i64,
    },
    /// The Raynaud invariant chain.
    Raynaud {
        #[arg(long, default_value_t = 2)]
        genus: i64,
    },
}

/// A domain error, printed as `error: <CODE>: <message>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: String,
    pub message: String,
    pub exit: i32,
}

macro_rules! impl_from_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError { code: e.code().to_string(), message: e.to_string(), exit: EXIT_DOMAIN }
            }
        }
    )*};
}

impl_from_error!(
    theta_lab::VerlindeError,
    theta_lab::FitError,
    theta_lab::LefschetzError,
    theta_lab::CurveError,
    theta_lab::BundleError,
    theta_lab::ArithError
);

impl CliError {
    fn new(code: &str, message: impl Into<String>) -> Self {
        CliError {
            code: code.to_string(),
            message: message.into(),
            exit: EXIT_DOMAIN,
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        CliError {
            exit: EXIT_USAGE,
            ..CliError::new("USAGE", message)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome {
                        code: EXIT_OK,
                        stdout: text,
                        stderr: String::new(),
                    }
                }
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match dispatch(cli.command) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit,
            stdout: String::new(),
            stderr: format!("error: {}: {}\n", e.code, e.message),
        },
    }
}

fn dispatch(command: Command) -> Result<(i32, String), CliError> {
    match command {
        Command::Verlinde { approx } => cmd_verlinde(approx).map(ok),
        Command::Fit { values } => cmd_fit(&values).map(ok),
        Command::Lefschetz { scenario } => cmd_lefschetz(scenario.into()).map(ok),
        Command::Jac { curve, op } => {
            let curve: AnyCurve = curve.parse()?;
            match curve {
                AnyCurve::Rational(c) => cmd_jac(&c, op),
                AnyCurve::Prime(c) => cmd_jac(&c, op),
            }
            .map(ok)
        }
        Command::Bundle { op } => cmd_bundle(op).map(ok),
        Command::Report { format, reference } => {
            let table = match reference {
                None => reference_table(),
                Some(path) => load_reference(&path)?,
            };
            Ok(cmd_report(format, &table))
        }
    }
}

fn ok(s: String) -> (i32, String) {
    (EXIT_OK, s)
}

fn load_reference(path: &std::path::Path) -> Result<Vec<ReferenceEntry>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::new("IO", format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::new("BAD_REFERENCE", e.to_string()))
}

pub fn cmd_verlinde(approx: bool) -> Result<String, CliError> {
    let mut out = String::new();
    for pair in admissible_pairs() {
        let s = s_factor(pair);
        let _ = write!(out, "S({},{}) = {}", pair.s(), pair.t(), s);
        if approx {
            let _ = write!(out, "  ~ {:.10}", s_factor_f64(pair));
        }
        out.push('\n');
    }
    let _ = writeln!(
        out,
        "field = Q(zeta_{})",
        s_factor(admissible_pairs()[0]).modulus()
    );
    let sum = verlinde::inverse_square_sum()?.to_rational()?;
    let _ = writeln!(out, "sum S^-2 = {sum}");
    if approx {
        let _ = writeln!(out, "p(2) ~ {:.10}", verlinde::verlinde_p2_f64());
    }
    let _ = writeln!(out, "p(2) = {}", verlinde::verlinde_p2()?);
    Ok(out)
}

pub fn cmd_fit(values: &[i64]) -> Result<String, CliError> {
    let [p0, p1, p2] = values else {
        return Err(CliError::usage(format!(
            "--values needs 3 integers, got {}",
            values.len()
        )));
    };
    let fit = fit_hilbert(*p0, *p1, *p2)?;
    let mut out = String::new();
    let _ = writeln!(out, "gamma = {}", fit.gamma);
    let _ = writeln!(out, "sigma = {}", fit.sigma);
    let _ = writeln!(out, "pi = {}", fit.pi);
    let _ = writeln!(out, "p(n) = {}", fit.polynomial().format_with("n"));
    if let Some(c) = fit.symmetry_center() {
        let _ = writeln!(out, "symmetry center = {c}");
    }
    let _ = writeln!(out, "basepoints = {}", fit.chern_degree);
    Ok(out)
}

pub fn cmd_lefschetz(kind: ScenarioKind) -> Result<String, CliError> {
    let s = kind.scenario::<Rational>();
    let traces: Vec<String> = kind.traces().iter().map(|t| t.to_string()).collect();
    let mut out = String::new();
    let _ = writeln!(out, "scenario = {}", kind.name());
    let _ = writeln!(out, "traces = {}", traces.join(","));
    let _ = writeln!(
        out,
        "h0 = {}, h0_plus = {}, h1 = {}",
        s.h0_total(),
        s.h0_plus(),
        s.h1_total()
    );
    let _ = writeln!(out, "lefschetz number = {}", lefschetz_number(&s));
    let split = split_eigendims(&s)?;
    let _ = writeln!(out, "h1_plus = {}", split.plus);
    let _ = writeln!(out, "h1_minus = {}", split.minus);
    Ok(out)
}

fn cmd_jac<F: Field>(c: &HyperellipticCurve<F>, op: JacOp) -> Result<String, CliError> {
    let mut out = String::new();
    match op {
        JacOp::Add { a, b } => {
            let a = parse_class(c, &a)?;
            let b = parse_class(c, &b)?;
            let _ = writeln!(out, "{}", c.add_classes(&a, &b));
        }
        JacOp::H0 { class } => {
            let d = parse_class(c, &class)?;
            let _ = writeln!(out, "h0 = {}", c.h0(&d));
        }
        JacOp::TwoTorsion => {
            let t = c.two_torsion()?;
            for class in &t {
                let _ = writeln!(out, "{class}");
            }
            let _ = writeln!(out, "count = {}", t.len());
        }
        JacOp::ThetaInt { m } => {
            let m = parse_class(c, &m)?;
            let (l1, l2) = c.theta_translate_intersection(&m)?;
            let _ = writeln!(out, "{l1}");
            let _ = writeln!(out, "{l2}");
        }
        JacOp::Weierstrass => {
            for p in c.weierstrass_points()? {
                let _ = writeln!(out, "{}", p.format(c.field()));
            }
        }
        JacOp::Enumerate { degree } => {
            let all = c.enumerate_pic(degree)?;
            for class in &all {
                let _ = writeln!(out, "{class}");
            }
            let _ = writeln!(out, "count = {}", all.len());
        }
    }
    Ok(out)
}

fn cmd_bundle(op: BundleOp) -> Result<String, CliError> {
    let symbol = |a: &SymbolArgs| BundleSymbol::new(a.rank, a.degree, a.genus);
    Ok(match op {
        BundleOp::Chi(a) => format!("chi = {}\n", symbol(&a)?.chi()),
        BundleOp::Slope(a) => format!("slope = {}\n", symbol(&a)?.slope()),
        BundleOp::ModuliDim { n, genus } => {
            format!("moduli_dim = {}\n", bundle::moduli_dim(n, genus)?)
        }
        BundleOp::Raynaud { genus } => {
            let r = bundle::raynaud_invariants(genus)?;
            format!(
                "mukai_rank = {}\nduplication_degree = {}\ntheta_self_int_2theta = {}\npullback_degree_on_y = {}\nslope_ec = {}\n",
                r.mukai_rank, r.duplication_degree, r.theta_self_int_2theta, r.pullback_degree_on_y, r.slope_ec
            )
        }
    })
}

pub fn cmd_report(format: Format, reference: &[ReferenceEntry]) -> (i32, String) {
    let rows = build_report(reference);
    let text = match format {
        Format::Text => report::render_text(&rows),
        Format::Json => report::render_json(&rows) + "\n",
    };
    let code = if report::all_match(&rows) {
        EXIT_OK
    } else {
        EXIT_DOMAIN
    };
    (code, text)
}
