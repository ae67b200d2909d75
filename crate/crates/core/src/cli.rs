//! Command-line front end: argument parsing, dispatch, and rendering.
//!
//! [`run`] does all the work and returns the exit code with the text for
//! stdout and stderr, so the binary is a thin wrapper and tests can drive the
//! commands in-process.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::exact_numbers::{to_exact_string, Rational};
use crate::expr::{EvalError, UmbraExpr};
use crate::families::FamilyKind;
use crate::polynomial::Polynomial;
use crate::sheffer::{
    abel_representation, identity_matrix, matrix_product, sheffer_sequence, sheffer_sequence_via_gf,
    Flavor, RiordanArray, UmbraPair,
};
use crate::umbra::Umbra;
use crate::verify::{self, Suite, DEFAULT_ORDER};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "umbral", version, about = "Exact umbral calculus: umbrae, Sheffer sequences, Riordan arrays")]
pub struct Cli {
    /// Truncation order N; moments and rows run over 0..=N.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Seed for the random umbrae used by `verify`.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Moments and generating function coefficients of an umbra expression.
    Umbra {
        /// e.g. `bell`, `dot(chi, bell)`, `k(chi, [1, 2, 3])`.
        expr: String,
    },
    /// Riordan arrays of a pair (gamma, alpha).
    Riordan {
        #[command(subcommand)]
        action: RiordanAction,
    },
    /// Sheffer sequence of a pair (gamma, alpha).
    Sheffer {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value_t = Route::Direct)]
        route: Route,
    },
    /// Coefficient tables of a polynomial family.
    Family {
        #[arg(value_enum)]
        kind: FamilyName,
        /// Largest degree; defaults to --order.
        #[arg(long)]
        nmax: Option<usize>,
        /// Gegenbauer parameter.
        #[arg(long, default_value = "1", value_parser = rational_arg, allow_hyphen_values = true)]
        lambda: Rational,
        /// Meixner parameter b.
        #[arg(long, default_value = "1", value_parser = rational_arg, allow_hyphen_values = true)]
        b: Rational,
        /// Meixner parameter c.
        #[arg(long, default_value = "2", value_parser = rational_arg, allow_hyphen_values = true)]
        c: Rational,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = suite_arg)]
        suite: Suite,
    },
}

#[derive(Args, Debug, Clone)]
pub struct PairArgs {
    /// Umbra expression for gamma.
    pub gamma: String,
    /// Umbra expression for alpha.
    pub alpha: String,
    #[arg(long, value_enum, default_value_t = FlavorArg::Exponential)]
    pub flavor: FlavorArg,
}

#[derive(Subcommand, Debug)]
pub enum RiordanAction {
    /// The array itself.
    Show(PairArgs),
    /// The inverse array, with the product check.
    Inverse(PairArgs),
    /// Product with the array of a second pair.
    Multiply {
        #[command(flatten)]
        pair: PairArgs,
        gamma2: String,
        alpha2: String,
    },
    /// Matrix-vector product with the moment vector of an umbra.
    Apply {
        #[command(flatten)]
        pair: PairArgs,
        sequence: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    Exponential,
    Ordinary,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Self {
        match f {
            FlavorArg::Exponential => Flavor::Exponential,
            FlavorArg::Ordinary => Flavor::Ordinary,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    /// Closed-form coefficients.
    Direct,
    /// Expansion of the generating function.
    Gf,
    /// Umbral Abel polynomials.
    Abel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    ChebyshevU,
    Gegenbauer,
    Meixner,
    MittagLeffler,
    Pidduck,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    crate::exact_numbers::parse_rational(s).map_err(|e| e.to_string())
}

fn suite_arg(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Command failure classified by exit code.
#[derive(Debug)]
enum Failure {
    Parse(String),
    Precondition(String),
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        Failure::Precondition(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Parse(e.to_string()),
            other => Failure::Precondition(other.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(EXIT_PARSE, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Umbra { expr } => cmd_umbra(expr, cli.order, cli.format),
        Command::Riordan { action } => cmd_riordan(action, cli.order, cli.format),
        Command::Sheffer { pair, route } => cmd_sheffer(pair, *route, cli.order, cli.format),
        Command::Family {
            kind,
            nmax,
            lambda,
            b,
            c,
        } => {
            let kind = match kind {
                FamilyName::ChebyshevU => FamilyKind::ChebyshevU,
                FamilyName::Gegenbauer => FamilyKind::Gegenbauer { lambda: lambda.clone() },
                FamilyName::Meixner => FamilyKind::Meixner {
                    b: b.clone(),
                    c: c.clone(),
                },
                FamilyName::MittagLeffler => FamilyKind::MittagLeffler,
                FamilyName::Pidduck => FamilyKind::Pidduck,
            };
            cmd_family(&kind, nmax.unwrap_or(cli.order), cli.format)
        }
        Command::Verify { suite } => return cmd_verify(*suite, cli.order, cli.seed, cli.format),
    };
    match result {
        Ok(text) => Outcome::ok(text),
        Err(Failure::Parse(msg)) => Outcome::fail(EXIT_PARSE, format!("error: {msg}\n")),
        Err(Failure::Precondition(msg)) => Outcome::fail(EXIT_PRECONDITION, format!("error: {msg}\n")),
    }
}

fn umbra_of(spec: &str, order: usize) -> Result<Umbra, Failure> {
    let expr: UmbraExpr = spec.parse()?;
    Ok(expr.eval(order)?)
}

fn pair_of(args: &PairArgs, order: usize) -> Result<UmbraPair, Failure> {
    Ok(UmbraPair::new(umbra_of(&args.gamma, order)?, umbra_of(&args.alpha, order)?)?)
}

fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(to_exact_string).collect()
}

fn json_text(value: &Value) -> String {
    let mut text = serde_json::to_string(value).expect("json values serialize");
    text.push('\n');
    text
}

fn csv_line(cells: &[String]) -> String {
    let mut line = cells.join(",");
    line.push('\n');
    line
}

/// Columns right-aligned to their widest entry.
fn aligned_table(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|j| rows.iter().filter_map(|r| r.get(j)).map(String::len).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:>w$}"))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn render_moments(title: &str, u: &Umbra, format: Format) -> String {
    let moments = strings(u.moments());
    let gf = strings(u.gf().coeffs());
    match format {
        Format::Json => json_text(&json!({ "moments": moments, "gf": gf })),
        Format::Csv => {
            let mut out = csv_line(&["n".into(), "moment".into(), "gf".into()]);
            for (n, (m, c)) in moments.iter().zip(&gf).enumerate() {
                out.push_str(&csv_line(&[n.to_string(), m.clone(), c.clone()]));
            }
            out
        }
        Format::Pretty => {
            let mut rows = vec![vec!["n".to_string(), "moment".into(), "gf".into()]];
            for (n, (m, c)) in moments.iter().zip(&gf).enumerate() {
                rows.push(vec![n.to_string(), m.clone(), c.clone()]);
            }
            format!("{title}\n{}", aligned_table(&rows))
        }
    }
}

fn render_matrix(title: &str, entries: &[Vec<Rational>], flavor: Flavor, format: Format) -> String {
    let rows: Vec<Vec<String>> = entries.iter().map(|r| strings(r)).collect();
    match format {
        Format::Json => json_text(&json!({
            "order": entries.len() - 1,
            "flavor": flavor.name(),
            "entries": rows,
        })),
        Format::Csv => rows.iter().map(|r| csv_line(r)).collect(),
        Format::Pretty => {
            // blank out the zeros above the diagonal
            let lower: Vec<Vec<String>> = rows
                .iter()
                .enumerate()
                .map(|(n, r)| r[..=n].to_vec())
                .collect();
            format!("{title}\n{}", aligned_table(&lower))
        }
    }
}

fn render_polynomials(title: &str, polys: &[Polynomial], format: Format) -> String {
    let coeffs: Vec<Vec<String>> = polys.iter().map(|p| strings(p.coeffs())).collect();
    match format {
        Format::Json => json_text(&json!({ "order": polys.len() - 1, "polynomials": coeffs })),
        Format::Csv => coeffs.iter().map(|r| csv_line(r)).collect(),
        Format::Pretty => {
            let mut out = format!("{title}\n");
            for (n, p) in polys.iter().enumerate() {
                out.push_str(&format!("{n:>3}: {p}\n"));
            }
            out
        }
    }
}

fn cmd_umbra(spec: &str, order: usize, format: Format) -> Result<String, Failure> {
    let expr: UmbraExpr = spec.parse()?;
    let u = expr.eval(order)?;
    Ok(render_moments(&format!("umbra {expr}, order {order}"), &u, format))
}

fn cmd_riordan(action: &RiordanAction, order: usize, format: Format) -> Result<String, Failure> {
    let describe = |p: &PairArgs| format!("({}, {})", p.gamma, p.alpha);
    match action {
        RiordanAction::Show(args) => {
            let arr = RiordanArray::new(&pair_of(args, order)?, args.flavor.into());
            let title = format!("{} riordan array of {}", arr.flavor(), describe(args));
            Ok(render_matrix(&title, arr.entries(), arr.flavor(), format))
        }
        RiordanAction::Inverse(args) => {
            let arr = RiordanArray::new(&pair_of(args, order)?, args.flavor.into());
            let inv = arr.inverse()?;
            let size = order + 1;
            let check = matrix_product(arr.entries(), inv.entries()) == identity_matrix(size)
                && matrix_product(inv.entries(), arr.entries()) == identity_matrix(size);
            let title = format!("inverse of the {} riordan array of {}", arr.flavor(), describe(args));
            let mut text = render_matrix(&title, inv.entries(), inv.flavor(), format);
            if format == Format::Pretty {
                text.push_str(&format!(
                    "product with the original array is the identity: {}\n",
                    if check { "yes" } else { "no" }
                ));
            }
            Ok(text)
        }
        RiordanAction::Multiply { pair, gamma2, alpha2 } => {
            let second = PairArgs {
                gamma: gamma2.clone(),
                alpha: alpha2.clone(),
                flavor: pair.flavor,
            };
            let a = RiordanArray::new(&pair_of(pair, order)?, pair.flavor.into());
            let b = RiordanArray::new(&pair_of(&second, order)?, pair.flavor.into());
            let product = a.multiply(&b)?;
            let title = format!("{} * {}", describe(pair), describe(&second));
            Ok(render_matrix(&title, product.entries(), product.flavor(), format))
        }
        RiordanAction::Apply { pair, sequence } => {
            let arr = RiordanArray::new(&pair_of(pair, order)?, pair.flavor.into());
            let seq = umbra_of(sequence, order)?;
            let image = arr.apply(&seq)?;
            let title = format!("riordan array of {} applied to {sequence}", describe(pair));
            Ok(render_moments(&title, &image, format))
        }
    }
}

fn cmd_sheffer(args: &PairArgs, route: Route, order: usize, format: Format) -> Result<String, Failure> {
    let pair = pair_of(args, order)?;
    let polys = match route {
        Route::Direct => sheffer_sequence(&pair).polys,
        Route::Gf => sheffer_sequence_via_gf(&pair),
        Route::Abel => abel_representation(&pair)?.polys,
    };
    let title = format!("sheffer sequence of ({}, {})", args.gamma, args.alpha);
    Ok(render_polynomials(&title, &polys, format))
}

fn cmd_family(kind: &FamilyKind, nmax: usize, format: Format) -> Result<String, Failure> {
    let polys = (0..=nmax).map(|n| kind.polynomial(n)).collect::<Result<Vec<_>, _>>()?;
    let coords: Option<Vec<Vec<Rational>>> = (0..=nmax).map(|n| kind.binomial_basis_coords(n)).collect();
    let monomial: Vec<Vec<String>> = polys.iter().map(|p| strings(p.coeffs())).collect();
    let binomial: Option<Vec<Vec<String>>> = coords.map(|cs| cs.iter().map(|c| strings(c)).collect());
    Ok(match format {
        Format::Json => {
            let mut value = json!({ "family": kind.to_string(), "nmax": nmax, "polynomials": monomial });
            if let Some(b) = binomial {
                value["binomial_basis"] = json!(b);
            }
            json_text(&value)
        }
        Format::Csv => {
            let mut out = String::new();
            for (n, row) in monomial.iter().enumerate() {
                out.push_str(&csv_line(&[vec!["monomial".into(), n.to_string()], row.clone()].concat()));
            }
            for (n, row) in binomial.iter().flatten().enumerate() {
                out.push_str(&csv_line(&[vec!["binomial".into(), n.to_string()], row.clone()].concat()));
            }
            out
        }
        Format::Pretty => {
            let mut out = render_polynomials(&kind.to_string(), &polys, Format::Pretty);
            if let Some(b) = binomial {
                out.push_str("coefficients of C(x, k), k = 0..n\n");
                for (n, row) in b.iter().enumerate() {
                    out.push_str(&format!("{n:>3}: {}\n", row.join(", ")));
                }
            }
            out
        }
    })
}

fn cmd_verify(suite: Suite, order: usize, seed: u64, format: Format) -> Outcome {
    let report = match verify::run(suite, order, seed) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(EXIT_PRECONDITION, format!("error: {e}\n")),
    };
    let text = match format {
        Format::Pretty => format!("{report}\n"),
        Format::Json => {
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| {
                    let mut v = json!({
                        "identity": format!("{}/{}", c.suite, c.name),
                        "instances": c.instances,
                        "passed": c.passed(),
                    });
                    if let Some(cx) = &c.failure {
                        v["counterexample"] = json!({ "inputs": cx.inputs, "lhs": cx.lhs, "rhs": cx.rhs });
                    }
                    v
                })
                .collect();
            json_text(&json!({
                "suite": suite.name(),
                "order": order,
                "seed": seed,
                "passed": report.passed(),
                "checks": checks,
            }))
        }
        Format::Csv => {
            let mut out = csv_line(&["identity".into(), "instances".into(), "status".into()]);
            for c in &report.checks {
                let status = if c.passed() { "pass" } else { "fail" };
                out.push_str(&csv_line(&[
                    format!("{}/{}", c.suite, c.name),
                    c.instances.to_string(),
                    status.into(),
                ]));
            }
            out
        }
    };
    Outcome {
        code: if report.passed() { EXIT_OK } else { EXIT_VERIFY },
        stdout: text,
        stderr: String::new(),
    }
}
