//! Command dispatch for the `genus-forge` binary.
//!
//! [`run`] never touches the process: it returns the exit code and the text for
//! standard output and standard error, so the binary and the tests share one path.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use genus_forge::surgery::{
    bl_bound, construct, in_stable_range, ko_group, l_group, morlet_bound, theorem_gate,
    ConstructionInput, GateReport, Group,
};
use genus_forge::{
    char_series, fixtures, genus_of_manifold, genus_polynomial, parse_manifold, parse_rational,
    product_with_sphere, ErrorKind, Genus, ManifoldData, Partition, Rational,
};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Pretty,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenusKind {
    #[value(name = "L")]
    L,
    #[value(name = "Ahat", alias = "ahat")]
    Ahat,
}

impl From<GenusKind> for Genus {
    fn from(k: GenusKind) -> Self {
        match k {
            GenusKind::L => Genus::L,
            GenusKind::Ahat => Genus::Ahat,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    LGroup,
    KoGroup,
}

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(name = "genus-forge", version, about = "Exact characteristic-class computations")]
pub struct Cli {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Emit human-readable text (default).
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct ManifoldArg {
    /// Descriptor file, or the name of a shipped fixture (cp2, hp2, k3).
    #[arg(long)]
    manifold: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Characteristic power series up to z^order.
    Series {
        #[arg(long, value_enum)]
        kind: GenusKind,
        #[arg(long)]
        order: usize,
    },
    /// Multiplicative-sequence polynomial of a given degree.
    Genus {
        #[arg(long, value_enum)]
        kind: GenusKind,
        #[arg(long)]
        degree: u32,
    },
    Signature(ManifoldArg),
    Ahat(ManifoldArg),
    /// Runs the bundle construction and prints its certificate.
    Construct {
        #[command(flatten)]
        manifold: ManifoldArg,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        lambda: i64,
        /// Fixed value of A instead of the obstruction-killing one.
        #[arg(long = "A", allow_hyphen_values = true)]
        a: Option<String>,
    },
    /// Hypothesis checks for (M, k).
    Gate {
        #[command(flatten)]
        manifold: ManifoldArg,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        conn: Option<u32>,
    },
    Bounds {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        conn: Option<u32>,
    },
    Tables {
        #[arg(long, value_enum)]
        which: TableKind,
        /// Inclusive range `A..B`; bounds may be negative.
        #[arg(long, allow_hyphen_values = true)]
        range: String,
    },
    /// Writes the descriptor of M × S^n.
    SphereProduct {
        #[command(flatten)]
        manifold: ManifoldArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

/// A parsed invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandRequest {
    pub command: Command,
    pub output: OutputFormat,
}

impl CommandRequest {
    pub fn parse_from<I, T>(args: I) -> Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args)?;
        Ok(CommandRequest {
            command: cli.command,
            output: if cli.json {
                OutputFormat::Json
            } else {
                OutputFormat::Pretty
            },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
    /// A report still worth printing, e.g. a gate that did not pass.
    stdout: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
            stdout: String::new(),
        }
    }
}

impl From<genus_forge::Error> for Failure {
    fn from(e: genus_forge::Error) -> Self {
        let code = match e.kind() {
            ErrorKind::Validation => EXIT_VALIDATION,
            ErrorKind::Precondition => EXIT_PRECONDITION,
        };
        Failure::new(code, e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match CommandRequest::parse_from(args) {
        Ok(request) => run(&request),
        Err(e) => {
            use clap::error::ErrorKind as K;
            let text = e.render().to_string();
            match e.kind() {
                K::DisplayHelp | K::DisplayVersion => Outcome::ok(text),
                _ => Outcome {
                    code: EXIT_VALIDATION,
                    stdout: String::new(),
                    stderr: text,
                },
            }
        }
    }
}

pub fn run(request: &CommandRequest) -> Outcome {
    match dispatch(request) {
        Ok(stdout) => Outcome::ok(stdout),
        Err(f) => Outcome {
            code: f.code,
            stdout: f.stdout,
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn load_manifold(arg: &ManifoldArg) -> Result<ManifoldData, Failure> {
    let path = Path::new(&arg.manifold);
    if !path.exists() && path.components().count() == 1 {
        let stem = arg.manifold.trim_end_matches(".json");
        if let Some(m) = fixtures::by_name(stem) {
            return Ok(m);
        }
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))?;
    parse_manifold(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn rational_map(map: &BTreeMap<Partition, Rational>) -> BTreeMap<Partition, String> {
    map.iter().map(|(p, v)| (p.clone(), v.to_string())).collect()
}

/// Pretty rationals use the typographic minus.
fn pretty(r: &Rational) -> String {
    r.to_string().replace('-', "−")
}

fn dispatch(request: &CommandRequest) -> Result<String, Failure> {
    let json = request.output == OutputFormat::Json;
    match &request.command {
        Command::Series { kind, order } => {
            let kind = Genus::from(*kind);
            let series = char_series(kind, *order);
            if json {
                #[derive(Serialize)]
                struct Report {
                    kind: Genus,
                    order: usize,
                    coefficients: Vec<String>,
                }
                Ok(to_json(&Report {
                    kind,
                    order: *order,
                    coefficients: series.coefficients().iter().map(|c| c.to_string()).collect(),
                }))
            } else {
                Ok(format!("{kind}(z) = {series}\n"))
            }
        }
        Command::Genus { kind, degree } => {
            let table = genus_polynomial(Genus::from(*kind), *degree);
            if json {
                #[derive(Serialize)]
                struct Report {
                    kind: Genus,
                    degree: u32,
                    coefficients: BTreeMap<Partition, String>,
                }
                Ok(to_json(&Report {
                    kind: table.kind,
                    degree: table.degree,
                    coefficients: rational_map(&table.coefficients),
                }))
            } else {
                Ok(format!("{}\n", table.render()))
            }
        }
        Command::Signature(arg) => genus_report(arg, Genus::L, "signature", json),
        Command::Ahat(arg) => genus_report(arg, Genus::Ahat, "ahat", json),
        Command::Construct {
            manifold,
            k,
            lambda,
            a,
        } => {
            let m = load_manifold(manifold)?;
            let a = a
                .as_deref()
                .map(parse_rational)
                .transpose()
                .map_err(|e| Failure::new(EXIT_VALIDATION, format!("--A: {e}")))?;
            let input = ConstructionInput::new(m, *k).with_lambda(*lambda);
            let cert = construct(&input, a)?;
            if json {
                return Ok(format!("{}\n", cert.to_json()));
            }
            let mut out = String::new();
            let _ = writeln!(out, "manifold   {}", cert.input.manifold);
            let _ = writeln!(out, "k, λ       {}, {}", cert.input.k, cert.input.lambda);
            let _ = writeln!(out, "m, j       {}, {}", cert.m, cert.j);
            let _ = writeln!(out, "b, c       {}, {}", pretty(&cert.b), pretty(&cert.c));
            let solved = if cert.a_solved { "solved" } else { "given" };
            let _ = writeln!(out, "A          {} ({solved})", pretty(&cert.a));
            let _ = writeln!(out, "σ          {}", pretty(&cert.sigma));
            let _ = writeln!(out, "numbers");
            for (p, v) in &cert.pontryagin_numbers {
                let _ = writeln!(out, "  {:<12} {}", p.monomial(), pretty(v));
            }
            let _ = writeln!(
                out,
                "census     {}",
                if cert.census_matches_closed_form {
                    "matches closed form"
                } else {
                    "DIFFERS from closed form"
                }
            );
            let _ = writeln!(out, "Â(E)       {}", pretty(&cert.ahat_e));
            let g = &cert.gates;
            let _ = writeln!(
                out,
                "gates      spin={} simply_connected={} bl_bound={} within={} cross_section={}",
                g.spin, g.simply_connected, g.bl_bound, g.within_bl_bound, g.cross_section.reason
            );
            for w in &cert.warnings {
                let _ = writeln!(out, "warning: {w}");
            }
            Ok(out)
        }
        Command::Gate { manifold, k, conn } => {
            let m = load_manifold(manifold)?;
            let report = theorem_gate(&m, *k, *conn);
            let text = if json {
                to_json(&report)
            } else {
                render_gate(&report)
            };
            if report.passed {
                Ok(text)
            } else {
                Err(Failure {
                    code: EXIT_PRECONDITION,
                    message: format!("hypotheses fail for {} with k = {k}", m.name),
                    stdout: text,
                })
            }
        }
        Command::Bounds { d, conn } => {
            let morlet = conn.map(|l| morlet_bound(*d, l)).transpose()?;
            let stable_up_to = (0..=*d).take_while(|&k| in_stable_range(*d, k)).last();
            if json {
                #[derive(Serialize)]
                struct Report {
                    d: u32,
                    bl_bound: i64,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    connectivity: Option<u32>,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    morlet_bound: Option<i64>,
                }
                Ok(to_json(&Report {
                    d: *d,
                    bl_bound: bl_bound(*d),
                    connectivity: *conn,
                    morlet_bound: morlet,
                }))
            } else {
                let mut out = format!("bl_bound({d}) = {}\n", bl_bound(*d));
                if let (Some(l), Some(b)) = (conn, morlet) {
                    let _ = writeln!(out, "morlet_bound({d}, {l}) = {b}");
                }
                if let Some(k) = stable_up_to.filter(|&k| k > 0) {
                    let _ = writeln!(out, "stable range holds for k ≤ {k}");
                }
                Ok(out)
            }
        }
        Command::Tables { which, range } => {
            let (lo, hi) = parse_range(range)?;
            let (label, f): (&str, fn(i64) -> Group) = match which {
                TableKind::LGroup => ("L", l_group),
                TableKind::KoGroup => ("KO", ko_group),
            };
            if json {
                #[derive(Serialize)]
                struct Row {
                    n: i64,
                    group: Group,
                }
                #[derive(Serialize)]
                struct Report {
                    which: &'static str,
                    rows: Vec<Row>,
                }
                Ok(to_json(&Report {
                    which: match which {
                        TableKind::LGroup => "l-group",
                        TableKind::KoGroup => "ko-group",
                    },
                    rows: (lo..=hi).map(|n| Row { n, group: f(n) }).collect(),
                }))
            } else {
                let mut out = String::new();
                for n in lo..=hi {
                    let _ = writeln!(out, "{label}_{n} = {}", f(n));
                }
                Ok(out)
            }
        }
        Command::SphereProduct { manifold, n, out } => {
            if *n == 0 {
                return Err(Failure::new(EXIT_VALIDATION, "--n must be at least 1"));
            }
            let m = load_manifold(manifold)?;
            let product = product_with_sphere(&m, *n);
            let mut text = product.to_json();
            text.push('\n');
            std::fs::write(out, text)
                .map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", out.display())))?;
            if json {
                #[derive(Serialize)]
                struct Report<'a> {
                    name: &'a str,
                    dimension: u32,
                    basis_size: usize,
                    out: String,
                }
                Ok(to_json(&Report {
                    name: &product.name,
                    dimension: product.dimension(),
                    basis_size: product.ring().len(),
                    out: out.display().to_string(),
                }))
            } else {
                Ok(format!(
                    "wrote {} (d = {}, {} basis elements) to {}\n",
                    product.name,
                    product.dimension(),
                    product.ring().len(),
                    out.display()
                ))
            }
        }
    }
}

fn genus_report(arg: &ManifoldArg, kind: Genus, key: &str, json: bool) -> Result<String, Failure> {
    let m = load_manifold(arg)?;
    let value = genus_of_manifold(kind, &m)?;
    if json {
        let mut report = serde_json::Map::new();
        report.insert("manifold".into(), m.name.clone().into());
        report.insert("dimension".into(), m.dimension().into());
        report.insert(key.into(), value.to_string().into());
        Ok(to_json(&report))
    } else {
        let label = match kind {
            Genus::L => "signature",
            Genus::Ahat => "Â",
        };
        Ok(format!("{label}({}) = {}\n", m.name, pretty(&value)))
    }
}

fn render_gate(report: &GateReport) -> String {
    let mark = |ok: bool| if ok { "ok  " } else { "FAIL" };
    let mut out = format!("{} with k = {} (d = {})\n", report.manifold, report.k, report.d);
    for c in &report.checks {
        let _ = writeln!(out, "  {} {:<17} {}", mark(c.passed), c.name, c.detail);
    }
    let _ = writeln!(out, "  {} {:<17} {}", mark(report.bl_path.passed), "bl_bound", report.bl_path.detail);
    if let Some(m) = &report.morlet_path {
        let _ = writeln!(out, "  {} {:<17} {}", mark(m.passed), "morlet_bound", m.detail);
    }
    let verdict = match report.bound_path {
        Some(path) if report.passed => format!("passes via {path:?}").to_lowercase(),
        _ => "fails".to_string(),
    };
    let _ = writeln!(out, "gate {verdict}");
    out
}

fn parse_range(text: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::new(EXIT_VALIDATION, format!("--range: expected A..B, got {text:?}"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(Failure::new(EXIT_VALIDATION, format!("--range: {lo} > {hi}")));
    }
    Ok((lo, hi))
}
