//! Command-line surface: argument parsing, dispatch and output formats.
//!
//! Exit status is 0 on success, 1 when a computation fails (including an
//! exceeded budget) and 2 for usage errors and unreadable inputs.

use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use crate::asympt::{dominant_root, mean_variance_at, normality_report, report_tsv, NormalityRow, SeriesSource, SingularityReport};
use crate::distributions::{
    cn2_computed, cn2_recurrences, derived_tables, diff_against_printed, partial_pair_oracle, ped_vector_oracle, PedType,
};
use crate::error::{Error, Result};
use crate::graph::io::load_graph;
use crate::graph::oracle::DEFAULT_BUDGET;
use crate::graph::{Graph, Oracle};
use crate::groupring::Mode;
use crate::known;
use crate::poly::json::{gf_from_json, gf_to_json, poly_to_json};
use crate::poly::laurent::{format_rational, parse_rational};
use crate::poly::{parse_gf, IntPoly, RationalGF};
use crate::transfer::{FamilySpec, TransferEngine};
use crate::verify::{self, VerifyOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Parser, Debug)]
#[command(name = "embdist", version, about = "Genus and Euler-genus distributions of multigraphs and graph families")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// genus or euler; defaults to genus, or to the mode stored in a family file.
    #[arg(long, global = true, env = "EMBDIST_MODE")]
    pub mode: Option<Mode>,
    /// Maximum number of embeddings or group-ring terms to enumerate.
    #[arg(long, global = true, env = "EMBDIST_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true, env = "EMBDIST_WORKERS")]
    pub workers: Option<usize>,
    #[arg(long, global = true, env = "EMBDIST_FORMAT", value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, env = "EMBDIST_SEED", default_value_t = 2024)]
    pub seed: u64,
    /// Extra series terms that a reconstructed GF must also reproduce.
    #[arg(long, global = true, env = "EMBDIST_GUARD", default_value_t = crate::poly::DEFAULT_GUARD)]
    pub guard: usize,
    /// Largest numerator degree in t tried by GF reconstruction.
    #[arg(long, global = true, env = "EMBDIST_PMAX", default_value_t = 6)]
    pub pmax: usize,
    /// Largest denominator degree in t tried by GF reconstruction.
    #[arg(long, global = true, env = "EMBDIST_QMAX", default_value_t = 6)]
    pub qmax: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Genus polynomial of a graph file by exhaustive enumeration.
    Genus { graph: String },
    /// Euler-genus polynomial of a graph file by exhaustive enumeration.
    Euler { graph: String },
    /// Members, series or generating function of a family
    /// (doubled-cycle, tripled-cycle, grid-3xn, or a JSON spec file).
    Family {
        spec: String,
        #[arg(long, conflicts_with = "gf")]
        series: Option<usize>,
        #[arg(long)]
        gf: bool,
    },
    /// Partial distributions D and S at two pendant vertices.
    Partials { graph: String, u: usize, v: usize },
    /// Ten-type partial Euler-genus vector at two degree-2 vertices.
    Ped { graph: String, s: usize, t: usize },
    /// Regenerated transition tables and their differences from the printed ones.
    Tables {
        #[arg(long)]
        derive: bool,
        #[arg(long)]
        diff: bool,
    },
    /// Dominant singularity, mean and variance slopes of a GF at x.
    /// The GF is an expression, a file, or genus-c2 / euler-c2.
    Asympt {
        gf: String,
        #[arg(long, default_value = "1")]
        at: String,
    },
    /// KS distances to the normal law along a series
    /// (genus-c2, euler-c2, or a family as for `family`).
    Normality {
        source: String,
        #[arg(long, num_args = 1.., value_delimiter = ',', required = true)]
        ns: Vec<usize>,
        /// Mean slope; defaults to the known value for genus-c2 / euler-c2.
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        sigma2: Option<String>,
    },
    /// Run the fixture suite and print one row per criterion.
    Verify {
        /// Criteria to run, e.g. `--only 1,7,9`.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
}

/// A run failure with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::Io(_) | Error::Json(_) | Error::InvalidGraph(_) | Error::InvalidGluing(_) | Error::Disconnected => 2,
            _ => 1,
        };
        let message = match &e {
            Error::BudgetExceeded { required, budget } => {
                format!("budget exceeded: {required} objects required, budget is {budget}; rerun with --budget {required}")
            }
            other => other.to_string(),
        };
        Failure { code, message }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, message: msg.into() }
}

type Run<T> = std::result::Result<T, Failure>;

/// Parse `args` (including the program name) and run; returns the exit status.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match run(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Run a parsed invocation, writing results to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Run<i32> {
    let g = &cli.global;
    if let Some(k) = g.workers {
        if k == 0 {
            return Err(usage("--workers must be at least 1"));
        }
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
    let oracle = Oracle { budget: g.budget, workers: g.workers };
    let text = match &cli.command {
        Command::Genus { graph } => emit_dist(&oracle.genus(&read_graph(graph)?)?.to_poly(), g.format)?,
        Command::Euler { graph } => emit_dist(&oracle.euler(&read_graph(graph)?)?.euler.to_poly(), g.format)?,
        Command::Family { spec, series, gf } => family(g, spec, *series, *gf)?,
        Command::Partials { graph, u, v } => {
            let mode = g.mode.unwrap_or_default();
            let p = partial_pair_oracle(&oracle, &read_graph(graph)?, *u, *v, mode)?;
            emit_named(&[("D", &p.d), ("S", &p.s)], g.format)
        }
        Command::Ped { graph, s, t } => {
            let v = ped_vector_oracle(&oracle, &read_graph(graph)?, *s, *t)?;
            let rows: Vec<(&str, &IntPoly)> = PedType::ALL.iter().map(|ty| (ty.name(), v.get(*ty))).collect();
            emit_named(&rows, g.format)
        }
        Command::Tables { derive, diff } => tables(*derive || !*diff, *diff, g.format)?,
        Command::Asympt { gf, at } => asympt(gf, at, g.format)?,
        Command::Normality { source, ns, mu, sigma2 } => normality(g, source, ns, mu.as_deref(), sigma2.as_deref())?,
        Command::Verify { only, cases } => {
            let opts = VerifyOptions { seed: g.seed, cases: *cases, only: only.clone(), ..VerifyOptions::default() };
            let checks = verify::run(&opts);
            let failed = checks.iter().filter(|c| !c.passed).count();
            let body = match g.format {
                Format::Text => {
                    let mut s: String = checks.iter().map(|c| format!("{c}\n")).collect();
                    s.push_str(&format!("{} passed, {failed} failed\n", checks.len() - failed));
                    s
                }
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&checks).map_err(Error::from)?),
                Format::Tsv => {
                    let mut s = String::from("id\tpassed\tseconds\ttitle\tdetail\n");
                    for c in &checks {
                        s.push_str(&format!("{}\t{}\t{:.3}\t{}\t{}\n", c.id, c.passed, c.seconds, c.title, c.detail));
                    }
                    s
                }
            };
            write_out(out, &body)?;
            return Ok(if failed == 0 { 0 } else { 1 });
        }
    };
    write_out(out, &text)?;
    Ok(0)
}

fn write_out(out: &mut dyn Write, s: &str) -> Run<()> {
    out.write_all(s.as_bytes()).map_err(|e| Failure::from(Error::Io(e)))
}

fn read_graph(path: &str) -> Run<Graph> {
    if !Path::new(path).exists() {
        return Err(usage(format!("no such graph file: {path}")));
    }
    Ok(load_graph(path)?)
}

fn read_rational(s: &str, what: &str) -> Run<BigRational> {
    parse_rational(s).ok_or_else(|| usage(format!("{what}: cannot read {s:?} as a rational")))
}

/// Emit one distribution polynomial.
pub fn emit_dist(p: &IntPoly, format: Format) -> Result<String> {
    if p.is_zero() {
        return Err(Error::Invalid("the zero polynomial is not a distribution".into()));
    }
    Ok(emit_poly(p, format))
}

/// Polynomial in ascending exponent order: `4 + 2*x`, `{"terms":[[0,"4"],[1,"2"]]}`,
/// or `exponent<TAB>coefficient` rows.
pub fn emit_poly(p: &IntPoly, format: Format) -> String {
    match format {
        Format::Text => format!("{p}\n"),
        Format::Json => format!("{}\n", poly_to_json(&p.to_rational_poly())),
        Format::Tsv => {
            let mut s = String::from("exponent\tcoefficient\n");
            for (k, c) in p.terms() {
                s.push_str(&format!("{k}\t{c}\n"));
            }
            s
        }
    }
}

fn poly_value(p: &IntPoly) -> serde_json::Value {
    serde_json::from_str(&poly_to_json(&p.to_rational_poly())).expect("valid json")
}

fn emit_named(rows: &[(&str, &IntPoly)], format: Format) -> String {
    match format {
        Format::Text => rows.iter().map(|(k, p)| format!("{k}\t{p}\n")).collect(),
        Format::Json => {
            let m: serde_json::Map<String, serde_json::Value> = rows.iter().map(|(k, p)| (k.to_string(), poly_value(p))).collect();
            format!("{}\n", serde_json::Value::Object(m))
        }
        Format::Tsv => {
            let mut s = String::from("name\texponent\tcoefficient\n");
            for (k, p) in rows {
                for (e, c) in p.terms() {
                    s.push_str(&format!("{k}\t{e}\t{c}\n"));
                }
            }
            s
        }
    }
}

fn emit_series(series: &[IntPoly], format: Format) -> String {
    match format {
        Format::Text => series.iter().enumerate().map(|(i, p)| format!("{}\t{p}\n", i + 1)).collect(),
        Format::Json => format!("{}\n", serde_json::Value::Array(series.iter().map(poly_value).collect())),
        Format::Tsv => {
            let mut s = String::from("n\texponent\tcoefficient\n");
            for (i, p) in series.iter().enumerate() {
                for (e, c) in p.terms() {
                    s.push_str(&format!("{}\t{e}\t{c}\n", i + 1));
                }
            }
            s
        }
    }
}

/// Generating function as text or JSON; TSV has no GF layout.
pub fn emit_gf(gf: &RationalGF, format: Format) -> Run<String> {
    match format {
        Format::Text => Ok(format!("{gf}\n")),
        Format::Json => Ok(format!("{}\n", gf_to_json(gf))),
        Format::Tsv => Err(usage("generating functions have no tsv form; use text or json")),
    }
}

/// Builtin family names, or a JSON spec file.
pub fn family_spec(name: &str, mode: Option<Mode>) -> Run<FamilySpec> {
    let m = mode.unwrap_or_default();
    let spec = match name {
        "doubled-cycle" => FamilySpec::doubled_cycle(m),
        "tripled-cycle" => FamilySpec::tripled_cycle(m),
        "grid-3xn" => FamilySpec::grid_3xn(m),
        path => {
            if !Path::new(path).exists() {
                return Err(usage(format!("{path:?} is neither a builtin family nor a file")));
            }
            let spec = FamilySpec::from_json(&std::fs::read_to_string(path).map_err(Error::from)?)?;
            match mode {
                Some(m) => spec.with_mode(m),
                None => spec,
            }
        }
    };
    Ok(spec)
}

fn family(g: &GlobalOpts, spec: &str, series: Option<usize>, gf: bool) -> Run<String> {
    let engine = TransferEngine::with_budget(family_spec(spec, g.mode)?, g.budget)?;
    if gf {
        return emit_gf(&engine.family_rational_gf(g.pmax, g.qmax, g.guard)?, g.format);
    }
    let n = series.ok_or_else(|| usage("family needs --series N or --gf"))?;
    if n == 0 {
        return Err(usage("--series needs at least one member"));
    }
    Ok(emit_series(&engine.family_series(n)?, g.format))
}

fn tables(derive: bool, diff: bool, format: Format) -> Run<String> {
    let t = derived_tables()?;
    let mut s = String::new();
    if derive {
        match format {
            Format::Json => s.push_str(&format!("{}\n", t.to_json())),
            _ => {
                for a in PedType::ALL {
                    for b in PedType::ALL {
                        let cell = &t.amalgamation[a.index()][b.index()];
                        s.push_str(&format!("{a} * {b} -> {}\n", crate::distributions::ped::format_cell(cell)));
                    }
                }
                for (ty, c) in PedType::ALL.iter().zip(t.closure_column()) {
                    s.push_str(&format!("close {ty} -> {c}\n"));
                }
            }
        }
    }
    if diff {
        s.push_str(&diff_against_printed(t)?.report());
    }
    Ok(s)
}

/// GF from a builtin name, a file (expression or JSON), or an inline expression.
pub fn read_gf(src: &str) -> Run<RationalGF> {
    match src {
        "genus-c2" => return Ok(known::genus_c2_gf()?),
        "euler-c2" => return Ok(known::euler_c2_reduced_gf()?),
        _ => {}
    }
    let body = if Path::new(src).exists() { std::fs::read_to_string(src).map_err(Error::from)? } else { src.to_string() };
    Ok(if body.trim_start().starts_with('{') { gf_from_json(&body)? } else { parse_gf(&body)? })
}

fn asympt(gf: &str, at: &str, format: Format) -> Run<String> {
    let gf = read_gf(gf)?;
    let x0 = read_rational(at, "--at")?;
    let rep = match mean_variance_at(&gf.den, &x0) {
        Ok(r) => r,
        Err(Error::Singularity(msg)) if msg.contains("multiplicity") => dominant_root(&gf.den, &x0)?,
        Err(e) => return Err(e.into()),
    };
    Ok(match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&rep).map_err(Error::from)?),
        Format::Text => singularity_text(&rep),
        Format::Tsv => {
            let opt = |v: &Option<crate::asympt::Numeric>| v.as_ref().map_or(String::new(), |n| n.to_string());
            format!(
                "x\tr\tmultiplicity\tseparation\tmu\tsigma2\taperiodic\n{}\t{}\t{}\t{:.6e}\t{}\t{}\t{}\n",
                format_rational(&rep.x),
                rep.r,
                rep.multiplicity,
                rep.separation,
                opt(&rep.mu),
                opt(&rep.sigma2),
                rep.aperiodic.map_or(String::new(), |a| a.to_string())
            )
        }
    })
}

fn singularity_text(rep: &SingularityReport) -> String {
    let mut s = format!("x = {}\nr = {}\nmultiplicity = {}\nseparation = {:.6e}\n", format_rational(&rep.x), rep.r, rep.multiplicity, rep.separation);
    if let (Some(mu), Some(s2)) = (&rep.mu, &rep.sigma2) {
        s.push_str(&format!("mu = {mu}\nsigma2 = {s2}\n"));
    }
    if let (Some(m), Some(v)) = (rep.mu_fd, rep.sigma2_fd) {
        s.push_str(&format!("finite differences: mu {m:.12e}, sigma2 {v:.12e}, agree {}\n", rep.fd_agrees().unwrap_or(false)));
    }
    if let Some(a) = rep.aperiodic {
        s.push_str(&format!("aperiodic on the sampled circle = {a}\n"));
    }
    s
}

fn normality(g: &GlobalOpts, source: &str, ns: &[usize], mu: Option<&str>, sigma2: Option<&str>) -> Run<String> {
    if ns.contains(&0) {
        return Err(usage("--ns entries start at 1"));
    }
    let top = ns.iter().copied().max().unwrap_or(1);
    let builtin = match source {
        "genus-c2" => Some((cn2_recurrences(Mode::Genus, top)?, known::GENUS_C2_MEAN_VARIANCE)),
        "euler-c2" => Some((cn2_computed(Mode::Euler, top)?, known::EULER_C2_MEAN_VARIANCE)),
        _ => None,
    };
    let slope = |given: Option<&str>, fallback: Option<&str>, what: &str| -> Run<f64> {
        let s = given.or(fallback).ok_or_else(|| usage(format!("--{what} is required for this source")))?;
        Ok(crate::poly::laurent::rational_to_f64(&read_rational(s, what)?))
    };
    let rows: Vec<NormalityRow> = match builtin {
        Some((series, (m, v))) => {
            normality_report(&SeriesSource::Explicit(series), ns, slope(mu, Some(m), "mu")?, slope(sigma2, Some(v), "sigma2")?)?
        }
        None => {
            let engine = TransferEngine::with_budget(family_spec(source, g.mode)?, g.budget)?;
            let (m, v) = (slope(mu, None, "mu")?, slope(sigma2, None, "sigma2")?);
            normality_report(&SeriesSource::Family(&engine), ns, m, v)?
        }
    };
    Ok(match g.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&rows).map_err(Error::from)?),
        _ => report_tsv(&rows),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("embdist").chain(args.iter().copied());
        let code = main_with_args(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn c22_file() -> std::path::PathBuf {
        let path = std::env::temp_dir().join(format!("embdist-cli-c22-{}.txt", std::process::id()));
        std::fs::write(&path, "v 2\ne 0 1\ne 0 1\ne 1 0\ne 1 0\n").unwrap();
        path
    }

    #[test]
    fn polynomial_formats() {
        let p = IntPoly::from_i64s(&[4, 2]);
        assert_eq!(emit_poly(&p, Format::Text), "4 + 2*x\n");
        assert_eq!(emit_poly(&p, Format::Json), "{\"terms\":[[0,\"4\"],[1,\"2\"]]}\n");
        assert_eq!(emit_poly(&p, Format::Tsv), "exponent\tcoefficient\n0\t4\n1\t2\n");
        assert!(emit_dist(&IntPoly::zero(), Format::Text).is_err());
    }

    #[test]
    fn gf_text_and_json_read_back() {
        let gf = known::genus_c2_gf().unwrap();
        for f in [Format::Text, Format::Json] {
            assert_eq!(read_gf(&emit_gf(&gf, f).unwrap()).unwrap(), gf);
        }
        assert_eq!(emit_gf(&gf, Format::Tsv).unwrap_err().code, 2);
    }

    #[test]
    fn exit_statuses() {
        let file = c22_file();
        let path = file.to_str().unwrap();
        assert_eq!(call(&["genus", path]), (0, "6 + 30*x\n".into(), String::new()));
        let (code, _, err) = call(&["--budget", "10", "genus", path]);
        assert_eq!(code, 1);
        assert!(err.contains("--budget 36"));
        assert_eq!(call(&["genus", "/definitely/not/here"]).0, 2);
        assert_eq!(call(&["nonsense"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
        assert_eq!(call(&["family", "doubled-cycle"]).0, 2);
    }

    #[test]
    fn family_series_matches_small_members() {
        let (code, out, _) = call(&["family", "doubled-cycle", "--series", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "1\t4 + 2*x\n2\t6 + 30*x\n");
    }
}
