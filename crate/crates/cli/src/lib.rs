//! Command-line front end: realize, verify, table and export.

use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lieop::bernoulli::coeff_table;
use lieop::exactalg::{parse_rational, DiffOp};
use lieop::oracle::{bracket_check, cross_check, matrix_check, MatrixRep, VerificationReport};
use lieop::realization::{
    realize_all, realize_generator, Convention, ExtremeKind, Generator, OperatorDocument,
    OrbitContext, Weight,
};
use lieop::rootsys::{build_root_system, Family, LieType};
use lieop::Exec;
use serde::{Deserialize, Serialize};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug)]
pub enum CliError {
    /// Bad flag value; names the flag.
    Usage(String),
    Io(std::io::Error),
    Engine(lieop::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        EXIT_USAGE
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "i/o: {e}"),
            CliError::Engine(e) => write!(f, "{e}"),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<lieop::Error> for CliError {
    fn from(e: lieop::Error) -> Self {
        CliError::Engine(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn usage(flag: &str, msg: impl fmt::Display) -> CliError {
    CliError::Usage(format!("--{flag}: {msg}"))
}

#[derive(Parser, Debug)]
#[command(name = "lieop", version, about = "First-order differential operator realizations of Lie algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the operators of the selected generators.
    Realize(JobArgs),
    /// Run the bracket, closed-form and matrix checks.
    Verify(JobArgs),
    /// Print the coefficient tables and the degree table.
    Table(TableArgs),
    /// Write JSON operator documents.
    Export(ExportArgs),
}

#[derive(Args, Debug, Default, Clone)]
pub struct JobArgs {
    /// Algebra such as A2, B3 or G2.
    #[arg(long)]
    pub algebra: Option<String>,
    /// Excluded simple roots, comma separated (a2,a3); empty for the Borel case.
    #[arg(long)]
    pub parabolic: Option<String>,
    /// `symbolic` or a comma-separated list of rationals j1,...,jr.
    #[arg(long)]
    pub weight: Option<String>,
    #[arg(long, value_enum)]
    pub convention: Option<ConventionArg>,
    /// `all`, a root such as E[1,0] or E[-1,-1], or a Cartan element H1.
    #[arg(long)]
    pub generator: Option<String>,
    #[arg(long, value_enum)]
    pub output: Option<OutputArg>,
    /// Extreme vector: lowest (orbit directions Δ₊) or highest (Δ₋).
    #[arg(long, value_enum)]
    pub extreme: Option<ExtremeArg>,
    /// JSON job file; flags override its values.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Run on one thread.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Args, Debug, Clone)]
pub struct TableArgs {
    /// Degree table.
    #[arg(long)]
    pub nu: bool,
    /// Coefficients c_k and d_k.
    #[arg(long)]
    pub coefficients: bool,
    /// Number of c_k to print.
    #[arg(long, default_value_t = 9)]
    pub len: usize,
    #[arg(long, value_enum, default_value_t = OutputArg::Text)]
    pub output: OutputArg,
}

#[derive(Args, Debug, Clone)]
pub struct ExportArgs {
    #[command(flatten)]
    pub job: JobArgs,
    /// Destination file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConventionArg {
    Formal,
    Fock,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputArg {
    #[default]
    Text,
    Latex,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremeArg {
    Lowest,
    Highest,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightSpec {
    Named(String),
    List(Vec<String>),
}

/// A job as read from a config file. Every field is optional.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobFile {
    pub algebra: Option<String>,
    pub parabolic: Option<Vec<String>>,
    pub weight: Option<WeightSpec>,
    pub convention: Option<ConventionArg>,
    pub generator: Option<String>,
    pub output: Option<OutputArg>,
    pub extreme: Option<ExtremeArg>,
}

/// A fully resolved job.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub algebra: LieType,
    pub parabolic: Vec<usize>,
    pub weight: Weight,
    pub convention: Convention,
    pub generator: Option<String>,
    pub output: OutputArg,
    pub extreme: ExtremeKind,
    pub exec: Exec,
}

fn parse_parabolic(names: &[String], rank: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for n in names.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        let digits = n.strip_prefix(['a', 'A']).unwrap_or(n);
        let i: usize = digits
            .parse()
            .map_err(|_| usage("parabolic", format!("{n:?} is not a simple root name like a2")))?;
        if i == 0 || i > rank {
            return Err(usage("parabolic", format!("{n:?} is out of range for rank {rank}")));
        }
        out.push(i - 1);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn parse_weight(items: &[String]) -> Result<Weight> {
    if items.len() == 1 && items[0].trim().eq_ignore_ascii_case("symbolic") {
        return Ok(Weight::Symbolic);
    }
    items
        .iter()
        .map(|s| parse_rational(s.trim()).map_err(|e| usage("weight", e)))
        .collect::<Result<Vec<_>>>()
        .map(Weight::Numeric)
}

fn split_list(s: &str) -> Vec<String> {
    if s.trim().is_empty() {
        Vec::new()
    } else {
        s.split(',').map(|t| t.trim().to_string()).collect()
    }
}

impl JobArgs {
    /// Merges the config file (if any) under the flags.
    pub fn resolve(&self) -> Result<JobSpec> {
        let file: JobFile = match &self.config {
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| usage("config", format!("{}: {e}", p.display())))?;
                serde_json::from_str(&text).map_err(|e| usage("config", e))?
            }
            None => JobFile::default(),
        };
        let algebra_s = self
            .algebra
            .clone()
            .or(file.algebra)
            .ok_or_else(|| usage("algebra", "required (for example A2)"))?;
        let algebra: LieType = algebra_s.parse().map_err(|e| usage("algebra", e))?;
        let rank = algebra.rank();
        let parabolic = match (&self.parabolic, &file.parabolic) {
            (Some(s), _) => parse_parabolic(&split_list(s), rank)?,
            (None, Some(v)) => parse_parabolic(v, rank)?,
            (None, None) => Vec::new(),
        };
        let weight = match (&self.weight, &file.weight) {
            (Some(s), _) => parse_weight(&split_list(s))?,
            (None, Some(WeightSpec::Named(s))) => parse_weight(std::slice::from_ref(s))?,
            (None, Some(WeightSpec::List(v))) => parse_weight(v)?,
            (None, None) => Weight::Symbolic,
        };
        if let Weight::Numeric(w) = &weight {
            if w.len() != rank {
                return Err(usage("weight", format!("expected {rank} components, got {}", w.len())));
            }
        }
        let convention = match self.convention.or(file.convention).unwrap_or(ConventionArg::Formal) {
            ConventionArg::Formal => Convention::Formal,
            ConventionArg::Fock => Convention::Fock,
        };
        let generator = self.generator.clone().or(file.generator).filter(|g| g != "all");
        let extreme = match self.extreme.or(file.extreme).unwrap_or(ExtremeArg::Lowest) {
            ExtremeArg::Lowest => ExtremeKind::Lowest,
            ExtremeArg::Highest => ExtremeKind::Highest,
        };
        Ok(JobSpec {
            algebra,
            parabolic,
            weight,
            convention,
            generator,
            output: self.output.or(file.output).unwrap_or_default(),
            extreme,
            exec: if self.sequential { Exec::Sequential } else { Exec::Parallel },
        })
    }
}

impl JobSpec {
    pub fn context(&self) -> Result<OrbitContext> {
        OrbitContext::with_kind(self.algebra, &self.parabolic, self.weight.clone(), self.extreme).map_err(|e| match e {
            lieop::Error::Argument(m) => usage("weight", m),
            other => CliError::Engine(other),
        })
    }

    /// `(label, operator)` for the selected generators.
    pub fn operators(&self, ctx: &OrbitContext) -> Result<Vec<(String, DiffOp)>> {
        match &self.generator {
            Some(g) => {
                let gen = Generator::parse(g, ctx.root_system().rank()).map_err(|e| usage("generator", e))?;
                let b = ctx.basis_index(&gen).map_err(|e| usage("generator", e))?;
                let op = realize_generator(ctx, &gen, self.convention)?;
                Ok(vec![(ctx.algebra().label(b).to_string(), op)])
            }
            None => {
                let real = realize_all(ctx, self.convention, self.exec)?;
                Ok(real.labels.into_iter().zip(real.operators).collect())
            }
        }
    }
}

fn op_symbol(c: Convention) -> &'static str {
    match c {
        Convention::Formal => "D",
        Convention::Fock => "F",
    }
}

fn latex_generator(ctx: &OrbitContext, label: &str) -> String {
    match Generator::parse(label, ctx.root_system().rank()) {
        Ok(Generator::Root(r)) => format!("E_{{{}}}", r.latex()),
        Ok(Generator::Cartan(i)) => format!("H_{{{}}}", i + 1),
        Err(_) => label.to_string(),
    }
}

fn documents(spec: &JobSpec, ctx: &OrbitContext, ops: &[(String, DiffOp)]) -> Vec<OperatorDocument> {
    ops.iter()
        .map(|(label, op)| OperatorDocument::new(ctx, label, spec.convention, op))
        .collect()
}

fn write_realize(spec: &JobSpec, out: &mut dyn Write) -> Result<u8> {
    let ctx = spec.context()?;
    let ops = spec.operators(&ctx)?;
    let sym = op_symbol(spec.convention);
    match spec.output {
        OutputArg::Text => {
            for (label, op) in &ops {
                writeln!(out, "{sym}_{label} = {}", op.display(ctx.vars()))?;
            }
        }
        OutputArg::Latex => {
            for (label, op) in &ops {
                writeln!(out, "{sym}_{{{}}} = {}", latex_generator(&ctx, label), op.latex(ctx.vars()))?;
            }
        }
        OutputArg::Json => {
            let docs = documents(spec, &ctx, &ops);
            writeln!(out, "{}", serde_json::to_string_pretty(&docs).expect("documents serialize"))?;
        }
    }
    Ok(EXIT_OK)
}

fn fixtures(ctx: &OrbitContext) -> Vec<MatrixRep> {
    let rs = ctx.root_system();
    if ctx.kind() != ExtremeKind::Lowest || !ctx.parabolic().is_borel() {
        return Vec::new();
    }
    let mut reps: Vec<lieop::Result<MatrixRep>> = Vec::new();
    let t = rs.lie_type();
    if t.family() == Family::A && t.rank() == 1 {
        reps.push(MatrixRep::sl2_spin_half(rs, ctx.constants()));
        reps.push(MatrixRep::sl2_spin_one(rs, ctx.constants()));
    }
    if t.family() == Family::A && t.rank() == 2 {
        reps.push(MatrixRep::sl3_defining(rs, ctx.constants()));
    }
    if rs.dimension() <= 21 {
        reps.push(MatrixRep::adjoint(rs, ctx.algebra()));
    }
    reps.into_iter()
        .filter_map(|r| r.ok())
        .filter(|r| match ctx.weight() {
            Weight::Symbolic => true,
            Weight::Numeric(w) => *w == r.weight,
        })
        .collect()
}

fn write_verify(spec: &JobSpec, out: &mut dyn Write) -> Result<u8> {
    let ctx = spec.context()?;
    let real = realize_all(&ctx, spec.convention, spec.exec)?;
    let mut reports: Vec<VerificationReport> = vec![bracket_check(&real, ctx.algebra(), spec.exec)];
    reports.push(cross_check(&ctx, spec.exec)?);
    for rep in fixtures(&ctx) {
        reports.push(rep.validate(ctx.algebra()));
        reports.push(matrix_check(&ctx, &real, &rep)?);
    }
    let ok = reports.iter().all(VerificationReport::all_passed);
    match spec.output {
        OutputArg::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(&reports).expect("reports serialize"))?;
        }
        _ => {
            for r in &reports {
                writeln!(out, "{} ({})", r.summary(), r.subject)?;
                if let Some(f) = r.failures().next() {
                    writeln!(out, "  first failure {}: {}", f.name, f.residual.as_deref().unwrap_or(""))?;
                }
            }
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY })
}

#[derive(Serialize)]
struct NuRow {
    algebra: String,
    nu: usize,
}

#[derive(Serialize)]
struct Tables {
    #[serde(skip_serializing_if = "Option::is_none")]
    coefficients: Option<lieop::bernoulli::CoeffTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nu: Option<Vec<NuRow>>,
}

fn nu_rows() -> Vec<NuRow> {
    let mut types: Vec<LieType> = Vec::new();
    for (f, lo) in [(Family::A, 1), (Family::B, 2), (Family::C, 2), (Family::D, 3)] {
        for l in lo..=8 {
            types.push(LieType::new(f, l).expect("valid classical type"));
        }
    }
    for (f, l) in [(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)] {
        types.push(LieType::new(f, l).expect("valid exceptional type"));
    }
    types
        .into_iter()
        .map(|t| NuRow {
            algebra: t.to_string(),
            nu: build_root_system(t).nu_degree(),
        })
        .collect()
}

fn write_table(args: &TableArgs, out: &mut dyn Write) -> Result<u8> {
    let (want_c, want_nu) = match (args.coefficients, args.nu) {
        (false, false) => (true, true),
        x => x,
    };
    let coeffs = if want_c {
        Some(coeff_table(args.len).map_err(|e| usage("len", e))?)
    } else {
        None
    };
    let nu = want_nu.then(nu_rows);
    match args.output {
        OutputArg::Json => {
            let t = Tables { coefficients: coeffs, nu };
            writeln!(out, "{}", serde_json::to_string_pretty(&t).expect("tables serialize"))?;
        }
        OutputArg::Text | OutputArg::Latex => {
            if let Some(t) = &coeffs {
                writeln!(out, "k    c_k        d_k")?;
                for k in 0..t.len() {
                    let d = t.d().get(k).map(|d| d.to_string()).unwrap_or_default();
                    writeln!(out, "{k:<4} {:<10} {d}", t.c()[k].to_string())?;
                }
            }
            if let Some(rows) = &nu {
                if coeffs.is_some() {
                    writeln!(out)?;
                }
                writeln!(out, "A_l: nu = l-1 (l >= 1)   B_l: nu = 2l-2 (l >= 2)")?;
                writeln!(out, "C_l: nu = 2l-2 (l >= 2)  D_l: nu = 2l-4 (l >= 3)")?;
                writeln!(out, "E6: nu = 10  E7: nu = 16  E8: nu = 28  F4: nu = 10  G2: nu = 4")?;
                for r in rows {
                    writeln!(out, "{:<4} {}", r.algebra, r.nu)?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn write_export(args: &ExportArgs, out: &mut dyn Write) -> Result<u8> {
    let spec = args.job.resolve()?;
    let ctx = spec.context()?;
    let ops = spec.operators(&ctx)?;
    let text = serde_json::to_string_pretty(&documents(&spec, &ctx, &ops)).expect("documents serialize");
    match &args.out {
        Some(p) => std::fs::write(p, format!("{text}\n")).map_err(|e| usage("out", format!("{}: {e}", p.display())))?,
        None => writeln!(out, "{text}")?,
    }
    Ok(EXIT_OK)
}

/// Runs one command, writing its output to `out`; returns the exit status.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<u8> {
    match &cli.command {
        Command::Realize(a) => write_realize(&a.resolve()?, out),
        Command::Verify(a) => write_verify(&a.resolve()?, out),
        Command::Table(a) => write_table(a, out),
        Command::Export(a) => write_export(a, out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parabolic_names() {
        assert_eq!(parse_parabolic(&["a2".into(), "1".into()], 3).unwrap(), vec![0, 1]);
        assert!(parse_parabolic(&["a4".into()], 3).is_err());
        assert!(parse_parabolic(&[], 3).unwrap().is_empty());
    }

    #[test]
    fn weights() {
        assert_eq!(parse_weight(&["symbolic".into()]).unwrap(), Weight::Symbolic);
        let w = parse_weight(&["1/2".into(), "-1".into()]).unwrap();
        assert_eq!(
            w,
            Weight::Numeric(vec![lieop::exactalg::rat(1, 2), lieop::exactalg::int(-1)])
        );
        assert!(parse_weight(&["x".into()]).is_err());
    }

    #[test]
    fn flags_override_config() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("job.json");
        std::fs::write(&path, r#"{"algebra": "A1", "weight": ["2"], "output": "latex"}"#).unwrap();
        let args = JobArgs {
            config: Some(path),
            algebra: Some("A2".into()),
            weight: Some("symbolic".into()),
            ..Default::default()
        };
        let spec = args.resolve().unwrap();
        assert_eq!(spec.algebra.to_string(), "A2");
        assert_eq!(spec.weight, Weight::Symbolic);
        assert_eq!(spec.output, OutputArg::Latex);
    }
}
