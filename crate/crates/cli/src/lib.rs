//! Command-line front end for `permquot`.
//!
//! [`run`] parses and validates the whole request before computing
//! anything, and returns the exit code together with both output streams so
//! the binary is a thin wrapper.

use std::fmt::Write as _;

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use permquot::classifier::{classify, ClassificationReport};
use permquot::oracle::{
    as_class_count, count_exact_jump, tame_totally_ramified_count, verify_dimension_growth,
    CountMethod, GrowthReport,
};
use permquot::permgroup::{parse_generators, GroupPreset, PermutationGroup};
use permquot::strata::{
    dim_connected, enumerate_strata, format_partition, global_sup, nontrivial_partitions,
    refined_stratum_bound, stratum_dim_sum, BoundRule,
};
use permquot::{Characteristic, ExtHalf, HalfInt};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

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

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "permquot",
    version,
    about = "Singularity certificates for quotients of affine space by permutation groups"
)]
struct Cli {
    /// Output format; `classify` defaults to json, everything else to text.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify A^n/G: canonical, klt and lc verdicts with a proof trace.
    Classify(ClassifyArgs),
    /// Dimension of the locus of connected degree-n covers with discriminant d.
    Dim {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        p: u32,
    },
    /// Strata of degree-n covers with total discriminant d.
    Strata {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 0)]
        p: u32,
        /// Also report the bound for groups without transpositions.
        #[arg(long)]
        no_transposition: bool,
    },
    /// Supremum of dim - d/2 over all nontrivial strata.
    Sup {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        no_transposition: bool,
    },
    /// dim_connected and dim - d/2 for every n <= max-n, d <= max-d.
    Table {
        #[arg(long)]
        max_n: u32,
        #[arg(long)]
        max_d: u32,
        #[arg(long)]
        p: u32,
        /// Same as --format csv.
        #[arg(long)]
        csv: bool,
    },
    /// Finite-field point counts.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("group_source").required(true).args(["group", "group_name"])))]
struct ClassifyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: u32,
    /// Generators in cycle notation separated by ';', e.g. "(1 2)(3 4);(1 3)".
    #[arg(long)]
    group: Option<String>,
    /// Sn, An, cyclic:k, klein4 or trivial.
    #[arg(long)]
    group_name: Option<String>,
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Artin-Schreier classes over F_q((t)) with a given ramification jump.
    AsCount {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        jump: u32,
    },
    /// Compare point counts with a predicted dimension.
    Verify {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<u32>,
    },
    /// Totally ramified tame extensions of F_q((t)) of degree n.
    Tame {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: u32,
    },
}

/// A fully validated request.
enum Request {
    Classify(PermutationGroup, Characteristic),
    Dim(u32, u32, Characteristic),
    Strata(u32, u32, Characteristic, bool),
    Sup(u32, Characteristic, bool),
    Table(u32, u32, Characteristic),
    AsCount(u32, u32, u32),
    Verify(u32, u32, u32, Vec<u32>),
    Tame(u32, u32),
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Internal(String),
}

impl From<permquot::Error> for Failure {
    fn from(e: permquot::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<std::fmt::Error> for Failure {
    fn from(e: std::fmt::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

type Res<T> = std::result::Result<T, Failure>;

/// Runs one invocation; `args[0]` is the program name.
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
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome {
                    code: EXIT_INVALID,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let default_format = match cli.command {
        Command::Classify(_) => Format::Json,
        Command::Table { csv: true, .. } => Format::Csv,
        _ => Format::Text,
    };
    let format = cli.format.unwrap_or(default_format);
    let result = validate(cli.command).and_then(|request| execute(request, format));
    match result {
        Ok(stdout) => Outcome::ok(stdout),
        Err(Failure::Invalid(m)) => Outcome::fail(EXIT_INVALID, m),
        Err(Failure::Internal(m)) => Outcome::fail(EXIT_INTERNAL, m),
    }
}

fn validate(command: Command) -> Res<Request> {
    let char_of = |p: u32| Characteristic::new(p);
    Ok(match command {
        Command::Classify(args) => {
            let p = char_of(args.p)?;
            let group = match (args.group, args.group_name) {
                (Some(text), None) => {
                    PermutationGroup::closure(parse_generators(&text, args.n)?, args.n)?
                }
                (None, Some(name)) => GroupPreset::parse(&name, args.n)?.build(args.n)?,
                _ => {
                    return Err(Failure::Invalid(
                        "give exactly one of --group, --group-name".into(),
                    ))
                }
            };
            Request::Classify(group, p)
        }
        Command::Dim { n, d, p } => {
            positive(n)?;
            Request::Dim(n, d, char_of(p)?)
        }
        Command::Strata {
            n,
            d,
            p,
            no_transposition,
        } => {
            positive(n)?;
            Request::Strata(n, d, char_of(p)?, no_transposition)
        }
        Command::Sup {
            n,
            p,
            no_transposition,
        } => {
            positive(n)?;
            Request::Sup(n, char_of(p)?, no_transposition)
        }
        Command::Table {
            max_n, max_d, p, ..
        } => {
            positive(max_n)?;
            Request::Table(max_n, max_d, char_of(p)?)
        }
        Command::Oracle(OracleCommand::AsCount { p, q, jump }) => Request::AsCount(p, q, jump),
        Command::Oracle(OracleCommand::Verify { p, n, d, q }) => Request::Verify(p, n, d, q),
        Command::Oracle(OracleCommand::Tame { q, n }) => Request::Tame(q, n),
    })
}

fn positive(n: u32) -> Res<()> {
    if n == 0 {
        return Err(permquot::Error::ZeroDegree.into());
    }
    Ok(())
}

fn execute(request: Request, format: Format) -> Res<String> {
    match request {
        Request::Classify(group, p) => render_classify(&classify(&group, p)?, format),
        Request::Dim(n, d, p) => {
            let dim = dim_connected(n, d, p)?;
            render_rows(
                format,
                &["n", "d", "p", "dim"],
                vec![vec![
                    n.to_string(),
                    d.to_string(),
                    p.to_string(),
                    dim.to_string(),
                ]],
                &DimRecord { n, d, p, dim },
                || dim.to_string(),
            )
        }
        Request::Strata(n, d, p, restricted) => strata(n, d, p, restricted, format),
        Request::Sup(n, p, restricted) => sup(n, p, restricted, format),
        Request::Table(max_n, max_d, p) => table(max_n, max_d, p, format),
        Request::AsCount(p, q, jump) => {
            let count = as_class_count(p, q, jump)?;
            let (_, method) = count_exact_jump(q, jump)?;
            let record = AsCountRecord {
                p,
                q,
                jump,
                count,
                method,
            };
            render_rows(
                format,
                &["p", "q", "jump", "count", "method"],
                vec![vec![
                    p.to_string(),
                    q.to_string(),
                    jump.to_string(),
                    count.to_string(),
                    method_name(method).to_string(),
                ]],
                &record,
                || count.to_string(),
            )
        }
        Request::Verify(p, n, d, qs) => verify(&verify_dimension_growth(p, n, d, &qs)?, format),
        Request::Tame(q, n) => {
            let count = tame_totally_ramified_count(q, n)?;
            render_rows(
                format,
                &["q", "n", "count"],
                vec![vec![q.to_string(), n.to_string(), count.to_string()]],
                &TameRecord { q, n, count },
                || count.to_string(),
            )
        }
    }
}

fn method_name(m: CountMethod) -> &'static str {
    match m {
        CountMethod::BruteForce => "brute_force",
        CountMethod::Rank => "rank",
    }
}

#[derive(Serialize)]
struct DimRecord {
    n: u32,
    d: u32,
    p: Characteristic,
    dim: ExtHalf,
}

#[derive(Serialize)]
struct AsCountRecord {
    p: u32,
    q: u32,
    jump: u32,
    count: u64,
    method: CountMethod,
}

#[derive(Serialize)]
struct TameRecord {
    q: u32,
    n: u32,
    count: u64,
}

fn json<T: Serialize>(value: &T) -> Res<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> Res<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Failure::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::Internal(e.to_string()))
}

fn render_rows<T: Serialize>(
    format: Format,
    header: &[&str],
    rows: Vec<Vec<String>>,
    record: &T,
    text: impl FnOnce() -> String,
) -> Res<String> {
    match format {
        Format::Text => Ok(text() + "\n"),
        Format::Json => json(record),
        Format::Csv => csv_text(header, &rows),
    }
}

fn excess(dim: ExtHalf, d: u32) -> ExtHalf {
    dim - HalfInt::from_halves(i64::from(d))
}

#[derive(Serialize)]
struct StratumRecord {
    shape: String,
    nu: Vec<u32>,
    delta: Vec<u32>,
    dim: ExtHalf,
    excess: ExtHalf,
    #[serde(skip_serializing_if = "Option::is_none")]
    transposition_free_bound: Option<ExtHalf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rule: Option<BoundRule>,
}

#[derive(Serialize)]
struct StrataOutput {
    n: u32,
    d: u32,
    p: Characteristic,
    strata: Vec<StratumRecord>,
}

fn strata(n: u32, d: u32, p: Characteristic, restricted: bool, format: Format) -> Res<String> {
    let mut records = Vec::new();
    for shape in enumerate_strata(n, d)? {
        let dim = stratum_dim_sum(&shape, p)?;
        let (bound, rule) = if restricted && !shape.is_trivial() {
            let b = refined_stratum_bound(shape.nu(), p, true)?;
            (Some(b.value), Some(b.rule))
        } else {
            (None, None)
        };
        records.push(StratumRecord {
            shape: shape.to_string(),
            nu: shape.nu().to_vec(),
            delta: shape.delta().to_vec(),
            dim,
            excess: excess(dim, d),
            transposition_free_bound: bound,
            rule,
        });
    }
    let mut header = vec!["shape", "dim", "excess"];
    if restricted {
        header.extend(["transposition_free_bound", "rule"]);
    }
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            let mut row = vec![r.shape.clone(), r.dim.to_string(), r.excess.to_string()];
            if restricted {
                row.push(
                    r.transposition_free_bound
                        .map_or(String::new(), |b| b.to_string()),
                );
                row.push(r.rule.map_or(String::new(), |b| b.id().to_string()));
            }
            row
        })
        .collect();
    match format {
        Format::Json => json(&StrataOutput {
            n,
            d,
            p,
            strata: records,
        }),
        Format::Csv => csv_text(&header, &rows),
        Format::Text => {
            let mut out = String::new();
            for row in rows {
                let mut line = format!("{}  dim={}  excess={}", row[0], row[1], row[2]);
                if restricted && !row[3].is_empty() {
                    write!(line, "  bound={} ({})", row[3], row[4])?;
                }
                writeln!(out, "{}", line.trim_end())?;
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct PartitionBound {
    nu: Vec<u32>,
    bound: ExtHalf,
    rule: BoundRule,
    eventually_decreasing: bool,
}

#[derive(Serialize)]
struct SupOutput {
    n: u32,
    p: Characteristic,
    transposition_free: bool,
    sup: ExtHalf,
    limit_minus_infinity: bool,
    worst: Option<Vec<u32>>,
    partitions: Vec<PartitionBound>,
}

fn sup(n: u32, p: Characteristic, restricted: bool, format: Format) -> Res<String> {
    let g = global_sup(n, p, restricted)?;
    let mut partitions = Vec::new();
    for nu in nontrivial_partitions(n) {
        let b = refined_stratum_bound(&nu, p, restricted)?;
        partitions.push(PartitionBound {
            nu,
            bound: b.value,
            rule: b.rule,
            eventually_decreasing: b.eventually_decreasing,
        });
    }
    let out = SupOutput {
        n,
        p,
        transposition_free: restricted,
        sup: g.sup,
        limit_minus_infinity: g.limit_minus_infinity,
        worst: g.worst,
        partitions,
    };
    match format {
        Format::Json => json(&out),
        Format::Csv => {
            let rows: Vec<Vec<String>> = out
                .partitions
                .iter()
                .map(|b| {
                    vec![
                        format_partition(&b.nu),
                        b.bound.to_string(),
                        b.rule.id().to_string(),
                        b.eventually_decreasing.to_string(),
                    ]
                })
                .collect();
            csv_text(&["nu", "bound", "rule", "eventually_decreasing"], &rows)
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "sup: {}", out.sup)?;
            writeln!(s, "limit_minus_infinity: {}", out.limit_minus_infinity)?;
            writeln!(
                s,
                "worst: {}",
                out.worst
                    .as_deref()
                    .map_or("none".to_string(), format_partition)
            )?;
            for b in &out.partitions {
                writeln!(
                    s,
                    "{}  {}  ({})",
                    format_partition(&b.nu),
                    b.bound,
                    b.rule.id()
                )?;
            }
            Ok(s)
        }
    }
}

#[derive(Serialize)]
struct TableRow {
    n: u32,
    d: u32,
    p: Characteristic,
    dim: ExtHalf,
    excess: ExtHalf,
}

fn table(max_n: u32, max_d: u32, p: Characteristic, format: Format) -> Res<String> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        for d in 0..=max_d {
            let dim = dim_connected(n, d, p)?;
            rows.push(TableRow {
                n,
                d,
                p,
                dim,
                excess: excess(dim, d),
            });
        }
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.d.to_string(),
                r.p.to_string(),
                r.dim.to_string(),
                r.excess.to_string(),
            ]
        })
        .collect();
    let header = ["n", "d", "p", "dim", "excess"];
    match format {
        Format::Json => json(&rows),
        Format::Csv => csv_text(&header, &cells),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "{}", header.join("\t"))?;
            for row in cells {
                writeln!(s, "{}", row.join("\t"))?;
            }
            Ok(s)
        }
    }
}

fn verify(report: &GrowthReport, format: Format) -> Res<String> {
    let rows: Vec<Vec<String>> = report
        .samples
        .iter()
        .map(|s| {
            vec![
                s.q.to_string(),
                s.count.to_string(),
                s.measured_dimension
                    .map_or(String::new(), |m| m.to_string()),
                report.predicted.to_string(),
            ]
        })
        .collect();
    match format {
        Format::Json => json(report),
        Format::Csv => csv_text(&["q", "count", "measured_dimension", "predicted"], &rows),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "predicted: {}", report.predicted)?;
            for row in rows {
                let measured = if row[2].is_empty() {
                    "?"
                } else {
                    row[2].as_str()
                };
                writeln!(s, "q={}  count={}  measured={}", row[0], row[1], measured)?;
            }
            writeln!(s, "ok: {}", report.ok)?;
            Ok(s)
        }
    }
}

fn render_classify(report: &ClassificationReport, format: Format) -> Res<String> {
    match format {
        Format::Json => json(report),
        Format::Csv => {
            let g = &report.gorenstein;
            let row = vec![
                report.n.to_string(),
                report.p.to_string(),
                report.group_order.to_string(),
                report.has_transposition.to_string(),
                verdict_name(&report.canonical)?,
                verdict_name(&report.pair_klt)?,
                verdict_name(&report.pair_lc)?,
                report.stringy_dim_bound.to_string(),
                g.kx_index_divides.to_string(),
                g.boundary_coefficient
                    .map_or(String::new(), |c| c.to_string()),
                g.b_cartier_index_divides
                    .map_or(String::new(), |c| c.to_string()),
                g.branch_component_count.to_string(),
            ];
            csv_text(
                &[
                    "n",
                    "p",
                    "group_order",
                    "has_transposition",
                    "canonical",
                    "pair_klt",
                    "pair_lc",
                    "stringy_dim_bound",
                    "kx_index_divides",
                    "boundary_coefficient",
                    "b_cartier_index_divides",
                    "branch_component_count",
                ],
                &[row],
            )
        }
        Format::Text => {
            let g = &report.gorenstein;
            let mut s = String::new();
            writeln!(s, "n: {}", report.n)?;
            writeln!(s, "p: {}", report.p)?;
            writeln!(s, "group_order: {}", report.group_order)?;
            writeln!(s, "has_transposition: {}", report.has_transposition)?;
            writeln!(s, "canonical: {}", verdict_name(&report.canonical)?)?;
            writeln!(s, "pair_klt: {}", verdict_name(&report.pair_klt)?)?;
            writeln!(s, "pair_lc: {}", verdict_name(&report.pair_lc)?)?;
            writeln!(s, "stringy_dim_bound: {}", report.stringy_dim_bound)?;
            writeln!(s, "kx_index_divides: {}", g.kx_index_divides)?;
            writeln!(
                s,
                "boundary_coefficient: {}",
                g.boundary_coefficient
                    .map_or("none".to_string(), |c| c.to_string())
            )?;
            writeln!(s, "branch_component_count: {}", g.branch_component_count)?;
            writeln!(s, "trace:")?;
            for e in &report.trace {
                let tag = if e.derived { " [derived]" } else { "" };
                writeln!(s, "  [{}] {}: {}{tag}", e.anchor, e.rule, e.statement)?;
            }
            Ok(s)
        }
    }
}

fn verdict_name<T: Serialize>(v: &T) -> Res<String> {
    match serde_json::to_value(v)? {
        serde_json::Value::String(s) => Ok(s),
        other => Err(Failure::Internal(format!(
            "unexpected verdict encoding {other}"
        ))),
    }
}
