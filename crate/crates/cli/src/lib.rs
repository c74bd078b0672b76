//! `hilex` command-line front end. [`run`] does all the work and returns the
//! exit code and output, so tests can drive it without a subprocess.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hilex_core::gf::{self, IdentityId};
use hilex_core::hlc::{self, CharacterTable, Mode};
use hilex_core::perm::{descent_distribution, oc_ec_members, CycleFamily};
use hilex_core::report::CheckReport;
use hilex_core::roots::{self, RootOrder, RootSpec};
use hilex_core::signed;
use hilex_core::{
    BClassFunction, BiPartition, ClassFunction, Error, Limits, Partition, PartitionFilter,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Environment variable overriding the `S_n` enumeration and character caps.
pub const MAX_N_VAR: &str = "HILEX_MAX_N";

#[derive(Debug, Parser)]
#[command(
    name = "hilex",
    version,
    about = "Higher Lie characters, root enumerators and their identities"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Allow caps above the defaults.
    #[arg(long, global = true)]
    unsafe_large: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Higher Lie character ψ^λ (or twisted τ^λ) of S_n.
    Char {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        twisted: bool,
    },
    /// Higher Lie character of B_n for the class (λ⁺, λ⁻).
    CharB {
        #[arg(long, value_parser = parse_partition, default_value = "")]
        plus: Partition,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        minus: Partition,
    },
    /// Root enumerator ρ_k (or signed ρ̄_k) of S_n.
    Roots {
        #[arg(long)]
        n: usize,
        /// Positive integer or `odd`.
        #[arg(long, value_parser = parse_root_order)]
        k: RootOrder,
        #[arg(long)]
        signed: bool,
    },
    /// Run a verifier.
    Verify(VerifyArgs),
    /// Compare both sides of a generating-function identity.
    Gf {
        /// summation, summation-signed, odd-cycles, even-cycles or summation-b.
        #[arg(long)]
        identity: String,
        #[arg(long)]
        weight: u32,
        /// Also print the right-hand series.
        #[arg(long)]
        series: bool,
    },
    /// Reference tables.
    Tables {
        #[arg(value_enum)]
        which: TableKind,
        #[arg(long)]
        n: usize,
        /// Partition filter for `partitions`.
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
        /// List every member of OC(n) and EC(n).
        #[arg(long)]
        members: bool,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    check: Check,
    #[arg(long)]
    n: Option<usize>,
    /// Root order for `scharf`: a positive integer or `odd`.
    #[arg(long, value_parser = parse_root_order)]
    k: Option<RootOrder>,
    /// Truncation weight for series checks.
    #[arg(long)]
    weight: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Equid,
    OpEp,
    Scharf,
    InducedB,
    InducedOdd,
    Gf,
    SummationB,
    Positive,
    CitedGf,
    Double,
    Kernel,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    OcEc,
    Partitions,
    Centralizers,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FilterArg {
    All,
    Op,
    Ep,
}

impl From<FilterArg> for PartitionFilter {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::All => PartitionFilter::All,
            FilterArg::Op => PartitionFilter::Op,
            FilterArg::Ep => PartitionFilter::Ep,
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn parse_root_order(s: &str) -> Result<RootOrder, String> {
    s.parse::<RootOrder>().map_err(|e| e.to_string())
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: msg.into(),
        }
    }
}

/// Caps from the override flag and the `HILEX_MAX_N` value (if any).
pub fn resolve_limits(max_n: Option<&str>, unsafe_large: bool) -> Result<Limits, String> {
    let base = if unsafe_large {
        Limits::unbounded()
    } else {
        Limits::default()
    };
    let Some(raw) = max_n else {
        return Ok(base);
    };
    let n: u32 = raw
        .trim()
        .parse()
        .map_err(|_| format!("{MAX_N_VAR} must be a non-negative integer, got `{raw}`"))?;
    if n > Limits::default().perm_n && !unsafe_large {
        return Err(format!(
            "{MAX_N_VAR}={n} exceeds the default cap {}; pass --unsafe-large to allow it",
            Limits::default().perm_n
        ));
    }
    Ok(base.with_max_n(n))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, max_n: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    EXIT_PASS
                }
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            return if code == EXIT_PASS {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome::usage(text)
            };
        }
    };
    let limits = match resolve_limits(max_n, cli.unsafe_large) {
        Ok(l) => l,
        Err(msg) => return Outcome::usage(format!("hilex: {msg}\n")),
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Outcome::usage("hilex: --jobs must be at least 1\n");
        }
        builder = builder.num_threads(j);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => return Outcome::usage(format!("hilex: cannot start worker pool: {e}\n")),
    };
    let format = cli.format;
    match pool.install(|| execute(&cli.command, &limits)) {
        Ok(out) => Outcome {
            code: if out.passed { EXIT_PASS } else { EXIT_FAIL },
            stdout: match format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&out.json).expect("json renders");
                    s.push('\n');
                    s
                }
                Format::Table => out.table,
            },
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: match e {
                Error::SizeLimit { .. } => EXIT_CAP,
                Error::Domain(_) => EXIT_USAGE,
                Error::Consistency(_) => EXIT_FAIL,
            },
            stdout: String::new(),
            stderr: format!("hilex: {e}\n"),
        },
    }
}

struct Output {
    passed: bool,
    json: Value,
    table: String,
}

impl Output {
    fn data(json: Value, table: String) -> Self {
        Output {
            passed: true,
            json,
            table,
        }
    }

    fn reports(reports: Vec<CheckReport>) -> Self {
        let passed = reports.iter().all(CheckReport::passed);
        let mut table = String::new();
        for r in &reports {
            let _ = writeln!(table, "{}", r.summary_line());
        }
        let json = if reports.len() == 1 {
            reports[0].to_json()
        } else {
            json!({
                "check": "all",
                "status": if passed { "pass" } else { "fail" },
                "reports": reports.iter().map(CheckReport::to_json).collect::<Vec<_>>(),
            })
        };
        Output {
            passed,
            json,
            table,
        }
    }
}

/// Class labels as a header row and values underneath; `reverse` puts the
/// `S_n` identity class (last in canonical order) first.
fn class_table<K: std::fmt::Display>(
    title: &str,
    rows: Vec<(String, Vec<(K, String)>)>,
    reverse: bool,
) -> String {
    let Some((_, first)) = rows.first() else {
        return String::new();
    };
    let order: Vec<usize> = if reverse {
        (0..first.len()).rev().collect()
    } else {
        (0..first.len()).collect()
    };
    let mut header = vec![title.to_string()];
    header.extend(order.iter().map(|&i| first[i].0.to_string()));
    let mut lines = vec![header];
    for (label, cells) in &rows {
        let mut line = vec![label.clone()];
        line.extend(order.iter().map(|&i| cells[i].1.clone()));
        lines.push(line);
    }
    let cols = lines[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            lines
                .iter()
                .map(|l| l[c].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for l in lines {
        let cells: Vec<String> = l
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
    }
    out
}

fn cells(chi: &ClassFunction) -> Vec<(Partition, String)> {
    chi.iter()
        .map(|(k, v)| (k.clone(), v.to_string()))
        .collect()
}

fn b_cells(chi: &BClassFunction) -> Vec<(BiPartition, String)> {
    chi.iter()
        .map(|(k, v)| (k.clone(), v.to_string()))
        .collect()
}

fn require<T>(v: Option<T>, flag: &str, check: &str) -> hilex_core::Result<T> {
    v.ok_or_else(|| Error::domain(format!("`verify {check}` needs {flag}")))
}

fn execute(command: &Command, limits: &Limits) -> hilex_core::Result<Output> {
    match command {
        Command::Char { lambda, twisted } => {
            let mode = if *twisted { Mode::Twisted } else { Mode::Plain };
            let chi = hlc::higher_lie_character(lambda, mode, limits)?;
            let name = if *twisted { "tau" } else { "psi" };
            let table = class_table("nu", vec![(format!("{name}^{lambda}"), cells(&chi))], true);
            let json = serde_json::to_value(CharacterTable::new(lambda, mode, &chi))
                .expect("table serializes");
            Ok(Output::data(json, table))
        }
        Command::CharB { plus, minus } => {
            let bl = BiPartition::new(plus.clone(), minus.clone());
            let chi = signed::higher_lie_character_bn(&bl, limits)?;
            let table = class_table("nu", vec![(format!("psi_B^{bl}"), b_cells(&chi))], false);
            let json = json!({
                "n": bl.n(),
                "lambda": bl,
                "values": chi.json_values(),
            });
            Ok(Output::data(json, table))
        }
        Command::Roots { n, k, signed } => {
            let chi = roots::root_enumerator(
                *n,
                RootSpec {
                    order: *k,
                    signed: *signed,
                },
                limits,
            )?;
            let name = if *signed { "rho_bar" } else { "rho" };
            let table = class_table("nu", vec![(format!("{name}_{k}"), cells(&chi))], true);
            let json = json!({
                "n": n,
                "k": k.to_string(),
                "signed": signed,
                "values": chi.json_values(),
            });
            Ok(Output::data(json, table))
        }
        Command::Verify(args) => verify(args, limits),
        Command::Gf {
            identity,
            weight,
            series,
        } => {
            if identity == "summation-b" {
                let r = signed::verify_summation_4_bn(*weight, limits)?;
                let passed = r.status.passed();
                let mut json = serde_json::to_value(&r).expect("report serializes");
                json["identity_id"] = json!("SUMMATION_4_BN");
                if *series {
                    json["rhs"] = serde_json::to_value(signed::rhs_summation_bn(*weight)).unwrap();
                }
                let table = format!(
                    "summation-b weight={weight} terms={}  {}\n",
                    r.terms,
                    r.status.to_string().to_uppercase()
                );
                return Ok(Output {
                    passed,
                    json,
                    table,
                });
            }
            let id: IdentityId = identity.parse()?;
            let r = gf::verify_identity(id, *weight, limits)?;
            let passed = r.status.passed();
            let mut json = serde_json::to_value(&r).expect("report serializes");
            if *series {
                let rhs = match id {
                    IdentityId::Summation4A => gf::rhs_summation_4a(*weight, false),
                    IdentityId::Summation4ASigned => gf::rhs_summation_4a(*weight, true),
                    _ => gf::rhs_op_product(*weight),
                };
                json["rhs"] = serde_json::to_value(rhs).unwrap();
            }
            let mut table = format!(
                "{id} weight={weight} terms={}  {}\n",
                r.terms,
                r.status.to_string().to_uppercase()
            );
            if let Some(d) = &r.first_discrepancy {
                let _ = writeln!(
                    table,
                    "first discrepancy at {}: lhs={} rhs={}",
                    d.key, d.lhs, d.rhs
                );
            }
            Ok(Output {
                passed,
                json,
                table,
            })
        }
        Command::Tables {
            which,
            n,
            filter,
            members,
        } => tables(*which, *n, (*filter).into(), *members, limits),
    }
}

fn identity_report(r: gf::IdentityReport) -> CheckReport {
    let mut c = CheckReport::new("gf", r.status.passed())
        .with("identity", r.identity_id)
        .with("weight", r.truncation)
        .with("basis", r.basis)
        .with_number("terms", r.terms);
    if let Some(d) = r.first_discrepancy {
        c = c.with("first_discrepancy", d);
    }
    c
}

fn summation_b_report(w: u32, limits: &Limits) -> hilex_core::Result<CheckReport> {
    let r = signed::verify_summation_4_bn(w, limits)?;
    let mut c = CheckReport::new("summation-b", r.status.passed())
        .with("weight", w)
        .with("basis", r.basis)
        .with_number("terms", r.terms);
    if let Some(d) = r.first_discrepancy {
        c = c.with("first_discrepancy", d);
    }
    Ok(c)
}

fn positive_report(n: usize, limits: &Limits) -> hilex_core::Result<CheckReport> {
    let w = signed::positive_only_count(n, limits)?;
    Ok(CheckReport::new("positive", w.status.passed())
        .with("n", n)
        .with_number("count", w.count)
        .with("expected", w.expected)
        .with_number("matchings", w.matchings)
        .with("bijection", w.bijection))
}

fn verify(args: &VerifyArgs, limits: &Limits) -> hilex_core::Result<Output> {
    let name = format!("{:?}", args.check).to_lowercase();
    let reports = match args.check {
        Check::Equid => vec![roots::verify_equid(require(args.n, "--n", &name)?, limits)?],
        Check::OpEp => vec![roots::verify_op_ep(require(args.n, "--n", &name)?, limits)?],
        Check::Scharf => vec![roots::verify_scharf(
            require(args.n, "--n", &name)?,
            require(args.k, "--k", &name)?,
            limits,
        )?],
        Check::InducedB => vec![roots::verify_induced_b(
            require(args.n, "--n", &name)?,
            limits,
        )?],
        Check::InducedOdd => vec![roots::verify_induced_odd(
            require(args.n, "--n", &name)?,
            limits,
        )?],
        Check::Gf => {
            let w = require(args.weight, "--weight", &name)?;
            IdentityId::ALL
                .iter()
                .map(|&id| gf::verify_identity(id, w, limits).map(identity_report))
                .collect::<hilex_core::Result<_>>()?
        }
        Check::SummationB => vec![summation_b_report(
            require(args.weight, "--weight", &name)?,
            limits,
        )?],
        Check::Positive => vec![positive_report(require(args.n, "--n", &name)?, limits)?],
        Check::CitedGf => {
            let w = require(args.weight, "--weight", &name)?;
            let ks: Vec<u64> = match args.k {
                Some(RootOrder::K(k)) => vec![k],
                Some(RootOrder::Odd) => {
                    return Err(Error::domain("`verify cited-gf` needs an integer --k"))
                }
                None => vec![2, 3, 4],
            };
            ks.into_iter()
                .map(|k| roots::verify_cited_gf_remarks(w, k, limits))
                .collect::<hilex_core::Result<_>>()?
        }
        Check::Double => vec![roots::verify_double_factorial(require(
            args.n, "--n", &name,
        )?)],
        Check::Kernel => vec![hlc::verify_kernel(24, 6)?],
        Check::All => verify_all(args.n.unwrap_or(5), args.weight.unwrap_or(5), limits)?,
    };
    Ok(Output::reports(reports))
}

/// The whole suite at size `n` and truncation weight `w`.
fn verify_all(n: usize, w: u32, limits: &Limits) -> hilex_core::Result<Vec<CheckReport>> {
    if n == 0 {
        return Err(Error::domain("`verify all` needs n >= 1"));
    }
    let mut out = vec![
        hlc::verify_kernel(24, 6)?,
        roots::verify_equid(n, limits)?,
        roots::verify_op_ep(n, limits)?,
    ];
    for k in [1, 2, 3, 4, 6] {
        out.push(roots::verify_scharf(n, RootOrder::K(k), limits)?);
    }
    out.push(roots::verify_scharf(n, RootOrder::Odd, limits)?);
    let half = ((n - 1) / 2).max(1);
    out.push(roots::verify_induced_odd(half, limits)?);
    out.push(roots::verify_induced_b(half, limits)?);
    out.push(positive_report(
        n.min(limits.signed_perm_n as usize),
        limits,
    )?);
    out.push(roots::verify_double_factorial(n.max(w as usize)));
    for id in IdentityId::ALL {
        out.push(identity_report(gf::verify_identity(id, w, limits)?));
    }
    out.push(summation_b_report(w.min(4), limits)?);
    for k in [2, 3, 4] {
        out.push(roots::verify_cited_gf_remarks(w, k, limits)?);
    }
    Ok(out)
}

fn tables(
    which: TableKind,
    n: usize,
    filter: PartitionFilter,
    members: bool,
    limits: &Limits,
) -> hilex_core::Result<Output> {
    match which {
        TableKind::OcEc => {
            let mut json = json!({ "n": n });
            let mut table = String::new();
            for (name, fam) in [("oc", CycleFamily::Oc), ("ec", CycleFamily::Ec)] {
                let perms = oc_ec_members(n, fam, limits)?;
                let plain = descent_distribution(&perms, false)?;
                let comp = descent_distribution(&perms, true)?;
                let render = |h: &std::collections::BTreeMap<hilex_core::DescentSet, u64>| {
                    h.iter()
                        .map(|(d, c)| json!({ "set": d.positions(), "count": c.to_string() }))
                        .collect::<Vec<_>>()
                };
                let mut entry = json!({
                    "count": perms.len().to_string(),
                    "descents": render(&plain),
                    "complement_descents": render(&comp),
                });
                if members {
                    entry["members"] = json!(perms);
                }
                json[name] = entry;
                let _ = writeln!(
                    table,
                    "{} ({} permutations)",
                    name.to_uppercase(),
                    perms.len()
                );
                let _ = writeln!(table, "{:<16} {:>8} {:>12}", "set", "Des", "complement");
                let keys: std::collections::BTreeSet<_> =
                    plain.keys().chain(comp.keys()).copied().collect();
                for d in keys {
                    let _ = writeln!(
                        table,
                        "{:<16} {:>8} {:>12}",
                        d.to_string(),
                        plain.get(&d).copied().unwrap_or(0),
                        comp.get(&d).copied().unwrap_or(0)
                    );
                }
                if members {
                    for p in &perms {
                        let _ = writeln!(table, "  {p}");
                    }
                }
            }
            Ok(Output::data(json, table))
        }
        TableKind::Partitions => {
            let rows: Vec<Value> = hilex_core::partition::partitions(n, filter)
                .iter()
                .map(|p| {
                    json!({
                        "lambda": p,
                        "class_size": p.class_size().to_string(),
                        "centralizer_order": p.centralizer_order().to_string(),
                        "sign": p.sign(),
                    })
                })
                .collect();
            let mut table = format!(
                "{:<20} {:>14} {:>14} {:>5}\n",
                "lambda", "class size", "centralizer", "sign"
            );
            for p in hilex_core::partition::partitions(n, filter) {
                let _ = writeln!(
                    table,
                    "{:<20} {:>14} {:>14} {:>5}",
                    p.to_string(),
                    p.class_size(),
                    p.centralizer_order(),
                    p.sign()
                );
            }
            Ok(Output::data(json!({ "n": n, "partitions": rows }), table))
        }
        TableKind::Centralizers => {
            let bps = hilex_core::partition::bipartitions(n);
            let rows: Vec<Value> = bps
                .iter()
                .map(|b| {
                    json!({
                        "lambda": b,
                        "class_size": b.class_size().to_string(),
                        "centralizer_order": b.centralizer_order().to_string(),
                        "fuses_to_even": signed::fuse_class(b, signed::FusionTarget::Even),
                    })
                })
                .collect();
            let mut table = format!(
                "{:<20} {:>14} {:>14}  {}\n",
                "(plus,minus)", "class size", "centralizer", "in S_2n"
            );
            for b in &bps {
                let _ = writeln!(
                    table,
                    "{:<20} {:>14} {:>14}  {}",
                    b.to_string(),
                    b.class_size(),
                    b.centralizer_order(),
                    signed::fuse_class(b, signed::FusionTarget::Even)
                );
            }
            Ok(Output::data(json!({ "n": n, "bipartitions": rows }), table))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("hilex").chain(args.iter().copied()), None)
    }

    #[test]
    fn char_table() {
        let out = go(&["char", "--lambda", "3", "--format", "table"]);
        assert_eq!(out.code, 0);
        let lines: Vec<&str> = out.stdout.lines().collect();
        assert_eq!(lines.len(), 2);
        let header: Vec<&str> = lines[0].split_whitespace().collect();
        let values: Vec<&str> = lines[1].split_whitespace().collect();
        assert_eq!(header, vec!["nu", "(1,1,1)", "(2,1)", "(3)"]);
        assert_eq!(values, vec!["psi^(3)", "2", "0", "-1"]);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(go(&["verify", "equid", "--n", "0x"]).code, EXIT_USAGE);
        assert_eq!(go(&["frobnicate"]).code, EXIT_USAGE);
        assert_eq!(go(&["verify", "equid"]).code, EXIT_USAGE);
        assert_eq!(go(&["verify", "equid", "--n", "9"]).code, EXIT_CAP);
        assert_eq!(go(&["verify", "equid", "--n", "4"]).code, EXIT_PASS);
        assert_eq!(go(&["--help"]).code, EXIT_PASS);
    }

    #[test]
    fn caps_from_environment() {
        assert_eq!(resolve_limits(None, false).unwrap(), Limits::default());
        assert_eq!(resolve_limits(Some("6"), false).unwrap().perm_n, 6);
        assert!(resolve_limits(Some("10"), false).is_err());
        assert!(resolve_limits(Some("ten"), false).is_err());
        assert_eq!(resolve_limits(Some("10"), true).unwrap().perm_n, 10);
        let out = run(["hilex", "verify", "equid", "--n", "5"], Some("4"));
        assert_eq!(out.code, EXIT_CAP);
        let out = run(["hilex", "verify", "equid", "--n", "5"], Some("12"));
        assert_eq!(out.code, EXIT_USAGE);
    }

    #[test]
    fn equid_json() {
        let out = go(&["verify", "equid", "--n", "4", "--format", "json"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["status"], "pass");
        assert_eq!(v["oc_total"], "9");
        assert_eq!(v["ec_total"], "9");
    }

    #[test]
    fn other_verbs() {
        assert_eq!(go(&["char-b", "--minus", "1"]).code, 0);
        assert_eq!(go(&["roots", "--n", "3", "--k", "odd"]).code, 0);
        assert_eq!(
            go(&["gf", "--identity", "odd-cycles", "--weight", "4"]).code,
            0
        );
        assert_eq!(
            go(&["gf", "--identity", "summation-b", "--weight", "2"]).code,
            0
        );
        assert_eq!(
            go(&["gf", "--identity", "nope", "--weight", "4"]).code,
            EXIT_USAGE
        );
        assert_eq!(
            go(&["tables", "oc-ec", "--n", "3", "--format", "table"]).code,
            0
        );
        assert_eq!(
            go(&["tables", "partitions", "--n", "4", "--filter", "op"]).code,
            0
        );
        assert_eq!(go(&["tables", "centralizers", "--n", "2"]).code, 0);
        assert_eq!(go(&["verify", "scharf", "--n", "4", "--k", "2"]).code, 0);
        assert_eq!(go(&["verify", "positive", "--n", "3"]).code, 0);
    }
}
