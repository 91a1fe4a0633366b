//! Command dispatch for the `lct` binary.
//!
//! [`run`] never touches the process streams; it returns the exit code and
//! the rendered stdout/stderr so it can be driven from tests.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use lct_core::closed_forms::{self, CubicSingularityMultiset, DelPezzoDescriptor, EquivariantKey};
use lct_core::db::{self, Query, StatusKind};
use lct_core::toric::{self, fanfile, FanFile, GroupAction, RaySet, ToricLctReport};
use lct_core::{parse_rational, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "lct", version, about = "Exact global log canonical thresholds")]
struct Cli {
    /// Print `key=value` lines instead of prose.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Threshold of a toric variety from its rays.
    Toric(ToricArgs),
    /// Well-formed weighted projective space.
    Wps {
        #[arg(required = true, num_args = 2..)]
        weights: Vec<u64>,
    },
    /// Projectivized split bundle over Pⁿ; compares the closed form with the fan engine.
    Bundle {
        #[arg(long)]
        base_dim: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        twists: Vec<u64>,
    },
    /// Complex singularity exponent of a monomial or of a Fermat sum.
    Cse(CseArgs),
    /// Smooth hypersurface of degree m < n in Pⁿ.
    Hypersurface {
        #[arg(long)]
        ambient: u64,
        #[arg(long)]
        degree: u64,
    },
    /// Smooth double cover of Pⁿ branched in degree 2d.
    DoubleCover {
        #[arg(long)]
        ambient: u64,
        #[arg(long)]
        degree: u64,
    },
    /// min(a, b) for a product of Fano varieties.
    Product { a: String, b: String },
    /// min(1/2, a) for P¹ × X.
    P1Product { a: String },
    /// Del Pezzo surface.
    Dp(DpArgs),
    /// Singular cubic surface from its singularity types, e.g. `A4,A1`.
    CubicSing { types: String },
    /// Known equivariant thresholds: dP5_S5, dP5_A5, FermatCubic_Aut, P2_A6.
    Equivariant { key: String },
    /// Look up Fano threefold families.
    Family(FamilyArgs),
    /// Database maintenance.
    Db(DbArgs),
}

#[derive(Args, Debug)]
struct ToricArgs {
    /// Rays separated by `;`, coordinates by `,`.
    #[arg(long, conflicts_with = "fan_file", required_unless_present = "fan_file")]
    rays: Option<String>,
    /// Group generators, each a row-major n×n matrix, separated by `;`.
    #[arg(long)]
    group: Option<String>,
    #[arg(long)]
    fan_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct CseArgs {
    #[arg(long, value_delimiter = ',')]
    monomial: Option<Vec<u64>>,
    #[arg(long, value_delimiter = ',')]
    fermat: Option<Vec<u64>>,
}

#[derive(Args, Debug)]
struct DpArgs {
    #[arg(long)]
    degree: u8,
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
    nodes: u8,
    #[arg(long, conflicts_with_all = ["tacnodal", "eckardt"])]
    cuspidal: bool,
    #[arg(long, conflicts_with = "eckardt")]
    tacnodal: bool,
    #[arg(long)]
    eckardt: bool,
    #[arg(long, value_parser = ["product", "nonproduct"])]
    deg8: Option<String>,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(required_unless_present = "list", conflicts_with = "list")]
    id: Option<String>,
    #[arg(long)]
    list: bool,
    #[arg(long, requires = "list")]
    rank: Option<u8>,
    #[arg(long, requires = "list", value_parser = ["exact_all", "exact_general", "upper_bound", "unknown"])]
    status: Option<String>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct DbArgs {
    #[arg(long)]
    cross_check: bool,
    #[arg(long)]
    export: Option<PathBuf>,
    #[arg(long)]
    import: Option<PathBuf>,
}

/// Rendered result of one invocation.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub human: Vec<String>,
    pub machine: Vec<(String, String)>,
}

impl CliOutput {
    fn line(&mut self, text: impl Into<String>) {
        self.human.push(text.into());
    }

    fn key(&mut self, key: &str, value: impl ToString) {
        self.machine.push((key.to_string(), value.to_string()));
    }

    pub fn render(&self, machine: bool) -> String {
        let mut out = String::new();
        if machine {
            for (k, v) in &self.machine {
                writeln!(out, "{k}={v}").unwrap();
            }
        } else {
            for l in &self.human {
                writeln!(out, "{l}").unwrap();
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    /// Bad flag value; carries the flag name.
    Usage { flag: &'static str, message: String },
    /// The library rejected the input; carries the error variant name.
    Computation { name: &'static str, message: String },
}

fn usage(flag: &'static str, message: impl ToString) -> Failure {
    Failure::Usage { flag, message: message.to_string() }
}

macro_rules! computation {
    ($e:expr) => {
        $e.map_err(|e| Failure::Computation { name: e.name(), message: e.to_string() })
    };
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: rendered }
            } else {
                Outcome { code: EXIT_OK, stdout: rendered, stderr: String::new() }
            };
        }
    };
    let mut out = CliOutput::default();
    match dispatch(cli.command, &mut out) {
        Ok(()) => Outcome { code: EXIT_OK, stdout: out.render(cli.machine), stderr: String::new() },
        Err(Failure::Usage { flag, message }) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("usage error: {flag}: {message}\n"),
        },
        Err(Failure::Computation { name, message }) => Outcome {
            code: EXIT_COMPUTATION,
            stdout: out.render(cli.machine),
            stderr: format!("error: {name}: {message}\n"),
        },
    }
}

fn fraction(flag: &'static str, text: &str) -> Result<Rational, Failure> {
    parse_rational(text).ok_or_else(|| usage(flag, format!("`{text}` is not a fraction")))
}

fn report_value(out: &mut CliOutput, label: &str, value: &Rational) {
    out.line(format!("{label} = {value}"));
    out.key("lct", value);
}

fn report_toric(out: &mut CliOutput, report: &ToricLctReport) {
    out.line(format!("lct = {}", report.lct));
    out.line(format!(
        "max pairing = {} at vertex ({}) and ray ({})",
        report.max_pairing, report.witness_vertex, report.witness_ray
    ));
    out.key("lct", &report.lct);
    out.key("max_pairing", &report.max_pairing);
    out.key("witness_vertex", &report.witness_vertex);
    out.key("witness_ray", &report.witness_ray);
}

fn dispatch(command: Command, out: &mut CliOutput) -> Result<(), Failure> {
    match command {
        Command::Toric(args) => run_toric(args, out),
        Command::Wps { weights } => {
            let value = computation!(closed_forms::wps_lct(&weights))?;
            let fan = computation!(toric::wps_fan(&weights))?;
            let engine = computation!(toric::toric_lct(&fan, None))?;
            report_value(out, "lct", &value);
            out.line(format!("fan engine = {}", engine.lct));
            out.key("fan_lct", &engine.lct);
            if engine.lct != value {
                return Err(Failure::Computation {
                    name: "OracleMismatch",
                    message: format!("closed form {value} differs from fan engine {}", engine.lct),
                });
            }
            Ok(())
        }
        Command::Bundle { base_dim, twists } => {
            let closed = computation!(toric::bundle_lct_closed_form(base_dim, &twists))?;
            let fan = computation!(toric::projectivized_bundle_fan(base_dim, &twists))?;
            let engine = computation!(toric::toric_lct(&fan, None))?;
            out.line(format!("closed form = {closed}"));
            out.line(format!("fan engine  = {}", engine.lct));
            out.key("closed_form", &closed);
            report_toric(out, &engine);
            if engine.lct != closed {
                return Err(Failure::Computation {
                    name: "OracleMismatch",
                    message: format!("closed form {closed} differs from fan engine {}", engine.lct),
                });
            }
            Ok(())
        }
        Command::Cse(CseArgs { monomial, fermat }) => {
            let value = match (monomial, fermat) {
                (Some(m), _) => computation!(closed_forms::monomial_cse(&m))?,
                (_, Some(m)) => computation!(closed_forms::fermat_cse(&m))?,
                _ => unreachable!("clap enforces one of the two"),
            };
            out.line(format!("c0 = {value}"));
            out.key("cse", &value);
            Ok(())
        }
        Command::Hypersurface { ambient, degree } => {
            let value = computation!(closed_forms::hypersurface_lct(ambient, degree))?;
            report_value(out, "lct", &value);
            Ok(())
        }
        Command::DoubleCover { ambient, degree } => {
            let value = computation!(closed_forms::double_cover_lct(ambient, degree))?;
            report_value(out, "lct", &value);
            Ok(())
        }
        Command::Product { a, b } => {
            let a = fraction("a", &a)?;
            let b = fraction("b", &b)?;
            let value = computation!(closed_forms::product_lct(&a, &b))?;
            report_value(out, "lct", &value);
            Ok(())
        }
        Command::P1Product { a } => {
            let a = fraction("a", &a)?;
            let value = computation!(closed_forms::p1_product_lct(&a))?;
            report_value(out, "lct", &value);
            Ok(())
        }
        Command::Dp(args) => {
            let descriptor = DelPezzoDescriptor {
                degree: args.degree,
                degree8_type: match args.deg8.as_deref() {
                    None => None,
                    Some(t) => Some(t.parse().map_err(|e| usage("--deg8", e))?),
                },
                nodes: args.nodes,
                has_cuspidal_anticanonical: args.cuspidal,
                has_tacnodal_anticanonical: args.tacnodal,
                has_eckardt_point: args.eckardt,
            };
            let value = computation!(closed_forms::del_pezzo_lct(&descriptor))?;
            report_value(out, "lct", &value);
            Ok(())
        }
        Command::CubicSing { types } => {
            let set: CubicSingularityMultiset = types.parse().map_err(|e| usage("types", e))?;
            let value = closed_forms::cubic_surface_lct(&set);
            report_value(out, "lct", &value);
            Ok(())
        }
        Command::Equivariant { key } => {
            let key: EquivariantKey = computation!(key.parse::<EquivariantKey>())?;
            let v = closed_forms::known_equivariant_lct(key);
            out.line(format!("lct(X, G) = {}", v.value));
            out.line(v.citation);
            out.key("lct", &v.value);
            out.key("provenance", v.citation);
            Ok(())
        }
        Command::Family(args) => run_family(args, out),
        Command::Db(args) => run_db(args, out),
    }
}

fn load_fan(args: &ToricArgs) -> Result<(RaySet, Vec<lct_core::IntMatrix>), Failure> {
    let (rays, mut group) = match (&args.rays, &args.fan_file) {
        (Some(text), _) => (fanfile::parse_ray_list(text).map_err(|e| usage("--rays", e))?, Vec::new()),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| usage("--fan-file", e))?;
            let fan = FanFile::parse(&text).map_err(|e| usage("--fan-file", e))?;
            (fan.rays, fan.group)
        }
        (None, None) => return Err(usage("--rays", "either --rays or --fan-file is required")),
    };
    if let Some(text) = &args.group {
        group.extend(fanfile::parse_matrix_list(text, rays.dim()).map_err(|e| usage("--group", e))?);
    }
    Ok((rays, group))
}

fn run_toric(args: ToricArgs, out: &mut CliOutput) -> Result<(), Failure> {
    let (rays, gens) = load_fan(&args)?;
    if rays.was_normalized() {
        out.line("note: non-primitive rays were divided by the gcd of their coordinates");
    }
    let group = if gens.is_empty() {
        None
    } else {
        Some(computation!(GroupAction::generated_by(&gens))?)
    };
    let report = computation!(toric::toric_lct(&rays, group.as_ref()))?;
    if let Some(g) = &group {
        out.line(format!("group of order {}", g.order()));
    }
    report_toric(out, &report);
    Ok(())
}

fn describe_record(out: &mut CliOutput, record: &db::FamilyRecord) {
    let value = record.status.value().map_or_else(|| "-".into(), ToString::to_string);
    let shown = match record.status.kind() {
        StatusKind::ExactAll => format!("lct = {value}"),
        StatusKind::ExactGeneral => format!("lct = {value} for a general member"),
        StatusKind::UpperBound => format!("lct <= {value}"),
        StatusKind::Unknown => "lct unknown".to_string(),
    };
    out.line(format!("family {} (Picard rank {}): {shown}", record.id, record.picard_rank));
    out.line(format!("  source: {}", record.provenance));
    if let Some(note) = &record.notes {
        out.line(format!("  note: {note}"));
    }
    if let Some(fan) = &record.fan {
        let rays: Vec<String> = fan.rays().iter().map(ToString::to_string).collect();
        out.line(format!("  fan: {}", rays.join(";")));
    }
}

fn run_family(args: FamilyArgs, out: &mut CliOutput) -> Result<(), Failure> {
    let database = db::load_builtin();
    if args.list {
        let filter = Query {
            rank: args.rank,
            status_kind: args.status.as_deref().map(|s| s.parse().expect("clap restricts values")),
            value: None,
        };
        for r in db::query(&database, &filter) {
            let value = r.status.value().map_or_else(|| "-".into(), ToString::to_string);
            out.line(format!("{:<5} {:<14} {}", r.id.to_string(), r.status.kind(), value));
            out.key("family", format!("{}|{}|{}", r.id, r.status.kind(), value));
        }
        return Ok(());
    }
    let id = args.id.expect("clap requires an id without --list");
    let record = computation!(db::lookup(&database, &id))?;
    describe_record(out, record);
    out.key("id", record.id);
    out.key("rank", record.picard_rank);
    out.key("status", record.status.kind());
    out.key("value", record.status.value().map_or_else(|| "-".into(), ToString::to_string));
    out.key("provenance", &record.provenance);
    Ok(())
}

fn run_db(args: DbArgs, out: &mut CliOutput) -> Result<(), Failure> {
    if args.cross_check {
        let report = db::cross_check_toric(&db::load_builtin());
        for e in &report.entries {
            let computed = match &e.computed {
                Ok(r) => r.lct.to_string(),
                Err(err) => err.name().to_string(),
            };
            let expected = e.expected.as_ref().map_or_else(|| "-".into(), ToString::to_string);
            let verdict = if e.passed { "pass" } else { "FAIL" };
            out.line(format!("{:<5} expected {:<4} computed {:<4} {verdict}", e.id.to_string(), expected, computed));
            out.key("check", format!("{}|{}|{}|{}", e.id, expected, computed, verdict));
        }
        out.line(format!("{} fans checked, {}", report.entries.len(), if report.passed() { "all pass" } else { "failures" }));
        out.key("passed", report.passed());
        if !report.passed() {
            return Err(Failure::Computation {
                name: "CrossCheckFailed",
                message: "stored fans disagree with stored values".into(),
            });
        }
        return Ok(());
    }
    if let Some(path) = args.export {
        let database = db::load_builtin();
        fs::write(&path, db::export(&database)).map_err(|e| usage("--export", e))?;
        out.line(format!("wrote {} records to {}", database.len(), path.display()));
        out.key("records", database.len());
        return Ok(());
    }
    if let Some(path) = args.import {
        let text = fs::read_to_string(&path).map_err(|e| usage("--import", e))?;
        let database = computation!(db::import(&text))?;
        let counts = database.status_counts();
        out.line(format!("imported {} records", database.len()));
        out.line(format!(
            "exact for all members {}, exact for general members {}, upper bounds {}, unknown {}",
            counts[0], counts[1], counts[2], counts[3]
        ));
        let check = db::cross_check_toric(&database);
        out.line(format!("toric cross-check over {} fans: {}", check.entries.len(), if check.passed() { "pass" } else { "FAIL" }));
        out.key("records", database.len());
        out.key("passed", check.passed());
        return Ok(());
    }
    unreachable!("clap requires one db action")
}
