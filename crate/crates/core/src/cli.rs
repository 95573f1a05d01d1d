//! Command surface of the `ribbon-moduli` binary.
//!
//! Every command produces a [`Report`]; the binary prints it as JSON and maps
//! the outcome to an exit code: [`EXIT_OK`], [`EXIT_INVALID`] for rejected
//! input, [`EXIT_FAILED`] when a verification check fails.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::local::{
    endo_quotient_dim, ext1_dim, verify_deformation_i, verify_deformation_ii, DeformationReport,
};
use crate::moduli::{
    component_table, enumerate_strata, glb_component_count, stratification_graph, stratum_dim,
    SpecialCase, VbComponent,
};
use crate::report::{Check, Report};
use crate::ribbon::{format_partition, GlbDescriptor, RibbonInvariants, VbDescriptor};
use crate::stability::{
    classify_glb, classify_vb, format_ratio, gr_class, slopes, SheafPoint, StabilityVerdict,
};
use crate::sweep;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ribbon-moduli",
    version,
    about = "Moduli of semistable sheaves on ribbons"
)]
pub struct Cli {
    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "FILE")]
    pub json: Option<PathBuf>,

    /// Report `ms` as 0 so output is byte-for-byte reproducible.
    #[arg(long, global = true)]
    pub no_timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stability verdict, slopes and Gr-class of one sheaf.
    Classify(ClassifyArgs),
    /// Irreducible components of the moduli space.
    Components(RibbonArgs),
    /// Strata of stable generalized line bundles and their graph.
    Strata(StrataArgs),
    /// Finite-field verification of the local algebra.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct RibbonArgs {
    /// Arithmetic genus of the ribbon.
    #[arg(long, allow_negative_numbers = true)]
    pub g: i64,
    /// Genus of the reduced curve.
    #[arg(long, allow_negative_numbers = true)]
    pub gbar: i64,
    /// Degree.
    #[arg(long, allow_negative_numbers = true)]
    pub d: i64,
}

#[derive(Debug, Clone, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub ribbon: RibbonArgs,
    /// Local indices of a generalized line bundle, comma separated ("" for a line bundle).
    #[arg(long, conflicts_with = "vb", allow_hyphen_values = true)]
    pub index: Option<String>,
    /// Rank-2 bundle: degree `e`, or `e,a,b` with a split type over P^1.
    #[arg(long, allow_hyphen_values = true)]
    pub vb: Option<String>,
    /// Stability of the rank-2 bundle when gbar >= 1.
    #[arg(long, requires = "vb")]
    pub status: Option<String>,
    /// Degree of the polarization used to report slopes.
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub deg_l: i64,
}

#[derive(Debug, Clone, Args)]
pub struct StrataArgs {
    #[command(flatten)]
    pub ribbon: RibbonArgs,
    /// Write the stratification graph here.
    #[arg(long, value_name = "FILE")]
    pub dot: Option<PathBuf>,
    /// Also list strictly semistable strata.
    #[arg(long)]
    pub semistable: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum VerifyTarget {
    /// dim Ext^1(I_n, I_n) = 2n.
    Ext(TruncArgs),
    /// length End(I_n)/O = n.
    Endo(TruncArgs),
    /// Flatness of the family raising an index b0 to b0 + 2.
    Deform1(DeformArgs),
    /// Flatness of the family merging indices 1 and b1.
    Deform2(DeformArgs),
    /// The full verification grid.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Args)]
pub struct TruncArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 101)]
    pub prime: u64,
    /// Truncation order; defaults to the smallest admissible value.
    #[arg(long)]
    pub trunc: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct DeformArgs {
    #[arg(long)]
    pub b: usize,
    #[arg(long, default_value_t = 101)]
    pub prime: u64,
    /// Deformation parameter; drawn from the seed when omitted.
    #[arg(long, allow_negative_numbers = true)]
    pub t: Option<i64>,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Worker threads.
    #[arg(long, default_value_t = 4)]
    pub threads: usize,
}

fn ribbon_params(r: &RibbonArgs) -> Value {
    json!({"g": r.g, "gbar": r.gbar, "d": r.d})
}

fn parse_indices(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            part.trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad index '{part}'")))
        })
        .collect()
}

fn parse_vb(ribbon: &RibbonInvariants, vb_arg: &str, status: Option<&str>) -> Result<VbDescriptor> {
    let nums = parse_indices(vb_arg)?;
    let status = status.map(str::parse::<StabilityVerdict>).transpose()?;
    match nums.as_slice() {
        [e] => {
            if ribbon.gbar() == 0 {
                return Err(Error::MissingSplitType);
            }
            Ok(VbDescriptor::with_status(*e, status))
        }
        [e, a, b] => {
            if a + b != *e {
                return Err(Error::SplitDegreeMismatch {
                    e: *e,
                    a: *a,
                    b: *b,
                });
            }
            if ribbon.gbar() != 0 {
                return Err(Error::InvalidArgument(
                    "split types are only meaningful over P^1".into(),
                ));
            }
            if status.is_some() {
                return Err(Error::InvalidArgument(
                    "stability of a split bundle is determined by its split type".into(),
                ));
            }
            Ok(VbDescriptor::split(*a, *b))
        }
        _ => Err(Error::InvalidArgument(format!(
            "expected e or e,a,b, got '{vb_arg}'"
        ))),
    }
}

fn verdict_value(v: Option<StabilityVerdict>) -> Value {
    v.map_or(Value::from("unknown"), |v| Value::from(v.as_str()))
}

pub fn cmd_classify(args: &ClassifyArgs) -> Result<Report> {
    let ra = args.ribbon;
    let ribbon = RibbonInvariants::new(ra.g, ra.gbar)?;
    let mut params = ribbon_params(&ra);
    params["deg_l"] = json!(args.deg_l);
    let mut report = Report::new("classify", params);

    if let Some(vb_arg) = &args.vb {
        report.params["vb"] = json!(vb_arg);
        report.params["status"] = json!(args.status);
        let vb = parse_vb(&ribbon, vb_arg, args.status.as_deref())?;
        let expected = ribbon.vb_degree(ra.d);
        if vb.degree() != expected {
            return Err(Error::DegreeMismatch {
                expected,
                got: vb.degree(),
            });
        }
        let verdict = classify_vb(&ribbon, &vb)?;
        let gr = gr_class(&ribbon, &SheafPoint::Vb(vb)).ok();
        report.result = json!({
            "kind": "vb",
            "e": vb.degree(),
            "split": vb.split_type().map(|(a, b)| format!("{a},{b}")),
            "verdict": verdict_value(verdict),
            "gr_class": gr.map(|g| g.to_string()),
        });
        return Ok(report);
    }

    let indices = parse_indices(args.index.as_deref().unwrap_or(""))?;
    report.params["index"] = json!(format_partition(&indices));
    let glb = GlbDescriptor::new(ra.d, indices)?;
    let verdict = classify_glb(&ribbon, &glb);
    let s = slopes(&ribbon, args.deg_l, &glb)?;
    let inv = glb.invariants(&ribbon);
    let gr = gr_class(&ribbon, &SheafPoint::Glb(glb.clone())).ok();
    report.result = json!({
        "kind": "glb",
        "indices": format_partition(glb.indices()),
        "b": inv.b,
        "verdict": verdict.as_str(),
        "slopes": {
            "mu_i": format_ratio(&s.mu_i),
            "mu_ibar": format_ratio(&s.mu_ibar),
            "mu_f1": format_ratio(&s.mu_f1),
        },
        "deg_ibar": inv.deg_ibar,
        "deg_f1": inv.deg_f1,
        "e": inv.e,
        "blowup_genus": inv.blowup_genus,
        "hilbert_polynomial": ribbon.hilbert_poly(args.deg_l, ra.d)?.to_string(),
        "gr_class": gr.map(|g| g.to_string()),
    });
    report.checks.push(Check::new(
        "slope-coherence",
        s.verdict() == verdict,
        format!(
            "mu_ibar {} vs mu_f1 {}",
            format_ratio(&s.mu_ibar),
            format_ratio(&s.mu_f1)
        ),
    ));
    Ok(report)
}

pub fn cmd_components(args: &RibbonArgs) -> Result<Report> {
    let ribbon = RibbonInvariants::new(args.g, args.gbar)?;
    let table = component_table(&ribbon, args.d);
    let mut report = Report::new("components", ribbon_params(args));

    let components: Vec<Value> = table
        .glb_components
        .iter()
        .map(|c| json!({"generic": format_partition(&c.indices), "dim": c.dim}))
        .collect();
    let vb = match table.vb_component {
        VbComponent::Exists { dim } => json!({"status": "exists", "dim": dim}),
        VbComponent::NotExists => json!({"status": "absent"}),
        VbComponent::Unknown => json!({"status": "unknown"}),
    };
    let special = table.special_case.map(|s| match s {
        SpecialCase::Irreducible { dim } => json!({"shape": "irreducible", "dim": dim}),
        SpecialCase::Empty => json!({"shape": "empty"}),
    });
    report.result = json!({
        "glb_components": components,
        "vb_component": vb,
        "special_case": special,
        "component_count": table.component_count(),
        "jacobian_dim": ribbon.jacobian_dim().to_string(),
    });
    if table.special_case.is_none() {
        let want = glb_component_count(&ribbon, args.d);
        let got = table.glb_components.len() as i64;
        report.checks.push(Check::new(
            "closed-form-count",
            got == want,
            format!("{got} (expected {want})"),
        ));
    }
    Ok(report)
}

pub fn cmd_strata(args: &StrataArgs) -> Result<Report> {
    let ra = args.ribbon;
    let ribbon = RibbonInvariants::new(ra.g, ra.gbar)?;
    let mut params = ribbon_params(&ra);
    params["semistable"] = json!(args.semistable);
    params["dot"] = json!(args.dot.as_ref().map(|p| p.display().to_string()));
    let mut report = Report::new("strata", params);

    let strata = enumerate_strata(&ribbon, ra.d, args.semistable);
    let graph = stratification_graph(&ribbon, ra.d);
    let listed: Vec<Value> = strata
        .iter()
        .map(|s| {
            json!({
                "indices": format_partition(&s.indices),
                "dim": s.dim,
                "stability": s.stability.as_str(),
            })
        })
        .collect();
    let boundary: Vec<&str> = graph
        .nodes
        .iter()
        .filter(|n| !matches!(n.kind, crate::moduli::NodeKind::Stratum(_)))
        .map(|n| n.label.as_str())
        .collect();
    report.result = json!({
        "strata": listed,
        "graph": {
            "nodes": graph.nodes.len(),
            "edges": graph.edges.len(),
            "boundary": boundary,
            "connected": graph.is_connected(),
        },
    });

    let bad: Vec<String> = strata
        .iter()
        .filter(|s| s.dim != stratum_dim(ra.g, &s.indices) || (ra.d - s.index()).rem_euclid(2) != 0)
        .map(|s| s.label())
        .collect();
    report.checks.push(Check::new(
        "dimension-and-parity",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} strata", strata.len())
        } else {
            bad.join(" ")
        },
    ));
    if !graph.is_empty() {
        report.checks.push(Check::new(
            "connected",
            graph.is_connected(),
            format!("{} nodes, {} edges", graph.nodes.len(), graph.edges.len()),
        ));
    }

    if let Some(path) = &args.dot {
        fs::write(path, graph.to_dot())
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(report)
}

fn dim_report(
    command: &str,
    args: &TruncArgs,
    expected: usize,
    required: usize,
    dim: Result<usize>,
) -> Result<Report> {
    let trunc = args.trunc.unwrap_or(required);
    let mut report = Report::new(
        command,
        json!({"n": args.n, "prime": args.prime, "trunc": trunc}),
    );
    match dim {
        Ok(d) => {
            report.result = json!({"dim": d, "expected": expected});
            report.checks.push(Check::new(
                "dimension",
                d == expected,
                format!("{d} (expected {expected})"),
            ));
        }
        Err(e @ Error::NotStabilized { .. }) => {
            report.result = json!({"dim": Value::Null, "expected": expected});
            report
                .checks
                .push(Check::new("stabilized", false, e.to_string()));
        }
        Err(e) => return Err(e),
    }
    Ok(report)
}

fn deform_report(command: &str, r: DeformationReport) -> Report {
    let mut report = Report::new(command, json!({"b": r.b, "prime": r.p, "t": r.t}));
    report.result = json!({
        "family": r.family,
        "generic_fiber": r.generic_fiber,
        "special_fiber": r.special_fiber,
    });
    report.checks = r.checks;
    report
}

fn deform_parameter(args: &DeformArgs, seed: u64) -> i64 {
    args.t.unwrap_or_else(|| {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        sweep::random_unit(&mut rng, args.prime.max(2))
    })
}

pub fn cmd_verify(target: &VerifyTarget, seed: u64) -> Result<Report> {
    match target {
        VerifyTarget::Ext(a) => {
            let required = 4 * a.n + 4;
            let dim = ext1_dim(a.n, a.prime, a.trunc.unwrap_or(required));
            dim_report("verify ext", a, 2 * a.n, required, dim)
        }
        VerifyTarget::Endo(a) => {
            let required = 2 * a.n + 2;
            let dim = endo_quotient_dim(a.n, a.prime, a.trunc.unwrap_or(required));
            dim_report("verify endo", a, a.n, required, dim)
        }
        VerifyTarget::Deform1(a) => {
            let r = verify_deformation_i(a.b, a.prime, deform_parameter(a, seed))?;
            Ok(deform_report("verify deform1", r))
        }
        VerifyTarget::Deform2(a) => {
            let r = verify_deformation_ii(a.b, a.prime, deform_parameter(a, seed))?;
            Ok(deform_report("verify deform2", r))
        }
        VerifyTarget::Sweep(a) => {
            if a.threads == 0 {
                return Err(Error::InvalidArgument("threads must be positive".into()));
            }
            let mut report =
                Report::new("verify sweep", json!({"seed": seed, "threads": a.threads}));
            report.checks = sweep::run_sweep(seed, a.threads);
            let passed = report.checks.iter().filter(|c| c.pass).count();
            report.result = json!({"passed": passed, "total": report.checks.len()});
            Ok(report)
        }
    }
}

/// Runs a parsed command with the given seed.
pub fn execute(cli: &Cli, seed: u64) -> Result<Report> {
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::Classify(a) => cmd_classify(a)?,
        Command::Components(a) => cmd_components(a)?,
        Command::Strata(a) => cmd_strata(a)?,
        Command::Verify { target } => cmd_verify(target, seed)?,
    };
    report.ms = if cli.no_timing {
        0
    } else {
        start.elapsed().as_millis() as u64
    };
    Ok(report)
}

/// Exit code for a completed report.
pub fn exit_code(report: &Report) -> i32 {
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

/// Outcome of a full invocation: text for stdout and stderr plus exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run<I, T>(args: I, seed: u64) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            };
        }
    };
    let report = match execute(&cli, seed) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
                code: EXIT_INVALID,
            }
        }
    };
    let text = report.to_json_pretty();
    if let Some(path) = &cli.json {
        if let Err(e) = fs::write(path, &text) {
            return Outcome {
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
                code: EXIT_INVALID,
            };
        }
    }
    Outcome {
        stdout: text,
        stderr: String::new(),
        code: exit_code(&report),
    }
}
