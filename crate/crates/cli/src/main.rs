use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use schurlab_core::enumerate::{enumerate, Mode, ReportDoc};
use schurlab_core::harness::{
    group_info, run_recipe, Format, RunConfig, EXIT_PASS, EXIT_UNDECIDED, RECIPES, VERSION,
};
use schurlab_core::schurity::{is_generalized_schur, is_schurian, Decision, SchurityCertificate, Verdict};
use schurlab_core::sring::SRingDoc;
use schurlab_core::{build_group, Error, Group, SRing};

/// Exit code for bad input or I/O trouble, distinct from the verdict codes.
const EXIT_ERROR: u8 = 1;

#[derive(Parser, Debug)]
#[command(name = "schurlab", version, about = "Central S-rings and schurity over small finite groups")]
struct Cli {
    /// key = value configuration file, applied before the flags below.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory for reports.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads; 0 lets the pool decide.
    #[arg(long, global = true, env = "SCHURLAB_JOBS")]
    jobs: Option<usize>,
    /// Node budget for the S-ring enumerator.
    #[arg(long, global = true)]
    node_budget: Option<u64>,
    /// Node budget for each automorphism search.
    #[arg(long, global = true)]
    aut_node_budget: Option<u64>,
    /// Largest number of atoms (conjugacy classes, or elements in `all` mode) to enumerate over.
    #[arg(long, global = true, alias = "cap-atoms")]
    atom_cap: Option<usize>,
    /// Largest group order handed to the enumerator.
    #[arg(long, global = true)]
    order_cap: Option<usize>,
    /// Largest group order handed to the automorphism search.
    #[arg(long, global = true)]
    aut_cap: Option<usize>,
    /// Comma-separated report formats: json, csv.
    #[arg(long, global = true)]
    formats: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Group invariants: classes, center, Frattini subgroup, Camina kernels.
    Group {
        spec: String,
        #[arg(value_parser = ["info"], default_value = "info")]
        action: String,
    },
    /// Enumerate central or all S-rings over a group.
    Enumerate {
        spec: String,
        #[arg(long, default_value = "central")]
        mode: Mode,
    },
    /// Schurity certificate for an S-ring or for every member of an enumeration report.
    Check { spec: String, file: PathBuf },
    /// Decide whether every central S-ring over the group is schurian.
    Gschur { spec: String },
    /// Run a verification recipe.
    Verify {
        #[arg(value_parser = RECIPES.to_vec())]
        recipe: String,
    },
}

/// Summary written by `gschur`.
#[derive(Debug, Serialize, Deserialize)]
struct GschurDoc {
    version: String,
    #[serde(rename = "group-spec")]
    group_spec: String,
    order: usize,
    /// "true", "false" or "undecided".
    verdict: String,
    complete: bool,
    members: usize,
    nonschurian: usize,
    undecided: usize,
    witness: Option<String>,
    config: std::collections::BTreeMap<String, String>,
    wall_seconds: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            // caps and budgets are undecided outcomes, not failures of the tool
            let undecided = matches!(
                e.downcast_ref::<Error>(),
                Some(Error::CapExceeded { .. } | Error::BudgetExhausted(_))
            );
            ExitCode::from(if undecided { EXIT_UNDECIDED as u8 } else { EXIT_ERROR })
        }
    }
}

fn config(cli: &Cli) -> anyhow::Result<RunConfig> {
    let mut c = RunConfig::default();
    if let Some(path) = &cli.config {
        c = c.load(path)?;
    }
    // clap already reads SCHURLAB_JOBS into `--jobs`
    if let Some(v) = cli.jobs {
        c.jobs = v;
    }
    if let Some(v) = &cli.out {
        c.out_dir = v.clone();
    }
    if let Some(v) = cli.node_budget {
        c.node_budget = Some(v);
    }
    if let Some(v) = cli.aut_node_budget {
        c.aut_node_budget = Some(v);
    }
    if let Some(v) = cli.order_cap {
        c.order_cap = v;
    }
    if let Some(v) = cli.aut_cap {
        c.aut_cap = v;
    }
    if let Some(v) = &cli.formats {
        c.set("formats", v)?;
    }
    if let Some(v) = cli.atom_cap {
        c.atom_cap = v;
    }
    c.validate()?;
    Ok(c)
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let cfg = config(&cli)?;
    match &cli.command {
        Command::Group { spec, .. } => {
            let g = Arc::new(build_group(spec)?);
            println!("{}", serde_json::to_string_pretty(&group_info(&g)?)?);
            Ok(EXIT_PASS)
        }
        Command::Enumerate { spec, mode } => cmd_enumerate(&cfg, spec, *mode),
        Command::Check { spec, file } => cmd_check(&cfg, spec, file),
        Command::Gschur { spec } => cmd_gschur(&cfg, spec),
        Command::Verify { recipe } => cmd_verify(&cfg, recipe),
    }
}

/// File-name stem for a group spec: `direct(cyclic:4,cyclic:2)` becomes `direct_cyclic_4_cyclic_2`.
fn slug(spec: &str) -> String {
    let s: String = spec.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    s.split('_').filter(|p| !p.is_empty()).collect::<Vec<_>>().join("_")
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> anyhow::Result<()> {
    fs::write(path, serde_json::to_string_pretty(value)?).with_context(|| path.display().to_string())?;
    println!("wrote {}", path.display());
    Ok(())
}

fn cmd_enumerate(cfg: &RunConfig, spec: &str, mode: Mode) -> anyhow::Result<i32> {
    let g = Arc::new(build_group(spec)?);
    let dir = cfg.prepare_out_dir()?;
    let report = enumerate(&g, mode, &cfg.enumeration())?;
    let stem = format!("{}-{}", slug(spec), if mode == Mode::Central { "central" } else { "all" });
    write_enumeration(cfg, dir, &stem, &report)?;
    println!(
        "{spec}: {} S-rings ({} nodes, {:.2}s){}",
        report.len(),
        report.stats.nodes,
        report.stats.wall_seconds,
        if report.complete { "" } else { "; node budget exhausted, list is partial" }
    );
    Ok(if report.complete { EXIT_PASS } else { EXIT_UNDECIDED })
}

fn write_enumeration(
    cfg: &RunConfig,
    dir: &Path,
    stem: &str,
    report: &schurlab_core::enumerate::EnumerationReport,
) -> anyhow::Result<()> {
    if cfg.formats.contains(&Format::Json) {
        let path = dir.join(format!("{stem}.json"));
        report.write_json(&path)?;
        println!("wrote {}", path.display());
    }
    if cfg.formats.contains(&Format::Csv) {
        let path = dir.join(format!("{stem}.csv"));
        report.write_csv(&path)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

/// Accepts either a single S-ring document or a whole enumeration report.
fn read_srings(g: &Arc<Group>, file: &Path) -> anyhow::Result<Vec<SRing>> {
    let text = fs::read_to_string(file).with_context(|| file.display().to_string())?;
    let value: serde_json::Value = serde_json::from_str(&text).with_context(|| file.display().to_string())?;
    if value.get("members").is_some() {
        let doc: ReportDoc = serde_json::from_value(value)?;
        return Ok(doc
            .members
            .iter()
            .map(|m| SRing::from_doc(g, &m.sring))
            .collect::<Result<Vec<_>, _>>()?);
    }
    let doc: SRingDoc = serde_json::from_value(value)?;
    Ok(vec![SRing::from_doc(g, &doc)?])
}

fn cmd_check(cfg: &RunConfig, spec: &str, file: &Path) -> anyhow::Result<i32> {
    let g = Arc::new(build_group(spec)?);
    let srings = read_srings(&g, file)?;
    if srings.is_empty() {
        bail!("{} holds no S-rings", file.display());
    }
    let dir = cfg.prepare_out_dir()?;
    let certificates = srings
        .iter()
        .map(|a| is_schurian(a, &cfg.schurity()))
        .collect::<Result<Vec<_>, _>>()?;
    for (i, c) in certificates.iter().enumerate() {
        println!("member {i}: rank {} {}", c.blocks.len(), c.verdict.as_str());
    }
    let stem = file.file_stem().and_then(|s| s.to_str()).unwrap_or("sring");
    let path = dir.join(format!("{stem}-certificate.json"));
    if certificates.len() == 1 {
        write_json(&path, &certificates[0])?;
    } else {
        write_json(&path, &certificates)?;
    }
    let undecided = certificates.iter().any(|c| c.verdict == Verdict::Undecided);
    Ok(if undecided { EXIT_UNDECIDED } else { EXIT_PASS })
}

fn cmd_gschur(cfg: &RunConfig, spec: &str) -> anyhow::Result<i32> {
    let start = Instant::now();
    let g = Arc::new(build_group(spec)?);
    let dir = cfg.prepare_out_dir()?.to_path_buf();
    let outcome = is_generalized_schur(&g, &cfg.enumeration(), &cfg.schurity())?;
    let stem = slug(spec);
    write_enumeration(cfg, &dir, &format!("{stem}-gschur-members"), &outcome.report)?;

    let witness: Option<&SchurityCertificate> = outcome.nonschurian().next();
    let witness_file = match witness {
        Some(c) => {
            let path = dir.join(format!("{stem}-witness.json"));
            write_json(&path, c)?;
            Some(path.display().to_string())
        }
        None => None,
    };
    let verdict = match outcome.decision {
        Decision::Yes => "true",
        Decision::No => "false",
        Decision::Undecided => "undecided",
    };
    let doc = GschurDoc {
        version: VERSION.to_string(),
        group_spec: spec.to_string(),
        order: g.order(),
        verdict: verdict.to_string(),
        complete: outcome.report.complete,
        members: outcome.report.len(),
        nonschurian: outcome.nonschurian().count(),
        undecided: outcome.certificates.iter().filter(|c| c.verdict == Verdict::Undecided).count(),
        witness: witness_file,
        config: cfg.to_map(),
        wall_seconds: start.elapsed().as_secs_f64(),
    };
    write_json(&dir.join(format!("{stem}-gschur.json")), &doc)?;
    println!(
        "{spec}: generalized Schur = {verdict} ({} central S-rings, {} nonschurian)",
        doc.members, doc.nonschurian
    );
    Ok(if outcome.decision == Decision::Undecided { EXIT_UNDECIDED } else { EXIT_PASS })
}

fn cmd_verify(cfg: &RunConfig, recipe: &str) -> anyhow::Result<i32> {
    let dir = cfg.prepare_out_dir()?.to_path_buf();
    let report = run_recipe(recipe, cfg)?;
    for c in &report.checks {
        println!("{:<9} {}  [{}]", c.outcome.as_str(), c.name, c.detail);
    }
    if cfg.formats.contains(&Format::Json) {
        let path = dir.join(format!("{recipe}.json"));
        report.write_json(&path)?;
        println!("wrote {}", path.display());
    }
    if cfg.formats.contains(&Format::Csv) {
        let path = dir.join(format!("{recipe}.csv"));
        report.write_csv(&path)?;
        println!("wrote {}", path.display());
    }
    let code = report.exit_code();
    println!("{recipe}: {} ({:.1}s)", report.outcome().as_str(), report.wall_seconds);
    Ok(code)
}
