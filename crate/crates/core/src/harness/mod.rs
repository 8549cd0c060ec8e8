//! Run configuration, verification recipes and their reports.

pub mod catalog;
pub mod recipes;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::enumerate::{EnumerationConfig, DEFAULT_ATOM_CAP, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::schurity::{SchurityConfig, DEFAULT_AUT_CAP};

pub use recipes::{run_recipe, RECIPES};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 10;
pub const EXIT_UNDECIDED: i32 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub atom_cap: usize,
    pub order_cap: usize,
    pub aut_cap: usize,
    /// Enumeration search nodes per call.
    pub node_budget: Option<u64>,
    /// Individualizations per automorphism-group call.
    pub aut_node_budget: Option<u64>,
    /// 0 lets rayon pick.
    pub jobs: usize,
    pub out_dir: PathBuf,
    pub formats: Vec<Format>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            atom_cap: DEFAULT_ATOM_CAP,
            order_cap: DEFAULT_ORDER_CAP,
            aut_cap: DEFAULT_AUT_CAP,
            node_budget: None,
            aut_node_budget: None,
            jobs: 0,
            out_dir: PathBuf::from("schurlab-out"),
            formats: vec![Format::Json, Format::Csv],
        }
    }
}

fn parse_budget(key: &str, v: &str) -> Result<Option<u64>> {
    if v == "none" {
        return Ok(None);
    }
    v.parse().map(Some).map_err(|_| Error::Parse(format!("{key}: expected a count or `none`, got `{v}`")))
}

fn parse_count(key: &str, v: &str) -> Result<usize> {
    v.parse().map_err(|_| Error::Parse(format!("{key}: expected a count, got `{v}`")))
}

impl RunConfig {
    /// Applies `key = value` lines on top of `self`; `#` starts a comment.
    pub fn merge_text(mut self, text: &str) -> Result<Self> {
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("line {}: expected key = value", no + 1)))?;
            self.set(key.trim(), value.trim())?;
        }
        Ok(self)
    }

    pub fn set(&mut self, key: &str, v: &str) -> Result<()> {
        match key {
            "atom-cap" => self.atom_cap = parse_count(key, v)?,
            "order-cap" => self.order_cap = parse_count(key, v)?,
            "aut-cap" => self.aut_cap = parse_count(key, v)?,
            "node-budget" => self.node_budget = parse_budget(key, v)?,
            "aut-node-budget" => self.aut_node_budget = parse_budget(key, v)?,
            "jobs" => self.jobs = parse_count(key, v)?,
            "out" => self.out_dir = PathBuf::from(v),
            "formats" => {
                self.formats = v
                    .split(',')
                    .map(|f| match f.trim() {
                        "json" => Ok(Format::Json),
                        "csv" => Ok(Format::Csv),
                        other => Err(Error::Parse(format!("formats: unknown format `{other}`"))),
                    })
                    .collect::<Result<_>>()?
            }
            other => return Err(Error::Parse(format!("unknown configuration key `{other}`"))),
        }
        Ok(())
    }

    pub fn load(self, path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        self.merge_text(&text)
    }

    /// Reads `SCHURLAB_JOBS` when set.
    pub fn merge_env(mut self) -> Result<Self> {
        if let Ok(v) = std::env::var("SCHURLAB_JOBS") {
            self.jobs = parse_count("SCHURLAB_JOBS", v.trim())?;
        }
        Ok(self)
    }

    /// Caps and budgets must be positive.
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("atom-cap", self.atom_cap), ("order-cap", self.order_cap), ("aut-cap", self.aut_cap)] {
            if v == 0 {
                return Err(Error::Parse(format!("{name} must be positive")));
            }
        }
        for (name, v) in [("node-budget", self.node_budget), ("aut-node-budget", self.aut_node_budget)] {
            if v == Some(0) {
                return Err(Error::Parse(format!("{name} must be positive")));
            }
        }
        if self.formats.is_empty() {
            return Err(Error::Parse("formats must name at least one format".into()));
        }
        Ok(())
    }

    /// Creates the output directory and checks that it accepts files.
    pub fn prepare_out_dir(&self) -> Result<&Path> {
        let io = |e: std::io::Error| Error::Io(format!("{}: {e}", self.out_dir.display()));
        fs::create_dir_all(&self.out_dir).map_err(io)?;
        let probe = self.out_dir.join(".schurlab-probe");
        fs::write(&probe, b"").map_err(io)?;
        fs::remove_file(&probe).map_err(io)?;
        Ok(&self.out_dir)
    }

    pub fn enumeration(&self) -> EnumerationConfig {
        EnumerationConfig {
            atom_cap: self.atom_cap,
            order_cap: self.order_cap,
            jobs: self.jobs,
            node_budget: self.node_budget,
        }
    }

    pub fn schurity(&self) -> SchurityConfig {
        SchurityConfig { aut_cap: self.aut_cap, node_budget: self.aut_node_budget }
    }

    /// Raises caps to at least the given values; recipes declare what they need.
    pub fn at_least(&self, atom_cap: usize, order_cap: usize, aut_cap: usize) -> RunConfig {
        RunConfig {
            atom_cap: self.atom_cap.max(atom_cap),
            order_cap: self.order_cap.max(order_cap),
            aut_cap: self.aut_cap.max(aut_cap),
            ..self.clone()
        }
    }

    pub fn to_map(&self) -> BTreeMap<String, String> {
        let budget = |b: Option<u64>| b.map_or("none".to_string(), |v| v.to_string());
        let formats: Vec<&str> = self
            .formats
            .iter()
            .map(|f| match f {
                Format::Json => "json",
                Format::Csv => "csv",
            })
            .collect();
        BTreeMap::from([
            ("atom-cap".to_string(), self.atom_cap.to_string()),
            ("order-cap".to_string(), self.order_cap.to_string()),
            ("aut-cap".to_string(), self.aut_cap.to_string()),
            ("node-budget".to_string(), budget(self.node_budget)),
            ("aut-node-budget".to_string(), budget(self.aut_node_budget)),
            ("jobs".to_string(), self.jobs.to_string()),
            ("out".to_string(), self.out_dir.display().to_string()),
            ("formats".to_string(), formats.join(",")),
        ])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Undecided,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
    pub seconds: f64,
}

impl Outcome {
    pub fn from_bool(ok: bool) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Undecided => "undecided",
        }
    }
}

impl Check {
    /// Runs `f`; cap and budget errors become undecided, other errors failures.
    pub fn run(name: impl Into<String>, f: impl FnOnce() -> Result<(Outcome, String)>) -> Check {
        let started = Instant::now();
        let (outcome, detail) = match f() {
            Ok(r) => r,
            Err(e @ (Error::CapExceeded { .. } | Error::BudgetExhausted(_))) => (Outcome::Undecided, e.to_string()),
            Err(e) => (Outcome::Fail, e.to_string()),
        };
        Check { name: name.into(), outcome, detail, seconds: started.elapsed().as_secs_f64() }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RecipeReport {
    pub recipe: String,
    pub version: String,
    pub config: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub wall_seconds: f64,
}

impl RecipeReport {
    pub fn outcome(&self) -> Outcome {
        if self.checks.iter().any(|c| c.outcome == Outcome::Fail) {
            Outcome::Fail
        } else if self.checks.iter().any(|c| c.outcome == Outcome::Undecided) {
            Outcome::Undecided
        } else {
            Outcome::Pass
        }
    }

    /// A failure outranks an undecided check.
    pub fn exit_code(&self) -> i32 {
        match self.outcome() {
            Outcome::Pass => EXIT_PASS,
            Outcome::Fail => EXIT_FAIL,
            Outcome::Undecided => EXIT_UNDECIDED,
        }
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))?;
        fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let mut w = csv::Writer::from_path(path).map_err(|e| Error::Io(e.to_string()))?;
        w.write_record(["check", "outcome", "seconds", "detail"]).map_err(|e| Error::Io(e.to_string()))?;
        for c in &self.checks {
            w.write_record([c.name.as_str(), c.outcome.as_str(), &format!("{:.3}", c.seconds), c.detail.as_str()])
                .map_err(|e| Error::Io(e.to_string()))?;
        }
        w.flush().map_err(|e| Error::Io(e.to_string()))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassInfo {
    pub size: usize,
    pub elements: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupInfo {
    pub spec: String,
    pub order: usize,
    pub abelian: bool,
    pub class_sizes: Vec<usize>,
    pub classes: Vec<ClassInfo>,
    pub center_order: usize,
    pub frattini_order: usize,
    /// Normal subgroups `H`, as element labels, for which `(G, H)` is a Camina pair.
    pub camina_kernels: Vec<Vec<String>>,
    /// Only meaningful for p-groups.
    pub maximal_cyclic: Option<bool>,
    /// For `dihedral:2n` with `n` even: the classes outside `<a>`.
    pub outside_classes: Option<Vec<ClassInfo>>,
}

pub fn group_info(g: &Arc<Group>) -> Result<GroupInfo> {
    let n = g.order();
    let label = |xs: &[usize]| xs.iter().map(|&x| g.label(x).to_string()).collect::<Vec<_>>();
    let mut classes = g.conjugacy_classes();
    classes.sort_by_key(|c| (c.len(), c[0]));
    let class_info: Vec<ClassInfo> = classes.iter().map(|c| ClassInfo { size: c.len(), elements: label(c) }).collect();
    let mut camina_kernels = Vec::new();
    for h in g.normal_subgroups()? {
        if h.order() > 1 && h.order() < n && g.is_camina_pair(&h)? {
            camina_kernels.push(label(h.elements()));
        }
    }
    let maximal_cyclic = match g.has_maximal_cyclic_subgroup() {
        Ok(v) => Some(v),
        Err(Error::NotPrimePower(_)) => None,
        Err(e) => return Err(e),
    };
    let outside_classes = (g.spec().starts_with("dihedral:") && n >= 8 && (n / 2).is_multiple_of(2)).then(|| {
        let a = Subgroup::from_sorted((0..n / 2).collect());
        class_info.iter().zip(&classes).filter(|(_, c)| !a.contains(c[0])).map(|(i, _)| i.clone()).collect()
    });
    Ok(GroupInfo {
        spec: g.spec().to_string(),
        order: n,
        abelian: g.is_abelian(),
        class_sizes: classes.iter().map(Vec::len).collect(),
        classes: class_info,
        center_order: g.center().order(),
        frattini_order: g.frattini()?.order(),
        camina_kernels,
        maximal_cyclic,
        outside_classes,
    })
}

#[cfg(test)]
mod tests;
