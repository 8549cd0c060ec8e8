//! Enumeration of S-rings coarsening a base S-ring.
//!
//! In central mode the atoms are the conjugacy classes, in all mode the singletons.
//! The search keeps a partition of the atoms into cells, each either fixed (a final
//! basic set) or open (a union of final basic sets), and keeps it stable under the
//! refinement of [`AtomRefiner`]. At each node the first open cell `C` is split by
//! choosing the basic set `Y ⊆ C` that contains its least atom; `Y = C` fixes `C`.
//! Every S-ring below the current partition has exactly one such `Y`, so the search
//! is complete and emits each S-ring once. Power maps `x -> x^m` with `m` coprime to
//! `|G|` permute the basic sets of every central S-ring and of every S-ring over an
//! abelian group; they are fed to the refiner and constrain `Y`.

use std::collections::HashMap;
use std::fs;
use std::path::Path;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{gcd, Group};
use crate::perm::PermGroup;
use crate::sring::{AtomRefiner, SRing, SRingDoc, SizeMultiset};

pub const DEFAULT_ATOM_CAP: usize = 24;
pub const DEFAULT_ORDER_CAP: usize = 25;
pub const BRUTE_FORCE_ATOM_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Central,
    All,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "central" => Ok(Mode::Central),
            "all" => Ok(Mode::All),
            other => Err(Error::Parse(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationConfig {
    pub atom_cap: usize,
    pub order_cap: usize,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    pub node_budget: Option<u64>,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig { atom_cap: DEFAULT_ATOM_CAP, order_cap: DEFAULT_ORDER_CAP, jobs: 0, node_budget: None }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
    pub wall_seconds: f64,
}

/// Per-member annotations; `schurian` stays empty until a schurity pass fills it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annotations {
    pub rank: usize,
    pub sizes: SizeMultiset,
    pub central: bool,
    pub primitive: Option<bool>,
    pub schurian: Option<String>,
    pub tags: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Member {
    pub sring: SRing,
    pub annotations: Annotations,
}

#[derive(Clone, Debug)]
pub struct EnumerationReport {
    pub group: Arc<Group>,
    pub mode: Mode,
    pub members: Vec<Member>,
    pub stats: SearchStats,
    /// `false` when the node budget ran out; the member list is then partial.
    pub complete: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MemberDoc {
    #[serde(flatten)]
    pub sring: SRingDoc,
    pub central: bool,
    pub primitive: Option<bool>,
    pub schurian: Option<String>,
    pub tags: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportDoc {
    #[serde(rename = "group-spec")]
    pub group_spec: String,
    pub order: usize,
    pub mode: Mode,
    pub complete: bool,
    pub count: usize,
    pub stats: SearchStats,
    pub members: Vec<MemberDoc>,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    index: usize,
    rank: usize,
    sizes: String,
    central: bool,
    primitive: &'a str,
    schurian: &'a str,
    tags: String,
}

impl EnumerationReport {
    fn new(group: Arc<Group>, mode: Mode, srings: Vec<SRing>, stats: SearchStats, complete: bool) -> Self {
        let members = srings
            .into_iter()
            .map(|s| Member { annotations: annotate(&s), sring: s })
            .collect();
        EnumerationReport { group, mode, members, stats, complete }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn srings(&self) -> impl Iterator<Item = &SRing> {
        self.members.iter().map(|m| &m.sring)
    }

    pub fn contains(&self, s: &SRing) -> bool {
        self.members.binary_search_by(|m| m.sring.blocks().cmp(s.blocks())).is_ok()
    }

    pub fn to_doc(&self) -> ReportDoc {
        ReportDoc {
            group_spec: self.group.spec().to_string(),
            order: self.group.order(),
            mode: self.mode,
            complete: self.complete,
            count: self.members.len(),
            stats: self.stats.clone(),
            members: self
                .members
                .iter()
                .map(|m| MemberDoc {
                    sring: m.sring.to_doc(),
                    central: m.annotations.central,
                    primitive: m.annotations.primitive,
                    schurian: m.annotations.schurian.clone(),
                    tags: m.annotations.tags.clone(),
                })
                .collect(),
        }
    }

    /// Rebuilds a report from its document, re-verifying every member.
    pub fn from_doc(g: &Arc<Group>, doc: &ReportDoc) -> Result<Self> {
        if doc.group_spec != g.spec() {
            return Err(Error::GroupMismatch);
        }
        let mut members = Vec::with_capacity(doc.members.len());
        for m in &doc.members {
            let sring = SRing::from_doc(g, &m.sring)?;
            let mut annotations = annotate(&sring);
            annotations.schurian = m.schurian.clone();
            if annotations.central != m.central || annotations.tags != m.tags {
                return Err(Error::Parse("member annotations disagree with the blocks".into()));
            }
            members.push(Member { sring, annotations });
        }
        Ok(EnumerationReport {
            group: g.clone(),
            mode: doc.mode,
            members,
            stats: doc.stats.clone(),
            complete: doc.complete,
        })
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        fs::write(path, serde_json::to_string_pretty(&self.to_doc())?)?;
        Ok(())
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let mut w = csv::Writer::from_path(path).map_err(|e| Error::Io(e.to_string()))?;
        for (index, m) in self.members.iter().enumerate() {
            let a = &m.annotations;
            let primitive = match a.primitive {
                Some(true) => "yes",
                Some(false) => "no",
                None => "",
            };
            w.serialize(CsvRow {
                index,
                rank: a.rank,
                sizes: a.sizes.to_string(),
                central: a.central,
                primitive,
                schurian: a.schurian.as_deref().unwrap_or(""),
                tags: a.tags.join(" "),
            })
            .map_err(|e| Error::Io(e.to_string()))?;
        }
        w.flush()?;
        Ok(())
    }
}

fn annotate(s: &SRing) -> Annotations {
    let mut tags = Vec::new();
    if let Ok(sections) = s.find_wreath_decompositions() {
        tags.extend(sections.iter().filter(|w| w.nontrivial).map(|w| format!("wreath:{w}")));
    }
    if s.group().spec().starts_with("dihedral:") && s.group().order() >= 6 && s.is_central() {
        if let Ok(tag) = s.dihedral_structure() {
            tags.push(tag.label());
        }
    }
    Annotations {
        rank: s.rank(),
        sizes: s.sizes(),
        central: s.is_central(),
        primitive: s.is_primitive().ok(),
        schurian: None,
        tags,
    }
}

/// Atom permutations induced by the power maps that every target S-ring respects.
fn power_maps(base: &SRing, use_all_units: bool) -> Vec<Vec<usize>> {
    let g = base.group();
    let n = g.order();
    let exponents: Vec<usize> = if use_all_units {
        (2..n).filter(|&m| gcd(m, n) == 1).collect()
    } else if n > 2 {
        vec![n - 1]
    } else {
        vec![]
    };
    let mut maps: Vec<Vec<usize>> = Vec::new();
    for m in exponents {
        let map: Vec<usize> =
            base.blocks().iter().map(|b| base.block_of(g.pow(b[0], m as i64))).collect();
        if map.iter().enumerate().any(|(i, &j)| i != j) && !maps.contains(&map) {
            maps.push(map);
        }
    }
    maps
}

/// Search state: a colour per atom and whether each atom lies in a fixed cell.
#[derive(Clone, Debug)]
struct State {
    cells: Vec<usize>,
    fixed: Vec<bool>,
}

struct Search<'a> {
    refiner: &'a AtomRefiner,
    inverse_maps: Vec<Vec<usize>>,
    budget: Option<u64>,
    nodes: &'a AtomicU64,
    exhausted: &'a AtomicBool,
}

#[derive(Default)]
struct Local {
    found: Vec<Vec<usize>>,
    prunes: u64,
}

impl<'a> Search<'a> {
    fn tick(&self) -> bool {
        let used = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(b) = self.budget {
            if used > b {
                self.exhausted.store(true, Ordering::Relaxed);
                return false;
            }
        }
        !self.exhausted.load(Ordering::Relaxed)
    }

    /// Refines and checks that no fixed cell was split.
    fn settle(&self, cells: &[usize], fixed: Vec<bool>) -> Option<State> {
        let refined = self.refiner.refine(cells);
        let mut image: HashMap<usize, usize> = HashMap::new();
        for a in 0..cells.len() {
            if fixed[a] && *image.entry(cells[a]).or_insert(refined[a]) != refined[a] {
                return None;
            }
        }
        Some(State { cells: refined, fixed })
    }

    /// Fixes cells forced by fixed cells: single atoms and images under the power maps.
    fn propagate(&self, mut state: State) -> Option<State> {
        loop {
            let k = state.cells.iter().max().map_or(0, |m| m + 1);
            let mut members: Vec<Vec<usize>> = vec![Vec::new(); k];
            for (a, &c) in state.cells.iter().enumerate() {
                members[c].push(a);
            }
            let mut changed = false;
            for cell in &members {
                if cell.len() == 1 && !state.fixed[cell[0]] {
                    state.fixed[cell[0]] = true;
                }
            }
            let fixed_cells: Vec<&Vec<usize>> = members.iter().filter(|c| state.fixed[c[0]]).collect();
            'outer: for cell in fixed_cells {
                for map in self.refiner.maps() {
                    let image: Vec<usize> = cell.iter().map(|&a| map[a]).collect();
                    let target = state.cells[image[0]];
                    if image.iter().any(|&a| state.cells[a] != target) {
                        return None;
                    }
                    if members[target].len() == image.len() {
                        if !state.fixed[image[0]] {
                            for &a in &image {
                                state.fixed[a] = true;
                            }
                        }
                        continue;
                    }
                    if state.fixed[image[0]] {
                        return None;
                    }
                    // the image is a basic set strictly inside an open cell: split it off
                    let fresh = k;
                    let mut cells = state.cells.clone();
                    let mut fixed = state.fixed.clone();
                    for &a in &image {
                        cells[a] = fresh;
                        fixed[a] = true;
                    }
                    state = self.settle(&cells, fixed)?;
                    changed = true;
                    break 'outer;
                }
            }
            if !changed {
                return Some(state);
            }
        }
    }

    /// Candidate basic sets `Y` with `x ∈ Y ⊆ cell`, respecting every power map:
    /// each map either fixes `Y` or moves it off itself.
    fn choices(&self, cell: &[usize]) -> Vec<Vec<usize>> {
        let x = cell[0];
        let maps = self.refiner.maps();
        let mut order: Vec<usize> = Vec::new();
        for m in maps {
            if cell.contains(&m[x]) && m[x] != x && !order.contains(&m[x]) {
                order.push(m[x]);
            }
        }
        for &a in &cell[1..] {
            if !order.contains(&a) {
                order.push(a);
            }
        }
        let n = self.refiner.atom_count();
        let mut status = vec![0u8; n]; // 0 unknown, 1 in, 2 out, 3 not in the cell
        for s in status.iter_mut() {
            *s = 3;
        }
        for &a in cell {
            status[a] = 0;
        }
        status[x] = 1;
        let mut out = Vec::new();
        self.choose(&order, 0, &mut status, x, &mut out);
        out
    }

    fn consistent(&self, status: &[u8], x: usize) -> bool {
        for (m, inv) in self.refiner.maps().iter().zip(&self.inverse_maps) {
            let mode = match status[m[x]] {
                1 => 1, // invariant
                2 | 3 => 2, // disjoint
                _ => continue,
            };
            for z in 0..status.len() {
                if status[z] != 1 {
                    continue;
                }
                let (fwd, back) = (status[m[z]], status[inv[z]]);
                if mode == 1 && (fwd >= 2 || back >= 2) {
                    return false;
                }
                if mode == 2 && (fwd == 1 || back == 1) {
                    return false;
                }
            }
            if mode == 1 {
                for z in 0..status.len() {
                    if status[z] == 2 && (status[m[z]] == 1 || status[inv[z]] == 1) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn choose(&self, order: &[usize], i: usize, status: &mut Vec<u8>, x: usize, out: &mut Vec<Vec<usize>>) {
        if !self.consistent(status, x) {
            return;
        }
        if i == order.len() {
            let mut y: Vec<usize> = (0..status.len()).filter(|&a| status[a] == 1).collect();
            y.sort_unstable();
            out.push(y);
            return;
        }
        for s in [1u8, 2u8] {
            status[order[i]] = s;
            self.choose(order, i + 1, status, x, out);
        }
        status[order[i]] = 0;
    }

    fn children(&self, state: &State, local: &mut Local) -> Option<Vec<State>> {
        let k = state.cells.iter().max().map_or(0, |m| m + 1);
        let open = (0..state.cells.len()).find(|&a| !state.fixed[a]);
        let Some(x) = open else {
            local.found.push(state.cells.clone());
            return None;
        };
        let c = state.cells[x];
        let cell: Vec<usize> = (0..state.cells.len()).filter(|&a| state.cells[a] == c).collect();
        let mut kids = Vec::new();
        for y in self.choices(&cell) {
            let mut cells = state.cells.clone();
            let mut fixed = state.fixed.clone();
            for &a in &y {
                cells[a] = k;
                fixed[a] = true;
            }
            match self.settle(&cells, fixed).and_then(|s| self.propagate(s)) {
                Some(s) => kids.push(s),
                None => local.prunes += 1,
            }
        }
        Some(kids)
    }

    fn dfs(&self, state: State, local: &mut Local) {
        if !self.tick() {
            return;
        }
        if let Some(kids) = self.children(&state, local) {
            for kid in kids {
                self.dfs(kid, local);
            }
        }
    }
}

fn run_search(base: &SRing, maps: Vec<Vec<usize>>, mode: Mode, config: &EnumerationConfig) -> Result<EnumerationReport> {
    let started = Instant::now();
    let g = base.group().clone();
    let refiner = AtomRefiner::new(base, maps);
    let inverse_maps = refiner
        .maps()
        .iter()
        .map(|m| {
            let mut inv = vec![0; m.len()];
            for (i, &j) in m.iter().enumerate() {
                inv[j] = i;
            }
            inv
        })
        .collect();
    let nodes = AtomicU64::new(0);
    let exhausted = AtomicBool::new(false);
    let search = Search { refiner: &refiner, inverse_maps, budget: config.node_budget, nodes: &nodes, exhausted: &exhausted };

    let r = refiner.atom_count();
    let mut cells = vec![1usize; r];
    cells[0] = 0;
    let mut fixed = vec![false; r];
    fixed[0] = true;
    let root = search.settle(&cells, fixed).and_then(|s| search.propagate(s)).expect("root is consistent");

    let mut local = Local::default();
    search.tick();
    let kids = search.children(&root, &mut local).unwrap_or_default();
    let run = || {
        kids.into_par_iter()
            .map(|kid| {
                let mut l = Local::default();
                search.dfs(kid, &mut l);
                l
            })
            .collect::<Vec<Local>>()
    };
    let parts = if config.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(run)
    } else {
        run()
    };
    let mut prunes = local.prunes;
    let mut found = local.found;
    for p in parts {
        prunes += p.prunes;
        found.extend(p.found);
    }
    let mut srings = Vec::with_capacity(found.len());
    for cells in found {
        let s = SRing::from_partition(&g, refiner.blocks_of(&cells))
            .map_err(|e| Error::Falsified(format!("enumerator emitted a non-S-ring: {e}")))?;
        if mode == Mode::Central && !s.is_central() {
            return Err(Error::Falsified("enumerator emitted a non-central S-ring".into()));
        }
        srings.push(s);
    }
    srings.sort_by(|a, b| a.blocks().cmp(b.blocks()));
    srings.dedup();
    let stats = SearchStats {
        nodes: nodes.load(Ordering::Relaxed),
        prunes,
        wall_seconds: started.elapsed().as_secs_f64(),
    };
    Ok(EnumerationReport::new(g, mode, srings, stats, !exhausted.load(Ordering::Relaxed)))
}

/// All central S-rings over `g`: coarsenings of the class partition.
pub fn enumerate_central(g: &Arc<Group>, config: &EnumerationConfig) -> Result<EnumerationReport> {
    let base = SRing::center_sring(g);
    if base.rank() > config.atom_cap {
        return Err(Error::CapExceeded { what: "conjugacy classes", size: base.rank(), cap: config.atom_cap });
    }
    let maps = power_maps(&base, true);
    run_search(&base, maps, Mode::Central, config)
}

/// All S-rings over `g`: coarsenings of `ZG`.
pub fn enumerate_all(g: &Arc<Group>, config: &EnumerationConfig) -> Result<EnumerationReport> {
    if g.order() > config.order_cap {
        return Err(Error::CapExceeded { what: "group order", size: g.order(), cap: config.order_cap });
    }
    let base = SRing::full(g);
    let maps = power_maps(&base, g.is_abelian());
    run_search(&base, maps, Mode::All, config)
}

pub fn enumerate(g: &Arc<Group>, mode: Mode, config: &EnumerationConfig) -> Result<EnumerationReport> {
    match mode {
        Mode::Central => enumerate_central(g, config),
        Mode::All => enumerate_all(g, config),
    }
}

/// Oracle: tests every set partition of the atoms.
pub fn brute_force_partitions(g: &Arc<Group>, mode: Mode) -> Result<EnumerationReport> {
    let started = Instant::now();
    let base = match mode {
        Mode::Central => SRing::center_sring(g),
        Mode::All => SRing::full(g),
    };
    let atoms = base.blocks().to_vec();
    if atoms.len() > BRUTE_FORCE_ATOM_CAP {
        return Err(Error::CapExceeded { what: "brute-force atoms", size: atoms.len(), cap: BRUTE_FORCE_ATOM_CAP });
    }
    let mut labels = vec![0usize; atoms.len()];
    let mut srings = Vec::new();
    let mut tested = 0u64;
    // restricted growth strings enumerate each set partition once
    fn next(labels: &mut [usize]) -> bool {
        for i in (1..labels.len()).rev() {
            let bound = labels[..i].iter().max().copied().unwrap_or(0) + 1;
            if labels[i] < bound {
                labels[i] += 1;
                for l in labels[i + 1..].iter_mut() {
                    *l = 0;
                }
                return true;
            }
        }
        false
    }
    loop {
        tested += 1;
        let k = labels.iter().max().copied().unwrap_or(0) + 1;
        let mut blocks = vec![Vec::new(); k];
        for (a, &l) in labels.iter().enumerate() {
            blocks[l].extend_from_slice(&atoms[a]);
        }
        if let Ok(s) = SRing::from_partition(g, blocks) {
            srings.push(s);
        }
        if !next(&mut labels) {
            break;
        }
    }
    srings.sort_by(|a, b| a.blocks().cmp(b.blocks()));
    let stats = SearchStats { nodes: tested, prunes: 0, wall_seconds: started.elapsed().as_secs_f64() };
    Ok(EnumerationReport::new(g.clone(), mode, srings, stats, true))
}

/// `cyc(K, G)`: orbits of a group of automorphisms.
pub fn cyclotomic(g: &Arc<Group>, k: &PermGroup) -> Result<SRing> {
    let n = g.order();
    if k.degree() != n {
        return Err(Error::DegreeMismatch { expected: n, got: k.degree() });
    }
    for p in k.generators() {
        let hom = (0..n).all(|x| (0..n).all(|y| p.apply(g.mul(x, y)) == g.mul(p.apply(x), p.apply(y))));
        if !hom || p.apply(0) != 0 {
            return Err(Error::NotAnAutomorphism(format!("{p:?}")));
        }
    }
    SRing::from_partition(g, k.orbits())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;

    fn group(spec: &str) -> Arc<Group> {
        Arc::new(build_group(spec).unwrap())
    }

    fn cfg() -> EnumerationConfig {
        EnumerationConfig::default()
    }

    #[test]
    fn small_cyclic_counts() {
        let c2 = enumerate_all(&group("cyclic:2"), &cfg()).unwrap();
        assert_eq!(c2.len(), 1);
        let c4 = enumerate_all(&group("cyclic:4"), &cfg()).unwrap();
        let blocks: Vec<Vec<Vec<usize>>> = c4.srings().map(|s| s.blocks().to_vec()).collect();
        assert_eq!(
            blocks,
            vec![
                vec![vec![0], vec![1], vec![2], vec![3]],
                vec![vec![0], vec![1, 2, 3]],
                vec![vec![0], vec![1, 3], vec![2]],
            ]
        );
    }

    #[test]
    fn agrees_with_brute_force() {
        for spec in ["cyclic:4", "cyclic:6", "elemabelian:2^2", "cyclic:7", "elemabelian:2^3"] {
            let g = group(spec);
            let fast: Vec<SRing> = enumerate_all(&g, &cfg()).unwrap().srings().cloned().collect();
            let slow: Vec<SRing> = brute_force_partitions(&g, Mode::All).unwrap().srings().cloned().collect();
            assert_eq!(fast, slow, "{spec}");
        }
        for spec in ["dihedral:6", "dihedral:8", "quaternion:8", "frobenius:7:3", "A4", "A5"] {
            let g = group(spec);
            let fast: Vec<SRing> = enumerate_central(&g, &cfg()).unwrap().srings().cloned().collect();
            let slow: Vec<SRing> = brute_force_partitions(&g, Mode::Central).unwrap().srings().cloned().collect();
            assert_eq!(fast, slow, "{spec}");
        }
    }

    #[test]
    fn bell_number_guard() {
        let g = group("cyclic:8");
        assert_eq!(brute_force_partitions(&g, Mode::All).unwrap().stats.nodes, 4140);
        assert!(brute_force_partitions(&group("cyclic:9"), Mode::All).is_err());
    }

    #[test]
    fn reports_contain_extremes() {
        let g = group("A4");
        let r = enumerate_central(&g, &cfg()).unwrap();
        assert!(r.contains(&SRing::trivial(&g)));
        assert!(r.contains(&SRing::center_sring(&g)));
        assert!(r.complete);
    }

    #[test]
    fn cyclotomic_rings() {
        let c4 = group("cyclic:4");
        assert_eq!(cyclotomic(&c4, &PermGroup::trivial(4)).unwrap(), SRing::full(&c4));
        let aut = c4.automorphism_group().unwrap();
        assert_eq!(cyclotomic(&c4, &aut).unwrap().blocks(), &[vec![0], vec![1, 3], vec![2]]);
        let a5 = group("A5");
        let s = cyclotomic(&a5, &a5.automorphism_group().unwrap()).unwrap();
        assert_eq!(s.sizes(), SizeMultiset(vec![1, 15, 20, 24]));
        let shift = crate::perm::Perm::from_fn(4, |x| (x + 1) % 4);
        assert!(cyclotomic(&c4, &PermGroup::new(4, vec![shift])).is_err());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = group("elemabelian:2^4");
        let config = EnumerationConfig { node_budget: Some(3), ..cfg() };
        let r = enumerate_all(&g, &config).unwrap();
        assert!(!r.complete);
    }

    #[test]
    fn report_round_trip() {
        let g = group("dihedral:8");
        let r = enumerate_central(&g, &cfg()).unwrap();
        let json = serde_json::to_string(&r.to_doc()).unwrap();
        let doc: ReportDoc = serde_json::from_str(&json).unwrap();
        let back = EnumerationReport::from_doc(&g, &doc).unwrap();
        assert_eq!(back.len(), r.len());
        assert!(back.srings().zip(r.srings()).all(|(a, b)| a == b));
        let dir = tempfile::tempdir().unwrap();
        r.write_csv(&dir.path().join("r.csv")).unwrap();
        let text = fs::read_to_string(dir.path().join("r.csv")).unwrap();
        assert_eq!(text.lines().count(), r.len() + 1);
    }

    #[test]
    fn job_count_does_not_change_output() {
        let g = group("dihedral:12");
        let one = enumerate_central(&g, &EnumerationConfig { jobs: 1, ..cfg() }).unwrap();
        let four = enumerate_central(&g, &EnumerationConfig { jobs: 4, ..cfg() }).unwrap();
        assert!(one.srings().eq(four.srings()));
    }
}
