//! Automorphism groups of S-rings and the schurity decision.
//!
//! `Aut(A)` is the group of colour-preserving permutations of the coloured Cayley digraph
//! of `A`. It always contains `G_r`, so it is `G_r` times the stabilizer of the identity,
//! and only the stabilizer is searched for. `A` is schurian exactly when the orbits of
//! that stabilizer are the basic sets.

mod search;

use std::sync::Arc;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::{enumerate_all, enumerate_central, EnumerationConfig, EnumerationReport};
use crate::error::{Error, Result};
use crate::group::{factorize, find_isomorphism, Group};
use crate::perm::{right_regular, Perm, PermGroup};
use crate::sring::{canonical_partition, SRing};

pub const DEFAULT_AUT_CAP: usize = 128;

#[derive(Clone, Debug)]
pub struct SchurityConfig {
    pub aut_cap: usize,
    /// Individualizations allowed per call; `None` is unbounded.
    pub node_budget: Option<u64>,
}

impl Default for SchurityConfig {
    fn default() -> Self {
        SchurityConfig { aut_cap: DEFAULT_AUT_CAP, node_budget: None }
    }
}

/// Arc `(g, h)` carries the index of the basic set containing `h g^-1`.
#[derive(Clone, Debug)]
pub struct ColorGraph {
    n: usize,
    rank: usize,
    col: Vec<u32>,
}

impl ColorGraph {
    pub fn new(a: &SRing) -> Self {
        let g = a.group();
        let n = g.order();
        let mut col = vec![0u32; n * n];
        for x in 0..n {
            let xi = g.inv(x);
            for y in 0..n {
                col[x * n + y] = a.block_of(g.mul(y, xi)) as u32;
            }
        }
        ColorGraph { n, rank: a.rank(), col }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn color(&self, g: usize, h: usize) -> usize {
        self.col[g * self.n + h] as usize
    }

    fn row(&self, g: usize) -> &[u32] {
        &self.col[g * self.n..(g + 1) * self.n]
    }

    pub fn preserves(&self, p: &Perm) -> bool {
        p.degree() == self.n
            && (0..self.n).all(|g| (0..self.n).all(|h| self.color(g, h) == self.color(p.apply(g), p.apply(h))))
    }
}

#[derive(Clone, Debug)]
pub struct SRingAutomorphisms {
    /// Generated by `G_r` and `stabilizer`.
    pub group: PermGroup,
    pub order: BigUint,
    /// Generators of the stabilizer of the identity element.
    pub stabilizer: Vec<Perm>,
    pub nodes: u64,
}

/// `Aut(A)`; fails with `BudgetExhausted` when the search runs past the node budget.
pub fn automorphism_group(a: &SRing, config: &SchurityConfig) -> Result<SRingAutomorphisms> {
    let n = a.group().order();
    if n > config.aut_cap {
        return Err(Error::CapExceeded { what: "group order for Aut(A)", size: n, cap: config.aut_cap });
    }
    let graph = ColorGraph::new(a);
    let mut searcher = search::Searcher::new(&graph, config.node_budget);
    let outcome = searcher
        .stabilizer_of_zero()
        .ok_or(Error::BudgetExhausted(config.node_budget.unwrap_or(0)))?;
    let mut generators: Vec<Perm> = right_regular(a.group()).generators().to_vec();
    generators.extend(outcome.generators.iter().cloned());
    Ok(SRingAutomorphisms {
        group: PermGroup::new(n, generators),
        order: outcome.order * BigUint::from(n),
        stabilizer: outcome.generators,
        nodes: outcome.nodes,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Schurian,
    Nonschurian,
    Undecided,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Schurian => "schurian",
            Verdict::Nonschurian => "nonschurian",
            Verdict::Undecided => "undecided",
        }
    }
}

/// A basic set together with an orbit of `Aut(A)_e` strictly inside it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub basic_set: Vec<usize>,
    pub orbit: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SchurityCertificate {
    pub verdict: Verdict,
    #[serde(rename = "group-spec")]
    pub group_spec: String,
    pub blocks: Vec<Vec<usize>>,
    /// Decimal, absent when undecided.
    pub aut_order: Option<String>,
    /// Generators of `Aut(A)`: those of `G_r` first, then the stabilizer.
    pub generators: Vec<Perm>,
    /// Orbits of `Aut(A)_e`; equal to `blocks` exactly when schurian.
    pub orbits: Vec<Vec<usize>>,
    pub witness: Option<Witness>,
    pub nodes: u64,
}

fn decide(a: &SRing, orbits: Vec<Vec<usize>>) -> (Verdict, Option<Witness>) {
    if orbits.as_slice() == a.blocks() {
        return (Verdict::Schurian, None);
    }
    let witness = orbits.iter().find_map(|o| {
        let block = a.block(a.block_of(o[0]));
        (o.len() < block.len()).then(|| Witness { basic_set: block.to_vec(), orbit: o.clone() })
    });
    (Verdict::Nonschurian, witness)
}

pub fn is_schurian(a: &SRing, config: &SchurityConfig) -> Result<SchurityCertificate> {
    let aut = match automorphism_group(a, config) {
        Ok(aut) => aut,
        Err(Error::BudgetExhausted(nodes)) => {
            return Ok(SchurityCertificate {
                verdict: Verdict::Undecided,
                group_spec: a.group().spec().to_string(),
                blocks: a.blocks().to_vec(),
                aut_order: None,
                generators: vec![],
                orbits: vec![],
                witness: None,
                nodes,
            })
        }
        Err(e) => return Err(e),
    };
    // recomputed from the generators rather than read off the search tree
    let orbits = canonical_partition(aut.group.stabilizer_orbits(0));
    let (verdict, witness) = decide(a, orbits.clone());
    Ok(SchurityCertificate {
        verdict,
        group_spec: a.group().spec().to_string(),
        blocks: a.blocks().to_vec(),
        aut_order: Some(aut.order.to_string()),
        generators: aut.group.generators().to_vec(),
        orbits,
        witness,
        nodes: aut.nodes,
    })
}

/// Replays a certificate against `a`: every generator preserves colours, `G_r` is
/// contained, the stated order and orbits are reproduced, and the verdict follows.
/// Completeness of the generator list is not something a replay can check.
pub fn verify_certificate(cert: &SchurityCertificate, a: &SRing) -> Result<()> {
    let bad = |why: &str| Err(Error::Falsified(format!("certificate: {why}")));
    if cert.blocks.as_slice() != a.blocks() {
        return bad("blocks differ from the S-ring");
    }
    if cert.verdict == Verdict::Undecided {
        return Err(Error::NotApplicable("undecided certificates carry no claim".into()));
    }
    let n = a.group().order();
    let graph = ColorGraph::new(a);
    if let Some(p) = cert.generators.iter().find(|p| !graph.preserves(p)) {
        return bad(&format!("generator {:?} does not preserve colours", p.images()));
    }
    let k = PermGroup::new(n, cert.generators.clone());
    if !right_regular(a.group()).generators().iter().all(|r| k.contains(r)) {
        return bad("right regular representation missing");
    }
    if cert.aut_order.as_deref() != Some(k.order().to_string().as_str()) {
        return bad("stated order differs from the generated group");
    }
    let orbits = canonical_partition(k.stabilizer_orbits(0));
    if orbits != cert.orbits {
        return bad("stated orbits differ from the replayed ones");
    }
    let (verdict, _) = decide(a, orbits.clone());
    if verdict != cert.verdict {
        return bad("verdict does not follow from the orbits");
    }
    if let Some(w) = &cert.witness {
        let valid = orbits.contains(&w.orbit)
            && a.blocks().contains(&w.basic_set)
            && w.orbit.len() < w.basic_set.len()
            && w.orbit.iter().all(|x| w.basic_set.contains(x));
        if !valid {
            return bad("witness orbit is not strictly inside a basic set");
        }
    } else if verdict == Verdict::Nonschurian {
        return bad("nonschurian verdict without a witness");
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decision {
    Yes,
    No,
    Undecided,
}

impl Decision {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Decision::Yes => Some(true),
            Decision::No => Some(false),
            Decision::Undecided => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub decision: Decision,
    /// Members annotated with `schurian = schurian | nonschurian | undecided`.
    pub report: EnumerationReport,
    /// One certificate per member, in member order.
    pub certificates: Vec<SchurityCertificate>,
}

impl SweepOutcome {
    pub fn nonschurian(&self) -> impl Iterator<Item = &SchurityCertificate> {
        self.certificates.iter().filter(|c| c.verdict == Verdict::Nonschurian)
    }
}

fn sweep(mut report: EnumerationReport, enumeration: &EnumerationConfig, config: &SchurityConfig) -> Result<SweepOutcome> {
    let run = || report.members.par_iter().map(|m| is_schurian(&m.sring, config)).collect::<Result<Vec<_>>>();
    let certificates = if enumeration.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(enumeration.jobs)
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(run)?
    } else {
        run()?
    };
    for (m, c) in report.members.iter_mut().zip(&certificates) {
        m.annotations.schurian = Some(c.verdict.as_str().to_string());
    }
    // a single nonschurian member settles the question even if the sweep is partial
    let decision = if certificates.iter().any(|c| c.verdict == Verdict::Nonschurian) {
        Decision::No
    } else if !report.complete || certificates.iter().any(|c| c.verdict == Verdict::Undecided) {
        Decision::Undecided
    } else {
        Decision::Yes
    };
    Ok(SweepOutcome { decision, report, certificates })
}

/// Whether every central S-ring over `g` is schurian.
pub fn is_generalized_schur(g: &Arc<Group>, enumeration: &EnumerationConfig, config: &SchurityConfig) -> Result<SweepOutcome> {
    sweep(enumerate_central(g, enumeration)?, enumeration, config)
}

/// Whether every S-ring over `g` is schurian.
pub fn is_schur_group(g: &Arc<Group>, enumeration: &EnumerationConfig, config: &SchurityConfig) -> Result<SweepOutcome> {
    sweep(enumerate_all(g, enumeration)?, enumeration, config)
}

/// Moves `a` to an S-ring over `h` along a regular subgroup `r` of `Aut(a)`: the point
/// `x` is identified with the unique `r_x` in `r` taking the identity to `x`, and then
/// with its image under an isomorphism `r -> h`.
pub fn regular_subgroup_transfer(a: &SRing, r: &PermGroup, h: &Arc<Group>) -> Result<SRing> {
    let n = a.group().order();
    if r.degree() != n {
        return Err(Error::DegreeMismatch { expected: n, got: r.degree() });
    }
    if !r.is_regular() {
        return Err(Error::NotRegular);
    }
    let graph = ColorGraph::new(a);
    if !r.generators().iter().all(|p| graph.preserves(p)) {
        return Err(Error::NotInAutomorphismGroup);
    }
    let mut by_point: Vec<Option<Perm>> = vec![None; n];
    for p in r.elements() {
        let x = p.apply(0);
        by_point[x] = Some(p);
    }
    let by_point: Vec<Perm> = by_point.into_iter().map(|p| p.expect("regular")).collect();
    // r_x r_y takes 0 to (x)r_y
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        for y in 0..n {
            table[x * n + y] = by_point[y].apply(x) as u32;
        }
    }
    let labels = (0..n).map(|x| format!("r{x}")).collect();
    let rg = Group::from_table(table, labels, "regular-subgroup")?;
    let phi = find_isomorphism(&rg, h).ok_or(Error::NoIsomorphism)?;
    let blocks = a.blocks().iter().map(|b| b.iter().map(|&x| phi[x]).collect()).collect();
    let image = SRing::from_partition(h, blocks)?;
    // the relabelling must carry coloured arcs to coloured arcs
    for x in 0..n {
        for y in 0..n {
            let mapped = image.block_of(h.mul(phi[y], h.inv(phi[x])));
            let expected = image.block_of(phi[a.block(graph.color(x, y))[0]]);
            if mapped != expected {
                return Err(Error::Falsified("transfer does not preserve arc colours".into()));
            }
        }
    }
    Ok(image)
}

/// Orders `n` for which the cyclic group of order `n` is Schur: `p^k`, `pq^k`,
/// `2pq^k`, `pqr`, `2pqr` with `p, q, r` distinct primes and `k >= 0`. The leading
/// factor 2 may coincide with one of `p, q, r`, so `36 = 2*2*3^2` and `60 = 2*2*3*5`
/// belong to the list.
pub fn cyclic_schur_family(n: u64) -> bool {
    assert!(n >= 1, "n must be positive");
    // p q^k with p != q and k >= 0
    fn pq_k(m: u64) -> bool {
        let f = factorize(m);
        f.len() <= 1 && f.iter().all(|&(_, e)| e == 1) || f.len() == 2 && f.iter().any(|&(_, e)| e == 1)
    }
    fn pqr(m: u64) -> bool {
        let f = factorize(m);
        f.len() == 3 && f.iter().all(|&(_, e)| e == 1)
    }
    let halves = |shape: fn(u64) -> bool| n.is_multiple_of(2) && shape(n / 2);
    factorize(n).len() <= 1 || pq_k(n) || pqr(n) || halves(pq_k) || halves(pqr)
}
