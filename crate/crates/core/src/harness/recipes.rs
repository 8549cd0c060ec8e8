use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use std::time::Instant;

use rayon::prelude::*;

use super::catalog::{
    A5_EXCLUDED, CAMINA_GROUPS, MAXIMAL_CYCLIC_P_GROUPS, MEDIUM_GROUPS, PQ_GROUPS, SMALL_GROUPS,
};
use super::{Check, Outcome, RecipeReport, RunConfig, VERSION};
use crate::enumerate::{cyclotomic, enumerate_all, enumerate_central, EnumerationReport};
use crate::error::{Error, Result};
use crate::group::{build_group, gcd, Group, Subgroup};
use crate::schurity::{
    cyclic_schur_family, is_generalized_schur, is_schur_group, is_schurian, verify_certificate, Decision,
    SweepOutcome, Verdict,
};
use crate::sring::{SRing, SeparationVerdict, SizeMultiset};

pub const RECIPES: &[&str] =
    &["example1", "thm1-positive", "thm1-negative", "thm2-camina", "thm3-dihedral", "small-schur", "lemma-suite"];

pub fn run_recipe(name: &str, config: &RunConfig) -> Result<RecipeReport> {
    let started = Instant::now();
    let checks = match name {
        "example1" => example1(&config.at_least(24, 25, 128)),
        "thm1-positive" => thm1_positive(&config.at_least(32, 32, 128)),
        "thm1-negative" => thm1_negative(&config.at_least(25, 25, 128)),
        "thm2-camina" => thm2_camina(&config.at_least(24, 27, 128)),
        "thm3-dihedral" => thm3_dihedral(&config.at_least(24, 72, 128)),
        "small-schur" => small_schur(&config.at_least(24, 25, 128)),
        "lemma-suite" => lemma_suite(&config.at_least(32, 32, 128)),
        other => return Err(Error::NotApplicable(format!("unknown recipe `{other}`; known: {}", RECIPES.join(", ")))),
    };
    Ok(RecipeReport {
        recipe: name.to_string(),
        version: VERSION.to_string(),
        config: config.to_map(),
        checks,
        wall_seconds: started.elapsed().as_secs_f64(),
    })
}

fn group(spec: &str) -> Result<Arc<Group>> {
    Ok(Arc::new(build_group(spec)?))
}

fn decision_outcome(d: Decision, expected: bool) -> Outcome {
    match d.as_bool() {
        None => Outcome::Undecided,
        Some(v) => Outcome::from_bool(v == expected),
    }
}

fn sweep_detail(out: &SweepOutcome) -> String {
    format!(
        "{:?}: {} members{}, {} nonschurian",
        out.decision,
        out.report.members.len(),
        if out.report.complete { "" } else { " (partial)" },
        out.nonschurian().count()
    )
}

fn gschur_check(spec: &str, expected: bool, config: &RunConfig) -> Check {
    Check::run(format!("{spec}: generalized Schur = {expected}"), || {
        let out = is_generalized_schur(&group(spec)?, &config.enumeration(), &config.schurity())?;
        Ok((decision_outcome(out.decision, expected), sweep_detail(&out)))
    })
}

/// Primitive members with a largest basic set of size above 1 must have every
/// nontrivial basic set share a factor with it. `None` when the predicate does not apply.
pub fn coprime_predicate(a: &SRing) -> Result<Option<bool>> {
    let max = a.blocks().iter().map(Vec::len).max().unwrap_or(1);
    if max <= 1 || !a.is_primitive()? {
        return Ok(None);
    }
    Ok(Some(a.blocks()[1..].iter().all(|b| gcd(max, b.len()) > 1)))
}

/// Multiplication table and blocks.
type RingKey = (Vec<u32>, Vec<Vec<usize>>);

/// Per-group check over an enumeration: (holds, instances, detail).
type GroupCheck<'a> = &'a (dyn Fn(&Arc<Group>, &EnumerationReport) -> Result<(bool, usize, String)> + Sync);

/// Schurity verdicts memoised on (multiplication table, blocks).
#[derive(Default)]
pub(crate) struct SchurMemo {
    seen: Mutex<HashMap<RingKey, Verdict>>,
}

impl SchurMemo {
    pub fn verdict(&self, a: &SRing, config: &RunConfig) -> Result<Verdict> {
        let key = (a.group().table().to_vec(), a.blocks().to_vec());
        if let Some(v) = self.seen.lock().expect("memo lock").get(&key) {
            return Ok(*v);
        }
        let v = is_schurian(a, &config.schurity())?.verdict;
        if v == Verdict::Undecided {
            return Err(Error::BudgetExhausted(config.aut_node_budget.unwrap_or(0)));
        }
        self.seen.lock().expect("memo lock").insert(key, v);
        Ok(v)
    }
}

fn example1(config: &RunConfig) -> Vec<Check> {
    let mut checks = Vec::new();
    let a5 = match group("A5") {
        Ok(g) => g,
        Err(e) => return vec![Check::run("build A5", || Err(e))],
    };
    checks.push(Check::run("A5 class sizes are 1, 12, 12, 15, 20", || {
        let mut sizes: Vec<usize> = a5.conjugacy_classes().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        Ok((Outcome::from_bool(sizes == [1, 12, 12, 15, 20]), format!("{sizes:?}")))
    }));
    let started = Instant::now();
    let report = enumerate_central(&a5, &config.enumeration());
    let elapsed = started.elapsed().as_secs_f64();
    let with = |f: &dyn Fn(&EnumerationReport) -> Result<(Outcome, String)>| match &report {
        Ok(r) => f(r),
        Err(e) => Err(e.clone()),
    };
    checks.push(Check::run("central enumeration completes within 5 minutes", || {
        with(&|r| Ok((Outcome::from_bool(r.complete && elapsed < 300.0), format!("{} members in {elapsed:.2}s", r.len()))))
    }));
    checks.push(Check::run("member ranks lie in {2, 3, 4, 5}", || {
        with(&|r| {
            let ranks: Vec<usize> = r.srings().map(SRing::rank).collect();
            Ok((Outcome::from_bool(ranks.iter().all(|k| (2..=5).contains(k))), format!("ranks {ranks:?}")))
        })
    }));
    checks.push(Check::run("exactly one rank-4 member, sizes {1,15,20,24}, equal to cyc(Aut(A5), A5)", || {
        with(&|r| {
            let four: Vec<&SRing> = r.srings().filter(|s| s.rank() == 4).collect();
            let cyc = cyclotomic(&a5, &a5.automorphism_group()?)?;
            let ok = four.len() == 1
                && four[0].sizes() == SizeMultiset::new(vec![1, 15, 20, 24])
                && *four[0] == cyc;
            let sizes: Vec<String> = four.iter().map(|s| s.sizes().to_string()).collect();
            Ok((Outcome::from_bool(ok), format!("rank-4 members: {}", sizes.join(" "))))
        })
    }));
    checks.push(Check::run("none of the six excluded size multisets occurs", || {
        with(&|r| {
            let hits: Vec<String> = r
                .srings()
                .map(SRing::sizes)
                .filter(|s| A5_EXCLUDED.iter().any(|x| s.0 == *x))
                .map(|s| s.to_string())
                .collect();
            Ok((Outcome::from_bool(hits.is_empty()), format!("occurring: {hits:?}")))
        })
    }));
    checks.push(Check::run("every member is schurian and its certificate replays", || {
        with(&|r| {
            let mut undecided = 0;
            for s in r.srings() {
                let cert = is_schurian(s, &config.schurity())?;
                match cert.verdict {
                    Verdict::Undecided => undecided += 1,
                    Verdict::Nonschurian => return Ok((Outcome::Fail, format!("nonschurian: {:?}", s.blocks()))),
                    Verdict::Schurian => verify_certificate(&cert, s)?,
                }
            }
            let outcome = if undecided > 0 { Outcome::Undecided } else { Outcome::Pass };
            Ok((outcome, format!("{} members, {undecided} undecided", r.len())))
        })
    }));
    checks.push(Check::run("largest basic set shares a factor with every basic set (primitive members)", || {
        with(&|r| {
            let mut applied = 0;
            for s in r.srings() {
                match coprime_predicate(s)? {
                    Some(true) => applied += 1,
                    Some(false) => return Ok((Outcome::Fail, format!("violated by {}", s.sizes()))),
                    None => {}
                }
            }
            Ok((Outcome::Pass, format!("{applied} primitive members checked")))
        })
    }));
    checks
}

fn thm1_positive(config: &RunConfig) -> Vec<Check> {
    MAXIMAL_CYCLIC_P_GROUPS
        .par_iter()
        .map(|&spec| {
            vec![
                Check::run(format!("{spec}: has a maximal cyclic subgroup"), || {
                    let g = group(spec)?;
                    Ok((Outcome::from_bool(g.has_maximal_cyclic_subgroup()?), format!("order {}", g.order())))
                }),
                gschur_check(spec, true, config),
            ]
        })
        .collect::<Vec<_>>()
        .concat()
}

fn thm1_negative(config: &RunConfig) -> Vec<Check> {
    vec![Check::run("elemabelian:5^2: some S-ring is nonschurian, with a replayable certificate", || {
        let g = group("elemabelian:5^2")?;
        let out = is_schur_group(&g, &config.enumeration(), &config.schurity())?;
        let Some(cert) = out.nonschurian().next() else {
            return Ok((decision_outcome(out.decision, false), sweep_detail(&out)));
        };
        let member = out
            .report
            .srings()
            .find(|s| s.blocks() == cert.blocks.as_slice())
            .expect("certificate comes from a member");
        verify_certificate(cert, member)?;
        let w = cert.witness.as_ref().expect("nonschurian certificates carry a witness");
        Ok((
            Outcome::Pass,
            format!("{}; witness orbit of size {} inside a basic set of size {}", sweep_detail(&out), w.orbit.len(), w.basic_set.len()),
        ))
    })]
}

fn camina_kernels(g: &Group) -> Result<Vec<Subgroup>> {
    let n = g.order();
    let mut out = Vec::new();
    for h in g.normal_subgroups()? {
        if h.order() > 1 && h.order() < n && g.is_camina_pair(&h)? {
            out.push(h);
        }
    }
    Ok(out)
}

fn thm2_camina(config: &RunConfig) -> Vec<Check> {
    let mut checks: Vec<Check> = CAMINA_GROUPS
        .par_iter()
        .map(|&spec| {
            let decomposition = Check::run(format!("{spec}: every central S-ring is a double wreath over each Camina kernel"), || {
                let g = group(spec)?;
                let kernels = camina_kernels(&g)?;
                if kernels.is_empty() {
                    return Ok((Outcome::Fail, "no Camina kernel found".into()));
                }
                let report = enumerate_central(&g, &config.enumeration())?;
                if !report.complete {
                    return Ok((Outcome::Undecided, "enumeration budget exhausted".into()));
                }
                for h in &kernels {
                    for s in report.srings() {
                        s.camina_decomposition(h)?;
                    }
                }
                Ok((Outcome::Pass, format!("{} kernels, {} central S-rings", kernels.len(), report.len())))
            });
            let heredity = Check::run(format!("{spec}: H and G/H generalized Schur imply G generalized Schur"), || {
                let g = group(spec)?;
                let gs = |x: &Arc<Group>| -> Result<Decision> {
                    Ok(is_generalized_schur(x, &config.enumeration(), &config.schurity())?.decision)
                };
                let whole = gs(&g)?;
                let mut notes = Vec::new();
                for h in camina_kernels(&g)? {
                    let sub = g.section(&h, &Subgroup::trivial())?;
                    let quo = g.quotient_group(&h)?;
                    let (dh, dq) = (gs(sub.quotient())?, gs(quo.quotient())?);
                    notes.push(format!("|H| = {}: H {:?}, G/H {:?}", h.order(), dh, dq));
                    if dh == Decision::Yes && dq == Decision::Yes && whole != Decision::Yes {
                        let outcome = if whole == Decision::Undecided { Outcome::Undecided } else { Outcome::Fail };
                        return Ok((outcome, format!("G is {whole:?}; {}", notes.join("; "))));
                    }
                }
                Ok((Outcome::Pass, format!("G {whole:?}; {}", notes.join("; "))))
            });
            vec![decomposition, heredity]
        })
        .collect::<Vec<_>>()
        .concat();
    checks.extend(PQ_GROUPS.par_iter().map(|&spec| gschur_check(spec, true, config)).collect::<Vec<_>>());
    checks
}

fn thm3_dihedral(config: &RunConfig) -> Vec<Check> {
    let ns: Vec<u64> = (3..=16).chain([36]).collect();
    ns.par_iter()
        .map(|&n| {
            let spec = format!("dihedral:{}", 2 * n);
            let family = cyclic_schur_family(n);
            let verdict = Check::run(format!("{spec}: generalized Schur = cyclic_schur_family({n}) = {family}"), || {
                let out = is_generalized_schur(&group(&spec)?, &config.enumeration(), &config.schurity())?;
                Ok((decision_outcome(out.decision, family), sweep_detail(&out)))
            });
            let mut checks = vec![verdict];
            if n <= 16 {
                checks.push(Check::run(format!("{spec}: every central member fits a dihedral wreath branch"), || {
                    let report = enumerate_central(&group(&spec)?, &config.enumeration())?;
                    let mut tally: HashMap<String, usize> = HashMap::new();
                    let mut unclassified = Vec::new();
                    for s in report.srings() {
                        match s.dihedral_structure() {
                            Ok(tag) => {
                                let kind = tag.label().trim_end_matches(char::is_numeric).to_string();
                                *tally.entry(kind).or_default() += 1;
                            }
                            Err(Error::Falsified(_)) => unclassified.push(s),
                            Err(e) => return Err(e),
                        }
                    }
                    let mut parts: Vec<String> = tally.into_iter().map(|(k, v)| format!("{k}: {v}")).collect();
                    parts.sort();
                    if let Some(first) = unclassified.first() {
                        // record whether the stray members still satisfy the proposition the branches serve
                        let schurian = unclassified
                            .iter()
                            .map(|s| Ok(is_schurian(s, &config.schurity())?.verdict == Verdict::Schurian))
                            .collect::<Result<Vec<bool>>>()?;
                        parts.push(format!(
                            "unclassified: {} (all schurian: {}), first {:?}",
                            unclassified.len(),
                            schurian.iter().all(|&b| b),
                            first.blocks()
                        ));
                        return Ok((Outcome::Fail, parts.join(", ")));
                    }
                    let outcome = if report.complete { Outcome::Pass } else { Outcome::Undecided };
                    Ok((outcome, parts.join(", ")))
                }));
            }
            checks
        })
        .collect::<Vec<_>>()
        .concat()
}

fn small_schur(config: &RunConfig) -> Vec<Check> {
    SMALL_GROUPS
        .par_iter()
        .map(|&spec| {
            Check::run(format!("{spec}: Schur"), || {
                let out = is_schur_group(&group(spec)?, &config.enumeration(), &config.schurity())?;
                Ok((decision_outcome(out.decision, true), sweep_detail(&out)))
            })
        })
        .collect()
}

/// Enumerated S-rings a property sweep runs over: all of them for abelian groups,
/// the central ones otherwise.
fn sweep_members(g: &Arc<Group>, config: &RunConfig) -> Result<EnumerationReport> {
    let report = if g.is_abelian() {
        enumerate_all(g, &config.enumeration())?
    } else {
        enumerate_central(g, &config.enumeration())?
    };
    if !report.complete {
        return Err(Error::BudgetExhausted(config.node_budget.unwrap_or(0)));
    }
    Ok(report)
}

fn lemma_suite(config: &RunConfig) -> Vec<Check> {
    let specs: Vec<&str> = SMALL_GROUPS.iter().chain(MEDIUM_GROUPS).copied().collect();
    let memo = SchurMemo::default();
    let mut checks = Vec::new();

    let per_group = |name: &str, f: GroupCheck| {
        let name = name.to_string();
        Check::run(name, || {
            let results: Vec<Result<(bool, usize, String)>> = specs
                .par_iter()
                .map(|&spec| {
                    let g = group(spec)?;
                    let report = sweep_members(&g, config)?;
                    f(&g, &report).map(|(ok, n, why)| (ok, n, format!("{spec}: {why}")))
                })
                .collect();
            let mut total = 0;
            for r in results {
                let (ok, n, why) = r?;
                if !ok {
                    return Ok((Outcome::Fail, why));
                }
                total += n;
            }
            Ok((Outcome::Pass, format!("{} groups, {total} instances", specs.len())))
        })
    };

    checks.push(per_group("A-subgroups of central S-rings are normal", &|g, r| {
        let mut count = 0;
        for s in r.srings().filter(|s| s.is_central()) {
            for h in s.a_subgroups()? {
                if !g.is_normal(&h) {
                    return Ok((false, count, format!("non-normal A-subgroup of order {} in {:?}", h.order(), s.blocks())));
                }
                count += 1;
            }
        }
        Ok((true, count, String::new()))
    }));
    checks.push(per_group("power maps coprime to |G| permute the basic sets of central S-rings", &|_, r| {
        let central: Vec<&SRing> = r.srings().filter(|s| s.is_central()).collect();
        match central.iter().find(|s| !s.verify_power_closure()) {
            Some(s) => Ok((false, 0, format!("not power closed: {:?}", s.blocks()))),
            None => Ok((true, central.len(), String::new())),
        }
    }));
    checks.push(per_group("separation lemma holds for every basic set and normal subgroup", &|g, r| {
        let normals = g.normal_subgroups()?;
        let mut applied = 0;
        for s in r.srings() {
            for x in 1..s.rank() {
                for h in &normals {
                    match s.separation_check(x, h) {
                        SeparationVerdict::Fail { reason, .. } => {
                            return Ok((false, applied, format!("{reason} for block {:?}", s.block(x))))
                        }
                        SeparationVerdict::Pass { .. } => applied += 1,
                        SeparationVerdict::NotApplicable { .. } => {}
                    }
                }
            }
        }
        Ok((true, applied, String::new()))
    }));
    checks.push(per_group("wreath product is schurian iff both factors are", &|g, r| {
        let n = g.order();
        let mut count = 0;
        for s in r.srings() {
            for l in s.a_subgroups()? {
                if l.order() == 1 || l.order() == n || !s.is_generalized_wreath(&l, &l) {
                    continue;
                }
                let whole = memo.verdict(s, config)? == Verdict::Schurian;
                let inner = memo.verdict(&s.restrict(&l)?, config)? == Verdict::Schurian;
                let outer = memo.verdict(&s.quotient_sring(&g.quotient_group(&l)?)?, config)? == Verdict::Schurian;
                if whole != (inner && outer) {
                    return Ok((false, count, format!("|L| = {}: whole {whole}, factors {inner} {outer}", l.order())));
                }
                count += 1;
            }
        }
        Ok((true, count, String::new()))
    }));
    checks.push(per_group("generalized wreath with |U/L| <= 2 and schurian factors is schurian (abelian)", &|g, r| {
        if !g.is_abelian() {
            return Ok((true, 0, String::new()));
        }
        let mut count = 0;
        for s in r.srings() {
            for w in s.find_wreath_decompositions()? {
                if !w.nontrivial || w.u.order() > 2 * w.l.order() {
                    continue;
                }
                let top = memo.verdict(&s.restrict(&w.u)?, config)? == Verdict::Schurian;
                let bottom = memo.verdict(&s.quotient_sring(&g.quotient_group(&w.l)?)?, config)? == Verdict::Schurian;
                if top && bottom {
                    count += 1;
                    if memo.verdict(s, config)? != Verdict::Schurian {
                        return Ok((false, count, format!("section {w} over {:?}", s.blocks())));
                    }
                }
            }
        }
        Ok((true, count, String::new()))
    }));
    checks.push(per_group("largest basic set shares a factor with every basic set (primitive members)", &|_, r| {
        let mut count = 0;
        for s in r.srings() {
            match coprime_predicate(s)? {
                Some(false) => return Ok((false, count, format!("violated by {}", s.sizes()))),
                Some(true) => count += 1,
                None => {}
            }
        }
        Ok((true, count, String::new()))
    }));
    checks.push(Check::run("rank-3 central S-rings over dihedral groups of order <= 32 are schurian", || {
        let mut count = 0;
        for n in 3..=16 {
            let g = group(&format!("dihedral:{}", 2 * n))?;
            let report = enumerate_central(&g, &config.enumeration())?;
            for s in report.srings().filter(|s| s.rank() == 3) {
                if memo.verdict(s, config)? != Verdict::Schurian {
                    return Ok((Outcome::Fail, format!("dihedral:{}: {:?}", 2 * n, s.blocks())));
                }
                count += 1;
            }
        }
        Ok((Outcome::Pass, format!("{count} rank-3 members")))
    }));
    checks.push(Check::run("quotients of generalized Schur groups are generalized Schur", || {
        let mut count = 0;
        for &spec in &specs {
            let g = group(spec)?;
            let gs = |x: &Arc<Group>| -> Result<Decision> {
                Ok(is_generalized_schur(x, &config.enumeration(), &config.schurity())?.decision)
            };
            if gs(&g)? != Decision::Yes {
                continue;
            }
            for h in g.normal_subgroups()? {
                if h.order() == 1 || h.order() == g.order() {
                    continue;
                }
                let q = g.quotient_group(&h)?;
                match gs(q.quotient())? {
                    Decision::Yes => count += 1,
                    Decision::Undecided => return Ok((Outcome::Undecided, format!("{spec} / {}", h.order()))),
                    Decision::No => return Ok((Outcome::Fail, format!("{spec} modulo a normal subgroup of order {}", h.order()))),
                }
            }
        }
        Ok((Outcome::Pass, format!("{count} quotients")))
    }));
    checks
}
