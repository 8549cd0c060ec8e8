//! A-subgroups, radicals, sections and wreath decompositions.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::SRing;
use crate::error::{Error, Result};
use crate::group::{Group, Section, Subgroup};

pub const A_SUBGROUP_CAP: usize = 128;

/// `rad(X) = {g : gX = Xg = X}`.
pub fn radical(g: &Group, set: &[usize]) -> Result<Subgroup> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = g.order();
    let mut mask = vec![false; n];
    for &x in set {
        mask[x] = true;
    }
    let rad: Vec<bool> =
        (0..n).map(|h| set.iter().all(|&x| mask[g.mul(h, x)] && mask[g.mul(x, h)])).collect();
    Ok(Subgroup::from_mask(&rad))
}

/// Does `l` lie in `rad(set)`?
fn radical_contains(g: &Group, set: &[usize], mask: &[bool], l: &Subgroup) -> bool {
    l.elements().iter().all(|&h| set.iter().all(|&x| mask[g.mul(h, x)] && mask[g.mul(x, h)]))
}

/// `U/L` such that the S-ring is the `U/L`-wreath product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WreathSection {
    pub u: Subgroup,
    pub l: Subgroup,
    pub nontrivial: bool,
}

impl fmt::Display for WreathSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.u.order(), self.l.order())
    }
}

/// Outcome of the separation lemma check for a block `X` and subgroup `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum SeparationVerdict {
    NotApplicable { reason: String },
    Pass { generated: Subgroup, radical: Subgroup },
    Fail { generated: Subgroup, radical: Subgroup, reason: String },
}

/// `A = (A_L ≀ T_{U/L}) ≀ A_{G/U}` for a Camina pair `(G, H)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaminaDecomposition {
    pub l: Subgroup,
    pub u: Subgroup,
    /// The block meeting both `H` and its complement, when `H` is not an A-subgroup.
    pub via_block: Option<usize>,
}

/// Structure of a central S-ring over a dihedral group `<a, b>` of order `2n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DihedralTag {
    /// `A = A_L ≀ A_{G/L}` with `L` the largest A-subgroup of `<a>`.
    WreathOverL { l: Subgroup, quotient_rank: usize },
    /// `A` is the `<a>/<a^2>`-wreath product.
    OverA1 { a: Subgroup, a1: Subgroup },
}

impl DihedralTag {
    pub fn label(&self) -> String {
        match self {
            DihedralTag::WreathOverL { quotient_rank, .. } => format!("wreath-over-L-rank{quotient_rank}"),
            DihedralTag::OverA1 { .. } => "A-over-A1-generalized-wreath".to_string(),
        }
    }
}

/// `B ≀ C` over `G`, for `B` over the normal subgroup `H` and `C` over `G/H`.
///
/// `B` must live on `G.section(H, 1)` and `C` on `G.quotient_group(H)` (compared by table).
pub fn wreath(g: &Arc<Group>, h: &Subgroup, inner: &SRing, outer: &SRing) -> Result<SRing> {
    if !g.is_normal(h) {
        return Err(Error::NotNormal);
    }
    let sec_h = g.section(h, &Subgroup::trivial())?;
    let sec_q = g.quotient_group(h)?;
    if **inner.group() != **sec_h.quotient() || **outer.group() != **sec_q.quotient() {
        return Err(Error::GroupMismatch);
    }
    let mut blocks: Vec<Vec<usize>> = inner
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&q| sec_h.representative(q)).collect())
        .collect();
    for b in &outer.blocks()[1..] {
        blocks.push(b.iter().flat_map(|&q| sec_q.preimage(q)).collect());
    }
    SRing::from_partition(g, blocks)
}

impl SRing {
    /// `<X>` for block `i`.
    pub fn generated(&self, i: usize) -> Subgroup {
        self.group.generated_subgroup(&self.blocks[i])
    }

    /// All A-subgroups, as joins of blocks starting from `{e}`.
    pub fn a_subgroups(&self) -> Result<Vec<Subgroup>> {
        let n = self.group.order();
        if n > A_SUBGROUP_CAP {
            return Err(Error::CapExceeded { what: "A-subgroup search", size: n, cap: A_SUBGROUP_CAP });
        }
        let mut found = BTreeSet::from([Subgroup::trivial()]);
        let mut frontier = vec![Subgroup::trivial()];
        while let Some(h) = frontier.pop() {
            for b in &self.blocks[1..] {
                if h.contains(b[0]) {
                    continue;
                }
                let mut gens = h.elements().to_vec();
                gens.extend_from_slice(b);
                let k = self.group.generated_subgroup(&gens);
                if found.insert(k.clone()) {
                    frontier.push(k);
                }
            }
        }
        Ok(found.into_iter().collect())
    }

    pub fn is_primitive(&self) -> Result<bool> {
        let n = self.group.order();
        Ok(self.a_subgroups()?.iter().all(|h| h.order() == 1 || h.order() == n))
    }

    /// Checks the separation lemma for block `x` and any subgroup `h`: under its
    /// hypotheses, `X = <X> \ rad(X)` and `rad(X) ≤ H`.
    pub fn separation_check(&self, x: usize, h: &Subgroup) -> SeparationVerdict {
        let g = &self.group;
        let block = &self.blocks[x];
        let inside: Vec<usize> = block.iter().copied().filter(|&y| h.contains(y)).collect();
        let outside: Vec<usize> = block.iter().copied().filter(|&y| !h.contains(y)).collect();
        if inside.is_empty() || outside.is_empty() {
            return SeparationVerdict::NotApplicable { reason: "block does not meet both H and its complement".into() };
        }
        let gen_inside = g.generated_subgroup(&inside);
        let rad_outside = radical(g, &outside).expect("nonempty");
        if !gen_inside.is_subset_of(&rad_outside) {
            return SeparationVerdict::NotApplicable {
                reason: "<X ∩ H> is not contained in rad(X \\ H)".into(),
            };
        }
        let generated = self.generated(x);
        let rad = radical(g, block).expect("nonempty");
        let difference: Vec<usize> =
            generated.elements().iter().copied().filter(|&y| !rad.contains(y)).collect();
        if difference != *block {
            let reason = "X differs from <X> \\ rad(X)".to_string();
            return SeparationVerdict::Fail { generated, radical: rad, reason };
        }
        if !rad.is_subset_of(h) {
            let reason = "rad(X) is not contained in H".to_string();
            return SeparationVerdict::Fail { generated, radical: rad, reason };
        }
        SeparationVerdict::Pass { generated, radical: rad }
    }

    /// `A_{U/L}` over the quotient group of the section.
    pub fn quotient_sring(&self, sec: &Section) -> Result<SRing> {
        if !self.is_a_set(sec.upper().elements()) {
            return Err(Error::NotASubgroup("U"));
        }
        if !self.is_a_set(sec.lower().elements()) {
            return Err(Error::NotASubgroup("L"));
        }
        let mut images: BTreeSet<Vec<usize>> = BTreeSet::new();
        for b in &self.blocks {
            if sec.project(b[0]).is_some() {
                let mut img: Vec<usize> = b.iter().map(|&x| sec.project(x).expect("inside U")).collect();
                img.sort_unstable();
                img.dedup();
                images.insert(img);
            }
        }
        SRing::from_partition(sec.quotient(), images.into_iter().collect())
    }

    /// `A_H` over `H` relabelled as a group in its own right.
    pub fn restrict(&self, h: &Subgroup) -> Result<SRing> {
        self.quotient_sring(&self.group.section(h, &Subgroup::trivial())?)
    }

    /// Is `A` the `U/L`-wreath product?
    pub fn is_generalized_wreath(&self, u: &Subgroup, l: &Subgroup) -> bool {
        let g = &self.group;
        if !l.is_subset_of(u) || !g.is_normal(l) || !self.is_a_set(u.elements()) || !self.is_a_set(l.elements()) {
            return false;
        }
        let mut mask = vec![false; g.order()];
        self.blocks.iter().filter(|b| !u.contains(b[0])).all(|b| {
            for &x in b {
                mask[x] = true;
            }
            let ok = radical_contains(g, b, &mask, l);
            for &x in b {
                mask[x] = false;
            }
            ok
        })
    }

    pub fn find_wreath_decompositions(&self) -> Result<Vec<WreathSection>> {
        let n = self.group.order();
        let subs = self.a_subgroups()?;
        let mut out = Vec::new();
        for u in &subs {
            for l in &subs {
                if self.is_generalized_wreath(u, l) {
                    let nontrivial = l.order() > 1 && u.order() < n;
                    out.push(WreathSection { u: u.clone(), l: l.clone(), nontrivial });
                }
            }
        }
        Ok(out)
    }

    /// Finds `L ≤ H ≤ U` with `A = (A_L ≀ T_{U/L}) ≀ A_{G/U}` and confirms it by rebuilding `A`.
    pub fn camina_decomposition(&self, h: &Subgroup) -> Result<CaminaDecomposition> {
        let g = &self.group;
        if !self.is_central() {
            return Err(Error::NotApplicable("S-ring is not central".into()));
        }
        if !g.is_camina_pair(h)? {
            return Err(Error::NotApplicable("(G, H) is not a Camina pair".into()));
        }
        let (l, u, via_block) = if self.is_a_set(h.elements()) {
            (h.clone(), h.clone(), None)
        } else {
            let i = (1..self.rank())
                .find(|&i| {
                    let b = &self.blocks[i];
                    b.iter().any(|&x| h.contains(x)) && b.iter().any(|&x| !h.contains(x))
                })
                .expect("some block meets H and its complement when H is not an A-set");
            (radical(g, &self.blocks[i])?, self.generated(i), Some(i))
        };
        if !l.is_subset_of(h) || !h.is_subset_of(&u) {
            return Err(Error::Falsified(format!(
                "expected L ≤ H ≤ U, got |L| = {}, |H| = {}, |U| = {}",
                l.order(),
                h.order(),
                u.order()
            )));
        }
        let rebuilt = self.rebuild_double_wreath(&l, &u)?;
        if rebuilt != *self {
            return Err(Error::Falsified(format!(
                "double wreath over L (order {}) and U (order {}) does not rebuild the S-ring",
                l.order(),
                u.order()
            )));
        }
        Ok(CaminaDecomposition { l, u, via_block })
    }

    /// `(A_L ≀ T_{U/L}) ≀ A_{G/U}`.
    pub fn rebuild_double_wreath(&self, l: &Subgroup, u: &Subgroup) -> Result<SRing> {
        let g = &self.group;
        let sec_u = g.section(u, &Subgroup::trivial())?;
        let ug = sec_u.quotient().clone();
        let mut l_in_u: Vec<usize> = l.elements().iter().map(|&x| sec_u.project(x).expect("L ≤ U")).collect();
        l_in_u.sort_unstable();
        let l_in_u = Subgroup::from_sorted(l_in_u);
        let a_l = self.restrict(l)?;
        let top = SRing::trivial(ug.quotient_group(&l_in_u)?.quotient());
        let a_u = wreath(&ug, &l_in_u, &a_l, &top)?;
        let a_top = self.quotient_sring(&g.quotient_group(u)?)?;
        wreath(g, u, &a_u, &a_top)
    }

    /// Classifies a central S-ring over `dihedral:2n` (`n ≥ 3`) by the branches of the
    /// dihedral wreath lemma.
    pub fn dihedral_structure(&self) -> Result<DihedralTag> {
        let g = &self.group;
        if !g.spec().starts_with("dihedral:") {
            return Err(Error::NotApplicable("group is not built as dihedral:2n".into()));
        }
        let n = g.order() / 2;
        if n < 3 {
            return Err(Error::NotApplicable(format!("dihedral group of order {} is abelian", 2 * n)));
        }
        if !self.is_central() {
            return Err(Error::NotApplicable("S-ring is not central".into()));
        }
        let a = Subgroup::from_sorted((0..n).collect());
        let l = self
            .a_subgroups()?
            .into_iter()
            .filter(|s| s.is_subset_of(&a))
            .max_by_key(Subgroup::order)
            .expect("{e} is an A-subgroup");
        if self.is_generalized_wreath(&l, &l) {
            let quotient_rank = self.quotient_sring(&g.quotient_group(&l)?)?.rank();
            if quotient_rank <= 3 {
                return Ok(DihedralTag::WreathOverL { l, quotient_rank });
            }
        }
        if n.is_multiple_of(2) {
            let a1 = Subgroup::from_sorted((0..n).step_by(2).collect());
            if self.is_generalized_wreath(&a, &a1) {
                return Ok(DihedralTag::OverA1 { a, a1 });
            }
        }
        Err(Error::Falsified(format!("central S-ring {:?} fits no dihedral branch", self.blocks)))
    }
}
