//! S-rings as partitions of a group's elements.
//!
//! Blocks are kept in canonical form (each block sorted, blocks ordered by their least
//! element), so equality of S-rings over the same group is equality of block lists.

mod closure;
mod structure;

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Group;

pub use closure::{sring_closure, AtomRefiner};
pub use structure::{
    radical, wreath, CaminaDecomposition, DihedralTag, SeparationVerdict, WreathSection,
};

/// Sorted multiset of block sizes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SizeMultiset(pub Vec<usize>);

impl SizeMultiset {
    pub fn new(mut sizes: Vec<usize>) -> Self {
        sizes.sort_unstable();
        SizeMultiset(sizes)
    }
}

impl fmt::Display for SizeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Why a partition fails to be an S-ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom", rename_all = "kebab-case")]
pub enum Rejection {
    /// The identity shares its block with other elements.
    IdentityNotIsolated { block: Vec<usize> },
    /// `X^{-1}` is not a block.
    NotInverseClosed { block: Vec<usize>, inverse: Vec<usize> },
    /// `c_{X,Y}` takes different values on `g` and `h`, which share a block.
    Convolution { x: Vec<usize>, y: Vec<usize>, g: usize, h: usize, count_g: u32, count_h: u32 },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::IdentityNotIsolated { block } => {
                write!(f, "identity is not a block on its own (block {block:?})")
            }
            Rejection::NotInverseClosed { block, inverse } => {
                write!(f, "inverse {inverse:?} of block {block:?} is not a block")
            }
            Rejection::Convolution { x, y, g, h, count_g, count_h } => write!(
                f,
                "product of {x:?} and {y:?} has coefficient {count_g} at {g} but {count_h} at {h}"
            ),
        }
    }
}

/// Structure constants `p^Z_{X,Y}`: the coefficient of `Z` in `X·Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    rank: usize,
    data: Vec<u32>,
}

impl StructureConstants {
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize, z: usize) -> u32 {
        self.data[(x * self.rank + y) * self.rank + z]
    }
}

#[derive(Clone)]
pub struct SRing {
    group: Arc<Group>,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
    inverse: Vec<usize>,
    constants: OnceLock<Arc<StructureConstants>>,
}

impl PartialEq for SRing {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.blocks == other.blocks
    }
}

impl Eq for SRing {}

impl fmt::Debug for SRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SRing")
            .field("group", &self.group.spec())
            .field("blocks", &self.blocks)
            .finish()
    }
}

/// JSON form of an S-ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SRingDoc {
    #[serde(rename = "group-spec")]
    pub group_spec: String,
    pub blocks: Vec<Vec<usize>>,
    pub rank: usize,
    pub sizes: SizeMultiset,
}

/// Sorts each block and orders blocks by least element.
pub fn canonical_partition(mut blocks: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort_unstable_by_key(|b| b.first().copied().unwrap_or(usize::MAX));
    blocks
}

fn check_partition(n: usize, blocks: &[Vec<usize>]) -> Result<Vec<usize>> {
    let mut block_of = vec![usize::MAX; n];
    for (i, b) in blocks.iter().enumerate() {
        if b.is_empty() {
            return Err(Error::NotPartition(format!("block {i} is empty")));
        }
        for &x in b {
            if x >= n {
                return Err(Error::NotPartition(format!("element {x} is out of range")));
            }
            if block_of[x] != usize::MAX {
                return Err(Error::NotPartition(format!("element {x} appears twice")));
            }
            block_of[x] = i;
        }
    }
    if let Some(x) = block_of.iter().position(|&b| b == usize::MAX) {
        return Err(Error::NotPartition(format!("element {x} is missing")));
    }
    Ok(block_of)
}

impl SRing {
    /// Validates the three axioms; a failing partition comes back as [`Error::NotSRing`].
    pub fn from_partition(g: &Arc<Group>, blocks: Vec<Vec<usize>>) -> Result<SRing> {
        let blocks = canonical_partition(blocks);
        let block_of = check_partition(g.order(), &blocks)?;
        if blocks[0].len() != 1 {
            return Err(Error::NotSRing(Box::new(Rejection::IdentityNotIsolated {
                block: blocks[0].clone(),
            })));
        }
        let mut inverse = Vec::with_capacity(blocks.len());
        for b in &blocks {
            let mut inv: Vec<usize> = b.iter().map(|&x| g.inv(x)).collect();
            inv.sort_unstable();
            let target = block_of[inv[0]];
            if blocks[target] != inv {
                return Err(Error::NotSRing(Box::new(Rejection::NotInverseClosed {
                    block: b.clone(),
                    inverse: inv,
                })));
            }
            inverse.push(target);
        }
        let sring = SRing { group: g.clone(), blocks, block_of, inverse, constants: OnceLock::new() };
        if let Some(r) = sring.convolution_failure() {
            return Err(Error::NotSRing(Box::new(r)));
        }
        Ok(sring)
    }

    /// Builds without checking; callers guarantee the axioms.
    pub(crate) fn from_trusted(g: &Arc<Group>, blocks: Vec<Vec<usize>>) -> SRing {
        let blocks = canonical_partition(blocks);
        let block_of = check_partition(g.order(), &blocks).expect("trusted partition");
        let inverse = blocks.iter().map(|b| block_of[g.inv(b[0])]).collect();
        SRing { group: g.clone(), blocks, block_of, inverse, constants: OnceLock::new() }
    }

    fn convolution_failure(&self) -> Option<Rejection> {
        let g = &self.group;
        let (n, r) = (g.order(), self.rank());
        let mut counts = vec![0u32; r * r * n];
        for x in 0..n {
            let bx = self.block_of[x] * r;
            for y in 0..n {
                counts[(bx + self.block_of[y]) * n + g.mul(x, y)] += 1;
            }
        }
        for bx in 0..r {
            for by in 0..r {
                let row = &counts[(bx * r + by) * n..(bx * r + by + 1) * n];
                for block in &self.blocks {
                    let first = block[0];
                    if let Some(&h) = block.iter().find(|&&h| row[h] != row[first]) {
                        return Some(Rejection::Convolution {
                            x: self.blocks[bx].clone(),
                            y: self.blocks[by].clone(),
                            g: first,
                            h,
                            count_g: row[first],
                            count_h: row[h],
                        });
                    }
                }
            }
        }
        None
    }

    /// `T_G`, with blocks `{e}` and `G^#`.
    pub fn trivial(g: &Arc<Group>) -> SRing {
        let blocks = if g.order() == 1 { vec![vec![0]] } else { vec![vec![0], (1..g.order()).collect()] };
        Self::from_trusted(g, blocks)
    }

    /// `ZG`, all singletons.
    pub fn full(g: &Arc<Group>) -> SRing {
        Self::from_trusted(g, (0..g.order()).map(|x| vec![x]).collect())
    }

    /// `Z(ZG)`, whose blocks are the conjugacy classes.
    pub fn center_sring(g: &Arc<Group>) -> SRing {
        Self::from_trusted(g, g.conjugacy_classes())
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn block_index(&self) -> &[usize] {
        &self.block_of
    }

    /// Index of `X^{-1}` for block `X`.
    pub fn inverse_block(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn rank(&self) -> usize {
        self.blocks.len()
    }

    pub fn sizes(&self) -> SizeMultiset {
        SizeMultiset::new(self.blocks.iter().map(Vec::len).collect())
    }

    /// Is `set` a union of blocks?
    pub fn is_a_set(&self, set: &[usize]) -> bool {
        let n = self.group.order();
        let mut mask = vec![false; n];
        for &x in set {
            mask[x] = true;
        }
        set.iter().all(|&x| self.blocks[self.block_of[x]].iter().all(|&y| mask[y]))
    }

    pub fn is_central(&self) -> bool {
        let g = &self.group;
        let gens = g.generators();
        (0..g.order()).all(|x| gens.iter().all(|&s| self.block_of[g.conj(x, s)] == self.block_of[x]))
    }

    /// `self ≤ other`: every block of `self` is a union of blocks of `other`.
    pub fn is_subring_of(&self, other: &SRing) -> bool {
        self.group == other.group
            && other.blocks.iter().all(|b| b.iter().all(|&x| self.block_of[x] == self.block_of[b[0]]))
    }

    pub fn structure_constants(&self) -> &StructureConstants {
        self.constants.get_or_init(|| {
            let g = &self.group;
            let r = self.rank();
            let mut data = vec![0u32; r * r * r];
            let is_min: Vec<bool> = (0..g.order()).map(|z| self.blocks[self.block_of[z]][0] == z).collect();
            for x in 0..g.order() {
                for y in 0..g.order() {
                    let z = g.mul(x, y);
                    if is_min[z] {
                        data[(self.block_of[x] * r + self.block_of[y]) * r + self.block_of[z]] += 1;
                    }
                }
            }
            Arc::new(StructureConstants { rank: r, data })
        })
    }

    /// Is `X^{(m)}` a block for every block `X` and every `m` coprime to `|G|`?
    pub fn verify_power_closure(&self) -> bool {
        let n = self.group.order();
        (1..n.max(2)).filter(|&m| crate::group::gcd(m, n) == 1).all(|m| {
            self.blocks.iter().all(|b| {
                let image = power_set(&self.group, b, m as i64);
                self.blocks[self.block_of[image[0]]] == image
            })
        })
    }

    pub fn to_doc(&self) -> SRingDoc {
        SRingDoc {
            group_spec: self.group.spec().to_string(),
            blocks: self.blocks.clone(),
            rank: self.rank(),
            sizes: self.sizes(),
        }
    }

    /// Rebuilds and re-verifies an S-ring from its document over the given group.
    pub fn from_doc(g: &Arc<Group>, doc: &SRingDoc) -> Result<SRing> {
        if doc.group_spec != g.spec() {
            return Err(Error::GroupMismatch);
        }
        let s = Self::from_partition(g, doc.blocks.clone())?;
        if s.rank() != doc.rank || s.sizes() != doc.sizes {
            return Err(Error::Parse("rank or sizes disagree with the blocks".into()));
        }
        Ok(s)
    }
}

/// `X^{(m)} = {x^m : x ∈ X}`, sorted.
pub fn power_set(g: &Group, set: &[usize], m: i64) -> Vec<usize> {
    let mut out: Vec<usize> = set.iter().map(|&x| g.pow(x, m)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// `a ≤ b` in the subring order.
pub fn subring_le(a: &SRing, b: &SRing) -> bool {
    a.is_subring_of(b)
}
