//! Permutations of `{0..n-1}` and permutation groups.
//!
//! Permutations act on the right: `p.then(&q)` applies `p` first. Groups keep
//! their generators and build a base and strong generating set on demand.

mod chain;

use std::collections::VecDeque;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::sring::SRing;

pub use chain::StabChain;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Perm(Vec<u32>);

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    /// Panics unless `images` is a bijection of `0..images.len()`.
    pub fn from_vec(images: Vec<usize>) -> Self {
        Self::try_from_vec(images).expect("not a permutation")
    }

    pub fn try_from_vec(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Parse(format!("not a permutation of 0..{n}")));
            }
            seen[x] = true;
        }
        Ok(Perm(images.into_iter().map(|x| x as u32).collect()))
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Self {
        Self::from_vec((0..n).map(f).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize).collect()
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(i, &x)| *i as u32 != x).map(|(i, _)| i)
    }
}

/// A permutation group given by generators; its stabilizer chain is built once, on first use.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: OnceLock<Arc<StabChain>>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup { degree: self.degree, generators: self.generators.clone(), chain }
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators.len())
            .finish()
    }
}

/// Serialized form of a permutation group: `{degree, generators, order}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PermGroupDoc {
    pub degree: usize,
    pub generators: Vec<Perm>,
    pub order: String,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Self {
        debug_assert!(generators.iter().all(|g| g.degree() == degree));
        let generators = generators.into_iter().filter(|g| !g.is_identity()).collect();
        PermGroup { degree, generators, chain: OnceLock::new() }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, vec![])
    }

    pub fn symmetric(degree: usize) -> Self {
        if degree < 2 {
            return Self::trivial(degree);
        }
        let transposition = Perm::from_fn(degree, |x| match x {
            0 => 1,
            1 => 0,
            _ => x,
        });
        let cycle = Perm::from_fn(degree, |x| (x + 1) % degree);
        Self::new(degree, vec![transposition, cycle])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| Arc::new(StabChain::build(self.degree, &self.generators, &[])))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        if p.is_identity() || self.generators.contains(p) {
            return true;
        }
        self.chain().contains(p)
    }

    /// Orbit partition of `0..degree`, each orbit sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.degree, self.generators.iter())
    }

    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[x] = true;
        let mut queue = VecDeque::from([x]);
        let mut out = vec![x];
        while let Some(y) = queue.pop_front() {
            for g in &self.generators {
                let z = g.apply(y);
                if !seen[z] {
                    seen[z] = true;
                    out.push(z);
                    queue.push_back(z);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.order() == BigUint::from(self.degree)
    }

    /// Generators of the full point stabilizer, read off a chain whose base starts at `point`.
    pub fn stabilizer(&self, point: usize) -> PermGroup {
        let chain = StabChain::build(self.degree, &self.generators, &[point]);
        PermGroup::new(self.degree, chain.level_generators(1))
    }

    /// Orbits of the stabilizer of `point`, from the Schreier generators of its orbit transversal.
    pub fn stabilizer_orbits(&self, point: usize) -> Vec<Vec<usize>> {
        let n = self.degree;
        let mut transversal: Vec<Option<Perm>> = vec![None; n];
        transversal[point] = Some(Perm::identity(n));
        let mut queue = VecDeque::from([point]);
        let mut orbit = vec![point];
        while let Some(b) = queue.pop_front() {
            let ub = transversal[b].clone().expect("in orbit");
            for g in &self.generators {
                let c = g.apply(b);
                if transversal[c].is_none() {
                    transversal[c] = Some(ub.then(g));
                    orbit.push(c);
                    queue.push_back(c);
                }
            }
        }
        let mut schreier = Vec::new();
        for &b in &orbit {
            let ub = transversal[b].as_ref().expect("in orbit");
            for g in &self.generators {
                let c = g.apply(b);
                let h = ub.then(g).then(&transversal[c].as_ref().expect("in orbit").inverse());
                if !h.is_identity() {
                    schreier.push(h);
                }
            }
        }
        orbits_of(n, schreier.iter())
    }

    /// Every element, for groups small enough to list.
    pub fn elements(&self) -> Vec<Perm> {
        self.chain().elements()
    }

    pub fn to_doc(&self) -> PermGroupDoc {
        PermGroupDoc {
            degree: self.degree,
            generators: self.generators.clone(),
            order: self.order().to_string(),
        }
    }
}

pub(crate) fn orbits_of<'a>(n: usize, gens: impl Iterator<Item = &'a Perm>) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for g in gens {
        for x in 0..n {
            let (a, b) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut index = vec![usize::MAX; n];
    for x in 0..n {
        let r = find(&mut parent, x);
        if index[r] == usize::MAX {
            index[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[index[r]].push(x);
    }
    blocks
}

/// `x -> x g`.
pub fn right_translation(g: &Group, h: usize) -> Perm {
    Perm::from_fn(g.order(), |x| g.mul(x, h))
}

/// `x -> h x`.
pub fn left_translation(g: &Group, h: usize) -> Perm {
    Perm::from_fn(g.order(), |x| g.mul(h, x))
}

/// `G_r`, generated by right translations by a generating set of `G`.
pub fn right_regular(g: &Group) -> PermGroup {
    PermGroup::new(g.order(), g.generators().into_iter().map(|h| right_translation(g, h)).collect())
}

/// `G_l`, generated by left translations by a generating set of `G`.
pub fn left_regular(g: &Group) -> PermGroup {
    PermGroup::new(g.order(), g.generators().into_iter().map(|h| left_translation(g, h)).collect())
}

/// `V(K, G)`: the S-ring whose basic sets are the orbits of `K_e`.
pub fn transitivity_module(k: &PermGroup, g: &Arc<Group>) -> Result<SRing> {
    if k.degree() != g.order() {
        return Err(Error::DegreeMismatch { expected: g.order(), got: k.degree() });
    }
    if !right_regular(g).generators().iter().all(|r| k.contains(r)) {
        return Err(Error::MissingRegular);
    }
    let orbits = k.stabilizer_orbits(0);
    SRing::from_partition(g, orbits)
        .map_err(|e| Error::Falsified(format!("orbits of K_e do not form an S-ring: {e}")))
}
