//! Stabilizing refinement: the coarsest S-ring partition refining a given partition.
//!
//! Works on the atoms of a base S-ring. An atom's colour is refined by its own colour,
//! the colour of its inverse, the colours of its images under optional atom maps, and
//! the weighted histogram of colour pairs `(X, Y)` whose product hits it. Every step is
//! constant on the blocks of any S-ring that refines the input and is invariant under
//! the maps, so the fixed point is the coarsest such S-ring.

use std::collections::HashMap;
use std::sync::Arc;

use super::SRing;
use crate::group::Group;

pub struct AtomRefiner {
    atoms: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    /// `terms[z]` lists `(x, y, p^z_{x,y})` with nonzero coefficient.
    terms: Vec<Vec<(u32, u32, u32)>>,
    maps: Vec<Vec<usize>>,
}

impl AtomRefiner {
    /// `maps` are permutations of the atoms that every target S-ring must respect.
    pub fn new(base: &SRing, maps: Vec<Vec<usize>>) -> Self {
        let r = base.rank();
        let c = base.structure_constants();
        let mut terms = vec![Vec::new(); r];
        for x in 0..r {
            for y in 0..r {
                for (z, t) in terms.iter_mut().enumerate() {
                    let p = c.get(x, y, z);
                    if p > 0 {
                        t.push((x as u32, y as u32, p));
                    }
                }
            }
        }
        AtomRefiner {
            atoms: base.blocks().to_vec(),
            inverse: (0..r).map(|i| base.inverse_block(i)).collect(),
            terms,
            maps,
        }
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn atoms(&self) -> &[Vec<usize>] {
        &self.atoms
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    /// Refines `cells` (a colour per atom) to the stable partition; colours of the result
    /// are numbered by least atom.
    pub fn refine(&self, cells: &[usize]) -> Vec<usize> {
        let mut cur = renumber(cells);
        let mut count = cur.iter().max().map_or(0, |m| m + 1);
        let mut hist: Vec<(u32, u32, u32)> = Vec::new();
        loop {
            let mut ids: HashMap<Vec<u32>, usize> = HashMap::new();
            let mut next = vec![0usize; cur.len()];
            for a in 0..cur.len() {
                let mut key: Vec<u32> = Vec::with_capacity(2 + self.maps.len() + 3 * self.terms[a].len());
                key.push(cur[a] as u32);
                key.push(cur[self.inverse[a]] as u32);
                key.extend(self.maps.iter().map(|m| cur[m[a]] as u32));
                hist.clear();
                hist.extend(self.terms[a].iter().map(|&(x, y, p)| (cur[x as usize] as u32, cur[y as usize] as u32, p)));
                hist.sort_unstable();
                let mut i = 0;
                while i < hist.len() {
                    let (cx, cy, mut p) = hist[i];
                    i += 1;
                    while i < hist.len() && hist[i].0 == cx && hist[i].1 == cy {
                        p += hist[i].2;
                        i += 1;
                    }
                    key.extend([cx, cy, p]);
                }
                let fresh = ids.len();
                next[a] = *ids.entry(key).or_insert(fresh);
            }
            if ids.len() == count {
                return cur;
            }
            count = ids.len();
            cur = renumber(&next);
        }
    }

    /// Elements of the union of the atoms in each colour class, as a partition.
    pub fn blocks_of(&self, cells: &[usize]) -> Vec<Vec<usize>> {
        let k = cells.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (a, &c) in cells.iter().enumerate() {
            blocks[c].extend_from_slice(&self.atoms[a]);
        }
        blocks
    }
}

/// Relabels colours in order of first appearance.
pub(crate) fn renumber(cells: &[usize]) -> Vec<usize> {
    let mut map: HashMap<usize, usize> = HashMap::new();
    cells
        .iter()
        .map(|&c| {
            let fresh = map.len();
            *map.entry(c).or_insert(fresh)
        })
        .collect()
}

/// The smallest S-ring in which every seed is an A-set.
pub fn sring_closure(g: &Arc<Group>, seeds: &[Vec<usize>]) -> SRing {
    let n = g.order();
    let mut signature: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, seed) in seeds.iter().enumerate() {
        for &x in seed {
            signature[x].push(i);
        }
    }
    let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
    ids.insert(vec![usize::MAX], 0);
    let mut cells = vec![0usize; n];
    for x in 1..n {
        let fresh = ids.len();
        cells[x] = *ids.entry(signature[x].clone()).or_insert(fresh);
    }
    let full = SRing::full(g);
    let refiner = AtomRefiner::new(&full, vec![]);
    let stable = refiner.refine(&cells);
    SRing::from_trusted(g, refiner.blocks_of(&stable))
}
