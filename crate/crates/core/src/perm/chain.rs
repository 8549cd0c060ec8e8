//! Deterministic Schreier-Sims.
//!
//! Base points are taken from an optional prefix, then the smallest point moved by a
//! generator not yet accounted for. Schreier generators are sifted before they are stored.

use std::collections::HashSet;

use num_bigint::BigUint;

use super::Perm;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    /// `transversal[b]` maps the base point to `b`.
    transversal: Vec<Option<Perm>>,
    tested: HashSet<(usize, usize)>,
}

impl Level {
    fn new(n: usize, base: usize, gens: Vec<Perm>) -> Self {
        let mut transversal = vec![None; n];
        transversal[base] = Some(Perm::identity(n));
        let mut level = Level { base, gens, orbit: vec![base], transversal, tested: HashSet::new() };
        level.extend_orbit();
        level
    }

    /// Grows the orbit with the current generators, keeping existing coset representatives.
    fn extend_orbit(&mut self) {
        let mut head = 0;
        while head < self.orbit.len() {
            let b = self.orbit[head];
            head += 1;
            for g in &self.gens {
                let c = g.apply(b);
                if self.transversal[c].is_none() {
                    let u = self.transversal[b].as_ref().expect("in orbit").then(g);
                    self.transversal[c] = Some(u);
                    self.orbit.push(c);
                }
            }
        }
    }
}

/// Base, strong generators by level, and transversals.
#[derive(Clone, Debug)]
pub struct StabChain {
    n: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn build(n: usize, generators: &[Perm], prefix: &[usize]) -> Self {
        let gens: Vec<Perm> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut base: Vec<usize> = prefix.to_vec();
        for g in &gens {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.smallest_moved_point().expect("non-identity"));
            }
        }
        let mut levels: Vec<Level> = Vec::with_capacity(base.len());
        for (i, &b) in base.iter().enumerate() {
            let fixing: Vec<Perm> =
                gens.iter().filter(|g| base[..i].iter().all(|&c| g.apply(c) == c)).cloned().collect();
            levels.push(Level::new(n, b, fixing));
        }
        let mut chain = StabChain { n, levels };
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let li = i as usize;
            match self.find_new_generator(li) {
                Some((y, j)) => {
                    if j == self.levels.len() {
                        let b = y.smallest_moved_point().expect("non-identity");
                        self.levels.push(Level::new(self.n, b, vec![]));
                    }
                    for l in li + 1..=j {
                        self.levels[l].gens.push(y.clone());
                        self.levels[l].extend_orbit();
                    }
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    /// Sifts untested Schreier generators of level `i`; returns the first residue that does
    /// not reduce to the identity, with the level at which sifting stopped.
    fn find_new_generator(&mut self, i: usize) -> Option<(Perm, usize)> {
        let mut k = 0;
        while k < self.levels[i].orbit.len() {
            let b = self.levels[i].orbit[k];
            k += 1;
            for s in 0..self.levels[i].gens.len() {
                if !self.levels[i].tested.insert((b, s)) {
                    continue;
                }
                let level = &self.levels[i];
                let g = &level.gens[s];
                let c = g.apply(b);
                let h = level.transversal[b]
                    .as_ref()
                    .expect("in orbit")
                    .then(g)
                    .then(&level.transversal[c].as_ref().expect("in orbit").inverse());
                let (y, j) = self.sift(h, i + 1);
                if j < self.levels.len() || !y.is_identity() {
                    return Some((y, j));
                }
            }
        }
        None
    }

    /// Strips `h` through levels `from..`; returns the residue and the level where it stopped.
    fn sift(&self, mut h: Perm, from: usize) -> (Perm, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let b = h.apply(level.base);
            match &level.transversal[b] {
                Some(u) => h = h.then(&u.inverse()),
                None => return (h, l),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, p: &Perm) -> bool {
        let (y, j) = self.sift(p.clone(), 0);
        j == self.levels.len() && y.is_identity()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Strong generators of the stabilizer of the first `i` base points.
    pub fn level_generators(&self, i: usize) -> Vec<Perm> {
        self.levels.get(i).map(|l| l.gens.clone()).unwrap_or_default()
    }

    pub fn elements(&self) -> Vec<Perm> {
        let mut out = vec![Perm::identity(self.n)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for &b in &level.orbit {
                let u = level.transversal[b].as_ref().expect("in orbit");
                for p in &out {
                    next.push(p.then(u));
                }
            }
            out = next;
        }
        out
    }
}
