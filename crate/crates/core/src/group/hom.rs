//! Homomorphism search by backtracking over images of a generating sequence.

use super::{Group, DEFAULT_GROUP_CAP};
use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};

/// Spanning data for `<g_0, ..., g_j>` for every prefix of a generating sequence.
struct PrefixTrees {
    gens: Vec<usize>,
    /// `levels[j]` lists `(x, parent, gen)` with `x = parent * gens[gen]`, BFS order from the identity.
    levels: Vec<Vec<(usize, usize, usize)>>,
}

impl PrefixTrees {
    fn new(g: &Group, gens: Vec<usize>) -> Self {
        let n = g.order();
        let mut levels = Vec::with_capacity(gens.len());
        for j in 0..gens.len() {
            let mut seen = vec![false; n];
            seen[0] = true;
            let mut order = vec![(0usize, 0usize, usize::MAX)];
            let mut head = 0;
            while head < order.len() {
                let x = order[head].0;
                head += 1;
                for (i, &s) in gens[..=j].iter().enumerate() {
                    let y = g.mul(x, s);
                    if !seen[y] {
                        seen[y] = true;
                        order.push((y, x, i));
                    }
                }
            }
            levels.push(order);
        }
        PrefixTrees { gens, levels }
    }

    /// Extends `images` (of `gens[..=j]`) to `<gens[..=j]>` and checks it is an injective homomorphism.
    fn extend(&self, src: &Group, dst: &Group, images: &[usize], map: &mut [usize]) -> bool {
        let j = images.len() - 1;
        let tree = &self.levels[j];
        for &(x, _, _) in tree {
            map[x] = usize::MAX;
        }
        map[0] = 0;
        let mut used = vec![false; dst.order()];
        used[0] = true;
        for &(x, parent, gi) in &tree[1..] {
            let y = dst.mul(map[parent], images[gi]);
            if used[y] {
                return false;
            }
            used[y] = true;
            map[x] = y;
        }
        tree.iter().all(|&(x, _, _)| {
            self.gens[..=j]
                .iter()
                .zip(images)
                .all(|(&s, &t)| map[src.mul(x, s)] == dst.mul(map[x], t))
        })
    }
}

fn candidates(src: &Group, dst: &Group, gens: &[usize]) -> Vec<Vec<usize>> {
    let dst_orders: Vec<usize> = (0..dst.order()).map(|y| dst.elem_order(y)).collect();
    gens.iter()
        .map(|&s| {
            let o = src.elem_order(s);
            (0..dst.order()).filter(|&y| dst_orders[y] == o).collect()
        })
        .collect()
}

fn complete(
    trees: &PrefixTrees,
    src: &Group,
    dst: &Group,
    cands: &[Vec<usize>],
    images: &mut Vec<usize>,
    map: &mut [usize],
) -> bool {
    let j = images.len();
    if j == trees.gens.len() {
        return true;
    }
    for &c in &cands[j] {
        images.push(c);
        if trees.extend(src, dst, images, map) && complete(trees, src, dst, cands, images, map) {
            return true;
        }
        images.pop();
    }
    false
}

/// An isomorphism `src -> dst` as an element map, if one exists.
pub fn find_isomorphism(src: &Group, dst: &Group) -> Option<Vec<usize>> {
    if src.order() != dst.order() {
        return None;
    }
    if src.order() == 1 {
        return Some(vec![0]);
    }
    let trees = PrefixTrees::new(src, src.generators());
    let cands = candidates(src, dst, &trees.gens);
    let mut images = Vec::new();
    let mut map = vec![usize::MAX; src.order()];
    if complete(&trees, src, dst, &cands, &mut images, &mut map) {
        trees.extend(src, dst, &images, &mut map);
        Some(map)
    } else {
        None
    }
}

/// Generators and order of `Aut(G)` acting on element indices.
#[derive(Clone, Debug)]
pub struct Automorphisms {
    pub generators: Vec<Perm>,
    pub order: u128,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl Group {
    /// `Aut(G)` by backtracking over order-preserving images of a greedy
    /// generating sequence, pruned by the orbits of automorphisms already found.
    pub fn automorphisms(&self) -> Result<Automorphisms> {
        self.automorphisms_capped(DEFAULT_GROUP_CAP)
    }

    pub fn automorphisms_capped(&self, cap: usize) -> Result<Automorphisms> {
        let n = self.order();
        if n > cap {
            return Err(Error::CapExceeded { what: "Aut(G) search", size: n, cap });
        }
        if n == 1 {
            return Ok(Automorphisms { generators: vec![], order: 1 });
        }
        let trees = PrefixTrees::new(self, self.generators());
        let cands = candidates(self, self, &trees.gens);
        let k = trees.gens.len();
        let mut generators: Vec<Perm> = Vec::new();
        let mut order: u128 = 1;
        let mut map = vec![usize::MAX; n];
        for j in (0..k).rev() {
            let target = trees.gens[j];
            let mut uf = UnionFind::new(n);
            for p in &generators {
                for x in 0..n {
                    uf.union(x, p.apply(x));
                }
            }
            let mut failed: Vec<usize> = Vec::new();
            for &c in &cands[j] {
                if c == target || uf.find(c) == uf.find(target) {
                    continue;
                }
                if failed.iter().any(|&f| uf.find(f) == uf.find(c)) {
                    continue;
                }
                let mut images: Vec<usize> = trees.gens[..j].to_vec();
                images.push(c);
                if trees.extend(self, self, &images, &mut map)
                    && complete(&trees, self, self, &cands, &mut images, &mut map)
                {
                    trees.extend(self, self, &images, &mut map);
                    let p = Perm::from_vec(map.clone());
                    for x in 0..n {
                        uf.union(x, p.apply(x));
                    }
                    generators.push(p);
                } else {
                    failed.push(c);
                }
            }
            let root = uf.find(target);
            order *= (0..n).filter(|&x| uf.find(x) == root).count() as u128;
        }
        Ok(Automorphisms { generators, order })
    }

    /// `Aut(G)` as a permutation group on element indices.
    pub fn automorphism_group(&self) -> Result<PermGroup> {
        let a = self.automorphisms()?;
        Ok(PermGroup::new(self.order(), a.generators))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;

    #[test]
    fn automorphism_counts() {
        assert_eq!(build_group("cyclic:4").unwrap().automorphisms().unwrap().order, 2);
        assert_eq!(build_group("elemabelian:2^2").unwrap().automorphisms().unwrap().order, 6);
        assert_eq!(build_group("elemabelian:5^2").unwrap().automorphisms().unwrap().order, 480);
        assert_eq!(build_group("quaternion:8").unwrap().automorphisms().unwrap().order, 24);
        assert_eq!(build_group("dihedral:8").unwrap().automorphisms().unwrap().order, 8);
        assert_eq!(build_group("elemabelian:2^6").unwrap().automorphisms().unwrap().order, 20_158_709_760);
    }

    #[test]
    fn a5_automorphisms_match_bsgs_and_inner() {
        let a5 = build_group("A5").unwrap();
        let aut = a5.automorphisms().unwrap();
        assert_eq!(aut.order, 120);
        let pg = PermGroup::new(60, aut.generators.clone());
        assert_eq!(pg.order().to_string(), "120");
        let inn = a5.inner_automorphisms();
        assert_eq!(inn.order().to_string(), "60");
        for g in inn.generators() {
            assert!(pg.contains(g));
        }
    }

    #[test]
    fn automorphisms_preserve_the_table() {
        let g = build_group("semidirect(cyclic:3,cyclic:4,pow:-1)").unwrap();
        let aut = g.automorphisms().unwrap();
        for p in &aut.generators {
            for x in 0..12 {
                for y in 0..12 {
                    assert_eq!(p.apply(g.mul(x, y)), g.mul(p.apply(x), p.apply(y)));
                }
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = build_group("dihedral:72").unwrap();
        assert!(matches!(g.automorphisms(), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn isomorphisms() {
        let a = build_group("direct(cyclic:2,cyclic:3)").unwrap();
        let b = build_group("cyclic:6").unwrap();
        let f = find_isomorphism(&a, &b).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(f[a.mul(x, y)], b.mul(f[x], f[y]));
            }
        }
        let d8 = build_group("dihedral:8").unwrap();
        let q8 = build_group("quaternion:8").unwrap();
        assert!(find_isomorphism(&d8, &q8).is_none());
        let e27 = build_group("extraspecial:27:-").unwrap();
        let m27 = build_group("modular:27").unwrap();
        assert!(find_isomorphism(&e27, &m27).is_some());
    }
}
