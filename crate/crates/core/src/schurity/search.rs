//! Automorphisms of a complete arc-coloured digraph fixing vertex 0, by
//! individualization and refinement.
//!
//! Partitions are ordered cell lists, encoded as a cell index per vertex, where the
//! index order is canonical (it depends only on colours, never on vertex names). The
//! first path of the search tree ends in a leaf `ζ`; levels are then processed from the
//! deepest up, and for each vertex of a level's target cell that is not yet known to
//! share an orbit with the first-path choice, the sibling subtree is searched for a
//! leaf `λ` such that `ζ -> λ` preserves colours. The order of the stabilizer is the
//! product of the level orbit sizes.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use num_bigint::BigUint;

use super::ColorGraph;
use crate::perm::Perm;

#[derive(Clone, Debug)]
struct Node {
    cells: Vec<u32>,
    count: usize,
    trace: u64,
}

impl Node {
    fn is_discrete(&self) -> bool {
        self.count == self.cells.len()
    }

    /// First smallest non-singleton cell, as (cell index, members in increasing order).
    fn target(&self) -> (u32, Vec<usize>) {
        let mut sizes = vec![0usize; self.count];
        for &c in &self.cells {
            sizes[c as usize] += 1;
        }
        let (best, _) = sizes
            .iter()
            .enumerate()
            .filter(|(_, &s)| s > 1)
            .min_by_key(|(i, &s)| (s, *i))
            .expect("non-discrete");
        let members = (0..self.cells.len()).filter(|&v| self.cells[v] as usize == best).collect();
        (best as u32, members)
    }

    /// Vertex in each cell of a discrete partition.
    fn leaf_order(&self) -> Vec<usize> {
        let mut order = vec![0usize; self.cells.len()];
        for (v, &c) in self.cells.iter().enumerate() {
            order[c as usize] = v;
        }
        order
    }
}

pub(crate) struct Outcome {
    pub generators: Vec<Perm>,
    pub order: BigUint,
    pub nodes: u64,
}

pub(crate) struct Searcher<'a> {
    graph: &'a ColorGraph,
    budget: Option<u64>,
    nodes: u64,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
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

impl<'a> Searcher<'a> {
    pub fn new(graph: &'a ColorGraph, budget: Option<u64>) -> Self {
        Searcher { graph, budget, nodes: 0 }
    }

    fn spend(&mut self) -> Option<()> {
        self.nodes += 1;
        match self.budget {
            Some(b) if self.nodes > b => None,
            _ => Some(()),
        }
    }

    /// Colour refinement to the coarsest equitable partition below `cells`.
    fn refine(&self, mut cells: Vec<u32>, parent_trace: u64) -> Node {
        let n = self.graph.n;
        let rank = self.graph.rank as u32;
        let mut hasher = DefaultHasher::new();
        parent_trace.hash(&mut hasher);
        let mut count = cells.iter().max().map_or(0, |&m| m as usize + 1);
        let mut keys: Vec<Vec<u32>> = vec![Vec::with_capacity(n + 1); n];
        let mut order: Vec<usize> = (0..n).collect();
        loop {
            for v in 0..n {
                let key = &mut keys[v];
                key.clear();
                key.push(cells[v]);
                let row = self.graph.row(v);
                key.extend((0..n).map(|u| cells[u] * rank + row[u]));
                key[1..].sort_unstable();
            }
            order.sort_unstable_by(|&a, &b| keys[a].cmp(&keys[b]));
            let mut next = vec![0u32; n];
            let mut id = 0u32;
            for i in 0..n {
                if i > 0 && keys[order[i]] != keys[order[i - 1]] {
                    id += 1;
                }
                next[order[i]] = id;
            }
            let new_count = id as usize + 1;
            for i in 0..n {
                if i == 0 || keys[order[i]] != keys[order[i - 1]] {
                    keys[order[i]].hash(&mut hasher);
                }
            }
            cells = next;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        let mut sizes = vec![0u32; count];
        for &c in &cells {
            sizes[c as usize] += 1;
        }
        sizes.hash(&mut hasher);
        Node { cells, count, trace: hasher.finish() }
    }

    /// Gives `v` its own cell just before the rest of its cell, then refines.
    fn individualize(&mut self, node: &Node, v: usize) -> Option<Node> {
        self.spend()?;
        let cells: Vec<u32> = node
            .cells
            .iter()
            .enumerate()
            .map(|(u, &c)| {
                let shifted = if c > node.cells[v] { c + 1 } else { c };
                if c == node.cells[v] && u != v {
                    shifted + 1
                } else {
                    shifted
                }
            })
            .collect();
        Some(self.refine(cells, node.trace))
    }

    fn is_automorphism(&self, p: &[usize]) -> bool {
        let n = self.graph.n;
        (0..n).all(|g| {
            let row = self.graph.row(g);
            let image = self.graph.row(p[g]);
            (0..n).all(|h| row[h] == image[p[h]])
        })
    }

    /// Searches below `node` for a leaf equivalent to the first-path leaf.
    fn find_equivalent(&mut self, node: Node, depth: usize, path: &[Node], zeta: &[usize]) -> Option<Option<Vec<usize>>> {
        if node.trace != path[depth].trace {
            return Some(None);
        }
        if node.is_discrete() {
            let lambda = node.leaf_order();
            let mut p = vec![0usize; zeta.len()];
            for (i, &z) in zeta.iter().enumerate() {
                p[z] = lambda[i];
            }
            return Some(if self.is_automorphism(&p) { Some(p) } else { None });
        }
        let (_, members) = node.target();
        for w in members {
            let child = self.individualize(&node, w)?;
            if let Some(p) = self.find_equivalent(child, depth + 1, path, zeta)? {
                return Some(Some(p));
            }
        }
        Some(None)
    }

    /// Generators and order of the stabilizer of vertex 0; `None` when the budget runs out.
    pub fn stabilizer_of_zero(&mut self) -> Option<Outcome> {
        let n = self.graph.n;
        if n == 1 {
            return Some(Outcome { generators: vec![], order: BigUint::from(1u32), nodes: 0 });
        }
        let unit = self.refine(vec![0; n], 0);
        let root = self.individualize(&unit, 0)?;
        let mut path = vec![root];
        let mut choices: Vec<(Vec<usize>, usize)> = Vec::new();
        while !path.last().expect("nonempty").is_discrete() {
            let node = path.last().expect("nonempty").clone();
            let (_, members) = node.target();
            let v = members[0];
            let child = self.individualize(&node, v)?;
            choices.push((members, v));
            path.push(child);
        }
        let zeta = path.last().expect("nonempty").leaf_order();

        let mut generators: Vec<Perm> = Vec::new();
        let mut order = BigUint::from(1u32);
        for depth in (0..choices.len()).rev() {
            let (members, v) = choices[depth].clone();
            let mut uf = UnionFind((0..n).collect());
            for g in &generators {
                for x in 0..n {
                    uf.union(x, g.apply(x));
                }
            }
            let mut failed: Vec<usize> = Vec::new();
            for &w in &members {
                if uf.find(w) == uf.find(v) {
                    continue;
                }
                let root_w = uf.find(w);
                if failed.iter().any(|&f| uf.find(f) == root_w) {
                    continue;
                }
                let child = self.individualize(&path[depth], w)?;
                match self.find_equivalent(child, depth + 1, &path, &zeta)? {
                    Some(p) => {
                        let perm = Perm::from_vec(p);
                        for x in 0..n {
                            uf.union(x, perm.apply(x));
                        }
                        generators.push(perm);
                    }
                    None => failed.push(w),
                }
            }
            let rv = uf.find(v);
            order *= BigUint::from(members.iter().filter(|&&w| uf.find(w) == rv).count());
        }
        Some(Outcome { generators, order, nodes: self.nodes })
    }
}
