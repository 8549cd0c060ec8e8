//! Slow, direct re-implementations used to cross-check the library. Nothing here calls
//! into the S-ring, enumeration or automorphism code; only the group table is shared.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use schurlab_core::{build_group, Group};

pub fn group(spec: &str) -> Arc<Group> {
    Arc::new(build_group(spec).unwrap_or_else(|e| panic!("{spec}: {e}")))
}

/// Every set partition of `items`, as lists of blocks in first-occurrence order.
pub fn set_partitions(items: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    fn go(i: usize, items: &[Vec<usize>], cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == items.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..=cur.len() {
            if b == cur.len() {
                cur.push(items[i].clone());
                go(i + 1, items, cur, out);
                cur.pop();
            } else {
                let keep = cur[b].len();
                cur[b].extend_from_slice(&items[i]);
                go(i + 1, items, cur, out);
                cur[b].truncate(keep);
            }
        }
    }
    let mut out = Vec::new();
    go(0, items, &mut Vec::new(), &mut out);
    out
}

pub fn sorted_blocks(blocks: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut bs: Vec<Vec<usize>> = blocks
        .iter()
        .map(|b| {
            let mut b = b.clone();
            b.sort_unstable();
            b
        })
        .collect();
    bs.sort();
    bs
}

pub fn conjugacy_classes(g: &Group) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let class: BTreeSet<usize> = (0..n).map(|h| g.mul(g.mul(g.inv(h), x), h)).collect();
        for &y in &class {
            seen[y] = true;
        }
        out.push(class.into_iter().collect());
    }
    out
}

/// Definition check by expanding every product of basic quantities in the group ring.
pub fn naive_is_sring(g: &Group, blocks: &[Vec<usize>]) -> bool {
    let n = g.order();
    let mut which = vec![usize::MAX; n];
    for (i, b) in blocks.iter().enumerate() {
        if b.is_empty() {
            return false;
        }
        for &x in b {
            if which[x] != usize::MAX {
                return false;
            }
            which[x] = i;
        }
    }
    if which.contains(&usize::MAX) || blocks[which[g.identity()]].len() != 1 {
        return false;
    }
    let as_sets = sorted_blocks(blocks);
    for b in blocks {
        let mut inv: Vec<usize> = b.iter().map(|&x| g.inv(x)).collect();
        inv.sort_unstable();
        if as_sets.binary_search(&inv).is_err() {
            return false;
        }
    }
    for x in blocks {
        for y in blocks {
            let mut coeff = vec![0u32; n];
            for &a in x {
                for &b in y {
                    coeff[g.mul(a, b)] += 1;
                }
            }
            if blocks.iter().any(|z| z.iter().any(|&t| coeff[t] != coeff[z[0]])) {
                return false;
            }
        }
    }
    true
}

/// Colour of the arc `(x, y)`: the block holding `y x^{-1}`.
pub struct Colours {
    n: usize,
    col: Vec<usize>,
}

impl Colours {
    pub fn new(g: &Group, blocks: &[Vec<usize>]) -> Self {
        let n = g.order();
        let mut which = vec![0; n];
        for (i, b) in blocks.iter().enumerate() {
            for &x in b {
                which[x] = i;
            }
        }
        let mut col = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                col[x * n + y] = which[g.mul(y, g.inv(x))];
            }
        }
        Colours { n, col }
    }

    fn c(&self, x: usize, y: usize) -> usize {
        self.col[x * self.n + y]
    }

    /// Depth-first search over colour-preserving bijections extending `fixed`. Every
    /// complete map is passed to `visit`; returning `false` stops the search.
    pub fn search(&self, fixed: &[(usize, usize)], visit: &mut dyn FnMut(&[usize]) -> bool) {
        let n = self.n;
        let mut order: Vec<usize> = fixed.iter().map(|&(v, _)| v).collect();
        order.extend((0..n).filter(|v| !fixed.iter().any(|&(f, _)| f == *v)));
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend(0, &order, fixed, &mut image, &mut used, visit);
    }

    fn extend(
        &self,
        depth: usize,
        order: &[usize],
        fixed: &[(usize, usize)],
        image: &mut [usize],
        used: &mut [bool],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if depth == order.len() {
            return visit(image);
        }
        let v = order[depth];
        let candidates: Vec<usize> = match fixed.get(depth) {
            Some(&(_, w)) => vec![w],
            None => (0..self.n).collect(),
        };
        for w in candidates {
            if used[w] {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&u| self.c(u, v) == self.c(image[u], w) && self.c(v, u) == self.c(w, image[u]));
            if !consistent {
                continue;
            }
            image[v] = w;
            used[w] = true;
            let go_on = self.extend(depth + 1, order, fixed, image, used, visit);
            used[w] = false;
            image[v] = usize::MAX;
            if !go_on {
                return false;
            }
        }
        true
    }

    /// Whether some automorphism fixes `0` and sends `x` to `y`.
    pub fn stabilizer_moves(&self, x: usize, y: usize) -> bool {
        let mut found = false;
        self.search(&[(0, 0), (x, y)], &mut |_| {
            found = true;
            false
        });
        found
    }
}

/// `|Aut(A)|` and the orbits of `Aut(A)_0`, by exhaustive search.
pub fn naive_aut(g: &Group, blocks: &[Vec<usize>]) -> (u64, Vec<Vec<usize>>) {
    let colours = Colours::new(g, blocks);
    let n = g.order();
    let mut count = 0u64;
    let mut orbit_of: Vec<BTreeSet<usize>> = (0..n).map(|x| BTreeSet::from([x])).collect();
    colours.search(&[], &mut |image| {
        count += 1;
        if image[0] == 0 {
            for (x, &y) in image.iter().enumerate() {
                orbit_of[x].insert(y);
            }
        }
        true
    });
    let orbits: BTreeSet<Vec<usize>> = orbit_of.into_iter().map(|s| s.into_iter().collect()).collect();
    (count, orbits.into_iter().collect())
}

pub fn generate(g: &Group, seed: &[usize]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = BTreeSet::from([g.identity()]);
    set.extend(seed.iter().copied());
    loop {
        let cur: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &a in &cur {
            for &b in &cur {
                set.insert(g.mul(a, b));
            }
        }
        if set.len() == before {
            return cur;
        }
    }
}

fn is_union_of_blocks(set: &[usize], blocks: &[Vec<usize>]) -> bool {
    let s: BTreeSet<usize> = set.iter().copied().collect();
    blocks.iter().all(|b| b.iter().all(|x| s.contains(x)) || b.iter().all(|x| !s.contains(x)))
}

/// A-subgroups by closing `{e}` under "adjoin a basic set and generate". Each step
/// stays inside the A-subgroup lattice because the group generated by an A-set is an
/// A-subgroup; the second return value counts violations of that fact (expected 0).
pub fn naive_a_subgroups(g: &Group, blocks: &[Vec<usize>]) -> (BTreeSet<Vec<usize>>, usize) {
    let mut found = BTreeSet::from([vec![g.identity()]]);
    let mut stack = vec![vec![g.identity()]];
    let mut violations = 0;
    while let Some(h) = stack.pop() {
        for b in blocks {
            if b.iter().all(|x| h.contains(x)) {
                continue;
            }
            let mut seed = h.clone();
            seed.extend_from_slice(b);
            let k = generate(g, &seed);
            if !is_union_of_blocks(&k, blocks) {
                violations += 1;
                continue;
            }
            if found.insert(k.clone()) {
                stack.push(k);
            }
        }
    }
    (found, violations)
}

pub fn is_normal(g: &Group, h: &[usize]) -> bool {
    let s: BTreeSet<usize> = h.iter().copied().collect();
    (0..g.order()).all(|c| h.iter().all(|&x| s.contains(&g.mul(g.mul(g.inv(c), x), c))))
}

pub fn power(g: &Group, x: usize, m: usize) -> usize {
    (0..m).fold(g.identity(), |acc, _| g.mul(acc, x))
}

/// Prime factorisation by trial division, as (prime, exponent) pairs.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `L ≤ rad(X)` for every basic set outside `L`: each such set is a union of `L`-cosets.
pub fn is_wreath_over(g: &Group, blocks: &[Vec<usize>], l: &[usize]) -> bool {
    let ls: BTreeSet<usize> = l.iter().copied().collect();
    blocks.iter().filter(|b| !ls.contains(&b[0])).all(|b| {
        let s: BTreeSet<usize> = b.iter().copied().collect();
        b.iter().all(|&x| l.iter().all(|&y| s.contains(&g.mul(x, y))))
    })
}

/// Invariants that separate all groups of order at most 15.
pub fn fingerprint(g: &Group) -> (usize, bool, Vec<usize>, Vec<usize>) {
    let n = g.order();
    let abelian = (0..n).all(|x| (0..n).all(|y| g.mul(x, y) == g.mul(y, x)));
    let mut classes: Vec<usize> = conjugacy_classes(g).iter().map(Vec::len).collect();
    classes.sort_unstable();
    let mut orders: Vec<usize> = (0..n)
        .map(|x| (1..=n).find(|&k| power(g, x, k) == g.identity()).unwrap())
        .collect();
    orders.sort_unstable();
    (n, abelian, classes, orders)
}

type RingKey = (Vec<u32>, Vec<Vec<usize>>);

/// Verdict memo keyed on the group table and blocks.
pub struct Memo<V: Clone> {
    seen: std::sync::Mutex<HashMap<RingKey, V>>,
}

impl<V: Clone> Memo<V> {
    pub fn new() -> Self {
        Memo { seen: Default::default() }
    }

    pub fn get_or(&self, g: &Group, blocks: &[Vec<usize>], f: impl FnOnce() -> V) -> V {
        let key = (g.table().to_vec(), sorted_blocks(blocks));
        if let Some(v) = self.seen.lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = f();
        self.seen.lock().unwrap().insert(key, v.clone());
        v
    }
}
