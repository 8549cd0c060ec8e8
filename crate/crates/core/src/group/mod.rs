//! Finite groups held as explicit multiplication tables.
//!
//! Elements are the indices `0..n` and the identity is always `0`. Every
//! constructor emits a documented, deterministic element ordering so that
//! S-ring partitions, certificates and reports are bit-stable across runs.

mod build;
mod hom;
mod subgroups;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use build::build_group;
pub use hom::{find_isomorphism, Automorphisms};

/// Largest order for which associativity is checked over all triples.
pub const EXHAUSTIVE_ASSOCIATIVITY_CAP: usize = 128;

/// Default cap for subgroup-lattice searches and `Aut(G)` backtracking.
pub const DEFAULT_GROUP_CAP: usize = 64;

/// A finite group given by its Cayley table.
#[derive(Clone)]
pub struct Group {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    labels: Vec<String>,
    spec: String,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("spec", &self.spec)
            .field("order", &self.order)
            .finish()
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}

impl Eq for Group {}

/// JSON document for a group: `{order, spec, labels, mul}` with `mul` row-major.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupDoc {
    pub order: usize,
    pub spec: String,
    pub labels: Vec<String>,
    pub mul: Vec<u32>,
}

impl Group {
    /// Builds a group from a row-major table, checking every group axiom.
    pub fn from_table(mul: Vec<u32>, labels: Vec<String>, spec: impl Into<String>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty group".into()));
        }
        if mul.len() != n * n {
            return Err(Error::InvalidTable(format!(
                "table has {} entries, expected {}",
                mul.len(),
                n * n
            )));
        }
        let mut inv = vec![u32::MAX; n];
        for x in 0..n {
            for y in 0..n {
                if mul[x * n + y] == 0 {
                    inv[x] = y as u32;
                }
            }
        }
        let g = Group {
            order: n,
            mul,
            inv,
            labels,
            spec: spec.into(),
        };
        g.check_axioms()?;
        Ok(g)
    }

    /// Latin square, identity, inverse and associativity checks.
    ///
    /// Associativity is exhaustive up to [`EXHAUSTIVE_ASSOCIATIVITY_CAP`] and
    /// sampled (`10 n^2` seeded random triples) above it.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        if self.mul.iter().any(|&v| v as usize >= n) {
            return Err(Error::InvalidTable("entry out of range".into()));
        }
        for x in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for y in 0..n {
                let r = self.mul[x * n + y] as usize;
                let c = self.mul[y * n + x] as usize;
                if row[r] || col[c] {
                    return Err(Error::InvalidTable(format!("not a Latin square at {x}")));
                }
                row[r] = true;
                col[c] = true;
            }
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(Error::InvalidTable(format!("0 is not a two-sided identity at {x}")));
            }
            let i = self.inv[x] as usize;
            if i >= n || self.mul(x, i) != 0 || self.mul(i, x) != 0 {
                return Err(Error::InvalidTable(format!("element {x} has no two-sided inverse")));
            }
        }
        let assoc = |x: usize, y: usize, z: usize| self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z));
        if n <= EXHAUSTIVE_ASSOCIATIVITY_CAP {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if !assoc(x, y, z) {
                            return Err(Error::InvalidTable(format!("not associative at ({x},{y},{z})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..10 * n * n {
                let (x, y, z) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(x, y, z) {
                    return Err(Error::InvalidTable(format!("not associative at ({x},{y},{z})")));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The construction recipe this group was built from.
    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub(crate) fn with_spec(mut self, spec: impl Into<String>) -> Self {
        self.spec = spec.into();
        self
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[u32] {
        &self.mul
    }

    /// `g^{-1} x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn pow(&self, x: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(x) } else { x };
        let mut e = k.unsigned_abs();
        let (mut acc, mut b) = (0usize, base);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn elem_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).map(|x| self.elem_order(x)).fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// A generating sequence picked greedily by smallest index.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = vec![false; self.order];
        current[0] = true;
        for x in 1..self.order {
            if !current[x] {
                gens.push(x);
                let sub = self.generated_subgroup(&gens);
                current.iter_mut().for_each(|c| *c = false);
                for &e in sub.elements() {
                    current[e] = true;
                }
            }
        }
        gens
    }

    pub fn to_doc(&self) -> GroupDoc {
        GroupDoc {
            order: self.order,
            spec: self.spec.clone(),
            labels: self.labels.clone(),
            mul: self.mul.clone(),
        }
    }

    pub fn from_doc(doc: GroupDoc) -> Result<Self> {
        if doc.order != doc.labels.len() {
            return Err(Error::InvalidTable("order does not match label count".into()));
        }
        Group::from_table(doc.mul, doc.labels, doc.spec)
    }

    /// Conjugacy classes, canonically ordered by smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order;
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let class: BTreeSet<usize> = (0..n).map(|g| self.conj(x, g)).collect();
            for &y in &class {
                seen[y] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// Class of `h` under conjugation by the elements of `h_sub`.
    pub fn class_of(&self, h: usize, h_sub: &Subgroup) -> Result<Vec<usize>> {
        if !h_sub.contains(h) {
            return Err(Error::NotInSubgroup(h));
        }
        let class: BTreeSet<usize> = h_sub.elements().iter().map(|&k| self.conj(h, k)).collect();
        Ok(class.into_iter().collect())
    }

    /// Smallest subgroup containing `xs`.
    pub fn generated_subgroup(&self, xs: &[usize]) -> Subgroup {
        let n = self.order;
        let mut member = vec![false; n];
        member[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let gens: Vec<usize> = xs.iter().copied().filter(|&x| x != 0).collect();
        while let Some(s) = queue.pop_front() {
            for &x in &gens {
                let t = self.mul(s, x);
                if !member[t] {
                    member[t] = true;
                    queue.push_back(t);
                }
            }
        }
        Subgroup::from_mask(&member)
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        let gens = self.generators();
        h.elements()
            .iter()
            .all(|&x| gens.iter().all(|&g| h.contains(self.conj(x, g))))
    }

    /// `true` when `xs` is closed under multiplication and contains the identity.
    pub fn is_subgroup(&self, xs: &[usize]) -> bool {
        let mut mask = vec![false; self.order];
        for &x in xs {
            mask[x] = true;
        }
        mask[0] && xs.iter().all(|&x| xs.iter().all(|&y| mask[self.mul(x, y)]))
    }

    pub fn center(&self) -> Subgroup {
        let n = self.order;
        let mask: Vec<bool> = (0..n)
            .map(|x| (0..n).all(|y| self.mul(x, y) == self.mul(y, x)))
            .collect();
        Subgroup::from_mask(&mask)
    }

    /// The section `upper / lower`; `lower` must be normal in `upper`.
    pub fn section(&self, upper: &Subgroup, lower: &Subgroup) -> Result<Section> {
        if !lower.elements().iter().all(|&x| upper.contains(x)) {
            return Err(Error::NotApplicable("lower subgroup is not contained in the upper one".into()));
        }
        let normal = lower
            .elements()
            .iter()
            .all(|&x| upper.elements().iter().all(|&g| lower.contains(self.conj(x, g))));
        if !normal {
            return Err(Error::NotNormal);
        }
        let n = self.order;
        let mut projection = vec![None; n];
        let mut reps = Vec::new();
        for &u in upper.elements() {
            if projection[u].is_some() {
                continue;
            }
            let idx = reps.len();
            reps.push(u);
            for &l in lower.elements() {
                projection[self.mul(u, l)] = Some(idx);
            }
        }
        let m = reps.len();
        let mut mul = vec![0u32; m * m];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                mul[i * m + j] = projection[self.mul(a, b)].expect("closed") as u32;
            }
        }
        let labels = reps
            .iter()
            .map(|&r| if lower.order() == 1 { self.label(r).to_string() } else { format!("[{}]", self.label(r)) })
            .collect();
        let spec = format!("section({};{:?};{:?})", self.spec, upper.elements(), lower.elements());
        let quotient = Group::from_table(mul, labels, spec)?;
        Ok(Section {
            upper: upper.clone(),
            lower: lower.clone(),
            quotient: Arc::new(quotient),
            projection,
            reps,
        })
    }

    /// `G / N` as a section with `U = G`.
    pub fn quotient_group(&self, normal: &Subgroup) -> Result<Section> {
        if !self.is_normal(normal) {
            return Err(Error::NotNormal);
        }
        self.section(&Subgroup::whole(self.order), normal)
    }

    /// `true` iff every coset of `h` other than `h` lies in one conjugacy class.
    pub fn is_camina_pair(&self, h: &Subgroup) -> Result<bool> {
        if h.order() == 1 || h.order() == self.order {
            return Err(Error::NotProperNontrivial);
        }
        if !self.is_normal(h) {
            return Err(Error::NotNormal);
        }
        let classes = self.conjugacy_classes();
        let mut class_of = vec![0usize; self.order];
        for (i, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x] = i;
            }
        }
        Ok((0..self.order)
            .filter(|&g| !h.contains(g))
            .all(|g| h.elements().iter().all(|&k| class_of[self.mul(g, k)] == class_of[g])))
    }

    /// Inner automorphisms `x -> g^{-1} x g`, one permutation per element of a generating set.
    pub fn inner_automorphisms(&self) -> crate::perm::PermGroup {
        let gens = self
            .generators()
            .into_iter()
            .map(|g| crate::perm::Perm::from_fn(self.order, |x| self.conj(x, g)))
            .collect();
        crate::perm::PermGroup::new(self.order, gens)
    }
}

/// A subgroup given by its sorted element list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    /// Wraps a sorted element list; callers vouch for closure.
    pub fn from_sorted(elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup { elements }
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        Subgroup {
            elements: mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect(),
        }
    }

    pub fn trivial() -> Self {
        Subgroup { elements: vec![0] }
    }

    pub fn whole(n: usize) -> Self {
        Subgroup { elements: (0..n).collect() }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &x in &self.elements {
            m[x] = true;
        }
        m
    }
}

/// A section `U/L` with its quotient table and the canonical projection.
#[derive(Clone, Debug)]
pub struct Section {
    upper: Subgroup,
    lower: Subgroup,
    quotient: Arc<Group>,
    projection: Vec<Option<usize>>,
    reps: Vec<usize>,
}

impl Section {
    pub fn upper(&self) -> &Subgroup {
        &self.upper
    }

    pub fn lower(&self) -> &Subgroup {
        &self.lower
    }

    pub fn quotient(&self) -> &Arc<Group> {
        &self.quotient
    }

    /// `π(x)` for `x ∈ U`.
    pub fn project(&self, x: usize) -> Option<usize> {
        self.projection[x]
    }

    /// Smallest element of the coset indexed by `q`.
    pub fn representative(&self, q: usize) -> usize {
        self.reps[q]
    }

    /// Full preimage `π^{-1}(q)` in increasing order.
    pub fn preimage(&self, q: usize) -> Vec<usize> {
        self.projection
            .iter()
            .enumerate()
            .filter(|(_, p)| **p == Some(q))
            .map(|(x, _)| x)
            .collect()
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Prime factorisation as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
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

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sizes(classes: &[Vec<usize>]) -> Vec<usize> {
        let mut s: Vec<usize> = classes.iter().map(Vec::len).collect();
        s.sort();
        s
    }

    #[test]
    fn cyclic_classes_are_singletons() {
        let g = build_group("cyclic:4").unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(sizes(&g.conjugacy_classes()), vec![1, 1, 1, 1]);
    }

    #[test]
    fn class_sizes_match_brute_force() {
        let d8 = build_group("dihedral:8").unwrap();
        // independent: count pairs (x, g) with g^{-1}xg computed by hand through the table
        let mut classes: Vec<BTreeSet<usize>> = Vec::new();
        for x in 0..8 {
            let mut c = BTreeSet::new();
            for g in 0..8 {
                let gi = d8.inv(g);
                c.insert(d8.mul(gi, d8.mul(x, g)));
            }
            if !classes.contains(&c) {
                classes.push(c);
            }
        }
        let mut brute: Vec<usize> = classes.iter().map(BTreeSet::len).collect();
        brute.sort();
        assert_eq!(brute, vec![1, 1, 2, 2, 2]);
        assert_eq!(sizes(&d8.conjugacy_classes()), brute);

        let a5 = build_group("A5").unwrap();
        assert_eq!(sizes(&a5.conjugacy_classes()), vec![1, 12, 12, 15, 20]);
    }

    #[test]
    fn classes_inside_subgroups() {
        let s3 = build_group("dihedral:6").unwrap();
        let c3 = s3.generated_subgroup(&[1]);
        assert_eq!(s3.class_of(1, &c3).unwrap(), vec![1]);
        assert_eq!(s3.class_of(1, &Subgroup::whole(6)).unwrap(), vec![1, 2]);
        assert_eq!(s3.class_of(0, &c3).unwrap(), vec![0]);
        assert_eq!(s3.class_of(3, &c3), Err(Error::NotInSubgroup(3)));
    }

    #[test]
    fn generated_subgroups() {
        let d8 = build_group("dihedral:16").unwrap();
        assert_eq!(d8.generated_subgroup(&[]).elements(), &[0]);
        assert_eq!(d8.generated_subgroup(&[2]).elements(), &[0, 2, 4, 6]);
        let a5 = build_group("A5").unwrap();
        let five = (0..60).find(|&x| a5.elem_order(x) == 5).unwrap();
        let c5 = a5.generated_subgroup(&[five]);
        let inv = (0..60)
            .filter(|&x| a5.elem_order(x) == 2)
            .find(|&t| c5.elements().iter().any(|&y| !c5.contains(a5.conj(y, t))))
            .unwrap();
        assert_eq!(a5.generated_subgroup(&[five, inv]).order(), 60);
    }

    #[test]
    fn quotients() {
        let d8 = build_group("dihedral:8").unwrap();
        let triv = d8.quotient_group(&Subgroup::trivial()).unwrap();
        assert_eq!(triv.quotient().table(), d8.table());
        let rot = d8.generated_subgroup(&[1]);
        assert_eq!(d8.quotient_group(&rot).unwrap().quotient().order(), 2);

        let a4 = build_group("A4").unwrap();
        let v4 = Subgroup::from_mask(&(0..12).map(|x| a4.elem_order(x) <= 2).collect::<Vec<_>>());
        assert_eq!(v4.order(), 4);
        let q = a4.quotient_group(&v4).unwrap();
        assert_eq!(q.quotient().order(), 3);
        assert!(q.quotient().is_abelian());
        assert_eq!(q.quotient().elem_order(1), 3);

        let not_normal = d8.generated_subgroup(&[4]);
        assert_eq!(d8.quotient_group(&not_normal).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn projection_is_a_homomorphism() {
        for spec in ["dihedral:12", "A4", "quaternion:16", "S4"] {
            let g = build_group(spec).unwrap();
            let z = g.center();
            let s = g.quotient_group(&z).unwrap();
            let q = s.quotient();
            for x in 0..g.order() {
                for y in 0..g.order() {
                    let lhs = s.project(g.mul(x, y)).unwrap();
                    let rhs = q.mul(s.project(x).unwrap(), s.project(y).unwrap());
                    assert_eq!(lhs, rhs, "{spec}");
                }
            }
        }
    }

    #[test]
    fn camina_pairs() {
        let s3 = build_group("dihedral:6").unwrap();
        assert!(s3.is_camina_pair(&s3.generated_subgroup(&[1])).unwrap());
        let c6 = build_group("cyclic:6").unwrap();
        assert!(!c6.is_camina_pair(&c6.generated_subgroup(&[3])).unwrap());
        let q8 = build_group("quaternion:8").unwrap();
        assert!(q8.is_camina_pair(&q8.center()).unwrap());
        assert_eq!(q8.is_camina_pair(&Subgroup::trivial()), Err(Error::NotProperNontrivial));
        let d8 = build_group("dihedral:8").unwrap();
        assert_eq!(d8.is_camina_pair(&d8.generated_subgroup(&[4])), Err(Error::NotNormal));
    }

    #[test]
    fn camina_classes_are_unions_of_cosets() {
        for spec in ["dihedral:10", "A4", "quaternion:8", "frobenius:7:3", "extraspecial:27:+"] {
            let g = build_group(spec).unwrap();
            let normals = g.normal_subgroups().unwrap();
            for h in normals.iter().filter(|h| h.order() > 1 && h.order() < g.order()) {
                if !g.is_camina_pair(h).unwrap() {
                    continue;
                }
                for c in g.conjugacy_classes() {
                    if h.contains(c[0]) {
                        continue;
                    }
                    for &x in &c {
                        for &k in h.elements() {
                            assert!(c.contains(&g.mul(x, k)), "{spec}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn doc_round_trip() {
        let g = build_group("quaternion:8").unwrap();
        let doc = g.to_doc();
        let json = serde_json::to_string(&doc).unwrap();
        let back = Group::from_doc(serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.spec(), g.spec());
    }

    #[test]
    fn rejects_broken_tables() {
        let labels = vec!["e".to_string(), "x".to_string()];
        assert!(Group::from_table(vec![0, 1, 1, 1], labels.clone(), "bad").is_err());
        assert!(Group::from_table(vec![0, 1, 1, 0], labels, "ok").is_ok());
    }

    #[test]
    fn factorisation() {
        assert_eq!(factorize(72), vec![(2, 3), (3, 2)]);
        assert_eq!(factorize(1), vec![]);
        assert!(is_prime(11));
        assert!(!is_prime(1));
    }
}
