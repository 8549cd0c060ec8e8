//! Subgroup lattice searches: all subgroups, normal subgroups, Frattini subgroup.

use std::collections::BTreeSet;

use super::{factorize, Group, Subgroup, DEFAULT_GROUP_CAP};
use crate::error::{Error, Result};

impl Group {
    /// Every subgroup, found by closing joins with cyclic subgroups.
    pub fn all_subgroups(&self) -> Result<Vec<Subgroup>> {
        let n = self.order();
        if n > DEFAULT_GROUP_CAP {
            return Err(Error::CapExceeded { what: "subgroup search", size: n, cap: DEFAULT_GROUP_CAP });
        }
        let cyclic: BTreeSet<Subgroup> = (0..n).map(|x| self.generated_subgroup(&[x])).collect();
        let mut all: BTreeSet<Subgroup> = cyclic.clone();
        let mut frontier: Vec<Subgroup> = cyclic.iter().cloned().collect();
        while let Some(h) = frontier.pop() {
            for c in &cyclic {
                if c.is_subset_of(&h) {
                    continue;
                }
                let joined = self.join_with(&h, c);
                if all.insert(joined.clone()) {
                    frontier.push(joined);
                }
            }
        }
        Ok(all.into_iter().collect())
    }

    fn join_with(&self, h: &Subgroup, c: &Subgroup) -> Subgroup {
        // generators of h are not tracked, so close over all of h plus a generator of c
        let gen_c = c.elements().iter().copied().find(|&x| self.generated_subgroup(&[x]) == *c).unwrap_or(0);
        let mut gens: Vec<usize> = self.small_generating_set(h);
        gens.push(gen_c);
        self.generated_subgroup(&gens)
    }

    fn small_generating_set(&self, h: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut cur = Subgroup::trivial();
        for &x in h.elements() {
            if !cur.contains(x) {
                gens.push(x);
                cur = self.generated_subgroup(&gens);
            }
        }
        gens
    }

    pub fn normal_subgroups(&self) -> Result<Vec<Subgroup>> {
        Ok(self.all_subgroups()?.into_iter().filter(|h| self.is_normal(h)).collect())
    }

    pub fn maximal_subgroups(&self) -> Result<Vec<Subgroup>> {
        let n = self.order();
        let proper: Vec<Subgroup> = self.all_subgroups()?.into_iter().filter(|h| h.order() < n).collect();
        Ok(proper
            .iter()
            .filter(|h| !proper.iter().any(|k| k.order() > h.order() && h.is_subset_of(k)))
            .cloned()
            .collect())
    }

    /// Intersection of all maximal subgroups.
    pub fn frattini(&self) -> Result<Subgroup> {
        let n = self.order();
        let mut mask = vec![true; n];
        for m in self.maximal_subgroups()? {
            let mm = m.mask(n);
            for x in 0..n {
                mask[x] &= mm[x];
            }
        }
        Ok(Subgroup::from_mask(&mask))
    }

    /// For a p-group: does some cyclic subgroup have index p?
    pub fn has_maximal_cyclic_subgroup(&self) -> Result<bool> {
        let n = self.order();
        let p = match factorize(n as u64).as_slice() {
            [(p, _)] => *p as usize,
            _ => return Err(Error::NotPrimePower(n)),
        };
        Ok((0..n).any(|x| self.elem_order(x) * p >= n))
    }
}

#[cfg(test)]
mod tests {
    use crate::group::build_group;
    use crate::Error;

    #[test]
    fn subgroup_counts() {
        assert_eq!(build_group("dihedral:8").unwrap().all_subgroups().unwrap().len(), 10);
        assert_eq!(build_group("quaternion:8").unwrap().all_subgroups().unwrap().len(), 6);
        assert_eq!(build_group("A4").unwrap().all_subgroups().unwrap().len(), 10);
        assert_eq!(build_group("S4").unwrap().all_subgroups().unwrap().len(), 30);
        assert_eq!(build_group("elemabelian:2^3").unwrap().all_subgroups().unwrap().len(), 16);
    }

    #[test]
    fn frattini_subgroups() {
        let q8 = build_group("quaternion:8").unwrap();
        assert_eq!(q8.center().order(), 2);
        assert_eq!(q8.frattini().unwrap().order(), 2);
        assert_eq!(build_group("elemabelian:3^2").unwrap().frattini().unwrap().order(), 1);
        assert_eq!(build_group("cyclic:8").unwrap().frattini().unwrap().order(), 4);
        assert_eq!(build_group("A5").unwrap().frattini().unwrap().order(), 1);
        let c = build_group("cyclic:4").unwrap();
        assert_eq!(c.center().order(), 4);
    }

    #[test]
    fn maximal_cyclic() {
        assert!(build_group("cyclic:27").unwrap().has_maximal_cyclic_subgroup().unwrap());
        assert!(build_group("dihedral:16").unwrap().has_maximal_cyclic_subgroup().unwrap());
        assert!(build_group("quaternion:16").unwrap().has_maximal_cyclic_subgroup().unwrap());
        assert!(!build_group("elemabelian:3^3").unwrap().has_maximal_cyclic_subgroup().unwrap());
        assert!(!build_group("extraspecial:27:+").unwrap().has_maximal_cyclic_subgroup().unwrap());
        assert_eq!(
            build_group("cyclic:6").unwrap().has_maximal_cyclic_subgroup(),
            Err(Error::NotPrimePower(6))
        );
    }
}
