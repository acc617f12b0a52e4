//! Conjugacy classes and the normal-subgroup lattice.

use std::collections::{HashSet, VecDeque};

use fixedbitset::FixedBitSet;

use super::ops::{canonical_generators, extend_normal, normal_closure};
use super::subgroup::Subgroup;
use super::table::{Elem, GroupTable};
use crate::error::{Error, Result};

/// Conjugacy classes sorted by minimal member; the identity's class first.
pub fn conjugacy_classes(group: &GroupTable) -> Vec<Vec<Elem>> {
    let n = group.order();
    let mut seen = FixedBitSet::with_capacity(n);
    let mut classes = Vec::new();
    for x in group.elements() {
        if seen.contains(x as usize) {
            continue;
        }
        seen.insert(x as usize);
        let mut class = vec![x];
        let mut head = 0;
        while head < class.len() {
            let y = class[head];
            head += 1;
            for &t in group.generators() {
                let c = group.conjugate(y, t);
                if !seen.put(c as usize) {
                    class.push(c);
                }
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

/// Result of a possibly truncated normal-subgroup enumeration.
#[derive(Debug, Clone)]
pub struct NormalLattice {
    /// Sorted by `(order, member list)`.
    pub subgroups: Vec<Subgroup>,
    /// `false` when the enumeration stopped at the cap.
    pub complete: bool,
    pub cap: usize,
}

impl NormalLattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Proper normal subgroups (everything but `G`).
    pub fn proper<'a>(&'a self, group: &GroupTable) -> impl Iterator<Item = &'a Subgroup> + 'a {
        let n = group.order();
        self.subgroups.iter().filter(move |s| s.order() < n)
    }
}

/// Every normal subgroup is a union of classes, hence the join of the
/// normal closures of the classes it contains. Enumerate joins breadth
/// first from the trivial subgroup, stopping once more than `cap` are found.
pub fn enumerate_normal_subgroups(group: &GroupTable, cap: usize) -> NormalLattice {
    let cap = cap.max(1);
    let mut atoms: Vec<(Subgroup, Vec<Elem>)> = Vec::new();
    let mut atom_seen = HashSet::new();
    for class in conjugacy_classes(group).into_iter().skip(1) {
        let closure = normal_closure(group, class.iter().copied());
        if atom_seen.insert(closure.members().clone()) {
            let gens = canonical_generators(group, &closure);
            atoms.push((closure, gens));
        }
    }

    let trivial = Subgroup::trivial(group);
    let mut found: HashSet<FixedBitSet> = HashSet::new();
    found.insert(trivial.members().clone());
    let mut all = vec![trivial.clone()];
    let mut queue = VecDeque::from([trivial]);
    let mut complete = true;

    'outer: while let Some(s) = queue.pop_front() {
        for (atom, gens) in &atoms {
            if atom.is_subset(&s) {
                continue;
            }
            let joined = extend_normal(group, &s, gens);
            if found.insert(joined.members().clone()) {
                joined.set_normal(true);
                if all.len() >= cap {
                    complete = false;
                    break 'outer;
                }
                all.push(joined.clone());
                queue.push_back(joined);
            }
        }
    }
    all.sort();
    NormalLattice {
        subgroups: all,
        complete,
        cap,
    }
}

/// All normal subgroups, or `EnumerationCapExceeded` when there are more
/// than `cap`.
pub fn normal_subgroups(group: &GroupTable, cap: usize) -> Result<Vec<Subgroup>> {
    let lattice = enumerate_normal_subgroups(group, cap);
    if lattice.complete {
        Ok(lattice.subgroups)
    } else {
        Err(Error::EnumerationCapExceeded { cap: lattice.cap })
    }
}
