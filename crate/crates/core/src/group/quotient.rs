use fixedbitset::FixedBitSet;

use super::ops::is_normal;
use super::subgroup::Subgroup;
use super::table::{Elem, GroupTable};
use crate::error::{Error, Result};

/// The natural map `G -> G/N`.
#[derive(Debug)]
pub struct Projection<'a> {
    pub source: &'a GroupTable,
    pub target: GroupTable,
    pub kernel: Subgroup,
    /// Source element to target element.
    pub map: Vec<Elem>,
    /// Target element to its minimal-index source representative.
    pub section: Vec<Elem>,
}

/// `G/N`. The target is closed breadth first over the images of `G`'s
/// generators, so a trivial kernel reproduces the source indexing.
pub fn quotient<'a>(group: &'a GroupTable, kernel: &Subgroup) -> Result<Projection<'a>> {
    if !is_normal(group, kernel) {
        return Err(Error::NotNormal);
    }
    let n = group.order();
    // Cosets keyed by their minimal member.
    let mut min_rep = vec![Elem::MAX; n];
    let kernel_list = kernel.to_vec();
    for x in group.elements() {
        if min_rep[x as usize] != Elem::MAX {
            continue;
        }
        for &k in &kernel_list {
            min_rep[group.mul(x, k) as usize] = x;
        }
    }
    let gens = group.generators().to_vec();
    let (target, index) = GroupTable::from_cayley(
        group.prime(),
        format!("{}/N", group.label()),
        0 as Elem,
        gens.len(),
        |&rep, g| min_rep[group.mul(rep, gens[g]) as usize],
        |&rep| rep,
    )?;
    let map: Vec<Elem> = (0..n).map(|x| index[&min_rep[x]]).collect();
    let mut section = vec![0; target.order()];
    for (rep, &t) in &index {
        section[t as usize] = *rep;
    }
    Ok(Projection {
        source: group,
        target,
        kernel: kernel.clone(),
        map,
        section,
    })
}

impl Projection<'_> {
    /// Image of a source subgroup.
    pub fn image(&self, s: &Subgroup) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.target.order());
        for x in s.iter() {
            members.insert(self.map[x as usize] as usize);
        }
        Subgroup::from_members_trusted(members)
    }

    /// `{ x : map(x) in S }`.
    pub fn preimage(&self, s: &Subgroup) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.source.order());
        for x in self.source.elements() {
            if s.contains(self.map[x as usize]) {
                members.insert(x as usize);
            }
        }
        Subgroup::from_members_trusted(members)
    }
}
