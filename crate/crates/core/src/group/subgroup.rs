use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use super::table::{Elem, GroupTable};

/// A subgroup of a [`GroupTable`], stored as a bit set over element indices.
///
/// Equality, hashing and ordering only look at the member set. The
/// normality flag is a write-once cache.
#[derive(Clone)]
pub struct Subgroup {
    members: FixedBitSet,
    order: usize,
    normal: OnceLock<bool>,
}

impl Subgroup {
    /// Wraps a member set that the caller knows to be a subgroup.
    pub(crate) fn from_members_trusted(members: FixedBitSet) -> Self {
        let order = members.count_ones(..);
        Subgroup {
            members,
            order,
            normal: OnceLock::new(),
        }
    }

    /// Checks that `members` contains the identity and is closed under
    /// multiplication and inversion.
    pub fn from_members(group: &GroupTable, members: FixedBitSet) -> Option<Self> {
        if members.len() != group.order() || !members.contains(0) {
            return None;
        }
        let list: Vec<usize> = members.ones().collect();
        for &a in &list {
            if !members.contains(group.inv(a as Elem) as usize) {
                return None;
            }
            for &b in &list {
                if !members.contains(group.mul(a as Elem, b as Elem) as usize) {
                    return None;
                }
            }
        }
        Some(Self::from_members_trusted(members))
    }

    pub fn trivial(group: &GroupTable) -> Self {
        let mut members = FixedBitSet::with_capacity(group.order());
        members.insert(0);
        Self::with_normal(members, true)
    }

    pub fn whole(group: &GroupTable) -> Self {
        let mut members = FixedBitSet::with_capacity(group.order());
        members.insert_range(..);
        Self::with_normal(members, true)
    }

    pub(crate) fn with_normal(members: FixedBitSet, normal: bool) -> Self {
        let s = Self::from_members_trusted(members);
        let _ = s.normal.set(normal);
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones().map(|x| x as Elem)
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_proper_subset(&self, other: &Subgroup) -> bool {
        self.order < other.order && self.is_subset(other)
    }

    /// Intersection of two subgroups is a subgroup; normality is kept when
    /// both inputs are known to be normal.
    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        let s = Self::from_members_trusted(members);
        if self.normal_cached() == Some(true) && other.normal_cached() == Some(true) {
            let _ = s.normal.set(true);
        }
        s
    }

    pub fn normal_cached(&self) -> Option<bool> {
        self.normal.get().copied()
    }

    pub(crate) fn set_normal(&self, value: bool) -> bool {
        *self.normal.get_or_init(|| value)
    }

    /// Smallest member index outside `self`, if any, restricted to `within`.
    pub fn first_outside(&self, within: &Subgroup) -> Option<Elem> {
        within.iter().find(|&x| !self.contains(x))
    }

    /// Lexicographic comparison of the sorted member lists.
    pub fn cmp_members(&self, other: &Subgroup) -> Ordering {
        self.members.ones().cmp(other.members.ones())
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

/// Sorts by `(order, member list)`.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.cmp_members(other))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<usize> = self.members.ones().take(12).collect();
        write!(f, "Subgroup(order {}, {:?}", self.order, shown)?;
        if self.order > shown.len() {
            write!(f, " ..")?;
        }
        write!(f, ")")
    }
}
