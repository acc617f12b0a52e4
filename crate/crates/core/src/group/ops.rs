//! Subgroup primitives: closures, commutators, centralizers, normality.

use fixedbitset::FixedBitSet;

use super::subgroup::Subgroup;
use super::table::{log_exact, Elem, GroupTable};
use crate::error::{Error, Result};

fn bfs_members(group: &GroupTable, gens: &[Elem]) -> FixedBitSet {
    let mut members = FixedBitSet::with_capacity(group.order());
    members.insert(0);
    let mut queue = vec![0 as Elem];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &g in gens {
            let y = group.mul(x, g);
            if !members.put(y as usize) {
                queue.push(y);
            }
        }
    }
    members
}

/// `<X>`: the smallest subgroup containing `xs`.
pub fn generated_subgroup<I>(group: &GroupTable, xs: I) -> Subgroup
where
    I: IntoIterator<Item = Elem>,
{
    let mut gens = Vec::new();
    let mut members = bfs_members(group, &gens);
    for x in xs {
        if !members.contains(x as usize) {
            gens.push(x);
            members = bfs_members(group, &gens);
        }
    }
    Subgroup::from_members_trusted(members)
}

/// Greedy generating set: scan members in index order and keep each one
/// not already generated. Deterministic, sorted ascending.
pub fn canonical_generators(group: &GroupTable, h: &Subgroup) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut members = bfs_members(group, &gens);
    for x in h.iter() {
        if !members.contains(x as usize) {
            gens.push(x);
            members = bfs_members(group, &gens);
        }
    }
    gens
}

/// `<base, gens>` when `base` is normalized by `gens` (always true for
/// `base` normal in `G`). Runs over cosets of `base`.
pub(crate) fn extend_normal(group: &GroupTable, base: &Subgroup, gens: &[Elem]) -> Subgroup {
    let mut members = base.members().clone();
    let base_list = base.to_vec();
    let mut reps = vec![0 as Elem];
    let mut head = 0;
    while head < reps.len() {
        let r = reps[head];
        head += 1;
        for &x in gens {
            let y = group.mul(r, x);
            if !members.contains(y as usize) {
                for &a in &base_list {
                    members.insert(group.mul(y, a) as usize);
                }
                reps.push(y);
            }
        }
    }
    Subgroup::from_members_trusted(members)
}

/// Normal closure of `xs` in `G`.
pub fn normal_closure<I>(group: &GroupTable, xs: I) -> Subgroup
where
    I: IntoIterator<Item = Elem>,
{
    let mut gens: Vec<Elem> = Vec::new();
    let mut members = bfs_members(group, &gens);
    let mut pending: Vec<Elem> = xs.into_iter().collect();
    while let Some(x) = pending.pop() {
        if members.contains(x as usize) {
            continue;
        }
        gens.push(x);
        members = bfs_members(group, &gens);
        for &t in group.generators() {
            for &s in &gens {
                let c = group.conjugate(s, t);
                if !members.contains(c as usize) {
                    pending.push(c);
                }
            }
        }
    }
    let s = Subgroup::from_members_trusted(members);
    s.set_normal(true);
    s
}

/// `[g, H] = { [g, h] : h in H }` as a set (not a subgroup).
pub fn commutator_set(group: &GroupTable, g: Elem, h: &Subgroup) -> FixedBitSet {
    let mut out = FixedBitSet::with_capacity(group.order());
    for y in h.iter() {
        out.insert(group.commutator(g, y) as usize);
    }
    out
}

/// `[A, B]`. For normal `A`, `B` this is the normal closure of the
/// commutators of their generators; otherwise every pair is enumerated.
pub fn commutator_subgroup(group: &GroupTable, a: &Subgroup, b: &Subgroup) -> Subgroup {
    if is_normal(group, a) && is_normal(group, b) {
        let ga = canonical_generators(group, a);
        let gb = canonical_generators(group, b);
        let comms: Vec<Elem> = ga
            .iter()
            .flat_map(|&x| gb.iter().map(move |&y| (x, y)))
            .map(|(x, y)| group.commutator(x, y))
            .collect();
        normal_closure(group, comms)
    } else {
        commutator_subgroup_exhaustive(group, a, b)
    }
}

/// `[A, B]` from all `|A| * |B|` commutators.
pub fn commutator_subgroup_exhaustive(group: &GroupTable, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let mut comms = FixedBitSet::with_capacity(group.order());
    for x in a.iter() {
        for y in b.iter() {
            comms.insert(group.commutator(x, y) as usize);
        }
    }
    generated_subgroup(group, comms.ones().map(|x| x as Elem))
}

pub fn centralizer_of_element(group: &GroupTable, x: Elem) -> Subgroup {
    Subgroup::from_members_trusted(group.centralizer_bits(x).clone())
}

/// `Z_G(H)`, the intersection of the element centralizers over `H`.
pub fn centralizer_of_subgroup(group: &GroupTable, h: &Subgroup) -> Subgroup {
    let mut members = FixedBitSet::with_capacity(group.order());
    members.insert_range(..);
    for x in h.iter() {
        members.intersect_with(group.centralizer_bits(x));
    }
    let s = Subgroup::from_members_trusted(members);
    if is_normal(group, h) {
        s.set_normal(true);
    }
    s
}

pub fn center(group: &GroupTable) -> Subgroup {
    centralizer_of_subgroup(group, &Subgroup::whole(group))
}

/// Normality test against the generators of `G`; caches the answer on `h`.
pub fn is_normal(group: &GroupTable, h: &Subgroup) -> bool {
    if let Some(flag) = h.normal_cached() {
        return flag;
    }
    let normal = group
        .generators()
        .iter()
        .all(|&t| h.iter().all(|x| h.contains(group.conjugate(x, t))));
    h.set_normal(normal)
}

/// `g H g^-1 = H` for every `g` in `G`, without using the cache.
pub fn is_normal_exhaustive(group: &GroupTable, h: &Subgroup) -> bool {
    group
        .elements()
        .all(|g| h.iter().all(|x| h.contains(group.conjugate(x, g))))
}

/// `log_p |K : H|`.
pub fn index_log(group: &GroupTable, k: &Subgroup, h: &Subgroup) -> Result<u32> {
    if !h.is_subset(k) {
        return Err(Error::NotContained);
    }
    log_exact(k.order() / h.order(), group.prime()).ok_or(Error::NotContained)
}

/// `N_1 N_2 ... N_k` for normal subgroups.
pub fn product_of_normals<'a, I>(group: &GroupTable, ns: I) -> Result<Subgroup>
where
    I: IntoIterator<Item = &'a Subgroup>,
{
    let mut acc = Subgroup::trivial(group);
    for n in ns {
        if !is_normal(group, n) {
            return Err(Error::NotNormal);
        }
        acc = join_normals(group, &acc, n);
    }
    Ok(acc)
}

/// `A B` for `A`, `B` normal in `G`.
pub fn join_normals(group: &GroupTable, a: &Subgroup, b: &Subgroup) -> Subgroup {
    if b.is_subset(a) {
        return a.clone();
    }
    if a.is_subset(b) {
        return b.clone();
    }
    let gens = canonical_generators(group, b);
    let s = extend_normal(group, a, &gens);
    s.set_normal(true);
    s
}

/// `<x^p : x in H>`.
pub fn power_subgroup(group: &GroupTable, h: &Subgroup) -> Subgroup {
    let p = group.prime();
    let mut powers = FixedBitSet::with_capacity(group.order());
    for x in h.iter() {
        powers.insert(group.power(x, p) as usize);
    }
    generated_subgroup(group, powers.ones().map(|x| x as Elem))
}

/// Subgroup generated by the union of `a` and `b` (no normality needed).
pub fn join(group: &GroupTable, a: &Subgroup, b: &Subgroup) -> Subgroup {
    if b.is_subset(a) {
        return a.clone();
    }
    if a.is_subset(b) {
        return b.clone();
    }
    let mut gens = canonical_generators(group, a);
    gens.extend(canonical_generators(group, b));
    generated_subgroup(group, gens)
}
