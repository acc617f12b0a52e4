//! Brute-force reference computations. They only use `mul`, `inv` and
//! plain sets so that they share no code path with the library's
//! subgroup machinery.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cbc_core::group::{Elem, GroupTable, Subgroup};

pub type Set = BTreeSet<Elem>;

pub fn set_of(s: &Subgroup) -> Set {
    s.iter().collect()
}

pub fn whole(g: &GroupTable) -> Set {
    g.elements().collect()
}

pub fn log_p(n: usize, p: u64) -> u32 {
    let mut k = 0;
    let mut m = n;
    while m > 1 {
        assert_eq!(m as u64 % p, 0, "{n} is not a power of {p}");
        m /= p as usize;
        k += 1;
    }
    k
}

pub fn comm(g: &GroupTable, x: Elem, y: Elem) -> Elem {
    g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y))
}

/// Closure of `gens` under multiplication, by repeated products until
/// nothing new appears.
pub fn closure(g: &GroupTable, gens: impl IntoIterator<Item = Elem>) -> Set {
    let mut set: Set = gens.into_iter().collect();
    set.insert(g.identity());
    loop {
        let current: Vec<Elem> = set.iter().copied().collect();
        let mut grew = false;
        for &a in &current {
            for &b in &current {
                grew |= set.insert(g.mul(a, b));
            }
        }
        if !grew {
            return set;
        }
    }
}

/// Same as [`closure`] but multiplies only by the original generators, for
/// larger sets.
pub fn closure_by_generators(g: &GroupTable, gens: &[Elem]) -> Set {
    let mut set: Set = BTreeSet::from([g.identity()]);
    let mut frontier = vec![g.identity()];
    while let Some(x) = frontier.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

pub fn centralizer(g: &GroupTable, x: Elem) -> Set {
    g.elements().filter(|&y| g.mul(x, y) == g.mul(y, x)).collect()
}

pub fn breadth(g: &GroupTable) -> u32 {
    g.elements()
        .map(|x| log_p(g.order() / centralizer(g, x).len(), g.prime()))
        .max()
        .unwrap_or(0)
}

pub fn center(g: &GroupTable) -> Set {
    g.elements()
        .filter(|&x| g.elements().all(|y| g.mul(x, y) == g.mul(y, x)))
        .collect()
}

/// `[A, B]` from every commutator.
pub fn commutator_subgroup(g: &GroupTable, a: &Set, b: &Set) -> Set {
    let mut gens = BTreeSet::new();
    for &x in a {
        for &y in b {
            gens.insert(comm(g, x, y));
        }
    }
    let gens: Vec<Elem> = gens.into_iter().collect();
    closure_by_generators(g, &gens)
}

pub fn lower_central(g: &GroupTable, h: &Set) -> Vec<Set> {
    let mut series = vec![h.clone()];
    while series.last().unwrap().len() > 1 {
        let next = commutator_subgroup(g, series.last().unwrap(), h);
        if &next == series.last().unwrap() {
            break;
        }
        series.push(next);
    }
    series
}

pub fn class(g: &GroupTable, h: &Set) -> usize {
    let series = lower_central(g, h);
    series.iter().position(|s| s.len() == 1).unwrap_or(series.len())
}

pub fn is_subgroup(g: &GroupTable, s: &Set) -> bool {
    s.contains(&g.identity()) && s.iter().all(|&a| s.iter().all(|&b| s.contains(&g.mul(a, b))))
}

pub fn is_normal(g: &GroupTable, s: &Set) -> bool {
    g.elements()
        .all(|x| s.iter().all(|&h| s.contains(&g.mul(g.mul(g.inv(x), h), x))))
}

pub fn conjugacy_classes(g: &GroupTable) -> Vec<Set> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in g.elements() {
        if seen.contains(&x) {
            continue;
        }
        let class: Set = g.elements().map(|y| g.mul(g.mul(g.inv(y), x), y)).collect();
        seen.extend(class.iter().copied());
        out.push(class);
    }
    out
}

/// Every normal subgroup, as closed unions of conjugacy classes. Only for
/// groups with few classes.
pub fn normal_subgroups(g: &GroupTable) -> BTreeSet<Set> {
    let classes: Vec<Set> = conjugacy_classes(g)
        .into_iter()
        .filter(|c| !c.contains(&g.identity()))
        .collect();
    assert!(classes.len() <= 20, "too many classes for the subset oracle");
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << classes.len()) {
        let mut s: Set = BTreeSet::from([g.identity()]);
        for (i, c) in classes.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s.extend(c.iter().copied());
            }
        }
        if s.len() <= g.order() && g.order().is_multiple_of(s.len()) && is_subgroup(g, &s) {
            out.insert(s);
        }
    }
    out
}

/// `{ x in N : [x, c] in [C1, N] for every c in C2 }`.
pub fn lemma1_p(g: &GroupTable, n: &Set, c1: &Set, c2: &Set) -> Set {
    let target = commutator_subgroup(g, c1, n);
    n.iter()
        .copied()
        .filter(|&x| c2.iter().all(|&c| target.contains(&comm(g, x, c))))
        .collect()
}

/// `|C2 ∩ Z(x)|`-based relative breadth.
pub fn breadth_rel(g: &GroupTable, x: Elem, h: &Set) -> u32 {
    let inside = h.iter().filter(|&&y| g.mul(x, y) == g.mul(y, x)).count();
    log_p(h.len() / inside, g.prime())
}

/// Frattini subgroup of a p-group: `G' G^p`.
pub fn frattini(g: &GroupTable) -> Set {
    let w = whole(g);
    let mut gens: Vec<Elem> = commutator_subgroup(g, &w, &w).into_iter().collect();
    gens.extend(g.elements().map(|x| power(g, x, g.prime())));
    closure_by_generators(g, &gens)
}

pub fn power(g: &GroupTable, x: Elem, k: u64) -> Elem {
    (0..k).fold(g.identity(), |acc, _| g.mul(acc, x))
}
