//! Consequences of the recursive construction: the class-breadth subgroup
//! and the fixpoint refinement.

use crate::breadth::{breadth_profile, max_breadth_outside, nilpotency_class, FFunction};
use crate::error::{contradiction, precondition, Error, Result};
use crate::group::{index_log, is_normal, GroupTable, Subgroup};

use super::theorem1::{theorem1, TheoremOneCertificate};

#[derive(Debug, Clone)]
pub struct Theorem2Outcome {
    pub subgroup: Subgroup,
    pub certificate: TheoremOneCertificate,
    /// `b(G)`.
    pub breadth: u32,
    /// `log_p |G : N|`, recomputed.
    pub index_log: u32,
    /// `cl(N)`, recomputed from the lower central series.
    pub class: usize,
}

/// A normal `N` with `log_p |G : N| <= b(G)` and `cl(N) <= b(G) + 1`,
/// obtained from the recursive construction with `f = γ`, `n = b(G)`,
/// `m = 1`, `H = G` and trivial `C_i`.
pub fn theorem2(group: &GroupTable) -> Result<Theorem2Outcome> {
    if group.order() == 1 {
        return Err(Error::TrivialGroup);
    }
    let f = FFunction::lower_central(group);
    let b = breadth_profile(group).max;
    let whole = Subgroup::whole(group);
    let trivial = vec![Subgroup::trivial(group); group.prime() as usize - 1];
    let (n_sub, certificate) = theorem1(&f, b, 1, &whole, &trivial)?;

    let index = index_log(group, &whole, &n_sub)?;
    let class = nilpotency_class(group, &n_sub);
    if index > b || class > b as usize + 1 {
        return Err(contradiction(format!(
            "class-breadth subgroup has index p^{index} and class {class} with b(G) = {b}"
        )));
    }
    Ok(Theorem2Outcome {
        subgroup: n_sub,
        certificate,
        breadth: b,
        index_log: index,
        class,
    })
}

/// One iterate `N_k` of the refinement.
#[derive(Debug, Clone)]
pub struct RefinementStep {
    pub subgroup: Subgroup,
    /// `max { b_{N_k}(g) : g in N_k outside every C_i }`.
    pub interior_breadth: u32,
}

#[derive(Debug, Clone)]
pub struct Theorem3Outcome {
    pub subgroup: Subgroup,
    /// `N_0 = G, N_1, ..., N_{l+1}`.
    pub trace: Vec<RefinementStep>,
    /// The fixpoint index `l`.
    pub l: usize,
    pub index_log: u32,
    pub class: usize,
}

fn interior_breadth(group: &GroupTable, n: &Subgroup, cs: &[Subgroup]) -> Result<u32> {
    max_breadth_outside(group, n, cs, n)
        .ok_or_else(|| contradiction("iterate is covered by the C_i"))
}

/// Iterates `N_{k+1} = theorem1(n_k, 1, γ, N_k, [C_i ∩ N_k])` from
/// `N_0 = G`, where `n_k` is the interior breadth of `N_k`, until the
/// interior breadth stops dropping. Returns `N_{l+1}` with
/// `log_p |G : N| <= n(n + 2)`, `N ⊄ ∪ C_i` and
/// `cl(N) <= 1 + interior breadth of N`.
pub fn theorem3(group: &GroupTable, cs: &[Subgroup], n: u32) -> Result<Theorem3Outcome> {
    let p = group.prime() as usize;
    if cs.len() != p - 1 {
        return Err(precondition(format!("expected {} subgroups C_i", p - 1)));
    }
    let whole = Subgroup::whole(group);
    for c in cs {
        if !c.is_proper_subset(&whole) || !is_normal(group, c) {
            return Err(precondition("every C_i must be a proper normal subgroup"));
        }
    }
    let profile = breadth_profile(group);
    let hyp = group
        .elements()
        .filter(|&g| !cs.iter().any(|c| c.contains(g)))
        .map(|g| profile.per_element[g as usize])
        .max();
    if hyp.is_some_and(|b| b > n) {
        return Err(precondition(format!(
            "an element outside the C_i has breadth above {n}"
        )));
    }

    let f = FFunction::lower_central(group);
    let mut trace = vec![RefinementStep {
        interior_breadth: interior_breadth(group, &whole, cs)?,
        subgroup: whole.clone(),
    }];
    let l = loop {
        let k = trace.len() - 1;
        let current = &trace[k];
        let local_cs: Vec<Subgroup> = cs.iter().map(|c| c.intersection(&current.subgroup)).collect();
        let (next, _) = theorem1(&f, current.interior_breadth, 1, &current.subgroup, &local_cs)?;
        let next_breadth = interior_breadth(group, &next, cs)?;
        if next_breadth > current.interior_breadth {
            return Err(contradiction("interior breadth increased along the refinement"));
        }
        let done = next_breadth == current.interior_breadth;
        trace.push(RefinementStep {
            subgroup: next,
            interior_breadth: next_breadth,
        });
        if done {
            break k;
        }
    };
    if l > n as usize + 1 {
        return Err(contradiction(format!("fixpoint reached only at l = {l} > n + 1")));
    }

    let last = trace.last().expect("non-empty trace");
    let result = last.subgroup.clone();
    let index = index_log(group, &whole, &result)?;
    let class = nilpotency_class(group, &result);
    let covered = result.iter().all(|x| cs.iter().any(|c| c.contains(x)));
    if index > n * (n + 2) || covered || class > 1 + last.interior_breadth as usize {
        return Err(contradiction(format!(
            "refinement conclusions fail: index {index}, covered {covered}, class {class}"
        )));
    }
    Ok(Theorem3Outcome {
        subgroup: result,
        trace,
        l,
        index_log: index,
        class,
    })
}
