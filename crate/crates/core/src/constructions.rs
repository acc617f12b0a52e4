//! Index-`p` subgroup constructions used by the recursive theorem driver.
//!
//! Every construction re-verifies its conclusions before returning and
//! reports a failed check as [`Error::InternalContradiction`].

use fixedbitset::FixedBitSet;

use crate::breadth::breadth_rel;
use crate::error::{contradiction, precondition, Error, Result};
use crate::group::{
    canonical_generators, commutator_subgroup, extend_normal, index_log, is_normal,
    join_normals, power_subgroup, Elem, GroupTable, Subgroup,
};

/// Coordinates of `C2/V` over `F_p` when that quotient is elementary
/// abelian.
///
/// The basis is chosen greedily: each basis element is the smallest index
/// in `C2` outside the subgroup generated so far.
#[derive(Debug, Clone)]
pub struct ElementaryQuotient {
    pub basis: Vec<Elem>,
    /// Base-`p` code of each element's coordinate vector, first coordinate
    /// most significant; `u32::MAX` outside `C2`.
    coords: Vec<u32>,
    prime: u32,
    top: Subgroup,
}

impl ElementaryQuotient {
    pub fn new(group: &GroupTable, top: &Subgroup, bottom: &Subgroup) -> Result<Self> {
        if !bottom.is_subset(top) {
            return Err(Error::NotContained);
        }
        if !is_normal(group, bottom) {
            return Err(precondition("the bottom subgroup must be normal"));
        }
        let gens = canonical_generators(group, top);
        let p = group.prime();
        for (i, &x) in gens.iter().enumerate() {
            if !bottom.contains(group.power(x, p)) {
                return Err(Error::NotElementaryAbelian);
            }
            for &y in &gens[i + 1..] {
                if !bottom.contains(group.commutator(x, y)) {
                    return Err(Error::NotElementaryAbelian);
                }
            }
        }

        let mut basis = Vec::new();
        let mut span = bottom.clone();
        while let Some(b) = span.first_outside(top) {
            basis.push(b);
            span = extend_normal(group, &span, &[b]);
        }

        let d = basis.len();
        let p32 = p as u32;
        let bottom_list = bottom.to_vec();
        let mut coords = vec![u32::MAX; group.order()];
        let total = p32.pow(d as u32);
        for code in 0..total {
            let mut rep = group.identity();
            let mut c = code;
            let mut digits = vec![0u32; d];
            for slot in digits.iter_mut().rev() {
                *slot = c % p32;
                c /= p32;
            }
            for (i, &digit) in digits.iter().enumerate() {
                rep = group.mul(rep, group.power(basis[i], u64::from(digit)));
            }
            for &v in &bottom_list {
                coords[group.mul(rep, v) as usize] = code;
            }
        }
        Ok(ElementaryQuotient {
            basis,
            coords,
            prime: p32,
            top: top.clone(),
        })
    }

    /// `log_p |C2 : V|`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coordinates(&self, x: Elem) -> Option<Vec<u32>> {
        let code = *self.coords.get(x as usize)?;
        if code == u32::MAX {
            return None;
        }
        let mut c = code;
        let mut digits = vec![0; self.dim()];
        for slot in digits.iter_mut().rev() {
            *slot = c % self.prime;
            c /= self.prime;
        }
        Some(digits)
    }

    /// Nonzero dual vectors with first nonzero entry 1, in lexicographic
    /// order. Each one names a distinct index-`p` subgroup.
    pub fn normalized_duals(&self) -> Vec<Vec<u32>> {
        let d = self.dim();
        let total = self.prime.pow(d as u32);
        (1..total)
            .map(|code| {
                let mut c = code;
                let mut v = vec![0; d];
                for slot in v.iter_mut().rev() {
                    *slot = c % self.prime;
                    c /= self.prime;
                }
                v
            })
            .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
            .collect()
    }

    /// `{ x in C2 : <dual, coords(x)> = 0 }`.
    pub fn hyperplane(&self, dual: &[u32]) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.coords.len());
        for x in self.top.iter() {
            let coords = self.coordinates(x).expect("member of the top subgroup");
            let dot: u32 = coords
                .iter()
                .zip(dual)
                .map(|(a, b)| a * b)
                .sum::<u32>()
                % self.prime;
            if dot == 0 {
                members.insert(x as usize);
            }
        }
        Subgroup::from_members_trusted(members)
    }

    /// Hyperplanes in dual-vector order.
    pub fn hyperplanes(&self) -> impl Iterator<Item = Subgroup> + '_ {
        self.normalized_duals()
            .into_iter()
            .map(move |dual| self.hyperplane(&dual))
    }
}

/// All index-`p` subgroups of `C2` containing `V`, sorted by member list.
/// Requires `C2/V` elementary abelian; there are `(p^d - 1)/(p - 1)` of
/// them for `|C2 : V| = p^d`.
pub fn maximal_subgroups_through(
    group: &GroupTable,
    c2: &Subgroup,
    v: &Subgroup,
) -> Result<Vec<Subgroup>> {
    let eq = ElementaryQuotient::new(group, c2, v)?;
    let mut out: Vec<Subgroup> = eq.hyperplanes().collect();
    out.sort_by(Subgroup::cmp_members);
    Ok(out)
}

/// `P = { g in N : [g, C2] ⊆ [C1, N] }` for normal `N`, `C1 ⊆ C2`.
///
/// Uses that `[C1, N]` is normal: `[g, C2]` lies in it iff the commutators
/// with a generating set of `C2` do. Checks afterwards that `P` contains
/// every `g` with `b_{C1}(g) >= b_{C2}(g)`, that `P` is normal, and that
/// `P = N` forces `[C1, N] = [C2, N]`.
pub fn lemma1_p(
    group: &GroupTable,
    n: &Subgroup,
    c1: &Subgroup,
    c2: &Subgroup,
) -> Result<Subgroup> {
    if !c1.is_subset(c2) {
        return Err(precondition("lemma1_p needs C1 ⊆ C2"));
    }
    for (name, s) in [("N", n), ("C1", c1), ("C2", c2)] {
        if !is_normal(group, s) {
            return Err(precondition(format!("{name} is not normal")));
        }
    }
    let target = commutator_subgroup(group, c1, n);
    let gens = canonical_generators(group, c2);
    let mut members = FixedBitSet::with_capacity(group.order());
    for x in n.iter() {
        if gens.iter().all(|&y| target.contains(group.commutator(x, y))) {
            members.insert(x as usize);
        }
    }
    let p = Subgroup::from_members_trusted(members);

    for x in n.iter() {
        if breadth_rel(group, x, c1) >= breadth_rel(group, x, c2) && !p.contains(x) {
            return Err(contradiction(format!(
                "element {x} has b_C1 >= b_C2 but lies outside P"
            )));
        }
    }
    if !is_normal(group, &p) {
        return Err(contradiction("P is not normal"));
    }
    if p == *n && target != commutator_subgroup(group, c2, n) {
        return Err(contradiction("P = N but [C1, N] != [C2, N]"));
    }
    Ok(p)
}

/// A normal `C3` with `C1 ⊆ C3 ⊆ C2` and `|C2 : C3| = p`.
///
/// `C1 [C2, G]` is proper in `C2`; adding `p`-th powers of `C2` leaves an
/// elementary abelian top, and the first hyperplane above it in dual order
/// is returned.
pub fn lemma2_refine(group: &GroupTable, c1: &Subgroup, c2: &Subgroup) -> Result<Subgroup> {
    if !c1.is_proper_subset(c2) {
        return Err(precondition("lemma2_refine needs C1 ⊊ C2"));
    }
    if !is_normal(group, c1) || !is_normal(group, c2) {
        return Err(precondition("lemma2_refine needs C1, C2 normal"));
    }
    let whole = Subgroup::whole(group);
    let k = join_normals(group, c1, &commutator_subgroup(group, c2, &whole));
    if !k.is_proper_subset(c2) {
        return Err(contradiction("C1[C2, G] is not proper in C2"));
    }
    let powers = power_subgroup(group, c2);
    if !is_normal(group, &powers) {
        return Err(contradiction("power subgroup of a normal subgroup is not normal"));
    }
    let v = join_normals(group, &k, &powers);
    let eq = ElementaryQuotient::new(group, c2, &v)?;
    let c3 = eq
        .hyperplanes()
        .next()
        .ok_or_else(|| contradiction("C2/V is trivial"))?;

    let fresh = Subgroup::from_members_trusted(c3.members().clone());
    if !(c1.is_subset(&c3)
        && c3.is_subset(c2)
        && index_log(group, c2, &c3)? == 1
        && is_normal(group, &fresh))
    {
        return Err(contradiction("lemma2_refine output fails its conclusions"));
    }
    c3.set_normal(true);
    Ok(c3)
}

/// Every subgroup `C` with `D1 ∩ D2 ⊆ C ⊆ H`, for `D1 != D2` of index `p`
/// in `H`: the bottom, the `p + 1` hyperplanes and `H`.
pub fn subgroups_between(
    group: &GroupTable,
    h: &Subgroup,
    d1: &Subgroup,
    d2: &Subgroup,
) -> Result<Vec<Subgroup>> {
    let bottom = d1.intersection(d2);
    let eq = ElementaryQuotient::new(group, h, &bottom)?;
    let mut out = vec![bottom];
    out.extend(eq.hyperplanes());
    out.push(h.clone());
    Ok(out)
}

/// An index-`p` subgroup `D` of `H`, normal in `G`, with
/// `D ∩ D1 = D ∩ D2 = D1 ∩ D2`, different from `D1` and `D2`, and not
/// contained in any member of `avoid` (at most `p - 2` proper subgroups of
/// `H`).
pub fn lemma4_select(
    group: &GroupTable,
    h: &Subgroup,
    d1: &Subgroup,
    d2: &Subgroup,
    avoid: &[Subgroup],
) -> Result<Subgroup> {
    let p = group.prime() as usize;
    if avoid.len() + 2 > p {
        return Err(precondition(format!(
            "at most {} subgroups may be avoided, got {}",
            p - 2,
            avoid.len()
        )));
    }
    if d1 == d2 {
        return Err(precondition("D1 and D2 must differ"));
    }
    for (name, s) in [("H", h), ("D1", d1), ("D2", d2)] {
        if !is_normal(group, s) {
            return Err(precondition(format!("{name} is not normal")));
        }
    }
    for d in [d1, d2] {
        if !d.is_subset(h) || index_log(group, h, d)? != 1 {
            return Err(precondition("D1, D2 must have index p in H"));
        }
    }
    if avoid.iter().any(|a| !a.is_proper_subset(h)) {
        return Err(precondition("avoided subgroups must be proper in H"));
    }

    let bottom = d1.intersection(d2);
    let eq = ElementaryQuotient::new(group, h, &bottom)?;
    if eq.dim() != 2 {
        return Err(contradiction("H/(D1 ∩ D2) is not of order p^2"));
    }
    let chosen = eq
        .hyperplanes()
        .find(|c| c != d1 && c != d2 && !avoid.iter().any(|a| c.is_subset(a)))
        .ok_or(Error::SelectionExhausted)?;

    let fresh = Subgroup::from_members_trusted(chosen.members().clone());
    let ok = index_log(group, h, &chosen)? == 1
        && chosen.intersection(d1) == bottom
        && chosen.intersection(d2) == bottom
        && chosen != *d1
        && chosen != *d2
        && avoid.iter().all(|a| !chosen.is_subset(a))
        && is_normal(group, &fresh);
    if !ok {
        return Err(contradiction("lemma4_select output fails its conclusions"));
    }
    chosen.set_normal(true);
    Ok(chosen)
}
