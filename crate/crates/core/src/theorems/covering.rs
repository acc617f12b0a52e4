//! Covering families of bounded index and bounded `cl_f`, and the
//! single-function versions of the covering invariants `Cl` and `K`.
//!
//! The restricted quantities only look at the supplied `f`. They are
//! evidence about the full invariants (which quantify over every admissible
//! `f`), never a proof or refutation.

use crate::breadth::{breadth_profile, cl_f, lower_central_series, nilpotency_class, FFunction};
use crate::error::{contradiction, Error, Result};
use crate::group::{
    canonical_generators, center, enumerate_normal_subgroups, extend_normal, index_log,
    join_normals, product_of_normals, Elem, GroupTable, Subgroup,
};

use super::theorem1::theorem1;

/// Default cap on normal-subgroup enumeration for the covering explorers.
pub const DEFAULT_NORMAL_CAP: usize = 5000;
/// Default cap on the qualifying-family size for exact restricted `K`.
pub const DEFAULT_SUBSET_CAP: usize = 15;

#[derive(Debug, Clone)]
pub struct CoveringMember {
    /// The proper normal subgroup `C` that `N_C` must escape.
    pub avoided: Subgroup,
    pub subgroup: Subgroup,
    pub index_log: u32,
    pub cl_f: usize,
}

#[derive(Debug, Clone)]
pub struct CoveringReport {
    pub breadth: u32,
    /// The normal-subgroup list was truncated at the cap.
    pub sampled: bool,
    pub members: Vec<CoveringMember>,
    /// `∏ N_C = G`.
    pub product_is_whole: bool,
    /// `L = ∩ f(N_C, b(G) + 1)`.
    pub intersection: Subgroup,
    pub intersection_in_center: bool,
}

impl CoveringReport {
    pub fn passed(&self) -> bool {
        self.product_is_whole && self.intersection_in_center
    }
}

/// For every proper normal `C`, runs the recursive construction with
/// `n = b(G)`, `m = 1`, `H = G`, `C_1 = C` and the remaining `C_i`
/// trivial, then checks that the resulting family multiplies to `G` and
/// that `∩ f(N_C, b(G) + 1)` is central.
pub fn prop1_covering(f: &FFunction<'_>, cap: usize) -> Result<CoveringReport> {
    let group = f.group();
    if group.order() == 1 {
        return Err(Error::TrivialGroup);
    }
    let b = breadth_profile(group).max;
    let whole = Subgroup::whole(group);
    let trivial = Subgroup::trivial(group);
    let lattice = enumerate_normal_subgroups(group, cap);
    let p = group.prime() as usize;

    let mut members = Vec::new();
    for c in lattice.proper(group) {
        let mut cs = vec![c.clone()];
        cs.extend(std::iter::repeat_n(trivial.clone(), p - 2));
        let (n_c, _) = theorem1(f, b, 1, &whole, &cs)?;
        let idx = index_log(group, &whole, &n_c)?;
        let cl = cl_f(f, &n_c)?;
        if idx > b || cl > b as usize + 1 || n_c.is_subset(c) {
            return Err(contradiction("covering member violates its bounds"));
        }
        members.push(CoveringMember {
            avoided: c.clone(),
            subgroup: n_c,
            index_log: idx,
            cl_f: cl,
        });
    }

    let product = product_of_normals(group, members.iter().map(|m| &m.subgroup))?;
    let mut intersection = whole.clone();
    for m in &members {
        intersection = intersection.intersection(&f.eval(&m.subgroup, b as usize + 1));
    }
    let z = center(group);
    Ok(CoveringReport {
        breadth: b,
        sampled: !lattice.complete,
        product_is_whole: product == whole,
        intersection_in_center: intersection.is_subset(&z),
        intersection,
        members,
    })
}

struct Qualified {
    subgroup: Subgroup,
    index_log: u32,
    cl_f: usize,
}

fn qualified_lattice(f: &FFunction<'_>, cap: usize) -> Result<Vec<Qualified>> {
    let group = f.group();
    let lattice = enumerate_normal_subgroups(group, cap);
    if !lattice.complete {
        return Err(Error::EnumerationCapExceeded { cap });
    }
    let whole = Subgroup::whole(group);
    lattice
        .subgroups
        .into_iter()
        .map(|s| {
            Ok(Qualified {
                index_log: index_log(group, &whole, &s)?,
                cl_f: cl_f(f, &s)?,
                subgroup: s,
            })
        })
        .collect()
}

fn qualifying(lattice: &[Qualified], n: usize) -> Vec<&Subgroup> {
    lattice
        .iter()
        .filter(|q| (q.index_log as usize) < n && q.cl_f <= n)
        .map(|q| &q.subgroup)
        .collect()
}

fn restricted_cl_from(group: &GroupTable, lattice: &[Qualified]) -> Result<usize> {
    let whole = Subgroup::whole(group);
    let limit = group.exponent() as usize + 3;
    for n in 1..=limit {
        let product = product_of_normals(group, qualifying(lattice, n))?;
        if product == whole {
            return Ok(n);
        }
    }
    Err(contradiction("no level admits a covering family"))
}

/// Least `n >= 1` such that the normal subgroups with
/// `log_p |G : N| <= n - 1` and `cl_f(N) <= n` multiply to `G`. Taking all
/// of them maximizes the product, so this decides whether some covering
/// sequence exists for this `f`.
pub fn cl_restricted(f: &FFunction<'_>, cap: usize) -> Result<usize> {
    let lattice = qualified_lattice(f, cap)?;
    restricted_cl_from(f.group(), &lattice)
}

#[derive(Debug, Clone)]
pub struct KBounds {
    /// The restricted `Cl`.
    pub level: usize,
    pub qualifying_count: usize,
    /// `∩ f(N, level)` over the full qualifying family.
    pub lower: Subgroup,
    /// Join over every covering subfamily of its intersection; only when
    /// the family is no larger than the subset cap.
    pub exact: Option<Subgroup>,
    pub lower_in_center: bool,
    pub exact_in_center: Option<bool>,
}

/// Bounds on the single-function version of `K(G)`.
pub fn k_restricted_bounds(f: &FFunction<'_>, cap: usize, subset_cap: usize) -> Result<KBounds> {
    let group = f.group();
    let lattice = qualified_lattice(f, cap)?;
    let level = restricted_cl_from(group, &lattice)?;
    let family: Vec<&Subgroup> = qualifying(&lattice, level);
    let values: Vec<Subgroup> = family.iter().map(|s| f.eval(s, level)).collect();
    let whole = Subgroup::whole(group);
    let z = center(group);

    let lower = values
        .iter()
        .fold(whole.clone(), |acc, v| acc.intersection(v));

    let exact = if family.len() <= subset_cap {
        let gens: Vec<Vec<Elem>> = family.iter().map(|s| canonical_generators(group, s)).collect();
        let k = family.len();
        let trivial = Subgroup::trivial(group);
        let mut product = vec![trivial.clone(); 1 << k];
        let mut meet = vec![whole.clone(); 1 << k];
        let mut acc = trivial;
        for mask in 1usize..(1 << k) {
            let low = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            product[mask] = if family[low].is_subset(&product[rest]) {
                product[rest].clone()
            } else {
                extend_normal(group, &product[rest], &gens[low])
            };
            meet[mask] = meet[rest].intersection(&values[low]);
            if product[mask] == whole {
                meet[mask].set_normal(true);
                acc = join_normals(group, &acc, &meet[mask]);
            }
        }
        Some(acc)
    } else {
        None
    };

    Ok(KBounds {
        level,
        qualifying_count: family.len(),
        lower_in_center: lower.is_subset(&z),
        exact_in_center: exact.as_ref().map(|e| e.is_subset(&z)),
        lower,
        exact,
    })
}

pub const EVIDENCE_CAVEAT: &str =
    "restricted evidence — neither a proof nor a refutation of the conjecture over all of F_G";

#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub group_label: String,
    pub function: String,
    pub class: usize,
    /// `None` when the normal lattice exceeded the cap.
    pub cl_restricted: Option<usize>,
    pub sampled: bool,
    pub qualifying_count: Option<usize>,
    /// `γ_{Cl+1}(G) ⊆ lower restricted K`.
    pub gamma_in_lower: Option<bool>,
    /// `γ_{Cl+1}(G) ⊆ exact restricted K`, when computed.
    pub gamma_in_exact: Option<bool>,
}

impl ConjectureReport {
    pub fn class_bound_holds(&self) -> Option<bool> {
        self.cl_restricted.map(|c| self.class <= c)
    }

    /// The report, one finding per line, each tagged with
    /// [`EVIDENCE_CAVEAT`].
    pub fn lines(&self) -> Vec<String> {
        let yn = |b: Option<bool>| match b {
            Some(true) => "yes",
            Some(false) => "no",
            None => "n/a",
        };
        let mut out = vec![
            format!("group: {} (f = {})", self.group_label, self.function),
            format!("cl(G) = {}", self.class),
        ];
        match self.cl_restricted {
            Some(c) => out.push(format!("restricted Cl = {c}")),
            None => out.push("restricted Cl = n/a".into()),
        }
        if self.sampled {
            out.push("sampled: normal-subgroup enumeration exceeded the cap".into());
        }
        if let Some(k) = self.qualifying_count {
            out.push(format!("qualifying normal subgroups at level Cl: {k}"));
        }
        out.push(format!("cl(G) <= restricted Cl: {}", yn(self.class_bound_holds())));
        out.push(format!(
            "gamma_(Cl+1)(G) in lower restricted K: {}; in exact restricted K: {}",
            yn(self.gamma_in_lower),
            yn(self.gamma_in_exact)
        ));
        out.into_iter().map(|l| format!("{l}  [{EVIDENCE_CAVEAT}]")).collect()
    }
}

/// Restricted evidence for `cl(G) <= Cl(G)` and `γ_{Cl+1}(G) ⊆ K(G)`.
pub fn conjecture_report(f: &FFunction<'_>, cap: usize, subset_cap: usize) -> ConjectureReport {
    let group = f.group();
    let class = nilpotency_class(group, &Subgroup::whole(group));
    let mut report = ConjectureReport {
        group_label: group.label().to_string(),
        function: f.name().to_string(),
        class,
        cl_restricted: None,
        sampled: false,
        qualifying_count: None,
        gamma_in_lower: None,
        gamma_in_exact: None,
    };
    match k_restricted_bounds(f, cap, subset_cap) {
        Ok(bounds) => {
            let series = lower_central_series(group, &Subgroup::whole(group));
            let gamma = series
                .get(bounds.level)
                .cloned()
                .unwrap_or_else(|| Subgroup::trivial(group));
            report.cl_restricted = Some(bounds.level);
            report.qualifying_count = Some(bounds.qualifying_count);
            report.gamma_in_lower = Some(gamma.is_subset(&bounds.lower));
            report.gamma_in_exact = bounds.exact.as_ref().map(|e| gamma.is_subset(e));
        }
        Err(_) => report.sampled = true,
    }
    report
}
