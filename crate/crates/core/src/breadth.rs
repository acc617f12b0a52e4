//! Breadth statistics, lower central series and subgroup-valued level
//! functions `f(N, i)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{
    centralizer_of_subgroup, commutator_subgroup, is_normal, Elem, GroupTable, Subgroup,
};

/// `b_H(x) = log_p |H : H ∩ Z_G(x)|`.
pub fn breadth_rel(group: &GroupTable, x: Elem, h: &Subgroup) -> u32 {
    let inside = h.members().intersection_count(group.centralizer_bits(x));
    exact_log(group, h.order() / inside)
}

fn exact_log(group: &GroupTable, n: usize) -> u32 {
    crate::group::log_exact(n, group.prime()).expect("index of a subgroup in a p-group")
}

/// Breadth of every element and the maximum `b(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BreadthProfile {
    pub per_element: Vec<u32>,
    pub max: u32,
}

pub fn breadth_profile(group: &GroupTable) -> BreadthProfile {
    let n = group.order();
    let per_element: Vec<u32> = group
        .elements()
        .map(|x| exact_log(group, n / group.centralizer_bits(x).count_ones(..)))
        .collect();
    let max = per_element.iter().copied().max().unwrap_or(0);
    BreadthProfile { per_element, max }
}

/// `max { b_F(g) : g in H, g outside every C }`, or `None` when every
/// element of `H` is covered.
pub fn max_breadth_outside(
    group: &GroupTable,
    h: &Subgroup,
    cs: &[Subgroup],
    f: &Subgroup,
) -> Option<u32> {
    h.iter()
        .filter(|&g| !cs.iter().any(|c| c.contains(g)))
        .map(|g| breadth_rel(group, g, f))
        .max()
}

/// `[γ_1(H), γ_2(H), ...]`, stopping at the first term equal to its
/// predecessor or trivial. For p-groups the last term is trivial.
pub fn lower_central_series(group: &GroupTable, h: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![h.clone()];
    loop {
        let last = series.last().expect("non-empty");
        if last.is_trivial() {
            break;
        }
        let next = commutator_subgroup(group, last, h);
        if next == *last {
            break;
        }
        series.push(next);
    }
    series
}

/// Least `c` with `γ_{c+1}(H)` trivial.
pub fn nilpotency_class(group: &GroupTable, h: &Subgroup) -> usize {
    let series = lower_central_series(group, h);
    series
        .iter()
        .position(Subgroup::is_trivial)
        .unwrap_or(series.len())
}

/// A rule `(N, i) -> f(N, i)` from normal subgroups and levels `i >= 1` to
/// normal subgroups of the same group.
pub trait LevelFunction: Send + Sync {
    fn name(&self) -> &str;
    fn evaluate(&self, group: &GroupTable, n: &Subgroup, level: usize) -> Subgroup;
}

/// `f(N, i) = γ_i(N)`.
#[derive(Debug, Default, Clone, Copy)]
pub struct LowerCentral;

impl LevelFunction for LowerCentral {
    fn name(&self) -> &str {
        "lower-central"
    }

    fn evaluate(&self, group: &GroupTable, n: &Subgroup, level: usize) -> Subgroup {
        let mut term = n.clone();
        for _ in 1..level {
            if term.is_trivial() {
                break;
            }
            term = commutator_subgroup(group, &term, n);
        }
        term
    }
}

/// A level function defined by a closure.
pub struct FnLevel<F> {
    name: String,
    f: F,
}

impl<F> FnLevel<F>
where
    F: Fn(&GroupTable, &Subgroup, usize) -> Subgroup + Send + Sync,
{
    pub fn new(name: impl Into<String>, f: F) -> Self {
        FnLevel {
            name: name.into(),
            f,
        }
    }
}

impl<F> LevelFunction for FnLevel<F>
where
    F: Fn(&GroupTable, &Subgroup, usize) -> Subgroup + Send + Sync,
{
    fn name(&self) -> &str {
        &self.name
    }

    fn evaluate(&self, group: &GroupTable, n: &Subgroup, level: usize) -> Subgroup {
        (self.f)(group, n, level)
    }
}

/// A level function bound to one group, memoized on `(member set, level)`.
pub struct FFunction<'g> {
    group: &'g GroupTable,
    inner: Box<dyn LevelFunction + 'g>,
    memo: Mutex<HashMap<(FixedBitSet, usize), Subgroup>>,
}

impl<'g> FFunction<'g> {
    pub fn new(group: &'g GroupTable, inner: impl LevelFunction + 'g) -> Self {
        FFunction {
            group,
            inner: Box::new(inner),
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn lower_central(group: &'g GroupTable) -> Self {
        Self::new(group, LowerCentral)
    }

    pub fn group(&self) -> &'g GroupTable {
        self.group
    }

    pub fn name(&self) -> &str {
        self.inner.name()
    }

    /// `f(N, level)`, `level >= 1`.
    pub fn eval(&self, n: &Subgroup, level: usize) -> Subgroup {
        assert!(level >= 1, "levels start at 1");
        let key = (n.members().clone(), level);
        if let Some(hit) = self.memo.lock().expect("memo lock").get(&key) {
            return hit.clone();
        }
        let value = self.inner.evaluate(self.group, n, level);
        self.memo
            .lock()
            .expect("memo lock")
            .entry(key)
            .or_insert(value)
            .clone()
    }
}

impl fmt::Debug for FFunction<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FFunction")
            .field("name", &self.name())
            .field("group", &self.group.label())
            .finish()
    }
}

pub fn lower_central_ffunction(group: &GroupTable) -> FFunction<'_> {
    FFunction::lower_central(group)
}

/// First violated membership condition, with indices into the sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MembershipViolation {
    /// `f(N, level)` is not normal in `G`.
    NotNormal { n: usize, level: usize },
    /// `N ⊆ M`, `j <= i`, but `f(N, i) ⊄ f(M, j)`.
    Monotone { n: usize, m: usize, i: usize, j: usize },
    /// `f(N, i) ⊄ Z_G(N)` yet `[N, f(N, i)] = [N, f(N, i+1)]`.
    NoStrictDecrease { n: usize, i: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipReport {
    pub function: String,
    pub sample_size: usize,
    pub depth: usize,
    pub pairs_checked: usize,
    pub violation: Option<MembershipViolation>,
}

impl MembershipReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks both membership conditions on a finite sample of normal
/// subgroups: monotonicity for every inclusion pair and `1 <= j <= i <=
/// depth`, and the strict commutator decrease for `i < depth`.
pub fn check_f_membership(f: &FFunction<'_>, normals: &[Subgroup], depth: usize) -> MembershipReport {
    let group = f.group();
    let mut report = MembershipReport {
        function: f.name().to_string(),
        sample_size: normals.len(),
        depth,
        pairs_checked: 0,
        violation: None,
    };
    let values: Vec<Vec<Subgroup>> = normals
        .iter()
        .map(|n| (1..=depth).map(|i| f.eval(n, i)).collect())
        .collect();

    for (ni, vals) in values.iter().enumerate() {
        for (k, v) in vals.iter().enumerate() {
            if !is_normal(group, v) {
                report.violation = Some(MembershipViolation::NotNormal { n: ni, level: k + 1 });
                return report;
            }
        }
    }

    for (ni, n) in normals.iter().enumerate() {
        for (mi, m) in normals.iter().enumerate() {
            if !n.is_subset(m) {
                continue;
            }
            report.pairs_checked += 1;
            for i in 1..=depth {
                for j in 1..=i {
                    if !values[ni][i - 1].is_subset(&values[mi][j - 1]) {
                        report.violation =
                            Some(MembershipViolation::Monotone { n: ni, m: mi, i, j });
                        return report;
                    }
                }
            }
        }
    }

    for (ni, n) in normals.iter().enumerate() {
        let zn = centralizer_of_subgroup(group, n);
        for i in 1..depth {
            if values[ni][i - 1].is_subset(&zn) {
                continue;
            }
            let a = commutator_subgroup(group, n, &values[ni][i - 1]);
            let b = commutator_subgroup(group, n, &values[ni][i]);
            if a == b {
                report.violation = Some(MembershipViolation::NoStrictDecrease { n: ni, i });
                return report;
            }
        }
    }
    report
}

/// `cl_f(N) = min { n >= 1 : f(N, n) ⊆ Z_G(N) }`, searched up to
/// `log_p |G| + 2`.
pub fn cl_f(f: &FFunction<'_>, n: &Subgroup) -> Result<usize> {
    let group = f.group();
    let zn = centralizer_of_subgroup(group, n);
    let cap = group.exponent() as usize + 2;
    (1..=cap)
        .find(|&level| f.eval(n, level).is_subset(&zn))
        .ok_or(Error::ClFDiverged { cap })
}
