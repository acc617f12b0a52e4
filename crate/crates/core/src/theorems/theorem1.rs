//! The recursive normal-subgroup construction.
//!
//! Given `n >= 0`, `m >= 1`, a normal `H` and `p - 1` proper normal
//! subgroups `C_1, ..., C_{p-1}` of `H` such that every `g` in `H` outside
//! all `C_i` has `b_{f(H, m)}(g) <= n`, it produces a normal `N ⊆ H` with
//! `log_p |H : N| <= n`, `cl_f(N) <= n + m`, and `N` not covered by the
//! `C_i`.
//!
//! Each level either stops (`n = 0`, or `f(H, m)` centralizes `H`) or moves
//! to `(n - 1, m + 1)` with a new `(H, C)` pair. The steps are recorded so
//! that the run can be replayed and audited.

use std::fmt;

use crate::breadth::{breadth_rel, cl_f, max_breadth_outside, FFunction};
use crate::constructions::{lemma1_p, lemma2_refine, lemma4_select};
use crate::error::{contradiction, precondition, Result};
use crate::group::{
    centralizer_of_subgroup, index_log, is_normal, join_normals, Elem, GroupTable, Subgroup,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepCase {
    /// `n = 0`.
    Base,
    /// `f(H, m) ⊆ Z_G(H)`.
    Central,
    /// `<C_1 ∪ C_2>` is proper in `H`.
    CaseA,
    /// `<C_1 ∪ C_2> = H`.
    CaseB,
}

impl StepCase {
    pub fn as_str(self) -> &'static str {
        match self {
            StepCase::Base => "BASE",
            StepCase::Central => "CENTRAL",
            StepCase::CaseA => "CASE_A",
            StepCase::CaseB => "CASE_B",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "BASE" => Some(StepCase::Base),
            "CENTRAL" => Some(StepCase::Central),
            "CASE_A" => Some(StepCase::CaseA),
            "CASE_B" => Some(StepCase::CaseB),
            _ => None,
        }
    }

    pub fn is_terminal(self) -> bool {
        matches!(self, StepCase::Base | StepCase::Central)
    }
}

impl fmt::Display for StepCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Inputs of one level of the recursion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepInput {
    pub n: u32,
    pub m: usize,
    pub h: Subgroup,
    pub cs: Vec<Subgroup>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepRecord {
    pub case: StepCase,
    pub input: StepInput,
    pub p_sub: Option<Subgroup>,
    pub d1: Option<Subgroup>,
    pub d2: Option<Subgroup>,
    pub d: Option<Subgroup>,
    /// Elements of `H \ P` on which the strict breadth decrease was checked.
    pub decrease_checked: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Postconditions {
    /// `N ⊆ H`.
    pub b1: bool,
    /// `log_p |H : N| <= n`.
    pub b2: bool,
    /// `cl_f(N) <= n + m`.
    pub b3: bool,
    /// `N ⊄ ∪ C_i`.
    pub b4: bool,
    pub index_log: u32,
    pub cl_f: usize,
    /// Smallest element of `N` outside every `C_i`.
    pub witness_element: Option<Elem>,
}

impl Postconditions {
    pub fn all(&self) -> bool {
        self.b1 && self.b2 && self.b3 && self.b4
    }
}

#[derive(Debug, Clone)]
pub struct TheoremOneCertificate {
    pub group_label: String,
    pub prime: u64,
    pub order: usize,
    pub function: String,
    pub input: StepInput,
    pub steps: Vec<StepRecord>,
    pub result: Subgroup,
    pub postconditions: Postconditions,
}

fn hypothesis_holds(f: &FFunction<'_>, input: &StepInput) -> bool {
    let fh = f.eval(&input.h, input.m);
    max_breadth_outside(f.group(), &input.h, &input.cs, &fh).is_none_or(|b| b <= input.n)
}

fn validate_input(group: &GroupTable, input: &StepInput) -> Result<()> {
    let p = group.prime() as usize;
    if input.m < 1 {
        return Err(precondition("m must be at least 1"));
    }
    if input.cs.len() != p - 1 {
        return Err(precondition(format!(
            "expected {} subgroups C_i, got {}",
            p - 1,
            input.cs.len()
        )));
    }
    if !is_normal(group, &input.h) {
        return Err(precondition("H is not normal"));
    }
    for (i, c) in input.cs.iter().enumerate() {
        if !c.is_proper_subset(&input.h) {
            return Err(precondition(format!("C_{} is not a proper subgroup of H", i + 1)));
        }
        if !is_normal(group, c) {
            return Err(precondition(format!("C_{} is not normal", i + 1)));
        }
    }
    Ok(())
}

/// Runs one level: decides the case and, for the non-terminal cases, builds
/// the next level's input.
pub fn execute_step(f: &FFunction<'_>, input: &StepInput) -> Result<(StepRecord, Option<StepInput>)> {
    let group = f.group();
    let mut record = StepRecord {
        case: StepCase::Base,
        input: input.clone(),
        p_sub: None,
        d1: None,
        d2: None,
        d: None,
        decrease_checked: 0,
    };
    if input.n == 0 {
        return Ok((record, None));
    }
    let h = &input.h;
    let fm = f.eval(h, input.m);
    if fm.is_subset(&centralizer_of_subgroup(group, h)) {
        record.case = StepCase::Central;
        return Ok((record, None));
    }

    let fm1 = f.eval(h, input.m + 1);
    if !fm1.is_subset(&fm) {
        return Err(precondition(format!(
            "{} is not monotone: f(H, {}) ⊄ f(H, {})",
            f.name(),
            input.m + 1,
            input.m
        )));
    }
    let p_sub = lemma1_p(group, h, &fm1, &fm)?;
    if p_sub == *h {
        return Err(contradiction(
            "P = H although f(H, m) does not centralize H",
        ));
    }
    for x in h.iter().filter(|&x| !p_sub.contains(x)) {
        if breadth_rel(group, x, &fm1) >= breadth_rel(group, x, &fm) {
            return Err(contradiction(format!(
                "breadth does not drop from level {} to {} at element {x}",
                input.m,
                input.m + 1
            )));
        }
        record.decrease_checked += 1;
    }

    let c1 = &input.cs[0];
    let c2 = &input.cs[1];
    let rest = &input.cs[2..];
    let joined = join_normals(group, c1, c2);

    let next = if joined.is_proper_subset(h) {
        record.case = StepCase::CaseA;
        let mut cs = vec![p_sub.clone(), joined];
        cs.extend(rest.iter().cloned());
        StepInput {
            n: input.n - 1,
            m: input.m + 1,
            h: h.clone(),
            cs,
        }
    } else {
        record.case = StepCase::CaseB;
        let d1 = lemma2_refine(group, c1, h)?;
        let d2 = lemma2_refine(group, c2, h)?;
        if d1 == d2 {
            return Err(contradiction("D1 = D2 although <C1 ∪ C2> = H"));
        }
        let mut avoid = vec![p_sub.clone()];
        avoid.extend(rest.iter().cloned());
        let d = lemma4_select(group, h, &d1, &d2, &avoid)?;
        let mut cs = vec![p_sub.intersection(&d), d1.intersection(&d2)];
        cs.extend(rest.iter().map(|c| c.intersection(&d)));
        record.d1 = Some(d1);
        record.d2 = Some(d2);
        record.d = Some(d.clone());
        StepInput {
            n: input.n - 1,
            m: input.m + 1,
            h: d,
            cs,
        }
    };
    record.p_sub = Some(p_sub);
    Ok((record, Some(next)))
}

/// Recomputes (B1)-(B4) for a candidate `N` from scratch.
pub fn postconditions(f: &FFunction<'_>, input: &StepInput, n_sub: &Subgroup) -> Result<Postconditions> {
    let group = f.group();
    let b1 = n_sub.is_subset(&input.h);
    let index = if b1 { index_log(group, &input.h, n_sub)? } else { u32::MAX };
    let cl = cl_f(f, n_sub)?;
    let witness = n_sub
        .iter()
        .find(|&x| !input.cs.iter().any(|c| c.contains(x)));
    Ok(Postconditions {
        b1,
        b2: index <= input.n,
        b3: cl <= input.n as usize + input.m,
        b4: witness.is_some(),
        index_log: index,
        cl_f: cl,
        witness_element: witness,
    })
}

/// Runs the construction and returns `N` with its certificate.
pub fn theorem1(
    f: &FFunction<'_>,
    n: u32,
    m: usize,
    h: &Subgroup,
    cs: &[Subgroup],
) -> Result<(Subgroup, TheoremOneCertificate)> {
    let group = f.group();
    let root = StepInput {
        n,
        m,
        h: h.clone(),
        cs: cs.to_vec(),
    };
    validate_input(group, &root)?;
    if !hypothesis_holds(f, &root) {
        return Err(precondition(format!(
            "some element of H outside the C_i has b_f(H,{m}) > {n}"
        )));
    }

    let mut steps = Vec::new();
    let mut current = root.clone();
    loop {
        if !steps.is_empty() {
            validate_input(group, &current)
                .map_err(|e| contradiction(format!("recursive input invalid: {e}")))?;
            if !hypothesis_holds(f, &current) {
                return Err(contradiction(format!(
                    "breadth hypothesis fails at recursion depth {}",
                    steps.len()
                )));
            }
        }
        let (record, next) = execute_step(f, &current)?;
        steps.push(record);
        match next {
            Some(input) => current = input,
            None => break,
        }
    }
    let result = current.h.clone();
    if steps.len() > n as usize + 1 {
        return Err(contradiction("recursion deeper than n + 1"));
    }
    let post = postconditions(f, &root, &result)?;
    if !post.all() || !is_normal(group, &result) {
        return Err(contradiction(format!("postconditions failed: {post:?}")));
    }
    Ok((
        result.clone(),
        TheoremOneCertificate {
            group_label: group.label().to_string(),
            prime: group.prime(),
            order: group.order(),
            function: f.name().to_string(),
            input: root,
            steps,
            result,
            postconditions: post,
        },
    ))
}

/// Outcome of replaying a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayReport {
    pub steps_replayed: usize,
    pub mismatches: Vec<String>,
}

impl ReplayReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Re-executes every recorded step from its recorded input and compares
/// case, constructed subgroups and the next input bit for bit; then
/// recomputes the postconditions of the recorded result.
pub fn replay(f: &FFunction<'_>, cert: &TheoremOneCertificate) -> Result<ReplayReport> {
    let mut mismatches = Vec::new();
    for (i, recorded) in cert.steps.iter().enumerate() {
        let (fresh, next) = execute_step(f, &recorded.input)?;
        if fresh != *recorded {
            mismatches.push(format!("step {i}: recomputed step differs"));
        }
        match (next, cert.steps.get(i + 1)) {
            (Some(next), Some(following)) if next != following.input => {
                mismatches.push(format!("step {i}: next input differs"));
            }
            (Some(_), None) => mismatches.push(format!("step {i}: trace ends early")),
            (None, Some(_)) => mismatches.push(format!("step {i}: trace continues past a terminal case")),
            _ => {}
        }
    }
    match cert.steps.last() {
        Some(last) if last.input.h == cert.result => {}
        _ => mismatches.push("result is not the last level's H".into()),
    }
    if cert.steps.first().map(|s| &s.input) != Some(&cert.input) {
        mismatches.push("first step does not start from the input".into());
    }
    let post = postconditions(f, &cert.input, &cert.result)?;
    if post != cert.postconditions {
        mismatches.push(format!(
            "postconditions differ: recorded {:?}, recomputed {post:?}",
            cert.postconditions
        ));
    }
    Ok(ReplayReport {
        steps_replayed: cert.steps.len(),
        mismatches,
    })
}
