//! The individual `verify` checks.

use cbc_core::breadth::{breadth_profile, nilpotency_class, FFunction};
use cbc_core::constructions::{lemma1_p, lemma2_refine, lemma4_select};
use cbc_core::corpus::certificate_json;
use cbc_core::group::{enumerate_normal_subgroups, index_log, GroupTable, Subgroup};
use cbc_core::theorems::{
    class_breadth_check, cl_restricted, prop1_covering, replay, theorem2, theorem3, RowStatus,
};
use cbc_core::Result;

/// Upper bound on lemma invocations per lemma in one run.
const LEMMA_BUDGET: usize = 4000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    ClassBreadth,
    Theorem2,
    Theorem3,
    Lemmas,
    Prop1,
}

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::ClassBreadth => "class-breadth",
            Check::Theorem2 => "theorem2",
            Check::Theorem3 => "theorem3",
            Check::Lemmas => "lemmas",
            Check::Prop1 => "prop1",
        }
    }
}

pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub certificate: Option<String>,
}

pub fn run(check: Check, group: &GroupTable, max_normals: usize) -> CheckOutcome {
    let result = match check {
        Check::ClassBreadth => class_breadth(group),
        Check::Theorem2 => class_breadth_subgroup(group),
        Check::Theorem3 => refinement(group),
        Check::Lemmas => lemmas(group, max_normals),
        Check::Prop1 => covering(group, max_normals),
    };
    match result {
        Ok((passed, detail, certificate)) => CheckOutcome {
            name: check.name(),
            passed,
            detail,
            certificate,
        },
        Err(e) => CheckOutcome {
            name: check.name(),
            passed: false,
            detail: format!("error: {e}"),
            certificate: None,
        },
    }
}

type Outcome = Result<(bool, String, Option<String>)>;

fn class_breadth(group: &GroupTable) -> Outcome {
    let row = class_breadth_check(group)?;
    let (cl, b) = (row.class.unwrap_or(0), row.breadth.unwrap_or(0));
    let mut detail = format!("cl {cl}, b {b}");
    let passed = row.status == RowStatus::Holds;
    if !passed {
        detail.push_str("; failed clause: cl(G) <= b(G) + 1");
    }
    Ok((passed, detail, None))
}

fn class_breadth_subgroup(group: &GroupTable) -> Outcome {
    if group.order() == 1 {
        return Ok((true, "trivial group".into(), None));
    }
    let out = theorem2(group)?;
    let f = FFunction::lower_central(group);
    let report = replay(&f, &out.certificate)?;
    let whole = Subgroup::whole(group);
    let index = index_log(group, &whole, &out.subgroup)?;
    let class = nilpotency_class(group, &out.subgroup);
    let mut failed = Vec::new();
    if !report.passed() {
        failed.push(format!("replay: {}", report.mismatches.join("; ")));
    }
    if index > out.breadth {
        failed.push("log_p |G:N| <= b(G)".into());
    }
    if class > out.breadth as usize + 1 {
        failed.push("cl(N) <= b(G) + 1".into());
    }
    let cases: Vec<&str> = out.certificate.steps.iter().map(|s| s.case.as_str()).collect();
    let mut detail = format!(
        "|N| = {}, log_p |G:N| = {index}, cl(N) = {class}, b(G) = {}, steps {}",
        out.subgroup.order(),
        out.breadth,
        cases.join(">")
    );
    if !failed.is_empty() {
        detail.push_str(&format!("; failed clause: {}", failed.join(", ")));
    }
    Ok((failed.is_empty(), detail, Some(certificate_json(group, &out.certificate))))
}

fn refinement(group: &GroupTable) -> Outcome {
    if group.order() == 1 {
        return Ok((true, "trivial group".into(), None));
    }
    let n = breadth_profile(group).max;
    let cs = vec![Subgroup::trivial(group); group.prime() as usize - 1];
    let out = theorem3(group, &cs, n)?;
    let breadths: Vec<String> = out
        .trace
        .iter()
        .map(|s| s.interior_breadth.to_string())
        .collect();
    Ok((
        true,
        format!(
            "l = {}, log_p |G:N| = {}, cl(N) = {}, interior breadths {}",
            out.l,
            out.index_log,
            out.class,
            breadths.join(",")
        ),
        None,
    ))
}

fn lemmas(group: &GroupTable, max_normals: usize) -> Outcome {
    let lattice = enumerate_normal_subgroups(group, max_normals);
    let normals = &lattice.subgroups;
    let p = group.prime() as usize;
    let mut sampled = !lattice.complete;

    let mut l1 = 0;
    'outer: for c2 in normals {
        for c1 in normals.iter().filter(|c| c.is_subset(c2)) {
            for n in normals {
                if l1 == LEMMA_BUDGET {
                    sampled = true;
                    break 'outer;
                }
                lemma1_p(group, n, c1, c2)?;
                l1 += 1;
            }
        }
    }

    let mut l2 = 0;
    'outer: for c2 in normals {
        for c1 in normals.iter().filter(|c| c.is_proper_subset(c2)) {
            if l2 == LEMMA_BUDGET {
                sampled = true;
                break 'outer;
            }
            lemma2_refine(group, c1, c2)?;
            l2 += 1;
        }
    }

    let mut l4 = 0;
    'outer: for h in normals {
        let below: Vec<&Subgroup> = normals
            .iter()
            .filter(|d| d.is_subset(h) && d.order() * p == h.order())
            .collect();
        for (i, d1) in below.iter().enumerate() {
            for d2 in &below[i + 1..] {
                if l4 == LEMMA_BUDGET {
                    sampled = true;
                    break 'outer;
                }
                // Avoid a third index-p subgroup through D1 ∩ D2, so the
                // selection has to skip it.
                let bottom = d1.intersection(d2);
                let avoid: Vec<Subgroup> = below
                    .iter()
                    .find(|a| *a != d1 && *a != d2 && bottom.is_subset(a))
                    .map(|a| (*a).clone())
                    .into_iter()
                    .collect();
                lemma4_select(group, h, d1, d2, &avoid)?;
                l4 += 1;
            }
        }
    }

    Ok((
        true,
        format!(
            "lemma1 {l1}, lemma2 {l2}, lemma4 {l4} inputs{}",
            if sampled { " (sampled)" } else { "" }
        ),
        None,
    ))
}

fn covering(group: &GroupTable, max_normals: usize) -> Outcome {
    if group.order() == 1 {
        return Ok((true, "trivial group".into(), None));
    }
    let f = FFunction::lower_central(group);
    let report = prop1_covering(&f, max_normals)?;
    let mut failed = Vec::new();
    if !report.product_is_whole {
        failed.push("product of N_C = G".to_string());
    }
    if !report.intersection_in_center {
        failed.push("intersection of f(N_C, b+1) in Z(G)".to_string());
    }
    let cl = if report.sampled {
        None
    } else {
        let cl = cl_restricted(&f, max_normals)?;
        if cl > report.breadth as usize + 1 {
            failed.push("restricted Cl <= b(G) + 1".to_string());
        }
        Some(cl)
    };
    let mut detail = format!(
        "{} members, |L| = {}, restricted Cl = {}{}",
        report.members.len(),
        report.intersection.order(),
        cl.map_or_else(|| "n/a".to_string(), |c| c.to_string()),
        if report.sampled { " (sampled)" } else { "" }
    );
    if !failed.is_empty() {
        detail.push_str(&format!("; failed clause: {}", failed.join(", ")));
    }
    Ok((failed.is_empty(), detail, None))
}
