//! Per-group class-breadth rows.

use std::fmt;
use std::time::Instant;

use crate::breadth::{breadth_profile, nilpotency_class, FFunction};
use crate::error::{contradiction, Result};
use crate::group::{GroupTable, Subgroup};

use super::refinement::theorem2;
use super::theorem1::replay;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowStatus {
    /// `cl(G) <= b(G) + 1`.
    Holds,
    /// `cl(G) > b(G) + 1`. Never expected for odd `p`; reported, not dropped.
    Fails,
    /// The group could not be processed (for instance the order cap).
    Skipped,
}

impl RowStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RowStatus::Holds => "true",
            RowStatus::Fails => "false",
            RowStatus::Skipped => "skipped",
        }
    }
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRow {
    pub label: String,
    pub p: u64,
    /// `None` when the order is too large to represent.
    pub order: Option<u128>,
    pub breadth: Option<u32>,
    pub class: Option<usize>,
    pub status: RowStatus,
    pub t2_index: Option<u32>,
    pub t2_class: Option<usize>,
    pub ms: u128,
    /// Why the row was skipped.
    pub note: Option<String>,
}

impl SurveyRow {
    pub fn skipped(label: impl Into<String>, p: u64, order: Option<u128>, note: impl Into<String>) -> Self {
        SurveyRow {
            label: label.into(),
            p,
            order,
            breadth: None,
            class: None,
            status: RowStatus::Skipped,
            t2_index: None,
            t2_class: None,
            ms: 0,
            note: Some(note.into()),
        }
    }

    /// The row with the timing column zeroed, for comparisons.
    pub fn without_timing(&self) -> Self {
        SurveyRow { ms: 0, ..self.clone() }
    }
}

/// Computes `b(G)` by scanning every centralizer and `cl(G)` from the lower
/// central series, compares them, and runs the class-breadth subgroup
/// construction with a replay of its certificate.
pub fn class_breadth_check(group: &GroupTable) -> Result<SurveyRow> {
    let start = Instant::now();
    let whole = Subgroup::whole(group);
    let breadth = breadth_profile(group).max;
    let class = nilpotency_class(group, &whole);
    let status = if class <= breadth as usize + 1 {
        RowStatus::Holds
    } else {
        RowStatus::Fails
    };

    let (t2_index, t2_class) = if group.order() > 1 {
        let outcome = theorem2(group)?;
        let f = FFunction::lower_central(group);
        let report = replay(&f, &outcome.certificate)?;
        if !report.passed() {
            return Err(contradiction(format!(
                "class-breadth certificate fails replay: {}",
                report.mismatches.join("; ")
            )));
        }
        (Some(outcome.index_log), Some(outcome.class))
    } else {
        (Some(0), Some(0))
    };

    Ok(SurveyRow {
        label: group.label().to_string(),
        p: group.prime(),
        order: Some(group.order() as u128),
        breadth: Some(breadth),
        class: Some(class),
        status,
        t2_index,
        t2_class,
        ms: start.elapsed().as_millis(),
        note: None,
    })
}
