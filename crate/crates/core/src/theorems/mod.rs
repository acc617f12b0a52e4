//! The recursive construction and the results built on top of it.

mod covering;
mod refinement;
mod survey;
mod theorem1;

pub use covering::{
    cl_restricted, conjecture_report, k_restricted_bounds, prop1_covering, ConjectureReport,
    CoveringMember, CoveringReport, KBounds, DEFAULT_NORMAL_CAP, DEFAULT_SUBSET_CAP,
    EVIDENCE_CAVEAT,
};
pub use refinement::{theorem2, theorem3, RefinementStep, Theorem2Outcome, Theorem3Outcome};
pub use survey::{class_breadth_check, RowStatus, SurveyRow};
pub use theorem1::{
    execute_step, postconditions, replay, theorem1, Postconditions, ReplayReport, StepCase,
    StepInput, StepRecord, TheoremOneCertificate,
};
