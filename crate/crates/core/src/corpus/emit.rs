//! Certificate JSON and survey CSV.

use serde::{Deserialize, Serialize};

use crate::breadth::FFunction;
use crate::error::{Error, Result};
use crate::group::{canonical_generators, generated_subgroup, GroupTable, Subgroup};
use crate::theorems::{theorem1, ReplayReport, StepRecord, SurveyRow, TheoremOneCertificate};

pub const SURVEY_CSV_HEADER: &str = "label,p,order,breadth,class,status,t2_index,t2_class,ms";

/// A subgroup by its order and a canonical generating set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupDescriptor {
    pub order: usize,
    pub generator_indices: Vec<u32>,
}

pub fn descriptor(group: &GroupTable, sub: &Subgroup) -> SubgroupDescriptor {
    let mut generator_indices = canonical_generators(group, sub);
    generator_indices.sort_unstable();
    SubgroupDescriptor {
        order: sub.order(),
        generator_indices,
    }
}

impl SubgroupDescriptor {
    /// Rebuilds the subgroup and checks the recorded order.
    pub fn resolve(&self, group: &GroupTable) -> Result<Subgroup> {
        if let Some(&bad) = self.generator_indices.iter().find(|&&x| x as usize >= group.order()) {
            return Err(Error::Parse {
                line: 0,
                reason: format!("generator index {bad} out of range"),
            });
        }
        let s = generated_subgroup(group, self.generator_indices.iter().copied());
        if s.order() != self.order {
            return Err(Error::Parse {
                line: 0,
                reason: format!("descriptor order {} but generators give {}", self.order, s.order()),
            });
        }
        Ok(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputJson {
    pub group_label: String,
    pub p: u64,
    pub order: usize,
    pub n: u32,
    pub m: usize,
    pub c_list: Vec<SubgroupDescriptor>,
    #[serde(rename = "H")]
    pub h: SubgroupDescriptor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub case: String,
    pub n: u32,
    pub m: usize,
    #[serde(rename = "P", skip_serializing_if = "Option::is_none", default)]
    pub p: Option<SubgroupDescriptor>,
    #[serde(rename = "D1", skip_serializing_if = "Option::is_none", default)]
    pub d1: Option<SubgroupDescriptor>,
    #[serde(rename = "D2", skip_serializing_if = "Option::is_none", default)]
    pub d2: Option<SubgroupDescriptor>,
    #[serde(rename = "D", skip_serializing_if = "Option::is_none", default)]
    pub d: Option<SubgroupDescriptor>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PostconditionsJson {
    #[serde(rename = "B1")]
    pub b1: bool,
    #[serde(rename = "B2")]
    pub b2: bool,
    #[serde(rename = "B3")]
    pub b3: bool,
    #[serde(rename = "B4")]
    pub b4: bool,
    pub index_log: u32,
    pub cl_f: usize,
    pub witness_element: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub input: InputJson,
    pub steps: Vec<StepJson>,
    pub result: SubgroupDescriptor,
    pub postconditions: PostconditionsJson,
}

fn step_json(group: &GroupTable, step: &StepRecord) -> StepJson {
    let d = |s: &Option<Subgroup>| s.as_ref().map(|s| descriptor(group, s));
    StepJson {
        case: step.case.as_str().to_string(),
        n: step.input.n,
        m: step.input.m,
        p: d(&step.p_sub),
        d1: d(&step.d1),
        d2: d(&step.d2),
        d: d(&step.d),
    }
}

impl CertificateJson {
    pub fn from_certificate(group: &GroupTable, cert: &TheoremOneCertificate) -> Self {
        let post = &cert.postconditions;
        CertificateJson {
            input: InputJson {
                group_label: cert.group_label.clone(),
                p: cert.prime,
                order: cert.order,
                n: cert.input.n,
                m: cert.input.m,
                c_list: cert.input.cs.iter().map(|c| descriptor(group, c)).collect(),
                h: descriptor(group, &cert.input.h),
            },
            steps: cert.steps.iter().map(|s| step_json(group, s)).collect(),
            result: descriptor(group, &cert.result),
            postconditions: PostconditionsJson {
                b1: post.b1,
                b2: post.b2,
                b3: post.b3,
                b4: post.b4,
                index_log: post.index_log,
                cl_f: post.cl_f,
                witness_element: post.witness_element,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            reason: e.to_string(),
        })
    }

    /// Rebuilds the recorded input against `f`'s group, reruns the
    /// construction and compares every step, the result and the
    /// postconditions with the recorded ones.
    pub fn replay(&self, f: &FFunction<'_>) -> Result<ReplayReport> {
        let group = f.group();
        let mut mismatches = Vec::new();
        if self.input.p != group.prime() || self.input.order != group.order() {
            mismatches.push("certificate is for a different group".to_string());
            return Ok(ReplayReport {
                steps_replayed: 0,
                mismatches,
            });
        }
        let h = self.input.h.resolve(group)?;
        let cs = self
            .input
            .c_list
            .iter()
            .map(|c| c.resolve(group))
            .collect::<Result<Vec<_>>>()?;
        let (_, fresh) = theorem1(f, self.input.n, self.input.m, &h, &cs)?;
        let fresh = CertificateJson::from_certificate(group, &fresh);

        if fresh.steps.len() != self.steps.len() {
            mismatches.push(format!(
                "recorded {} steps, recomputed {}",
                self.steps.len(),
                fresh.steps.len()
            ));
        }
        for (i, (a, b)) in self.steps.iter().zip(&fresh.steps).enumerate() {
            if a != b {
                mismatches.push(format!("step {i} differs"));
            }
        }
        if self.result != fresh.result {
            mismatches.push("result differs".into());
        }
        if self.postconditions != fresh.postconditions {
            mismatches.push("postconditions differ".into());
        }
        Ok(ReplayReport {
            steps_replayed: self.steps.len().min(fresh.steps.len()),
            mismatches,
        })
    }
}

pub fn certificate_json(group: &GroupTable, cert: &TheoremOneCertificate) -> String {
    CertificateJson::from_certificate(group, cert).to_json()
}

/// CSV with [`SURVEY_CSV_HEADER`]; empty cells for values a skipped row
/// does not have.
pub fn survey_csv(rows: &[SurveyRow]) -> String {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(SURVEY_CSV_HEADER.split(',')).expect("in-memory write");
    let opt = |v: Option<String>| v.unwrap_or_default();
    for r in rows {
        w.write_record([
            r.label.clone(),
            r.p.to_string(),
            opt(r.order.map(|v| v.to_string())),
            opt(r.breadth.map(|v| v.to_string())),
            opt(r.class.map(|v| v.to_string())),
            r.status.to_string(),
            opt(r.t2_index.map(|v| v.to_string())),
            opt(r.t2_class.map(|v| v.to_string())),
            r.ms.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8 fields")
}
