use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::conductor::ThreeCase;
use crate::error::Result;
use crate::field::reduce_param;
use crate::monogenity::{field_monogenic, CaseLabel, MonogenityVerdict};
use crate::verify::{check_certificate, check_negative, check_shanks_relations, VerificationReport};

/// `γ = (θ_{witness} - a) / m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PibSummary {
    pub a: u128,
    pub m: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub passed: usize,
    pub failed: usize,
    pub overall: bool,
    pub failures: Vec<String>,
}

impl VerificationSummary {
    pub fn from_reports(reports: &[VerificationReport]) -> Self {
        let passed = reports.iter().map(VerificationReport::passed_count).sum();
        let failures: Vec<String> = reports
            .iter()
            .flat_map(|r| r.failures().map(|c| c.name.clone()))
            .collect();
        Self { passed, failed: failures.len(), overall: failures.is_empty(), failures }
    }
}

/// One output row of `analyze` / `scan`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisRecord {
    pub t: i64,
    pub normalized_t: i64,
    pub delta: u128,
    pub delta_factors: Vec<String>,
    pub conductor: u128,
    pub conductor_factors: Vec<String>,
    pub three_case: ThreeCase,
    pub case: CaseLabel,
    pub ck_principal: bool,
    pub field_monogenic: bool,
    pub witness_t: Option<i64>,
    pub pib: Option<PibSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationSummary>,
}

impl AnalysisRecord {
    pub fn from_verdict(t: i64, v: &MonogenityVerdict, reports: Option<&[VerificationReport]>) -> Self {
        let to_u128 = |n: &num_bigint::BigUint| n.to_u128().expect("Δ_t fits in 128 bits for 64-bit t");
        Self {
            t,
            normalized_t: v.t,
            delta: to_u128(v.data.delta_value()),
            delta_factors: v.data.delta.to_strings(),
            conductor: to_u128(v.data.conductor_value()),
            conductor_factors: v.data.conductor.to_strings(),
            three_case: v.data.three_case,
            case: v.case_label,
            ck_principal: v.ck_principal,
            field_monogenic: v.field_monogenic,
            witness_t: v.witness_t,
            pib: v.certificate.as_ref().map(|c| PibSummary { a: to_u128(&c.a), m: to_u128(&c.m) }),
            verification: reports.map(VerificationSummary::from_reports),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.delta == self.conductor
    }

    pub fn verification_failed(&self) -> bool {
        self.verification.as_ref().is_some_and(|v| !v.overall)
    }
}

/// Verdict, output record and (optionally) the verification reports for one
/// parameter of any sign.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub record: AnalysisRecord,
    pub verdict: MonogenityVerdict,
    pub reports: Vec<VerificationReport>,
}

/// The independent checks run by `--verify`.
pub fn verification_reports(v: &MonogenityVerdict) -> Vec<VerificationReport> {
    let mut reports = vec![check_shanks_relations(v.t)];
    match &v.certificate {
        Some(cert) => reports.push(check_certificate(cert)),
        None => reports.push(check_negative(v.t)),
    }
    reports
}

pub fn analyze(t: i64, verify: bool) -> Result<Analysis> {
    let verdict = field_monogenic(reduce_param(t))?;
    let reports = if verify { verification_reports(&verdict) } else { Vec::new() };
    let record = AnalysisRecord::from_verdict(t, &verdict, verify.then_some(&reports[..]));
    Ok(Analysis { record, verdict, reports })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyze_examples() {
        let a = analyze(12, false).unwrap();
        assert_eq!(a.record.case, CaseLabel::A);
        assert_eq!(a.record.pib, Some(PibSummary { a: 1, m: 3 }));
        assert!(a.record.verification.is_none());

        let a = analyze(21, true).unwrap();
        assert_eq!(a.record.case, CaseLabel::C);
        assert!(a.record.verification.as_ref().unwrap().overall);

        let a = analyze(-4, false).unwrap();
        assert_eq!(a.record.t, -4);
        assert_eq!(a.record.normalized_t, 1);
        assert_eq!(a.record.delta, 13);
    }

    #[test]
    fn json_round_trip() {
        for t in [-4, 0, 12, 21, 101_471] {
            let rec = analyze(t, true).unwrap().record;
            let text = serde_json::to_string(&rec).unwrap();
            assert_eq!(serde_json::from_str::<AnalysisRecord>(&text).unwrap(), rec);
        }
    }
}
