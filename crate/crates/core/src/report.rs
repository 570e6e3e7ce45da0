//! Serializable report entries for the command-line front end.
//!
//! JSON serialization is deterministic (declared field order, integers
//! only, optional fields omitted when absent), so parsing an emitted
//! report and re-serializing it is byte-identical.

use serde::{Deserialize, Serialize};

use crate::identity::{IdentityRecord, Mismatch, RecordKind, VerifyOutcome};
use crate::props::PropReport;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchReport {
    pub exponent: i64,
    pub lhs: String,
    pub rhs: String,
}

impl From<Mismatch> for MismatchReport {
    fn from(m: Mismatch) -> Self {
        MismatchReport {
            exponent: m.exponent,
            lhs: m.lhs,
            rhs: m.rhs,
        }
    }
}

/// One row of a verification or property report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub id: String,
    /// pass | fail | error | gap
    pub status: String,
    pub order: i64,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<MismatchReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_kind: Option<String>,
}

impl From<VerifyOutcome> for ReportEntry {
    fn from(out: VerifyOutcome) -> Self {
        ReportEntry {
            id: out.id,
            status: out.status.as_str().to_string(),
            order: out.order,
            elapsed_ms: out.elapsed_ms,
            mismatch: out.mismatch.map(Into::into),
            error_kind: out.error_kind,
        }
    }
}

impl ReportEntry {
    /// A property-suite row: zero failures and no draw exhaustion is a pass.
    pub fn from_prop(report: &PropReport, order: i64) -> Self {
        let status = if report.passed() { "pass" } else { "fail" };
        let error_kind = if report.exhausted > 0 {
            Some(format!("draw-exhaustion x{}", report.exhausted))
        } else if !report.failures.is_empty() {
            Some(report.failures[0].clone())
        } else {
            None
        };
        ReportEntry {
            id: report.name.to_string(),
            status: status.to_string(),
            order,
            elapsed_ms: report.elapsed_ms,
            mismatch: None,
            error_kind,
        }
    }

    pub fn render_text(&self) -> String {
        let mut line = format!(
            "{:<24} {:<5} order {:>4} {:>7} ms",
            self.id, self.status, self.order, self.elapsed_ms
        );
        if let Some(m) = &self.mismatch {
            line.push_str(&format!(
                "   first mismatch at q^{}: lhs {} vs rhs {}",
                m.exponent, m.lhs, m.rhs
            ));
        }
        if let Some(e) = &self.error_kind {
            line.push_str(&format!("   [{}]", e));
        }
        line
    }
}

/// One row of `list` output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListEntry {
    pub id: String,
    /// active | gap
    pub status: String,
    pub default_order: i64,
    pub reference: String,
}

impl From<&IdentityRecord> for ListEntry {
    fn from(rec: &IdentityRecord) -> Self {
        ListEntry {
            id: rec.id.to_string(),
            status: match rec.kind {
                RecordKind::Active { .. } => "active".to_string(),
                RecordKind::Gap { .. } => "gap".to_string(),
            },
            default_order: rec.default_order,
            reference: rec.reference.to_string(),
        }
    }
}

impl ListEntry {
    pub fn render_text(&self) -> String {
        format!(
            "{:<24} {:<6} order {:>4}   {}",
            self.id, self.status, self.default_order, self.reference
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip_is_byte_identical() {
        let entries = vec![
            ReportEntry {
                id: "gm.1".into(),
                status: "pass".into(),
                order: 100,
                elapsed_ms: 42,
                mismatch: None,
                error_kind: None,
            },
            ReportEntry {
                id: "watson.main".into(),
                status: "fail".into(),
                order: 60,
                elapsed_ms: 17,
                mismatch: Some(MismatchReport {
                    exponent: 9,
                    lhs: "0".into(),
                    rhs: "1".into(),
                }),
                error_kind: None,
            },
        ];
        let s1 = serde_json::to_string_pretty(&entries).unwrap();
        let back: Vec<ReportEntry> = serde_json::from_str(&s1).unwrap();
        let s2 = serde_json::to_string_pretty(&back).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(entries, back);
    }
}
