//! Verification report records.
//!
//! Every checked identity produces one record. A record whose printed form
//! fails but whose corrected form holds is reported as
//! `corrected-form-passes` together with a minimal witness; these records
//! are the errata content.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    CorrectedFormPasses,
    /// Open question left undecided by calibration; does not fail a suite.
    Unresolved,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::CorrectedFormPasses => "corrected-form-passes",
            Status::Unresolved => "unresolved",
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdentityRecord {
    pub suite: String,
    pub identity: String,
    /// Short tag of the claim being checked, e.g. "lemma-3.4(2)".
    pub locus: String,
    /// Parameter range covered, e.g. "n<=7".
    pub params: String,
    pub status: Status,
    /// Minimal witness for fail / corrected-form-passes records.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl IdentityRecord {
    pub fn pass(suite: &str, identity: &str, locus: &str, params: String) -> Self {
        IdentityRecord {
            suite: suite.into(),
            identity: identity.into(),
            locus: locus.into(),
            params,
            status: Status::Pass,
            witness: None,
            detail: None,
        }
    }

    pub fn fail(suite: &str, identity: &str, locus: &str, params: String, witness: String) -> Self {
        IdentityRecord {
            suite: suite.into(),
            identity: identity.into(),
            locus: locus.into(),
            params,
            status: Status::Fail,
            witness: Some(witness),
            detail: None,
        }
    }

    pub fn corrected(
        suite: &str,
        identity: &str,
        locus: &str,
        params: String,
        witness: String,
        detail: String,
    ) -> Self {
        IdentityRecord {
            suite: suite.into(),
            identity: identity.into(),
            locus: locus.into(),
            params,
            status: Status::CorrectedFormPasses,
            witness: Some(witness),
            detail: Some(detail),
        }
    }

    pub fn with_detail(mut self, detail: String) -> Self {
        self.detail = Some(detail);
        self
    }

    /// Pass/fail from a boolean with a witness used on failure.
    pub fn check(
        suite: &str,
        identity: &str,
        locus: &str,
        params: String,
        ok: bool,
        witness: impl FnOnce() -> String,
    ) -> Self {
        if ok {
            Self::pass(suite, identity, locus, params)
        } else {
            Self::fail(suite, identity, locus, params, witness())
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suites: Vec<String>,
    pub max_n: usize,
    pub max_dim: usize,
    pub seed: u64,
    pub records: Vec<IdentityRecord>,
}

impl VerificationReport {
    pub fn new(suites: Vec<String>, max_n: usize, max_dim: usize, seed: u64) -> Self {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            suites,
            max_n,
            max_dim,
            seed,
            records: Vec::new(),
        }
    }

    pub fn extend(&mut self, records: Vec<IdentityRecord>) {
        self.records.extend(records);
    }

    /// Deterministic record order regardless of how the suites ran.
    pub fn sort(&mut self) {
        self.records.sort_by(|a, b| {
            (&a.suite, &a.identity, &a.params).cmp(&(&b.suite, &b.identity, &b.params))
        });
    }

    pub fn fail_count(&self) -> usize {
        self.records.iter().filter(|r| r.status == Status::Fail).count()
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv_string(&self) -> String {
        let mut out = String::from("suite,identity,locus,params,status,witness,detail\n");
        for r in &self.records {
            let row = [
                r.suite.as_str(),
                r.identity.as_str(),
                r.locus.as_str(),
                r.params.as_str(),
                r.status.as_str(),
                r.witness.as_deref().unwrap_or(""),
                r.detail.as_deref().unwrap_or(""),
            ];
            let quoted: Vec<String> = row
                .iter()
                .map(|f| format!("\"{}\"", f.replace('"', "\"\"")))
                .collect();
            out.push_str(&quoted.join(","));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_escapes_quotes() {
        let mut rep = VerificationReport::new(vec!["s".into()], 3, 2, 0);
        rep.extend(vec![IdentityRecord::fail(
            "s",
            "id",
            "locus",
            "n=1".into(),
            "value \"x\" differs".into(),
        )]);
        let csv = rep.to_csv_string();
        assert!(csv.contains("\"value \"\"x\"\" differs\""));
        assert_eq!(rep.fail_count(), 1);
    }

    #[test]
    fn sorted_output_is_deterministic() {
        let mut rep = VerificationReport::new(vec![], 3, 2, 0);
        rep.extend(vec![
            IdentityRecord::pass("b", "x", "l", "n=1".into()),
            IdentityRecord::pass("a", "y", "l", "n=1".into()),
            IdentityRecord::pass("a", "x", "l", "n=1".into()),
        ]);
        rep.sort();
        let keys: Vec<(&str, &str)> = rep
            .records
            .iter()
            .map(|r| (r.suite.as_str(), r.identity.as_str()))
            .collect();
        assert_eq!(keys, vec![("a", "x"), ("a", "y"), ("b", "x")]);
    }
}
