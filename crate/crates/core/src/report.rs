use serde::{Deserialize, Serialize};

use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One gating check. A failing check always carries a nonzero witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Pass,
            witness: None,
            detail: None,
        }
    }

    /// Fails with `witness`, which must be a nonzero polynomial.
    pub fn fail(name: impl Into<String>, witness: &Polynomial) -> Self {
        assert!(!witness.is_zero(), "failing check needs a nonzero witness");
        Check {
            name: name.into(),
            status: Status::Fail,
            witness: Some(witness.to_string()),
            detail: None,
        }
    }

    /// Passes iff `residue` is the zero polynomial, otherwise the residue is the witness.
    pub fn zero(name: impl Into<String>, residue: &Polynomial) -> Self {
        if residue.is_zero() {
            Self::pass(name)
        } else {
            Self::fail(name, residue)
        }
    }

    /// Passes iff `left == right`; the witness is `left - right`.
    pub fn equal(name: impl Into<String>, left: &Polynomial, right: &Polynomial) -> Self {
        Self::zero(name, &(left - right))
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Informational finding that never affects the exit status, such as the
/// outcome of comparing a derived equation against a transcribed one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Observation {
    pub name: String,
    pub outcome: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub observations: Vec<Observation>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn observe(&mut self, name: impl Into<String>, outcome: impl Into<String>) {
        self.observations.push(Observation {
            name: name.into(),
            outcome: outcome.into(),
        });
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
        self.observations.extend(other.observations);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn observation(&self, name: &str) -> Option<&str> {
        self.observations
            .iter()
            .find(|o| o.name == name)
            .map(|o| o.outcome.as_str())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RingSignature;

    #[test]
    fn failing_checks_carry_witness() {
        let r = RingSignature::el();
        let p = Polynomial::var(&r, "E10").unwrap();
        let c = Check::zero("x", &p);
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.witness.as_deref(), Some("E10"));
        assert!(Check::zero("y", &Polynomial::zero(&r)).passed());
    }

    #[test]
    fn json_shape() {
        let mut rep = VerificationReport::new();
        rep.push(Check::pass("a").with_detail("c=3"));
        rep.observe("cmp", "sign-flip");
        let v: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(v["checks"][0]["status"], "pass");
        assert_eq!(v["checks"][0]["detail"], "c=3");
        assert!(v["checks"][0].get("witness").is_none());
        assert_eq!(v["observations"][0]["outcome"], "sign-flip");
        let back: VerificationReport = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(back, rep);
    }
}
