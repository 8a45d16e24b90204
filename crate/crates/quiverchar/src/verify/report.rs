//! Verification reports, serialized as JSON with a stable field order.

use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize)]
pub struct ConventionInfo {
    /// Sign sigma in sigma * Lambda * B = I_n.
    pub sigma: i64,
    /// Prefactor reading for the initial-character identity.
    pub prefactor: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub quiver: String,
    pub inputs: BTreeMap<String, String>,
    pub convention: ConventionInfo,
    pub primes: Vec<u32>,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub diagnostics: Vec<String>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}
