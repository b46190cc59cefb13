use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use wellcov::oracle::OracleStats;
use wellcov::verify::SuiteOutcome;
use wellcov::{Assignment, Certificate};

/// The `--machine` document. Optional sections are omitted when empty.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub exit_code: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check: Option<CheckResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<AlphaResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gadget: Option<GadgetResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<SuiteOutcome>,
    pub wall_time_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub role: String,
    pub path: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn new(role: &str, path: &str, bytes: &[u8]) -> InputDigest {
        InputDigest { role: role.into(), path: path.into(), sha256: hex::encode(Sha256::digest(bytes)) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub property: String,
    pub algorithm: String,
    pub holds: bool,
    pub certificate: Option<Certificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub backend: String,
    #[serde(flatten)]
    pub stats: OracleStats,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaResult {
    pub algorithm: String,
    pub value: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GadgetStatus {
    Built,
    KnownNegative,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetResult {
    pub name: String,
    pub status: GadgetStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assignment: Option<Assignment>,
    /// Size of the written graph, absent when nothing was written.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distinguished: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roles_output: Option<String>,
    /// Inline edge list and sidecar when no output path was given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_list: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roles: Option<String>,
}
