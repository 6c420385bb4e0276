use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Result envelope. `verified` is set only by callers that re-checked the
/// payload with the labeling checks.
#[derive(Debug, Serialize)]
pub struct Certificate {
    pub command: Vec<String>,
    pub input_digest: BTreeMap<String, String>,
    pub result: Value,
    pub verified: bool,
}

#[derive(Debug, Default)]
pub struct Inputs {
    digests: BTreeMap<String, String>,
}

impl Inputs {
    pub fn record(&mut self, name: &str, contents: &[u8]) {
        let digest = Sha256::digest(contents);
        self.digests.insert(name.to_string(), hex::encode(digest));
    }

    pub fn certificate(self, result: impl Serialize, verified: bool) -> Certificate {
        Certificate {
            command: std::env::args().skip(1).collect(),
            input_digest: self.digests,
            result: serde_json::to_value(result).expect("results serialize"),
            verified,
        }
    }
}
