use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: &str = "metacover-certificate/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Failed => "failed",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Block {
    pub name: String,
    pub status: Status,
    pub data: Value,
}

impl Block {
    pub fn new(name: &str, ok: bool, data: Value) -> Self {
        Block {
            name: name.to_string(),
            status: if ok { Status::Verified } else { Status::Failed },
            data,
        }
    }

    pub fn failed(name: &str, error: impl ToString) -> Self {
        Block {
            name: name.to_string(),
            status: Status::Failed,
            data: serde_json::json!({ "error": error.to_string() }),
        }
    }

    pub fn skipped(name: &str, reason: &str) -> Self {
        Block {
            name: name.to_string(),
            status: Status::Skipped,
            data: serde_json::json!({ "reason": reason }),
        }
    }
}

/// Everything that is hashed. No timestamps live here.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Payload {
    pub schema: String,
    pub tool_version: String,
    pub command: String,
    pub family: String,
    pub parameters: Value,
    pub blocks: Vec<Block>,
    pub overall: Status,
}

impl Payload {
    pub fn new(command: String, family: &str, parameters: Value, blocks: Vec<Block>) -> Self {
        let overall = if blocks.iter().all(|b| b.status == Status::Verified) {
            Status::Verified
        } else {
            Status::Failed
        };
        Payload {
            schema: SCHEMA_VERSION.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command,
            family: family.to_string(),
            parameters,
            blocks,
            overall,
        }
    }

    /// Compact JSON with sorted object keys.
    pub fn canonical_json(&self) -> String {
        let v = serde_json::to_value(self).expect("payload serializes");
        serde_json::to_string(&v).expect("value serializes")
    }

    pub fn sha256(&self) -> String {
        hex::encode(Sha256::digest(self.canonical_json().as_bytes()))
    }

    pub fn block(&self, name: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.name == name)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub payload: Payload,
    pub payload_sha256: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<String>,
}

impl Certificate {
    pub fn seal(payload: Payload) -> Self {
        let payload_sha256 = payload.sha256();
        Certificate {
            payload,
            payload_sha256,
            generated_at: None,
        }
    }

    pub fn is_verified(&self) -> bool {
        self.payload.overall == Status::Verified
    }

    /// Whether the stored hash matches the payload.
    pub fn hash_matches(&self) -> bool {
        self.payload.sha256() == self.payload_sha256
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn exit_code(&self) -> i32 {
        if self.is_verified() {
            0
        } else {
            1
        }
    }
}
