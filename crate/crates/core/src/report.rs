use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::algebra::Ring;

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    Numeric { seed: u64 },
}

impl Mode {
    pub fn label(&self) -> &'static str {
        match self {
            Mode::Symbolic => "symbolic",
            Mode::Numeric { .. } => "numeric",
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            Mode::Symbolic => None,
            Mode::Numeric { seed } => Some(*seed),
        }
    }
}

/// Outcome of one identity check. `equal` is true iff both sides agreed as
/// exact objects (up to the reported global sign where the identity only
/// fixes the value up to sign).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub identity: String,
    pub s: usize,
    pub n: usize,
    pub mode: String,
    pub seed: Option<u64>,
    pub params: BTreeMap<String, String>,
    pub equal: bool,
    pub sign: Option<i8>,
    pub lhs_hash: String,
    pub rhs_hash: String,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl VerifyReport {
    pub fn new(identity: &str, s: usize, n: usize, mode: Mode) -> Self {
        VerifyReport {
            identity: identity.to_string(),
            s,
            n,
            mode: mode.label().to_string(),
            seed: mode.seed(),
            params: BTreeMap::new(),
            equal: false,
            sign: None,
            lhs_hash: String::new(),
            rhs_hash: String::new(),
            elapsed_ms: 0,
            detail: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    /// Records both sides and whether they agree.
    pub fn sides<R: Ring>(mut self, lhs: &R, rhs: &R) -> Self {
        self.lhs_hash = hash_text(&lhs.canonical());
        self.rhs_hash = hash_text(&rhs.canonical());
        self.equal = lhs == rhs;
        self
    }

    /// Records both sides, accepting equality up to a global sign.
    pub fn sides_up_to_sign<R: Ring>(mut self, lhs: &R, rhs: &R) -> Self {
        self.lhs_hash = hash_text(&lhs.canonical());
        self.rhs_hash = hash_text(&rhs.canonical());
        self.sign = if lhs == rhs {
            Some(1)
        } else if *lhs == rhs.neg() {
            Some(-1)
        } else {
            None
        };
        self.equal = self.sign.is_some();
        self
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_millis() as u64;
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// SHA-256 of canonical text, lowercase hex.
pub fn hash_text(text: &str) -> String {
    let digest = Sha256::digest(text.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}
