use serde_json::{json, Map, Value};
use xclab_core::XcError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Verified,
    Failed,
    Refused,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Failed => "failed",
            Status::Refused => "refused",
            Status::Error => "error",
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Status::Verified => 0,
            Status::Failed => 1,
            Status::Error => 2,
            Status::Refused => 3,
        }
    }
}

/// What a subcommand produced: the JSON report fields plus an optional text
/// artifact.
pub struct Outcome {
    pub status: Status,
    pub payload: Value,
    pub counters: Map<String, Value>,
    pub artifact: Option<String>,
    /// Printed to stderr.
    pub message: Option<String>,
}

impl Outcome {
    pub fn ok(payload: Value) -> Self {
        Outcome { status: Status::Verified, payload, counters: Map::new(), artifact: None, message: None }
    }

    /// Verified or failed depending on `ok`.
    pub fn check(ok: bool, payload: Value) -> Self {
        let mut o = Self::ok(payload);
        if !ok {
            o.status = Status::Failed;
            o.message = Some("verification failed".into());
        }
        o
    }

    pub fn with_artifact(mut self, text: String) -> Self {
        self.artifact = Some(text);
        self
    }

    pub fn count(mut self, key: &str, n: usize) -> Self {
        self.counters.insert(key.into(), json!(n));
        self
    }

    pub fn from_error(err: anyhow::Error) -> Self {
        let (status, kind) = match err.downcast_ref::<XcError>() {
            Some(XcError::Refused { .. }) => (Status::Refused, "refused"),
            Some(XcError::Validity { .. }) => (Status::Failed, "validity"),
            Some(XcError::Verification(_)) => (Status::Failed, "verification"),
            Some(XcError::Input(_)) | None => (Status::Error, "input"),
        };
        let msg = format!("{err:#}");
        Outcome {
            status,
            payload: json!({ "error": kind, "message": msg }),
            counters: Map::new(),
            artifact: None,
            message: Some(msg),
        }
    }

    pub fn to_json(&self, command: &str) -> String {
        let report = json!({
            "command": command,
            "status": self.status.as_str(),
            "payload": self.payload,
            "counters": self.counters,
        });
        serde_json::to_string_pretty(&report).expect("report serializes")
    }
}
