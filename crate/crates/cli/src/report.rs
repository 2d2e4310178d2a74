use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// The result of one command before it is wrapped in a [`RunReport`].
pub struct Outcome {
    /// `true` maps to exit 0, `false` to exit 1.
    pub verdict: bool,
    pub payload: Value,
    pub summary: String,
    pub seed: Option<u64>,
}

impl Outcome {
    pub fn new(verdict: bool, payload: Value, summary: impl Into<String>) -> Self {
        Self {
            verdict,
            payload,
            summary: summary.into(),
            seed: None,
        }
    }

    pub fn seeded(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

/// Command echo, input digest, payload, timing and seed. Only `timing_ms`
/// varies between runs with the same inputs.
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs_digest: String,
    pub outcome: Outcome,
    pub timing_ms: u128,
    pub threads: usize,
}

/// SHA-256 over the command name and each input's bytes, length-prefixed.
pub fn digest(command: &str, inputs: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    h.update(command.as_bytes());
    for bytes in inputs {
        h.update((bytes.len() as u64).to_le_bytes());
        h.update(bytes);
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

impl RunReport {
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "verdict": self.outcome.verdict,
            "result": self.outcome.payload,
            "seed": self.outcome.seed,
            "threads": self.threads,
            "timing_ms": self.timing_ms,
        })
    }

    pub fn human(&self) -> String {
        let mut out = format!("{}\n", self.outcome.summary);
        out.push_str(&format!("inputs sha256 {}\n", self.inputs_digest));
        if let Some(seed) = self.outcome.seed {
            out.push_str(&format!("seed {seed}\n"));
        }
        out
    }
}
