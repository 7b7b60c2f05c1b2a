//! Serializable report files and their text rendering.
//!
//! The JSON body is deterministic: struct field order is fixed, the input
//! hash is over the canonical descriptor serialization, and nothing
//! time-dependent is included, so identical inputs produce byte-identical
//! reports.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bounds::{BoundReport, Direction, SpaceDescriptor};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceSummary {
    pub name: String,
    pub dim: u64,
    pub pi1: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub tool: String,
    pub version: String,
    pub input_hash: String,
    pub space: SpaceSummary,
    pub convention: String,
    pub bounds: BoundReport,
}

pub fn input_hash(canonical_json: &str) -> String {
    let digest = Sha256::digest(canonical_json.as_bytes());
    format!("sha256:{}", hex::encode(digest))
}

impl ReportFile {
    pub fn new(canonical_input: &str, space: &SpaceDescriptor, bounds: BoundReport) -> Self {
        Self {
            tool: "tcbound".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            input_hash: input_hash(canonical_input),
            space: SpaceSummary {
                name: space.name.clone(),
                dim: space.dim,
                pi1: space.pi1.to_string(),
            },
            convention: "unreduced".into(),
            bounds,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> crate::Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Human-readable rendering, one line per fired rule with its citation.
    /// With `reduced` the displayed interval drops by one; the stored
    /// convention is always unreduced.
    pub fn render_text(&self, reduced: bool) -> String {
        let mut out = String::new();
        let push = |out: &mut String, line: String| {
            out.push_str(&line);
            out.push('\n');
        };
        push(
            &mut out,
            format!(
                "space `{}`: dim {}, pi_1 {}",
                self.space.name, self.space.dim, self.space.pi1
            ),
        );
        if reduced {
            push(
                &mut out,
                format!(
                    "TC in [{}, {}]  (reduced display; stored values are unreduced)",
                    self.bounds.lower - 1,
                    self.bounds.upper - 1
                ),
            );
        } else {
            push(
                &mut out,
                format!("TC in [{}, {}]  (unreduced: TC(point) = 1)", self.bounds.lower, self.bounds.upper),
            );
        }
        push(&mut out, "rules fired:".into());
        for rule in &self.bounds.rules_fired {
            let dir = match rule.direction {
                Direction::Lower => "lower",
                Direction::Upper => "upper",
            };
            let value = if reduced { rule.value - 1 } else { rule.value };
            push(
                &mut out,
                format!("  {dir:<5} {value:>3}  {:<24} {}", rule.rule, rule.citation),
            );
            for input in &rule.inputs {
                push(&mut out, format!("             - {input}"));
            }
        }
        if !self.bounds.assumptions.is_empty() {
            push(&mut out, "assumptions:".into());
            for a in &self.bounds.assumptions {
                push(&mut out, format!("  - {a}"));
            }
        }
        if !self.bounds.remarks.is_empty() {
            push(&mut out, "remarks:".into());
            for r in &self.bounds.remarks {
                push(&mut out, format!("  - {r}"));
            }
        }
        out
    }
}
