use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// No chirally cosmetic pair can exist under the given input.
    Obstructed,
    /// Some hypothesis could not be ruled out; no existence claim is made.
    Inconclusive,
    /// A `(2,r)`-torus knot, where chirally cosmetic pairs do exist.
    KnownFamily,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Obstructed => "obstructed",
            Verdict::Inconclusive => "inconclusive",
            Verdict::KnownFamily => "known_family",
            Verdict::NotApplicable => "not_applicable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrailStep {
    pub step: String,
    /// The mathematical fact the step relies on.
    #[serde(rename = "ref")]
    pub reference: String,
    pub data: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    pub fired: Option<String>,
    pub trail: Vec<TrailStep>,
    pub witnesses: Map<String, Value>,
}

impl ObstructionReport {
    pub fn is_obstructed(&self) -> bool {
        self.verdict == Verdict::Obstructed
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

impl fmt::Display for ObstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "verdict: {}", self.verdict)?;
        if let Some(fired) = &self.fired {
            write!(f, " (fired: {fired})")?;
        }
        for (i, step) in self.trail.iter().enumerate() {
            write!(f, "\n  {}. {}: {}", i + 1, step.step, step.reference)?;
            if !step.data.is_null() {
                write!(f, "\n     {}", step.data)?;
            }
        }
        for (key, value) in &self.witnesses {
            write!(f, "\n  witness {key}: {value}")?;
        }
        Ok(())
    }
}

/// Accumulates trail steps and witnesses while a check runs.
#[derive(Debug, Default)]
pub(crate) struct Trail {
    steps: Vec<TrailStep>,
    witnesses: Map<String, Value>,
}

impl Trail {
    pub fn push(&mut self, step: &str, reference: &str, data: Value) {
        self.steps.push(TrailStep {
            step: step.into(),
            reference: reference.into(),
            data,
        });
    }

    pub fn witness(&mut self, key: &str, value: Value) {
        self.witnesses.insert(key.into(), value);
    }

    pub fn extend(&mut self, other: ObstructionReport) {
        self.steps.extend(other.trail);
        self.witnesses.extend(other.witnesses);
    }

    pub fn finish(self, verdict: Verdict, fired: Option<&str>) -> ObstructionReport {
        ObstructionReport {
            verdict,
            fired: fired.map(str::to_string),
            trail: self.steps,
            witnesses: self.witnesses,
        }
    }
}
