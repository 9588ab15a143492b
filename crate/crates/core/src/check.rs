use serde::{Deserialize, Serialize};

use crate::series::{TPoly, TruncSeries};

/// First coefficient where a computed series departs from the expected one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub degree: u64,
    pub got: String,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mismatch: Option<Mismatch>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome {
            passed: true,
            mismatch: None,
            notes: Vec::new(),
        }
    }
    pub fn fail(note: impl Into<String>) -> Self {
        Outcome {
            passed: false,
            mismatch: None,
            notes: vec![note.into()],
        }
    }
    pub fn from_mismatch(m: Option<Mismatch>) -> Self {
        Outcome {
            passed: m.is_none(),
            mismatch: m,
            notes: Vec::new(),
        }
    }
    pub fn require(&mut self, cond: bool, note: impl Into<String>) {
        if !cond {
            self.passed = false;
            self.notes.push(note.into());
        }
    }
    /// Conjunction, keeping the first mismatch.
    pub fn and(mut self, other: Outcome) -> Outcome {
        self.passed &= other.passed;
        if self.mismatch.is_none() {
            self.mismatch = other.mismatch;
        }
        self.notes.extend(other.notes);
        self
    }
    pub fn note(mut self, note: impl Into<String>) -> Outcome {
        self.notes.push(note.into());
        self
    }
}

pub fn compare_polys(got: &TPoly, expected: &TPoly) -> Option<Mismatch> {
    let diff = got - expected;
    diff.low_degree().map(|d| Mismatch {
        degree: d,
        got: got.coeff(d).to_string(),
        expected: expected.coeff(d).to_string(),
    })
}

pub fn compare_series(got: &TruncSeries, expected: &TruncSeries) -> Option<Mismatch> {
    got.first_difference(expected).map(|d| Mismatch {
        degree: d as u64,
        got: got.coeff(d).to_string(),
        expected: expected.coeff(d).to_string(),
    })
}
