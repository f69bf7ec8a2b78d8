use std::collections::BTreeMap;

use findist_core::PointSet;
use serde::Serialize;
use sha2::{Digest, Sha256};

/// One checked relation lhs ~ rhs. Monitored findings never fail a run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Finding {
    pub name: String,
    pub inputs_digest: String,
    pub lhs: String,
    pub rhs: String,
    pub relation: String,
    pub pass: bool,
    pub hard: bool,
}

/// Columns of the sweep CSV, in order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub field: String,
    pub q: u64,
    pub generator: String,
    pub seed: u64,
    pub size: usize,
    pub pind: usize,
    pub size_two_thirds: f64,
    pub pind_ratio: f64,
    pub isosceles: u128,
    pub quadruples: u128,
    pub b_star_energy: u128,
    pub max_curve: usize,
    pub incidence_ratio: Option<f64>,
    pub incidence_surrogate: Option<f64>,
    pub in_hypothesis: bool,
    /// Semicolon-separated annotations, empty when nothing was flagged.
    pub flags: String,
}

/// Append-only run record with canonical ordering.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub config_digest: String,
    pub field: String,
    pub findings: Vec<Finding>,
    pub rows: Vec<SweepRow>,
    pub details: BTreeMap<String, serde_json::Value>,
    pub passed: bool,
}

impl Report {
    pub fn new(command: &str, config_digest: String, field: String) -> Self {
        Report {
            command: command.into(),
            config_digest,
            field,
            findings: Vec::new(),
            rows: Vec::new(),
            details: BTreeMap::new(),
            passed: true,
        }
    }

    pub fn push(&mut self, finding: Finding) {
        self.passed &= finding.pass || !finding.hard;
        self.findings.push(finding);
    }

    pub fn check(
        &mut self,
        name: &str,
        digest: &str,
        lhs: impl ToString,
        rhs: impl ToString,
        relation: &str,
        pass: bool,
    ) {
        self.push(Finding {
            name: name.into(),
            inputs_digest: digest.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            relation: relation.into(),
            pass,
            hard: true,
        });
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("detail serializes");
        self.details.insert(key.into(), v);
    }

    pub fn failures(&self) -> Vec<&Finding> {
        self.findings.iter().filter(|f| f.hard && !f.pass).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv is utf-8"))
    }
}

/// SHA-256 of the canonical JSON of a point set.
pub fn points_digest(a: &PointSet) -> String {
    let bytes = serde_json::to_vec(&(a.field().spec(), a.points())).expect("points serialize");
    hex::encode(Sha256::digest(bytes))
}

pub fn text_digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}
