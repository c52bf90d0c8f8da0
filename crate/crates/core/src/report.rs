//! JSON form of a [`MinimizationReport`].

use serde::{Deserialize, Serialize};

use crate::minimizer::{MinimizationReport, RemovalStep};
use crate::representative::EdgePoint;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonStep {
    pub orientation: String,
    pub leg1: Vec<usize>,
    pub leg2: Vec<usize>,
    pub swaps: Vec<[String; 2]>,
    pub count_before: usize,
    pub count_after: usize,
}

/// Field order here is the order of keys in the output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonReport {
    pub surface: String,
    pub word: String,
    pub initial_count: usize,
    pub final_count: usize,
    pub skipped_improper: usize,
    pub steps: Vec<JsonStep>,
    #[serde(rename = "P")]
    pub points: Vec<String>,
    #[serde(rename = "C")]
    pub segments: Vec<[String; 2]>,
}

fn pair(a: EdgePoint, b: EdgePoint) -> [String; 2] {
    [a.to_string(), b.to_string()]
}

impl From<&RemovalStep> for JsonStep {
    fn from(step: &RemovalStep) -> Self {
        JsonStep {
            orientation: step.bigon.orientation.to_string(),
            leg1: step.bigon.leg1.clone(),
            leg2: step.bigon.leg2.clone(),
            swaps: step.swaps.iter().map(|&(a, b)| pair(a, b)).collect(),
            count_before: step.count_before,
            count_after: step.count_after,
        }
    }
}

impl From<&MinimizationReport> for JsonReport {
    fn from(r: &MinimizationReport) -> Self {
        JsonReport {
            surface: r.surface.to_string(),
            word: r.word.to_string(),
            initial_count: r.initial_count,
            final_count: r.final_count,
            skipped_improper: r.skipped_improper,
            steps: r.steps.iter().map(JsonStep::from).collect(),
            points: r
                .final_points
                .derived()
                .iter()
                .map(|p| p.to_string())
                .collect(),
            segments: r
                .final_segments
                .segments()
                .iter()
                .map(|w| pair(w.start, w.end))
                .collect(),
        }
    }
}

/// Pretty-printed UTF-8 JSON with a trailing newline.
pub fn emit_json(report: &MinimizationReport) -> Vec<u8> {
    let mut bytes =
        serde_json::to_vec_pretty(&JsonReport::from(report)).expect("report serializes");
    bytes.push(b'\n');
    bytes
}
