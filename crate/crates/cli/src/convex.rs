use std::path::Path;

use kkmforge::convex::{
    barany_dual, centerpoint, colorful_helly, verify_barany, verify_helly, BaranyWitness, Centerpoint, ConvexError,
    HellyInstance, HellyWitness,
};
use kkmforge::lp::halfspace_depth;
use kkmforge::rational::{self, Point};
use kkmforge::tverberg::{generalized_tverberg, homogenize, tverberg_partition, verify_witness, TverbergInstance, TverbergReport};
use serde::{Deserialize, Serialize};

use crate::io::{read_json, CmdResult, Failure, Outcome};

#[derive(Deserialize)]
struct PointsFile {
    #[serde(with = "rational::serde_points")]
    points: Vec<Point>,
    #[serde(default)]
    r: Option<usize>,
}

#[derive(Deserialize)]
struct BaranyFile {
    #[serde(with = "rational::serde_points")]
    k: Vec<Point>,
    classes: Vec<kkmforge::tverberg::PointSet>,
}

impl BaranyFile {
    fn classes(&self) -> Vec<Vec<Point>> {
        self.classes.iter().map(|c| c.0.clone()).collect()
    }
}

/// Maps library errors onto the exit-code contract: violations are reported, the rest is bad input.
fn convex_failure(e: ConvexError) -> Failure {
    match e {
        ConvexError::Violation(v) => Failure::Rejected(serde_json::json!({ "violation": v })),
        ConvexError::NoConclusion => Failure::Rejected(serde_json::json!({ "verdict": "inconclusive" })),
        other => Failure::Input(other.to_string()),
    }
}

pub fn centerpoint_cmd(path: &Path) -> CmdResult {
    let file: PointsFile = read_json(path)?;
    Outcome::new(0, centerpoint(&file.points).map_err(convex_failure)?)
}

pub fn helly_cmd(path: &Path) -> CmdResult {
    let inst: HellyInstance = read_json(path)?;
    Outcome::new(0, colorful_helly(&inst).map_err(convex_failure)?)
}

pub fn barany_cmd(path: &Path) -> CmdResult {
    let file: BaranyFile = read_json(path)?;
    Outcome::new(0, barany_dual(&file.k, &file.classes()).map_err(convex_failure)?)
}

fn tverberg_outcome(rep: TverbergReport) -> CmdResult {
    let code = if rep.witness().is_some() && rep.paths_agree { 0 } else { 1 };
    Outcome::new(code, rep)
}

pub fn tverberg_cmd(path: &Path, r: Option<usize>) -> CmdResult {
    let file: PointsFile = read_json(path)?;
    let r = r.or(file.r).ok_or_else(|| Failure::Input("missing r".into()))?;
    tverberg_outcome(tverberg_partition(&file.points, r).map_err(convex_failure)?)
}

pub fn gentverberg_cmd(path: &Path) -> CmdResult {
    let inst: TverbergInstance = read_json(path)?;
    tverberg_outcome(generalized_tverberg(&inst).map_err(convex_failure)?)
}

#[derive(Serialize)]
pub struct Verification {
    pub valid: bool,
    pub detail: String,
}

fn result_of<T: for<'de> Deserialize<'de>>(report: &serde_json::Value) -> Result<T, Failure> {
    serde_json::from_value(report["result"].clone()).map_err(|e| Failure::Input(format!("report: {e}")))
}

/// Re-checks a stored witness against its input without searching again.
pub fn verify(kind: &str, input: &Path, report: &serde_json::Value, r: Option<usize>) -> Result<Verification, Failure> {
    let (valid, detail) = match kind {
        "centerpoint" => {
            let file: PointsFile = read_json(input)?;
            let c: Centerpoint = result_of(report)?;
            let depth = halfspace_depth(&c.point, &file.points).map_err(Failure::input)?;
            let target = file.points.len().div_ceil(file.points[0].len() + 1);
            (depth >= target, format!("depth {depth}, target {target}"))
        }
        "helly" => {
            let inst: HellyInstance = read_json(input)?;
            let w: HellyWitness = result_of(report)?;
            (verify_helly(&inst, &w), format!("color {}", w.color))
        }
        "barany" => {
            let file: BaranyFile = read_json(input)?;
            let w: BaranyWitness = result_of(report)?;
            (verify_barany(&file.k, &file.classes(), &w), format!("color {}", w.color))
        }
        "tverberg" | "gentverberg" => {
            let inst = if kind == "tverberg" {
                let file: PointsFile = read_json(input)?;
                let r = r.or(file.r).ok_or_else(|| Failure::Input("missing r".into()))?;
                let d = file.points.first().map_or(0, Vec::len);
                let mut alpha = vec![rational::zero(); d + 1];
                alpha[d] = rational::one();
                TverbergInstance::from_points(&homogenize(&file.points), r, Some(alpha)).map_err(convex_failure)?
            } else {
                read_json(input)?
            };
            let rep: TverbergReport = result_of(report)?;
            let witnesses: Vec<_> = rep.sarkaria.iter().chain(&rep.brute_force).collect();
            let ok = !witnesses.is_empty() && witnesses.iter().all(|w| verify_witness(&inst, w));
            (ok, format!("{} witnesses checked", witnesses.len()))
        }
        other => return Err(Failure::Input(format!("unknown kind {other}"))),
    };
    Ok(Verification { valid, detail })
}
