//! Browser bindings for the demo page in `www/`.
//!
//! Every export takes and returns JSON text so the page needs no generated
//! types. Errors come back as plain messages.

use gifss::decision;
use gifss::emit::{emit_report, Format};
use gifss::io::{self, DatasetFile, LoadOptions};
use gifss::{Degree, NormContext, NormPair, Precision};
use rust_decimal::Decimal;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const DATASETS: [(&str, &str); 3] = [
    ("ranking", include_str!("../../core/examples/ranking.json")),
    ("students_f", include_str!("../../core/examples/students_f.json")),
    ("students_g", include_str!("../../core/examples/students_g.json")),
];

/// The text of a bundled dataset: `ranking`, `students_f` or `students_g`.
#[wasm_bindgen]
pub fn example_dataset(name: &str) -> Result<String, String> {
    DATASETS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| text.to_string())
        .ok_or_else(|| format!("no bundled dataset named {name:?}"))
}

/// Runs the ranking on a dataset, first replacing the preferences listed in
/// `preferences` (a JSON object from parameter name to decimal string).
#[wasm_bindgen]
pub fn rank(dataset: &str, preferences: &str) -> Result<String, String> {
    let mut file: DatasetFile = serde_json::from_str(dataset).map_err(|e| e.to_string())?;
    let overrides: serde_json::Map<String, Value> = serde_json::from_str(preferences).map_err(|e| e.to_string())?;
    for (name, value) in overrides {
        let text = value.as_str().ok_or_else(|| format!("preference for {name} must be a string"))?;
        let record = file
            .parameters
            .iter_mut()
            .find(|p| p.name == name)
            .ok_or_else(|| format!("unknown parameter {name}"))?;
        record.preference = text.to_string();
    }
    let set = file.to_gifss(&LoadOptions::default()).map_err(|e| e.to_string())?;
    let report = decision::rank(&set, Precision::DEFAULT);
    Ok(emit_report(&report, Format::Json, false))
}

fn context(norms: &str) -> Result<NormContext, String> {
    let pair = NormPair::from_name(norms).map_err(|e| e.to_string())?;
    Ok(NormContext::new(pair, Precision::DEFAULT))
}

/// Union and intersection of two datasets under a norm pair, plus whether
/// either is a subset of the other.
#[wasm_bindgen]
pub fn combine(f: &str, g: &str, norms: &str) -> Result<String, String> {
    let ctx = context(norms)?;
    let options = LoadOptions::default();
    let f = io::parse_gifss(f, &options).map_err(|e| e.to_string())?;
    let g = io::parse_gifss(g, &options).map_err(|e| e.to_string())?;
    let union = f.union(&g, &ctx).map_err(|e| e.to_string())?;
    let intersection = f.intersect(&g, &ctx).map_err(|e| e.to_string())?;
    let value = json!({
        "union": DatasetFile::from_gifss(&union),
        "intersection": DatasetFile::from_gifss(&intersection),
        "f_subset_g": f.is_subset(&g).map_err(|e| e.to_string())?,
        "g_subset_f": g.is_subset(&f).map_err(|e| e.to_string())?,
    });
    Ok(value.to_string())
}

/// Values of the t-norm and t-conorm of a pair on an `(steps + 1)²` grid
/// over the unit square, as decimal strings indexed `[a][b]`.
#[wasm_bindgen]
pub fn norm_surface(norms: &str, steps: u32) -> Result<String, String> {
    if !(1..=100).contains(&steps) {
        return Err("steps must be between 1 and 100".into());
    }
    let ctx = context(norms)?;
    let point = |i: u32| {
        let scaled = Decimal::from(i) / Decimal::from(steps);
        Degree::new(Precision::DEFAULT.round(scaled)).expect("grid points lie in the unit interval")
    };
    let axis: Vec<Degree> = (0..=steps).map(point).collect();
    let grid = |op: &dyn Fn(Degree, Degree) -> Degree| -> Vec<Vec<String>> {
        axis.iter().map(|&a| axis.iter().map(|&b| op(a, b).to_string()).collect()).collect()
    };
    let value = json!({
        "axis": axis.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "tnorm": grid(&|a, b| ctx.tnorm(a, b)),
        "tconorm": grid(&|a, b| ctx.tconorm(a, b)),
    });
    Ok(value.to_string())
}
