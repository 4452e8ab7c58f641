//! JSON dataset and relation files.
//!
//! A dataset file holds one soft set:
//!
//! ```json
//! {
//!   "universe": ["b1", "b2"],
//!   "parameters": [{"name": "e3", "preference": "0.1"}],
//!   "values": {
//!     "e3": {"b1": {"mu": "0.3", "nu": "0.5"}, "b2": {"mu": "0.5", "nu": "0.3"}}
//!   }
//! }
//! ```
//!
//! A relation file names (or embeds) its two datasets and lists one entry
//! per parameter pair:
//!
//! ```json
//! {
//!   "source": "f.json",
//!   "target": "g.json",
//!   "norms": "product",
//!   "entries": [
//!     {"source_param": "r", "target_param": "c", "degree": "0.2",
//!      "values": {"s1": {"mu": "0.1", "nu": "0.8"}}}
//!   ]
//! }
//! ```
//!
//! Every number is a decimal string so values survive a round trip exactly.
//! Relative dataset paths are resolved against the relation file's directory.

use std::fs;
use std::path::{Path, PathBuf};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::degree::{Degree, Precision};
use crate::error::Error;
use crate::gifss::{Gifss, GifssEntry, IfSet, IfsValue, ParamId, Universe};
use crate::norms::{NormContext, NormPair};
use crate::relation::{Gifsr, RelationCell};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IfsRecord {
    pub mu: String,
    pub nu: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParameterRecord {
    pub name: String,
    pub preference: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatasetFile {
    pub universe: Vec<String>,
    pub parameters: Vec<ParameterRecord>,
    /// parameter -> element -> value
    pub values: IndexMap<String, IndexMap<String, IfsRecord>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DatasetRef {
    Path(String),
    Inline(DatasetFile),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationRecord {
    pub source_param: String,
    pub target_param: String,
    pub degree: String,
    pub values: IndexMap<String, IfsRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationFile {
    pub source: DatasetRef,
    pub target: DatasetRef,
    /// Norm pair name; when absent the caller's default applies.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub norms: Option<String>,
    pub entries: Vec<RelationRecord>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LoadOptions {
    /// Maximum fractional digits accepted in input values.
    pub precision: Precision,
    /// Accept `mu + nu > 1` (pre-reduced data).
    pub allow_invalid_ifs: bool,
}

impl Default for LoadOptions {
    fn default() -> Self {
        LoadOptions { precision: Precision::DEFAULT, allow_invalid_ifs: false }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed file: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("{context}: {source}")]
    Invalid { context: String, source: Error },
}

impl LoadError {
    fn invalid(context: impl Into<String>) -> impl FnOnce(Error) -> LoadError {
        let context = context.into();
        move |source| LoadError::Invalid { context, source }
    }

    /// The underlying domain error, if this is a validation failure.
    pub fn domain(&self) -> Option<&Error> {
        match self {
            LoadError::Invalid { source, .. } => Some(source),
            _ => None,
        }
    }
}

fn read(path: &Path) -> Result<String, LoadError> {
    fs::read_to_string(path).map_err(|source| LoadError::Io { path: path.to_path_buf(), source })
}

fn parse_value(record: &IfsRecord, options: &LoadOptions) -> Result<IfsValue, Error> {
    let mu = Degree::parse_with_precision(&record.mu, options.precision)?;
    let nu = Degree::parse_with_precision(&record.nu, options.precision)?;
    if options.allow_invalid_ifs {
        Ok(IfsValue::new_unchecked(mu, nu))
    } else {
        IfsValue::new(mu, nu)
    }
}

fn parse_set(
    universe: &Universe,
    values: &IndexMap<String, IfsRecord>,
    options: &LoadOptions,
    context: &str,
) -> Result<IfSet, LoadError> {
    let mut entries = Vec::with_capacity(values.len());
    for (element, record) in values {
        let value = parse_value(record, options)
            .map_err(LoadError::invalid(format!("{context}, element {element:?}")))?;
        entries.push((element.as_str(), value));
    }
    IfSet::from_entries(universe.clone(), entries).map_err(LoadError::invalid(context))
}

impl DatasetFile {
    pub fn to_gifss(&self, options: &LoadOptions) -> Result<Gifss, LoadError> {
        let universe = Universe::new(self.universe.iter().cloned()).map_err(LoadError::invalid("universe"))?;
        let mut entries = Vec::with_capacity(self.parameters.len());
        for record in &self.parameters {
            let context = format!("parameter {:?}", record.name);
            let param = ParamId::new(record.name.clone()).map_err(LoadError::invalid(&context))?;
            let preference = Degree::parse_with_precision(&record.preference, options.precision)
                .map_err(LoadError::invalid(format!("{context}, preference")))?;
            let values = self.values.get(&record.name).ok_or_else(|| LoadError::Invalid {
                context: "values".into(),
                source: Error::UnknownParameter(record.name.clone()),
            })?;
            let set = parse_set(&universe, values, options, &context)?;
            entries.push((param, GifssEntry { set, preference }));
        }
        if let Some(extra) = self.values.keys().find(|k| !self.parameters.iter().any(|p| &p.name == *k)) {
            return Err(LoadError::Invalid {
                context: "values".into(),
                source: Error::UnknownParameter(extra.clone()),
            });
        }
        Gifss::new(universe, entries).map_err(LoadError::invalid("parameters"))
    }

    pub fn from_gifss(set: &Gifss) -> Self {
        DatasetFile {
            universe: set.universe().iter().map(|e| e.to_string()).collect(),
            parameters: set
                .iter()
                .map(|(p, e)| ParameterRecord { name: p.to_string(), preference: e.preference.to_string() })
                .collect(),
            values: set.iter().map(|(p, e)| (p.to_string(), set_records(&e.set))).collect(),
        }
    }
}

fn set_records(set: &IfSet) -> IndexMap<String, IfsRecord> {
    set.iter()
        .map(|(x, v)| (x.to_string(), IfsRecord { mu: v.mu().to_string(), nu: v.nu().to_string() }))
        .collect()
}

pub fn parse_gifss(text: &str, options: &LoadOptions) -> Result<Gifss, LoadError> {
    let file: DatasetFile = serde_json::from_str(text)?;
    file.to_gifss(options)
}

pub fn load_gifss(path: impl AsRef<Path>, options: &LoadOptions) -> Result<Gifss, LoadError> {
    parse_gifss(&read(path.as_ref())?, options)
}

pub fn gifss_to_json(set: &Gifss) -> String {
    let mut text = serde_json::to_string_pretty(&DatasetFile::from_gifss(set)).expect("plain data serialises");
    text.push('\n');
    text
}

pub fn save_gifss(path: impl AsRef<Path>, set: &Gifss) -> Result<(), LoadError> {
    let path = path.as_ref();
    fs::write(path, gifss_to_json(set)).map_err(|source| LoadError::Io { path: path.to_path_buf(), source })
}

impl RelationFile {
    /// Builds the relation. Path references are resolved against `base_dir`.
    pub fn to_gifsr(&self, base_dir: &Path, options: &LoadOptions, default_ctx: &NormContext) -> Result<Gifsr, LoadError> {
        let resolve = |r: &DatasetRef| -> Result<Gifss, LoadError> {
            match r {
                DatasetRef::Inline(file) => file.to_gifss(options),
                DatasetRef::Path(p) => load_gifss(base_dir.join(p), options),
            }
        };
        let source = resolve(&self.source)?;
        let target = resolve(&self.target)?;
        let ctx = match &self.norms {
            Some(name) => NormContext::new(
                NormPair::from_name(name).map_err(LoadError::invalid("norms"))?,
                default_ctx.precision,
            ),
            None => default_ctx.clone(),
        };
        let universe = source.universe().clone();
        let mut cells = Vec::with_capacity(self.entries.len());
        for record in &self.entries {
            let context = format!("entry ({}, {})", record.source_param, record.target_param);
            let degree = Degree::parse_with_precision(&record.degree, options.precision)
                .map_err(LoadError::invalid(format!("{context}, degree")))?;
            let set = parse_set(&universe, &record.values, options, &context)?;
            cells.push((record.source_param.as_str(), record.target_param.as_str(), RelationCell { set, degree }));
        }
        Gifsr::new(source, target, ctx, cells).map_err(LoadError::invalid("relation"))
    }

    /// Serialises with both datasets embedded.
    pub fn from_gifsr(relation: &Gifsr) -> Self {
        RelationFile {
            source: DatasetRef::Inline(DatasetFile::from_gifss(relation.source())),
            target: DatasetRef::Inline(DatasetFile::from_gifss(relation.target())),
            norms: Some(relation.context().pair.name().to_string()),
            entries: relation
                .iter()
                .map(|(a, b, cell)| RelationRecord {
                    source_param: a.to_string(),
                    target_param: b.to_string(),
                    degree: cell.degree.to_string(),
                    values: set_records(&cell.set),
                })
                .collect(),
        }
    }
}

pub fn parse_gifsr(text: &str, base_dir: &Path, options: &LoadOptions, default_ctx: &NormContext) -> Result<Gifsr, LoadError> {
    let file: RelationFile = serde_json::from_str(text)?;
    file.to_gifsr(base_dir, options, default_ctx)
}

pub fn load_gifsr(path: impl AsRef<Path>, options: &LoadOptions, default_ctx: &NormContext) -> Result<Gifsr, LoadError> {
    let path = path.as_ref();
    let base = path.parent().unwrap_or(Path::new("."));
    parse_gifsr(&read(path)?, base, options, default_ctx)
}

pub fn gifsr_to_json(relation: &Gifsr) -> String {
    let mut text = serde_json::to_string_pretty(&RelationFile::from_gifsr(relation)).expect("plain data serialises");
    text.push('\n');
    text
}
