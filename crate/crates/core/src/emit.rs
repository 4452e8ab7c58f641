//! Rendering of sets, relations and decision tables as aligned text, CSV or
//! JSON. Output is deterministic: the same value always renders to the same
//! bytes.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::Value;

use crate::decision::{ComparisonTable, DecisionReport, DegreeMatrix, RankingResult, ScoreVector};
use crate::gifss::Gifss;
use crate::io::{DatasetFile, RelationFile};
use crate::relation::Gifsr;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Plain,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(Format::Plain),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?} (expected plain, csv or json)")),
        }
    }
}

/// A header plus rows of already formatted cells.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TextTable {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl TextTable {
    fn new(title: &str, header: impl IntoIterator<Item = impl Into<String>>) -> Self {
        TextTable {
            title: title.to_string(),
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn plain(&self) -> String {
        let columns = self.header.len();
        let mut widths = vec![0usize; columns];
        for row in std::iter::once(&self.header).chain(&self.rows) {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        if !self.title.is_empty() {
            out.push_str(&self.title);
            out.push('\n');
        }
        for row in std::iter::once(&self.header).chain(&self.rows) {
            let mut line = String::new();
            for (i, (cell, w)) in row.iter().zip(&widths).enumerate() {
                if i == 0 {
                    let _ = write!(line, "{cell:<w$}");
                } else {
                    let _ = write!(line, "  {cell:>w$}");
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    pub fn csv(&self) -> String {
        let mut writer = csv::WriterBuilder::new().from_writer(Vec::new());
        writer.write_record(&self.header).expect("writing to memory");
        for row in &self.rows {
            writer.write_record(row).expect("writing to memory");
        }
        String::from_utf8(writer.into_inner().expect("flush to memory")).expect("csv output is utf-8")
    }
}

/// Anything that can be rendered by [`emit_table`].
pub trait Emit {
    fn text_table(&self) -> TextTable;
    fn json_value(&self) -> Value;
}

pub fn emit_table(table: &dyn Emit, format: Format) -> String {
    match format {
        Format::Plain => table.text_table().plain(),
        Format::Csv => table.text_table().csv(),
        Format::Json => {
            let mut text = serde_json::to_string_pretty(&table.json_value()).expect("values serialise");
            text.push('\n');
            text
        }
    }
}

fn to_value<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("plain data serialises")
}

impl Emit for DegreeMatrix {
    fn text_table(&self) -> TextTable {
        let mut t = TextTable::new("", std::iter::once("element".to_string()).chain(self.params().iter().map(|p| p.to_string())));
        for (e, element) in self.universe().iter().enumerate() {
            let mut row = vec![element.to_string()];
            row.extend(self.rows().iter().map(|values| values[e].to_string()));
            t.rows.push(row);
        }
        t
    }

    fn json_value(&self) -> Value {
        to_value(self)
    }
}

impl Emit for ComparisonTable {
    fn text_table(&self) -> TextTable {
        let names: Vec<String> = self.universe().iter().map(|e| e.to_string()).collect();
        let mut t = TextTable::new("", std::iter::once("element".to_string()).chain(names.iter().cloned()));
        for (name, row) in names.iter().zip(self.counts()) {
            let mut cells = vec![name.clone()];
            cells.extend(row.iter().map(|c| c.to_string()));
            t.rows.push(cells);
        }
        t
    }

    fn json_value(&self) -> Value {
        to_value(self)
    }
}

impl Emit for ScoreVector {
    fn text_table(&self) -> TextTable {
        let mut t = TextTable::new("", ["element", "row_sum", "column_sum", "score"]);
        for (i, e) in self.universe.iter().enumerate() {
            t.rows.push(vec![
                e.to_string(),
                self.row_sum[i].to_string(),
                self.col_sum[i].to_string(),
                self.score[i].to_string(),
            ]);
        }
        t
    }

    fn json_value(&self) -> Value {
        to_value(self)
    }
}

impl Emit for RankingResult {
    fn text_table(&self) -> TextTable {
        let mut t = TextTable::new("", ["element", "membership_score", "nonmembership_score", "final_score"]);
        for (i, e) in self.universe.iter().enumerate() {
            t.rows.push(vec![
                e.to_string(),
                self.membership_score[i].to_string(),
                self.nonmembership_score[i].to_string(),
                self.final_score[i].to_string(),
            ]);
        }
        t
    }

    fn json_value(&self) -> Value {
        to_value(self)
    }
}

impl Emit for Gifss {
    fn text_table(&self) -> TextTable {
        let mut t = TextTable::new("", ["parameter", "preference", "element", "mu", "nu"]);
        for (param, entry) in self.iter() {
            for (element, value) in entry.set.iter() {
                t.rows.push(vec![
                    param.to_string(),
                    entry.preference.to_string(),
                    element.to_string(),
                    value.mu().to_string(),
                    value.nu().to_string(),
                ]);
            }
        }
        t
    }

    fn json_value(&self) -> Value {
        to_value(&DatasetFile::from_gifss(self))
    }
}

impl Emit for Gifsr {
    fn text_table(&self) -> TextTable {
        let mut t = TextTable::new("", ["source_param", "target_param", "degree", "element", "mu", "nu"]);
        for (a, b, cell) in self.iter() {
            for (element, value) in cell.set.iter() {
                t.rows.push(vec![
                    a.to_string(),
                    b.to_string(),
                    cell.degree.to_string(),
                    element.to_string(),
                    value.mu().to_string(),
                    value.nu().to_string(),
                ]);
            }
        }
        t
    }

    fn json_value(&self) -> Value {
        to_value(&RelationFile::from_gifsr(self))
    }
}

/// One-line summary naming the best element(s) and their final score.
pub fn decision_line(ranking: &RankingResult) -> String {
    let top = ranking.top_group();
    let score = ranking.best_score().unwrap_or(0);
    match top {
        [single] => format!("decision: {single} with final score {score}"),
        group => {
            let names: Vec<String> = group.iter().map(|e| e.to_string()).collect();
            format!("decision: tie between {} with final score {score}", names.join(", "))
        }
    }
}

fn ranking_line(ranking: &RankingResult) -> String {
    let groups: Vec<String> = ranking
        .tie_groups
        .iter()
        .map(|group| {
            let names: Vec<String> = group.iter().map(|e| e.to_string()).collect();
            let score = ranking.score_of(group[0].as_str()).unwrap_or(0);
            format!("{} ({score})", names.join(" = "))
        })
        .collect();
    format!("ranking: {}", groups.join(", "))
}

/// Renders every intermediate of the ranking pipeline followed by the
/// decision. With `quiet`, only the final score table and decision remain.
pub fn emit_report(report: &DecisionReport, format: Format, quiet: bool) -> String {
    if format == Format::Json {
        let mut value = to_value(report);
        value["decision"] = Value::String(decision_line(&report.ranking));
        let mut text = serde_json::to_string_pretty(&value).expect("values serialise");
        text.push('\n');
        return text;
    }
    let mut sections: Vec<(&str, TextTable)> = Vec::new();
    if !quiet {
        sections.push(("Reduced membership values", report.reduced.membership.text_table()));
        sections.push(("Membership comparison table", report.membership_comparison.text_table()));
        sections.push(("Membership scores", report.membership_scores.text_table()));
        sections.push(("Reduced non-membership values", report.reduced.non_membership.text_table()));
        sections.push(("Non-membership comparison table", report.nonmembership_comparison.text_table()));
        sections.push(("Non-membership scores", report.nonmembership_scores.text_table()));
    }
    sections.push(("Final scores", report.ranking.text_table()));

    let mut out = String::new();
    for (title, mut table) in sections {
        match format {
            Format::Plain => {
                table.title = title.to_string();
                out.push_str(&table.plain());
            }
            _ => {
                let _ = writeln!(out, "# {title}");
                out.push_str(&table.csv());
            }
        }
        out.push('\n');
    }
    out.push_str(&ranking_line(&report.ranking));
    out.push('\n');
    out.push_str(&decision_line(&report.ranking));
    out.push('\n');
    out
}
