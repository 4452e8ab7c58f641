//! Comparison-table ranking.
//!
//! 1. [`reduce`] folds each parameter's preference into its memberships
//!    (`mu + a - mu * a`) and non-memberships (`nu * a`).
//! 2. [`comparison_table`] counts, for every ordered pair of elements, the
//!    parameters on which the first is greater than or equal to the second.
//! 3. [`ComparisonTable::scores`] takes row sum minus column sum.
//! 4. [`final_scores`] subtracts the non-membership score from the membership
//!    score and orders the elements.
//!
//! [`rank`] runs the whole pipeline and keeps every intermediate table.

use serde::Serialize;

use crate::degree::{Degree, Precision};
use crate::error::Error;
use crate::gifss::{ElementId, Gifss, ParamId, Universe};
use crate::norms::NormContext;

/// A parameters × elements matrix of degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeMatrix {
    #[serde(serialize_with = "ser_universe")]
    universe: Universe,
    params: Vec<ParamId>,
    /// `values[p][e]` is the value of element `e` under parameter `p`.
    values: Vec<Vec<Degree>>,
}

impl DegreeMatrix {
    pub fn new(universe: Universe, params: Vec<ParamId>, values: Vec<Vec<Degree>>) -> Result<Self, Error> {
        if values.len() != params.len() {
            return Err(Error::LengthMismatch { expected: params.len(), found: values.len() });
        }
        if let Some(row) = values.iter().find(|row| row.len() != universe.len()) {
            return Err(Error::LengthMismatch { expected: universe.len(), found: row.len() });
        }
        Ok(DegreeMatrix { universe, params, values })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn params(&self) -> &[ParamId] {
        &self.params
    }

    pub fn rows(&self) -> &[Vec<Degree>] {
        &self.values
    }

    pub fn get(&self, param: &str, element: &str) -> Option<Degree> {
        let p = self.params.iter().position(|q| q.as_str() == param)?;
        let e = self.universe.index_of(element)?;
        Some(self.values[p][e])
    }
}

/// Memberships and non-memberships after folding in the preferences.
///
/// The pair of values per cell is not required to satisfy `mu + nu <= 1`;
/// the two matrices are only ever compared column by column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedTable {
    pub membership: DegreeMatrix,
    pub non_membership: DegreeMatrix,
}

/// Applies `mu' = mu + a - mu * a` and `nu' = nu * a`, with `a` the
/// parameter's preference, rounding at `precision`. These are the
/// probabilistic sum and the product regardless of any other norm setting.
pub fn reduce(set: &Gifss, precision: Precision) -> ReducedTable {
    let ctx = NormContext::product().with_precision(precision);
    let params: Vec<ParamId> = set.params().cloned().collect();
    let mut mu = Vec::with_capacity(params.len());
    let mut nu = Vec::with_capacity(params.len());
    for (_, entry) in set.iter() {
        let a = entry.preference;
        mu.push(entry.set.values().iter().map(|v| ctx.tconorm(v.mu(), a)).collect());
        nu.push(entry.set.values().iter().map(|v| ctx.tnorm(v.nu(), a)).collect());
    }
    let universe = set.universe().clone();
    ReducedTable {
        membership: DegreeMatrix { universe: universe.clone(), params: params.clone(), values: mu },
        non_membership: DegreeMatrix { universe, params, values: nu },
    }
}

/// `counts[i][j]` is the number of parameters on which element `i` scores
/// at least as high as element `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonTable {
    #[serde(serialize_with = "ser_universe")]
    universe: Universe,
    parameter_count: usize,
    counts: Vec<Vec<usize>>,
}

pub fn comparison_table(values: &DegreeMatrix) -> ComparisonTable {
    let n = values.universe.len();
    let mut counts = vec![vec![0usize; n]; n];
    for row in &values.values {
        for i in 0..n {
            for j in 0..n {
                if row[i] >= row[j] {
                    counts[i][j] += 1;
                }
            }
        }
    }
    ComparisonTable { universe: values.universe.clone(), parameter_count: values.params.len(), counts }
}

impl ComparisonTable {
    /// Wraps an explicit count matrix, e.g. one transcribed from elsewhere.
    pub fn from_counts(universe: Universe, parameter_count: usize, counts: Vec<Vec<usize>>) -> Result<Self, Error> {
        let n = universe.len();
        if counts.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: counts.len() });
        }
        if let Some(row) = counts.iter().find(|row| row.len() != n) {
            return Err(Error::LengthMismatch { expected: n, found: row.len() });
        }
        Ok(ComparisonTable { universe, parameter_count, counts })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn parameter_count(&self) -> usize {
        self.parameter_count
    }

    pub fn counts(&self) -> &[Vec<usize>] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().flatten().sum()
    }

    pub fn scores(&self) -> ScoreVector {
        let n = self.universe.len();
        let row_sum: Vec<i64> = self.counts.iter().map(|row| row.iter().sum::<usize>() as i64).collect();
        let col_sum: Vec<i64> = (0..n)
            .map(|j| self.counts.iter().map(|row| row[j]).sum::<usize>() as i64)
            .collect();
        let score = row_sum.iter().zip(&col_sum).map(|(r, c)| r - c).collect();
        ScoreVector { universe: self.universe.clone(), row_sum, col_sum, score }
    }
}

/// Row sums, column sums and their difference for one comparison table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScoreVector {
    #[serde(serialize_with = "ser_universe")]
    pub universe: Universe,
    pub row_sum: Vec<i64>,
    pub col_sum: Vec<i64>,
    pub score: Vec<i64>,
}

/// Final scores and the resulting order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankingResult {
    #[serde(serialize_with = "ser_universe")]
    pub universe: Universe,
    pub membership_score: Vec<i64>,
    pub nonmembership_score: Vec<i64>,
    pub final_score: Vec<i64>,
    /// Elements by descending final score; ties keep universe order.
    pub order: Vec<ElementId>,
    /// Elements sharing a final score, best group first.
    pub tie_groups: Vec<Vec<ElementId>>,
}

impl RankingResult {
    /// The best-scoring element(s).
    pub fn top_group(&self) -> &[ElementId] {
        self.tie_groups.first().map(Vec::as_slice).unwrap_or_default()
    }

    pub fn score_of(&self, element: &str) -> Option<i64> {
        self.universe.index_of(element).map(|i| self.final_score[i])
    }

    pub fn best_score(&self) -> Option<i64> {
        self.top_group().first().and_then(|e| self.score_of(e.as_str()))
    }
}

pub fn final_scores(membership: &ScoreVector, non_membership: &ScoreVector) -> Result<RankingResult, Error> {
    if membership.universe != non_membership.universe {
        return Err(Error::UniverseMismatch);
    }
    let universe = membership.universe.clone();
    let final_score: Vec<i64> = membership
        .score
        .iter()
        .zip(&non_membership.score)
        .map(|(m, n)| m - n)
        .collect();

    let mut indices: Vec<usize> = (0..universe.len()).collect();
    // stable sort keeps universe order inside a tie
    indices.sort_by(|&a, &b| final_score[b].cmp(&final_score[a]));
    let order: Vec<ElementId> = indices.iter().map(|&i| universe.elements()[i].clone()).collect();

    let mut tie_groups: Vec<Vec<ElementId>> = Vec::new();
    let mut last: Option<i64> = None;
    for &i in &indices {
        let id = universe.elements()[i].clone();
        match (last, tie_groups.last_mut()) {
            (Some(score), Some(group)) if score == final_score[i] => group.push(id),
            _ => tie_groups.push(vec![id]),
        }
        last = Some(final_score[i]);
    }

    Ok(RankingResult {
        universe,
        membership_score: membership.score.clone(),
        nonmembership_score: non_membership.score.clone(),
        final_score,
        order,
        tie_groups,
    })
}

/// Every table produced by [`rank`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecisionReport {
    pub reduced: ReducedTable,
    pub membership_comparison: ComparisonTable,
    pub nonmembership_comparison: ComparisonTable,
    pub membership_scores: ScoreVector,
    pub nonmembership_scores: ScoreVector,
    pub ranking: RankingResult,
}

pub fn rank(set: &Gifss, precision: Precision) -> DecisionReport {
    let reduced = reduce(set, precision);
    let membership_comparison = comparison_table(&reduced.membership);
    let nonmembership_comparison = comparison_table(&reduced.non_membership);
    let membership_scores = membership_comparison.scores();
    let nonmembership_scores = nonmembership_comparison.scores();
    let ranking = final_scores(&membership_scores, &nonmembership_scores)
        .expect("both score vectors come from the same universe");
    DecisionReport {
        reduced,
        membership_comparison,
        nonmembership_comparison,
        membership_scores,
        nonmembership_scores,
        ranking,
    }
}

fn ser_universe<S: serde::Serializer>(universe: &Universe, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(universe.iter())
}
