//! Soft relations between two generalised intuitionistic fuzzy soft sets.
//!
//! A relation from `F` (parameters `A`) to `G` (parameters `B`) assigns each
//! pair `(a, b)` an intuitionistic fuzzy set and a degree, bounded by the
//! intersection `F(a) ∩ G(b)` under the relation's norm pair.

use std::sync::Arc;

use crate::degree::Degree;
use crate::error::Error;
use crate::gifss::{Gifss, IfSet, IfsValue, ParamId};
use crate::norms::NormContext;

/// The value of a relation at one parameter pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCell {
    pub set: IfSet,
    pub degree: Degree,
}

impl RelationCell {
    /// Pointwise inclusion: memberships and degree no larger, non-memberships
    /// no smaller.
    pub fn is_within(&self, other: &RelationCell) -> bool {
        self.degree <= other.degree && self.set.is_within(&other.set)
    }

    /// Componentwise max on memberships and degree, min on non-memberships.
    pub fn join(&self, other: &RelationCell) -> RelationCell {
        RelationCell {
            set: self.set.zip_with(&other.set, Degree::max, Degree::min),
            degree: self.degree.max(other.degree),
        }
    }

    /// Componentwise min on memberships and degree, max on non-memberships.
    pub fn meet(&self, other: &RelationCell) -> RelationCell {
        RelationCell {
            set: self.set.zip_with(&other.set, Degree::min, Degree::max),
            degree: self.degree.min(other.degree),
        }
    }

    /// Intersection under the norm pair: t-norm on memberships and degree,
    /// t-conorm on non-memberships.
    fn intersect(&self, other: &RelationCell, ctx: &NormContext) -> RelationCell {
        RelationCell {
            set: self.set.zip_with(&other.set, |a, b| ctx.tnorm(a, b), |a, b| ctx.tconorm(a, b)),
            degree: ctx.tnorm(self.degree, other.degree),
        }
    }

    fn bottom(set_like: &IfSet) -> RelationCell {
        RelationCell {
            set: IfSet::constant(
                set_like.universe().clone(),
                IfsValue::new_unchecked(Degree::ZERO, Degree::ONE),
            ),
            degree: Degree::ZERO,
        }
    }
}

/// A generalised intuitionistic fuzzy soft relation.
///
/// Construction checks that every cell lies inside the intersection of the
/// parent entries, so a `Gifsr` value always satisfies that bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gifsr {
    source: Arc<Gifss>,
    target: Arc<Gifss>,
    ctx: NormContext,
    // row-major: source parameter index * target.len() + target parameter index
    cells: Vec<RelationCell>,
}

impl Gifsr {
    /// Builds and validates a relation. `entries` must cover every
    /// `(source parameter, target parameter)` pair exactly once.
    pub fn new<I, S, T>(
        source: impl Into<Arc<Gifss>>,
        target: impl Into<Arc<Gifss>>,
        ctx: NormContext,
        entries: I,
    ) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (S, T, RelationCell)>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let source = source.into();
        let target = target.into();
        if source.universe() != target.universe() {
            return Err(Error::UniverseMismatch);
        }
        let width = target.len();
        let mut slots: Vec<Option<RelationCell>> = vec![None; source.len() * width];
        for (a, b, cell) in entries {
            let (a, b) = (a.as_ref(), b.as_ref());
            let i = source.index_of(a).ok_or_else(|| Error::UnknownParameter(a.to_string()))?;
            let j = target.index_of(b).ok_or_else(|| Error::UnknownParameter(b.to_string()))?;
            if cell.set.universe() != source.universe() {
                return Err(Error::UniverseMismatch);
            }
            if slots[i * width + j].replace(cell).is_some() {
                return Err(Error::DuplicateRelationEntry {
                    source_param: a.to_string(),
                    target_param: b.to_string(),
                });
            }
        }
        let cells = slots
            .into_iter()
            .enumerate()
            .map(|(k, slot)| {
                slot.ok_or_else(|| Error::MissingRelationEntry {
                    source_param: source.entry_at(k / width).0.to_string(),
                    target_param: target.entry_at(k % width).0.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let relation = Gifsr { source, target, ctx, cells };
        relation.validate()?;
        Ok(relation)
    }

    /// The largest relation: every cell equals `F(a) ∩ G(b)`.
    pub fn maximal(
        source: impl Into<Arc<Gifss>>,
        target: impl Into<Arc<Gifss>>,
        ctx: NormContext,
    ) -> Result<Self, Error> {
        let source = source.into();
        let target = target.into();
        if source.universe() != target.universe() {
            return Err(Error::UniverseMismatch);
        }
        let mut cells = Vec::with_capacity(source.len() * target.len());
        for (_, f) in source.iter() {
            for (_, g) in target.iter() {
                cells.push(bound(&ctx, f, g));
            }
        }
        Ok(Gifsr { source, target, ctx, cells })
    }

    /// The smallest relation: memberships 0, non-memberships 1, degrees 0.
    pub fn minimal(
        source: impl Into<Arc<Gifss>>,
        target: impl Into<Arc<Gifss>>,
        ctx: NormContext,
    ) -> Result<Self, Error> {
        let source = source.into();
        let target = target.into();
        if source.universe() != target.universe() {
            return Err(Error::UniverseMismatch);
        }
        let empty = IfSet::constant(
            source.universe().clone(),
            IfsValue::new_unchecked(Degree::ZERO, Degree::ONE),
        );
        let cells = vec![RelationCell { set: empty, degree: Degree::ZERO }; source.len() * target.len()];
        Ok(Gifsr { source, target, ctx, cells })
    }

    pub fn source(&self) -> &Gifss {
        &self.source
    }

    pub fn target(&self) -> &Gifss {
        &self.target
    }

    pub fn context(&self) -> &NormContext {
        &self.ctx
    }

    pub fn get(&self, a: &str, b: &str) -> Option<&RelationCell> {
        let i = self.source.index_of(a)?;
        let j = self.target.index_of(b)?;
        self.cells.get(i * self.target.len() + j)
    }

    /// Cells in source-major order.
    pub fn iter(&self) -> impl Iterator<Item = (&ParamId, &ParamId, &RelationCell)> + '_ {
        let width = self.target.len();
        self.cells.iter().enumerate().map(move |(k, cell)| {
            (self.source.entry_at(k / width).0, self.target.entry_at(k % width).0, cell)
        })
    }

    /// Checks every cell against `F(a) ∩ G(b)`, reporting the first offender.
    pub fn validate(&self) -> Result<(), Error> {
        for (k, cell) in self.cells.iter().enumerate() {
            let width = self.target.len();
            let (a, f) = self.source.entry_at(k / width);
            let (b, g) = self.target.entry_at(k % width);
            let limit = bound(&self.ctx, f, g);
            let offence = |detail: String| Error::Containment {
                source_param: a.to_string(),
                target_param: b.to_string(),
                detail,
            };
            if cell.degree > limit.degree {
                return Err(offence(format!(
                    "degree {} exceeds {}",
                    cell.degree, limit.degree
                )));
            }
            for ((x, have), (_, max)) in cell.set.iter().zip(limit.set.iter()) {
                if have.mu() > max.mu() {
                    return Err(offence(format!(
                        "membership of {x} is {}, above {}",
                        have.mu(),
                        max.mu()
                    )));
                }
                if have.nu() < max.nu() {
                    return Err(offence(format!(
                        "non-membership of {x} is {}, below {}",
                        have.nu(),
                        max.nu()
                    )));
                }
            }
        }
        Ok(())
    }

    fn check_parents(&self, other: &Gifsr) -> Result<(), Error> {
        if self.ctx != other.ctx || self.source != other.source || self.target != other.target {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }

    fn pointwise(&self, other: &Gifsr, op: impl Fn(&RelationCell, &RelationCell) -> RelationCell) -> Result<Gifsr, Error> {
        self.check_parents(other)?;
        let cells = self.cells.iter().zip(&other.cells).map(|(a, b)| op(a, b)).collect();
        Ok(Gifsr {
            source: self.source.clone(),
            target: self.target.clone(),
            ctx: self.ctx.clone(),
            cells,
        })
    }

    /// Pointwise max (memberships, degree) / min (non-memberships).
    pub fn union(&self, other: &Gifsr) -> Result<Gifsr, Error> {
        self.pointwise(other, RelationCell::join)
    }

    /// Pointwise min (memberships, degree) / max (non-memberships).
    pub fn intersection(&self, other: &Gifsr) -> Result<Gifsr, Error> {
        self.pointwise(other, RelationCell::meet)
    }

    /// The relation from the target back to the source with
    /// `inverse(b, a) = self(a, b)`.
    pub fn inverse(&self) -> Gifsr {
        let (rows, cols) = (self.source.len(), self.target.len());
        let mut cells = Vec::with_capacity(self.cells.len());
        for j in 0..cols {
            for i in 0..rows {
                cells.push(self.cells[i * cols + j].clone());
            }
        }
        Gifsr {
            source: self.target.clone(),
            target: self.source.clone(),
            ctx: self.ctx.clone(),
            cells,
        }
    }

    /// Pointwise inclusion in a relation with the same parents.
    pub fn is_subrelation_of(&self, other: &Gifsr) -> Result<bool, Error> {
        self.check_parents(other)?;
        Ok(self.cells.iter().zip(&other.cells).all(|(a, b)| a.is_within(b)))
    }

    fn check_chain(&self, next: &Gifsr) -> Result<(), Error> {
        if self.ctx != next.ctx || self.target != next.source {
            return Err(Error::ChainMismatch);
        }
        Ok(())
    }

    /// Composition through one fixed middle parameter `b`:
    /// `self(a, b) ∩ next(b, c)` under the shared norm pair.
    pub fn compose_at(&self, next: &Gifsr, a: &str, b: &str, c: &str) -> Result<RelationCell, Error> {
        self.check_chain(next)?;
        let left = self.get(a, b).ok_or_else(|| unknown_pair(&self.source, &self.target, a, b))?;
        let right = next.get(b, c).ok_or_else(|| unknown_pair(&next.source, &next.target, b, c))?;
        Ok(left.intersect(right, &self.ctx))
    }

    /// Composition aggregated over the middle parameter: at `(a, c)` the
    /// join over all `b` of `self(a, b) ∩ next(b, c)`. The result is a
    /// relation from `self`'s source to `next`'s target.
    pub fn compose(&self, next: &Gifsr) -> Result<Gifsr, Error> {
        self.check_chain(next)?;
        let (rows, middle, cols) = (self.source.len(), self.target.len(), next.target.len());
        let mut cells = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for k in 0..cols {
                let mut acc: Option<RelationCell> = None;
                for j in 0..middle {
                    let step = self.cells[i * middle + j].intersect(&next.cells[j * cols + k], &self.ctx);
                    acc = Some(match acc {
                        Some(prev) => prev.join(&step),
                        None => step,
                    });
                }
                let cell = match acc {
                    Some(cell) => cell,
                    // no middle parameters: the supremum of nothing
                    None => RelationCell::bottom(&self.source.entry_at(i).1.set),
                };
                cells.push(cell);
            }
        }
        let composed = Gifsr {
            source: self.source.clone(),
            target: next.target.clone(),
            ctx: self.ctx.clone(),
            cells,
        };
        composed.validate()?;
        Ok(composed)
    }
}

fn bound(ctx: &NormContext, f: &crate::gifss::GifssEntry, g: &crate::gifss::GifssEntry) -> RelationCell {
    RelationCell {
        set: f.set.zip_with(&g.set, |a, b| ctx.tnorm(a, b), |a, b| ctx.tconorm(a, b)),
        degree: ctx.tnorm(f.preference, g.preference),
    }
}

fn unknown_pair(source: &Gifss, target: &Gifss, a: &str, b: &str) -> Error {
    if source.index_of(a).is_none() {
        Error::UnknownParameter(a.to_string())
    } else {
        debug_assert!(target.index_of(b).is_none());
        Error::UnknownParameter(b.to_string())
    }
}
