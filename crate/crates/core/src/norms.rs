//! Triangular norms and conorms.
//!
//! Every set and relation operation in this crate is parameterised by a
//! [`NormPair`]: a t-norm (fuzzy "and") with its dual t-conorm (fuzzy "or").
//! Three dual pairs are built in. Further pairs can be registered through
//! [`NormPair::custom`], which checks the norm axioms on a grid before
//! accepting the functions.
//!
//! [`NormContext`] binds a pair to a [`Precision`]; all rounding happens
//! there, once per norm application.

use std::fmt;
use std::sync::Arc;

use rust_decimal::Decimal;

use crate::degree::{Degree, Precision};
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TNorm {
    /// `a * b`
    Product,
    /// `min(a, b)`
    Min,
    /// `max(a + b - 1, 0)`
    Lukasiewicz,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TConorm {
    /// `a + b - a * b`
    ProbabilisticSum,
    /// `max(a, b)`
    Max,
    /// `min(a + b, 1)`
    BoundedSum,
}

impl TNorm {
    pub fn apply(self, a: Decimal, b: Decimal) -> Decimal {
        match self {
            TNorm::Product => a * b,
            TNorm::Min => a.min(b),
            TNorm::Lukasiewicz => (a + b - Decimal::ONE).max(Decimal::ZERO),
        }
    }

    pub fn dual(self) -> TConorm {
        match self {
            TNorm::Product => TConorm::ProbabilisticSum,
            TNorm::Min => TConorm::Max,
            TNorm::Lukasiewicz => TConorm::BoundedSum,
        }
    }
}

impl TConorm {
    pub fn apply(self, a: Decimal, b: Decimal) -> Decimal {
        match self {
            TConorm::ProbabilisticSum => a + b - a * b,
            TConorm::Max => a.max(b),
            TConorm::BoundedSum => (a + b).min(Decimal::ONE),
        }
    }
}

type BinaryFn = dyn Fn(Decimal, Decimal) -> Decimal + Send + Sync;

/// A user-supplied norm pair that passed the axiom checks.
pub struct CustomNorms {
    name: String,
    tnorm: Box<BinaryFn>,
    tconorm: Box<BinaryFn>,
}

impl fmt::Debug for CustomNorms {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomNorms").field("name", &self.name).finish_non_exhaustive()
    }
}

#[derive(Clone, Debug)]
enum PairKind {
    Builtin(TNorm),
    Custom(Arc<CustomNorms>),
}

/// A t-norm together with its dual t-conorm.
#[derive(Clone, Debug)]
pub struct NormPair {
    kind: PairKind,
}

impl NormPair {
    /// `a * b` with `a + b - a * b`.
    pub const PRODUCT: NormPair = NormPair { kind: PairKind::Builtin(TNorm::Product) };
    /// `min` with `max`.
    pub const MIN_MAX: NormPair = NormPair { kind: PairKind::Builtin(TNorm::Min) };
    /// `max(a + b - 1, 0)` with `min(a + b, 1)`.
    pub const LUKASIEWICZ: NormPair = NormPair { kind: PairKind::Builtin(TNorm::Lukasiewicz) };

    pub const BUILTIN: [NormPair; 3] = [Self::PRODUCT, Self::MIN_MAX, Self::LUKASIEWICZ];

    /// Only the three dual pairings are accepted.
    pub fn new(tnorm: TNorm, tconorm: TConorm) -> Result<Self, Error> {
        if tnorm.dual() != tconorm {
            return Err(Error::MixedNormPair { tnorm, tconorm });
        }
        Ok(NormPair { kind: PairKind::Builtin(tnorm) })
    }

    /// Looks up a built-in pair by its CLI name.
    pub fn from_name(name: &str) -> Result<Self, Error> {
        match name {
            "product" => Ok(Self::PRODUCT),
            "minmax" => Ok(Self::MIN_MAX),
            "lukasiewicz" => Ok(Self::LUKASIEWICZ),
            other => Err(Error::UnknownNormPair(other.to_string())),
        }
    }

    /// Registers a user-defined pair.
    ///
    /// The t-norm and t-conorm axioms (range, commutativity, associativity,
    /// identity, monotonicity) are checked exhaustively on the grid
    /// `{0, 0.05, ..., 1}`, together with `s(a, b) <= 1 - t(1 - a, 1 - b)`,
    /// which is what keeps union and intersection inside the intuitionistic
    /// constraint. Any violation rejects the pair.
    pub fn custom<T, S>(name: impl Into<String>, tnorm: T, tconorm: S) -> Result<Self, Error>
    where
        T: Fn(Decimal, Decimal) -> Decimal + Send + Sync + 'static,
        S: Fn(Decimal, Decimal) -> Decimal + Send + Sync + 'static,
    {
        let name = name.into();
        check_axioms(&tnorm, &tconorm).map_err(|detail| Error::AxiomViolation {
            name: name.clone(),
            detail,
        })?;
        Ok(NormPair {
            kind: PairKind::Custom(Arc::new(CustomNorms {
                name,
                tnorm: Box::new(tnorm),
                tconorm: Box::new(tconorm),
            })),
        })
    }

    pub fn name(&self) -> &str {
        match &self.kind {
            PairKind::Builtin(TNorm::Product) => "product",
            PairKind::Builtin(TNorm::Min) => "minmax",
            PairKind::Builtin(TNorm::Lukasiewicz) => "lukasiewicz",
            PairKind::Custom(custom) => &custom.name,
        }
    }

    pub fn builtin(&self) -> Option<(TNorm, TConorm)> {
        match self.kind {
            PairKind::Builtin(t) => Some((t, t.dual())),
            PairKind::Custom(_) => None,
        }
    }

    /// Unrounded t-norm.
    pub fn raw_tnorm(&self, a: Decimal, b: Decimal) -> Decimal {
        match &self.kind {
            PairKind::Builtin(t) => t.apply(a, b),
            PairKind::Custom(c) => (c.tnorm)(a, b),
        }
    }

    /// Unrounded t-conorm.
    pub fn raw_tconorm(&self, a: Decimal, b: Decimal) -> Decimal {
        match &self.kind {
            PairKind::Builtin(t) => t.dual().apply(a, b),
            PairKind::Custom(c) => (c.tconorm)(a, b),
        }
    }
}

impl PartialEq for NormPair {
    fn eq(&self, other: &Self) -> bool {
        match (&self.kind, &other.kind) {
            (PairKind::Builtin(a), PairKind::Builtin(b)) => a == b,
            (PairKind::Custom(a), PairKind::Custom(b)) => Arc::ptr_eq(a, b),
            _ => false,
        }
    }
}

impl Eq for NormPair {}

impl Default for NormPair {
    fn default() -> Self {
        Self::PRODUCT
    }
}

impl fmt::Display for NormPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn check_axioms(
    t: &dyn Fn(Decimal, Decimal) -> Decimal,
    s: &dyn Fn(Decimal, Decimal) -> Decimal,
) -> Result<(), String> {
    let grid: Vec<Decimal> = (0..=20).map(|i| Decimal::new(i * 5, 2)).collect();
    let unit = |x: Decimal| x >= Decimal::ZERO && x <= Decimal::ONE;

    for (label, op, identity) in [("t-norm", t, Decimal::ONE), ("t-conorm", s, Decimal::ZERO)] {
        for &a in &grid {
            if op(a, identity) != a {
                return Err(format!("{label} identity fails at {a}"));
            }
            for &b in &grid {
                let ab = op(a, b);
                if !unit(ab) {
                    return Err(format!("{label}({a}, {b}) = {ab} is outside [0, 1]"));
                }
                if ab != op(b, a) {
                    return Err(format!("{label} is not commutative at ({a}, {b})"));
                }
                for &c in &grid {
                    if op(ab, c) != op(a, op(b, c)) {
                        return Err(format!("{label} is not associative at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        // with commutativity, monotone in the first argument suffices
        for pair in grid.windows(2) {
            for &b in &grid {
                if op(pair[0], b) > op(pair[1], b) {
                    return Err(format!("{label} is not monotone at ({}, {b})", pair[0]));
                }
            }
        }
    }
    for &a in &grid {
        for &b in &grid {
            let bound = Decimal::ONE - t(Decimal::ONE - a, Decimal::ONE - b);
            if s(a, b) > bound {
                return Err(format!("t-conorm exceeds the dual of the t-norm at ({a}, {b})"));
            }
        }
    }
    Ok(())
}

/// A norm pair bound to a rounding precision. This is the value every
/// set and relation operation takes.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NormContext {
    pub pair: NormPair,
    pub precision: Precision,
}

impl NormContext {
    pub fn new(pair: NormPair, precision: Precision) -> Self {
        NormContext { pair, precision }
    }

    pub fn product() -> Self {
        Self::new(NormPair::PRODUCT, Precision::DEFAULT)
    }

    pub fn min_max() -> Self {
        Self::new(NormPair::MIN_MAX, Precision::DEFAULT)
    }

    pub fn lukasiewicz() -> Self {
        Self::new(NormPair::LUKASIEWICZ, Precision::DEFAULT)
    }

    pub fn with_precision(mut self, precision: Precision) -> Self {
        self.precision = precision;
        self
    }

    pub fn tnorm(&self, a: Degree, b: Degree) -> Degree {
        let raw = self.pair.raw_tnorm(a.value(), b.value());
        Degree::saturating(self.precision.round(raw))
    }

    pub fn tconorm(&self, a: Degree, b: Degree) -> Degree {
        let raw = self.pair.raw_tconorm(a.value(), b.value());
        Degree::saturating(self.precision.round(raw))
    }
}
