//! Generalised intuitionistic fuzzy soft sets and their set algebra.

use std::fmt;
use std::sync::Arc;

use indexmap::IndexMap;
use rust_decimal::Decimal;

use crate::degree::Degree;
use crate::error::Error;
use crate::norms::NormContext;

macro_rules! name_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(String);

        impl $name {
            pub fn new(name: impl Into<String>) -> Result<Self, Error> {
                let name = name.into();
                if name.trim().is_empty() {
                    return Err(Error::EmptyName);
                }
                Ok($name(name))
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl PartialEq<str> for $name {
            fn eq(&self, other: &str) -> bool {
                self.0 == other
            }
        }

        impl PartialEq<&str> for $name {
            fn eq(&self, other: &&str) -> bool {
                self.0 == *other
            }
        }

        impl std::borrow::Borrow<str> for $name {
            fn borrow(&self) -> &str {
                &self.0
            }
        }

        impl serde::Serialize for $name {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.serialize_str(&self.0)
            }
        }
    };
}

name_type!(
    /// Name of an element of the universe.
    ElementId
);
name_type!(
    /// Name of a parameter.
    ParamId
);

/// An ordered, non-empty list of distinct elements.
///
/// Two universes are equal when they list the same names in the same order.
#[derive(Clone, Debug)]
pub struct Universe {
    elements: Arc<[ElementId]>,
}

impl Universe {
    pub fn new<I, S>(names: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let ids = names
            .into_iter()
            .map(ElementId::new)
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_ids(ids)
    }

    pub fn from_ids(ids: Vec<ElementId>) -> Result<Self, Error> {
        if ids.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        for (i, id) in ids.iter().enumerate() {
            if ids[..i].contains(id) {
                return Err(Error::DuplicateElement(id.to_string()));
            }
        }
        Ok(Universe { elements: ids.into() })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ElementId] {
        &self.elements
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e.as_str() == name)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ElementId> {
        self.elements.iter()
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.elements, &other.elements) || self.elements == other.elements
    }
}

impl Eq for Universe {}

/// A membership / non-membership pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IfsValue {
    mu: Degree,
    nu: Degree,
}

impl IfsValue {
    /// Requires `mu + nu <= 1`.
    pub fn new(mu: Degree, nu: Degree) -> Result<Self, Error> {
        let value = IfsValue { mu, nu };
        if !value.is_valid() {
            return Err(Error::InvalidIfs { mu: mu.to_string(), nu: nu.to_string() });
        }
        Ok(value)
    }

    /// Skips the `mu + nu <= 1` check. Used for already-reduced data.
    pub fn new_unchecked(mu: Degree, nu: Degree) -> Self {
        IfsValue { mu, nu }
    }

    pub fn parse(mu: &str, nu: &str) -> Result<Self, Error> {
        IfsValue::new(mu.parse()?, nu.parse()?)
    }

    pub fn mu(self) -> Degree {
        self.mu
    }

    pub fn nu(self) -> Degree {
        self.nu
    }

    pub fn is_valid(self) -> bool {
        self.mu.value() + self.nu.value() <= Decimal::ONE
    }

    /// `1 - mu - nu`, or `None` for an invalid pair.
    pub fn hesitation(self) -> Option<Degree> {
        Degree::new(Decimal::ONE - self.mu.value() - self.nu.value()).ok()
    }

    /// Intuitionistic inclusion: `mu <= other.mu` and `nu >= other.nu`.
    pub fn is_within(self, other: IfsValue) -> bool {
        self.mu <= other.mu && self.nu >= other.nu
    }
}

impl fmt::Display for IfsValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.mu, self.nu)
    }
}

/// An intuitionistic fuzzy subset of a universe: one [`IfsValue`] per
/// element, stored in universe order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IfSet {
    universe: Universe,
    values: Vec<IfsValue>,
}

impl IfSet {
    /// `values[i]` belongs to the i-th element of the universe.
    pub fn new(universe: Universe, values: Vec<IfsValue>) -> Result<Self, Error> {
        if values.len() != universe.len() {
            return Err(Error::LengthMismatch { expected: universe.len(), found: values.len() });
        }
        Ok(IfSet { universe, values })
    }

    /// Builds from `(element, value)` pairs in any order. Every element of the
    /// universe must appear exactly once.
    pub fn from_entries<I, S>(universe: Universe, entries: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (S, IfsValue)>,
        S: AsRef<str>,
    {
        let mut slots: Vec<Option<IfsValue>> = vec![None; universe.len()];
        for (name, value) in entries {
            let name = name.as_ref();
            let idx = universe
                .index_of(name)
                .ok_or_else(|| Error::UnknownElement(name.to_string()))?;
            if slots[idx].replace(value).is_some() {
                return Err(Error::DuplicateElement(name.to_string()));
            }
        }
        let values = slots
            .into_iter()
            .zip(universe.iter())
            .map(|(slot, id)| slot.ok_or_else(|| Error::MissingElement(id.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IfSet { universe, values })
    }

    pub fn constant(universe: Universe, value: IfsValue) -> Self {
        let values = vec![value; universe.len()];
        IfSet { universe, values }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn values(&self) -> &[IfsValue] {
        &self.values
    }

    pub fn get(&self, element: &str) -> Option<IfsValue> {
        self.universe.index_of(element).map(|i| self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ElementId, IfsValue)> + '_ {
        self.universe.iter().zip(self.values.iter().copied())
    }

    pub fn is_valid(&self) -> bool {
        self.values.iter().all(|v| v.is_valid())
    }

    /// Pointwise `mu <= other.mu` and `nu >= other.nu`.
    pub fn is_within(&self, other: &IfSet) -> bool {
        self.universe == other.universe
            && self.values.iter().zip(&other.values).all(|(a, b)| a.is_within(*b))
    }

    /// Combines two sets over the same universe pointwise. The caller checks
    /// the universes.
    pub(crate) fn zip_with(
        &self,
        other: &IfSet,
        mu: impl Fn(Degree, Degree) -> Degree,
        nu: impl Fn(Degree, Degree) -> Degree,
    ) -> IfSet {
        debug_assert_eq!(self.universe, other.universe);
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| IfsValue::new_unchecked(mu(a.mu, b.mu), nu(a.nu, b.nu)))
            .collect();
        IfSet { universe: self.universe.clone(), values }
    }

    /// Intersection under `ctx`: t-norm on memberships, t-conorm on
    /// non-memberships.
    pub fn intersect(&self, other: &IfSet, ctx: &NormContext) -> Result<IfSet, Error> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        Ok(self.zip_with(other, |a, b| ctx.tnorm(a, b), |a, b| ctx.tconorm(a, b)))
    }

    /// Union under `ctx`: t-conorm on memberships, t-norm on non-memberships.
    pub fn union(&self, other: &IfSet, ctx: &NormContext) -> Result<IfSet, Error> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        Ok(self.zip_with(other, |a, b| ctx.tconorm(a, b), |a, b| ctx.tnorm(a, b)))
    }

    fn max_deviation(&self, other: &IfSet) -> Decimal {
        self.values
            .iter()
            .zip(&other.values)
            .flat_map(|(a, b)| {
                [
                    (a.mu.value() - b.mu.value()).abs(),
                    (a.nu.value() - b.nu.value()).abs(),
                ]
            })
            .max()
            .unwrap_or(Decimal::ZERO)
    }
}

/// The value a soft set assigns to one parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GifssEntry {
    pub set: IfSet,
    pub preference: Degree,
}

/// A generalised intuitionistic fuzzy soft set: each parameter maps to an
/// intuitionistic fuzzy subset of the universe plus a preference degree.
///
/// Parameters keep their insertion order, which is used for all output.
/// Equality ignores parameter order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gifss {
    universe: Universe,
    entries: IndexMap<ParamId, GifssEntry>,
}

impl Gifss {
    pub fn new<I>(universe: Universe, entries: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (ParamId, GifssEntry)>,
    {
        let mut map = IndexMap::new();
        for (param, entry) in entries {
            if entry.set.universe != universe {
                return Err(Error::UniverseMismatch);
            }
            if map.contains_key(&param) {
                return Err(Error::DuplicateParameter(param.to_string()));
            }
            map.insert(param, entry);
        }
        Ok(Gifss { universe, entries: map })
    }

    /// A soft set with no parameters.
    pub fn empty(universe: Universe) -> Self {
        Gifss { universe, entries: IndexMap::new() }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn params(&self) -> impl Iterator<Item = &ParamId> + '_ {
        self.entries.keys()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&ParamId, &GifssEntry)> + ExactSizeIterator + '_ {
        self.entries.iter()
    }

    pub fn get(&self, param: &str) -> Option<&GifssEntry> {
        self.entries.get(param)
    }

    pub fn preference(&self, param: &str) -> Option<Degree> {
        self.get(param).map(|e| e.preference)
    }

    pub(crate) fn index_of(&self, param: &str) -> Option<usize> {
        self.entries.get_index_of(param)
    }

    pub(crate) fn entry_at(&self, index: usize) -> (&ParamId, &GifssEntry) {
        self.entries.get_index(index).expect("parameter index in range")
    }

    /// Whether every membership / non-membership pair satisfies `mu + nu <= 1`.
    pub fn is_valid(&self) -> bool {
        self.entries.values().all(|e| e.set.is_valid())
    }

    fn check_universe(&self, other: &Gifss) -> Result<(), Error> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        Ok(())
    }

    /// Soft subset: every parameter of `self` is a parameter of `other` with
    /// no larger preference, and each fuzzy set is intuitionistically
    /// contained in the corresponding one of `other`.
    pub fn is_subset(&self, other: &Gifss) -> Result<bool, Error> {
        self.check_universe(other)?;
        Ok(self.entries.iter().all(|(param, mine)| match other.entries.get(param) {
            Some(theirs) => {
                mine.preference <= theirs.preference && mine.set.is_within(&theirs.set)
            }
            None => false,
        }))
    }

    /// Intersection over the shared parameters, in `self`'s order.
    pub fn intersect(&self, other: &Gifss, ctx: &NormContext) -> Result<Gifss, Error> {
        self.check_universe(other)?;
        let entries = self
            .entries
            .iter()
            .filter_map(|(param, f)| {
                other.entries.get(param).map(|g| {
                    let set = f.set.zip_with(&g.set, |a, b| ctx.tnorm(a, b), |a, b| ctx.tconorm(a, b));
                    let preference = ctx.tnorm(f.preference, g.preference);
                    (param.clone(), GifssEntry { set, preference })
                })
            })
            .collect();
        Ok(Gifss { universe: self.universe.clone(), entries })
    }

    /// Union over all parameters: `self`'s order first, then parameters only
    /// `other` has. Parameters held by one side are copied unchanged.
    pub fn union(&self, other: &Gifss, ctx: &NormContext) -> Result<Gifss, Error> {
        self.check_universe(other)?;
        let mut entries: IndexMap<ParamId, GifssEntry> = self
            .entries
            .iter()
            .map(|(param, f)| {
                let entry = match other.entries.get(param) {
                    Some(g) => GifssEntry {
                        set: f.set.zip_with(&g.set, |a, b| ctx.tconorm(a, b), |a, b| ctx.tnorm(a, b)),
                        preference: ctx.tconorm(f.preference, g.preference),
                    },
                    None => f.clone(),
                };
                (param.clone(), entry)
            })
            .collect();
        for (param, g) in &other.entries {
            if !entries.contains_key(param) {
                entries.insert(param.clone(), g.clone());
            }
        }
        Ok(Gifss { universe: self.universe.clone(), entries })
    }

    /// Largest coordinate-wise difference (memberships, non-memberships and
    /// preferences) against a set with the same universe and parameters.
    /// `None` when the shapes differ.
    pub fn max_deviation(&self, other: &Gifss) -> Option<Decimal> {
        if self.universe != other.universe || self.entries.len() != other.entries.len() {
            return None;
        }
        let mut worst = Decimal::ZERO;
        for (param, mine) in &self.entries {
            let theirs = other.entries.get(param)?;
            worst = worst
                .max(mine.set.max_deviation(&theirs.set))
                .max((mine.preference.value() - theirs.preference.value()).abs());
        }
        Some(worst)
    }
}
