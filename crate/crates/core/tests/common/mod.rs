//! Random instance generators shared by the integration tests.
#![allow(dead_code)]

pub mod oracle;

use std::path::PathBuf;
use std::sync::Arc;

use gifss::{Degree, Gifsr, Gifss, GifssEntry, IfSet, IfsValue, NormContext, ParamId, RelationCell, Universe};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rust_decimal::Decimal;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn example_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples").join(name)
}

pub fn load_example(name: &str) -> Gifss {
    gifss::io::load_gifss(example_path(name), &Default::default()).expect("shipped example loads")
}

pub fn d(s: &str) -> Degree {
    s.parse().unwrap()
}

pub fn universe(n: usize) -> Universe {
    Universe::new((1..=n).map(|i| format!("x{i}"))).unwrap()
}

fn units(digits: u32) -> u64 {
    10u64.pow(digits)
}

/// A degree with `digits` fractional digits. Endpoints and the midpoint are
/// drawn more often than uniform sampling would, to exercise ties.
pub fn degree(rng: &mut impl Rng, digits: u32) -> Degree {
    let full = units(digits);
    let u = match rng.random_range(0..10) {
        0 => 0,
        1 => full,
        2 if full.is_multiple_of(2) => full / 2,
        _ => rng.random_range(0..=full),
    };
    Degree::from_scaled(u, digits).unwrap()
}

/// A degree in `[0, bound]` on the `digits` grid (the bound itself when it is
/// off-grid is still reachable with some probability).
pub fn at_most(rng: &mut impl Rng, bound: Degree, digits: u32) -> Degree {
    if rng.random_bool(0.2) {
        return bound;
    }
    let top = (bound.value() * Decimal::from(units(digits))).floor();
    let top: u64 = top.try_into().unwrap();
    Degree::from_scaled(rng.random_range(0..=top), digits).unwrap()
}

/// A degree in `[low, high]` on the `digits` grid, or `low` itself.
pub fn between(rng: &mut impl Rng, low: Degree, high: Degree, digits: u32) -> Degree {
    if rng.random_bool(0.2) {
        return low;
    }
    let scale = Decimal::from(units(digits));
    let first: u64 = (low.value() * scale).ceil().try_into().unwrap();
    let last: u64 = (high.value() * scale).floor().try_into().unwrap();
    if first > last {
        return low;
    }
    Degree::from_scaled(rng.random_range(first..=last), digits).unwrap()
}

pub fn ifs(rng: &mut impl Rng, digits: u32) -> IfsValue {
    let mu = degree(rng, digits);
    let nu = at_most(rng, mu.complement(), digits);
    IfsValue::new(mu, nu).unwrap()
}

pub fn ifset(rng: &mut impl Rng, universe: &Universe, digits: u32) -> IfSet {
    IfSet::new(universe.clone(), (0..universe.len()).map(|_| ifs(rng, digits)).collect()).unwrap()
}

pub fn gifss(rng: &mut impl Rng, universe: &Universe, params: &[&str], digits: u32) -> Gifss {
    Gifss::new(
        universe.clone(),
        params.iter().map(|p| {
            let entry = GifssEntry { set: ifset(rng, universe, digits), preference: degree(rng, digits) };
            (ParamId::new(*p).unwrap(), entry)
        }),
    )
    .unwrap()
}

/// A soft set over a random subset (possibly empty) of `pool`.
pub fn gifss_over_subset(rng: &mut impl Rng, universe: &Universe, pool: &[&str], digits: u32) -> Gifss {
    let chosen: Vec<&str> = pool.iter().copied().filter(|_| rng.random_bool(0.7)).collect();
    gifss(rng, universe, &chosen, digits)
}

/// A random valid relation between `source` and `target`: each cell is a
/// random point inside `source(a) ∩ target(b)`.
pub fn relation(rng: &mut impl Rng, source: Arc<Gifss>, target: Arc<Gifss>, ctx: &NormContext, digits: u32) -> Gifsr {
    let top = Gifsr::maximal(source.clone(), target.clone(), ctx.clone()).unwrap();
    let entries: Vec<(String, String, RelationCell)> = top
        .iter()
        .map(|(a, b, cell)| (a.to_string(), b.to_string(), shrink(rng, cell, digits)))
        .collect();
    Gifsr::new(source, target, ctx.clone(), entries).unwrap()
}

/// A random cell inside `cell`.
pub fn shrink(rng: &mut impl Rng, cell: &RelationCell, digits: u32) -> RelationCell {
    let values = cell
        .set
        .values()
        .iter()
        .map(|v| {
            let mu = at_most(rng, v.mu(), digits);
            let nu = between(rng, v.nu(), mu.complement(), digits);
            IfsValue::new(mu, nu).unwrap()
        })
        .collect();
    RelationCell {
        set: IfSet::new(cell.set.universe().clone(), values).unwrap(),
        degree: at_most(rng, cell.degree, digits),
    }
}

pub fn param_names(n: usize, prefix: &str) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn strs(names: &[String]) -> Vec<&str> {
    names.iter().map(String::as_str).collect()
}

// proptest strategies

pub fn degree_strategy(digits: u32) -> impl Strategy<Value = Degree> {
    let full = units(digits);
    prop_oneof![
        1 => Just(Degree::ZERO),
        1 => Just(Degree::ONE),
        8 => (0..=full).prop_map(move |u| Degree::from_scaled(u, digits).unwrap()),
    ]
}

pub fn ifs_strategy(digits: u32) -> impl Strategy<Value = IfsValue> {
    let full = units(digits);
    (0..=full).prop_flat_map(move |mu| {
        (Just(mu), 0..=full - mu).prop_map(move |(mu, nu)| {
            IfsValue::new(Degree::from_scaled(mu, digits).unwrap(), Degree::from_scaled(nu, digits).unwrap()).unwrap()
        })
    })
}

/// Soft sets over `x1..xn` whose parameters are a random subset of `pool`.
pub fn gifss_strategy(n: usize, pool: &'static [&'static str], digits: u32) -> impl Strategy<Value = Gifss> {
    let entry = (proptest::collection::vec(ifs_strategy(digits), n), degree_strategy(digits));
    proptest::collection::vec((any::<bool>(), entry), pool.len()).prop_map(move |slots| {
        let u = universe(n);
        let entries = pool.iter().zip(slots).filter(|(_, (keep, _))| *keep).map(|(p, (_, (values, preference)))| {
            let set = IfSet::new(u.clone(), values).unwrap();
            (ParamId::new(*p).unwrap(), GifssEntry { set, preference })
        });
        Gifss::new(u.clone(), entries).unwrap()
    })
}

pub fn pair_strategy() -> impl Strategy<Value = NormContext> {
    prop_oneof![Just(NormContext::product()), Just(NormContext::min_max()), Just(NormContext::lukasiewicz())]
}
