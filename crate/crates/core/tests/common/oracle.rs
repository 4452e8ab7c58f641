//! Straight-from-the-definitions reimplementation on exact rationals.
//!
//! Nothing here calls into the library's arithmetic: values are read back
//! through their decimal text and every operation is a plain nested loop.

use gifss::{Degree, Gifsr, Gifss, NormPair};
use num_rational::Ratio;

pub type Q = Ratio<i128>;

pub fn q(text: &str) -> Q {
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    let scale = 10i128.pow(frac.len() as u32);
    let digits: i128 = format!("{int}{frac}").parse().unwrap();
    Q::new(digits, scale)
}

pub fn qd(value: Degree) -> Q {
    q(&value.to_string())
}

fn one() -> Q {
    Q::from_integer(1)
}

fn zero() -> Q {
    Q::from_integer(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pair {
    Product,
    MinMax,
    Lukasiewicz,
}

impl Pair {
    pub const ALL: [Pair; 3] = [Pair::Product, Pair::MinMax, Pair::Lukasiewicz];

    pub fn of(pair: &NormPair) -> Pair {
        match pair.name() {
            "product" => Pair::Product,
            "minmax" => Pair::MinMax,
            "lukasiewicz" => Pair::Lukasiewicz,
            other => panic!("no oracle for {other}"),
        }
    }

    pub fn t(self, a: Q, b: Q) -> Q {
        match self {
            Pair::Product => a * b,
            Pair::MinMax => a.min(b),
            Pair::Lukasiewicz => (a + b - one()).max(zero()),
        }
    }

    pub fn s(self, a: Q, b: Q) -> Q {
        match self {
            Pair::Product => a + b - a * b,
            Pair::MinMax => a.max(b),
            Pair::Lukasiewicz => (a + b).min(one()),
        }
    }
}

/// Round half to even at `digits` fractional digits; `None` keeps `x`.
pub fn round(x: Q, digits: Option<u32>) -> Q {
    let Some(digits) = digits else { return x };
    let scale = Q::from_integer(10i128.pow(digits));
    let scaled = x * scale;
    let floor = scaled.floor();
    let frac = scaled - floor;
    let half = Q::new(1, 2);
    let up = frac > half || (frac == half && floor.to_integer() % 2 != 0);
    let units = if up { floor + one() } else { floor };
    units / scale
}

/// (mu, nu) per element.
pub type Values = Vec<(Q, Q)>;

#[derive(Clone, Debug, PartialEq)]
pub struct Soft {
    pub universe: Vec<String>,
    /// (parameter, preference, values), in order
    pub params: Vec<(String, Q, Values)>,
}

impl Soft {
    pub fn of(set: &Gifss) -> Soft {
        Soft {
            universe: set.universe().iter().map(|e| e.to_string()).collect(),
            params: set
                .iter()
                .map(|(p, entry)| {
                    let values = entry.set.values().iter().map(|v| (qd(v.mu()), qd(v.nu()))).collect();
                    (p.to_string(), qd(entry.preference), values)
                })
                .collect(),
        }
    }

    fn find(&self, name: &str) -> Option<&(String, Q, Values)> {
        self.params.iter().find(|(p, _, _)| p == name)
    }

    pub fn intersect(&self, other: &Soft, pair: Pair, digits: Option<u32>) -> Soft {
        let mut params = Vec::new();
        for (name, alpha, f) in &self.params {
            if let Some((_, beta, g)) = other.find(name) {
                let mut values = Vec::new();
                for x in 0..self.universe.len() {
                    values.push((round(pair.t(f[x].0, g[x].0), digits), round(pair.s(f[x].1, g[x].1), digits)));
                }
                params.push((name.clone(), round(pair.t(*alpha, *beta), digits), values));
            }
        }
        Soft { universe: self.universe.clone(), params }
    }

    pub fn union(&self, other: &Soft, pair: Pair, digits: Option<u32>) -> Soft {
        let mut params = Vec::new();
        for (name, alpha, f) in &self.params {
            match other.find(name) {
                Some((_, beta, g)) => {
                    let mut values = Vec::new();
                    for x in 0..self.universe.len() {
                        values.push((round(pair.s(f[x].0, g[x].0), digits), round(pair.t(f[x].1, g[x].1), digits)));
                    }
                    params.push((name.clone(), round(pair.s(*alpha, *beta), digits), values));
                }
                None => params.push((name.clone(), *alpha, f.clone())),
            }
        }
        for entry in &other.params {
            if self.find(&entry.0).is_none() {
                params.push(entry.clone());
            }
        }
        Soft { universe: self.universe.clone(), params }
    }

    pub fn is_subset(&self, other: &Soft) -> bool {
        self.params.iter().all(|(name, alpha, f)| match other.find(name) {
            None => false,
            Some((_, beta, g)) => alpha <= beta && f.iter().zip(g).all(|(a, b)| a.0 <= b.0 && a.1 >= b.1),
        })
    }
}

/// Entries in source-major order.
#[derive(Clone, Debug, PartialEq)]
pub struct Rel {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub cells: Vec<Vec<(Values, Q)>>,
}

impl Rel {
    pub fn of(relation: &Gifsr) -> Rel {
        let rows: Vec<String> = relation.source().params().map(|p| p.to_string()).collect();
        let cols: Vec<String> = relation.target().params().map(|p| p.to_string()).collect();
        let cells = rows
            .iter()
            .map(|a| {
                cols.iter()
                    .map(|b| {
                        let cell = relation.get(a, b).unwrap();
                        let values = cell.set.values().iter().map(|v| (qd(v.mu()), qd(v.nu()))).collect();
                        (values, qd(cell.degree))
                    })
                    .collect()
            })
            .collect();
        Rel { rows, cols, cells }
    }

    /// Join over every middle parameter of the pointwise intersection.
    pub fn compose(&self, next: &Rel, universe_len: usize, pair: Pair, digits: Option<u32>) -> Rel {
        let mut cells = Vec::new();
        for i in 0..self.rows.len() {
            let mut row = Vec::new();
            for k in 0..next.cols.len() {
                let mut values: Values = vec![(zero(), one()); universe_len];
                let mut degree = zero();
                for j in 0..self.cols.len() {
                    let (left, left_degree) = &self.cells[i][j];
                    let (right, right_degree) = &next.cells[j][k];
                    for x in 0..universe_len {
                        let mu = round(pair.t(left[x].0, right[x].0), digits);
                        let nu = round(pair.s(left[x].1, right[x].1), digits);
                        values[x].0 = values[x].0.max(mu);
                        values[x].1 = values[x].1.min(nu);
                    }
                    degree = degree.max(round(pair.t(*left_degree, *right_degree), digits));
                }
                row.push((values, degree));
            }
            cells.push(row);
        }
        Rel { rows: self.rows.clone(), cols: next.cols.clone(), cells }
    }

    /// Containment of every cell in `source(a) ∩ target(b)`.
    pub fn contained_in(&self, source: &Soft, target: &Soft, pair: Pair, digits: Option<u32>) -> bool {
        for (i, (_, alpha, f)) in source.params.iter().enumerate() {
            for (j, (_, beta, g)) in target.params.iter().enumerate() {
                let (values, degree) = &self.cells[i][j];
                if *degree > round(pair.t(*alpha, *beta), digits) {
                    return false;
                }
                for x in 0..values.len() {
                    if values[x].0 > round(pair.t(f[x].0, g[x].0), digits)
                        || values[x].1 < round(pair.s(f[x].1, g[x].1), digits)
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Ranking {
    /// indexed [parameter][element]
    pub mu: Vec<Vec<Q>>,
    pub nu: Vec<Vec<Q>>,
    pub mu_counts: Vec<Vec<usize>>,
    pub nu_counts: Vec<Vec<usize>>,
    pub mu_scores: Vec<i64>,
    pub nu_scores: Vec<i64>,
    pub finals: Vec<i64>,
}

fn counts(table: &[Vec<Q>], n: usize) -> Vec<Vec<usize>> {
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            c[i][j] = table.iter().filter(|row| row[i] >= row[j]).count();
        }
    }
    c
}

fn scores(c: &[Vec<usize>]) -> Vec<i64> {
    let n = c.len();
    (0..n)
        .map(|i| {
            let row: usize = (0..n).map(|j| c[i][j]).sum();
            let col: usize = (0..n).map(|j| c[j][i]).sum();
            row as i64 - col as i64
        })
        .collect()
}

pub fn rank(set: &Soft, digits: Option<u32>) -> Ranking {
    let n = set.universe.len();
    let mut mu = Vec::new();
    let mut nu = Vec::new();
    for (_, alpha, values) in &set.params {
        mu.push(values.iter().map(|v| round(v.0 + alpha - v.0 * alpha, digits)).collect());
        nu.push(values.iter().map(|v| round(v.1 * alpha, digits)).collect());
    }
    let mu_counts = counts(&mu, n);
    let nu_counts = counts(&nu, n);
    let mu_scores = scores(&mu_counts);
    let nu_scores = scores(&nu_counts);
    let finals = mu_scores.iter().zip(&nu_scores).map(|(a, b)| a - b).collect();
    Ranking { mu, nu, mu_counts, nu_counts, mu_scores, nu_scores, finals }
}
