//! Brute-force factorization enumerator for any list of generators in the
//! quadrant.
//!
//! Nothing here uses slopes, normal forms or the closed forms of the solvers:
//! the search walks every multiplicity vector allowed by coordinate bounds,
//! which makes it the reference the solvers are checked against. Intended
//! for coordinates up to a few hundred.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::ratq::{ExtRat, Vec2};

/// All factorizations of `target`, sorted, with their sorted lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationSet {
    pub target: Vec2,
    pub facts: Vec<Factorization>,
    pub lengths: Vec<BigInt>,
}

impl FactorizationSet {
    pub fn is_member(&self) -> bool {
        !self.facts.is_empty()
    }
}

type Point = (u128, u128);

fn small(v: &Vec2) -> Result<Point> {
    let x = u64::try_from(v.x()).map_err(|_| Error::OracleOverflow)?;
    let y = u64::try_from(v.y()).map_err(|_| Error::OracleOverflow)?;
    Ok((x as u128, y as u128))
}

/// Largest `k` with `k * g <= rest` coordinate-wise. `g` is nonzero.
fn bound(g: Point, rest: Point) -> u128 {
    let kx = rest.0.checked_div(g.0).unwrap_or(u128::MAX);
    let ky = rest.1.checked_div(g.1).unwrap_or(u128::MAX);
    kx.min(ky)
}

/// `Some(k)` when `rest = k * g` for some `k >= 0`.
fn exact_multiple(g: Point, rest: Point) -> Option<u128> {
    let k = rest.0.checked_div(g.0).unwrap_or_else(|| rest.1 / g.1);
    (g.0 * k == rest.0 && g.1 * k == rest.1).then_some(k)
}

struct Search<'a> {
    gens: &'a [Point],
    free: Vec<usize>,
    last: usize,
    mults: Vec<u128>,
    found: Vec<Vec<u128>>,
}

impl Search<'_> {
    fn walk(&mut self, depth: usize, rest: Point) {
        if depth == self.free.len() {
            if let Some(k) = exact_multiple(self.gens[self.last], rest) {
                self.mults[self.last] = k;
                self.found.push(self.mults.clone());
            }
            return;
        }
        let i = self.free[depth];
        let g = self.gens[i];
        for k in 0..=bound(g, rest) {
            self.mults[i] = k;
            self.walk(depth + 1, (rest.0 - k * g.0, rest.1 - k * g.1));
        }
        self.mults[i] = 0;
    }
}

pub fn enumerate_factorizations(gens: &[Vec2], s: &Vec2) -> Result<FactorizationSet> {
    if gens.is_empty() {
        return Err(Error::EmbeddingDimension(0));
    }
    if gens.iter().any(Vec2::is_zero) {
        return Err(Error::ZeroGenerator);
    }
    let points = gens.iter().map(small).collect::<Result<Vec<_>>>()?;
    let target = small(s)?;

    // The generator with the most room is solved for rather than looped over.
    let last = (0..points.len())
        .max_by_key(|&i| bound(points[i], target))
        .unwrap();
    let mut search = Search {
        gens: &points,
        free: (0..points.len()).filter(|&i| i != last).collect(),
        last,
        mults: vec![0; points.len()],
        found: Vec::new(),
    };
    search.walk(0, target);

    let mut facts: Vec<Factorization> = search
        .found
        .into_iter()
        .map(|m| {
            let mults = m.into_iter().map(BigInt::from).collect();
            Factorization::new(gens, mults, s).expect("search only keeps exact hits")
        })
        .collect();
    facts.sort();
    let mut lengths: Vec<BigInt> = facts.iter().map(|f| f.length().clone()).collect();
    lengths.sort();
    Ok(FactorizationSet {
        target: s.clone(),
        facts,
        lengths,
    })
}

/// `max L(s) / min L(s)` by enumeration.
pub fn elasticity_oracle(gens: &[Vec2], s: &Vec2) -> Result<ExtRat> {
    if s.is_zero() {
        return Err(Error::ZeroElement);
    }
    let set = enumerate_factorizations(gens, s)?;
    match (set.lengths.first(), set.lengths.last()) {
        (Some(min), Some(max)) => ExtRat::new(max.clone(), min.clone()),
        _ => Err(Error::NotMember),
    }
}
