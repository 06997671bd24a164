//! Enumeration of compositions and seaweeds, the Frobenius census `F(n,k)`,
//! and the maps between Frobenius families.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::composition::{symmetric_composition, Composition, SeaweedA, SeaweedC};
use crate::error::{Error, Result};
use crate::index::{index_a_sl, index_c};

/// All `2^(m-1)` compositions of `m` (just `∅` when `m = 0`).
///
/// Order: bit `i` of a counter running from `0` marks a cut after position
/// `m - 1 - i`, so `m = 3` yields `(3), (2,1), (1,2), (1,1,1)`.
pub fn compositions_of(m: usize) -> Compositions {
    assert!(m < 64, "composition masks are 64-bit");
    let end = if m == 0 { 1 } else { 1u64 << (m - 1) };
    Compositions { m, mask: 0, end }
}

pub struct Compositions {
    m: usize,
    mask: u64,
    end: u64,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        if self.mask >= self.end {
            return None;
        }
        let mask = self.mask;
        self.mask += 1;
        let mut parts = Vec::new();
        let mut run = 0;
        for position in 1..=self.m {
            run += 1;
            let cut = position == self.m || mask >> (self.m - 1 - position) & 1 == 1;
            if cut {
                parts.push(run);
                run = 0;
            }
        }
        Some(Composition::new(parts).expect("positive runs"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.mask) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Compositions {}

/// Every composition of total at most `n`, by increasing total.
pub fn compositions_up_to(n: usize) -> impl Iterator<Item = Composition> {
    (0..=n).flat_map(compositions_of)
}

/// All `4^n` ordered pairs `q_n(a | b)` in `sp(2n)`.
pub fn seaweeds_c(n: usize) -> impl Iterator<Item = SeaweedC> {
    let sides: Vec<Composition> = compositions_up_to(n).collect();
    let pairs: Vec<(Composition, Composition)> = sides
        .iter()
        .flat_map(|a| sides.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    pairs
        .into_iter()
        .map(move |(a, b)| SeaweedC::sp(n, a, b).expect("totals within rank"))
}

/// Disjoint-set forest over vertices `0..n`.
struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Returns `false` when `u` and `v` were already connected.
    fn union(&mut self, u: usize, v: usize) -> bool {
        let (ru, rv) = (self.find(u), self.find(v));
        if ru == rv {
            return false;
        }
        self.parent[ru] = rv;
        true
    }
}

/// Joins the arcs of `parts` into `set`; `false` as soon as an arc closes a cycle.
fn union_arcs(set: &mut DisjointSet, parts: &[usize]) -> bool {
    let mut offset = 0;
    for &p in parts {
        for i in 1..=p / 2 {
            if !set.union(offset + i - 1, offset + p - i) {
                return false;
            }
        }
        offset += p;
    }
    true
}

/// Frobenius test by incremental cycle detection: the graph must be a forest
/// with exactly one component per central arc.
pub fn is_frobenius_fast(q: &SeaweedC) -> bool {
    let n = q.rank();
    let central = q.d() + q.d_prime();
    if central == 0 {
        return n == 0;
    }
    let top = symmetric_composition(q.top(), n);
    let bottom = symmetric_composition(q.bottom(), n);
    let arcs: usize = top.parts().iter().chain(bottom.parts()).map(|p| p / 2).sum();
    if arcs + central != 2 * n {
        return false;
    }
    let mut set = DisjointSet::new(2 * n);
    union_arcs(&mut set, top.parts()) && union_arcs(&mut set, bottom.parts())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    /// `by_k[k - 1] = F(n,k)` for `k = 1..=n`.
    pub by_k: Vec<u64>,
    pub total: u64,
}

impl CensusRow {
    /// `F(n,k)`, zero outside `1..=n`.
    pub fn get(&self, k: usize) -> u64 {
        if k == 0 {
            return 0;
        }
        self.by_k.get(k - 1).copied().unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum CensusMethod {
    /// Union-find cycle detection (see [`is_frobenius_fast`]).
    #[default]
    Fast,
    /// Full component analysis and the index formula.
    Reference,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CensusOptions {
    pub method: CensusMethod,
    /// Count ordered pairs over all `4^n` seaweeds instead of ~-classes over
    /// the pruned candidates (one side full, the other deficient).
    pub raw: bool,
}

fn is_frobenius(q: &SeaweedC, method: CensusMethod) -> bool {
    match method {
        CensusMethod::Fast => is_frobenius_fast(q),
        CensusMethod::Reference => index_c(q) == 0,
    }
}

pub fn frobenius_census(n: usize) -> CensusRow {
    frobenius_census_with(n, CensusOptions::default())
}

pub fn frobenius_census_with(n: usize, options: CensusOptions) -> CensusRow {
    assert!(n >= 1, "census rank must be positive");
    let method = options.method;
    let (full, others): (Vec<Composition>, Vec<Composition>) = if options.raw {
        (compositions_up_to(n).collect(), compositions_up_to(n).collect())
    } else {
        (compositions_of(n).collect(), compositions_up_to(n - 1).collect())
    };
    let by_k = full
        .par_iter()
        .map(|a| {
            let mut counts = vec![0u64; n];
            for b in &others {
                let q = SeaweedC::sp(n, a.clone(), b.clone()).expect("totals within rank");
                if is_frobenius(&q, method) {
                    counts[q.d() + q.d_prime() - 1] += 1;
                }
            }
            counts
        })
        .reduce(
            || vec![0u64; n],
            |mut acc, counts| {
                acc.iter_mut().zip(counts).for_each(|(x, y)| *x += y);
                acc
            },
        );
    let total = by_k.iter().sum();
    CensusRow { n, by_k, total }
}

/// Rows `1..=max_n`.
pub fn census_table(max_n: usize) -> Vec<CensusRow> {
    (1..=max_n).map(frobenius_census).collect()
}

fn sort_key(q: &SeaweedC) -> (usize, Vec<usize>, Vec<usize>) {
    (q.rank(), q.top().parts().to_vec(), q.bottom().parts().to_vec())
}

/// Canonical representatives (full side on top) of the Frobenius seaweeds of
/// rank `n`, sorted by central-arc count and then by compositions.
pub fn frobenius_seaweeds(n: usize) -> Vec<SeaweedC> {
    let others: Vec<Composition> = compositions_up_to(n.saturating_sub(1)).collect();
    let mut found: Vec<SeaweedC> = compositions_of(n)
        .collect::<Vec<_>>()
        .par_iter()
        .flat_map_iter(|a| {
            others.iter().filter_map(move |b| {
                let q = SeaweedC::sp(n, a.clone(), b.clone()).expect("totals within rank");
                is_frobenius_fast(&q).then_some(q)
            })
        })
        .collect();
    found.sort_by_key(|q| (central_arcs(q), sort_key(q)));
    found
}

/// `d + d'`; for a Frobenius seaweed this is its `k`.
pub fn central_arcs(q: &SeaweedC) -> usize {
    q.d() + q.d_prime()
}

/// Deficient side on top, full side below.
fn deficient_on_top(q: &SeaweedC) -> SeaweedC {
    if q.top().total() <= q.bottom().total() {
        q.clone()
    } else {
        q.swapped()
    }
}

fn require_frobenius(q: &SeaweedC) -> Result<()> {
    if index_c(q) == 0 {
        Ok(())
    } else {
        Err(Error::NotFrobenius(q.to_string()))
    }
}

/// An explicit member of `F(n,1)`: `a = (2^k)` with `b = (1, 2^(k-1))` for
/// `n = 2k`, or `b = (1, 2^k)` for `n = 2k+1`.
pub fn explicit_fn1_element(n: usize) -> SeaweedC {
    assert!(n >= 1);
    let k = n / 2;
    let twos_below = if n.is_multiple_of(2) { k - 1 } else { k };
    let a = Composition::new(vec![2; k]).expect("positive");
    let b = Composition::new(std::iter::once(1).chain(std::iter::repeat_n(2, twos_below)).collect())
        .expect("positive");
    SeaweedC::sp(n, a, b).expect("totals within rank")
}

/// `F(n,k) -> F(n+1,k+1)`: a part 1 is appended to the full side, which adds
/// one innermost central arc on the other side. Result in canonical form.
pub fn embed_up(q: &SeaweedC) -> Result<SeaweedC> {
    require_frobenius(q)?;
    let q = deficient_on_top(q);
    let full = q.bottom().with_appended(1);
    Ok(SeaweedC::new(q.rank() + 1, q.top().clone(), full, q.series())
        .expect("totals within rank")
        .canonical_pair())
}

fn require_central(q: &SeaweedC, allowed: &[usize]) -> Result<usize> {
    require_frobenius(q)?;
    let k = central_arcs(q);
    if allowed.contains(&k) {
        Ok(k)
    } else {
        Err(Error::WrongCentralArcs {
            seaweed: q.to_string(),
            expected: allowed
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" or "),
            found: k,
        })
    }
}

/// `F(n,1) -> F(n+1,1)`: `q_n(a | b) -> q_{n+1}(a, 2 | b)` with `a` the
/// deficient side. Result in canonical form.
pub fn hat_map(q: &SeaweedC) -> Result<SeaweedC> {
    require_central(q, &[1])?;
    let q = deficient_on_top(q);
    let top = q.top().with_appended(2);
    Ok(SeaweedC::new(q.rank() + 1, top, q.bottom().clone(), q.series())
        .expect("totals within rank")
        .canonical_pair())
}

/// `F(n,k) -> ` Frobenius seaweeds of `sl(n)` for `k ∈ {1, 2}`:
/// `q_n(a | b) -> q^A(a, k | b)` with `a` the deficient side.
pub fn to_type_a(q: &SeaweedC) -> Result<SeaweedA> {
    require_frobenius(q)?;
    let k = central_arcs(q);
    if !(k == 1 || k == 2) {
        return Err(Error::Unsupported(k));
    }
    let q = deficient_on_top(q);
    SeaweedA::new(q.top().with_appended(k), q.bottom().clone())
}

/// Ordered pairs `(a' | b)` of compositions of `n` with `q^A(a' | b) ∩ sl(n)`
/// Frobenius and `a'` ending in `last`.
pub fn count_type_a_frobenius_ending_in(n: usize, last: usize) -> u64 {
    let all: Vec<Composition> = compositions_of(n).collect();
    all.par_iter()
        .filter(|a| a.last() == Some(last))
        .map(|a| {
            all.iter()
                .filter(|b| {
                    let q = SeaweedA::new((*a).clone(), (*b).clone()).expect("equal totals");
                    index_a_sl(&q) == 0
                })
                .count() as u64
        })
        .sum()
}
