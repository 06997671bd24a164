//! Verification suites behind `meandre verify`. Each suite reports what it
//! checked and every failure it found, in a deterministic order.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::composition::SeaweedC;
use crate::enumeration::{
    central_arcs, census_table, count_type_a_frobenius_ending_in, embed_up, frobenius_seaweeds,
    hat_map, seaweeds_c, to_type_a, CensusRow,
};
use crate::index::{index_a_gl, index_c, reduction_chain_with, ReductionOptions};
use crate::meander::{analyze, build_graph_a, build_graph_c};
use crate::oracle::{index_oracle_with, OracleConfig};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    /// Human-readable summary lines.
    pub lines: Vec<String>,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            lines: Vec::new(),
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, label: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) {
        let label = label.into();
        if ok {
            self.lines.push(format!("ok    {label}"));
        } else {
            self.lines.push(format!("FAIL  {label}"));
            self.failures.push(format!("{label}: {}", detail()));
        }
    }
}

fn size_key(q: &SeaweedC) -> (usize, usize, String) {
    (
        q.rank(),
        q.top().total() + q.bottom().total(),
        q.to_string(),
    )
}

/// Graph formula against the two-case and closed-form reductions for every
/// ordered pair up to `max_n`. With `inject_fault`, one σ-stability flag is
/// flipped in the first seaweed that has a segment.
pub fn cross_check_reduction(max_n: usize, inject_fault: bool) -> SuiteReport {
    let mut suite = SuiteReport::new("graph formula vs reductions");
    let closed = ReductionOptions {
        closed_form: true,
        ..ReductionOptions::default()
    };
    let mut fault_pending = inject_fault;
    let mut mismatches: Vec<(SeaweedC, String)> = Vec::new();
    for n in 1..=max_n {
        let all: Vec<SeaweedC> = seaweeds_c(n).collect();
        let target = if fault_pending {
            all.iter().position(|q| analyze(&build_graph_c(q)).segments > 0)
        } else {
            None
        };
        if target.is_some() {
            fault_pending = false;
        }
        let found: Vec<(SeaweedC, String)> = all
            .par_iter()
            .enumerate()
            .filter_map(|(i, q)| {
                let mut report = analyze(&build_graph_c(q));
                if Some(i) == target {
                    if let Some(seg) = report.components.iter_mut().find(|c| !c.is_cycle()) {
                        seg.sigma_stable = !seg.sigma_stable;
                    }
                    report.recount();
                }
                let graph = report.symmetric_index();
                let cases = reduction_chain_with(q, ReductionOptions::default()).total_index;
                let closed_total = reduction_chain_with(q, closed).total_index;
                let agree = graph == Some(cases) && cases == closed_total;
                (!agree).then(|| {
                    let graph = graph.map_or_else(
                        || "invalid (odd number of segments that are not σ-stable)".to_string(),
                        |g| g.to_string(),
                    );
                    (
                        q.clone(),
                        format!("{q}: graph {graph}, two-case chain {cases}, closed-form chain {closed_total}"),
                    )
                })
            })
            .collect();
        suite.lines.push(format!(
            "n={n}: {} ordered pairs cross-checked, {} mismatches",
            all.len(),
            found.len()
        ));
        mismatches.extend(found);
    }
    mismatches.sort_by_key(|(q, _)| size_key(q));
    suite.failures = mismatches.into_iter().map(|(_, m)| m).collect();
    suite
}

/// Matrix oracle against the graph formula: exhaustive up to `max_n`, then
/// `random_count` seeded random seaweeds at rank `max_n + 1` (if within the bound).
pub fn cross_check_oracle(max_n: usize, random_count: usize, config: OracleConfig) -> SuiteReport {
    let mut suite = SuiteReport::new("matrix oracle vs graph formula");
    let mut tasks: Vec<SeaweedC> = (1..=max_n).flat_map(seaweeds_c).collect();
    let exhaustive = tasks.len();
    let random_rank = max_n + 1;
    if random_count > 0 && random_rank <= config.bound {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(config.seed);
        let pool: Vec<SeaweedC> = seaweeds_c(random_rank).collect();
        tasks.extend(pool.choose_multiple(&mut rng, random_count).cloned());
    }
    let mut mismatches: Vec<(SeaweedC, String)> = tasks
        .par_iter()
        .enumerate()
        .filter_map(|(i, q)| {
            let task = OracleConfig {
                stream: i as u64 + 1,
                ..config
            };
            let expected = index_c(q);
            match index_oracle_with(q, &task) {
                Ok(found) if found == expected => None,
                Ok(found) => Some((q.clone(), format!("{q}: oracle {found}, graph {expected}"))),
                Err(e) => Some((q.clone(), format!("{q}: {e}"))),
            }
        })
        .collect();
    suite.lines.push(format!(
        "{exhaustive} seaweeds exhaustively for n ≤ {max_n}, {} random at n = {random_rank}, {} samples each, seed {}",
        tasks.len() - exhaustive,
        config.samples,
        config.seed
    ));
    mismatches.sort_by_key(|(q, _)| size_key(q));
    suite.failures = mismatches.into_iter().map(|(_, m)| m).collect();
    suite
}

/// Rows of the census needed by the stabilisation checks.
pub const STABLE_CENSUS_N: usize = 9;

fn f(table: &[CensusRow], n: usize, k: usize) -> u64 {
    table.get(n - 1).map_or(0, |row| row.get(k))
}

/// Structural facts about Frobenius seaweeds, checked on enumerated sets up
/// to `max_n` and on census rows up to `max(max_n, 9)`.
pub fn structural_suite(max_n: usize) -> SuiteReport {
    let mut suite = SuiteReport::new("Frobenius structure");
    let rows = max_n.max(STABLE_CENSUS_N);
    let table = census_table(rows);
    let sets: Vec<Vec<SeaweedC>> = (1..=max_n + 1).map(frobenius_seaweeds).collect();
    let set = |n: usize| &sets[n - 1];

    for n in 1..=max_n {
        let bad: Vec<String> = seaweeds_c(n)
            .collect::<Vec<_>>()
            .par_iter()
            .filter(|q| index_c(q) == 0)
            .filter(|q| (q.top().total() == n) == (q.bottom().total() == n))
            .map(|q| q.to_string())
            .collect();
        suite.check(
            format!("n={n}: Frobenius implies exactly one full side"),
            bad.is_empty(),
            || bad.join(", "),
        );
    }

    for n in 1..=max_n {
        let bad: Vec<String> = set(n)
            .iter()
            .filter(|q| {
                let k = central_arcs(q);
                let g = build_graph_c(q);
                let report = analyze(&g);
                !(report.cycles == 0
                    && report.components.len() == k
                    && report.components.iter().all(|c| c.sigma_stable)
                    && g.arc_count() == 2 * n - k)
            })
            .map(|q| q.to_string())
            .collect();
        suite.check(
            format!("n={n}: k σ-stable segments, no cycles, 2n-k arcs"),
            bad.is_empty(),
            || bad.join(", "),
        );
    }

    for n in 1..=max_n {
        let target: HashSet<&SeaweedC> = set(n + 1).iter().collect();
        let mut images = HashSet::new();
        let mut bad = Vec::new();
        for q in set(n) {
            match embed_up(q) {
                Ok(up) if target.contains(&up) && central_arcs(&up) == central_arcs(q) + 1 => {
                    if !images.insert(up.clone()) {
                        bad.push(format!("{q} collides at {up}"));
                    }
                }
                Ok(up) => bad.push(format!("{q} -> {up} outside F(n+1,k+1)")),
                Err(e) => bad.push(format!("{q}: {e}")),
            }
        }
        suite.check(
            format!("n={n}: embed_up injective into F({},k+1)", n + 1),
            bad.is_empty(),
            || bad.join(", "),
        );
    }
    for n in 1..rows {
        let (lo, hi) = (table[n - 1].total, table[n].total);
        suite.check(format!("F_{} = {hi} > F_{n} = {lo}", n + 1), hi > lo, String::new);
    }

    for m in 0..=3usize {
        let stable = f(&table, 2 * m + 1, m + 1);
        for n in (2 * m + 1)..=rows {
            let value = f(&table, n, n - m);
            suite.check(
                format!("F({n},{}) = F({},{}) = {stable}", n - m, 2 * m + 1, m + 1),
                value == stable,
                || format!("found {value}"),
            );
        }
    }
    for m in 1..=(rows - 1) / 2 {
        let (a, b) = (f(&table, 2 * m + 1, m + 1), f(&table, 2 * m, m));
        suite.check(
            format!("F({},{}) = F({},{m}) + 1", 2 * m + 1, m + 1, 2 * m),
            a == b + 1,
            || format!("{a} vs {b}"),
        );
    }
    {
        let m = 3;
        let (a, b) = (f(&table, 2 * m, m), f(&table, 2 * m - 1, m - 1));
        suite.check(
            format!("F({},{m}) = F({},{}) + 3", 2 * m, 2 * m - 1, m - 1),
            a == b + 3,
            || format!("{a} vs {b}"),
        );
    }
    for n in 1..=rows {
        let expected_last = [1, if n == 2 { 1 } else { 2 }, match n {
            3 => 2,
            4 => 4,
            _ => 5,
        }];
        for (offset, &want) in expected_last.iter().enumerate() {
            if offset >= n {
                break;
            }
            let found = f(&table, n, n - offset);
            suite.check(
                format!("F({n},{}) = {want}", n - offset),
                found == want,
                || format!("found {found}"),
            );
        }
    }

    for n in 1..=max_n {
        let bad: Vec<String> = set(n)
            .iter()
            .filter(|q| central_arcs(q) == 1)
            .filter(|q| {
                let sym = q.symmetrize();
                let report = analyze(&build_graph_a(&sym));
                !(report.components.len() == 1 && report.segments == 1 && index_a_gl(&sym) == 1)
            })
            .map(|q| q.to_string())
            .collect();
        suite.check(
            format!("n={n}: F(n,1) symmetric gl graphs are one segment of gl index 1"),
            bad.is_empty(),
            || bad.join(", "),
        );
    }
    for n in 2..rows {
        let (lo, hi) = (f(&table, n, 1), f(&table, n + 1, 1));
        suite.check(format!("F({},1) = {hi} > F({n},1) = {lo}", n + 1), hi > lo, String::new);
    }
    for n in 1..=max_n {
        let mut image: Vec<SeaweedC> = set(n)
            .iter()
            .filter(|q| central_arcs(q) == 1)
            .filter_map(|q| hat_map(q).ok())
            .collect();
        image.sort_by_key(|q| q.to_string());
        let distinct = image.iter().collect::<HashSet<_>>().len() == image.len();
        let mut expected: Vec<SeaweedC> = set(n + 1)
            .iter()
            .filter(|q| central_arcs(q) == 1 && q.top().last() == Some(2))
            .cloned()
            .collect();
        expected.sort_by_key(|q| q.to_string());
        suite.check(
            format!("n={n}: hat map is a bijection onto F({},1) with full side ending in 2", n + 1),
            distinct && image == expected,
            || format!("{} images, {} targets", image.len(), expected.len()),
        );
    }

    for k in 1..=2usize {
        for n in k..=max_n {
            let members: Vec<&SeaweedC> = set(n).iter().filter(|q| central_arcs(q) == k).collect();
            let mut bad = Vec::new();
            let mut images = HashSet::new();
            for q in &members {
                match to_type_a(q) {
                    Ok(a) => {
                        let report = analyze(&build_graph_a(&a));
                        if report.components.len() != 1 || a.top().last() != Some(k) {
                            bad.push(format!("{q} -> {a} is not connected"));
                        }
                        images.insert(a);
                    }
                    Err(e) => bad.push(format!("{q}: {e}")),
                }
            }
            let type_a = count_type_a_frobenius_ending_in(n, k);
            let count_ok = images.len() == members.len() && type_a == members.len() as u64;
            suite.check(
                format!("n={n}: F({n},{k}) = {} matches {type_a} Frobenius sl({n}) seaweeds with top ending in {k}", members.len()),
                bad.is_empty() && count_ok,
                || bad.join(", "),
            );
        }
    }
    suite
}
