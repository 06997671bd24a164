//! Index of seaweeds: the topological formulas read off meander graphs, and
//! the inductive reduction to parabolics as an independent route.

use std::fmt;

use crate::composition::{Composition, SeaweedA, SeaweedC};
use crate::error::{Error, Result};
use crate::meander::{analyze, build_graph_a, build_graph_c};

/// `2 * (cycles) + (segments)` of the type-A graph: the index in `gl(N)`.
pub fn index_a_gl(q: &SeaweedA) -> usize {
    analyze(&build_graph_a(q)).gl_index()
}

/// Index of `q ∩ sl(N)`; the centre of `gl(N)` accounts for the difference of one.
pub fn index_a_sl(q: &SeaweedA) -> usize {
    index_a_gl(q) - 1
}

/// `cycles + (segments not σ-stable) / 2` of the type-C graph. Valid for both
/// `sp(2n)` and `so(2n+1)` descriptors.
pub fn index_c(q: &SeaweedC) -> usize {
    analyze(&build_graph_c(q))
        .symmetric_index()
        .expect("segments that are not σ-stable come in mirror pairs")
}

/// `Σ [a_i / 2] + (n - Σ a_i)`: the index of the parabolic `p_n(a)`.
pub fn parabolic_index_c(rank: usize, a: &Composition) -> Result<usize> {
    if a.total() > rank {
        return Err(Error::TopExceedsRank {
            total: a.total(),
            rank,
        });
    }
    Ok(a.parts().iter().map(|p| p / 2).sum::<usize>() + (rank - a.total()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `a1 = b1`: a `gl(a1)` summand splits off.
    SplitEqual,
    /// `a1 ≤ b1 / 2`.
    CaseSmall,
    /// `b1 / 2 < a1 < b1`.
    CaseLarge,
    /// Iterated small/large steps collapsed into one, with the witness `p`.
    ClosedForm { p: usize },
    /// Removal of the circles formed by central arcs on both sides.
    StripCentral,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::SplitEqual => f.write_str("SPLIT-EQUAL"),
            Rule::CaseSmall => f.write_str("CASE-SMALL"),
            Rule::CaseLarge => f.write_str("CASE-LARGE"),
            Rule::ClosedForm { p } => write!(f, "CLOSED-FORM p={p}"),
            Rule::StripCentral => f.write_str("STRIP-CENTRAL"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub rule: Rule,
    /// The seaweed as handed to the step, before any side exchange.
    pub before: SeaweedC,
    /// Whether top and bottom were exchanged so that `a1 ≤ b1`.
    pub swapped: bool,
    pub after: SeaweedC,
    /// `index(before) = index_delta + index(after)`.
    pub index_delta: usize,
}

/// Exchanges sides when `b1 < a1`. Both sides must be non-empty.
fn normalize(q: &SeaweedC) -> (SeaweedC, bool) {
    match (q.top().first(), q.bottom().first()) {
        (Some(a1), Some(b1)) if b1 < a1 => (q.swapped(), true),
        _ => (q.clone(), false),
    }
}

fn heads(q: &SeaweedC) -> Result<(usize, usize)> {
    match (q.top().first(), q.bottom().first()) {
        (Some(a1), Some(b1)) => Ok((a1, b1)),
        _ => Err(Error::Terminal(q.to_string())),
    }
}

fn next(q: &SeaweedC, rank: usize, top: Composition, bottom: Composition) -> SeaweedC {
    SeaweedC::new(rank, top, bottom, q.series()).expect("reduction keeps totals within the rank")
}

/// One step of the two-case inductive procedure. Sides are exchanged first
/// when `b1 < a1`.
pub fn reduce_step(q: &SeaweedC) -> Result<ReductionStep> {
    heads(q)?;
    let (norm, swapped) = normalize(q);
    let (a1, b1) = heads(&norm)?;
    let (a, b, n) = (norm.top(), norm.bottom(), norm.rank());

    let (rule, after, index_delta) = if a1 == b1 {
        (Rule::SplitEqual, next(&norm, n - a1, a.tail(), b.tail()), a1)
    } else if 2 * a1 <= b1 {
        let bottom = b.tail().with_prefix(&[b1 - 2 * a1, a1]);
        (Rule::CaseSmall, next(&norm, n - a1, a.tail(), bottom), 0)
    } else {
        let top = a.tail().with_prefix(&[2 * a1 - b1]);
        let bottom = b.tail().with_prefix(&[a1]);
        (Rule::CaseLarge, next(&norm, n - b1 + a1, top, bottom), 0)
    };
    Ok(ReductionStep {
        rule,
        before: q.clone(),
        swapped,
        after,
        index_delta,
    })
}

/// The unique `p ≥ 0` with `p/(p+1) < a1/b1 ≤ (p+1)/(p+2)`, for `0 < a1 < b1`.
pub fn closed_form_witness(a1: usize, b1: usize) -> usize {
    assert!(0 < a1 && a1 < b1);
    let mut p = 0;
    while a1 * (p + 2) > b1 * (p + 1) {
        p += 1;
    }
    debug_assert!(p * b1 < a1 * (p + 1));
    p
}

/// One closed-form step: `q_n(a | b) -> q_{n-a1}(a2.. | b1', b1'', b2..)`.
/// Requires `a1 < b1` with sides already in that order.
pub fn reduce_step_closed(q: &SeaweedC) -> Result<ReductionStep> {
    let (a1, b1) = heads(q)?;
    if a1 == b1 {
        return Err(Error::ClosedFormPrecondition {
            a1,
            b1,
            hint: "use SPLIT-EQUAL",
        });
    }
    if a1 > b1 {
        return Err(Error::ClosedFormPrecondition {
            a1,
            b1,
            hint: "exchange sides first",
        });
    }
    let p = closed_form_witness(a1, b1);
    let b1_first = (p + 1) * b1 - (p + 2) * a1;
    let b1_second = (p + 1) * a1 - p * b1;
    let bottom = q.bottom().tail().with_prefix(&[b1_first, b1_second]);
    let after = next(q, q.rank() - a1, q.top().tail(), bottom);
    Ok(ReductionStep {
        rule: Rule::ClosedForm { p },
        before: q.clone(),
        swapped: false,
        after,
        index_delta: 0,
    })
}

/// Removal of central circles: when both sides are deficient, the
/// `n - max(Σa, Σb)` innermost central arcs above and below pair into circles.
/// Returns `(0, q)` when either side is full.
pub fn strip_central_circles(q: &SeaweedC) -> (usize, SeaweedC) {
    let (sa, sb, n) = (q.top().total(), q.bottom().total(), q.rank());
    if sa < n && sb < n {
        let inner_rank = sa.max(sb);
        let inner = next(q, inner_rank, q.top().clone(), q.bottom().clone());
        (n - inner_rank, inner)
    } else {
        (0, q.clone())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReductionOptions {
    /// Use closed-form steps instead of the two-case rule when `a1 ≠ b1`.
    pub closed_form: bool,
    /// Remove central circles whenever both sides are deficient.
    pub strip_central: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionChain {
    pub steps: Vec<ReductionStep>,
    /// Parabolic end point (one side empty).
    pub terminal: SeaweedC,
    pub terminal_index: usize,
    pub total_index: usize,
}

fn parabolic_index(q: &SeaweedC) -> usize {
    let side = if q.top().is_empty() { q.bottom() } else { q.top() };
    parabolic_index_c(q.rank(), side).expect("validated seaweed")
}

fn metric(q: &SeaweedC) -> (usize, usize, usize) {
    (
        q.rank(),
        q.top().total() + q.bottom().total(),
        q.top().len() + q.bottom().len(),
    )
}

/// Two-case chain down to a parabolic.
pub fn reduction_chain(q: &SeaweedC) -> ReductionChain {
    reduction_chain_with(q, ReductionOptions::default())
}

pub fn reduction_chain_with(q: &SeaweedC, options: ReductionOptions) -> ReductionChain {
    let mut steps = Vec::new();
    let mut current = q.clone();
    while !current.is_parabolic() {
        if options.strip_central {
            let (count, inner) = strip_central_circles(&current);
            if count > 0 {
                steps.push(ReductionStep {
                    rule: Rule::StripCentral,
                    before: current,
                    swapped: false,
                    after: inner.clone(),
                    index_delta: count,
                });
                current = inner;
                continue;
            }
        }
        let step = if options.closed_form {
            let (norm, swapped) = normalize(&current);
            let (a1, b1) = heads(&norm).expect("non-parabolic");
            if a1 == b1 {
                reduce_step(&current)
            } else {
                reduce_step_closed(&norm).map(|mut step| {
                    step.before = current.clone();
                    step.swapped = swapped;
                    step
                })
            }
        } else {
            reduce_step(&current)
        }
        .expect("both sides non-empty");
        debug_assert!(metric(&step.after) < metric(&step.before));
        current = step.after.clone();
        steps.push(step);
    }
    let terminal_index = parabolic_index(&current);
    let total_index = steps.iter().map(|s| s.index_delta).sum::<usize>() + terminal_index;
    ReductionChain {
        steps,
        terminal: current,
        terminal_index,
        total_index,
    }
}
