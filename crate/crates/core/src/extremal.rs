//! Exhaustive search for `t(n)` and `T(n)`.
//!
//! `t(n)` is the least `L` such that every length-`L` sequence over Z_n has
//! a subsequence of index `n`; `T(n)` is the same over sets of distinct
//! elements. Both verdicts are monotone in `L`, so the search walks
//! `L = 1, 2, …` and stops at the first length without a counterexample.
//!
//! Candidates are sorted tuples visited in lexicographic order, in chunks.
//! Each chunk is tested in parallel and the first counterexample by
//! position wins, so the witness does not depend on scheduling.
//! How candidates are generated is up to a [`SearchStrategy`], looked up by
//! name in [`strategies`].

use std::collections::BTreeMap;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{build_counterexample, t_lower_bound};
use crate::index::has_index_n_subsequence;
use crate::zn::{coprime_multipliers, Modulus, ZnSequence};

pub(crate) const CHUNK: usize = 4096;

pub const DEFAULT_BUDGET: u64 = 2_000_000;

/// Candidate generation for the extremal searches.
pub trait SearchStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn about(&self) -> &'static str;
    /// Values allowed as the first (smallest) entry of a candidate, ascending.
    fn first_values(&self, n: u32) -> Vec<u32>;
    /// Whether a sorted candidate needs testing at all.
    fn admits(&self, n: u32, units: &[u32], tuple: &[u32]) -> bool;
}

/// Every sorted tuple over `[0, n)`.
pub struct Exhaustive;

impl SearchStrategy for Exhaustive {
    fn name(&self) -> &'static str {
        "exhaustive"
    }

    fn about(&self) -> &'static str {
        "every sorted tuple over [0, n)"
    }

    fn first_values(&self, n: u32) -> Vec<u32> {
        (0..n).collect()
    }

    fn admits(&self, _n: u32, _units: &[u32], _tuple: &[u32]) -> bool {
        true
    }
}

/// Zero-free tuples that are least in their orbit under unit scaling.
///
/// A zero term is itself an index-n subsequence, and the verdict is
/// unchanged by scaling with a unit. The least member of an orbit has a
/// first entry dividing `n`, since a unit maps `x` to `gcd(x, n)`.
pub struct UnitReduced;

impl SearchStrategy for UnitReduced {
    fn name(&self) -> &'static str {
        "unit-reduced"
    }

    fn about(&self) -> &'static str {
        "zero-free tuples, one per orbit under unit scaling"
    }

    fn first_values(&self, n: u32) -> Vec<u32> {
        (1..n).filter(|d| n.is_multiple_of(*d)).collect()
    }

    fn admits(&self, n: u32, units: &[u32], tuple: &[u32]) -> bool {
        let first = tuple[0];
        if tuple.iter().any(|&x| x.gcd(&n) < first) {
            return false;
        }
        let mut scaled = Vec::with_capacity(tuple.len());
        units.iter().skip(1).all(|&m| {
            scaled.clear();
            scaled.extend(
                tuple
                    .iter()
                    .map(|&x| ((x as u64 * m as u64) % n as u64) as u32),
            );
            scaled.sort_unstable();
            scaled.as_slice() >= tuple
        })
    }
}

pub fn strategies() -> BTreeMap<&'static str, Box<dyn SearchStrategy>> {
    let all: [Box<dyn SearchStrategy>; 2] = [Box::new(Exhaustive), Box::new(UnitReduced)];
    all.into_iter().map(|s| (s.name(), s)).collect()
}

pub fn strategy(name: &str) -> Result<Box<dyn SearchStrategy>> {
    strategies().remove(name).ok_or_else(|| {
        let known: Vec<&str> = strategies().keys().copied().collect();
        Error::invalid(format!(
            "unknown strategy {name:?}; known: {}",
            known.join(", ")
        ))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExtremalKind {
    /// sequences (repetition allowed)
    #[serde(rename = "t")]
    Sequences,
    /// sets of distinct elements
    #[serde(rename = "T")]
    DistinctSets,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StopReason {
    Cap,
    Budget,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthScan {
    pub length: usize,
    pub candidates: u64,
    pub counterexample: Option<ZnSequence>,
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub n: u32,
    pub kind: ExtremalKind,
    pub strategy: String,
    /// `Some` when the search settled the value.
    pub value: Option<u32>,
    pub lower_bound: u32,
    pub lower_bound_source: &'static str,
    /// A longest known sequence without an index-n subsequence.
    pub witness: Option<ZnSequence>,
    pub stopped: Option<StopReason>,
    pub search_space_size: u64,
    pub lengths: Vec<LengthScan>,
}

/// Sorted tuples of a fixed length in lexicographic order, first entries
/// restricted to `firsts`.
pub(crate) struct TupleWalk {
    n: u32,
    distinct: bool,
    firsts: Vec<u32>,
    first_pos: usize,
    cur: Vec<u32>,
    done: bool,
}

impl TupleWalk {
    pub(crate) fn new(n: u32, len: usize, distinct: bool, firsts: Vec<u32>) -> Self {
        let mut walk = TupleWalk {
            n,
            distinct,
            firsts,
            first_pos: 0,
            cur: vec![0; len],
            done: len == 0 || (distinct && len > n as usize),
        };
        if !walk.done {
            walk.seat_first();
        }
        walk
    }

    /// Largest value allowed at position `i`.
    fn ceiling(&self, i: usize) -> u32 {
        if self.distinct {
            self.n - (self.cur.len() - i) as u32
        } else {
            self.n - 1
        }
    }

    fn fill_from(&mut self, i: usize) {
        for j in i..self.cur.len() {
            self.cur[j] = self.cur[j - 1] + self.distinct as u32;
        }
    }

    fn seat_first(&mut self) {
        while let Some(&f) = self.firsts.get(self.first_pos) {
            self.cur[0] = f;
            if f <= self.ceiling(0) {
                self.fill_from(1);
                return;
            }
            self.first_pos += 1;
        }
        self.done = true;
    }

    fn advance(&mut self) {
        for i in (1..self.cur.len()).rev() {
            if self.cur[i] < self.ceiling(i) {
                self.cur[i] += 1;
                self.fill_from(i + 1);
                return;
            }
        }
        self.first_pos += 1;
        self.seat_first();
    }

    pub(crate) fn chunk(&mut self, size: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::with_capacity(size.min(CHUNK));
        while !self.done && out.len() < size {
            out.push(self.cur.clone());
            self.advance();
        }
        out
    }
}

struct Search<'a> {
    modulus: Modulus,
    units: Vec<u32>,
    strategy: &'a dyn SearchStrategy,
    distinct: bool,
    budget: u64,
}

enum Scan {
    Counterexample(ZnSequence, u64),
    None(u64),
    OutOfBudget(u64),
}

impl Search<'_> {
    fn scan(&self, len: usize) -> Scan {
        let n = self.modulus.get();
        let mut walk = TupleWalk::new(n, len, self.distinct, self.strategy.first_values(n));
        let (mut visited, mut checked) = (0u64, 0u64);
        loop {
            let chunk = walk.chunk(CHUNK);
            if chunk.is_empty() {
                return Scan::None(checked);
            }
            visited += chunk.len() as u64;
            if visited > self.budget {
                return Scan::OutOfBudget(checked);
            }
            let verdicts: Vec<Option<bool>> = chunk
                .par_iter()
                .map(|t| {
                    self.strategy.admits(n, &self.units, t).then(|| {
                        let s = ZnSequence::from_sorted_residues(self.modulus, t);
                        !has_index_n_subsequence(&s, None)
                    })
                })
                .collect();
            if let Some(pos) = verdicts.iter().position(|v| *v == Some(true)) {
                checked += verdicts[..=pos].iter().filter(|v| v.is_some()).count() as u64;
                let s = ZnSequence::from_sorted_residues(self.modulus, &chunk[pos]);
                return Scan::Counterexample(s, checked);
            }
            checked += verdicts.iter().filter(|v| v.is_some()).count() as u64;
        }
    }
}

fn run(
    n: u32,
    kind: ExtremalKind,
    cap: Option<usize>,
    strategy_name: &str,
    budget: Option<u64>,
) -> Result<ExtremalReport> {
    let modulus = Modulus::new(n as u64)?;
    let strategy = strategy(strategy_name)?;
    let distinct = kind == ExtremalKind::DistinctSets;
    let max_len = if distinct { n as usize } else { usize::MAX };
    let cap = cap.unwrap_or(if distinct { n as usize } else { 2 * n as usize });
    if cap == 0 {
        return Err(Error::invalid("cap must be positive"));
    }
    let search = Search {
        modulus,
        units: coprime_multipliers(modulus),
        strategy: strategy.as_ref(),
        distinct,
        budget: budget.unwrap_or(DEFAULT_BUDGET),
    };
    let mut report = ExtremalReport {
        n,
        kind,
        strategy: strategy.name().to_string(),
        value: None,
        lower_bound: 1,
        lower_bound_source: "search",
        witness: None,
        stopped: None,
        search_space_size: 0,
        lengths: Vec::new(),
    };
    for len in 1..=cap.min(max_len) {
        let scan = search.scan(len);
        let (candidates, counterexample, complete) = match scan {
            Scan::Counterexample(s, c) => (c, Some(s), true),
            Scan::None(c) => (c, None, true),
            Scan::OutOfBudget(c) => (c, None, false),
        };
        report.search_space_size += candidates;
        report.lengths.push(LengthScan {
            length: len,
            candidates,
            counterexample: counterexample.clone(),
            complete,
        });
        match (counterexample, complete) {
            (Some(s), _) => {
                report.lower_bound = len as u32 + 1;
                report.witness = Some(s);
            }
            (None, true) => {
                report.value = Some(len as u32);
                report.lower_bound = len as u32;
                return Ok(report);
            }
            (None, false) => {
                report.stopped = Some(StopReason::Budget);
                break;
            }
        }
    }
    if report.stopped.is_none() {
        report.stopped = Some(StopReason::Cap);
    }
    if kind == ExtremalKind::Sequences {
        if let Ok(bound) = t_lower_bound(n) {
            if bound > report.lower_bound {
                report.lower_bound = bound;
                report.lower_bound_source = "family";
                report.witness = Some(build_counterexample(n)?.sequence);
            }
        }
    }
    Ok(report)
}

/// `t(n)` by search up to length `cap` (default `2n`).
pub fn compute_t(
    n: u32,
    cap: Option<usize>,
    strategy: &str,
    budget: Option<u64>,
) -> Result<ExtremalReport> {
    run(n, ExtremalKind::Sequences, cap, strategy, budget)
}

/// `T(n)` by search over sets of distinct elements up to size `cap`
/// (default `n`).
pub fn compute_t_distinct(
    n: u32,
    cap: Option<usize>,
    strategy: &str,
    budget: Option<u64>,
) -> Result<ExtremalReport> {
    run(n, ExtremalKind::DistinctSets, cap, strategy, budget)
}
