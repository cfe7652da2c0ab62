//! Audit of the eight-case contradiction for large primes.
//!
//! Each case fixes `k`, a range of `M`, which coprime-run bound applies to
//! each `R_t`, and which pairs `(t, ℓ)` are merged through the pair bound.
//! For every integer `M` in range the audit composes
//!
//! ```text
//! M + Σ_{i=2}^k φ(i)(i-1) + Σ_groups max(A, B) + Σ_{other t} bound(R_t)
//! ```
//!
//! where, for a group `(t, ℓ_1, …)`, `A` is the branch `R_t = ∅` (sum of the
//! coprime-run bounds of the `ℓ`s) and `B` adds the bound of `R_t` to the pair
//! bounds of the `ℓ`s. The total must stay strictly below `p`. Each case's
//! closed-form final line (`printed`) is evaluated as written too, so a slip
//! in its arithmetic shows up as a disagreement between the two.

use rayon::prelude::*;
use serde::Serialize;

use super::bounds::{
    coprime_bound_rhs, coprime_bound_window, gap_parts_total, length_bound_window, pair_bound_rhs,
    pair_bound_window, ratio_str, BoundEvaluation, Relation,
};
use super::Q;
use crate::error::{Error, Result};
use crate::zn::is_prime;

/// Lower limit on `p` assumed by the case analysis.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Threshold {
    /// `p > 24318`
    #[default]
    Primary,
    /// `p > 24138`
    Alternate,
}

impl Threshold {
    pub fn value(self) -> u64 {
        match self {
            Threshold::Primary => 24318,
            Threshold::Alternate => 24138,
        }
    }
}

/// `(t, u, w)` for a coprime-run bound.
type Coprime = (u32, u32, i64);

/// `(t, ℓs, u)` for a group merged through the pair bound.
type Group = (u32, &'static [u32], i64);

struct CaseSpec {
    case: u8,
    k: u32,
    /// `M ≥ (p + lo.0) / lo.1`
    lo: (i64, i64),
    /// `M ≤ (p + hi.0) / hi.1`
    hi: (i64, i64),
    coprime: &'static [Coprime],
    groups: &'static [Group],
    printed: fn(Q, Q) -> Q,
}

fn int(n: i64) -> Q {
    Q::from_integer(n)
}

const CASES: [CaseSpec; 8] = [
    CaseSpec {
        case: 1,
        k: 2,
        lo: (-2, 3),
        hi: (-3, 2),
        coprime: &[(2, 0, 6)],
        groups: &[],
        printed: |p, m| m + int(1) + p - int(2) * m + int(8),
    },
    CaseSpec {
        case: 2,
        k: 3,
        lo: (3, 4),
        hi: (-4, 3),
        coprime: &[(2, 1, 6), (3, 1, 6)],
        groups: &[],
        printed: |p, m| {
            m + int(5) + (p - int(2) * m + int(28)) / int(3) + (p - int(3) * m + int(20)) / int(2)
        },
    },
    CaseSpec {
        case: 3,
        k: 4,
        lo: (-2, 5),
        hi: (1, 4),
        coprime: &[(2, 1, 6), (3, 1, 6), (4, 1, 6)],
        groups: &[],
        printed: |p, m| {
            m + int(11)
                + (p - int(2) * m + int(28)) / int(3)
                + (p - int(3) * m + int(20)) / int(2)
                + (p - int(4) * m + int(36)) / int(3)
        },
    },
    CaseSpec {
        case: 4,
        k: 5,
        lo: (-1, 6),
        hi: (-3, 5),
        coprime: &[(2, 1, 6), (3, 1, 6), (4, 1, 6), (5, 1, 6)],
        groups: &[(2, &[3], 12)],
        printed: |p, m| {
            m + int(27)
                + (int(5) * p - int(11) * m + int(167)) / int(12)
                + (p - int(4) * m + int(36)) / int(3)
                + (p - int(5) * m + int(24)) / int(2)
        },
    },
    CaseSpec {
        case: 5,
        k: 6,
        lo: (-5, 7),
        hi: (-5, 6),
        coprime: &[(2, 2, 0), (3, 2, 0), (4, 1, 6), (5, 1, 6), (6, 1, 6)],
        groups: &[],
        printed: |p, m| {
            m + int(37)
                + (p + int(18)) / int(5)
                + (p - m + int(20)) / int(4)
                + (p - int(4) * m + int(36)) / int(3)
                + (p - int(5) * m + int(24)) / int(2)
                + (p - int(6) * m + int(80)) / int(5)
        },
    },
    CaseSpec {
        case: 6,
        k: 7,
        lo: (-2, 8),
        hi: (-3, 7),
        coprime: &[
            (2, 2, 0),
            (3, 2, 0),
            (4, 1, 6),
            (5, 1, 6),
            (6, 1, 6),
            (7, 1, 6),
        ],
        groups: &[(2, &[5], 10)],
        printed: |p, m| {
            m + int(73)
                + (int(3) * p - int(5) * m + int(117)) / int(10)
                + (p - m + int(20)) / int(4)
                + (p - int(4) * m + int(36)) / int(3)
                + (p - int(6) * m + int(80)) / int(5)
                + (p - int(7) * m + int(28)) / int(2)
        },
    },
    CaseSpec {
        case: 7,
        k: 8,
        lo: (-2, 9),
        hi: (-3, 8),
        coprime: &[
            (2, 2, 0),
            (3, 2, 0),
            (4, 2, 0),
            (5, 2, 0),
            (6, 1, 6),
            (7, 1, 6),
            (8, 1, 6),
        ],
        groups: &[(2, &[5, 7], 20), (4, &[6], 10)],
        printed: |p, m| {
            m + int(111)
                + (int(5) * p - int(29) * m + int(128)) / int(6)
                + (int(3) * p - int(10) * m + int(167)) / int(10)
                + (p - m + int(20)) / int(4)
                + (p - int(8) * m + int(52)) / int(3)
        },
    },
    CaseSpec {
        case: 8,
        k: 9,
        lo: (-2, 10),
        hi: (-4, 9),
        coprime: &[
            (2, 2, 0),
            (3, 2, 0),
            (4, 2, 0),
            (5, 2, 0),
            (6, 1, 6),
            (7, 1, 6),
            (8, 1, 6),
            (9, 1, 6),
        ],
        groups: &[(2, &[5, 7], 10), (3, &[8], 8)],
        printed: |p, m| {
            m + int(159)
                + (int(5) * p - int(29) * m + int(128)) / int(6)
                + ((int(3) * p - int(10) * m) / int(8) + int(20))
                + (p - int(2) * m + int(34)) / int(5)
                + (p - int(6) * m + int(80)) / int(5)
                + (p - int(9) * m + int(32)) / int(2)
        },
    },
];

impl CaseSpec {
    fn m_range(&self, p: i64) -> (i64, i64) {
        let lo = (p + self.lo.0).div_euclid(self.lo.1)
            + ((p + self.lo.0).rem_euclid(self.lo.1) != 0) as i64;
        let hi = (p + self.hi.0).div_euclid(self.hi.1);
        (lo, hi)
    }

    fn coprime_of(&self, t: u32) -> Coprime {
        *self
            .coprime
            .iter()
            .find(|c| c.0 == t)
            .expect("every t in [2, k] has a coprime-run bound")
    }

    fn bound(&self, p: i64, m: i64, t: u32) -> Q {
        let (t, u, w) = self.coprime_of(t);
        coprime_bound_rhs(p, m, t, u, w)
    }

    /// Composed total and every failed hypothesis at this `M`.
    fn compose(&self, p: i64, m: i64) -> (Q, Vec<String>) {
        let k = self.k as i64;
        let mut failed = length_bound_window(p, m, k);
        for &(t, u, w) in self.coprime {
            failed.extend(coprime_bound_window(p, m, k, t, u, w));
        }
        let mut total = int(m + gap_parts_total(self.k));
        let mut grouped = Vec::new();
        for &(t, ls, u) in self.groups {
            grouped.push(t);
            let empty_t: Q = ls.iter().map(|&l| self.bound(p, m, l)).sum();
            let mut with_t = self.bound(p, m, t);
            for &l in ls {
                grouped.push(l);
                failed.extend(pair_bound_window(p, m, k, t as i64, l as i64, u));
                with_t += pair_bound_rhs(p, m, l as i64, u);
            }
            total += empty_t.max(with_t);
        }
        for t in 2..=self.k {
            if !grouped.contains(&t) {
                total += self.bound(p, m, t);
            }
        }
        (total, failed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseAudit {
    pub case: u8,
    pub k: u32,
    pub m_min: i64,
    pub m_max: i64,
    pub values_checked: usize,
    /// `M` values where the composed total reaches `p`.
    pub violations: Vec<i64>,
    /// `M` values where the printed final line reaches `p`.
    pub printed_violations: Vec<i64>,
    /// `M` values where the printed final line is below the composed total.
    pub printed_below_composed: Vec<i64>,
    /// `M` values where `⌊p/M⌋` differs from the case's `k`.
    pub floor_k_mismatches: Vec<i64>,
    pub hypothesis_failures: usize,
    pub first_hypothesis_failure: Option<String>,
    #[serde(serialize_with = "opt_ratio")]
    pub min_slack: Option<Q>,
    pub min_slack_at: Option<i64>,
    #[serde(serialize_with = "opt_ratio")]
    pub printed_min_slack: Option<Q>,
    pub holds: bool,
}

fn opt_ratio<S: serde::Serializer>(
    q: &Option<Q>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => ratio_str(q, serializer),
        None => serializer.serialize_none(),
    }
}

impl CaseAudit {
    /// The worst `M` as a strict inequality `total < p`.
    pub fn evaluation(&self, p: u64) -> BoundEvaluation {
        let p = int(p as i64);
        let lhs = self.min_slack.map_or(Q::from_integer(0), |s| p - s);
        let mut e = BoundEvaluation::new(format!("case {}", self.case), lhs, p, Relation::Lt)
            .with("k", self.k)
            .with("M_range", format!("[{}, {}]", self.m_min, self.m_max))
            .with("values_checked", self.values_checked)
            .with("violations", self.violations.len())
            .with("printed_violations", self.printed_violations.len());
        if let Some(m) = self.min_slack_at {
            e = e.with("worst_M", m);
        }
        e.holds = self.holds;
        e
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeCaseAudit {
    pub p: u64,
    pub threshold: u64,
    pub below_threshold: bool,
    pub cases: Vec<CaseAudit>,
    pub holds: bool,
}

impl PrimeCaseAudit {
    pub fn evaluations(&self) -> Vec<BoundEvaluation> {
        self.cases.iter().map(|c| c.evaluation(self.p)).collect()
    }
}

fn audit_case(spec: &CaseSpec, p: i64) -> CaseAudit {
    let (m_min, m_max) = spec.m_range(p);
    let pq = int(p);
    let mut audit = CaseAudit {
        case: spec.case,
        k: spec.k,
        m_min,
        m_max,
        values_checked: 0,
        violations: Vec::new(),
        printed_violations: Vec::new(),
        printed_below_composed: Vec::new(),
        floor_k_mismatches: Vec::new(),
        hypothesis_failures: 0,
        first_hypothesis_failure: None,
        min_slack: None,
        min_slack_at: None,
        printed_min_slack: None,
        holds: true,
    };
    for m in m_min.max(1)..=m_max {
        audit.values_checked += 1;
        let (total, failed) = spec.compose(p, m);
        let printed = (spec.printed)(pq, int(m));
        if p / m != spec.k as i64 {
            audit.floor_k_mismatches.push(m);
        }
        if !failed.is_empty() {
            audit.hypothesis_failures += 1;
            audit
                .first_hypothesis_failure
                .get_or_insert_with(|| format!("M={m}: {}", failed.join("; ")));
        }
        if total >= pq {
            audit.violations.push(m);
        }
        if printed >= pq {
            audit.printed_violations.push(m);
        }
        if printed < total {
            audit.printed_below_composed.push(m);
        }
        let slack = pq - total;
        if audit.min_slack.is_none_or(|s| slack < s) {
            audit.min_slack = Some(slack);
            audit.min_slack_at = Some(m);
        }
        let printed_slack = pq - printed;
        if audit.printed_min_slack.is_none_or(|s| printed_slack < s) {
            audit.printed_min_slack = Some(printed_slack);
        }
    }
    audit.holds = audit.violations.is_empty() && audit.printed_violations.is_empty();
    audit
}

/// Runs all eight cases at the prime `p`. Primes at or below the threshold
/// are still audited and flagged.
pub fn audit_prime_case_analysis(p: u64, threshold: Threshold) -> Result<PrimeCaseAudit> {
    if !is_prime(p) {
        return Err(Error::CompositeModulus);
    }
    if p > i32::MAX as u64 {
        return Err(Error::invalid(format!("p={p} is too large to audit")));
    }
    let cases: Vec<CaseAudit> = CASES
        .par_iter()
        .map(|spec| audit_case(spec, p as i64))
        .collect();
    let holds = cases.iter().all(|c| c.holds);
    Ok(PrimeCaseAudit {
        p,
        threshold: threshold.value(),
        below_threshold: p <= threshold.value(),
        cases,
        holds,
    })
}
