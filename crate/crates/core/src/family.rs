//! The `n = 4k + 2` family without an index-n subsequence.
//!
//! For `k ≥ 5` the sequence
//! `1^(n/2-3) · (n/2) · (n/2+1)^(n/2-1) · (n/2+2)^(⌊n/4⌋-2)` has length
//! `n + ⌊n/4⌋ - 5`, repetition `n/2 - 1`, and no `(m, T)` with
//! `σ(|mT|_n) = n`. Membership is checked by the exhaustive DP of
//! [`crate::index`], one unit at a time.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::index::{conjecture_lk_check, find_index_n_subsequence};
use crate::zn::{Modulus, ZnSequence};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleSpec {
    pub k: u32,
    pub n: u32,
    pub sequence: ZnSequence,
    pub expected_length: usize,
    pub expected_repetition: u32,
}

fn family_k(n: u32, min_k: u32) -> Result<u32> {
    if n % 4 != 2 || (n - 2) / 4 < min_k {
        return Err(Error::NotInFamily);
    }
    Ok((n - 2) / 4)
}

fn build(n: u32, k: u32) -> Result<CounterexampleSpec> {
    let half = n / 2;
    let modulus = Modulus::new(n as u64)?;
    let sequence = ZnSequence::from_counts(
        modulus,
        [
            (1, half - 3),
            (half as i64, 1),
            (half as i64 + 1, half - 1),
            (half as i64 + 2, n / 4 - 2),
        ],
    );
    let spec = CounterexampleSpec {
        k,
        n,
        expected_length: (n + n / 4 - 5) as usize,
        expected_repetition: half - 1,
        sequence,
    };
    if spec.sequence.len() != spec.expected_length
        || spec.sequence.repetition() != spec.expected_repetition
    {
        return Err(Error::Invariant(format!(
            "family member for n={n} has length {} and repetition {}",
            spec.sequence.len(),
            spec.sequence.repetition()
        )));
    }
    Ok(spec)
}

pub fn build_counterexample(n: u32) -> Result<CounterexampleSpec> {
    build(n, family_k(n, 5)?)
}

/// Same construction for `k ∈ [2, 4]` too (n = 10, 14, 18). The members
/// outside `k ≥ 5` carry no guarantee.
pub fn build_counterexample_forced(n: u32) -> Result<CounterexampleSpec> {
    build(n, family_k(n, 2)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyVerification {
    pub n: u32,
    pub k: u32,
    pub forced: bool,
    pub sequence: ZnSequence,
    pub length: usize,
    pub repetition: u32,
    pub no_index_subseq: bool,
    pub multipliers_checked: usize,
    /// No `(m, T)` with `n | σ(|mT|_n) | n`, i.e. the divisor form at `d = n`.
    pub lk_refuted_at_d_eq_n: bool,
    /// A subsequence found in a forced run (only possible outside `k ≥ 5`).
    pub witness: Option<crate::index::SubseqWitness>,
}

fn verify(spec: CounterexampleSpec, forced: bool) -> Result<FamilyVerification> {
    let search = find_index_n_subsequence(&spec.sequence, None);
    let lk = conjecture_lk_check(&spec.sequence, spec.n)?;
    if !search.verify(&spec.sequence) || !lk.verify(&spec.sequence) {
        return Err(Error::Invariant(
            "family witness failed to re-verify".into(),
        ));
    }
    Ok(FamilyVerification {
        n: spec.n,
        k: spec.k,
        forced,
        length: spec.sequence.len(),
        repetition: spec.sequence.repetition(),
        no_index_subseq: !search.found,
        multipliers_checked: search.multipliers_checked,
        lk_refuted_at_d_eq_n: !lk.found,
        witness: search.found.then_some(search),
        sequence: spec.sequence,
    })
}

pub fn verify_family(n: u32) -> Result<FamilyVerification> {
    verify(build_counterexample(n)?, false)
}

pub fn verify_family_forced(n: u32) -> Result<FamilyVerification> {
    let spec = build_counterexample_forced(n)?;
    let forced = spec.k < 5;
    verify(spec, forced)
}

/// `t(n) ≥ n + ⌊n/4⌋ - 4` for family members.
pub fn t_lower_bound(n: u32) -> Result<u32> {
    family_k(n, 5)?;
    Ok(n + n / 4 - 4)
}
