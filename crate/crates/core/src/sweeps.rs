//! Bounded exhaustive and sampled sweeps over small moduli.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremal::{TupleWalk, CHUNK};
use crate::farey::{check_adjacency, farey_set, residue_subset_hit, FareyFraction};
use crate::index::{has_index_n_subsequence, index_of};
use crate::zn::{coprime_multipliers, Modulus, ZnSequence};

pub const DEFAULT_SEED: u64 = 0x5eed;

fn check_range(name: &str, lo: u32, hi: u32, limit: u32) -> Result<()> {
    if hi < lo || hi > limit {
        return Err(Error::invalid(format!(
            "{name} must lie in [{lo}, {limit}], got {hi}"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmallZeroSumSweep {
    pub n_max: u32,
    pub sequences_checked: usize,
    /// Minimal zero-sum sequences whose index is not `n`.
    pub failures: Vec<ZnSequence>,
    pub holds: bool,
}

/// Every minimal zero-sum sequence of length at most 3 over Z_n,
/// `2 ≤ n ≤ n_max`, has index `n`.
pub fn sweep_small_zero_sums(n_max: u32) -> Result<SmallZeroSumSweep> {
    check_range("n_max", 2, n_max, 200)?;
    let per_n: Vec<(usize, Vec<ZnSequence>)> = (2..=n_max)
        .into_par_iter()
        .map(|n| {
            let modulus = Modulus::new(n as u64).expect("n ≥ 2");
            let mut candidates = vec![vec![0]];
            for a in 1..n {
                if 2 * a <= n && a < n - a {
                    candidates.push(vec![a, n - a]);
                } else if 2 * a == n {
                    candidates.push(vec![a, a]);
                }
                for b in a..n {
                    let c = (2 * n - a - b) % n;
                    if c >= b {
                        candidates.push(vec![a, b, c]);
                    }
                }
            }
            let mut checked = 0;
            let mut failures = Vec::new();
            for t in candidates {
                let s = ZnSequence::from_sorted_residues(modulus, &t);
                if !s.is_minimal_zero_sum().unwrap_or(false) {
                    continue;
                }
                checked += 1;
                if index_of(&s).map(|r| r.value) != Ok(n as u64) {
                    failures.push(s);
                }
            }
            (checked, failures)
        })
        .collect();
    let sequences_checked = per_n.iter().map(|x| x.0).sum();
    let failures: Vec<ZnSequence> = per_n.into_iter().flat_map(|x| x.1).collect();
    Ok(SmallZeroSumSweep {
        n_max,
        sequences_checked,
        holds: failures.is_empty(),
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepetitionLayer {
    pub n: u32,
    pub multisets: u64,
    /// Multisets with `h < 4` or `2h ≥ n`.
    pub eligible: u64,
    /// Eligible multisets with no index-n subsequence of length at most `h`.
    pub failures: Vec<ZnSequence>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepetitionSweep {
    pub n_max: u32,
    pub layers: Vec<RepetitionLayer>,
    pub holds: bool,
}

/// Every length-`n` sequence over Z_n with `h(S) < 4` or `h(S) ≥ n/2` has
/// an index-n subsequence of at most `h(S)` terms, for `2 ≤ n ≤ n_max`.
pub fn sweep_high_repetition(n_max: u32) -> Result<RepetitionSweep> {
    check_range("n_max", 2, n_max, 14)?;
    let layers: Vec<RepetitionLayer> = (2..=n_max).map(repetition_layer).collect();
    Ok(RepetitionSweep {
        n_max,
        holds: layers.iter().all(|l| l.failures.is_empty()),
        layers,
    })
}

fn repetition_layer(n: u32) -> RepetitionLayer {
    let modulus = Modulus::new(n as u64).expect("n ≥ 2");
    let mut walk = TupleWalk::new(n, n as usize, false, (0..n).collect());
    let mut layer = RepetitionLayer {
        n,
        multisets: 0,
        eligible: 0,
        failures: Vec::new(),
    };
    loop {
        let chunk = walk.chunk(CHUNK * 16);
        if chunk.is_empty() {
            return layer;
        }
        layer.multisets += chunk.len() as u64;
        let verdicts: Vec<Option<bool>> = chunk
            .par_iter()
            .map(|t| {
                let s = ZnSequence::from_sorted_residues(modulus, t);
                let h = s.repetition();
                (h < 4 || 2 * h >= n).then(|| has_index_n_subsequence(&s, Some(h as usize)))
            })
            .collect();
        for (t, v) in chunk.iter().zip(&verdicts) {
            match v {
                Some(true) => layer.eligible += 1,
                Some(false) => {
                    layer.eligible += 1;
                    layer
                        .failures
                        .push(ZnSequence::from_sorted_residues(modulus, t));
                }
                None => {}
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FareySweep {
    pub k_max: u32,
    /// `k` where the recurrence disagrees with direct enumeration.
    pub enumeration_mismatches: Vec<u32>,
    /// `(k, "a/b < c/d")` where an adjacency fact fails.
    pub adjacency_failures: Vec<(u32, String)>,
    pub pairs_checked: usize,
    pub holds: bool,
}

fn enumerate_farey(k: u32) -> Vec<FareyFraction> {
    let mut out: Vec<FareyFraction> = (2..=k)
        .flat_map(|b| (1..b).map(move |a| FareyFraction { a, b }))
        .filter(|f| f.a.gcd(&f.b) == 1 && k * f.a >= f.b && k * f.a <= (k - 1) * f.b)
        .collect();
    out.sort();
    out
}

/// Recurrence against direct enumeration, and both adjacency facts, for
/// `2 ≤ k ≤ k_max`.
pub fn sweep_farey(k_max: u32) -> Result<FareySweep> {
    check_range("k_max", 2, k_max, 1000)?;
    let mut report = FareySweep {
        k_max,
        enumeration_mismatches: Vec::new(),
        adjacency_failures: Vec::new(),
        pairs_checked: 0,
        holds: true,
    };
    for k in 2..=k_max {
        let set = farey_set(k)?;
        if set.fractions != enumerate_farey(k) {
            report.enumeration_mismatches.push(k);
        }
        let evals = check_adjacency(&set);
        report.pairs_checked += evals.len() / 2;
        for e in evals.into_iter().filter(|e| !e.holds) {
            report
                .adjacency_failures
                .push((k, e.parameters["pair"].clone()));
        }
    }
    report.holds = report.enumeration_mismatches.is_empty() && report.adjacency_failures.is_empty();
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetHitCase {
    pub n: u32,
    pub values: Vec<i64>,
    pub m: i64,
    pub found: Option<Vec<usize>>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetHitSweep {
    pub n_max: u32,
    pub samples_per_n: usize,
    pub seed: u64,
    pub cases_checked: usize,
    pub failures: Vec<SubsetHitCase>,
    pub holds: bool,
}

/// Least index set by enumerating every subset of the allowed range.
fn enumerate_hit(a: &[i64], n: u32, m: i64) -> Option<Vec<usize>> {
    let target = m.rem_euclid(n as i64);
    let width = if target == 0 { a.len() } else { a.len() - 1 };
    let mut best: Option<Vec<usize>> = None;
    for mask in 1u32..1 << width {
        let idx: Vec<usize> = (0..width)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| i + 1)
            .collect();
        let sum: i64 = idx.iter().map(|&i| a[i - 1]).sum();
        if sum.rem_euclid(n as i64) == target && best.as_ref().is_none_or(|b| idx < *b) {
            best = Some(idx);
        }
    }
    best
}

/// Random coprime tuples of length `n` for `2 ≤ n ≤ n_max`: the hitting
/// subset exists, verifies, and equals the least one found by enumeration.
pub fn sweep_subset_hit(n_max: u32, samples_per_n: usize, seed: u64) -> Result<SubsetHitSweep> {
    check_range("n_max", 2, n_max, 16)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::new();
    for n in 2..=n_max {
        let units = coprime_multipliers(Modulus::new(n as u64)?);
        for _ in 0..samples_per_n {
            let values: Vec<i64> = (0..n)
                .map(|_| units[rng.gen_range(0..units.len())] as i64)
                .collect();
            let m = rng.gen_range(0..n as i64);
            cases.push((n, values, m));
        }
    }
    let failures: Vec<SubsetHitCase> = cases
        .par_iter()
        .filter_map(|(n, values, m)| {
            let (n, m) = (*n, *m);
            let expected = enumerate_hit(values, n, m);
            let reason = match residue_subset_hit(values, n, m) {
                Err(e) => Some(e.to_string()),
                Ok(found) if Some(&found) != expected.as_ref() => {
                    Some(format!("enumeration gives {expected:?}"))
                }
                Ok(_) => None,
            }?;
            Some(SubsetHitCase {
                n,
                values: values.clone(),
                m,
                found: residue_subset_hit(values, n, m).ok(),
                reason,
            })
        })
        .collect();
    Ok(SubsetHitSweep {
        n_max,
        samples_per_n,
        seed,
        cases_checked: cases.len(),
        holds: failures.is_empty(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_hold() {
        let z = sweep_small_zero_sums(12).unwrap();
        assert!(z.holds && z.sequences_checked > 0);
        let r = sweep_high_repetition(6).unwrap();
        assert!(r.holds);
        // C(2n-1, n) multisets of size n over Z_n
        assert_eq!(
            r.layers.iter().map(|l| l.multisets).collect::<Vec<_>>(),
            [3, 10, 35, 126, 462]
        );
        assert!(sweep_farey(20).unwrap().holds);
        let h = sweep_subset_hit(6, 20, DEFAULT_SEED).unwrap();
        assert!(h.holds);
        assert_eq!(h.cases_checked, 100);
        assert!(sweep_high_repetition(1).is_err());
    }

    #[test]
    fn enumeration_oracle_matches_examples() {
        assert_eq!(enumerate_hit(&[1, 3, 3, 1], 4, 2), Some(vec![2, 3]));
        assert_eq!(enumerate_hit(&[1, 3, 3, 1], 4, 0), Some(vec![1, 2]));
    }
}
