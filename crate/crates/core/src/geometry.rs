//! Half sets `S_(p,j)` and the four-term index check over Z_p.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::index::index_of;
use crate::zn::{Modulus, ZnSequence};

/// `{ i ∈ [1, ⌊p/2⌋] : 2·|ij|_p < p }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HalfSet {
    pub p: u32,
    pub j: u32,
    pub members: Vec<u32>,
}

impl HalfSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn odd_prime(p: u32) -> Result<Modulus> {
    let modulus = Modulus::new(p as u64)?;
    if !modulus.is_prime() || p < 3 {
        return Err(Error::invalid(format!("p must be an odd prime, got {p}")));
    }
    Ok(modulus)
}

fn members(modulus: Modulus, j: u32) -> Vec<u32> {
    let p = modulus.get();
    (1..=p / 2)
        .filter(|&i| 2 * modulus.abs(modulus.mul(i, j)) < p)
        .collect()
}

pub fn half_set(p: u32, j: u32) -> Result<HalfSet> {
    let modulus = odd_prime(p)?;
    if j < 1 || j >= p {
        return Err(Error::invalid(format!("j must lie in [1, p-1], got {j}")));
    }
    Ok(HalfSet {
        p,
        j,
        members: members(modulus, j),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplementCheck {
    pub p: u32,
    /// `j` where `S_(p,j)` and `S_(p,p-j)` fail to split `[1, ⌊p/2⌋]`.
    pub failures: Vec<u32>,
    pub holds: bool,
}

/// `|S_(p,j)| + |S_(p,p-j)| = (p-1)/2`, with the two sets disjoint and
/// covering `[1, ⌊p/2⌋]`, for every `j ∈ [1, p-1]`.
pub fn check_half_set_complement(p: u32) -> Result<ComplementCheck> {
    let modulus = odd_prime(p)?;
    let half = (p / 2) as usize;
    let failures: Vec<u32> = (1..p)
        .into_par_iter()
        .filter(|&j| {
            let mut seen = vec![0u8; half + 1];
            let a = members(modulus, j);
            let b = members(modulus, p - j);
            for &i in a.iter().chain(&b) {
                seen[i as usize] += 1;
            }
            a.len() + b.len() != half || seen[1..].iter().any(|&c| c != 1)
        })
        .collect();
    Ok(ComplementCheck {
        p,
        holds: failures.is_empty(),
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HalfSetScan {
    pub p: u32,
    pub min_size: usize,
    /// `j` with `6|S_(p,j)| < p - 1`.
    pub violators: Vec<u32>,
    /// `j` with `6|S_(p,j)| = p - 1`.
    pub equality_js: Vec<u32>,
    /// `p - 3`, and `(p-1)/3` when it is an integer.
    pub allowed_equality: Vec<u32>,
    pub holds: bool,
}

/// Scans `j ∈ [2, p-2]` for `|S_(p,j)| ≥ (p-1)/6`, equality only at the
/// allowed exceptions.
pub fn scan_half_set_lower_bound(p: u32) -> Result<HalfSetScan> {
    if p < 19 {
        return Err(Error::PrimeTooSmall);
    }
    let modulus = odd_prime(p)?;
    let sizes: Vec<(u32, usize)> = (2..p - 1)
        .into_par_iter()
        .map(|j| (j, members(modulus, j).len()))
        .collect();
    let bound = (p - 1) as usize;
    let violators: Vec<u32> = sizes
        .iter()
        .filter(|s| 6 * s.1 < bound)
        .map(|s| s.0)
        .collect();
    let equality_js: Vec<u32> = sizes
        .iter()
        .filter(|s| 6 * s.1 == bound)
        .map(|s| s.0)
        .collect();
    let mut allowed_equality = vec![p - 3];
    if (p - 1).is_multiple_of(3) {
        allowed_equality.insert(0, (p - 1) / 3);
    }
    let holds = violators.is_empty() && equality_js.iter().all(|j| allowed_equality.contains(j));
    Ok(HalfSetScan {
        p,
        min_size: sizes.iter().map(|s| s.1).min().unwrap_or(0),
        violators,
        equality_js,
        allowed_equality,
        holds,
    })
}

fn is_minimal_four(a: [u32; 4], p: u32) -> bool {
    (1u32..15).all(|mask| {
        (0..4)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| a[i])
            .sum::<u32>()
            % p
            != 0
    })
}

/// Every sorted `a1 ≤ a2 ≤ a3 ≤ a4` in `[1, p-1]` forming a minimal zero-sum
/// sequence, in lexicographic order.
pub fn enumerate_min_zero_sum_4(p: u32) -> Result<Vec<[u32; 4]>> {
    if p < 5 {
        return Err(Error::invalid(format!("p must be at least 5, got {p}")));
    }
    odd_prime(p)?;
    let shards: Vec<Vec<[u32; 4]>> = (1..p)
        .into_par_iter()
        .map(|a1| {
            let mut out = Vec::new();
            for a2 in a1..p {
                for a3 in a2..p {
                    let partial = a1 + a2 + a3;
                    for total in [p, 2 * p, 3 * p] {
                        if total <= partial {
                            continue;
                        }
                        let a4 = total - partial;
                        if a4 >= a3 && a4 < p && is_minimal_four([a1, a2, a3, a4], p) {
                            out.push([a1, a2, a3, a4]);
                        }
                    }
                }
            }
            out
        })
        .collect();
    Ok(shards.into_iter().flatten().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FourSumReport {
    pub p: u32,
    pub count: usize,
    pub all_index_p: bool,
    pub failures: Vec<ZnSequence>,
}

/// Index of every minimal zero-sum sequence of four terms in Z_p.
pub fn verify_foursum(p: u32) -> Result<FourSumReport> {
    let modulus = Modulus::new(p as u64)?;
    let tuples = enumerate_min_zero_sum_4(p)?;
    let failures = tuples
        .par_iter()
        .map(|t| {
            let s = ZnSequence::new(modulus, t.iter().map(|&x| x as i64));
            index_of(&s).map(|r| (r.value != p as u64).then_some(s))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    Ok(FourSumReport {
        p,
        count: tuples.len(),
        all_index_p: failures.is_empty(),
        failures,
    })
}
