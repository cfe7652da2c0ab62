//! Farey-interval machinery for prime moduli.
//!
//! `F[1/k, (k-1)/k]` is the ascending list of reduced fractions `a/b` with
//! `2 ≤ b ≤ k` between `1/k` and `(k-1)/k`. Adjacent members satisfy
//! `b + d ≥ k + 1` and `bc - ad = 1`; those two facts drive the partition of
//! a sequence into intervals ([`partition`]), the `R_i` sets and the bound
//! evaluators ([`bounds`]), and the audit of the eight-case argument for
//! large primes ([`audit`]).
//!
//! All arithmetic is exact: integer cross-multiplication or
//! `Ratio<i64>`, never floating point.

pub mod audit;
pub mod bounds;
pub mod partition;

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

pub use audit::{audit_prime_case_analysis, CaseAudit, PrimeCaseAudit, Threshold};
pub use bounds::{
    eval_coprime_bound, eval_length_bound, eval_pair_bound, BoundEvaluation, RBound, Relation,
};
pub use partition::{
    partition_intervals, partition_sequence, r_set, residue_subset_hit, PartitionPart,
    PartitionResult,
};

pub type Q = Ratio<i64>;

/// Reduced fraction `a/b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FareyFraction {
    pub a: u32,
    pub b: u32,
}

impl FareyFraction {
    pub fn value(self) -> Q {
        Q::new(self.a as i64, self.b as i64)
    }
}

impl Ord for FareyFraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.a as u64 * other.b as u64).cmp(&(other.a as u64 * self.b as u64))
    }
}

impl PartialOrd for FareyFraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FareyFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.a, self.b)
    }
}

impl Serialize for FareyFraction {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FareySet {
    pub k: u32,
    pub fractions: Vec<FareyFraction>,
}

impl FareySet {
    pub fn f(&self) -> usize {
        self.fractions.len()
    }
}

/// Walks the Farey sequence of order `k` with the neighbour recurrence,
/// starting after `0/1, 1/k` and stopping at `(k-1)/k`.
pub fn farey_set(k: u32) -> Result<FareySet> {
    if k < 2 {
        return Err(Error::invalid(format!("k must be at least 2, got {k}")));
    }
    let k64 = k as u64;
    let (mut a, mut b, mut c, mut d) = (0u64, 1u64, 1u64, k64);
    let mut fractions = Vec::new();
    loop {
        fractions.push(FareyFraction {
            a: c as u32,
            b: d as u32,
        });
        if c == k64 - 1 && d == k64 {
            break;
        }
        let q = (k64 + b) / d;
        let next = (q * c - a, q * d - b);
        (a, b) = (c, d);
        (c, d) = next;
    }
    Ok(FareySet { k, fractions })
}

/// Both adjacency facts for every neighbouring pair: `k + 1 ≤ b + d` and
/// `bc - ad = 1`.
pub fn check_adjacency(set: &FareySet) -> Vec<BoundEvaluation> {
    let k = set.k as i64;
    set.fractions
        .windows(2)
        .flat_map(|pair| {
            let (x, y) = (pair[0], pair[1]);
            let (a, b, c, d) = (x.a as i64, x.b as i64, y.a as i64, y.b as i64);
            let pair_label = format!("{x} < {y}");
            [
                BoundEvaluation::new(
                    "denominator sum",
                    Q::from_integer(k + 1),
                    Q::from_integer(b + d),
                    Relation::Le,
                )
                .with("pair", pair_label.clone()),
                BoundEvaluation::new(
                    "determinant",
                    Q::from_integer(b * c - a * d),
                    Q::from_integer(1),
                    Relation::Eq,
                )
                .with("pair", pair_label),
            ]
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    fn brute(k: u32) -> Vec<FareyFraction> {
        let mut out = Vec::new();
        for b in 2..=k {
            for a in 1..b {
                // 1/k ≤ a/b ≤ (k-1)/k
                if a.gcd(&b) == 1 && k * a >= b && k * a <= (k - 1) * b {
                    out.push(FareyFraction { a, b });
                }
            }
        }
        out.sort();
        out
    }

    fn show(set: &FareySet) -> Vec<String> {
        set.fractions.iter().map(|f| f.to_string()).collect()
    }

    #[test]
    fn farey_examples() {
        assert_eq!(show(&farey_set(2).unwrap()), ["1/2"]);
        assert_eq!(
            show(&farey_set(4).unwrap()),
            ["1/4", "1/3", "1/2", "2/3", "3/4"]
        );
        let five = farey_set(5).unwrap();
        assert_eq!(
            show(&five),
            ["1/5", "1/4", "1/3", "2/5", "1/2", "3/5", "2/3", "3/4", "4/5"]
        );
        assert_eq!(five.f(), 9);
        assert!(farey_set(1).is_err());
    }

    #[test]
    fn recurrence_matches_enumeration() {
        for k in 2..=60 {
            assert_eq!(farey_set(k).unwrap().fractions, brute(k), "k={k}");
        }
    }

    #[test]
    fn adjacency_examples() {
        let evals = check_adjacency(&farey_set(4).unwrap());
        // pairs (1/3, 1/2) and (1/2, 2/3)
        let for_pair = |label: &str| -> Vec<&BoundEvaluation> {
            evals
                .iter()
                .filter(|e| e.parameters.get("pair").map(String::as_str) == Some(label))
                .collect()
        };
        for label in ["1/3 < 1/2", "1/2 < 2/3"] {
            let e = for_pair(label);
            assert_eq!(e.len(), 2);
            assert_eq!(e[0].rhs, Q::from_integer(5));
            assert_eq!(e[1].lhs, Q::from_integer(1));
            assert!(e.iter().all(|x| x.holds));
        }
        assert!(check_adjacency(&farey_set(2).unwrap()).is_empty());
    }
}
