//! Interval partition of a sequence over Z_p, the `R_i` sets and the
//! subset-residue hit.

use num_integer::Integer;
use serde::Serialize;

use super::bounds::ratio_str;
use super::{farey_set, FareySet, Q};
use crate::error::{Error, Result};
use crate::subset::{CountRule, SuffixTable, SumSpace};
use crate::zn::{Modulus, ZnSequence};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionPart {
    /// 1-based position `j` of `S_j`.
    pub index: usize,
    #[serde(serialize_with = "ratio_str")]
    pub lower: Q,
    #[serde(serialize_with = "ratio_str")]
    pub upper: Q,
    pub terms: ZnSequence,
}

impl PartitionPart {
    fn contains(&self, v: u32) -> bool {
        let v = Q::from_integer(v as i64);
        self.lower <= v && v <= self.upper
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionResult {
    pub p: u32,
    #[serde(rename = "M")]
    pub m: u32,
    pub k: u32,
    pub farey: FareySet,
    pub parts: Vec<PartitionPart>,
}

/// The `2f + 1` closed intervals, in order `S_1, S_2, …, S_{2f+1}`.
pub fn partition_intervals(p: u32, m: u32) -> Result<(FareySet, Vec<(Q, Q)>)> {
    if !Modulus::new(p as u64)?.is_prime() {
        return Err(Error::CompositeModulus);
    }
    if m < 1 || m + 2 > p {
        return Err(Error::invalid(format!("M must lie in [1, p-2], got {m}")));
    }
    let k = p / m;
    let farey = farey_set(k)?;
    let (p, m) = (p as i64, m as i64);
    let fr: Vec<(i64, i64)> = farey
        .fractions
        .iter()
        .map(|x| (x.a as i64, x.b as i64))
        .collect();
    let f = fr.len();
    let mut intervals = vec![
        (Q::from_integer(1), Q::from_integer(m)),
        (Q::from_integer(m + 2), Q::new(p - 1, fr[0].1)),
    ];
    for i in 0..f {
        let (a, b) = fr[i];
        intervals.push((Q::new(a * p + 1, b), Q::new(a * p + m, b)));
        if let Some(&(c, d)) = fr.get(i + 1) {
            intervals.push((Q::new(a * p + m + 1, b), Q::new(c * p - 1, d)));
        }
    }
    Ok((farey, intervals))
}

/// Places every term of `S` by its value in `[1, p]` into the unique
/// interval containing it.
pub fn partition_sequence(s: &ZnSequence, m: u32) -> Result<PartitionResult> {
    let p = s.n();
    let (farey, intervals) = partition_intervals(p, m)?;
    let mut buckets: Vec<Vec<(i64, u32)>> = vec![Vec::new(); intervals.len()];
    let mut parts: Vec<PartitionPart> = intervals
        .into_iter()
        .enumerate()
        .map(|(j, (lower, upper))| PartitionPart {
            index: j + 1,
            lower,
            upper,
            terms: ZnSequence::empty(s.modulus()),
        })
        .collect();
    for &(r, c) in s.terms() {
        let v = s.modulus().abs(r);
        let mut hits = parts
            .iter()
            .filter(|part| part.contains(v))
            .map(|part| part.index);
        let Some(j) = hits.next() else {
            return Err(Error::OutsidePartition(v as u64));
        };
        if let Some(other) = hits.next() {
            return Err(Error::Invariant(format!(
                "value {v} lies in both S_{j} and S_{other}"
            )));
        }
        buckets[j - 1].push((r as i64, c));
    }
    for (part, bucket) in parts.iter_mut().zip(buckets) {
        part.terms = ZnSequence::from_counts(s.modulus(), bucket);
    }
    Ok(PartitionResult {
        p,
        m,
        k: farey.k,
        farey,
        parts,
    })
}

/// `R_i = { x | S : 1 ≤ |ix|_p ≤ M, gcd(|ix|_p, i) = 1 }`.
pub fn r_set(s: &ZnSequence, i: u32, m: u32) -> Result<ZnSequence> {
    let modulus = s.modulus();
    if !modulus.is_prime() {
        return Err(Error::CompositeModulus);
    }
    if m == 0 || i < 2 || i > s.n() / m {
        return Err(Error::invalid(format!(
            "i must lie in [2, ⌊p/M⌋], got i={i}, M={m}"
        )));
    }
    let kept = s.terms().iter().filter_map(|&(r, c)| {
        let v = modulus.abs(modulus.mul(r, i % s.n()));
        (v <= m && v.gcd(&i) == 1).then_some((r as i64, c))
    });
    Ok(ZnSequence::from_counts(modulus, kept))
}

/// Nonempty `I ⊆ [1, n]` (1-based, ascending) with `Σ_{i∈I} a_i ≡ m (mod n)`,
/// and `I ⊆ [1, n-1]` when `m ≢ 0`. Returns the lexicographically least one.
pub fn residue_subset_hit(a: &[i64], n: u32, m: i64) -> Result<Vec<usize>> {
    let modulus = Modulus::new(n as u64)?;
    if a.len() != n as usize {
        return Err(Error::hypothesis(format!(
            "expected {n} values, got {}",
            a.len()
        )));
    }
    let weights: Vec<u32> = a.iter().map(|&x| modulus.reduce(x)).collect();
    if let Some(pos) = weights.iter().position(|&w| w.gcd(&n) != 1) {
        return Err(Error::hypothesis(format!(
            "a_{} = {} is not coprime to {n}",
            pos + 1,
            a[pos]
        )));
    }
    let target = modulus.reduce(m);
    let picked = if target == 0 {
        let rule = CountRule::AtMost(weights.len());
        SuffixTable::build(SumSpace::Modular(n), weights, rule).lex_min(0, rule)
    } else {
        let head = weights[..weights.len() - 1].to_vec();
        SuffixTable::build(SumSpace::Modular(n), head, CountRule::Any)
            .lex_min(target, CountRule::Any)
    };
    picked
        .map(|idx| idx.into_iter().map(|i| i + 1).collect())
        .ok_or_else(|| Error::Invariant(format!("no subset of {a:?} hits {m} mod {n}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(lit: &str) -> ZnSequence {
        lit.parse().unwrap()
    }

    fn part_of(result: &PartitionResult, v: u32) -> usize {
        result
            .parts
            .iter()
            .find(|part| part.terms.residues().any(|r| r == v))
            .map(|part| part.index)
            .unwrap()
    }

    #[test]
    fn partition_examples() {
        let r = partition_sequence(&seq("3 7 12 17 mod 23"), 5).unwrap();
        assert_eq!(r.k, 4);
        assert_eq!(r.parts.len(), 11);
        assert_eq!(part_of(&r, 3), 1);
        assert_eq!(part_of(&r, 7), 3);
        assert_eq!(part_of(&r, 12), 7);
        assert_eq!(part_of(&r, 17), 9);
        // S_2 = [7, 11/2] is empty for these parameters
        assert!(r.parts[1].lower > r.parts[1].upper);

        let r = partition_sequence(&seq("1 2 3 4 5 mod 11"), 5).unwrap();
        assert_eq!(r.parts[0].terms.len(), 5);
        assert_eq!(r.parts.len(), 3);
    }

    #[test]
    fn partition_gap_is_an_error() {
        // p = 13, M = 5: S_1 = [1,5], S_2 = [7,6], S_3 = [7,9]
        assert_eq!(
            partition_sequence(&seq("6 mod 13"), 5),
            Err(Error::OutsidePartition(6))
        );
        assert_eq!(
            partition_sequence(&seq("0 mod 13"), 5),
            Err(Error::OutsidePartition(13))
        );
        assert_eq!(
            partition_sequence(&seq("1 mod 12"), 5),
            Err(Error::CompositeModulus)
        );
        assert!(partition_sequence(&seq("1 mod 13"), 12).is_err());
    }

    #[test]
    fn r_set_examples() {
        assert_eq!(
            r_set(&seq("6 7 8 mod 11"), 2, 3).unwrap(),
            seq("6 7 mod 11")
        );
        assert_eq!(r_set(&seq("4 mod 11"), 3, 3).unwrap(), seq("4 mod 11"));
        assert!(r_set(&seq("8 mod 11"), 2, 3).unwrap().is_empty());
        assert!(r_set(&seq("4 mod 11"), 4, 3).is_err());
    }

    #[test]
    fn subset_hit_examples() {
        assert_eq!(residue_subset_hit(&[1, 1], 2, 1).unwrap(), [1]);
        assert_eq!(residue_subset_hit(&[1, 3, 3, 1], 4, 2).unwrap(), [2, 3]);
        assert_eq!(residue_subset_hit(&[1, 3, 3, 1], 4, 0).unwrap(), [1, 2]);
        assert!(matches!(
            residue_subset_hit(&[1, 2, 3, 1], 4, 1),
            Err(Error::Hypothesis(_))
        ));
        assert!(residue_subset_hit(&[1, 3], 4, 1).is_err());
    }
}
