//! Residues and sequences over the cyclic group Z_n.
//!
//! A sequence is an unordered multiset of residues. It is stored as a
//! residue → multiplicity map (a vector of pairs sorted by residue), which
//! fixes the order in which everything downstream prints and enumerates.
//!
//! The least positive representative `|x|_n` of the zero class is `n`, not
//! `0`; a lone zero term therefore already sums to `n`.
//!
//! Sequence literals look like `1^8 11 12^10 13^3 mod 22`. Integers may be
//! negative or exceed `n`; they are reduced on parse.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The order `n ≥ 2` of the cyclic group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 || n > u32::MAX as u64 {
            return Err(Error::Modulus(n));
        }
        Ok(Modulus(n as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    pub fn is_prime(self) -> bool {
        is_prime(self.0 as u64)
    }

    /// Reduce an arbitrary integer into `[0, n)`.
    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    /// `|x|_n` for a value already in `[0, n)`.
    #[inline]
    pub fn abs(self, r: u32) -> u32 {
        if r == 0 {
            self.0
        } else {
            r
        }
    }

    /// `r * m mod n` for residues already reduced.
    #[inline]
    pub fn mul(self, r: u32, m: u32) -> u32 {
        ((r as u64 * m as u64) % self.0 as u64) as u32
    }
}

impl TryFrom<u64> for Modulus {
    type Error = Error;
    fn try_from(n: u64) -> Result<Self> {
        Modulus::new(n)
    }
}

impl From<Modulus> for u64 {
    fn from(m: Modulus) -> u64 {
        m.0 as u64
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An element of Z_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u32,
    modulus: Modulus,
}

impl Residue {
    pub fn new(x: i64, modulus: Modulus) -> Self {
        Residue {
            value: modulus.reduce(x),
            modulus,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }
}

/// Smallest positive integer in the residue class of `x`.
pub fn abs_residue(x: Residue) -> u32 {
    x.modulus.abs(x.value)
}

/// A finite multiset of residues mod n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZnSequence {
    modulus: Modulus,
    // sorted by residue, multiplicities ≥ 1
    terms: Vec<(u32, u32)>,
}

impl ZnSequence {
    pub fn empty(modulus: Modulus) -> Self {
        ZnSequence {
            modulus,
            terms: Vec::new(),
        }
    }

    /// Build from arbitrary integers, reducing each mod n.
    pub fn new<I: IntoIterator<Item = i64>>(modulus: Modulus, values: I) -> Self {
        Self::from_counts(modulus, values.into_iter().map(|v| (v, 1)))
    }

    /// Build from `(value, multiplicity)` pairs; values are reduced, equal
    /// classes merged and zero multiplicities dropped.
    pub fn from_counts<I: IntoIterator<Item = (i64, u32)>>(modulus: Modulus, counts: I) -> Self {
        let mut terms: Vec<(u32, u32)> = counts
            .into_iter()
            .filter(|&(_, c)| c > 0)
            .map(|(v, c)| (modulus.reduce(v), c))
            .collect();
        terms.sort_unstable();
        terms.dedup_by(|next, prev| {
            if next.0 == prev.0 {
                prev.1 += next.1;
                true
            } else {
                false
            }
        });
        ZnSequence { modulus, terms }
    }

    /// Build from residues already in `[0, n)` and sorted ascending (with
    /// repeats). Used by the enumerators, which produce sorted tuples.
    pub(crate) fn from_sorted_residues(modulus: Modulus, sorted: &[u32]) -> Self {
        let mut terms: Vec<(u32, u32)> = Vec::with_capacity(sorted.len());
        for &r in sorted {
            debug_assert!(r < modulus.get());
            match terms.last_mut() {
                Some(last) if last.0 == r => last.1 += 1,
                _ => terms.push((r, 1)),
            }
        }
        ZnSequence { modulus, terms }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn n(&self) -> u32 {
        self.modulus.get()
    }

    /// Distinct residues with their multiplicities, ascending by residue.
    pub fn terms(&self) -> &[(u32, u32)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.iter().map(|&(_, c)| c as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, residue: u32) -> u32 {
        self.terms
            .binary_search_by_key(&residue, |&(r, _)| r)
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    /// All terms with repetition, ascending.
    pub fn residues(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms
            .iter()
            .flat_map(|&(r, c)| std::iter::repeat_n(r, c as usize))
    }

    pub fn elements(&self) -> impl Iterator<Item = Residue> + '_ {
        let modulus = self.modulus;
        self.residues().map(move |value| Residue { value, modulus })
    }

    pub fn normalize(&self) -> NormalizedSequence {
        let mut values: Vec<(u32, u32)> = self
            .terms
            .iter()
            .map(|&(r, c)| (self.modulus.abs(r), c))
            .collect();
        // only the zero class moves (to n), and it moves to the end
        values.sort_unstable();
        NormalizedSequence {
            modulus: self.modulus,
            values,
        }
    }

    pub fn scale(&self, m: i64) -> ZnSequence {
        let m = self.modulus.reduce(m);
        let n = self.modulus;
        ZnSequence::from_counts(n, self.terms.iter().map(|&(r, c)| (n.mul(r, m) as i64, c)))
    }

    /// `σ(|mS|_n)`: the sum of least positive representatives of `mS`.
    pub fn scaled_abs_sum(&self, m: u32) -> u64 {
        let n = self.modulus;
        self.terms
            .iter()
            .map(|&(r, c)| n.abs(n.mul(r, m)) as u64 * c as u64)
            .sum()
    }

    /// Maximal multiplicity `h(S)`; 0 for the empty sequence.
    pub fn repetition(&self) -> u32 {
        self.terms.iter().map(|&(_, c)| c).max().unwrap_or(0)
    }

    /// `σ(S) mod n`.
    pub fn sum_mod(&self) -> u32 {
        let n = self.modulus.get() as u64;
        (self
            .terms
            .iter()
            .map(|&(r, c)| r as u64 * c as u64 % n)
            .sum::<u64>()
            % n) as u32
    }

    pub fn is_zero_sum(&self) -> bool {
        self.sum_mod() == 0
    }

    /// Zero-sum and no proper nonempty sub-multiset is zero-sum.
    ///
    /// A proper zero-sum part either misses the last term or its complement
    /// does, so it suffices to ask whether the sequence with one term removed
    /// has a nonempty zero-sum subsequence.
    pub fn is_minimal_zero_sum(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::EmptySequence);
        }
        if !self.is_zero_sum() {
            return Ok(false);
        }
        let n = self.n() as usize;
        let mut reach = vec![false; n];
        let total = self.len();
        for r in self.residues().take(total - 1) {
            let r = r as usize;
            let prev = reach.clone();
            for (s, &hit) in prev.iter().enumerate() {
                if hit {
                    reach[(s + r) % n] = true;
                }
            }
            reach[r] = true;
            if reach[0] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Multiset inclusion; moduli must agree.
    pub fn is_submultiset_of(&self, other: &ZnSequence) -> bool {
        self.modulus == other.modulus && self.terms.iter().all(|&(r, c)| other.multiplicity(r) >= c)
    }
}

impl fmt::Display for ZnSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(r, c) in &self.terms {
            if c == 1 {
                write!(f, "{r} ")?;
            } else {
                write!(f, "{r}^{c} ")?;
            }
        }
        write!(f, "mod {}", self.modulus)
    }
}

impl FromStr for ZnSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_sequence(s)
    }
}

impl Serialize for ZnSequence {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ZnSequence {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `|S|_n` as a multiset of integers in `[1, n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedSequence {
    modulus: Modulus,
    values: Vec<(u32, u32)>,
}

impl NormalizedSequence {
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// `(value, multiplicity)` pairs ascending by value.
    pub fn counts(&self) -> &[(u32, u32)] {
        &self.values
    }

    pub fn values(&self) -> impl Iterator<Item = u32> + '_ {
        self.values
            .iter()
            .flat_map(|&(v, c)| std::iter::repeat_n(v, c as usize))
    }

    pub fn len(&self) -> usize {
        self.values.iter().map(|&(_, c)| c as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sigma(&self) -> u64 {
        self.values.iter().map(|&(v, c)| v as u64 * c as u64).sum()
    }
}

pub fn normalize(s: &ZnSequence) -> NormalizedSequence {
    s.normalize()
}

pub fn sigma(t: &NormalizedSequence) -> u64 {
    t.sigma()
}

pub fn scale(m: i64, s: &ZnSequence) -> ZnSequence {
    s.scale(m)
}

pub fn repetition(s: &ZnSequence) -> u32 {
    s.repetition()
}

pub fn is_zero_sum(s: &ZnSequence) -> bool {
    s.is_zero_sum()
}

pub fn is_minimal_zero_sum(s: &ZnSequence) -> Result<bool> {
    s.is_minimal_zero_sum()
}

/// Units of Z_n as multipliers in `[1, n-1]`, ascending.
pub fn coprime_multipliers(n: Modulus) -> Vec<u32> {
    let n = n.get();
    (1..n).filter(|&m| m.gcd(&n) == 1).collect()
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut rest = n;
    let mut q = 2;
    while q * q <= rest {
        if rest.is_multiple_of(q) {
            while rest.is_multiple_of(q) {
                rest /= q;
            }
            result -= result / q;
        }
        q += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    result
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&p| is_prime(p)).collect()
}

fn parse_error(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

fn parse_sequence(input: &str) -> Result<ZnSequence> {
    // (byte offset, token)
    let tokens: Vec<(usize, &str)> = input
        .split_whitespace()
        .map(|tok| (tok.as_ptr() as usize - input.as_ptr() as usize, tok))
        .collect();

    let Some(mod_at) = tokens.iter().position(|&(_, t)| t == "mod") else {
        return Err(parse_error(input.len(), "expected \"mod <n>\""));
    };
    let modulus = match &tokens[mod_at + 1..] {
        [] => return Err(parse_error(input.len(), "expected modulus after \"mod\"")),
        [(pos, tok)] => {
            let n: u64 = tok
                .parse()
                .map_err(|_| parse_error(*pos, format!("invalid modulus {tok:?}")))?;
            Modulus::new(n).map_err(|e| parse_error(*pos, e.to_string()))?
        }
        [_, (pos, tok), ..] => {
            return Err(parse_error(
                *pos,
                format!("unexpected token {tok:?} after modulus"),
            ))
        }
    };

    let mut counts = Vec::with_capacity(mod_at);
    for &(pos, tok) in &tokens[..mod_at] {
        let (base, mult) = match tok.split_once('^') {
            Some((b, m)) => {
                let mpos = pos + b.len() + 1;
                let mult: u32 = m
                    .parse()
                    .map_err(|_| parse_error(mpos, format!("invalid multiplicity {m:?}")))?;
                if mult == 0 {
                    return Err(parse_error(mpos, "multiplicity must be positive"));
                }
                (b, mult)
            }
            None => (tok, 1),
        };
        let value: i64 = base
            .parse()
            .map_err(|_| parse_error(pos, format!("invalid term {base:?}")))?;
        counts.push((value, mult));
    }
    Ok(ZnSequence::from_counts(modulus, counts))
}
