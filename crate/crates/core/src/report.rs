//! Report documents and replayable witnesses.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;
use serde_json::Value;

use crate::index::has_index_n_subsequence;
use crate::zn::ZnSequence;

pub const REPORT_VERSION: &str = env!("CARGO_PKG_VERSION");

/// A claim that can be re-checked from the sequences it mentions alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `σ(|mS|_n) = value`.
    IndexValue {
        sequence: ZnSequence,
        multiplier: u32,
        value: u64,
    },
    /// `T ⊆ S` with `σ(|mT|_n) = target_sum`.
    ScaledSubsequence {
        parent: ZnSequence,
        subsequence: ZnSequence,
        multiplier: u32,
        target_sum: u64,
    },
    /// Nonempty `T ⊆ S` summing to zero.
    ZeroSum {
        parent: ZnSequence,
        subsequence: ZnSequence,
    },
    /// `S` has no subsequence of index `n`.
    NoIndexSubsequence { sequence: ZnSequence },
    /// `Σ_{i∈I} a_i ≡ m (mod n)` with 1-based `I`.
    SubsetHit {
        values: Vec<i64>,
        n: u32,
        m: i64,
        indices: Vec<usize>,
    },
}

impl Witness {
    pub fn verify(&self) -> bool {
        match self {
            Witness::IndexValue {
                sequence,
                multiplier,
                value,
            } => {
                multiplier.gcd(&sequence.n()) == 1 && sequence.scaled_abs_sum(*multiplier) == *value
            }
            Witness::ScaledSubsequence {
                parent,
                subsequence,
                multiplier,
                target_sum,
            } => {
                !subsequence.is_empty()
                    && subsequence.modulus() == parent.modulus()
                    && subsequence.is_submultiset_of(parent)
                    && multiplier.gcd(&parent.n()) == 1
                    && subsequence.scaled_abs_sum(*multiplier) == *target_sum
            }
            Witness::ZeroSum {
                parent,
                subsequence,
            } => {
                !subsequence.is_empty()
                    && subsequence.modulus() == parent.modulus()
                    && subsequence.is_submultiset_of(parent)
                    && subsequence.is_zero_sum()
            }
            Witness::NoIndexSubsequence { sequence } => !has_index_n_subsequence(sequence, None),
            Witness::SubsetHit {
                values,
                n,
                m,
                indices,
            } => {
                let n = *n as i64;
                n > 0
                    && !indices.is_empty()
                    && indices.windows(2).all(|w| w[0] < w[1])
                    && indices.iter().all(|&i| i >= 1 && i <= values.len())
                    && indices
                        .iter()
                        .map(|&i| values[i - 1])
                        .sum::<i64>()
                        .rem_euclid(n)
                        == m.rem_euclid(n)
            }
        }
    }
}

/// A flat table for the CSV projection.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for line in std::iter::once(&self.header).chain(&self.rows) {
            w.write_record(line).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("cells are UTF-8")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub result: Value,
    pub witnesses: Vec<Witness>,
    pub timing_ms: u64,
    pub version: String,
    #[serde(skip)]
    pub table: Option<Table>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values serialize") + "\n"
    }

    /// `key = value` lines, one per leaf of the result.
    pub fn to_text(&self) -> String {
        let mut out = format!("command = {}\n", self.command);
        for (k, v) in &self.inputs {
            out.push_str(&format!("inputs.{k} = {}\n", scalar(v)));
        }
        flatten("result", &self.result, &mut out);
        out.push_str(&format!("witnesses = {}\n", self.witnesses.len()));
        out.push_str(&format!(
            "timing_ms = {}\nversion = {}\n",
            self.timing_ms, self.version
        ));
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, v) in map {
                flatten(&format!("{prefix}.{k}"), v, out);
            }
        }
        Value::Array(items)
            if !items.is_empty() && items.iter().any(|x| x.is_object() || x.is_array()) =>
        {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), v, out);
            }
        }
        other => out.push_str(&format!("{prefix} = {}\n", scalar(other))),
    }
}
