//! Named operations behind a common [`Command`] trait.
//!
//! Each command declares the arguments it reads, runs against [`Params`],
//! and returns a JSON result plus witnesses. [`Registry::execute`] wraps the
//! outcome in a [`Report`] after replaying every witness; a witness that
//! fails to replay is an invariant violation, never a report.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::extremal::{compute_t, compute_t_distinct, strategies, ExtremalReport};
use crate::family::{build_counterexample, t_lower_bound, verify_family, verify_family_forced};
use crate::farey::{
    audit_prime_case_analysis, check_adjacency, eval_coprime_bound, eval_length_bound,
    eval_pair_bound, farey_set, partition_sequence, r_set, residue_subset_hit, Threshold,
};
use crate::geometry::{
    check_half_set_complement, enumerate_min_zero_sum_4, half_set, scan_half_set_lower_bound,
    verify_foursum,
};
use crate::index::{
    big_m, conjecture_lk_check, find_index_n_subsequence, index_of, little_m_with_multiplier,
    short_zero_sum, sum_index_set, SubseqWitness,
};
use crate::report::{Report, Table, Witness, REPORT_VERSION};
use crate::sweeps::{
    sweep_farey, sweep_high_repetition, sweep_small_zero_sums, sweep_subset_hit, DEFAULT_SEED,
};
use crate::zn::{Modulus, ZnSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Arg {
    Sequence,
    N,
    P,
    D,
    K,
    M,
    Cap,
    I,
    J,
    T,
    L,
    U,
    W,
    Target,
    Values,
    LenCap,
    Budget,
    Samples,
    Seed,
    Force,
    Threshold,
    Strategy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArgKind {
    Sequence,
    Int,
    Text,
    Flag,
}

impl Arg {
    pub const ALL: [Arg; 22] = [
        Arg::Sequence,
        Arg::N,
        Arg::P,
        Arg::D,
        Arg::K,
        Arg::M,
        Arg::Cap,
        Arg::I,
        Arg::J,
        Arg::T,
        Arg::L,
        Arg::U,
        Arg::W,
        Arg::Target,
        Arg::Values,
        Arg::LenCap,
        Arg::Budget,
        Arg::Samples,
        Arg::Seed,
        Arg::Force,
        Arg::Threshold,
        Arg::Strategy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Arg::Sequence => "sequence",
            Arg::N => "n",
            Arg::P => "p",
            Arg::D => "d",
            Arg::K => "k",
            Arg::M => "m",
            Arg::Cap => "cap",
            Arg::I => "i",
            Arg::J => "j",
            Arg::T => "t",
            Arg::L => "l",
            Arg::U => "u",
            Arg::W => "w",
            Arg::Target => "target",
            Arg::Values => "values",
            Arg::LenCap => "len-cap",
            Arg::Budget => "budget",
            Arg::Samples => "samples",
            Arg::Seed => "seed",
            Arg::Force => "force",
            Arg::Threshold => "threshold",
            Arg::Strategy => "strategy",
        }
    }

    pub fn kind(self) -> ArgKind {
        match self {
            Arg::Sequence => ArgKind::Sequence,
            Arg::Values | Arg::Threshold | Arg::Strategy => ArgKind::Text,
            Arg::Force => ArgKind::Flag,
            _ => ArgKind::Int,
        }
    }

    pub fn help(self) -> &'static str {
        match self {
            Arg::Sequence => "sequence literal, e.g. \"1^8 11 12^10 13^3 mod 22\"",
            Arg::N => "modulus n (or the largest n for sweeps)",
            Arg::P => "prime modulus p",
            Arg::D => "divisor d of n",
            Arg::K => "Farey order k (or the largest k for sweeps)",
            Arg::M => "interval length M",
            Arg::Cap => "largest length to search",
            Arg::I => "index i of R_i",
            Arg::J => "multiplier j",
            Arg::T => "index t",
            Arg::L => "index l",
            Arg::U => "parameter u",
            Arg::W => "parameter w",
            Arg::Target => "target residue m",
            Arg::Values => "comma separated integers a_1,...,a_n",
            Arg::LenCap => "largest subsequence length allowed",
            Arg::Budget => "most candidates visited per length",
            Arg::Samples => "random samples per n",
            Arg::Seed => "random seed",
            Arg::Force => "also run family members with k < 5",
            Arg::Threshold => "lower limit on p: 24318 (default) or 24138",
            Arg::Strategy => "search strategy",
        }
    }
}

/// Argument values supplied to a command.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params {
    ints: BTreeMap<Arg, i64>,
    texts: BTreeMap<Arg, String>,
    flags: BTreeSet<Arg>,
}

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set_int(&mut self, arg: Arg, v: i64) -> &mut Self {
        self.ints.insert(arg, v);
        self
    }

    pub fn set_text(&mut self, arg: Arg, v: impl Into<String>) -> &mut Self {
        self.texts.insert(arg, v.into());
        self
    }

    pub fn set_flag(&mut self, arg: Arg) -> &mut Self {
        self.flags.insert(arg);
        self
    }

    pub fn with_int(mut self, arg: Arg, v: i64) -> Self {
        self.set_int(arg, v);
        self
    }

    pub fn with_text(mut self, arg: Arg, v: impl Into<String>) -> Self {
        self.set_text(arg, v);
        self
    }

    pub fn with_flag(mut self, arg: Arg) -> Self {
        self.set_flag(arg);
        self
    }

    fn missing(arg: Arg) -> Error {
        match arg.kind() {
            ArgKind::Sequence => Error::invalid("missing sequence literal"),
            _ => Error::invalid(format!("missing --{}", arg.name())),
        }
    }

    pub fn opt_int(&self, arg: Arg) -> Option<i64> {
        self.ints.get(&arg).copied()
    }

    pub fn int(&self, arg: Arg) -> Result<i64> {
        self.opt_int(arg).ok_or_else(|| Self::missing(arg))
    }

    pub fn opt_u32(&self, arg: Arg) -> Result<Option<u32>> {
        self.opt_int(arg)
            .map(|v| {
                u32::try_from(v).map_err(|_| {
                    Error::invalid(format!(
                        "--{} must be a non-negative integer, got {v}",
                        arg.name()
                    ))
                })
            })
            .transpose()
    }

    pub fn u32(&self, arg: Arg) -> Result<u32> {
        self.opt_u32(arg)?.ok_or_else(|| Self::missing(arg))
    }

    pub fn text(&self, arg: Arg) -> Option<&str> {
        self.texts.get(&arg).map(String::as_str)
    }

    pub fn flag(&self, arg: Arg) -> bool {
        self.flags.contains(&arg)
    }

    pub fn sequence(&self) -> Result<ZnSequence> {
        self.text(Arg::Sequence)
            .ok_or_else(|| Self::missing(Arg::Sequence))?
            .parse()
    }

    /// Comma or whitespace separated integers.
    pub fn values(&self) -> Result<Vec<i64>> {
        let raw = self
            .text(Arg::Values)
            .ok_or_else(|| Self::missing(Arg::Values))?;
        let mut out = Vec::new();
        let mut start = None;
        for (pos, ch) in raw.char_indices().chain(std::iter::once((raw.len(), ','))) {
            let sep = ch == ',' || ch.is_whitespace();
            match (start, sep) {
                (None, false) => start = Some(pos),
                (Some(s), true) => {
                    let token = &raw[s..pos];
                    out.push(token.parse().map_err(|_| Error::Parse {
                        position: s,
                        message: format!("expected an integer, found {token:?}"),
                    })?);
                    start = None;
                }
                _ => {}
            }
        }
        Ok(out)
    }

    fn inputs(&self, args: &[Need]) -> BTreeMap<String, Value> {
        let mut out = BTreeMap::new();
        for need in args {
            let arg = need.arg;
            let v = match arg.kind() {
                ArgKind::Int => self.opt_int(arg).map(Value::from),
                ArgKind::Text | ArgKind::Sequence => self.text(arg).map(Value::from),
                ArgKind::Flag => Some(Value::from(self.flag(arg))),
            };
            if let Some(v) = v {
                out.insert(arg.name().to_string(), v);
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Need {
    pub arg: Arg,
    pub required: bool,
}

const fn req(arg: Arg) -> Need {
    Need {
        arg,
        required: true,
    }
}

const fn opt(arg: Arg) -> Need {
    Need {
        arg,
        required: false,
    }
}

/// What a command hands back before it becomes a report.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Outcome {
    pub result: Value,
    pub witnesses: Vec<Witness>,
    pub table: Option<Table>,
}

impl Outcome {
    fn of<T: Serialize>(result: &T) -> Result<Self> {
        Ok(Outcome {
            result: serde_json::to_value(result).map_err(|e| Error::Invariant(e.to_string()))?,
            ..Outcome::default()
        })
    }

    fn witness(mut self, w: Witness) -> Self {
        self.witnesses.push(w);
        self
    }
}

pub trait Command: Send + Sync {
    fn name(&self) -> &'static str;
    fn about(&self) -> &'static str;
    fn args(&self) -> &'static [Need];
    /// Whether the command can emit a CSV table.
    fn tabular(&self) -> bool {
        false
    }
    fn run(&self, params: &Params) -> Result<Outcome>;
}

/// A command backed by a plain function.
struct Op {
    name: &'static str,
    about: &'static str,
    args: &'static [Need],
    tabular: bool,
    run: fn(&Params) -> Result<Outcome>,
}

impl Command for Op {
    fn name(&self) -> &'static str {
        self.name
    }

    fn about(&self) -> &'static str {
        self.about
    }

    fn args(&self) -> &'static [Need] {
        self.args
    }

    fn tabular(&self) -> bool {
        self.tabular
    }

    fn run(&self, params: &Params) -> Result<Outcome> {
        (self.run)(params)
    }
}

pub struct Registry {
    commands: BTreeMap<&'static str, Box<dyn Command>>,
}

impl Registry {
    pub fn empty() -> Self {
        Registry {
            commands: BTreeMap::new(),
        }
    }

    /// Every built-in command.
    pub fn standard() -> Self {
        let mut r = Registry::empty();
        for op in builtins() {
            r.register(Box::new(op));
        }
        r
    }

    pub fn register(&mut self, command: Box<dyn Command>) {
        self.commands.insert(command.name(), command);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Command> {
        self.commands.get(name).map(|c| c.as_ref())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Command> {
        self.commands.values().map(|c| c.as_ref())
    }

    /// Runs `name` and replays its witnesses.
    pub fn execute(&self, name: &str, params: &Params) -> Result<Report> {
        let command = self
            .get(name)
            .ok_or_else(|| Error::invalid(format!("unknown command {name:?}")))?;
        for need in command.args().iter().filter(|n| n.required) {
            let present = match need.arg.kind() {
                ArgKind::Int => params.opt_int(need.arg).is_some(),
                ArgKind::Text | ArgKind::Sequence => params.text(need.arg).is_some(),
                ArgKind::Flag => true,
            };
            if !present {
                return Err(Params::missing(need.arg));
            }
        }
        let start = Instant::now();
        let outcome = command.run(params)?;
        let timing_ms = start.elapsed().as_millis() as u64;
        if let Some(bad) = outcome.witnesses.iter().find(|w| !w.verify()) {
            return Err(Error::Invariant(format!(
                "witness failed to replay: {bad:?}"
            )));
        }
        Ok(Report {
            command: name.to_string(),
            inputs: params.inputs(command.args()),
            result: outcome.result,
            witnesses: outcome.witnesses,
            timing_ms,
            version: REPORT_VERSION.to_string(),
            table: outcome.table,
        })
    }
}

fn subseq_witness(parent: &ZnSequence, w: &SubseqWitness) -> Option<Witness> {
    Some(Witness::ScaledSubsequence {
        parent: parent.clone(),
        subsequence: w.subsequence.clone()?,
        multiplier: w.multiplier?,
        target_sum: w.target_sum,
    })
}

fn with_subseq(outcome: Outcome, parent: &ZnSequence, w: &SubseqWitness) -> Outcome {
    match subseq_witness(parent, w) {
        Some(x) => outcome.witness(x),
        None => outcome,
    }
}

fn threshold(params: &Params) -> Result<Threshold> {
    match params.text(Arg::Threshold) {
        None | Some("24318") => Ok(Threshold::Primary),
        Some("24138") => Ok(Threshold::Alternate),
        Some(other) => Err(Error::invalid(format!(
            "threshold must be 24318 or 24138, got {other:?}"
        ))),
    }
}

fn extremal_outcome(report: ExtremalReport) -> Result<Outcome> {
    let witness = report.witness.clone();
    let outcome = Outcome::of(&report)?;
    Ok(match witness {
        Some(sequence) => outcome.witness(Witness::NoIndexSubsequence { sequence }),
        None => outcome,
    })
}

fn run_index(p: &Params) -> Result<Outcome> {
    let s = p.sequence()?;
    let r = index_of(&s)?;
    Ok(Outcome::of(&r)?.witness(Witness::IndexValue {
        sequence: s,
        multiplier: r.witness_m,
        value: r.value,
    }))
}

fn run_sum_index(p: &Params) -> Result<Outcome> {
    Outcome::of(&sum_index_set(&p.sequence()?))
}

fn run_big_m(p: &Params) -> Result<Outcome> {
    Outcome::of(&json!({ "value": big_m(&p.sequence()?) }))
}

fn run_little_m(p: &Params) -> Result<Outcome> {
    let (value, r) = little_m_with_multiplier(&p.sequence()?)?;
    Outcome::of(&json!({ "value": value, "multiplier": r }))
}

fn run_find_subseq(p: &Params) -> Result<Outcome> {
    let s = p.sequence()?;
    let cap = p.opt_u32(Arg::LenCap)?.map(|c| c as usize);
    let w = find_index_n_subsequence(&s, cap);
    Ok(with_subseq(Outcome::of(&w)?, &s, &w))
}

fn run_lk_check(p: &Params) -> Result<Outcome> {
    let s = p.sequence()?;
    let w = conjecture_lk_check(&s, p.u32(Arg::D)?)?;
    Ok(with_subseq(Outcome::of(&w)?, &s, &w))
}

fn run_verify_family(p: &Params) -> Result<Outcome> {
    let n = p.u32(Arg::N)?;
    let v = if p.flag(Arg::Force) {
        verify_family_forced(n)?
    } else {
        verify_family(n)?
    };
    let outcome = Outcome::of(&v)?;
    Ok(match &v.witness {
        Some(w) => with_subseq(outcome, &v.sequence, w),
        None => outcome.witness(Witness::NoIndexSubsequence {
            sequence: v.sequence.clone(),
        }),
    })
}

fn run_t_lower_bound(p: &Params) -> Result<Outcome> {
    let n = p.u32(Arg::N)?;
    let bound = t_lower_bound(n)?;
    let sequence = build_counterexample(n)?.sequence;
    Ok(
        Outcome::of(&json!({ "n": n, "lower_bound": bound, "sequence": sequence }))?
            .witness(Witness::NoIndexSubsequence { sequence }),
    )
}

fn run_farey(p: &Params) -> Result<Outcome> {
    let set = farey_set(p.u32(Arg::K)?)?;
    Outcome::of(&json!({ "k": set.k, "f": set.f(), "fractions": set.fractions }))
}

fn run_adjacency(p: &Params) -> Result<Outcome> {
    let evals = check_adjacency(&farey_set(p.u32(Arg::K)?)?);
    let holds = evals.iter().all(|e| e.holds);
    Outcome::of(&json!({ "holds": holds, "evaluations": evals }))
}

fn run_partition(p: &Params) -> Result<Outcome> {
    Outcome::of(&partition_sequence(&p.sequence()?, p.u32(Arg::M)?)?)
}

fn run_r_set(p: &Params) -> Result<Outcome> {
    let (i, m) = (p.u32(Arg::I)?, p.u32(Arg::M)?);
    let r = r_set(&p.sequence()?, i, m)?;
    Outcome::of(&json!({ "i": i, "M": m, "size": r.len(), "r_set": r }))
}

fn run_subset_hit(p: &Params) -> Result<Outcome> {
    let values = p.values()?;
    let (n, m) = (p.u32(Arg::N)?, p.int(Arg::Target)?);
    let indices = residue_subset_hit(&values, n, m)?;
    Ok(
        Outcome::of(&json!({ "indices": indices }))?.witness(Witness::SubsetHit {
            values,
            n,
            m,
            indices,
        }),
    )
}

fn run_audit_cases(p: &Params) -> Result<Outcome> {
    let audit = audit_prime_case_analysis(p.u32(Arg::P)? as u64, threshold(p)?)?;
    let mut result = serde_json::to_value(&audit).map_err(|e| Error::Invariant(e.to_string()))?;
    result["evaluations"] =
        serde_json::to_value(audit.evaluations()).map_err(|e| Error::Invariant(e.to_string()))?;
    Ok(Outcome {
        result,
        ..Outcome::default()
    })
}

fn run_half_set(p: &Params) -> Result<Outcome> {
    let h = half_set(p.u32(Arg::P)?, p.u32(Arg::J)?)?;
    Outcome::of(&json!({ "p": h.p, "j": h.j, "size": h.len(), "members": h.members }))
}

fn run_obs52(p: &Params) -> Result<Outcome> {
    Outcome::of(&check_half_set_complement(p.u32(Arg::P)?)?)
}

fn run_lemma53(p: &Params) -> Result<Outcome> {
    let prime = p.u32(Arg::P)?;
    let scan = scan_half_set_lower_bound(prime)?;
    let mut table = Table {
        header: ["p", "j", "size", "status"].map(String::from).to_vec(),
        rows: Vec::new(),
    };
    for j in 2..prime - 1 {
        let size = half_set(prime, j)?.len();
        let status = match (6 * size).cmp(&(prime as usize - 1)) {
            std::cmp::Ordering::Less => "below",
            std::cmp::Ordering::Equal => "equal",
            std::cmp::Ordering::Greater => "above",
        };
        table.rows.push(vec![
            prime.to_string(),
            j.to_string(),
            size.to_string(),
            status.into(),
        ]);
    }
    let mut outcome = Outcome::of(&scan)?;
    outcome.table = Some(table);
    Ok(outcome)
}

fn run_foursum(p: &Params) -> Result<Outcome> {
    let prime = p.u32(Arg::P)?;
    let report = verify_foursum(prime)?;
    let modulus = Modulus::new(prime as u64)?;
    let mut table = Table {
        header: ["p", "a1", "a2", "a3", "a4", "index"]
            .map(String::from)
            .to_vec(),
        rows: Vec::new(),
    };
    for t in enumerate_min_zero_sum_4(prime)? {
        let index = index_of(&ZnSequence::new(modulus, t.iter().map(|&x| x as i64)))?.value;
        let mut row = vec![prime.to_string()];
        row.extend(t.iter().map(u32::to_string));
        row.push(index.to_string());
        table.rows.push(row);
    }
    let mut outcome = Outcome::of(&report)?;
    outcome.table = Some(table);
    Ok(outcome)
}

fn extremal_args(p: &Params) -> Result<(u32, Option<usize>, String, Option<u64>)> {
    let strategy = p.text(Arg::Strategy).unwrap_or("unit-reduced").to_string();
    let budget = p
        .opt_int(Arg::Budget)
        .map(|b| u64::try_from(b).map_err(|_| Error::invalid("budget must be non-negative")))
        .transpose()?;
    Ok((
        p.u32(Arg::N)?,
        p.opt_u32(Arg::Cap)?.map(|c| c as usize),
        strategy,
        budget,
    ))
}

fn run_extremal_t(p: &Params) -> Result<Outcome> {
    let (n, cap, strategy, budget) = extremal_args(p)?;
    extremal_outcome(compute_t(n, cap, &strategy, budget)?)
}

fn run_extremal_big_t(p: &Params) -> Result<Outcome> {
    let (n, cap, strategy, budget) = extremal_args(p)?;
    extremal_outcome(compute_t_distinct(n, cap, &strategy, budget)?)
}

fn run_short_zero_sum(p: &Params) -> Result<Outcome> {
    let s = p.sequence()?;
    let found = short_zero_sum(&s)?;
    let outcome = Outcome::of(&json!({ "found": found.is_some(), "subsequence": found }))?;
    Ok(match found {
        Some(subsequence) => outcome.witness(Witness::ZeroSum {
            parent: s,
            subsequence,
        }),
        None => outcome,
    })
}

fn run_length_bound(p: &Params) -> Result<Outcome> {
    let s = p.sequence()?;
    Outcome::of(&eval_length_bound(s.n(), p.u32(Arg::M)?, &s)?)
}

fn run_pair_bound(p: &Params) -> Result<Outcome> {
    Outcome::of(&eval_pair_bound(
        p.u32(Arg::P)?,
        p.u32(Arg::M)?,
        p.u32(Arg::T)?,
        p.u32(Arg::L)?,
        p.u32(Arg::U)?,
    )?)
}

fn run_coprime_bound(p: &Params) -> Result<Outcome> {
    Outcome::of(&eval_coprime_bound(
        p.u32(Arg::P)?,
        p.u32(Arg::M)?,
        p.u32(Arg::T)?,
        p.u32(Arg::U)?,
        p.u32(Arg::W)?,
    )?)
}

fn run_check_small_zero_sums(p: &Params) -> Result<Outcome> {
    Outcome::of(&sweep_small_zero_sums(p.opt_u32(Arg::N)?.unwrap_or(50))?)
}

fn run_check_high_repetition(p: &Params) -> Result<Outcome> {
    Outcome::of(&sweep_high_repetition(p.opt_u32(Arg::N)?.unwrap_or(12))?)
}

fn run_check_farey(p: &Params) -> Result<Outcome> {
    Outcome::of(&sweep_farey(p.opt_u32(Arg::K)?.unwrap_or(60))?)
}

fn run_check_subset_hit(p: &Params) -> Result<Outcome> {
    let seed = p.opt_int(Arg::Seed).map_or(DEFAULT_SEED, |s| s as u64);
    let samples = p.opt_u32(Arg::Samples)?.unwrap_or(200) as usize;
    Outcome::of(&sweep_subset_hit(
        p.opt_u32(Arg::N)?.unwrap_or(10),
        samples,
        seed,
    )?)
}

fn run_strategies(_: &Params) -> Result<Outcome> {
    let list: BTreeMap<&str, &str> = strategies().iter().map(|(k, s)| (*k, s.about())).collect();
    Outcome::of(&list)
}

use Arg::*;

fn builtins() -> Vec<Op> {
    macro_rules! op {
        ($name:literal, $about:literal, [$($need:expr),*], $run:expr) => {
            op!($name, $about, [$($need),*], $run, false)
        };
        ($name:literal, $about:literal, [$($need:expr),*], $run:expr, $tabular:expr) => {
            {
                const ARGS: &[Need] = &[$($need),*];
                Op { name: $name, about: $about, args: ARGS, tabular: $tabular, run: $run }
            }
        };
    }
    vec![
        op!(
            "index",
            "Index(S): least normalized sum over units",
            [req(Sequence)],
            run_index
        ),
        op!(
            "sum-index",
            "normalized subsequence sums in [1, n]",
            [req(Sequence)],
            run_sum_index
        ),
        op!(
            "big-m",
            "largest t with [1, t] covered by subsequence sums",
            [req(Sequence)],
            run_big_m
        ),
        op!(
            "little-m",
            "largest big-m over unit rescalings (prime n)",
            [req(Sequence)],
            run_little_m
        ),
        op!(
            "find-subseq",
            "search for a subsequence of index n",
            [req(Sequence), opt(LenCap)],
            run_find_subseq
        ),
        op!(
            "lk-check",
            "search for T, m with d | σ(|mT|_n) | n",
            [req(Sequence), req(D)],
            run_lk_check
        ),
        op!(
            "verify-family",
            "check the n = 4k+2 family has no index-n subsequence",
            [req(N), opt(Force)],
            run_verify_family
        ),
        op!(
            "t-lower-bound",
            "lower bound on t(n) from the family",
            [req(N)],
            run_t_lower_bound
        ),
        op!(
            "farey",
            "fractions a/b in [1/k, (k-1)/k] with b ≤ k",
            [req(K)],
            run_farey
        ),
        op!(
            "adjacency",
            "check both adjacency facts for neighbouring fractions",
            [req(K)],
            run_adjacency
        ),
        op!(
            "partition",
            "split a sequence over Z_p into Farey intervals",
            [req(Sequence), req(M)],
            run_partition
        ),
        op!(
            "r-set",
            "terms x with |ix|_p in [1, M] coprime to i",
            [req(Sequence), req(I), req(M)],
            run_r_set
        ),
        op!(
            "subset-hit",
            "subset of coprime residues hitting a target",
            [req(Values), req(N), req(Target)],
            run_subset_hit
        ),
        op!(
            "audit-cases",
            "audit the eight-case bound chain at a prime",
            [req(P), opt(Threshold)],
            run_audit_cases
        ),
        op!(
            "half-set",
            "i in [1, p/2] with |ij|_p < p/2",
            [req(P), req(J)],
            run_half_set
        ),
        op!(
            "obs52",
            "check the half-set complement identity for every j",
            [req(P)],
            run_obs52
        ),
        op!(
            "lemma53",
            "scan half-set sizes against (p-1)/6",
            [req(P)],
            run_lemma53,
            true
        ),
        op!(
            "foursum",
            "index of every minimal zero-sum 4-sequence in Z_p",
            [req(P)],
            run_foursum,
            true
        ),
        op!(
            "extremal-t",
            "search for t(n)",
            [req(N), opt(Cap), opt(Strategy), opt(Budget)],
            run_extremal_t
        ),
        op!(
            "extremal-T",
            "search for T(n) over distinct elements",
            [req(N), opt(Cap), opt(Strategy), opt(Budget)],
            run_extremal_big_t
        ),
        op!(
            "short-zero-sum",
            "shortest zero-sum subsequence of at most h(S) terms",
            [req(Sequence)],
            run_short_zero_sum
        ),
        op!(
            "length-bound",
            "evaluate the length bound via the R_i sets",
            [req(Sequence), req(M)],
            run_length_bound
        ),
        op!(
            "pair-bound",
            "evaluate the pair bound on |R_l|",
            [req(P), req(M), req(T), req(L), req(U)],
            run_pair_bound
        ),
        op!(
            "coprime-bound",
            "evaluate the coprime-run bound on |R_t|",
            [req(P), req(M), req(T), req(U), req(W)],
            run_coprime_bound
        ),
        op!(
            "check-small-zero-sums",
            "minimal zero-sum sequences of length ≤ 3 have index n",
            [opt(N)],
            run_check_small_zero_sums
        ),
        op!(
            "check-high-repetition",
            "length-n sequences with h < 4 or h ≥ n/2",
            [opt(N)],
            run_check_high_repetition
        ),
        op!(
            "check-farey",
            "Farey recurrence and adjacency up to k",
            [opt(K)],
            run_check_farey
        ),
        op!(
            "check-subset-hit",
            "sampled subset-hit against enumeration",
            [opt(N), opt(Samples), opt(Seed)],
            run_check_subset_hit
        ),
        op!(
            "strategies",
            "list extremal search strategies",
            [],
            run_strategies
        ),
    ]
}
