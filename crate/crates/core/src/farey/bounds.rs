//! Exact evaluators for the length bound on a sequence and the two bounds
//! on `|R_t|`.
//!
//! Each evaluator separates its hypothesis window from the value of its
//! right-hand side, so the case audit can compose raw values while still
//! recording which windows failed.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use super::partition::r_set;
use super::Q;
use crate::error::{Error, Result};
use crate::zn::{euler_phi, is_prime, ZnSequence};

pub(crate) fn ratio_str<S: Serializer>(
    q: &Q,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// `lhs ≤ rhs`
    Le,
    /// `lhs < rhs`
    Lt,
    /// `lhs = rhs`
    Eq,
}

/// One inequality (or identity) with both sides evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEvaluation {
    pub name: String,
    #[serde(serialize_with = "ratio_str")]
    pub lhs: Q,
    #[serde(serialize_with = "ratio_str")]
    pub rhs: Q,
    pub relation: Relation,
    pub holds: bool,
    pub parameters: BTreeMap<String, String>,
}

impl BoundEvaluation {
    pub fn new(name: impl Into<String>, lhs: Q, rhs: Q, relation: Relation) -> Self {
        let holds = match relation {
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Eq => lhs == rhs,
        };
        BoundEvaluation {
            name: name.into(),
            lhs,
            rhs,
            relation,
            holds,
            parameters: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }
}

fn q(x: i64) -> Q {
    Q::from_integer(x)
}

/// `Σ_{i=2}^k φ(i)(i-1)`: the contribution of the even-indexed parts.
pub fn gap_parts_total(k: u32) -> i64 {
    (2..=k as u64)
        .map(|i| (euler_phi(i) * (i - 1)) as i64)
        .sum()
}

/// Failed preconditions of the length bound for a given `k`:
/// `4 ≤ M ≤ (p-3)/2` and `max{(p-M-2)/M, (p-M)/(M+1)} ≤ k ≤ (p+1)/M`.
pub fn length_bound_window(p: i64, m: i64, k: i64) -> Vec<String> {
    let mut failed = Vec::new();
    if m < 4 {
        failed.push(format!("M={m} < 4"));
    }
    if 2 * m > p - 3 {
        failed.push(format!("M={m} > (p-3)/2"));
    }
    if m > 0 {
        if Q::new(p - m - 2, m) > q(k) {
            failed.push(format!("k={k} < (p-M-2)/M"));
        }
        if Q::new(p - m, m + 1) > q(k) {
            failed.push(format!("k={k} < (p-M)/(M+1)"));
        }
        if Q::new(p + 1, m) < q(k) {
            failed.push(format!("k={k} > (p+1)/M"));
        }
    }
    failed
}

/// `|S| ≤ M + Σ_{i=2}^k φ(i)(i-1) + Σ_{i=2}^k |R_i|` with `k = ⌊p/M⌋`,
/// measured on a concrete sequence.
pub fn eval_length_bound(p: u32, m: u32, s: &ZnSequence) -> Result<BoundEvaluation> {
    if !is_prime(p as u64) || s.n() != p {
        return Err(Error::hypothesis(format!(
            "sequence must live in Z_p for a prime p={p}"
        )));
    }
    if m == 0 {
        return Err(Error::hypothesis("M must be positive"));
    }
    let k = p / m;
    let failed = length_bound_window(p as i64, m as i64, k as i64);
    if !failed.is_empty() {
        return Err(Error::hypothesis(failed.join("; ")));
    }
    let r_total: usize = (2..=k)
        .map(|i| r_set(s, i, m).map(|r| r.len()))
        .sum::<Result<usize>>()?;
    let gap = gap_parts_total(k);
    Ok(BoundEvaluation::new(
        "length bound",
        q(s.len() as i64),
        q(m as i64 + gap + r_total as i64),
        Relation::Le,
    )
    .with("p", p)
    .with("M", m)
    .with("k", k)
    .with("gap_parts", gap)
    .with("r_total", r_total))
}

/// A right-hand side for some `|R_i|`, evaluated exactly, with the
/// parameters that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RBound {
    pub name: String,
    /// index of the bounded set `R_i`
    pub bounds: u32,
    #[serde(serialize_with = "ratio_str")]
    pub rhs: Q,
    pub parameters: BTreeMap<String, i64>,
}

impl RBound {
    /// Compare a measured `|R_i|` against the bound.
    pub fn against(&self, measured: usize) -> BoundEvaluation {
        let mut e = BoundEvaluation::new(
            self.name.clone(),
            q(measured as i64),
            self.rhs,
            Relation::Le,
        );
        for (key, v) in &self.parameters {
            e = e.with(key, v);
        }
        e
    }
}

/// Window of the pair bound: `2 ≤ t < ℓ < k`, `d = gcd(t, ℓ) < t`,
/// `2 ≤ u ≤ M` and `((t-d)p - ℓ)/(tℓ) ≤ M ≤ dp/ℓ - t(u-1)`.
pub fn pair_bound_window(p: i64, m: i64, k: i64, t: i64, l: i64, u: i64) -> Vec<String> {
    let mut failed = Vec::new();
    if !(2 <= t && t < l && l < k) {
        failed.push(format!("need 2 ≤ t={t} < ℓ={l} < k={k}"));
    }
    let d = t.gcd(&l);
    if d >= t {
        failed.push(format!("gcd(t, ℓ)={d} is not below t={t}"));
    }
    if !(2 <= u && u <= m) {
        failed.push(format!("need 2 ≤ u={u} ≤ M={m}"));
    }
    if t > 0 && l > 0 {
        if Q::new((t - d) * p - l, t * l) > q(m) {
            failed.push(format!("M={m} < ((t-d)p-ℓ)/(tℓ)"));
        }
        if Q::new(d * p, l) - q(t * (u - 1)) < q(m) {
            failed.push(format!("M={m} > dp/ℓ - t(u-1)"));
        }
    }
    failed
}

/// `(p - ℓM - 2ℓ + 1)/u + 2ℓ - 1`.
pub fn pair_bound_rhs(p: i64, m: i64, l: i64, u: i64) -> Q {
    Q::new(p - l * m - 2 * l + 1, u) + q(2 * l - 1)
}

/// Either `R_t` is empty or `|R_ℓ|` is at most [`pair_bound_rhs`]; `k` is
/// taken as `⌊p/M⌋`.
pub fn eval_pair_bound(p: u32, m: u32, t: u32, l: u32, u: u32) -> Result<RBound> {
    if m == 0 {
        return Err(Error::hypothesis("M must be positive"));
    }
    let (p, m, t, l, u) = (p as i64, m as i64, t as i64, l as i64, u as i64);
    let k = p / m;
    let failed = pair_bound_window(p, m, k, t, l, u);
    if !failed.is_empty() {
        return Err(Error::hypothesis(failed.join("; ")));
    }
    Ok(RBound {
        name: "pair bound".into(),
        bounds: l as u32,
        rhs: pair_bound_rhs(p, m, l, u),
        parameters: BTreeMap::from([
            ("p".into(), p),
            ("M".into(), m),
            ("k".into(), k),
            ("t".into(), t),
            ("l".into(), l),
            ("u".into(), u),
        ]),
    })
}

/// The first `count` positive integers coprime to `t`.
pub fn coprime_run(t: u32, count: usize) -> Vec<i64> {
    (1i64..)
        .filter(|a| a.gcd(&(t as i64)) == 1)
        .take(count)
        .collect()
}

/// `(t + Σ_{i=2}^u a_i, a_{u+1})` for the coprime run of `t`.
fn coprime_weights(t: u32, u: u32) -> (i64, i64) {
    let run = coprime_run(t, u as usize + 1);
    let head: i64 = run.iter().skip(1).take(u.saturating_sub(1) as usize).sum();
    (t as i64 + head, run[u as usize])
}

/// Window of the coprime-run bound: `t ∈ [2, k]` and
/// `M ≤ (p - 2t + w·a_{u+1} + 2)/(t + Σ_{i=2}^u a_i)`.
pub fn coprime_bound_window(p: i64, m: i64, k: i64, t: u32, u: u32, w: i64) -> Vec<String> {
    let mut failed = Vec::new();
    let ti = t as i64;
    if !(2 <= ti && ti <= k) {
        failed.push(format!("need 2 ≤ t={t} ≤ k={k}"));
    }
    if t >= 1 {
        let (coef, next) = coprime_weights(t, u);
        if Q::new(p - 2 * ti + w * next + 2, coef) < q(m) {
            failed.push(format!(
                "M={m} > (p-2t+w·a_(u+1)+2)/(t+Σa_i) for t={t}, u={u}, w={w}"
            ));
        }
    }
    failed
}

/// `(p - (t + Σ_{i=2}^u a_i)M - 2t + 2)/a_{u+1} + δ_u(u-1)M + 2t + w`.
pub fn coprime_bound_rhs(p: i64, m: i64, t: u32, u: u32, w: i64) -> Q {
    let (coef, next) = coprime_weights(t, u);
    let ti = t as i64;
    let delta_term = if u == 0 { 0 } else { (u as i64 - 1) * m };
    Q::new(p - coef * m - 2 * ti + 2, next) + q(delta_term + 2 * ti + w)
}

/// Bound on `|R_t|` from the run of integers coprime to `t`; `k = ⌊p/M⌋`.
pub fn eval_coprime_bound(p: u32, m: u32, t: u32, u: u32, w: u32) -> Result<RBound> {
    if m == 0 || t == 0 {
        return Err(Error::hypothesis("M and t must be positive"));
    }
    let (p, m, w) = (p as i64, m as i64, w as i64);
    let k = p / m;
    let failed = coprime_bound_window(p, m, k, t, u, w);
    if !failed.is_empty() {
        return Err(Error::hypothesis(failed.join("; ")));
    }
    Ok(RBound {
        name: "coprime-run bound".into(),
        bounds: t,
        rhs: coprime_bound_rhs(p, m, t, u, w),
        parameters: BTreeMap::from([
            ("p".into(), p),
            ("M".into(), m),
            ("k".into(), k),
            ("t".into(), t as i64),
            ("u".into(), u as i64),
            ("w".into(), w),
        ]),
    })
}
