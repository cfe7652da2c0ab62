//! Subset-sum dynamic programming over small integer ranges.
//!
//! Sums live either in `[0, cap]` (anything larger is dropped) or in Z_n.
//! Reachability is a bitset per cardinality layer. With [`CountRule::Any`]
//! there is a single layer holding every achievable sum regardless of how
//! many items were used; otherwise layer `c` holds the sums of exactly `c`
//! items.
//!
//! Witness extraction walks a suffix table and picks, position by position,
//! the earliest item that still admits a completion. Since callers order the
//! items by their tie-break key, this yields the lexicographically least
//! index list (a proper prefix counts as smaller).

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum SumSpace {
    /// Integer sums in `[0, cap]`.
    Capped(u32),
    /// Residues mod n.
    Modular(u32),
}

impl SumSpace {
    fn bits(self) -> usize {
        match self {
            SumSpace::Capped(cap) => cap as usize + 1,
            SumSpace::Modular(n) => n as usize,
        }
    }

    fn words(self) -> usize {
        self.bits().div_ceil(64)
    }

    /// What the rest of the subset must contribute after choosing `w`, or
    /// `None` if choosing `w` overshoots.
    fn remainder(self, target: u32, w: u32) -> Option<u32> {
        match self {
            SumSpace::Capped(_) => target.checked_sub(w),
            SumSpace::Modular(n) => {
                Some(((target as u64 + n as u64 - (w % n) as u64) % n as u64) as u32)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum CountRule {
    Any,
    AtMost(usize),
    Exactly(usize),
}

impl CountRule {
    fn max_layer(self, items: usize) -> Option<usize> {
        match self {
            CountRule::Any => None,
            CountRule::AtMost(c) | CountRule::Exactly(c) => Some(c.min(items)),
        }
    }

    fn admits(self, count: usize) -> bool {
        match self {
            CountRule::Any => true,
            CountRule::AtMost(c) => count <= c,
            CountRule::Exactly(c) => count == c,
        }
    }
}

#[inline]
fn test_bit(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
fn set_bit(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn mask_tail(bits: &mut [u64], nbits: usize) {
    let rem = nbits % 64;
    if rem != 0 {
        if let Some(last) = bits.last_mut() {
            *last &= (1u64 << rem) - 1;
        }
    }
}

/// `dst |= src << shift`, truncated to `nbits`.
fn shl_or(dst: &mut [u64], src: &[u64], shift: usize, nbits: usize) {
    let words = dst.len();
    let ws = shift / 64;
    let bs = shift % 64;
    if ws >= words {
        return;
    }
    for i in (ws..words).rev() {
        let j = i - ws;
        let mut v = src[j] << bs;
        if bs > 0 && j > 0 {
            v |= src[j - 1] >> (64 - bs);
        }
        dst[i] |= v;
    }
    mask_tail(dst, nbits);
}

/// `dst |= src >> shift`.
fn shr_or(dst: &mut [u64], src: &[u64], shift: usize) {
    let words = dst.len();
    let ws = shift / 64;
    let bs = shift % 64;
    for (i, d) in dst.iter_mut().enumerate().take(words.saturating_sub(ws)) {
        let j = i + ws;
        let mut v = src[j] >> bs;
        if bs > 0 && j + 1 < words {
            v |= src[j + 1] << (64 - bs);
        }
        *d |= v;
    }
}

/// `dst |= src + w` in the given sum space.
fn add_or(space: SumSpace, dst: &mut [u64], src: &[u64], w: u32) {
    match space {
        SumSpace::Capped(cap) => {
            if w <= cap {
                shl_or(dst, src, w as usize, cap as usize + 1);
            }
        }
        SumSpace::Modular(n) => {
            let s = (w % n) as usize;
            let n = n as usize;
            if s == 0 {
                for (d, v) in dst.iter_mut().zip(src) {
                    *d |= v;
                }
            } else {
                shl_or(dst, src, s, n);
                shr_or(dst, src, n - s);
            }
        }
    }
}

/// Forward reachability with early exit once `target` becomes reachable
/// under `rule`. The verdict-only path of every search.
pub(crate) fn reaches(space: SumSpace, weights: &[u32], rule: CountRule, target: u32) -> bool {
    let words = space.words();
    let layers = rule.max_layer(weights.len()).map_or(1, |c| c + 1);
    let mut data = vec![0u64; layers * words];
    set_bit(&mut data[..words], 0);
    let hit = |data: &[u64]| -> bool {
        (0..layers).any(|c| {
            let count_ok = match rule {
                CountRule::Any => true,
                _ => c >= 1 && rule.admits(c),
            };
            count_ok && test_bit(&data[c * words..(c + 1) * words], target as usize)
        })
    };
    if matches!(rule, CountRule::Any) {
        let mut tmp = vec![0u64; words];
        for &w in weights {
            tmp.copy_from_slice(&data);
            add_or(space, &mut data, &tmp, w);
            if target != 0 && hit(&data) {
                return true;
            }
        }
        // target 0 under Any would be the empty set; callers never ask that
        target != 0 && hit(&data)
    } else {
        for (placed, &w) in weights.iter().enumerate() {
            let top = (placed + 1).min(layers - 1);
            for c in (0..top).rev() {
                let (lo, hi) = data.split_at_mut((c + 1) * words);
                add_or(space, &mut hi[..words], &lo[c * words..], w);
            }
            if hit(&data) {
                return true;
            }
        }
        false
    }
}

/// Reachable sums of all sub-multisets (including the empty one), ignoring
/// cardinality.
pub(crate) fn reachable_sums(space: SumSpace, weights: &[u32]) -> Vec<u32> {
    let words = space.words();
    let mut data = vec![0u64; words];
    let mut tmp = vec![0u64; words];
    set_bit(&mut data, 0);
    for &w in weights {
        tmp.copy_from_slice(&data);
        add_or(space, &mut data, &tmp, w);
    }
    (0..space.bits())
        .filter(|&i| test_bit(&data, i))
        .map(|i| i as u32)
        .collect()
}

/// Reachability of every suffix `items[i..]`, layered by cardinality.
pub(crate) struct SuffixTable {
    space: SumSpace,
    weights: Vec<u32>,
    layers: usize,
    words: usize,
    bounded: bool,
    data: Vec<u64>,
}

impl SuffixTable {
    pub(crate) fn build(space: SumSpace, weights: Vec<u32>, rule: CountRule) -> Self {
        let words = space.words();
        let max_layer = rule.max_layer(weights.len());
        let layers = max_layer.map_or(1, |c| c + 1);
        let len = weights.len();
        let stride = layers * words;
        let mut data = vec![0u64; (len + 1) * stride];
        set_bit(&mut data[len * stride..len * stride + words], 0);
        for i in (0..len).rev() {
            let (head, tail) = data.split_at_mut((i + 1) * stride);
            let next = &tail[..stride];
            let cur = &mut head[i * stride..];
            cur.copy_from_slice(next);
            let w = weights[i];
            if max_layer.is_none() {
                add_or(space, &mut cur[..words], &next[..words], w);
            } else {
                for c in 0..layers - 1 {
                    add_or(
                        space,
                        &mut cur[(c + 1) * words..(c + 2) * words],
                        &next[c * words..(c + 1) * words],
                        w,
                    );
                }
            }
        }
        SuffixTable {
            space,
            weights,
            layers,
            words,
            bounded: max_layer.is_some(),
            data,
        }
    }

    fn layer(&self, i: usize, c: usize) -> &[u64] {
        let start = (i * self.layers + c) * self.words;
        &self.data[start..start + self.words]
    }

    /// Is `value` the sum of some `c` items of `items[i..]` with
    /// `c_lo ≤ c ≤ c_hi`? Unbounded tables ignore the count range.
    fn suffix_has(&self, i: usize, value: u32, c_lo: usize, c_hi: usize) -> bool {
        if !self.bounded {
            return test_bit(self.layer(i, 0), value as usize);
        }
        (c_lo..=c_hi.min(self.layers - 1)).any(|c| test_bit(self.layer(i, c), value as usize))
    }

    /// Can a nonempty subset obeying `rule` reach `target`?
    pub(crate) fn contains(&self, target: u32, rule: CountRule) -> bool {
        if !self.bounded {
            return target != 0 && self.suffix_has(0, target, 0, 0);
        }
        (1..self.layers).any(|c| rule.admits(c) && test_bit(self.layer(0, c), target as usize))
    }

    /// Lexicographically least index list (ascending) whose weights reach
    /// `target` under `rule`. The table must have been built with a rule at
    /// least as permissive as `rule`.
    pub(crate) fn lex_min(&self, target: u32, rule: CountRule) -> Option<Vec<usize>> {
        if !self.contains(target, rule) {
            return None;
        }
        let len = self.weights.len();
        let mut picked = Vec::new();
        let mut rem = target;
        let mut pos = 0;
        loop {
            let step = (pos..len).find_map(|i| {
                let rest = self.space.remainder(rem, self.weights[i])?;
                let used = picked.len() + 1;
                if rest == 0 && rule.admits(used) {
                    return Some((i, None));
                }
                let cont = match rule {
                    CountRule::Any => rest != 0 && self.suffix_has(i + 1, rest, 0, 0),
                    CountRule::AtMost(c) => c > used && self.suffix_has(i + 1, rest, 1, c - used),
                    CountRule::Exactly(c) => {
                        c > used && self.suffix_has(i + 1, rest, c - used, c - used)
                    }
                };
                cont.then_some((i, Some(rest)))
            });
            // `None` is unreachable when `contains` held; kept total for safety
            let (i, rest) = step?;
            picked.push(i);
            match rest {
                None => return Some(picked),
                Some(rest) => {
                    rem = rest;
                    pos = i + 1;
                }
            }
        }
    }

    /// Smallest nonempty cardinality `c ≤ cap` with `target` reachable.
    pub(crate) fn min_count(&self, target: u32) -> Option<usize> {
        debug_assert!(self.bounded);
        (1..self.layers).find(|&c| test_bit(self.layer(0, c), target as usize))
    }
}
