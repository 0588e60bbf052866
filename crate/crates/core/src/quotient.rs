//! Binary-word encoding of partitions and the core/quotient bijection.
//!
//! A partition is read along its boundary from the bottom-left corner: each
//! horizontal edge is a `1`, each vertical edge a `0`. Padding with `0`s on
//! the left and `1`s on the right gives a bi-infinite word; the canonical
//! position of the dot balances the `1`s before it against the `0`s after it.
//!
//! Splitting the canonical word into `t` interleaved sections yields the
//! quotient. Sorting each section (all `0`s first) and interleaving again
//! yields the core.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partitions::{is_t_core, HookMultiset, Partition};
use crate::{Error, Result};

/// A bi-infinite 0/1 word, all `0` before `window` and all `1` after it.
///
/// Always stored trimmed (no leading `0`, no trailing `1`) with `offset` the
/// index of `window[0]` relative to the canonical dot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinaryWord {
    window: Vec<bool>,
    offset: i64,
}

impl BinaryWord {
    /// Builds the word represented by `bits` placed at any offset; the
    /// result is trimmed and re-anchored at its canonical dot.
    pub fn new(bits: &[bool]) -> Self {
        let start = bits.iter().position(|&b| b).unwrap_or(bits.len());
        let end = bits.iter().rposition(|&b| !b).map_or(start, |i| (i + 1).max(start));
        let window = bits[start..end].to_vec();
        // In a trimmed word the ones before the dot balance the zeros after it
        // exactly when the dot sits `#zeros` places into the window.
        let zeros = window.iter().filter(|&&b| !b).count() as i64;
        Self { window, offset: -zeros }
    }

    pub fn window(&self) -> &[bool] {
        &self.window
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// `c_i` of the canonical representation.
    pub fn bit_at(&self, i: i64) -> bool {
        let rel = i - self.offset;
        if rel < 0 {
            false
        } else if rel as usize >= self.window.len() {
            true
        } else {
            self.window[rel as usize]
        }
    }

    fn end(&self) -> i64 {
        self.offset + self.window.len() as i64
    }
}

impl fmt::Display for BinaryWord {
    /// `…0001110.011010111…` style, with three padding symbols per side.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lo = self.offset.min(0) - 3;
        let hi = self.end().max(0) + 3;
        f.write_str("…")?;
        for i in lo..hi {
            if i == 0 {
                f.write_str(".")?;
            }
            f.write_str(if self.bit_at(i) { "1" } else { "0" })?;
        }
        f.write_str("…")
    }
}

/// The boundary word of `p`, canonical.
pub fn encode_word(p: &Partition) -> BinaryWord {
    let mut bits = Vec::with_capacity(p.part(0) as usize + p.len());
    for i in (0..p.len()).rev() {
        let step = p.part(i) - p.part(i + 1);
        bits.extend(std::iter::repeat_n(true, step as usize));
        bits.push(false);
    }
    BinaryWord::new(&bits)
}

/// Each `0` is a row whose length is the number of `1`s before it.
fn decode_bits(bits: &[bool]) -> Partition {
    let mut ones = 0u32;
    let mut parts = Vec::new();
    for &b in bits {
        if b {
            ones += 1;
        } else if ones > 0 {
            parts.push(ones);
        }
    }
    parts.reverse();
    Partition::new(parts).expect("boundary rows are weakly decreasing")
}

pub fn decode_word(w: &BinaryWord) -> Partition {
    decode_bits(&w.window)
}

/// Multiset `{j − i : i < j, c_i = 1, c_j = 0}`; equals the hook lengths.
pub fn word_hooks(w: &BinaryWord) -> HookMultiset {
    let mut out = HookMultiset::default();
    for (i, &bi) in w.window.iter().enumerate() {
        if !bi {
            continue;
        }
        for (j, &bj) in w.window.iter().enumerate().skip(i + 1) {
            if !bj {
                out.insert((j - i) as u32);
            }
        }
    }
    out
}

/// A t-core together with its t-quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreQuotient {
    pub core: Partition,
    pub quotient: Vec<Partition>,
    pub t: u32,
}

impl CoreQuotient {
    /// `|μ| + t·Σ|λ^k|`.
    pub fn weight(&self) -> u64 {
        u64::from(self.core.size())
            + u64::from(self.t) * self.quotient.iter().map(|q| u64::from(q.size())).sum::<u64>()
    }
}

impl fmt::Display for CoreQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; ", self.core)?;
        for (k, q) in self.quotient.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{q}")?;
        }
        Ok(())
    }
}

/// Section `k` of `w`: the bits `c_{it+k}` for the `i` whose positions meet the
/// window, together with the first such `i`.
fn section(w: &BinaryWord, t: i64, k: i64) -> (i64, Vec<bool>) {
    let lo = (w.offset - k).div_euclid(t) + i64::from((w.offset - k).rem_euclid(t) != 0);
    let hi = (w.end() - 1 - k).div_euclid(t);
    let bits = (lo..=hi).map(|i| w.bit_at(i * t + k)).collect();
    (lo, bits)
}

/// Interleaves `t` bit functions: `c_{it+k} = f(k, i)` on `[lo, hi)`.
fn interleave(lo: i64, hi: i64, t: i64, f: impl Fn(i64, i64) -> bool) -> Vec<bool> {
    (lo..hi).map(|pos| f(pos.rem_euclid(t), pos.div_euclid(t))).collect()
}

/// λ ↦ (μ; λ⁰, …, λ^{t−1}).
pub fn decompose(p: &Partition, t: u32) -> Result<CoreQuotient> {
    if t == 0 {
        return Err(Error::ZeroModulus);
    }
    let t64 = i64::from(t);
    let w = encode_word(p);
    let mut quotient = Vec::with_capacity(t as usize);
    let mut boundaries = Vec::with_capacity(t as usize);
    for k in 0..t64 {
        let (lo, bits) = section(&w, t64, k);
        quotient.push(decode_bits(&bits));
        // sorted section: zeros before `lo + #zeros`, ones from there on
        boundaries.push(lo + bits.iter().filter(|&&b| !b).count() as i64);
    }
    let lo = (boundaries.iter().min().copied().unwrap_or(0) - 1) * t64;
    let hi = (boundaries.iter().max().copied().unwrap_or(0) + 1) * t64;
    let core_bits = interleave(lo, hi, t64, |k, i| i >= boundaries[k as usize]);
    let core = decode_bits(&core_bits);
    Ok(CoreQuotient { core, quotient, t })
}

/// (μ; λ⁰, …, λ^{t−1}) ↦ λ.
pub fn compose(cq: &CoreQuotient) -> Result<Partition> {
    let t = cq.t;
    if t == 0 {
        return Err(Error::ZeroModulus);
    }
    if cq.quotient.len() != t as usize {
        return Err(Error::InvalidCoding(format!(
            "quotient has {} entries, expected {t}",
            cq.quotient.len()
        )));
    }
    if !is_t_core(&cq.core, t)? {
        return Err(Error::NotCore { partition: cq.core.to_string(), t });
    }
    let t64 = i64::from(t);
    let mu = encode_word(&cq.core);
    // a core has sorted sections; b_k is where section k turns to ones
    let boundaries: Vec<i64> = (0..t64)
        .map(|k| {
            let (lo, bits) = section(&mu, t64, k);
            lo + bits.iter().filter(|&&b| !b).count() as i64
        })
        .collect();
    let words: Vec<BinaryWord> = cq.quotient.iter().map(encode_word).collect();
    let span = words.iter().map(|w| w.window.len() as i64).max().unwrap_or(0) + 1;
    let lo = (boundaries.iter().min().copied().unwrap_or(0) - span) * t64;
    let hi = (boundaries.iter().max().copied().unwrap_or(0) + span) * t64;
    let bits = interleave(lo, hi, t64, |k, i| {
        words[k as usize].bit_at(i - boundaries[k as usize])
    });
    Ok(decode_bits(&bits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_partitions, hook_lengths, hook_lengths_mod_t};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn worked_word() {
        let w = encode_word(&p(&[6, 5, 3, 3]));
        assert_eq!(w.window(), bits("1110011010").as_slice());
        assert_eq!(w.offset(), -4);
        assert_eq!(w.to_string(), "…0001110.011010111…");
        assert_eq!(decode_word(&w), p(&[6, 5, 3, 3]));
        let empty = encode_word(&Partition::empty());
        assert!(empty.window().is_empty());
        assert_eq!(empty.to_string(), "…000.111…");
        assert_eq!(decode_word(&empty), Partition::empty());
    }

    #[test]
    fn padding_and_shift_do_not_matter() {
        let w = BinaryWord::new(&bits("0001110011010111"));
        assert_eq!(w, encode_word(&p(&[6, 5, 3, 3])));
        assert_eq!(BinaryWord::new(&bits("0011")), encode_word(&Partition::empty()));
        assert_eq!(BinaryWord::new(&[]), encode_word(&Partition::empty()));
    }

    #[test]
    fn worked_decomposition() {
        let lambda = p(&[6, 5, 3, 3]);
        let cq = decompose(&lambda, 2).unwrap();
        assert_eq!(cq.core, p(&[2, 1]));
        // section 0 is …00110111…, a single row of two boxes with hooks {2, 1}
        assert_eq!(cq.quotient, vec![p(&[2]), p(&[2, 2, 1])]);
        assert_eq!(cq.weight(), 17);
        assert_eq!(compose(&cq).unwrap(), lambda);
        let halved: HookMultiset = hook_lengths_mod_t(&lambda, 2).unwrap().iter().map(|(h, m)| (h / 2, m)).flat_map(|(h, m)| std::iter::repeat_n(h, m as usize)).collect();
        let union = hook_lengths(&p(&[2])).union(&hook_lengths(&p(&[2, 2, 1])));
        assert_eq!(halved, union);
    }

    #[test]
    fn degenerate_moduli() {
        let lambda = p(&[4, 2, 1]);
        let one = decompose(&lambda, 1).unwrap();
        assert_eq!(one.core, Partition::empty());
        assert_eq!(one.quotient, vec![lambda.clone()]);
        assert_eq!(decompose(&lambda, 0), Err(Error::ZeroModulus));
        let trivial = CoreQuotient { core: Partition::empty(), quotient: vec![Partition::empty(); 3], t: 3 };
        assert_eq!(compose(&trivial).unwrap(), Partition::empty());
        let bad = CoreQuotient { core: p(&[2]), quotient: vec![Partition::empty(); 2], t: 2 };
        assert!(matches!(compose(&bad), Err(Error::NotCore { .. })));
        let short = CoreQuotient { core: Partition::empty(), quotient: vec![], t: 2 };
        assert!(compose(&short).is_err());
    }

    #[test]
    fn word_round_trip_and_hooks() {
        for n in 0..=12 {
            for lambda in enumerate_partitions(n) {
                let w = encode_word(&lambda);
                assert_eq!(decode_word(&w), lambda);
                assert_eq!(word_hooks(&w), hook_lengths(&lambda));
            }
        }
    }

    #[test]
    fn cores_are_fixed_points() {
        for n in 0..=10 {
            for lambda in enumerate_partitions(n) {
                for t in 1..=4 {
                    let cq = decompose(&lambda, t).unwrap();
                    assert_eq!(cq.core == lambda, is_t_core(&lambda, t).unwrap());
                    assert_eq!(compose(&cq).unwrap(), lambda);
                }
            }
        }
    }
}
