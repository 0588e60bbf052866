//! Integer partitions, hook lengths and classical counts.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
    size: u32,
}

impl Partition {
    /// Builds a partition, rejecting zero parts and increasing steps.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        let size = parts.iter().sum();
        Ok(Self { parts, size })
    }

    /// Sorts arbitrary positive parts into a partition, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let size = parts.iter().sum();
        Self { parts, size }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |λ|, the sum of the parts.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// ℓ(λ), the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or zero past the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The conjugate partition λ' (columns become rows).
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let mut conj = vec![0u32; width];
        for &p in &self.parts {
            for c in conj.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Self { parts: conj, size: self.size }
    }

    /// Removes the leftmost column: every part shrinks by one.
    pub fn erase_first_column(&self) -> Partition {
        let parts: Vec<u32> = self.parts.iter().filter(|&&p| p > 1).map(|&p| p - 1).collect();
        let size = parts.iter().sum();
        Self { parts, size }
    }

    /// Iterator over the boxes `(row, col)`, both 1-based.
    pub fn boxes(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i as u32 + 1, j)))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses a comma-separated list of parts. The empty string (or `()`) is the
/// empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {:?} in {s:?}", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Iterator over the partitions of `n` in reverse-lexicographic order.
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        let out = Partition::from_unsorted(parts.clone());
        self.current = successor(parts);
        Some(out)
    }
}

fn successor(mut parts: Vec<u32>) -> Option<Vec<u32>> {
    let i = parts.iter().rposition(|&p| p > 1)?;
    let ones = (parts.len() - i - 1) as u32;
    let v = parts[i] - 1;
    parts.truncate(i);
    parts.push(v);
    let mut rem = ones + 1;
    while rem >= v {
        parts.push(v);
        rem -= v;
    }
    if rem > 0 {
        parts.push(rem);
    }
    Some(parts)
}

/// Every partition of `n` exactly once, starting with `(n)` and ending with
/// `(1,…,1)`. For `n = 0` this yields the empty partition only.
pub fn enumerate_partitions(n: u32) -> Partitions {
    let start = if n == 0 { Vec::new() } else { vec![n] };
    Partitions { current: Some(start) }
}

/// Multiset of hook lengths stored as `hook -> multiplicity`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookMultiset {
    counts: BTreeMap<u32, u32>,
}

impl HookMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, h: u32) {
        self.insert_many(h, 1);
    }

    pub fn insert_many(&mut self, h: u32, mult: u32) {
        if mult > 0 {
            *self.counts.entry(h).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, h: u32) -> u32 {
        self.counts.get(&h).copied().unwrap_or(0)
    }

    pub fn contains(&self, h: u32) -> bool {
        self.multiplicity(h) > 0
    }

    /// Total multiplicity.
    pub fn len(&self) -> u32 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `(hook, multiplicity)` pairs in increasing hook order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.counts.iter().map(|(&h, &m)| (h, m))
    }

    /// Every hook repeated by its multiplicity, increasing.
    pub fn to_sorted_vec(&self) -> Vec<u32> {
        self.iter()
            .flat_map(|(h, m)| std::iter::repeat_n(h, m as usize))
            .collect()
    }

    /// Sub-multiset of the hooks divisible by `t`.
    pub fn multiples_of(&self, t: u32) -> HookMultiset {
        let counts = self
            .counts
            .iter()
            .filter(|(&h, _)| h % t == 0)
            .map(|(&h, &m)| (h, m))
            .collect();
        HookMultiset { counts }
    }

    /// Multiset union (multiplicities add).
    pub fn union(&self, other: &HookMultiset) -> HookMultiset {
        let mut out = self.clone();
        for (h, m) in other.iter() {
            out.insert_many(h, m);
        }
        out
    }

    /// Product of all hooks, with multiplicity.
    pub fn product(&self) -> BigUint {
        self.iter()
            .fold(BigUint::one(), |acc, (h, m)| acc * BigUint::from(h).pow(m))
    }
}

impl FromIterator<u32> for HookMultiset {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut ms = HookMultiset::new();
        for h in iter {
            ms.insert(h);
        }
        ms
    }
}

/// ℋ(λ): for box (i,j) the hook is λ_i − j + λ'_j − i + 1.
pub fn hook_lengths(p: &Partition) -> HookMultiset {
    let conj = p.conjugate();
    let mut ms = HookMultiset::new();
    for (i, &row) in p.parts().iter().enumerate() {
        for j in 0..row as usize {
            let arm = row as usize - j - 1;
            let leg = conj.parts()[j] as usize - i - 1;
            ms.insert((arm + leg + 1) as u32);
        }
    }
    ms
}

fn check_modulus(t: u32) -> Result<()> {
    if t == 0 {
        Err(Error::ZeroModulus)
    } else {
        Ok(())
    }
}

/// ℋ_t(λ): the hooks divisible by `t`.
pub fn hook_lengths_mod_t(p: &Partition, t: u32) -> Result<HookMultiset> {
    check_modulus(t)?;
    Ok(hook_lengths(p).multiples_of(t))
}

/// True iff no hook of `p` is divisible by `t`.
pub fn is_t_core(p: &Partition, t: u32) -> Result<bool> {
    check_modulus(t)?;
    Ok(!hook_lengths(p).iter().any(|(h, _)| h % t == 0))
}

/// Number of standard Young tableaux of shape `p`: n! / ∏ h.
pub fn syt_count(p: &Partition) -> Result<BigUint> {
    let n_fact: BigUint = (1..=p.size()).map(BigUint::from).product();
    let denom = hook_lengths(p).product();
    if !(&n_fact % &denom).is_zero() {
        return Err(Error::Internal(format!(
            "hook product {denom} does not divide {}! for {p}",
            p.size()
        )));
    }
    Ok(n_fact / denom)
}

/// c_t(m): the number of t-cores of size `m`, by enumeration.
pub fn count_t_cores(m: u32, t: u32) -> Result<u64> {
    check_modulus(t)?;
    let mut count = 0u64;
    for p in enumerate_partitions(m) {
        if is_t_core(&p, t)? {
            count += 1;
        }
    }
    Ok(count)
}
