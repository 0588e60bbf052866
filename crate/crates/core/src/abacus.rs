//! Codings of t-cores: H-sets, U-, V- and N-codings.
//!
//! For odd `t` a t-core is determined by its V-coding, a zero-sum vector
//! `(v_0, …, v_{t−1})` with `v_i ≡ i (mod t)`. Two independent routes reach it:
//!
//! - [`phi_v`]: first-column hooks → H-set → residue-wise maxima (U-coding) →
//!   shift by the mean.
//! - [`phi_n`] then [`phi_v_from_n`]: exposed boxes of the extended residue
//!   diagram → N-coding → V-coding.
//!
//! The size of the core and the product `∏(1 − t²/h²)` over its hooks are
//! both recovered from the V-coding alone ([`core_weight_from_v`],
//! [`vandermonde_side`]).

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::partitions::{hook_lengths, is_t_core, Partition};
use crate::series::rat;
use crate::{Error, Rational, Result};

fn require_odd(t: u32) -> Result<()> {
    match t {
        0 => Err(Error::ZeroModulus),
        t if t % 2 == 0 => Err(Error::EvenModulus(t)),
        _ => Ok(()),
    }
}

fn require_core(p: &Partition, t: u32) -> Result<()> {
    if is_t_core(p, t)? {
        Ok(())
    } else {
        Err(Error::NotCore { partition: p.to_string(), t })
    }
}

fn residue(a: i64, t: u32) -> usize {
    a.rem_euclid(i64::from(t)) as usize
}

/// A t-compact set of integers, e.g. the H-set of a t-core.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HSet {
    elements: BTreeSet<i64>,
    t: u32,
}

/// Checks the three closure conditions: `{−1,…,−t} ⊆ A`; every other element
/// is positive and not divisible by `t`; each residue class is closed
/// downwards among positive integers.
pub fn is_t_compact(elements: &BTreeSet<i64>, t: u32) -> bool {
    let t64 = i64::from(t);
    if t == 0 || !(1..=t64).all(|k| elements.contains(&-k)) {
        return false;
    }
    for &a in elements {
        if (-t64..=-1).contains(&a) {
            continue;
        }
        if a < 1 || a % t64 == 0 {
            return false;
        }
        if a - t64 >= 1 && !elements.contains(&(a - t64)) {
            return false;
        }
    }
    true
}

impl HSet {
    pub fn new(elements: BTreeSet<i64>, t: u32) -> Result<Self> {
        require_odd(t)?;
        if !is_t_compact(&elements, t) {
            return Err(Error::InvalidCoding(format!("{elements:?} is not {t}-compact")));
        }
        Ok(Self { elements, t })
    }

    pub fn elements(&self) -> &BTreeSet<i64> {
        &self.elements
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// Elements in decreasing order.
    pub fn descending(&self) -> Vec<i64> {
        self.elements.iter().rev().copied().collect()
    }

    /// `∏_{a ∈ A, a > 0} (1 − t²/a²)`.
    pub fn positive_product(&self) -> Rational {
        let t2 = BigInt::from(self.t).pow(2);
        self.elements
            .iter()
            .filter(|&&a| a > 0)
            .map(|&a| {
                let a2 = BigInt::from(a).pow(2);
                Rational::new(&a2 - &t2, a2)
            })
            .product()
    }

    /// `∏_{a ∈ max_t(A), a ≠ −t} (a + t)/a`.
    pub fn maxima_product(&self) -> Rational {
        let t = i64::from(self.t);
        max_t(self)
            .values()
            .iter()
            .filter(|&&a| a != -t)
            .map(|&a| Rational::new(BigInt::from(a + t), BigInt::from(a)))
            .product()
    }
}

/// Residue-indexed U-coding: `u_0 = −t`, `u_i ≡ i (mod t)`, `u_i > −t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UCoding {
    u: Vec<i64>,
}

impl UCoding {
    pub fn new(u: Vec<i64>) -> Result<Self> {
        let t = u.len() as i64;
        if t == 0 || u[0] != -t {
            return Err(Error::InvalidCoding(format!("{u:?}: u_0 must be -t")));
        }
        for (i, &ui) in u.iter().enumerate().skip(1) {
            if ui <= -t || residue(ui, t as u32) != i {
                return Err(Error::InvalidCoding(format!("{u:?}: bad entry u_{i} = {ui}")));
            }
        }
        if u.iter().sum::<i64>() % t != 0 {
            return Err(Error::InvalidCoding(format!("{u:?}: sum not divisible by t")));
        }
        Ok(Self { u })
    }

    pub fn values(&self) -> &[i64] {
        &self.u
    }

    /// S = Σ u_i.
    pub fn sum(&self) -> i64 {
        self.u.iter().sum()
    }
}

/// Residue-indexed V-coding: `v_i ≡ i (mod t)` and `Σ v_i = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VCoding {
    v: Vec<i64>,
}

impl VCoding {
    pub fn new(v: Vec<i64>) -> Result<Self> {
        let t = v.len() as u32;
        if t == 0 {
            return Err(Error::InvalidCoding("empty V-coding".into()));
        }
        if let Some(i) = (0..v.len()).find(|&i| residue(v[i], t) != i) {
            return Err(Error::InvalidCoding(format!("{v:?}: v_{i} is not ≡ {i} mod {t}")));
        }
        if v.iter().sum::<i64>() != 0 {
            return Err(Error::InvalidCoding(format!("{v:?}: entries must sum to 0")));
        }
        Ok(Self { v })
    }

    /// Places an unordered set of values by residue.
    pub fn from_set(values: impl IntoIterator<Item = i64>, t: u32) -> Result<Self> {
        let mut slots: Vec<Option<i64>> = vec![None; t as usize];
        for a in values {
            let r = residue(a, t);
            if slots[r].replace(a).is_some() {
                return Err(Error::InvalidCoding(format!("two values in residue class {r}")));
            }
        }
        let v = slots
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidCoding("missing residue class".into()))?;
        Self::new(v)
    }

    pub fn values(&self) -> &[i64] {
        &self.v
    }

    pub fn t(&self) -> u32 {
        self.v.len() as u32
    }

    pub fn norm_squared(&self) -> i64 {
        self.v.iter().map(|a| a * a).sum()
    }
}

/// An integer vector with zero sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NCoding {
    n: Vec<i64>,
}

impl NCoding {
    pub fn new(n: Vec<i64>) -> Result<Self> {
        if n.is_empty() || n.iter().sum::<i64>() != 0 {
            return Err(Error::InvalidCoding(format!("{n:?}: N-coding must sum to 0")));
        }
        Ok(Self { n })
    }

    pub fn values(&self) -> &[i64] {
        &self.n
    }

    /// `(t/2)·Σ n_i² + Σ i·n_i`.
    pub fn weight(&self) -> Result<u64> {
        let t = self.n.len() as i64;
        let sq: i64 = self.n.iter().map(|a| a * a).sum();
        let lin: i64 = self.n.iter().enumerate().map(|(i, a)| i as i64 * a).sum();
        let twice = t * sq + 2 * lin;
        if twice < 0 || twice % 2 != 0 {
            return Err(Error::InvalidCoding(format!("{:?} has weight {twice}/2", self.n)));
        }
        Ok((twice / 2) as u64)
    }
}

/// First-column hook lengths `λ_i + ℓ − i` (1-based `i`), decreasing.
fn first_column_hooks(p: &Partition) -> Vec<i64> {
    let len = p.len() as i64;
    p.parts()
        .iter()
        .enumerate()
        .map(|(i, &part)| i64::from(part) + len - (i as i64 + 1))
        .collect()
}

/// H(λ) = first-column hooks ∪ {−1, …, −t}.
pub fn h_set(p: &Partition, t: u32) -> Result<HSet> {
    require_odd(t)?;
    require_core(p, t)?;
    let t64 = i64::from(t);
    let elements = first_column_hooks(p).into_iter().chain((1..=t64).map(|k| -k)).collect();
    HSet::new(elements, t)
}

/// Residue-wise maxima of a t-compact set.
pub fn max_t(a: &HSet) -> UCoding {
    let t = a.t;
    let mut u: Vec<Option<i64>> = vec![None; t as usize];
    for &x in &a.elements {
        let r = residue(x, t);
        u[r] = Some(u[r].map_or(x, |m| m.max(x)));
    }
    let u = u.into_iter().map(|x| x.expect("t-compact sets meet every class")).collect();
    UCoding::new(u).expect("maxima of a t-compact set form a U-coding")
}

/// The U-coding of a t-core (odd t).
pub fn u_coding(p: &Partition, t: u32) -> Result<UCoding> {
    Ok(max_t(&h_set(p, t)?))
}

/// φ_V: the V-coding of a t-core, `{u − S/t : u ∈ U}` placed by residue.
pub fn phi_v(p: &Partition, t: u32) -> Result<VCoding> {
    let u = u_coding(p, t)?;
    let shift = u.sum() / i64::from(t);
    VCoding::from_set(u.values().iter().map(|&x| x - shift), t)
}

/// φ_N: for each label `i`, the largest region holding an exposed box with
/// label `i` in the extended residue diagram. Works for any `t ≥ 1`.
///
/// Row `r` (1-based) ends at content `λ_r − r`; rows past ℓ(λ) end in
/// column 0. Contents strictly decrease down the rows, so the first row seen
/// with a given label carries its maximal region.
pub fn phi_n(p: &Partition, t: u32) -> Result<NCoding> {
    if t == 0 {
        return Err(Error::ZeroModulus);
    }
    require_core(p, t)?;
    let t64 = i64::from(t);
    let mut n: Vec<Option<i64>> = vec![None; t as usize];
    let mut remaining = t as usize;
    let mut row = 1i64;
    while remaining > 0 {
        let content = i64::from(p.part(row as usize - 1)) - row;
        let label = residue(content, t);
        if n[label].is_none() {
            n[label] = Some(content.div_euclid(t64) + 1);
            remaining -= 1;
        }
        row += 1;
    }
    NCoding::new(n.into_iter().map(Option::unwrap).collect())
}

/// Inverse of [`phi_n`]: rebuilds the t-core from its N-coding.
///
/// The exposed-box data determine the U-coding up to the length ℓ:
/// `u = ℓ + t(n_r − 1) + r`, and `min u = −t` fixes ℓ. Each positive maximum
/// then contributes its whole residue chain of first-column hooks.
pub fn phi_n_inverse(n: &NCoding, t: u32) -> Result<Partition> {
    if t == 0 {
        return Err(Error::ZeroModulus);
    }
    if n.values().len() != t as usize {
        return Err(Error::InvalidCoding(format!("N-coding {:?} has length ≠ {t}", n.values())));
    }
    let t64 = i64::from(t);
    let offsets: Vec<i64> = n
        .values()
        .iter()
        .enumerate()
        .map(|(r, &nr)| t64 * (nr - 1) + r as i64)
        .collect();
    let len = -t64 - offsets.iter().min().copied().unwrap_or(0);
    if len < 0 {
        return Err(Error::InvalidCoding(format!("{:?} gives negative length", n.values())));
    }
    let mut hooks: Vec<i64> = Vec::new();
    for &off in &offsets {
        let mut a = off + len;
        while a >= 1 {
            hooks.push(a);
            a -= t64;
        }
    }
    if hooks.len() as i64 != len {
        return Err(Error::InvalidCoding(format!("{:?} is inconsistent", n.values())));
    }
    hooks.sort_unstable_by(|a, b| b.cmp(a));
    let parts: Vec<u32> = hooks
        .iter()
        .enumerate()
        .map(|(i, &h)| (h - (len - 1 - i as i64)) as u32)
        .collect();
    Partition::new(parts)
}

/// φ_V^N: `v_i = t·n_{i+t'} + i` for `i ≤ t'`, `v_i = t·n_{i−t'−1} + i − t` otherwise.
pub fn phi_v_from_n(n: &NCoding, t: u32) -> Result<VCoding> {
    require_odd(t)?;
    let nv = n.values();
    if nv.len() != t as usize {
        return Err(Error::InvalidCoding(format!("N-coding {nv:?} has length ≠ {t}")));
    }
    let t64 = i64::from(t);
    let half = (t as usize - 1) / 2;
    let v = (0..t as usize)
        .map(|i| {
            if i <= half {
                t64 * nv[i + half] + i as i64
            } else {
                t64 * nv[i - half - 1] + i as i64 - t64
            }
        })
        .collect();
    VCoding::new(v)
}

/// Inverse of [`phi_v_from_n`].
pub fn phi_n_from_v(v: &VCoding) -> Result<NCoding> {
    let t = v.t();
    require_odd(t)?;
    let t64 = i64::from(t);
    let half = (t as usize - 1) / 2;
    let mut n = vec![0i64; t as usize];
    for (i, &vi) in v.values().iter().enumerate() {
        if i <= half {
            n[i + half] = (vi - i as i64) / t64;
        } else {
            n[i - half - 1] = (vi - i as i64 + t64) / t64;
        }
    }
    NCoding::new(n)
}

/// φ_V⁻¹ = φ_N⁻¹ ∘ (φ_V^N)⁻¹.
pub fn phi_v_inverse(v: &VCoding, t: u32) -> Result<Partition> {
    require_odd(t)?;
    if v.t() != t {
        return Err(Error::InvalidCoding(format!("{:?} is not a V-coding for t = {t}", v.values())));
    }
    phi_n_inverse(&phi_n_from_v(v)?, t)
}

/// `(Σ v_i²)/(2t) − (t² − 1)/24`, required to be a non-negative integer.
pub fn core_weight_from_v(v: &VCoding, t: u32) -> Result<u64> {
    require_odd(t)?;
    if v.t() != t {
        return Err(Error::InvalidCoding(format!("{:?} has length ≠ {t}", v.values())));
    }
    let t = i64::from(t);
    let w = Rational::new(BigInt::from(v.norm_squared()), BigInt::from(2 * t))
        - Rational::new(BigInt::from(t * t - 1), BigInt::from(24));
    if !w.is_integer() || w.is_negative() {
        return Err(Error::InvalidCoding(format!("{:?} has weight {w}", v.values())));
    }
    u64::try_from(w.to_integer()).map_err(|e| Error::Internal(e.to_string()))
}

/// `∏_{v ∈ λ} (1 − t²/h_v²)` over all boxes of a t-core.
pub fn core_hook_product(p: &Partition, t: u32) -> Result<Rational> {
    require_odd(t)?;
    require_core(p, t)?;
    Ok(hook_product_one_minus(p, &rat(i64::from(t) * i64::from(t))))
}

/// `∏_{v ∈ λ} (1 − c/h_v²)` for any partition.
pub fn hook_product_one_minus(p: &Partition, c: &Rational) -> Rational {
    hook_lengths(p)
        .iter()
        .map(|(h, m)| {
            let f = Rational::one() - c / rat(i64::from(h) * i64::from(h));
            num_traits::pow(f, m as usize)
        })
        .product()
}

/// `∏_{i<j} (a_i − a_j)`.
pub fn vandermonde_product(a: &[i64]) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            acc *= BigInt::from(a[i] - a[j]);
        }
    }
    acc
}

/// `c_0 = (−1)^{t'} / (1!·2!⋯(t−1)!)` with `t = 2t' + 1`.
pub fn macdonald_constant(t: u32) -> Result<Rational> {
    require_odd(t)?;
    let mut denom = BigInt::one();
    let mut fact = BigInt::one();
    for k in 1..t {
        fact *= BigInt::from(k);
        denom *= &fact;
    }
    let sign = if ((t - 1) / 2) % 2 == 0 { 1 } else { -1 };
    Ok(Rational::new(BigInt::from(sign), denom))
}

/// `c_0 · ∏_{i<j} (v_i − v_j)`.
pub fn vandermonde_side(v: &VCoding, t: u32) -> Result<Rational> {
    let c0 = macdonald_constant(t)?;
    Ok(c0 * Rational::from_integer(vandermonde_product(v.values())))
}

/// All V-codings for odd `t` with `Σ v_i² ≤ max_norm`, in lexicographic order.
pub fn enumerate_v_codings(t: u32, max_norm: i64) -> Result<Vec<VCoding>> {
    require_odd(t)?;
    let t64 = i64::from(t);
    let bound = (max_norm as f64).sqrt() as i64 + 1;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(t as usize);
    fn rec(
        i: i64,
        t: i64,
        bound: i64,
        budget: i64,
        sum: i64,
        current: &mut Vec<i64>,
        out: &mut Vec<VCoding>,
    ) {
        if i == t {
            if sum == 0 {
                out.push(VCoding { v: current.clone() });
            }
            return;
        }
        // smallest value ≡ i (mod t) that is ≥ −bound
        let mut a = -bound + (i + bound).rem_euclid(t);
        while a <= bound {
            let sq = a * a;
            if sq <= budget {
                current.push(a);
                rec(i + 1, t, bound, budget - sq, sum + a, current, out);
                current.pop();
            }
            a += t;
        }
    }
    rec(0, t64, bound, max_norm, 0, &mut current, &mut out);
    Ok(out)
}
