//! Coefficient-by-coefficient verification of the hook-length identities.
//!
//! Every verifier builds its left side by brute force over partitions and
//! its right side from Euler products, `exp`/`log` and substitutions, then
//! compares exact coefficients. Mismatches are reported, never panicked on.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::abacus::{
    core_weight_from_v, enumerate_v_codings, hook_product_one_minus, macdonald_constant, phi_v,
    vandermonde_side,
};
use crate::partitions::{
    count_t_cores, enumerate_partitions, hook_lengths, is_t_core, syt_count, HookMultiset, Partition,
};
use crate::series::{
    compose, euler_product_power, euler_product_power_int, exp_series, inverse, partition_series,
    rat, revert, TruncatedSeries,
};
use crate::{Error, Polynomial, Rational, Result, Var};

/// Every identity the crate can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    /// `Σ x^{|λ|} ∏(1 − z/h²) = ∏(1 − x^k)^{z−1}`.
    NekrasovOkounkov,
    /// `Σ x^{|λ|} ∏_{ℋ_t}(y − tyz/h²) = ∏(1−x^{tk})^t / ((1−(yx^t)^k)^{t−z}(1−x^k))`.
    Extension,
    /// `Σ x^{|λ|} y^{#{h = t}} = ∏(1 + (y−1)x^{tk})^t / (1 − x^k)`.
    HookCount,
    /// `z = t²`: `∏(1 − x^k)^{t²−1}`.
    HookSquare,
    /// Generating function of t-cores.
    CoreGeneratingFunction,
    /// `y = 2` in the hook-count identity.
    HookCountTwo,
    /// `z = 2`: `∏(1 − x^k)`, values in `{−1, 0, 1}`.
    PentagonalHook,
    /// `t = 2, z = 2` over even hooks: `∏(1 + x^k)`.
    DistinctPartsHook,
    /// `Σ x^{|λ|} y^{#ℋ_t}`.
    HtSize,
    /// `Σ x^{|λ|} (−1)^{#ℋ_t}`.
    HtParity,
    /// `Σ x^{|λ|} ∏_{ℋ_t}(1 − tz/h²) = ∏(1 − x^{tk})^z / (1 − x^k)`.
    CoreInterpolation,
    /// `tz = 36` over 6-cores for `t ∈ {1, 2, 3, 6}`.
    InterpolationShowcase,
    /// `Σ x^{|λ|} ∏_{ℋ_t} tb/h² = e^{bx^t} ∏(1−x^{tk})^t/(1−x^k)`.
    ExponentialLimit,
    /// `Σ x^{|λ|} Σ_{ℋ_t} 1/h²`.
    InverseSquareSum,
    /// `Σ x^{|λ|} Σ_{h odd} 1/h²`.
    OddInverseSquareSum,
    /// `∏(1 − x^k)^{t²−1}` summed over V-codings.
    Macdonald,
    /// `Σ f_λ² Σ h² = n(3n−1)/2 · n!` and `Σ f_λ² = n!`.
    MarkedHook,
    /// Restricted sums over `λ ⊢ tn + m` with `#ℋ_t(λ) = n`.
    CoreHookSums,
    /// `∏(1 − x^k) = Σ (−1)^m x^{m(3m±1)/2}`.
    Pentagonal,
    /// `∏(1 − x^k)³ = Σ (−1)^m (2m+1) x^{m(m+1)/2}`.
    TripleProduct,
    /// `∏ 1/(1 − x^k) = exp(Σ x^k / (k(1 − x^k)))`.
    ExpLog,
    /// Sign decomposition and positivity of the coefficients of `∏(1 − x^k)^s`.
    Kostant,
    /// Compositional inverse of `x∏(1 − x^k)` and integrality of hook sums.
    EulerReversion,
}

impl IdentityId {
    pub const ALL: [IdentityId; 23] = [
        IdentityId::NekrasovOkounkov,
        IdentityId::Extension,
        IdentityId::HookCount,
        IdentityId::HookSquare,
        IdentityId::CoreGeneratingFunction,
        IdentityId::HookCountTwo,
        IdentityId::PentagonalHook,
        IdentityId::DistinctPartsHook,
        IdentityId::HtSize,
        IdentityId::HtParity,
        IdentityId::CoreInterpolation,
        IdentityId::InterpolationShowcase,
        IdentityId::ExponentialLimit,
        IdentityId::InverseSquareSum,
        IdentityId::OddInverseSquareSum,
        IdentityId::Macdonald,
        IdentityId::MarkedHook,
        IdentityId::CoreHookSums,
        IdentityId::Pentagonal,
        IdentityId::TripleProduct,
        IdentityId::ExpLog,
        IdentityId::Kostant,
        IdentityId::EulerReversion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::NekrasovOkounkov => "nekrasov-okounkov",
            IdentityId::Extension => "extension",
            IdentityId::HookCount => "hook-count",
            IdentityId::HookSquare => "hook-square",
            IdentityId::CoreGeneratingFunction => "core-gf",
            IdentityId::HookCountTwo => "hook-count-two",
            IdentityId::PentagonalHook => "pentagonal-hook",
            IdentityId::DistinctPartsHook => "distinct-parts-hook",
            IdentityId::HtSize => "ht-size",
            IdentityId::HtParity => "ht-parity",
            IdentityId::CoreInterpolation => "core-interpolation",
            IdentityId::InterpolationShowcase => "interpolation-showcase",
            IdentityId::ExponentialLimit => "exponential-limit",
            IdentityId::InverseSquareSum => "inverse-square-sum",
            IdentityId::OddInverseSquareSum => "odd-inverse-square-sum",
            IdentityId::Macdonald => "macdonald",
            IdentityId::MarkedHook => "marked-hook",
            IdentityId::CoreHookSums => "core-hook-sums",
            IdentityId::Pentagonal => "pentagonal",
            IdentityId::TripleProduct => "triple-product",
            IdentityId::ExpLog => "exp-log",
            IdentityId::Kostant => "kostant",
            IdentityId::EulerReversion => "euler-reversion",
        }
    }

    /// Values of `t` checked when none is given.
    pub fn default_ts(self) -> &'static [u32] {
        match self {
            IdentityId::Extension
            | IdentityId::HookCount
            | IdentityId::HookCountTwo
            | IdentityId::HtSize
            | IdentityId::HtParity
            | IdentityId::CoreInterpolation
            | IdentityId::ExponentialLimit
            | IdentityId::InverseSquareSum
            | IdentityId::CoreHookSums => &[1, 2, 3],
            IdentityId::HookSquare | IdentityId::CoreGeneratingFunction => &[2, 3],
            IdentityId::InterpolationShowcase => &[1, 2, 3, 6],
            IdentityId::Macdonald => &[3, 5],
            _ => &[],
        }
    }

    pub fn takes_t(self) -> bool {
        !self.default_ts().is_empty()
    }

    /// Truncation degree (or size bound) used when none is given.
    pub fn default_degree(self) -> usize {
        match self {
            IdentityId::PentagonalHook => 25,
            IdentityId::DistinctPartsHook | IdentityId::ExpLog => 20,
            IdentityId::Pentagonal | IdentityId::TripleProduct => 30,
            IdentityId::MarkedHook => 9,
            IdentityId::CoreHookSums => 6,
            _ => 12,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// The first coefficient (or scalar check) where the two sides differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub degree: usize,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub degree: usize,
    pub verified: bool,
    pub first_mismatch: Option<Mismatch>,
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.verified { "ok" } else { "MISMATCH" };
        write!(f, "{:<30} N={:<3} {status}", self.identity, self.degree)?;
        if let Some(m) = &self.first_mismatch {
            write!(f, " at {}: lhs = {}, rhs = {}", m.degree, m.lhs, m.rhs)?;
        }
        Ok(())
    }
}

/// Collects comparisons and keeps the first failure.
struct Checker {
    label: String,
    degree: usize,
    first: Option<Mismatch>,
}

impl Checker {
    fn new(label: impl Into<String>, degree: usize) -> Self {
        Self { label: label.into(), degree, first: None }
    }

    fn fail(&mut self, degree: usize, lhs: Polynomial, rhs: Polynomial) {
        if self.first.is_none() {
            self.first = Some(Mismatch { degree, lhs, rhs });
        }
    }

    fn equal(&mut self, degree: usize, lhs: &Polynomial, rhs: &Polynomial) {
        if lhs != rhs {
            self.fail(degree, lhs.clone(), rhs.clone());
        }
    }

    fn rational(&mut self, degree: usize, lhs: &Rational, rhs: &Rational) {
        if lhs != rhs {
            self.fail(degree, Polynomial::constant(lhs.clone()), Polynomial::constant(rhs.clone()));
        }
    }

    /// Records `lhs` against `rhs` when `ok` is false (for inequalities and
    /// membership tests).
    fn holds(&mut self, degree: usize, ok: bool, lhs: &Rational, rhs: &Rational) {
        if !ok {
            self.fail(degree, Polynomial::constant(lhs.clone()), Polynomial::constant(rhs.clone()));
        }
    }

    fn series(&mut self, lhs: &TruncatedSeries, rhs: &TruncatedSeries) {
        if lhs.degree() != rhs.degree() {
            self.fail(lhs.degree().min(rhs.degree()), Polynomial::zero(), Polynomial::zero());
            return;
        }
        for (n, (a, b)) in lhs.coeffs().iter().zip(rhs.coeffs()).enumerate() {
            if a != b {
                self.fail(n, a.clone(), b.clone());
                return;
            }
        }
    }

    fn finish(self) -> IdentityReport {
        IdentityReport {
            identity: self.label,
            degree: self.degree,
            verified: self.first.is_none(),
            first_mismatch: self.first,
        }
    }
}

fn label(id: IdentityId, t: Option<u32>) -> String {
    match t {
        Some(t) => format!("{id}[t={t}]"),
        None => id.to_string(),
    }
}

fn rat_frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

fn inv_square(h: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(h) * BigInt::from(h))
}

fn require_t(t: u32) -> Result<()> {
    if t == 0 {
        Err(Error::ZeroModulus)
    } else {
        Ok(())
    }
}

/// Per-partition weights summed by [`lhs_hook_sum`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HookWeight {
    /// `∏_{h ∈ ℋ_t} (1 − c/h²)`.
    OneMinus { t: u32, c: Polynomial },
    /// `∏_{h ∈ ℋ_t} (y − tyz/h²)` with `y, z` symbolic.
    Extension { t: u32 },
    /// `y^{#{h ∈ ℋ : h = t}}`.
    HookCount { t: u32, y: Polynomial },
    /// `y^{#ℋ_t}`.
    HtPower { t: u32, y: Polynomial },
    /// `∏_{h ∈ ℋ_t} tb/h²` with `b` symbolic.
    Scaled { t: u32 },
    /// `Σ_{h ∈ ℋ_t} 1/h²`.
    InverseSquareSum { t: u32 },
    /// `Σ_{h ∈ ℋ, h odd} 1/h²`.
    OddInverseSquareSum,
}

impl HookWeight {
    fn t(&self) -> u32 {
        match self {
            HookWeight::OneMinus { t, .. }
            | HookWeight::Extension { t }
            | HookWeight::HookCount { t, .. }
            | HookWeight::HtPower { t, .. }
            | HookWeight::Scaled { t }
            | HookWeight::InverseSquareSum { t } => *t,
            HookWeight::OddInverseSquareSum => 1,
        }
    }

    /// The weight of a partition with hook multiset `hooks`.
    pub fn weigh(&self, hooks: &HookMultiset) -> Polynomial {
        let t = self.t();
        match self {
            HookWeight::OneMinus { c, .. } => hooks
                .multiples_of(t)
                .iter()
                .map(|(h, m)| {
                    let f = &Polynomial::one() - &c.scale(&inv_square(h));
                    f.pow(m)
                })
                .fold(Polynomial::one(), |acc, f| &acc * &f),
            HookWeight::Extension { .. } => {
                let y = Polynomial::var(Var::Y);
                let tz = Polynomial::var(Var::Z).scale(&rat(i64::from(t)));
                hooks
                    .multiples_of(t)
                    .iter()
                    .map(|(h, m)| {
                        let f = &y * &(&Polynomial::one() - &tz.scale(&inv_square(h)));
                        f.pow(m)
                    })
                    .fold(Polynomial::one(), |acc, f| &acc * &f)
            }
            HookWeight::HookCount { y, .. } => y.pow(hooks.multiplicity(t)),
            HookWeight::HtPower { y, .. } => y.pow(hooks.multiples_of(t).len()),
            HookWeight::Scaled { .. } => {
                let ht = hooks.multiples_of(t);
                let denom: BigInt = ht.iter().map(|(h, m)| BigInt::from(h).pow(2 * m)).product();
                let numer = BigInt::from(t).pow(ht.len());
                let mut e = [0u32; 4];
                e[3] = ht.len();
                Polynomial::monomial(e, Rational::new(numer, denom))
            }
            HookWeight::InverseSquareSum { .. } => Polynomial::constant(
                hooks
                    .multiples_of(t)
                    .iter()
                    .map(|(h, m)| inv_square(h) * rat(i64::from(m)))
                    .sum(),
            ),
            HookWeight::OddInverseSquareSum => Polynomial::constant(
                hooks
                    .iter()
                    .filter(|(h, _)| h % 2 == 1)
                    .map(|(h, m)| inv_square(h) * rat(i64::from(m)))
                    .sum(),
            ),
        }
    }
}

/// `Σ_{n ≤ N} x^n Σ_{λ ⊢ n} weight(λ)` by brute force; degrees run in parallel.
pub fn lhs_hook_sum(degree: usize, weight: &HookWeight) -> Result<TruncatedSeries> {
    require_t(weight.t())?;
    let coeffs: Vec<Polynomial> = (0..=degree)
        .into_par_iter()
        .map(|n| {
            enumerate_partitions(n as u32)
                .map(|p| weight.weigh(&hook_lengths(&p)))
                .fold(Polynomial::zero(), |acc, w| &acc + &w)
        })
        .collect();
    Ok(TruncatedSeries::from_coeffs(degree, coeffs))
}

fn z() -> Polynomial {
    Polynomial::var(Var::Z)
}

fn y() -> Polynomial {
    Polynomial::var(Var::Y)
}

fn mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    a.try_mul(b).expect("equal truncation degrees")
}

/// `∏_{k≥1} (1 + c·x^{step·k})`.
fn binomial_product(degree: usize, step: usize, c: &Polynomial) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(degree);
    for k in 1..=degree / step {
        let factor = TruncatedSeries::one(degree)
            .try_add(&TruncatedSeries::monomial(degree, k * step, c.clone()))
            .expect("equal truncation degrees");
        acc = mul(&acc, &factor);
    }
    acc
}

/// `∏(1 − x^{tk})^t / (1 − x^k)`, the t-core generating function.
fn core_gf(degree: usize, t: u32) -> TruncatedSeries {
    mul(&euler_product_power_int(i64::from(t), degree, t as usize), &partition_series(degree))
}

/// `Σ_{k≥1} c_k x^{step·k} / (1 − x^{step·k})`, expanded term by term.
fn lambert(degree: usize, step: usize, c: impl Fn(usize) -> Rational) -> TruncatedSeries {
    let mut coeffs = vec![Rational::zero(); degree + 1];
    for k in 1..=degree / step {
        let ck = c(k);
        for j in (k * step..=degree).step_by(k * step) {
            coeffs[j] += &ck;
        }
    }
    TruncatedSeries::from_coeffs(degree, coeffs.into_iter().map(Polynomial::constant))
}

/// Right side of the `(y, z)` extension.
pub fn extension_rhs(degree: usize, t: u32) -> TruncatedSeries {
    let t_us = t as usize;
    let s = &z() - &Polynomial::from_int(i64::from(t));
    let inner = euler_product_power(&s, degree / t_us, 1).substitute_monomial(&y(), t_us, degree);
    mul(&core_gf(degree, t), &inner)
}

/// Symbolic `z`, checked to degree `N`; also checks that the coefficient of
/// `x^n` has degree exactly `n` in `z`.
pub fn verify_nekrasov_okounkov(degree: usize) -> Result<IdentityReport> {
    let lhs = lhs_hook_sum(degree, &HookWeight::OneMinus { t: 1, c: z() })?;
    let rhs = euler_product_power(&(&z() - &Polynomial::one()), degree, 1);
    let mut c = Checker::new(label(IdentityId::NekrasovOkounkov, None), degree);
    c.series(&lhs, &rhs);
    for (n, a) in lhs.coeffs().iter().enumerate() {
        if a.degree_in(Var::Z) != Some(n as u32) {
            c.fail(n, a.clone(), Polynomial::monomial([n as u32, 0, 0, 0], Rational::one()));
        }
    }
    Ok(c.finish())
}

/// Symbolic `(y, z)` for one `t`. Also rebuilds the right side by raising
/// the `t = 1` series at `z/t` to the `t`-th power after `x := yx^t`.
pub fn verify_extension_ty(degree: usize, t: u32) -> Result<IdentityReport> {
    require_t(t)?;
    let lhs = lhs_hook_sum(degree, &HookWeight::Extension { t })?;
    let rhs = extension_rhs(degree, t);
    let mut c = Checker::new(label(IdentityId::Extension, Some(t)), degree);
    c.series(&lhs, &rhs);
    let t_us = t as usize;
    let z_over_t = z().scale(&rat_frac(1, i64::from(t)));
    let base = euler_product_power(&(&z_over_t - &Polynomial::one()), degree / t_us, 1)
        .substitute_monomial(&y(), t_us, degree);
    let via_substitution = mul(&core_gf(degree, t), &base.pow_int(i64::from(t))?);
    c.series(&via_substitution, &rhs);
    Ok(c.finish())
}

/// Symbolic `y`.
pub fn verify_hook_t_count(degree: usize, t: u32) -> Result<IdentityReport> {
    require_t(t)?;
    let lhs = lhs_hook_sum(degree, &HookWeight::HookCount { t, y: y() })?;
    let rhs = hook_count_rhs(degree, t, &y());
    let mut c = Checker::new(label(IdentityId::HookCount, Some(t)), degree);
    c.series(&lhs, &rhs);
    Ok(c.finish())
}

fn hook_count_rhs(degree: usize, t: u32, y: &Polynomial) -> TruncatedSeries {
    let b = binomial_product(degree, t as usize, &(y - &Polynomial::one()));
    mul(&b.pow_int(i64::from(t)).expect("non-negative power"), &partition_series(degree))
}

/// `z = t²`.
pub fn verify_hook_square(degree: usize, t: u32) -> Result<IdentityReport> {
    require_t(t)?;
    let t2 = i64::from(t) * i64::from(t);
    let lhs = lhs_hook_sum(degree, &HookWeight::OneMinus { t: 1, c: Polynomial::from_int(t2) })?;
    let rhs = euler_product_power_int(t2 - 1, degree, 1);
    let mut c = Checker::new(label(IdentityId::HookSquare, Some(t)), degree);
    c.series(&lhs, &rhs);
    Ok(c.finish())
}

/// `z = t` with `y` symbolic; the left side must also equal the direct count
/// of t-cores.
pub fn verify_core_gf(degree: usize, t: u32) -> Result<IdentityReport> {
    require_t(t)?;
    let lhs = lhs_hook_sum(degree, &HookWeight::Extension { t })?.evaluate(Var::Z, &rat(i64::from(t)));
    let rhs = core_gf(degree, t);
    let mut c = Checker::new(label(IdentityId::CoreGeneratingFunction, Some(t)), degree);
    c.series(&lhs, &rhs);
    for n in 0..=degree {
        let count = rat(count_t_cores(n as u32, t)? as i64);
        c.equal(n, &Polynomial::constant(count), &rhs.coeffs()[n]);
    }
    Ok(c.finish())
}

/// `y = 2`.
pub fn verify_hook_count_two(degree: usize, t: u32) -> Result<IdentityReport> {
    require_t(t)?;
    let two = Polynomial::from_int(2);
    let lhs = lhs_hook_sum(degree, &HookWeight::HookCount { t, y: two })?;
    let b = binomial_product(degree, t as usize, &Polynomial::one());
    let rhs = mul(&b.pow_int(i64::from(t))?, &partition_series(degree));
    let mut c = Checker::new(label(IdentityId::HookCountTwo, Some(t)), degree);
    c.series(&lhs, &rhs);
    Ok(c.finish())
}

/// `(−1)^m` at generalized pentagonal numbers `m(3m ± 1)/2`, else 0.
fn pentagonal_coefficient(n: usize) -> i64 {
    let n = n as i64;
    for m in 0..=n {
        let a = m * (3 * m - 1) / 2;
        let b = m * (3 * m + 1) / 2;
        if a == n || b == n {
            return if m % 2 == 0 { 1 } else { -1 };
        }
        if a > n {
            break;
        }
    }
    0
}

/// `z = 2`: coefficients in `{−1, 0, 1}` following the pentagonal signs.
pub fn verify_pentagonal_hook(degree: usize) -> Result<IdentityReport> {
    let lhs = lhs_hook_sum(degree, &HookWeight::OneMinus { t: 1, c: Polynomial::from_int(2) })?;
    let rhs = euler_product_power_int(1, degree, 1);
    let mut c = Checker::new(label(IdentityId::PentagonalHook, None), degree);
    c.series(&lhs, &rhs);
    for (n, a) in lhs.coeffs().iter().enumerate() {
        c.equal(n, a, &Polynomial::from_int(pentagonal_coefficient(n)));
    }
    Ok(c.finish())
}

/// `t = 2, z = 2` over even hooks: the number of partitions into distinct parts.
pub fn verify_distinct_parts_hook(degree: usize) -> Result<IdentityReport> {
    let lhs = lhs_hook_sum(degree, &HookWeight::OneMinus { t: 2, c: Polynomial::from_int(2) })?;
    let rhs = binomial_product(degree, 1, &Polynomial::one());
    let mut c = Checker::new(label(IdentityId::DistinctPartsHook, None), degree);
    c.series(&lhs, &rhs);
    for n in 0..=degree {
        let distinct = enumerate_partitions(n as u32)
            .filter(|p| p.parts().windows(2).all(|w| w[0] > w[1]))
            .count() as i64;
        c.equal(n, &lhs.coeffs()[n], &Polynomial::from_int(distinct));
    }
    Ok(c.finish())
}

/// `y^{#ℋ_t}` with `y` symbolic.
pub fn verify_ht_size(degree: usize, t: u32) -> Result<IdentityReport> {
    require_t(t)?;
    let lhs = lhs_hook_sum(degree, &HookWeight::HtPower { t, y: y() })?;
    let t_us = t as usize;
    let inner = euler_product_power_int(-i64::from(t), degree / t_us, 1).substitute_monomial(&y(), t_us, degree);
    let rhs = mul(&core_gf(degree, t), &inner);
    let mut c = Checker::new(label(IdentityId::HtSize, Some(t)), degree);
    c.series(&lhs, &rhs);
    c.series(&lhs, &extension_rhs(degree, t).evaluate(Var::Z, &Rational::zero()));
    Ok(c.finish())
}

/// `(−1)^{#ℋ_t}`, checked against the closed product and against the
/// `t = 1` product substituted at `x := x^t`.
pub fn verify_ht_parity(degree: usize, t: u32) -> Result<IdentityReport> {
    require_t(t)?;
    let ti = i64::from(t);
    let t_us = t as usize;
    let lhs = lhs_hook_sum(degree, &HookWeight::HtPower { t, y: Polynomial::from_int(-1) })?;
    let closed = mul(
        &mul(
            &mul(
                &euler_product_power_int(ti, degree, 4 * t_us),
                &euler_product_power_int(2 * ti, degree, t_us),
            ),
            &euler_product_power_int(-3 * ti, degree, 2 * t_us),
        ),
        &partition_series(degree),
    );
    let mut c = Checker::new(label(IdentityId::HtParity, Some(t)), degree);
    c.series(&lhs, &closed);
    // ∏ 1/(1 − (−x)^k) = ∏ (1 − x^{4k})(1 − x^k)/(1 − x^{2k})³
    let minus_x = TruncatedSeries::monomial(degree, 1, Polynomial::from_int(-1));
    let signed = compose(&partition_series(degree), &minus_x)?;
    let one = mul(
        &mul(&euler_product_power_int(1, degree, 4), &euler_product_power_int(1, degree, 1)),
        &euler_product_power_int(-3, degree, 2),
    );
    c.series(&signed, &one);
    let xt = TruncatedSeries::monomial(degree, t_us, Polynomial::one());
    let substituted = compose(&one, &xt)?.pow_int(ti)?;
    c.series(&lhs, &mul(&core_gf(degree, t), &substituted));
    Ok(c.finish())
}

/// `∏_{ℋ_t}(1 − tz/h²)` with `z` symbolic.
pub fn verify_core_interpolation(degree: usize, t: u32) -> Result<IdentityReport> {
    require_t(t)?;
    let tz = z().scale(&rat(i64::from(t)));
    let lhs = lhs_hook_sum(degree, &HookWeight::OneMinus { t, c: tz })?;
    let rhs = mul(&euler_product_power(&z(), degree, t as usize), &partition_series(degree));
    let mut c = Checker::new(label(IdentityId::CoreInterpolation, Some(t)), degree);
    c.series(&lhs, &rhs);
    c.series(&lhs, &extension_rhs(degree, t).evaluate(Var::Y, &Rational::one()));
    Ok(c.finish())
}

/// `∏_{ℋ_t}(1 − 36/h²) = ∏(1 − x^{tk})^{36/t} / (1 − x^k)` for `t | 36`; only
/// 6-cores contribute.
pub fn verify_interpolation_showcase(degree: usize, t: u32) -> Result<IdentityReport> {
    require_t(t)?;
    let mut c = Checker::new(label(IdentityId::InterpolationShowcase, Some(t)), degree);
    if 36 % t != 0 {
        return Err(Error::InvalidCoding(format!("t = {t} does not divide 36")));
    }
    let lhs = lhs_hook_sum(degree, &HookWeight::OneMinus { t, c: Polynomial::from_int(36) })?;
    let rhs = mul(
        &euler_product_power_int(36 / i64::from(t), degree, t as usize),
        &partition_series(degree),
    );
    c.series(&lhs, &rhs);
    let weight = HookWeight::OneMinus { t, c: Polynomial::from_int(36) };
    for n in 0..=degree {
        let over_cores = enumerate_partitions(n as u32)
            .filter(|p| is_t_core(p, 6).unwrap_or(false))
            .map(|p| weight.weigh(&hook_lengths(&p)))
            .fold(Polynomial::zero(), |acc, w| &acc + &w);
        c.equal(n, &over_cores, &lhs.coeffs()[n]);
    }
    Ok(c.finish())
}

/// `∏_{ℋ_t} tb/h² = e^{bx^t} ∏(1 − x^{tk})^t/(1 − x^k)` with `b` symbolic.
pub fn verify_exponential_limit(degree: usize, t: u32) -> Result<IdentityReport> {
    require_t(t)?;
    let lhs = lhs_hook_sum(degree, &HookWeight::Scaled { t })?;
    let bxt = TruncatedSeries::monomial(degree, t as usize, Polynomial::var(Var::B));
    let rhs = mul(&exp_series(&bxt)?, &core_gf(degree, t));
    let mut c = Checker::new(label(IdentityId::ExponentialLimit, Some(t)), degree);
    c.series(&lhs, &rhs);
    Ok(c.finish())
}

/// `(1/t) · P(x) · Σ_k x^{tk} / (k(1 − x^{tk}))`.
fn inverse_square_rhs(degree: usize, t: u32) -> TruncatedSeries {
    let inner = lambert(degree, t as usize, |k| rat_frac(1, k as i64 * i64::from(t)));
    mul(&partition_series(degree), &inner)
}

/// `Σ_{ℋ_t} 1/h²`; also checks it is the `z`-linear part of the
/// interpolation identity.
pub fn verify_inverse_square_sum(degree: usize, t: u32) -> Result<IdentityReport> {
    require_t(t)?;
    let lhs = lhs_hook_sum(degree, &HookWeight::InverseSquareSum { t })?;
    let rhs = inverse_square_rhs(degree, t);
    let mut c = Checker::new(label(IdentityId::InverseSquareSum, Some(t)), degree);
    c.series(&lhs, &rhs);
    // ∏_{ℋ_t}(1 − tz/h²) has z-coefficient −t Σ 1/h²
    let interp = mul(&euler_product_power(&z(), degree, t as usize), &partition_series(degree));
    let linear = interp.map_coeffs(|a| a.coefficient_of(Var::Z, 1).scale(&rat_frac(-1, i64::from(t))));
    c.series(&linear, &rhs);
    Ok(c.finish())
}

/// `Σ_{h odd} 1/h² = P(x) Σ_k (x^{2k} + 2x^k) / (2k(1 − x^{2k}))`, and equal to
/// the `t = 1` minus `t = 2` inverse-square sums.
pub fn verify_odd_inverse_square_sum(degree: usize) -> Result<IdentityReport> {
    let lhs = lhs_hook_sum(degree, &HookWeight::OddInverseSquareSum)?;
    let mut inner = TruncatedSeries::zero(degree);
    for k in 1..=degree {
        // (x^{2k} + 2x^k) / (2k) · Σ_j x^{2kj}
        let c = rat_frac(1, 2 * k as i64);
        let mut coeffs = vec![Rational::zero(); degree + 1];
        let mut j = 0;
        while k + 2 * k * j <= degree {
            coeffs[k + 2 * k * j] += &c * rat(2);
            if 2 * k + 2 * k * j <= degree {
                coeffs[2 * k + 2 * k * j] += &c;
            }
            j += 1;
        }
        let term = TruncatedSeries::from_coeffs(degree, coeffs.into_iter().map(Polynomial::constant));
        inner = inner.try_add(&term)?;
    }
    let rhs = mul(&partition_series(degree), &inner);
    let mut c = Checker::new(label(IdentityId::OddInverseSquareSum, None), degree);
    c.series(&lhs, &rhs);
    let difference = inverse_square_rhs(degree, 1).try_sub(&inverse_square_rhs(degree, 2))?;
    c.series(&difference, &rhs);
    Ok(c.finish())
}

/// Every specialization at once, with their default `t` values.
pub fn verify_corollaries(degree: usize) -> Result<Vec<IdentityReport>> {
    let ids = [
        IdentityId::HookSquare,
        IdentityId::CoreGeneratingFunction,
        IdentityId::HookCountTwo,
        IdentityId::PentagonalHook,
        IdentityId::DistinctPartsHook,
        IdentityId::HtSize,
        IdentityId::HtParity,
        IdentityId::CoreInterpolation,
        IdentityId::InterpolationShowcase,
        IdentityId::ExponentialLimit,
        IdentityId::InverseSquareSum,
        IdentityId::OddInverseSquareSum,
    ];
    let mut out = Vec::new();
    for id in ids {
        out.extend(verify(id, degree, None)?);
    }
    Ok(out)
}

/// Restricted hook sums over `λ ⊢ tn + m` with exactly `n` hooks divisible
/// by `t`, for `n ≤ n_max` and `m ≤ t`:
///
/// - `Σ ∏_{ℋ_t} 1/h² = c_t(m) / (t^n n!)`;
/// - for `m = 0, n ≥ 1`: `t^{n−1} Σ ∏_{ℋ_t} 1/h² · Σ_{ℋ_t} h² = (3n − 3 + 2t) / (2(n−1)!)`.
pub fn verify_core_hook_sums(n_max: usize, t: u32) -> Result<IdentityReport> {
    require_t(t)?;
    let mut c = Checker::new(label(IdentityId::CoreHookSums, Some(t)), n_max);
    let ti = i64::from(t);
    let mut fact = BigInt::one();
    for n in 0..=n_max {
        if n > 0 {
            fact *= BigInt::from(n);
        }
        let tn = BigInt::from(t).pow(n as u32);
        for m in 0..=t {
            let size = t as usize * n + m as usize;
            let mut sum = Rational::zero();
            let mut marked = Rational::zero();
            for p in enumerate_partitions(size as u32) {
                let ht = hook_lengths(&p).multiples_of(t);
                if ht.len() as usize != n {
                    continue;
                }
                let prod: Rational = ht.iter().map(|(h, k)| num_traits::pow(inv_square(h), k as usize)).product();
                let squares: i64 = ht.iter().map(|(h, k)| i64::from(h) * i64::from(h) * i64::from(k)).sum();
                marked += &prod * rat(squares);
                sum += prod;
            }
            let cores = count_t_cores(m, t)?;
            let expected = Rational::new(BigInt::from(cores), &tn * &fact);
            c.rational(size, &sum, &expected);
            if m == 0 && n >= 1 {
                let lhs = marked * Rational::from_integer(BigInt::from(t).pow(n as u32 - 1));
                let expected = Rational::new(
                    BigInt::from(3 * n as i64 - 3 + 2 * ti),
                    BigInt::from(2) * (&fact / BigInt::from(n)),
                );
                c.rational(size, &lhs, &expected);
            }
        }
    }
    Ok(c.finish())
}

/// `Σ_{λ⊢n} f_λ² Σ h² = n(3n−1)/2 · n!` and `Σ_{λ⊢n} f_λ² = n!` for `n ≤ n_max`.
pub fn verify_marked_hook(n_max: usize) -> Result<IdentityReport> {
    let mut c = Checker::new(label(IdentityId::MarkedHook, None), n_max);
    let mut fact = BigInt::one();
    for n in 0..=n_max {
        if n > 0 {
            fact *= BigInt::from(n);
        }
        let mut squares = BigInt::zero();
        let mut marked = BigInt::zero();
        for p in enumerate_partitions(n as u32) {
            let f = BigInt::from(syt_count(&p)?);
            let f2 = &f * &f;
            let hsq: u64 = hook_lengths(&p).iter().map(|(h, m)| u64::from(h * h) * u64::from(m)).sum();
            marked += &f2 * BigInt::from(hsq);
            squares += f2;
        }
        let n_i = n as i64;
        c.rational(n, &Rational::from_integer(squares), &Rational::from_integer(fact.clone()));
        let expected = Rational::from_integer(&fact * BigInt::from(n_i * (3 * n_i - 1))) / rat(2);
        c.rational(n, &Rational::from_integer(marked), &expected);
    }
    Ok(c.finish())
}

/// `∏(1 − x^k)^{t²−1}` against `Σ c_0 ∏_{i<j}(v_i − v_j) x^{|V|}` over all
/// V-codings, the fractional prefactor cleared by indexing with the core
/// weight. Each coefficient is also matched against the sum of
/// `∏(1 − t²/h²)` over the t-cores of that size, and the lowest term must be 1.
pub fn verify_macdonald_odd(degree: usize, t: u32) -> Result<IdentityReport> {
    let c0 = macdonald_constant(t)?;
    let ti = i64::from(t);
    let bound = 2 * ti * degree as i64 + ti * (ti * ti - 1) / 12;
    let mut rhs = vec![Rational::zero(); degree + 1];
    for v in enumerate_v_codings(t, bound)? {
        let w = core_weight_from_v(&v, t)? as usize;
        if w <= degree {
            rhs[w] += vandermonde_side(&v, t)?;
        }
    }
    let rhs = TruncatedSeries::from_coeffs(degree, rhs.into_iter().map(Polynomial::constant));
    let lhs = euler_product_power_int(ti * ti - 1, degree, 1);
    let mut c = Checker::new(label(IdentityId::Macdonald, Some(t)), degree);
    c.series(&lhs, &rhs);
    let over_cores = lhs_hook_sum(degree, &HookWeight::OneMinus { t: 1, c: Polynomial::from_int(ti * ti) })?;
    c.series(&over_cores, &rhs);
    let minimal = phi_v(&Partition::empty(), t)?;
    let lowest = &c0 * Rational::from_integer(crate::abacus::vandermonde_product(minimal.values()));
    c.rational(0, &lowest, &Rational::one());
    Ok(c.finish())
}

/// `f_k(s)`: the coefficient of `x^k` in `∏(1 − x^n)^s`, `s` symbolic.
pub fn euler_power_coefficient(k: usize) -> Polynomial {
    euler_product_power(&Polynomial::var(Var::S), k, 1).coeffs()[k].clone()
}

/// `W(λ) = ∏_{h ∈ ℋ(λ)} (s + 1 − h²)/h²` for each `λ ⊢ k`; these sum to
/// `(−1)^k f_k(s)`.
pub fn w_decomposition(k: u32) -> Vec<(Partition, Polynomial)> {
    let s = Polynomial::var(Var::S);
    enumerate_partitions(k)
        .map(|p| {
            let w = hook_lengths(&p)
                .iter()
                .map(|(h, m)| {
                    let h2 = i64::from(h) * i64::from(h);
                    s.affine(&rat_frac(1, h2), &rat_frac(1 - h2, h2)).pow(m)
                })
                .fold(Polynomial::one(), |acc, f| &acc * &f);
            (p, w)
        })
        .collect()
}

fn const_value(p: &Polynomial) -> Rational {
    p.as_constant().expect("evaluated polynomial is constant")
}

/// For `k ≤ k_max`: the `W` decomposition of `(−1)^k f_k(s)`; the closed
/// forms of `f_2, f_3, f_4`; `f_3(8) = 0`; `(−1)^k f_k(k² − 1) > 0` for
/// `k ≥ 4`; `(−1)^k f_k(k²) > 0`; and `W(λ) ≥ 0` at `s = k² − 1`.
pub fn kostant_positivity(k_max: usize) -> Result<IdentityReport> {
    let mut c = Checker::new(label(IdentityId::Kostant, None), k_max);
    let series = euler_product_power(&Polynomial::var(Var::S), k_max, 1);
    let s = Polynomial::var(Var::S);
    let lin = |a: i64| s.affine(&Rational::one(), &rat(a));
    let closed = [
        (2, (&s * &lin(-3)).scale(&rat_frac(1, 2))),
        (3, (&(&s * &lin(-1)) * &lin(-8)).scale(&rat_frac(-1, 6))),
        (4, (&(&(&s * &lin(-1)) * &lin(-3)) * &lin(-14)).scale(&rat_frac(1, 24))),
    ];
    for (k, f) in &closed {
        if *k <= k_max {
            c.equal(*k, &series.coeffs()[*k], f);
        }
    }
    if k_max >= 3 {
        let f3 = const_value(&series.coeffs()[3].evaluate(Var::S, &rat(8)));
        c.rational(3, &f3, &Rational::zero());
    }
    for k in 1..=k_max {
        let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
        let signed = series.coeffs()[k].scale(&sign);
        let parts = w_decomposition(k as u32);
        let total = parts.iter().fold(Polynomial::zero(), |acc, (_, w)| &acc + w);
        c.equal(k, &total, &signed);
        let ki = k as i64;
        let at_edge = rat(ki * ki - 1);
        let at_square = rat(ki * ki);
        let v_edge = const_value(&signed.evaluate(Var::S, &at_edge));
        let v_square = const_value(&signed.evaluate(Var::S, &at_square));
        if k >= 4 {
            c.holds(k, v_edge.is_positive(), &v_edge, &Rational::zero());
        }
        c.holds(k, v_square.is_positive(), &v_square, &Rational::zero());
        for (_, w) in &parts {
            let value = const_value(&w.evaluate(Var::S, &at_edge));
            c.holds(k, !value.is_negative(), &value, &Rational::zero());
        }
    }
    Ok(c.finish())
}

/// Both constructions of `y(x)` with `x = y∏(1 − y^k)`, to degree `N`.
pub fn euler_reversion_terms(degree: usize) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let x_euler = mul(&TruncatedSeries::x(degree), &euler_product_power_int(1, degree, 1));
    let reverted = revert(&x_euler)?;
    let mut direct = vec![Rational::zero(); degree + 1];
    for (n, slot) in direct.iter_mut().enumerate().skip(1) {
        let k = rat(n as i64 - 1);
        let sum: Rational = enumerate_partitions(n as u32 - 1)
            .map(|p| hook_product_one_minus(&p, &-k.clone()))
            .sum();
        *slot = sum / rat(n as i64);
    }
    let direct = TruncatedSeries::from_coeffs(degree, direct.into_iter().map(Polynomial::constant));
    Ok((reverted, direct))
}

const REVERSION_HEAD: [i64; 7] = [1, 1, 3, 10, 38, 153, 646];

/// Reversion by Lagrange inversion against the direct hook formula, with
/// positivity, integrality, the known head, `x∏(1 − y^k)` composed back to
/// `x`, and integrality of `Σ_{λ⊢n} ∏(1 + k/h²)` and
/// `(1/(n+1)) Σ_{λ⊢n} ∏(1 + n/h²)` for `n, k ≤ N`.
pub fn verify_euler_reversion(degree: usize) -> Result<IdentityReport> {
    let mut c = Checker::new(label(IdentityId::EulerReversion, None), degree);
    let (reverted, direct) = euler_reversion_terms(degree)?;
    c.series(&reverted, &direct);
    for (n, a) in reverted.coeffs().iter().enumerate().skip(1) {
        let v = const_value(a);
        c.holds(n, v.is_integer() && v.is_positive(), &v, &v.floor());
        if let Some(&head) = REVERSION_HEAD.get(n - 1) {
            c.rational(n, &v, &rat(head));
        }
    }
    let x_euler = mul(&TruncatedSeries::x(degree), &euler_product_power_int(1, degree, 1));
    c.series(&compose(&x_euler, &reverted)?, &TruncatedSeries::x(degree));
    c.series(&compose(&reverted, &x_euler)?, &TruncatedSeries::x(degree));
    for n in 1..=degree {
        let parts: Vec<Partition> = enumerate_partitions(n as u32).collect();
        let hook_sum = |k: i64| -> Rational { parts.iter().map(|p| hook_product_one_minus(p, &rat(-k))).sum() };
        for k in 1..=degree as i64 {
            let v = hook_sum(k);
            let series = euler_product_power_int(-k - 1, n, 1);
            c.holds(n, v.is_integer(), &v, &v.floor());
            c.equal(n, &Polynomial::constant(v), &series.coeffs()[n]);
        }
        let v = hook_sum(n as i64) / rat(n as i64 + 1);
        c.holds(n, v.is_integer(), &v, &v.floor());
    }
    Ok(c.finish())
}

/// `∏(1 − x^k)` against the generalized pentagonal numbers.
pub fn verify_pentagonal(degree: usize) -> IdentityReport {
    let mut c = Checker::new(label(IdentityId::Pentagonal, None), degree);
    let expected = TruncatedSeries::from_coeffs(degree, (0..=degree).map(|n| Polynomial::from_int(pentagonal_coefficient(n))));
    c.series(&euler_product_power_int(1, degree, 1), &expected);
    c.series(&euler_product_power(&Polynomial::one(), degree, 1), &expected);
    c.finish()
}

/// `∏(1 − x^k)³` against `Σ (−1)^m (2m+1) x^{m(m+1)/2}`.
pub fn verify_triple_product(degree: usize) -> IdentityReport {
    let mut c = Checker::new(label(IdentityId::TripleProduct, None), degree);
    let mut coeffs = vec![0i64; degree + 1];
    let mut m = 0usize;
    while m * (m + 1) / 2 <= degree {
        coeffs[m * (m + 1) / 2] = if m % 2 == 0 { 2 * m as i64 + 1 } else { -(2 * m as i64 + 1) };
        m += 1;
    }
    let expected = TruncatedSeries::from_integers(degree, &coeffs);
    c.series(&euler_product_power_int(3, degree, 1), &expected);
    c.series(&euler_product_power(&Polynomial::from_int(3), degree, 1), &expected);
    c.finish()
}

/// `exp(Σ x^k/(k(1 − x^k)))` against the partition numbers counted by enumeration.
pub fn verify_exp_log(degree: usize) -> Result<IdentityReport> {
    let mut c = Checker::new(label(IdentityId::ExpLog, None), degree);
    let inner = lambert(degree, 1, |k| rat_frac(1, k as i64));
    let lhs = exp_series(&inner)?;
    let counts = TruncatedSeries::from_coeffs(
        degree,
        (0..=degree).map(|n| Polynomial::from_int(enumerate_partitions(n as u32).count() as i64)),
    );
    c.series(&lhs, &counts);
    c.series(&partition_series(degree), &counts);
    c.series(&inverse(&euler_product_power_int(1, degree, 1))?, &counts);
    Ok(c.finish())
}

/// Runs one identity for the given `t` values (or its defaults).
pub fn verify(id: IdentityId, degree: usize, t: Option<u32>) -> Result<Vec<IdentityReport>> {
    let ts: Vec<u32> = match t {
        Some(t) if id.takes_t() => vec![t],
        _ => id.default_ts().to_vec(),
    };
    let per_t = |f: &dyn Fn(u32) -> Result<IdentityReport>| -> Result<Vec<IdentityReport>> {
        ts.iter().map(|&t| f(t)).collect()
    };
    match id {
        IdentityId::NekrasovOkounkov => Ok(vec![verify_nekrasov_okounkov(degree)?]),
        IdentityId::Extension => per_t(&|t| verify_extension_ty(degree, t)),
        IdentityId::HookCount => per_t(&|t| verify_hook_t_count(degree, t)),
        IdentityId::HookSquare => per_t(&|t| verify_hook_square(degree, t)),
        IdentityId::CoreGeneratingFunction => per_t(&|t| verify_core_gf(degree, t)),
        IdentityId::HookCountTwo => per_t(&|t| verify_hook_count_two(degree, t)),
        IdentityId::PentagonalHook => Ok(vec![verify_pentagonal_hook(degree)?]),
        IdentityId::DistinctPartsHook => Ok(vec![verify_distinct_parts_hook(degree)?]),
        IdentityId::HtSize => per_t(&|t| verify_ht_size(degree, t)),
        IdentityId::HtParity => per_t(&|t| verify_ht_parity(degree, t)),
        IdentityId::CoreInterpolation => per_t(&|t| verify_core_interpolation(degree, t)),
        IdentityId::InterpolationShowcase => per_t(&|t| verify_interpolation_showcase(degree, t)),
        IdentityId::ExponentialLimit => per_t(&|t| verify_exponential_limit(degree, t)),
        IdentityId::InverseSquareSum => per_t(&|t| verify_inverse_square_sum(degree, t)),
        IdentityId::OddInverseSquareSum => Ok(vec![verify_odd_inverse_square_sum(degree)?]),
        IdentityId::Macdonald => per_t(&|t| verify_macdonald_odd(degree, t)),
        IdentityId::MarkedHook => Ok(vec![verify_marked_hook(degree)?]),
        IdentityId::CoreHookSums => per_t(&|t| verify_core_hook_sums(degree, t)),
        IdentityId::Pentagonal => Ok(vec![verify_pentagonal(degree)]),
        IdentityId::TripleProduct => Ok(vec![verify_triple_product(degree)]),
        IdentityId::ExpLog => Ok(vec![verify_exp_log(degree)?]),
        IdentityId::Kostant => Ok(vec![kostant_positivity(degree)?]),
        IdentityId::EulerReversion => Ok(vec![verify_euler_reversion(degree)?]),
    }
}

/// `gcd` of the numerators and `lcm` of the denominators of a polynomial's
/// coefficients, used to print `f_k(s)` with a common rational factor.
pub fn content(p: &Polynomial) -> Rational {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for (_, c) in p.terms() {
        num = num.gcd(c.numer());
        den = den.lcm(c.denom());
    }
    if num.is_zero() {
        return Rational::one();
    }
    Rational::new(num, den)
}
