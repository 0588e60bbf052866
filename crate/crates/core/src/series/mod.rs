//! Exact truncated power series in `x` whose coefficients are polynomials in
//! `z, y, s, b` over the rationals.
//!
//! A [`TruncatedSeries`] of degree `N` carries the coefficients of
//! `x^0 … x^N`. Binary operations require equal truncation degrees; nothing is
//! ever read or written past `N`.

mod polynomial;

pub use polynomial::{parse_rational, rational_to_string, Exponents, Polynomial, Var};

pub(crate) use polynomial::rat;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Polynomial>,
}

impl TruncatedSeries {
    pub fn zero(degree: usize) -> Self {
        Self { coeffs: vec![Polynomial::zero(); degree + 1] }
    }

    pub fn one(degree: usize) -> Self {
        Self::constant(degree, Polynomial::one())
    }

    pub fn constant(degree: usize, c: Polynomial) -> Self {
        let mut s = Self::zero(degree);
        s.coeffs[0] = c;
        s
    }

    /// The series `x` (zero when `degree = 0`).
    pub fn x(degree: usize) -> Self {
        Self::monomial(degree, 1, Polynomial::one())
    }

    /// `c·x^k`, dropped entirely if `k > degree`.
    pub fn monomial(degree: usize, k: usize, c: Polynomial) -> Self {
        let mut s = Self::zero(degree);
        if k <= degree {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds from a coefficient list, padding with zeros or truncating.
    pub fn from_coeffs(degree: usize, coeffs: impl IntoIterator<Item = Polynomial>) -> Self {
        let mut v: Vec<Polynomial> = coeffs.into_iter().take(degree + 1).collect();
        v.resize(degree + 1, Polynomial::zero());
        Self { coeffs: v }
    }

    pub fn from_integers(degree: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(degree, coeffs.iter().map(|&c| Polynomial::from_int(c)))
    }

    /// Truncation degree `N`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Polynomial> {
        self.coeffs
    }

    /// Coefficient of `x^n`.
    pub fn coefficient(&self, n: usize) -> Result<&Polynomial> {
        self.coeffs.get(n).ok_or(Error::DegreeOutOfRange {
            requested: n,
            available: self.degree(),
        })
    }

    /// Coefficients as rationals, or `None` if any is non-constant.
    pub fn rational_coeffs(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(Polynomial::as_constant).collect()
    }

    /// Re-truncates to a smaller (or pads to a larger) degree.
    pub fn truncate(&self, degree: usize) -> Self {
        Self::from_coeffs(degree, self.coeffs.iter().cloned())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { coeffs })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.degree();
        let mut out = vec![Polynomial::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Polynomial) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    /// Substitutes a rational for an indeterminate in every coefficient.
    pub fn evaluate(&self, v: Var, value: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a.evaluate(v, value)).collect() }
    }

    /// Maps every coefficient through `f`.
    pub fn map_coeffs(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        Self { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// `self^e` for a signed integer exponent; negative powers need an
    /// invertible constant term.
    pub fn pow_int(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { inverse(self)? } else { self.clone() };
        let mut acc = Self::one(self.degree());
        for _ in 0..e.unsigned_abs() {
            acc = acc.try_mul(&base)?;
        }
        Ok(acc)
    }

    /// Replaces `x` by `c·x^step`, truncating at `degree`.
    pub fn substitute_monomial(&self, c: &Polynomial, step: usize, degree: usize) -> Self {
        assert!(step >= 1, "substitution step must be positive");
        let mut out = Self::zero(degree);
        let mut power = Polynomial::one();
        for (j, a) in self.coeffs.iter().enumerate() {
            let k = j * step;
            if k > degree {
                break;
            }
            out.coeffs[k] = a * &power;
            power = &power * c;
        }
        out
    }
}

/// `exp(a)` for a series with zero constant term, via `n·E_n = Σ k·a_k·E_{n−k}`.
pub fn exp_series(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    if !a.coeffs[0].is_zero() {
        return Err(Error::NonZeroConstant);
    }
    let n_max = a.degree();
    let mut e = vec![Polynomial::zero(); n_max + 1];
    e[0] = Polynomial::one();
    for n in 1..=n_max {
        let mut acc = Polynomial::zero();
        for k in 1..=n {
            if a.coeffs[k].is_zero() || e[n - k].is_zero() {
                continue;
            }
            acc = &acc + &(&a.coeffs[k] * &e[n - k]).scale(&rat(k as i64));
        }
        e[n] = acc.scale(&Rational::new(BigInt::one(), BigInt::from(n)));
    }
    Ok(TruncatedSeries { coeffs: e })
}

/// `log(a)` for a series with constant term exactly 1.
pub fn log_series(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    if a.coeffs[0] != Polynomial::one() {
        return Err(Error::NotInvertible("logarithm needs constant term 1".into()));
    }
    let n_max = a.degree();
    let mut l = vec![Polynomial::zero(); n_max + 1];
    for n in 1..=n_max {
        let mut acc = a.coeffs[n].scale(&rat(n as i64));
        for k in 1..n {
            if l[k].is_zero() || a.coeffs[n - k].is_zero() {
                continue;
            }
            acc = &acc - &(&l[k] * &a.coeffs[n - k]).scale(&rat(k as i64));
        }
        l[n] = acc.scale(&Rational::new(BigInt::one(), BigInt::from(n)));
    }
    Ok(TruncatedSeries { coeffs: l })
}

/// Multiplicative inverse; the constant term must be a nonzero rational.
pub fn inverse(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    let c0 = a.coeffs[0]
        .as_constant()
        .filter(|c| !c.is_zero())
        .ok_or_else(|| Error::NotInvertible("constant term must be a nonzero rational".into()))?;
    let inv0 = c0.recip();
    let n_max = a.degree();
    let mut b = vec![Polynomial::zero(); n_max + 1];
    b[0] = Polynomial::constant(inv0.clone());
    for n in 1..=n_max {
        let mut acc = Polynomial::zero();
        for k in 1..=n {
            if !a.coeffs[k].is_zero() && !b[n - k].is_zero() {
                acc = &acc + &(&a.coeffs[k] * &b[n - k]);
            }
        }
        b[n] = acc.scale(&-inv0.clone());
    }
    Ok(TruncatedSeries { coeffs: b })
}

/// `a(b(x))` by Horner's rule; `b` must have zero constant term.
pub fn compose(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.check_same(b)?;
    if !b.coeffs[0].is_zero() {
        return Err(Error::NonZeroConstant);
    }
    let n = a.degree();
    let mut acc = TruncatedSeries::constant(n, a.coeffs[n].clone());
    for k in (0..n).rev() {
        acc = acc.try_mul(b)?;
        acc.coeffs[0] = &acc.coeffs[0] + &a.coeffs[k];
    }
    Ok(acc)
}

/// Compositional inverse of `a = x/φ(x)` by Lagrange inversion:
/// `[x^n] y = (1/n)·[x^{n−1}] φ^n`.
///
/// `a` needs a zero constant term and a nonzero rational linear coefficient.
pub fn revert(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    if !a.coeffs[0].is_zero() {
        return Err(Error::NonZeroConstant);
    }
    let n_max = a.degree();
    if n_max == 0 {
        return Ok(TruncatedSeries::zero(0));
    }
    // a/x, known through x^{N-1}
    let quotient = TruncatedSeries::from_coeffs(n_max - 1, a.coeffs[1..].iter().cloned());
    let phi = inverse(&quotient).map_err(|_| {
        Error::NotInvertible("reversion needs a nonzero rational linear coefficient".into())
    })?;
    let mut out = TruncatedSeries::zero(n_max);
    let mut phi_pow = TruncatedSeries::one(n_max - 1);
    for n in 1..=n_max {
        phi_pow = phi_pow.try_mul(&phi)?;
        out.coeffs[n] = phi_pow.coeffs[n - 1].scale(&Rational::new(BigInt::one(), BigInt::from(n)));
    }
    Ok(out)
}

/// Coefficient of `x^n` in `a`, as an owned polynomial.
pub fn extract_coefficient(a: &TruncatedSeries, n: usize) -> Result<Polynomial> {
    a.coefficient(n).cloned()
}

fn divisor_sum(m: usize) -> usize {
    (1..=m).filter(|d| m % d == 0).sum()
}

/// `Σ_k log(1 − x^{step·k}) = −Σ_m σ(m)/m · x^{step·m}`.
pub fn euler_log(degree: usize, step: usize) -> TruncatedSeries {
    assert!(step >= 1, "step must be positive");
    let mut out = TruncatedSeries::zero(degree);
    for m in 1..=degree / step {
        out.coeffs[m * step] = Polynomial::constant(-Rational::new(
            BigInt::from(divisor_sum(m)),
            BigInt::from(m),
        ));
    }
    out
}

/// `∏_{k≥1} (1 − x^{step·k})^s` for a symbolic or rational exponent,
/// computed as `exp(s · Σ log(1 − x^{step·k}))`.
pub fn euler_product_power(s: &Polynomial, degree: usize, step: usize) -> TruncatedSeries {
    let log = euler_log(degree, step).scale(s);
    exp_series(&log).expect("euler log has zero constant term")
}

/// `∏_{k≥1} (1 − x^{step·k})^s` for an integer exponent, by repeated
/// multiplication (or division) by binomial factors.
pub fn euler_product_power_int(s: i64, degree: usize, step: usize) -> TruncatedSeries {
    assert!(step >= 1, "step must be positive");
    let mut c: Vec<BigInt> = vec![BigInt::zero(); degree + 1];
    c[0] = BigInt::one();
    for k in 1..=degree / step {
        let m = k * step;
        for _ in 0..s.unsigned_abs() {
            if s > 0 {
                for n in (m..=degree).rev() {
                    let prev = c[n - m].clone();
                    c[n] -= prev;
                }
            } else {
                for n in m..=degree {
                    let prev = c[n - m].clone();
                    c[n] += prev;
                }
            }
        }
    }
    TruncatedSeries::from_coeffs(
        degree,
        c.into_iter().map(|v| Polynomial::constant(Rational::from_integer(v))),
    )
}

/// `∏ 1/(1 − x^k)`, the partition generating function.
pub fn partition_series(degree: usize) -> TruncatedSeries {
    euler_product_power_int(-1, degree, 1)
}
