use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Rational;

/// The indeterminates a coefficient polynomial may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    Z,
    Y,
    S,
    B,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::Z, Var::Y, Var::S, Var::B];

    fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Z => "z",
            Var::Y => "y",
            Var::S => "s",
            Var::B => "b",
        }
    }
}

/// Exponents of `(z, y, s, b)` in that order.
pub type Exponents = [u32; 4];

/// Sparse multivariate polynomial in `z, y, s, b` with exact rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Exponents, Rational>,
}

/// Formats a rational as `p/q`, always with an explicit denominator.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial([0; 4], c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 4];
        e[v.index()] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(exps: Exponents, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&[0; 4]).cloned(),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&[0; 4]).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the monomial with exponents `exps`.
    pub fn coefficient(&self, exps: &Exponents) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree in one indeterminate; `None` for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|e| e[v.index()]).max()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let terms = self.terms.iter().map(|(e, a)| (*e, a * c)).collect();
        Polynomial { terms }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes a rational value for one indeterminate.
    pub fn evaluate(&self, v: Var, value: &Rational) -> Polynomial {
        let mut out = Polynomial::zero();
        for (e, c) in &self.terms {
            let k = e[v.index()];
            let mut rest = *e;
            rest[v.index()] = 0;
            let factor = num_traits::pow(value.clone(), k as usize);
            out.add_term(rest, c * factor);
        }
        out
    }

    /// Substitutes a polynomial for one indeterminate.
    pub fn substitute(&self, v: Var, value: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (e, c) in &self.terms {
            let k = e[v.index()];
            let mut rest = *e;
            rest[v.index()] = 0;
            let term = &Polynomial::monomial(rest, c.clone()) * &value.pow(k);
            out = &out + &term;
        }
        out
    }

    /// Coefficient of `v^k`, as a polynomial in the other indeterminates.
    pub fn coefficient_of(&self, v: Var, k: u32) -> Polynomial {
        let mut out = Polynomial::zero();
        for (e, c) in &self.terms {
            if e[v.index()] == k {
                let mut rest = *e;
                rest[v.index()] = 0;
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `a·self + b`.
    pub fn affine(&self, a: &Rational, b: &Rational) -> Polynomial {
        let mut out = self.scale(a);
        out.add_term([0; 4], b.clone());
        out
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl From<i64> for Polynomial {
    fn from(n: i64) -> Self {
        Polynomial::from_int(n)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect();
        Polynomial { terms }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    /// Highest total degree first, e.g. `1/2*s^2 - 3/2*s`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            let is_const = e.iter().all(|&k| k == 0);
            let mut pieces = Vec::new();
            if is_const || !abs.is_one() {
                pieces.push(abs.to_string());
            }
            for v in Var::ALL {
                match e[v.index()] {
                    0 => {}
                    1 => pieces.push(v.name().to_string()),
                    k => pieces.push(format!("{}^{}", v.name(), k)),
                }
            }
            write!(f, "{}", pieces.join("*"))?;
        }
        Ok(())
    }
}

/// Serialized as a sorted list of `[[e_z, e_y, e_s, e_b], "p/q"]` pairs.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let list: Vec<(Exponents, String)> = self
            .terms
            .iter()
            .map(|(e, c)| (*e, rational_to_string(c)))
            .collect();
        list.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let list: Vec<(Exponents, String)> = Vec::deserialize(deserializer)?;
        let mut p = Polynomial::zero();
        for (e, s) in list {
            let c = parse_rational(&s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}")))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Polynomial {
        Polynomial::var(Var::Z)
    }
    fn y() -> Polynomial {
        Polynomial::var(Var::Y)
    }

    #[test]
    fn arithmetic_cancels_exactly() {
        let p = &z() + &Polynomial::one();
        let q = &z() - &Polynomial::one();
        let prod = &p * &q;
        assert_eq!(prod, &z().pow(2) - &Polynomial::one());
        assert!((&prod - &prod).is_zero());
        assert_eq!(prod.degree_in(Var::Z), Some(2));
        assert_eq!(prod.degree_in(Var::Y), Some(0));
        assert_eq!(Polynomial::zero().degree_in(Var::Z), None);
    }

    #[test]
    fn evaluation_and_substitution() {
        // (y - 3yz)|_{z=1/3} = 0
        let p = &y() - &(&y() * &z()).scale(&rat(3));
        assert!(p.evaluate(Var::Z, &Rational::new(1.into(), 3.into())).is_zero());
        let q = p.substitute(Var::Y, &(&z() + &Polynomial::one()));
        assert_eq!(q.degree_in(Var::Z), Some(2));
        assert_eq!(q.coefficient_of(Var::Z, 2), Polynomial::from_int(-3));
    }

    #[test]
    fn display_and_serde() {
        let p = &(&z().pow(2).scale(&Rational::new(1.into(), 2.into())) - &z().scale(&Rational::new(3.into(), 2.into())))
            + &Polynomial::from_int(-1);
        assert_eq!(p.to_string(), "1/2*z^2 - 3/2*z - 1");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"[[[0,0,0,0],"-1/1"],[[1,0,0,0],"-3/2"],[[2,0,0,0],"1/2"]]"#);
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(parse_rational("7"), Some(rat(7)));
        assert_eq!(parse_rational("1/0"), None);
    }
}
