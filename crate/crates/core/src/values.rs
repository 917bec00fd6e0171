//! Exact arithmetic for character values: rationals extended by `i` and by
//! square roots of squarefree integers.
//!
//! An [`AlgebraicValue`] is a finite sum `sum_m (a_m + b_m i) sqrt(m)` over
//! squarefree positive integers `m`, with rational coefficients (`m = 1` is
//! the rational part). The set `{sqrt(m)}` is linearly independent over the
//! rationals, so normalized structural equality is exact equality.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ValueError {
    #[error("value is not rational")]
    NotRational,
    #[error("value is not an integer")]
    NotIntegral,
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Splits `m` as `s * f^2` with `s` squarefree; returns `(s, f)`.
pub fn squarefree_part(m: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut f = 1u64;
    let mut m = m;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            let mut e = 0u32;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            if e % 2 == 1 {
                s *= d;
            }
            f *= d.pow(e / 2);
        }
        d += 1;
    }
    (s * m, f)
}

/// Element of the ring generated by the rationals, `i`, and `sqrt(m)` for
/// squarefree `m`. Immutable; all operations are exact.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlgebraicValue {
    /// Coefficients of `sqrt(m)`; key 1 is the rational part. No zero entries.
    re: BTreeMap<u64, Rational>,
    /// Coefficients of `i * sqrt(m)`. No zero entries.
    im: BTreeMap<u64, Rational>,
}

fn insert_term(map: &mut BTreeMap<u64, Rational>, m: u64, coeff: Rational) {
    if coeff.is_zero() {
        return;
    }
    match map.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let new = e.get() + &coeff;
            if new.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = new;
            }
        }
    }
}

impl AlgebraicValue {
    pub fn zero() -> Self {
        AlgebraicValue::default()
    }

    pub fn one() -> Self {
        AlgebraicValue::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        AlgebraicValue::from_rational(rat(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut v = AlgebraicValue::default();
        insert_term(&mut v.re, 1, r);
        v
    }

    /// `sqrt(n)` for integer `n`; negative `n` yields `i * sqrt(-n)`.
    /// The radicand is reduced to its squarefree part.
    pub fn sqrt_int(n: i64) -> Self {
        if n == 0 {
            return AlgebraicValue::zero();
        }
        let (s, f) = squarefree_part(n.unsigned_abs());
        let mut v = AlgebraicValue::default();
        let coeff = rat(f as i64);
        if n > 0 {
            insert_term(&mut v.re, s, coeff);
        } else {
            insert_term(&mut v.im, s, coeff);
        }
        v
    }

    /// `i^k`.
    pub fn i_power(k: u32) -> Self {
        let mut v = AlgebraicValue::default();
        match k % 4 {
            0 => insert_term(&mut v.re, 1, rat(1)),
            1 => insert_term(&mut v.im, 1, rat(1)),
            2 => insert_term(&mut v.re, 1, rat(-1)),
            _ => insert_term(&mut v.im, 1, rat(-1)),
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_empty() && self.im.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&m, c) in &other.re {
            insert_term(&mut out.re, m, c.clone());
        }
        for (&m, c) in &other.im {
            insert_term(&mut out.im, m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = AlgebraicValue::default();
        for (&m, c) in &self.re {
            out.re.insert(m, -c.clone());
        }
        for (&m, c) in &self.im {
            out.im.insert(m, -c.clone());
        }
        out
    }

    /// Complex conjugation: negates the imaginary terms.
    pub fn conj(&self) -> Self {
        let mut out = AlgebraicValue::default();
        out.re = self.re.clone();
        for (&m, c) in &self.im {
            out.im.insert(m, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = AlgebraicValue::default();
        // sqrt(a) * sqrt(b) = g * sqrt(s) with g = gcd(a,b), s = (a/g)(b/g)
        let cross = |a: u64, b: u64| -> (u64, u64) {
            let g = num_integer::gcd(a, b);
            ((a / g) * (b / g), g)
        };
        for (&a, ca) in &self.re {
            for (&b, cb) in &other.re {
                let (s, g) = cross(a, b);
                insert_term(&mut out.re, s, ca * cb * rat(g as i64));
            }
            for (&b, cb) in &other.im {
                let (s, g) = cross(a, b);
                insert_term(&mut out.im, s, ca * cb * rat(g as i64));
            }
        }
        for (&a, ca) in &self.im {
            for (&b, cb) in &other.re {
                let (s, g) = cross(a, b);
                insert_term(&mut out.im, s, ca * cb * rat(g as i64));
            }
            for (&b, cb) in &other.im {
                let (s, g) = cross(a, b);
                // i * i = -1
                insert_term(&mut out.re, s, -(ca * cb * rat(g as i64)));
            }
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return AlgebraicValue::zero();
        }
        let mut out = AlgebraicValue::default();
        for (&m, c) in &self.re {
            out.re.insert(m, c * r);
        }
        for (&m, c) in &self.im {
            out.im.insert(m, c * r);
        }
        out
    }

    /// Division by a nonzero rational. Division by anything else is not
    /// supported by this ring representation.
    pub fn div_rational(&self, r: &Rational) -> Self {
        assert!(!r.is_zero(), "division by zero rational");
        self.scale(&r.recip())
    }

    /// The value as a rational, if it has no irrational or imaginary part.
    pub fn as_rational(&self) -> Result<Rational, ValueError> {
        if !self.im.is_empty() || self.re.keys().any(|&m| m != 1) {
            return Err(ValueError::NotRational);
        }
        Ok(self.re.get(&1).cloned().unwrap_or_else(Rational::zero))
    }

    /// The value as an integer, if it is a rational integer.
    pub fn as_integer(&self) -> Result<BigInt, ValueError> {
        let r = self.as_rational()?;
        if !r.is_integer() {
            return Err(ValueError::NotIntegral);
        }
        Ok(r.to_integer())
    }

    pub fn is_real(&self) -> bool {
        self.im.is_empty()
    }

    /// Raw term maps `(re, im)`, mainly for serialization.
    pub fn terms(&self) -> (&BTreeMap<u64, Rational>, &BTreeMap<u64, Rational>) {
        (&self.re, &self.im)
    }

    pub fn from_terms(
        re: BTreeMap<u64, Rational>,
        im: BTreeMap<u64, Rational>,
    ) -> Result<Self, String> {
        let mut v = AlgebraicValue::default();
        for (m, c) in re {
            let (s, f) = squarefree_part(m);
            if s != m || f != 1 {
                return Err(format!("radicand {m} is not squarefree"));
            }
            insert_term(&mut v.re, m, c);
        }
        for (m, c) in im {
            let (s, f) = squarefree_part(m);
            if s != m || f != 1 {
                return Err(format!("radicand {m} is not squarefree"));
            }
            insert_term(&mut v.im, m, c);
        }
        Ok(v)
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, coeff: &Rational, m: u64, imag: bool) -> fmt::Result {
    write!(f, "({})", coeff)?;
    if imag {
        write!(f, "i")?;
    }
    if m != 1 {
        write!(f, "\u{221a}{}", m)?;
    }
    Ok(())
}

/// Renders like `(-1/2) + (1/2)√5 + (3)i√2`; zero renders as `0`.
impl fmt::Display for AlgebraicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&m, c) in &self.re {
            if !first {
                write!(f, " + ")?;
            }
            fmt_term(f, c, m, false)?;
            first = false;
        }
        for (&m, c) in &self.im {
            if !first {
                write!(f, " + ")?;
            }
            fmt_term(f, c, m, true)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialization form: `{"re": {"m": "p/q"}, "im": {"m": "p/q"}}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraicValueDto {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub re: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub im: BTreeMap<String, String>,
}

impl AlgebraicValue {
    pub fn to_dto(&self) -> AlgebraicValueDto {
        let conv = |m: &BTreeMap<u64, Rational>| {
            m.iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect()
        };
        AlgebraicValueDto {
            re: conv(&self.re),
            im: conv(&self.im),
        }
    }

    pub fn from_dto(dto: &AlgebraicValueDto) -> Result<Self, String> {
        let conv = |m: &BTreeMap<String, String>| -> Result<BTreeMap<u64, Rational>, String> {
            m.iter()
                .map(|(k, v)| {
                    let key: u64 = k.parse().map_err(|_| format!("bad radicand {k}"))?;
                    let val: Rational = v.parse().map_err(|_| format!("bad rational {v}"))?;
                    Ok((key, val))
                })
                .collect()
        };
        AlgebraicValue::from_terms(conv(&dto.re)?, conv(&dto.im)?)
    }
}

/// Sum of `values[i] * weights[i]` without intermediate clones.
pub fn dot(values: &[AlgebraicValue], weights: &[AlgebraicValue]) -> AlgebraicValue {
    assert_eq!(values.len(), weights.len());
    let mut acc = AlgebraicValue::zero();
    for (v, w) in values.iter().zip(weights) {
        if v.is_zero() || w.is_zero() {
            continue;
        }
        acc = acc.add(&v.mul(w));
    }
    acc
}

/// True when the rational is a nonnegative integer.
pub fn is_nonneg_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree() {
        assert_eq!(squarefree_part(8), (2, 2));
        assert_eq!(squarefree_part(60), (15, 2));
        assert_eq!(squarefree_part(1), (1, 1));
        assert_eq!(squarefree_part(49), (1, 7));
    }

    #[test]
    fn products_reduce() {
        let r3 = AlgebraicValue::sqrt_int(3);
        assert_eq!(r3.mul(&r3), AlgebraicValue::from_int(3));
        let r6 = AlgebraicValue::sqrt_int(6);
        let r10 = AlgebraicValue::sqrt_int(10);
        let want = AlgebraicValue::sqrt_int(15).scale(&rat(2));
        assert_eq!(r6.mul(&r10), want);
    }

    #[test]
    fn norm_of_complex() {
        // (1 + i sqrt 2)(1 - i sqrt 2) = 3
        let v = AlgebraicValue::one().add(&AlgebraicValue::sqrt_int(-2));
        assert_eq!(v.mul(&v.conj()), AlgebraicValue::from_int(3));
        assert!(v.mul(&v.conj()).is_real());
    }

    #[test]
    fn equality_and_zero() {
        let a = AlgebraicValue::sqrt_int(2);
        assert!(a.add(&a.neg()).is_zero());
        assert_ne!(AlgebraicValue::sqrt_int(2), AlgebraicValue::sqrt_int(3));
        assert_eq!(
            AlgebraicValue::sqrt_int(8),
            AlgebraicValue::sqrt_int(2).scale(&rat(2))
        );
    }

    #[test]
    fn rational_extraction() {
        let v = AlgebraicValue::from_rational(rat_frac(3, 2));
        assert_eq!(v.as_rational().unwrap(), rat_frac(3, 2));
        assert_eq!(
            AlgebraicValue::sqrt_int(2).as_rational(),
            Err(ValueError::NotRational)
        );
        // first orthogonality for the 2-dimensional character of S_3:
        // 1*2^2 + 3*0^2 + 2*(-1)^2 = 6
        let vals = [2i64, 0, -1];
        let sizes = [1i64, 3, 2];
        let mut acc = AlgebraicValue::zero();
        for (v, s) in vals.iter().zip(sizes) {
            let x = AlgebraicValue::from_int(*v);
            acc = acc.add(&x.mul(&x).scale(&rat(s)));
        }
        assert_eq!(acc.as_integer().unwrap(), BigInt::from(6));
    }

    #[test]
    fn display_format() {
        let v = AlgebraicValue::from_rational(rat_frac(-1, 2))
            .add(&AlgebraicValue::sqrt_int(5).scale(&rat_frac(1, 2)));
        assert_eq!(v.to_string(), "(-1/2) + (1/2)\u{221a}5");
        assert_eq!(AlgebraicValue::zero().to_string(), "0");
    }

    #[test]
    fn dto_round_trip() {
        let v = AlgebraicValue::from_rational(rat_frac(-1, 2))
            .add(&AlgebraicValue::sqrt_int(-12).scale(&rat_frac(7, 3)));
        let dto = v.to_dto();
        assert_eq!(AlgebraicValue::from_dto(&dto).unwrap(), v);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_value() -> impl Strategy<Value = AlgebraicValue> {
            let term = (prop_oneof![Just(1u64), Just(2), Just(3), Just(5), Just(6)], -4i64..=4, any::<bool>());
            proptest::collection::vec(term, 0..4).prop_map(|terms| {
                let mut v = AlgebraicValue::zero();
                for (m, c, imag) in terms {
                    let t = if imag {
                        AlgebraicValue::sqrt_int(-(m as i64)).scale(&rat(c))
                    } else {
                        AlgebraicValue::sqrt_int(m as i64).scale(&rat(c))
                    };
                    v = v.add(&t);
                }
                v
            })
        }

        proptest! {
            #[test]
            fn ring_axioms(a in arb_value(), b in arb_value(), c in arb_value()) {
                prop_assert_eq!(a.mul(&b), b.mul(&a));
                prop_assert_eq!(a.mul(&b.mul(&c)), a.mul(&b).mul(&c));
                prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            }

            #[test]
            fn conj_norm_is_real(a in arb_value()) {
                prop_assert!(a.mul(&a.conj()).is_real());
            }

            #[test]
            fn nonzero_never_equals_zero(a in arb_value()) {
                // linear independence: normalized nonzero value is not zero
                if !a.is_zero() {
                    prop_assert_ne!(a, AlgebraicValue::zero());
                }
            }
        }
    }
}
