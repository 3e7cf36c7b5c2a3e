//! Exact scalars: Gaussian rationals `a + b·i` with arbitrary-precision
//! rational components.
//!
//! Every computation in this crate runs over this field. Components are
//! kept reduced with positive denominators, so equality is structural and
//! serialization is canonical.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A Gaussian rational `re + im·i`, the base field of the workbench.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::new(BigRational::one(), BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// Exact rational `p/q`. Panics if `q == 0`.
    pub fn rational(p: i64, q: i64) -> Self {
        assert!(q != 0, "rational with zero denominator");
        Scalar::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::zero(),
        )
    }

    /// `p/q + r/s·i`; convenience for tests and literals.
    pub fn gaussian(p: i64, q: i64, r: i64, s: i64) -> Self {
        assert!(q != 0 && s != 0, "gaussian with zero denominator");
        Scalar::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::new(BigInt::from(r), BigInt::from(s)),
        )
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// `re² + im²`, the multiplicative norm into the rationals.
    fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Scalar::new(&self.re / &n, -&self.im / &n))
    }

    /// Exact division; division by zero is an explicit error.
    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, Error> {
        rhs.inverse().map(|inv| self * &inv).ok_or(Error::DivisionByZero)
    }

    /// `self * n` for a machine integer, used by sign bookkeeping.
    pub fn mul_int(&self, n: i64) -> Scalar {
        let f = BigRational::from_integer(BigInt::from(n));
        Scalar::new(&self.re * &f, &self.im * &f)
    }

    /// Canonical `p/q` rendering of one rational component.
    fn frac_str(r: &BigRational) -> String {
        format!("{}/{}", r.numer(), r.denom())
    }

    fn parse_frac(s: &str) -> Result<BigRational, Error> {
        let bad = || Error::ScalarParse(s.to_string());
        match s.split_once('/') {
            Some((p, q)) => {
                let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
                let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(p, q))
            }
            None => {
                let p = BigInt::from_str(s.trim()).map_err(|_| bad())?;
                Ok(BigRational::from_integer(p))
            }
        }
    }

    /// Parses the compact forms used on the command line: `"2"`, `"-1/3"`,
    /// `"i"`, `"-2/5i"`, `"1+i"`, `"1/2-3/4i"`.
    pub fn parse_compact(input: &str) -> Result<Scalar, Error> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::ScalarParse(input.to_string());
        if s.is_empty() {
            return Err(bad());
        }
        // Split at a '+' or '-' that is not leading: at most one real and one
        // imaginary summand.
        let mut split_at = None;
        for (idx, c) in s.char_indices().skip(1) {
            if (c == '+' || c == '-') && !matches!(&s[idx - 1..idx], "/" | "+" | "-") {
                split_at = Some(idx);
            }
        }
        let (head, tail) = match split_at {
            Some(idx) => (&s[..idx], Some(&s[idx..])),
            None => (&s[..], None),
        };
        let parse_term = |t: &str| -> Result<(BigRational, bool), Error> {
            if let Some(body) = t.strip_suffix('i') {
                let r = match body {
                    "" | "+" => BigRational::one(),
                    "-" => -BigRational::one(),
                    _ => Self::parse_frac(body)?,
                };
                Ok((r, true))
            } else {
                Ok((Self::parse_frac(t)?, false))
            }
        };
        let (first, first_imag) = parse_term(head)?;
        match tail {
            None => Ok(if first_imag {
                Scalar::new(BigRational::zero(), first)
            } else {
                Scalar::new(first, BigRational::zero())
            }),
            Some(t) => {
                let (second, second_imag) = parse_term(t)?;
                if first_imag == second_imag {
                    return Err(bad());
                }
                if first_imag {
                    Ok(Scalar::new(second, first))
                } else {
                    Ok(Scalar::new(first, second))
                }
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn one_part(r: &BigRational) -> String {
            if r.denom().is_one() {
                format!("{}", r.numer())
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        if !self.re.is_zero() {
            out.push_str(&one_part(&self.re));
        }
        if !self.im.is_zero() {
            let abs = one_part(&self.im.abs());
            let mag = if abs == "1" { String::new() } else { abs };
            if self.im.is_negative() {
                out.push_str(&format!("-{mag}i"));
            } else if out.is_empty() {
                out.push_str(&format!("{mag}i"));
            } else {
                out.push_str(&format!("+{mag}i"));
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-&self.re, -&self.im)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

macro_rules! forward_owned {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            re: &'a str,
            im: &'a str,
        }
        Repr {
            re: &Scalar::frac_str(&self.re),
            im: &Scalar::frac_str(&self.im),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            re: String,
            im: String,
        }
        let r = Repr::deserialize(deserializer)?;
        let re = Scalar::parse_frac(&r.re).map_err(D::Error::custom)?;
        let im = Scalar::parse_frac(&r.im).map_err(D::Error::custom)?;
        Ok(Scalar::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
    }

    #[test]
    fn conjugate_pair_sums_to_one() {
        let a = Scalar::gaussian(1, 2, 1, 1);
        let b = Scalar::gaussian(1, 2, -1, 1);
        assert_eq!(&a + &b, Scalar::one());
    }

    #[test]
    fn rational_division() {
        let a = Scalar::rational(3, 4);
        let b = Scalar::rational(3, 2);
        assert_eq!(a.checked_div(&b).unwrap(), Scalar::rational(1, 2));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(
            Scalar::one().checked_div(&Scalar::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn gaussian_inverse() {
        // (1+i)^-1 = (1-i)/2
        let z = Scalar::gaussian(1, 1, 1, 1);
        assert_eq!(z.inverse().unwrap(), Scalar::gaussian(1, 2, -1, 2));
    }

    #[test]
    fn parse_compact_forms() {
        for (s, v) in [
            ("2", Scalar::from_int(2)),
            ("-1/3", Scalar::rational(-1, 3)),
            ("i", Scalar::i()),
            ("-i", -Scalar::i()),
            ("2i", Scalar::gaussian(0, 1, 2, 1)),
            ("1+i", Scalar::gaussian(1, 1, 1, 1)),
            ("1/2-3/4i", Scalar::gaussian(1, 2, -3, 4)),
        ] {
            assert_eq!(Scalar::parse_compact(s).unwrap(), v, "case {s}");
        }
        assert!(Scalar::parse_compact("1+2").is_err());
        assert!(Scalar::parse_compact("x").is_err());
        assert!(Scalar::parse_compact("1/0").is_err());
    }

    #[test]
    fn canonical_json() {
        let z = Scalar::gaussian(2, 4, -1, 1);
        let s = serde_json::to_string(&z).unwrap();
        assert_eq!(s, r#"{"re":"1/2","im":"-1/1"}"#);
        let back: Scalar = serde_json::from_str(&s).unwrap();
        assert_eq!(back, z);
    }

    #[test]
    fn display_compact() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::gaussian(1, 2, -1, 1).to_string(), "1/2-i");
        assert_eq!(Scalar::gaussian(0, 1, 3, 4).to_string(), "3/4i");
    }
}
