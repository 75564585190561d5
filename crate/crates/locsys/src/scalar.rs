//! Exact field elements: arbitrary-precision rationals and prime fields.
//!
//! A [`Scalar`] knows which field it lives in, so mixed-field input is
//! detectable at every construction boundary. Rationals are always kept
//! reduced to lowest terms (the representation of `num-rational` is
//! canonical); prime-field elements are canonical representatives in
//! `[0, p)`. Serialization is the string form `"a/b"` (with `b > 0`,
//! `gcd(a, b) = 1`, plain `"a"` when `b = 1`) for rationals and the
//! decimal representative for prime fields.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

/// The ground field: the rationals, or the prime field GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// Builds a field spec, validating that a nonzero characteristic is
    /// prime.
    pub fn new(characteristic: u64) -> Result<Self> {
        match characteristic {
            0 => Ok(FieldSpec::Rationals),
            p if is_prime(p) => Ok(FieldSpec::PrimeField(p)),
            p => Err(Error::NotPrime(p)),
        }
    }

    /// 0 for the rationals, p for GF(p).
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::PrimeField(p) => Scalar::Mod { value: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::one()),
            FieldSpec::PrimeField(p) => Scalar::Mod {
                value: if *p == 1 { 0 } else { 1 },
                p: *p,
            },
        }
    }

    /// The scalar `n` mapped into this field.
    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from(BigInt::from(n))),
            FieldSpec::PrimeField(p) => {
                let p_i = *p as i128;
                let v = ((n as i128 % p_i) + p_i) % p_i;
                Scalar::Mod {
                    value: v as u64,
                    p: *p,
                }
            }
        }
    }

    /// Parses the canonical string form of a scalar of this field.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        match self {
            FieldSpec::Rationals => {
                let r = if let Some((num, den)) = s.split_once('/') {
                    let n = BigInt::from_str(num.trim())
                        .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))?;
                    let d = BigInt::from_str(den.trim())
                        .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))?;
                    if d.is_zero() {
                        return Err(Error::Parse(format!("zero denominator in {s:?}")));
                    }
                    BigRational::new(n, d)
                } else {
                    let n = BigInt::from_str(s)
                        .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))?;
                    BigRational::from(n)
                };
                Ok(Scalar::Rational(r))
            }
            FieldSpec::PrimeField(p) => {
                let n = i128::from_str(s)
                    .map_err(|e| Error::Parse(format!("bad prime-field element {s:?}: {e}")))?;
                let p_i = *p as i128;
                let v = ((n % p_i) + p_i) % p_i;
                Ok(Scalar::Mod {
                    value: v as u64,
                    p: *p,
                })
            }
        }
    }

    /// Canonical display name used in file formats: `Q` or `GF(p)`.
    pub fn name(&self) -> String {
        match self {
            FieldSpec::Rationals => "Q".to_string(),
            FieldSpec::PrimeField(p) => format!("GF({p})"),
        }
    }

    /// Inverse of [`FieldSpec::name`].
    pub fn parse_name(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = s.strip_prefix("GF(") {
            if let Some(p) = rest.strip_suffix(')') {
                let p = u64::from_str(p.trim())
                    .map_err(|e| Error::Parse(format!("bad field name {s:?}: {e}")))?;
                return FieldSpec::new(p);
            }
        }
        Err(Error::Parse(format!(
            "unknown field {s:?} (expected \"Q\" or \"GF(p)\")"
        )))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// One exact field element. Carries its field so mismatches are
/// detectable; arithmetic between different fields is a logic error and
/// panics (public entry points validate fields before any arithmetic).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Mod { p, .. } => FieldSpec::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod {
                    value: addmod(*a, *b, *p),
                    p: *p,
                }
            }
            _ => panic!("scalar arithmetic across fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod {
                    value: mulmod(*a, *b, *p),
                    p: *p,
                }
            }
            _ => panic!("scalar arithmetic across fields"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { value, p } => Scalar::Mod {
                value: if *value == 0 { 0 } else { p - value },
                p: *p,
            },
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(a) => {
                if a.is_zero() {
                    None
                } else {
                    Some(Scalar::Rational(a.recip()))
                }
            }
            Scalar::Mod { value, p } => invmod(*value, *p).map(|v| Scalar::Mod { value: v, p: *p }),
        }
    }

    pub fn div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|i| self.mul(&i))
    }

    /// Total order used only for deterministic tie-breaking (candidate
    /// roots, pivot selection). Rationals compare numerically,
    /// prime-field elements by representative.
    pub fn cmp_key(&self, other: &Scalar) -> std::cmp::Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Mod { value: a, .. }, Scalar::Mod { value: b, .. }) => a.cmp(b),
            (Scalar::Rational(_), Scalar::Mod { .. }) => std::cmp::Ordering::Less,
            (Scalar::Mod { .. }, Scalar::Rational(_)) => std::cmp::Ordering::Greater,
        }
    }

    /// The underlying rational, when over ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.denom().is_negative() {
                    // BigRational keeps denominators positive; defensive.
                    write!(f, "{}/{}", -r.numer(), -r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

fn addmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    // Fermat: p is prime by FieldSpec construction.
    Some(powmod(a, p - 2, p))
}

/// Deterministic Miller–Rabin, exact for all u64 with this base set.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
