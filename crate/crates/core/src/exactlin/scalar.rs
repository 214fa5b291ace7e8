//! Exact rational scalars with a machine-word fast path.
//!
//! Values that fit in an `i64` numerator/denominator pair are kept inline;
//! anything larger is promoted to a `BigRational`. The representation is
//! canonical (lowest terms, positive denominator, and `Big` only when the
//! value does not fit in `Small`), so derived equality and hashing are
//! structural.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Small { num: i64, den: i64 },
    Big(BigRational),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse scalar {0:?}")]
pub struct ParseScalarError(pub String);

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Scalar {
    pub const ZERO: Scalar = Scalar::Small { num: 0, den: 1 };
    pub const ONE: Scalar = Scalar::Small { num: 1, den: 1 };

    pub fn from_int(n: i64) -> Self {
        Scalar::Small { num: n, den: 1 }
    }

    /// Builds `num/den` in canonical form. Panics on a zero denominator.
    pub fn from_i128(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let (mut n, mut d) = (num, den);
        if d < 0 {
            // i128::MIN cannot come from products of i64 values
            n = -n;
            d = -d;
        }
        let g = gcd_i128(n, d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(num), Ok(den)) => Scalar::Small { num, den },
            _ => Scalar::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        // BigRational::new / arithmetic already reduce to lowest terms
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(num), Some(den)) => Scalar::Small { num, den },
            _ => Scalar::Big(r),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Scalar::Small { num, den } => {
                BigRational::new_raw(BigInt::from(*num), BigInt::from(*den))
            }
            Scalar::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Small { num: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Small { num: 1, den: 1 })
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Scalar::Small { den, .. } => *den == 1,
            Scalar::Big(r) => r.is_integer(),
        }
    }

    /// Numerator and denominator as big integers.
    pub fn parts(&self) -> (BigInt, BigInt) {
        match self {
            Scalar::Small { num, den } => (BigInt::from(*num), BigInt::from(*den)),
            Scalar::Big(r) => (r.numer().clone(), r.denom().clone()),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Small { num: a, den: b }, Scalar::Small { num: c, den: d }) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    return Scalar::from_i128(a + c, b);
                }
                match (a * d).checked_add(c * b) {
                    Some(n) => Scalar::from_i128(n, b * d),
                    None => Scalar::from_big(self.to_big() + other.to_big()),
                }
            }
            _ => Scalar::from_big(self.to_big() + other.to_big()),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Small { num, den } => Scalar::from_i128(-(*num as i128), *den as i128),
            Scalar::Big(r) => Scalar::from_big(-r.clone()),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::ZERO;
        }
        match (self, other) {
            (Scalar::Small { num: a, den: b }, Scalar::Small { num: c, den: d }) => {
                Scalar::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Scalar::from_big(self.to_big() * other.to_big()),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Small { num, den } => Scalar::from_i128(*den as i128, *num as i128),
            Scalar::Big(r) => Scalar::from_big(r.recip()),
        })
    }

    /// Reduces an integer-valued scalar modulo `p`; `None` if the
    /// denominator is divisible by `p`.
    pub fn mod_prime(&self, p: u32) -> Option<u32> {
        let p64 = p as i64;
        match self {
            Scalar::Small { num, den } => {
                let n = num.rem_euclid(p64);
                let d = den.rem_euclid(p64);
                if d == 0 {
                    return None;
                }
                let dinv = pow_mod(d as u64, p as u64 - 2, p as u64);
                Some(((n as u64 * dinv) % p as u64) as u32)
            }
            Scalar::Big(r) => {
                let pb = BigInt::from(p);
                let n = r.numer().mod_floor(&pb).to_u64()?;
                let d = r.denom().mod_floor(&pb).to_u64()?;
                if d == 0 {
                    return None;
                }
                let dinv = pow_mod(d, p as u64 - 2, p as u64);
                Some(((n * dinv) % p as u64) as u32)
            }
        }
    }
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::ZERO
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Small { num: a, den: b }, Scalar::Small { num: c, den: d }) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Small { num, den: 1 } => write!(f, "{num}"),
            Scalar::Small { num, den } => write!(f, "{num}/{den}"),
            Scalar::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Scalar::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(s.to_string());
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(Scalar::from_big(BigRational::new(n, d)))
    }
}
