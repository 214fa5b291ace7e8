use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::scalar::{pow_mod, Scalar};
use super::LinalgError;

/// The coefficient field. Prime-field elements are stored as integer
/// scalars in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FieldJson", into = "FieldJson")]
pub enum Field {
    Rationals,
    Prime(u32),
}

#[derive(Serialize, Deserialize)]
struct FieldJson {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
}

impl TryFrom<FieldJson> for Field {
    type Error = LinalgError;

    fn try_from(j: FieldJson) -> Result<Self, Self::Error> {
        match (j.kind.as_str(), j.p) {
            ("rationals", _) => Ok(Field::Rationals),
            ("prime", Some(p)) => Field::prime(p),
            _ => Err(LinalgError::BadField(j.kind)),
        }
    }
}

impl From<Field> for FieldJson {
    fn from(f: Field) -> Self {
        match f {
            Field::Rationals => FieldJson { kind: "rationals".into(), p: None },
            Field::Prime(p) => FieldJson { kind: "prime".into(), p: Some(p as u64) },
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// The prime field `F_p`; `p` must be a prime below `2^31`.
    pub fn prime(p: u64) -> Result<Self, LinalgError> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(LinalgError::BadField(format!("prime({p})")));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn zero(self) -> Scalar {
        Scalar::ZERO
    }

    pub fn one(self) -> Scalar {
        Scalar::ONE
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    fn modp(p: u32, v: u64) -> Scalar {
        Scalar::from_int((v % p as u64) as i64)
    }

    fn residue(p: u32, x: &Scalar) -> u64 {
        match x {
            Scalar::Small { num, den: 1 } if *num >= 0 && (*num as u64) < p as u64 => *num as u64,
            other => other.mod_prime(p).expect("non-canonical prime-field scalar") as u64,
        }
    }

    /// Maps an arbitrary rational into the field.
    pub fn embed(self, x: &Scalar) -> Result<Scalar, LinalgError> {
        match self {
            Field::Rationals => Ok(x.clone()),
            Field::Prime(p) => x
                .mod_prime(p)
                .map(|v| Scalar::from_int(v as i64))
                .ok_or_else(|| LinalgError::NotInField(x.to_string(), p)),
        }
    }

    pub fn from_int(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::from_int(n),
            Field::Prime(p) => Scalar::from_int(n.rem_euclid(p as i64)),
        }
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a.add(b),
            Field::Prime(p) => Self::modp(p, Self::residue(p, a) + Self::residue(p, b)),
        }
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a.sub(b),
            Field::Prime(p) => {
                Self::modp(p, Self::residue(p, a) + p as u64 - Self::residue(p, b))
            }
        }
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a.neg(),
            Field::Prime(p) => Self::modp(p, p as u64 - Self::residue(p, a)),
        }
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a.mul(b),
            Field::Prime(p) => Self::modp(p, Self::residue(p, a) * Self::residue(p, b)),
        }
    }

    /// `a - c*b`, the elimination step.
    pub fn sub_mul(self, a: &Scalar, c: &Scalar, b: &Scalar) -> Scalar {
        if c.is_zero() || b.is_zero() {
            return a.clone();
        }
        self.sub(a, &self.mul(c, b))
    }

    pub fn inv(self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match self {
            Field::Rationals => a.inv(),
            Field::Prime(p) => {
                let r = Self::residue(p, a);
                Some(Self::modp(p, pow_mod(r, p as u64 - 2, p as u64)))
            }
        }
    }

    pub fn div(self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    pub fn pow(self, a: &Scalar, mut e: u32) -> Scalar {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "rationals"),
            Field::Prime(p) => write!(f, "prime:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = LinalgError;

    /// Accepts `rationals`, `q`, `prime:<p>` or `f<p>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        if t == "rationals" || t == "q" {
            return Ok(Field::Rationals);
        }
        let digits = t
            .strip_prefix("prime:")
            .or_else(|| t.strip_prefix("prime"))
            .or_else(|| t.strip_prefix('f'))
            .unwrap_or(&t);
        let p: u64 = digits.parse().map_err(|_| LinalgError::BadField(s.to_string()))?;
        Field::prime(p)
    }
}
