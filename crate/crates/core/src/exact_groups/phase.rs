use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// An element of `Z/modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    pub fn new(value: i128, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Domain("residue modulus must be at least 1".into()));
        }
        Ok(Residue {
            value: value.rem_euclid(modulus as i128) as u64,
            modulus,
        })
    }

    pub fn zero(modulus: u64) -> Self {
        assert!(modulus >= 1, "residue modulus must be at least 1");
        Residue { value: 0, modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn scale(self, k: u64) -> Residue {
        Residue {
            value: ((self.value as u128 * k as u128) % self.modulus as u128) as u64,
            modulus: self.modulus,
        }
    }

    /// Additive order in `Z/modulus`.
    pub fn order(self) -> u64 {
        self.modulus / gcd(self.value, self.modulus)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

/// An element of `Q/Z`, stored as a reduced fraction in `[0, 1)`.
///
/// Unramified Frobenius data is always a root of unity here, so its
/// argument is a rational phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Phase {
    num: u64,
    den: u64,
}

impl Phase {
    pub const ZERO: Phase = Phase { num: 0, den: 1 };

    pub fn new(num: i128, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Domain("phase denominator must be at least 1".into()));
        }
        let num = num.rem_euclid(den as i128) as u64;
        let g = gcd(num, den);
        Ok(Phase {
            num: num / g,
            den: den / g,
        })
    }

    pub fn numerator(self) -> u64 {
        self.num
    }

    pub fn denominator(self) -> u64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn times(self, k: i128) -> Phase {
        Phase::new(self.num as i128 * k, self.den).expect("nonzero denominator")
    }

    /// All `v` in `Q/Z` with `k * v == self`; there are exactly `k` of them.
    pub fn divide(self, k: u64) -> Vec<Phase> {
        assert!(k >= 1, "cannot divide a phase by zero");
        let den = self.den * k;
        (0..k)
            .map(|j| Phase::new((self.num + j * self.den) as i128, den).expect("nonzero"))
            .collect()
    }
}

impl Default for Phase {
    fn default() -> Self {
        Phase::ZERO
    }
}

impl Ord for Phase {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Phase {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Phase {
    type Err = Error;

    /// Accepts `"num/den"` or a bare integer; the value is reduced mod 1.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid phase {s:?}, expected \"num/den\""));
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<i128>().map_err(|_| bad())?,
                d.trim().parse::<u64>().map_err(|_| bad())?,
            ),
            None => (s.parse::<i128>().map_err(|_| bad())?, 1),
        };
        Phase::new(num, den).map_err(|_| bad())
    }
}

impl Serialize for Phase {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Phase {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for Residue {
    type Output = Residue;

    fn add(self, other: Residue) -> Residue {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        Residue {
            value: ((self.value as u128 + other.value as u128) % self.modulus as u128) as u64,
            modulus: self.modulus,
        }
    }
}

impl Neg for Residue {
    type Output = Residue;

    fn neg(self) -> Residue {
        Residue {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Add for Phase {
    type Output = Phase;

    fn add(self, other: Phase) -> Phase {
        let den = lcm(self.den, other.den);
        let num = self.num as i128 * (den / self.den) as i128
            + other.num as i128 * (den / other.den) as i128;
        Phase::new(num, den).expect("nonzero denominator")
    }
}

impl Neg for Phase {
    type Output = Phase;

    fn neg(self) -> Phase {
        Phase::new(-(self.num as i128), self.den).expect("nonzero denominator")
    }
}

impl Sub for Phase {
    type Output = Phase;

    fn sub(self, other: Phase) -> Phase {
        self + (-other)
    }
}
