//! Exact coefficient arithmetic: arbitrary-precision rationals and prime fields.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};
use std::fmt;

use crate::error::Error;

/// Coefficient field of a ring: the rationals or a prime field F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn validate(&self) -> Result<(), Error> {
        match self {
            Field::Rationals => Ok(()),
            Field::Prime(p) => {
                if is_prime(*p) {
                    Ok(())
                } else {
                    Err(Error::InvalidPrime(*p))
                }
            }
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            Field::Rationals => Coeff::Rat(BigRational::zero()),
            Field::Prime(p) => Coeff::Fp { value: 0, p: *p },
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            Field::Rationals => Coeff::Rat(BigRational::one()),
            Field::Prime(p) => Coeff::Fp { value: 1, p: *p },
        }
    }

    /// Builds a/b in this field. Fails when b is zero, or when b vanishes mod p.
    pub fn fraction(&self, num: u64, den: u64) -> Result<Coeff, Error> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        match self {
            Field::Rationals => Ok(Coeff::Rat(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            Field::Prime(p) => {
                let d = den % p;
                if d == 0 {
                    return Err(Error::DenominatorNotInvertible { den, p: *p });
                }
                let inv = mod_inverse(d, *p);
                Ok(Coeff::Fp {
                    value: mod_mul(num % p, inv, *p),
                    p: *p,
                })
            }
        }
    }

    pub fn from_int(&self, n: i64) -> Coeff {
        match self {
            Field::Rationals => Coeff::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Coeff::Fp { value: r, p: *p }
            }
        }
    }
}

/// An exact field element. Rationals are kept in canonical reduced form with
/// positive denominator; prime-field values live in [0, p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rat(BigRational),
    Fp { value: u64, p: u64 },
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_zero(),
            Coeff::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_one(),
            Coeff::Fp { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a + b),
            (Coeff::Fp { value: a, p }, Coeff::Fp { value: b, p: q }) => {
                debug_assert_eq!(p, q);
                let mut v = a + b;
                if v >= *p {
                    v -= p;
                }
                Coeff::Fp { value: v, p: *p }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Rat(a) => Coeff::Rat(-a),
            Coeff::Fp { value, p } => Coeff::Fp {
                value: if *value == 0 { 0 } else { p - value },
                p: *p,
            },
        }
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a * b),
            (Coeff::Fp { value: a, p }, Coeff::Fp { value: b, p: q }) => {
                debug_assert_eq!(p, q);
                Coeff::Fp {
                    value: mod_mul(*a, *b, *p),
                    p: *p,
                }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    /// Multiplicative inverse; panics on zero (callers guard).
    pub fn inv(&self) -> Coeff {
        match self {
            Coeff::Rat(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Coeff::Rat(a.recip())
            }
            Coeff::Fp { value, p } => {
                assert!(*value != 0, "inverse of zero");
                Coeff::Fp {
                    value: mod_inverse(*value, *p),
                    p: *p,
                }
            }
        }
    }

    pub fn div(&self, other: &Coeff) -> Coeff {
        self.mul(&other.inv())
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            // Balanced representatives keep printed output readable and make
            // small-coefficient results agree textually with the rational run.
            Coeff::Fp { value, p } => {
                if *value > p / 2 {
                    write!(f, "-{}", p - value)
                } else {
                    write!(f, "{}", value)
                }
            }
        }
    }
}

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, p);
        }
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    acc
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime, a nonzero mod p
    mod_pow(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    // Deterministic Miller-Rabin for u64.
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
