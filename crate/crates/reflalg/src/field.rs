//! Exact scalar arithmetic: rationals with `i128` backing and prime fields.
//!
//! All coefficient arithmetic in this crate is exact. The rational type keeps
//! numerator and denominator reduced after every operation; prime-field
//! arithmetic works on `u64` residues. No floating point anywhere.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Scalar domain for a computation: exact rationals or F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

/// Default certification pair of primes. 113 keeps every residue in a byte;
/// 10007 guards against an unlucky rank drop at the first prime.
pub const CERTIFICATION_PRIMES: [u64; 2] = [113, 10007];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("modulus {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("modulus {p} divides the group order {order}")]
    DividesGroupOrder { p: u64, order: u64 },
}

impl FieldSpec {
    /// Checks that a prime-field modulus is an odd prime not dividing `order`.
    pub fn validate(&self, order: u64) -> Result<(), FieldError> {
        match *self {
            FieldSpec::Rational => Ok(()),
            FieldSpec::Prime(p) => {
                if p < 3 || !is_prime(p) {
                    return Err(FieldError::NotOddPrime(p));
                }
                if order % p == 0 {
                    return Err(FieldError::DividesGroupOrder { p, order });
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "f{p}"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

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

/// Reduced rational with `i128` numerator and positive denominator.
///
/// Group-algebra vectors keep tiny entries in practice; `i128` leaves ample
/// headroom, and every operation checks for overflow rather than wrapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rat {
    num: i128,
    den: i128,
}

impl Rat {
    pub const ZERO: Rat = Rat { num: 0, den: 1 };
    pub const ONE: Rat = Rat { num: 1, den: 1 };

    pub fn new(num: i128, den: i128) -> Rat {
        assert!(den != 0, "zero denominator");
        let g = gcd_i128(num, den);
        let (mut n, mut d) = if g == 0 { (0, 1) } else { (num / g, den / g) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        Rat { num: n, den: d }
    }

    pub fn from_int(n: i128) -> Rat {
        Rat { num: n, den: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn inv(&self) -> Rat {
        assert!(self.num != 0, "division by zero");
        Rat::new(self.den, self.num)
    }

    /// Residue modulo an odd prime `p` not dividing the denominator.
    pub fn mod_p(&self, p: u64) -> u64 {
        let p_i = p as i128;
        let n = self.num.rem_euclid(p_i) as u64;
        let d = self.den.rem_euclid(p_i) as u64;
        assert!(d != 0, "denominator divisible by {p}");
        mod_mul(n, mod_inv(d, p), p)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn ovf() -> ! {
    panic!("rational overflow: entry growth exceeded i128 range")
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, o: Rat) -> Rat {
        // a/b + c/d with a first gcd on denominators to limit growth.
        let g = gcd_i128(self.den, o.den);
        let lhs = self
            .num
            .checked_mul(o.den / g)
            .unwrap_or_else(|| ovf());
        let rhs = o
            .num
            .checked_mul(self.den / g)
            .unwrap_or_else(|| ovf());
        let num = lhs.checked_add(rhs).unwrap_or_else(|| ovf());
        let den = self
            .den
            .checked_mul(o.den / g)
            .unwrap_or_else(|| ovf());
        Rat::new(num, den)
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, o: Rat) -> Rat {
        self + (-o)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, o: Rat) -> Rat {
        // Cross-reduce before multiplying.
        let g1 = gcd_i128(self.num, o.den);
        let g2 = gcd_i128(o.num, self.den);
        let num = (self.num / g1)
            .checked_mul(o.num / g2)
            .unwrap_or_else(|| ovf());
        let den = (self.den / g2)
            .checked_mul(o.den / g1)
            .unwrap_or_else(|| ovf());
        Rat::new(num, den)
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, o: Rat) -> Rat {
        self * o.inv()
    }
}

pub fn mod_add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub fn mod_sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
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

pub fn mod_inv(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero mod {p}");
    mod_pow(a, p - 2, p)
}

/// Signed integer reduced into `[0, p)`.
pub fn mod_from_i64(a: i64, p: u64) -> u64 {
    a.rem_euclid(p as i64) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_reduction_and_sign() {
        assert_eq!(Rat::new(2, 4), Rat::new(1, 2));
        assert_eq!(Rat::new(1, -2), Rat::new(-1, 2));
        assert_eq!(Rat::new(0, -7), Rat::ZERO);
    }

    #[test]
    fn rat_arithmetic() {
        let a = Rat::new(1, 2);
        let b = Rat::new(1, 3);
        assert_eq!(a + b, Rat::new(5, 6));
        assert_eq!(a - b, Rat::new(1, 6));
        assert_eq!(a * b, Rat::new(1, 6));
        assert_eq!(a / b, Rat::new(3, 2));
        assert_eq!((a / b) * b, a);
    }

    #[test]
    fn rat_mod_p() {
        // 1/2 mod 113 is the inverse of 2.
        assert_eq!(Rat::new(1, 2).mod_p(113), 57);
        assert_eq!(mod_mul(57, 2, 113), 1);
    }

    #[test]
    fn mod_inverse_roundtrip() {
        for p in CERTIFICATION_PRIMES {
            for a in 1..50 {
                assert_eq!(mod_mul(a, mod_inv(a, p), p), 1);
            }
        }
    }

    #[test]
    fn primality() {
        assert!(is_prime(113));
        assert!(is_prime(10007));
        assert!(!is_prime(10006));
        assert!(!is_prime(1));
    }

    #[test]
    fn field_validation() {
        assert!(FieldSpec::Prime(113).validate(120).is_ok());
        assert_eq!(
            FieldSpec::Prime(113).validate(113 * 4),
            Err(FieldError::DividesGroupOrder { p: 113, order: 452 })
        );
        assert_eq!(
            FieldSpec::Prime(10006).validate(24),
            Err(FieldError::NotOddPrime(10006))
        );
    }
}
