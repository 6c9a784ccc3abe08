use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A prime modulus, validated at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u32) -> Result<Prime> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p as u64))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The exact coefficient rings supported: the integers, the rationals,
/// and prime fields F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoefficientRing {
    Integers,
    Rationals,
    PrimeField(Prime),
}

impl CoefficientRing {
    pub fn prime_field(p: u32) -> Result<CoefficientRing> {
        Ok(CoefficientRing::PrimeField(Prime::new(p)?))
    }

    pub fn is_field(self) -> bool {
        !matches!(self, CoefficientRing::Integers)
    }

    /// A prime is invertible in Z only never, in Q always, and in F_p
    /// exactly when it differs from p.
    pub fn inverts(self, prime: u32) -> bool {
        match self {
            CoefficientRing::Integers => false,
            CoefficientRing::Rationals => true,
            CoefficientRing::PrimeField(p) => p.get() != prime,
        }
    }

    pub fn tag(self) -> String {
        match self {
            CoefficientRing::Integers => "Z".to_string(),
            CoefficientRing::Rationals => "Q".to_string(),
            CoefficientRing::PrimeField(p) => format!("Fp:{}", p.get()),
        }
    }

    pub fn from_tag(tag: &str) -> Result<CoefficientRing> {
        match tag {
            "Z" => Ok(CoefficientRing::Integers),
            "Q" => Ok(CoefficientRing::Rationals),
            _ => {
                if let Some(rest) = tag.strip_prefix("Fp:") {
                    let p: u32 = rest
                        .parse()
                        .map_err(|_| Error::MachineDoc(format!("bad ring tag {tag:?}")))?;
                    CoefficientRing::prime_field(p)
                } else {
                    Err(Error::MachineDoc(format!("bad ring tag {tag:?}")))
                }
            }
        }
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

/// A coefficient in one of the supported rings. All arithmetic is exact.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coeff {
    Int(BigInt),
    Rat(BigRational),
    Mod(u64),
}

impl Coeff {
    pub fn zero(ring: CoefficientRing) -> Coeff {
        Coeff::from_i64(ring, 0)
    }

    pub fn one(ring: CoefficientRing) -> Coeff {
        Coeff::from_i64(ring, 1)
    }

    pub fn from_i64(ring: CoefficientRing, n: i64) -> Coeff {
        match ring {
            CoefficientRing::Integers => Coeff::Int(BigInt::from(n)),
            CoefficientRing::Rationals => Coeff::Rat(BigRational::from(BigInt::from(n))),
            CoefficientRing::PrimeField(p) => {
                let p = p.get() as i64;
                Coeff::Mod(n.rem_euclid(p) as u64)
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Int(a) => a.is_zero(),
            Coeff::Rat(a) => a.is_zero(),
            Coeff::Mod(a) => *a == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Int(a) => a.is_one(),
            Coeff::Rat(a) => a.is_one(),
            Coeff::Mod(a) => *a == 1,
        }
    }

    pub fn add(&self, other: &Coeff, ring: CoefficientRing) -> Coeff {
        match (self, other) {
            (Coeff::Int(a), Coeff::Int(b)) => Coeff::Int(a + b),
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a + b),
            (Coeff::Mod(a), Coeff::Mod(b)) => {
                let p = ring_modulus(ring);
                Coeff::Mod((a + b) % p)
            }
            _ => panic!("coefficient kind mismatch"),
        }
    }

    pub fn sub(&self, other: &Coeff, ring: CoefficientRing) -> Coeff {
        self.add(&other.neg(ring), ring)
    }

    pub fn mul(&self, other: &Coeff, ring: CoefficientRing) -> Coeff {
        match (self, other) {
            (Coeff::Int(a), Coeff::Int(b)) => Coeff::Int(a * b),
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a * b),
            (Coeff::Mod(a), Coeff::Mod(b)) => {
                let p = ring_modulus(ring);
                Coeff::Mod((a * b) % p)
            }
            _ => panic!("coefficient kind mismatch"),
        }
    }

    pub fn neg(&self, ring: CoefficientRing) -> Coeff {
        match self {
            Coeff::Int(a) => Coeff::Int(-a),
            Coeff::Rat(a) => Coeff::Rat(-a),
            Coeff::Mod(a) => {
                let p = ring_modulus(ring);
                Coeff::Mod(if *a == 0 { 0 } else { p - a })
            }
        }
    }

    /// Multiplicative inverse; only defined over fields, for nonzero values.
    pub fn inv(&self, ring: CoefficientRing) -> Option<Coeff> {
        if self.is_zero() {
            return None;
        }
        match self {
            Coeff::Int(_) => None,
            Coeff::Rat(a) => Some(Coeff::Rat(a.recip())),
            Coeff::Mod(a) => {
                let p = ring_modulus(ring);
                Some(Coeff::Mod(mod_pow(*a, p - 2, p)))
            }
        }
    }

    pub fn div(&self, other: &Coeff, ring: CoefficientRing) -> Option<Coeff> {
        Some(self.mul(&other.inv(ring)?, ring))
    }

    /// True for negative integers and rationals, and for prime-field values
    /// whose canonical representative lies in the upper half (p/2, p).
    /// Used only to pick a deterministic sign when printing.
    pub fn prints_negative(&self, ring: CoefficientRing) -> bool {
        match self {
            Coeff::Int(a) => a.is_negative(),
            Coeff::Rat(a) => a.is_negative(),
            Coeff::Mod(a) => {
                let p = ring_modulus(ring);
                *a > p / 2
            }
        }
    }

    /// Canonical text rendering: integers as-is, rationals as `a/b`,
    /// prime-field values as representatives in 0..p.
    pub fn render(&self) -> String {
        match self {
            Coeff::Int(a) => a.to_string(),
            Coeff::Rat(a) => {
                if a.denom().is_one() {
                    a.numer().to_string()
                } else {
                    format!("{}/{}", a.numer(), a.denom())
                }
            }
            Coeff::Mod(a) => a.to_string(),
        }
    }

    pub fn parse(ring: CoefficientRing, s: &str) -> Result<Coeff> {
        let bad = || Error::MachineDoc(format!("bad coefficient {s:?} for ring {}", ring.tag()));
        match ring {
            CoefficientRing::Integers => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Coeff::Int(n))
            }
            CoefficientRing::Rationals => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let n: BigInt = num.parse().map_err(|_| bad())?;
                let d: BigInt = den.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Coeff::Rat(BigRational::new(n, d)))
            }
            CoefficientRing::PrimeField(p) => {
                let n: u64 = s.parse().map_err(|_| bad())?;
                if n >= p.get() as u64 {
                    return Err(bad());
                }
                Ok(Coeff::Mod(n))
            }
        }
    }

    /// Map an integer coefficient into the target ring.
    pub fn reduce_int(a: &BigInt, target: CoefficientRing) -> Coeff {
        match target {
            CoefficientRing::Integers => Coeff::Int(a.clone()),
            CoefficientRing::Rationals => Coeff::Rat(BigRational::from(a.clone())),
            CoefficientRing::PrimeField(p) => {
                let p = BigInt::from(p.get());
                let r = ((a % &p) + &p) % &p;
                Coeff::Mod(r.try_into().expect("reduced residue fits in u64"))
            }
        }
    }
}

fn ring_modulus(ring: CoefficientRing) -> u64 {
    match ring {
        CoefficientRing::PrimeField(p) => p.get() as u64,
        _ => panic!("modulus requested for non-modular ring"),
    }
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(3).is_ok());
        assert!(Prime::new(97).is_ok());
        assert!(matches!(Prime::new(1), Err(Error::NotPrime(1))));
        assert!(matches!(Prime::new(4), Err(Error::NotPrime(4))));
        assert!(matches!(Prime::new(0), Err(Error::NotPrime(0))));
    }

    #[test]
    fn modular_inverse() {
        let f7 = CoefficientRing::prime_field(7).unwrap();
        for a in 1..7 {
            let c = Coeff::from_i64(f7, a);
            let inv = c.inv(f7).unwrap();
            assert!(c.mul(&inv, f7).is_one());
        }
    }

    #[test]
    fn ring_tags_round_trip() {
        for ring in [
            CoefficientRing::Integers,
            CoefficientRing::Rationals,
            CoefficientRing::prime_field(3).unwrap(),
        ] {
            assert_eq!(CoefficientRing::from_tag(&ring.tag()).unwrap(), ring);
        }
    }

    #[test]
    fn coefficient_parse_render() {
        let q = CoefficientRing::Rationals;
        let c = Coeff::parse(q, "-3/2").unwrap();
        assert_eq!(c.render(), "-3/2");
        let z = CoefficientRing::Integers;
        assert_eq!(Coeff::parse(z, "42").unwrap().render(), "42");
    }
}
