use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use super::LinAlgError;

/// The ground field: the rationals or a prime field `GF(p)` with `p < 2^31`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

/// An exact scalar. `Rat` values are always in lowest terms, `Mod` values
/// are residues in `[0, p)` of the owning [`FieldSpec`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Mod(u64),
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for d in [2u64, 3, 5] {
        if n % d == 0 {
            return n == d;
        }
    }
    let mut d = 7u64;
    // wheel over 6k +- 1
    while d * d <= n {
        if n % d == 0 || n % (d + 4) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    pub fn prime_field(p: u64) -> Result<Self, LinAlgError> {
        if p >= (1u64 << 31) || !is_prime_u64(p) {
            return Err(LinAlgError::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p as u32))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p as u64,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::PrimeField(_) => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::PrimeField(_) => Scalar::Mod(1),
        }
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField(p) => {
                let p = *p as i128;
                Scalar::Mod((((n as i128) % p + p) % p) as u64)
            }
        }
    }

    /// Interprets the fraction `num/den` in this field.
    pub fn from_fraction(&self, num: i64, den: i64) -> Result<Scalar, LinAlgError> {
        if den == 0 {
            return Err(LinAlgError::BadScalar(format!("{num}/{den}")));
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))),
            FieldSpec::PrimeField(_) => {
                let d = self.from_int(den);
                let n = self.from_int(num);
                let inv = self.inv(&d).ok_or_else(|| LinAlgError::BadScalar(format!("{num}/{den}")))?;
                Ok(self.mul(&n, &inv))
            }
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (FieldSpec::Rationals, Scalar::Rat(_)) => true,
            (FieldSpec::PrimeField(p), Scalar::Mod(v)) => *v < *p as u64,
            _ => false,
        }
    }

    pub fn is_zero(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod(v) => *v == 0,
        }
    }

    pub fn is_one(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (FieldSpec::PrimeField(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod((x + y) % (*p as u64)),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            (FieldSpec::PrimeField(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                let p = *p as u64;
                Scalar::Mod((x + p - y) % p)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (FieldSpec::PrimeField(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod(x * y % (*p as u64)),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (FieldSpec::PrimeField(p), Scalar::Mod(x)) => {
                let p = *p as u64;
                Scalar::Mod((p - x) % p)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => {
                if x.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(x.recip()))
                }
            }
            (FieldSpec::PrimeField(p), Scalar::Mod(x)) => {
                if *x == 0 {
                    None
                } else {
                    Some(Scalar::Mod(mod_inverse(*x, *p as u64)))
                }
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|i| self.mul(a, &i))
    }
}

/// Modular inverse by extended Euclid; `a` must be nonzero mod the prime `p`.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "inverse of a multiple of p");
    (((t0 % p as i128) + p as i128) % p as i128) as u64
}

impl Scalar {
    /// The rational value, if this scalar is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Mod(_) => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Mod(v) => Some(*v),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod(v) => write!(f, "{v}"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// Keep rational scalars reduced: BigRational::new reduces, but values built
// elsewhere can be checked here.
#[cfg(test)]
pub(crate) fn rational_is_reduced(r: &BigRational) -> bool {
    use num::Signed;
    if r.denom().is_negative() {
        return false;
    }
    num::Integer::gcd(r.numer(), r.denom()).is_one() || r.numer().is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(FieldSpec::prime_field(2).is_ok());
        assert!(FieldSpec::prime_field(3).is_ok());
        assert!(FieldSpec::prime_field(2147483647).is_ok()); // 2^31 - 1
        assert!(FieldSpec::prime_field(1).is_err());
        assert!(FieldSpec::prime_field(91).is_err()); // 7 * 13
        assert!(FieldSpec::prime_field(1u64 << 31).is_err());
    }

    #[test]
    fn characteristic() {
        assert_eq!(FieldSpec::Rationals.characteristic(), 0);
        assert_eq!(FieldSpec::prime_field(7).unwrap().characteristic(), 7);
    }

    #[test]
    fn mod_arithmetic() {
        let f = FieldSpec::prime_field(5).unwrap();
        let a = f.from_int(3);
        let b = f.from_int(4);
        assert_eq!(f.add(&a, &b), f.from_int(2));
        assert_eq!(f.mul(&a, &b), f.from_int(2));
        assert_eq!(f.sub(&a, &b), f.from_int(4));
        assert_eq!(f.inv(&a), Some(f.from_int(2)));
        assert_eq!(f.inv(&f.zero()), None);
        // negative input normalizes into [0, p)
        assert_eq!(f.from_int(-1), f.from_int(4));
    }

    #[test]
    fn large_prime_checked_products() {
        let p = 2147483647u64;
        let f = FieldSpec::prime_field(p).unwrap();
        let a = f.from_int((p - 1) as i64);
        let sq = f.mul(&a, &a); // (p-1)^2 = 1 mod p
        assert_eq!(sq, f.one());
        assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
    }

    #[test]
    fn rational_fraction() {
        let f = FieldSpec::Rationals;
        let s = f.from_fraction(4, 6).unwrap();
        assert_eq!(s.to_string(), "2/3");
        assert!(rational_is_reduced(s.as_rational().unwrap()));
        assert!(f.from_fraction(1, 0).is_err());
    }

    #[test]
    fn fraction_in_prime_field() {
        let f = FieldSpec::prime_field(7).unwrap();
        // 1/2 = 4 mod 7
        assert_eq!(f.from_fraction(1, 2).unwrap(), f.from_int(4));
        // 1/7 has no meaning mod 7
        assert!(f.from_fraction(1, 7).is_err());
    }
}
