use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LinalgError;

/// The Mersenne prime 2^61 - 1, used for modular certificates.
pub const CERT_PRIME: u64 = (1 << 61) - 1;

/// Coefficient field: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field, LinalgError> {
        if !(2..(1 << 62)).contains(&p) || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Small(0, 1),
            Field::Prime(p) => Scalar::Mod(0, p),
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Small(1, 1),
            Field::Prime(p) => Scalar::Mod(1 % p, p),
        }
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::from_ratio_i128(n as i128, 1),
            Field::Prime(p) => Scalar::Mod(reduce_i128(n as i128, p), p),
        }
    }

    /// `n/d` in this field; fails when `d` vanishes in the field.
    pub fn from_ratio(self, n: i64, d: i64) -> Result<Scalar, LinalgError> {
        if d == 0 {
            return Err(LinalgError::DivisionByZero);
        }
        match self {
            Field::Rational => Ok(Scalar::from_ratio_i128(n as i128, d as i128)),
            Field::Prime(_) => self
                .from_i64(d)
                .inv()
                .map(|di| self.from_i64(n).mul_ref(&di))
                .ok_or(LinalgError::DivisionByZero),
        }
    }

    /// Converts a scalar of another field (a rational) into this field.
    pub fn convert(self, s: &Scalar) -> Result<Scalar, LinalgError> {
        match (self, s) {
            (Field::Rational, Scalar::Mod(..)) => Err(LinalgError::FieldMismatch),
            (Field::Rational, _) => Ok(s.clone()),
            (Field::Prime(p), Scalar::Mod(_, q)) => {
                if p == *q {
                    Ok(s.clone())
                } else {
                    Err(LinalgError::FieldMismatch)
                }
            }
            (Field::Prime(p), _) => s.to_mod_p(p).ok_or(LinalgError::DivisionByZero),
        }
    }

    pub fn contains(self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rational, Scalar::Mod(..)) => false,
            (Field::Rational, _) => true,
            (Field::Prime(p), Scalar::Mod(_, q)) => p == *q,
            (Field::Prime(_), _) => false,
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F {p}"),
        }
    }
}

/// An exact scalar. Rationals are kept in lowest terms with a positive
/// denominator and use machine integers until they overflow.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Small(i64, i64),
    Big(Box<BigRational>),
    Mod(u64, u64),
}

fn reduce_i128(n: i128, p: u64) -> u64 {
    n.rem_euclid(p as i128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl Scalar {
    fn from_ratio_i128(n: i128, d: i128) -> Scalar {
        debug_assert!(d != 0);
        let (mut n, mut d) = (n, d);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        if n > i64::MIN as i128 && n <= i64::MAX as i128 && d <= i64::MAX as i128 {
            Scalar::Small(n as i64, d as i64)
        } else {
            Scalar::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d))))
        }
    }

    fn from_big(r: BigRational) -> Scalar {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN {
                return Scalar::Small(n, d);
            }
        }
        Scalar::Big(Box::new(r))
    }

    fn to_big(&self) -> BigRational {
        match self {
            Scalar::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Scalar::Big(b) => (**b).clone(),
            Scalar::Mod(..) => panic!("modular scalar used as a rational"),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Mod(_, p) => Field::Prime(*p),
            _ => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Small(n, _) => *n == 0,
            Scalar::Big(b) => b.is_zero(),
            Scalar::Mod(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Small(n, d) => *n == 1 && *d == 1,
            Scalar::Big(b) => b.is_one(),
            Scalar::Mod(v, _) => *v == 1,
        }
    }

    /// Integer value when this is an integral rational that fits in i64.
    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Scalar::Small(n, 1) => Some(*n),
            _ => None,
        }
    }

    pub fn add_ref(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_add(*c) {
                        if s != i64::MIN {
                            return Scalar::Small(s, 1);
                        }
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                match (a * d).checked_add(c * b) {
                    Some(n) => Scalar::from_ratio_i128(n, b * d),
                    None => Scalar::from_big(self.to_big() + o.to_big()),
                }
            }
            (Scalar::Mod(a, p), Scalar::Mod(b, q)) => {
                assert_eq!(p, q, "mixed prime fields");
                let s = a + b;
                Scalar::Mod(if s >= *p { s - p } else { s }, *p)
            }
            (Scalar::Mod(..), _) | (_, Scalar::Mod(..)) => panic!("mixed fields"),
            _ => Scalar::from_big(self.to_big() + o.to_big()),
        }
    }

    pub fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Small(n, d) => Scalar::Small(-n, *d),
            Scalar::Big(b) => Scalar::from_big(-(**b).clone()),
            Scalar::Mod(v, p) => Scalar::Mod(if *v == 0 { 0 } else { p - v }, *p),
        }
    }

    pub fn sub_ref(&self, o: &Scalar) -> Scalar {
        self.add_ref(&o.neg_ref())
    }

    pub fn mul_ref(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => {
                if *a == 0 || *c == 0 {
                    return Scalar::Small(0, 1);
                }
                Scalar::from_ratio_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            (Scalar::Mod(a, p), Scalar::Mod(b, q)) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Mod(mul_mod(*a, *b, *p), *p)
            }
            (Scalar::Mod(..), _) | (_, Scalar::Mod(..)) => panic!("mixed fields"),
            _ => Scalar::from_big(self.to_big() * o.to_big()),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Small(n, d) => Scalar::from_ratio_i128(*d as i128, *n as i128),
            Scalar::Big(b) => Scalar::from_big(b.recip()),
            Scalar::Mod(v, p) => Scalar::Mod(pow_mod(*v, p - 2, *p), *p),
        })
    }

    pub fn div_ref(&self, o: &Scalar) -> Option<Scalar> {
        o.inv().map(|i| self.mul_ref(&i))
    }

    /// Reduction of a rational modulo `p`; `None` if `p` divides the denominator.
    pub fn to_mod_p(&self, p: u64) -> Option<Scalar> {
        match self {
            Scalar::Small(n, d) => {
                let dm = reduce_i128(*d as i128, p);
                if dm == 0 {
                    return None;
                }
                let nm = reduce_i128(*n as i128, p);
                Some(Scalar::Mod(mul_mod(nm, pow_mod(dm, p - 2, p), p), p))
            }
            Scalar::Big(b) => {
                let pb = BigInt::from(p);
                let dm = b.denom().mod_floor(&pb).to_u64().unwrap();
                if dm == 0 {
                    return None;
                }
                let nm = b.numer().mod_floor(&pb).to_u64().unwrap();
                Some(Scalar::Mod(mul_mod(nm, pow_mod(dm, p - 2, p), p), p))
            }
            Scalar::Mod(v, q) => (*q == p).then_some(Scalar::Mod(*v, p)),
        }
    }

    /// Total order used for canonical output (rationals by value, residues by representative).
    pub fn cmp_canonical(&self, o: &Scalar) -> Ordering {
        match (self, o) {
            (Scalar::Mod(a, _), Scalar::Mod(b, _)) => a.cmp(b),
            (Scalar::Small(a, b), Scalar::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&o.to_big()),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Small(n, _) => *n < 0,
            Scalar::Big(b) => b.is_negative(),
            Scalar::Mod(..) => false,
        }
    }

    /// Parses `n` or `n/d` into the given field.
    pub fn parse_in(field: Field, s: &str) -> Result<Scalar, LinalgError> {
        let bad = || LinalgError::Parse(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s.trim(), "1"),
        };
        let nb = BigInt::from_str(n).map_err(|_| bad())?;
        let db = BigInt::from_str(d).map_err(|_| bad())?;
        if db.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        let r = Scalar::from_big(BigRational::new(nb, db));
        field.convert(&r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Small(n, 1) => write!(f, "{n}"),
            Scalar::Small(n, d) => write!(f, "{n}/{d}"),
            Scalar::Big(b) => {
                if b.denom().is_one() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
            Scalar::Mod(v, _) => write!(f, "{v}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.add_ref(o)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self.sub_ref(o)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.mul_ref(o)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arithmetic_normalizes() {
        let q = Field::Rational;
        let a = q.from_ratio(2, 4).unwrap();
        assert_eq!(a, Scalar::Small(1, 2));
        let b = q.from_ratio(-3, -6).unwrap();
        assert_eq!(a.add_ref(&b), q.one());
        assert_eq!(q.from_ratio(1, -3).unwrap(), Scalar::Small(-1, 3));
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let q = Field::Rational;
        let big = q.from_i64(i64::MAX);
        let sq = big.mul_ref(&big);
        assert!(matches!(sq, Scalar::Big(_)));
        let back = sq.div_ref(&big).unwrap();
        assert_eq!(back, big);
        let s = big.add_ref(&big);
        assert!(matches!(s, Scalar::Big(_)));
        assert_eq!(s.sub_ref(&big), big);
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(7).unwrap();
        for n in 1..7 {
            let x = f.from_i64(n);
            assert!(x.mul_ref(&x.inv().unwrap()).is_one());
        }
        assert_eq!(f.from_i64(-1), Scalar::Mod(6, 7));
        assert!(Field::prime(9).is_err());
    }

    #[test]
    fn reduction_mod_p() {
        let q = Field::Rational;
        let x = q.from_ratio(1, 3).unwrap();
        assert_eq!(x.to_mod_p(7), Some(Scalar::Mod(5, 7)));
        assert_eq!(x.to_mod_p(3), None);
        assert!(is_prime(CERT_PRIME));
    }

    #[test]
    fn parse_and_display() {
        let q = Field::Rational;
        let x = Scalar::parse_in(q, "-6/4").unwrap();
        assert_eq!(x.to_string(), "-3/2");
        let f = Field::Prime(5);
        assert_eq!(Scalar::parse_in(f, "1/2").unwrap(), Scalar::Mod(3, 5));
        assert!(Scalar::parse_in(q, "x").is_err());
    }
}
