//! Exact commutative rings.
//!
//! A [`Ring`] is a context object that owns the arithmetic; elements are
//! plain values. This keeps prime-field residues small (a bare `u32`) and lets
//! matrix code be written once for every coefficient ring. [`RingElem`] is
//! the dynamically tagged counterpart used at API boundaries (CLI, JSON),
//! where mixing elements of different rings must be reported rather than
//! silently coerced.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A commutative ring with 1 whose elements are exact.
pub trait Ring: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn spec(&self) -> RingSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// The image of an integer under the unique ring map from ℤ.
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }

    /// `a^e` for any integer `e`; negative exponents need `a` to be a unit.
    fn pow(&self, a: &Self::Elem, e: i64) -> Result<Self::Elem> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = self.one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            sq = self.mul(&sq, &sq);
            k >>= 1;
        }
        Ok(acc)
    }
}

/// ℤ with arbitrary precision.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

/// ℚ; elements are kept in lowest terms with positive denominator.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

/// ℤ/pℤ for a prime `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

/// ℤ\[𝐢\] with 𝐢² = −1.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GaussianIntegers;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Gaussian {
    pub re: BigInt,
    pub im: BigInt,
}

impl Gaussian {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        Gaussian {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn i() -> Self {
        Gaussian::new(0, 1)
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// All residues `0..p` in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.p
    }
}

impl Ring for Integers {
    type Elem = BigInt;

    fn spec(&self) -> RingSpec {
        RingSpec::Integer
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &BigInt) -> Result<BigInt> {
        if a.abs().is_one() {
            Ok(a.clone())
        } else {
            Err(Error::NotInvertible(a.to_string()))
        }
    }
    fn format(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<BigInt> {
        s.trim().parse().map_err(|_| Error::ParseElem(s.to_string()))
    }
}

impl Ring for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> RingSpec {
        RingSpec::Rational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            Err(Error::NotInvertible(self.format(a)))
        } else {
            Ok(a.recip())
        }
    }
    fn format(&self, a: &BigRational) -> String {
        format!("{}/{}", a.numer(), a.denom())
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        let bad = || Error::ParseElem(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(n, d))
            }
            None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }
}

impl Ring for PrimeField {
    type Elem = u32;

    fn spec(&self) -> RingSpec {
        RingSpec::PrimeField(self.p)
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_int(&self, n: &BigInt) -> u32 {
        n.mod_floor(&BigInt::from(self.p)).to_u32().unwrap()
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn inv(&self, a: &u32) -> Result<u32> {
        if *a == 0 {
            return Err(Error::NotInvertible(format!("0 mod {}", self.p)));
        }
        // Fermat: a^(p-2)
        self.pow(a, self.p as i64 - 2)
    }
    fn format(&self, a: &u32) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<u32> {
        let n: BigInt = s.trim().parse().map_err(|_| Error::ParseElem(s.to_string()))?;
        Ok(self.from_int(&n))
    }
}

impl Ring for GaussianIntegers {
    type Elem = Gaussian;

    fn spec(&self) -> RingSpec {
        RingSpec::GaussianInteger
    }
    fn zero(&self) -> Gaussian {
        Gaussian::default()
    }
    fn one(&self) -> Gaussian {
        Gaussian::new(1, 0)
    }
    fn from_int(&self, n: &BigInt) -> Gaussian {
        Gaussian {
            re: n.clone(),
            im: BigInt::zero(),
        }
    }
    fn add(&self, a: &Gaussian, b: &Gaussian) -> Gaussian {
        Gaussian {
            re: &a.re + &b.re,
            im: &a.im + &b.im,
        }
    }
    fn neg(&self, a: &Gaussian) -> Gaussian {
        Gaussian { re: -&a.re, im: -&a.im }
    }
    fn mul(&self, a: &Gaussian, b: &Gaussian) -> Gaussian {
        Gaussian {
            re: &a.re * &b.re - &a.im * &b.im,
            im: &a.re * &b.im + &a.im * &b.re,
        }
    }
    fn is_zero(&self, a: &Gaussian) -> bool {
        a.re.is_zero() && a.im.is_zero()
    }
    fn inv(&self, a: &Gaussian) -> Result<Gaussian> {
        // units are ±1, ±i: those of norm 1, with inverse the conjugate
        let norm = &a.re * &a.re + &a.im * &a.im;
        if norm.is_one() {
            Ok(Gaussian {
                re: a.re.clone(),
                im: -&a.im,
            })
        } else {
            Err(Error::NotInvertible(a.to_string()))
        }
    }
    fn format(&self, a: &Gaussian) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<Gaussian> {
        let bad = || Error::ParseElem(s.to_string());
        let body = s.trim().strip_suffix('i').ok_or_else(bad)?;
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(k, _)| k)
            .last()
            .ok_or_else(bad)?;
        let re: BigInt = body[..split].parse().map_err(|_| bad())?;
        let im_str = &body[split..];
        let im: BigInt = im_str.strip_prefix('+').unwrap_or(im_str).parse().map_err(|_| bad())?;
        Ok(Gaussian { re, im })
    }
}

/// Which ring a dynamically tagged element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingSpec {
    Integer,
    Rational,
    PrimeField(u32),
    GaussianInteger,
}

impl RingSpec {
    /// Validating constructor for prime fields.
    pub fn prime_field(p: u32) -> Result<Self> {
        PrimeField::new(p).map(|f| RingSpec::PrimeField(f.modulus()))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integer => write!(f, "ZZ"),
            RingSpec::Rational => write!(f, "QQ"),
            RingSpec::PrimeField(p) => write!(f, "GF({p})"),
            RingSpec::GaussianInteger => write!(f, "ZZ[i]"),
        }
    }
}

/// An element tagged with its ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingElem {
    Integer(BigInt),
    Rational(BigRational),
    Residue { value: u32, p: u32 },
    Gaussian(Gaussian),
}

macro_rules! dispatch_binary {
    ($a:expr, $b:expr, $op:ident) => {
        match ($a, $b) {
            (RingElem::Integer(x), RingElem::Integer(y)) => Ok(RingElem::Integer(Integers.$op(x, y))),
            (RingElem::Rational(x), RingElem::Rational(y)) => Ok(RingElem::Rational(Rationals.$op(x, y))),
            (RingElem::Residue { value: x, p }, RingElem::Residue { value: y, p: q }) if p == q => {
                Ok(RingElem::Residue {
                    value: PrimeField { p: *p }.$op(x, y),
                    p: *p,
                })
            }
            (RingElem::Gaussian(x), RingElem::Gaussian(y)) => Ok(RingElem::Gaussian(GaussianIntegers.$op(x, y))),
            (a, b) => Err(Error::MixedRings(a.spec().to_string(), b.spec().to_string())),
        }
    };
}

impl RingElem {
    pub fn spec(&self) -> RingSpec {
        match self {
            RingElem::Integer(_) => RingSpec::Integer,
            RingElem::Rational(_) => RingSpec::Rational,
            RingElem::Residue { p, .. } => RingSpec::PrimeField(*p),
            RingElem::Gaussian(_) => RingSpec::GaussianInteger,
        }
    }

    pub fn from_int(spec: RingSpec, n: impl Into<BigInt>) -> Result<Self> {
        let n = n.into();
        Ok(match spec {
            RingSpec::Integer => RingElem::Integer(n),
            RingSpec::Rational => RingElem::Rational(Rationals.from_int(&n)),
            RingSpec::PrimeField(p) => RingElem::Residue {
                value: PrimeField::new(p)?.from_int(&n),
                p,
            },
            RingSpec::GaussianInteger => RingElem::Gaussian(GaussianIntegers.from_int(&n)),
        })
    }

    pub fn rational(num: i64, den: i64) -> Self {
        RingElem::Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn residue(value: i64, p: u32) -> Result<Self> {
        let field = PrimeField::new(p)?;
        Ok(RingElem::Residue {
            value: field.from_i64(value),
            p,
        })
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        RingElem::Gaussian(Gaussian::new(re, im))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        dispatch_binary!(self, other, add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        dispatch_binary!(self, other, sub)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        dispatch_binary!(self, other, mul)
    }

    pub fn neg(&self) -> Self {
        match self {
            RingElem::Integer(x) => RingElem::Integer(-x),
            RingElem::Rational(x) => RingElem::Rational(-x),
            RingElem::Residue { value, p } => RingElem::Residue {
                value: PrimeField { p: *p }.neg(value),
                p: *p,
            },
            RingElem::Gaussian(x) => RingElem::Gaussian(GaussianIntegers.neg(x)),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(match self {
            RingElem::Integer(x) => RingElem::Integer(Integers.inv(x)?),
            RingElem::Rational(x) => RingElem::Rational(Rationals.inv(x)?),
            RingElem::Residue { value, p } => RingElem::Residue {
                value: PrimeField { p: *p }.inv(value)?,
                p: *p,
            },
            RingElem::Gaussian(x) => RingElem::Gaussian(GaussianIntegers.inv(x)?),
        })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElem::Integer(x) => x.is_zero(),
            RingElem::Rational(x) => x.is_zero(),
            RingElem::Residue { value, .. } => *value == 0,
            RingElem::Gaussian(x) => GaussianIntegers.is_zero(x),
        }
    }

    pub fn parse(spec: RingSpec, s: &str) -> Result<Self> {
        Ok(match spec {
            RingSpec::Integer => RingElem::Integer(Integers.parse(s)?),
            RingSpec::Rational => RingElem::Rational(Rationals.parse(s)?),
            RingSpec::PrimeField(p) => RingElem::Residue {
                value: PrimeField::new(p)?.parse(s)?,
                p,
            },
            RingSpec::GaussianInteger => RingElem::Gaussian(GaussianIntegers.parse(s)?),
        })
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElem::Integer(x) => write!(f, "{x}"),
            RingElem::Rational(x) => write!(f, "{}", Rationals.format(x)),
            RingElem::Residue { value, .. } => write!(f, "{value}"),
            RingElem::Gaussian(x) => write!(f, "{x}"),
        }
    }
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_sum() {
        let s = RingElem::rational(1, 2).add(&RingElem::rational(1, 3)).unwrap();
        assert_eq!(s, RingElem::rational(5, 6));
        assert_eq!(s.to_string(), "5/6");
    }

    #[test]
    fn prime_field_product() {
        let two = RingElem::residue(2, 3).unwrap();
        assert_eq!(two.mul(&two).unwrap(), RingElem::residue(1, 3).unwrap());
    }

    #[test]
    fn gaussian_i_squared() {
        let i = RingElem::gaussian(0, 1);
        assert_eq!(
            i.mul(&i).unwrap(),
            RingElem::from_int(RingSpec::GaussianInteger, -1).unwrap()
        );
    }

    #[test]
    fn mixed_rings_rejected() {
        let a = RingElem::rational(1, 2);
        let b = RingElem::from_int(RingSpec::Integer, 1).unwrap();
        assert!(matches!(a.add(&b), Err(Error::MixedRings(..))));
        let c = RingElem::residue(1, 3).unwrap();
        let d = RingElem::residue(1, 5).unwrap();
        assert!(matches!(c.mul(&d), Err(Error::MixedRings(..))));
    }

    #[test]
    fn inverses() {
        assert_eq!(RingElem::rational(2, 3).inv().unwrap(), RingElem::rational(3, 2));
        assert_eq!(
            RingElem::residue(2, 5).unwrap().inv().unwrap(),
            RingElem::residue(3, 5).unwrap()
        );
        let two = RingElem::from_int(RingSpec::Integer, 2).unwrap();
        assert!(matches!(two.inv(), Err(Error::NotInvertible(_))));
        assert!(matches!(RingElem::rational(0, 1).inv(), Err(Error::NotInvertible(_))));
        assert!(RingElem::residue(0, 7).unwrap().inv().is_err());
        assert_eq!(RingElem::gaussian(0, 1).inv().unwrap(), RingElem::gaussian(0, -1));
        assert!(RingElem::gaussian(1, 1).inv().is_err());
    }

    #[test]
    fn prime_field_validation() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(2_147_483_647).is_ok());
        assert!(RingSpec::prime_field(9).is_err());
    }

    #[test]
    fn parse_formats() {
        assert_eq!(
            Rationals.parse("-4/6").unwrap(),
            BigRational::new((-2).into(), 3.into())
        );
        assert_eq!(Rationals.parse("7").unwrap(), BigRational::from_integer(7.into()));
        assert!(Rationals.parse("1/0").is_err());
        assert_eq!(GaussianIntegers.parse("3-2i").unwrap(), Gaussian::new(3, -2));
        assert_eq!(GaussianIntegers.parse("-1+0i").unwrap(), Gaussian::new(-1, 0));
        assert_eq!(GaussianIntegers.parse("-5-7i").unwrap(), Gaussian::new(-5, -7));
        assert!(GaussianIntegers.parse("3").is_err());
        assert_eq!(PrimeField::new(5).unwrap().parse("-1").unwrap(), 4);
    }

    #[test]
    fn negative_powers() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(Rationals.pow(&half, -3).unwrap(), Rationals.from_i64(8));
        assert!(Integers.pow(&BigInt::from(2), -1).is_err());
        assert_eq!(Integers.pow(&BigInt::from(-1), -3).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 0), BigInt::one());
        assert_eq!(binomial(2, 3), BigInt::zero());
    }

    fn check_axioms<R: Ring>(r: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem) {
        assert_eq!(r.add(&r.add(a, b), c), r.add(a, &r.add(b, c)));
        assert_eq!(r.mul(&r.mul(a, b), c), r.mul(a, &r.mul(b, c)));
        assert_eq!(r.add(a, b), r.add(b, a));
        assert_eq!(r.mul(a, b), r.mul(b, a));
        assert_eq!(r.mul(a, &r.add(b, c)), r.add(&r.mul(a, b), &r.mul(a, c)));
        assert_eq!(r.add(a, &r.neg(a)), r.zero());
        assert_eq!(r.mul(a, &r.one()), *a);
        assert_ne!(r.zero(), r.one());
        assert_eq!(r.parse(&r.format(a)).unwrap(), *a);
    }

    proptest! {
        #[test]
        fn integer_axioms(a in any::<i64>(), b in any::<i64>(), c in any::<i64>()) {
            check_axioms(&Integers, &a.into(), &b.into(), &c.into());
        }

        #[test]
        fn rational_axioms(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50, e in -50i64..50, f in 1i64..50) {
            let q = |n: i64, m: i64| BigRational::new(n.into(), m.into());
            check_axioms(&Rationals, &q(a, b), &q(c, d), &q(e, f));
        }

        #[test]
        fn rational_normal_form(n in -100i64..100, m in 1i64..100, k in 1i64..20) {
            let x = Rationals.parse(&format!("{}/{}", n * k, m * k)).unwrap();
            let y = BigRational::new(n.into(), m.into());
            prop_assert_eq!(Rationals.format(&x), Rationals.format(&y));
            prop_assert!(x.denom().is_positive());
        }

        #[test]
        fn prime_field_axioms(p in prop::sample::select(vec![2u32, 3, 5, 7, 101, 65_521]), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
            let f = PrimeField::new(p).unwrap();
            let (a, b, c) = (a % p, b % p, c % p);
            check_axioms(&f, &a, &b, &c);
            if a != 0 {
                prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
            }
        }

        #[test]
        fn gaussian_axioms(a in -30i64..30, b in -30i64..30, c in -30i64..30, d in -30i64..30, e in -30i64..30, g in -30i64..30) {
            check_axioms(&GaussianIntegers, &Gaussian::new(a, b), &Gaussian::new(c, d), &Gaussian::new(e, g));
        }
    }
}
