//! Exact rational scalars and the Pochhammer primitives.
//!
//! [`Rat`] wraps a [`BigRational`], which is kept in lowest terms with a
//! positive denominator after every operation. Division is only available
//! through [`Rat::checked_div`] and [`Rat::recip`]; there is no sentinel for
//! a zero divisor.

use alloc::format;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{pole, Error, Result};

/// Arbitrary-precision rational number in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den`, reduced. Fails when `den == 0`.
    pub fn frac(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(num, den)))
    }

    pub fn from_big(r: BigRational) -> Self {
        Rat(r)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// True for 0, −1, −2, ...
    pub fn is_nonpositive_integer(&self) -> bool {
        self.is_integer() && !self.is_positive()
    }

    /// True when `(self)_n` vanishes, i.e. `self ∈ {0, −1, ..., −(n−1)}`.
    pub fn hits_pole_set(&self, n: u64) -> bool {
        if !self.is_nonpositive_integer() || n == 0 {
            return false;
        }
        match (-self.numer()).to_u64() {
            Some(m) => m < n,
            None => false,
        }
    }

    /// The value as an `i64` when it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rat) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(&self.0 / &rhs.0))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i32) -> Result<Self> {
        if e < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(num_traits::Pow::pow(&self.0, e)))
    }

    pub fn half(&self) -> Self {
        Rat(&self.0 / BigInt::from(2))
    }

    /// Exact square root if `self` is the square of a rational.
    pub fn rational_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(Rat(BigRational::new(n, d)))
        } else {
            None
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_int(s: &str, whole: &str) -> Result<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("malformed rational `{whole}`")));
    }
    s.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("malformed rational `{whole}`")))
}

impl FromStr for Rat {
    type Err = Error;

    /// Accepts `p`, `p/q`, with an optional leading `-` (ASCII or U+2212).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (neg, body) = if let Some(rest) = t.strip_prefix('-') {
            (true, rest)
        } else if let Some(rest) = t.strip_prefix('\u{2212}') {
            (true, rest)
        } else {
            (false, t)
        };
        let (n, d) = match body.split_once('/') {
            Some((n, d)) => (parse_int(n, s)?, parse_int(d, s)?),
            None => (parse_int(body, s)?, BigInt::one()),
        };
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        let n = if neg { -n } else { n };
        Ok(Rat(BigRational::new(n, d)))
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::int(n)
    }
}

impl From<u64> for Rat {
    fn from(n: u64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }
}

impl PartialEq<i64> for Rat {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && self.0.numer() == &BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rat {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.0.cmp(&BigRational::from_integer(BigInt::from(*other))))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                Rat(self.0.$m(rhs.0))
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: &Rat) -> Rat {
                Rat(self.0.$m(&rhs.0))
            }
        }
        impl $tr<Rat> for &Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                Rat((&self.0).$m(rhs.0))
            }
        }
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            fn $m(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$m(&rhs.0))
            }
        }
        impl $tr<i64> for Rat {
            type Output = Rat;
            fn $m(self, rhs: i64) -> Rat {
                Rat(self.0.$m(BigRational::from_integer(BigInt::from(rhs))))
            }
        }
        impl $tr<i64> for &Rat {
            type Output = Rat;
            fn $m(self, rhs: i64) -> Rat {
                Rat((&self.0).$m(BigRational::from_integer(BigInt::from(rhs))))
            }
        }
        impl $tr<Rat> for i64 {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                Rat(BigRational::from_integer(BigInt::from(self)).$m(rhs.0))
            }
        }
        impl $tr<&Rat> for i64 {
            type Output = Rat;
            fn $m(self, rhs: &Rat) -> Rat {
                Rat(BigRational::from_integer(BigInt::from(self)).$m(&rhs.0))
            }
        }
        impl $atr<Rat> for Rat {
            fn $am(&mut self, rhs: Rat) {
                self.0.$am(rhs.0);
            }
        }
        impl $atr<&Rat> for Rat {
            fn $am(&mut self, rhs: &Rat) {
                self.0.$am(&rhs.0);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl core::iter::Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl core::iter::Product for Rat {
    fn product<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::one(), |acc, x| acc * x)
    }
}

/// Conjugate pair `x ± λ` carried through its square `λ²`.
///
/// Only pair products are ever formed, so `λ` itself never needs to exist
/// as a rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurdPairBase {
    pub center: Rat,
    pub lambda_sq: Rat,
}

impl SurdPairBase {
    pub fn new(center: Rat, lambda_sq: Rat) -> Self {
        SurdPairBase { center, lambda_sq }
    }

    /// `(x + j + λ)(x + j − λ) = (x + j)² − λ²`.
    pub fn factor(&self, j: u64) -> Rat {
        let s = &self.center + Rat::from(j);
        &s * &s - &self.lambda_sq
    }

    /// The same pair shifted by an integer: `x + shift ± λ`.
    pub fn shifted(&self, shift: i64) -> Self {
        SurdPairBase::new(&self.center + shift, self.lambda_sq.clone())
    }

    /// Whether `(x+λ)_n (x−λ)_n` vanishes.
    pub fn hits_pole_set(&self, n: u64) -> bool {
        (0..n).any(|j| self.factor(j).is_zero())
    }
}

impl fmt::Display for SurdPairBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}~{}", self.center, self.lambda_sq)
    }
}

impl FromStr for SurdPairBase {
    type Err = Error;

    /// `x~L`: center `x`, `λ² = L`.
    fn from_str(s: &str) -> Result<Self> {
        let (x, l) = s
            .split_once('~')
            .ok_or_else(|| Error::Parse(format!("surd pair `{s}` lacks `~`")))?;
        Ok(SurdPairBase::new(x.parse()?, l.parse()?))
    }
}

/// Rising factorial `(a)_n = a(a+1)···(a+n−1)`, `(a)_0 = 1`.
pub fn pochhammer(a: &Rat, n: u64) -> Rat {
    let (num, den) = pochhammer_parts(a, n);
    Rat::from_bigints(num, den).expect("q^n is nonzero")
}

/// Unreduced `(p/q)_n = ∏ (p + j q) / q^n`; one gcd at the end is far
/// cheaper than reducing after every factor.
pub(crate) fn pochhammer_parts(a: &Rat, n: u64) -> (BigInt, BigInt) {
    let (p, q) = (a.numer(), a.denom());
    let mut num = BigInt::one();
    let mut x = p.clone();
    for _ in 0..n {
        if x.is_zero() {
            return (BigInt::zero(), BigInt::one());
        }
        num *= &x;
        x += q;
    }
    (num, num_traits::pow::pow(q.clone(), n as usize))
}

/// `(x+λ)_n (x−λ)_n = ∏_{j<n} ((x+j)² − λ²)`.
pub fn paired_pochhammer(base: &SurdPairBase, n: u64) -> Rat {
    let mut acc = Rat::one();
    for j in 0..n {
        let f = base.factor(j);
        if f.is_zero() {
            return Rat::zero();
        }
        acc *= f;
    }
    acc
}

/// `(g+1)_N / (g)_N`, evaluated as `(g+N)/g`.
///
/// The pole check still applies to `(g)_N` as written, so `g` in
/// `{0, −1, ..., −(N−1)}` is rejected even when the ratio would cancel.
pub fn shifted_quotient(g: &Rat, n: u64) -> Result<Rat> {
    if n == 0 {
        return Ok(Rat::one());
    }
    if g.hits_pole_set(n) {
        return Err(pole(format!("({g})_{n} vanishes")));
    }
    (g + Rat::from(n)).checked_div(g)
}

/// Product of Pochhammer symbols `∏ (a_i)_n / ∏ (b_j)_n`.
///
/// Any base (numerator or denominator) in the danger set `{0, ..., −(n−1)}`
/// is reported as a pole, matching the catalog admissibility policy.
pub fn pochhammer_ratio(num: &[Rat], den: &[Rat], n: u64) -> Result<Rat> {
    for b in num.iter().chain(den) {
        if b.hits_pole_set(n) {
            return Err(pole(format!("({b})_{n} vanishes")));
        }
    }
    let top: Rat = num.iter().map(|a| pochhammer(a, n)).product();
    let bottom: Rat = den.iter().map(|b| pochhammer(b, n)).product();
    top.checked_div(&bottom)
}

impl Rat {
    /// Canonical-form self check: lowest terms, positive denominator.
    pub fn is_canonical(&self) -> bool {
        use num_integer::Integer;
        self.denom().is_positive()
            && self.numer().gcd(self.denom()).is_one()
            && (!self.is_zero() || self.denom().is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&r("7/3"), 0), Rat::one());
        assert_eq!(pochhammer(&r("1"), 5), Rat::int(120));
        assert_eq!(pochhammer(&r("1/2"), 3), r("15/8"));
        assert_eq!(pochhammer(&r("-3"), 5), Rat::zero());
        assert_eq!(pochhammer(&r("-3"), 3), Rat::int(-6));
    }

    #[test]
    fn paired_examples() {
        let x = r("5/7");
        let p = paired_pochhammer(&SurdPairBase::new(x.clone(), Rat::zero()), 4);
        let q = pochhammer(&x, 4);
        assert_eq!(p, &q * &q);
        assert_eq!(
            paired_pochhammer(&SurdPairBase::new(Rat::one(), r("1/4")), 2),
            r("45/16")
        );
        let m = r("2/3");
        let base = SurdPairBase::new(x.clone(), &m * &m);
        assert_eq!(
            paired_pochhammer(&base, 6),
            pochhammer(&(&x + &m), 6) * pochhammer(&(&x - &m), 6)
        );
    }

    #[test]
    fn shifted_quotient_examples() {
        assert_eq!(shifted_quotient(&r("-5/3"), 0).unwrap(), Rat::one());
        assert_eq!(shifted_quotient(&r("2"), 3).unwrap(), r("5/2"));
        assert!(matches!(shifted_quotient(&r("0"), 1), Err(Error::Pole(_))));
        assert!(matches!(shifted_quotient(&r("-2"), 3), Err(Error::Pole(_))));
        // (−2)_2 = 2 is fine even though (−1)_2 = 0
        assert_eq!(shifted_quotient(&r("-2"), 2).unwrap(), Rat::zero());
    }

    #[test]
    fn text_format() {
        assert_eq!(r("6/4").to_string(), "3/2");
        assert_eq!(r("-33/175").to_string(), "-33/175");
        assert_eq!(r("\u{2212}33/175"), r("-33/175"));
        assert_eq!(r("-0").to_string(), "0");
        assert_eq!(r("8/2").to_string(), "4");
        for bad in ["1//2", "", "/2", "1/", "1/0", "a", "1.5", "--1", " - 1"] {
            assert!(bad.parse::<Rat>().is_err(), "{bad}");
        }
    }

    #[test]
    fn division_by_zero_is_error() {
        assert_eq!(
            Rat::one().checked_div(&Rat::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(Rat::zero().recip(), Err(Error::DivisionByZero));
        assert!(Rat::frac(1, 0).is_err());
    }

    #[test]
    fn pole_set() {
        assert!(r("0").hits_pole_set(1));
        assert!(!r("0").hits_pole_set(0));
        assert!(r("-3").hits_pole_set(4));
        assert!(!r("-3").hits_pole_set(3));
        assert!(!r("-1/2").hits_pole_set(10));
        assert!(!r("2").hits_pole_set(10));
    }

    #[test]
    fn surd_text() {
        let b: SurdPairBase = "3/2~-5".parse().unwrap();
        assert_eq!(b.center, r("3/2"));
        assert_eq!(b.lambda_sq, r("-5"));
        assert_eq!(b.to_string(), "3/2~-5");
    }
}
