//! Binary floating point with an explicit, per-value precision.
//!
//! A [`Real`] is `mant · 2^exp` with `|mant| < 2^prec` after rounding.
//! Every operation rounds to nearest, so `+ − × ÷` carry a relative error of
//! at most `2^(1−prec)`. Precision is never ambient: binary operations use
//! the larger precision of their operands.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rat::Rat;

#[derive(Clone)]
pub struct Real {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

fn round_shift(m: &BigInt, sh: u64) -> BigInt {
    if sh == 0 {
        return m.clone();
    }
    let half = BigInt::one() << (sh - 1);
    let mag = (m.abs() + half) >> sh;
    if m.is_negative() {
        -mag
    } else {
        mag
    }
}

impl Real {
    fn normalized(mant: BigInt, exp: i64, prec: u32) -> Real {
        if mant.is_zero() {
            return Real { mant, exp: 0, prec };
        }
        let bits = mant.bits();
        if bits > prec as u64 {
            let sh = bits - prec as u64;
            let m = round_shift(&mant, sh);
            // rounding may carry into one extra bit
            if m.bits() > prec as u64 {
                return Real {
                    mant: round_shift(&m, 1),
                    exp: exp + sh as i64 + 1,
                    prec,
                };
            }
            Real {
                mant: m,
                exp: exp + sh as i64,
                prec,
            }
        } else {
            Real { mant, exp, prec }
        }
    }

    pub fn zero(prec: u32) -> Real {
        Real {
            mant: BigInt::zero(),
            exp: 0,
            prec,
        }
    }

    pub fn one(prec: u32) -> Real {
        Real::from_int(1, prec)
    }

    pub fn from_int(n: i64, prec: u32) -> Real {
        Real::normalized(BigInt::from(n), 0, prec)
    }

    pub fn from_bigint(n: &BigInt, prec: u32) -> Real {
        Real::normalized(n.clone(), 0, prec)
    }

    /// `mant · 2^exp`, rounded to `prec` bits.
    pub fn from_parts(mant: BigInt, exp: i64, prec: u32) -> Real {
        Real::normalized(mant, exp, prec)
    }

    /// Nearest `prec`-bit value to `num/den`.
    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u32) -> Result<Real> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Real::zero(prec));
        }
        let shift = (prec as i64 + 2 + den.bits() as i64 - num.bits() as i64).max(0);
        let scaled = num << (shift as u64);
        let (q, r) = scaled.div_rem(den);
        // one extra bit of information for rounding
        let q2 = (q << 1u32)
            + if r.is_zero() {
                BigInt::zero()
            } else {
                r.signum() * den.signum()
            };
        Ok(Real::normalized(q2, -shift - 1, prec))
    }

    pub fn from_rat(r: &Rat, prec: u32) -> Real {
        Real::from_ratio(r.numer(), r.denom(), prec).expect("Rat denominators are nonzero")
    }

    pub fn from_f64(x: f64, prec: u32) -> Real {
        if x == 0.0 || !x.is_finite() {
            return Real::zero(prec);
        }
        let bits = x.to_bits();
        let sign = if (bits >> 63) != 0 { -1i64 } else { 1 };
        let e = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if e == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), e - 1075)
        };
        Real::normalized(BigInt::from(m) * sign, e, prec)
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn with_prec(&self, prec: u32) -> Real {
        Real::normalized(self.mant.clone(), self.exp, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Real {
        Real {
            mant: self.mant.abs(),
            exp: self.exp,
            prec: self.prec,
        }
    }

    pub fn neg(&self) -> Real {
        Real {
            mant: -&self.mant,
            exp: self.exp,
            prec: self.prec,
        }
    }

    /// floor(log2 |x|) for nonzero x.
    pub fn log2_floor(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exp + self.mant.bits() as i64 - 1)
        }
    }

    pub fn mul_pow2(&self, k: i64) -> Real {
        Real {
            mant: self.mant.clone(),
            exp: self.exp + k,
            prec: self.prec,
        }
    }

    pub fn add(&self, other: &Real) -> Real {
        let prec = self.prec.max(other.prec);
        if other.is_zero() {
            return self.with_prec(prec);
        }
        if self.is_zero() {
            return other.with_prec(prec);
        }
        let top_a = self.exp + self.mant.bits() as i64;
        let top_b = other.exp + other.mant.bits() as i64;
        let floor = top_a.max(top_b) - prec as i64 - 8;
        let clip = |x: &Real| -> (BigInt, i64) {
            if x.exp < floor {
                let sh = (floor - x.exp) as u64;
                (round_shift(&x.mant, sh), floor)
            } else {
                (x.mant.clone(), x.exp)
            }
        };
        let (ma, ea) = clip(self);
        let (mb, eb) = clip(other);
        let e = ea.min(eb);
        let sum = (ma << ((ea - e) as u64)) + (mb << ((eb - e) as u64));
        Real::normalized(sum, e, prec)
    }

    pub fn sub(&self, other: &Real) -> Real {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Real) -> Real {
        let prec = self.prec.max(other.prec);
        Real::normalized(&self.mant * &other.mant, self.exp + other.exp, prec)
    }

    pub fn div(&self, other: &Real) -> Result<Real> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let prec = self.prec.max(other.prec);
        let q = Real::from_ratio(&self.mant, &other.mant, prec)?;
        Ok(q.mul_pow2(self.exp - other.exp))
    }

    pub fn mul_rat(&self, r: &Rat) -> Real {
        let m = Real::normalized(&self.mant * r.numer(), self.exp, self.prec + 64);
        m.div(&Real::from_bigint(r.denom(), self.prec + 64))
            .expect("Rat denominators are nonzero")
            .with_prec(self.prec)
    }

    /// `self · num / den` with a single rounding per step.
    pub fn mul_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Real> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let q = Real::from_ratio(&(&self.mant * num), den, self.prec)?;
        Ok(q.mul_pow2(self.exp))
    }

    pub fn powi(&self, mut n: u32) -> Real {
        let mut base = self.clone();
        let mut acc = Real::one(self.prec);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    pub fn sqrt(&self) -> Result<Real> {
        if self.is_negative() {
            return Err(Error::Parse(String::from("sqrt of a negative number")));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let want = 2 * self.prec as i64 + 4;
        let mut sh = (want - self.mant.bits() as i64).max(0);
        if (self.exp - sh).rem_euclid(2) != 0 {
            sh += 1;
        }
        let m = (&self.mant << (sh as u64)).sqrt();
        Ok(Real::normalized(m, (self.exp - sh) / 2, self.prec))
    }

    pub fn cmp_value(&self, other: &Real) -> Ordering {
        let d = self.sub(other);
        d.signum().cmp(&0)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits();
        let sh = bits.saturating_sub(60);
        let m = (&self.mant >> sh).to_f64().unwrap_or(0.0);
        let e = self.exp + sh as i64;
        if e > 2000 {
            return m.signum() * f64::INFINITY;
        }
        if e < -2000 {
            return 0.0;
        }
        m * pow2_f64(e as i32)
    }

    /// The nearest integer (ties away from zero).
    pub fn round_to_bigint(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << (self.exp as u64)
        } else {
            round_shift(&self.mant, (-self.exp) as u64)
        }
    }

    /// Scientific notation with `digits` significant decimal digits,
    /// e.g. `1.7724538509e0`.
    pub fn to_decimal(&self, digits: usize) -> String {
        use core::fmt::Write;
        let digits = digits.max(1);
        if self.is_zero() {
            return String::from("0");
        }
        // estimate decimal exponent from the binary one
        let l2 = self.log2_floor().unwrap() as f64;
        let mut e10 = Float::floor(l2 * core::f64::consts::LOG10_2) as i64;
        let ten = BigInt::from(10);
        let scaled_int = |e10: i64| -> BigInt {
            // round(|x| · 10^(digits−1−e10)) computed exactly from mant/exp
            let k = digits as i64 - 1 - e10;
            let mut num = self.mant.abs();
            let mut den = BigInt::one();
            if k >= 0 {
                num *= num_traits::pow::pow(ten.clone(), k as usize);
            } else {
                den *= num_traits::pow::pow(ten.clone(), (-k) as usize);
            }
            if self.exp >= 0 {
                num <<= self.exp as u64;
            } else {
                den <<= (-self.exp) as u64;
            }
            (num * 2 + &den) / (den * 2)
        };
        let mut n = scaled_int(e10);
        let limit = num_traits::pow::pow(ten.clone(), digits);
        let low = num_traits::pow::pow(ten.clone(), digits - 1);
        for _ in 0..4 {
            if n >= limit {
                e10 += 1;
                n = scaled_int(e10);
            } else if n < low {
                e10 -= 1;
                n = scaled_int(e10);
            } else {
                break;
            }
        }
        let s = n.to_str_radix(10);
        let mut out = String::new();
        if self.is_negative() {
            out.push('-');
        }
        out.push_str(&s[..1]);
        if s.len() > 1 {
            out.push('.');
            out.push_str(&s[1..]);
        }
        let _ = write!(out, "e{e10}");
        out
    }

    /// `|self − other| ≤ 10^(−digits) · max(1, |reference|)`.
    pub fn agrees_with(&self, other: &Real, reference: &Real, digits: u32) -> bool {
        let diff = self.sub(other).abs();
        let scale = {
            let r = reference.abs();
            if r.cmp_value(&Real::one(r.prec)) == Ordering::Less {
                Real::one(r.prec)
            } else {
                r
            }
        };
        let tol = scale.mul(&Real::pow10_neg(digits, self.prec.max(other.prec)));
        diff.cmp_value(&tol) != Ordering::Greater
    }

    /// `10^(−d)` at the given precision.
    pub fn pow10_neg(d: u32, prec: u32) -> Real {
        let den = num_traits::pow::pow(BigInt::from(10), d as usize);
        Real::from_ratio(&BigInt::one(), &den, prec).unwrap()
    }
}

fn pow2_f64(e: i32) -> f64 {
    let mut r = 1.0f64;
    let mut b = if e >= 0 { 2.0f64 } else { 0.5f64 };
    let mut n = e.unsigned_abs();
    while n > 0 {
        if n & 1 == 1 {
            r *= b;
        }
        b *= b;
        n >>= 1;
    }
    r
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.to_decimal(((self.prec as f64) * core::f64::consts::LOG10_2) as usize)
        )
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = f
            .precision()
            .unwrap_or(((self.prec as f64) * core::f64::consts::LOG10_2) as usize);
        f.write_str(&self.to_decimal(d))
    }
}

// ---------------------------------------------------------------------------
// constants and elementary functions

/// `Σ (±1)^i / ((2i+1) k^(2i+1))` scaled by `2^w`, as an integer.
/// With `alternate` this is `atan(1/k)`, otherwise `atanh(1/k)`.
fn arctan_recip_fixed(k: u64, w: u64, alternate: bool) -> BigInt {
    let kk = BigInt::from(k) * BigInt::from(k);
    let mut power = (BigInt::one() << w) / BigInt::from(k);
    let mut acc = BigInt::zero();
    let mut i = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * i + 1);
        if alternate && i % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
        power /= &kk;
        i += 1;
    }
    acc
}

pub fn pi(prec: u32) -> Real {
    let w = prec as u64 + 32;
    let v = arctan_recip_fixed(5, w, true) * 16 - arctan_recip_fixed(239, w, true) * 4;
    Real::normalized(v, -(w as i64), prec)
}

pub fn ln2(prec: u32) -> Real {
    let w = prec as u64 + 32;
    let v = arctan_recip_fixed(3, w, false) * 2;
    Real::normalized(v, -(w as i64), prec)
}

pub fn exp(x: &Real) -> Real {
    let prec = x.prec;
    if x.is_zero() {
        return Real::one(prec);
    }
    let mag = x.log2_floor().unwrap().max(0) as u32;
    let w = prec + 32 + mag;
    let xw = x.with_prec(w);
    let l2 = ln2(w);
    let k = xw.div(&l2).expect("ln 2 is nonzero").round_to_bigint();
    let r = xw.sub(&l2.mul(&Real::from_bigint(&k, w)));
    // halve the argument s times, square back afterwards
    let s = Float::sqrt(w as f64) as u32 / 2 + 1;
    let r = r.mul_pow2(-(s as i64));
    let mut term = Real::one(w);
    let mut sum = Real::one(w);
    let eps = -(w as i64) - 4;
    let mut i = 1i64;
    loop {
        term = term.mul(&r).div(&Real::from_int(i, w)).unwrap();
        sum = sum.add(&term);
        match term.log2_floor() {
            Some(l) if l > eps => {}
            _ => break,
        }
        i += 1;
    }
    for _ in 0..s {
        sum = sum.mul(&sum);
    }
    let k = k.to_i64().expect("exponent fits in i64");
    sum.mul_pow2(k).with_prec(prec)
}

pub fn ln(x: &Real) -> Result<Real> {
    if x.signum() <= 0 {
        return Err(Error::Parse(String::from("ln of a nonpositive number")));
    }
    let prec = x.prec;
    let w = prec + 32;
    // x = m · 2^e with m ∈ [1, 2)
    let e = x.log2_floor().unwrap();
    let m = x.with_prec(w).mul_pow2(-e);
    let one = Real::one(w);
    let t = m.sub(&one).div(&m.add(&one))?;
    let t2 = t.mul(&t);
    let mut power = t.clone();
    let mut sum = t;
    let eps = -(w as i64) - 4;
    let mut i = 1i64;
    loop {
        power = power.mul(&t2);
        let term = power.div(&Real::from_int(2 * i + 1, w))?;
        sum = sum.add(&term);
        match term.log2_floor() {
            Some(l) if l > eps => {}
            _ => break,
        }
        i += 1;
    }
    let res = sum.mul_pow2(1).add(&ln2(w).mul(&Real::from_int(e, w)));
    Ok(res.with_prec(prec))
}

/// Exact Bernoulli numbers `B_0 ..= B_n` (with `B_1 = −1/2`).
pub fn bernoulli_numbers(n: usize) -> Vec<Rat> {
    // B_m = −1/(m+1) Σ_{k<m} C(m+1, k) B_k
    let mut b: Vec<Rat> = Vec::with_capacity(n + 1);
    b.push(Rat::one());
    for m in 1..=n {
        if m > 1 && m % 2 == 1 {
            b.push(Rat::zero());
            continue;
        }
        let mut acc = Rat::zero();
        let mut binom = BigInt::one(); // C(m+1, 0)
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                acc += bk * Rat::from(binom.clone());
            }
            binom = binom * BigInt::from((m + 1 - k) as u64) / BigInt::from((k + 1) as u64);
        }
        let v = -(acc.checked_div(&Rat::from((m + 1) as u64)).unwrap());
        b.push(v);
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    const PI_50: &str = "3.1415926535897932384626433832795028841971693993751";
    const E_50: &str = "2.7182818284590452353602874713526624977572470937000";
    const LN2_50: &str = "6.9314718055994530941723212145817656807550013436026e-1";

    fn digits_match(a: &str, b: &str, n: usize) -> bool {
        a.chars()
            .filter(|c| c.is_ascii_digit())
            .take(n)
            .eq(b.chars().filter(|c| c.is_ascii_digit()).take(n))
    }

    #[test]
    fn constants() {
        assert!(digits_match(&pi(256).to_decimal(50), PI_50, 49));
        assert!(digits_match(&ln2(256).to_decimal(50), LN2_50, 49));
        assert!(digits_match(&exp(&Real::one(256)).to_decimal(50), E_50, 49));
    }

    #[test]
    fn ln_exp_roundtrip() {
        for s in ["1/3", "7", "123456/7", "-5/2", "1/1000000", "40"] {
            let r: Rat = s.parse().unwrap();
            let x = Real::from_rat(&r, 200);
            let y = exp(&x);
            let back = ln(&y).unwrap();
            assert!(back.agrees_with(&x, &x, 55), "{s}: {back} vs {x}");
        }
    }

    #[test]
    fn arithmetic_rounding() {
        let third = Real::from_rat(&"1/3".parse().unwrap(), 128);
        let one = third.mul(&Real::from_int(3, 128));
        assert!(one.agrees_with(&Real::one(128), &Real::one(128), 37));
        let x = Real::from_int(1, 64).add(&Real::from_f64(1e-30, 64));
        assert_eq!(x.to_f64(), 1.0);
        assert_eq!(Real::from_f64(-0.375, 64).to_f64(), -0.375);
        assert!(Real::one(64).div(&Real::zero(64)).is_err());
    }

    #[test]
    fn sqrt_two() {
        let s = Real::from_int(2, 200).sqrt().unwrap();
        assert_eq!(
            s.to_decimal(40),
            "1.414213562373095048801688724209698078570e0"
        );
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(Real::from_int(24, 64).to_decimal(5), "2.4000e1");
        assert_eq!(Real::from_int(-1, 64).to_decimal(1), "-1e0");
        assert_eq!(
            Real::from_rat(&"1/8".parse().unwrap(), 64).to_decimal(3),
            "1.25e-1"
        );
        assert_eq!(Real::from_int(999_999, 64).to_decimal(3), "1.00e6");
        assert_eq!(Real::zero(64).to_decimal(3), "0");
    }

    #[test]
    fn bernoulli() {
        let b = bernoulli_numbers(12);
        let expect = [
            "1",
            "-1/2",
            "1/6",
            "0",
            "-1/30",
            "0",
            "1/42",
            "0",
            "-1/30",
            "0",
            "5/66",
            "0",
            "-691/2730",
        ];
        for (got, want) in b.iter().zip(expect) {
            assert_eq!(got.to_string(), want);
        }
    }
}
