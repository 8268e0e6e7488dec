//! Gamma function and gamma-product evaluation at arbitrary precision.
//!
//! `ln Γ` comes from the Stirling series with exact Bernoulli coefficients,
//! applied after shifting the argument up by an integer `M` far enough that
//! the first omitted Stirling term is below the working precision. For
//! rational arguments the shift factor `(a)_M` is kept exact, so a whole
//! product of gammas is one exact rational times one `exp`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{Float, ToPrimitive};

use crate::error::{pole, Error, Result};
use crate::rat::{pochhammer, pochhammer_parts, Rat};
use crate::real::{self, bernoulli_numbers, Real};

/// Guard bits carried by every internal gamma computation.
const GUARD: u32 = 40;

struct Stirling {
    prec: u32,
    /// `B_{2k} / (2k (2k−1))` for k = 1..=K
    coeffs: Vec<Rat>,
    /// arguments at or above this are evaluated directly
    y_min: u64,
    half_ln_2pi: Real,
}

impl Stirling {
    fn new(prec: u32) -> Stirling {
        let k = (prec / 16).clamp(12, 40) as usize;
        let b = bernoulli_numbers(2 * k + 2);
        let coeffs = (1..=k)
            .map(|j| {
                let d = Rat::from((2 * j * (2 * j - 1)) as u64);
                b[2 * j].checked_div(&d).unwrap()
            })
            .collect();
        // first omitted term |B_{2K+2}| / ((2K+2)(2K+1) y^{2K+1}) < 2^-(prec+4)
        let next = b[2 * k + 2].abs();
        let log2_b = next.numer().bits() as f64 - next.denom().bits() as f64 + 1.0;
        let log2_d = Float::log2(((2 * k + 2) * (2 * k + 1)) as f64);
        let log2_y = (log2_b - log2_d + prec as f64 + 4.0) / (2 * k + 1) as f64;
        let y_min = Float::ceil(Float::exp2(log2_y)).max(2.0) as u64;
        let two_pi = real::pi(prec).mul_pow2(1);
        let half_ln_2pi = real::ln(&two_pi).unwrap().mul_pow2(-1);
        Stirling {
            prec,
            coeffs,
            y_min,
            half_ln_2pi,
        }
    }

    /// `ln Γ(y)` for `y ≥ y_min`.
    fn ln_gamma_large(&self, y: &Real) -> Real {
        let w = self.prec;
        let ln_y = real::ln(y).expect("y is large and positive");
        let half = Real::from_rat(&Rat::frac(1, 2).unwrap(), w);
        let mut acc = y.sub(&half).mul(&ln_y).sub(y).add(&self.half_ln_2pi);
        let inv = Real::one(w).div(y).unwrap();
        let inv2 = inv.mul(&inv);
        let mut power = inv;
        for c in &self.coeffs {
            acc = acc.add(&power.mul_rat(c));
            power = power.mul(&inv2);
        }
        acc
    }
}

fn near_nonpositive_integer(x: &Real) -> bool {
    let n = x.round_to_bigint();
    if n > num_bigint::BigInt::from(0) {
        return false;
    }
    let d = x.sub(&Real::from_bigint(&n, x.prec())).abs();
    match d.log2_floor() {
        None => true,
        Some(l) => l < -((x.prec() / 2) as i64),
    }
}

/// Γ(x) at the precision of `x`.
///
/// Arguments below the Stirling range are shifted up with the recurrence
/// `Γ(x) = Γ(x+M) / (x)_M`, which also covers negative non-integers.
pub fn gamma(x: &Real) -> Result<Real> {
    let prec = x.prec();
    if near_nonpositive_integer(x) {
        return Err(pole(format!("Γ pole near {}", x.to_decimal(12))));
    }
    let w = prec + GUARD;
    let st = Stirling::new(w);
    let xw = x.with_prec(w);
    let floor = xw.round_to_bigint().to_i64().ok_or_else(|| {
        Error::Convergence(format!("Γ argument {} out of range", x.to_decimal(6)))
    })?;
    let shift = if floor >= st.y_min as i64 {
        0
    } else {
        (st.y_min as i64 - floor + 1) as u64
    };
    let mut y = xw.clone();
    let mut poch = Real::one(w);
    for _ in 0..shift {
        poch = poch.mul(&y);
        y = y.add(&Real::one(w));
    }
    let lg = st.ln_gamma_large(&y);
    let g = real::exp(&lg).div(&poch)?;
    Ok(g.with_prec(prec))
}

/// Γ(r) for rational `r`.
pub fn gamma_rat(r: &Rat, prec: u32) -> Result<Real> {
    eval_gamma_product_at(&GammaProduct::new(alloc::vec![r.clone()], Vec::new()), prec)
}

/// `∏ Γ(numerator_args) / ∏ Γ(denominator_args)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GammaProduct {
    pub numerator_args: Vec<Rat>,
    pub denominator_args: Vec<Rat>,
}

impl GammaProduct {
    pub fn new(numerator_args: Vec<Rat>, denominator_args: Vec<Rat>) -> Self {
        GammaProduct {
            numerator_args,
            denominator_args,
        }
    }

    pub fn check_poles(&self) -> Result<()> {
        for a in self.numerator_args.iter().chain(&self.denominator_args) {
            if a.is_nonpositive_integer() {
                return Err(pole(format!("Γ({a})")));
            }
        }
        Ok(())
    }

    /// Cancels every pair `Γ(a) / Γ(a+m)` with integer `m` into an exact
    /// Pochhammer factor. Returns that factor and the remaining product.
    pub fn simplify(&self) -> Result<(Rat, GammaProduct)> {
        self.check_poles()?;
        let mut factor = Rat::one();
        let mut num = self.numerator_args.clone();
        let mut den = self.denominator_args.clone();
        let mut i = 0;
        while i < num.len() {
            let a = num[i].clone();
            let hit = den.iter().position(|b| {
                let d = b - &a;
                d.is_integer() && d.abs() <= Rat::int(100_000)
            });
            match hit {
                Some(j) => {
                    let b = den.swap_remove(j);
                    num.swap_remove(i);
                    let m = &b - &a;
                    let steps = m.abs().to_i64().unwrap() as u64;
                    if m.is_positive() {
                        // Γ(a)/Γ(a+m) = 1/(a)_m
                        factor = factor.checked_div(&pochhammer(&a, steps))?;
                    } else {
                        // Γ(b+m')/Γ(b) = (b)_m'
                        factor *= pochhammer(&b, steps);
                    }
                }
                None => i += 1,
            }
        }
        Ok((factor, GammaProduct::new(num, den)))
    }
}

/// Evaluates a gamma product at binary precision `prec`.
pub fn eval_gamma_product_at(gp: &GammaProduct, prec: u32) -> Result<Real> {
    let (factor, rest) = gp.simplify()?;
    if rest.numerator_args.is_empty() && rest.denominator_args.is_empty() {
        return Ok(Real::from_rat(&factor, prec));
    }
    let w = prec + GUARD;
    let st = Stirling::new(w);
    // Γ(a) = Γ(a+M) / (a)_M with (a)_M exact, kept as an unreduced fraction
    let mut top = factor.numer().clone();
    let mut bottom = factor.denom().clone();
    let mut log_sum = Real::zero(w);
    let mut shifted = |a: &Rat, sign: bool| -> Result<()> {
        let fl = a.numer() / a.denom();
        let fl = fl
            .to_i64()
            .ok_or_else(|| Error::Convergence(format!("Γ({a}) out of range")))?;
        let shift = if fl >= st.y_min as i64 {
            0
        } else {
            (st.y_min as i64 - fl + 1) as u64
        };
        let (pn, pd) = pochhammer_parts(a, shift);
        let y = a + Rat::from(shift);
        let lg = st.ln_gamma_large(&Real::from_rat(&y, w));
        if sign {
            top *= pd;
            bottom *= pn;
            log_sum = log_sum.add(&lg);
        } else {
            top *= pn;
            bottom *= pd;
            log_sum = log_sum.sub(&lg);
        }
        Ok(())
    };
    for a in &rest.numerator_args {
        shifted(a, true)?;
    }
    for b in &rest.denominator_args {
        shifted(b, false)?;
    }
    let v = real::exp(&log_sum).mul(&Real::from_ratio(&top, &bottom, w)?);
    Ok(v.with_prec(prec))
}

/// Binary precision for a decimal digit target.
pub fn working_precision(digits: u32) -> u32 {
    192u32.max(Float::ceil(3.4 * digits as f64) as u32 + 64)
}

/// Gamma product to `digits` decimal digits.
///
/// Evaluated at `p` and `p + 64` bits; the result is accepted only if both
/// agree to the requested digits.
pub fn eval_gamma_product(gp: &GammaProduct, digits: u32) -> Result<Real> {
    let p = working_precision(digits);
    let lo = eval_gamma_product_at(gp, p)?;
    let hi = eval_gamma_product_at(gp, p + 64)?;
    if !lo.agrees_with(&hi, &hi, digits) {
        return Err(Error::Precision(format!(
            "gamma product differs between {p} and {} bits",
            p + 64
        )));
    }
    Ok(hi.with_prec(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::borrow::ToOwned;
    use alloc::vec;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    const SQRT_PI: &str = "1.7724538509055160272981674833411451827975494561224";

    #[test]
    fn small_values() {
        let g5 = gamma(&Real::from_int(5, 256)).unwrap();
        assert!(g5.agrees_with(&Real::from_int(24, 256), &g5, 70));
        let h = gamma(&Real::from_rat(&r("1/2"), 256)).unwrap();
        assert_eq!(h.to_decimal(50), SQRT_PI.to_owned() + "e0");
        let hr = gamma_rat(&r("1/2"), 256).unwrap();
        assert!(hr.agrees_with(&h, &h, 70));
    }

    #[test]
    fn reflection_identity() {
        // Γ(1/3) Γ(2/3) = 2π/√3
        let p = 256;
        let a = gamma_rat(&r("1/3"), p).unwrap();
        let b = gamma_rat(&r("2/3"), p).unwrap();
        let want = real::pi(p)
            .mul_pow2(1)
            .div(&Real::from_int(3, p).sqrt().unwrap())
            .unwrap();
        assert!(a.mul(&b).agrees_with(&want, &want, 70));
    }

    #[test]
    fn negative_arguments() {
        // Γ(−1/2) = −2√π
        let g = gamma(&Real::from_rat(&r("-1/2"), 200)).unwrap();
        let want = Real::from_rat(&r("1/2"), 200);
        let want = gamma(&want).unwrap().mul(&Real::from_int(-2, 200));
        assert!(g.agrees_with(&want, &want, 55));
        assert!(matches!(
            gamma(&Real::from_int(-3, 200)),
            Err(Error::Pole(_))
        ));
        assert!(matches!(gamma(&Real::zero(200)), Err(Error::Pole(_))));
    }

    #[test]
    fn product_simplification() {
        let empty = GammaProduct::default();
        assert_eq!(
            eval_gamma_product(&empty, 12).unwrap().to_decimal(5),
            "1.0000e0"
        );
        let k = r("3/2");
        let gp = GammaProduct::new(vec![k.clone()], vec![&k + 1]);
        let (f, rest) = gp.simplify().unwrap();
        assert_eq!(f, r("2/3"));
        assert!(rest.numerator_args.is_empty() && rest.denominator_args.is_empty());
        let gp = GammaProduct::new(vec![r("13/2")], vec![r("3/2")]);
        assert_eq!(gp.simplify().unwrap().0, pochhammer(&r("3/2"), 5));
        assert!(GammaProduct::new(vec![r("-2")], vec![]).simplify().is_err());
    }

    #[test]
    fn recurrence_ulps() {
        let p = 256;
        for s in ["1/7", "3/2", "49/3", "50", "1/100", "22/7"] {
            let x = Real::from_rat(&r(s), p);
            let g = gamma(&x).unwrap();
            let g1 = gamma(&x.add(&Real::one(p))).unwrap();
            let diff = g1.sub(&x.mul(&g)).abs();
            let ulp = g1.log2_floor().unwrap() - p as i64 + 1;
            assert!(
                diff.is_zero() || diff.log2_floor().unwrap() <= ulp + 2,
                "{s}"
            );
        }
    }
}
