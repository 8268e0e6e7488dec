//! Auxiliary quantities attached to the identities: the `g`, `h`, `k`
//! rational functions, the Bailey-family coefficients `A, B, D, A′`, the
//! well-poised pivot `c`, and `λ²` of the conjugate pair.
//!
//! Every function returns [`Error::DegenerateParams`] on a vanishing
//! denominator or when the quantity itself lands on a value that would
//! poison the Pochhammer symbols built from it downstream.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{degenerate, Result};
use crate::rat::{pochhammer, Rat, SurdPairBase};

/// Cached auxiliary quantities of one identity instance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DerivedParams {
    pub g: Option<Rat>,
    pub h: Option<Rat>,
    pub k: Option<Rat>,
    /// `A = f − d1 − d2 − 1`
    pub a: Option<Rat>,
    pub b: Option<Rat>,
    pub d: Option<Rat>,
    pub a_prime: Option<Rat>,
    pub c: Option<Rat>,
    pub lambda_sq: Option<Rat>,
}

impl DerivedParams {
    /// Populated fields under their report keys, in a fixed order.
    pub fn entries(&self) -> Vec<(&'static str, &Rat)> {
        let all = [
            ("g", &self.g),
            ("h", &self.h),
            ("k", &self.k),
            ("A", &self.a),
            ("B", &self.b),
            ("D", &self.d),
            ("c", &self.c),
            ("lambda_sq", &self.lambda_sq),
            ("A_prime", &self.a_prime),
        ];
        all.into_iter()
            .filter_map(|(k, v)| v.as_ref().map(|v| (k, v)))
            .collect()
    }

    pub fn with_bailey(mut self, bc: &BaileyCoefficients) -> Self {
        self.a = Some(bc.a.clone());
        self.b = Some(bc.b.clone());
        self.d = Some(bc.d.clone());
        self.c = Some(bc.c.clone());
        self.lambda_sq = Some(bc.lambda_sq());
        self
    }
}

/// `num / den`, rejecting a zero denominator and a zero result.
fn nonzero_quotient(what: &str, num: Rat, den: Rat) -> Result<Rat> {
    if den.is_zero() {
        return Err(degenerate(format!("denominator of {what} vanishes")));
    }
    let v = num.checked_div(&den)?;
    if v.is_zero() {
        return Err(degenerate(format!("{what} = 0")));
    }
    Ok(v)
}

/// `g = f(1+b−c)(1+a−c) / (ab − f(1+a+b−c))` of the extended Saalschütz sum.
pub fn g_ext_saalschutz(a: &Rat, b: &Rat, c: &Rat, f: &Rat) -> Result<Rat> {
    let num = f * (1 + b - c) * (1 + a - c);
    let den = a * b - f * (1 + a + b - c);
    nonzero_quotient("g", num, den)
}

/// `g = f(b+d−a)(f−a) / (f(a−f) − db)` of the extended 5F4 sum.
pub fn g_vwp5f4(a: &Rat, b: &Rat, d: &Rat, f: &Rat) -> Result<Rat> {
    let num = f * (b + d - a) * (f - a);
    let den = f * (a - f) - d * b;
    nonzero_quotient("g", num, den)
}

/// `h = p(a1+a2−f+1)(p−f+1) / (p(f−p−1) − a1 a2)` of the extended Whipple
/// transformation.
pub fn h_whipple_ext(f: &Rat, p: &Rat, a1: &Rat, a2: &Rat) -> Result<Rat> {
    let num = p * (a1 + a2 - f + 1) * (p - f + 1);
    let den = p * (f - p - 1) - a1 * a2;
    nonzero_quotient("h", num, den)
}

/// `a2 = 2f − 2 − d1 − d2 − a1 + N`, the parameter that makes the extended
/// Whipple 5F4 collapse to a summable 4F3.
pub fn dougall_a2(f: &Rat, a1: &Rat, d1: &Rat, d2: &Rat, n: u64) -> Rat {
    2 * f - 2 - d1 - d2 - a1 + Rat::from(n)
}

/// `h = p(f−1−d1−d2+N)(p−f+1) / (p(f−p−1) − a1(2f−2−d1−d2−a1+N))` of the
/// extended Dougall sum, written out independently of [`h_whipple_ext`].
pub fn h_dougall_ext(f: &Rat, p: &Rat, a1: &Rat, d1: &Rat, d2: &Rat, n: u64) -> Result<Rat> {
    let nn = Rat::from(n);
    let num = p * (f - 1 - d1 - d2 + &nn) * (p - f + 1);
    let den = p * (f - p - 1) - a1 * (2 * f - 2 - d1 - d2 - a1 + &nn);
    nonzero_quotient("h", num, den)
}

/// `h = p(f−p−1)/a1`, the `N → ∞` limit of [`h_dougall_ext`].
pub fn h_limit(f: &Rat, p: &Rat, a1: &Rat) -> Result<Rat> {
    nonzero_quotient("h", p * (f - p - 1), a1.clone())
}

/// `k = h(1+d1+a1−f)(1+d2+a1−f) / (d1 d2 − h(1+d1+d2+a1−f))`.
pub fn k_quotient_params(h: &Rat, a1: &Rat, d1: &Rat, d2: &Rat, f: &Rat) -> Result<Rat> {
    let num = h * (1 + d1 + a1 - f) * (1 + d2 + a1 - f);
    let den = d1 * d2 - h * (1 + d1 + d2 + a1 - f);
    nonzero_quotient("k", num, den)
}

/// `A, B, D` and `c` of the extended Bailey transformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaileyCoefficients {
    pub a: Rat,
    pub b: Rat,
    pub d: Rat,
    pub c: Rat,
}

impl BaileyCoefficients {
    /// `λ² = c²/4 − A D`.
    pub fn lambda_sq(&self) -> Rat {
        let half = self.c.half();
        &half * &half - &self.a * &self.d
    }

    /// The conjugate pair `c/2 ± λ`.
    pub fn pair_base(&self) -> SurdPairBase {
        SurdPairBase::new(self.c.half(), self.lambda_sq())
    }
}

/// `c = 2f − 2 − d1 − d2 − a1`.
pub fn bailey_c(f: &Rat, a1: &Rat, d1: &Rat, d2: &Rat) -> Rat {
    2 * f - 2 - d1 - d2 - a1
}

/// `A`, `B`, `D` over their shared denominator
/// `p(1−f+p)(1+a1+d1+d2−f) + d1 d2 a1`.
pub fn bailey_bda(f: &Rat, p: &Rat, a1: &Rat, d1: &Rat, d2: &Rat) -> Result<BaileyCoefficients> {
    let c = bailey_c(f, a1, d1, d2);
    let a = f - d1 - d2 - 1;
    if a.is_zero() {
        return Err(degenerate("A = 0"));
    }
    let q = p * (1 - f + p);
    let s = 1 + a1 + d1 + d2 - f;
    let den = &q * &s + d1 * d2 * a1;
    if den.is_zero() {
        return Err(degenerate("shared denominator of B and D vanishes"));
    }
    let b = (d1 * d2 * (&q + a1 * &c) + &q * &a * &s).checked_div(&den)?;
    let d = (-(&q) * (1 + a1 + d1 - f) * (1 + a1 + d2 - f)).checked_div(&den)?;
    if b.is_nonpositive_integer() {
        return Err(degenerate(format!("B = {b} is a nonpositive integer")));
    }
    if d.is_zero() {
        return Err(degenerate("D = 0"));
    }
    Ok(BaileyCoefficients { a, b, d, c })
}

/// `b3` from the balancing constraint of the Dougall kernel,
/// `3f = 2 + b1 + b2 + b3 + d1 + d2 + a1 − N`, together with `c`.
pub fn solve_bailey_constraints(
    f: &Rat,
    a1: &Rat,
    d1: &Rat,
    d2: &Rat,
    b1: &Rat,
    b2: &Rat,
    n: u64,
) -> (Rat, Rat) {
    let c = bailey_c(f, a1, d1, d2);
    let b3 = 3 * f - 2 - b1 - b2 - d1 - d2 - a1 + Rat::from(n);
    (c, b3)
}

/// `b3` solved from the constraint exactly as printed,
/// `3f = 2 + b1 + b2 + b3 − d1 − d2 − a1 − N`. Kept only so the test suite
/// can demonstrate that it does not balance the Dougall kernel.
pub fn b3_printed_constraint(
    f: &Rat,
    a1: &Rat,
    d1: &Rat,
    d2: &Rat,
    b1: &Rat,
    b2: &Rat,
    n: u64,
) -> Rat {
    3 * f - 2 - b1 - b2 + d1 + d2 + a1 + Rat::from(n)
}

/// Inputs of `A′` beyond the Bailey coefficients.
#[derive(Clone, Debug)]
pub struct APrimeInputs<'a> {
    pub f: &'a Rat,
    pub a1: &'a Rat,
    pub d1: &'a Rat,
    pub d2: &'a Rat,
    pub b1: &'a Rat,
    pub b2: &'a Rat,
    pub b3: &'a Rat,
    pub n: u64,
}

/// `A′ = c(1+c/2) b1 b2 b3 (f−a1−d2−1)(f−a1−d1−1) A (B+1)(−N)
///      / ((c/2)(1+c−b1)(1+c−b2)(1+c−b3)(f−d1)(f−d2)(f−a1) B (1+c+N))`.
///
/// Zero is a legitimate value here (at `N = 0`), so only the denominator
/// is guarded.
pub fn a_prime(bc: &BaileyCoefficients, x: &APrimeInputs<'_>) -> Result<Rat> {
    let c = &bc.c;
    let half = c.half();
    let nn = Rat::from(x.n);
    let num = c
        * (1 + &half)
        * x.b1
        * x.b2
        * x.b3
        * (x.f - x.a1 - x.d2 - 1)
        * (x.f - x.a1 - x.d1 - 1)
        * &bc.a
        * (&bc.b + 1)
        * (-&nn);
    let den = &half
        * (1 + c - x.b1)
        * (1 + c - x.b2)
        * (1 + c - x.b3)
        * (x.f - x.d1)
        * (x.f - x.d2)
        * (x.f - x.a1)
        * &bc.b
        * (1 + c + &nn);
    if den.is_zero() {
        return Err(degenerate("denominator of A′ vanishes"));
    }
    num.checked_div(&den)
}

/// The index-dependent `k(n) = D(A+n)/(B+n)` used inside the Bailey
/// derivation (distinct from the fixed scalar `k` of the summations).
pub fn k_of_n(bc: &BaileyCoefficients, n: u64) -> Result<Rat> {
    let nn = Rat::from(n);
    let den = &bc.b + &nn;
    if den.is_zero() {
        return Err(degenerate(format!("B + {n} = 0")));
    }
    (&bc.d * (&bc.a + &nn)).checked_div(&den)
}

/// `(k+1)_n / (k)_n` evaluated directly as `(k+n)/k`.
pub fn k_quotient_direct(k: &Rat, n: u64) -> Result<Rat> {
    if k.is_zero() {
        return Err(degenerate("k = 0"));
    }
    (k + Rat::from(n)).checked_div(k)
}

/// First factorization:
/// `1 + (B/(D A)) · n · (B+1)_n (A)_n / ((B)_n (A+1)_n)`.
pub fn k_quotient_form1(bc: &BaileyCoefficients, n: u64) -> Result<Rat> {
    let lead = bc.b.checked_div(&(&bc.d * &bc.a))?;
    let ratio = (pochhammer(&(&bc.b + 1), n) * pochhammer(&bc.a, n))
        .checked_div(&(pochhammer(&bc.b, n) * pochhammer(&(&bc.a + 1), n)))?;
    Ok(1 + lead * Rat::from(n) * ratio)
}

/// Second factorization:
/// `(A)_n/(A+1)_n · (1+c/2+λ)_n (1+c/2−λ)_n / ((c/2−λ)_n (c/2+λ)_n)`.
pub fn k_quotient_form2(bc: &BaileyCoefficients, n: u64) -> Result<Rat> {
    let pair = bc.pair_base();
    let a = pochhammer(&bc.a, n).checked_div(&pochhammer(&(&bc.a + 1), n))?;
    let p = crate::rat::paired_pochhammer(&pair.shifted(1), n)
        .checked_div(&crate::rat::paired_pochhammer(&pair, n))?;
    Ok(a * p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn degenerate<T: core::fmt::Debug>(x: Result<T>) -> bool {
        matches!(x, Err(crate::Error::DegenerateParams(_)))
    }

    #[test]
    fn g_values() {
        assert_eq!(
            g_ext_saalschutz(&r("2"), &r("3"), &r("5"), &r("7")).unwrap(),
            r("-14")
        );
        assert!(degenerate(g_ext_saalschutz(
            &r("2"),
            &r("3"),
            &r("4"),
            &r("7")
        )));
        assert!(degenerate(g_ext_saalschutz(
            &r("1"),
            &r("2"),
            &r("3"),
            &r("1")
        )));
        assert_eq!(
            g_vwp5f4(&r("3"), &r("1"), &r("1"), &r("1")).unwrap(),
            r("2")
        );
        assert!(degenerate(g_vwp5f4(&r("3"), &r("1"), &r("2"), &r("5"))));
        // f(a−f) = db: 1·(3−1) = 2·1
        assert!(degenerate(g_vwp5f4(&r("3"), &r("1"), &r("2"), &r("1"))));
    }

    #[test]
    fn h_and_k_values() {
        assert_eq!(
            h_whipple_ext(&r("10"), &r("2"), &r("1"), &r("3")).unwrap(),
            r("70/11")
        );
        assert!(degenerate(h_whipple_ext(
            &r("5"),
            &r("2"),
            &r("1"),
            &r("3")
        )));
        // p(f−p−1) = a1 a2: 2·3 = 2·3
        assert!(degenerate(h_whipple_ext(
            &r("6"),
            &r("2"),
            &r("2"),
            &r("3")
        )));
        assert_eq!(
            k_quotient_params(&r("1"), &r("1"), &r("1"), &r("1"), &r("2")).unwrap(),
            r("-1")
        );
        assert!(degenerate(k_quotient_params(
            &r("1"),
            &r("1"),
            &r("3"),
            &r("1"),
            &r("5")
        )));
        assert!(degenerate(k_quotient_params(
            &r("1"),
            &r("1"),
            &r("1"),
            &r("1"),
            &r("3")
        )));
    }

    #[test]
    fn constraint_solution() {
        let one = Rat::one();
        let (c, b3) = solve_bailey_constraints(&r("4"), &one, &one, &one, &one, &one, 2);
        assert_eq!(c, r("3"));
        assert_eq!(b3, r("7"));
        assert_eq!(
            b3_printed_constraint(&r("4"), &one, &one, &one, &one, &one, 2),
            r("13")
        );
    }

    #[test]
    fn p_equal_a1_collapse() {
        let (f, a1, d1, d2) = (r("17/3"), r("2/7"), r("-5/4"), r("1/2"));
        let bc = bailey_bda(&f, &a1, &a1, &d1, &d2).unwrap();
        assert_eq!(bc.b, bc.a);
        assert_eq!(bc.d, &f - &a1 - 1);
        assert_eq!(&bc.b + &bc.d, bc.c);
        let lambda = 1 + &a1 - &f + bc.c.half();
        assert_eq!(&lambda * &lambda, bc.lambda_sq());
    }

    #[test]
    fn k_factorizations_agree() {
        let bc = bailey_bda(&r("7/2"), &r("1/3"), &r("2/5"), &r("-1/4"), &r("3/7")).unwrap();
        for n in 0..12 {
            let k = k_of_n(&bc, n).unwrap();
            let direct = k_quotient_direct(&k, n).unwrap();
            assert_eq!(direct, k_quotient_form1(&bc, n).unwrap(), "n={n}");
            assert_eq!(direct, k_quotient_form2(&bc, n).unwrap(), "n={n}");
        }
    }
}
