//! Generalized hypergeometric series `p+1Fp(z)` at `z = ±1`.
//!
//! Terminating series are summed exactly over the rationals with the
//! term-ratio recurrence. Convergent non-terminating series are summed in
//! [`Real`] arithmetic with an explicit tail bound.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Float, Zero};

use crate::error::{pole, Error, Result};
use crate::gamma::working_precision;
use crate::rat::{paired_pochhammer, pochhammer, Rat, SurdPairBase};
use crate::real::Real;

/// Hard cap on the number of terms summed for a non-terminating series.
pub const TERM_BUDGET: u64 = 10_000_000;

/// One parameter slot: a rational, or a conjugate pair counting as two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Param {
    Rat(Rat),
    Pair(SurdPairBase),
}

impl Param {
    /// Number of classical parameters this slot stands for.
    pub fn arity(&self) -> usize {
        match self {
            Param::Rat(_) => 1,
            Param::Pair(_) => 2,
        }
    }

    /// Sum of the parameters in the slot (`2x` for a pair).
    pub fn sum(&self) -> Rat {
        match self {
            Param::Rat(r) => r.clone(),
            Param::Pair(p) => &p.center + &p.center,
        }
    }

    /// `(a)_n`, or `(x+λ)_n (x−λ)_n` for a pair.
    pub fn pochhammer(&self, n: u64) -> Rat {
        match self {
            Param::Rat(r) => pochhammer(r, n),
            Param::Pair(p) => paired_pochhammer(p, n),
        }
    }

    /// The factor contributed when advancing from index `n` to `n+1`.
    pub fn step(&self, n: u64) -> Rat {
        match self {
            Param::Rat(r) => r + Rat::from(n),
            Param::Pair(p) => p.factor(n),
        }
    }

    pub fn shifted(&self, by: i64) -> Param {
        match self {
            Param::Rat(r) => Param::Rat(r + by),
            Param::Pair(p) => Param::Pair(p.shifted(by)),
        }
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            Param::Rat(r) => Some(r),
            Param::Pair(_) => None,
        }
    }

    /// Whether the slot's Pochhammer vanishes for some index `< n`
    /// (`n = None`: for any index).
    fn vanishes_within(&self, n: Option<u64>) -> bool {
        match (self, n) {
            (Param::Rat(r), Some(n)) => r.hits_pole_set(n),
            (Param::Rat(r), None) => r.is_nonpositive_integer(),
            (Param::Pair(p), Some(n)) => p.hits_pole_set(n),
            (Param::Pair(p), None) => match p.lambda_sq.rational_sqrt() {
                Some(l) => {
                    (&p.center + &l).is_nonpositive_integer()
                        || (&p.center - &l).is_nonpositive_integer()
                }
                None => false,
            },
        }
    }
}

impl From<Rat> for Param {
    fn from(r: Rat) -> Self {
        Param::Rat(r)
    }
}

impl From<SurdPairBase> for Param {
    fn from(p: SurdPairBase) -> Self {
        Param::Pair(p)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Rat(r) => write!(f, "{r}"),
            Param::Pair(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for Param {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.contains('~') {
            Ok(Param::Pair(s.parse()?))
        } else {
            Ok(Param::Rat(s.parse()?))
        }
    }
}

/// The argument `z`, restricted to ±1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Argument {
    One,
    MinusOne,
}

impl Argument {
    pub fn as_rat(self) -> Rat {
        match self {
            Argument::One => Rat::one(),
            Argument::MinusOne => Rat::int(-1),
        }
    }

    fn sign(self) -> i64 {
        match self {
            Argument::One => 1,
            Argument::MinusOne => -1,
        }
    }
}

impl FromStr for Argument {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" => Ok(Argument::One),
            "-1" | "\u{2212}1" => Ok(Argument::MinusOne),
            other => Err(Error::Parse(format!("z must be 1 or -1, got `{other}`"))),
        }
    }
}

impl fmt::Display for Argument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Argument::One => "1",
            Argument::MinusOne => "-1",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeriesSpec {
    pub numerators: Vec<Param>,
    pub denominators: Vec<Param>,
    pub z: Argument,
    pub termination: Option<u64>,
}

impl SeriesSpec {
    pub fn new(
        numerators: Vec<Param>,
        denominators: Vec<Param>,
        z: Argument,
        termination: Option<u64>,
    ) -> Self {
        SeriesSpec {
            numerators,
            denominators,
            z,
            termination,
        }
    }

    /// All-rational terminating series at `z = 1`.
    pub fn terminating(numerators: Vec<Rat>, denominators: Vec<Rat>, n: u64) -> Self {
        Self::new(
            numerators.into_iter().map(Param::Rat).collect(),
            denominators.into_iter().map(Param::Rat).collect(),
            Argument::One,
            Some(n),
        )
    }

    /// All-rational non-terminating series.
    pub fn nonterminating(numerators: Vec<Rat>, denominators: Vec<Rat>, z: Argument) -> Self {
        Self::new(
            numerators.into_iter().map(Param::Rat).collect(),
            denominators.into_iter().map(Param::Rat).collect(),
            z,
            None,
        )
    }

    pub fn with_z(mut self, z: Argument) -> Self {
        self.z = z;
        self
    }

    /// Number of numerator parameters (pairs count twice).
    pub fn p(&self) -> usize {
        self.numerators.iter().map(Param::arity).sum()
    }

    pub fn q(&self) -> usize {
        self.denominators.iter().map(Param::arity).sum()
    }

    /// `s = Σ denominators − Σ numerators`.
    pub fn parametric_excess(&self) -> Rat {
        let d: Rat = self.denominators.iter().map(Param::sum).sum();
        let n: Rat = self.numerators.iter().map(Param::sum).sum();
        d - n
    }

    /// Smallest `m` such that a rational numerator equals `−m`.
    pub fn natural_termination(&self) -> Option<u64> {
        self.numerators
            .iter()
            .filter_map(Param::as_rat)
            .filter(|r| r.is_nonpositive_integer())
            .filter_map(|r| (-r).to_i64())
            .map(|m| m as u64)
            .min()
    }
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Param]| {
            v.iter()
                .map(|p| format!("{p}"))
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(
            f,
            "{}F{}({}; {}; {})",
            self.p(),
            self.q(),
            join(&self.numerators),
            join(&self.denominators),
            self.z
        )?;
        if let Some(n) = self.termination {
            write!(f, " [N={n}]")?;
        }
        Ok(())
    }
}

/// Structural properties of a parameter list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub parametric_excess: Rat,
    pub is_balanced: bool,
    pub is_well_poised: bool,
    pub is_very_well_poised: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Issue {
    /// A denominator Pochhammer vanishes inside the summation range.
    DenominatorPole { index: usize, value: String },
    /// `termination = N` but no rational numerator equals `−N`.
    MissingTerminator { n: u64 },
    /// Another numerator makes the terms vanish before index N (warning).
    EarlyTermination { index: usize, value: String },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::DenominatorPole { index, value } => {
                write!(f, "denominator #{index} = {value} is a pole")
            }
            Issue::MissingTerminator { n } => write!(f, "no numerator equals -{n}"),
            Issue::EarlyTermination { index, value } => {
                write!(
                    f,
                    "numerator #{index} = {value} terminates the series early"
                )
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Validation {
    pub errors: Vec<Issue>,
    pub warnings: Vec<Issue>,
}

impl Validation {
    pub fn is_ok(&self) -> bool {
        self.errors.is_empty()
    }

    pub fn into_result(self) -> Result<Validation> {
        match self.errors.first() {
            None => Ok(self),
            Some(Issue::DenominatorPole { .. }) => Err(pole(format!("{}", self.errors[0]))),
            Some(e) => Err(Error::InvalidSeries(format!("{e}"))),
        }
    }
}

pub fn validate(spec: &SeriesSpec) -> Validation {
    let mut v = Validation::default();
    for (i, b) in spec.denominators.iter().enumerate() {
        if b.vanishes_within(spec.termination) {
            v.errors.push(Issue::DenominatorPole {
                index: i,
                value: format!("{b}"),
            });
        }
    }
    if let Some(n) = spec.termination {
        let target = Rat::from(n);
        let designated = spec
            .numerators
            .iter()
            .position(|a| a.as_rat().is_some_and(|r| (-r) == target));
        match designated {
            None => v.errors.push(Issue::MissingTerminator { n }),
            Some(d) => {
                for (i, a) in spec.numerators.iter().enumerate() {
                    if i != d && a.vanishes_within(Some(n)) {
                        v.warnings.push(Issue::EarlyTermination {
                            index: i,
                            value: format!("{a}"),
                        });
                    }
                }
            }
        }
    }
    v
}

/// The n-th summand `∏(a)_n / (∏(b)_n n!) · z^n`.
pub fn term(spec: &SeriesSpec, n: u64) -> Result<Rat> {
    let den: Rat = spec.denominators.iter().map(|b| b.pochhammer(n)).product();
    if den.is_zero() {
        return Err(pole(format!("denominator Pochhammer vanishes at n={n}")));
    }
    let num: Rat = spec.numerators.iter().map(|a| a.pochhammer(n)).product();
    let fact = pochhammer(&Rat::one(), n);
    let zn = if spec.z == Argument::MinusOne && n % 2 == 1 {
        Rat::int(-1)
    } else {
        Rat::one()
    };
    Ok(num.checked_div(&(den * fact))? * zn)
}

/// `t_{n+1} / t_n` as an exact rational.
fn ratio(spec: &SeriesSpec, n: u64) -> Result<Rat> {
    let num: Rat = spec.numerators.iter().map(|a| a.step(n)).product();
    let den: Rat = spec.denominators.iter().map(|b| b.step(n)).product();
    let den = den * Rat::from(n + 1);
    Ok(num
        .checked_div(&den)
        .map_err(|_| pole(format!("denominator vanishes at n={n}")))?
        * spec.z.as_rat())
}

/// Exact `Σ_{n=0}^{N} t_n` of a terminating series.
pub fn eval_terminating(spec: &SeriesSpec) -> Result<Rat> {
    let n_max = spec
        .termination
        .ok_or_else(|| Error::InvalidSeries(String::from("series has no termination index")))?;
    validate(spec).into_result()?;
    sum_exact(spec, n_max)
}

fn sum_exact(spec: &SeriesSpec, n_max: u64) -> Result<Rat> {
    let mut t = Rat::one();
    let mut s = Rat::one();
    for n in 0..n_max {
        t *= ratio(spec, n)?;
        if t.is_zero() {
            break;
        }
        s += &t;
    }
    Ok(s)
}

/// Stable structural checks: excess, balance, (very) well-poisedness.
pub fn classify(spec: &SeriesSpec) -> Classification {
    let s = spec.parametric_excess();
    let balanced = s.is_one();
    let mut wp = false;
    let mut vwp = false;
    if spec.p() == spec.q() + 1 {
        // try each rational numerator as the distinguished a1, first slot first
        let mut seen = Vec::new();
        for (i, a1) in spec.numerators.iter().enumerate() {
            let Param::Rat(a1) = a1 else { continue };
            if seen.contains(a1) {
                continue;
            }
            seen.push(a1.clone());
            if let Some(very) = well_poised_about(spec, i, a1) {
                wp = true;
                vwp |= very;
                if vwp {
                    break;
                }
            }
        }
    }
    Classification {
        parametric_excess: s,
        is_balanced: balanced,
        is_well_poised: wp,
        is_very_well_poised: vwp,
    }
}

/// Complement matching with numerator `skip` as a1. Returns
/// `Some(very_well_poised)` when every other numerator pairs off.
fn well_poised_about(spec: &SeriesSpec, skip: usize, a1: &Rat) -> Option<bool> {
    let target = a1 + 1;
    let mut rat_den: BTreeMap<Rat, usize> = BTreeMap::new();
    let mut pair_den: BTreeMap<(Rat, Rat), usize> = BTreeMap::new();
    for b in &spec.denominators {
        match b {
            Param::Rat(r) => *rat_den.entry(r.clone()).or_default() += 1,
            Param::Pair(p) => {
                *pair_den
                    .entry((p.center.clone(), p.lambda_sq.clone()))
                    .or_default() += 1
            }
        }
    }
    let take = |m: &mut BTreeMap<Rat, usize>, k: &Rat| -> bool {
        match m.get_mut(k) {
            Some(c) if *c > 0 => {
                *c -= 1;
                true
            }
            _ => false,
        }
    };
    let half_plus_one = a1.half() + 1;
    let mut very = false;
    for (i, a) in spec.numerators.iter().enumerate() {
        if i == skip {
            continue;
        }
        match a {
            Param::Rat(r) => {
                if !take(&mut rat_den, &(&target - r)) {
                    return None;
                }
                if *r == half_plus_one {
                    very = true;
                }
            }
            Param::Pair(p) => {
                let key = (&target - &p.center, p.lambda_sq.clone());
                match pair_den.get_mut(&key) {
                    Some(c) if *c > 0 => *c -= 1,
                    _ => return None,
                }
            }
        }
    }
    Some(very)
}

/// Result of a non-terminating summation.
#[derive(Clone, Debug)]
pub struct SeriesSum {
    pub value: Real,
    pub terms_used: u64,
}

/// Sums a convergent non-terminating series to `target_digits`.
pub fn eval_nonterminating(spec: &SeriesSpec, target_digits: u32) -> Result<Real> {
    Ok(sum_nonterminating(spec, target_digits, working_precision(target_digits))?.value)
}

/// Integer form of a parameter step: `a + n = (p + n q) / q`.
struct StepPoly {
    /// (p, q) for rationals; for pairs `((x+n)² − λ²) = ((p+nq)² s − r q²) / (q² s)`
    kind: StepKind,
}

enum StepKind {
    Rat {
        p: BigInt,
        q: BigInt,
    },
    Pair {
        p: BigInt,
        q: BigInt,
        r: BigInt,
        s: BigInt,
    },
}

impl StepPoly {
    fn new(param: &Param) -> StepPoly {
        match param {
            Param::Rat(a) => StepPoly {
                kind: StepKind::Rat {
                    p: a.numer().clone(),
                    q: a.denom().clone(),
                },
            },
            Param::Pair(b) => StepPoly {
                kind: StepKind::Pair {
                    p: b.center.numer().clone(),
                    q: b.center.denom().clone(),
                    r: b.lambda_sq.numer().clone(),
                    s: b.lambda_sq.denom().clone(),
                },
            },
        }
    }

    /// (numerator, denominator) of the step factor at index n.
    fn at(&self, n: &BigInt) -> (BigInt, BigInt) {
        match &self.kind {
            StepKind::Rat { p, q } => (p + n * q, q.clone()),
            StepKind::Pair { p, q, r, s } => {
                let c = p + n * q;
                (&c * &c * s - r * q * q, q * q * s)
            }
        }
    }
}

/// [`eval_nonterminating`] at an explicit binary precision, also reporting
/// the truncation index.
pub fn sum_nonterminating(spec: &SeriesSpec, target_digits: u32, prec: u32) -> Result<SeriesSum> {
    if spec.termination.is_some() {
        return Err(Error::InvalidSeries(String::from("series is terminating")));
    }
    validate(spec).into_result()?;
    if let Some(m) = spec.natural_termination() {
        let mut t = spec.clone();
        t.termination = Some(m);
        let v = sum_exact(&t, m)?;
        return Ok(SeriesSum {
            value: Real::from_rat(&v, prec),
            terms_used: m + 1,
        });
    }
    let s = spec.parametric_excess();
    let converges = match spec.z {
        Argument::One => s.is_positive(),
        Argument::MinusOne => s > -1,
    };
    if !converges {
        return Err(Error::Convergence(format!(
            "parametric excess {s} violates the convergence condition at z={}",
            spec.z
        )));
    }
    let nums: Vec<StepPoly> = spec.numerators.iter().map(StepPoly::new).collect();
    let dens: Vec<StepPoly> = spec.denominators.iter().map(StepPoly::new).collect();
    let sign = spec.z.sign();
    let tol = Real::pow10_neg(target_digits + 2, prec);
    let step = |t: &Real, n: u64| -> Result<Real> {
        let nb = BigInt::from(n);
        let mut top = BigInt::from(sign);
        let mut bottom = BigInt::from(n + 1);
        for a in &nums {
            let (x, y) = a.at(&nb);
            top *= x;
            bottom *= y;
        }
        for b in &dens {
            let (x, y) = b.at(&nb);
            top *= y;
            bottom *= x;
        }
        if bottom.is_zero() {
            return Err(pole(format!("denominator vanishes at n={n}")));
        }
        t.mul_ratio(&top, &bottom)
    };
    let scale_of = |sum: &Real| -> Real {
        let a = sum.abs();
        if a.log2_floor().is_some_and(|l| l >= 0) {
            a
        } else {
            Real::one(prec)
        }
    };

    let mut t = Real::one(prec);
    let mut sum = Real::one(prec);
    let mut n: u64 = 0;
    match spec.z {
        Argument::One => {
            // tail ≈ |t_M| M / (s − 1); halve the divisor for small excess
            let s_f = s.to_f64();
            let divisor = if s_f > 2.0 { s_f - 1.0 } else { s_f / 2.0 };
            let divisor = Rat::from_bigints(
                BigInt::from(Float::ceil(divisor * 1024.0) as i64),
                BigInt::from(1024),
            )
            .unwrap();
            let mut checkpoint = 64u64;
            let mut prev = None::<Real>;
            loop {
                while n < checkpoint {
                    t = step(&t, n)?;
                    n += 1;
                    sum = sum.add(&t);
                }
                let tail = t.abs().mul_rat(&(Rat::from(n).checked_div(&divisor)?));
                let drift = match &prev {
                    Some(p) => sum.sub(p).abs(),
                    None => scale_of(&sum),
                };
                let bound = scale_of(&sum).mul(&tol);
                if tail.add(&drift).cmp_value(&bound).is_le() {
                    return Ok(SeriesSum {
                        value: sum,
                        terms_used: n + 1,
                    });
                }
                if checkpoint >= TERM_BUDGET {
                    return Err(Error::Convergence(format!(
                        "tail bound not met within {TERM_BUDGET} terms"
                    )));
                }
                prev = Some(sum.clone());
                checkpoint = (checkpoint * 2).min(TERM_BUDGET);
            }
        }
        Argument::MinusOne => {
            let mut streak = 0u32;
            while n < TERM_BUDGET {
                let next = step(&t, n)?;
                n += 1;
                let decreasing =
                    next.abs().cmp_value(&t.abs()).is_le() && next.signum() != t.signum();
                streak = if decreasing { streak + 1 } else { 0 };
                t = next;
                if streak >= 64 && t.abs().cmp_value(&scale_of(&sum).mul(&tol)).is_le() {
                    // alternating, decreasing: remainder bounded by the first omitted term
                    return Ok(SeriesSum {
                        value: sum,
                        terms_used: n,
                    });
                }
                sum = sum.add(&t);
                if t.is_zero() {
                    return Ok(SeriesSum {
                        value: sum,
                        terms_used: n + 1,
                    });
                }
            }
            Err(Error::Convergence(format!(
                "alternating tail not controlled within {TERM_BUDGET} terms"
            )))
        }
    }
}

impl SeriesSpec {
    /// Exact brute-force sum via independent Pochhammer products per term.
    pub fn brute_force_sum(&self) -> Result<Rat> {
        let n = self
            .termination
            .ok_or_else(|| Error::InvalidSeries(String::from("series has no termination index")))?;
        (0..=n).map(|k| term(self, k)).sum()
    }
}

/// Parses the CLI text form: comma-separated parameters.
pub fn parse_params(s: &str) -> Result<Vec<Param>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|p| p.trim().parse()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn saal() -> SeriesSpec {
        SeriesSpec::terminating(
            vec![r("1/2"), r("1/3"), r("-2")],
            vec![r("1/4"), r("-5/12")],
            2,
        )
    }

    #[test]
    fn term_examples() {
        assert_eq!(term(&saal(), 0).unwrap(), Rat::one());
        let b = r("7/5");
        let c = r("-2/9");
        let s = SeriesSpec::terminating(vec![r("-1"), b.clone()], vec![c.clone()], 1);
        assert_eq!(term(&s, 1).unwrap(), -(b.checked_div(&c).unwrap()));
        assert_eq!(term(&saal(), 2).unwrap(), r("-768/175"));
    }

    #[test]
    fn eval_examples() {
        let s = SeriesSpec::terminating(vec![r("0"), r("3")], vec![r("5")], 0);
        assert_eq!(eval_terminating(&s).unwrap(), Rat::one());
        let (b, c) = (r("3/7"), r("11/4"));
        let s = SeriesSpec::terminating(vec![r("-1"), b.clone()], vec![c.clone()], 1);
        assert_eq!(
            eval_terminating(&s).unwrap(),
            (&c - &b).checked_div(&c).unwrap()
        );
        assert_eq!(eval_terminating(&saal()).unwrap(), r("-33/175"));
    }

    #[test]
    fn validate_examples() {
        assert!(validate(&saal()).is_ok());
        let s = SeriesSpec::terminating(vec![r("-5"), r("1/2")], vec![r("-2")], 5);
        assert!(matches!(
            validate(&s).errors[..],
            [Issue::DenominatorPole { .. }]
        ));
        let s = SeriesSpec::terminating(vec![r("-2"), r("1/2")], vec![r("3")], 3);
        assert_eq!(validate(&s).errors, vec![Issue::MissingTerminator { n: 3 }]);
        let s = SeriesSpec::terminating(vec![r("-5"), r("-2")], vec![r("3")], 5);
        let v = validate(&s);
        assert!(v.is_ok());
        assert_eq!(v.warnings.len(), 1);
        // pole beyond the summation range is fine
        let s = SeriesSpec::terminating(vec![r("-2"), r("1/2")], vec![r("-2")], 2);
        assert!(validate(&s).is_ok());
        let s = SeriesSpec::nonterminating(vec![r("1/2")], vec![r("-7")], Argument::One);
        assert!(!validate(&s).is_ok());
    }

    #[test]
    fn classify_examples() {
        let c = classify(&SeriesSpec::terminating(
            vec![r("1/2"), r("1/3"), r("-4")],
            vec![r("5/2"), r("1/2") + r("1/3") + 1 - r("5/2") - 4],
            4,
        ));
        assert!(c.is_balanced);
        assert_eq!(c.parametric_excess, Rat::one());
        // 5F4 very well-poised: a, 1+a/2, b, c, -N ; a/2, 1+a-b, 1+a-c, 1+a+N
        let a = r("3/5");
        let (b, cc) = (r("1/7"), r("-2/3"));
        let s = SeriesSpec::terminating(
            vec![a.clone(), a.half() + 1, b.clone(), cc.clone(), r("-3")],
            vec![a.half(), &a + 1 - &b, &a + 1 - &cc, &a + 4],
            3,
        );
        let c = classify(&s);
        assert!(c.is_well_poised && c.is_very_well_poised);
        // Dixon-type: well-poised only
        let s = SeriesSpec::terminating(
            vec![a.clone(), b.clone(), r("-3")],
            vec![&a + 1 - &b, &a + 4],
            3,
        );
        let c = classify(&s);
        assert!(c.is_well_poised && !c.is_very_well_poised);
        assert!(!classify(&saal()).is_well_poised);
    }

    #[test]
    fn classify_surd_pairs() {
        let c = r("5/3");
        let l2 = r("-7/2");
        let s = SeriesSpec::new(
            vec![
                Param::Rat(c.clone()),
                Param::Rat(c.half() + 1),
                Param::Pair(SurdPairBase::new(c.half() + 1, l2.clone())),
                Param::Rat(r("-2")),
            ],
            vec![
                Param::Rat(c.half()),
                Param::Pair(SurdPairBase::new(c.half(), l2)),
                Param::Rat(&c + 3),
            ],
            Argument::One,
            Some(2),
        );
        let k = classify(&s);
        assert!(k.is_very_well_poised);
    }

    #[test]
    fn recurrence_matches_brute_force_with_pairs() {
        let s = SeriesSpec::new(
            vec![
                Param::Rat(r("-4")),
                Param::Pair(SurdPairBase::new(r("1/3"), r("-2"))),
                Param::Rat(r("5/2")),
            ],
            vec![
                Param::Pair(SurdPairBase::new(r("7/4"), r("3/5"))),
                Param::Rat(r("1/9")),
            ],
            Argument::MinusOne,
            Some(4),
        );
        assert_eq!(eval_terminating(&s).unwrap(), s.brute_force_sum().unwrap());
    }

    #[test]
    fn nonterminating_errors() {
        // 1F0(a;;1) has excess −a ≤ 0
        let s = SeriesSpec::nonterminating(vec![r("1/2")], vec![], Argument::One);
        assert!(matches!(
            eval_nonterminating(&s, 12),
            Err(Error::Convergence(_))
        ));
        // a nonpositive integer numerator is summed exactly
        let s = SeriesSpec::nonterminating(vec![r("-2"), r("1/3")], vec![r("5/2")], Argument::One);
        let v = eval_nonterminating(&s, 12).unwrap();
        let mut t = s.clone();
        t.termination = Some(2);
        let exact = eval_terminating(&t).unwrap();
        assert!(v.agrees_with(&Real::from_rat(&exact, 192), &v, 40));
    }

    #[test]
    fn parse_text_form() {
        let p = parse_params("1/2, -3,2~-5").unwrap();
        assert_eq!(p.len(), 3);
        assert!(matches!(p[2], Param::Pair(_)));
        assert!(parse_params("1//2").is_err());
        assert!(parse_params("").unwrap().is_empty());
    }
}
