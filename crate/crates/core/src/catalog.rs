//! Executable identity catalog.
//!
//! Every entry builds both sides of an identity from a parameter
//! assignment as a sum of `coefficient × factor` terms, where a factor is a
//! hypergeometric series or a gamma product. Terminating entries are
//! compared exactly; non-terminating entries numerically through a
//! two-precision ladder.

mod entries;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::derived::DerivedParams;
use crate::error::{degenerate, Error, Result};
use crate::gamma::{eval_gamma_product_at, working_precision, GammaProduct};
use crate::rat::Rat;
use crate::real::Real;
use crate::series::{
    classify, eval_terminating, sum_nonterminating, validate, Argument, Classification, Param,
    SeriesSpec,
};

pub use entries::CATALOG;

/// Consecutive rejected draws after which sampling gives up.
pub const MAX_REJECTIONS: u64 = 10_000;
/// Bounds of the rational sampler: `|numerator| ≤ 30`, `1 ≤ denominator ≤ 12`.
pub const SAMPLE_NUM_BOUND: i64 = 30;
pub const SAMPLE_DEN_BOUND: i64 = 12;
/// Minimum parametric excess drawn for non-terminating entries.
pub const MIN_NUMERIC_EXCESS: i64 = 5;
/// Default decimal digits for numeric verification.
pub const DEFAULT_DIGITS: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    TerminatingExact,
    NonterminatingNumeric,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::TerminatingExact => "terminating-exact",
            Kind::NonterminatingNumeric => "nonterminating-numeric",
        }
    }
}

/// Expected classification of an entry's left-hand series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Structure {
    VeryWellPoised,
    WellPoised,
    Balanced,
    Plain,
}

impl Structure {
    pub fn as_str(self) -> &'static str {
        match self {
            Structure::VeryWellPoised => "very-well-poised",
            Structure::WellPoised => "well-poised",
            Structure::Balanced => "balanced",
            Structure::Plain => "plain",
        }
    }

    pub fn holds(self, c: &Classification) -> bool {
        match self {
            Structure::VeryWellPoised => c.is_very_well_poised && c.is_well_poised,
            Structure::WellPoised => c.is_well_poised,
            Structure::Balanced => c.is_balanced,
            Structure::Plain => true,
        }
    }
}

/// Ordered parameter assignment; `N` (when used) is stored as an integer
/// entry named `"N"`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment(pub Vec<(String, Rat)>);

impl Assignment {
    pub fn new() -> Self {
        Assignment(Vec::new())
    }

    pub fn with(mut self, name: &str, value: Rat) -> Self {
        self.set(name, value);
        self
    }

    pub fn set(&mut self, name: &str, value: Rat) {
        match self.0.iter_mut().find(|(k, _)| k == name) {
            Some(slot) => slot.1 = value,
            None => self.0.push((name.to_string(), value)),
        }
    }

    pub fn get(&self, name: &str) -> Result<&Rat> {
        self.0
            .iter()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v)
            .ok_or_else(|| Error::MissingParameter(name.to_string()))
    }

    /// The termination index `N`.
    pub fn n(&self) -> Result<u64> {
        let v = self.get("N")?;
        v.to_i64()
            .filter(|n| *n >= 0)
            .map(|n| n as u64)
            .ok_or_else(|| Error::Parse(format!("N must be a nonnegative integer, got {v}")))
    }

    pub fn take<const K: usize>(&self, names: [&str; K]) -> Result<[Rat; K]> {
        let mut out: [Rat; K] = core::array::from_fn(|_| Rat::zero());
        for (slot, name) in out.iter_mut().zip(names) {
            *slot = self.get(name)?.clone();
        }
        Ok(out)
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// One factor of a term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    One,
    Series(SeriesSpec),
    Gamma(GammaProduct),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rat,
    pub factor: Factor,
}

/// `Σ coeff · factor`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expr(pub Vec<Term>);

impl Expr {
    pub fn series(coeff: Rat, spec: SeriesSpec) -> Expr {
        Expr(alloc::vec![Term {
            coeff,
            factor: Factor::Series(spec)
        }])
    }

    pub fn scalar(coeff: Rat) -> Expr {
        Expr(alloc::vec![Term {
            coeff,
            factor: Factor::One
        }])
    }

    pub fn gamma(coeff: Rat, gp: GammaProduct) -> Expr {
        Expr(alloc::vec![Term {
            coeff,
            factor: Factor::Gamma(gp)
        }])
    }

    pub fn plus(mut self, coeff: Rat, factor: Factor) -> Expr {
        self.0.push(Term { coeff, factor });
        self
    }

    /// Exact value; every series must be terminating.
    pub fn eval_exact(&self) -> Result<Rat> {
        let mut acc = Rat::zero();
        for t in &self.0 {
            let v = match &t.factor {
                Factor::One => Rat::one(),
                Factor::Series(s) => eval_terminating(s)?,
                Factor::Gamma(_) => {
                    return Err(Error::InvalidSeries(String::from(
                        "gamma product in an exact expression",
                    )))
                }
            };
            acc += &t.coeff * v;
        }
        Ok(acc)
    }

    /// Numeric value at binary precision `prec`; returns the value and the
    /// largest truncation index used by any series.
    pub fn eval_numeric(&self, digits: u32, prec: u32) -> Result<(Real, u64)> {
        let mut acc = Real::zero(prec);
        let mut terms = 0;
        for t in &self.0 {
            let v = match &t.factor {
                Factor::One => Real::one(prec),
                Factor::Series(s) if s.termination.is_some() => {
                    Real::from_rat(&eval_terminating(s)?, prec)
                }
                Factor::Series(s) => {
                    let sum = sum_nonterminating(s, digits, prec)?;
                    terms = terms.max(sum.terms_used);
                    sum.value
                }
                Factor::Gamma(gp) => eval_gamma_product_at(gp, prec)?,
            };
            acc = acc.add(&v.mul_rat(&t.coeff));
        }
        Ok((acc, terms))
    }

    fn series_specs(&self) -> impl Iterator<Item = &SeriesSpec> {
        self.0.iter().filter_map(|t| match &t.factor {
            Factor::Series(s) => Some(s),
            _ => None,
        })
    }

    fn gamma_products(&self) -> impl Iterator<Item = &GammaProduct> {
        self.0.iter().filter_map(|t| match &t.factor {
            Factor::Gamma(g) => Some(g),
            _ => None,
        })
    }
}

/// Output of an entry builder.
#[derive(Clone, Debug)]
pub struct Sides {
    pub lhs: Expr,
    pub rhs: Expr,
    pub derived: DerivedParams,
}

/// Catalog entry.
pub struct IdentityDef {
    pub id: &'static str,
    /// Short human-readable name.
    pub title: &'static str,
    pub kind: Kind,
    /// Free parameters in sampling order (`N` is implied by `uses_n`).
    pub free_params: &'static [&'static str],
    pub uses_n: bool,
    pub structure: Structure,
    pub(crate) build: fn(&Assignment) -> Result<Sides>,
    /// Extra, entry-specific draws appended after the rational parameters.
    pub(crate) extra: Option<fn(&mut ChaCha8Rng, &mut Assignment)>,
}

impl fmt::Debug for IdentityDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityDef")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .finish()
    }
}

impl IdentityDef {
    /// Parameter names including `N` when used.
    pub fn param_names(&self) -> Vec<&'static str> {
        let mut v: Vec<&'static str> = self.free_params.to_vec();
        if self.uses_n {
            v.push("N");
        }
        v
    }
}

pub fn lookup(id: &str) -> Result<&'static IdentityDef> {
    CATALOG
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// A concrete, admissible instance of a catalog identity.
#[derive(Clone, Debug)]
pub struct IdentityInstance {
    pub def: &'static IdentityDef,
    pub assignment: Assignment,
    pub derived: DerivedParams,
    pub lhs: Expr,
    pub rhs: Expr,
}

impl IdentityInstance {
    /// The first series of the left-hand side.
    pub fn lhs_spec(&self) -> Option<&SeriesSpec> {
        self.lhs.series_specs().next()
    }

    pub fn classification(&self) -> Option<Classification> {
        self.lhs_spec().map(classify)
    }
}

/// Pole-like failures while building are reported as degenerate parameters.
fn as_degenerate(e: Error) -> Error {
    match e {
        Error::Pole(m) => Error::DegenerateParams(m),
        Error::DivisionByZero => degenerate("division by zero while building"),
        other => other,
    }
}

/// Builds and admissibility-checks an instance.
pub fn build_instance(def_id: &str, assignment: &Assignment) -> Result<IdentityInstance> {
    let def = lookup(def_id)?;
    build_def(def, assignment)
}

pub fn build_def(def: &'static IdentityDef, assignment: &Assignment) -> Result<IdentityInstance> {
    for name in def.param_names() {
        assignment.get(name)?;
    }
    let sides = (def.build)(assignment).map_err(as_degenerate)?;
    let inst = IdentityInstance {
        def,
        assignment: assignment.clone(),
        derived: sides.derived,
        lhs: sides.lhs,
        rhs: sides.rhs,
    };
    admissible(&inst)?;
    Ok(inst)
}

/// Rejects every instance in which some Pochhammer base of a series hits
/// its danger set, a non-terminating series has a nonpositive-integer
/// parameter or fails to converge, or a gamma argument is a pole.
fn admissible(inst: &IdentityInstance) -> Result<()> {
    for spec in inst.lhs.series_specs().chain(inst.rhs.series_specs()) {
        if !validate(spec).is_ok() {
            return Err(degenerate(format!("series {spec} fails validation")));
        }
        match spec.termination {
            Some(n) => {
                let bad = spec
                    .numerators
                    .iter()
                    .chain(&spec.denominators)
                    .find(|p| match p {
                        Param::Rat(r) => r.hits_pole_set(n),
                        Param::Pair(b) => b.hits_pole_set(n),
                    });
                if let Some(b) = bad {
                    return Err(degenerate(format!(
                        "Pochhammer base {b} vanishes before N={n}"
                    )));
                }
            }
            None => {
                let bad = spec
                    .numerators
                    .iter()
                    .filter_map(Param::as_rat)
                    .find(|r| r.is_nonpositive_integer());
                if let Some(b) = bad {
                    return Err(degenerate(format!(
                        "numerator {b} truncates a non-terminating series"
                    )));
                }
                let s = spec.parametric_excess();
                let ok = match spec.z {
                    Argument::One => s.is_positive(),
                    Argument::MinusOne => s > -1,
                };
                if !ok {
                    return Err(degenerate(format!(
                        "parametric excess {s} violates convergence"
                    )));
                }
            }
        }
    }
    for gp in inst.lhs.gamma_products().chain(inst.rhs.gamma_products()) {
        gp.check_poles().map_err(as_degenerate)?;
    }
    Ok(())
}

/// Outcome of a successful verification run (pass or mismatch).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
    /// Largest truncation index for numeric entries.
    pub terms_used: Option<u64>,
}

/// Verifies an instance: exact equality for terminating entries,
/// `|lhs − rhs| ≤ 10^−digits · max(1, |rhs|)` for numeric ones.
pub fn verify(inst: &IdentityInstance, digits: u32) -> Result<Verdict> {
    match inst.def.kind {
        Kind::TerminatingExact => {
            let l = inst.lhs.eval_exact()?;
            let r = inst.rhs.eval_exact()?;
            Ok(Verdict {
                pass: l == r,
                lhs: l.to_string(),
                rhs: r.to_string(),
                terms_used: None,
            })
        }
        Kind::NonterminatingNumeric => verify_nonterminating(inst, digits),
    }
}

/// Numeric comparison at `p` and `p + 64` bits. Each side must be stable
/// across the ladder (otherwise [`Error::Precision`]); the verdict compares
/// the higher-precision values.
pub fn verify_nonterminating(inst: &IdentityInstance, digits: u32) -> Result<Verdict> {
    let p = working_precision(digits);
    let (l_lo, t_lo) = inst.lhs.eval_numeric(digits, p)?;
    let (l_hi, t_hi) = inst.lhs.eval_numeric(digits, p + 64)?;
    let (r_lo, _) = inst.rhs.eval_numeric(digits, p)?;
    let (r_hi, _) = inst.rhs.eval_numeric(digits, p + 64)?;
    if !l_lo.agrees_with(&l_hi, &l_hi, digits) {
        return Err(Error::Precision(format!(
            "left side unstable between {p} and {} bits",
            p + 64
        )));
    }
    if !r_lo.agrees_with(&r_hi, &r_hi, digits) {
        return Err(Error::Precision(format!(
            "right side unstable between {p} and {} bits",
            p + 64
        )));
    }
    let shown = digits as usize + 3;
    Ok(Verdict {
        pass: l_hi.agrees_with(&r_hi, &r_hi, digits),
        lhs: l_hi.to_decimal(shown),
        rhs: r_hi.to_decimal(shown),
        terms_used: Some(t_lo.max(t_hi)),
    })
}

/// A uniformly drawn rational with `|num| ≤ 30`, `1 ≤ den ≤ 12`.
pub fn draw_rat(rng: &mut ChaCha8Rng) -> Rat {
    let num = rng.gen_range(-SAMPLE_NUM_BOUND..=SAMPLE_NUM_BOUND);
    let den = rng.gen_range(1..=SAMPLE_DEN_BOUND);
    Rat::frac(num, den).expect("den ≥ 1")
}

pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(index))
}

/// One full draw of an entry's parameters.
pub fn draw_assignment(def: &IdentityDef, rng: &mut ChaCha8Rng, max_n: u64) -> Assignment {
    let mut a = Assignment::new();
    for name in def.free_params {
        a.set(name, draw_rat(rng));
    }
    if def.uses_n {
        a.set("N", Rat::from(rng.gen_range(0..=max_n)));
    }
    if let Some(extra) = def.extra {
        extra(rng, &mut a);
    }
    a
}

/// Sampler-only policy on top of admissibility: numeric entries need
/// parametric excess ≥ 5 so direct summation meets its tolerance.
fn sampler_accepts(inst: &IdentityInstance) -> bool {
    match inst.def.kind {
        Kind::TerminatingExact => true,
        Kind::NonterminatingNumeric => inst.lhs.series_specs().all(|s| {
            s.termination.is_some() || s.parametric_excess() >= Rat::int(MIN_NUMERIC_EXCESS)
        }),
    }
}

#[derive(Clone, Debug)]
pub struct Sampled {
    pub instance: IdentityInstance,
    /// Draws rejected before this instance was accepted.
    pub rejections: u64,
}

/// Draws an admissible instance from `rng`, rejecting and redrawing.
pub fn sample_with(def: &'static IdentityDef, rng: &mut ChaCha8Rng, max_n: u64) -> Result<Sampled> {
    let mut rejections = 0;
    loop {
        let a = draw_assignment(def, rng, max_n);
        match build_def(def, &a) {
            Ok(inst) if sampler_accepts(&inst) => {
                return Ok(Sampled {
                    instance: inst,
                    rejections,
                })
            }
            Ok(_) | Err(Error::DegenerateParams(_)) => {}
            Err(e) => return Err(e),
        }
        rejections += 1;
        if rejections >= MAX_REJECTIONS {
            return Err(Error::SamplerExhausted {
                id: def.id.to_string(),
                rejections,
            });
        }
    }
}

/// Instance for trial `index` of a seeded campaign (rng seeded with
/// `seed + index`, so trials are independent of scheduling).
pub fn sample_trial(
    def: &'static IdentityDef,
    seed: u64,
    index: u64,
    max_n: u64,
) -> Result<Sampled> {
    sample_with(def, &mut trial_rng(seed, index), max_n)
}

/// `count` instances for trials `0..count`.
pub fn sample(def_id: &str, seed: u64, count: u64, max_n: u64) -> Result<Vec<Sampled>> {
    let def = lookup(def_id)?;
    (0..count)
        .map(|i| sample_trial(def, seed, i, max_n))
        .collect()
}

/// Result of one verification trial.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)] // rare failure artifacts; passes dominate
pub enum TrialOutcome {
    Pass,
    Fail {
        assignment: Assignment,
        derived: DerivedParams,
        verdict: Verdict,
    },
    /// Verification raised an error (pole, convergence, precision,
    /// exhausted sampler). `assignment` is empty when sampling failed.
    Error {
        assignment: Assignment,
        message: String,
    },
}

#[derive(Clone, Debug)]
pub struct TrialResult {
    pub index: u64,
    pub rejections: u64,
    pub derived: Option<DerivedParams>,
    pub outcome: TrialOutcome,
}

/// Samples and verifies trial `index`.
pub fn run_trial(
    def: &'static IdentityDef,
    seed: u64,
    index: u64,
    max_n: u64,
    digits: u32,
) -> TrialResult {
    let sampled = match sample_trial(def, seed, index, max_n) {
        Ok(s) => s,
        Err(e) => {
            let rejections = match &e {
                Error::SamplerExhausted { rejections, .. } => *rejections,
                _ => 0,
            };
            return TrialResult {
                index,
                rejections,
                derived: None,
                outcome: TrialOutcome::Error {
                    assignment: Assignment::new(),
                    message: e.to_string(),
                },
            };
        }
    };
    let inst = sampled.instance;
    let outcome = match verify(&inst, digits) {
        Ok(v) if v.pass => TrialOutcome::Pass,
        Ok(v) => TrialOutcome::Fail {
            assignment: inst.assignment.clone(),
            derived: inst.derived.clone(),
            verdict: v,
        },
        Err(e) => TrialOutcome::Error {
            assignment: inst.assignment.clone(),
            message: e.to_string(),
        },
    };
    TrialResult {
        index,
        rejections: sampled.rejections,
        derived: Some(inst.derived),
        outcome,
    }
}

/// Checks the contiguous relation
/// `F(a; …, b_k − 1, …; z) = F(a; b; z) + z ∏a / ((b_k − 1) ∏b) · F(a+1; b+1; z)`
/// on a terminating, all-rational spec; `k_index` is 0-based.
pub fn check_contiguous(spec: &SeriesSpec, k_index: usize) -> Result<bool> {
    let (lhs, rhs) = contiguous_sides(spec, k_index)?;
    Ok(lhs.eval_exact()? == rhs.eval_exact()?)
}

/// Both sides of the contiguous relation as expressions.
pub fn contiguous_sides(spec: &SeriesSpec, k_index: usize) -> Result<(Expr, Expr)> {
    let n = spec.termination.ok_or_else(|| {
        Error::InvalidSeries(String::from("contiguous check needs a terminating series"))
    })?;
    let rats = |v: &[Param]| -> Result<Vec<Rat>> {
        v.iter()
            .map(|p| {
                p.as_rat().cloned().ok_or_else(|| {
                    Error::InvalidSeries(String::from("surd pair in contiguous check"))
                })
            })
            .collect()
    };
    let num = rats(&spec.numerators)?;
    let den = rats(&spec.denominators)?;
    let bk = den
        .get(k_index)
        .ok_or_else(|| Error::InvalidSeries(format!("no denominator at index {k_index}")))?;
    let bk1 = bk - 1;
    if bk1.is_zero() || bk1.hits_pole_set(n) {
        return Err(crate::error::pole(format!("b_k − 1 = {bk1}")));
    }
    let mut lowered = den.clone();
    lowered[k_index] = bk1.clone();
    let lhs = Expr::series(
        Rat::one(),
        SeriesSpec::terminating(num.clone(), lowered, n).with_z(spec.z),
    );
    let mut rhs = Expr::series(Rat::one(), spec.clone());
    if n > 0 {
        let prod_a: Rat = num.iter().cloned().product();
        let prod_b: Rat = den.iter().cloned().product();
        let coeff = (prod_a * spec.z.as_rat()).checked_div(&(prod_b * &bk1))?;
        let up = |v: &[Rat]| v.iter().map(|x| x + 1).collect::<Vec<_>>();
        let shifted = SeriesSpec::terminating(up(&num), up(&den), n - 1).with_z(spec.z);
        rhs = rhs.plus(coeff, Factor::Series(shifted));
    }
    Ok((lhs, rhs))
}

/// Tally of a self-contained derivation check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckTally {
    pub trials: u64,
    pub passes: u64,
    pub rejected_degenerate: u64,
    pub failures: Vec<Assignment>,
}

/// Re-derives the extended 5F4 summation: Whipple's transformation with
/// `e = f + 1`, `c = a − f + 1` has a 4F3 summable by the extended
/// Saalschütz theorem; the product must equal the closed form exactly, and
/// the two 7F6 left-hand sides must coincide.
pub fn derivation_check_extended_5f4(assignment: &Assignment) -> Result<bool> {
    let [a, b, d, f] = assignment.take(["a", "b", "d", "f"])?;
    let n = assignment.n()?;
    if a == 2 * &f - 1 {
        return Err(degenerate("a = 2f − 1 makes c coincide with f"));
    }
    let whip = build_instance(
        "classic.whipple_7f6_4f3",
        &Assignment::new()
            .with("a", a.clone())
            .with("b", b.clone())
            .with("c", &a - &f + 1)
            .with("d", d.clone())
            .with("e", &f + 1)
            .with("N", Rat::from(n)),
    )?;
    let ext = build_instance("ext.vwp_7f6_sum", assignment)?;
    let (pre, four_f3) = match whip.rhs.0.as_slice() {
        [Term {
            coeff,
            factor: Factor::Series(s),
        }] => (coeff.clone(), s.clone()),
        _ => {
            return Err(Error::InvalidSeries(String::from(
                "unexpected Whipple right side",
            )))
        }
    };
    // the 4F3 is the extended Saalschütz series with (a, b, c, f) ↦ (f−b, d, 1+a−b, f)
    let saal = build_instance(
        "ext.saalschutz_rr",
        &Assignment::new()
            .with("a", &f - &b)
            .with("b", d.clone())
            .with("c", 1 + &a - &b)
            .with("f", f.clone())
            .with("N", Rat::from(n)),
    )?;
    let same_4f3 = eval_terminating(&four_f3)? == saal.lhs.eval_exact()?;
    let via_whipple = pre * saal.rhs.eval_exact()?;
    let lhs_same = whip.lhs.eval_exact()? == ext.lhs.eval_exact()?;
    Ok(lhs_same && same_4f3 && via_whipple == ext.rhs.eval_exact()?)
}

/// Runs [`derivation_check_extended_5f4`] on `trials` seeded draws of
/// `(a, b, d, f, N)`, redrawing degenerate ones.
pub fn derivation_campaign_extended_5f4(seed: u64, trials: u64, max_n: u64) -> Result<CheckTally> {
    let mut tally = CheckTally::default();
    for i in 0..trials {
        let mut rng = trial_rng(seed, i);
        let mut rejections = 0;
        loop {
            let mut a = Assignment::new();
            for name in ["a", "b", "d", "f"] {
                a.set(name, draw_rat(&mut rng));
            }
            a.set("N", Rat::from(rng.gen_range(0..=max_n)));
            match derivation_check_extended_5f4(&a) {
                Ok(ok) => {
                    tally.trials += 1;
                    if ok {
                        tally.passes += 1;
                    } else {
                        tally.failures.push(a);
                    }
                    break;
                }
                Err(Error::DegenerateParams(_)) => {
                    tally.rejected_degenerate += 1;
                    rejections += 1;
                    if rejections >= MAX_REJECTIONS {
                        return Err(Error::SamplerExhausted {
                            id: String::from("derivation.extended_5f4"),
                            rejections,
                        });
                    }
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(tally)
}
