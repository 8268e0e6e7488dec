//! The catalog entries. Each builder turns an assignment into both sides of
//! its identity; constraints fixed by an entry (a parameter tied to others,
//! a derived coefficient) are computed here.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{Assignment, Expr, Factor, IdentityDef, Kind, Sides, Structure};
use crate::derived::{self, APrimeInputs, DerivedParams};
use crate::error::Result;
use crate::gamma::GammaProduct;
use crate::rat::{pochhammer_ratio, shifted_quotient, Rat};
use crate::series::{Argument, Param, SeriesSpec};

fn q(num: i64, den: i64) -> Rat {
    Rat::frac(num, den).expect("nonzero literal denominator")
}

fn minus(n: u64) -> Rat {
    -Rat::from(n)
}

/// Terminating series at z = 1 with `−N` appended to the numerators.
fn term_series(mut num: Vec<Rat>, den: Vec<Rat>, n: u64) -> SeriesSpec {
    num.push(minus(n));
    SeriesSpec::terminating(num, den, n)
}

fn nonterm(num: Vec<Rat>, den: Vec<Rat>, z: Argument) -> SeriesSpec {
    SeriesSpec::nonterminating(num, den, z)
}

fn only(lhs: SeriesSpec, rhs: Expr, derived: DerivedParams) -> Result<Sides> {
    Ok(Sides {
        lhs: Expr::series(Rat::one(), lhs),
        rhs,
        derived,
    })
}

fn inv(k: &Rat) -> Result<Rat> {
    k.recip()
}

// ---------------------------------------------------------------------------
// extensions and classical transformations

fn saalschutz_rr(v: &Assignment) -> Result<Sides> {
    let [a, b, c, f] = v.take(["a", "b", "c", "f"])?;
    let n = v.n()?;
    let g = derived::g_ext_saalschutz(&a, &b, &c, &f)?;
    let lhs = term_series(
        vec![a.clone(), b.clone(), &f + 1],
        vec![c.clone(), f.clone(), 2 + &a + &b - &c - Rat::from(n)],
        n,
    );
    let pre = pochhammer_ratio(
        &[&c - &a - 1, &c - &b - 1],
        &[c.clone(), &c - &a - &b - 1],
        n,
    )?;
    let rhs = Expr::scalar(pre * shifted_quotient(&g, n)?);
    only(
        lhs,
        rhs,
        DerivedParams {
            g: Some(g),
            ..Default::default()
        },
    )
}

fn whipple_7f6_4f3(v: &Assignment) -> Result<Sides> {
    let [a, b, c, d, e] = v.take(["a", "b", "c", "d", "e"])?;
    let n = v.n()?;
    let nn = Rat::from(n);
    let lhs = term_series(
        vec![
            a.clone(),
            1 + a.half(),
            b.clone(),
            c.clone(),
            d.clone(),
            e.clone(),
        ],
        vec![
            a.half(),
            1 + &a - &b,
            1 + &a - &c,
            1 + &a - &d,
            1 + &a - &e,
            1 + &a + &nn,
        ],
        n,
    );
    let pre = pochhammer_ratio(&[1 + &a - &d - &e, 1 + &a], &[1 + &a - &d, 1 + &a - &e], n)?;
    let four = term_series(
        vec![1 + &a - &b - &c, d.clone(), e.clone()],
        vec![1 + &a - &b, 1 + &a - &c, &d + &e - &a - &nn],
        n,
    );
    only(lhs, Expr::series(pre, four), DerivedParams::default())
}

fn vwp_7f6_sum(v: &Assignment) -> Result<Sides> {
    let [a, b, d, f] = v.take(["a", "b", "d", "f"])?;
    let n = v.n()?;
    let nn = Rat::from(n);
    let g = derived::g_vwp5f4(&a, &b, &d, &f)?;
    let lhs = term_series(
        vec![
            a.clone(),
            1 + a.half(),
            b.clone(),
            &a - &f + 1,
            d.clone(),
            &f + 1,
        ],
        vec![
            a.half(),
            1 + &a - &b,
            f.clone(),
            1 + &a - &d,
            &a - &f,
            1 + &a + &nn,
        ],
        n,
    );
    let pre = pochhammer_ratio(&[1 + &a, &a - &b - &d], &[1 + &a - &b, 1 + &a - &d], n)?;
    let rhs = Expr::scalar(pre * shifted_quotient(&g, n)?);
    only(
        lhs,
        rhs,
        DerivedParams {
            g: Some(g),
            ..Default::default()
        },
    )
}

/// Numerators/denominators shared by the very-well-poised kernels in `f`.
fn vwp_head(f: &Rat) -> (Vec<Rat>, Vec<Rat>) {
    (vec![f - 1, (f + 1).half()], vec![(f - 1).half()])
}

fn whipple_9f8_5f4(v: &Assignment) -> Result<Sides> {
    let [f, a1, a2, p, d1, d2] = v.take(["f", "a1", "a2", "p", "d1", "d2"])?;
    let n = v.n()?;
    let nn = Rat::from(n);
    let h = derived::h_whipple_ext(&f, &p, &a1, &a2)?;
    let (mut num, mut den) = vwp_head(&f);
    num.extend([
        a1.clone(),
        a2.clone(),
        &f - &p,
        &p + 1,
        d1.clone(),
        d2.clone(),
    ]);
    den.extend([
        &f - &a1,
        &f - &a2,
        p.clone(),
        &f - &p - 1,
        &f - &d1,
        &f - &d2,
        &f + &nn,
    ]);
    let lhs = term_series(num, den, n);
    let pre = pochhammer_ratio(&[f.clone(), &f - &d1 - &d2], &[&f - &d1, &f - &d2], n)?;
    let five = term_series(
        vec![d1.clone(), d2.clone(), &f - &a1 - &a2 - 1, &h + 1],
        vec![&f - &a1, &f - &a2, 1 + &d1 + &d2 - &f - &nn, h.clone()],
        n,
    );
    only(
        lhs,
        Expr::series(pre, five),
        DerivedParams {
            h: Some(h),
            ..Default::default()
        },
    )
}

/// Left side of the extended Dougall sum with `f − p`, `p + 1` over `p`,
/// `f − p − 1` given explicitly (so particular values of `p` can cancel).
#[allow(clippy::too_many_arguments)]
fn dougall_ext_lhs(
    f: &Rat,
    a1: &Rat,
    d1: &Rat,
    d2: &Rat,
    n: u64,
    p_num: &[Rat],
    p_den: &[Rat],
    head: bool,
) -> SeriesSpec {
    let nn = Rat::from(n);
    let a2 = derived::dougall_a2(f, a1, d1, d2, n);
    let (mut num, mut den) = if head {
        vwp_head(f)
    } else {
        (vec![f - 1], vec![])
    };
    num.push(a1.clone());
    num.extend_from_slice(p_num);
    num.extend([d1.clone(), d2.clone(), a2]);
    den.push(f - a1);
    den.extend_from_slice(p_den);
    den.extend([f - d1, f - d2, 2 + a1 + d1 + d2 - f - &nn, f + &nn]);
    term_series(num, den, n)
}

/// `(f, f−d1−d2, f−a1−d1−1, f−a1−d2−1)_N / (f−d1, f−d2, f−a1, f−a1−d1−d2−1)_N · (k+1)_N/(k)_N`.
fn dougall_ext_rhs(f: &Rat, a1: &Rat, d1: &Rat, d2: &Rat, n: u64, k: &Rat) -> Result<Expr> {
    let pre = pochhammer_ratio(
        &[f.clone(), f - d1 - d2, f - a1 - d1 - 1, f - a1 - d2 - 1],
        &[f - d1, f - d2, f - a1, f - a1 - d1 - d2 - 1],
        n,
    )?;
    Ok(Expr::scalar(pre * shifted_quotient(k, n)?))
}

fn dougall_9f8_sum(v: &Assignment) -> Result<Sides> {
    let [f, a1, p, d1, d2] = v.take(["f", "a1", "p", "d1", "d2"])?;
    let n = v.n()?;
    let h = derived::h_dougall_ext(&f, &p, &a1, &d1, &d2, n)?;
    let k = derived::k_quotient_params(&h, &a1, &d1, &d2, &f)?;
    let lhs = dougall_ext_lhs(
        &f,
        &a1,
        &d1,
        &d2,
        n,
        &[&f - &p, &p + 1],
        &[p.clone(), &f - &p - 1],
        true,
    );
    let rhs = dougall_ext_rhs(&f, &a1, &d1, &d2, n, &k)?;
    only(
        lhs,
        rhs,
        DerivedParams {
            h: Some(h),
            k: Some(k),
            ..Default::default()
        },
    )
}

/// Shared pieces of the extended Bailey transformation.
struct BaileyParts {
    f: Rat,
    a1: Rat,
    d1: Rat,
    d2: Rat,
    b: [Rat; 3],
    n: u64,
    c: Rat,
}

impl BaileyParts {
    fn new(v: &Assignment) -> Result<BaileyParts> {
        let [f, a1, d1, d2, b1, b2] = v.take(["f", "a1", "d1", "d2", "b1", "b2"])?;
        let n = v.n()?;
        let (c, b3) = derived::solve_bailey_constraints(&f, &a1, &d1, &d2, &b1, &b2, n);
        Ok(BaileyParts {
            f,
            a1,
            d1,
            d2,
            b: [b1, b2, b3],
            n,
            c,
        })
    }

    /// `(1+c, 1+c−b1−b2, 1+c−b1−b3, 1+c−b2−b3)_N / (1+c−b1, 1+c−b2, 1+c−b3, 1+c−b1−b2−b3)_N`,
    /// the factor multiplying the left-hand series.
    fn lhs_prefactor(&self) -> Result<Rat> {
        let c = &self.c;
        let [b1, b2, b3] = &self.b;
        pochhammer_ratio(
            &[1 + c, 1 + c - b1 - b2, 1 + c - b1 - b3, 1 + c - b2 - b3],
            &[1 + c - b1, 1 + c - b2, 1 + c - b3, 1 + c - b1 - b2 - b3],
            self.n,
        )
    }

    /// The very-well-poised series in `c` with the given `f − a1`-slot
    /// denominator and extra numerator/denominator slots.
    fn c_series(&self, fa_den: Rat, last_num: Vec<Param>, last_den: Vec<Param>) -> SeriesSpec {
        let (f, a1, d1, d2, c) = (&self.f, &self.a1, &self.d1, &self.d2, &self.c);
        let [b1, b2, b3] = &self.b;
        let nn = Rat::from(self.n);
        let mut num: Vec<Param> = [
            c.clone(),
            1 + c.half(),
            b1.clone(),
            b2.clone(),
            b3.clone(),
            f - a1 - d2 - 1,
            f - a1 - d1 - 1,
        ]
        .into_iter()
        .map(Param::Rat)
        .collect();
        num.extend(last_num);
        num.push(Param::Rat(-&nn));
        let mut den: Vec<Param> = [
            c.half(),
            1 + c - b1,
            1 + c - b2,
            1 + c - b3,
            f - d1,
            f - d2,
            fa_den,
        ]
        .into_iter()
        .map(Param::Rat)
        .collect();
        den.extend(last_den);
        den.push(Param::Rat(1 + c + &nn));
        SeriesSpec::new(num, den, Argument::One, Some(self.n))
    }

    fn lhs(&self, p: &Rat) -> Result<Expr> {
        let (f, a1, d1, d2) = (&self.f, &self.a1, &self.d1, &self.d2);
        let [b1, b2, b3] = &self.b;
        let nn = Rat::from(self.n);
        let (mut num, mut den) = vwp_head(f);
        num.extend([
            a1.clone(),
            f - p,
            p + 1,
            d1.clone(),
            d2.clone(),
            b1.clone(),
            b2.clone(),
            b3.clone(),
        ]);
        den.extend([
            f - a1,
            p.clone(),
            f - p - 1,
            f - d1,
            f - d2,
            f - b1,
            f - b2,
            f - b3,
            f + &nn,
        ]);
        Ok(Expr::series(
            self.lhs_prefactor()?,
            term_series(num, den, self.n),
        ))
    }

    fn derived(&self, p: &Rat) -> Result<(derived::BaileyCoefficients, DerivedParams)> {
        let bc = derived::bailey_bda(&self.f, p, &self.a1, &self.d1, &self.d2)?;
        let [b1, b2, b3] = &self.b;
        let ap = derived::a_prime(
            &bc,
            &APrimeInputs {
                f: &self.f,
                a1: &self.a1,
                d1: &self.d1,
                d2: &self.d2,
                b1,
                b2,
                b3,
                n: self.n,
            },
        )?;
        let dp = DerivedParams {
            a_prime: Some(ap),
            ..Default::default()
        }
        .with_bailey(&bc);
        Ok((bc, dp))
    }
}

fn bailey_form1(v: &Assignment) -> Result<Sides> {
    let parts = BaileyParts::new(v)?;
    let p = v.get("p")?.clone();
    let (bc, dp) = parts.derived(&p)?;
    let lhs = parts.lhs(&p)?;
    let nine = parts.c_series(
        &parts.f - &parts.a1,
        vec![Param::Rat(&parts.f - &parts.d1 - &parts.d2)],
        vec![],
    );
    let mut rhs = Expr::series(Rat::one(), nine);
    if parts.n > 0 {
        let (f, a1, d1, d2, c) = (&parts.f, &parts.a1, &parts.d1, &parts.d2, &parts.c);
        let [b1, b2, b3] = &parts.b;
        let n = parts.n;
        let nn = Rat::from(n);
        let ten = SeriesSpec::terminating(
            vec![
                c + 1,
                2 + c.half(),
                b1 + 1,
                b2 + 1,
                b3 + 1,
                f - a1 - d2,
                f - a1 - d1,
                &bc.a + 1,
                &bc.b + 2,
                1 - &nn,
            ],
            vec![
                1 + c.half(),
                2 + c - b1,
                2 + c - b2,
                2 + c - b3,
                1 + f - d1,
                1 + f - d2,
                1 + f - a1,
                &bc.b + 1,
                2 + c + &nn,
            ],
            n - 1,
        );
        let ap = dp.a_prime.clone().expect("set by derived()");
        let coeff = (ap * &bc.b).checked_div(&(&bc.a * &bc.d))?;
        rhs = rhs.plus(coeff, Factor::Series(ten));
    }
    Ok(Sides {
        lhs,
        rhs,
        derived: dp,
    })
}

fn bailey_form2(v: &Assignment) -> Result<Sides> {
    let parts = BaileyParts::new(v)?;
    let p = v.get("p")?.clone();
    let (bc, dp) = parts.derived(&p)?;
    let lhs = parts.lhs(&p)?;
    let pair = bc.pair_base();
    let eleven = parts.c_series(
        &parts.f - &parts.a1,
        vec![
            Param::Rat(&parts.f - &parts.d1 - &parts.d2 - 1),
            Param::Pair(pair.shifted(1)),
        ],
        vec![Param::Pair(pair)],
    );
    Ok(Sides {
        lhs,
        rhs: Expr::series(Rat::one(), eleven),
        derived: dp,
    })
}

fn bailey_9f8(v: &Assignment) -> Result<Sides> {
    let parts = BaileyParts::new(v)?;
    let (f, a1, d1, d2) = (&parts.f, &parts.a1, &parts.d1, &parts.d2);
    let [b1, b2, b3] = &parts.b;
    let nn = Rat::from(parts.n);
    let (mut num, mut den) = vwp_head(f);
    num.extend([
        a1 + 1,
        d1.clone(),
        d2.clone(),
        b1.clone(),
        b2.clone(),
        b3.clone(),
    ]);
    den.extend([f - a1 - 1, f - d1, f - d2, f - b1, f - b2, f - b3, f + &nn]);
    let lhs = Expr::series(parts.lhs_prefactor()?, term_series(num, den, parts.n));
    let nine = parts.c_series(f - a1 - 1, vec![Param::Rat(f - d1 - d2)], vec![]);
    let dp = DerivedParams {
        c: Some(parts.c.clone()),
        ..Default::default()
    };
    Ok(Sides {
        lhs,
        rhs: Expr::series(Rat::one(), nine),
        derived: dp,
    })
}

fn rainville_extra(rng: &mut ChaCha8Rng, a: &mut Assignment) {
    a.set("k", Rat::from(rng.gen_range(1..=3u64)));
    a.set(
        "z",
        if rng.gen_bool(0.5) {
            Rat::one()
        } else {
            Rat::int(-1)
        },
    );
}

fn rainville(v: &Assignment) -> Result<Sides> {
    let [a1, a2, a3, b1, b2, b3, k, z] = v.take(["a1", "a2", "a3", "b1", "b2", "b3", "k", "z"])?;
    let n = v.n()?;
    let z = if z.is_one() {
        Argument::One
    } else {
        Argument::MinusOne
    };
    let k = k
        .to_i64()
        .filter(|k| (1..=3).contains(k))
        .ok_or_else(|| crate::error::degenerate("k must be 1, 2 or 3"))?;
    let spec = term_series(vec![a1, a2, a3], vec![b1, b2, b3], n).with_z(z);
    let (lhs, rhs) = super::contiguous_sides(&spec, (k - 1) as usize)?;
    Ok(Sides {
        lhs,
        rhs,
        derived: DerivedParams::default(),
    })
}

// ---------------------------------------------------------------------------
// terminating particular cases

fn dougall_8f7(v: &Assignment) -> Result<Sides> {
    let [f, a1, d1, d2] = v.take(["f", "a1", "d1", "d2"])?;
    let n = v.n()?;
    let half = f.half();
    let a2 = derived::dougall_a2(&f, &a1, &d1, &d2, n);
    let nn = Rat::from(n);
    // h with p = f/2
    let h_num = &half * (&f - 1 - &d1 - &d2 + &nn) * (1 - &half);
    let h_den = &half * (&half - 1) - &a1 * &a2;
    let h = nonzero("h", h_num, h_den)?;
    let k = derived::k_quotient_params(&h, &a1, &d1, &d2, &f)?;
    let lhs = dougall_ext_lhs(&f, &a1, &d1, &d2, n, &[&half + 1], &[&half - 1], true);
    let rhs = dougall_ext_rhs(&f, &a1, &d1, &d2, n, &k)?;
    only(
        lhs,
        rhs,
        DerivedParams {
            h: Some(h),
            k: Some(k),
            ..Default::default()
        },
    )
}

fn dougall_contiguous_pair(v: &Assignment) -> Result<Sides> {
    let [f, a1, d1, d2] = v.take(["f", "a1", "d1", "d2"])?;
    let n = v.n()?;
    let half = f.half();
    let a2 = derived::dougall_a2(&f, &a1, &d1, &d2, n);
    let nn = Rat::from(n);
    // h with p = f/2 + 1/2
    let p = &half + q(1, 2);
    let h_num = &p * (&f - 1 - &d1 - &d2 + &nn) * (q(3, 2) - &half);
    let h_den = &p * (&half - q(3, 2)) - &a1 * &a2;
    let h = nonzero("h", h_num, h_den)?;
    let k = derived::k_quotient_params(&h, &a1, &d1, &d2, &f)?;
    let lhs = dougall_ext_lhs(
        &f,
        &a1,
        &d1,
        &d2,
        n,
        &[&half + q(3, 2)],
        &[&half - q(3, 2)],
        false,
    );
    let rhs = dougall_ext_rhs(&f, &a1, &d1, &d2, n, &k)?;
    only(
        lhs,
        rhs,
        DerivedParams {
            h: Some(h),
            k: Some(k),
            ..Default::default()
        },
    )
}

fn dougall_contiguous_last(v: &Assignment) -> Result<Sides> {
    let [f, a1, d1, d2] = v.take(["f", "a1", "d1", "d2"])?;
    let n = v.n()?;
    let h = 1 - &f + &d1 + &d2 - Rat::from(n);
    if h.is_zero() {
        return Err(crate::error::degenerate("h = 0"));
    }
    let k = derived::k_quotient_params(&h, &a1, &d1, &d2, &f)?;
    let lhs = dougall_ext_lhs(&f, &a1, &d1, &d2, n, &[], &[], true);
    let rhs = dougall_ext_rhs(&f, &a1, &d1, &d2, n, &k)?;
    only(
        lhs,
        rhs,
        DerivedParams {
            h: Some(h),
            k: Some(k),
            ..Default::default()
        },
    )
}

fn nonzero(what: &str, num: Rat, den: Rat) -> Result<Rat> {
    if den.is_zero() {
        return Err(crate::error::degenerate(alloc::format!(
            "denominator of {what} vanishes"
        )));
    }
    let v = num.checked_div(&den)?;
    if v.is_zero() {
        return Err(crate::error::degenerate(alloc::format!("{what} = 0")));
    }
    Ok(v)
}

// ---------------------------------------------------------------------------
// non-terminating particular cases: RHS = Γ-product · Γ(k)/Γ(k+1) = Γ-product / k

/// `Γ(f−d1)Γ(f−d2)Γ(f−a1)Γ(f−a1−d1−d2−1) / (Γ(f)Γ(f−d1−d2)Γ(f−a1−d1−1)Γ(f−a1−d2−1))`.
fn five_f4_gammas(f: &Rat, a1: &Rat, d1: &Rat, d2: &Rat) -> GammaProduct {
    GammaProduct::new(
        vec![f - d1, f - d2, f - a1, f - a1 - d1 - d2 - 1],
        vec![f.clone(), f - d1 - d2, f - a1 - d1 - 1, f - a1 - d2 - 1],
    )
}

fn gamma_rhs(gp: GammaProduct, k: &Rat, derived: DerivedParams, lhs: SeriesSpec) -> Result<Sides> {
    only(lhs, Expr::gamma(inv(k)?, gp), derived)
}

fn nt_7f6(v: &Assignment) -> Result<Sides> {
    let [f, p, a1, d1, d2] = v.take(["f", "p", "a1", "d1", "d2"])?;
    let h = derived::h_limit(&f, &p, &a1)?;
    let k = derived::k_quotient_params(&h, &a1, &d1, &d2, &f)?;
    let (mut num, mut den) = vwp_head(&f);
    num.extend([a1.clone(), &f - &p, &p + 1, d1.clone(), d2.clone()]);
    den.extend([&f - &a1, p.clone(), &f - &p - 1, &f - &d1, &f - &d2]);
    let lhs = nonterm(num, den, Argument::One);
    let dp = DerivedParams {
        h: Some(h),
        k: Some(k.clone()),
        ..Default::default()
    };
    gamma_rhs(five_f4_gammas(&f, &a1, &d1, &d2), &k, dp, lhs)
}

fn nt_6f5_minus(v: &Assignment) -> Result<Sides> {
    let [f, p, a1, d2] = v.take(["f", "p", "a1", "d2"])?;
    let h = derived::h_limit(&f, &p, &a1)?;
    // limit d1 → ∞ of the general k
    let k = nonzero("k", &h * (1 + &d2 + &a1 - &f), &d2 - &h)?;
    let (mut num, mut den) = vwp_head(&f);
    num.extend([&f - &p, &p + 1, a1.clone(), d2.clone()]);
    den.extend([p.clone(), &f - &p - 1, &f - &a1, &f - &d2]);
    let lhs = nonterm(num, den, Argument::MinusOne);
    let gp = GammaProduct::new(
        vec![&f - &a1, &f - &d2],
        vec![f.clone(), &f - &a1 - &d2 - 1],
    );
    let dp = DerivedParams {
        h: Some(h),
        k: Some(k.clone()),
        ..Default::default()
    };
    gamma_rhs(gp, &k, dp, lhs)
}

fn nt_6f5_half(v: &Assignment) -> Result<Sides> {
    let [f, p, a1, d2] = v.take(["f", "p", "a1", "d2"])?;
    let half = f.half();
    let h = derived::h_limit(&f, &p, &a1)?;
    let k = nonzero(
        "k",
        &h * (1 + &a1 - &half) * (1 + &d2 + &a1 - &f),
        &d2 * &half - &h * (1 + &d2 + &a1 - &half),
    )?;
    let (mut num, mut den) = vwp_head(&f);
    num.extend([a1.clone(), &f - &p, &p + 1, d2.clone()]);
    den.extend([&f - &a1, p.clone(), &f - &p - 1, &f - &d2]);
    let lhs = nonterm(num, den, Argument::One);
    let gp = GammaProduct::new(
        vec![half.clone(), &f - &d2, &f - &a1, &half - &a1 - &d2 - 1],
        vec![f.clone(), &half - &d2, &half - &a1 - 1, &f - &a1 - &d2 - 1],
    );
    let dp = DerivedParams {
        h: Some(h),
        k: Some(k.clone()),
        ..Default::default()
    };
    gamma_rhs(gp, &k, dp, lhs)
}

fn nt_5f4_minus(v: &Assignment) -> Result<Sides> {
    let [f, p, a1] = v.take(["f", "p", "a1"])?;
    let half = f.half();
    let h = derived::h_limit(&f, &p, &a1)?;
    let k = nonzero("k", &h * (1 + &a1 - &half), &half - &h)?;
    let (mut num, mut den) = vwp_head(&f);
    num.extend([a1.clone(), &f - &p, &p + 1]);
    den.extend([&f - &a1, p.clone(), &f - &p - 1]);
    let lhs = nonterm(num, den, Argument::MinusOne);
    let gp = GammaProduct::new(
        vec![half.clone(), &f - &a1],
        vec![f.clone(), &half - &a1 - 1],
    );
    let dp = DerivedParams {
        h: Some(h),
        k: Some(k.clone()),
        ..Default::default()
    };
    gamma_rhs(gp, &k, dp, lhs)
}

fn nt_dixon_ext(v: &Assignment) -> Result<Sides> {
    let [f, p, a1, d1] = v.take(["f", "p", "a1", "d1"])?;
    let half = f.half();
    let h = derived::h_limit(&f, &p, &a1)?;
    let k = nonzero(
        "k",
        &h * (1 + &d1 + &a1 - &f) * (q(1, 2) + &a1 - &half),
        &d1 * (&half - q(1, 2)) - &h * (q(1, 2) + &d1 + &a1 - &half),
    )?;
    let lhs = nonterm(
        vec![&f - 1, a1.clone(), &f - &p, &p + 1, d1.clone()],
        vec![&f - &a1, p.clone(), &f - &p - 1, &f - &d1],
        Argument::One,
    );
    let gp = GammaProduct::new(
        vec![
            &f - &d1,
            &half + q(1, 2),
            &f - &a1,
            &half - &a1 - &d1 - q(1, 2),
        ],
        vec![
            f.clone(),
            &half - &d1 + q(1, 2),
            &f - &a1 - &d1 - 1,
            &half - &a1 - q(1, 2),
        ],
    );
    let dp = DerivedParams {
        h: Some(h),
        k: Some(k.clone()),
        ..Default::default()
    };
    gamma_rhs(gp, &k, dp, lhs)
}

fn nt_6f5_pair(v: &Assignment) -> Result<Sides> {
    let [f, a1, d1, d2] = v.take(["f", "a1", "d1", "d2"])?;
    let half = f.half();
    let h = nonzero("h", &half * (1 - &half), -&a1)?;
    let k = derived::k_quotient_params(&h, &a1, &d1, &d2, &f)?;
    let (mut num, mut den) = vwp_head(&f);
    num.extend([a1.clone(), &half + 1, d1.clone(), d2.clone()]);
    den.extend([&f - &a1, &half - 1, &f - &d1, &f - &d2]);
    let lhs = nonterm(num, den, Argument::One);
    let dp = DerivedParams {
        h: Some(h),
        k: Some(k.clone()),
        ..Default::default()
    };
    gamma_rhs(five_f4_gammas(&f, &a1, &d1, &d2), &k, dp, lhs)
}

fn nt_5f4_pair(v: &Assignment) -> Result<Sides> {
    let [f, a1, d1, d2] = v.take(["f", "a1", "d1", "d2"])?;
    let half = f.half();
    let h = nonzero("h", (&half + q(1, 2)) * (&half - q(3, 2)), a1.clone())?;
    let k = derived::k_quotient_params(&h, &a1, &d1, &d2, &f)?;
    let lhs = nonterm(
        vec![&f - 1, &half + q(3, 2), a1.clone(), d1.clone(), d2.clone()],
        vec![&half - q(3, 2), &f - &a1, &f - &d1, &f - &d2],
        Argument::One,
    );
    let dp = DerivedParams {
        h: Some(h),
        k: Some(k.clone()),
        ..Default::default()
    };
    gamma_rhs(five_f4_gammas(&f, &a1, &d1, &d2), &k, dp, lhs)
}

// ---------------------------------------------------------------------------
// classical baselines

fn saalschutz(v: &Assignment) -> Result<Sides> {
    let [a, b, c] = v.take(["a", "b", "c"])?;
    let n = v.n()?;
    let lhs = term_series(
        vec![a.clone(), b.clone()],
        vec![c.clone(), 1 + &a + &b - &c - Rat::from(n)],
        n,
    );
    let rhs = pochhammer_ratio(&[&c - &a, &c - &b], &[c.clone(), &c - &a - &b], n)?;
    only(lhs, Expr::scalar(rhs), DerivedParams::default())
}

fn dougall_7f6(v: &Assignment) -> Result<Sides> {
    let [a, b, c, d] = v.take(["a", "b", "c", "d"])?;
    let n = v.n()?;
    let nn = Rat::from(n);
    let e = 1 + 2 * &a - &b - &c - &d + &nn;
    let lhs = term_series(
        vec![
            a.clone(),
            1 + a.half(),
            b.clone(),
            c.clone(),
            d.clone(),
            e.clone(),
        ],
        vec![
            a.half(),
            1 + &a - &b,
            1 + &a - &c,
            1 + &a - &d,
            1 + &a - &e,
            1 + &a + &nn,
        ],
        n,
    );
    let rhs = pochhammer_ratio(
        &[1 + &a, 1 + &a - &b - &c, 1 + &a - &b - &d, 1 + &a - &c - &d],
        &[1 + &a - &b, 1 + &a - &c, 1 + &a - &d, 1 + &a - &b - &c - &d],
        n,
    )?;
    only(lhs, Expr::scalar(rhs), DerivedParams::default())
}

fn vwp_5f4(v: &Assignment) -> Result<Sides> {
    let [a, b, c] = v.take(["a", "b", "c"])?;
    let n = v.n()?;
    let nn = Rat::from(n);
    let lhs = term_series(
        vec![a.clone(), 1 + a.half(), b.clone(), c.clone()],
        vec![a.half(), 1 + &a - &b, 1 + &a - &c, 1 + &a + &nn],
        n,
    );
    let rhs = pochhammer_ratio(&[1 + &a, 1 + &a - &b - &c], &[1 + &a - &b, 1 + &a - &c], n)?;
    only(lhs, Expr::scalar(rhs), DerivedParams::default())
}

fn gauss(v: &Assignment) -> Result<Sides> {
    let [b, c] = v.take(["b", "c"])?;
    let n = v.n()?;
    let lhs = term_series(vec![b.clone()], vec![c.clone()], n);
    let rhs = pochhammer_ratio(&[&c - &b], core::slice::from_ref(&c), n)?;
    only(lhs, Expr::scalar(rhs), DerivedParams::default())
}

fn kummer(v: &Assignment) -> Result<Sides> {
    let [a] = v.take(["a"])?;
    let n = v.n()?;
    let lhs =
        term_series(vec![a.clone()], vec![1 + &a + Rat::from(n)], n).with_z(Argument::MinusOne);
    let rhs = pochhammer_ratio(&[1 + &a], &[1 + a.half()], n)?;
    only(lhs, Expr::scalar(rhs), DerivedParams::default())
}

fn dixon(v: &Assignment) -> Result<Sides> {
    let [a, b] = v.take(["a", "b"])?;
    let n = v.n()?;
    let lhs = term_series(
        vec![a.clone(), b.clone()],
        vec![1 + &a - &b, 1 + &a + Rat::from(n)],
        n,
    );
    let rhs = pochhammer_ratio(
        &[1 + &a, 1 + a.half() - &b],
        &[1 + a.half(), 1 + &a - &b],
        n,
    )?;
    only(lhs, Expr::scalar(rhs), DerivedParams::default())
}

fn gauss_nt(v: &Assignment) -> Result<Sides> {
    let [a, b, c] = v.take(["a", "b", "c"])?;
    let lhs = nonterm(vec![a.clone(), b.clone()], vec![c.clone()], Argument::One);
    let gp = GammaProduct::new(vec![c.clone(), &c - &a - &b], vec![&c - &a, &c - &b]);
    only(lhs, Expr::gamma(Rat::one(), gp), DerivedParams::default())
}

fn kummer_nt(v: &Assignment) -> Result<Sides> {
    let [a, b] = v.take(["a", "b"])?;
    let lhs = nonterm(
        vec![a.clone(), b.clone()],
        vec![1 + &a - &b],
        Argument::MinusOne,
    );
    let gp = GammaProduct::new(
        vec![1 + &a - &b, 1 + a.half()],
        vec![1 + &a, 1 + a.half() - &b],
    );
    only(lhs, Expr::gamma(Rat::one(), gp), DerivedParams::default())
}

fn dixon_nt(v: &Assignment) -> Result<Sides> {
    let [a, b, c] = v.take(["a", "b", "c"])?;
    let lhs = nonterm(
        vec![a.clone(), b.clone(), c.clone()],
        vec![1 + &a - &b, 1 + &a - &c],
        Argument::One,
    );
    let h = 1 + a.half();
    let gp = GammaProduct::new(
        vec![h.clone(), 1 + &a - &b, 1 + &a - &c, &h - &b - &c],
        vec![1 + &a, &h - &b, &h - &c, 1 + &a - &b - &c],
    );
    only(lhs, Expr::gamma(Rat::one(), gp), DerivedParams::default())
}

fn vwp_5f4_nt(v: &Assignment) -> Result<Sides> {
    let [a, b, c, d] = v.take(["a", "b", "c", "d"])?;
    let lhs = nonterm(
        vec![a.clone(), 1 + a.half(), b.clone(), c.clone(), d.clone()],
        vec![a.half(), 1 + &a - &b, 1 + &a - &c, 1 + &a - &d],
        Argument::One,
    );
    let gp = GammaProduct::new(
        vec![1 + &a - &b, 1 + &a - &c, 1 + &a - &d, 1 + &a - &b - &c - &d],
        vec![1 + &a, 1 + &a - &c - &d, 1 + &a - &b - &d, 1 + &a - &b - &c],
    );
    only(lhs, Expr::gamma(Rat::one(), gp), DerivedParams::default())
}

// ---------------------------------------------------------------------------

macro_rules! entry {
    ($id:literal, $title:literal, $kind:ident, [$($p:literal),*], $n:literal, $st:ident, $build:ident) => {
        entry!($id, $title, $kind, [$($p),*], $n, $st, $build, None)
    };
    ($id:literal, $title:literal, $kind:ident, [$($p:literal),*], $n:literal, $st:ident, $build:ident, $extra:expr) => {
        IdentityDef {
            id: $id,
            title: $title,
            kind: Kind::$kind,
            free_params: &[$($p),*],
            uses_n: $n,
            structure: Structure::$st,
            build: $build,
            extra: $extra,
        }
    };
}

/// All entries, in listing order.
pub static CATALOG: [IdentityDef; 29] = [
    entry!(
        "ext.saalschutz_rr",
        "extended Saalschütz 4F3 summation",
        TerminatingExact,
        ["a", "b", "c", "f"],
        true,
        Balanced,
        saalschutz_rr
    ),
    entry!(
        "classic.whipple_7f6_4f3",
        "Whipple 7F6 to balanced 4F3 transformation",
        TerminatingExact,
        ["a", "b", "c", "d", "e"],
        true,
        VeryWellPoised,
        whipple_7f6_4f3
    ),
    entry!(
        "ext.vwp_7f6_sum",
        "extended very-well-poised 5F4 summation (7F6 form)",
        TerminatingExact,
        ["a", "b", "d", "f"],
        true,
        VeryWellPoised,
        vwp_7f6_sum
    ),
    entry!(
        "ext.whipple_9f8_5f4",
        "extended Whipple transformation 9F8 to 5F4",
        TerminatingExact,
        ["f", "a1", "a2", "p", "d1", "d2"],
        true,
        VeryWellPoised,
        whipple_9f8_5f4
    ),
    entry!(
        "ext.dougall_9f8_sum",
        "extended Dougall summation (9F8)",
        TerminatingExact,
        ["f", "a1", "p", "d1", "d2"],
        true,
        VeryWellPoised,
        dougall_9f8_sum
    ),
    entry!(
        "ext.bailey_form1",
        "extended Bailey 9F8 transformation, first form (9F8 + 10F9)",
        TerminatingExact,
        ["f", "a1", "p", "d1", "d2", "b1", "b2"],
        true,
        VeryWellPoised,
        bailey_form1
    ),
    entry!(
        "ext.bailey_form2",
        "extended Bailey 9F8 transformation, second form (11F10 with conjugate pair)",
        TerminatingExact,
        ["f", "a1", "p", "d1", "d2", "b1", "b2"],
        true,
        VeryWellPoised,
        bailey_form2
    ),
    entry!(
        "classic.bailey_9f8",
        "Bailey 9F8 to 9F8 transformation",
        TerminatingExact,
        ["f", "a1", "d1", "d2", "b1", "b2"],
        true,
        VeryWellPoised,
        bailey_9f8
    ),
    entry!(
        "contiguous.rainville",
        "contiguous relation lowering one denominator",
        TerminatingExact,
        ["a1", "a2", "a3", "b1", "b2", "b3"],
        true,
        Plain,
        rainville,
        Some(rainville_extra)
    ),
    entry!(
        "special.4_1",
        "non-terminating very-well-poised 7F6 summation",
        NonterminatingNumeric,
        ["f", "p", "a1", "d1", "d2"],
        false,
        VeryWellPoised,
        nt_7f6
    ),
    entry!(
        "special.4_2",
        "non-terminating very-well-poised 6F5(-1) summation",
        NonterminatingNumeric,
        ["f", "p", "a1", "d2"],
        false,
        VeryWellPoised,
        nt_6f5_minus
    ),
    entry!(
        "special.4_3",
        "non-terminating very-well-poised 6F5 summation with d1 = f/2",
        NonterminatingNumeric,
        ["f", "p", "a1", "d2"],
        false,
        VeryWellPoised,
        nt_6f5_half
    ),
    entry!(
        "special.4_5",
        "non-terminating very-well-poised 5F4(-1) summation",
        NonterminatingNumeric,
        ["f", "p", "a1"],
        false,
        VeryWellPoised,
        nt_5f4_minus
    ),
    entry!(
        "special.4_7",
        "extended Dixon 5F4 summation",
        NonterminatingNumeric,
        ["f", "p", "a1", "d1"],
        false,
        WellPoised,
        nt_dixon_ext
    ),
    entry!(
        "special.4_9",
        "very-well-poised 8F7 summation (p = f/2)",
        TerminatingExact,
        ["f", "a1", "d1", "d2"],
        true,
        VeryWellPoised,
        dougall_8f7
    ),
    entry!(
        "special.4_12",
        "non-terminating very-well-poised 6F5 summation (p = f/2)",
        NonterminatingNumeric,
        ["f", "a1", "d1", "d2"],
        false,
        VeryWellPoised,
        nt_6f5_pair
    ),
    entry!(
        "special.4_15",
        "7F6 summation contiguous to Dougall (p = f/2 + 1/2)",
        TerminatingExact,
        ["f", "a1", "d1", "d2"],
        true,
        WellPoised,
        dougall_contiguous_pair
    ),
    entry!(
        "special.4_18",
        "non-terminating 5F4 summation contiguous to the 5F4 sum",
        NonterminatingNumeric,
        ["f", "a1", "d1", "d2"],
        false,
        WellPoised,
        nt_5f4_pair
    ),
    entry!(
        "special.4_21",
        "7F6 summation contiguous to Dougall (p → ∞)",
        TerminatingExact,
        ["f", "a1", "d1", "d2"],
        true,
        VeryWellPoised,
        dougall_contiguous_last
    ),
    entry!(
        "baseline.saalschutz",
        "Saalschütz balanced 3F2 summation",
        TerminatingExact,
        ["a", "b", "c"],
        true,
        Balanced,
        saalschutz
    ),
    entry!(
        "baseline.dougall_7f6",
        "Dougall very-well-poised 7F6 summation",
        TerminatingExact,
        ["a", "b", "c", "d"],
        true,
        VeryWellPoised,
        dougall_7f6
    ),
    entry!(
        "baseline.vwp_5f4",
        "very-well-poised 5F4 summation",
        TerminatingExact,
        ["a", "b", "c"],
        true,
        VeryWellPoised,
        vwp_5f4
    ),
    entry!(
        "baseline.gauss",
        "Chu-Vandermonde (terminating Gauss) summation",
        TerminatingExact,
        ["b", "c"],
        true,
        Plain,
        gauss
    ),
    entry!(
        "baseline.kummer",
        "terminating Kummer 2F1(-1) summation",
        TerminatingExact,
        ["a"],
        true,
        WellPoised,
        kummer
    ),
    entry!(
        "baseline.dixon",
        "terminating Dixon 3F2 summation",
        TerminatingExact,
        ["a", "b"],
        true,
        WellPoised,
        dixon
    ),
    entry!(
        "baseline.gauss_nt",
        "Gauss 2F1(1) summation",
        NonterminatingNumeric,
        ["a", "b", "c"],
        false,
        Plain,
        gauss_nt
    ),
    entry!(
        "baseline.kummer_nt",
        "Kummer 2F1(-1) summation",
        NonterminatingNumeric,
        ["a", "b"],
        false,
        WellPoised,
        kummer_nt
    ),
    entry!(
        "baseline.dixon_nt",
        "Dixon 3F2(1) summation",
        NonterminatingNumeric,
        ["a", "b", "c"],
        false,
        WellPoised,
        dixon_nt
    ),
    entry!(
        "baseline.vwp_5f4_nt",
        "non-terminating very-well-poised 5F4 summation",
        NonterminatingNumeric,
        ["a", "b", "c", "d"],
        false,
        VeryWellPoised,
        vwp_5f4_nt
    ),
];
