//! Library results against independent reference computations that share
//! no code with the crate: direct BigRational term-by-term sums, an f64
//! Lanczos gamma, and plain f64 summation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hyperid_core::gamma::{eval_gamma_product_at, gamma_rat, GammaProduct};
use hyperid_core::series::{eval_nonterminating, eval_terminating, Argument, SeriesSpec};
use hyperid_core::{Error, Rat};

fn big(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn to_rat(x: &BigRational) -> Rat {
    Rat::from_bigints(x.numer().clone(), x.denom().clone()).unwrap()
}

fn rising(a: &BigRational, k: u64) -> BigRational {
    let mut acc = BigRational::one();
    for j in 0..k {
        acc *= a + BigRational::from_integer(BigInt::from(j));
    }
    acc
}

/// Σ_{k=0}^{N} ∏(a)_k / (∏(b)_k k!) z^k, each term from scratch; `None`
/// if a denominator product vanishes.
fn oracle_sum(num: &[BigRational], den: &[BigRational], z: i64, n: u64) -> Option<BigRational> {
    let mut total = BigRational::zero();
    for k in 0..=n {
        let top: BigRational = num.iter().map(|a| rising(a, k)).product();
        let bottom: BigRational = den.iter().map(|b| rising(b, k)).product::<BigRational>()
            * rising(&BigRational::one(), k);
        if bottom.is_zero() {
            return None;
        }
        let sign = if z < 0 && k % 2 == 1 {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        total += top / bottom * sign;
    }
    Some(total)
}

fn draw(rng: &mut ChaCha8Rng) -> BigRational {
    big(rng.gen_range(-30..=30), rng.gen_range(1..=12))
}

#[test]
fn terminating_sums_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut checked, mut poles) = (0, 0);
    while checked < 500 {
        let n: u64 = rng.gen_range(0..=20);
        let p = rng.gen_range(1..=10usize);
        let q = rng.gen_range(0..=10usize);
        let mut num: Vec<BigRational> = (0..p - 1).map(|_| draw(&mut rng)).collect();
        num.insert(rng.gen_range(0..p), big(-(n as i64), 1));
        let den: Vec<BigRational> = (0..q).map(|_| draw(&mut rng)).collect();
        let z = if rng.gen_bool(0.5) { 1 } else { -1 };
        let spec = SeriesSpec::terminating(
            num.iter().map(to_rat).collect(),
            den.iter().map(to_rat).collect(),
            n,
        )
        .with_z(if z == 1 {
            Argument::One
        } else {
            Argument::MinusOne
        });
        let pole = den
            .iter()
            .any(|b| b.is_integer() && !b.is_positive() && (-b.to_integer()).to_u64().unwrap() < n);
        if pole {
            assert!(
                matches!(eval_terminating(&spec), Err(Error::Pole(_))),
                "{spec}"
            );
            poles += 1;
            continue;
        }
        let want = oracle_sum(&num, &den, z, n).expect("no pole");
        assert_eq!(eval_terminating(&spec).unwrap(), to_rat(&want), "{spec}");
        checked += 1;
    }
    assert!(poles > 0, "the generator should produce some pole cases");
}

/// Lanczos approximation (g = 7, n = 9), ~15 significant digits.
fn lanczos_gamma(x: f64) -> f64 {
    const C: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        let pi = std::f64::consts::PI;
        return pi / ((pi * x).sin() * lanczos_gamma(1.0 - x));
    }
    let x = x - 1.0;
    let mut a = C[0];
    let t = x + 7.5;
    for (i, c) in C.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    (2.0 * std::f64::consts::PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * a
}

#[test]
fn gamma_matches_lanczos() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..200 {
        let den = rng.gen_range(1..=12i64);
        let num = rng.gen_range(-25 * den..=50 * den);
        let x = Rat::frac(num, den).unwrap();
        if x.is_nonpositive_integer() {
            continue;
        }
        let xf = num as f64 / den as f64;
        if xf.fract().abs() < 1e-3 && xf < 0.0 {
            continue; // too close to a pole for the f64 oracle
        }
        let want = lanczos_gamma(xf);
        let got = gamma_rat(&x, 192).unwrap().to_f64();
        assert!(
            ((got - want) / want).abs() < 1e-11,
            "Γ({x}): {got} vs {want}"
        );
    }
}

#[test]
fn gamma_products_match_lanczos() {
    let mut rng = ChaCha8Rng::seed_from_u64(78);
    for _ in 0..50 {
        let args: Vec<Rat> = (0..4)
            .map(|_| Rat::frac(rng.gen_range(1..=120), rng.gen_range(1..=12)).unwrap())
            .collect();
        let gp = GammaProduct::new(args[..2].to_vec(), args[2..].to_vec());
        let want: f64 = args[..2]
            .iter()
            .map(|a| lanczos_gamma(a.to_f64()))
            .product::<f64>()
            / args[2..]
                .iter()
                .map(|a| lanczos_gamma(a.to_f64()))
                .product::<f64>();
        let got = eval_gamma_product_at(&gp, 192).unwrap().to_f64();
        assert!(
            ((got - want) / want).abs() < 1e-11,
            "{gp:?}: {got} vs {want}"
        );
    }
}

fn f64_sum(num: &[f64], den: &[f64], z: f64, terms: usize) -> f64 {
    let (mut t, mut s) = (1.0f64, 1.0f64);
    for n in 0..terms {
        let nf = n as f64;
        let top: f64 = num.iter().map(|a| a + nf).product();
        let bottom: f64 = den.iter().map(|b| b + nf).product::<f64>() * (nf + 1.0);
        t *= top / bottom * z;
        s += t;
    }
    s
}

#[test]
fn nonterminating_sums_match_direct_f64_summation() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 40 {
        let p = rng.gen_range(2..=5usize);
        let num: Vec<Rat> = (0..p)
            .map(|_| Rat::frac(rng.gen_range(-30..=30), rng.gen_range(1..=12)).unwrap())
            .collect();
        let den: Vec<Rat> = (0..p - 1)
            .map(|_| Rat::frac(rng.gen_range(1..=120), rng.gen_range(1..=12)).unwrap())
            .collect();
        let z = if rng.gen_bool(0.5) {
            Argument::One
        } else {
            Argument::MinusOne
        };
        let spec = SeriesSpec::nonterminating(num.clone(), den.clone(), z);
        if spec.parametric_excess() < Rat::int(8) || num.iter().any(Rat::is_nonpositive_integer) {
            continue;
        }
        let nf: Vec<f64> = num.iter().map(Rat::to_f64).collect();
        let df: Vec<f64> = den.iter().map(Rat::to_f64).collect();
        let want = f64_sum(&nf, &df, z.as_rat().to_f64(), 20_000);
        let got = eval_nonterminating(&spec, 12).unwrap().to_f64();
        assert!(
            (got - want).abs() <= 1e-9 * want.abs().max(1.0),
            "{spec}: {got} vs {want}"
        );
        checked += 1;
    }
}
