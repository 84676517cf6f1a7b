use eulersum::harmonic::*;
use eulersum::oracle::{quadrature, Integrand};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn big_factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// Exact H_n^{(s)}.
fn harmonic_exact(n: usize, s: u32) -> BigRational {
    (1..=n).fold(BigRational::zero(), |acc, j| {
        acc + BigRational::new(BigInt::one(), BigInt::from(j).pow(s))
    })
}

#[test]
fn parametric_reduces_to_classical() {
    for s in 1..=4 {
        for n in (0..=10_000u64).step_by(97).chain([1, 2, 3, 10_000]) {
            let want = harmonic_num(n, s);
            let got = param_harmonic(n, s, 0.0).unwrap();
            assert!((got - want).abs() <= 1e-14 * want.max(1.0), "n={n} s={s}");
        }
    }
}

proptest! {
    #[test]
    fn shifted_window(alpha in 0.0f64..5.0, n in 0u64..100, m in 2u32..6) {
        let lhs = shifted_harmonic(n as f64 + alpha, m).unwrap();
        let rhs = shifted_harmonic(alpha, m).unwrap() + param_harmonic(n, m, alpha).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12, "alpha={alpha} n={n} m={m}");
    }
}

#[test]
fn stirling_closed_forms_exact() {
    for n in 1..=20usize {
        let f = BigRational::from_integer(big_factorial(n - 1).into());
        let h1 = harmonic_exact(n - 1, 1);
        let h2 = harmonic_exact(n - 1, 2);
        let h3 = harmonic_exact(n - 1, 3);
        let h4 = harmonic_exact(n - 1, 4);
        let int = |v: i64| BigRational::from_integer(BigInt::from(v));
        let forms = [
            f.clone(),
            &f * &h1,
            &f * (&h1 * &h1 - &h2) / int(2),
            &f * (&h1 * &h1 * &h1 - int(3) * &h1 * &h2 + int(2) * &h3) / int(6),
            &f * (h1.pow(4) - int(6) * &h4 - int(6) * &h1 * &h1 * &h2 + int(3) * &h2 * &h2 + int(8) * &h1 * &h3)
                / int(24),
        ];
        for (k, form) in forms.iter().enumerate() {
            let k = k + 1;
            if k > n {
                assert!(form.is_zero(), "s({n},{k}) closed form");
                continue;
            }
            let s = BigRational::from_integer(stirling1(n, k).unwrap().into());
            assert_eq!(&s, form, "s({n},{k})");
        }
    }
}

#[test]
fn stirling_generating_function() {
    // (−ln(1−x))^{m+1} = (m+1)! Σ_n s(n, m+1) x^n / n!
    let x: f64 = 0.25;
    for m in 0..=4usize {
        let mut fact_m1 = 1.0;
        for i in 1..=m + 1 {
            fact_m1 *= i as f64;
        }
        let direct = (-(-x).ln_1p()).powi(m as i32 + 1);
        let mut series = 0.0;
        let mut nfact = 1.0;
        for n in 1..=64usize {
            nfact *= n as f64;
            if n > m {
                let s: f64 = stirling1(n, m + 1).unwrap().to_string().parse().unwrap();
                series += fact_m1 * s * x.powi(n as i32) / nfact;
            }
        }
        assert!((series - direct).abs() <= 1e-12 * direct, "m={m}");
    }
}

#[test]
fn stirling_rows_exact() {
    for n in 0..=20usize {
        assert_eq!(stirling1(n, n).unwrap(), BigUint::one());
        if n >= 1 {
            assert_eq!(stirling1(n, 1).unwrap(), big_factorial(n - 1));
            assert_eq!(stirling1(n, 0).unwrap(), BigUint::zero());
        }
        for k in 1..=n {
            let next = stirling1(n + 1, k).unwrap();
            assert_eq!(next, stirling1(n, k - 1).unwrap() + BigUint::from(n) * stirling1(n, k).unwrap());
        }
    }
    assert!(stirling1(3, 4).is_err());
}

#[test]
fn y_moment_against_quadrature() {
    for m in 1..=4u32 {
        for a in [0.5, 1.0, 2.5, std::f64::consts::PI] {
            let q = quadrature(Integrand::LogPowMoment { m, a }, 1e-13).unwrap();
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            let closed = y_moment(m, a).unwrap() / a;
            assert!((sign * q.value - closed).abs() <= 1e-10, "m={m} a={a}");
        }
    }
}

#[test]
fn gen_binomial_integers() {
    for n in 0..=30u32 {
        for k in 0..=30u32 {
            let exact = (0..k).fold(1u128, |c, i| c * u128::from(n + k - i) / u128::from(i + 1)) as f64;
            let got = gen_binomial(f64::from(n + k), f64::from(k)).unwrap();
            assert!((got - exact).abs() <= 1e-12 * exact, "n={n} k={k}");
        }
    }
}

#[test]
fn alternating_envelope() {
    for s in 1..=4u32 {
        let z = eulersum::specfun::alt_zeta(s).unwrap();
        for n in (1..=10_000u64).step_by(37) {
            let d = (alt_harmonic_num(n, s) - z).abs();
            assert!(d <= (n as f64 + 1.0).powi(-(s as i32)) + 1e-15, "n={n} s={s}");
        }
    }
}
