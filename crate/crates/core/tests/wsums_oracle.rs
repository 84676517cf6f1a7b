use eulersum::oracle::{EulerSeries, HVar, SeriesConfig};
use eulersum::wsums::*;
use eulersum::EulerError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn exact(c: f64) -> BigRational {
    assert_eq!(c.fract(), 0.0);
    assert!(c.abs() < 2f64.powi(53));
    BigRational::from_integer(BigInt::from(c as i64))
}

/// 1/binom(x+k, k) = k!/Π_{i=1..k}(x+i).
fn inv_binom(x: &BigRational, k: u32) -> BigRational {
    (1..=k).fold(BigRational::one(), |acc, i| acc * rat(i64::from(i), 1) / (x + rat(i64::from(i), 1)))
}

fn shifts() -> [BigRational; 4] {
    [rat(0, 1), rat(1, 3), rat(7, 2), rat(22, 7)]
}

#[test]
fn partial_fractions_exact() {
    // Checked in rational arithmetic: the f64 reconstruction loses all
    // digits to cancellation for large k.
    for k in 1..=MAX_K {
        let pf = pf_coeffs(k).unwrap();
        assert_eq!(pf.coeffs.len(), k as usize);
        for n in [1i64, 7, 123] {
            for a in shifts() {
                let x = rat(n, 1) + &a;
                let sum = pf.coeffs.iter().enumerate().fold(BigRational::zero(), |acc, (i, c)| {
                    acc + exact(*c) / (&x + rat(i as i64 + 1, 1))
                });
                assert_eq!(sum, inv_binom(&x, k), "k={k} n={n} a={a}");
            }
        }
    }
}

#[test]
fn window_partial_fractions_exact() {
    for k in 2..=MAX_K {
        let w = pf_coeffs_window(k).unwrap();
        assert_eq!(w.len(), k as usize - 1);
        for n in [1i64, 7, 123] {
            for a in shifts() {
                let x = rat(n, 1) + &a;
                let sum = w.iter().enumerate().fold(BigRational::zero(), |acc, (i, c)| {
                    acc + exact(*c) / ((&x + rat(1, 1)) * (&x + rat(i as i64 + 2, 1)))
                });
                assert_eq!(sum, inv_binom(&x, k), "k={k} n={n} a={a}");
            }
        }
    }
}

#[test]
fn resonance_lattice() {
    for k in 1..=6u32 {
        for b in [0.25, 1.5, 4.0] {
            for r in 1..=k {
                let a = b + f64::from(r);
                let e = w_1_p(a, b, k, 2).unwrap_err();
                assert!(matches!(e, EulerError::Resonance { r: got, .. } if got == r), "k={k} b={b} r={r}");
                assert!(w_alt_1_p(a, b, k, 2).is_err());
            }
            assert!(w_1_p(b + f64::from(k) + 1.0, b, k, 2).is_ok());
            assert!(w_1_p(b + 0.5, b, k, 2).is_ok());
        }
    }
}

fn oracle(s: EulerSeries) -> f64 {
    s.sum(&SeriesConfig { target_tol: 1e-12, ..SeriesConfig::default() }).unwrap().value
}

#[test]
fn classical_against_series() {
    for k in 2..=8u32 {
        let c = classical_w(k, ClassicalKind::OneOneZero).unwrap();
        let o = oracle(EulerSeries::new().numerator(&[(1.0, &[HVar::H(1), HVar::H(1)])]).binomial(k, 0.0));
        assert!((c - o).abs() <= 1e-10, "k={k}");
        assert!((w_11_0(0.0, k).unwrap() - c).abs() <= 1e-10, "k={k}");
    }
    for k in 1..=6u32 {
        let c = classical_w(k, ClassicalKind::OneOneOne).unwrap();
        let o = oracle(EulerSeries::new().numerator(&[(1.0, &[HVar::H(1), HVar::H(1)])]).pole(0.0, 1).binomial(k, 0.0));
        assert!((c - o).abs() <= 1e-10, "k={k}");
    }
}

#[test]
fn frozen_values_against_series() {
    let h1 = EulerSeries::new().over(HVar::H(1));
    let frozen = [
        (w_1_p(1.0, 0.5, 2, 1).unwrap(), 0.310913253954142, h1.clone().pole(1.0, 1).binomial(2, 0.5)),
        (w_1_p(0.5, 1.0, 3, 2).unwrap(), 0.0647751992495265, h1.clone().pole(0.5, 2).binomial(3, 1.0)),
        (w_1_p(2.0, 0.25, 2, 1).unwrap(), 0.268517232957146, h1.clone().pole(2.0, 1).binomial(2, 0.25)),
        (w_m_0(0.5, 3, 2).unwrap(), 0.415362886078666, EulerSeries::new().over(HVar::H(2)).binomial(3, 0.5)),
        (w_m_0(1.0, 2, 3).unwrap(), 0.754589869735481, EulerSeries::new().over(HVar::H(3)).binomial(2, 1.0)),
        (w_alt_m_0(0.0, 2, 1).unwrap(), 0.772588722239781, EulerSeries::new().over(HVar::Hbar(1)).binomial(2, 0.0)),
        (w_alt_m_1(1.0, 1, 1).unwrap(), 0.386294361119891, EulerSeries::new().over(HVar::Hbar(1)).pole(1.0, 1).binomial(1, 1.0)),
    ];
    for (closed, value, series) in frozen {
        assert!((closed - value).abs() <= 1e-13, "{closed} vs {value}");
        assert!((oracle(series) - value).abs() <= 1e-10, "{value}");
    }
}

#[test]
fn deep_binomials_against_series() {
    // Cancellation in the alternating weights costs digits as k grows;
    // bounds sit about tenfold above the measured loss.
    for (k, bound) in [(5u32, 1e-12), (10, 1e-10), (15, 1e-8), (20, 1e-6), (25, 1e-4), (30, 1e-3)] {
        let closed = w_m_1(1.5, k, 2).unwrap();
        let o = oracle(EulerSeries::new().over(HVar::H(2)).pole(1.5, 1).binomial(k, 1.5));
        let rel = (closed - o).abs() / o.abs();
        assert!(rel <= bound, "k={k} rel={rel:e}");
        assert_eq!(precision_warning(k).is_some(), k > WARN_K);
    }
    assert!(w_m_1(1.5, MAX_K + 1, 2).is_err());
}

#[test]
fn printed_forms_differ() {
    let pairs = [
        (w_1_p(1.0, 2.0, 2, 1).unwrap(), w_1_p_printed(1.0, 2.0, 2, 1).unwrap()),
        (w_1_p(0.5, 1.0, 3, 2).unwrap(), w_1_p_printed(0.5, 1.0, 3, 2).unwrap()),
        (w_11_0(0.0, 2).unwrap(), w_11_0_printed(0.0, 2).unwrap()),
        (w_11_0(0.5, 3).unwrap(), w_11_0_printed(0.5, 3).unwrap()),
        (w_alt_1_p(1.0, 2.0, 2, 1).unwrap(), w_alt_1_p_printed(1.0, 2.0, 2, 1).unwrap()),
    ];
    for (corrected, printed) in pairs {
        assert!((corrected - printed).abs() > 1e-3, "{corrected} vs {printed}");
    }
}
