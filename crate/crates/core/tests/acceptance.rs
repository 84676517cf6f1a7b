//! Acceptance criteria 1–8: one PASS/FAIL line each, nonzero exit on any FAIL.

use eulersum::alt_sums::alt_sum_H1_power;
use eulersum::errata::{check_errata, ERRATA_TOL, LEDGER};
use eulersum::harmonic::{stirling1, y_moment};
use eulersum::linear_sums::*;
use eulersum::oracle::*;
use eulersum::specfun::*;
use eulersum::wsums::{classical_w, w_11_0, ClassicalKind};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeSet;
use std::f64::consts::{LN_2, PI};
use std::process::ExitCode;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_s: f64) -> Result<(), String> {
    ensure(elapsed.as_secs_f64() < limit_s, || format!("runtime {:.2} s exceeds {limit_s} s", elapsed.as_secs_f64()))
}

fn factorial(m: u32) -> f64 {
    (1..=m).map(f64::from).product()
}

fn building_blocks() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let x: f64 = rng.random_range(0.01..50.0);
        let e = (digamma(x + 1.0).unwrap() - digamma(x).unwrap() - 1.0 / x).abs();
        ensure(e <= 1e-11, || format!("digamma recurrence at x={x}: {e:e}"))?;
        worst = worst.max(e);
    }
    for _ in 0..1000 {
        let m = rng.random_range(1..6u32);
        let x: f64 = rng.random_range(0.05..40.0);
        let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
        let want = sign * factorial(m) * hurwitz_zeta(m + 1, x).unwrap();
        // relative to the magnitude for the large values near the pole
        let e = (polygamma(m, x).unwrap() - want).abs() / want.abs().max(1.0);
        ensure(e <= 1e-11, || format!("polygamma({m},{x}): {e:e}"))?;
        worst = worst.max(e);
    }
    for _ in 0..1000 {
        let s = rng.random_range(2..10u32);
        let q: f64 = rng.random_range(0.05..60.0);
        let want = q.powi(-(s as i32));
        let e = (hurwitz_zeta(s, q).unwrap() - hurwitz_zeta(s, q + 1.0).unwrap() - want).abs() / want.max(1.0);
        ensure(e <= 1e-11, || format!("hurwitz step s={s} q={q}: {e:e}"))?;
        worst = worst.max(e);
    }
    for s in 2..=12 {
        let want = (1.0 - 2f64.powi(1 - s as i32)) * riemann_zeta(s).unwrap();
        let e = (alt_zeta(s).unwrap() - want).abs();
        ensure(e <= 1e-11, || format!("alt_zeta({s}): {e:e}"))?;
        worst = worst.max(e);
    }
    within(start.elapsed(), 5.0)?;
    Ok(format!("3000 random draws + 11 orders, worst {worst:.1e}"))
}

fn y_moments() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for m in 1..=4u32 {
        for a in [0.5, 1.0, 2.5, PI] {
            let q = quadrature(Integrand::LogPowMoment { m, a }, 1e-13).map_err(|e| e.to_string())?;
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            let e = (sign * q.value - y_moment(m, a).unwrap() / a).abs();
            ensure(e <= 1e-10, || format!("m={m} a={a}: {e:e}"))?;
            worst = worst.max(e);
        }
    }
    within(start.elapsed(), 2.0)?;
    Ok(format!("16 cases, worst {worst:.1e}"))
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn harmonic_exact(n: usize, s: u32) -> BigRational {
    (1..=n).fold(BigRational::zero(), |acc, j| acc + BigRational::new(BigInt::one(), BigInt::from(j).pow(s)))
}

fn stirling_exact() -> Outcome {
    const N: usize = 20;
    // Closed forms in harmonic numbers for k ≤ 5.
    for n in 1..=N {
        let f = (1..n).fold(BigRational::one(), |acc, i| acc * int(i as i64));
        let h: Vec<_> = (1..=4).map(|s| harmonic_exact(n - 1, s)).collect();
        let (h1, h2, h3, h4) = (&h[0], &h[1], &h[2], &h[3]);
        let forms = [
            f.clone(),
            &f * h1,
            &f * (h1 * h1 - h2) / int(2),
            &f * (h1 * h1 * h1 - int(3) * h1 * h2 + int(2) * h3) / int(6),
            &f * (h1.pow(4) - int(6) * h4 - int(6) * h1 * h1 * h2 + int(3) * h2 * h2 + int(8) * h1 * h3) / int(24),
        ];
        for (k, form) in forms.iter().enumerate() {
            let k = k + 1;
            let want = if k > n { BigRational::zero() } else { BigRational::from_integer(stirling1(n, k).unwrap().into()) };
            ensure(&want == form, || format!("closed form s({n},{k})"))?;
        }
    }
    // (−ln(1−x))^k / k! = Σ s(n,k) x^n / n!, coefficients by exact convolution.
    let log: Vec<BigRational> = (0..=N).map(|n| if n == 0 { BigRational::zero() } else { BigRational::new(BigInt::one(), BigInt::from(n)) }).collect();
    let mut power: Vec<BigRational> = (0..=N).map(|n| if n == 0 { BigRational::one() } else { BigRational::zero() }).collect();
    let mut kfact = BigRational::one();
    let mut checked = 0;
    for k in 1..=N {
        power = (0..=N).map(|n| (0..=n).fold(BigRational::zero(), |acc, j| acc + &power[j] * &log[n - j])).collect();
        kfact *= int(k as i64);
        let mut nfact = BigRational::one();
        for n in 0..=N {
            if n > 0 {
                nfact *= int(n as i64);
            }
            let coef = &power[n] * &nfact / &kfact;
            ensure(coef.is_integer(), || format!("coefficient n={n} k={k} not integral"))?;
            let want = if k > n { BigRational::zero() } else { BigRational::from_integer(stirling1(n, k).unwrap().into()) };
            ensure(coef == want, || format!("generating function s({n},{k})"))?;
            checked += 1;
        }
    }
    Ok(format!("closed forms k<=5 and {checked} generating-function coefficients, n<=20"))
}

fn corrected_suite() -> Vec<IdentityCase> {
    builtin_suite(1e-7).into_iter().filter(|c| c.variant == Variant::Corrected).collect()
}

fn identity_suite(records: &[VerificationRecord], elapsed: Duration) -> Outcome {
    let bad: Vec<_> = records.iter().filter(|r| r.status != Status::Confirmed).collect();
    ensure(bad.is_empty(), || {
        let first = &bad[0];
        format!("{} of {} not CONFIRMED, first {} {} {:?}", bad.len(), records.len(), first.case.identity_id, first.case.params, first.status)
    })?;
    within(elapsed, 120.0)?;
    let ids: BTreeSet<_> = records.iter().map(|r| r.case.identity_id.as_str()).collect();
    let worst = records.iter().map(|r| r.rel_residual.min(r.abs_residual)).fold(0.0, f64::max);
    Ok(format!(
        "{} cases over {} identities CONFIRMED, worst residual {worst:.1e}, {:.2} s",
        records.len(),
        ids.len(),
        elapsed.as_secs_f64()
    ))
}

fn known_values() -> Outcome {
    let z2 = riemann_zeta(2).unwrap();
    let z3 = riemann_zeta(3).unwrap();
    let checks = [
        ("sum_H1_bilinear(1,2)", sum_H1_bilinear(1.0, 2.0), 1.0),
        ("sum_H1_power(1,2)", sum_H1_power(1.0, 2), z3),
        ("sum_H1sq_window(1,1)", sum_H1sq_window(1.0, 1), z2 + 1.0),
        ("sum_H1H2_window(1,1)", sum_H1H2_window(1.0, 1), 2.0 * z3 - 1.0),
        ("alt_sum_H1_power(0,2)", alt_sum_H1_power(0.0, 2), PI * PI * LN_2 / 4.0 - z3 / 4.0),
        ("classical_w(2)", classical_w(2, ClassicalKind::OneOneZero), 2.0 * z2 + 2.0),
        ("w_11_0(0,2)", w_11_0(0.0, 2), 2.0 * z2 + 2.0),
    ];
    let mut worst: f64 = 0.0;
    for (name, got, want) in checks {
        let got = got.map_err(|e| format!("{name}: {e}"))?;
        let rel = (got - want).abs() / want.abs();
        ensure(rel <= 1e-9, || format!("{name} = {got}, want {want}"))?;
        worst = worst.max(rel);
    }
    Ok(format!("7 values, worst rel {worst:.1e}"))
}

fn errata(config: &SeriesConfig) -> (Outcome, Vec<VerificationRecord>) {
    let mut records = Vec::new();
    let mut run = || -> Outcome {
        let checks = check_errata(config);
        let mut summary = Vec::new();
        for (e, c) in LEDGER.iter().zip(&checks).filter(|(e, _)| e.expect_refuted) {
            ensure(c.reproduced, || format!("{} at {} not reproduced: {c:?}", e.identity, c.witness))?;
            let ok = match e.identity {
                "eq2.9" => (c.residual - 1.25).abs() <= 1e-6,
                "eq3.15" => (c.residual - 2.0).abs() <= 1e-6,
                _ => c.residual > 1e-3,
            };
            ensure(ok, || format!("{} residual {}", e.identity, c.residual))?;
            for v in [Variant::AsPrinted, Variant::Corrected] {
                records.push(verify_identity(&IdentityCase::new(e.identity, c.witness.clone(), ERRATA_TOL, v), config));
            }
            summary.push(format!("{} residual {:.4}", e.identity, c.residual));
        }
        ensure(summary.len() == 3, || format!("expected 3 refuted printed forms, got {}", summary.len()))?;
        Ok(format!("{}; corrected forms CONFIRMED", summary.join(", ")))
    };
    let outcome = run();
    (outcome, records)
}

fn generating_functions() -> Outcome {
    let start = Instant::now();
    let suite = gf_suite(1e-9);
    let records = grid_verify(&suite, &SeriesConfig::default());
    let mut worst: f64 = 0.0;
    for r in &records {
        ensure(r.status == Status::Confirmed && r.abs_residual <= 1e-9, || {
            format!("{} {} residual {:e} {:?}", r.case.identity_id, r.case.params, r.abs_residual, r.status)
        })?;
        worst = worst.max(r.abs_residual);
    }
    within(start.elapsed(), 10.0)?;
    let ids: BTreeSet<_> = records.iter().map(|r| r.case.identity_id.as_str()).collect();
    Ok(format!("{} draws over {} identities, worst residual {worst:.1e}", records.len(), ids.len()))
}

fn certification(base: &[VerificationRecord], suite: &[IdentityCase]) -> Outcome {
    for r in base {
        let limit = r.case.effective_tol() / 10.0;
        ensure(r.oracle_error_bound <= limit, || {
            format!("{} {}: bound {:e} > {limit:e}", r.case.identity_id, r.case.params, r.oracle_error_bound)
        })?;
    }
    let doubled = SeriesConfig::default();
    let doubled = doubled.with_max_terms(2 * doubled.max_terms);
    let again = grid_verify(suite, &doubled);
    let (_, witness_again) = errata(&doubled);
    let again: Vec<_> = again.into_iter().chain(witness_again).collect();
    ensure(again.len() == base.len(), || "record count changed".into())?;
    for (x, y) in base.iter().zip(&again) {
        ensure(x.status == y.status, || format!("{} {} changed {:?} -> {:?}", x.case.identity_id, x.case.params, x.status, y.status))?;
    }
    let worst = base.iter().map(|r| r.oracle_error_bound / (r.case.effective_tol() / 10.0)).fold(0.0, f64::max);
    Ok(format!("{} oracle bounds within tol/10 (worst {worst:.1e} of the limit); statuses stable at 2x max_terms", base.len()))
}

fn main() -> ExitCode {
    let config = SeriesConfig::default();
    let mut results: Vec<(u32, &str, Outcome, Duration)> = Vec::new();
    let mut timed = |n: u32, name: &'static str, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let out = f();
        results.push((n, name, out, start.elapsed()));
    };

    timed(1, "building blocks", &mut building_blocks);
    timed(2, "Y-moment suite", &mut y_moments);
    timed(3, "Stirling exactness", &mut stirling_exact);
    let suite = corrected_suite();
    let mut suite_records = Vec::new();
    timed(4, "identity suite", &mut || {
        let start = Instant::now();
        suite_records = grid_verify(&suite, &config);
        identity_suite(&suite_records, start.elapsed())
    });
    timed(5, "known values", &mut known_values);
    let mut witness_records = Vec::new();
    timed(6, "errata reproduction", &mut || {
        let (out, recs) = errata(&config);
        witness_records = recs;
        out
    });
    timed(7, "generating functions", &mut generating_functions);
    let base: Vec<_> = suite_records.iter().cloned().chain(witness_records.iter().cloned()).collect();
    timed(8, "oracle certification", &mut || certification(&base, &suite));

    let mut failed = 0;
    for (n, name, out, t) in &results {
        match out {
            Ok(msg) => println!("PASS criterion {n} ({name}): {msg} [{:.2} s]", t.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {n} ({name}): {msg} [{:.2} s]", t.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", results.len());
        ExitCode::FAILURE
    } else {
        println!("all {} criteria passed", results.len());
        ExitCode::SUCCESS
    }
}
