use eulersum::alt_sums::*;
use eulersum::oracle::{
    accelerated_alternating, verify_identity, EulerSeries, HVar, IdentityCase, Params, SeriesConfig, Status, Variant,
};
use eulersum::specfun::riemann_zeta;
use std::f64::consts::{LN_2, PI};

fn config(tol: f64) -> SeriesConfig {
    SeriesConfig { target_tol: tol, ..SeriesConfig::default() }
}

fn p(pairs: &[(&str, f64)]) -> Params {
    pairs.iter().fold(Params::new(), |acc, (k, v)| acc.with(k, *v))
}

#[test]
fn origin_windows_against_series() {
    for k in 1..=5u32 {
        for m in 1..=3u32 {
            let series = EulerSeries::new().over(HVar::Hbar(m)).pole(0.0, 1).pole(f64::from(k), 1);
            let o = series.sum(&config(1e-11)).unwrap();
            let closed = alt_sum_Hm_window_origin(k, m).unwrap();
            assert!((o.value - closed).abs() <= 1e-10, "k={k} m={m} diff={:e}", (o.value - closed).abs());
        }
    }
}

#[test]
fn between_windows_against_series() {
    for k in 2..=5u32 {
        for r in 1..k {
            for m in 1..=3u32 {
                let series = EulerSeries::new().over(HVar::Hbar(m)).pole(f64::from(r), 1).pole(f64::from(k), 1);
                let o = series.sum(&config(1e-11)).unwrap();
                let closed = alt_sum_Hm_window_between(r, k, m).unwrap();
                assert!((o.value - closed).abs() <= 1e-10, "r={r} k={k} m={m}");
                // argument order is irrelevant
                assert_eq!(closed, alt_sum_Hm_window_between(k, r, m).unwrap());
            }
        }
    }
}

#[test]
fn alternating_moment_against_acceleration() {
    for a in [0.5, 1.0, 2.0, 3.5] {
        for m in 1..=4u32 {
            let term = |n: u64| {
                let n = n as f64;
                1.0 / (n.powi(m as i32) * (n + a))
            };
            let o = accelerated_alternating(term, &config(1e-12)).unwrap();
            let closed = alt_polylog_moment(m, a).unwrap();
            assert!((o.value - closed).abs() <= 1e-10, "a={a} m={m}");
        }
    }
}

#[test]
fn alternating_power_at_origin() {
    let want = PI * PI * LN_2 / 4.0 - riemann_zeta(3).unwrap() / 4.0;
    assert!((alt_sum_H1_power(0.0, 2).unwrap() - want).abs() <= 1e-14);
    let o = EulerSeries::new().over(HVar::Hbar(1)).pole(0.0, 2).sum(&config(1e-12)).unwrap();
    assert!((o.value - want).abs() <= 1e-10);
}

#[test]
fn shifted_windows_against_series() {
    for a in 0..=3u32 {
        for k in 1..=4u32 {
            for m in 1..=3u32 {
                let a = f64::from(a);
                let series = EulerSeries::new().over(HVar::Hbar(m)).pole(a, 1).pole(a + f64::from(k), 1);
                let o = series.sum(&config(1e-11)).unwrap();
                let closed = alt_sum_Hm_window(a, k, m).unwrap();
                assert!((o.value - closed).abs() <= 1e-10, "a={a} k={k} m={m}");
            }
        }
    }
    assert!(alt_sum_Hm_window(1.5, 2, 1).is_err());
}

#[test]
fn alternating_catalog_grid() {
    let tol = 1e-7;
    let mut cases = Vec::new();
    for a in [0.5, 1.0, 1.5, 2.5, 10.0 / 3.0] {
        for db in [0.5, 2.0] {
            cases.push(("eq4.2", p(&[("a", a), ("b", a + db)])));
        }
        for s in [2.0, 3.0, 4.0] {
            cases.push(("eq4.3", p(&[("a", a), ("s", s)])));
        }
        for (k, bb, pp) in [(2.0, 0.25, 1.0), (3.0, 2.2, 2.0)] {
            cases.push(("eq4.5", p(&[("a", a), ("b", bb), ("k", k), ("p", pp)])));
        }
    }
    for a in 0..=3 {
        for k in [1.0, 2.0, 3.0] {
            for m in [1.0, 2.0] {
                cases.push(("eq4.7", p(&[("a", f64::from(a)), ("k", k), ("m", m)])));
                cases.push(("eq4.12", p(&[("a", f64::from(a)), ("k", k + 1.0), ("m", m)])));
                if a >= 1 {
                    cases.push(("eq4.13", p(&[("a", f64::from(a)), ("k", k), ("m", m)])));
                }
            }
        }
    }
    for (id, params) in cases {
        let case = IdentityCase::new(id, params, tol, Variant::Corrected);
        let r = verify_identity(&case, &SeriesConfig::default());
        assert_eq!(r.status, Status::Confirmed, "{r:?}");
    }
}
