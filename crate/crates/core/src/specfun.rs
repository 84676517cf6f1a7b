//! Scalar special functions: gamma, digamma, polygamma, Riemann and Hurwitz
//! zeta (plain and alternating), polylogarithms and their parametric forms.
//!
//! Everything works in `f64`. Zeta orders are integers.

use crate::error::{domain, EulerError, Result};
use std::f64::consts::{LN_2, PI};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// ζ(s) for s = 2..=20.
const ZETA_TABLE: [f64; 19] = [
    1.644_934_066_848_226_4,
    1.202_056_903_159_594_2,
    1.082_323_233_711_138_1,
    1.036_927_755_143_37,
    1.017_343_061_984_449_2,
    1.008_349_277_381_923,
    1.004_077_356_197_944_4,
    1.002_008_392_826_082_1,
    1.000_994_575_127_818,
    1.000_494_188_604_119_4,
    1.000_246_086_553_308,
    1.000_122_713_347_578_5,
    1.000_061_248_135_058_8,
    1.000_030_588_236_307,
    1.000_015_282_259_408_6,
    1.000_007_637_197_637_9,
    1.000_003_817_293_265,
    1.000_001_908_212_716_5,
    1.000_000_953_962_033_8,
];

/// B_2, B_4, ..., B_14.
const BERNOULLI_EVEN: [f64; 7] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
];

/// A real shift parameter off the negative integers.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, serde::Serialize, serde::Deserialize)]
pub struct ShiftParam(f64);

impl ShiftParam {
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() {
            return Err(domain(format!("shift parameter {value} is not finite")));
        }
        if value < 0.0 && is_integer(value) {
            return Err(domain(format!("shift parameter {value} is a negative integer")));
        }
        Ok(Self(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for ShiftParam {
    type Error = EulerError;
    fn try_from(v: f64) -> Result<Self> {
        Self::new(v)
    }
}

pub(crate) fn is_integer(x: f64) -> bool {
    x.is_finite() && x == x.round()
}

pub(crate) fn is_nonpos_integer(x: f64) -> bool {
    x <= 0.0 && is_integer(x)
}

/// sin(πx) with exact zeros at the integers.
fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (PI * r).sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

fn cot_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    1.0 / (PI * r).tan()
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
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

/// Γ(x).
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(domain(format!("gamma argument {x} is not finite")));
    }
    if is_nonpos_integer(x) {
        return Err(EulerError::Pole(format!("gamma at {x}")));
    }
    if is_integer(x) && x <= 171.0 {
        let mut p = 1.0;
        let mut i = 2.0;
        while i < x {
            p *= i;
            i += 1.0;
        }
        return Ok(p);
    }
    if x < 0.5 {
        return Ok(PI / (sin_pi(x) * gamma_fn(1.0 - x)?));
    }
    let z = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    // Split the power so Γ(x) stays finite near the overflow edge.
    let half = t.powf((z + 0.5) / 2.0);
    Ok((2.0 * PI).sqrt() * half * (half * (-t).exp()) * acc)
}

/// ψ(x), the logarithmic derivative of Γ.
pub fn digamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(domain(format!("digamma argument {x} is not finite")));
    }
    if is_nonpos_integer(x) {
        return Err(EulerError::Pole(format!("digamma at {x}")));
    }
    if x <= 0.0 {
        return Ok(digamma(1.0 - x)? - PI * cot_pi(x));
    }
    let mut y = x;
    let mut shift = 0.0;
    while y < 10.0 {
        shift += 1.0 / y;
        y += 1.0;
    }
    let y2 = 1.0 / (y * y);
    let mut series = 0.0;
    let mut p = y2;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate() {
        series += b / (2.0 * (k as f64 + 1.0)) * p;
        p *= y2;
    }
    Ok(y.ln() - 0.5 / y - series - shift)
}

/// ψ^(m)(x) = (−1)^{m+1} m! ζ(m+1, x).
pub fn polygamma(m: u32, x: f64) -> Result<f64> {
    if m == 0 {
        return digamma(x);
    }
    if is_nonpos_integer(x) {
        return Err(EulerError::Pole(format!("polygamma at {x}")));
    }
    let z = hurwitz_unchecked(m + 1, x);
    let fact: f64 = (1..=m).map(f64::from).product();
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign * fact * z)
}

/// ζ(s), s ≥ 2.
pub fn riemann_zeta(s: u32) -> Result<f64> {
    if s < 2 {
        return Err(domain(format!("riemann_zeta needs s >= 2, got {s}")));
    }
    Ok(zeta_int(s))
}

pub(crate) fn zeta_int(s: u32) -> f64 {
    if (2..=20).contains(&s) {
        return ZETA_TABLE[(s - 2) as usize];
    }
    // For s > 20 the terms fall below 1e-17 after a handful of n.
    let mut sum = 0.0;
    let mut n = 30.0_f64;
    while n >= 1.0 {
        sum += n.powi(-(s as i32));
        n -= 1.0;
    }
    sum
}

/// ζ(s, q) = Σ_{n≥0} (n+q)^{-s} for integer s ≥ 2 and q > 0.
pub fn hurwitz_zeta(s: u32, q: f64) -> Result<f64> {
    if s < 2 {
        return Err(domain(format!("hurwitz_zeta needs s >= 2, got {s}")));
    }
    if !(q > 0.0) || !q.is_finite() {
        return Err(domain(format!("hurwitz_zeta needs q > 0, got {q}")));
    }
    Ok(hurwitz_unchecked(s, q))
}

/// Hurwitz zeta for any q off the nonpositive integers.
pub(crate) fn hurwitz_unchecked(s: u32, q: f64) -> f64 {
    let sf = f64::from(s);
    // Large s needs a larger switch-over point for the asymptotic tail.
    let threshold = 10.0 + 2.0 * sf;
    let mut direct = 0.0;
    let mut y = q;
    let si = s as i32;
    // Sum from the smallest terms upward when q is tiny.
    let mut terms = Vec::new();
    while y < threshold {
        terms.push(y.powi(-si));
        y += 1.0;
    }
    for t in terms.iter().rev() {
        direct += t;
    }
    let ys = y.powi(-si);
    let mut tail = y * ys / (sf - 1.0) + 0.5 * ys;
    // Σ B_2k/(2k)! (s)_{2k-1} y^{-s-2k+1}
    let y2 = 1.0 / (y * y);
    let mut rising = sf; // (s)_1
    let mut fact = 2.0; // (2k)!
    let mut pw = ys / y;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate() {
        let kk = k as f64 + 1.0;
        tail += b / fact * rising * pw;
        rising *= (sf + 2.0 * kk - 1.0) * (sf + 2.0 * kk);
        fact *= (2.0 * kk + 1.0) * (2.0 * kk + 2.0);
        pw *= y2;
    }
    direct + tail
}

/// ζ̄(s) = Σ (−1)^{n−1} n^{−s}.
pub fn alt_zeta(s: u32) -> Result<f64> {
    match s {
        0 => Err(domain("alt_zeta needs s >= 1")),
        1 => Ok(LN_2),
        _ => Ok((1.0 - 2f64.powi(1 - s as i32)) * zeta_int(s)),
    }
}

/// Σ_{k≥0} (−1)^k a_k by the Cohen–Rodriguez-Villegas–Zagier scheme.
/// Valid when a_k is a totally monotone (moment) sequence.
pub(crate) fn cvz_sum(n: usize, a: impl Fn(usize) -> f64) -> f64 {
    let nf = n as f64;
    let mut d = (3.0 + 8f64.sqrt()).powf(nf);
    d = (d + 1.0 / d) / 2.0;
    let mut b = -1.0;
    let mut c = -d;
    let mut s = 0.0;
    for k in 0..n {
        let kf = k as f64;
        c = b - c;
        s += c * a(k);
        b *= (kf + nf) * (kf - nf) / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}

/// Number of CVZ terms reaching ~1e-18 relative to the leading magnitude.
pub(crate) fn cvz_terms(lead: f64) -> usize {
    let rate = (3.0 + 8f64.sqrt()).ln();
    let extra = lead.abs().max(1.0).ln() / rate;
    (24.0 + extra).ceil() as usize
}

/// ζ̄(s, a+1) = Σ_{n≥1} (−1)^{n−1} (n+a)^{−s}, a > −1.
pub fn alt_hurwitz_zeta(s: u32, a: f64) -> Result<f64> {
    if s == 0 {
        return Err(domain("alt_hurwitz_zeta needs s >= 1"));
    }
    if !(a > -1.0) || !a.is_finite() {
        return Err(domain(format!("alt_hurwitz_zeta needs a > -1, got {a}")));
    }
    if a == 0.0 {
        return alt_zeta(s);
    }
    let si = s as i32;
    let lead = (1.0 + a).powi(-si);
    let n = cvz_terms(lead);
    Ok(cvz_sum(n, |k| (k as f64 + 1.0 + a).powi(-si)))
}

/// Li_m(x) for m ≥ 1 and −1 ≤ x ≤ 1 (x = 1 needs m ≥ 2).
pub fn polylog(m: u32, x: f64) -> Result<f64> {
    if m == 0 {
        return Err(domain("polylog order must be >= 1"));
    }
    if !(-1.0..=1.0).contains(&x) {
        return Err(domain(format!("polylog argument {x} outside [-1, 1]")));
    }
    if m == 1 {
        if x == 1.0 {
            return Err(domain("Li_1 diverges at x = 1"));
        }
        return Ok(-(-x).ln_1p());
    }
    Ok(polylog_inner(m, x))
}

/// Li_m(1 − w) for 0 < w ≤ 1 without forming 1 − w first.
pub fn polylog_complement(m: u32, w: f64) -> Result<f64> {
    if m == 0 {
        return Err(domain("polylog order must be >= 1"));
    }
    if !(w > 0.0 && w <= 1.0) {
        return Err(domain(format!("complement {w} outside (0, 1]")));
    }
    if m == 1 {
        return Ok(-w.ln());
    }
    if w >= 0.5 {
        return Ok(polylog_inner(m, 1.0 - w));
    }
    Ok(polylog_mu(m, (-w).ln_1p()))
}

fn polylog_inner(m: u32, x: f64) -> f64 {
    if x == 1.0 {
        return zeta_int(m);
    }
    if x == -1.0 {
        return -(1.0 - 2f64.powi(1 - m as i32)) * zeta_int(m);
    }
    if x.abs() <= 0.5 {
        return polylog_series(m, x);
    }
    if x > 0.0 {
        return polylog_mu(m, x.ln());
    }
    // Duplication: Li_m(x) + Li_m(−x) = 2^{1−m} Li_m(x²).
    2f64.powi(1 - m as i32) * polylog_inner(m, x * x) - polylog_inner(m, -x)
}

fn polylog_series(m: u32, x: f64) -> f64 {
    let mi = m as i32;
    let mut sum = 0.0;
    let mut p = x;
    let mut n = 1.0_f64;
    loop {
        let t = p / n.powi(mi);
        sum += t;
        if t.abs() <= 1e-18 * sum.abs().max(1e-300) {
            break;
        }
        p *= x;
        n += 1.0;
        if n > 2000.0 {
            break;
        }
    }
    sum
}

/// Expansion of Li_m(e^μ) around μ = 0 for −ln 2 ≤ μ < 0 and m ≥ 2.
fn polylog_mu(m: u32, mu: f64) -> f64 {
    let mut sum = 0.0;
    let mut pow = 1.0; // μ^k / k!
    let mut harm = 0.0; // H_{m−1}
    for k in 0..m {
        if k + 1 == m {
            for j in 1..m {
                harm += 1.0 / f64::from(j);
            }
            sum += pow * (harm - (-mu).ln());
        } else {
            sum += zeta_int(m - k) * pow;
        }
        pow *= mu / f64::from(k + 1);
    }
    // k = m: ζ(0) = −1/2.
    sum += -0.5 * pow;
    // k = m − 1 + 2n, n ≥ 1: ζ(1−2n) = (−1)^n 2 (2n−1)! ζ(2n) / (2π)^{2n}.
    let two_pi = 2.0 * PI;
    let mut k = m; // current power index of `pow`
    let mut n = 1u32;
    loop {
        // Advance pow from μ^k/k! to μ^{k'}/k'! with k' = m − 1 + 2n.
        let target = m - 1 + 2 * n;
        while k < target {
            k += 1;
            pow *= mu / f64::from(k);
        }
        let mut coef = 2.0 * zeta_int(2 * n);
        // (2n−1)!/(2π)^{2n}
        for j in 1..=(2 * n) {
            coef /= two_pi;
            if j < 2 * n {
                coef *= f64::from(j);
            }
        }
        if n % 2 == 1 {
            coef = -coef;
        }
        let t = coef * pow;
        sum += t;
        if t.abs() < 1e-18 * sum.abs().max(1e-300) || n > 60 {
            break;
        }
        n += 1;
    }
    sum
}

/// Li_s(a, x) = Σ_{n≥1} x^n/(n+a)^s.
pub fn param_polylog(s: u32, a: f64, x: f64) -> Result<f64> {
    ShiftParam::new(a)?;
    if s == 0 {
        return Err(domain("param_polylog order must be >= 1"));
    }
    if x == -1.0 {
        return alt_hurwitz_zeta(s, a).map(|v| -v);
    }
    if !(x > -1.0 && x < 1.0) {
        return Err(domain(format!("param_polylog argument {x} outside [-1, 1)")));
    }
    if a == 0.0 {
        return polylog(s, x);
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let si = s as i32;
    let ax = x.abs();
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut p = 1.0;
    let mut n = 1.0_f64;
    loop {
        p *= x;
        let t = p / (n + a).powi(si);
        let y = t - comp;
        let z = sum + y;
        comp = (z - sum) - y;
        sum = z;
        // Remaining terms are bounded by a geometric series once n + a ≥ 1.
        if n + a >= 1.0 && t.abs() * ax / (1.0 - ax) <= 1e-18 * sum.abs().max(1e-300) {
            break;
        }
        n += 1.0;
        if n > 5.0e6 {
            return Err(EulerError::Convergence(format!(
                "param_polylog did not converge at x = {x}"
            )));
        }
    }
    Ok(sum)
}

/// H_s(x, a) = Σ_{n≥1} x^{n+a}/(n+a)^s = x^a Li_s(a, x).
pub fn h_func(s: u32, a: f64, x: f64) -> Result<f64> {
    ShiftParam::new(a)?;
    if s == 0 {
        return Err(domain("h_func order must be >= 1"));
    }
    if x < 0.0 && !is_integer(a) {
        return Err(domain(format!(
            "x^a undefined for x = {x} < 0 and non-integer a = {a}"
        )));
    }
    if x == 1.0 {
        if s < 2 {
            return Err(domain("H_1(x, a) diverges at x = 1"));
        }
        if a <= -1.0 {
            return Err(domain("H_s(1, a) needs a > -1"));
        }
        return hurwitz_zeta(s, a + 1.0);
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let xa = if is_integer(a) { x.powi(a as i32) } else { x.powf(a) };
    Ok(xa * param_polylog(s, a, x)?)
}
