//! Left-hand sides of the generating-function and integral identities,
//! from direct power series or quadrature.

use super::quadrature::{quadrature, Integrand};
use super::series::power_series_sum;
use super::{EvalResult, SeriesConfig};
use crate::error::Result;
use crate::linear_sums::gf::{validate, GfKind, GfParams};

/// Left side of the identity selected by `kind`.
pub fn gf_lhs(kind: GfKind, p: &GfParams, config: &SeriesConfig) -> Result<EvalResult> {
    validate(kind, p)?;
    let (x, y, a) = (p.x, p.y, p.a);
    match kind {
        GfKind::HnHm | GfKind::HnH2 | GfKind::SqDiff => {
            let m = if kind == GfKind::HnHm { p.m } else { 2 };
            let (mut h, mut hm, mut xn) = (0.0, 0.0, 1.0);
            let terms = (1u64..).map(move |n| {
                let nf = n as f64;
                h += 1.0 / nf;
                hm += nf.powi(-(m as i32));
                xn *= x;
                if kind == GfKind::SqDiff {
                    (h * h - hm) * xn
                } else {
                    h * hm * xn
                }
            });
            power_series_sum(terms, x.abs(), config)
        }
        GfKind::NestedReflect => {
            let (m, q) = (p.m as i32, p.p as i32);
            let (mut inner_x, mut inner_y, mut xn, mut yn) = (0.0, 0.0, 1.0, 1.0);
            let terms = (1u64..).map(move |n| {
                let nf = n as f64;
                xn *= x;
                yn *= y;
                inner_x += xn / nf.powi(q);
                inner_y += yn / nf.powi(m);
                yn / nf.powi(m) * inner_x + xn / nf.powi(q) * inner_y
            });
            power_series_sum(terms, x.abs().max(y.abs()), config)
        }
        GfKind::NestedDiagonal | GfKind::NestedPair => {
            let s = p.s as i32;
            let two = kind == GfKind::NestedPair;
            let (mut tx, mut ty, mut xn, mut yn) = (0.0_f64, 0.0_f64, 1.0, 1.0);
            let terms = (1u64..).map(move |n| {
                let nf = n as f64;
                if n > 1 {
                    let prev = 1.0 / (nf - 1.0);
                    tx = x * (tx + prev);
                    ty = y * (ty + prev);
                }
                xn *= x;
                yn *= y;
                let num = if two { yn * tx + xn * ty } else { xn * tx };
                num / (nf + a).powi(s)
            });
            let ratio = if two { x.abs().max(y.abs()) } else { x.abs() };
            power_series_sum(terms, ratio, config)
        }
        GfKind::MomentIdent => quadrature(Integrand::LemmaMoment { m: p.m, n: p.n, a, b: p.b, x }, 1e-13),
        GfKind::MomentIdentZero => quadrature(Integrand::LemmaMomentZero { m: p.m, n: p.n, b: p.b, x }, 1e-13),
    }
}
