//! The built-in verification suite.

use super::catalog::{Catalog, Params};
use super::verify::{IdentityCase, Variant};

/// Real shifts of the default grid.
pub const GRID_A: [f64; 5] = [0.5, 1.0, 1.5, 2.5, 10.0 / 3.0];
pub const GRID_K: [u32; 4] = [1, 2, 3, 5];
pub const GRID_M: [u32; 3] = [1, 2, 3];

/// Witness points of the three refuted printed forms.
pub const PRINTED_WITNESSES: &[(&str, &[(&str, f64)])] = &[
    ("eq2.9", &[("a", 1.0), ("b", 2.0)]),
    ("eq2.9", &[("a", 0.5), ("b", 1.5)]),
    ("eq2.9", &[("a", 2.5), ("b", 4.5)]),
    ("eq3.15", &[("b", 0.0), ("k", 2.0)]),
    ("eq3.15", &[("b", 0.5), ("k", 3.0)]),
    ("eq3.15", &[("b", 1.0), ("k", 2.0)]),
    ("eq4.2", &[("a", 1.0), ("b", 2.0)]),
    ("eq4.2", &[("a", 0.5), ("b", 2.5)]),
    ("eq4.2", &[("a", 2.5), ("b", 3.0)]),
];

struct Builder {
    tol: f64,
    cases: Vec<IdentityCase>,
}

impl Builder {
    fn push(&mut self, id: &str, p: &[(&str, f64)]) {
        self.push_variant(id, p, Variant::Corrected);
    }

    /// Adds the case unless its closed form rejects the parameters.
    fn push_variant(&mut self, id: &str, p: &[(&str, f64)], variant: Variant) {
        let params = p.iter().fold(Params::new(), |acc, (k, v)| acc.with(k, *v));
        if Catalog::closed_form(id, &params, variant).is_ok() {
            self.cases.push(IdentityCase::new(id, params, self.tol, variant));
        }
    }
}

fn m_at(i: usize) -> f64 {
    f64::from(GRID_M[i % GRID_M.len()])
}

/// The default suite at tolerance `tol`: corrected cases over the default
/// grid plus the printed-form witnesses.
pub fn builtin_suite(tol: f64) -> Vec<IdentityCase> {
    let mut b = Builder { tol, cases: Vec::new() };
    for (i, &a) in GRID_A.iter().enumerate() {
        let s = 2.0 + (i % 2) as f64;
        b.push("eq1.27", &[("a", a), ("s", s)]);
        b.push("eq1.28", &[("a", a), ("s", s - 1.0)]);
        b.push("eq2.34", &[("a", a)]);
        for db in [0.5, 2.0] {
            b.push("eq2.9", &[("a", a), ("b", a + db)]);
            b.push("eq4.2", &[("a", a), ("b", a + db)]);
        }
        for (j, k) in [1.0, 2.0, 5.0].into_iter().enumerate() {
            b.push("eq2.13", &[("a", a), ("k", k), ("m", m_at(i + j))]);
        }
        let k = if i % 2 == 0 { 1.0 } else { 3.0 };
        for id in ["eq2.20", "eq2.21", "eq2.22", "eq2.27", "eq2.28", "eq2.37"] {
            b.push(id, &[("a", a), ("k", k)]);
        }
        let k = 1.0 + (i % 2) as f64;
        b.push("eq2.29", &[("a", a), ("k", k)]);
        b.push("eq2.36", &[("a", a), ("k", k)]);
        for p in [1.0, 2.0] {
            let bb = if p == 1.0 { 0.5 } else { 2.0 };
            let k = 2.0 + (i % 2) as f64;
            b.push("eq3.9", &[("a", a), ("b", bb), ("k", k), ("p", p)]);
            b.push("eq4.5", &[("a", a), ("b", bb), ("k", k), ("p", p)]);
        }
        for (j, k) in [1.0, 2.0].into_iter().enumerate() {
            b.push("eq3.13", &[("a", a), ("k", k), ("m", m_at(i + j))]);
            b.push("eq3.16", &[("a", a), ("k", k + (i % 2) as f64)]);
        }
    }
    for a in [0.5, 1.0, 2.5] {
        for m in 1..=4 {
            b.push("eq2.14", &[("a", a), ("m", f64::from(m))]);
        }
        for m in GRID_M {
            b.push("eq2.2", &[("a", a), ("m", f64::from(m))]);
        }
    }
    for k in GRID_K {
        for m in GRID_M {
            b.push("eq2.18", &[("k", f64::from(k)), ("m", f64::from(m))]);
            b.push("eq4.10", &[("k", f64::from(k)), ("m", f64::from(m))]);
        }
    }
    for (r, k) in [(1.0, 2.0), (2.0, 1.0), (1.0, 3.0), (2.0, 5.0)] {
        for m in [1.0, 2.0] {
            b.push("eq2.19", &[("r", r), ("k", k), ("m", m)]);
            b.push("eq4.11", &[("r", r), ("k", k), ("m", m)]);
        }
    }
    for (i, bb) in [0.0, 0.5, 1.0, 2.5].into_iter().enumerate() {
        for (j, k) in [2.0, 3.0, 5.0].into_iter().enumerate() {
            b.push("eq3.11", &[("b", bb), ("k", k), ("m", m_at(i + j))]);
            b.push("eq3.15", &[("b", bb), ("k", k)]);
        }
    }
    for k in [2.0, 3.0, 5.0] {
        b.push("classical-w110", &[("k", k)]);
    }
    for k in [1.0, 2.0, 3.0, 5.0] {
        b.push("classical-w111", &[("k", k)]);
    }
    for (i, a) in [0.0, 0.5, 1.0, 2.5].into_iter().enumerate() {
        for s in [2.0, 3.0] {
            b.push("eq4.3", &[("a", a), ("s", s)]);
        }
        for (j, k) in [1.0, 2.0, 3.0].into_iter().enumerate() {
            b.push("eq4.7", &[("a", i as f64), ("k", k), ("m", m_at(i + j))]);
        }
    }
    for (i, a) in [0.0, 1.0, 2.0].into_iter().enumerate() {
        for (j, k) in [2.0, 3.0, 5.0].into_iter().enumerate() {
            b.push("eq4.12", &[("a", a), ("k", k), ("m", m_at(i + j))]);
        }
        for (j, k) in [1.0, 2.0, 3.0].into_iter().enumerate() {
            b.push("eq4.13", &[("a", a + 1.0), ("k", k), ("m", m_at(i + j))]);
        }
    }
    for (id, p) in PRINTED_WITNESSES {
        b.push_variant(id, p, Variant::AsPrinted);
    }
    b.cases
}

/// Generating-function and lemma identities at fixed draws.
pub fn gf_suite(tol: f64) -> Vec<IdentityCase> {
    let mut b = Builder { tol, cases: Vec::new() };
    b.push("eq1.19", &[("x", 0.3), ("a", 0.5), ("b", 2.0), ("m", 2.0), ("n", 1.0)]);
    b.push("eq1.19", &[("x", 0.8), ("a", 1.5), ("b", 0.5), ("m", 3.0), ("n", 3.0)]);
    b.push("eq1.23", &[("x", 0.8), ("b", 0.5), ("m", 3.0), ("n", 4.0)]);
    b.push("eq1.23", &[("x", 0.4), ("b", -0.5), ("m", 2.0), ("n", 2.0)]);
    b.push("eq1.24", &[("x", 0.7), ("y", -0.4), ("a", 0.3), ("s", 3.0)]);
    b.push("eq1.24", &[("x", 0.2), ("y", 0.6), ("a", 2.0), ("s", 1.0)]);
    b.push("eq1.25", &[("x", 0.7), ("a", 0.3), ("s", 3.0)]);
    b.push("eq1.25", &[("x", -0.5), ("a", 1.0), ("s", 2.0)]);
    b.push("eq1.29", &[("x", 0.5)]);
    b.push("eq1.29", &[("x", -0.7)]);
    b.push("eq1.30", &[("x", -0.6), ("m", 3.0)]);
    b.push("eq1.30", &[("x", 0.4), ("m", 2.0)]);
    b.push("eq1.31", &[("x", 0.5), ("y", 0.35), ("m", 2.0), ("p", 3.0)]);
    b.push("eq1.31", &[("x", -0.3), ("y", 0.8), ("m", 1.0), ("p", 2.0)]);
    b.push("eq2.25", &[("x", -0.5)]);
    b.push("eq2.25", &[("x", 0.6)]);
    b.cases
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_shape() {
        let s = builtin_suite(1e-7);
        assert!((180..=300).contains(&s.len()), "{}", s.len());
        let printed = s.iter().filter(|c| c.variant == Variant::AsPrinted).count();
        assert_eq!(printed, PRINTED_WITNESSES.len());
        assert!(s.iter().all(|c| Catalog::get(&c.identity_id).is_some()));
        assert_eq!(gf_suite(1e-9).len(), 16);
    }
}
