//! Shared fixtures for the criterion benches.

use eulersum::oracle::{builtin_suite, IdentityCase, Params, Variant};
use std::collections::BTreeSet;

/// One corrected case per identity from the built-in suite.
pub fn representative_cases() -> Vec<IdentityCase> {
    let mut seen = BTreeSet::new();
    builtin_suite(1e-7)
        .into_iter()
        .filter(|c| c.variant == Variant::Corrected && seen.insert(c.identity_id.clone()))
        .collect()
}

pub fn params(pairs: &[(&str, f64)]) -> Params {
    pairs.iter().fold(Params::new(), |acc, (k, v)| acc.with(k, *v))
}
