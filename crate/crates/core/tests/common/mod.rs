#![allow(dead_code)]

use doxa_core::semantics::Model;
use doxa_core::{Formula, FrameClass};
use proptest::prelude::*;

pub fn atoms(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Random formulas over `atoms` using every connective and the listed
/// modal constructors.
pub fn arb_formula(atoms: &'static [&'static str], modal: &'static [fn(Formula) -> Formula]) -> BoxedStrategy<Formula> {
    let leaf = prop_oneof![
        8 => proptest::sample::select(atoms).prop_map(Formula::atom),
        1 => Just(Formula::Top),
        1 => Just(Formula::Bot),
    ];
    leaf.prop_recursive(4, 24, 2, move |inner| {
        let unary = proptest::sample::select(modal.to_vec());
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (unary, inner.clone()).prop_map(|(m, a)| m(a)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::imp(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::iff(a, b)),
        ]
    })
    .boxed()
}

pub const ALL_MODAL: &[fn(Formula) -> Formula] = &[Formula::w, Formula::bel, Formula::ir, Formula::fi];
pub const W_ONLY: &[fn(Formula) -> Formula] = &[Formula::w];
pub const IR_ONLY: &[fn(Formula) -> Formula] = &[Formula::ir];

/// Every model with at most `n` states over `atoms`.
pub fn models(n: usize, atoms: &[String]) -> Vec<Model> {
    let class = FrameClass::all();
    doxa_core::oracle::models_up_to(n, &class, atoms).collect()
}
