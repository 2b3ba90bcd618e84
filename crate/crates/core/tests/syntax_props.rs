mod common;

use std::collections::HashMap;

use common::{arb_formula, atoms, ALL_MODAL};
use doxa_core::oracle::Corpus;
use doxa_core::syntax::{f, subst_map};
use doxa_core::{parse, Formula, Language};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn print_then_parse_is_identity(g in arb_formula(&["p", "q", "r"], ALL_MODAL)) {
        prop_assert_eq!(parse(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn sequential_substitution_of_disjoint_atoms(
        g in arb_formula(&["p", "q", "r"], ALL_MODAL),
        a in arb_formula(&["r", "s"], ALL_MODAL),
        b in arb_formula(&["r", "s"], ALL_MODAL),
    ) {
        let one = g.substitute(&subst_map([("p", a.clone())])).substitute(&subst_map([("q", b.clone())]));
        let both = g.substitute(&subst_map([("p", a), ("q", b)]));
        prop_assert_eq!(one, both);
    }

    #[test]
    fn measures_agree(g in arb_formula(&["p", "q"], ALL_MODAL)) {
        let m = g.measures();
        prop_assert_eq!(m.size, g.size());
        prop_assert_eq!(m.modal_depth, g.modal_depth());
        prop_assert_eq!(m.atoms, g.atoms());
    }
}

#[test]
fn printing_is_injective_on_the_corpus() {
    let corpus = Corpus::for_language(Language::Full, &atoms(&["p", "q"]), 2, 6);
    let mut seen: HashMap<String, &Formula> = HashMap::new();
    for g in corpus.formulas() {
        if let Some(prev) = seen.insert(g.to_string(), g) {
            assert_eq!(prev, g, "two formulas print as {g}");
        }
    }
    assert_eq!(seen.len(), corpus.len());
}

#[test]
fn printed_forms_for_paper_style_input() {
    for (input, printed) in [
        ("W q -> (B p <-> W(p & q))", "W q -> (B p <-> W(p & q))"),
        ("((W p) & (~q))", "W p & ~q"),
        ("IR(p & q) | ~IR p", "IR(p & q) | ~IR p"),
        ("p -> q -> r", "p -> q -> r"),
        ("(p -> q) -> r", "(p -> q) -> r"),
        ("~~W ~p", "~~W ~p"),
    ] {
        assert_eq!(f(input).to_string(), printed);
    }
}
