mod common;

use common::{atoms, models};
use doxa_core::oracle::{enumerate_frames, models_up_to, Corpus};
use doxa_core::semantics::Model;
use doxa_core::transform::{
    almost_def_chain, check_chain, cone_augment, euclidean_closure, generated_submodel, reachable, ri_to_w,
    verify_preservation, w_to_ri, ChainAxiom,
};
use doxa_core::{FrameClass, FrameProperty as P, Language};

fn fb_corpus() -> Corpus {
    Corpus::for_language(Language::FalseBelief, &atoms(&["p"]), 2, 7)
}

fn frame_models(n: usize) -> Vec<Model> {
    models_up_to(n, &FrameClass::all(), &[]).collect()
}

#[test]
fn closure_is_euclidean_and_stable() {
    for m in frame_models(4) {
        let once = euclidean_closure(&m);
        assert!(once.frame().has(P::Euclidean), "{:?}", m.frame().edges());
        assert_eq!(euclidean_closure(&once), once);
        // nothing but pairs between states with incoming edges is added
        let h = m.frame().targets();
        for i in 0..m.frame().len() {
            let added = once.frame().succ_mask(i) & !m.frame().succ_mask(i);
            assert!(added == 0 || (h >> i & 1 == 1 && added & !h == 0));
        }
    }
}

#[test]
fn closure_preserves_truth_on_secondarily_reflexive_models() {
    let corpus = fb_corpus();
    let class = FrameClass::of([P::SecondarilyReflexive]);
    let mut checked = 0;
    for m in models_up_to(4, &class, &atoms(&["p"])) {
        let r = verify_preservation(&m, &euclidean_closure(&m), None, &corpus).unwrap();
        assert!(r.preserved(), "{r}");
        checked += 1;
    }
    assert!(checked > 1000);
}

#[test]
fn generated_submodels_keep_frame_properties() {
    let kept = [
        P::Reflexive,
        P::Serial,
        P::Transitive,
        P::Euclidean,
        P::Symmetric,
        P::SecondarilyReflexive,
    ];
    for m in frame_models(4) {
        for s in m.frame().names().to_vec() {
            let g = generated_submodel(&m, &s).unwrap();
            for p in kept {
                if m.frame().has(p) {
                    assert!(g.frame().has(p), "{p} lost at {s} in {:?}", m.frame().edges());
                }
            }
        }
    }
}

#[test]
fn generated_submodels_preserve_truth() {
    let corpus = fb_corpus();
    for m in models(3, &atoms(&["p"])) {
        let root = m.frame().name(0).to_string();
        let g = generated_submodel(&m, &root).unwrap();
        assert!(verify_preservation(&m, &g, None, &corpus).unwrap().preserved());
    }
}

#[test]
fn cone_augmentation_gives_transitive_euclidean_equivalents() {
    let corpus = fb_corpus();
    let class = FrameClass::of([P::Transitive, P::SecondarilyReflexive]);
    let mut checked = 0;
    for m in models_up_to(4, &class, &atoms(&["p"])) {
        let fr = m.frame();
        for s in 0..fr.len() {
            if reachable(fr, s) != fr.all() {
                continue;
            }
            let name = fr.name(s).to_string();
            let n = cone_augment(&m, &name).unwrap();
            assert!(n.frame().has(P::Transitive) && n.frame().has(P::Euclidean), "{:?}", fr.edges());
            assert!(verify_preservation(&m, &n, None, &corpus).unwrap().preserved());
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn closure_can_break_transitivity() {
    // evidence for why the cone construction is needed; says nothing about
    // whether some other transitive Euclidean equivalent exists
    let class = FrameClass::of([P::Transitive, P::SecondarilyReflexive]);
    let found = enumerate_frames(4)
        .filter(|fr| class.contains(fr))
        .map(|fr| euclidean_closure(&Model::new(fr, Default::default()).unwrap()))
        .find(|m| !m.frame().has(P::Transitive));
    let m = found.expect("a transitive, secondarily reflexive frame whose closure is not transitive");
    assert!(m.frame().len() >= 3);
}

#[test]
fn translations_preserve_truth() {
    let fb = Corpus::for_language(Language::FalseBelief, &atoms(&["p"]), 2, 6);
    let ri = Corpus::for_language(Language::RadicalIgnorance, &atoms(&["p"]), 2, 6);
    for m in models(3, &atoms(&["p"])) {
        for g in fb.formulas() {
            let x = m.extension(g);
            let t = w_to_ri(g).unwrap();
            assert_eq!(m.extension(&t), x, "{g}");
            assert_eq!(m.extension(&ri_to_w(&t).unwrap()), x, "round trip of {g}");
        }
        for g in ri.formulas() {
            assert_eq!(m.extension(&ri_to_w(g).unwrap()), m.extension(g), "{g}");
        }
    }
}

#[test]
fn chains_hold_on_three_states() {
    for ax in [ChainAxiom::Four, ChainAxiom::Five, ChainAxiom::B] {
        let r = check_chain(&almost_def_chain(ax), 3).unwrap();
        assert!(r.all_pass(), "{}", r.name);
        assert!(r.steps.iter().all(|s| s.report.max_states == 3));
    }
}
