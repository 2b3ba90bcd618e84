//! Admissible rules checked through concrete witness proofs, and the
//! shipped golden proofs.

use serde::Serialize;
use thiserror::Error;

use super::{check_proof, match_into, parse_proof, CheckOptions, LineRef, Proof, ProofBuilder, ProofError, Substitution};
use crate::syntax::{f, Formula};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DerivedRuleError {
    #[error("witness is written in {found}, expected {expected}")]
    SystemMismatch { expected: String, found: String },
    #[error("witness has {found} premises, the rule has {expected}")]
    PremiseCount { expected: usize, found: usize },
    #[error("premise {index} does not instantiate {template}")]
    PremiseMismatch { index: usize, template: String },
    #[error(transparent)]
    Proof(#[from] ProofError),
    #[error("conclusion {found} does not instantiate {template}")]
    ConclusionMismatch { template: String, found: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedRuleReport {
    pub system: String,
    pub lines: usize,
    /// How the witness instantiates the rule's metavariables.
    pub sigma: Substitution,
}

/// Accepts when the witness is a valid proof whose premises and last line
/// instantiate the templates under one substitution.
pub fn check_derived_rule(
    system: &str,
    premise_templates: &[Formula],
    conclusion_template: &Formula,
    witness: &Proof,
    opts: CheckOptions,
) -> Result<DerivedRuleReport, DerivedRuleError> {
    if witness.system != system {
        return Err(DerivedRuleError::SystemMismatch {
            expected: system.to_string(),
            found: witness.system.clone(),
        });
    }
    if witness.premises.len() != premise_templates.len() {
        return Err(DerivedRuleError::PremiseCount {
            expected: premise_templates.len(),
            found: witness.premises.len(),
        });
    }
    let mut sigma = Substitution::new();
    for (index, (t, p)) in premise_templates.iter().zip(&witness.premises).enumerate() {
        if !match_into(t, p, &mut sigma) {
            return Err(DerivedRuleError::PremiseMismatch {
                index: index + 1,
                template: t.to_string(),
            });
        }
    }
    let report = check_proof(witness, opts)?;
    if !match_into(conclusion_template, &report.conclusion, &mut sigma) {
        return Err(DerivedRuleError::ConclusionMismatch {
            template: conclusion_template.to_string(),
            found: report.conclusion.to_string(),
        });
    }
    Ok(DerivedRuleReport {
        system: system.to_string(),
        lines: report.lines,
        sigma,
    })
}

fn chis(n: usize) -> Vec<Formula> {
    (1..=n).map(|i| Formula::atom(format!("chi{i}"))).collect()
}

fn phi() -> Formula {
    Formula::atom("phi")
}

fn psi() -> Formula {
    Formula::atom("psi")
}

/// `chi1 & ... & chin -> phi`; the empty conjunction is `T`.
pub fn conj_rule_premise(n: usize) -> Formula {
    Formula::imp(Formula::conj(chis(n)), phi())
}

fn w_conclusion(chis: &[Formula], phi: &Formula, psi: &Formula) -> Formula {
    let mut parts: Vec<Formula> = chis
        .iter()
        .map(|c| Formula::w(Formula::and(c.clone(), psi.clone())))
        .collect();
    parts.push(Formula::not(phi.clone()));
    Formula::imp(Formula::conj(parts), Formula::w(phi.clone()))
}

fn ri_conclusion(chis: &[Formula], phi: &Formula, psi: &Formula) -> Formula {
    let goal = Formula::or(Formula::ir(phi.clone()), phi.clone());
    if chis.is_empty() {
        return goal;
    }
    let parts = chis.iter().flat_map(|c| {
        let a = Formula::and(c.clone(), psi.clone());
        [Formula::ir(a.clone()), Formula::not(a)]
    });
    Formula::imp(Formula::conj(parts), goal)
}

/// `W(chi1 & psi) & ... & W(chin & psi) & ~phi -> W phi`.
pub fn w_conj_rule_conclusion(n: usize) -> Formula {
    w_conclusion(&chis(n), &phi(), &psi())
}

/// `IR(chi1 & psi) & ~(chi1 & psi) & ... -> IR phi | phi`; for `n = 0`
/// just `IR phi | phi`.
pub fn ri_conj_rule_conclusion(n: usize) -> Formula {
    ri_conclusion(&chis(n), &phi(), &psi())
}

#[derive(Clone, Copy)]
enum Flavor {
    W,
    Ri,
}

fn derive(b: &mut ProofBuilder, flavor: Flavor, chis: &[Formula], phi: &Formula, psi: &Formula, prem: LineRef) -> LineRef {
    let target = match flavor {
        Flavor::W => w_conclusion(chis, phi, psi),
        Flavor::Ri => ri_conclusion(chis, phi, psi),
    };
    match chis {
        [] => b.by_taut(&[prem], target),
        [chi] => {
            let step = |b: &mut ProofBuilder, r| match flavor {
                Flavor::W => b.r1(r),
                Flavor::Ri => b.rir(r),
            };
            let direct = step(b, prem);
            let weaken = b.taut(Formula::imp(Formula::and(chi.clone(), psi.clone()), chi.clone()));
            let conjunct = step(b, weaken);
            b.by_taut(&[prem, direct, conjunct], target)
        }
        [c1, c2, rest @ ..] => {
            // merging the first two conjuncts leaves the premise unchanged
            let mut merged = vec![Formula::and(c1.clone(), c2.clone())];
            merged.extend_from_slice(rest);
            debug_assert_eq!(Formula::conj(merged.clone()), Formula::conj(chis.to_vec()));
            let ih = derive(b, flavor, &merged, phi, psi, prem);
            let a = Formula::and(c1.clone(), psi.clone());
            let bb = Formula::and(c2.clone(), psi.clone());
            let combine = match flavor {
                Flavor::W => b.axiom("A2", &[("phi", a.clone()), ("psi", bb.clone())]),
                Flavor::Ri => b.axiom("RI-Con", &[("phi", a.clone()), ("psi", bb.clone())]),
            };
            let regroup = b.taut(Formula::iff(Formula::and(a, bb), Formula::and(merged[0].clone(), psi.clone())));
            let replaced = match flavor {
                Flavor::W => b.rew_w(regroup),
                Flavor::Ri => b.rew_ir(regroup),
            };
            b.by_taut(&[ih, combine, replaced], target)
        }
    }
}

fn witness(system: &str, flavor: Flavor, n: usize) -> Proof {
    let chis: Vec<Formula> = (1..=n).map(|i| Formula::atom(format!("c{i}"))).collect();
    let (phi, psi) = (Formula::atom("p"), Formula::atom("q"));
    let mut b = ProofBuilder::new(system);
    let prem = b.premise(Formula::imp(Formula::conj(chis.clone()), phi.clone()));
    derive(&mut b, flavor, &chis, &phi, &psi, prem);
    b.finish()
}

/// A proof in KW of the `n`-conjunct rule for `W`, with `chi_i := c_i`,
/// `phi := p`, `psi := q`.
pub fn w_conj_rule_witness(n: usize) -> Proof {
    witness("KW", Flavor::W, n)
}

/// The same for `IR` in KRI.
pub fn ri_conj_rule_witness(n: usize) -> Proof {
    witness("KRI", Flavor::Ri, n)
}

/// A proof script shipped with the crate, with the rule it establishes.
#[derive(Debug, Clone)]
pub struct GoldenProof {
    pub name: String,
    pub text: &'static str,
    pub system: &'static str,
    /// Empty for theorems.
    pub premise_templates: Vec<Formula>,
    pub conclusion_template: Formula,
}

impl GoldenProof {
    pub fn proof(&self) -> Proof {
        parse_proof(self.text).unwrap_or_else(|e| panic!("golden proof {}: {e}", self.name))
    }

    pub fn check(&self, opts: CheckOptions) -> Result<DerivedRuleReport, DerivedRuleError> {
        check_derived_rule(
            self.system,
            &self.premise_templates,
            &self.conclusion_template,
            &self.proof(),
            opts,
        )
    }
}

macro_rules! golden {
    ($file:literal) => {
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/golden/", $file))
    };
}

const W_CONJ: [&str; 4] = [
    golden!("w_conj_rule_n0.proof"),
    golden!("w_conj_rule_n1.proof"),
    golden!("w_conj_rule_n2.proof"),
    golden!("w_conj_rule_n3.proof"),
];

const RI_CONJ: [&str; 4] = [
    golden!("ri_conj_rule_n0.proof"),
    golden!("ri_conj_rule_n1.proof"),
    golden!("ri_conj_rule_n2.proof"),
    golden!("ri_conj_rule_n3.proof"),
];

pub fn golden_proofs() -> Vec<GoldenProof> {
    let mut out = vec![
        GoldenProof {
            name: "aq_in_k5w".into(),
            text: golden!("aq_in_k5w.proof"),
            system: "K5W",
            premise_templates: vec![],
            conclusion_template: f("W phi -> W(~W psi & phi)"),
        },
        GoldenProof {
            name: "r1_with_conjunct".into(),
            text: golden!("r1_with_conjunct.proof"),
            system: "KW",
            premise_templates: vec![f("phi -> psi")],
            conclusion_template: f("W(phi & chi) & ~psi -> W psi"),
        },
        GoldenProof {
            name: "rir_with_conjunct".into(),
            text: golden!("rir_with_conjunct.proof"),
            system: "KRI",
            premise_templates: vec![f("phi -> psi")],
            conclusion_template: f("IR(phi & chi) & ~(phi & chi) -> IR psi | psi"),
        },
    ];
    for (n, text) in W_CONJ.iter().enumerate() {
        out.push(GoldenProof {
            name: format!("w_conj_rule_n{n}"),
            text,
            system: "KW",
            premise_templates: vec![conj_rule_premise(n)],
            conclusion_template: w_conj_rule_conclusion(n),
        });
    }
    for (n, text) in RI_CONJ.iter().enumerate() {
        out.push(GoldenProof {
            name: format!("ri_conj_rule_n{n}"),
            text,
            system: "KRI",
            premise_templates: vec![conj_rule_premise(n)],
            conclusion_template: ri_conj_rule_conclusion(n),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::print_proof;

    #[test]
    fn templates() {
        assert_eq!(conj_rule_premise(0), f("T -> phi"));
        assert_eq!(conj_rule_premise(3), f("chi1 & chi2 & chi3 -> phi"));
        assert_eq!(w_conj_rule_conclusion(0), f("~phi -> W phi"));
        assert_eq!(
            w_conj_rule_conclusion(2),
            f("W(chi1 & psi) & W(chi2 & psi) & ~phi -> W phi")
        );
        assert_eq!(ri_conj_rule_conclusion(0), f("IR phi | phi"));
        assert_eq!(
            ri_conj_rule_conclusion(1),
            f("IR(chi1 & psi) & ~(chi1 & psi) -> IR phi | phi")
        );
    }

    #[test]
    fn generated_witnesses_check() {
        for n in 0..=3 {
            for (sys, proof, concl) in [
                ("KW", w_conj_rule_witness(n), w_conj_rule_conclusion(n)),
                ("KRI", ri_conj_rule_witness(n), ri_conj_rule_conclusion(n)),
            ] {
                let r = check_derived_rule(sys, &[conj_rule_premise(n)], &concl, &proof, CheckOptions::default())
                    .unwrap_or_else(|e| panic!("{sys} n={n}: {e}"));
                assert_eq!(r.sigma.get("phi"), Some(&f("p")));
            }
        }
    }

    #[test]
    fn golden_files_match_the_generator() {
        let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/golden");
        let bless = std::env::var_os("DOXA_BLESS").is_some();
        for n in 0..=3 {
            for (name, text, proof) in [
                (format!("w_conj_rule_n{n}"), W_CONJ[n], w_conj_rule_witness(n)),
                (format!("ri_conj_rule_n{n}"), RI_CONJ[n], ri_conj_rule_witness(n)),
            ] {
                let rendered = print_proof(&proof);
                if bless {
                    std::fs::write(format!("{dir}/{name}.proof"), &rendered).unwrap();
                } else {
                    assert_eq!(text, rendered, "{name} is stale; rerun with DOXA_BLESS=1");
                }
            }
        }
    }

    #[test]
    fn golden_proofs_are_accepted() {
        for g in golden_proofs() {
            g.check(CheckOptions::default())
                .unwrap_or_else(|e| panic!("{}: {e}", g.name));
        }
    }

    #[test]
    fn wrong_templates_are_rejected() {
        let p = w_conj_rule_witness(2);
        let e = check_derived_rule("KW", &[conj_rule_premise(3)], &w_conj_rule_conclusion(2), &p, CheckOptions::default());
        assert!(matches!(e, Err(DerivedRuleError::PremiseMismatch { index: 1, .. })));
        let e = check_derived_rule("KW", &[conj_rule_premise(2)], &w_conj_rule_conclusion(1), &p, CheckOptions::default());
        assert!(matches!(e, Err(DerivedRuleError::ConclusionMismatch { .. })));
        let e = check_derived_rule("KRI", &[conj_rule_premise(2)], &w_conj_rule_conclusion(2), &p, CheckOptions::default());
        assert!(matches!(e, Err(DerivedRuleError::SystemMismatch { .. })));
    }
}
