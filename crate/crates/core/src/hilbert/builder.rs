//! Programmatic proof construction. The builder computes each line's
//! formula from its justification and panics on misuse; the result still
//! goes through `check_proof`.

use super::{r1_conclusion, rir_conclusion, schema, Justification, Proof, ProofLine, Substitution};
use crate::syntax::Formula;

/// Label of a line produced by a `ProofBuilder`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LineRef(pub usize);

#[derive(Debug, Clone)]
pub struct ProofBuilder {
    proof: Proof,
}

impl ProofBuilder {
    pub fn new(system: &str) -> ProofBuilder {
        ProofBuilder {
            proof: Proof {
                system: system.to_string(),
                premises: Vec::new(),
                lines: Vec::new(),
                conclusion: None,
            },
        }
    }

    pub fn formula(&self, r: LineRef) -> &Formula {
        &self.proof.lines[r.0 - 1].formula
    }

    fn push(&mut self, formula: Formula, justification: Justification) -> LineRef {
        let index = self.proof.lines.len() + 1;
        self.proof.lines.push(ProofLine {
            index,
            formula,
            justification,
        });
        LineRef(index)
    }

    pub fn premise(&mut self, g: Formula) -> LineRef {
        if !self.proof.premises.contains(&g) {
            self.proof.premises.push(g.clone());
        }
        self.push(g, Justification::Premise)
    }

    pub fn axiom(&mut self, name: &str, sigma: &[(&str, Formula)]) -> LineRef {
        let s = schema(name).unwrap_or_else(|| panic!("unknown schema {name}"));
        let sigma: Substitution = sigma.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
        let g = s.instantiate(&sigma);
        self.push(
            g,
            Justification::Axiom {
                schema: name.to_string(),
                sigma: Some(sigma),
            },
        )
    }

    pub fn taut(&mut self, g: Formula) -> LineRef {
        self.push(g, Justification::Tautology)
    }

    /// From `a` and `a -> b`, in that order.
    pub fn mp(&mut self, a: LineRef, imp: LineRef) -> LineRef {
        let Formula::Imp(x, y) = self.formula(imp).clone() else {
            panic!("line {} is not an implication", imp.0)
        };
        assert_eq!(*x, *self.formula(a), "mp antecedent mismatch");
        self.push(*y, Justification::Mp(a.0, imp.0))
    }

    fn split_imp(&self, r: LineRef) -> (Formula, Formula) {
        match self.formula(r) {
            Formula::Imp(a, b) => ((**a).clone(), (**b).clone()),
            g => panic!("{g} is not an implication"),
        }
    }

    pub fn r1(&mut self, r: LineRef) -> LineRef {
        let (a, b) = self.split_imp(r);
        self.push(r1_conclusion(&a, &b), Justification::R1(r.0))
    }

    pub fn rir(&mut self, r: LineRef) -> LineRef {
        let (a, b) = self.split_imp(r);
        self.push(rir_conclusion(&a, &b), Justification::RiR(r.0))
    }

    /// Replacement of equivalents under `W`.
    pub fn rew_w(&mut self, r: LineRef) -> LineRef {
        self.rew(r, Formula::w)
    }

    /// Replacement of equivalents under `IR`.
    pub fn rew_ir(&mut self, r: LineRef) -> LineRef {
        self.rew(r, Formula::ir)
    }

    fn rew(&mut self, r: LineRef, op: fn(Formula) -> Formula) -> LineRef {
        let Formula::Iff(a, b) = self.formula(r).clone() else {
            panic!("line {} is not a biconditional", r.0)
        };
        self.push(Formula::iff(op(*a), op(*b)), Justification::Rew(r.0))
    }

    /// Derives `target` from `lines` by one tautology
    /// `L1 -> (L2 -> ... -> target)` and a modus ponens per line.
    pub fn by_taut(&mut self, lines: &[LineRef], target: Formula) -> LineRef {
        let chain = lines
            .iter()
            .rev()
            .fold(target, |acc, r| Formula::imp(self.formula(*r).clone(), acc));
        let mut cur = self.taut(chain);
        for r in lines {
            cur = self.mp(*r, cur);
        }
        cur
    }

    pub fn finish(mut self) -> Proof {
        self.proof.conclusion = self.proof.last().cloned();
        self.proof
    }
}
