//! Exhaustive formula enumeration for agreement, definability and
//! preservation experiments.

use std::collections::BTreeMap;

use crate::semantics::{Frame, Model, StateSet};
use crate::syntax::{Formula, Language, ModalOp};

use super::program::{Node, Program};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusOp {
    Not,
    And,
    Or,
    Imp,
    Iff,
    Modal(ModalOp),
}

impl CorpusOp {
    fn arity(self) -> usize {
        match self {
            CorpusOp::Not | CorpusOp::Modal(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub formula: Formula,
    pub size: usize,
    pub depth: usize,
}

/// All formulas over `atoms` built from `ops`, bounded by modal depth and
/// size. Ordered by size, then by printed form, so the order is stable
/// across runs.
#[derive(Debug, Clone)]
pub struct Corpus {
    atoms: Vec<String>,
    entries: Vec<CorpusEntry>,
    program: Program,
}

impl Corpus {
    pub fn new(atoms: &[String], ops: &[CorpusOp], max_depth: usize, max_size: usize) -> Corpus {
        let mut entries: Vec<CorpusEntry> = Vec::new();
        let mut program = Program::default();
        // by_size[s] lists entry indices of size s
        let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); max_size + 1];
        let add = |entries: &mut Vec<CorpusEntry>,
                       by_size: &mut Vec<Vec<usize>>,
                       program: &mut Program,
                       e: CorpusEntry,
                       node: Node| {
            let idx = program.push(node);
            debug_assert_eq!(idx, entries.len());
            by_size[e.size].push(idx);
            entries.push(e);
        };
        if max_size >= 1 {
            for (i, a) in atoms.iter().enumerate() {
                let e = CorpusEntry {
                    formula: Formula::atom(a.clone()),
                    size: 1,
                    depth: 0,
                };
                add(&mut entries, &mut by_size, &mut program, e, Node::Atom(i));
            }
        }
        for size in 2..=max_size {
            for &op in ops {
                if op.arity() == 1 {
                    for k in 0..by_size[size - 1].len() {
                        let child = by_size[size - 1][k];
                        let c = &entries[child];
                        let (formula, depth, node) = match op {
                            CorpusOp::Not => (Formula::not(c.formula.clone()), c.depth, Node::Not(child)),
                            CorpusOp::Modal(m) => {
                                (m.apply(c.formula.clone()), c.depth + 1, Node::Modal(m, child))
                            }
                            _ => unreachable!(),
                        };
                        if depth <= max_depth {
                            let e = CorpusEntry { formula, size, depth };
                            add(&mut entries, &mut by_size, &mut program, e, node);
                        }
                    }
                    continue;
                }
                for left in 1..size - 1 {
                    let right = size - 1 - left;
                    for a in 0..by_size[left].len() {
                        for b in 0..by_size[right].len() {
                            let (i, j) = (by_size[left][a], by_size[right][b]);
                            let (fa, fb) = (entries[i].formula.clone(), entries[j].formula.clone());
                            let (formula, node) = match op {
                                CorpusOp::And => (Formula::and(fa, fb), Node::And(i, j)),
                                CorpusOp::Or => (Formula::or(fa, fb), Node::Or(i, j)),
                                CorpusOp::Imp => (Formula::imp(fa, fb), Node::Imp(i, j)),
                                CorpusOp::Iff => (Formula::iff(fa, fb), Node::Iff(i, j)),
                                _ => unreachable!(),
                            };
                            let depth = entries[i].depth.max(entries[j].depth);
                            let e = CorpusEntry { formula, size, depth };
                            add(&mut entries, &mut by_size, &mut program, e, node);
                        }
                    }
                }
            }
        }
        // within one size, order by printed form; children are strictly
        // smaller so the reordered program stays topologically sorted
        let mut order: Vec<usize> = (0..entries.len()).collect();
        let keys: Vec<String> = entries.iter().map(|e| e.formula.to_string()).collect();
        order.sort_by(|&a, &b| (entries[a].size, &keys[a]).cmp(&(entries[b].size, &keys[b])));
        let mut new_index = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let mut sorted = Program::default();
        for &old in &order {
            sorted.push(program.node(old).remap(|c| new_index[c]));
        }
        let mut slots: Vec<Option<CorpusEntry>> = entries.into_iter().map(Some).collect();
        let entries = order.iter().map(|&old| slots[old].take().expect("permutation")).collect();
        Corpus {
            atoms: atoms.to_vec(),
            entries,
            program: sorted,
        }
    }

    /// Negation, conjunction and the modalities of `lang`.
    pub fn for_language(lang: Language, atoms: &[String], max_depth: usize, max_size: usize) -> Corpus {
        let modal: &[ModalOp] = match lang {
            Language::FalseBelief => &[ModalOp::W],
            Language::RadicalIgnorance => &[ModalOp::Ir],
            Language::Mixed => &[ModalOp::W, ModalOp::Bel],
            Language::Full => &[ModalOp::W, ModalOp::Bel, ModalOp::Ir, ModalOp::Fi],
        };
        let mut ops = vec![CorpusOp::Not];
        ops.extend(modal.iter().map(|&m| CorpusOp::Modal(m)));
        ops.push(CorpusOp::And);
        Corpus::new(atoms, &ops, max_depth, max_size)
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[CorpusEntry] {
        &self.entries
    }

    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.entries.iter().map(|e| &e.formula)
    }

    /// Truth sets of every corpus formula, in corpus order.
    pub fn extensions(&self, frame: &Frame, atom_sets: &[StateSet], out: &mut Vec<StateSet>) {
        self.program.run(frame, atom_sets, out);
    }

    /// Atom extensions of `m`, in corpus atom order.
    pub fn atom_sets(&self, m: &Model) -> Vec<StateSet> {
        self.atoms.iter().map(|a| m.atom_set(a)).collect()
    }

    pub fn model_extensions(&self, m: &Model) -> Vec<StateSet> {
        let mut out = Vec::new();
        self.extensions(m.frame(), &self.atom_sets(m), &mut out);
        out
    }

    /// Counts of formulas by size, for reporting.
    pub fn size_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for e in &self.entries {
            *h.entry(e.size).or_default() += 1;
        }
        h
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::f;

    fn atoms(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn counts_follow_catalan_recurrence() {
        // one atom, ~, W, & and no depth bound: a(n) = 2a(n-1) + sum a(i)a(n-1-i)
        let c = Corpus::for_language(Language::FalseBelief, &atoms(&["p"]), 99, 6);
        let h = c.size_histogram();
        assert_eq!(h.values().copied().collect::<Vec<_>>(), vec![1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn depth_bound_is_respected() {
        let c = Corpus::for_language(Language::FalseBelief, &atoms(&["p"]), 1, 5);
        assert!(c.entries().iter().all(|e| e.formula.modal_depth() <= 1));
        assert!(c.formulas().any(|g| *g == f("W p & p")));
        assert!(!c.formulas().any(|g| *g == f("W W p")));
    }

    #[test]
    fn order_is_by_size_then_text() {
        let c = Corpus::for_language(Language::Mixed, &atoms(&["p"]), 2, 2);
        let got: Vec<String> = c.formulas().map(|g| g.to_string()).collect();
        assert_eq!(got, ["p", "B p", "W p", "~p"]);
    }

    #[test]
    fn entries_match_their_metadata_and_evaluation() {
        let c = Corpus::for_language(Language::Full, &atoms(&["p", "q"]), 2, 4);
        let fr = Frame::new(&["a", "b", "c"], &[("a", "b"), ("b", "b"), ("c", "a")]).unwrap();
        let m = Model::from_names(fr, &[("p", &["a", "b"][..]), ("q", &["c"][..])]).unwrap();
        let ext = c.model_extensions(&m);
        for (e, x) in c.entries().iter().zip(ext) {
            assert_eq!(e.size, e.formula.size());
            assert_eq!(e.depth, e.formula.modal_depth());
            assert_eq!(x, m.extension(&e.formula), "{}", e.formula);
        }
    }
}
