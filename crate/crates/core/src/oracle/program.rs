//! Formulas compiled to a flat DAG of truth-set operations.

use crate::semantics::{modal_extension, Frame, StateSet};
use crate::syntax::{Formula, ModalOp};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Node {
    Atom(usize),
    Top,
    Bot,
    Not(usize),
    And(usize, usize),
    Or(usize, usize),
    Imp(usize, usize),
    Iff(usize, usize),
    Modal(ModalOp, usize),
}

impl Node {
    /// The same node with child indices passed through `f`.
    pub fn remap(self, f: impl Fn(usize) -> usize) -> Node {
        match self {
            Node::Not(a) => Node::Not(f(a)),
            Node::And(a, b) => Node::And(f(a), f(b)),
            Node::Or(a, b) => Node::Or(f(a), f(b)),
            Node::Imp(a, b) => Node::Imp(f(a), f(b)),
            Node::Iff(a, b) => Node::Iff(f(a), f(b)),
            Node::Modal(m, a) => Node::Modal(m, f(a)),
            leaf => leaf,
        }
    }
}

/// Nodes only refer to earlier nodes, so one forward pass evaluates all of them.
#[derive(Debug, Clone, Default)]
pub(crate) struct Program {
    nodes: Vec<Node>,
}

impl Program {
    pub fn push(&mut self, node: Node) -> usize {
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, i: usize) -> Node {
        self.nodes[i]
    }

    /// Appends `f`, returning the index of its root. `atoms` fixes atom
    /// indices; atoms outside it are false everywhere.
    pub fn compile(&mut self, f: &Formula, atoms: &[String]) -> usize {
        let un = |p: &mut Program, a: &Formula, mk: fn(usize) -> Node| {
            let i = p.compile(a, atoms);
            p.push(mk(i))
        };
        match f {
            Formula::Atom(n) => match atoms.iter().position(|a| a == n) {
                Some(i) => self.push(Node::Atom(i)),
                None => self.push(Node::Bot),
            },
            Formula::Top => self.push(Node::Top),
            Formula::Bot => self.push(Node::Bot),
            Formula::Not(a) => un(self, a, Node::Not),
            Formula::W(a) => un(self, a, |i| Node::Modal(ModalOp::W, i)),
            Formula::Bel(a) => un(self, a, |i| Node::Modal(ModalOp::Bel, i)),
            Formula::Ir(a) => un(self, a, |i| Node::Modal(ModalOp::Ir, i)),
            Formula::Fi(a) => un(self, a, |i| Node::Modal(ModalOp::Fi, i)),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                let i = self.compile(a, atoms);
                let j = self.compile(b, atoms);
                self.push(match f {
                    Formula::And(..) => Node::And(i, j),
                    Formula::Or(..) => Node::Or(i, j),
                    Formula::Imp(..) => Node::Imp(i, j),
                    _ => Node::Iff(i, j),
                })
            }
        }
    }

    /// Truth sets of every node. `atom_sets[i]` is the extension of atom `i`.
    pub fn run(&self, frame: &Frame, atom_sets: &[StateSet], out: &mut Vec<StateSet>) {
        let all = frame.all();
        out.clear();
        out.reserve(self.nodes.len());
        for node in &self.nodes {
            let v = match *node {
                Node::Atom(i) => atom_sets[i],
                Node::Top => all,
                Node::Bot => 0,
                Node::Not(a) => all & !out[a],
                Node::And(a, b) => out[a] & out[b],
                Node::Or(a, b) => out[a] | out[b],
                Node::Imp(a, b) => (all & !out[a]) | out[b],
                Node::Iff(a, b) => all & !(out[a] ^ out[b]),
                Node::Modal(op, a) => modal_extension(frame, op, out[a]),
            };
            out.push(v);
        }
    }
}
