//! Formula AST, concrete grammar, printing and substitution.
//!
//! Concrete syntax (ASCII only):
//!
//! ```text
//! formula ::= iff
//! iff     ::= imp ("<->" imp)*          left-associative, loosest
//! imp     ::= or ("->" imp)?            right-associative
//! or      ::= and ("|" and)*
//! and     ::= unary ("&" unary)*
//! unary   ::= ("~" | "W" | "B" | "IR" | "FI") unary | atom | "T" | "F" | "(" formula ")"
//! ```
//!
//! `B` is the ordinary belief box, `T`/`F` are verum and falsum. Operator
//! keywords may be glued to their operand (`Wp`, `IR~p`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Identifiers that can never name an atom.
pub const RESERVED: [&str; 6] = ["W", "B", "IR", "FI", "T", "F"];

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(String),
    Top,
    Bot,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    /// False belief: the formula is false here but believed.
    W(Box<Formula>),
    /// Plain belief (the box), written `B`.
    Bel(Box<Formula>),
    /// Radical ignorance.
    Ir(Box<Formula>),
    /// Factive ignorance.
    Fi(Box<Formula>),
}

/// Which modal operators a formula may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Language {
    /// Booleans and `W`.
    FalseBelief,
    /// Booleans and `IR`.
    RadicalIgnorance,
    /// Booleans, `W` and `B`.
    Mixed,
    /// Everything.
    Full,
}

impl Language {
    fn admits(self, op: ModalOp) -> bool {
        match self {
            Language::FalseBelief => op == ModalOp::W,
            Language::RadicalIgnorance => op == ModalOp::Ir,
            Language::Mixed => matches!(op, ModalOp::W | ModalOp::Bel),
            Language::Full => true,
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Language::FalseBelief => "L(W)",
            Language::RadicalIgnorance => "L(IR)",
            Language::Mixed => "L(W,B)",
            Language::Full => "L(W,B,IR,FI)",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModalOp {
    W,
    Bel,
    Ir,
    Fi,
}

impl ModalOp {
    pub fn keyword(self) -> &'static str {
        match self {
            ModalOp::W => "W",
            ModalOp::Bel => "B",
            ModalOp::Ir => "IR",
            ModalOp::Fi => "FI",
        }
    }

    pub fn apply(self, f: Formula) -> Formula {
        let b = Box::new(f);
        match self {
            ModalOp::W => Formula::W(b),
            ModalOp::Bel => Formula::Bel(b),
            ModalOp::Ir => Formula::Ir(b),
            ModalOp::Fi => Formula::Fi(b),
        }
    }
}

/// Structural measures of a formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaMeasures {
    pub modal_depth: usize,
    pub atoms: BTreeSet<String>,
    pub size: usize,
}

/// Returns true when `name` is a legal atom identifier.
pub fn is_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && !RESERVED.contains(&name)
}

// Constructors. These keep call sites free of Box::new noise.
impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into())
    }
    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }
    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }
    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }
    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }
    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }
    pub fn w(f: Formula) -> Formula {
        Formula::W(Box::new(f))
    }
    pub fn bel(f: Formula) -> Formula {
        Formula::Bel(Box::new(f))
    }
    pub fn ir(f: Formula) -> Formula {
        Formula::Ir(Box::new(f))
    }
    pub fn fi(f: Formula) -> Formula {
        Formula::Fi(Box::new(f))
    }

    /// Left-nested conjunction of the given formulas; `T` when empty.
    pub fn conj(items: impl IntoIterator<Item = Formula>) -> Formula {
        items
            .into_iter()
            .reduce(Formula::and)
            .unwrap_or(Formula::Top)
    }

    /// The outermost modal operator and its argument, if any.
    pub fn as_modal(&self) -> Option<(ModalOp, &Formula)> {
        match self {
            Formula::W(a) => Some((ModalOp::W, a)),
            Formula::Bel(a) => Some((ModalOp::Bel, a)),
            Formula::Ir(a) => Some((ModalOp::Ir, a)),
            Formula::Fi(a) => Some((ModalOp::Fi, a)),
            _ => None,
        }
    }

    pub fn measures(&self) -> FormulaMeasures {
        let mut atoms = BTreeSet::new();
        self.collect_atoms(&mut atoms);
        FormulaMeasures {
            modal_depth: self.modal_depth(),
            atoms,
            size: self.size(),
        }
    }

    pub fn modal_depth(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Top | Formula::Bot => 0,
            Formula::Not(a) => a.modal_depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.modal_depth().max(b.modal_depth())
            }
            Formula::W(a) | Formula::Bel(a) | Formula::Ir(a) | Formula::Fi(a) => {
                a.modal_depth() + 1
            }
        }
    }

    /// Node count.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Top | Formula::Bot => 1,
            Formula::Not(a) | Formula::W(a) | Formula::Bel(a) | Formula::Ir(a) | Formula::Fi(a) => {
                a.size() + 1
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.size() + b.size() + 1
            }
        }
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(n) => {
                out.insert(n.clone());
            }
            Formula::Top | Formula::Bot => {}
            Formula::Not(a) | Formula::W(a) | Formula::Bel(a) | Formula::Ir(a) | Formula::Fi(a) => {
                a.collect_atoms(out)
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Every modal operator occurring in the formula.
    pub fn modal_ops(&self) -> BTreeSet<ModalOp> {
        let mut out = BTreeSet::new();
        self.visit(&mut |g| {
            if let Some((op, _)) = g.as_modal() {
                out.insert(op);
            }
        });
        out
    }

    /// The first operator (in pre-order) outside `lang`, if any.
    pub fn first_outside(&self, lang: Language) -> Option<ModalOp> {
        let mut found = None;
        self.visit(&mut |g| {
            if found.is_none() {
                if let Some((op, _)) = g.as_modal() {
                    if !lang.admits(op) {
                        found = Some(op);
                    }
                }
            }
        });
        found
    }

    pub fn is_in(&self, lang: Language) -> bool {
        self.first_outside(lang).is_none()
    }

    /// Pre-order traversal.
    pub fn visit(&self, f: &mut impl FnMut(&Formula)) {
        f(self);
        match self {
            Formula::Atom(_) | Formula::Top | Formula::Bot => {}
            Formula::Not(a) | Formula::W(a) | Formula::Bel(a) | Formula::Ir(a) | Formula::Fi(a) => {
                a.visit(f)
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.visit(f);
                b.visit(f);
            }
        }
    }

    /// Simultaneous substitution of atoms. Atoms missing from `map` are kept.
    pub fn substitute(&self, map: &BTreeMap<String, Formula>) -> Formula {
        self.map_atoms(|name| map.get(name).cloned())
    }

    /// Rebuilds the formula, replacing each atom for which `f` returns `Some`.
    pub fn map_atoms(&self, mut f: impl FnMut(&str) -> Option<Formula>) -> Formula {
        self.map_atoms_dyn(&mut f)
    }

    fn map_atoms_dyn(&self, f: &mut dyn FnMut(&str) -> Option<Formula>) -> Formula {
        match self {
            Formula::Atom(n) => f(n).unwrap_or_else(|| self.clone()),
            Formula::Top => Formula::Top,
            Formula::Bot => Formula::Bot,
            Formula::Not(a) => Formula::Not(Box::new(a.map_atoms_dyn(f))),
            Formula::W(a) => Formula::W(Box::new(a.map_atoms_dyn(f))),
            Formula::Bel(a) => Formula::Bel(Box::new(a.map_atoms_dyn(f))),
            Formula::Ir(a) => Formula::Ir(Box::new(a.map_atoms_dyn(f))),
            Formula::Fi(a) => Formula::Fi(Box::new(a.map_atoms_dyn(f))),
            Formula::And(a, b) => Formula::and(a.map_atoms_dyn(f), b.map_atoms_dyn(f)),
            Formula::Or(a, b) => Formula::or(a.map_atoms_dyn(f), b.map_atoms_dyn(f)),
            Formula::Imp(a, b) => Formula::imp(a.map_atoms_dyn(f), b.map_atoms_dyn(f)),
            Formula::Iff(a, b) => Formula::iff(a.map_atoms_dyn(f), b.map_atoms_dyn(f)),
        }
    }
}

/// Builds a substitution map from `(atom, formula)` pairs.
pub fn subst_map<'a>(pairs: impl IntoIterator<Item = (&'a str, Formula)>) -> BTreeMap<String, Formula> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

// ---------------------------------------------------------------------------
// Printing

fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Iff(..) => 1,
        Formula::Imp(..) => 2,
        Formula::Or(..) => 3,
        Formula::And(..) => 4,
        _ => 5,
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, g: &Formula, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({g})")
    } else {
        write!(f, "{g}")
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(n) => f.write_str(n),
            Formula::Top => f.write_str("T"),
            Formula::Bot => f.write_str("F"),
            Formula::Not(a) => {
                f.write_str("~")?;
                write_operand(f, a, precedence(a) < 5)
            }
            Formula::W(a) | Formula::Bel(a) | Formula::Ir(a) | Formula::Fi(a) => {
                let (op, _) = self.as_modal().expect("modal node");
                f.write_str(op.keyword())?;
                if precedence(a) < 5 {
                    write!(f, "({a})")
                } else {
                    write!(f, " {a}")
                }
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Iff(a, b) => {
                let p = precedence(self);
                let sym = match self {
                    Formula::And(..) => " & ",
                    Formula::Or(..) => " | ",
                    _ => " <-> ",
                };
                write_operand(f, a, precedence(a) < p)?;
                f.write_str(sym)?;
                write_operand(f, b, precedence(b) <= p)
            }
            Formula::Imp(a, b) => {
                write_operand(f, a, precedence(a) <= 2)?;
                f.write_str(" -> ")?;
                write_operand(f, b, precedence(b) < 2)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Lexing and parsing

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("unexpected character {ch:?} at position {pos}")]
    Lexical { pos: usize, ch: char },
    #[error("at position {pos}: expected {expected}, found {found}")]
    Unexpected {
        pos: usize,
        expected: String,
        found: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Atom(String),
    Op(ModalOp),
    Top,
    Bot,
    Not,
    And,
    Or,
    Imp,
    Iff,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Atom(n) => write!(f, "atom `{n}`"),
            Tok::Op(op) => write!(f, "`{}`", op.keyword()),
            Tok::Top => f.write_str("`T`"),
            Tok::Bot => f.write_str("`F`"),
            Tok::Not => f.write_str("`~`"),
            Tok::And => f.write_str("`&`"),
            Tok::Or => f.write_str("`|`"),
            Tok::Imp => f.write_str("`->`"),
            Tok::Iff => f.write_str("`<->`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let rest = &text[i..];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let (tok, len) = if c.is_ascii_lowercase() {
            let len = rest
                .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                .unwrap_or(rest.len());
            (Tok::Atom(rest[..len].to_string()), len)
        } else if rest.starts_with("IR") {
            (Tok::Op(ModalOp::Ir), 2)
        } else if rest.starts_with("FI") {
            (Tok::Op(ModalOp::Fi), 2)
        } else if rest.starts_with("<->") {
            (Tok::Iff, 3)
        } else if rest.starts_with("->") {
            (Tok::Imp, 2)
        } else {
            let tok = match c {
                'W' => Tok::Op(ModalOp::W),
                'B' => Tok::Op(ModalOp::Bel),
                'T' => Tok::Top,
                'F' => Tok::Bot,
                '~' => Tok::Not,
                '&' => Tok::And,
                '|' => Tok::Or,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => {
                    let ch = rest.chars().next().unwrap_or(c);
                    return Err(ParseError::Lexical { pos: i, ch });
                }
            };
            (tok, 1)
        };
        out.push((i, tok));
        i += len;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        ParseError::Unexpected {
            pos: self.offset(),
            expected: expected.to_string(),
            found: self
                .peek()
                .map_or_else(|| "end of input".to_string(), |t| t.to_string()),
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.imp()?;
        while self.eat(&Tok::Iff) {
            let rhs = self.imp()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if self.eat(&Tok::Imp) {
            let rhs = self.imp()?;
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while self.eat(&Tok::Or) {
            let rhs = self.and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::And) {
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return Err(self.unexpected("a formula"));
        };
        match tok {
            Tok::Not => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Tok::Op(op) => {
                self.pos += 1;
                Ok(op.apply(self.unary()?))
            }
            Tok::Atom(name) => {
                self.pos += 1;
                Ok(Formula::Atom(name))
            }
            Tok::Top => {
                self.pos += 1;
                Ok(Formula::Top)
            }
            Tok::Bot => {
                self.pos += 1;
                Ok(Formula::Bot)
            }
            Tok::LParen => {
                self.pos += 1;
                let inner = self.iff()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.unexpected("`)`"));
                }
                Ok(inner)
            }
            _ => Err(self.unexpected("an atom, `T`, `F`, `(`, `~` or a modal operator")),
        }
    }
}

/// Parses a formula in the concrete grammar.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let f = p.iff()?;
    if p.pos != p.toks.len() {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(f)
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// Formulas serialize as their printed form.
impl serde::Serialize for Formula {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Formula {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Formula, D::Error> {
        let text = String::deserialize(d)?;
        parse(&text).map_err(serde::de::Error::custom)
    }
}

/// Parses a formula known to be well formed. Panics otherwise; meant for
/// built-in tables and tests.
pub fn f(text: &str) -> Formula {
    parse(text).unwrap_or_else(|e| panic!("bad built-in formula {text:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::atom("p")
    }

    #[test]
    fn parses_a1_instance() {
        assert_eq!(
            parse("W p -> ~p").unwrap(),
            Formula::imp(Formula::w(p()), Formula::not(p()))
        );
        assert_eq!(parse("p").unwrap(), p());
    }

    #[test]
    fn parses_a4_instance() {
        let (q, r) = (Formula::atom("q"), Formula::atom("r"));
        let expected = Formula::imp(
            Formula::and(Formula::w(q.clone()), Formula::w(Formula::and(p(), q.clone()))),
            Formula::w(Formula::and(
                Formula::imp(Formula::w(r.clone()), Formula::w(Formula::and(p(), r))),
                q,
            )),
        );
        assert_eq!(
            parse("W q & W (p & q) -> W ((W r -> W (p & r)) & q)").unwrap(),
            expected
        );
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(f("p -> q -> r"), f("p -> (q -> r)"));
        assert_eq!(f("p & q & r"), f("(p & q) & r"));
        assert_eq!(f("p | q & r"), f("p | (q & r)"));
        assert_eq!(f("p <-> q -> r"), f("p <-> (q -> r)"));
        assert_eq!(f("~p & q"), f("(~p) & q"));
        assert_eq!(f("W p & q"), f("(W p) & q"));
        assert_eq!(f("T -> F"), Formula::imp(Formula::Top, Formula::Bot));
    }

    #[test]
    fn glued_operators() {
        assert_eq!(f("Wp"), f("W p"));
        assert_eq!(f("WWp"), f("W W p"));
        assert_eq!(f("IR~p"), f("IR ~p"));
        assert_eq!(f("FIp"), f("FI p"));
        assert_eq!(f("Bp"), f("B p"));
    }

    #[test]
    fn prints_minimal_parentheses() {
        assert_eq!(Formula::w(p()).to_string(), "W p");
        assert_eq!(f("W p -> ~p").to_string(), "W p -> ~p");
        assert_eq!(f("W p & W q").to_string(), "W p & W q");
        assert_eq!(f("W(p&q)").to_string(), "W(p & q)");
        assert_eq!(f("(p -> q) -> r").to_string(), "(p -> q) -> r");
        assert_eq!(f("p & (q & r)").to_string(), "p & (q & r)");
        assert_eq!(f("~~W p").to_string(), "~~W p");
        assert_eq!(
            f("W q & W (p & q) -> W ((W r -> W (p & r)) & q)").to_string(),
            "W q & W(p & q) -> W((W r -> W(p & r)) & q)"
        );
    }

    #[test]
    fn lexical_errors_carry_position() {
        assert_eq!(
            parse("p & $"),
            Err(ParseError::Lexical { pos: 4, ch: '$' })
        );
        assert!(matches!(parse("Xp"), Err(ParseError::Lexical { pos: 0, ch: 'X' })));
        assert!(matches!(parse("p ∧ q"), Err(ParseError::Lexical { pos: 2, .. })));
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse("p & ") {
            Err(ParseError::Unexpected { pos, found, .. }) => {
                assert_eq!(pos, 4);
                assert_eq!(found, "end of input");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("(p"), Err(ParseError::Unexpected { .. })));
        assert!(matches!(parse("p q"), Err(ParseError::Unexpected { pos: 2, .. })));
        assert!(matches!(parse("p -> -> q"), Err(ParseError::Unexpected { pos: 5, .. })));
        assert_eq!(parse("   "), Err(ParseError::Empty));
    }

    #[test]
    fn atom_names() {
        assert!(is_atom_name("p"));
        assert!(is_atom_name("q_1x"));
        assert!(!is_atom_name("W"));
        assert!(!is_atom_name("Pq"));
        assert!(!is_atom_name("1p"));
    }

    #[test]
    fn substitution() {
        let sigma = subst_map([("p", f("q & r"))]);
        assert_eq!(f("W p -> ~p").substitute(&sigma), f("W(q & r) -> ~(q & r)"));
        assert_eq!(p().substitute(&BTreeMap::new()), p());
        let sigma = subst_map([("p", f("W q"))]);
        assert_eq!(f("IR p & ~p").substitute(&sigma), f("IR(W q) & ~W q"));
        // simultaneous, not sequential
        let swap = subst_map([("p", f("q")), ("q", f("p"))]);
        assert_eq!(f("p -> q").substitute(&swap), f("q -> p"));
    }

    #[test]
    fn measures() {
        let m = f("W p").measures();
        assert_eq!((m.modal_depth, m.size), (1, 2));
        assert_eq!(m.atoms, ["p".to_string()].into());
        let m = f("W((W r -> W(p & r)) & q)").measures();
        assert_eq!(m.modal_depth, 2);
        assert_eq!(m.atoms.len(), 3);
        assert_eq!(f("p & ~p").modal_depth(), 0);
    }

    #[test]
    fn language_membership() {
        assert!(f("W p -> ~p").is_in(Language::FalseBelief));
        assert!(!f("B p").is_in(Language::FalseBelief));
        assert_eq!(f("W B p").first_outside(Language::FalseBelief), Some(ModalOp::Bel));
        assert!(f("IR p & ~p").is_in(Language::RadicalIgnorance));
        assert!(f("W q -> (B p <-> W(p & q))").is_in(Language::Mixed));
        assert!(!f("FI p").is_in(Language::Mixed));
    }
}
