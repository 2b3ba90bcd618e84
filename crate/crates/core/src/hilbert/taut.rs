//! Propositional tautology check with modal subformulas treated as letters.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::syntax::Formula;

/// Largest number of distinct letters the truth table is built for.
pub const MAX_TAUT_LETTERS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{found} distinct letters after abstraction, limit is {MAX_TAUT_LETTERS}")]
pub struct TooManyLetters {
    pub found: usize,
}

/// The maximal non-Boolean subformulas (atoms and modal formulas), each
/// listed once, in order of first occurrence.
pub fn abstraction_letters(f: &Formula) -> Vec<&Formula> {
    fn walk<'a>(f: &'a Formula, seen: &mut BTreeMap<&'a Formula, usize>, out: &mut Vec<&'a Formula>) {
        match f {
            Formula::Top | Formula::Bot => {}
            Formula::Not(a) => walk(a, seen, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                walk(a, seen, out);
                walk(b, seen, out);
            }
            _ => {
                if !seen.contains_key(f) {
                    seen.insert(f, out.len());
                    out.push(f);
                }
            }
        }
    }
    let mut seen = BTreeMap::new();
    let mut out = Vec::new();
    walk(f, &mut seen, &mut out);
    out
}

/// Truth tables as bit vectors: bit `v` of the table is the value under
/// assignment `v`, where letter `i` is true iff bit `i` of `v` is set.
struct Tables {
    words: usize,
    last_mask: u64,
}

impl Tables {
    fn new(letters: usize) -> Tables {
        let rows = 1u64 << letters;
        let words = rows.div_ceil(64) as usize;
        let last_mask = if rows >= 64 { !0 } else { (1u64 << rows) - 1 };
        Tables { words, last_mask }
    }

    fn letter(&self, i: usize) -> Vec<u64> {
        const SMALL: [u64; 6] = [
            0xAAAA_AAAA_AAAA_AAAA,
            0xCCCC_CCCC_CCCC_CCCC,
            0xF0F0_F0F0_F0F0_F0F0,
            0xFF00_FF00_FF00_FF00,
            0xFFFF_0000_FFFF_0000,
            0xFFFF_FFFF_0000_0000,
        ];
        (0..self.words)
            .map(|w| {
                if i < 6 {
                    SMALL[i]
                } else if (w >> (i - 6)) & 1 == 1 {
                    !0
                } else {
                    0
                }
            })
            .collect()
    }

    fn constant(&self, value: bool) -> Vec<u64> {
        vec![if value { !0 } else { 0 }; self.words]
    }

    fn all_true(&self, t: &[u64]) -> bool {
        let (last, rest) = t.split_last().expect("at least one word");
        rest.iter().all(|&w| w == !0) && last & self.last_mask == self.last_mask
    }
}

fn table(f: &Formula, index: &BTreeMap<&Formula, usize>, t: &Tables) -> Vec<u64> {
    let bin = |a: &Formula, b: &Formula, op: fn(u64, u64) -> u64| -> Vec<u64> {
        let x = table(a, index, t);
        let y = table(b, index, t);
        x.iter().zip(&y).map(|(&u, &v)| op(u, v)).collect()
    };
    match f {
        Formula::Top => t.constant(true),
        Formula::Bot => t.constant(false),
        Formula::Not(a) => table(a, index, t).into_iter().map(|w| !w).collect(),
        Formula::And(a, b) => bin(a, b, |u, v| u & v),
        Formula::Or(a, b) => bin(a, b, |u, v| u | v),
        Formula::Imp(a, b) => bin(a, b, |u, v| !u | v),
        Formula::Iff(a, b) => bin(a, b, |u, v| !(u ^ v)),
        _ => t.letter(index[f]),
    }
}

/// Whether `f` is an instance of a propositional tautology.
pub fn is_tautology(f: &Formula) -> Result<bool, TooManyLetters> {
    let letters = abstraction_letters(f);
    if letters.len() > MAX_TAUT_LETTERS {
        return Err(TooManyLetters { found: letters.len() });
    }
    let index: BTreeMap<&Formula, usize> = letters.iter().enumerate().map(|(i, g)| (*g, i)).collect();
    let t = Tables::new(letters.len());
    Ok(t.all_true(&table(f, &index, &t)))
}
