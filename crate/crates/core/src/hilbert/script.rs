//! Text format for proofs.
//!
//! ```text
//! # comment
//! system: KW
//! premise: p -> q
//! conclusion: W p & ~q -> W q
//!
//! 1. p -> q ; premise
//! 2. W p & ~q -> W q ; r1 1
//! ```
//!
//! Justifications: a schema name optionally followed by a substitution
//! such as `A1{phi:=p & q}`, `taut`, `premise`, `mp i j`, `r1 i`, `rir i`,
//! `rew i`.

use thiserror::Error;

use super::{Justification, Proof, ProofLine, Substitution};
use crate::syntax::{parse, Formula};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("script line {line}: {message}")]
pub struct ScriptError {
    pub line: usize,
    pub message: String,
}

fn formula(text: &str, line: usize) -> Result<Formula, ScriptError> {
    parse(text.trim()).map_err(|e| ScriptError {
        line,
        message: format!("{e} in `{}`", text.trim()),
    })
}

fn justification(text: &str, line: usize) -> Result<Justification, ScriptError> {
    let err = |message: String| ScriptError { line, message };
    let words: Vec<&str> = text.split_whitespace().collect();
    let label = |w: &str| {
        w.trim_start_matches('(')
            .trim_end_matches(')')
            .parse::<usize>()
            .map_err(|_| err(format!("bad line reference `{w}`")))
    };
    let Some(&head) = words.first() else {
        return Err(err("missing justification".into()));
    };
    let unary = |make: fn(usize) -> Justification| match words[1..] {
        [i] => Ok(make(label(i)?)),
        _ => Err(err(format!("`{head}` takes one line reference"))),
    };
    match head.to_ascii_lowercase().as_str() {
        "taut" | "a0" => return Ok(Justification::Tautology),
        "premise" | "hyp" => return Ok(Justification::Premise),
        "mp" => {
            return match words[1..] {
                [i, j] => Ok(Justification::Mp(label(i)?, label(j)?)),
                _ => Err(err("`mp` takes two line references".into())),
            }
        }
        "r1" => return unary(Justification::R1),
        "rir" | "ri-r" => return unary(Justification::RiR),
        "rew" => return unary(Justification::Rew),
        _ => {}
    }
    let text = text.trim();
    let (name, sigma) = match text.find('{') {
        None => (text, None),
        Some(open) => {
            let body = text[open + 1..]
                .strip_suffix('}')
                .ok_or_else(|| err("unclosed substitution".into()))?;
            let mut sigma = Substitution::new();
            for part in body.split(',').filter(|p| !p.trim().is_empty()) {
                let (var, value) = part
                    .split_once(":=")
                    .ok_or_else(|| err(format!("expected `name:=formula`, found `{}`", part.trim())))?;
                sigma.insert(var.trim().to_string(), formula(value, line)?);
            }
            (text[..open].trim(), Some(sigma))
        }
    };
    if name.is_empty() || name.contains(char::is_whitespace) {
        return Err(err(format!("unknown justification `{text}`")));
    }
    Ok(Justification::Axiom {
        schema: name.to_string(),
        sigma,
    })
}

pub fn parse_proof(text: &str) -> Result<Proof, ScriptError> {
    let mut system = None;
    let mut premises = Vec::new();
    let mut conclusion = None;
    let mut lines = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let n = n + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| ScriptError { line: n, message };
        if let Some((digits, rest)) = content.split_once('.') {
            if !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit()) {
                let index = digits.parse().map_err(|_| err("bad label".into()))?;
                let (body, just) = rest
                    .rsplit_once(';')
                    .ok_or_else(|| err("expected `<formula> ; <justification>`".into()))?;
                lines.push(ProofLine {
                    index,
                    formula: formula(body, n)?,
                    justification: justification(just, n)?,
                });
                continue;
            }
        }
        let (key, value) = content
            .split_once(':')
            .ok_or_else(|| err(format!("unrecognised line `{content}`")))?;
        if !lines.is_empty() {
            return Err(err("header entries must come before proof lines".into()));
        }
        match key.trim() {
            "system" => system = Some(value.trim().to_string()),
            "premise" => premises.push(formula(value, n)?),
            "conclusion" => conclusion = Some(formula(value, n)?),
            other => return Err(err(format!("unknown header `{other}`"))),
        }
    }
    let system = system.ok_or(ScriptError {
        line: 0,
        message: "missing `system:` header".into(),
    })?;
    Ok(Proof {
        system,
        premises,
        lines,
        conclusion,
    })
}

pub fn print_proof(p: &Proof) -> String {
    let mut out = format!("system: {}\n", p.system);
    for q in &p.premises {
        out += &format!("premise: {q}\n");
    }
    if let Some(c) = &p.conclusion {
        out += &format!("conclusion: {c}\n");
    }
    out.push('\n');
    for l in &p.lines {
        out += &format!("{}. {} ; {}\n", l.index, l.formula, l.justification);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{f, subst_map};

    const SAMPLE: &str = "\
# weakening
system: KW
premise: p -> q   # the hypothesis
conclusion: W p & ~q -> W q

1. p -> q ; premise
3. W p & ~q -> W q ; r1 1
";

    #[test]
    fn parses_header_and_lines() {
        let p = parse_proof(SAMPLE).unwrap();
        assert_eq!(p.system, "KW");
        assert_eq!(p.premises, [f("p -> q")]);
        assert_eq!(p.conclusion, Some(f("W p & ~q -> W q")));
        assert_eq!(p.lines.len(), 2);
        assert_eq!(p.lines[1].index, 3);
        assert_eq!(p.lines[1].justification, Justification::R1(1));
    }

    #[test]
    fn justifications() {
        assert_eq!(justification("mp 1 2", 1).unwrap(), Justification::Mp(1, 2));
        assert_eq!(justification("MP (1) (2)", 1).unwrap(), Justification::Mp(1, 2));
        assert_eq!(justification("taut", 1).unwrap(), Justification::Tautology);
        assert_eq!(justification("rir 4", 1).unwrap(), Justification::RiR(4));
        assert_eq!(
            justification("A5{phi:=~W q, psi:=p, chi:=q}", 1).unwrap(),
            Justification::Axiom {
                schema: "A5".into(),
                sigma: Some(subst_map([("phi", f("~W q")), ("psi", f("p")), ("chi", f("q"))]))
            }
        );
        assert_eq!(
            justification("RI-Con", 1).unwrap(),
            Justification::Axiom {
                schema: "RI-Con".into(),
                sigma: None
            }
        );
        assert!(justification("mp 1", 1).is_err());
        assert!(justification("r1 x", 1).is_err());
        assert!(justification("A1{phi=p}", 1).is_err());
        assert!(justification("", 1).is_err());
    }

    #[test]
    fn round_trips_through_text() {
        let p = parse_proof(SAMPLE).unwrap();
        assert_eq!(parse_proof(&print_proof(&p)).unwrap(), p);
    }

    #[test]
    fn errors_carry_script_line() {
        let e = parse_proof("system: KW\n1. p -> ; taut\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_proof("system: KW\n1. p -> p taut\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(parse_proof("1. p -> p ; taut\n").unwrap_err().line, 0);
        let e = parse_proof("system: KW\n1. p -> p ; taut\npremise: q\n").unwrap_err();
        assert_eq!(e.line, 3);
    }
}
