//! Line-based automaton format.
//!
//! ```text
//! alphabet: a b;
//! mode: word;
//! state q0 1;
//! state q1 2;
//! initial q0;
//! trans q0 a := q0;
//! trans q0 b := q1 | q0 & q1;
//! ```
//!
//! Atoms are `<> s`, `[] s` or a bare `s`; `&` binds tighter than `|`.
//! Bare states are only allowed in word mode, where all three forms mean
//! the same thing. `#` starts a comment. `mode` defaults to `word`.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::arena::Priority;

use super::automaton::{AltAutomaton, AutomatonError, Mode};
use super::formula::{Formula, Modality};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutParseError {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Invalid(#[from] AutomatonError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Colon,
    Semi,
    Assign,
    Diamond,
    Box,
    And,
    Or,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '.' | '~' | '\'' | '@' | '-' | '+' | '*' | '^')
}

fn lex(text: &str) -> Result<Vec<Spanned>, AutParseError> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            let push = |tok, out: &mut Vec<Spanned>| {
                out.push(Spanned {
                    tok,
                    line: li + 1,
                    column,
                })
            };
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let two: String = chars[i..(i + 2).min(chars.len())].iter().collect();
            match two.as_str() {
                ":=" => {
                    push(Tok::Assign, &mut out);
                    i += 2;
                    continue;
                }
                "<>" => {
                    push(Tok::Diamond, &mut out);
                    i += 2;
                    continue;
                }
                "[]" => {
                    push(Tok::Box, &mut out);
                    i += 2;
                    continue;
                }
                _ => {}
            }
            let single = match c {
                ':' => Some(Tok::Colon),
                ';' => Some(Tok::Semi),
                '&' => Some(Tok::And),
                '|' => Some(Tok::Or),
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                _ => None,
            };
            if let Some(tok) = single {
                push(tok, &mut out);
                i += 1;
                continue;
            }
            if is_ident_char(c) {
                let start = i;
                while i < chars.len() && is_ident_char(chars[i]) {
                    i += 1;
                }
                push(Tok::Ident(chars[start..i].iter().collect()), &mut out);
                continue;
            }
            return Err(AutParseError::Syntax {
                line: li + 1,
                column,
                message: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

/// Formula with state names still unresolved.
enum RawFormula {
    Atom(Option<Modality>, String, usize, usize),
    And(Vec<RawFormula>),
    Or(Vec<RawFormula>),
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end_line: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, AutParseError> {
        let (line, column) = self
            .toks
            .get(self.pos)
            .map(|s| (s.line, s.column))
            .unwrap_or((self.end_line, 1));
        Err(AutParseError::Syntax {
            line,
            column,
            message: message.into(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), AutParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(format!("expected {what}"))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, usize, usize), AutParseError> {
        match self.toks.get(self.pos) {
            Some(Spanned {
                tok: Tok::Ident(s),
                line,
                column,
            }) => {
                let r = (s.clone(), *line, *column);
                self.pos += 1;
                Ok(r)
            }
            _ => self.error(format!("expected {what}")),
        }
    }

    fn formula(&mut self) -> Result<RawFormula, AutParseError> {
        let mut parts = vec![self.conjunction()?];
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            parts.push(self.conjunction()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            RawFormula::Or(parts)
        })
    }

    fn conjunction(&mut self) -> Result<RawFormula, AutParseError> {
        let mut parts = vec![self.primary()?];
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            parts.push(self.primary()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            RawFormula::And(parts)
        })
    }

    fn primary(&mut self) -> Result<RawFormula, AutParseError> {
        match self.peek() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let f = self.formula()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(f)
            }
            Some(Tok::Diamond) | Some(Tok::Box) => {
                let m = if self.peek() == Some(&Tok::Diamond) {
                    Modality::Diamond
                } else {
                    Modality::Box
                };
                self.pos += 1;
                let (name, line, column) = self.ident("a state after the path quantifier")?;
                Ok(RawFormula::Atom(Some(m), name, line, column))
            }
            Some(Tok::Ident(_)) => {
                let (name, line, column) = self.ident("a state")?;
                Ok(RawFormula::Atom(None, name, line, column))
            }
            _ => self.error("expected a formula"),
        }
    }
}

struct Trans {
    state: (String, usize, usize),
    letter: (String, usize, usize),
    formula: RawFormula,
}

/// Parses the automaton text format.
pub fn parse_automaton(text: &str) -> Result<AltAutomaton, AutParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end_line: text.lines().count().max(1),
    };
    let mut alphabet: Option<Vec<String>> = None;
    let mut mode: Option<Mode> = None;
    let mut states: Vec<(String, Priority)> = Vec::new();
    let mut initial: Option<(String, usize, usize)> = None;
    let mut transitions: Vec<Trans> = Vec::new();

    while p.pos < p.toks.len() {
        let (keyword, _, _) = p.ident("a statement keyword")?;
        match keyword.as_str() {
            "alphabet" => {
                if alphabet.is_some() {
                    p.pos -= 1;
                    return p.error("alphabet declared twice");
                }
                p.expect(Tok::Colon, "':'")?;
                let mut letters = Vec::new();
                while let Some(Tok::Ident(_)) = p.peek() {
                    letters.push(p.ident("a letter")?.0);
                }
                p.expect(Tok::Semi, "';'")?;
                alphabet = Some(letters);
            }
            "mode" => {
                p.expect(Tok::Colon, "':'")?;
                let (m, _, _) = p.ident("word or tree")?;
                mode = Some(match m.as_str() {
                    "word" => Mode::Word,
                    "tree" => Mode::Tree,
                    _ => {
                        p.pos -= 1;
                        return p.error("mode must be word or tree");
                    }
                });
                p.expect(Tok::Semi, "';'")?;
            }
            "state" => {
                let (name, _, _) = p.ident("a state name")?;
                let (prio, _, _) = p.ident("a priority")?;
                let prio: Priority = match prio.parse() {
                    Ok(v) => v,
                    Err(_) => {
                        p.pos -= 1;
                        return p.error("priority must be a non-negative integer");
                    }
                };
                p.expect(Tok::Semi, "';'")?;
                states.push((name, prio));
            }
            "initial" => {
                let id = p.ident("a state name")?;
                p.expect(Tok::Semi, "';'")?;
                initial = Some(id);
            }
            "trans" => {
                let state = p.ident("a state name")?;
                let letter = p.ident("a letter")?;
                p.expect(Tok::Assign, "':='")?;
                let formula = p.formula()?;
                p.expect(Tok::Semi, "';'")?;
                transitions.push(Trans {
                    state,
                    letter,
                    formula,
                });
            }
            _ => {
                p.pos -= 1;
                return p.error(format!("unknown statement {keyword:?}"));
            }
        }
    }

    let syntax = |line, column, message: String| AutParseError::Syntax {
        line,
        column,
        message,
    };
    let alphabet = alphabet.ok_or_else(|| syntax(1, 1, "missing alphabet declaration".into()))?;
    let mode = mode.unwrap_or(Mode::Word);
    let (init_name, il, ic) =
        initial.ok_or_else(|| syntax(1, 1, "missing initial declaration".into()))?;
    let index: HashMap<&str, usize> = states
        .iter()
        .enumerate()
        .map(|(i, (n, _))| (n.as_str(), i))
        .collect();
    let letter_index: HashMap<&str, usize> =
        alphabet.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let initial = *index
        .get(init_name.as_str())
        .ok_or_else(|| syntax(il, ic, format!("unknown state {init_name:?}")))?;

    let mut delta: Vec<Vec<Option<Formula>>> = vec![vec![None; alphabet.len()]; states.len()];
    for t in transitions {
        let (sn, sl, sc) = &t.state;
        let q = *index
            .get(sn.as_str())
            .ok_or_else(|| syntax(*sl, *sc, format!("unknown state {sn:?}")))?;
        let (ln, ll, lc) = &t.letter;
        let a = *letter_index
            .get(ln.as_str())
            .ok_or_else(|| syntax(*ll, *lc, format!("unknown letter {ln:?}")))?;
        if delta[q][a].is_some() {
            return Err(syntax(*sl, *sc, format!("transition of {sn:?} on {ln:?} given twice")));
        }
        delta[q][a] = Some(resolve(&t.formula, &index, mode)?);
    }
    let mut full = Vec::with_capacity(states.len());
    for (q, row) in delta.into_iter().enumerate() {
        let mut out = Vec::with_capacity(row.len());
        for (a, f) in row.into_iter().enumerate() {
            match f {
                Some(f) => out.push(f),
                None => {
                    return Err(AutomatonError::MissingTransition {
                        state: states[q].0.clone(),
                        letter: alphabet[a].clone(),
                    }
                    .into())
                }
            }
        }
        full.push(out);
    }
    let (names, priority) = states.into_iter().unzip();
    Ok(AltAutomaton::new(mode, alphabet, names, priority, initial, full)?)
}

fn resolve(
    f: &RawFormula,
    index: &HashMap<&str, usize>,
    mode: Mode,
) -> Result<Formula, AutParseError> {
    Ok(match f {
        RawFormula::Atom(m, name, line, column) => {
            let q = *index.get(name.as_str()).ok_or_else(|| AutParseError::Syntax {
                line: *line,
                column: *column,
                message: format!("unknown state {name:?}"),
            })?;
            let m = match (m, mode) {
                (_, Mode::Word) => Modality::Next,
                (Some(m), Mode::Tree) => *m,
                (None, Mode::Tree) => {
                    return Err(AutParseError::Syntax {
                        line: *line,
                        column: *column,
                        message: "tree automata need <> or [] before a state".into(),
                    })
                }
            };
            Formula::atom(m, q)
        }
        RawFormula::And(bs) => Formula::and(
            bs.iter()
                .map(|b| resolve(b, index, mode))
                .collect::<Result<_, _>>()?,
        ),
        RawFormula::Or(bs) => Formula::or(
            bs.iter()
                .map(|b| resolve(b, index, mode))
                .collect::<Result<_, _>>()?,
        ),
    })
}

/// Writes a transition condition with the automaton's state names.
pub fn format_formula(a: &AltAutomaton, f: &Formula) -> String {
    let mut s = String::new();
    write_formula(a, f, &mut s);
    s
}

fn write_formula(a: &AltAutomaton, f: &Formula, out: &mut String) {
    match f {
        Formula::Atom(m, q) => {
            match m {
                Modality::Diamond => out.push_str("<> "),
                Modality::Box => out.push_str("[] "),
                Modality::Next => {}
            }
            out.push_str(a.state_name(*q));
        }
        Formula::Or(bs) => {
            let parts = operands(a, bs, |b| matches!(b, Formula::Or(_)));
            out.push_str(&parts.join(" | "));
        }
        Formula::And(bs) => {
            let parts = operands(a, bs, |b| !matches!(b, Formula::Atom(..)));
            out.push_str(&parts.join(" & "));
        }
    }
}

/// Operands rendered and sorted by their text, so the output does not
/// depend on state numbering.
fn operands(a: &AltAutomaton, bs: &[Formula], wrap: impl Fn(&Formula) -> bool) -> Vec<String> {
    let mut parts: Vec<String> = bs
        .iter()
        .map(|b| {
            let mut s = String::new();
            write_operand(a, b, wrap(b), &mut s);
            s
        })
        .collect();
    parts.sort();
    parts
}

fn write_operand(a: &AltAutomaton, f: &Formula, wrap: bool, out: &mut String) {
    if wrap {
        out.push('(');
        write_formula(a, f, out);
        out.push(')');
    } else {
        write_formula(a, f, out);
    }
}

/// Writes the automaton: alphabet, mode, states sorted by name, the
/// initial state, then transitions sorted by state and letter name.
pub fn write_automaton(a: &AltAutomaton) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "alphabet: {};", a.alphabet().join(" "));
    let _ = writeln!(out, "mode: {};", a.mode());
    let mut order: Vec<usize> = (0..a.len()).collect();
    order.sort_by(|&x, &y| a.state_name(x).cmp(a.state_name(y)));
    for &q in &order {
        let _ = writeln!(out, "state {} {};", a.state_name(q), a.priority(q));
    }
    let _ = writeln!(out, "initial {};", a.state_name(a.initial()));
    let mut letters: Vec<usize> = (0..a.alphabet().len()).collect();
    letters.sort_by(|&x, &y| a.alphabet()[x].cmp(&a.alphabet()[y]));
    for &q in &order {
        for &l in &letters {
            let _ = writeln!(
                out,
                "trans {} {} := {};",
                a.state_name(q),
                a.alphabet()[l],
                format_formula(a, a.delta(q, l))
            );
        }
    }
    out
}
