//! PGSolver `.gm` text format.
//!
//! ```text
//! parity <max-id>;
//! <id> <priority> <owner> <succ>,<succ>,... ["name"];
//! ```
//!
//! The header is optional, `start <id>;` lines are accepted and ignored.
//! Owner 0 is Eve, owner 1 is Adam. Identifiers may be sparse; they are
//! compacted to `0..n` in ascending order, and when the input was sparse the
//! original identifier becomes the vertex name unless one was given.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use super::{ParityGame, Player, Priority, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PgParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: vertex {id} has no successors")]
    NoSuccessors { line: usize, id: u64 },
    #[error("line {line}: vertex {id} has successor {target}, which is never declared")]
    DanglingSuccessor { line: usize, id: u64, target: u64 },
    #[error("line {line}: vertex {id} has negative priority {priority}")]
    NegativePriority { line: usize, id: u64, priority: i64 },
    #[error("line {line}: vertex {id} is declared twice")]
    DuplicateVertex { line: usize, id: u64 },
    #[error("line {line}: owner of vertex {id} must be 0 or 1, found {owner}")]
    BadOwner { line: usize, id: u64, owner: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(i64),
    Word(String),
    Str(String),
    Comma,
    Semi,
}

fn syntax(line: usize, message: impl Into<String>) -> PgParseError {
    PgParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Token, usize)>, PgParseError> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    let mut line = 1;
    while let Some(&c) = chars.peek() {
        match c {
            '\n' => {
                line += 1;
                chars.next();
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            ',' => {
                chars.next();
                tokens.push((Token::Comma, line));
            }
            ';' => {
                chars.next();
                tokens.push((Token::Semi, line));
            }
            '"' => {
                let start = line;
                chars.next();
                let mut s = String::new();
                loop {
                    match chars.next() {
                        None => return Err(syntax(start, "unterminated name")),
                        Some('"') => break,
                        Some('\\') => match chars.next() {
                            Some(e @ ('"' | '\\')) => s.push(e),
                            Some(other) => {
                                s.push('\\');
                                s.push(other);
                                if other == '\n' {
                                    line += 1;
                                }
                            }
                            None => return Err(syntax(start, "unterminated name")),
                        },
                        Some(ch) => {
                            if ch == '\n' {
                                line += 1;
                            }
                            s.push(ch);
                        }
                    }
                }
                tokens.push((Token::Str(s), start));
            }
            c if c == '-' || c.is_ascii_digit() => {
                let mut s = String::new();
                s.push(c);
                chars.next();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let value = s
                    .parse::<i64>()
                    .map_err(|_| syntax(line, format!("bad integer `{s}`")))?;
                tokens.push((Token::Int(value), line));
            }
            c if c.is_ascii_alphabetic() => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push((Token::Word(s), line));
            }
            other => return Err(syntax(line, format!("unexpected character `{other}`"))),
        }
    }
    Ok(tokens)
}

struct Declared {
    line: usize,
    priority: Priority,
    owner: Player,
    successors: Vec<u64>,
    name: Option<String>,
}

/// Parses a game in PGSolver format.
pub fn parse_pgsolver(text: &str) -> Result<ParityGame, PgParseError> {
    let tokens = lex(text)?;
    let mut statements: Vec<&[(Token, usize)]> = Vec::new();
    let mut start = 0;
    for (i, (tok, _)) in tokens.iter().enumerate() {
        if *tok == Token::Semi {
            statements.push(&tokens[start..i]);
            start = i + 1;
        }
    }
    if start < tokens.len() {
        return Err(syntax(tokens[start].1, "missing `;`"));
    }

    let mut declared: BTreeMap<u64, Declared> = BTreeMap::new();
    for (index, stmt) in statements.iter().enumerate() {
        let Some((first, line)) = stmt.first() else {
            continue;
        };
        let line = *line;
        match first {
            Token::Word(w) if (w == "parity" && index == 0) || w == "start" => {
                match &stmt[1..] {
                    [(Token::Int(v), _)] if *v >= 0 => {}
                    _ => return Err(syntax(line, format!("expected `{w} <non-negative int>;`"))),
                }
            }
            Token::Int(_) => {
                let (id, decl) = parse_vertex(stmt, line)?;
                if declared.contains_key(&id) {
                    return Err(PgParseError::DuplicateVertex { line, id });
                }
                declared.insert(id, decl);
            }
            _ => return Err(syntax(line, "expected a vertex declaration")),
        }
    }

    let index: BTreeMap<u64, Vertex> = declared.keys().enumerate().map(|(i, &id)| (id, i)).collect();
    let dense = declared.keys().enumerate().all(|(i, &id)| i as u64 == id);
    let n = declared.len();
    let mut owner = Vec::with_capacity(n);
    let mut priority = Vec::with_capacity(n);
    let mut successors = Vec::with_capacity(n);
    let mut names = Vec::with_capacity(n);
    for (&id, decl) in &declared {
        let mut succ = Vec::with_capacity(decl.successors.len());
        for target in &decl.successors {
            match index.get(target) {
                Some(&w) => succ.push(w),
                None => {
                    return Err(PgParseError::DanglingSuccessor {
                        line: decl.line,
                        id,
                        target: *target,
                    })
                }
            }
        }
        owner.push(decl.owner);
        priority.push(decl.priority);
        successors.push(succ);
        names.push(match &decl.name {
            Some(name) => Some(name.clone()),
            None if !dense => Some(id.to_string()),
            None => None,
        });
    }
    Ok(ParityGame::with_names(owner, priority, successors, names)
        .expect("parsed arena satisfies the game invariants"))
}

fn parse_vertex(stmt: &[(Token, usize)], line: usize) -> Result<(u64, Declared), PgParseError> {
    let int_at = |i: usize, what: &str| match stmt.get(i) {
        Some((Token::Int(v), _)) => Ok(*v),
        _ => Err(syntax(line, format!("expected {what}"))),
    };
    let raw_id = int_at(0, "vertex id")?;
    let id = u64::try_from(raw_id).map_err(|_| syntax(line, format!("negative vertex id {raw_id}")))?;
    let raw_priority = int_at(1, "priority")?;
    if raw_priority < 0 {
        return Err(PgParseError::NegativePriority {
            line,
            id,
            priority: raw_priority,
        });
    }
    let priority = Priority::try_from(raw_priority)
        .map_err(|_| syntax(line, format!("priority {raw_priority} too large")))?;
    let owner = match int_at(2, "owner")? {
        0 => Player::Eve,
        1 => Player::Adam,
        other => return Err(PgParseError::BadOwner { line, id, owner: other }),
    };

    let mut successors = Vec::new();
    let mut i = 3;
    let mut expect_target = true;
    while let Some((tok, _)) = stmt.get(i) {
        match (tok, expect_target) {
            (Token::Int(t), true) => {
                let t = u64::try_from(*t)
                    .map_err(|_| syntax(line, format!("negative successor id {t}")))?;
                successors.push(t);
                expect_target = false;
            }
            (Token::Comma, false) => expect_target = true,
            _ => break,
        }
        i += 1;
    }
    if successors.is_empty() {
        return Err(PgParseError::NoSuccessors { line, id });
    }
    if expect_target {
        return Err(syntax(line, "trailing `,` in successor list"));
    }
    let name = match &stmt[i..] {
        [] => None,
        [(Token::Str(s), _)] => Some(s.clone()),
        _ => return Err(syntax(line, "unexpected tokens after successor list")),
    };
    Ok((
        id,
        Declared {
            line,
            priority,
            owner,
            successors,
            name,
        },
    ))
}

/// Writes a game in PGSolver format. Unnamed vertices get no name field.
pub fn write_pgsolver(game: &ParityGame) -> String {
    let mut out = String::new();
    if game.is_empty() {
        return out;
    }
    let _ = writeln!(out, "parity {};", game.len() - 1);
    for v in game.vertices() {
        let succ: Vec<String> = game.successors(v).iter().map(|w| w.to_string()).collect();
        let _ = write!(
            out,
            "{} {} {} {}",
            v,
            game.priority(v),
            game.owner(v).code(),
            succ.join(",")
        );
        if let Some(name) = game.name(v) {
            let escaped = name.replace('\\', "\\\\").replace('"', "\\\"");
            let _ = write!(out, " \"{escaped}\"");
        }
        out.push_str(";\n");
    }
    out
}
