//! Synchronised product of a Σ-automaton `A` with an automaton `B` over the
//! game alphabet that reads acceptance games of `A`.
//!
//! A state `(q_A, q_B, m)` stands for `B` in state `q_B` reading the
//! acceptance-game position of `q_A`. Between two such positions `B` walks
//! through the formula positions of one transition condition of `A`; `m` is
//! the largest priority of the `B`-states visited on that walk, and the
//! product state has priority `max(Ω_B(q_B), m)`.

use std::collections::HashMap;

use thiserror::Error;

use crate::arena::{Player, Priority};

use super::automaton::{AltAutomaton, Mode};
use super::formula::{Formula, Modality};
use super::kripke::GameLetter;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error("game automaton lacks letter {0}")]
    MissingLetter(String),
    #[error("the game automaton must be a tree automaton")]
    NotTreeMode,
}

type Key = (usize, usize, Priority);

struct Builder<'a> {
    a: &'a AltAutomaton,
    b: &'a AltAutomaton,
    e0: usize,
    a0: usize,
    state_letter: Vec<usize>,
    keys: Vec<Key>,
    index: HashMap<Key, usize>,
}

impl Builder<'_> {
    fn state(&mut self, key: Key) -> usize {
        if let Some(&s) = self.index.get(&key) {
            return s;
        }
        let s = self.keys.len();
        self.index.insert(key, s);
        self.keys.push(key);
        s
    }

    /// Letter of a formula position in the acceptance game.
    fn label(&self, f: &Formula) -> usize {
        match f {
            Formula::And(_) | Formula::Atom(Modality::Box, _) => self.a0,
            _ => self.e0,
        }
    }

    /// `B` in state `p` reads formula position `f`, with `m` aggregated so far.
    fn enter(&mut self, f: &Formula, p: usize, m: Priority) -> Formula {
        let m = m.max(self.b.priority(p));
        let c = self.b.delta(p, self.label(f)).clone();
        self.step(f, &c, m)
    }

    /// Discharges `B`-condition `c` over the successors of position `f`.
    fn step(&mut self, f: &Formula, c: &Formula, m: Priority) -> Formula {
        match c {
            Formula::And(cs) => Formula::and(cs.iter().map(|c| self.step(f, c, m)).collect()),
            Formula::Or(cs) => Formula::or(cs.iter().map(|c| self.step(f, c, m)).collect()),
            Formula::Atom(modality, p) => match f {
                Formula::Atom(_, q) => {
                    let s = self.state((*q, *p, m));
                    match self.a.mode() {
                        Mode::Word => Formula::next(s),
                        Mode::Tree => Formula::atom(*modality, s),
                    }
                }
                Formula::And(bs) | Formula::Or(bs) => {
                    let parts = bs.iter().map(|b| self.enter(b, *p, m)).collect();
                    match modality {
                        Modality::Box => Formula::and(parts),
                        _ => Formula::or(parts),
                    }
                }
            },
        }
    }

    fn transition(&mut self, key: &Key, letter: usize) -> Formula {
        let (qa, qb, _) = *key;
        let f = self.a.delta(qa, letter).clone();
        let c = self.b.delta(qb, self.state_letter[qa]).clone();
        self.first_step(&f, &c)
    }

    /// The single successor of a state position is its transition condition.
    fn first_step(&mut self, f: &Formula, c: &Formula) -> Formula {
        match c {
            Formula::And(cs) => Formula::and(cs.iter().map(|c| self.first_step(f, c)).collect()),
            Formula::Or(cs) => Formula::or(cs.iter().map(|c| self.first_step(f, c)).collect()),
            Formula::Atom(_, p) => self.enter(f, *p, 0),
        }
    }
}

/// The product over the alphabet and mode of `a`, restricted to the states
/// reachable from `(ι_A, ι_B, 0)`. State `(q_A, q_B, m)` is named
/// `qA*qB*m`.
pub fn sync_product(a: &AltAutomaton, b: &AltAutomaton) -> Result<AltAutomaton, ProductError> {
    if b.mode() != Mode::Tree {
        return Err(ProductError::NotTreeMode);
    }
    let letter = |owner, priority| {
        let name = GameLetter { owner, priority }.to_string();
        b.letter_index(&name).ok_or(ProductError::MissingLetter(name))
    };
    let e0 = letter(Player::Eve, 0)?;
    let a0 = letter(Player::Adam, 0)?;
    let state_letter = a
        .priorities()
        .iter()
        .map(|&p| letter(Player::Eve, p))
        .collect::<Result<Vec<_>, _>>()?;
    let mut builder = Builder {
        a,
        b,
        e0,
        a0,
        state_letter,
        keys: Vec::new(),
        index: HashMap::new(),
    };
    builder.state((a.initial(), b.initial(), 0));
    let mut delta = Vec::new();
    let mut next = 0;
    while next < builder.keys.len() {
        let key = builder.keys[next];
        let row = (0..a.alphabet().len()).map(|l| builder.transition(&key, l)).collect();
        delta.push(row);
        next += 1;
    }
    let names = builder
        .keys
        .iter()
        .map(|&(qa, qb, m)| format!("{}*{}*{}", a.state_name(qa), b.state_name(qb), m))
        .collect();
    let priority = builder.keys.iter().map(|&(_, qb, m)| b.priority(qb).max(m)).collect();
    Ok(AltAutomaton::new(a.mode(), a.alphabet().to_vec(), names, priority, 0, delta)
        .expect("product automaton is well formed"))
}
