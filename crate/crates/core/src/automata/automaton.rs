use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arena::Priority;
use crate::graph;

use super::formula::{Formula, Modality};

/// Whether an automaton reads words or trees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    Word,
    Tree,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Word => "word",
            Mode::Tree => "tree",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomatonError {
    #[error("automaton has no states")]
    NoStates,
    #[error("automaton has an empty alphabet")]
    EmptyAlphabet,
    #[error("duplicate state name {0:?}")]
    DuplicateState(String),
    #[error("duplicate letter {0:?}")]
    DuplicateLetter(String),
    #[error("initial state {0} out of range")]
    BadInitial(usize),
    #[error("missing transition for state {state:?} on letter {letter:?}")]
    MissingTransition { state: String, letter: String },
    #[error("transition of {state:?} refers to unknown state {target}")]
    DanglingAtom { state: String, target: usize },
    #[error("tree automaton uses a bare state in the transition of {0:?}")]
    NextInTree(String),
    #[error("per-state tables disagree in length")]
    LengthMismatch,
    #[error("letter {0:?} is not in the alphabet")]
    UnknownLetter(String),
    #[error("operation needs a word automaton")]
    NotWordMode,
    #[error("operation needs a tree automaton")]
    NotTreeMode,
}

/// Alternating parity automaton (max-parity acceptance: a play is accepting
/// iff the largest priority seen infinitely often is even).
///
/// States and letters are dense indices with names; `delta[q][a]` is the
/// transition condition of state `q` on letter `a`. In word mode every atom
/// is [`Modality::Next`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AltAutomaton {
    mode: Mode,
    alphabet: Vec<String>,
    states: Vec<String>,
    priority: Vec<Priority>,
    initial: usize,
    delta: Vec<Vec<Formula>>,
}

impl AltAutomaton {
    /// Builds and validates an automaton. In word mode diamond and box
    /// atoms are rewritten to next atoms; in tree mode next atoms are
    /// rejected.
    pub fn new(
        mode: Mode,
        alphabet: Vec<String>,
        states: Vec<String>,
        priority: Vec<Priority>,
        initial: usize,
        delta: Vec<Vec<Formula>>,
    ) -> Result<Self, AutomatonError> {
        if states.is_empty() {
            return Err(AutomatonError::NoStates);
        }
        if alphabet.is_empty() {
            return Err(AutomatonError::EmptyAlphabet);
        }
        if priority.len() != states.len() || delta.len() != states.len() {
            return Err(AutomatonError::LengthMismatch);
        }
        if initial >= states.len() {
            return Err(AutomatonError::BadInitial(initial));
        }
        check_unique(&states).map_err(AutomatonError::DuplicateState)?;
        check_unique(&alphabet).map_err(AutomatonError::DuplicateLetter)?;
        let n = states.len();
        let mut delta = delta;
        for (q, row) in delta.iter_mut().enumerate() {
            if row.len() != alphabet.len() {
                return Err(AutomatonError::MissingTransition {
                    state: states[q].clone(),
                    letter: alphabet[row.len().min(alphabet.len() - 1)].clone(),
                });
            }
            for f in row.iter_mut() {
                let mut bad = None;
                let mut next_in_tree = false;
                f.for_each_atom(&mut |m, t| {
                    if t >= n {
                        bad = Some(t);
                    }
                    if mode == Mode::Tree && m == Modality::Next {
                        next_in_tree = true;
                    }
                });
                if let Some(target) = bad {
                    return Err(AutomatonError::DanglingAtom {
                        state: states[q].clone(),
                        target,
                    });
                }
                if next_in_tree {
                    return Err(AutomatonError::NextInTree(states[q].clone()));
                }
                if mode == Mode::Word {
                    *f = f.substitute(&mut |_, t| Formula::next(t));
                }
            }
        }
        Ok(AltAutomaton {
            mode,
            alphabet,
            states,
            priority,
            initial,
            delta,
        })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn letter_index(&self, letter: &str) -> Option<usize> {
        self.alphabet.iter().position(|l| l == letter)
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn state_name(&self, q: usize) -> &str {
        &self.states[q]
    }

    pub fn state_names(&self) -> &[String] {
        &self.states
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
    }

    pub fn priority(&self, q: usize) -> Priority {
        self.priority[q]
    }

    pub fn priorities(&self) -> &[Priority] {
        &self.priority
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn delta(&self, q: usize, letter: usize) -> &Formula {
        &self.delta[q][letter]
    }

    pub fn max_priority(&self) -> Priority {
        self.priority.iter().copied().max().unwrap_or(0)
    }

    /// Largest number of nodes of a transition condition.
    pub fn max_formula_size(&self) -> usize {
        self.delta.iter().flatten().map(Formula::size).max().unwrap_or(0)
    }

    /// Total number of formula nodes over all transitions.
    pub fn total_formula_size(&self) -> usize {
        self.delta.iter().flatten().map(Formula::size).sum()
    }

    /// `q -> q'` iff `q'` occurs in some transition condition of `q`.
    pub fn transition_graph(&self) -> Vec<Vec<usize>> {
        self.delta
            .iter()
            .map(|row| {
                let mut succ: Vec<usize> = row.iter().flat_map(Formula::states).collect();
                succ.sort_unstable();
                succ.dedup();
                succ
            })
            .collect()
    }

    /// Every strongly connected component of the transition graph carries
    /// priorities of a single parity.
    pub fn is_weak(&self) -> bool {
        let g = self.transition_graph();
        graph::tarjan_scc(self.len(), |q| g[q].iter().copied())
            .iter()
            .all(|c| c.iter().all(|&q| self.priority[q] % 2 == self.priority[c[0]] % 2))
    }

    /// The complement automaton: operators and path quantifiers swapped,
    /// priorities raised by one.
    pub fn dual(&self) -> AltAutomaton {
        AltAutomaton {
            mode: self.mode,
            alphabet: self.alphabet.clone(),
            states: self.states.clone(),
            priority: self.priority.iter().map(|p| p + 1).collect(),
            initial: self.initial,
            delta: self
                .delta
                .iter()
                .map(|row| row.iter().map(Formula::dual).collect())
                .collect(),
        }
    }

    /// Keeps only the states reachable from the initial state.
    pub fn trim(&self) -> AltAutomaton {
        let g = self.transition_graph();
        let mut order = vec![self.initial];
        let mut index: HashMap<usize, usize> = HashMap::from([(self.initial, 0)]);
        let mut next = 0;
        while next < order.len() {
            for &t in &g[order[next]] {
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(t) {
                    e.insert(order.len());
                    order.push(t);
                }
            }
            next += 1;
        }
        let delta = order
            .iter()
            .map(|&q| {
                self.delta[q]
                    .iter()
                    .map(|f| f.substitute(&mut |m, t| Formula::atom(m, index[&t])))
                    .collect()
            })
            .collect();
        AltAutomaton {
            mode: self.mode,
            alphabet: self.alphabet.clone(),
            states: order.iter().map(|&q| self.states[q].clone()).collect(),
            priority: order.iter().map(|&q| self.priority[q]).collect(),
            initial: 0,
            delta,
        }
    }
}

fn check_unique(names: &[String]) -> Result<(), String> {
    let mut seen = std::collections::HashSet::new();
    for n in names {
        if !seen.insert(n.as_str()) {
            return Err(n.clone());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(ls: &[&str]) -> Vec<String> {
        ls.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn word_mode_normalises_atoms() {
        let a = AltAutomaton::new(
            Mode::Word,
            letters(&["a"]),
            letters(&["q"]),
            vec![1],
            0,
            vec![vec![Formula::atom(Modality::Diamond, 0)]],
        )
        .unwrap();
        assert_eq!(a.delta(0, 0), &Formula::next(0));
    }

    #[test]
    fn validation() {
        let bad = AltAutomaton::new(
            Mode::Tree,
            letters(&["a"]),
            letters(&["q"]),
            vec![1],
            0,
            vec![vec![Formula::next(0)]],
        );
        assert_eq!(bad, Err(AutomatonError::NextInTree("q".into())));
        let dangling = AltAutomaton::new(
            Mode::Word,
            letters(&["a"]),
            letters(&["q"]),
            vec![1],
            0,
            vec![vec![Formula::next(4)]],
        );
        assert!(matches!(dangling, Err(AutomatonError::DanglingAtom { target: 4, .. })));
    }

    #[test]
    fn weakness() {
        let cycle = |p: Priority, p2: Priority| {
            AltAutomaton::new(
                Mode::Word,
                letters(&["a"]),
                letters(&["x", "y"]),
                vec![p, p2],
                0,
                vec![vec![Formula::next(1)], vec![Formula::next(0)]],
            )
            .unwrap()
        };
        assert!(!cycle(1, 2).is_weak());
        assert!(cycle(1, 3).is_weak());
        assert_eq!(cycle(1, 2).dual().dual().priorities(), &[3, 4]);
        assert_eq!(cycle(1, 2).dual().priorities(), &[2, 3]);
    }
}
