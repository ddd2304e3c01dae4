use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arena::{ParityGame, Player, Priority, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KripkeError {
    #[error("vertex {0} has no successors")]
    NoSuccessors(usize),
    #[error("vertex {vertex} has successor {target} out of range")]
    DanglingSuccessor { vertex: usize, target: usize },
    #[error("label {0} is not in the alphabet")]
    BadLabel(usize),
    #[error("initial vertex {0} out of range")]
    BadInitial(usize),
    #[error("per-vertex tables disagree in length")]
    LengthMismatch,
    #[error("structure has no vertices")]
    Empty,
}

/// Finite labelled graph with an initial vertex; it stands for its tree
/// unfolding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KripkeStructure {
    alphabet: Vec<String>,
    labels: Vec<usize>,
    successors: Vec<Vec<usize>>,
    initial: usize,
}

impl KripkeStructure {
    pub fn new(
        alphabet: Vec<String>,
        labels: Vec<usize>,
        successors: Vec<Vec<usize>>,
        initial: usize,
    ) -> Result<Self, KripkeError> {
        let n = labels.len();
        if n == 0 {
            return Err(KripkeError::Empty);
        }
        if successors.len() != n {
            return Err(KripkeError::LengthMismatch);
        }
        if initial >= n {
            return Err(KripkeError::BadInitial(initial));
        }
        if let Some(&l) = labels.iter().find(|&&l| l >= alphabet.len()) {
            return Err(KripkeError::BadLabel(l));
        }
        for (v, succ) in successors.iter().enumerate() {
            if succ.is_empty() {
                return Err(KripkeError::NoSuccessors(v));
            }
            if let Some(&t) = succ.iter().find(|&&t| t >= n) {
                return Err(KripkeError::DanglingSuccessor { vertex: v, target: t });
            }
        }
        Ok(KripkeStructure {
            alphabet,
            labels,
            successors,
            initial,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn label(&self, v: usize) -> &str {
        &self.alphabet[self.labels[v]]
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.successors[v]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.successors
    }

    pub fn initial(&self) -> usize {
        self.initial
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LassoError {
    #[error("lasso must have the form <prefix>:<loop>")]
    MissingColon,
    #[error("the loop of a lasso must not be empty")]
    EmptyLoop,
}

/// Ultimately periodic word `prefix loop loop ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LassoWord {
    pub prefix: Vec<String>,
    pub cycle: Vec<String>,
}

impl LassoWord {
    pub fn new(prefix: Vec<String>, cycle: Vec<String>) -> Result<Self, LassoError> {
        if cycle.is_empty() {
            return Err(LassoError::EmptyLoop);
        }
        Ok(LassoWord { prefix, cycle })
    }

    /// The letter at position `i` of the infinite word.
    pub fn letter(&self, i: usize) -> &str {
        if i < self.prefix.len() {
            &self.prefix[i]
        } else {
            &self.cycle[(i - self.prefix.len()) % self.cycle.len()]
        }
    }
}

fn split_letters(s: &str, separated: bool) -> Vec<String> {
    if separated {
        s.split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(str::to_string)
            .collect()
    } else {
        s.chars().map(|c| c.to_string()).collect()
    }
}

impl FromStr for LassoWord {
    type Err = LassoError;

    /// `<prefix>:<loop>`. Letters are single characters, or separated by
    /// commas or spaces when either appears.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (prefix, cycle) = s.split_once(':').ok_or(LassoError::MissingColon)?;
        let separated = s.contains([',', ' ']);
        LassoWord::new(split_letters(prefix, separated), split_letters(cycle, separated))
    }
}

impl fmt::Display for LassoWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let single = self.prefix.iter().chain(&self.cycle).all(|l| l.chars().count() == 1);
        let sep = if single { "" } else { "," };
        write!(f, "{}:{}", self.prefix.join(sep), self.cycle.join(sep))
    }
}

pub fn parse_lasso(s: &str) -> Result<LassoWord, LassoError> {
    s.parse()
}

/// A path through the prefix that closes into a cycle over the loop.
pub fn lasso_to_kripke(w: &LassoWord) -> KripkeStructure {
    let mut alphabet: Vec<String> = Vec::new();
    let mut labels = Vec::new();
    for l in w.prefix.iter().chain(&w.cycle) {
        let idx = match alphabet.iter().position(|a| a == l) {
            Some(i) => i,
            None => {
                alphabet.push(l.clone());
                alphabet.len() - 1
            }
        };
        labels.push(idx);
    }
    let n = labels.len();
    let loop_start = w.prefix.len();
    let successors = (0..n)
        .map(|v| vec![if v + 1 < n { v + 1 } else { loop_start }])
        .collect();
    KripkeStructure::new(alphabet, labels, successors, 0).expect("lassos are well formed")
}

/// A letter `E_i` or `A_i` of the game alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GameLetter {
    pub owner: Player,
    pub priority: Priority,
}

impl fmt::Display for GameLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.owner {
            Player::Eve => 'E',
            Player::Adam => 'A',
        };
        write!(f, "{tag}{}", self.priority)
    }
}

impl FromStr for GameLetter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let owner = match s.chars().next() {
            Some('E') => Player::Eve,
            Some('A') => Player::Adam,
            _ => return Err(format!("{s:?} is not a game letter")),
        };
        let priority = s[1..]
            .parse()
            .map_err(|_| format!("{s:?} is not a game letter"))?;
        Ok(GameLetter { owner, priority })
    }
}

/// `E0 .. Ed A0 .. Ad`.
pub fn game_alphabet(d: Priority) -> Vec<String> {
    let eve = (0..=d).map(|p| GameLetter {
        owner: Player::Eve,
        priority: p,
    });
    let adam = (0..=d).map(|p| GameLetter {
        owner: Player::Adam,
        priority: p,
    });
    eve.chain(adam).map(|l| l.to_string()).collect()
}

/// Encodes a game as a structure over the game alphabet of its maximal
/// priority: vertex `v` is labelled `E_p` or `A_p` by owner and priority.
pub fn game_to_kripke(game: &ParityGame, initial: Vertex) -> KripkeStructure {
    let d = game.max_priority();
    let labels = game
        .vertices()
        .map(|v| match game.owner(v) {
            Player::Eve => game.priority(v) as usize,
            Player::Adam => (d + 1 + game.priority(v)) as usize,
        })
        .collect();
    KripkeStructure::new(game_alphabet(d), labels, game.adjacency().to_vec(), initial)
        .expect("games have successors")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lasso_shapes() {
        let k = lasso_to_kripke(&":a".parse().unwrap());
        assert_eq!(k.len(), 1);
        assert_eq!(k.successors(0), &[0]);
        let k = lasso_to_kripke(&"a:bc".parse().unwrap());
        assert_eq!(k.len(), 3);
        assert_eq!(k.adjacency(), &[vec![1], vec![2], vec![1]]);
        assert_eq!((k.label(0), k.label(1), k.label(2)), ("a", "b", "c"));
    }

    #[test]
    fn lasso_syntax() {
        let w: LassoWord = "E0,A1:E2".parse().unwrap();
        assert_eq!(w.prefix, vec!["E0", "A1"]);
        assert_eq!(w.to_string(), "E0,A1:E2");
        assert_eq!("ab".parse::<LassoWord>(), Err(LassoError::MissingColon));
        assert_eq!("ab:".parse::<LassoWord>(), Err(LassoError::EmptyLoop));
        let w: LassoWord = "ab:c".parse().unwrap();
        assert_eq!(w.letter(5), "c");
        assert_eq!(w.to_string(), "ab:c");
    }

    #[test]
    fn game_letters() {
        assert_eq!(game_alphabet(1), vec!["E0", "E1", "A0", "A1"]);
        let l: GameLetter = "A3".parse().unwrap();
        assert_eq!(l, GameLetter { owner: Player::Adam, priority: 3 });
        assert!("B3".parse::<GameLetter>().is_err());
    }
}
