use std::collections::HashMap;

use crate::arena::{ParityGame, Player, Vertex};
use crate::solvers::solve_zielonka;

use super::automaton::{AltAutomaton, AutomatonError};
use super::formula::{Formula, Modality};
use super::kripke::KripkeStructure;

/// Automaton component of an acceptance-game position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Component {
    State(usize),
    Formula(Formula),
}

/// The acceptance game of a structure and an automaton, restricted to the
/// positions reachable from `(initial vertex, initial state)`, which is
/// position 0.
#[derive(Clone, Debug)]
pub struct AcceptanceGame {
    pub game: ParityGame,
    pub positions: Vec<(usize, Component)>,
}

impl AcceptanceGame {
    pub fn initial(&self) -> Vertex {
        0
    }
}

/// Builds the acceptance game. State positions carry the state's priority
/// and lead to the transition condition of the vertex label; disjunctions
/// and conjunctions lead to their operands; atoms lead to the successors of
/// the vertex. Adam owns conjunctions and box atoms.
pub fn acceptance_game(
    s: &KripkeStructure,
    a: &AltAutomaton,
) -> Result<AcceptanceGame, AutomatonError> {
    let letters = s
        .alphabet()
        .iter()
        .map(|l| a.letter_index(l).ok_or_else(|| AutomatonError::UnknownLetter(l.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    let letter_of = |v: usize| letters[s.alphabet().iter().position(|l| l == s.label(v)).unwrap()];

    let mut positions: Vec<(usize, Component)> = Vec::new();
    let mut index: HashMap<(usize, Component), Vertex> = HashMap::new();
    let mut intern = |key: (usize, Component), positions: &mut Vec<(usize, Component)>| {
        if let Some(&p) = index.get(&key) {
            return p;
        }
        let p = positions.len();
        index.insert(key.clone(), p);
        positions.push(key);
        p
    };
    intern((s.initial(), Component::State(a.initial())), &mut positions);

    let mut owner = Vec::new();
    let mut priority = Vec::new();
    let mut successors = Vec::new();
    let mut next = 0;
    while next < positions.len() {
        let (v, c) = positions[next].clone();
        let mut succ = Vec::new();
        match &c {
            Component::State(q) => {
                owner.push(Player::Eve);
                priority.push(a.priority(*q));
                let f = a.delta(*q, letter_of(v)).clone();
                succ.push(intern((v, Component::Formula(f)), &mut positions));
            }
            Component::Formula(f) => {
                priority.push(0);
                match f {
                    Formula::Atom(m, q) => {
                        owner.push(if *m == Modality::Box {
                            Player::Adam
                        } else {
                            Player::Eve
                        });
                        for &w in s.successors(v) {
                            succ.push(intern((w, Component::State(*q)), &mut positions));
                        }
                    }
                    Formula::And(bs) | Formula::Or(bs) => {
                        owner.push(if matches!(f, Formula::And(_)) {
                            Player::Adam
                        } else {
                            Player::Eve
                        });
                        for b in bs {
                            succ.push(intern((v, Component::Formula(b.clone())), &mut positions));
                        }
                    }
                }
            }
        }
        succ.dedup();
        successors.push(succ);
        next += 1;
    }
    let game = ParityGame::new(owner, priority, successors).expect("acceptance games are well formed");
    Ok(AcceptanceGame { game, positions })
}

/// Whether Eve wins the acceptance game from its initial position.
pub fn accepts(s: &KripkeStructure, a: &AltAutomaton) -> Result<bool, AutomatonError> {
    let g = acceptance_game(s, a)?;
    Ok(solve_zielonka(&g.game).winner[g.initial()] == Player::Eve)
}
