use crate::arena::Priority;

use super::automaton::{AltAutomaton, Mode};
use super::formula::{Formula, Modality};
use super::kripke::game_alphabet;

/// The tree automaton `P^d` over the game alphabet: states `0..=d`, state
/// `i` has priority `i`, and on `E_i` (resp. `A_i`) every state moves to
/// `<> i` (resp. `[] i`). It accepts exactly the encodings of games won by
/// Eve from the root.
pub fn build_pd(d: Priority) -> AltAutomaton {
    let n = d as usize + 1;
    let row: Vec<Formula> = (0..n)
        .map(|i| Formula::atom(Modality::Diamond, i))
        .chain((0..n).map(|i| Formula::atom(Modality::Box, i)))
        .collect();
    AltAutomaton::new(
        Mode::Tree,
        game_alphabet(d),
        (0..n).map(|i| i.to_string()).collect(),
        (0..=d).collect(),
        0,
        vec![row; n],
    )
    .expect("P^d is well formed")
}
