//! Alternating parity automata on words and regular trees.

pub mod acceptance;
pub mod automaton;
pub mod formula;
pub mod fvs;
pub mod kripke;
pub mod parameterised;
pub mod pd;
pub mod product;
pub mod random;
pub mod text;
pub mod weak;

pub use acceptance::{acceptance_game, accepts, AcceptanceGame, Component};
pub use automaton::{AltAutomaton, AutomatonError, Mode};
pub use formula::{Formula, Modality};
pub use fvs::{fvs_register_budget, max_component_fvs};
pub use kripke::{
    game_alphabet, game_to_kripke, lasso_to_kripke, parse_lasso, GameLetter, KripkeError,
    KripkeStructure, LassoError, LassoWord,
};
pub use parameterised::{build_parameterised, build_parameterised_with, parameterised_state_bound, Variant};
pub use pd::build_pd;
pub use product::{sync_product, ProductError};
pub use text::{format_formula, parse_automaton, write_automaton, AutParseError};
pub use weak::{apw_to_aww, apw_to_aww_with, size_bound, WeakReport, WeakenError, WeakenOptions};
pub use random::{random_apw, random_lasso};

/// Whether every strongly connected component of the transition graph of
/// `a` has priorities of one parity.
pub fn is_weak(a: &AltAutomaton) -> bool {
    a.is_weak()
}
