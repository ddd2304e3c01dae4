//! Baseline solvers: Zielonka's recursive algorithm (the reference oracle)
//! and small progress measures (the engine for register arenas), plus a
//! checker for positional strategies.

mod attractor;
mod spm;
mod verify;
mod zielonka;

pub use spm::{solve_spm, spm_region, Region};
pub use verify::{verify_positional_strategy, VerifyError};
pub use zielonka::solve_zielonka;

use crate::arena::{ParityGame, Player, Solution};

/// Checks both players' strategies of a solution on their regions.
pub fn verify_solution(game: &ParityGame, solution: &Solution) -> Result<bool, VerifyError> {
    for player in [Player::Eve, Player::Adam] {
        let strategy = solution.strategy_of(game, player);
        let region = solution.region(player);
        if !verify_positional_strategy(game, player, &strategy, &region)? {
            return Ok(false);
        }
    }
    Ok(true)
}
