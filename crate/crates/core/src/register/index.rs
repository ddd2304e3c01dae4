use std::str::FromStr;

use serde::Serialize;

use crate::arena::{edge_game_to_vertex_game, register_budget, ParityGame, Player, Vertex};
use crate::solvers::{solve_zielonka, spm_region};

use super::arena::{build_register_arena, build_register_arena_from, RegisterArena, RegisterError};
use super::RegisterState;

/// Solver applied to the vertex form of a register arena.
///
/// Small progress measures lift every position the controller loses all the
/// way to top, which takes time proportional to the product of the per
/// priority bounds; on arenas with thousands of positions per output
/// priority that is out of reach, so Zielonka is the default.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Backend {
    #[default]
    Zielonka,
    Spm,
}

impl FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "zielonka" => Ok(Backend::Zielonka),
            "spm" => Ok(Backend::Spm),
            other => Err(format!("unknown backend {other:?}")),
        }
    }
}

/// For every arena position, whether the controller wins from it.
pub fn controller_wins(arena: &RegisterArena, backend: Backend) -> Vec<bool> {
    let vertex_game = edge_game_to_vertex_game(arena.game());
    let mut won = match backend {
        Backend::Spm => spm_region(&vertex_game, arena.controller()).won,
        Backend::Zielonka => solve_zielonka(&vertex_game)
            .winner
            .into_iter()
            .map(|w| w == arena.controller())
            .collect(),
    };
    won.truncate(arena.len());
    won
}

/// Base vertices `v` from which the controller wins the k-register game
/// starting at `(v, 0...0, Choose)`.
pub fn solve_register_game(game: &ParityGame, k: usize, controller: Player) -> Vec<Vertex> {
    solve_register_game_with(game, k, controller, Backend::default())
}

pub fn solve_register_game_with(
    game: &ParityGame,
    k: usize,
    controller: Player,
    backend: Backend,
) -> Vec<Vertex> {
    let arena = build_register_arena(game, k, controller);
    let won = controller_wins(&arena, backend);
    (0..game.len()).filter(|&v| won[arena.initial_position(v)]).collect()
}

/// Whether the controller wins from each of `starts`.
pub fn solve_register_game_from(
    game: &ParityGame,
    k: usize,
    controller: Player,
    starts: &[RegisterState],
) -> Result<Vec<bool>, RegisterError> {
    let arena = build_register_arena_from(game, k, controller, starts)?;
    let won = controller_wins(&arena, Backend::default());
    Ok(starts
        .iter()
        .map(|s| won[arena.position(s).expect("start states are materialised")])
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegisterIndex {
    /// Largest per-vertex index.
    pub global: usize,
    /// Least k for which the winner of the vertex also wins the k-register
    /// game controlled by them.
    pub per_vertex: Vec<usize>,
    pub winner: Vec<Player>,
}

/// Register-index with the default caps: the register budget for Eve and
/// one more for Adam.
pub fn register_index(game: &ParityGame) -> Result<RegisterIndex, RegisterError> {
    let budget = register_budget(game);
    register_index_capped(game, budget, budget + 1)
}

/// Register-index by iterative deepening from k = 0, giving up with
/// [`RegisterError::CapExceeded`] once a side passes its cap.
pub fn register_index_capped(
    game: &ParityGame,
    eve_cap: usize,
    adam_cap: usize,
) -> Result<RegisterIndex, RegisterError> {
    let winner = solve_zielonka(game).winner;
    let mut per_vertex = vec![0; game.len()];
    for (player, cap) in [(Player::Eve, eve_cap), (Player::Adam, adam_cap)] {
        let mut open: Vec<Vertex> = game.vertices().filter(|&v| winner[v] == player).collect();
        let mut k = 0;
        while !open.is_empty() {
            if k > cap {
                return Err(RegisterError::CapExceeded {
                    player,
                    cap,
                    vertices: open,
                });
            }
            let won = solve_register_game(game, k, player);
            open.retain(|&v| {
                if won.binary_search(&v).is_ok() {
                    per_vertex[v] = k;
                    false
                } else {
                    true
                }
            });
            k += 1;
        }
    }
    Ok(RegisterIndex {
        global: per_vertex.iter().copied().max().unwrap_or(0),
        per_vertex,
        winner,
    })
}

/// Solves the game through the register game with `register_budget`
/// registers. Returns (Eve's region, Adam's region).
pub fn solve_via_registers(game: &ParityGame) -> (Vec<Vertex>, Vec<Vertex>) {
    let k = register_budget(game);
    let eve = solve_register_game(game, k, Player::Eve);
    let mut is_eve = vec![false; game.len()];
    for &v in &eve {
        is_eve[v] = true;
    }
    let adam = game.vertices().filter(|&v| !is_eve[v]).collect();
    (eve, adam)
}
