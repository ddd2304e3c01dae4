//! k-register games.
//!
//! A position of the k-register game over `G` is `(v, r, t)`: a vertex of
//! `G`, a vector of `k + 1` registers holding priorities of `G`, and a turn
//! flag. On a [`Turn::Choose`] position the controller of the registers picks
//! a register `i`; this resets the registers below `i`, stores the current
//! priority in `r_i` and folds it into the registers above, and emits an
//! output priority. On a [`Turn::Move`] position the owner of `v` moves in
//! `G`. The winner is decided by the parity of the outputs.

mod arena;
mod index;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arena::{Player, Priority, Vertex};

pub use arena::{build_register_arena, build_register_arena_from, RegisterArena, RegisterError};
pub use index::{
    controller_wins, register_index, register_index_capped, solve_register_game,
    solve_register_game_from, solve_register_game_with, solve_via_registers, Backend,
    RegisterIndex,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Turn {
    /// The register controller picks a register.
    Choose,
    /// The owner of the base vertex moves.
    Move,
}

impl Turn {
    pub fn code(self) -> u8 {
        match self {
            Turn::Choose => 0,
            Turn::Move => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RegisterState {
    pub base: Vertex,
    pub regs: Vec<Priority>,
    pub turn: Turn,
}

impl RegisterState {
    /// `(v, 0...0, Choose)` with `k + 1` registers.
    pub fn initial(base: Vertex, k: usize) -> Self {
        RegisterState {
            base,
            regs: vec![0; k + 1],
            turn: Turn::Choose,
        }
    }
}

impl fmt::Display for RegisterState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},[", self.base)?;
        for (j, r) in self.regs.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "],{})", self.turn.code())
    }
}

/// Register update after choosing register `i` on seeing priority `p`.
pub fn new_registers(regs: &[Priority], i: usize, p: Priority) -> Vec<Priority> {
    regs.iter()
        .enumerate()
        .map(|(j, &r)| match j.cmp(&i) {
            std::cmp::Ordering::Less => 0,
            std::cmp::Ordering::Equal => p,
            std::cmp::Ordering::Greater => r.max(p),
        })
        .collect()
}

/// Output priority of choosing register `i` on seeing priority `p`.
///
/// With Eve in control the output is `2i` if `max(r_i, p)` is even and
/// `2i + 1` otherwise. With Adam in control the output is `2i + 2` if `r_i`
/// itself is even and `2i + 1` otherwise.
pub fn output_priority(controller: Player, regs: &[Priority], i: usize, p: Priority) -> Priority {
    let i = i as Priority;
    match controller {
        Player::Eve => {
            if regs[i as usize].max(p).is_multiple_of(2) {
                2 * i
            } else {
                2 * i + 1
            }
        }
        Player::Adam => {
            if regs[i as usize].is_multiple_of(2) {
                2 * i + 2
            } else {
                2 * i + 1
            }
        }
    }
}
