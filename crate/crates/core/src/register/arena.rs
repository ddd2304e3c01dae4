use std::collections::HashMap;

use thiserror::Error;

use crate::arena::{edge_game_to_vertex_game, EdgeGame, ParityGame, Player, Priority, Vertex};

use super::{new_registers, output_priority, RegisterState, Turn};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegisterError {
    #[error("state {state} does not fit a {k}-register game with priorities up to {d} over {n} vertices")]
    InvalidState {
        state: RegisterState,
        k: usize,
        d: Priority,
        n: usize,
    },
    #[error("{player} still has unresolved vertices {vertices:?} at the cap k = {cap}")]
    CapExceeded {
        player: Player,
        cap: usize,
        vertices: Vec<Vertex>,
    },
}

/// The reachable part of a k-register game, as an edge-priority game.
///
/// Positions `0..n` are the initial states `(v, 0...0, Choose)` in vertex
/// order; further positions follow in discovery order.
#[derive(Clone, Debug)]
pub struct RegisterArena {
    k: usize,
    controller: Player,
    base_len: usize,
    base_max_priority: Priority,
    game: EdgeGame,
    states: Vec<RegisterState>,
    index: HashMap<RegisterState, Vertex>,
}

impl RegisterArena {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn controller(&self) -> Player {
        self.controller
    }

    pub fn game(&self) -> &EdgeGame {
        &self.game
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn state(&self, position: Vertex) -> &RegisterState {
        &self.states[position]
    }

    pub fn states(&self) -> &[RegisterState] {
        &self.states
    }

    pub fn position(&self, state: &RegisterState) -> Option<Vertex> {
        self.index.get(state).copied()
    }

    /// Position of `(v, 0...0, Choose)`.
    pub fn initial_position(&self, v: Vertex) -> Vertex {
        debug_assert!(v < self.base_len);
        v
    }

    /// Vertex count of the underlying game.
    pub fn base_len(&self) -> usize {
        self.base_len
    }

    /// Largest priority of the underlying game.
    pub fn base_max_priority(&self) -> Priority {
        self.base_max_priority
    }

    /// `2 n (d + 1)^(k + 1)`, the bound on the number of reachable states.
    pub fn state_bound(&self) -> f64 {
        2.0 * self.base_len as f64 * (self.base_max_priority as f64 + 1.0).powi(self.k as i32 + 1)
    }

    /// Vertex-priority form; arena positions keep their indices and are
    /// named `(v,[r0,...,rk],t)`.
    pub fn to_vertex_game(&self) -> ParityGame {
        let mut g = edge_game_to_vertex_game(&self.game);
        for (p, s) in self.states.iter().enumerate() {
            g.set_name(p, Some(s.to_string()));
        }
        g
    }
}

/// Builds the positions reachable from `(v, 0...0, Choose)` for every `v`.
pub fn build_register_arena(game: &ParityGame, k: usize, controller: Player) -> RegisterArena {
    build_register_arena_from(game, k, controller, &[]).expect("initial states are valid")
}

/// Like [`build_register_arena`], additionally exploring from `extra`
/// starting states, which may carry arbitrary register contents.
pub fn build_register_arena_from(
    game: &ParityGame,
    k: usize,
    controller: Player,
    extra: &[RegisterState],
) -> Result<RegisterArena, RegisterError> {
    let n = game.len();
    let d = game.max_priority();
    for s in extra {
        if s.base >= n || s.regs.len() != k + 1 || s.regs.iter().any(|&r| r > d) {
            return Err(RegisterError::InvalidState {
                state: s.clone(),
                k,
                d,
                n,
            });
        }
    }

    let mut states: Vec<RegisterState> = Vec::new();
    let mut index: HashMap<RegisterState, Vertex> = HashMap::new();
    let mut intern = |s: RegisterState, states: &mut Vec<RegisterState>| -> Vertex {
        if let Some(&p) = index.get(&s) {
            return p;
        }
        let p = states.len();
        index.insert(s.clone(), p);
        states.push(s);
        p
    };
    for v in 0..n {
        intern(RegisterState::initial(v, k), &mut states);
    }
    for s in extra {
        intern(s.clone(), &mut states);
    }

    let mut owner = Vec::new();
    let mut edges: Vec<Vec<(Vertex, Priority)>> = Vec::new();
    let mut next = 0;
    while next < states.len() {
        let s = states[next].clone();
        let v = s.base;
        let mut out = Vec::new();
        match s.turn {
            Turn::Choose => {
                owner.push(controller);
                let p = game.priority(v);
                for i in 0..=k {
                    let target = RegisterState {
                        base: v,
                        regs: new_registers(&s.regs, i, p),
                        turn: Turn::Move,
                    };
                    let q = intern(target, &mut states);
                    out.push((q, output_priority(controller, &s.regs, i, p)));
                }
            }
            Turn::Move => {
                owner.push(game.owner(v));
                for &w in game.successors(v) {
                    let target = RegisterState {
                        base: w,
                        regs: s.regs.clone(),
                        turn: Turn::Choose,
                    };
                    out.push((intern(target, &mut states), 0));
                }
            }
        }
        edges.push(out);
        next += 1;
    }

    let game_out = EdgeGame::new(owner, edges).expect("register arena is well formed");
    Ok(RegisterArena {
        k,
        controller,
        base_len: n,
        base_max_priority: d,
        game: game_out,
        states,
        index,
    })
}
