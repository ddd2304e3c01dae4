//! Parity game arenas.
//!
//! Games are max-parity games: Eve wins a play iff the largest priority seen
//! infinitely often is even. Vertices are dense indices `0..n`.

mod pgsolver;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph;

pub use pgsolver::{parse_pgsolver, write_pgsolver, PgParseError};

pub type Vertex = usize;
pub type Priority = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Player {
    Eve,
    Adam,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Eve => Player::Adam,
            Player::Adam => Player::Eve,
        }
    }

    /// The player favoured by a priority: Eve for even, Adam for odd.
    pub fn of_priority(p: Priority) -> Player {
        if p.is_multiple_of(2) {
            Player::Eve
        } else {
            Player::Adam
        }
    }

    /// PGSolver owner code: 0 for Eve, 1 for Adam.
    pub fn code(self) -> u8 {
        match self {
            Player::Eve => 0,
            Player::Adam => 1,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Eve => "Eve",
            Player::Adam => "Adam",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArenaError {
    #[error("vertex {0} has no successors")]
    NoSuccessors(Vertex),
    #[error("vertex {vertex} has successor {target} outside 0..{len}")]
    DanglingSuccessor {
        vertex: Vertex,
        target: Vertex,
        len: usize,
    },
    #[error("per-vertex tables disagree in length")]
    LengthMismatch,
}

/// A finite parity game with priorities on vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityGame {
    owner: Vec<Player>,
    priority: Vec<Priority>,
    successors: Vec<Vec<Vertex>>,
    names: Vec<Option<String>>,
}

impl ParityGame {
    pub fn new(
        owner: Vec<Player>,
        priority: Vec<Priority>,
        successors: Vec<Vec<Vertex>>,
    ) -> Result<Self, ArenaError> {
        let names = vec![None; owner.len()];
        Self::with_names(owner, priority, successors, names)
    }

    pub fn with_names(
        owner: Vec<Player>,
        priority: Vec<Priority>,
        successors: Vec<Vec<Vertex>>,
        names: Vec<Option<String>>,
    ) -> Result<Self, ArenaError> {
        let n = owner.len();
        if priority.len() != n || successors.len() != n || names.len() != n {
            return Err(ArenaError::LengthMismatch);
        }
        check_successors(successors.iter().map(|s| s.iter().copied()), n)?;
        Ok(ParityGame {
            owner,
            priority,
            successors,
            names,
        })
    }

    pub fn len(&self) -> usize {
        self.owner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.owner.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.len()
    }

    pub fn owner(&self, v: Vertex) -> Player {
        self.owner[v]
    }

    pub fn priority(&self, v: Vertex) -> Priority {
        self.priority[v]
    }

    pub fn successors(&self, v: Vertex) -> &[Vertex] {
        &self.successors[v]
    }

    pub fn name(&self, v: Vertex) -> Option<&str> {
        self.names[v].as_deref()
    }

    pub fn set_name(&mut self, v: Vertex, name: Option<String>) {
        self.names[v] = name;
    }

    pub fn edge_count(&self) -> usize {
        self.successors.iter().map(Vec::len).sum()
    }

    /// Largest priority `d`; 0 for the empty game.
    pub fn max_priority(&self) -> Priority {
        self.priority.iter().copied().max().unwrap_or(0)
    }

    /// Lower end of the co-domain: 0 if some vertex has priority 0, else 1.
    pub fn min_priority(&self) -> Priority {
        if self.priority.contains(&0) || self.is_empty() {
            0
        } else {
            1
        }
    }

    pub fn adjacency(&self) -> &[Vec<Vertex>] {
        &self.successors
    }

    pub fn predecessors(&self) -> Vec<Vec<Vertex>> {
        let mut preds = vec![Vec::new(); self.len()];
        for v in self.vertices() {
            for &w in &self.successors[v] {
                preds[w].push(v);
            }
        }
        preds
    }

    /// The dual game: owners swapped and every priority raised by one, so
    /// the winning regions swap.
    pub fn dual(&self) -> ParityGame {
        ParityGame {
            owner: self.owner.iter().map(|p| p.opponent()).collect(),
            priority: self.priority.iter().map(|p| p + 1).collect(),
            successors: self.successors.clone(),
            names: self.names.clone(),
        }
    }

    /// Number of distinct priorities in use.
    pub fn distinct_priorities(&self) -> usize {
        let mut seen: Vec<Priority> = self.priority.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// A finite parity game with priorities on edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeGame {
    owner: Vec<Player>,
    edges: Vec<Vec<(Vertex, Priority)>>,
    names: Vec<Option<String>>,
}

impl EdgeGame {
    pub fn new(owner: Vec<Player>, edges: Vec<Vec<(Vertex, Priority)>>) -> Result<Self, ArenaError> {
        let names = vec![None; owner.len()];
        Self::with_names(owner, edges, names)
    }

    pub fn with_names(
        owner: Vec<Player>,
        edges: Vec<Vec<(Vertex, Priority)>>,
        names: Vec<Option<String>>,
    ) -> Result<Self, ArenaError> {
        let n = owner.len();
        if edges.len() != n || names.len() != n {
            return Err(ArenaError::LengthMismatch);
        }
        check_successors(edges.iter().map(|s| s.iter().map(|&(w, _)| w)), n)?;
        Ok(EdgeGame { owner, edges, names })
    }

    pub fn len(&self) -> usize {
        self.owner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.owner.is_empty()
    }

    pub fn owner(&self, v: Vertex) -> Player {
        self.owner[v]
    }

    pub fn edges(&self, v: Vertex) -> &[(Vertex, Priority)] {
        &self.edges[v]
    }

    pub fn name(&self, v: Vertex) -> Option<&str> {
        self.names[v].as_deref()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    pub fn max_priority(&self) -> Priority {
        self.edges
            .iter()
            .flatten()
            .map(|&(_, p)| p)
            .max()
            .unwrap_or(0)
    }

    pub fn adjacency(&self) -> Vec<Vec<Vertex>> {
        self.edges
            .iter()
            .map(|es| es.iter().map(|&(w, _)| w).collect())
            .collect()
    }
}

fn check_successors<I, J>(lists: I, n: usize) -> Result<(), ArenaError>
where
    I: Iterator<Item = J>,
    J: Iterator<Item = Vertex>,
{
    for (v, list) in lists.enumerate() {
        let mut any = false;
        for w in list {
            any = true;
            if w >= n {
                return Err(ArenaError::DanglingSuccessor {
                    vertex: v,
                    target: w,
                    len: n,
                });
            }
        }
        if !any {
            return Err(ArenaError::NoSuccessors(v));
        }
    }
    Ok(())
}

/// Winning regions of both players with positional strategies.
///
/// `strategy[v]` is set exactly when `v` belongs to the player who wins it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub winner: Vec<Player>,
    pub strategy: Vec<Option<Vertex>>,
}

impl Solution {
    pub fn region(&self, player: Player) -> Vec<Vertex> {
        (0..self.winner.len())
            .filter(|&v| self.winner[v] == player)
            .collect()
    }

    pub fn win_eve(&self) -> Vec<Vertex> {
        self.region(Player::Eve)
    }

    pub fn win_adam(&self) -> Vec<Vertex> {
        self.region(Player::Adam)
    }

    /// Positional strategy of `player` on their own winning vertices.
    pub fn strategy_of(&self, game: &ParityGame, player: Player) -> Vec<Option<Vertex>> {
        (0..self.winner.len())
            .map(|v| {
                if self.winner[v] == player && game.owner(v) == player {
                    self.strategy[v]
                } else {
                    None
                }
            })
            .collect()
    }
}

/// Converts edge priorities to vertex priorities.
///
/// Original vertices keep their indices `0..n` and get priority 0. Every edge
/// of nonzero priority is routed through a fresh vertex carrying that
/// priority, owned by the edge's source owner; priority-0 edges stay direct.
pub fn edge_game_to_vertex_game(g: &EdgeGame) -> ParityGame {
    let n = g.len();
    let mut owner = g.owner.clone();
    let mut priority = vec![0; n];
    let mut names = g.names.clone();
    let mut successors: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for v in 0..n {
        for &(w, p) in &g.edges[v] {
            if p == 0 {
                successors[v].push(w);
            } else {
                let mid = owner.len();
                owner.push(g.owner[v]);
                priority.push(p);
                names.push(None);
                successors.push(vec![w]);
                successors[v].push(mid);
            }
        }
    }
    ParityGame {
        owner,
        priority,
        successors,
        names,
    }
}

/// Strongly connected components, in reverse topological order of the
/// condensation (sink components first).
pub fn scc_decompose(game: &ParityGame) -> Vec<Vec<Vertex>> {
    graph::tarjan_scc(game.len(), |v| game.successors[v].iter().copied())
}

/// Anything with a successor relation over `0..n`.
pub trait GameGraph {
    fn vertex_count(&self) -> usize;
    fn successor_lists(&self) -> Vec<Vec<Vertex>>;
}

impl GameGraph for ParityGame {
    fn vertex_count(&self) -> usize {
        self.len()
    }
    fn successor_lists(&self) -> Vec<Vec<Vertex>> {
        self.successors.clone()
    }
}

impl GameGraph for EdgeGame {
    fn vertex_count(&self) -> usize {
        self.len()
    }
    fn successor_lists(&self) -> Vec<Vec<Vertex>> {
        self.adjacency()
    }
}

/// Upper bound used for the number of vertex-disjoint cycles.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CycleBound {
    /// The vertex count.
    #[default]
    Vertices,
    /// The size of a greedily computed feedback vertex set (never larger
    /// than the vertex count).
    FeedbackVertexSet,
}

/// `1 + ceil(log2 z)` where `z` bounds the number of vertex-disjoint cycles
/// from above. This many registers always suffice for Eve.
pub fn register_budget<G: GameGraph + ?Sized>(game: &G) -> usize {
    register_budget_with(game, CycleBound::Vertices)
}

pub fn register_budget_with<G: GameGraph + ?Sized>(game: &G, bound: CycleBound) -> usize {
    let z = match bound {
        CycleBound::Vertices => game.vertex_count(),
        CycleBound::FeedbackVertexSet => {
            graph::greedy_feedback_vertex_set(&game.successor_lists()).len()
        }
    };
    1 + graph::ceil_log2(z.max(1)) as usize
}
