//! Small progress measures, for max-parity games.
//!
//! A measure assigns each vertex a tuple indexed by the odd priorities
//! `1, 3, 5, ...`, compared lexicographically with the highest priority most
//! significant, or the top element. The component for odd priority `p` is
//! bounded by the number of vertices of priority `p`. Vertices whose least
//! fixpoint measure stays below top are won by Eve.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::arena::{ParityGame, Player, Priority, Solution, Vertex};

/// Solves the game with two lifting passes: one on the game for Eve's
/// region and strategy, one on the dual game for Adam's.
pub fn solve_spm(game: &ParityGame) -> Solution {
    let eve = spm_region(game, Player::Eve);
    let adam = spm_region(game, Player::Adam);
    let mut winner = Vec::with_capacity(game.len());
    let mut strategy = vec![None; game.len()];
    for v in game.vertices() {
        debug_assert_ne!(eve.won[v], adam.won[v], "regions must partition the arena");
        if eve.won[v] {
            winner.push(Player::Eve);
            if game.owner(v) == Player::Eve {
                strategy[v] = eve.strategy[v];
            }
        } else {
            winner.push(Player::Adam);
            if game.owner(v) == Player::Adam {
                strategy[v] = adam.strategy[v];
            }
        }
    }
    Solution { winner, strategy }
}

/// Winning region of one player, with a positional strategy on the region.
#[derive(Clone, Debug)]
pub struct Region {
    pub won: Vec<bool>,
    pub strategy: Vec<Option<Vertex>>,
}

/// Lifts progress measures for `player`; Adam's region is computed on the
/// dual game.
pub fn spm_region(game: &ParityGame, player: Player) -> Region {
    match player {
        Player::Eve => Lifter::new(game).run(),
        Player::Adam => Lifter::new(&game.dual()).run(),
    }
}

struct Lifter<'a> {
    game: &'a ParityGame,
    /// Number of odd-priority components.
    width: usize,
    /// Per-component bound, least significant (priority 1) first.
    bound: Vec<u32>,
    measure: Vec<u32>,
    top: Vec<bool>,
}

impl<'a> Lifter<'a> {
    fn new(game: &'a ParityGame) -> Self {
        let d = game.max_priority();
        let width = d.div_ceil(2) as usize;
        let mut bound = vec![0u32; width];
        for v in game.vertices() {
            let p = game.priority(v);
            if p % 2 == 1 {
                bound[(p / 2) as usize] += 1;
            }
        }
        Lifter {
            game,
            width,
            bound,
            measure: vec![0; game.len() * width],
            top: vec![false; game.len()],
        }
    }

    fn slice(&self, v: Vertex) -> &[u32] {
        &self.measure[v * self.width..(v + 1) * self.width]
    }

    /// Compares two measures on the components of priority at least `p`.
    fn compare_from(a: &[u32], b: &[u32], first: usize) -> Ordering {
        for j in (first..a.len()).rev() {
            match a[j].cmp(&b[j]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// The least measure `m` with `m >=_p mu(w)`, or `m >_p mu(w)` when `p`
    /// is odd, written into `out`. Returns false for top.
    fn prog(&self, p: Priority, w: Vertex, out: &mut [u32]) -> bool {
        if self.top[w] {
            return false;
        }
        let first = (p / 2) as usize;
        let src = self.slice(w);
        for j in 0..self.width {
            out[j] = if j >= first { src[j] } else { 0 };
        }
        if p % 2 == 1 {
            let mut j = first;
            loop {
                if j >= self.width {
                    return false;
                }
                if out[j] < self.bound[j] {
                    out[j] += 1;
                    return true;
                }
                out[j] = 0;
                j += 1;
            }
        }
        true
    }

    fn run(mut self) -> Region {
        let game = self.game;
        let n = game.len();
        let preds = game.predecessors();
        let mut strategy = vec![None; n];
        let mut queued = vec![true; n];
        let mut heap: BinaryHeap<Reverse<Vertex>> = (0..n).map(Reverse).collect();
        let mut candidate = vec![0u32; self.width];
        let mut best = vec![0u32; self.width];

        while let Some(Reverse(v)) = heap.pop() {
            queued[v] = false;
            if self.top[v] {
                continue;
            }
            let p = game.priority(v);
            let eve = game.owner(v) == Player::Eve;
            // best == None means top
            let mut best_is_top = eve;
            let mut have = false;
            for &w in game.successors(v) {
                let finite = self.prog(p, w, &mut candidate);
                let better = match (have, finite, best_is_top) {
                    (false, _, _) => true,
                    (true, false, true) => false,
                    (true, false, false) => !eve,
                    (true, true, true) => eve,
                    (true, true, false) => {
                        let ord = Self::compare_from(&candidate, &best, 0);
                        if eve {
                            ord == Ordering::Less
                        } else {
                            ord == Ordering::Greater
                        }
                    }
                };
                if better {
                    have = true;
                    best_is_top = !finite;
                    best.copy_from_slice(&candidate);
                }
            }
            let current_less = if best_is_top {
                true
            } else {
                Self::compare_from(self.slice(v), &best, 0) == Ordering::Less
            };
            if current_less {
                if best_is_top {
                    self.top[v] = true;
                } else {
                    let w = self.width;
                    self.measure[v * w..(v + 1) * w].copy_from_slice(&best);
                }
                for &u in &preds[v] {
                    if !queued[u] && !self.top[u] {
                        queued[u] = true;
                        heap.push(Reverse(u));
                    }
                }
            }
        }

        // Eve's strategy: a successor minimising prog.
        for (v, slot) in strategy.iter_mut().enumerate() {
            if self.top[v] || game.owner(v) != Player::Eve {
                continue;
            }
            let p = game.priority(v);
            let mut chosen: Option<Vertex> = None;
            for &w in game.successors(v) {
                if !self.prog(p, w, &mut candidate) {
                    continue;
                }
                let improves = match chosen {
                    None => true,
                    Some(_) => Self::compare_from(&candidate, &best, 0) == Ordering::Less,
                };
                if improves {
                    chosen = Some(w);
                    best.copy_from_slice(&candidate);
                }
            }
            *slot = chosen;
        }

        Region {
            won: self.top.iter().map(|t| !t).collect(),
            strategy,
        }
    }
}
