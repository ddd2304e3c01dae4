//! Zielonka's recursive algorithm.

use crate::arena::{ParityGame, Player, Solution, Vertex};

use super::attractor::attractor;

/// Games above this size are solved on a thread with a larger stack, since
/// the recursion depth can grow with the number of vertices.
const BIG_STACK_THRESHOLD: usize = 4_000;

/// Solves the game exactly, with positional strategies for both players.
pub fn solve_zielonka(game: &ParityGame) -> Solution {
    if game.len() > BIG_STACK_THRESHOLD {
        let game = game.clone();
        return std::thread::Builder::new()
            .stack_size(512 << 20)
            .spawn(move || Zielonka::new(&game).run())
            .expect("spawn solver thread")
            .join()
            .expect("solver thread panicked");
    }
    Zielonka::new(game).run()
}

struct Zielonka<'a> {
    game: &'a ParityGame,
    predecessors: Vec<Vec<Vertex>>,
    winner: Vec<Player>,
    strategy: Vec<Option<Vertex>>,
}

impl<'a> Zielonka<'a> {
    fn new(game: &'a ParityGame) -> Self {
        Zielonka {
            game,
            predecessors: game.predecessors(),
            winner: vec![Player::Eve; game.len()],
            strategy: vec![None; game.len()],
        }
    }

    fn run(mut self) -> Solution {
        let all: Vec<Vertex> = self.game.vertices().collect();
        let (_, won_adam) = self.solve(&all);
        for v in won_adam {
            self.winner[v] = Player::Adam;
        }
        // strategies are only meaningful for the winner's own vertices
        for v in self.game.vertices() {
            if self.game.owner(v) != self.winner[v] {
                self.strategy[v] = None;
            }
        }
        Solution {
            winner: self.winner,
            strategy: self.strategy,
        }
    }

    fn mask(&self, vertices: &[Vertex]) -> Vec<bool> {
        let mut m = vec![false; self.game.len()];
        for &v in vertices {
            m[v] = true;
        }
        m
    }

    /// Returns (Eve's region, Adam's region) of the subgame induced by `sub`,
    /// writing strategies for every vertex won by its owner.
    fn solve(&mut self, sub: &[Vertex]) -> (Vec<Vertex>, Vec<Vertex>) {
        if sub.is_empty() {
            return (Vec::new(), Vec::new());
        }
        let game = self.game;
        let top = sub.iter().map(|&v| game.priority(v)).max().unwrap();
        let alpha = Player::of_priority(top);
        let inside = self.mask(sub);
        let top_vertices: Vec<Vertex> = sub.iter().copied().filter(|&v| game.priority(v) == top).collect();
        let (attr, attr_strategy) = attractor(game, &self.predecessors, &inside, &top_vertices, alpha);
        let rest: Vec<Vertex> = sub.iter().copied().filter(|&v| !attr[v]).collect();
        let (w_eve, w_adam) = self.solve(&rest);
        let w_opp = match alpha {
            Player::Eve => w_adam,
            Player::Adam => w_eve,
        };

        if w_opp.is_empty() {
            for (u, w) in attr_strategy {
                self.strategy[u] = Some(w);
            }
            for &v in &top_vertices {
                if game.owner(v) == alpha {
                    let w = game
                        .successors(v)
                        .iter()
                        .copied()
                        .find(|&w| inside[w])
                        .expect("subgame vertices keep a successor inside");
                    self.strategy[v] = Some(w);
                }
            }
            return match alpha {
                Player::Eve => (sub.to_vec(), Vec::new()),
                Player::Adam => (Vec::new(), sub.to_vec()),
            };
        }

        let opp = alpha.opponent();
        let (b, b_strategy) = attractor(game, &self.predecessors, &inside, &w_opp, opp);
        for (u, w) in b_strategy {
            self.strategy[u] = Some(w);
        }
        let remainder: Vec<Vertex> = sub.iter().copied().filter(|&v| !b[v]).collect();
        let (w2_eve, w2_adam) = self.solve(&remainder);
        let attracted: Vec<Vertex> = sub.iter().copied().filter(|&v| b[v]).collect();
        match alpha {
            Player::Eve => {
                let mut adam = w2_adam;
                adam.extend(attracted);
                (w2_eve, adam)
            }
            Player::Adam => {
                let mut eve = w2_eve;
                eve.extend(attracted);
                (eve, w2_adam)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn self_loop(p: u32) -> ParityGame {
        ParityGame::new(vec![Player::Eve], vec![p], vec![vec![0]]).unwrap()
    }

    #[test]
    fn single_vertex() {
        assert_eq!(solve_zielonka(&self_loop(0)).winner, vec![Player::Eve]);
        assert_eq!(solve_zielonka(&self_loop(0)).strategy, vec![Some(0)]);
        assert_eq!(solve_zielonka(&self_loop(1)).winner, vec![Player::Adam]);
    }

    #[test]
    fn eve_escapes_to_even_loop() {
        // 0 (Eve, 1) -> {0, 1}; 1 (Adam, 2) -> 1
        let g = ParityGame::new(
            vec![Player::Eve, Player::Adam],
            vec![1, 2],
            vec![vec![0, 1], vec![1]],
        )
        .unwrap();
        let s = solve_zielonka(&g);
        assert_eq!(s.winner, vec![Player::Eve, Player::Eve]);
        assert_eq!(s.strategy[0], Some(1));
    }

    #[test]
    fn empty_game() {
        let g = ParityGame::new(vec![], vec![], vec![]).unwrap();
        assert!(solve_zielonka(&g).winner.is_empty());
    }
}
