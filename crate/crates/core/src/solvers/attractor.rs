use std::collections::VecDeque;

use crate::arena::{ParityGame, Player, Vertex};

/// Attractor of `target` for `player` inside the subgame `inside`.
///
/// Vertices are added in BFS order from the target. Returns the attractor
/// as a membership mask plus, for each attracted vertex owned by `player`
/// that is not in the target, the successor that pulled it in.
pub(crate) fn attractor(
    game: &ParityGame,
    predecessors: &[Vec<Vertex>],
    inside: &[bool],
    target: &[Vertex],
    player: Player,
) -> (Vec<bool>, Vec<(Vertex, Vertex)>) {
    let n = game.len();
    let mut attracted = vec![false; n];
    let mut remaining: Vec<usize> = vec![usize::MAX; n];
    let mut strategy = Vec::new();
    let mut queue = VecDeque::new();
    for &t in target {
        if inside[t] && !attracted[t] {
            attracted[t] = true;
            queue.push_back(t);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &u in &predecessors[v] {
            if !inside[u] || attracted[u] {
                continue;
            }
            if game.owner(u) == player {
                attracted[u] = true;
                strategy.push((u, v));
                queue.push_back(u);
            } else {
                if remaining[u] == usize::MAX {
                    remaining[u] = game.successors(u).iter().filter(|&&w| inside[w]).count();
                }
                remaining[u] -= 1;
                if remaining[u] == 0 {
                    attracted[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    (attracted, strategy)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn opponent_vertices_need_all_successors() {
        // 0 (Adam) -> {1, 2}; 1 (Eve) -> 1; 2 (Eve) -> 2
        let g = ParityGame::new(
            vec![Player::Adam, Player::Eve, Player::Eve],
            vec![0, 0, 0],
            vec![vec![1, 2], vec![1], vec![2]],
        )
        .unwrap();
        let preds = g.predecessors();
        let all = vec![true; 3];
        let (a, _) = attractor(&g, &preds, &all, &[1], Player::Eve);
        assert_eq!(a, vec![false, true, false]);
        let (a, _) = attractor(&g, &preds, &all, &[1, 2], Player::Eve);
        assert_eq!(a, vec![true, true, true]);
        let (a, s) = attractor(&g, &preds, &all, &[1], Player::Adam);
        assert_eq!(a, vec![true, true, false]);
        assert_eq!(s, vec![(0, 1)]);
    }
}
