use thiserror::Error;

use crate::arena::{ParityGame, Player, Vertex};
use crate::graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("vertex {vertex} of the region has no strategy move")]
    MissingMove { vertex: Vertex },
    #[error("strategy moves {vertex} to {target}, which is not a successor")]
    NotASuccessor { vertex: Vertex, target: Vertex },
    #[error("strategy moves {vertex} to {target}, outside the region")]
    StrategyLeavesRegion { vertex: Vertex, target: Vertex },
    #[error("opponent vertex {vertex} can leave the region to {target}")]
    RegionNotClosed { vertex: Vertex, target: Vertex },
    #[error("vertex {0} is out of range")]
    OutOfRange(Vertex),
}

/// Checks that `strategy` (indexed by vertex) wins for `player` on every
/// vertex of `region`.
///
/// The region must be closed: the player's vertices move inside it via the
/// strategy, and every move of the opponent stays inside it. Then the
/// strategy wins iff no cycle of the restricted graph has a maximum priority
/// of the opponent's parity.
pub fn verify_positional_strategy(
    game: &ParityGame,
    player: Player,
    strategy: &[Option<Vertex>],
    region: &[Vertex],
) -> Result<bool, VerifyError> {
    let n = game.len();
    let mut inside = vec![false; n];
    for &v in region {
        if v >= n {
            return Err(VerifyError::OutOfRange(v));
        }
        inside[v] = true;
    }
    let mut restricted: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for &v in region {
        if game.owner(v) == player {
            let target = strategy
                .get(v)
                .copied()
                .flatten()
                .ok_or(VerifyError::MissingMove { vertex: v })?;
            if !game.successors(v).contains(&target) {
                return Err(VerifyError::NotASuccessor { vertex: v, target });
            }
            if !inside[target] {
                return Err(VerifyError::StrategyLeavesRegion { vertex: v, target });
            }
            restricted[v].push(target);
        } else {
            for &w in game.successors(v) {
                if !inside[w] {
                    return Err(VerifyError::RegionNotClosed { vertex: v, target: w });
                }
                restricted[v].push(w);
            }
        }
    }

    let mut bad: Vec<u32> = region
        .iter()
        .map(|&v| game.priority(v))
        .filter(|&p| Player::of_priority(p) != player)
        .collect();
    bad.sort_unstable();
    bad.dedup();
    for p in bad {
        // a cycle with maximum p exists iff some p-vertex sits on a cycle of
        // the subgraph of priorities <= p
        let keep = |v: Vertex| inside[v] && game.priority(v) <= p;
        let succ = |v: Vertex| -> Vec<Vertex> {
            if keep(v) {
                restricted[v].iter().copied().filter(|&w| keep(w)).collect()
            } else {
                Vec::new()
            }
        };
        for component in graph::tarjan_scc(n, succ) {
            if keep(component[0])
                && graph::is_nontrivial(&component, succ)
                && component.iter().any(|&v| game.priority(v) == p)
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_claims() {
        let even = ParityGame::new(vec![Player::Adam], vec![0], vec![vec![0]]).unwrap();
        assert_eq!(verify_positional_strategy(&even, Player::Eve, &[None], &[0]), Ok(true));
        let odd = ParityGame::new(vec![Player::Adam], vec![1], vec![vec![0]]).unwrap();
        assert_eq!(verify_positional_strategy(&odd, Player::Eve, &[None], &[0]), Ok(false));
        assert_eq!(verify_positional_strategy(&odd, Player::Adam, &[Some(0)], &[0]), Ok(true));
    }

    #[test]
    fn structural_errors() {
        // 0 (Eve) -> {0, 1}; 1 (Adam) -> {0, 1}
        let g = ParityGame::new(
            vec![Player::Eve, Player::Adam],
            vec![2, 1],
            vec![vec![0, 1], vec![0, 1]],
        )
        .unwrap();
        assert_eq!(
            verify_positional_strategy(&g, Player::Eve, &[Some(1), None], &[0]),
            Err(VerifyError::StrategyLeavesRegion { vertex: 0, target: 1 })
        );
        assert_eq!(
            verify_positional_strategy(&g, Player::Eve, &[Some(0), None], &[1]),
            Err(VerifyError::RegionNotClosed { vertex: 1, target: 0 })
        );
        assert_eq!(
            verify_positional_strategy(&g, Player::Eve, &[None, None], &[0, 1]),
            Err(VerifyError::MissingMove { vertex: 0 })
        );
        // Adam loops on 1 forever
        assert_eq!(verify_positional_strategy(&g, Player::Eve, &[Some(0), None], &[0, 1]), Ok(false));
        assert_eq!(verify_positional_strategy(&g, Player::Eve, &[Some(0), None], &[0]), Ok(true));
    }
}
