mod common;

use common::{brute_force_winners, edge_list, families, random_corpus, vertex_edges};
use proptest::prelude::*;
use regsolve::arena::{edge_game_to_vertex_game, ParityGame, Player};
use regsolve::generators::{gen_random, gen_random_edges};
use regsolve::solvers::{solve_spm, solve_zielonka, verify_positional_strategy, verify_solution};

fn owners(g: &ParityGame) -> Vec<Player> {
    g.vertices().map(|v| g.owner(v)).collect()
}

#[test]
fn zielonka_matches_brute_force_on_tiny_games() {
    for g in random_corpus(300, 7, 5, 11) {
        let expected = brute_force_winners(&owners(&g), &vertex_edges(&g));
        assert_eq!(solve_zielonka(&g).winner, expected, "{g:?}");
    }
}

#[test]
fn conversion_preserves_winners_of_edge_games() {
    for seed in 0..200 {
        let n = 1 + (seed % 6) as usize;
        let e = gen_random_edges(n, 4, 1, n.min(3), seed).unwrap();
        let owner: Vec<Player> = (0..n).map(|v| e.owner(v)).collect();
        let expected = brute_force_winners(&owner, &edge_list(&e));
        let sol = solve_zielonka(&edge_game_to_vertex_game(&e));
        assert_eq!(&sol.winner[..n], &expected[..], "seed {seed}");
    }
}

#[test]
fn solvers_agree_and_strategies_verify() {
    let mut corpus = random_corpus(500, 30, 6, 1000);
    corpus.extend(families(5, 8).into_iter().map(|(_, g)| g));
    for g in &corpus {
        let z = solve_zielonka(g);
        let s = solve_spm(g);
        assert_eq!(z.winner, s.winner);
        assert_eq!(verify_solution(g, &z), Ok(true));
        assert_eq!(verify_solution(g, &s), Ok(true));
    }
}

#[test]
fn verifier_rejects_losing_strategies() {
    // Eve at 0 may stay on priority 1 or move to the even loop at 1.
    let g = ParityGame::new(vec![Player::Eve, Player::Eve], vec![1, 2], vec![vec![0, 1], vec![1]]).unwrap();
    let region = [0, 1];
    assert_eq!(verify_positional_strategy(&g, Player::Eve, &[Some(1), Some(1)], &region), Ok(true));
    assert_eq!(verify_positional_strategy(&g, Player::Eve, &[Some(0), Some(1)], &region), Ok(false));
}

proptest! {
    #[test]
    fn random_games_solve_consistently(n in 1usize..20, d in 0u32..7, seed in any::<u64>()) {
        let g = gen_random(n, d, 1, n.min(4), seed).unwrap();
        let z = solve_zielonka(&g);
        prop_assert_eq!(&z.winner, &solve_spm(&g).winner);
        prop_assert_eq!(verify_solution(&g, &z), Ok(true));
        // Dualising swaps the winners.
        let dual = solve_zielonka(&g.dual());
        for v in g.vertices() {
            prop_assert_eq!(dual.winner[v], z.winner[v].opponent());
        }
    }
}
