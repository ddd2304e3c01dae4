mod common;

use common::{families, random_corpus};
use proptest::prelude::*;
use regsolve::arena::{register_budget, ParityGame, Player};
use regsolve::generators::gen_random;
use regsolve::register::{
    build_register_arena, register_index, solve_register_game, solve_register_game_from,
    solve_via_registers, RegisterState, Turn,
};
use regsolve::solvers::solve_zielonka;

fn corpus() -> Vec<ParityGame> {
    let mut c = random_corpus(120, 12, 5, 300);
    c.extend(families(3, 4).into_iter().map(|(_, g)| g));
    c
}

#[test]
fn arena_sizes_respect_bound() {
    for g in corpus() {
        for k in 0..=register_budget(&g).min(4) {
            for controller in [Player::Eve, Player::Adam] {
                let arena = build_register_arena(&g, k, controller);
                assert!(arena.len() as f64 <= arena.state_bound(), "n = {}, k = {k}", g.len());
            }
        }
    }
}

#[test]
fn more_registers_help_the_controller() {
    for g in corpus() {
        let budget = register_budget(&g);
        for controller in [Player::Eve, Player::Adam] {
            let mut previous = solve_register_game(&g, 0, controller);
            for k in 1..=budget.min(4) {
                let current = solve_register_game(&g, k, controller);
                assert!(previous.iter().all(|v| current.contains(v)), "k = {k}");
                previous = current;
            }
        }
    }
}

#[test]
fn budget_bounds_the_index() {
    for g in corpus() {
        let idx = register_index(&g).unwrap();
        assert!(idx.global <= register_budget(&g));
        assert_eq!(idx.winner, solve_zielonka(&g).winner);
        let (eve, _) = solve_via_registers(&g);
        assert_eq!(eve, solve_zielonka(&g).win_eve());
    }
}

#[test]
fn winner_ignores_initial_configuration() {
    let mut rng = 0x2545_f491_4f6c_dd1du64;
    let mut next = |m: u64| {
        rng ^= rng << 13;
        rng ^= rng >> 7;
        rng ^= rng << 17;
        rng % m
    };
    for g in random_corpus(60, 8, 4, 77) {
        let d = g.max_priority() as u64;
        for k in 0..=register_budget(&g).min(3) {
            for controller in [Player::Eve, Player::Adam] {
                let zero = solve_register_game(&g, k, controller);
                let starts: Vec<RegisterState> = (0..6)
                    .map(|i| RegisterState {
                        base: next(g.len() as u64) as usize,
                        regs: (0..=k).map(|_| next(d + 1) as u32).collect(),
                        turn: if i % 2 == 0 { Turn::Choose } else { Turn::Move },
                    })
                    .collect();
                let won = solve_register_game_from(&g, k, controller, &starts).unwrap();
                for (s, w) in starts.iter().zip(won) {
                    assert_eq!(w, zero.contains(&s.base), "k = {k}, {controller:?}, start {s}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn registers_solve_random_games(n in 1usize..10, d in 0u32..5, seed in any::<u64>()) {
        let g = gen_random(n, d, 1, n.min(3), seed).unwrap();
        let (eve, adam) = solve_via_registers(&g);
        let z = solve_zielonka(&g);
        prop_assert_eq!(eve, z.win_eve());
        prop_assert_eq!(adam, z.win_adam());
    }
}
