mod common;

use std::fs;

use common::random_corpus;
use proptest::prelude::*;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use regsolve::arena::{Player, Priority};
use regsolve::automata::*;
use regsolve::register::solve_register_game;
use regsolve::solvers::solve_zielonka;

const LETTERS: [&str; 2] = ["a", "b"];

fn fixture(name: &str) -> AltAutomaton {
    let path = format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
    parse_automaton(&fs::read_to_string(path).unwrap()).unwrap()
}

fn lassos(count: u64, seed0: u64) -> Vec<KripkeStructure> {
    (0..count)
        .map(|i| lasso_to_kripke(&random_lasso(&LETTERS, 3, 4, seed0 + i)))
        .collect()
}

fn draw(rng: &mut SplitMix64, m: u64) -> u64 {
    rng.next_u64() % m
}

/// Random tree automaton: random formula over diamond and box atoms.
fn random_tree_automaton(states: usize, max_p: Priority, alphabet: Vec<String>, seed: u64) -> AltAutomaton {
    fn formula(rng: &mut SplitMix64, states: usize, depth: usize) -> Formula {
        match if depth == 0 { 0 } else { draw(rng, 4) } {
            0 | 1 => {
                let m = if draw(rng, 2) == 0 { Modality::Diamond } else { Modality::Box };
                Formula::atom(m, draw(rng, states as u64) as usize)
            }
            op => {
                let parts = vec![formula(rng, states, depth - 1), formula(rng, states, depth - 1)];
                if op == 2 { Formula::and(parts) } else { Formula::or(parts) }
            }
        }
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let priority = (0..states).map(|_| draw(&mut rng, max_p as u64 + 1) as Priority).collect();
    let delta = (0..states)
        .map(|_| (0..alphabet.len()).map(|_| formula(&mut rng, states, 2)).collect())
        .collect();
    let names = (0..states).map(|i| format!("t{i}")).collect();
    AltAutomaton::new(Mode::Tree, alphabet, names, priority, 0, delta).unwrap()
}

/// Random structure over {a, b} with out-degree 1..=2.
fn random_structure(n: usize, seed: u64) -> KripkeStructure {
    let mut rng = SplitMix64::seed_from_u64(seed);
    let labels = (0..n).map(|_| draw(&mut rng, 2) as usize).collect();
    let successors = (0..n)
        .map(|_| {
            let mut s: Vec<usize> = (0..1 + draw(&mut rng, 2)).map(|_| draw(&mut rng, n as u64) as usize).collect();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    KripkeStructure::new(LETTERS.iter().map(|l| l.to_string()).collect(), labels, successors, 0).unwrap()
}

#[test]
fn fixtures_round_trip() {
    for entry in fs::read_dir(format!("{}/tests/data", env!("CARGO_MANIFEST_DIR"))).unwrap() {
        let text = fs::read_to_string(entry.unwrap().path()).unwrap();
        let a = parse_automaton(&text).unwrap();
        let written = write_automaton(&a);
        assert_eq!(parse_automaton(&written).unwrap(), a);
        assert_eq!(write_automaton(&parse_automaton(&written).unwrap()), written);
    }
    let b = fixture("inf_b.aut");
    assert_eq!((b.len(), b.priorities()), (2, &[1, 2][..]));
}

#[test]
fn acceptance_examples() {
    let inf_b = fixture("inf_b.aut");
    let word = |w: &str| lasso_to_kripke(&w.parse().unwrap());
    assert!(accepts(&word(":ab"), &inf_b).unwrap());
    assert!(!accepts(&word(":a"), &inf_b).unwrap());
    let always = fixture("always.aut");
    let empty = fixture("empty.aut");
    for seed in 0..30 {
        let s = random_structure(1 + seed as usize % 6, seed);
        assert!(accepts(&s, &always).unwrap());
        assert!(!accepts(&s, &empty).unwrap());
    }
}

#[test]
fn parameterised_automaton_runs_the_register_game() {
    for seed in 0..20 {
        let a = random_apw(1 + seed as usize % 3, 3, &LETTERS, seed);
        for s in lassos(20, 500 + 20 * seed) {
            let g = acceptance_game(&s, &a).unwrap();
            for k in 0..=3 {
                let eve = solve_register_game(&g.game, k, Player::Eve).contains(&g.initial());
                let ak = build_parameterised(&a, k);
                assert_eq!(accepts(&s, &ak).unwrap(), eve, "seed {seed}, k {k}");
                assert!(ak.len() as f64 <= parameterised_state_bound(&a, k));
            }
        }
    }
}

#[test]
fn enough_registers_preserve_the_language_on_words() {
    for seed in 0..30 {
        let a = random_apw(1 + seed as usize % 3, 3, &LETTERS, 100 + seed);
        let ak = build_parameterised(&a, weak::default_registers(&a));
        for s in lassos(30, 9000 + 30 * seed) {
            assert_eq!(accepts(&s, &ak).unwrap(), accepts(&s, &a).unwrap(), "seed {seed}");
        }
    }
}

#[test]
fn fvs_budget_preserves_acceptance_on_structures() {
    let alphabet: Vec<String> = LETTERS.iter().map(|l| l.to_string()).collect();
    for seed in 0..40 {
        let a = random_tree_automaton(1 + seed as usize % 2, 3, alphabet.clone(), seed);
        let s = random_structure(1 + seed as usize % 5, 70 + seed);
        let k = fvs_register_budget(&s, &a);
        assert_eq!(
            accepts(&s, &build_parameterised(&a, k)).unwrap(),
            accepts(&s, &a).unwrap(),
            "seed {seed}, k {k}"
        );
    }
}

#[test]
fn pd_collapses_to_the_encoded_game() {
    for g in random_corpus(40, 10, 4, 600) {
        let winner = solve_zielonka(&g).winner;
        let pd = build_pd(g.max_priority());
        let acc = acceptance_game(&game_to_kripke(&g, 0), &pd).unwrap();
        let acc_winner = solve_zielonka(&acc.game).winner;
        for (pos, (v, c)) in acc.positions.iter().enumerate() {
            match c {
                Component::State(_) => {
                    assert_eq!(acc.game.successors(pos).len(), 1);
                    assert_eq!(acc_winner[pos], winner[*v]);
                }
                Component::Formula(_) => assert_eq!(acc.game.owner(pos), g.owner(*v)),
            }
        }
    }
}

#[test]
fn product_with_pd_preserves_the_language() {
    for seed in 0..20 {
        let a = random_apw(1 + seed as usize % 3, 3, &LETTERS, 40 + seed);
        let p = sync_product(&a, &build_pd(3)).unwrap();
        for s in lassos(50, 20_000 + 50 * seed) {
            assert_eq!(accepts(&s, &p).unwrap(), accepts(&s, &a).unwrap(), "seed {seed}");
        }
    }
}

#[test]
fn product_reads_the_acceptance_game() {
    let d = 3;
    for seed in 0..30 {
        let a = random_apw(1 + seed as usize % 3, d, &LETTERS, 80 + seed);
        let b = random_tree_automaton(2, 3, game_alphabet(d), 900 + seed);
        let p = sync_product(&a, &b).unwrap();
        let image: Vec<Priority> = b.priorities().to_vec();
        assert!(p.priorities().iter().all(|q| image.contains(q)));
        if b.is_weak() {
            assert!(p.is_weak(), "seed {seed}");
        }
        for s in lassos(30, 40_000 + 30 * seed) {
            let g = acceptance_game(&s, &a).unwrap();
            let encoded = game_to_kripke(&g.game, g.initial());
            assert_eq!(accepts(&s, &p).unwrap(), accepts(&encoded, &b).unwrap(), "seed {seed}");
        }
    }
}

#[test]
fn product_rejects_small_game_alphabets() {
    let a = fixture("inf_b.aut");
    assert!(matches!(sync_product(&a, &build_pd(1)), Err(ProductError::MissingLetter(_))));
}

#[test]
fn weakening_small_automata() {
    let weak_one = parse_automaton("alphabet: a b;\nstate q 2;\ninitial q;\ntrans q a := q;\ntrans q b := q;\n").unwrap();
    let empty = fixture("empty.aut");
    for a in [&weak_one, &empty] {
        let report = apw_to_aww(a).unwrap();
        assert!(is_weak(&report.automaton));
        assert!(report.states as f64 <= report.bound);
        for s in lassos(50, 3) {
            assert_eq!(accepts(&s, &report.automaton).unwrap(), accepts(&s, a).unwrap());
        }
    }
    assert!(matches!(apw_to_aww(&fixture("tree.aut")), Err(WeakenError::NotWordMode)));
}

#[test]
fn direct_weakening_agrees_on_lassos() {
    let options = WeakenOptions {
        direct: true,
        ..WeakenOptions::default()
    };
    let mut inputs: Vec<AltAutomaton> = (0..30).map(|s| random_apw(1 + s as usize % 3, 3, &LETTERS, s)).collect();
    inputs.push(fixture("inf_b.aut"));
    inputs.push(fixture("mixed.aut"));
    for (i, a) in inputs.iter().enumerate() {
        let report = apw_to_aww_with(a, &options).unwrap();
        assert!(report.automaton.is_weak());
        assert!(report.states as f64 <= report.bound);
        let text = write_automaton(&report.automaton);
        assert_eq!(write_automaton(&parse_automaton(&text).unwrap()), text);
        for s in lassos(50, 70_000 + 50 * i as u64) {
            assert_eq!(accepts(&s, &report.automaton).unwrap(), accepts(&s, a).unwrap(), "input {i}");
        }
    }
}

proptest! {
    #[test]
    fn lasso_unfolds_to_the_word(prefix in "[ab]{0,5}", cycle in "[ab]{1,5}") {
        let w: LassoWord = format!("{prefix}:{cycle}").parse().unwrap();
        let s = lasso_to_kripke(&w);
        prop_assert_eq!(s.len(), prefix.len() + cycle.len());
        let mut v = s.initial();
        for i in 0..20 {
            prop_assert_eq!(s.label(v), w.letter(i));
            prop_assert_eq!(s.successors(v).len(), 1);
            v = s.successors(v)[0];
        }
        prop_assert_eq!(w.to_string(), format!("{prefix}:{cycle}"));
    }

    #[test]
    fn written_automata_parse_back(states in 1usize..4, seed in any::<u64>()) {
        let a = random_apw(states, 3, &LETTERS, seed);
        let text = write_automaton(&a);
        prop_assert_eq!(write_automaton(&parse_automaton(&text).unwrap()), text);
    }
}
