//! Random word automata and lassos for sampling-based tests. Draws use
//! SplitMix64 with `next_u64() % m`, like the game generators.

use rand_core::SeedableRng;
use rand_xoshiro::SplitMix64;

use crate::arena::Priority;
use crate::generators::draw;

use super::automaton::{AltAutomaton, Mode};
use super::formula::Formula;
use super::kripke::LassoWord;

fn formula(rng: &mut SplitMix64, states: usize, depth: usize) -> Formula {
    let shape = if depth == 0 { 0 } else { draw(rng, 4) };
    match shape {
        0 | 1 => Formula::next(draw(rng, states as u64) as usize),
        op => {
            let parts = vec![formula(rng, states, depth - 1), formula(rng, states, depth - 1)];
            if op == 2 {
                Formula::and(parts)
            } else {
                Formula::or(parts)
            }
        }
    }
}

/// A word automaton with `states` states over `letters`, priorities drawn
/// from `0..=max_priority`, and transition conditions of nesting depth at
/// most 2 over next atoms. State `i` is named `s<i>`; the initial state is 0.
pub fn random_apw(states: usize, max_priority: Priority, letters: &[&str], seed: u64) -> AltAutomaton {
    assert!(states > 0 && !letters.is_empty());
    let mut rng = SplitMix64::seed_from_u64(seed);
    let priority = (0..states)
        .map(|_| draw(&mut rng, max_priority as u64 + 1) as Priority)
        .collect();
    let delta = (0..states)
        .map(|_| (0..letters.len()).map(|_| formula(&mut rng, states, 2)).collect())
        .collect();
    AltAutomaton::new(
        Mode::Word,
        letters.iter().map(|l| l.to_string()).collect(),
        (0..states).map(|i| format!("s{i}")).collect(),
        priority,
        0,
        delta,
    )
    .expect("random automata are well formed")
}

/// A lasso over `letters` with a prefix of length `0..=max_prefix` and a
/// loop of length `1..=max_loop`.
pub fn random_lasso(letters: &[&str], max_prefix: usize, max_loop: usize, seed: u64) -> LassoWord {
    assert!(max_loop > 0 && !letters.is_empty());
    let mut rng = SplitMix64::seed_from_u64(seed);
    let prefix_len = draw(&mut rng, max_prefix as u64 + 1) as usize;
    let loop_len = 1 + draw(&mut rng, max_loop as u64) as usize;
    let mut pick = |n: usize| -> Vec<String> {
        (0..n)
            .map(|_| letters[draw(&mut rng, letters.len() as u64) as usize].to_string())
            .collect()
    };
    let prefix = pick(prefix_len);
    let cycle = pick(loop_len);
    LassoWord::new(prefix, cycle).expect("loop is nonempty")
}
