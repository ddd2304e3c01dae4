//! Translation of alternating parity word automata into weak ones.
//!
//! The input is first replaced by `A_k`, then strongly connected components
//! that mix parities are peeled in rounds, every mixed component of a round
//! at once. Peeling a component `C` whose
//! largest priority `p` is odd makes ranked copies `(q, j)` for
//! `j in 0..=2|C|`: even ranks carry priority `p`, odd ranks keep the
//! original priority but exclude the states of priority `p`, and every move
//! inside `C` lets Eve lower the rank. Moves into `C` from outside enter at
//! the top rank. When `p` is even the same copies are built and Adam picks
//! the rank. Each copy at an even rank is weak; copies at odd ranks lack
//! `p` and are peeled again later if still mixed. See `docs/weakening.md`
//! for the size accounting.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{ceil_log2, is_nontrivial, tarjan_scc};

use super::automaton::{AltAutomaton, Mode};
use super::formula::Formula;
use super::parameterised::{build_parameterised, parameterised_state_bound};

/// Default limit on the number of states of any intermediate automaton.
pub const DEFAULT_STATE_CAP: usize = 250_000;
/// Default limit on the estimated number of formula nodes of any
/// intermediate automaton.
pub const DEFAULT_NODE_CAP: usize = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeakenError {
    #[error("weakening needs a word automaton")]
    NotWordMode,
    #[error("weakening would need {needed} states, above the cap of {cap}")]
    StateCap { needed: usize, cap: usize },
    #[error("weakening would need about {needed} formula nodes, above the cap of {cap}")]
    NodeCap { needed: usize, cap: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeakenOptions {
    /// Register count for `A_k`; `None` means `1 + ceil(log2 |Q|)`.
    pub k: Option<usize>,
    /// Skip `A_k` and peel the input automaton itself.
    pub direct: bool,
    pub state_cap: usize,
    pub node_cap: usize,
}

impl Default for WeakenOptions {
    fn default() -> Self {
        WeakenOptions {
            k: None,
            direct: false,
            state_cap: DEFAULT_STATE_CAP,
            node_cap: DEFAULT_NODE_CAP,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WeakReport {
    #[serde(skip)]
    pub automaton: AltAutomaton,
    /// Registers used, or `None` for a direct translation.
    pub k: Option<usize>,
    pub input_states: usize,
    /// States of the automaton handed to the peeling stage.
    pub peeled_input_states: usize,
    pub states: usize,
    /// Peeling rounds.
    pub peels: usize,
    /// [`size_bound`] for the same input and `k`.
    pub bound: f64,
}

/// Registers used by the default pipeline: `1 + ceil(log2 |Q|)`.
pub fn default_registers(a: &AltAutomaton) -> usize {
    1 + ceil_log2(a.len()) as usize
}

/// Upper bound on the output size: `N (2N + 1)^h` where `N` bounds the
/// states of the peeled input and `h` is its number of priorities. For the
/// pipeline `N = |Q| (d + 1)^(k + 1) (2k + 2)` and `h = 2k + 2`.
pub fn size_bound(a: &AltAutomaton, k: Option<usize>) -> f64 {
    let (n, h) = match k {
        Some(k) => (parameterised_state_bound(a, k), (2 * k + 2) as f64),
        None => (a.len() as f64, (a.max_priority() + 1) as f64),
    };
    n * (2.0 * n + 1.0).powf(h)
}

/// Weak automaton equivalent to `a` on all words, via `A_k` with the
/// default register count.
pub fn apw_to_aww(a: &AltAutomaton) -> Result<WeakReport, WeakenError> {
    apw_to_aww_with(a, &WeakenOptions::default())
}

pub fn apw_to_aww_with(a: &AltAutomaton, options: &WeakenOptions) -> Result<WeakReport, WeakenError> {
    if a.mode() != Mode::Word {
        return Err(WeakenError::NotWordMode);
    }
    let (k, start) = if options.direct {
        (None, a.trim())
    } else {
        let k = options.k.unwrap_or_else(|| default_registers(a));
        (Some(k), build_parameterised(a, k))
    };
    if start.len() > options.state_cap {
        return Err(WeakenError::StateCap {
            needed: start.len(),
            cap: options.state_cap,
        });
    }
    let peeled_input_states = start.len();
    let (automaton, peels) = weaken(&start, options)?;
    Ok(WeakReport {
        k,
        input_states: a.len(),
        peeled_input_states,
        states: automaton.len(),
        peels,
        bound: size_bound(a, k),
        automaton,
    })
}

/// Peels mixed components until the automaton is weak. All mixed
/// components of one round are peeled together. Returns the result and the
/// number of rounds.
pub fn weaken(a: &AltAutomaton, caps: &WeakenOptions) -> Result<(AltAutomaton, usize), WeakenError> {
    let mut current = a.trim();
    let mut rounds = 0;
    loop {
        let components = mixed_components(&current);
        if components.is_empty() {
            return Ok((current, rounds));
        }
        current = peel(&current, &components, caps)?;
        rounds += 1;
    }
}

/// Nontrivial strongly connected components whose priorities mix parities.
pub fn mixed_components(a: &AltAutomaton) -> Vec<Vec<usize>> {
    let g = a.transition_graph();
    tarjan_scc(a.len(), |q| g[q].iter().copied())
        .into_iter()
        .filter(|c| {
            is_nontrivial(c, |q| g[q].iter().copied())
                && c.iter().any(|&q| a.priority(q) % 2 != a.priority(c[0]) % 2)
        })
        .collect()
}

/// One peeling step on the given disjoint components.
/// Fails before building anything if the state count or the estimated
/// formula size would exceed the caps in `caps`.
pub fn peel(a: &AltAutomaton, components: &[Vec<usize>], caps: &WeakenOptions) -> Result<AltAutomaton, WeakenError> {
    const NONE: usize = usize::MAX;
    let mut comp = vec![NONE; a.len()];
    let mut top = Vec::with_capacity(components.len());
    let mut top_priority = Vec::with_capacity(components.len());
    for (i, c) in components.iter().enumerate() {
        for &q in c {
            comp[q] = i;
        }
        top.push(2 * c.len());
        top_priority.push(c.iter().map(|&q| a.priority(q)).max().expect("component is nonempty"));
    }
    let needed = components
        .iter()
        .enumerate()
        .fold(a.len(), |acc, (i, c)| acc.saturating_add(c.len() * top[i]));
    if needed > caps.state_cap {
        return Err(WeakenError::StateCap {
            needed,
            cap: caps.state_cap,
        });
    }
    // A copy at rank j turns each atom into at most j + 1 alternatives.
    let widest = top.iter().copied().max().unwrap_or(0) + 1;
    let nodes = (0..a.len()).fold(0usize, |acc, q| {
        let size: usize = (0..a.alphabet().len()).map(|l| a.delta(q, l).size()).sum();
        let factor = match comp[q] {
            NONE => widest,
            c => (top[c] + 1) * (top[c] + 2) / 2,
        };
        acc.saturating_add(size.saturating_mul(factor))
    });
    if nodes > caps.node_cap {
        return Err(WeakenError::NodeCap {
            needed: nodes,
            cap: caps.node_cap,
        });
    }
    let allowed = |q: usize, j: usize| j.is_multiple_of(2) || a.priority(q) != top_priority[comp[q]];

    let mut names = Vec::with_capacity(needed);
    let mut priority = Vec::with_capacity(needed);
    let mut plain = vec![NONE; a.len()];
    let mut ranked: HashMap<(usize, usize), usize> = HashMap::new();
    let mut origin = Vec::with_capacity(needed);
    for q in 0..a.len() {
        if comp[q] == NONE {
            plain[q] = names.len();
            names.push(a.state_name(q).to_string());
            priority.push(a.priority(q));
            origin.push((q, None));
            continue;
        }
        let c = comp[q];
        for j in (0..=top[c]).filter(|&j| allowed(q, j)) {
            ranked.insert((q, j), names.len());
            names.push(format!("{}^{}", a.state_name(q), j));
            priority.push(if j % 2 == 0 { top_priority[c] } else { a.priority(q) });
            origin.push((q, Some(j)));
        }
    }
    // Moves within a component keep or lower the rank; moves into a
    // component enter at its top rank.
    let target = |q: usize, rank: Option<usize>, t: usize| -> Formula {
        let c = comp[t];
        if c == NONE {
            return Formula::next(plain[t]);
        }
        let bound = match rank {
            Some(j) if comp[q] == c => j,
            _ => top[c],
        };
        let choices: Vec<Formula> = (0..=bound)
            .filter(|&j| allowed(t, j))
            .map(|j| Formula::next(ranked[&(t, j)]))
            .collect();
        if top_priority[c] % 2 == 1 {
            Formula::or(choices)
        } else {
            Formula::and(choices)
        }
    };
    let delta = origin
        .iter()
        .map(|&(q, j)| {
            (0..a.alphabet().len())
                .map(|l| a.delta(q, l).substitute(&mut |_, t| target(q, j, t)))
                .collect()
        })
        .collect();
    let initial = match comp[a.initial()] {
        NONE => plain[a.initial()],
        c => ranked[&(a.initial(), top[c])],
    };
    let out = AltAutomaton::new(Mode::Word, a.alphabet().to_vec(), names, priority, initial, delta)
        .expect("peeled automaton is well formed");
    Ok(out.trim())
}
