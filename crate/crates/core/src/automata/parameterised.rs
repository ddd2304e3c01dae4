//! The automaton `A_k` that runs the k-register game on acceptance games.
//!
//! States are triples `(q, r, o)` of a state of `A`, a register vector and a
//! priority. Before a transition condition is entered, and again at every
//! node of it, Eve picks a register; the picks become disjunctions over
//! `0..=k`.
//!
//! Two rules for the third component are available. [`Variant::Aggregated`]
//! (the default) records the largest register-game output produced since
//! the previous state, so every acceptance-game position of `A` contributes
//! its own output exactly as in the register game. [`Variant::Verbatim`]
//! threads the raw value `max(r_i, p)` through the formula and converts it
//! into an output only at the atom, using the register picked there.

use std::collections::HashMap;

use crate::arena::Priority;
use crate::register::new_registers;

use super::automaton::AltAutomaton;
use super::formula::Formula;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Variant {
    #[default]
    Aggregated,
    Verbatim,
}

fn output(i: usize, value: Priority) -> Priority {
    2 * i as Priority + value % 2
}

type Key = (usize, Vec<Priority>, Priority);

struct Builder<'a> {
    a: &'a AltAutomaton,
    k: usize,
    variant: Variant,
    keys: Vec<Key>,
    index: HashMap<Key, usize>,
}

impl Builder<'_> {
    fn state(&mut self, key: Key) -> usize {
        if let Some(&s) = self.index.get(&key) {
            return s;
        }
        let s = self.keys.len();
        self.index.insert(key.clone(), s);
        self.keys.push(key);
        s
    }

    /// Expansion of a transition condition reached with registers `regs`
    /// and third component `carry`.
    fn expand(&mut self, f: &Formula, regs: &[Priority], carry: Priority) -> Formula {
        let mut choices = Vec::with_capacity(self.k + 1);
        for i in 0..=self.k {
            let next = new_registers(regs, i, 0);
            let branch = match self.variant {
                Variant::Aggregated => {
                    let o = carry.max(output(i, regs[i]));
                    match f {
                        Formula::Atom(m, q) => Formula::atom(*m, self.state((*q, next, o))),
                        Formula::And(bs) => {
                            Formula::and(bs.iter().map(|b| self.expand(b, &next, o)).collect())
                        }
                        Formula::Or(bs) => {
                            Formula::or(bs.iter().map(|b| self.expand(b, &next, o)).collect())
                        }
                    }
                }
                Variant::Verbatim => {
                    let value = regs[i].max(carry);
                    match f {
                        Formula::Atom(m, q) => {
                            Formula::atom(*m, self.state((*q, next, output(i, value))))
                        }
                        Formula::And(bs) => {
                            Formula::and(bs.iter().map(|b| self.expand(b, &next, value)).collect())
                        }
                        Formula::Or(bs) => {
                            Formula::or(bs.iter().map(|b| self.expand(b, &next, value)).collect())
                        }
                    }
                }
            };
            choices.push(branch);
        }
        Formula::or(choices)
    }

    fn transition(&mut self, key: &Key, letter: usize) -> Formula {
        let (q, regs, _) = key;
        let p = self.a.priority(*q);
        let f = self.a.delta(*q, letter).clone();
        let mut choices = Vec::with_capacity(self.k + 1);
        for i in 0..=self.k {
            let next = new_registers(regs, i, p);
            let value = regs[i].max(p);
            let carry = match self.variant {
                Variant::Aggregated => output(i, value),
                Variant::Verbatim => value,
            };
            choices.push(self.expand(&f, &next, carry));
        }
        Formula::or(choices)
    }
}

/// `A_k` with the default [`Variant::Aggregated`] rule.
pub fn build_parameterised(a: &AltAutomaton, k: usize) -> AltAutomaton {
    build_parameterised_with(a, k, Variant::default())
}

/// `A_k`, materialising the states reachable from `(initial, 0...0, 0)`.
/// State `(q, r, o)` is named `q~r0.r1...~o` and has priority `o`.
pub fn build_parameterised_with(a: &AltAutomaton, k: usize, variant: Variant) -> AltAutomaton {
    let mut b = Builder {
        a,
        k,
        variant,
        keys: Vec::new(),
        index: HashMap::new(),
    };
    b.state((a.initial(), vec![0; k + 1], 0));
    let letters = a.alphabet().len();
    let mut delta = Vec::new();
    let mut next = 0;
    while next < b.keys.len() {
        let key = b.keys[next].clone();
        let row: Vec<Formula> = (0..letters).map(|l| b.transition(&key, l)).collect();
        delta.push(row);
        next += 1;
    }
    let names = b
        .keys
        .iter()
        .map(|(q, regs, o)| {
            let regs: Vec<String> = regs.iter().map(|r| r.to_string()).collect();
            format!("{}~{}~{}", a.state_name(*q), regs.join("."), o)
        })
        .collect();
    let priority = b.keys.iter().map(|(_, _, o)| *o).collect();
    AltAutomaton::new(a.mode(), a.alphabet().to_vec(), names, priority, 0, delta)
        .expect("parameterised automaton is well formed")
}

/// `|Q| (d + 1)^(k + 1) (2k + 2)`, the size of the full state space.
pub fn parameterised_state_bound(a: &AltAutomaton, k: usize) -> f64 {
    a.len() as f64 * (a.max_priority() as f64 + 1.0).powi(k as i32 + 1) * (2 * k + 2) as f64
}
