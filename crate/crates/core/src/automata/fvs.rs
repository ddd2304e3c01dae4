use crate::graph::{ceil_log2, exact_feedback_vertex_set_size, is_nontrivial, tarjan_scc};

use super::automaton::AltAutomaton;
use super::kripke::KripkeStructure;

/// Components up to this size get an exact feedback vertex set.
pub const EXACT_FVS_LIMIT: usize = 12;

/// Upper bound on the largest feedback vertex set of a single strongly
/// connected component of `s`: exact for components of at most
/// [`EXACT_FVS_LIMIT`] vertices, the component size otherwise.
pub fn max_component_fvs(s: &KripkeStructure) -> usize {
    let adj = s.adjacency();
    tarjan_scc(s.len(), |v| adj[v].iter().copied())
        .iter()
        .filter(|c| is_nontrivial(c, |v| adj[v].iter().copied()))
        .map(|c| {
            if c.len() > EXACT_FVS_LIMIT {
                return c.len();
            }
            let mut local = vec![usize::MAX; s.len()];
            for (i, &v) in c.iter().enumerate() {
                local[v] = i;
            }
            let sub: Vec<Vec<usize>> = c
                .iter()
                .map(|&v| adj[v].iter().filter(|&&w| local[w] != usize::MAX).map(|&w| local[w]).collect())
                .collect();
            exact_feedback_vertex_set_size(&sub)
        })
        .max()
        .unwrap_or(0)
}

/// Number of registers sufficient for `A_k` to agree with `a` on `s`:
/// `1 + ceil(log2(f |Q|))` with `f` from [`max_component_fvs`] (at least 1).
pub fn fvs_register_budget(s: &KripkeStructure, a: &AltAutomaton) -> usize {
    let f = max_component_fvs(s).max(1);
    1 + ceil_log2(f * a.len()) as usize
}
