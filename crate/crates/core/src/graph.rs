//! Directed-graph helpers shared by games and automata.

/// Tarjan's algorithm, iterative. Components come out in reverse
/// topological order of the condensation: a component is emitted only after
/// every component reachable from it.
pub fn tarjan_scc<S, I>(n: usize, successors: S) -> Vec<Vec<usize>>
where
    S: Fn(usize) -> I,
    I: IntoIterator<Item = usize>,
{
    const UNVISITED: usize = usize::MAX;
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut components = Vec::new();
    let mut next_index = 0;

    // Each frame holds a vertex and its materialised successor list with a cursor.
    let mut frames: Vec<(usize, Vec<usize>, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        frames.push((root, successors(root).into_iter().collect(), 0));

        while let Some(frame) = frames.last_mut() {
            let v = frame.0;
            if frame.2 < frame.1.len() {
                let w = frame.1[frame.2];
                frame.2 += 1;
                if index[w] == UNVISITED {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, successors(w).into_iter().collect(), 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(parent) = frames.last() {
                let p = parent.0;
                low[p] = low[p].min(low[v]);
            }
            if low[v] == index[v] {
                let mut component = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    component.push(w);
                    if w == v {
                        break;
                    }
                }
                component.sort_unstable();
                components.push(component);
            }
        }
    }
    components
}

/// Whether the component contains at least one cycle (more than one vertex,
/// or a self-loop).
pub fn is_nontrivial<S, I>(component: &[usize], successors: S) -> bool
where
    S: Fn(usize) -> I,
    I: IntoIterator<Item = usize>,
{
    match component {
        [] => false,
        [v] => successors(*v).into_iter().any(|w| w == *v),
        _ => true,
    }
}

/// A feedback vertex set computed greedily: self-loop vertices are forced,
/// vertices outside every cycle are discarded, and otherwise the vertex
/// with the largest in-degree times out-degree is taken.
///
/// The result meets every cycle, so its size bounds the maximal number of
/// vertex-disjoint cycles from above.
pub fn greedy_feedback_vertex_set(adjacency: &[Vec<usize>]) -> Vec<usize> {
    let n = adjacency.len();
    let mut alive = vec![true; n];
    let mut chosen = Vec::new();
    loop {
        let succ = |v: usize| {
            adjacency[v]
                .iter()
                .copied()
                .filter(|&w| alive[w])
                .collect::<Vec<_>>()
        };
        let components: Vec<Vec<usize>> = tarjan_scc(n, |v| {
            if alive[v] {
                succ(v)
            } else {
                Vec::new()
            }
        })
        .into_iter()
        .filter(|c| alive[c[0]] && is_nontrivial(c, succ))
        .collect();
        if components.is_empty() {
            break;
        }
        let mut on_cycle = vec![false; n];
        for c in &components {
            for &v in c {
                on_cycle[v] = true;
            }
        }
        for v in 0..n {
            if alive[v] && !on_cycle[v] {
                alive[v] = false;
            }
        }
        let self_loops: Vec<usize> = (0..n)
            .filter(|&v| alive[v] && adjacency[v].contains(&v))
            .collect();
        if !self_loops.is_empty() {
            for v in self_loops {
                alive[v] = false;
                chosen.push(v);
            }
            continue;
        }
        let mut indeg = vec![0usize; n];
        let mut outdeg = vec![0usize; n];
        for v in (0..n).filter(|&v| alive[v]) {
            for &w in adjacency[v].iter().filter(|&&w| alive[w]) {
                outdeg[v] += 1;
                indeg[w] += 1;
            }
        }
        let best = (0..n)
            .filter(|&v| alive[v])
            .max_by_key(|&v| (indeg[v] * outdeg[v], std::cmp::Reverse(v)))
            .expect("a live cycle has vertices");
        alive[best] = false;
        chosen.push(best);
    }
    chosen.sort_unstable();
    chosen
}

/// Size of a minimum feedback vertex set by exhaustive search over subsets
/// of increasing size. Intended for graphs of a dozen vertices or fewer.
pub fn exact_feedback_vertex_set_size(adjacency: &[Vec<usize>]) -> usize {
    let n = adjacency.len();
    assert!(n <= 24, "exhaustive feedback vertex set search on {n} vertices");
    let acyclic_without = |removed: u32| {
        let succ = |v: usize| {
            adjacency[v]
                .iter()
                .copied()
                .filter(|&w| removed & (1 << w) == 0)
                .collect::<Vec<_>>()
        };
        tarjan_scc(n, |v| {
            if removed & (1 << v) == 0 {
                succ(v)
            } else {
                Vec::new()
            }
        })
        .iter()
        .all(|c| removed & (1 << c[0]) != 0 || !is_nontrivial(c, succ))
    };
    for size in 0..=n {
        let mut found = false;
        for_each_subset(n, size, &mut |mask| {
            if !found && acyclic_without(mask) {
                found = true;
            }
        });
        if found {
            return size;
        }
    }
    n
}

fn for_each_subset(n: usize, size: usize, f: &mut impl FnMut(u32)) {
    fn rec(start: usize, n: usize, left: usize, mask: u32, f: &mut impl FnMut(u32)) {
        if left == 0 {
            f(mask);
            return;
        }
        for v in start..n {
            if n - v < left {
                break;
            }
            rec(v + 1, n, left - 1, mask | (1 << v), f);
        }
    }
    rec(0, n, size, 0, f);
}

/// `ceil(log2(z))` for `z >= 1`, and 0 for `z <= 1`.
pub fn ceil_log2(z: usize) -> u32 {
    if z <= 1 {
        0
    } else {
        usize::BITS - (z - 1).leading_zeros()
    }
}
