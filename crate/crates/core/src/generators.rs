//! Example families and random games.
//!
//! Random games are drawn from SplitMix64 (`rand_xoshiro::SplitMix64`)
//! seeded with the caller's seed. A bounded draw in `[0, m)` is
//! `next_u64() % m`. For each vertex in index order the generator draws the
//! owner (`% 2`, 0 = Eve), the priority (`% (d + 1)`), the out-degree
//! (`min_deg + % (max_deg - min_deg + 1)`), and then the successors by a
//! partial Fisher-Yates shuffle of `0..n`: for `j` in `0..deg`, swap
//! position `j` with `j + % (n - j)`. The chosen successors are sorted.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use thiserror::Error;

use crate::arena::{EdgeGame, ParityGame, Player, Priority, Vertex};

pub const MAX_H: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("H_{0} would have 2^{0} vertices; the limit is n <= {MAX_H}")]
    TooLarge(usize),
    #[error("unknown figure {0:?}; expected fig0, fighigh or fig1")]
    UnknownFigure(String),
    #[error("figure {0} needs a size n >= 1")]
    MissingSize(String),
    #[error("invalid parameters: {0}")]
    Parameters(String),
}

/// The family `H_n` of one-player games with register-index at least `n`.
///
/// `H_0` is a single Adam vertex with a priority-0 self-loop. `H_n` joins two
/// copies of `H_(n-1)` through their initial vertices `v0` (first copy) and
/// `v1` (second copy) with an edge `v0 -> v1` of priority `2n - 1` and an
/// edge `v1 -> v0` of priority `2n`. Vertex 0 is the initial vertex and is
/// named `initial`.
pub fn gen_h(n: usize) -> Result<EdgeGame, GenError> {
    if n > MAX_H {
        return Err(GenError::TooLarge(n));
    }
    let mut edges: Vec<Vec<(Vertex, Priority)>> = vec![vec![(0, 0)]];
    for level in 1..=n {
        let half = edges.len();
        let mut doubled = edges.clone();
        doubled.extend(
            edges
                .iter()
                .map(|es| es.iter().map(|&(w, p)| (w + half, p)).collect::<Vec<_>>()),
        );
        let level = level as Priority;
        doubled[0].push((half, 2 * level - 1));
        doubled[half].push((0, 2 * level));
        edges = doubled;
    }
    let size = edges.len();
    let mut names = vec![None; size];
    names[0] = Some("initial".to_string());
    Ok(EdgeGame::with_names(vec![Player::Adam; size], edges, names).expect("H_n is well formed"))
}

/// The drawn example games.
///
/// - `fig0`: three vertices in a line with self-loops of priority 0, 2, 0
///   and forward edges of priority 1 and 3.
/// - `fighigh`: two vertices with priority-0 self-loops, an edge of
///   priority 1 from the first to the second and of priority 2 back.
/// - `fig1` with size `n`: vertices `v0..vn` and for every pair an edge
///   `(vj, vi)` of priority `2i` when `j <= i` and `2j - 1` when `j > i`.
///
/// All vertices belong to Adam.
pub fn gen_figure(name: &str, n: Option<usize>) -> Result<EdgeGame, GenError> {
    let edges: Vec<Vec<(Vertex, Priority)>> = match name {
        "fig0" => vec![vec![(0, 0), (1, 1)], vec![(1, 2), (2, 3)], vec![(2, 0)]],
        "fighigh" => vec![vec![(0, 0), (1, 1)], vec![(1, 0), (0, 2)]],
        "fig1" => {
            let n = match n {
                Some(n) if n >= 1 => n,
                _ => return Err(GenError::MissingSize(name.to_string())),
            };
            (0..=n)
                .map(|j| {
                    (0..=n)
                        .map(|i| {
                            let p = if j <= i { 2 * i } else { 2 * j - 1 };
                            (i, p as Priority)
                        })
                        .collect()
                })
                .collect()
        }
        other => return Err(GenError::UnknownFigure(other.to_string())),
    };
    let len = edges.len();
    Ok(EdgeGame::new(vec![Player::Adam; len], edges).expect("figures are well formed"))
}

pub(crate) fn draw(rng: &mut SplitMix64, bound: u64) -> u64 {
    rng.next_u64() % bound
}

/// A random game with `n` vertices, priorities in `0..=d` and out-degrees
/// in `min_deg..=max_deg`. Equal arguments give equal games.
pub fn gen_random(
    n: usize,
    d: Priority,
    min_deg: usize,
    max_deg: usize,
    seed: u64,
) -> Result<ParityGame, GenError> {
    if n == 0 || min_deg == 0 || min_deg > max_deg || max_deg > n {
        return Err(GenError::Parameters(format!(
            "need 1 <= min_deg <= max_deg <= n, got n = {n}, min_deg = {min_deg}, max_deg = {max_deg}"
        )));
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut owner = Vec::with_capacity(n);
    let mut priority = Vec::with_capacity(n);
    let mut successors = Vec::with_capacity(n);
    let mut pool: Vec<Vertex> = (0..n).collect();
    for _ in 0..n {
        owner.push(if draw(&mut rng, 2) == 0 {
            Player::Eve
        } else {
            Player::Adam
        });
        priority.push(draw(&mut rng, d as u64 + 1) as Priority);
        let deg = min_deg + draw(&mut rng, (max_deg - min_deg + 1) as u64) as usize;
        for j in 0..deg {
            let r = j + draw(&mut rng, (n - j) as u64) as usize;
            pool.swap(j, r);
        }
        let mut succ = pool[..deg].to_vec();
        succ.sort_unstable();
        successors.push(succ);
    }
    Ok(ParityGame::new(owner, priority, successors).expect("random games are well formed"))
}

/// A random edge-priority game, drawn like [`gen_random`] with one extra
/// priority draw per edge after the successors of a vertex are fixed.
pub fn gen_random_edges(
    n: usize,
    d: Priority,
    min_deg: usize,
    max_deg: usize,
    seed: u64,
) -> Result<EdgeGame, GenError> {
    let base = gen_random(n, d, min_deg, max_deg, seed)?;
    let mut rng = SplitMix64::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let edges = base
        .vertices()
        .map(|v| {
            base.successors(v)
                .iter()
                .map(|&w| (w, draw(&mut rng, d as u64 + 1) as Priority))
                .collect()
        })
        .collect();
    let owner = base.vertices().map(|v| base.owner(v)).collect();
    Ok(EdgeGame::new(owner, edges).expect("random games are well formed"))
}
