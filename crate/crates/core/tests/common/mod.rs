#![allow(dead_code)]

use regsolve::arena::{edge_game_to_vertex_game, EdgeGame, ParityGame, Player, Priority, Vertex};
use regsolve::generators::{gen_figure, gen_h, gen_random};

/// Random corpus: game `i` has `1 + i % max_n` vertices, priorities up to
/// `i % (max_d + 1)`, out-degree 1..=3 and seed `seed0 + i`.
pub fn random_corpus(count: usize, max_n: usize, max_d: Priority, seed0: u64) -> Vec<ParityGame> {
    (0..count)
        .map(|i| {
            let n = 1 + i % max_n;
            let d = (i % (max_d as usize + 1)) as Priority;
            gen_random(n, d, 1, n.min(3), seed0 + i as u64).unwrap()
        })
        .collect()
}

/// The named example families, converted to vertex games.
pub fn families(max_h: usize, max_fig1: usize) -> Vec<(String, ParityGame)> {
    let mut out = vec![
        ("fig0".to_string(), edge_game_to_vertex_game(&gen_figure("fig0", None).unwrap())),
        ("fighigh".to_string(), edge_game_to_vertex_game(&gen_figure("fighigh", None).unwrap())),
    ];
    for n in 0..=max_h {
        out.push((format!("h{n}"), edge_game_to_vertex_game(&gen_h(n).unwrap())));
    }
    for n in 1..=max_fig1 {
        out.push((format!("fig1_{n}"), edge_game_to_vertex_game(&gen_figure("fig1", Some(n)).unwrap())));
    }
    out
}

/// Edges of a vertex game with the source priority on each edge.
pub fn vertex_edges(g: &ParityGame) -> Vec<Vec<(Vertex, Priority)>> {
    g.vertices()
        .map(|v| g.successors(v).iter().map(|&w| (w, g.priority(v))).collect())
        .collect()
}

pub fn edge_list(g: &EdgeGame) -> Vec<Vec<(Vertex, Priority)>> {
    (0..g.len()).map(|v| g.edges(v).to_vec()).collect()
}

/// Winners by enumerating Eve's positional strategies. Under a fixed Eve
/// strategy Adam wins from `v` iff he can reach a cycle whose largest edge
/// priority is odd. Only for tiny games.
pub fn brute_force_winners(owner: &[Player], edges: &[Vec<(Vertex, Priority)>]) -> Vec<Player> {
    let n = owner.len();
    let eve: Vec<Vertex> = (0..n).filter(|&v| owner[v] == Player::Eve).collect();
    let combos: usize = eve.iter().map(|&v| edges[v].len()).product();
    assert!(combos <= 1 << 14, "too many strategies to enumerate");
    let mut eve_wins = vec![false; n];
    let mut choice = vec![0usize; eve.len()];
    for _ in 0..combos {
        let restricted: Vec<Vec<(Vertex, Priority)>> = (0..n)
            .map(|v| match eve.iter().position(|&e| e == v) {
                Some(i) => vec![edges[v][choice[i]]],
                None => edges[v].clone(),
            })
            .collect();
        let adam = adam_reaches_odd_cycle(&restricted);
        for v in 0..n {
            if !adam[v] {
                eve_wins[v] = true;
            }
        }
        for (i, &v) in eve.iter().enumerate() {
            choice[i] += 1;
            if choice[i] < edges[v].len() {
                break;
            }
            choice[i] = 0;
        }
    }
    eve_wins.iter().map(|&e| if e { Player::Eve } else { Player::Adam }).collect()
}

fn adam_reaches_odd_cycle(edges: &[Vec<(Vertex, Priority)>]) -> Vec<bool> {
    let n = edges.len();
    let max_p = edges.iter().flatten().map(|&(_, p)| p).max().unwrap_or(0);
    let mut bad = vec![false; n];
    for p in (1..=max_p).step_by(2) {
        // Vertices on a cycle using only priorities <= p and at least one p.
        for v in 0..n {
            for &(w, q) in &edges[v] {
                if q == p && reaches(edges, w, v, p) {
                    bad[v] = true;
                }
            }
        }
    }
    (0..n)
        .map(|v| (0..n).any(|t| bad[t] && reaches(edges, v, t, Priority::MAX)))
        .collect()
}

fn reaches(edges: &[Vec<(Vertex, Priority)>], from: Vertex, to: Vertex, limit: Priority) -> bool {
    let mut seen = vec![false; edges.len()];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(v) = stack.pop() {
        if v == to {
            return true;
        }
        for &(w, q) in &edges[v] {
            if q <= limit && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}
