//! Brute-force oracles shared by the integration tests. None of these call
//! into the recognizers they are used to check.
#![allow(dead_code)]

use std::collections::HashSet;

use edmop_core::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Whether some contraction of `g` contains `K_4` or `K_{2,3}` as a
/// subgraph, i.e. whether `g` has one of the two forbidden minors of
/// outerplanar graphs. Explores every partition of the vertices into
/// connected parts reachable by edge contractions.
pub fn has_forbidden_minor(g: &Graph) -> bool {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().map(|e| e.endpoints()).collect();
    let start: Vec<u8> = (0..n as u8).collect();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut stack = vec![start.clone()];
    seen.insert(start);
    while let Some(part) = stack.pop() {
        if quotient_has_k4_or_k23(&part, &edges) {
            return true;
        }
        for &(u, v) in &edges {
            let (a, b) = (part[u], part[v]);
            if a == b {
                continue;
            }
            let (keep, gone) = (a.min(b), a.max(b));
            let merged: Vec<u8> = part.iter().map(|&x| if x == gone { keep } else { x }).collect();
            if seen.insert(merged.clone()) {
                stack.push(merged);
            }
        }
    }
    false
}

fn quotient_has_k4_or_k23(part: &[u8], edges: &[(usize, usize)]) -> bool {
    let mut labels: Vec<u8> = part.to_vec();
    labels.sort_unstable();
    labels.dedup();
    let k = labels.len();
    if k < 4 {
        return false;
    }
    let idx = |x: u8| labels.binary_search(&x).unwrap();
    let mut adj = vec![vec![false; k]; k];
    for &(u, v) in edges {
        let (a, b) = (idx(part[u]), idx(part[v]));
        if a != b {
            adj[a][b] = true;
            adj[b][a] = true;
        }
    }
    for a in 0..k {
        for b in a + 1..k {
            let common: Vec<usize> = (0..k).filter(|&c| c != a && c != b && adj[a][c] && adj[b][c]).collect();
            if common.len() >= 3 {
                return true;
            }
            if adj[a][b] {
                for (i, &c) in common.iter().enumerate() {
                    if common[i + 1..].iter().any(|&d| adj[c][d]) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Number of distinct Hamiltonian cycles (each counted once, not per
/// direction or start).
pub fn hamiltonian_cycles(g: &Graph) -> usize {
    fn walk(g: &Graph, path: &mut Vec<usize>, used: &mut [bool], count: &mut usize) {
        let n = g.order();
        let last = *path.last().unwrap();
        if path.len() == n {
            if g.has_edge(last, path[0]) {
                *count += 1;
            }
            return;
        }
        for w in g.neighbors(last).collect::<Vec<_>>() {
            if !used[w] {
                used[w] = true;
                path.push(w);
                walk(g, path, used, count);
                path.pop();
                used[w] = false;
            }
        }
    }
    let n = g.order();
    if n < 3 {
        return 0;
    }
    let mut used = vec![false; n];
    used[0] = true;
    let mut count = 0;
    walk(g, &mut vec![0], &mut used, &mut count);
    count / 2
}

/// Random maximal outerplanar graph: a triangle grown by ears on random
/// outer edges, then randomly relabelled.
pub fn random_mop<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 3);
    let mut cycle = vec![0usize, 1, 2];
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    for x in 3..n {
        let i = rng.gen_range(0..cycle.len());
        let j = (i + 1) % cycle.len();
        edges.push((cycle[i], x));
        edges.push((cycle[j], x));
        cycle.insert(i + 1, x);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::from_edges(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

/// Uniform random graph with exactly `m` edges.
pub fn random_graph<R: Rng>(n: usize, m: usize, rng: &mut R) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    Graph::from_edges(n, pairs.into_iter().take(m)).unwrap()
}

/// Every graph on `n` labelled vertices, by bitmask over the pairs.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p)).unwrap()
    })
}

pub fn non_edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect()
}
