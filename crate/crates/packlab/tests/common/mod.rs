//! Shared fixtures: the seeded random corpus and packing helpers.

// Each integration test binary compiles its own copy; not all of them use
// every helper.
#![allow(dead_code)]

use std::sync::OnceLock;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use packlab::graph::{conflict_graph, ConflictKind, Graph, VertexSet};

pub const CORPUS_SEED: u64 = 0x7051_ab5e_ed01;
pub const CORPUS_SIZE: usize = 500;

/// 500 connected graphs on 4..=12 vertices: a random spanning tree plus
/// density-controlled extra edges, fixed by the corpus seed.
pub fn corpus() -> &'static [Graph] {
    static CORPUS: OnceLock<Vec<Graph>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
        (0..CORPUS_SIZE)
            .map(|i| {
                let n = 4 + i % 9;
                let p = rng.random_range(0.10..0.45);
                random_connected(&mut rng, n, p)
            })
            .collect()
    })
}

pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, extra_p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n as u32 {
        edges.push((rng.random_range(0..v), v));
    }
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.random_bool(extra_p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

/// Random bipartite graph with parts of the given sizes; may be
/// disconnected and may contain isolated vertices.
pub fn random_bipartite(rng: &mut ChaCha8Rng, part_a: usize, part_b: usize, p: f64) -> Graph {
    let n = part_a + part_b;
    let mut edges = Vec::new();
    for a in 0..part_a as u32 {
        for b in 0..part_b as u32 {
            if rng.random_bool(p) {
                edges.push((a, part_a as u32 + b));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

/// Grows a maximal open packing by inserting random admissible vertices
/// until none remain.
pub fn random_maximal_open_packing(g: &Graph, rng: &mut ChaCha8Rng) -> VertexSet {
    let n = g.vertex_count();
    let conflicts = conflict_graph(g, ConflictKind::Open);
    let mut set = VertexSet::empty(n);
    let mut admissible: Vec<u32> = (0..n as u32).collect();
    while !admissible.is_empty() {
        let pick = admissible[rng.random_range(0..admissible.len())];
        set.insert(pick);
        admissible.retain(|&v| v != pick && !conflicts.has_edge(pick, v));
    }
    set
}
