//! Exact maximum independent set by branch and bound over bitsets.
//!
//! This is the engine behind both packing numbers: a set is a packing of
//! `G` exactly when it is independent in the corresponding conflict graph.
//! Branching picks a maximum-degree vertex of the candidate subgraph
//! (lowest index on ties) and explores the include branch first; pruning
//! uses a greedy clique-cover upper bound. All tie-breaks are by lowest
//! index, so the reported certificate is reproducible.

use std::time::Instant;

use crate::graph::{Graph, VertexSet};
use crate::solver::budget::{Budget, Ticker};
use crate::solver::result::{Certificate, InvariantKind, InvariantResult, SolveStatus};

/// Maximum independent set of `g` under `budget`.
///
/// On completion the result is `Exact` with a verified-by-construction
/// independent set; on budget exhaustion it is `Timeout` with the best set
/// found as `lower` and the root bound as `upper`.
pub fn max_independent_set(g: &Graph, budget: &Budget) -> InvariantResult {
    max_independent_set_bounded(g, budget, None)
}

/// As `max_independent_set`, with an externally known admissible upper
/// bound (e.g. a sphere-packing bound) used to stop as soon as it is met.
pub fn max_independent_set_bounded(
    g: &Graph,
    budget: &Budget,
    upper_hint: Option<usize>,
) -> InvariantResult {
    let started = Instant::now();
    let n = g.vertex_count();
    let rows: Vec<VertexSet> = (0..n as u32).map(|v| g.open_neighborhood(v)).collect();

    let full = VertexSet::full(n);
    let greedy = greedy_independent(&rows, &full);
    let root_bound = clique_cover_bound(&rows, &full);
    let global_upper = upper_hint.map_or(root_bound, |h| h.min(root_bound));

    let mut search = MisSearch {
        rows: &rows,
        best: greedy.clone(),
        global_upper,
        ticker: Ticker::start(budget),
        done: false,
    };
    if search.best.len() < global_upper {
        let mut chosen = Vec::new();
        search.dfs(full, &mut chosen);
    }

    let exhausted = search.ticker.exhausted();
    let lower = search.best.len();
    let (upper, status) = if exhausted && lower < global_upper {
        (global_upper, SolveStatus::Timeout)
    } else {
        (lower, SolveStatus::Exact)
    };
    debug_assert!(is_independent(&rows, &search.best));
    InvariantResult {
        kind: InvariantKind::TwoPacking, // callers overwrite; see compute_invariant
        lower,
        upper,
        status,
        certificate: Some(Certificate::Set(search.best)),
        elapsed_ms: started.elapsed().as_millis() as u64,
        nodes: search.ticker.nodes(),
    }
}

struct MisSearch<'a> {
    rows: &'a [VertexSet],
    best: VertexSet,
    global_upper: usize,
    ticker: Ticker,
    done: bool,
}

impl MisSearch<'_> {
    fn dfs(&mut self, candidates: VertexSet, chosen: &mut Vec<u32>) {
        if self.done || !self.ticker.tick() {
            return;
        }

        // Degree of each candidate inside the candidate set; a zero maximum
        // means the remainder is independent and can be taken wholesale.
        let mut pivot = None;
        let mut pivot_degree = 0usize;
        for v in candidates.iter() {
            let d = self.rows[v as usize].intersection_count(&candidates);
            if pivot.is_none() || d > pivot_degree {
                pivot = Some(v);
                pivot_degree = d;
            }
        }

        let Some(pivot) = pivot else {
            self.offer(chosen.len(), || {
                VertexSet::from_members(self.rows.len(), chosen.iter().copied())
            });
            return;
        };

        if pivot_degree == 0 {
            let total = chosen.len() + candidates.len();
            self.offer(total, || {
                let mut set = candidates.clone();
                for &v in chosen.iter() {
                    set.insert(v);
                }
                set
            });
            return;
        }

        if chosen.len() + clique_cover_bound(self.rows, &candidates) <= self.best.len() {
            return;
        }

        // Include branch first.
        let mut with = candidates.clone();
        with.subtract(&self.rows[pivot as usize]);
        with.remove(pivot);
        chosen.push(pivot);
        self.dfs(with, chosen);
        chosen.pop();
        if self.done {
            return;
        }

        let mut without = candidates;
        without.remove(pivot);
        self.dfs(without, chosen);
    }

    fn offer(&mut self, size: usize, build: impl FnOnce() -> VertexSet) {
        if size > self.best.len() {
            self.best = build();
            if self.best.len() >= self.global_upper {
                self.done = true;
            }
        }
    }
}

/// Greedy independent set taking the lowest-index admissible vertex first.
fn greedy_independent(rows: &[VertexSet], within: &VertexSet) -> VertexSet {
    let mut available = within.clone();
    let mut set = VertexSet::empty(rows.len());
    while let Some(v) = available.first() {
        set.insert(v);
        available.remove(v);
        available.subtract(&rows[v as usize]);
    }
    set
}

/// Greedy clique cover of the subgraph induced by `within`; the number of
/// cliques bounds the independence number from above.
fn clique_cover_bound(rows: &[VertexSet], within: &VertexSet) -> usize {
    let mut remaining = within.clone();
    let mut cliques = 0usize;
    while let Some(v) = remaining.first() {
        remaining.remove(v);
        let mut common = rows[v as usize].clone();
        common.intersect_with(&remaining);
        while let Some(u) = common.first() {
            remaining.remove(u);
            common.remove(u);
            common.intersect_with(&rows[u as usize]);
        }
        cliques += 1;
    }
    cliques
}

fn is_independent(rows: &[VertexSet], set: &VertexSet) -> bool {
    set.iter().all(|v| rows[v as usize].is_disjoint(set))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, petersen, Graph};

    #[test]
    fn empty_graph() {
        let r = max_independent_set(&Graph::empty(5), &Budget::UNLIMITED);
        assert_eq!(r.value(), Some(5));
    }

    #[test]
    fn complete_graph() {
        let r = max_independent_set(&complete(5), &Budget::UNLIMITED);
        assert_eq!(r.value(), Some(1));
    }

    #[test]
    fn petersen_graph() {
        // Frozen from the subset-enumeration oracle over all 2^10 subsets.
        let r = max_independent_set(&petersen(), &Budget::UNLIMITED);
        assert_eq!(r.value(), Some(4));
        let cert = r.certificate.unwrap();
        assert_eq!(cert.witnessed_size(), 4);
    }

    #[test]
    fn cycle_values() {
        for (n, expected) in [(3, 1), (4, 2), (5, 2), (6, 3), (9, 4)] {
            let r = max_independent_set(&cycle(n), &Budget::UNLIMITED);
            assert_eq!(r.value(), Some(expected), "C{n}");
        }
    }

    #[test]
    fn node_budget_times_out_with_sound_bounds() {
        // Odd cycle: greedy finds the optimum 7 but the clique-cover bound
        // is 8, so proving optimality takes more than two nodes.
        let g = cycle(15);
        let r = max_independent_set(&g, &Budget::nodes(2));
        assert_eq!(r.status, SolveStatus::Timeout);
        assert!(r.lower <= 7 && 7 <= r.upper);
    }

    #[test]
    fn hint_short_circuits() {
        let r = max_independent_set_bounded(&cycle(6), &Budget::UNLIMITED, Some(3));
        assert_eq!(r.value(), Some(3));
    }

    #[test]
    fn deterministic_certificate() {
        let a = max_independent_set(&petersen(), &Budget::UNLIMITED);
        let b = max_independent_set(&petersen(), &Budget::UNLIMITED);
        assert_eq!(a.certificate, b.certificate);
    }
}
