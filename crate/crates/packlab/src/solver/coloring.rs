//! Exact chromatic number by backtracking with a clique lower bound.
//!
//! The injective chromatic number of `G` is the chromatic number of the
//! open conflict graph of `G`; this module colors whatever graph it is
//! given. A greedy clique pins the lower bound and pre-colors the first
//! vertices, greedy coloring seeds the incumbent, and the backtracking
//! phase then decides one color count `k` at a time from the clique size
//! upward.

use std::time::Instant;

use crate::graph::{Graph, VertexSet};
use crate::partition::Partition;
use crate::solver::budget::{Budget, Ticker};
use crate::solver::result::{Certificate, InvariantKind, InvariantResult, SolveStatus};

pub(crate) fn chromatic_number(g: &Graph, budget: &Budget) -> InvariantResult {
    let started = Instant::now();
    let n = g.vertex_count();
    let finish = |lower, upper, status, coloring: Option<&[usize]>, nodes| InvariantResult {
        kind: InvariantKind::InjectiveChromatic,
        lower,
        upper,
        status,
        certificate: coloring.map(|c| Certificate::Classes(classes_of(n, c))),
        elapsed_ms: started.elapsed().as_millis() as u64,
        nodes,
    };

    if n == 0 {
        return InvariantResult {
            kind: InvariantKind::InjectiveChromatic,
            lower: 0,
            upper: 0,
            status: SolveStatus::Exact,
            certificate: Some(Certificate::Classes(
                Partition::new(0, Vec::new()).expect("empty partition"),
            )),
            elapsed_ms: 0,
            nodes: 0,
        };
    }

    let clique = greedy_clique(g);
    let mut order = branching_order(g, &clique);
    let greedy = greedy_coloring(g, &order);
    let greedy_count = color_count(&greedy);
    let mut lower = clique.len();

    if lower == greedy_count {
        return finish(lower, greedy_count, SolveStatus::Exact, Some(&greedy), 0);
    }

    let mut ticker = Ticker::start(budget);
    let mut best = greedy;
    let mut best_count = greedy_count;
    while lower < best_count {
        let k = lower;
        match try_color(g, &mut order, &clique, k, &mut ticker) {
            Attempt::Colored(coloring) => {
                best = coloring;
                best_count = k;
                break;
            }
            Attempt::Impossible => lower = k + 1,
            Attempt::OutOfBudget => {
                return finish(
                    lower,
                    best_count,
                    SolveStatus::Timeout,
                    Some(&best),
                    ticker.nodes(),
                );
            }
        }
    }
    finish(
        best_count,
        best_count,
        SolveStatus::Exact,
        Some(&best),
        ticker.nodes(),
    )
}

enum Attempt {
    Colored(Vec<usize>),
    Impossible,
    OutOfBudget,
}

/// Decides whether `g` is `k`-colorable, with the clique pre-colored.
fn try_color(
    g: &Graph,
    order: &mut [u32],
    clique: &[u32],
    k: usize,
    ticker: &mut Ticker,
) -> Attempt {
    if clique.len() > k {
        return Attempt::Impossible;
    }
    let n = g.vertex_count();
    let mut color = vec![usize::MAX; n];
    for (c, &v) in clique.iter().enumerate() {
        color[v as usize] = c;
    }

    fn rec(
        g: &Graph,
        order: &[u32],
        color: &mut [usize],
        pos: usize,
        used: usize,
        k: usize,
        ticker: &mut Ticker,
    ) -> Option<bool> {
        if pos == order.len() {
            return Some(true);
        }
        if !ticker.tick() {
            return None;
        }
        let v = order[pos];
        // A fresh color beyond `used` is interchangeable with any other
        // fresh color, so only one is tried.
        let limit = k.min(used + 1);
        for c in 0..limit {
            let clash = g
                .neighbors(v)
                .iter()
                .any(|&w| color[w as usize] == c);
            if clash {
                continue;
            }
            color[v as usize] = c;
            match rec(g, order, color, pos + 1, used.max(c + 1), k, ticker) {
                Some(true) => return Some(true),
                Some(false) => {}
                None => return None,
            }
        }
        color[v as usize] = usize::MAX;
        Some(false)
    }

    match rec(g, order, &mut color, 0, clique.len(), k, ticker) {
        Some(true) => Attempt::Colored(color),
        Some(false) => Attempt::Impossible,
        None => Attempt::OutOfBudget,
    }
}

/// Non-clique vertices in (degree desc, index asc) order.
fn branching_order(g: &Graph, clique: &[u32]) -> Vec<u32> {
    let mut order: Vec<u32> = (0..g.vertex_count() as u32)
        .filter(|v| !clique.contains(v))
        .collect();
    order.sort_by_key(|&v| (usize::MAX - g.degree(v), v));
    order
}

/// Greedy clique: start at a lowest-index maximum-degree vertex, repeatedly
/// add the lowest-index maximum-degree common neighbor.
fn greedy_clique(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let start = (0..n as u32).max_by_key(|&v| (g.degree(v), usize::MAX - v as usize));
    let mut clique = vec![start.expect("non-empty graph")];
    let mut common = g.open_neighborhood(clique[0]);
    while let Some(next) = common
        .iter()
        .max_by_key(|&v| (g.degree(v), usize::MAX - v as usize))
    {
        clique.push(next);
        common.intersect_with(&g.open_neighborhood(next));
    }
    clique
}

fn greedy_coloring(g: &Graph, order: &[u32]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut color = vec![usize::MAX; n];
    let full_order: Vec<u32> = {
        // Clique vertices are not in `order`; color everything, clique first
        // in index order then the branching order.
        let mut all: Vec<u32> = (0..n as u32).filter(|v| !order.contains(v)).collect();
        all.extend_from_slice(order);
        all
    };
    for &v in &full_order {
        let mut taken: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| color[w as usize])
            .filter(|&c| c != usize::MAX)
            .collect();
        taken.sort_unstable();
        taken.dedup();
        let mut c = 0;
        for t in taken {
            if t == c {
                c += 1;
            } else if t > c {
                break;
            }
        }
        color[v as usize] = c;
    }
    color
}

fn color_count(coloring: &[usize]) -> usize {
    coloring.iter().map(|&c| c + 1).max().unwrap_or(0)
}

/// Color classes as a partition, dropping unused colors.
fn classes_of(n: usize, coloring: &[usize]) -> Partition {
    let k = color_count(coloring);
    let mut classes = vec![VertexSet::empty(n); k];
    for (v, &c) in coloring.iter().enumerate() {
        classes[c].insert(v as u32);
    }
    classes.retain(|c| !c.is_empty());
    Partition::new(n, classes).expect("coloring induces a partition")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, Graph};

    fn chi(g: &Graph) -> usize {
        chromatic_number(g, &Budget::UNLIMITED).value().unwrap()
    }

    #[test]
    fn basic_values() {
        assert_eq!(chi(&Graph::empty(4)), 1);
        assert_eq!(chi(&complete(5)), 5);
        assert_eq!(chi(&cycle(6)), 2);
        assert_eq!(chi(&cycle(7)), 3);
        assert_eq!(chi(&path(5)), 2);
        assert_eq!(chi(&crate::graph::petersen()), 3);
    }

    #[test]
    fn certificate_is_proper_partition() {
        let g = cycle(7);
        let r = chromatic_number(&g, &Budget::UNLIMITED);
        let p = r.certificate.unwrap();
        let classes = p.as_classes().unwrap().classes().to_vec();
        assert_eq!(classes.len(), 3);
        for class in &classes {
            for v in class.iter() {
                for &w in g.neighbors(v) {
                    assert!(!class.contains(w), "class contains edge {v}-{w}");
                }
            }
        }
    }

    #[test]
    fn empty_graph_has_zero_colors() {
        let r = chromatic_number(&Graph::empty(0), &Budget::UNLIMITED);
        assert_eq!(r.value(), Some(0));
    }
}
