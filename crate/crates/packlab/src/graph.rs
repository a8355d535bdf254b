//! Simple undirected graphs and vertex sets.
//!
//! `Graph` is an immutable simple graph over vertices `0..n` with sorted
//! adjacency lists. `VertexSet` is a bit-vector backed subset of a vertex
//! range and is the currency in which packings, dominating sets, codes and
//! coloring classes are passed around and certified.

use std::fmt;

use thiserror::Error;

/// Errors raised while building a graph from raw edges.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: u32, order: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: u32 },
}

/// Errors raised while parsing the edge-list document format.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: expected header `n m`")]
    BadHeader { line: usize },
    #[error("line {line}: malformed edge `{content}`")]
    MalformedEdge { line: usize, content: String },
    #[error("line {line}: vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange {
        line: usize,
        vertex: u64,
        order: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: u32 },
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
}

const WORD_BITS: usize = 64;

/// A subset of `0..universe`, stored as a bit vector.
///
/// Iteration is always in increasing vertex order, which keeps certificates
/// and search traces reproducible.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
    len: usize,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; universe.div_ceil(WORD_BITS)],
            len: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut words = vec![u64::MAX; universe.div_ceil(WORD_BITS)];
        if let Some(last) = words.last_mut() {
            let tail = universe % WORD_BITS;
            if tail != 0 {
                *last = (1u64 << tail) - 1;
            }
        }
        VertexSet {
            universe,
            words,
            len: universe,
        }
    }

    pub fn from_members(universe: usize, members: impl IntoIterator<Item = u32>) -> Self {
        let mut set = Self::empty(universe);
        for v in members {
            set.insert(v);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: u32) -> bool {
        let v = v as usize;
        v < self.universe && (self.words[v / WORD_BITS] >> (v % WORD_BITS)) & 1 == 1
    }

    /// Inserts `v`; returns true if it was not present.
    ///
    /// Panics if `v` is outside the universe: sets are bound to a fixed
    /// vertex range by construction.
    pub fn insert(&mut self, v: u32) -> bool {
        assert!(
            (v as usize) < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        let (w, b) = (v as usize / WORD_BITS, v as usize % WORD_BITS);
        let fresh = (self.words[w] >> b) & 1 == 0;
        if fresh {
            self.words[w] |= 1 << b;
            self.len += 1;
        }
        fresh
    }

    /// Removes `v`; returns true if it was present.
    pub fn remove(&mut self, v: u32) -> bool {
        if !self.contains(v) {
            return false;
        }
        let (w, b) = (v as usize / WORD_BITS, v as usize % WORD_BITS);
        self.words[w] &= !(1 << b);
        self.len -= 1;
        true
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let base = (i * WORD_BITS) as u32;
            BitIter { word, base }
        })
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<u32> {
        self.words.iter().enumerate().find_map(|(i, &w)| {
            if w != 0 {
                Some((i * WORD_BITS) as u32 + w.trailing_zeros())
            } else {
                None
            }
        })
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & b == 0)
    }

    /// Lowest-index vertex in the intersection, if any.
    pub fn first_common(&self, other: &VertexSet) -> Option<u32> {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .enumerate()
            .find_map(|(i, (a, b))| {
                let w = a & b;
                if w != 0 {
                    Some((i * WORD_BITS) as u32 + w.trailing_zeros())
                } else {
                    None
                }
            })
    }

    pub fn intersection_count(&self, other: &VertexSet) -> usize {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        self.len = self.words.iter().map(|w| w.count_ones() as usize).sum();
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        self.len = self.words.iter().map(|w| w.count_ones() as usize).sum();
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        self.len = self.words.iter().map(|w| w.count_ones() as usize).sum();
    }

    /// Removes every member strictly below `v`.
    pub fn remove_below(&mut self, v: u32) {
        let (w, b) = (v as usize / WORD_BITS, v as usize % WORD_BITS);
        let full_words = w.min(self.words.len());
        for word in self.words.iter_mut().take(full_words) {
            *word = 0;
        }
        if w < self.words.len() && b != 0 {
            self.words[w] &= !((1u64 << b) - 1);
        }
        self.len = self.words.iter().map(|x| x.count_ones() as usize).sum();
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

struct BitIter {
    word: u64,
    base: u32,
}

impl Iterator for BitIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.word == 0 {
            return None;
        }
        let bit = self.word.trailing_zeros();
        self.word &= self.word - 1;
        Some(self.base + bit)
    }
}

/// An immutable simple undirected graph on vertices `0..vertex_count`.
///
/// Adjacency lists are sorted and deduplicated; the structure rejects
/// self-loops and out-of-range endpoints at construction, so every stored
/// graph satisfies the symmetry and range invariants.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Graph with `order` vertices and no edges.
    pub fn empty(order: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); order],
        }
    }

    /// Builds a graph from an edge list, deduplicating repeated edges.
    pub fn from_edges(
        order: usize,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); order];
        for (u, v) in edges {
            if u as usize >= order {
                return Err(GraphError::VertexOutOfRange { vertex: u, order });
            }
            if v as usize >= order {
                return Err(GraphError::VertexOutOfRange { vertex: v, order });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let u = u as u32;
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Lowest-index common neighbor of `u` and `v`, if any.
    pub fn common_neighbor(&self, u: u32, v: u32) -> Option<u32> {
        let (mut a, mut b) = (self.neighbors(u).iter(), self.neighbors(v).iter());
        let (mut x, mut y) = (a.next(), b.next());
        while let (Some(&p), Some(&q)) = (x, y) {
            match p.cmp(&q) {
                std::cmp::Ordering::Less => x = a.next(),
                std::cmp::Ordering::Greater => y = b.next(),
                std::cmp::Ordering::Equal => return Some(p),
            }
        }
        None
    }

    /// Open neighborhood as a vertex set.
    pub fn open_neighborhood(&self, v: u32) -> VertexSet {
        VertexSet::from_members(self.vertex_count(), self.neighbors(v).iter().copied())
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: u32) -> VertexSet {
        let mut set = self.open_neighborhood(v);
        set.insert(v);
        set
    }

    /// Degree shared by all vertices, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degrees = self.adj.iter().map(Vec::len);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut seen = VertexSet::empty(n);
        let mut queue = vec![0u32];
        seen.insert(0);
        while let Some(u) = queue.pop() {
            for &w in self.neighbors(u) {
                if seen.insert(w) {
                    queue.push(w);
                }
            }
        }
        seen.len() == n
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={})",
            self.vertex_count(),
            self.edge_count()
        )
    }
}

/// Parses the edge-list document format.
///
/// The first non-comment line is `n m`; each following non-comment line is
/// one edge `u v` with 0-based endpoints. `#` starts a comment that runs to
/// the end of the line. Repeated edges are deduplicated.
pub fn graph_from_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let stripped = raw.split('#').next().unwrap_or("").trim();
        (!stripped.is_empty()).then_some((i + 1, stripped))
    });

    let (header_line, header) = lines.next().ok_or(EdgeListError::BadHeader { line: 1 })?;
    let mut parts = header.split_whitespace();
    let order: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(EdgeListError::BadHeader { line: header_line })?;
    let expected: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(EdgeListError::BadHeader { line: header_line })?;
    if parts.next().is_some() {
        return Err(EdgeListError::BadHeader { line: header_line });
    }

    let mut edges = Vec::with_capacity(expected);
    for (line, content) in lines {
        let mut parts = content.split_whitespace();
        let u: u64 = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| EdgeListError::MalformedEdge {
                line,
                content: content.to_string(),
            })?;
        let v: u64 = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| EdgeListError::MalformedEdge {
                line,
                content: content.to_string(),
            })?;
        if parts.next().is_some() {
            return Err(EdgeListError::MalformedEdge {
                line,
                content: content.to_string(),
            });
        }
        for w in [u, v] {
            if w >= order as u64 {
                return Err(EdgeListError::VertexOutOfRange {
                    line,
                    vertex: w,
                    order,
                });
            }
        }
        if u == v {
            return Err(EdgeListError::SelfLoop {
                line,
                vertex: u as u32,
            });
        }
        edges.push((u as u32, v as u32));
    }
    if edges.len() != expected {
        return Err(EdgeListError::EdgeCountMismatch {
            expected,
            found: edges.len(),
        });
    }
    // Range and loop checks already done line by line.
    Ok(Graph::from_edges(order, edges).expect("validated edges"))
}

/// Serializes a graph in the edge-list document format.
pub fn graph_to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Two-colors the graph by breadth-first parity, component by component.
///
/// The lowest-index vertex of each component goes to part `A`. Returns
/// `None` iff the graph contains an odd cycle.
pub fn bipartition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let n = g.vertex_count();
    let mut side = vec![2u8; n]; // 2 = unvisited
    let mut part_a = VertexSet::empty(n);
    let mut part_b = VertexSet::empty(n);
    let mut queue = std::collections::VecDeque::new();

    for root in 0..n as u32 {
        if side[root as usize] != 2 {
            continue;
        }
        side[root as usize] = 0;
        part_a.insert(root);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                match side[w as usize] {
                    2 => {
                        side[w as usize] = 1 - side[u as usize];
                        if side[w as usize] == 0 {
                            part_a.insert(w);
                        } else {
                            part_b.insert(w);
                        }
                        queue.push_back(w);
                    }
                    s if s == side[u as usize] => return None,
                    _ => {}
                }
            }
        }
    }
    Some((part_a, part_b))
}

/// Which neighborhoods must be disjoint inside a packing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConflictKind {
    /// Closed neighborhoods: conflicts are pairs at distance at most 2.
    Closed,
    /// Open neighborhoods: conflicts are pairs sharing a common neighbor.
    Open,
}

/// Derived graph whose independent sets are exactly the packings of `g`.
///
/// `Closed` joins distinct `u, v` with `N[u] ∩ N[v] ≠ ∅`; `Open` joins
/// distinct `u, v` with `N(u) ∩ N(v) ≠ ∅`. The vertex set is unchanged.
pub fn conflict_graph(g: &Graph, kind: ConflictKind) -> Graph {
    let n = g.vertex_count();
    let mut marked = vec![false; n];
    let mut touched: Vec<u32> = Vec::new();
    let mut adj = vec![Vec::new(); n];

    for u in 0..n as u32 {
        for &w in g.neighbors(u) {
            for &v in g.neighbors(w) {
                if v != u && !marked[v as usize] {
                    marked[v as usize] = true;
                    touched.push(v);
                }
            }
        }
        if kind == ConflictKind::Closed {
            for &v in g.neighbors(u) {
                if !marked[v as usize] {
                    marked[v as usize] = true;
                    touched.push(v);
                }
            }
        }
        touched.sort_unstable();
        adj[u as usize] = touched.clone();
        for &v in &touched {
            marked[v as usize] = false;
        }
        touched.clear();
    }
    Graph { adj }
}

/// Path on `n` vertices `0 - 1 - … - n-1`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n as u32).map(|v| (v - 1, v))).expect("valid path")
}

/// Cycle on `n ≥ 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges = (0..n as u32).map(|v| (v, (v + 1) % n as u32));
    Graph::from_edges(n, edges).expect("valid cycle")
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let edges = (0..n as u32).flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("valid complete graph")
}

/// The Petersen graph: outer 5-cycle 0–4, inner pentagram 5–9, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5u32 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges(10, edges).expect("valid Petersen graph")
}
