// SPDX-License-Identifier: Apache-2.0

//! Simple undirected graphs on dense vertex labels `0..n`.
//!
//! Adjacency rows are bitsets. Up to 64 vertices a row is a single inline
//! word; larger graphs spill the row onto the heap and every operation keeps
//! working, only slower.

use std::fmt;

use smallvec::{smallvec, SmallVec};
use thiserror::Error;

type Words = SmallVec<[u64; 1]>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
}

/// A subset of `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Words,
}

fn word_count(n: usize) -> usize {
    n.div_ceil(64)
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: smallvec![0; word_count(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for (i, w) in set.words.iter_mut().enumerate() {
            let remaining = universe - i * 64;
            *w = if remaining >= 64 {
                u64::MAX
            } else {
                (1u64 << remaining) - 1
            };
        }
        set
    }

    /// Builds a set from explicit members, rejecting labels outside the universe.
    /// Duplicates collapse.
    pub fn from_members<I>(universe: usize, members: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(universe);
        for v in members {
            if v >= universe {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    order: universe,
                });
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Builds a set from the low `universe` bits of a mask. Requires `universe <= 64`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= 64, "mask sets need universe <= 64");
        let mut set = Self::empty(universe);
        if universe > 0 {
            let keep = if universe == 64 {
                u64::MAX
            } else {
                (1u64 << universe) - 1
            };
            set.words[0] = mask & keep;
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.universe);
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.universe);
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] & (1u64 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// First word of the bitset; the whole set when `universe <= 64`.
    pub fn low_word(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + bit)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = vec![VertexSet::empty(n); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(rows))
    }

    fn from_rows(rows: Vec<VertexSet>) -> Self {
        let edge_count = rows.iter().map(VertexSet::len).sum::<usize>() / 2;
        Graph { rows, edge_count }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_rows(vec![VertexSet::empty(n); n])
    }

    pub fn complete(n: usize) -> Self {
        Self::empty(n).complement()
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    /// The cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    /// The star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Self::new(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star edges are valid")
    }

    pub fn complete_bipartite(left: usize, right: usize) -> Self {
        let edges = (0..left).flat_map(|u| (left..left + right).map(move |v| (u, v)));
        Self::new(left + right, edges).expect("bipartite edges are valid")
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order())
            .flat_map(|u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let full = VertexSet::full(n);
        let rows = (0..n)
            .map(|v| {
                let mut row = full.clone();
                row.difference_with(&self.rows[v]);
                row.remove(v);
                row
            })
            .collect();
        Self::from_rows(rows)
    }

    /// The same vertex set with edge `{u, v}` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut rows = self.rows.clone();
        if u < rows.len() && v < rows.len() {
            rows[u].remove(v);
            rows[v].remove(u);
        }
        Self::from_rows(rows)
    }

    /// The same vertex set with edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut edges = self.edges();
        edges.push((u, v));
        Graph::new(self.order(), edges)
    }

    /// The subgraph induced by `keep`, relabeled densely in increasing order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let labels: Vec<usize> = keep.iter().collect();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| keep.contains(u) && keep.contains(v))
            .map(|(u, v)| (index[u], index[v]));
        Graph::new(labels.len(), edges).expect("induced edges are valid")
    }

    /// Every vertex reachable from `start` while staying inside `within`.
    pub fn reachable_within(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::empty(self.order());
        if !within.contains(start) {
            return seen;
        }
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in self.rows[v].iter() {
                if within.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Whether the subgraph induced by `within` is connected. The empty set
    /// counts as connected.
    pub fn is_connected_within(&self, within: &VertexSet) -> bool {
        match within.first() {
            None => true,
            Some(start) => self.reachable_within(start, within).len() == within.len(),
        }
    }

    /// One component means connected; the null graph and `K_1` are connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_within(&self.vertex_set())
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let next = dist[v].map(|d| d + 1);
            for w in self.rows[v].iter() {
                if dist[w].is_none() {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices whose deletion leaves the graph connected, found with one
    /// depth-first low-link pass.
    pub fn non_cut_vertices(&self) -> Result<VertexSet, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let n = self.order();
        let mut result = VertexSet::full(n);
        if n <= 2 {
            return Ok(result);
        }
        const UNSEEN: usize = usize::MAX;
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut timer = 0;
        let root = 0;
        let mut root_children = 0;
        // (vertex, parent, remaining neighbours)
        let mut stack: Vec<(usize, usize, Vec<usize>)> = Vec::new();
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, UNSEEN, self.rows[root].to_vec()));
        while let Some((v, parent, pending)) = stack.last_mut() {
            let (v, parent) = (*v, *parent);
            if let Some(w) = pending.pop() {
                if disc[w] == UNSEEN {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, self.rows[w].to_vec()));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != UNSEEN {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        result.remove(parent);
                    }
                }
            }
        }
        if root_children > 1 {
            result.remove(root);
        }
        Ok(result)
    }

    /// Whether some four distinct vertices `a, b, c, d` carry the edges
    /// `ab, bc, cd, da`. Equivalent to two vertices sharing two neighbours.
    pub fn contains_c4(&self) -> bool {
        let n = self.order();
        (0..n).any(|u| (u + 1..n).any(|w| self.rows[u].intersection_len(&self.rows[w]) >= 2))
    }

    /// Vertices surviving repeated removal of vertices of degree below two.
    pub fn two_core(&self) -> VertexSet {
        let mut alive = self.vertex_set();
        let mut degree: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        let mut queue: Vec<usize> = (0..self.order()).filter(|&v| degree[v] < 2).collect();
        while let Some(v) = queue.pop() {
            if !alive.contains(v) {
                continue;
            }
            alive.remove(v);
            for w in self.rows[v].iter() {
                if alive.contains(w) {
                    degree[w] -= 1;
                    if degree[w] < 2 {
                        queue.push(w);
                    }
                }
            }
        }
        alive
    }

    /// Length of a longest cycle, or `None` for forests. Exact backtracking
    /// search restricted to the 2-core; meant for desk-scale graphs.
    pub fn circumference(&self) -> Option<usize> {
        let core = self.two_core();
        if core.is_empty() {
            return None;
        }
        let mut search = CycleSearch {
            graph: self,
            best: 0,
            on_path: VertexSet::empty(self.order()),
        };
        let members = core.to_vec();
        for (i, &start) in members.iter().enumerate() {
            let mut allowed = core.clone();
            for &v in &members[..i] {
                allowed.remove(v);
            }
            // no cycle through `start` can use more vertices than remain
            if allowed.len() <= search.best {
                break;
            }
            search.on_path.insert(start);
            search.extend(start, start, 1, &allowed);
            search.on_path.remove(start);
        }
        (search.best >= 3).then_some(search.best)
    }
}

struct CycleSearch<'g> {
    graph: &'g Graph,
    best: usize,
    on_path: VertexSet,
}

impl CycleSearch<'_> {
    fn extend(&mut self, start: usize, tip: usize, len: usize, allowed: &VertexSet) {
        if len >= 3 && self.graph.has_edge(tip, start) {
            self.best = self.best.max(len);
        }
        let mut reachable = allowed.clone();
        reachable.difference_with(&self.on_path);
        if len + reachable.len() <= self.best {
            return;
        }
        for w in self.graph.neighbors(tip).iter() {
            if allowed.contains(w) && !self.on_path.contains(w) {
                self.on_path.insert(w);
                self.extend(start, w, len + 1, allowed);
                self.on_path.remove(w);
            }
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges())
            .finish()
    }
}

/// Parses the plain `n m` header followed by `m` lines of `u v`. Blank lines
/// and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let bad = |line: usize, message: &str| GraphError::EdgeList {
        line,
        message: message.to_string(),
    };
    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize), GraphError> {
        let mut it = l.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(bad(line, "expected two non-negative integers")),
        }
    };
    let (line, header) = lines.next().ok_or_else(|| bad(0, "missing `n m` header"))?;
    let (n, m) = parse_pair(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        edges.push(parse_pair(line, l)?);
    }
    if edges.len() != m {
        return Err(bad(
            line,
            &format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

pub fn format_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
