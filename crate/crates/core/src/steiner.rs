// SPDX-License-Identifier: Apache-2.0

//! Steiner distances of terminal sets and the indices built on them.
//!
//! The exact solver is the Dreyfus-Wagner subset recursion specialized to unit
//! edge weights: `merged[T][v]` joins two trees for complementary parts of the
//! terminal subset `T` at `v`, and `dp[T][v] = min_u merged[T][u] + dist(u, v)`
//! grows the joint along a shortest path. The oracle minimizes `|W| - 1` over
//! connected induced subgraphs `G[W]` with `W` containing the terminals and
//! shares no code with the recursion.

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

const INF: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SteinerError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("terminal set is empty")]
    EmptyTerminalSet,
    #[error("{count} terminals exceed the configured limit of {limit}")]
    TooManyTerminals { count: usize, limit: usize },
    #[error("the oracle is limited to order {limit}, graph has order {order}")]
    OracleTooLarge { order: usize, limit: usize },
    #[error("subset enumeration needs order <= 64, graph has order {0}")]
    OrderTooLarge(usize),
    #[error("subset size {k} outside {min}..={max}")]
    SubsetSizeOutOfRange { k: usize, min: usize, max: usize },
}

/// Size caps for the exponential routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest terminal set the subset recursion accepts.
    pub max_terminals: usize,
    /// Largest order the vertex-superset oracle accepts.
    pub max_oracle_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_terminals: 10,
            max_oracle_order: 16,
        }
    }
}

/// A tree subgraph of the host graph; its size is its edge count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SteinerTree {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl SteinerTree {
    pub fn size(&self) -> usize {
        self.edges.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SteinerDistance {
    Reachable(SteinerTree),
    /// The terminals meet at least two components.
    Unreachable,
}

impl SteinerDistance {
    pub fn value(&self) -> Option<usize> {
        match self {
            SteinerDistance::Reachable(tree) => Some(tree.size()),
            SteinerDistance::Unreachable => None,
        }
    }

    pub fn tree(&self) -> Option<&SteinerTree> {
        match self {
            SteinerDistance::Reachable(tree) => Some(tree),
            SteinerDistance::Unreachable => None,
        }
    }
}

fn normalize_terminals(g: &Graph, terminals: &[usize]) -> Result<Vec<usize>, SteinerError> {
    if terminals.is_empty() {
        return Err(SteinerError::EmptyTerminalSet);
    }
    Ok(VertexSet::from_members(g.order(), terminals.iter().copied())?.to_vec())
}

/// Exact Steiner distances over one graph, sharing its all-pairs distances.
pub struct SteinerSolver<'g> {
    graph: &'g Graph,
    dist: Vec<u32>,
    limits: Limits,
}

impl<'g> SteinerSolver<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self::with_limits(graph, Limits::default())
    }

    pub fn with_limits(graph: &'g Graph, limits: Limits) -> Self {
        let n = graph.order();
        let mut dist = vec![INF; n * n];
        for s in 0..n {
            for (t, d) in graph.bfs_distances(s).into_iter().enumerate() {
                if let Some(d) = d {
                    dist[s * n + t] = d as u32;
                }
            }
        }
        SteinerSolver {
            graph,
            dist,
            limits,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    fn d(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.graph.order() + v]
    }

    /// Minimum Steiner tree for `terminals`, with a witness tree.
    pub fn solve(&self, terminals: &[usize]) -> Result<SteinerDistance, SteinerError> {
        let terminals = normalize_terminals(self.graph, terminals)?;
        if terminals.len() > self.limits.max_terminals {
            return Err(SteinerError::TooManyTerminals {
                count: terminals.len(),
                limit: self.limits.max_terminals,
            });
        }
        if terminals.iter().any(|&t| self.d(terminals[0], t) == INF) {
            return Ok(SteinerDistance::Unreachable);
        }
        let table = self.fill(&terminals, true);
        let full = (1usize << terminals.len()) - 1;
        let mut edges = BTreeSet::new();
        table.collect(self, full, terminals[0], &mut edges);
        let mut vertices: BTreeSet<usize> = terminals.iter().copied().collect();
        for &(u, v) in &edges {
            vertices.insert(u);
            vertices.insert(v);
        }
        debug_assert_eq!(edges.len() as u32, table.dp[full * table.n + terminals[0]]);
        Ok(SteinerDistance::Reachable(SteinerTree {
            vertices: vertices.into_iter().collect(),
            edges: edges.into_iter().collect(),
        }))
    }

    /// The Steiner distance alone. Terminals must be distinct, in range and
    /// within the terminal cap; `None` means unreachable.
    pub fn distance(&self, terminals: &[usize]) -> Option<usize> {
        debug_assert!(!terminals.is_empty() && terminals.len() <= self.limits.max_terminals);
        if terminals.len() == 1 {
            return Some(0);
        }
        let root = terminals[0];
        if terminals.iter().any(|&t| self.d(root, t) == INF) {
            return None;
        }
        if terminals.len() == 2 {
            return Some(self.d(root, terminals[1]) as usize);
        }
        let table = self.fill(terminals, false);
        let full = (1usize << terminals.len()) - 1;
        Some(table.dp[full * table.n + root] as usize)
    }

    fn fill(&self, terminals: &[usize], keep_witness: bool) -> DpTable {
        let n = self.graph.order();
        let k = terminals.len();
        let masks = 1usize << k;
        let mut table = DpTable {
            n,
            dp: vec![INF; masks * n],
            source: if keep_witness { vec![0; masks * n] } else { Vec::new() },
            split: if keep_witness { vec![0; masks * n] } else { Vec::new() },
        };
        let mut merged = vec![INF; n];
        for mask in 1..masks {
            merged.fill(INF);
            if mask.is_power_of_two() {
                merged[terminals[mask.trailing_zeros() as usize]] = 0;
            } else {
                let low = mask & mask.wrapping_neg();
                let rest = mask ^ low;
                // submasks of `rest`, each joined with `low`, enumerate every
                // unordered split once
                let mut sub = rest;
                loop {
                    let part = sub | low;
                    if part != mask {
                        let other = mask ^ part;
                        for (v, best) in merged.iter_mut().enumerate() {
                            let a = table.dp[part * n + v];
                            let b = table.dp[other * n + v];
                            if a != INF && b != INF && a + b < *best {
                                *best = a + b;
                                if keep_witness {
                                    table.split[mask * n + v] = part;
                                }
                            }
                        }
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & rest;
                }
            }
            for v in 0..n {
                let mut best = INF;
                let mut from = v;
                for (u, &m) in merged.iter().enumerate() {
                    let d = self.d(u, v);
                    if m != INF && d != INF && m + d < best {
                        best = m + d;
                        from = u;
                    }
                }
                table.dp[mask * n + v] = best;
                if keep_witness {
                    table.source[mask * n + v] = from;
                }
            }
        }
        table
    }

    fn shortest_path_edges(&self, from: usize, to: usize, out: &mut BTreeSet<(usize, usize)>) {
        let mut at = to;
        while at != from {
            let step = self
                .graph
                .neighbors(at)
                .iter()
                .find(|&w| self.d(from, w) + 1 == self.d(from, at))
                .expect("a shortest path steps one closer");
            out.insert((at.min(step), at.max(step)));
            at = step;
        }
    }
}

struct DpTable {
    n: usize,
    dp: Vec<u32>,
    source: Vec<usize>,
    split: Vec<usize>,
}

impl DpTable {
    fn collect(
        &self,
        solver: &SteinerSolver<'_>,
        mask: usize,
        v: usize,
        out: &mut BTreeSet<(usize, usize)>,
    ) {
        let u = self.source[mask * self.n + v];
        solver.shortest_path_edges(u, v, out);
        if !mask.is_power_of_two() {
            let part = self.split[mask * self.n + u];
            self.collect(solver, part, u, out);
            self.collect(solver, mask ^ part, u, out);
        }
    }
}

pub fn steiner_distance(g: &Graph, terminals: &[usize]) -> Result<SteinerDistance, SteinerError> {
    SteinerSolver::new(g).solve(terminals)
}

/// Brute force over vertex supersets of the terminals: the smallest `W` with
/// `G[W]` connected gives `d(S) = |W| - 1`, realized by any spanning tree of `G[W]`.
pub fn steiner_distance_oracle(
    g: &Graph,
    terminals: &[usize],
    limits: &Limits,
) -> Result<SteinerDistance, SteinerError> {
    let terminals = normalize_terminals(g, terminals)?;
    let n = g.order();
    if n > limits.max_oracle_order || n > 63 {
        return Err(SteinerError::OracleTooLarge {
            order: n,
            limit: limits.max_oracle_order.min(63),
        });
    }
    let rows: Vec<u64> = (0..n).map(|v| g.neighbors(v).low_word()).collect();
    let required: u64 = terminals.iter().fold(0, |m, &t| m | 1 << t);
    let free: Vec<usize> = (0..n).filter(|v| required >> v & 1 == 0).collect();
    let mut best: Option<u64> = None;
    for pick in 0u64..(1 << free.len()) {
        let mut w = required;
        for (i, &v) in free.iter().enumerate() {
            if pick >> i & 1 == 1 {
                w |= 1 << v;
            }
        }
        if best.is_some_and(|b| b.count_ones() <= w.count_ones()) {
            continue;
        }
        if mask_connected(&rows, w) {
            best = Some(w);
        }
    }
    let Some(w) = best else {
        return Ok(SteinerDistance::Unreachable);
    };
    // breadth-first spanning tree of G[W]
    let root = w.trailing_zeros() as usize;
    let mut seen = 1u64 << root;
    let mut queue = std::collections::VecDeque::from([root]);
    let mut edges = Vec::new();
    while let Some(v) = queue.pop_front() {
        let mut next = rows[v] & w & !seen;
        seen |= next;
        while next != 0 {
            let u = next.trailing_zeros() as usize;
            next &= next - 1;
            edges.push((v.min(u), v.max(u)));
            queue.push_back(u);
        }
    }
    edges.sort_unstable();
    Ok(SteinerDistance::Reachable(SteinerTree {
        vertices: (0..n).filter(|v| w >> v & 1 == 1).collect(),
        edges,
    }))
}

fn mask_connected(rows: &[u64], w: u64) -> bool {
    if w == 0 {
        return true;
    }
    let mut seen = w & w.wrapping_neg();
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = rows[v] & w & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == w
}

/// Iterates the `k`-subsets of `0..n` (`n <= 64`) as bitmasks in increasing order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    assert!(n <= 64);
    let limit: u128 = 1u128 << n;
    let mut next: Option<u64> = match k {
        0 => Some(0),
        _ if k > n => None,
        _ => Some(((1u128 << k) - 1) as u64),
    };
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 {
            None
        } else {
            // Gosper's hack
            let low = current & current.wrapping_neg();
            let ripple = current as u128 + low as u128;
            let ones = (((ripple as u64 ^ current) >> 2) / low) as u128;
            let candidate = ripple | ones;
            (candidate < limit).then_some(candidate as u64)
        };
        Some(current)
    })
}

fn mask_members(mask: u64, buf: &mut Vec<usize>) {
    buf.clear();
    let mut rest = mask;
    while rest != 0 {
        buf.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
}

fn check_subset_size(g: &Graph, k: usize, min: usize) -> Result<(), SteinerError> {
    let n = g.order();
    if k < min || k > n {
        return Err(SteinerError::SubsetSizeOutOfRange { k, min, max: n });
    }
    if n > 64 {
        return Err(SteinerError::OrderTooLarge(n));
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    Ok(())
}

fn checked_solver(g: &Graph, k: usize, min: usize) -> Result<SteinerSolver<'_>, SteinerError> {
    check_subset_size(g, k, min)?;
    let limits = Limits::default();
    if k > limits.max_terminals {
        return Err(SteinerError::TooManyTerminals {
            count: k,
            limit: limits.max_terminals,
        });
    }
    Ok(SteinerSolver::with_limits(g, limits))
}

/// Folds `d(S)` over every `k`-subset of a connected graph.
fn for_each_subset_distance(solver: &SteinerSolver<'_>, k: usize, mut visit: impl FnMut(u64, usize)) {
    let n = solver.graph().order();
    let mut members = Vec::with_capacity(k);
    for mask in k_subsets(n, k) {
        mask_members(mask, &mut members);
        let d = solver
            .distance(&members)
            .expect("connected graphs reach every subset");
        visit(mask, d);
    }
}

/// `e_k(v)`: the largest Steiner distance of a `k`-set containing `v`.
pub fn steiner_eccentricity(g: &Graph, v: usize, k: usize) -> Result<usize, SteinerError> {
    let solver = checked_solver(g, k, 2)?;
    if v >= g.order() {
        return Err(GraphError::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        }
        .into());
    }
    let mut ecc = 0;
    let mut members = Vec::with_capacity(k);
    for rest in k_subsets(g.order() - 1, k - 1) {
        // spread the (n-1)-bit mask around v
        let low = rest & ((1u64 << v) - 1);
        let high = (rest >> v).checked_shl(v as u32 + 1).unwrap_or(0);
        mask_members(low | high | 1 << v, &mut members);
        ecc = ecc.max(solver.distance(&members).expect("connected"));
    }
    Ok(ecc)
}

/// Steiner `k`-eccentricities of every vertex with the derived radius,
/// diameter and center.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SteinerProfile {
    pub k: usize,
    pub eccentricities: Vec<usize>,
    pub radius: usize,
    pub diameter: usize,
    pub center: Vec<usize>,
}

pub fn steiner_profile(g: &Graph, k: usize) -> Result<SteinerProfile, SteinerError> {
    let solver = checked_solver(g, k, 2)?;
    let mut ecc = vec![0usize; g.order()];
    for_each_subset_distance(&solver, k, |mask, d| {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            ecc[v] = ecc[v].max(d);
        }
    });
    let radius = *ecc.iter().min().expect("k >= 2 implies vertices");
    let diameter = *ecc.iter().max().expect("k >= 2 implies vertices");
    let center = (0..g.order()).filter(|&v| ecc[v] == radius).collect();
    Ok(SteinerProfile {
        k,
        eccentricities: ecc,
        radius,
        diameter,
        center,
    })
}

pub fn steiner_diameter(g: &Graph, k: usize) -> Result<usize, SteinerError> {
    let solver = checked_solver(g, k, 2)?;
    let mut best = 0;
    for_each_subset_distance(&solver, k, |_, d| best = best.max(d));
    Ok(best)
}

/// `SW_k`: the sum of `d(S)` over all `k`-subsets, `1 <= k <= n`.
pub fn steiner_wiener_index(g: &Graph, k: usize) -> Result<u64, SteinerError> {
    let solver = checked_solver(g, k, 1)?;
    let mut total = 0u64;
    for_each_subset_distance(&solver, k, |_, d| total += d as u64);
    Ok(total)
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// `mu_k = SW_k / C(n, k)` as a reduced fraction.
pub fn average_steiner_distance(g: &Graph, k: usize) -> Result<Ratio<u64>, SteinerError> {
    check_subset_size(g, k, 2)?;
    let total = steiner_wiener_index(g, k)?;
    Ok(Ratio::new(total, binomial(g.order(), k)))
}
