// SPDX-License-Identifier: Apache-2.0

//! Exhaustive corpora of small graphs up to isomorphism.
//!
//! Canonical labels come from colour refinement with individualization: every
//! leaf of the search tree is a discrete ordered partition, and the canonical
//! code is the largest adjacency code among the leaves. New orders are grown
//! one vertex at a time from the previous order and deduplicated by code.

use std::collections::HashSet;

use crate::graph::Graph;

/// Largest order accepted by [`canonical_code`]: the code packs the upper
/// triangle into a `u128`.
pub const MAX_CANONICAL_ORDER: usize = 16;

fn compress(keys: &[u64]) -> Vec<u32> {
    let mut sorted: Vec<u64> = keys.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("key present") as u32)
        .collect()
}

fn colour_count(colours: &[u32]) -> usize {
    colours.iter().max().map_or(0, |&c| c as usize + 1)
}

/// Splits colour classes by neighbour colour counts until stable.
fn refine(g: &Graph, colours: &mut Vec<u32>) {
    let n = g.order();
    loop {
        let before = colour_count(colours);
        let mut signatures: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut around: Vec<u32> = g.neighbors(v).iter().map(|w| colours[w]).collect();
                around.sort_unstable();
                (colours[v], around)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<u32> = signatures
            .drain(..)
            .map(|s| distinct.binary_search(&s).expect("signature present") as u32)
            .collect();
        *colours = next;
        if colour_count(colours) == before {
            return;
        }
    }
}

fn code_for(g: &Graph, position: &[u32]) -> u128 {
    let n = g.order();
    let mut at = vec![0usize; n];
    for (v, &p) in position.iter().enumerate() {
        at[p as usize] = v;
    }
    let mut code = 0u128;
    for j in 1..n {
        for i in 0..j {
            code = (code << 1) | g.has_edge(at[i], at[j]) as u128;
        }
    }
    code
}

fn search(g: &Graph, mut colours: Vec<u32>, best: &mut Option<(u128, Vec<u32>)>) {
    refine(g, &mut colours);
    let n = g.order();
    if colour_count(&colours) == n {
        let code = code_for(g, &colours);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, colours));
        }
        return;
    }
    let mut sizes = vec![0usize; n];
    for &c in &colours {
        sizes[c as usize] += 1;
    }
    let target = sizes.iter().position(|&s| s > 1).expect("non-discrete partition") as u32;
    for v in (0..n).filter(|&v| colours[v] == target) {
        let keys: Vec<u64> = colours
            .iter()
            .enumerate()
            .map(|(w, &c)| 2 * c as u64 + (c == target && w != v) as u64)
            .collect();
        search(g, compress(&keys), best);
    }
}

/// Canonical code and a relabeling `v -> position` that realizes it.
fn canonical(g: &Graph) -> (u128, Vec<u32>) {
    assert!(
        g.order() <= MAX_CANONICAL_ORDER,
        "canonical codes support order <= {MAX_CANONICAL_ORDER}"
    );
    let mut best = None;
    search(g, vec![0; g.order()], &mut best);
    best.unwrap_or((0, Vec::new()))
}

/// An isomorphism invariant that separates non-isomorphic graphs of the same order.
pub fn canonical_code(g: &Graph) -> u128 {
    canonical(g).0
}

/// The isomorphic copy of `g` whose labeling realizes the canonical code.
pub fn canonical_form(g: &Graph) -> Graph {
    let (_, position) = canonical(g);
    let edges = g
        .edges()
        .into_iter()
        .map(|(u, v)| (position[u] as usize, position[v] as usize));
    Graph::new(g.order(), edges).expect("relabeling preserves validity")
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b)
}

fn extend(previous: &[Graph], n: usize) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for base in previous {
        let edges = base.edges();
        for mask in 0u32..(1 << (n - 1)) {
            let mut all = edges.clone();
            all.extend((0..n - 1).filter(|v| mask >> v & 1 == 1).map(|v| (v, n - 1)));
            let g = Graph::new(n, all).expect("extension edges are valid");
            let (code, _) = canonical(&g);
            if seen.insert(code) {
                out.push((code, canonical_form(&g)));
            }
        }
    }
    out.sort_by_key(|(code, g)| (g.size(), *code));
    out.into_iter().map(|(_, g)| g).collect()
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// ordered by edge count then canonical code.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 10, "exhaustive generation is limited to order 10");
    let mut level = vec![Graph::empty(0)];
    for order in 1..=n {
        level = extend(&level, order);
    }
    level
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}
