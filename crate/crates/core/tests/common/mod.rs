// SPDX-License-Identifier: Apache-2.0

//! Independent reference implementations used by the integration tests.
//! Each one is deliberately naive and shares no code path with the library
//! routine it checks.

#![allow(dead_code)]

use std::collections::VecDeque;
use std::path::PathBuf;

use steiner::{graph6, Graph};

/// Known totals of graphs on n vertices up to isomorphism, n = 0..=8.
pub const GRAPH_COUNTS: [usize; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];
/// Known totals of connected graphs on n vertices up to isomorphism, n = 0..=8.
pub const CONNECTED_COUNTS: [usize; 9] = [1, 1, 1, 2, 6, 21, 112, 853, 11117];

pub fn corpus_path(n: usize) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(format!("graph{n}.g6"))
}

pub fn corpus_lines(n: usize) -> Vec<String> {
    let text = std::fs::read_to_string(corpus_path(n)).expect("corpus file present");
    text.lines().map(str::to_owned).collect()
}

/// Every graph on `n` vertices from the committed corpus files.
pub fn corpus(n: usize) -> Vec<Graph> {
    corpus_lines(n)
        .iter()
        .map(|line| graph6::decode(line).expect("corpus lines decode"))
        .collect()
}

pub fn connected_corpus(n: usize) -> Vec<Graph> {
    corpus(n).into_iter().filter(|g| g.is_connected()).collect()
}

/// Dense 0/1 adjacency matrix, read through `has_edge` only.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

/// Breadth-first distances from `s` over the adjacency matrix.
pub fn bfs_from(adj: &[Vec<bool>], s: usize) -> Vec<Option<usize>> {
    let n = adj.len();
    let mut dist = vec![None; n];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for v in 0..n {
            if adj[u][v] && dist[v].is_none() {
                dist[v] = Some(dist[u].unwrap() + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

pub fn all_pairs(g: &Graph) -> Vec<Vec<usize>> {
    let adj = matrix(g);
    (0..g.order())
        .map(|s| {
            bfs_from(&adj, s)
                .into_iter()
                .map(|d| d.expect("connected graph"))
                .collect()
        })
        .collect()
}

/// Sum of shortest-path distances over unordered pairs.
pub fn wiener_index(g: &Graph) -> u64 {
    let d = all_pairs(g);
    let n = g.order();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .map(|(u, v)| d[u][v] as u64)
        .sum()
}

pub fn eccentricities(g: &Graph) -> Vec<usize> {
    all_pairs(g)
        .into_iter()
        .map(|row| row.into_iter().max().unwrap_or(0))
        .collect()
}

pub fn diameter(g: &Graph) -> usize {
    eccentricities(g).into_iter().max().unwrap_or(0)
}

pub fn radius(g: &Graph) -> usize {
    eccentricities(g).into_iter().min().unwrap_or(0)
}

/// Connectivity of the graph restricted to `keep`, by flooding the matrix.
pub fn connected_on(adj: &[Vec<bool>], keep: &[bool]) -> bool {
    let Some(start) = keep.iter().position(|&k| k) else {
        return true;
    };
    let n = adj.len();
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if keep[v] && adj[u][v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    (0..n).all(|v| !keep[v] || seen[v])
}

/// Vertices whose deletion leaves the rest connected, one deletion at a time.
pub fn non_cut_by_deletion(g: &Graph) -> Vec<usize> {
    let adj = matrix(g);
    let n = g.order();
    (0..n)
        .filter(|&v| {
            let keep: Vec<bool> = (0..n).map(|u| u != v).collect();
            connected_on(&adj, &keep)
        })
        .collect()
}

/// Some ordered 4-tuple of distinct vertices closes a 4-cycle.
pub fn has_c4_by_tuples(g: &Graph) -> bool {
    let adj = matrix(g);
    let n = g.order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
                    if distinct && adj[a][b] && adj[b][c] && adj[c][d] && adj[d][a] {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Longest cycle by a Held-Karp path table over vertex subsets; `None` if acyclic.
pub fn longest_cycle(g: &Graph) -> Option<usize> {
    let n = g.order();
    assert!(n <= 12, "subset table limited to small orders");
    let adj = matrix(g);
    let mut best = None;
    for start in 0..n {
        // paths from `start` whose other vertices all exceed `start`
        let mut reach = vec![vec![false; n]; 1 << n];
        reach[1 << start][start] = true;
        for mask in 0..(1usize << n) {
            if mask & (1 << start) == 0 || mask & ((1 << start) - 1) != 0 {
                continue;
            }
            for v in 0..n {
                if !reach[mask][v] {
                    continue;
                }
                let len = mask.count_ones() as usize;
                if len >= 3 && adj[v][start] {
                    best = best.max(Some(len));
                }
                for w in 0..n {
                    if adj[v][w] && mask & (1 << w) == 0 {
                        reach[mask | 1 << w][w] = true;
                    }
                }
            }
        }
    }
    best
}

/// Number of bijections `f` with `uv` in `pattern` implying `f(u)f(v)` in
/// `host`; with `exact`, non-edges must map to non-edges as well.
pub fn count_maps(pattern: &Graph, host: &Graph, exact: bool, stop_at_first: bool) -> usize {
    let n = pattern.order();
    assert_eq!(n, host.order());
    let p = matrix(pattern);
    let h = matrix(host);
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut count = 0;
    fn place(
        i: usize,
        p: &[Vec<bool>],
        h: &[Vec<bool>],
        exact: bool,
        image: &mut [usize],
        used: &mut [bool],
        count: &mut usize,
        stop: bool,
    ) {
        let n = p.len();
        if i == n {
            *count += 1;
            return;
        }
        for x in 0..n {
            if used[x] {
                continue;
            }
            let fits = (0..i).all(|j| {
                let want = p[i][j];
                let have = h[x][image[j]];
                if exact {
                    want == have
                } else {
                    !want || have
                }
            });
            if fits {
                used[x] = true;
                image[i] = x;
                place(i + 1, p, h, exact, image, used, count, stop);
                used[x] = false;
                if stop && *count > 0 {
                    return;
                }
            }
        }
    }
    place(0, &p, &h, exact, &mut image, &mut used, &mut count, stop_at_first);
    count
}

/// `pattern` is isomorphic to a spanning subgraph of `host`.
pub fn spans(pattern: &Graph, host: &Graph) -> bool {
    pattern.order() == host.order() && count_maps(pattern, host, false, true) > 0
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && count_maps(a, b, true, true) > 0
}

pub fn automorphisms(g: &Graph) -> usize {
    count_maps(g, g, true, false)
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn choose(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// Labeled connected graphs on `n` vertices: all labeled graphs minus those
/// where the component of vertex 1 has `j < n` vertices.
pub fn labeled_connected(n: usize) -> u128 {
    let mut c = vec![0u128; n + 1];
    for m in 1..=n {
        let all = |k: usize| 1u128 << (k * k.saturating_sub(1) / 2);
        let split: u128 = (1..m).map(|j| choose(m - 1, j - 1) * c[j] * all(m - j)).sum();
        c[m] = all(m) - split;
    }
    c[n]
}

/// Minimum `|W| - 1` over connected vertex sets `W` containing `terminals`,
/// by listing every vertex subset; `None` when no such set exists.
pub fn steiner_by_subsets(g: &Graph, terminals: &[usize]) -> Option<usize> {
    let n = g.order();
    let adj = matrix(g);
    let mut best = None;
    for mask in 0u32..(1 << n) {
        if terminals.iter().any(|&t| mask >> t & 1 == 0) {
            continue;
        }
        let keep: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        if connected_on(&adj, &keep) {
            let size = mask.count_ones() as usize - 1;
            best = Some(best.map_or(size, |b: usize| b.min(size)));
        }
    }
    best
}

/// Checks that `edges` form a tree covering `terminals` inside `g`.
pub fn is_steiner_tree(g: &Graph, terminals: &[usize], edges: &[(usize, usize)]) -> bool {
    if edges.iter().any(|&(u, v)| !g.has_edge(u, v)) {
        return false;
    }
    let mut vertices: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    if vertices.is_empty() {
        vertices = terminals.to_vec();
    }
    vertices.sort_unstable();
    vertices.dedup();
    if vertices.len() != edges.len() + 1 {
        return false;
    }
    if terminals.iter().any(|t| vertices.binary_search(t).is_err()) {
        return false;
    }
    // union-find rejects a cycle; |V| = |E| + 1 then forces connectivity
    let mut parent: Vec<usize> = (0..g.order()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Induced subgraph on the vertices of `mask`, relabeled in order.
pub fn induced_on(g: &Graph, mask: u32) -> Graph {
    let keep: Vec<usize> = (0..g.order()).filter(|v| mask >> v & 1 == 1).collect();
    let edges = g
        .edges()
        .into_iter()
        .filter_map(|(u, v)| Some((keep.binary_search(&u).ok()?, keep.binary_search(&v).ok()?)));
    Graph::new(keep.len(), edges).unwrap()
}

/// Every `k`-subset of `0..n` as a sorted vector, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Steiner k-diameter straight from the definition: the largest oracle
/// distance over all k-subsets.
pub fn sdiam_by_definition(g: &Graph, k: usize) -> usize {
    subsets(g.order(), k)
        .iter()
        .map(|s| steiner_by_subsets(g, s).expect("connected graph"))
        .max()
        .unwrap_or(0)
}

/// Some parameter tuple of `family` at this order yields a graph that spans
/// `gbar`, found by trying every bijection.
pub fn family_spans(family: steiner::families::Family, gbar: &Graph) -> bool {
    steiner::families::sweep(family, gbar.order())
        .iter()
        .any(|p| spans(&steiner::families::generate(p).unwrap(), gbar))
}

/// Vertex sets (as masks) that carry a cycle through all of their vertices.
pub fn cycle_vertex_sets(g: &Graph) -> Vec<u32> {
    let n = g.order();
    assert!(n <= 12);
    let adj = matrix(g);
    let mut found = vec![false; 1 << n];
    for start in 0..n {
        let mut reach = vec![vec![false; n]; 1 << n];
        reach[1 << start][start] = true;
        for mask in 0..(1usize << n) {
            if mask & (1 << start) == 0 || mask & ((1 << start) - 1) != 0 {
                continue;
            }
            for v in 0..n {
                if !reach[mask][v] {
                    continue;
                }
                if mask.count_ones() >= 3 && adj[v][start] {
                    found[mask] = true;
                }
                for w in 0..n {
                    if adj[v][w] && mask & (1 << w) == 0 {
                        reach[mask | 1 << w][w] = true;
                    }
                }
            }
        }
    }
    (0..1u32 << n).filter(|&m| found[m as usize]).collect()
}

/// Checks the cycle-family bound: for every family of at
/// least two cycles pairwise sharing at most one vertex, the non-cut count
/// must reach the sum of the cycle orders minus twice one less than the family
/// size. Returns the number of violating families.
pub fn cycle_family_violations(g: &Graph) -> usize {
    let sets = cycle_vertex_sets(g);
    let non_cut = g.non_cut_vertices().unwrap().len() as i64;
    let mut violations = 0;
    fn grow(
        sets: &[u32],
        from: usize,
        chosen: &mut Vec<u32>,
        non_cut: i64,
        violations: &mut usize,
    ) {
        if chosen.len() >= 2 {
            let r = chosen.len() as i64;
            let total: i64 = chosen.iter().map(|m| m.count_ones() as i64).sum();
            if non_cut < total - 2 * (r - 1) {
                *violations += 1;
            }
        }
        for i in from..sets.len() {
            if chosen.iter().all(|&c| (c & sets[i]).count_ones() <= 1) {
                chosen.push(sets[i]);
                grow(sets, i + 1, chosen, non_cut, violations);
                chosen.pop();
            }
        }
    }
    grow(&sets, 0, &mut Vec::new(), non_cut, &mut violations);
    violations
}

/// Non-cut count comparisons between `g` and its connected subgraphs: every
/// connected induced subgraph and every connected single-edge deletion.
/// Returns the number of subgraphs with more non-cut vertices than `g`.
pub fn subgraph_non_cut_violations(g: &Graph) -> usize {
    let n = g.order();
    let mine = g.non_cut_vertices().unwrap().len();
    let adj = matrix(g);
    let mut bad = 0;
    for mask in 1u32..(1 << n) {
        let keep: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        if connected_on(&adj, &keep) {
            let h = induced_on(g, mask);
            bad += (h.non_cut_vertices().unwrap().len() > mine) as usize;
        }
    }
    for (u, v) in g.edges() {
        let h = g.without_edge(u, v);
        if h.is_connected() {
            bad += (h.non_cut_vertices().unwrap().len() > mine) as usize;
        }
    }
    bad
}

/// A cactus grown from one cycle by repeatedly hanging a new cycle off an
/// existing vertex, either directly or through a short bridge path. Returns
/// the graph and its cycles' orders.
pub fn random_cactus(seed: u64, cycles: usize) -> (Graph, Vec<usize>) {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut n = 0;
    let mut lengths = Vec::new();
    let add_cycle = |root: Option<usize>, len: usize, n: &mut usize, edges: &mut Vec<(usize, usize)>| {
        let first = root.unwrap_or_else(|| {
            *n += 1;
            *n - 1
        });
        let mut prev = first;
        for _ in 1..len {
            edges.push((prev, *n));
            prev = *n;
            *n += 1;
        }
        edges.push((prev, first));
    };
    let len = rng.gen_range(3..=6);
    add_cycle(None, len, &mut n, &mut edges);
    lengths.push(len);
    for _ in 1..cycles {
        let mut root = rng.gen_range(0..n);
        for _ in 0..rng.gen_range(0..=2) {
            edges.push((root, n));
            root = n;
            n += 1;
        }
        let len = rng.gen_range(3..=6);
        add_cycle(Some(root), len, &mut n, &mut edges);
        lengths.push(len);
    }
    (Graph::new(n, edges).unwrap(), lengths)
}

/// Cycle orders of `g` when every edge lies on at most one cycle (a cactus),
/// `None` otherwise. A graph is a cactus exactly when its cycle vertex sets
/// pairwise share at most one vertex and their number equals the cycle rank.
pub fn cactus_cycles(g: &Graph) -> Option<Vec<usize>> {
    if !g.is_connected() {
        return None;
    }
    let sets = cycle_vertex_sets(g);
    let rank = g.size() + 1 - g.order();
    let separated = sets
        .iter()
        .enumerate()
        .all(|(i, a)| sets[i + 1..].iter().all(|b| (a & b).count_ones() <= 1));
    (separated && sets.len() == rank).then(|| sets.iter().map(|m| m.count_ones() as usize).collect())
}
