// SPDX-License-Identifier: Apache-2.0

//! Generators for the named extremal graphs.
//!
//! Labeling is deterministic: the four core vertices `u1..u4` (or the spine
//! `v1..vm` for the path-based families) come first as `0, 1, ...`, followed by
//! attachments in parameter order, each path listed from its attachment point
//! outward.
//!
//! * `H1`: `K4` plus stars with `a, b, c, d` leaves at `u1..u4`.
//! * `H2`: `K4 - u1u4`, stars with `a` and `b` leaves at `u2` and `u3`, and
//!   `c` paths `u1 z u4`.
//! * `H3`: the 4-cycle `u1 u3 u2 u4`, `a` paths `u1 x u2` and `b` paths
//!   `u3 y u4` across its two diagonals.
//! * `H4`: `K_{1,3}` centred at `u3` with `a` more leaves there, and `b >= 1`
//!   vertices joined to each of `u1, u2, u4`; `a` and `b` are otherwise free.
//! * `T`: a spine of `n - b - c` vertices with a branch of length `b` at spine
//!   vertex `a + 1` and a branch of length `c` at spine vertex `n - b - c - d`.
//! * `DELTA`: the `T` shape on `n - 1` vertices whose first branch gains one
//!   vertex that closes a triangle with spine vertex `a + 2`.
//! * `DELTA_PRIME`: the `T` shape on `n - 2` vertices where both branches gain
//!   a triangle-closing vertex, the second one against the spine neighbour of
//!   its attachment on the side of the first branch.
//! * `G1`, `G2`, `G3`: `K4`, `C4` or `K4 - e` with pendant paths of lengths
//!   `a, b, c, d` at the four core vertices.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::graph6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    H1,
    H2,
    H3,
    H4,
    T,
    Delta,
    DeltaPrime,
    G1,
    G2,
    G3,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::H1,
        Family::H2,
        Family::H3,
        Family::H4,
        Family::T,
        Family::Delta,
        Family::DeltaPrime,
        Family::G1,
        Family::G2,
        Family::G3,
    ];

    /// The families whose members have Steiner 4-diameter `n - 1`.
    pub const EXTREMAL: [Family; 6] = [
        Family::T,
        Family::Delta,
        Family::DeltaPrime,
        Family::G1,
        Family::G2,
        Family::G3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::H1 => "H1",
            Family::H2 => "H2",
            Family::H3 => "H3",
            Family::H4 => "H4",
            Family::T => "T",
            Family::Delta => "DELTA",
            Family::DeltaPrime => "DELTA_PRIME",
            Family::G1 => "G1",
            Family::G2 => "G2",
            Family::G3 => "G3",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key || (key == "DELTA'" && *f == Family::DeltaPrime))
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("{family}: constraint `{constraint}` violated by (a,b,c,d,n) = {params:?}")]
    Constraint {
        family: Family,
        constraint: &'static str,
        params: (usize, usize, usize, usize, usize),
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FamilyParams {
    pub family: Family,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub n: usize,
}

impl FamilyParams {
    pub fn new(family: Family, [a, b, c, d]: [usize; 4], n: usize) -> Self {
        FamilyParams { family, a, b, c, d, n }
    }

    fn violation(&self, constraint: &'static str) -> FamilyError {
        FamilyError::Constraint {
            family: self.family,
            constraint,
            params: (self.a, self.b, self.c, self.d, self.n),
        }
    }

    fn require(&self, holds: bool, constraint: &'static str) -> Result<(), FamilyError> {
        if holds {
            Ok(())
        } else {
            Err(self.violation(constraint))
        }
    }

    /// Checks the defining inequalities of the family.
    pub fn validate(&self) -> Result<(), FamilyError> {
        let FamilyParams { a, b, c, d, n, .. } = *self;
        let sum = a + b + c + d;
        match self.family {
            Family::H1 => {
                self.require(a <= b && b <= c && c <= d, "a <= b <= c <= d")?;
                self.require(d >= 1, "d >= 1")?;
                self.require(sum + 4 == n, "a+b+c+d = n-4")
            }
            Family::H2 => {
                self.require(d == 0, "d = 0 (unused)")?;
                self.require(a <= b, "a <= b")?;
                self.require(a + b + c + 4 == n, "a+b+c = n-4")
            }
            Family::H3 | Family::H4 => {
                self.require(c == 0, "c = 0 (unused)")?;
                self.require(d == 0, "d = 0 (unused)")?;
                // the two attachment kinds of H3 are interchangeable, those of H4 are not
                self.require(self.family == Family::H4 || a <= b, "a <= b")?;
                self.require(b >= 1, "b >= 1")?;
                self.require(a + b + 4 == n, "a+b = n-4")
            }
            Family::T => self.require(sum < n, "a+b+c+d <= n-1"),
            Family::Delta => self.require(sum + 2 <= n, "a+b+c+d <= n-2"),
            Family::DeltaPrime => self.require(sum + 3 <= n, "a+b+c+d <= n-3"),
            Family::G1 | Family::G2 | Family::G3 => self.require(sum + 4 == n, "a+b+c+d = n-4"),
        }
    }
}

struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new(core: usize) -> Self {
        Builder {
            n: core,
            edges: Vec::new(),
        }
    }

    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    /// Hangs a path with `len` new vertices off `root`; returns its far end.
    fn path_from(&mut self, root: usize, len: usize) -> usize {
        let mut tip = root;
        for _ in 0..len {
            let v = self.vertex();
            self.edge(tip, v);
            tip = v;
        }
        tip
    }

    fn spine(&mut self, len: usize) {
        for v in 1..len {
            self.edge(v - 1, v);
        }
    }

    fn finish(self) -> Graph {
        Graph::new(self.n, self.edges).expect("generated edges are valid")
    }
}

const U1: usize = 0;
const U2: usize = 1;
const U3: usize = 2;
const U4: usize = 3;

pub fn gen_h(params: &FamilyParams) -> Result<Graph, FamilyError> {
    params.validate()?;
    let FamilyParams { a, b, c, d, .. } = *params;
    let mut g = Builder::new(4);
    match params.family {
        Family::H1 => {
            for (u, v) in [(U1, U2), (U1, U3), (U1, U4), (U2, U3), (U2, U4), (U3, U4)] {
                g.edge(u, v);
            }
            for (root, leaves) in [(U1, a), (U2, b), (U3, c), (U4, d)] {
                for _ in 0..leaves {
                    g.path_from(root, 1);
                }
            }
        }
        Family::H2 => {
            for (u, v) in [(U1, U2), (U1, U3), (U2, U3), (U2, U4), (U3, U4)] {
                g.edge(u, v);
            }
            for (root, leaves) in [(U2, a), (U3, b)] {
                for _ in 0..leaves {
                    g.path_from(root, 1);
                }
            }
            for _ in 0..c {
                let z = g.path_from(U1, 1);
                g.edge(z, U4);
            }
        }
        Family::H3 => {
            // the cycle u1 u3 u2 u4: each attachment joins an opposite pair
            for (u, v) in [(U1, U3), (U3, U2), (U2, U4), (U4, U1)] {
                g.edge(u, v);
            }
            for (count, [p, q]) in [(a, [U1, U2]), (b, [U3, U4])] {
                for _ in 0..count {
                    let x = g.path_from(p, 1);
                    g.edge(x, q);
                }
            }
        }
        Family::H4 => {
            for leaf in [U1, U2, U4] {
                g.edge(U3, leaf);
            }
            for _ in 0..a {
                g.path_from(U3, 1);
            }
            for _ in 0..b {
                let y = g.vertex();
                for u in [U1, U2, U4] {
                    g.edge(y, u);
                }
            }
        }
        _ => return Err(params.violation("family in H1..H4")),
    }
    Ok(g.finish())
}

pub fn gen_t(params: &FamilyParams) -> Result<Graph, FamilyError> {
    if params.family != Family::T {
        return Err(params.violation("family matches generator"));
    }
    params.validate()?;
    let FamilyParams { a, b, c, d, n, .. } = *params;
    let spine = n - b - c;
    let mut g = Builder::new(spine);
    g.spine(spine);
    g.path_from(a, b);
    g.path_from(spine - 1 - d, c);
    Ok(g.finish())
}

/// Shared body of the triangle families; `closures` is 1 for `DELTA`, 2 for `DELTA_PRIME`.
fn gen_triangles(params: &FamilyParams, closures: usize) -> Result<Graph, FamilyError> {
    params.validate()?;
    let FamilyParams { a, b, c, d, n, .. } = *params;
    let spine = n - closures - b - c;
    // 0-indexed spine positions of the two attachment points
    let first = a;
    let second = spine - 1 - d;
    params.require(first + 1 < spine, "spine vertex v_{a+2} exists")?;
    if closures == 2 {
        params.require(second >= 1, "spine vertex x_{d+2} exists")?;
        params.require(second != first + 1, "triangles share at most one vertex (a+b+c+d != n-4)")?;
    }
    let mut g = Builder::new(spine);
    g.spine(spine);
    let near = g.path_from(first, 1);
    g.edge(near, first + 1);
    g.path_from(near, b);
    if closures == 1 {
        g.path_from(second, c);
    } else {
        let near = g.path_from(second, 1);
        g.edge(near, second - 1);
        g.path_from(near, c);
    }
    Ok(g.finish())
}

pub fn gen_delta(params: &FamilyParams) -> Result<Graph, FamilyError> {
    if params.family != Family::Delta {
        return Err(params.violation("family matches generator"));
    }
    gen_triangles(params, 1)
}

pub fn gen_delta_prime(params: &FamilyParams) -> Result<Graph, FamilyError> {
    if params.family != Family::DeltaPrime {
        return Err(params.violation("family matches generator"));
    }
    gen_triangles(params, 2)
}

pub fn gen_g(params: &FamilyParams) -> Result<Graph, FamilyError> {
    params.validate()?;
    let core: &[(usize, usize)] = match params.family {
        Family::G1 => &[(U1, U2), (U1, U3), (U1, U4), (U2, U3), (U2, U4), (U3, U4)],
        Family::G2 => &[(U1, U2), (U2, U3), (U3, U4), (U4, U1)],
        Family::G3 => &[(U1, U2), (U1, U3), (U2, U3), (U2, U4), (U3, U4)],
        _ => return Err(params.violation("family in G1..G3")),
    };
    let mut g = Builder::new(4);
    for &(u, v) in core {
        g.edge(u, v);
    }
    for (root, len) in [(U1, params.a), (U2, params.b), (U3, params.c), (U4, params.d)] {
        g.path_from(root, len);
    }
    Ok(g.finish())
}

/// Dispatches to the generator of `params.family`.
pub fn generate(params: &FamilyParams) -> Result<Graph, FamilyError> {
    match params.family {
        Family::H1 | Family::H2 | Family::H3 | Family::H4 => gen_h(params),
        Family::T => gen_t(params),
        Family::Delta => gen_delta(params),
        Family::DeltaPrime => gen_delta_prime(params),
        Family::G1 | Family::G2 | Family::G3 => gen_g(params),
    }
}

/// Every parameter tuple of order `n` that the generator accepts, in
/// lexicographic `(a, b, c, d)` order.
pub fn sweep(family: Family, n: usize) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n - a {
            for c in 0..n - a - b {
                for d in 0..n - a - b - c {
                    let params = FamilyParams::new(family, [a, b, c, d], n);
                    if generate(&params).is_ok() {
                        out.push(params);
                    }
                }
            }
        }
    }
    out
}

/// [`sweep`] with generated graphs, dropping tuples whose graph6 line repeats.
pub fn sweep_graphs(family: Family, n: usize) -> Vec<(FamilyParams, Graph)> {
    let mut seen = HashSet::new();
    sweep(family, n)
        .into_iter()
        .filter_map(|p| {
            let g = generate(&p).expect("sweep keeps accepted tuples");
            seen.insert(graph6::encode(&g)).then_some((p, g))
        })
        .collect()
}

/// Connected, acyclic and at most four vertices of degree one.
pub fn is_tree_with_at_most_4_leaves(g: &Graph) -> bool {
    g.order() > 0
        && g.is_connected()
        && g.size() + 1 == g.order()
        && (0..g.order()).filter(|&v| g.degree(v) == 1).count() <= 4
}
