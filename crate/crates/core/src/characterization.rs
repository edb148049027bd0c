// SPDX-License-Identifier: Apache-2.0

//! Decidable characterizations of `sdiam_4(G) = 3`, `sdiam_4(G) = 4` and
//! `sdiam_k(G) = n - 1`, and a classifier that checks them against the
//! computed Steiner 4-diameter.
//!
//! The spanning tests for `H1..H4` scan the four core vertices and then ask
//! only which core vertices each remaining vertex sees: every attachment of an
//! `H_i` is a star leaf or a short path whose ends lie in the core, so a
//! spanning copy exists exactly when every outside vertex can be assigned to
//! some attachment type and the resulting counts satisfy the family's
//! inequalities.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::steiner::{self, SteinerError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterizationError {
    #[error("order {order} is below the minimum {min}")]
    OrderTooSmall { order: usize, min: usize },
    #[error("subset size {k} outside 3..={max}")]
    SubsetSizeOutOfRange { k: usize, max: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Steiner(#[from] SteinerError),
}

type Result<T> = std::result::Result<T, CharacterizationError>;

fn require_order(g: &Graph, min: usize) -> Result<()> {
    if g.order() < min {
        return Err(CharacterizationError::OrderTooSmall {
            order: g.order(),
            min,
        });
    }
    Ok(())
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(GraphError::Disconnected.into())
    }
}

/// `sdiam_4(G) = 3` holds iff `n = 4`, or `n >= 5`, `delta(G) >= n - 3` and the
/// complement has no 4-cycle.
pub fn predicate_sdiam4_is_3(g: &Graph) -> Result<bool> {
    require_order(g, 4)?;
    require_connected(g)?;
    let n = g.order();
    if n == 4 {
        return Ok(true);
    }
    Ok(g.min_degree() + 3 >= n && !g.complement().contains_c4())
}

fn outside(n: usize, core: [usize; 4]) -> impl Iterator<Item = usize> {
    (0..n).filter(move |v| !core.contains(v))
}

/// A `K4` such that every other vertex sees at least one of its vertices.
pub fn spanning_h1(gbar: &Graph) -> Result<bool> {
    require_order(gbar, 5)?;
    let n = gbar.order();
    for u1 in 0..n {
        for u2 in gbar.neighbors(u1).iter().filter(|&v| v > u1) {
            for u3 in gbar.neighbors(u2).iter().filter(|&v| v > u2) {
                if !gbar.has_edge(u1, u3) {
                    continue;
                }
                for u4 in gbar.neighbors(u3).iter().filter(|&v| v > u3) {
                    if !gbar.has_edge(u1, u4) || !gbar.has_edge(u2, u4) {
                        continue;
                    }
                    let core = [u1, u2, u3, u4];
                    if outside(n, core).all(|x| core.iter().any(|&u| gbar.has_edge(x, u))) {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

/// A `K4 - u1u4` such that every other vertex sees `u2`, sees `u3`, or sees
/// both `u1` and `u4`.
pub fn spanning_h2(gbar: &Graph) -> Result<bool> {
    require_order(gbar, 5)?;
    let n = gbar.order();
    for u2 in 0..n {
        // u2 and u3 play symmetric roles, as do u1 and u4
        for u3 in gbar.neighbors(u2).iter().filter(|&v| v > u2) {
            let mut common = gbar.neighbors(u2).clone();
            common.intersect_with(gbar.neighbors(u3));
            let common = common.to_vec();
            for (i, &u1) in common.iter().enumerate() {
                for &u4 in &common[i + 1..] {
                    let core = [u1, u2, u3, u4];
                    let covered = outside(n, core).all(|x| {
                        gbar.has_edge(x, u2)
                            || gbar.has_edge(x, u3)
                            || (gbar.has_edge(x, u1) && gbar.has_edge(x, u4))
                    });
                    if covered {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

/// A 4-cycle `u1 u3 u2 u4` (so `u1, u2` are opposite, as are `u3, u4`) such
/// that every other vertex sees both `u1, u2` or both `u3, u4`.
pub fn spanning_h3(gbar: &Graph) -> Result<bool> {
    require_order(gbar, 5)?;
    let n = gbar.order();
    for u1 in 0..n {
        for u3 in gbar.neighbors(u1).iter() {
            for u2 in gbar.neighbors(u3).iter() {
                if u2 == u1 {
                    continue;
                }
                for u4 in gbar.neighbors(u2).iter() {
                    if u4 == u1 || u4 == u3 || !gbar.has_edge(u4, u1) {
                        continue;
                    }
                    let core = [u1, u2, u3, u4];
                    let covered = outside(n, core).all(|x| {
                        (gbar.has_edge(x, u1) && gbar.has_edge(x, u2))
                            || (gbar.has_edge(x, u3) && gbar.has_edge(x, u4))
                    });
                    if covered {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

/// A `K_{1,3}` centred at `u3` such that every other vertex is a star leaf at
/// `u3` or sees all of `u1, u2, u4`, with at least one of the latter.
pub fn spanning_h4(gbar: &Graph) -> Result<bool> {
    require_order(gbar, 5)?;
    let n = gbar.order();
    for u3 in 0..n {
        let leaves = gbar.neighbors(u3).to_vec();
        for (i, &u1) in leaves.iter().enumerate() {
            for (j, &u2) in leaves.iter().enumerate().skip(i + 1) {
                for &u4 in &leaves[j + 1..] {
                    let core = [u1, u2, u3, u4];
                    let mut joined = 0;
                    let covered = outside(n, core).all(|x| {
                        if [u1, u2, u4].iter().all(|&u| gbar.has_edge(x, u)) {
                            joined += 1;
                            true
                        } else {
                            gbar.has_edge(x, u3)
                        }
                    });
                    if covered && joined >= 1 {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

/// Detail of the `sdiam_4(G) = 4` characterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Diameter4Verdict {
    pub holds: bool,
    /// `delta(G) = n - 3` and the complement contains a 4-cycle.
    pub condition_i: bool,
    /// `delta(G) <= n - 4` and no `H_i` spans the complement.
    pub condition_ii: bool,
    /// Which of `H1..H4` span the complement.
    pub spanning: [bool; 4],
}

impl Diameter4Verdict {
    pub fn matched_names(&self) -> Vec<&'static str> {
        ["H1", "H2", "H3", "H4"]
            .into_iter()
            .zip(self.spanning)
            .filter_map(|(name, hit)| hit.then_some(name))
            .collect()
    }
}

pub fn predicate_sdiam4_is_4(g: &Graph) -> Result<Diameter4Verdict> {
    require_order(g, 5)?;
    require_connected(g)?;
    let n = g.order();
    let gbar = g.complement();
    let delta = g.min_degree();
    let spanning = [
        spanning_h1(&gbar)?,
        spanning_h2(&gbar)?,
        spanning_h3(&gbar)?,
        spanning_h4(&gbar)?,
    ];
    let condition_i = delta + 3 == n && gbar.contains_c4();
    let condition_ii = delta + 4 <= n && !spanning.iter().any(|&s| s);
    Ok(Diameter4Verdict {
        holds: condition_i || condition_ii,
        condition_i,
        condition_ii,
        spanning,
    })
}

/// `sdiam_k(G) = n - 1` iff at most `k` vertices are non-cut, for `3 <= k <= n - 1`.
pub fn predicate_sdiam_k_is_nminus1(g: &Graph, k: usize) -> Result<bool> {
    require_connected(g)?;
    let n = g.order();
    if k < 3 || k + 1 > n {
        return Err(CharacterizationError::SubsetSizeOutOfRange {
            k,
            max: n.saturating_sub(1),
        });
    }
    Ok(g.non_cut_vertices()?.len() <= k)
}

/// Every verdict for one graph next to its computed Steiner 4-diameter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    pub n: usize,
    pub min_degree: usize,
    pub sdiam4: usize,
    pub non_cut: usize,
    pub thm2: bool,
    pub thm3: bool,
    pub thm3_condition_i: bool,
    pub thm3_condition_ii: bool,
    pub thm3_spanning: Vec<&'static str>,
    pub lemma1: bool,
    pub consistent: bool,
}

/// Whether the three verdicts agree with the computed `sdiam_4`.
///
/// At `n = 5` the classes `sdiam_4 = 4` and `sdiam_4 = n - 1` coincide, so a
/// consistent record there has both the `= 4` and the non-cut verdict set.
pub fn verdicts_consistent(n: usize, sdiam4: usize, thm2: bool, thm3: bool, lemma1: bool) -> bool {
    thm2 == (sdiam4 == 3) && thm3 == (sdiam4 == 4) && lemma1 == (sdiam4 + 1 == n)
}

pub fn classify(g: &Graph) -> Result<ClassificationRecord> {
    require_order(g, 5)?;
    require_connected(g)?;
    let n = g.order();
    let sdiam4 = steiner::steiner_diameter(g, 4)?;
    let thm2 = predicate_sdiam4_is_3(g)?;
    let thm3 = predicate_sdiam4_is_4(g)?;
    let lemma1 = predicate_sdiam_k_is_nminus1(g, 4)?;
    Ok(ClassificationRecord {
        n,
        min_degree: g.min_degree(),
        sdiam4,
        non_cut: g.non_cut_vertices()?.len(),
        thm2,
        thm3: thm3.holds,
        thm3_condition_i: thm3.condition_i,
        thm3_condition_ii: thm3.condition_ii,
        thm3_spanning: thm3.matched_names(),
        lemma1,
        consistent: verdicts_consistent(n, sdiam4, thm2, thm3.holds, lemma1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_h, Family, FamilyParams};

    fn k6_minus_matching() -> Graph {
        Graph::complete(6)
            .without_edge(0, 1)
            .without_edge(2, 3)
            .without_edge(4, 5)
    }

    #[test]
    fn diameter_three_predicate_examples() {
        assert!(predicate_sdiam4_is_3(&Graph::complete(5)).unwrap());
        assert!(predicate_sdiam4_is_3(&Graph::cycle(5)).unwrap());
        assert!(predicate_sdiam4_is_3(&k6_minus_matching()).unwrap());
        assert!(!predicate_sdiam4_is_3(&Graph::star(4)).unwrap());
        assert!(predicate_sdiam4_is_3(&Graph::path(4)).unwrap());
        assert!(matches!(
            predicate_sdiam4_is_3(&Graph::path(3)),
            Err(CharacterizationError::OrderTooSmall { order: 3, min: 4 })
        ));
        let disconnected = Graph::new(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        assert!(predicate_sdiam4_is_3(&disconnected).is_err());
    }

    #[test]
    fn h1_examples() {
        let k4_two_pendants = Graph::new(
            6,
            [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (2, 5)],
        )
        .unwrap();
        assert!(spanning_h1(&k4_two_pendants).unwrap());
        assert!(!spanning_h1(&Graph::cycle(6)).unwrap());
        assert!(spanning_h1(&Graph::complete(5)).unwrap());
        // a fifth vertex that misses the clique
        let k4_plus_isolated = Graph::new(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(!spanning_h1(&k4_plus_isolated).unwrap());
        assert!(spanning_h1(&Graph::complete(4)).is_err());
    }

    #[test]
    fn h2_examples() {
        let h2 = gen_h(&FamilyParams::new(Family::H2, [1, 1, 1, 0], 7)).unwrap();
        assert!(spanning_h2(&h2).unwrap());
        assert!(!spanning_h2(&Graph::cycle(7)).unwrap());
        assert!(spanning_h2(&Graph::complete(6)).unwrap());
    }

    #[test]
    fn h3_examples() {
        let h3 = gen_h(&FamilyParams::new(Family::H3, [0, 1, 0, 0], 5)).unwrap();
        assert!(spanning_h3(&h3).unwrap());
        assert!(!spanning_h3(&Graph::star(4)).unwrap());
        // K_{2,3}: the fifth vertex sees both degree-3 vertices, an opposite pair
        assert!(spanning_h3(&Graph::complete_bipartite(2, 3)).unwrap());
        // C5 has no 4-cycle at all
        assert!(!spanning_h3(&Graph::cycle(5)).unwrap());
    }

    #[test]
    fn h4_examples() {
        let h4 = gen_h(&FamilyParams::new(Family::H4, [0, 1, 0, 0], 5)).unwrap();
        assert!(spanning_h4(&h4).unwrap());
        assert!(!spanning_h4(&Graph::path(5)).unwrap());
        // wheel: hub 0 on the rim 1-2-3-4
        let wheel = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert!(spanning_h4(&wheel).unwrap());
    }

    #[test]
    fn diameter_four_predicate_examples() {
        let star = predicate_sdiam4_is_4(&Graph::star(4)).unwrap();
        assert!(star.holds && star.condition_ii && !star.condition_i);
        assert_eq!(star.spanning, [false; 4]);
        assert!(!predicate_sdiam4_is_4(&Graph::cycle(5)).unwrap().holds);
        let h1 = gen_h(&FamilyParams::new(Family::H1, [0, 0, 1, 1], 6)).unwrap();
        let v = predicate_sdiam4_is_4(&h1.complement()).unwrap();
        assert!(!v.holds);
        assert!(v.spanning[0]);
    }

    #[test]
    fn lemma1_examples() {
        assert!(predicate_sdiam_k_is_nminus1(&Graph::path(5), 4).unwrap());
        assert!(!predicate_sdiam_k_is_nminus1(&Graph::cycle(6), 4).unwrap());
        assert!(!predicate_sdiam_k_is_nminus1(&Graph::star(4), 3).unwrap());
        assert!(matches!(
            predicate_sdiam_k_is_nminus1(&Graph::path(5), 5),
            Err(CharacterizationError::SubsetSizeOutOfRange { k: 5, max: 4 })
        ));
        assert!(predicate_sdiam_k_is_nminus1(&Graph::path(5), 2).is_err());
    }

    #[test]
    fn classify_examples() {
        let c5 = classify(&Graph::cycle(5)).unwrap();
        assert_eq!((c5.sdiam4, c5.thm2, c5.thm3, c5.lemma1), (3, true, false, false));
        assert!(c5.consistent);

        let p5 = classify(&Graph::path(5)).unwrap();
        assert_eq!((p5.sdiam4, p5.lemma1, p5.thm2), (4, true, false));
        assert!(p5.consistent);

        let m = classify(&k6_minus_matching()).unwrap();
        assert_eq!((m.sdiam4, m.thm2), (3, true));
        assert!(m.consistent);

        let star = classify(&Graph::star(4)).unwrap();
        assert_eq!((star.sdiam4, star.thm3), (4, true));
    }

    #[test]
    fn consistency_at_order_five() {
        // P5: sdiam_4 = 4 = n - 1 needs both verdicts
        let p5 = classify(&Graph::path(5)).unwrap();
        assert!(p5.thm3 && p5.lemma1 && p5.consistent);
        assert!(verdicts_consistent(5, 4, false, true, true));
        assert!(!verdicts_consistent(5, 4, false, false, true));
        assert!(!verdicts_consistent(5, 3, false, true, false));
        assert!(!verdicts_consistent(6, 4, false, false, false));
        assert!(!verdicts_consistent(6, 5, false, false, false));
    }
}
