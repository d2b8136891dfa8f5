//! Vines, evines, their centers, and quantities that a deck determines.
//!
//! A `k`-vine is a tree of diameter `2k` (its center is a vertex); a
//! `k`-evine is a tree of diameter `2k + 1` (its center is an edge). In a
//! graph of girth at least `2k + 2` every `k`-vine lies in a unique maximal
//! one, the `k`-ball around its center, and likewise for evines and
//! `k`-eballs when the girth is at least `2k + 3`.

mod counting;
mod short_cards;
mod spider;

pub use counting::{
    count_k_centers_from_deck, count_k_centers_from_deck_at, count_k_central_edges_from_deck,
    count_k_central_edges_from_deck_at, count_maximal_from_deck, degree_list_from_deck, Family,
    MaximalCountTable,
};
pub use short_cards::{max_path_packing, short_card_stats, ShortCardStats};
pub use spider::{build_spider, count_long_paths, SpiderSpec};

use thiserror::Error;

use crate::canon::CanonicalCode;
use crate::deck::DeckError;
use crate::graph::{Graph, Length, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VineError {
    #[error("girth {girth} is below the required {required}")]
    GirthTooSmall { required: usize, girth: Length },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("the deck does not record the vertex count of its graph")]
    UnknownAmbient,
    #[error("deck precondition violated: {0}")]
    Precondition(String),
    #[error("the deck has no connected card")]
    NoConnectedCard,
    #[error(
        "maximal count for {code} would be negative ({remaining} copies, {absorbed} absorbed)"
    )]
    NegativeCount {
        code: CanonicalCode,
        remaining: u64,
        absorbed: u64,
    },
    #[error("inconsistent totals: {0}")]
    InconsistentTotals(String),
    #[error(transparent)]
    Deck(#[from] DeckError),
}

pub fn is_k_vine(g: &Graph, k: usize) -> bool {
    g.is_tree() && g.diameter() == Length::Finite(2 * k)
}

pub fn is_k_evine(g: &Graph, k: usize) -> bool {
    g.is_tree() && g.diameter() == Length::Finite(2 * k + 1)
}

fn require_girth(g: &Graph, required: usize) -> Result<(), VineError> {
    let girth = g.girth();
    if girth < Length::Finite(required) {
        return Err(VineError::GirthTooSmall { required, girth });
    }
    Ok(())
}

/// Whether some vertex lies at distance exactly `depth` from `start` once
/// the vertices in `avoid` are removed.
fn reaches(g: &Graph, start: usize, avoid: u32, depth: usize) -> bool {
    let mut seen = avoid | 1 << start;
    let mut frontier = 1u32 << start;
    for _ in 0..depth {
        let mut next = 0;
        for v in VertexSet::from_mask(frontier) {
            next |= g.neighbor_mask(v);
        }
        next &= !seen;
        if next == 0 {
            return false;
        }
        seen |= next;
        frontier = next;
    }
    true
}

/// Vertices that are the center of some `k`-vine.
///
/// Requires girth at least `2k + 2`, where `v` qualifies exactly when two
/// of its neighbors begin paths of length `k` away from `v`.
pub fn k_centers(g: &Graph, k: usize) -> Result<VertexSet, VineError> {
    if k == 0 {
        return Err(VineError::InvalidParameter("k must be at least 1".into()));
    }
    require_girth(g, 2 * k + 2)?;
    Ok((0..g.n())
        .filter(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|&u| reaches(g, u, 1 << v, k - 1))
                .take(2)
                .count()
                == 2
        })
        .collect())
}

/// Edges `(u, v)`, `u < v`, whose `k`-eball contains a `k`-evine centered
/// on the edge. Requires girth at least `2k + 3`.
pub fn k_central_edges(g: &Graph, k: usize) -> Result<Vec<(usize, usize)>, VineError> {
    require_girth(g, 2 * k + 3)?;
    Ok(g.edges()
        .into_iter()
        .filter(|&(u, v)| reaches(g, u, 1 << v, k) && reaches(g, v, 1 << u, k))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deck::for_each_subset;
    use crate::enumerate::{enumerate_graphs, Filter};

    /// Centers of all induced `k`-vines, found by trying every vertex subset.
    fn brute_centers(g: &Graph, k: usize) -> VertexSet {
        let mut out = VertexSet::empty();
        for size in 2 * k + 1..=g.n() {
            for_each_subset(g.n(), size, |mask| {
                let sub = g.induced(mask);
                if is_k_vine(&sub, k) {
                    let c = sub.centers().first().unwrap();
                    out.insert(VertexSet::from_mask(mask).iter().nth(c).unwrap());
                }
            });
        }
        out
    }

    fn brute_central_edges(g: &Graph, k: usize) -> Vec<(usize, usize)> {
        let mut out = std::collections::BTreeSet::new();
        for size in 2 * k + 2..=g.n() {
            for_each_subset(g.n(), size, |mask| {
                let sub = g.induced(mask);
                if is_k_evine(&sub, k) {
                    let labels: Vec<usize> = VertexSet::from_mask(mask).iter().collect();
                    let c: Vec<usize> = sub.centers().iter().map(|i| labels[i]).collect();
                    out.insert((c[0], c[1]));
                }
            });
        }
        out.into_iter().collect()
    }

    fn spider222() -> Graph {
        Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
    }

    #[test]
    fn vine_predicates() {
        assert!(is_k_vine(&Graph::path(5), 2));
        assert!(is_k_vine(&spider222(), 2));
        assert!(!is_k_vine(&Graph::path(4), 2));
        assert!(is_k_vine(&Graph::star(4), 1));
        assert!(is_k_evine(&Graph::path(4), 1));
        assert!(is_k_evine(&Graph::path(6), 2));
        assert!(!is_k_evine(&Graph::cycle(6), 2));
    }

    #[test]
    fn centers_examples() {
        let p7 = Graph::path(7);
        assert_eq!(k_centers(&p7, 2).unwrap(), [2, 3, 4].into_iter().collect());
        assert_eq!(k_centers(&Graph::cycle(7), 2).unwrap(), VertexSet::full(7));
        assert_eq!(k_centers(&spider222(), 2).unwrap(), VertexSet::singleton(0));
        assert_eq!(brute_centers(&spider222(), 2), VertexSet::singleton(0));
        assert!(matches!(
            k_centers(&Graph::cycle(5), 2),
            Err(VineError::GirthTooSmall { required: 6, .. })
        ));
        assert!(k_centers(&p7, 0).is_err());
    }

    #[test]
    fn central_edge_examples() {
        assert_eq!(
            k_central_edges(&Graph::path(7), 2).unwrap(),
            vec![(2, 3), (3, 4)]
        );
        assert_eq!(k_central_edges(&Graph::cycle(7), 2).unwrap().len(), 7);
        assert!(k_central_edges(&Graph::star(4), 1).unwrap().is_empty());
        assert!(k_central_edges(&Graph::cycle(6), 2).is_err());
    }

    #[test]
    fn characterizations_match_brute_force() {
        for n in 1..=8 {
            for g in enumerate_graphs(n, &Filter::min_girth(6)).unwrap() {
                for k in 1..=2 {
                    if g.girth() >= Length::Finite(2 * k + 2) {
                        assert_eq!(
                            k_centers(&g, k).unwrap(),
                            brute_centers(&g, k),
                            "{g:?} k={k}"
                        );
                    }
                    if g.girth() >= Length::Finite(2 * k + 3) {
                        assert_eq!(k_central_edges(&g, k).unwrap(), brute_central_edges(&g, k));
                    }
                }
            }
        }
    }

    #[test]
    fn unique_maximal_vines_and_evines() {
        // Every induced k-vine sits in exactly one maximal induced k-vine
        // (girth >= 2k+2); every k-evine in one maximal k-evine (girth >= 2k+3).
        for n in 3..=8 {
            for g in enumerate_graphs(n, &Filter::min_girth(4)).unwrap() {
                for k in 1..=3 {
                    for (evine, need) in [(false, 2 * k + 2), (true, 2 * k + 3)] {
                        if g.girth() < Length::Finite(need) {
                            continue;
                        }
                        let member = |s: &Graph| {
                            if evine {
                                is_k_evine(s, k)
                            } else {
                                is_k_vine(s, k)
                            }
                        };
                        let mut sets = vec![];
                        for size in 1..=n {
                            for_each_subset(n, size, |m| {
                                if member(&g.induced(m)) {
                                    sets.push(m);
                                }
                            });
                        }
                        let maximal: Vec<u32> = sets
                            .iter()
                            .copied()
                            .filter(|&a| !sets.iter().any(|&b| b != a && a & !b == 0))
                            .collect();
                        for &s in &sets {
                            let holders = maximal.iter().filter(|&&m| s & !m == 0).count();
                            assert_eq!(holders, 1, "{g:?} k={k} evine={evine}");
                        }
                    }
                }
            }
        }
    }
}
