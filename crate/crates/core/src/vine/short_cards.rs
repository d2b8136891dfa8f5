//! Short cards: cards of minimum radius, and their path packings.

use crate::canon::CanonicalCode;
use crate::deck::Deck;
use crate::graph::{Graph, Length};

use super::VineError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortCardStats {
    /// Minimum radius over connected cards.
    pub k_hat: usize,
    /// `k_hat - 1`.
    pub k: usize,
    /// Each short card with its packing number `d_C`.
    pub short_cards: Vec<(CanonicalCode, usize)>,
    /// Largest `d_C`.
    pub d: usize,
}

/// Largest number of edge-disjoint paths of length `len` that start at `z`.
pub fn max_path_packing(g: &Graph, z: usize, len: usize) -> usize {
    if len == 0 {
        return 0;
    }
    // A path leaves z through one edge and never returns, so it is fixed
    // by its first neighbor; pick at most one path per neighbor.
    let groups: Vec<Vec<Vec<(usize, usize)>>> = g
        .neighbors(z)
        .iter()
        .map(|u| {
            let mut found = vec![];
            let mut path = vec![z, u];
            extend_paths(g, &mut path, len, &mut found);
            found
        })
        .filter(|f: &Vec<_>| !f.is_empty())
        .collect();
    let mut used = [0u32; 32];
    let mut best = 0;
    pack(&groups, 0, 0, &mut used, &mut best);
    best
}

fn extend_paths(g: &Graph, path: &mut Vec<usize>, len: usize, out: &mut Vec<Vec<(usize, usize)>>) {
    if path.len() == len + 1 {
        out.push(path.windows(2).map(|w| (w[0], w[1])).collect());
        return;
    }
    let last = *path.last().expect("path is non-empty");
    for w in g.neighbors(last) {
        if !path.contains(&w) {
            path.push(w);
            extend_paths(g, path, len, out);
            path.pop();
        }
    }
}

fn pack(
    groups: &[Vec<Vec<(usize, usize)>>],
    i: usize,
    count: usize,
    used: &mut [u32; 32],
    best: &mut usize,
) {
    *best = (*best).max(count);
    if i == groups.len() || count + groups.len() - i <= *best {
        return;
    }
    for path in &groups[i] {
        if path.iter().all(|&(a, b)| used[a] >> b & 1 == 0) {
            for &(a, b) in path {
                used[a] |= 1 << b;
                used[b] |= 1 << a;
            }
            pack(groups, i + 1, count + 1, used, best);
            for &(a, b) in path {
                used[a] &= !(1 << b);
                used[b] &= !(1 << a);
            }
        }
    }
    pack(groups, i + 1, count, used, best);
}

/// Minimum card radius and the short-card packing numbers.
///
/// Disconnected cards have infinite radius and never count as short.
/// `d_C` is maximized over the centers of `C`.
pub fn short_card_stats(d: &Deck) -> Result<ShortCardStats, VineError> {
    if d.card_order() < 2 {
        return Err(VineError::InvalidParameter(format!(
            "card order {} is below 2",
            d.card_order()
        )));
    }
    let k_hat = d
        .card_graphs()
        .filter_map(|(c, _)| c.radius().finite())
        .min()
        .ok_or(VineError::NoConnectedCard)?;
    let short_cards: Vec<(CanonicalCode, usize)> = d
        .cards()
        .keys()
        .filter_map(|code| {
            let c = code.to_graph();
            (c.radius() == Length::Finite(k_hat)).then(|| {
                let dc = c
                    .centers()
                    .iter()
                    .map(|z| max_path_packing(&c, z, k_hat))
                    .max()
                    .unwrap_or(0);
                (code.clone(), dc)
            })
        })
        .collect();
    let d_max = short_cards.iter().map(|&(_, dc)| dc).max().unwrap_or(0);
    Ok(ShortCardStats {
        k_hat,
        k: k_hat - 1,
        short_cards,
        d: d_max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;
    use crate::deck::compute_deck;
    use crate::vine::{build_spider, SpiderSpec};

    /// Packing by trying every subset of the full path list.
    fn brute_packing(g: &Graph, z: usize, len: usize) -> usize {
        let mut paths = vec![];
        let mut path = vec![z];
        extend_paths(g, &mut path, len, &mut paths);
        let norm = |p: &Vec<(usize, usize)>| -> Vec<(usize, usize)> {
            p.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect()
        };
        let paths: Vec<_> = paths.iter().map(norm).collect();
        assert!(
            paths.len() <= 16,
            "too many paths for the brute-force oracle"
        );
        let mut best = 0;
        for mask in 0u32..(1 << paths.len()) {
            let chosen: Vec<_> = (0..paths.len()).filter(|i| mask >> i & 1 == 1).collect();
            let mut edges: Vec<_> = chosen.iter().flat_map(|&i| paths[i].clone()).collect();
            let total = edges.len();
            edges.sort_unstable();
            edges.dedup();
            if edges.len() == total {
                best = best.max(chosen.len());
            }
        }
        best
    }

    #[test]
    fn packing_examples() {
        let p5 = Graph::path(5);
        assert_eq!(max_path_packing(&p5, 2, 2), 2);
        assert_eq!(max_path_packing(&Graph::path(4), 1, 2), 1);
        let s = build_spider(&SpiderSpec::new(vec![2, 2, 2, 1])).unwrap();
        assert_eq!(max_path_packing(&s, 0, 2), 3);
        assert_eq!(max_path_packing(&Graph::cycle(6), 0, 3), 2);
        assert_eq!(max_path_packing(&Graph::complete(5), 0, 2), 4);
        let petersen = crate::graph6::parse_graph6("IheA@GUAo").unwrap();
        for g in [p5, s, Graph::cycle(6), Graph::complete(4), petersen] {
            for z in 0..g.n() {
                for len in 1..=3 {
                    assert_eq!(
                        max_path_packing(&g, z, len),
                        brute_packing(&g, z, len),
                        "{g:?} {z} {len}"
                    );
                }
            }
        }
    }

    #[test]
    fn stats_examples() {
        let st = short_card_stats(&compute_deck(&Graph::cycle(7), 5).unwrap()).unwrap();
        assert_eq!((st.k_hat, st.k, st.d), (2, 1, 2));
        assert_eq!(st.short_cards, vec![(canonical_code(&Graph::path(5)), 2)]);

        // Only connected card P4: radius 2 with diameter 3, so d_C = 1.
        let g = Graph::path(4).disjoint_union(&Graph::empty(2)).unwrap();
        let st = short_card_stats(&compute_deck(&g, 4).unwrap()).unwrap();
        assert_eq!((st.k_hat, st.d), (2, 1));

        let s333 = build_spider(&SpiderSpec::new(vec![3, 3, 3])).unwrap();
        let d = compute_deck(&s333, 7).unwrap();
        let st = short_card_stats(&d).unwrap();
        let mut expected_k_hat = usize::MAX;
        for (c, _) in d.card_graphs() {
            if let Some(r) = c.radius().finite() {
                expected_k_hat = expected_k_hat.min(r);
            }
        }
        assert_eq!(st.k_hat, expected_k_hat);
        let oracle_d = d
            .card_graphs()
            .filter(|(c, _)| c.radius() == Length::Finite(st.k_hat))
            .flat_map(|(c, _)| {
                c.centers()
                    .iter()
                    .map(move |z| brute_packing(&c, z, st.k_hat))
                    .collect::<Vec<_>>()
            })
            .max()
            .unwrap();
        assert_eq!(st.d, oracle_d);
        for (code, dc) in &st.short_cards {
            let c = code.to_graph();
            if c.diameter() == Length::Finite(2 * st.k_hat - 1) {
                assert_eq!(*dc, 1);
            }
        }
    }

    #[test]
    fn no_connected_card() {
        let g = Graph::empty(4);
        assert_eq!(
            short_card_stats(&compute_deck(&g, 2).unwrap()),
            Err(VineError::NoConnectedCard)
        );
        assert!(short_card_stats(&compute_deck(&g, 1).unwrap()).is_err());
    }
}
