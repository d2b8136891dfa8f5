//! Exhaustive search for every graph with a given deck.

use std::collections::{BTreeMap, HashSet};

use crate::canon::{canonical_code, CanonicalCode};
use crate::deck::{compute_deck, deck_equal, edge_count_from_deck, for_each_subset, subdeck, Deck};
use crate::enumerate::{generate, EnumError, Filter, Prune};
use crate::graph::Graph;
use crate::vine::degree_list_from_deck;

use super::RecognizeError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionSearchResult {
    /// Canonical codes of the matching graphs, sorted.
    pub matches: Vec<CanonicalCode>,
    pub acyclic_found: bool,
    pub cyclic_found: bool,
    /// False when the search stopped at the cap; `matches` is then empty.
    pub exhausted: bool,
}

/// Pruning by consistency with the deck. Generated graphs are built along
/// canonical deletions of the final graph, so every intermediate graph is
/// an induced subgraph of a reconstruction and must fit inside the deck.
struct DeckPrune<'a> {
    restrict: &'a Filter,
    card_order: usize,
    edges: usize,
    max_degree: Option<usize>,
    degree_list: Option<Vec<usize>>,
    /// Classes of the `j`-deck, for `j <= card_order`.
    levels: Vec<HashSet<CanonicalCode>>,
    cards: &'a BTreeMap<CanonicalCode, u64>,
}

impl DeckPrune<'_> {
    fn fits_in_cards(&self, g: &Graph) -> bool {
        let mut counts: BTreeMap<CanonicalCode, u64> = BTreeMap::new();
        let mut ok = true;
        for_each_subset(g.n(), self.card_order, |mask| {
            if !ok {
                return;
            }
            let c = canonical_code(&g.induced(mask));
            let have = self.cards.get(&c).copied().unwrap_or(0);
            let slot = counts.entry(c).or_insert(0);
            *slot += 1;
            ok = *slot <= have;
        });
        ok
    }
}

impl Prune for DeckPrune<'_> {
    fn quick(&self, g: &Graph) -> bool {
        if !self.restrict.admits_partial(g) || g.edge_count() > self.edges {
            return false;
        }
        if self.max_degree.is_some_and(|d| g.max_degree() > d) {
            return false;
        }
        if let Some(full) = &self.degree_list {
            // Degrees in an induced subgraph are bounded by the degrees of
            // distinct vertices of the whole graph.
            if g.degree_list().iter().zip(full).any(|(a, b)| a > b) {
                return false;
            }
        }
        true
    }

    fn accept(&self, g: &Graph, code: &CanonicalCode) -> bool {
        match self.levels.get(g.n()) {
            Some(level) => level.contains(code),
            None => self.fits_in_cards(g),
        }
    }
}

/// Every graph on the deck's vertex count whose deck equals `d` and which
/// passes `restrict`, one per isomorphism class.
pub fn reconstruct_all(
    d: &Deck,
    restrict: &Filter,
    cap: usize,
) -> Result<ReconstructionSearchResult, RecognizeError> {
    let n = d.ambient_n().ok_or(RecognizeError::UnknownAmbient)?;
    let m = d.card_order();
    let edges = if m >= 2 {
        edge_count_from_deck(d)? as usize
    } else {
        n * n.saturating_sub(1) / 2
    };
    let mut levels = Vec::with_capacity(m + 1);
    for j in 0..=m {
        levels.push(subdeck(d, j)?.cards().keys().cloned().collect());
    }

    let card_max = d
        .card_graphs()
        .map(|(c, _)| c.max_degree())
        .max()
        .unwrap_or(0);
    // A vertex of degree D shows degree min(D, m - 1) on some card.
    let max_degree = (m >= 1 && card_max + 1 < m).then_some(card_max);
    let degree_list = match max_degree {
        Some(_) if m >= 3 => degree_list_from_deck(d, &[]).ok(),
        _ => None,
    };

    let prune = DeckPrune {
        restrict,
        card_order: m,
        edges,
        max_degree,
        degree_list,
        levels,
        cards: d.cards(),
    };
    let found = match generate(n, &prune, cap) {
        Ok(found) => found,
        Err(EnumError::CapExceeded { .. }) => {
            return Ok(ReconstructionSearchResult {
                matches: vec![],
                acyclic_found: false,
                cyclic_found: false,
                exhausted: false,
            })
        }
        Err(e) => return Err(e.into()),
    };

    let mut result = ReconstructionSearchResult {
        matches: vec![],
        acyclic_found: false,
        cyclic_found: false,
        exhausted: true,
    };
    for (g, code) in found {
        if restrict.admits(&g) && deck_equal(&compute_deck(&g, m)?, d) {
            if g.is_acyclic() {
                result.acyclic_found = true;
            } else {
                result.cyclic_found = true;
            }
            result.matches.push(code);
        }
    }
    result.matches.sort();
    Ok(result)
}
