//! Counting maximal members of an absorbing family from a deck.
//!
//! If every member of the family inside `G` lies in a unique maximal
//! member, then `s(F, G) = sum over H of s(F, H) m(H, G)`, where `m(H, G)`
//! counts the maximal occurrences of `H`. Solving from the largest members
//! down recovers every `m(F, G)` from the induced counts the deck provides,
//! given the counts for members too large to appear on a card.

use std::collections::BTreeMap;
use std::fmt;

use crate::canon::{canonical_code, CanonicalCode};
use crate::deck::{
    count_induced_copies, count_induced_from_deck, edge_count_from_deck, subdeck, Deck, DeckError,
};
use crate::graph::{Graph, Length};

use super::{is_k_evine, is_k_vine, short_card_stats, VineError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Connected graphs; maximal members are components.
    Connected,
    /// Stars `K_{1,r}` with `r >= 2` (the 1-vines).
    Star,
    Vine(usize),
    Evine(usize),
}

impl Family {
    pub fn contains(&self, g: &Graph) -> bool {
        match *self {
            Family::Connected => g.is_connected(),
            Family::Star => is_k_vine(g, 1),
            Family::Vine(k) => is_k_vine(g, k),
            Family::Evine(k) => is_k_evine(g, k),
        }
    }
}

/// Maximal-occurrence counts `m(F, G)` keyed by canonical code.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MaximalCountTable {
    entries: BTreeMap<CanonicalCode, u64>,
}

impl MaximalCountTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `m` occurrences of the class of `code`; zero counts are not stored.
    pub fn add(&mut self, code: CanonicalCode, m: u64) {
        if m > 0 {
            *self.entries.entry(code).or_insert(0) += m;
        }
    }

    pub fn get(&self, code: &CanonicalCode) -> u64 {
        self.entries.get(code).copied().unwrap_or(0)
    }

    pub fn contains(&self, code: &CanonicalCode) -> bool {
        self.entries.contains_key(code)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalCode, u64)> {
        self.entries.iter().map(|(c, &m)| (c, m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all counts.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// One `"<m>\t<graph6>"` line per entry.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn from_text(text: &str) -> Result<Self, DeckError> {
        let mut table = MaximalCountTable::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |msg: &str| DeckError::Parse {
                line: i + 1,
                msg: msg.to_string(),
            };
            let (m, g6) = line
                .split_once('\t')
                .ok_or_else(|| parse_err("expected <count><TAB><graph6>"))?;
            let m: u64 = m.trim().parse().map_err(|_| parse_err("bad count"))?;
            let code =
                CanonicalCode::from_graph6(g6.trim()).map_err(|source| DeckError::Graph6 {
                    line: i + 1,
                    source,
                })?;
            table.add(code, m);
        }
        Ok(table)
    }
}

impl fmt::Display for MaximalCountTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (code, m) in &self.entries {
            writeln!(f, "{m}\t{code}")?;
        }
        Ok(())
    }
}

impl FromIterator<(CanonicalCode, u64)> for MaximalCountTable {
    fn from_iter<I: IntoIterator<Item = (CanonicalCode, u64)>>(iter: I) -> Self {
        let mut t = MaximalCountTable::new();
        for (c, m) in iter {
            t.add(c, m);
        }
        t
    }
}

/// `m(F, G)` for every member `F` of `family` occurring in a graph `G` with
/// deck `d`.
///
/// Members on at most `card_order` vertices are read off the deck and its
/// subdecks. Counts for larger members must be supplied in `known_large`;
/// an entry there for a smaller member overrides the computed value.
pub fn count_maximal_from_deck(
    d: &Deck,
    family: Family,
    known_large: &MaximalCountTable,
) -> Result<MaximalCountTable, VineError> {
    d.ambient_n().ok_or(VineError::UnknownAmbient)?;
    let mut members: Vec<(CanonicalCode, u64)> = Vec::new();
    for j in (1..=d.card_order()).rev() {
        let dj = subdeck(d, j)?;
        for (code, &s) in dj.cards() {
            if !known_large.contains(code) && family.contains(&code.to_graph()) {
                members.push((code.clone(), s));
            }
        }
    }

    let mut resolved: Vec<(Graph, u64)> =
        known_large.iter().map(|(c, m)| (c.to_graph(), m)).collect();
    let mut out = known_large.clone();
    for (code, s) in members {
        let f = code.to_graph();
        let mut absorbed: u64 = 0;
        for (h, m) in &resolved {
            if h.n() > f.n() {
                let c = count_induced_copies(&f, h)
                    .checked_mul(*m)
                    .ok_or(DeckError::Overflow)?;
                absorbed = absorbed.checked_add(c).ok_or(DeckError::Overflow)?;
            }
        }
        if absorbed > s {
            return Err(VineError::NegativeCount {
                code,
                remaining: s,
                absorbed,
            });
        }
        let m = s - absorbed;
        if m > 0 {
            resolved.push((f, m));
            out.add(code, m);
        }
    }
    Ok(out)
}

/// Checks that every card is a forest whose components all have radius
/// above `k`.
fn require_vine_regime(d: &Deck, k: usize) -> Result<(), VineError> {
    d.ambient_n().ok_or(VineError::UnknownAmbient)?;
    if k == 0 {
        return Err(VineError::InvalidParameter("k must be at least 1".into()));
    }
    for (card, _) in d.card_graphs() {
        if !card.is_acyclic() {
            return Err(VineError::Precondition(format!(
                "card {card} contains a cycle"
            )));
        }
        if card.radius() <= Length::Finite(k) {
            return Err(VineError::Precondition(format!(
                "card {card} has radius at most {k}"
            )));
        }
    }
    Ok(())
}

/// Number of `k`-centers in every reconstruction, with `k = k_hat - 1`
/// taken from [`short_card_stats`].
pub fn count_k_centers_from_deck(d: &Deck) -> Result<usize, VineError> {
    let stats = short_card_stats(d)?;
    count_k_centers_from_deck_at(d, stats.k)
}

/// Number of `k`-centers in every reconstruction of `d`.
///
/// Requires acyclic cards of radius above `k`. Then no `k`-vine fills a
/// card, every cycle is longer than the cards, and maximal `k`-vines are
/// exactly the `k`-balls around `k`-centers.
pub fn count_k_centers_from_deck_at(d: &Deck, k: usize) -> Result<usize, VineError> {
    require_vine_regime(d, k)?;
    let table = count_maximal_from_deck(d, Family::Vine(k), &MaximalCountTable::new())?;
    Ok(table.total() as usize)
}

pub fn count_k_central_edges_from_deck(d: &Deck) -> Result<usize, VineError> {
    let stats = short_card_stats(d)?;
    count_k_central_edges_from_deck_at(d, stats.k)
}

/// Number of `k`-central edges in every reconstruction of `d`.
///
/// Besides the conditions of [`count_k_centers_from_deck_at`], cards must
/// have at least `2k + 2` vertices and none may have diameter `2k + 1`, so
/// that no `k`-evine reaches the card size.
pub fn count_k_central_edges_from_deck_at(d: &Deck, k: usize) -> Result<usize, VineError> {
    require_vine_regime(d, k)?;
    if d.card_order() < 2 * k + 2 {
        return Err(VineError::Precondition(format!(
            "card order {} is below {}",
            d.card_order(),
            2 * k + 2
        )));
    }
    if let Some((card, _)) = d
        .card_graphs()
        .find(|(c, _)| c.diameter() == Length::Finite(2 * k + 1))
    {
        return Err(VineError::Precondition(format!(
            "card {card} has diameter {}",
            2 * k + 1
        )));
    }
    let table = count_maximal_from_deck(d, Family::Evine(k), &MaximalCountTable::new())?;
    Ok(table.total() as usize)
}

/// Degree list (descending) of every reconstruction of `d`.
///
/// The cards must be triangle-free and have at least three vertices.
/// `known_large_degrees` lists the degrees of all vertices whose degree is
/// at least the card order; their stars do not fit on a card.
pub fn degree_list_from_deck(
    d: &Deck,
    known_large_degrees: &[usize],
) -> Result<Vec<usize>, VineError> {
    let n = d.ambient_n().ok_or(VineError::UnknownAmbient)?;
    let m = d.card_order();
    if m < 3 {
        return Err(VineError::Precondition(format!(
            "card order {m} is below 3"
        )));
    }
    let triangles = count_induced_from_deck(&canonical_code(&Graph::complete(3)), d)?;
    if triangles > 0 {
        return Err(VineError::Precondition("cards contain triangles".into()));
    }
    let mut large = MaximalCountTable::new();
    for &r in known_large_degrees {
        if r < m || r >= n {
            return Err(VineError::InvalidParameter(format!(
                "supplied degree {r} is outside {m}..{n}"
            )));
        }
        large.add(canonical_code(&Graph::star(r)), 1);
    }
    if known_large_degrees.len() > n {
        return Err(VineError::InvalidParameter(
            "more degrees than vertices".into(),
        ));
    }

    let stars = count_maximal_from_deck(d, Family::Star, &large)?;
    let mut degrees = Vec::with_capacity(n);
    for (code, count) in stars.iter() {
        let r = code.order() - 1;
        degrees.extend(std::iter::repeat_n(r, count as usize));
    }
    let branch_sum: u64 = degrees.iter().map(|&r| r as u64).sum();
    let e = edge_count_from_deck(d)?;
    let leaves = (2 * e).checked_sub(branch_sum).ok_or_else(|| {
        VineError::InconsistentTotals(format!(
            "degrees of at least 2 sum to {branch_sum}, above twice the {e} edges"
        ))
    })? as usize;
    let isolated = n.checked_sub(degrees.len() + leaves).ok_or_else(|| {
        VineError::InconsistentTotals(format!(
            "{} vertices of degree at least 2 and {leaves} of degree 1 exceed {n}",
            degrees.len()
        ))
    })?;
    degrees.extend(std::iter::repeat_n(1, leaves));
    degrees.extend(std::iter::repeat_n(0, isolated));
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    Ok(degrees)
}
