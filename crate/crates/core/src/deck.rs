//! Decks: multisets of isomorphism classes of induced subgraphs.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::canon::{canonical_code, CanonicalCode};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, Graph6Error};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeckError {
    #[error("card order {k} out of range for a graph on {n} vertices")]
    CardOrderOutOfRange { k: usize, n: usize },
    #[error("requested order {j} exceeds the card order {k}")]
    SubdeckOrder { j: usize, k: usize },
    #[error("the deck does not record the vertex count of its graph")]
    UnknownAmbient,
    #[error("card on {found} vertices in a deck of order {expected}")]
    CardOrderMismatch { expected: usize, found: usize },
    #[error("card {0} has multiplicity zero")]
    ZeroMultiplicity(CanonicalCode),
    #[error("multiplicities sum to {found}, expected C({n}, {k}) = {expected}")]
    TotalMismatch {
        n: usize,
        k: usize,
        expected: u64,
        found: u64,
    },
    #[error("count {total} for a {j}-vertex class is not divisible by {divisor}: not the deck of a graph")]
    InexactDivision { j: usize, total: u64, divisor: u64 },
    #[error("arithmetic overflow while counting")]
    Overflow,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph6 { line: usize, source: Graph6Error },
}

/// Checked binomial coefficient.
pub fn binomial(n: usize, k: usize) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) is exact at every step.
        acc = acc.checked_mul((n - i) as u64)? / (i as u64 + 1);
    }
    Some(acc)
}

/// Calls `f` with every `k`-subset of `0..n` as a bit mask, in colex order.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(u32)) {
    if k > n {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let limit = 1u64 << n;
    let mut s: u64 = (1 << k) - 1;
    while s < limit {
        f(s as u32);
        // Gosper's hack: next integer with the same popcount.
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

/// The `k`-deck of a graph, or a multiset claiming to be one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Deck {
    card_order: usize,
    ambient_n: Option<usize>,
    cards: BTreeMap<CanonicalCode, u64>,
}

impl Deck {
    /// Builds a deck from `(card, multiplicity)` pairs, merging repeated
    /// cards and checking the invariants.
    pub fn new(
        card_order: usize,
        ambient_n: Option<usize>,
        cards: impl IntoIterator<Item = (CanonicalCode, u64)>,
    ) -> Result<Self, DeckError> {
        let mut map: BTreeMap<CanonicalCode, u64> = BTreeMap::new();
        for (code, m) in cards {
            if code.order() != card_order {
                return Err(DeckError::CardOrderMismatch {
                    expected: card_order,
                    found: code.order(),
                });
            }
            if m == 0 {
                return Err(DeckError::ZeroMultiplicity(code));
            }
            let slot = map.entry(code).or_insert(0);
            *slot = slot.checked_add(m).ok_or(DeckError::Overflow)?;
        }
        let deck = Deck {
            card_order,
            ambient_n,
            cards: map,
        };
        if let Some(n) = ambient_n {
            if card_order > n {
                return Err(DeckError::CardOrderOutOfRange { k: card_order, n });
            }
            let expected = binomial(n, card_order).ok_or(DeckError::Overflow)?;
            let found = deck.total();
            if found != expected {
                return Err(DeckError::TotalMismatch {
                    n,
                    k: card_order,
                    expected,
                    found,
                });
            }
        }
        Ok(deck)
    }

    pub fn card_order(&self) -> usize {
        self.card_order
    }

    pub fn ambient_n(&self) -> Option<usize> {
        self.ambient_n
    }

    /// Number of deleted vertices, `n - k`, when `n` is known.
    pub fn deleted(&self) -> Option<usize> {
        self.ambient_n.map(|n| n - self.card_order)
    }

    pub fn cards(&self) -> &BTreeMap<CanonicalCode, u64> {
        &self.cards
    }

    pub fn multiplicity(&self, code: &CanonicalCode) -> u64 {
        self.cards.get(code).copied().unwrap_or(0)
    }

    /// Number of cards counted with multiplicity.
    pub fn total(&self) -> u64 {
        self.cards.values().sum()
    }

    /// Distinct cards decoded to graphs, with multiplicities.
    pub fn card_graphs(&self) -> impl Iterator<Item = (Graph, u64)> + '_ {
        self.cards.iter().map(|(c, &m)| (c.to_graph(), m))
    }

    fn require_ambient(&self) -> Result<usize, DeckError> {
        self.ambient_n.ok_or(DeckError::UnknownAmbient)
    }

    /// Canonical text form: a `deck k=<K> n=<N|?>` header, then one
    /// `<multiplicity>\t<graph6>` line per distinct card, sorted by code.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parses the text form. Card order and duplicates do not matter; cards
    /// need not be in canonical form.
    pub fn from_text(text: &str) -> Result<Self, DeckError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(DeckError::Parse {
            line: 1,
            msg: "missing deck header".into(),
        })?;
        let bad = |msg: &str| DeckError::Parse {
            line: hline,
            msg: msg.to_string(),
        };
        let mut fields = header.split_whitespace();
        if fields.next() != Some("deck") {
            return Err(bad("header must start with `deck`"));
        }
        let k = fields
            .next()
            .and_then(|f| f.strip_prefix("k="))
            .and_then(|v| v.parse::<usize>().ok())
            .ok_or_else(|| bad("expected `k=<integer>`"))?;
        let n = match fields.next().and_then(|f| f.strip_prefix("n=")) {
            Some("?") => None,
            Some(v) => Some(
                v.parse::<usize>()
                    .map_err(|_| bad("expected `n=<integer>` or `n=?`"))?,
            ),
            None => return Err(bad("expected `n=<integer>` or `n=?`")),
        };
        if fields.next().is_some() {
            return Err(bad("unexpected trailing header field"));
        }
        let mut cards = Vec::new();
        for (line, l) in lines {
            let (m, g6) = l.split_once('\t').ok_or(DeckError::Parse {
                line,
                msg: "expected `<multiplicity>\\t<graph6>`".into(),
            })?;
            let m: u64 = m.trim().parse().map_err(|_| DeckError::Parse {
                line,
                msg: format!("bad multiplicity `{m}`"),
            })?;
            let g = parse_graph6(g6.trim()).map_err(|source| DeckError::Graph6 { line, source })?;
            cards.push((canonical_code(&g), m));
        }
        Deck::new(k, n, cards)
    }
}

impl fmt::Display for Deck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "deck k={} n=", self.card_order)?;
        match self.ambient_n {
            Some(n) => writeln!(f, "{n}")?,
            None => writeln!(f, "?")?,
        }
        for (code, m) in &self.cards {
            writeln!(f, "{m}\t{code}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Deck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// The multiset of `k`-vertex induced subgraphs of `g`.
pub fn compute_deck(g: &Graph, k: usize) -> Result<Deck, DeckError> {
    if k > g.n() {
        return Err(DeckError::CardOrderOutOfRange { k, n: g.n() });
    }
    let mut cards: BTreeMap<CanonicalCode, u64> = BTreeMap::new();
    for_each_subset(g.n(), k, |mask| {
        *cards.entry(canonical_code(&g.induced(mask))).or_insert(0) += 1;
    });
    Ok(Deck {
        card_order: k,
        ambient_n: Some(g.n()),
        cards,
    })
}

/// Number of induced subgraphs of `host` isomorphic to `pattern`.
pub fn count_induced_copies(pattern: &Graph, host: &Graph) -> u64 {
    let j = pattern.n();
    if j > host.n() {
        return 0;
    }
    let target = canonical_code(pattern);
    let edges = pattern.edge_count();
    let mut count = 0;
    for_each_subset(host.n(), j, |mask| {
        let sub = host.induced(mask);
        if sub.edge_count() == edges && canonical_code(&sub) == target {
            count += 1;
        }
    });
    count
}

/// The `j`-deck determined by `d`: each `j`-subset of the graph lies in
/// exactly `C(n-j, k-j)` of the `k`-subsets.
pub fn subdeck(d: &Deck, j: usize) -> Result<Deck, DeckError> {
    let k = d.card_order;
    if j > k {
        return Err(DeckError::SubdeckOrder { j, k });
    }
    if j == k {
        return Ok(d.clone());
    }
    let n = d.require_ambient()?;
    let mut sums: BTreeMap<CanonicalCode, u64> = BTreeMap::new();
    for (card, mult) in d.card_graphs() {
        let mut local: BTreeMap<CanonicalCode, u64> = BTreeMap::new();
        for_each_subset(k, j, |mask| {
            *local
                .entry(canonical_code(&card.induced(mask)))
                .or_insert(0) += 1;
        });
        for (code, s) in local {
            let add = s.checked_mul(mult).ok_or(DeckError::Overflow)?;
            let slot = sums.entry(code).or_insert(0);
            *slot = slot.checked_add(add).ok_or(DeckError::Overflow)?;
        }
    }
    let divisor = binomial(n - j, k - j).ok_or(DeckError::Overflow)?;
    let mut cards = BTreeMap::new();
    for (code, total) in sums {
        if !total.is_multiple_of(divisor) {
            return Err(DeckError::InexactDivision { j, total, divisor });
        }
        cards.insert(code, total / divisor);
    }
    Ok(Deck {
        card_order: j,
        ambient_n: d.ambient_n,
        cards,
    })
}

/// `s(F, G)` for every graph `G` with deck `d`.
pub fn count_induced_from_deck(f: &CanonicalCode, d: &Deck) -> Result<u64, DeckError> {
    let j = f.order();
    let k = d.card_order;
    if j > k {
        return Err(DeckError::SubdeckOrder { j, k });
    }
    if j == k {
        return Ok(d.multiplicity(f));
    }
    let n = d.require_ambient()?;
    let pattern = f.to_graph();
    let mut total: u64 = 0;
    for (card, mult) in d.card_graphs() {
        let s = count_induced_copies(&pattern, &card);
        total = s
            .checked_mul(mult)
            .and_then(|x| total.checked_add(x))
            .ok_or(DeckError::Overflow)?;
    }
    let divisor = binomial(n - j, k - j).ok_or(DeckError::Overflow)?;
    if !total.is_multiple_of(divisor) {
        return Err(DeckError::InexactDivision { j, total, divisor });
    }
    Ok(total / divisor)
}

/// Number of edges of any graph with deck `d` (needs `k >= 2`).
pub fn edge_count_from_deck(d: &Deck) -> Result<u64, DeckError> {
    count_induced_from_deck(&canonical_code(&Graph::path(2)), d)
}

/// Same card order and identical multisets.
pub fn deck_equal(a: &Deck, b: &Deck) -> bool {
    a.card_order == b.card_order && a.cards == b.cards
}
