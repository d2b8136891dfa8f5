//! Exhaustive checks that decks separate acyclic from cyclic graphs.

use std::collections::{HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::canon::{canonical_code, CanonicalCode};
use crate::deck::{compute_deck, deck_equal, Deck};
use crate::graph::Graph;
use crate::vine::short_card_stats;

use super::RecognizeError;

/// A deck class holding both an acyclic and a cyclic graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MixedClass {
    /// Smallest acyclic member by canonical code.
    pub acyclic: CanonicalCode,
    /// Smallest cyclic member by canonical code.
    pub cyclic: CanonicalCode,
    /// Number of source graphs in the class.
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifySummary {
    pub n: usize,
    pub l: usize,
    pub graphs: usize,
    /// Number of distinct decks among the source graphs.
    pub classes: usize,
    pub mixed: Vec<MixedClass>,
}

impl fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "classes={} mixed={}", self.classes, self.mixed.len())?;
        for m in &self.mixed {
            writeln!(f, "witness size={}", m.size)?;
            writeln!(f, "acyclic={}", m.acyclic)?;
            writeln!(f, "cyclic={}", m.cyclic)?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct ClassInfo {
    size: usize,
    acyclic: Option<usize>,
    cyclic: Option<usize>,
}

const CHUNK: usize = 8192;

/// Groups `source` (one graph per isomorphism class, all on `n` vertices)
/// by `(n - l)`-deck and reports the classes mixing acyclic and cyclic
/// graphs.
pub fn verify_recognizability(
    n: usize,
    l: usize,
    source: &[Graph],
) -> Result<VerifySummary, RecognizeError> {
    if l > n || n - l < 2 {
        return Err(RecognizeError::InvalidParameter(format!(
            "need n - l >= 2, got n = {n}, l = {l}"
        )));
    }
    if let Some(g) = source.iter().find(|g| g.n() != n) {
        return Err(RecognizeError::InvalidParameter(format!(
            "source graph {g} does not have {n} vertices"
        )));
    }
    let codes: Vec<CanonicalCode> = source.par_iter().map(canonical_code).collect();
    {
        let mut seen = HashSet::with_capacity(codes.len());
        for c in &codes {
            if !seen.insert(c) {
                return Err(RecognizeError::DuplicateClass(c.clone()));
            }
        }
    }

    // Decks are keyed by interned card ids to keep the table small.
    let m = n - l;
    let mut intern: HashMap<CanonicalCode, u64> = HashMap::new();
    let mut classes: HashMap<Box<[u64]>, ClassInfo> = HashMap::new();
    for start in (0..source.len()).step_by(CHUNK) {
        let end = (start + CHUNK).min(source.len());
        let decks: Vec<Deck> = source[start..end]
            .par_iter()
            .map(|g| compute_deck(g, m))
            .collect::<Result<_, _>>()?;
        for (i, deck) in (start..end).zip(decks) {
            let mut key: Vec<u64> = deck
                .cards()
                .iter()
                .map(|(c, &mult)| {
                    let next = intern.len() as u64;
                    let id = *intern.entry(c.clone()).or_insert(next);
                    id << 32 | mult
                })
                .collect();
            key.sort_unstable();
            let info = classes.entry(key.into_boxed_slice()).or_default();
            info.size += 1;
            let slot = if source[i].is_acyclic() {
                &mut info.acyclic
            } else {
                &mut info.cyclic
            };
            if slot.is_none_or(|j| codes[i] < codes[j]) {
                *slot = Some(i);
            }
        }
    }

    let mut mixed: Vec<MixedClass> = classes
        .values()
        .filter_map(|info| match (info.acyclic, info.cyclic) {
            (Some(a), Some(c)) => Some(MixedClass {
                acyclic: codes[a].clone(),
                cyclic: codes[c].clone(),
                size: info.size,
            }),
            _ => None,
        })
        .collect();
    mixed.sort();
    Ok(VerifySummary {
        n,
        l,
        graphs: source.len(),
        classes: classes.len(),
        mixed,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Consequence {
    /// No card is a star.
    NoStar,
    /// Both graphs have a vertex of degree at least 3.
    MaxDegree,
    /// `2 k_hat <= l`.
    RadiusBound,
}

impl fmt::Display for Consequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Consequence::NoStar => "nostar",
            Consequence::MaxDegree => "maxdeg",
            Consequence::RadiusBound => "kl-ineq",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConsequenceReport {
    /// The two graphs do not have the same deck.
    DeckMismatch,
    /// Equal decks, but not one acyclic and one cyclic graph.
    NotMixed,
    /// A mixed pair outside `n >= 2l + 1`, `(n, l) != (5, 2)`.
    OutOfHypothesis,
    /// A mixed pair inside the hypothesis; each entry says whether the
    /// stated property holds.
    Evaluated(Vec<(Consequence, bool)>),
}

/// Evaluates the structural properties every ambiguous deck would have to
/// satisfy, on a pair of graphs sharing an `(n - l)`-deck.
pub fn consequence_checks(
    a: &Graph,
    b: &Graph,
    l: usize,
) -> Result<ConsequenceReport, RecognizeError> {
    let n = a.n();
    if b.n() != n || l > n || n - l < 2 {
        return Err(RecognizeError::InvalidParameter(format!(
            "graphs on {} and {} vertices with l = {l}",
            a.n(),
            b.n()
        )));
    }
    let m = n - l;
    let da = compute_deck(a, m)?;
    if !deck_equal(&da, &compute_deck(b, m)?) {
        return Ok(ConsequenceReport::DeckMismatch);
    }
    if a.is_acyclic() == b.is_acyclic() {
        return Ok(ConsequenceReport::NotMixed);
    }
    if n < 2 * l + 1 || (n, l) == (5, 2) {
        return Ok(ConsequenceReport::OutOfHypothesis);
    }
    let star = canonical_code(&Graph::star(m - 1));
    let no_star = da.multiplicity(&star) == 0;
    let max_degree = a.max_degree() >= 3 && b.max_degree() >= 3;
    let radius = match short_card_stats(&da) {
        Ok(st) => 2 * st.k_hat <= l,
        Err(_) => false,
    };
    Ok(ConsequenceReport::Evaluated(vec![
        (Consequence::NoStar, no_star),
        (Consequence::MaxDegree, max_degree),
        (Consequence::RadiusBound, radius),
    ]))
}
