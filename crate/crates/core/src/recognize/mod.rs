//! Deciding from a deck whether a graph has a cycle.
//!
//! [`recognize`] runs a fixed pipeline: cheap certificates first (a cyclic
//! card, too many edges, no connected card), then, for `n >= 2l + 2`, a
//! comparison of the deck-determined count `s'` of `k`-central edges with
//! the short-card packing number `d`, and otherwise a search over the
//! possible reconstructions.

mod families;
mod search;
mod verify;

pub use families::{
    cycle_pair, exception_pair, nydl_pair, pairs_for, path_cycle_pair, path_pair, SameDeckPair,
};
pub use search::{reconstruct_all, ReconstructionSearchResult};
pub use verify::{
    consequence_checks, verify_recognizability, Consequence, ConsequenceReport, MixedClass,
    VerifySummary,
};

use std::fmt;

use thiserror::Error;

use crate::canon::CanonicalCode;
use crate::deck::{edge_count_from_deck, Deck, DeckError};
use crate::enumerate::{EnumError, Filter, DEFAULT_CAP};
use crate::graph::Length;
use crate::vine::{
    count_k_centers_from_deck_at, count_k_central_edges_from_deck_at, short_card_stats, VineError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognizeError {
    #[error("the deck does not record the vertex count of its graph")]
    UnknownAmbient,
    #[error("card order {0} is too small; at least 2 is needed")]
    CardOrderTooSmall(usize),
    #[error("not the deck of any graph: {0}")]
    IllegitimateDeck(String),
    #[error("graph {0} appears twice in the source")]
    DuplicateClass(CanonicalCode),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Deck(#[from] DeckError),
    #[error(transparent)]
    Vine(#[from] VineError),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Acyclic,
    Cyclic,
    /// Both acyclic and cyclic reconstructions exist.
    ExceptionPair,
    Undecided(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Acyclic => f.write_str("acyclic"),
            Verdict::Cyclic => f.write_str("cyclic"),
            Verdict::ExceptionPair => f.write_str("exception-pair"),
            Verdict::Undecided(_) => f.write_str("undecided"),
        }
    }
}

/// Which pipeline step produced the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecisionPath {
    CyclicCard,
    EdgeCount,
    NoConnectedCard,
    Exhaustive,
    Fast,
    Fallback,
}

impl fmt::Display for DecisionPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecisionPath::CyclicCard => "cyclic-card",
            DecisionPath::EdgeCount => "edge-count",
            DecisionPath::NoConnectedCard => "no-connected-card",
            DecisionPath::Exhaustive => "exhaustive",
            DecisionPath::Fast => "fast",
            DecisionPath::Fallback => "fallback",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionReport {
    pub n: usize,
    pub l: usize,
    pub e: u64,
    pub all_cards_acyclic: bool,
    pub k_hat: Option<usize>,
    pub k: Option<usize>,
    pub d: Option<usize>,
    /// Number of `k`-centers, when the deck determines it.
    pub s: Option<usize>,
    /// Number of `k`-central edges, when the deck determines it.
    pub s_prime: Option<usize>,
    pub path: DecisionPath,
    pub verdict: Verdict,
    /// Reconstructions found by a search step.
    pub witnesses: Vec<CanonicalCode>,
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

impl fmt::Display for RecognitionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "l={}", self.l)?;
        writeln!(f, "e={}", self.e)?;
        writeln!(f, "acyclic_cards={}", self.all_cards_acyclic)?;
        writeln!(f, "k_hat={}", opt(self.k_hat))?;
        writeln!(f, "k={}", opt(self.k))?;
        writeln!(f, "d={}", opt(self.d))?;
        writeln!(f, "s={}", opt(self.s))?;
        writeln!(f, "s_prime={}", opt(self.s_prime))?;
        writeln!(f, "path={}", self.path)?;
        writeln!(f, "verdict={}", self.verdict)?;
        if let Verdict::Undecided(reason) = &self.verdict {
            writeln!(f, "reason={reason}")?;
        }
        for w in &self.witnesses {
            writeln!(f, "witness={w}")?;
        }
        Ok(())
    }
}

/// Decides acyclicity for every graph with deck `d`, using the default
/// search cap.
pub fn recognize(d: &Deck) -> Result<RecognitionReport, RecognizeError> {
    recognize_with_cap(d, DEFAULT_CAP)
}

pub fn recognize_with_cap(d: &Deck, cap: usize) -> Result<RecognitionReport, RecognizeError> {
    let n = d.ambient_n().ok_or(RecognizeError::UnknownAmbient)?;
    let m = d.card_order();
    if m < 2 {
        return Err(RecognizeError::CardOrderTooSmall(m));
    }
    let l = n - m;
    let e = edge_count_from_deck(d)?;
    let all_cards_acyclic = d.card_graphs().all(|(c, _)| c.is_acyclic());
    let mut report = RecognitionReport {
        n,
        l,
        e,
        all_cards_acyclic,
        k_hat: None,
        k: None,
        d: None,
        s: None,
        s_prime: None,
        path: DecisionPath::CyclicCard,
        verdict: Verdict::Cyclic,
        witnesses: vec![],
    };
    if !all_cards_acyclic {
        return Ok(report);
    }

    let stats = match short_card_stats(d) {
        Ok(st) => Some(st),
        Err(VineError::NoConnectedCard) => None,
        Err(err) => return Err(err.into()),
    };
    let mut fast_ready = false;
    if let Some(st) = &stats {
        report.k_hat = Some(st.k_hat);
        report.k = Some(st.k);
        report.d = Some(st.d);
        let k = st.k;
        if k >= 1 {
            // Acyclic cards all have radius at least k_hat > k.
            report.s = Some(count_k_centers_from_deck_at(d, k)?);
            let long_cards = 2 * k + 2 <= m;
            let no_evine_card = d
                .card_graphs()
                .all(|(c, _)| c.diameter() != Length::Finite(2 * k + 1));
            if long_cards && no_evine_card {
                report.s_prime = Some(count_k_central_edges_from_deck_at(d, k)?);
                fast_ready = n >= 2 * l + 2;
            }
        }
    }

    if e >= n as u64 {
        report.path = DecisionPath::EdgeCount;
        report.verdict = Verdict::Cyclic;
        return Ok(report);
    }
    if stats.is_none() {
        // A cyclic reconstruction would have a cycle longer than the cards,
        // and any card-sized stretch of it is a path card.
        report.path = DecisionPath::NoConnectedCard;
        report.verdict = Verdict::Acyclic;
        return Ok(report);
    }

    if (n, l) == (5, 2) || n <= 2 * l {
        report.path = DecisionPath::Exhaustive;
        let r = reconstruct_all(d, &Filter::min_girth(m + 1), cap)?;
        let first_acyclic = r.matches.iter().find(|c| c.to_graph().is_acyclic());
        let first_cyclic = r.matches.iter().find(|c| !c.to_graph().is_acyclic());
        report.witnesses = first_acyclic
            .into_iter()
            .chain(first_cyclic)
            .cloned()
            .collect();
        report.verdict = match (r.acyclic_found, r.cyclic_found, r.exhausted) {
            (_, _, false) => Verdict::Undecided(format!("search cap {cap} exceeded")),
            (true, true, _) => Verdict::ExceptionPair,
            (true, false, _) => Verdict::Acyclic,
            (false, true, _) => Verdict::Cyclic,
            (false, false, true) => {
                return Err(RecognizeError::IllegitimateDeck(
                    "no graph has this deck".into(),
                ))
            }
        };
        return Ok(report);
    }

    if fast_ready {
        let s_prime = report.s_prime.expect("computed above");
        let dd = report.d.expect("computed above");
        // Acyclic reconstructions have s' <= d + l, cyclic ones
        // s' >= n - l + d - 1, and these ranges are disjoint here.
        if s_prime <= dd + l {
            report.path = DecisionPath::Fast;
            report.verdict = Verdict::Acyclic;
            return Ok(report);
        }
        if s_prime + 1 >= n - l + dd {
            report.path = DecisionPath::Fast;
            report.verdict = Verdict::Cyclic;
            return Ok(report);
        }
    }

    report.path = DecisionPath::Fallback;
    let (verdict, witnesses) = fallback_verdict_with_cap(d, cap)?;
    report.verdict = verdict;
    report.witnesses = witnesses;
    Ok(report)
}

/// Verdict from searching the forests with deck `d`: one found means
/// acyclic, none means every reconstruction has a cycle. A cyclic witness
/// is searched for as well, so that an illegitimate deck is reported.
pub fn fallback_verdict(d: &Deck) -> Result<(Verdict, Vec<CanonicalCode>), RecognizeError> {
    fallback_verdict_with_cap(d, DEFAULT_CAP)
}

pub fn fallback_verdict_with_cap(
    d: &Deck,
    cap: usize,
) -> Result<(Verdict, Vec<CanonicalCode>), RecognizeError> {
    let forests = reconstruct_all(d, &Filter::forests(), cap)?;
    if forests.acyclic_found {
        return Ok((Verdict::Acyclic, forests.matches[..1].to_vec()));
    }
    if !forests.exhausted {
        return Ok((
            Verdict::Undecided(format!("forest search cap {cap} exceeded")),
            vec![],
        ));
    }
    let m = d.card_order();
    let girth = if d.card_graphs().all(|(c, _)| c.is_acyclic()) {
        m + 1
    } else {
        3
    };
    let cyclic = reconstruct_all(d, &Filter::min_girth(girth), cap)?;
    if cyclic.cyclic_found {
        return Ok((Verdict::Cyclic, cyclic.matches[..1].to_vec()));
    }
    if cyclic.exhausted {
        return Err(RecognizeError::IllegitimateDeck(
            "no graph has this deck".into(),
        ));
    }
    // No forest has the deck, so a legitimate deck only has cyclic graphs.
    Ok((Verdict::Cyclic, vec![]))
}
