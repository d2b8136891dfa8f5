//! Known pairs of distinct graphs with equal decks.

use crate::graph::Graph;
use crate::vine::{build_spider, SpiderSpec};

use super::RecognizeError;

/// Two graphs on the same vertex set size whose `card_order`-decks agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SameDeckPair {
    pub name: &'static str,
    pub card_order: usize,
    pub first: Graph,
    pub second: Graph,
}

fn need(l: usize, min: usize, what: &str) -> Result<(), RecognizeError> {
    if l < min {
        return Err(RecognizeError::InvalidParameter(format!(
            "{what} needs l >= {min}, got {l}"
        )));
    }
    Ok(())
}

fn union(a: Graph, b: Graph) -> Result<Graph, RecognizeError> {
    a.disjoint_union(&b)
        .map_err(|e| RecognizeError::InvalidParameter(e.to_string()))
}

/// Two trees on `2l` vertices: `P_{2l-1}` with a leaf added at its central
/// vertex, and with a leaf added at a neighbor of the central vertex.
pub fn nydl_pair(l: usize) -> Result<(Graph, Graph), RecognizeError> {
    need(l, 2, "nydl pair")?;
    if 2 * l > crate::graph::MAX_VERTICES {
        return Err(RecognizeError::InvalidParameter(format!(
            "l = {l} is too large"
        )));
    }
    let base = union(Graph::path(2 * l - 1), Graph::empty(1))?;
    let leaf = 2 * l - 1;
    let mut at_center = base;
    at_center.add_edge(l - 1, leaf).expect("in range");
    let mut beside = base;
    beside.add_edge(l - 2, leaf).expect("in range");
    Ok((at_center, beside))
}

/// `P_{2l}` and `C_{l+1} + P_{l-1}`, equal `l`-decks.
pub fn path_cycle_pair(l: usize) -> Result<SameDeckPair, RecognizeError> {
    need(l, 2, "path/cycle pair")?;
    Ok(SameDeckPair {
        name: "path-cycle",
        card_order: l,
        first: Graph::path(2 * l),
        second: union(Graph::cycle(l + 1), Graph::path(l - 1))?,
    })
}

/// `C_4 + K_1` and the spider `S_{1,1,2}`, equal 3-decks.
pub fn exception_pair() -> SameDeckPair {
    SameDeckPair {
        name: "exception",
        card_order: 3,
        first: Graph::cycle(4)
            .disjoint_union(&Graph::empty(1))
            .expect("5 vertices"),
        second: build_spider(&SpiderSpec::new(vec![1, 1, 2])).expect("valid legs"),
    }
}

/// `C_{2l-2}` and `C_{l-1} + C_{l-1}`, equal `(l-2)`-decks.
pub fn cycle_pair(l: usize) -> Result<SameDeckPair, RecognizeError> {
    need(l, 4, "cycle pair")?;
    Ok(SameDeckPair {
        name: "cycles",
        card_order: l - 2,
        first: Graph::cycle(2 * l - 2),
        second: union(Graph::cycle(l - 1), Graph::cycle(l - 1))?,
    })
}

/// `P_l + P_l` and `P_{l+1} + P_{l-1}`, equal `l`-decks.
pub fn path_pair(l: usize) -> Result<SameDeckPair, RecognizeError> {
    need(l, 2, "path pair")?;
    Ok(SameDeckPair {
        name: "paths",
        card_order: l,
        first: union(Graph::path(l), Graph::path(l))?,
        second: union(Graph::path(l + 1), Graph::path(l - 1))?,
    })
}

/// Every pair defined for this `l`, in a fixed order.
pub fn pairs_for(l: usize) -> Vec<SameDeckPair> {
    let mut out = vec![];
    if let Ok(p) = path_cycle_pair(l) {
        out.push(p);
    }
    if let Ok((first, second)) = nydl_pair(l) {
        out.push(SameDeckPair {
            name: "nydl",
            card_order: l,
            first,
            second,
        });
    }
    if let Ok(p) = cycle_pair(l) {
        out.push(p);
    }
    if let Ok(p) = path_pair(l) {
        out.push(p);
    }
    if l == 2 {
        out.push(exception_pair());
    }
    out
}
