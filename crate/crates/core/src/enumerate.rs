//! Isomorph-free generation by canonical augmentation.
//!
//! Graphs on `j + 1` vertices are produced from representatives on `j`
//! vertices by adding vertex `j` with every possible neighborhood. A child
//! is kept only when its canonical deletion vertex yields a graph
//! isomorphic to the parent it came from; duplicates among the children of
//! one parent are removed by canonical code. Pruning predicates must hold
//! for every induced subgraph of every graph that should be produced.

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_code, canonical_labeling, code_of_form, CanonicalCode};
use crate::graph::{Graph, Length, MAX_VERTICES};

/// Default limit on the number of graphs held at any generation level.
pub const DEFAULT_CAP: usize = 4_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("generation level {level} holds more than {cap} graphs")]
    CapExceeded { level: usize, cap: usize },
    #[error("cannot enumerate graphs on {0} vertices")]
    TooManyVertices(usize),
}

/// Structural restriction on enumerated graphs.
///
/// `min_girth`, `forest`, `max_degree` and `max_edges` are closed under
/// taking induced subgraphs and prune the generation tree; `connected` and
/// `edges` are checked on the final level only.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Filter {
    pub min_girth: Option<usize>,
    pub forest: bool,
    pub max_degree: Option<usize>,
    pub max_edges: Option<usize>,
    pub connected: bool,
    pub edges: Option<usize>,
}

impl Filter {
    pub fn all() -> Self {
        Filter::default()
    }

    pub fn forests() -> Self {
        Filter {
            forest: true,
            ..Filter::default()
        }
    }

    pub fn trees() -> Self {
        Filter {
            forest: true,
            connected: true,
            ..Filter::default()
        }
    }

    /// Graphs whose shortest cycle has at least `g` vertices (forests
    /// included).
    pub fn min_girth(g: usize) -> Self {
        Filter {
            min_girth: Some(g),
            ..Filter::default()
        }
    }

    pub fn triangle_free() -> Self {
        Filter::min_girth(4)
    }

    pub fn with_edges(mut self, e: usize) -> Self {
        self.edges = Some(e);
        self.max_edges = Some(self.max_edges.map_or(e, |m| m.min(e)));
        self
    }

    pub fn with_max_degree(mut self, d: usize) -> Self {
        self.max_degree = Some(d);
        self
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    /// The hereditary part of the filter.
    pub fn admits_partial(&self, g: &Graph) -> bool {
        if self.max_edges.is_some_and(|m| g.edge_count() > m) {
            return false;
        }
        if self.max_degree.is_some_and(|d| g.max_degree() > d) {
            return false;
        }
        if self.forest && !g.is_acyclic() {
            return false;
        }
        if let Some(girth) = self.min_girth {
            if girth > 3 && g.girth() < Length::Finite(girth) {
                return false;
            }
        }
        true
    }

    pub fn admits(&self, g: &Graph) -> bool {
        self.admits_partial(g)
            && (!self.connected || g.is_connected())
            && self.edges.is_none_or(|e| g.edge_count() == e)
    }
}

/// Hooks into the generation tree.
pub(crate) trait Prune: Sync {
    /// Cheap test run before canonical labeling.
    fn quick(&self, g: &Graph) -> bool;
    /// Test run on accepted children, with their canonical code.
    fn accept(&self, _g: &Graph, _code: &CanonicalCode) -> bool {
        true
    }
}

impl Prune for Filter {
    fn quick(&self, g: &Graph) -> bool {
        self.admits_partial(g)
    }
}

/// Canonical-deletion ordering key; must be isomorphism invariant.
fn vertex_key(g: &Graph, v: usize) -> (usize, usize) {
    let nd = g.neighbors(v).iter().map(|w| g.degree(w)).sum();
    (g.degree(v), nd)
}

/// Children of `parent` that pass `prune` and whose canonical parent is
/// `parent`, each paired with its canonical code.
fn children(
    parent: &Graph,
    parent_code: &CanonicalCode,
    prune: &impl Prune,
) -> Vec<(Graph, CanonicalCode)> {
    let j = parent.n();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for nbrs in 0..(1u64 << j) {
        let mut rows = [0u32; MAX_VERTICES];
        rows[..j].copy_from_slice(parent.rows());
        let nbrs = nbrs as u32;
        for (w, row) in rows.iter_mut().enumerate().take(j) {
            *row |= (nbrs >> w & 1) << j;
        }
        rows[j] = nbrs;
        let child = Graph::from_rows_unchecked(j + 1, &rows[..j + 1]);
        if !prune.quick(&child) {
            continue;
        }
        let keys: Vec<_> = (0..=j).map(|v| vertex_key(&child, v)).collect();
        let top = *keys.iter().max().expect("child has vertices");
        if keys[j] != top {
            continue;
        }
        let lab = canonical_labeling(&child);
        let w = (0..=j)
            .filter(|&v| keys[v] == top)
            .min_by_key(|&v| lab.position[v])
            .expect("top key is attained");
        if w != j && canonical_code(&child.delete_vertex(w)) != *parent_code {
            continue;
        }
        let code = code_of_form(&lab.form);
        if !prune.accept(&child, &code) {
            continue;
        }
        if seen.insert(code.clone()) {
            out.push((child, code));
        }
    }
    out
}

/// Runs the generation up to `n` vertices. The last level is returned in
/// deterministic order.
pub(crate) fn generate(
    n: usize,
    prune: &impl Prune,
    cap: usize,
) -> Result<Vec<(Graph, CanonicalCode)>, EnumError> {
    if n > MAX_VERTICES {
        return Err(EnumError::TooManyVertices(n));
    }
    let root = Graph::empty(0);
    let mut level = vec![(root, canonical_code(&root))];
    for j in 0..n {
        level = level
            .par_iter()
            .map(|(g, c)| children(g, c, prune))
            .flatten_iter()
            .collect();
        if level.len() > cap {
            return Err(EnumError::CapExceeded { level: j + 1, cap });
        }
    }
    Ok(level)
}

/// One representative per isomorphism class of `n`-vertex graphs passing
/// `filter`, with the default cap.
pub fn enumerate_graphs(n: usize, filter: &Filter) -> Result<Vec<Graph>, EnumError> {
    enumerate_graphs_capped(n, filter, DEFAULT_CAP)
}

pub fn enumerate_graphs_capped(
    n: usize,
    filter: &Filter,
    cap: usize,
) -> Result<Vec<Graph>, EnumError> {
    Ok(generate(n, filter, cap)?
        .into_iter()
        .map(|(g, _)| g)
        .filter(|g| filter.admits(g))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_classes(n: usize, keep: impl Fn(&Graph) -> bool) -> usize {
        let perms = {
            let mut out = vec![];
            let mut p: Vec<usize> = (0..n).collect();
            fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if k == p.len() {
                    out.push(p.clone());
                    return;
                }
                for i in k..p.len() {
                    p.swap(k, i);
                    rec(k + 1, p, out);
                    p.swap(k, i);
                }
            }
            rec(0, &mut p, &mut out);
            out
        };
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut forms = HashSet::new();
        for bits in 0..(1u32 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| bits >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if keep(&g) {
                let form = perms
                    .iter()
                    .map(|p| g.permute(p).rows().to_vec())
                    .min()
                    .unwrap();
                forms.insert(form);
            }
        }
        forms.len()
    }

    #[test]
    fn small_counts_match_brute_force() {
        assert_eq!(enumerate_graphs(3, &Filter::all()).unwrap().len(), 4);
        assert_eq!(enumerate_graphs(4, &Filter::all()).unwrap().len(), 11);
        assert_eq!(brute_classes(4, |_| true), 11);
        assert_eq!(enumerate_graphs(5, &Filter::forests()).unwrap().len(), 10);
        assert_eq!(brute_classes(5, |g| g.is_acyclic()), 10);
        assert_eq!(
            enumerate_graphs(5, &Filter::all()).unwrap().len(),
            brute_classes(5, |_| true)
        );
        assert_eq!(
            enumerate_graphs(5, &Filter::triangle_free()).unwrap().len(),
            brute_classes(5, |g| g.girth() >= Length::Finite(4))
        );
    }

    #[test]
    fn known_sequence_values() {
        let counts: Vec<usize> = (0..=7)
            .map(|n| enumerate_graphs(n, &Filter::all()).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
        let trees: Vec<usize> = (1..=10)
            .map(|n| enumerate_graphs(n, &Filter::trees()).unwrap().len())
            .collect();
        assert_eq!(trees, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        let forests: Vec<usize> = (1..=9)
            .map(|n| enumerate_graphs(n, &Filter::forests()).unwrap().len())
            .collect();
        assert_eq!(forests, vec![1, 2, 3, 6, 10, 20, 37, 76, 153]);
    }

    #[test]
    fn output_is_isomorph_free_and_deterministic() {
        let a = enumerate_graphs(6, &Filter::all()).unwrap();
        let codes: HashSet<_> = a.iter().map(canonical_code).collect();
        assert_eq!(codes.len(), a.len());
        assert_eq!(a, enumerate_graphs(6, &Filter::all()).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            enumerate_graphs_capped(6, &Filter::all(), 20),
            Err(EnumError::CapExceeded { level: 5, cap: 20 })
        );
    }

    #[test]
    fn final_filters() {
        let g = enumerate_graphs(6, &Filter::all().with_edges(3)).unwrap();
        assert!(g.iter().all(|g| g.edge_count() == 3));
        let connected = enumerate_graphs(5, &Filter::all().connected()).unwrap();
        assert_eq!(connected.len(), 21);
    }
}
