//! Canonical labeling of small graphs.
//!
//! Equitable partition refinement followed by a backtracking search over
//! individualized vertices. Every leaf of the search tree is a discrete
//! ordered partition, i.e. a relabeling; the canonical form is the
//! relabeled graph with the lexicographically largest row sequence.
//! Automorphisms discovered at the leaves prune children that lie in a
//! common orbit of the pointwise stabilizer of the current branch.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::graph6::{graph6_bytes, parse_graph6, Graph6Error};

/// Isomorphism-invariant identity of a graph: the graph6 record of its
/// canonical form.
///
/// Ordering is by vertex count first, then by the record bytes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    order: u8,
    bytes: Box<[u8]>,
}

impl CanonicalCode {
    /// Number of vertices of the encoded graph.
    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.bytes).expect("graph6 is ASCII")
    }

    /// Decodes the canonical representative.
    pub fn to_graph(&self) -> Graph {
        parse_graph6(self.as_str()).expect("canonical codes hold valid graph6")
    }

    /// Parses any graph6 record and canonicalizes it.
    pub fn from_graph6(text: &str) -> Result<Self, Graph6Error> {
        parse_graph6(text).map(|g| canonical_code(&g))
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code({})", self.as_str())
    }
}

/// Result of canonical labeling.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `position[v]` is the canonical label of vertex `v`.
    pub position: Vec<usize>,
    pub form: Graph,
}

type Rows = [u32; MAX_VERTICES];
type Perm = [u8; MAX_VERTICES];

/// Splits every cell by the number of neighbors in `cells[s]`, for each
/// splitter in turn, until the partition is equitable. Split pieces are
/// ordered by increasing count so the result commutes with relabeling.
fn refine(g: &Graph, cells: &mut Vec<u32>) {
    let n = g.n();
    let mut s = 0;
    let mut groups = [0u32; MAX_VERTICES + 1];
    while s < cells.len() && cells.len() < n {
        let splitter = cells[s];
        let mut split = false;
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell.count_ones() == 1 {
                i += 1;
                continue;
            }
            let (mut lo, mut hi) = (usize::MAX, 0);
            for v in VertexSet::from_mask(cell) {
                let c = (g.neighbor_mask(v) & splitter).count_ones() as usize;
                groups[c] |= 1 << v;
                lo = lo.min(c);
                hi = hi.max(c);
            }
            if lo == hi {
                groups[lo] = 0;
                i += 1;
                continue;
            }
            split = true;
            let pieces: Vec<u32> = (lo..=hi)
                .filter_map(|c| {
                    let m = std::mem::take(&mut groups[c]);
                    (m != 0).then_some(m)
                })
                .collect();
            let k = pieces.len();
            cells.splice(i..=i, pieces);
            i += k;
        }
        s = if split { 0 } else { s + 1 };
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    first: Option<(Perm, Rows)>,
    best: Option<(Perm, Rows)>,
    generators: Vec<Perm>,
}

impl Search<'_> {
    fn relabel(&self, pos: &Perm) -> Rows {
        let mut rows = [0u32; MAX_VERTICES];
        for v in 0..self.n {
            let mut r = 0u32;
            for w in self.g.neighbors(v) {
                r |= 1 << pos[w];
            }
            rows[pos[v] as usize] = r;
        }
        rows
    }

    fn automorphism(&mut self, reference: &Perm, pos: &Perm) {
        let mut inv = [0u8; MAX_VERTICES];
        for v in 0..self.n {
            inv[reference[v] as usize] = v as u8;
        }
        let mut gamma = [0u8; MAX_VERTICES];
        for v in 0..self.n {
            gamma[v] = inv[pos[v] as usize];
        }
        if (0..self.n).any(|v| gamma[v] as usize != v) {
            self.generators.push(gamma);
        }
    }

    fn leaf(&mut self, cells: &[u32]) {
        let mut pos = [0u8; MAX_VERTICES];
        for (i, &c) in cells.iter().enumerate() {
            pos[c.trailing_zeros() as usize] = i as u8;
        }
        let rows = self.relabel(&pos);
        let n = self.n;
        let Some((first_pos, first_rows)) = self.first else {
            self.first = Some((pos, rows));
            self.best = Some((pos, rows));
            return;
        };
        if rows[..n] == first_rows[..n] {
            self.automorphism(&first_pos, &pos);
            return;
        }
        let (best_pos, best_rows) = self.best.expect("set with first");
        match rows[..n].cmp(&best_rows[..n]) {
            std::cmp::Ordering::Equal => self.automorphism(&best_pos, &pos),
            std::cmp::Ordering::Greater => self.best = Some((pos, rows)),
            std::cmp::Ordering::Less => {}
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the group
    /// generated by known automorphisms that fix `fixed` pointwise.
    fn pruned(&self, v: usize, explored: u32, fixed: &[usize]) -> bool {
        let mut parent: Perm = [0; MAX_VERTICES];
        for (i, p) in parent.iter_mut().enumerate().take(self.n) {
            *p = i as u8;
        }
        fn find(parent: &mut Perm, mut x: usize) -> usize {
            while parent[x] as usize != x {
                parent[x] = parent[parent[x] as usize];
                x = parent[x] as usize;
            }
            x
        }
        let mut any = false;
        for gamma in &self.generators {
            if fixed.iter().any(|&f| gamma[f] as usize != f) {
                continue;
            }
            any = true;
            for (x, &gx) in gamma.iter().enumerate().take(self.n) {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gx as usize));
                if a != b {
                    parent[a] = b as u8;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        VertexSet::from_mask(explored)
            .iter()
            .any(|u| find(&mut parent, u) == root)
    }

    fn run(&mut self, mut cells: Vec<u32>, fixed: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        if cells.len() == self.n {
            self.leaf(&cells);
            return;
        }
        let (ti, &target) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .expect("non-discrete partition has a non-singleton cell");
        let mut explored = 0u32;
        for v in VertexSet::from_mask(target) {
            if explored != 0 && self.pruned(v, explored, fixed) {
                continue;
            }
            explored |= 1 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[ti + 1..]);
            fixed.push(v);
            self.run(child, fixed);
            fixed.pop();
        }
    }
}

fn search(g: &Graph) -> (Perm, Rows) {
    let n = g.n();
    let mut s = Search {
        g,
        n,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    if n == 0 {
        return ([0; MAX_VERTICES], [0; MAX_VERTICES]);
    }
    s.run(vec![g.vertices().mask()], &mut Vec::new());
    s.best.expect("search visits at least one leaf")
}

/// Canonical relabeling of `g`.
pub fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.n();
    let (pos, rows) = search(g);
    Labeling {
        position: pos[..n].iter().map(|&p| p as usize).collect(),
        form: Graph::from_rows_unchecked(n, &rows[..n]),
    }
}

pub fn canonical_form(g: &Graph) -> Graph {
    canonical_labeling(g).form
}

const CACHE_MAX_N: usize = 11;
const CACHE_LIMIT: usize = 1 << 20;

thread_local! {
    static CACHE: RefCell<HashMap<u64, CanonicalCode>> = RefCell::new(HashMap::new());
}

/// Upper-triangle bits plus the vertex count, unique for `n <= 11`.
fn small_key(g: &Graph) -> u64 {
    let mut key = 0u64;
    let mut bit = 0;
    for j in 1..g.n() {
        key |= ((g.neighbor_mask(j) & ((1 << j) - 1)) as u64) << bit;
        bit += j;
    }
    key | (g.n() as u64) << 56
}

/// Code of a graph that is already in canonical form.
pub(crate) fn code_of_form(form: &Graph) -> CanonicalCode {
    CanonicalCode {
        order: form.n() as u8,
        bytes: graph6_bytes(form).into_boxed_slice(),
    }
}

fn compute_code(g: &Graph) -> CanonicalCode {
    code_of_form(&canonical_form(g))
}

/// Canonical code of `g`; equal exactly for isomorphic graphs.
///
/// Results for graphs with at most 11 vertices are memoized per thread.
pub fn canonical_code(g: &Graph) -> CanonicalCode {
    if g.n() > CACHE_MAX_N {
        return compute_code(g);
    }
    let key = small_key(g);
    if let Some(c) = CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return c;
    }
    let code = compute_code(g);
    CACHE.with(|c| {
        let mut c = c.borrow_mut();
        if c.len() >= CACHE_LIMIT {
            c.clear();
        }
        c.insert(key, code.clone());
    });
    code
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b)
}
