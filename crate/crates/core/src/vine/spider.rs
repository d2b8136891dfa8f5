//! Spiders and induced path counts.

use crate::graph::{Graph, MAX_VERTICES};

use super::VineError;

/// Leg lengths of a spider: paths sharing one endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpiderSpec {
    legs: Vec<usize>,
}

impl SpiderSpec {
    /// Legs are stored in descending order.
    pub fn new(mut legs: Vec<usize>) -> Self {
        legs.sort_unstable_by(|a, b| b.cmp(a));
        SpiderSpec { legs }
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.legs.iter().sum::<usize>()
    }
}

/// The spider with center 0; each leg occupies consecutive labels, center
/// side first.
pub fn build_spider(spec: &SpiderSpec) -> Result<Graph, VineError> {
    if spec.legs.contains(&0) {
        return Err(VineError::InvalidParameter(
            "leg lengths must be positive".into(),
        ));
    }
    let n = spec.vertex_count();
    if n > MAX_VERTICES {
        return Err(VineError::InvalidParameter(format!(
            "spider has {n} vertices"
        )));
    }
    let mut g = Graph::empty(n);
    let mut next = 1;
    for &len in &spec.legs {
        let mut prev = 0;
        for _ in 0..len {
            g.add_edge(prev, next).expect("labels are in range");
            prev = next;
            next += 1;
        }
    }
    Ok(g)
}

/// Number of `m`-vertex subsets that induce a path.
pub fn count_long_paths(g: &Graph, m: usize) -> u64 {
    match m {
        0 => 0,
        1 => g.n() as u64,
        _ => {
            let mut total = 0;
            for v in 0..g.n() {
                total += grow(g, 1 << v, v, m - 1);
            }
            // Every path was found from both ends.
            total / 2
        }
    }
}

fn grow(g: &Graph, inside: u32, last: usize, remaining: usize) -> u64 {
    if remaining == 0 {
        return 1;
    }
    let mut count = 0;
    let mut cand = g.neighbor_mask(last) & !inside;
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if g.neighbor_mask(w) & inside == 1 << last {
            count += grow(g, inside | 1 << w, w, remaining - 1);
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deck::for_each_subset;
    use crate::graph::Length;

    fn brute(g: &Graph, m: usize) -> u64 {
        let mut c = 0;
        for_each_subset(g.n(), m, |mask| {
            let s = g.induced(mask);
            if s.is_tree() && s.max_degree() <= 2 {
                c += 1;
            }
        });
        c
    }

    fn spider(legs: &[usize]) -> Graph {
        build_spider(&SpiderSpec::new(legs.to_vec())).unwrap()
    }

    #[test]
    fn spider_shapes() {
        assert_eq!(spider(&[1, 1, 1]), Graph::star(3));
        assert!(crate::canon::is_isomorphic(
            &spider(&[2, 2]),
            &Graph::path(5)
        ));
        let s = spider(&[1, 1, 3, 3]);
        assert_eq!(s.n(), 9);
        assert_eq!(s.max_degree(), 4);
        assert!(s.is_tree());
        assert_eq!(s.diameter(), Length::Finite(6));
        assert_eq!(SpiderSpec::new(vec![1, 3, 2]).legs(), &[3, 2, 1]);
        assert!(build_spider(&SpiderSpec::new(vec![2, 0])).is_err());
        assert!(build_spider(&SpiderSpec::new(vec![16, 16])).is_err());
        assert_eq!(spider(&[]), Graph::empty(1));
    }

    #[test]
    fn long_path_examples() {
        assert_eq!(count_long_paths(&spider(&[2, 2, 2]), 4), 6);
        assert_eq!(count_long_paths(&Graph::path(7), 7), 1);
        assert_eq!(count_long_paths(&Graph::cycle(7), 5), 7);
        assert_eq!(count_long_paths(&Graph::cycle(5), 5), 0);
        assert_eq!(count_long_paths(&Graph::complete(4), 2), 6);
        assert_eq!(count_long_paths(&Graph::complete(4), 3), 0);
        assert_eq!(count_long_paths(&Graph::path(3), 0), 0);
    }

    #[test]
    fn matches_subset_oracle() {
        let petersen = crate::graph6::parse_graph6("IheA@GUAo").unwrap();
        for g in [
            spider(&[3, 2, 2, 1]),
            Graph::cycle(8),
            petersen,
            Graph::complete(5),
        ] {
            for m in 1..=g.n() {
                assert_eq!(count_long_paths(&g, m), brute(&g, m), "{g:?} m={m}");
            }
        }
    }
}
