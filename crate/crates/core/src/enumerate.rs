//! Exhaustive enumeration of small dual graphs up to isomorphism.
//!
//! Vertices are colored by `(weight, genus)`. Isomorphic graphs share the
//! multiset of colors, so candidates are generated one color multiset at a
//! time and deduplicated by a canonical form that permutes vertices only
//! within color classes.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{is_negative_definite, ResolutionGraph};

/// Isomorphism invariant of a vertex- and edge-labelled graph: equal keys
/// iff the graphs are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    colors: Vec<(i64, u32)>,
    adjacency: Vec<u32>,
}

/// Canonical key and the vertex order realizing it (`order[p]` is the
/// original vertex placed at position `p`).
pub fn canonical_form(g: &ResolutionGraph) -> (CanonicalKey, Vec<usize>) {
    let n = g.n();
    let color = |i: usize| (g.weights()[i], g.genera()[i]);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (color(i), i));
    let colors: Vec<(i64, u32)> = order.iter().map(|&i| color(i)).collect();

    let mut blocks = Vec::new();
    let mut start = 0;
    for p in 1..=n {
        if p == n || colors[p] != colors[start] {
            if p - start > 1 {
                blocks.push(start..p);
            }
            start = p;
        }
    }

    let adjacency_of = |order: &[usize]| -> Vec<u32> {
        let mut out = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
        for p in 0..n {
            for q in p + 1..n {
                out.push(g.mult(order[p], order[q]));
            }
        }
        out
    };

    let mut best = adjacency_of(&order);
    let mut best_order = order.clone();
    'outer: loop {
        let mut advanced = false;
        for b in blocks.iter().rev() {
            if next_permutation(&mut order[b.clone()]) {
                advanced = true;
                break;
            }
        }
        if !advanced {
            break 'outer;
        }
        let adj = adjacency_of(&order);
        if adj < best {
            best = adj;
            best_order.clone_from(&order);
        }
    }
    (
        CanonicalKey {
            colors,
            adjacency: best,
        },
        best_order,
    )
}

pub fn canonical_key(g: &ResolutionGraph) -> CanonicalKey {
    canonical_form(g).0
}

pub fn are_isomorphic(a: &ResolutionGraph, b: &ResolutionGraph) -> bool {
    a.n() == b.n() && canonical_key(a) == canonical_key(b)
}

/// Rearranges to the next lexicographic permutation; on the last one,
/// resets to ascending order and returns false.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        v.reverse();
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBounds {
    pub max_vertices: usize,
    /// Most negative self-intersection allowed; weights range over
    /// `min_weight..=-1`.
    pub min_weight: i64,
    pub max_genus: u32,
    pub max_mult: u32,
}

/// Every connected negative-definite graph within `bounds`, one per
/// isomorphism class, in a deterministic order.
pub fn enumerate_graphs(bounds: EnumerationBounds) -> Result<GraphStream> {
    if bounds.max_vertices == 0 {
        return Err(Error::InvalidGraph("max_vertices must be at least 1".into()));
    }
    if bounds.min_weight > -1 {
        return Err(Error::InvalidGraph("min_weight must be at most -1".into()));
    }
    let colors = (bounds.min_weight..=-1)
        .rev()
        .flat_map(|w| (0..=bounds.max_genus).map(move |p| (w, p)))
        .collect();
    Ok(GraphStream {
        bounds,
        colors,
        size: 1,
        multiset: Some(vec![0]),
        buffer: VecDeque::new(),
    })
}

pub struct GraphStream {
    bounds: EnumerationBounds,
    colors: Vec<(i64, u32)>,
    size: usize,
    /// Next color multiset to expand, as non-decreasing color indices.
    multiset: Option<Vec<usize>>,
    buffer: VecDeque<ResolutionGraph>,
}

impl GraphStream {
    fn advance_multiset(&mut self) {
        let Some(current) = self.multiset.as_mut() else {
            return;
        };
        let top = self.colors.len() - 1;
        if let Some(p) = (0..current.len()).rev().find(|&p| current[p] < top) {
            let v = current[p] + 1;
            for c in &mut current[p..] {
                *c = v;
            }
        } else if self.size < self.bounds.max_vertices {
            self.size += 1;
            self.multiset = Some(vec![0; self.size]);
        } else {
            self.multiset = None;
        }
    }

    fn expand(&mut self, multiset: &[usize]) {
        let k = multiset.len();
        let weights: Vec<i64> = multiset.iter().map(|&c| self.colors[c].0).collect();
        let genera: Vec<u32> = multiset.iter().map(|&c| self.colors[c].1).collect();
        let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
        let mut mults = vec![0u32; pairs.len()];
        let mut seen = HashSet::new();
        loop {
            let edges: Vec<(usize, usize, u32)> = pairs
                .iter()
                .zip(&mults)
                .filter(|(_, &m)| m > 0)
                .map(|(&(i, j), &m)| (i, j, m))
                .collect();
            let g = ResolutionGraph::new(weights.clone(), genera.clone(), &edges)
                .expect("enumerated graphs are well formed");
            if g.is_connected() && is_negative_definite(&g.intersection_matrix()) && seen.insert(canonical_key(&g)) {
                self.buffer.push_back(g);
            }
            // Odometer over edge multiplicities.
            let Some(p) = (0..mults.len()).rev().find(|&p| mults[p] < self.bounds.max_mult) else {
                break;
            };
            mults[p] += 1;
            for m in &mut mults[p + 1..] {
                *m = 0;
            }
        }
    }
}

impl Iterator for GraphStream {
    type Item = ResolutionGraph;

    fn next(&mut self) -> Option<ResolutionGraph> {
        loop {
            if let Some(g) = self.buffer.pop_front() {
                return Some(g);
            }
            let current = self.multiset.clone()?;
            self.expand(&current);
            self.advance_multiset();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate;

    fn bounds(max_vertices: usize, min_weight: i64, max_genus: u32, max_mult: u32) -> EnumerationBounds {
        EnumerationBounds {
            max_vertices,
            min_weight,
            max_genus,
            max_mult,
        }
    }

    #[test]
    fn single_vertices() {
        let graphs: Vec<_> = enumerate_graphs(bounds(1, -2, 1, 1)).unwrap().collect();
        assert_eq!(graphs.len(), 4);
    }

    #[test]
    fn two_vertices_respect_definiteness() {
        let graphs: Vec<_> = enumerate_graphs(bounds(2, -2, 0, 2)).unwrap().filter(|g| g.n() == 2).collect();
        let mats: Vec<_> = graphs.iter().map(|g| g.intersection_matrix().rows().to_vec()).collect();
        assert!(!mats.contains(&vec![vec![-1, 1], vec![1, -1]]));
        assert!(!mats.contains(&vec![vec![-2, 2], vec![2, -2]]));
        assert!(mats.contains(&vec![vec![-2, 1], vec![1, -1]]) || mats.contains(&vec![vec![-1, 1], vec![1, -2]]));
        // [[-2,1],[1,-1]] and [[-2,1],[1,-2]] are the only survivors.
        assert_eq!(graphs.len(), 2);
    }

    #[test]
    fn every_graph_is_valid_and_distinct() {
        let graphs: Vec<_> = enumerate_graphs(bounds(3, -3, 1, 2)).unwrap().collect();
        let keys: HashSet<_> = graphs.iter().map(canonical_key).collect();
        assert_eq!(keys.len(), graphs.len());
        for g in &graphs {
            assert!(validate(g).is_analyzable());
        }
    }

    #[test]
    fn deterministic_order() {
        let a: Vec<_> = enumerate_graphs(bounds(3, -3, 0, 1)).unwrap().collect();
        let b: Vec<_> = enumerate_graphs(bounds(3, -3, 0, 1)).unwrap().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn canonical_key_is_relabeling_invariant() {
        let g = ResolutionGraph::new(vec![-2, -3, -2, -2], vec![0, 1, 0, 0], &[(0, 1, 1), (1, 2, 2), (2, 3, 1)]).unwrap();
        let mut perm = vec![0, 1, 2, 3];
        let key = canonical_key(&g);
        while next_permutation(&mut perm) {
            assert_eq!(canonical_key(&g.permuted(&perm)), key);
        }
        let other = ResolutionGraph::new(vec![-2, -3, -2, -2], vec![0, 1, 0, 0], &[(0, 1, 2), (1, 2, 1), (2, 3, 1)]).unwrap();
        assert!(!are_isomorphic(&g, &other));
    }

    #[test]
    fn canonical_order_reproduces_key() {
        let g = ResolutionGraph::new(vec![-2, -2, -2], vec![0, 0, 0], &[(0, 2, 1), (1, 2, 1)]).unwrap();
        let (key, order) = canonical_form(&g);
        let mut inverse = vec![0; order.len()];
        for (p, &v) in order.iter().enumerate() {
            inverse[v] = p;
        }
        let relabeled = g.permuted(&inverse);
        assert_eq!(canonical_form(&relabeled).0, key);
        assert_eq!(canonical_form(&relabeled).1, vec![0, 1, 2]);
    }

    #[test]
    fn rejects_bad_bounds() {
        assert!(enumerate_graphs(bounds(0, -2, 0, 1)).is_err());
        assert!(enumerate_graphs(bounds(2, 0, 0, 1)).is_err());
    }
}
