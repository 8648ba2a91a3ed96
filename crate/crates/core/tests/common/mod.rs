//! Brute-force oracles shared by the integration and acceptance suites.
//!
//! Everything here works directly from the integer intersection matrix and
//! never touches `−M⁻¹`, so it stays independent of the code it checks.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use lipman::ResolutionGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn matrix(g: &ResolutionGraph) -> Vec<Vec<i64>> {
    g.intersection_matrix().rows().to_vec()
}

pub fn mat_vec(m: &[Vec<i64>], d: &[i64]) -> Vec<i64> {
    m.iter().map(|r| r.iter().zip(d).map(|(a, b)| a * b).sum()).collect()
}

/// `xᵀMx < 0` for every nonzero `x ∈ [−bound, bound]^n`.
pub fn brute_force_negative_definite(m: &[Vec<i64>], bound: i64) -> bool {
    let n = m.len();
    let mut x = vec![-bound; n];
    loop {
        if x.iter().any(|&v| v != 0) {
            let mx = mat_vec(m, &x);
            let q: i64 = mx.iter().zip(&x).map(|(a, b)| a * b).sum();
            if q >= 0 {
                return false;
            }
        }
        let Some(p) = (0..n).rev().find(|&p| x[p] < bound) else {
            return true;
        };
        x[p] += 1;
        for v in &mut x[p + 1..] {
            *v = -bound;
        }
    }
}

/// Breadth-first vertex order, so that each vertex's neighbours are assigned
/// soon after it and the search below can prune early.
fn bfs_order(m: &[Vec<i64>]) -> Vec<usize> {
    let n = m.len();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut q = VecDeque::from([start]);
        while let Some(v) = q.pop_front() {
            order.push(v);
            for w in 0..n {
                if w != v && m[v][w] > 0 && !seen[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
            }
        }
    }
    order
}

/// Visits every `D ∈ [1, bound]^n` with `M·D < 0` componentwise. The visitor
/// returns `false` to stop early.
///
/// Off-diagonal entries are non-negative and unassigned coefficients are at
/// least 1, so `Σ_assigned M[l][j]·D_j + Σ_unassigned M[l][j]` bounds
/// `(M·D)_l` from below for every assigned `l`; a non-negative bound prunes.
pub fn for_each_strict_point(m: &[Vec<i64>], bound: i64, mut visit: impl FnMut(&[i64]) -> bool) {
    let n = m.len();
    let order = bfs_order(m);
    let mut d = vec![0i64; n];
    let mut assigned = vec![false; n];
    fn rec(
        depth: usize,
        m: &[Vec<i64>],
        bound: i64,
        order: &[usize],
        d: &mut Vec<i64>,
        assigned: &mut Vec<bool>,
        visit: &mut dyn FnMut(&[i64]) -> bool,
    ) -> bool {
        let n = m.len();
        if depth == n {
            return visit(d);
        }
        let v = order[depth];
        assigned[v] = true;
        for value in 1..=bound {
            d[v] = value;
            let feasible = (0..n).filter(|&l| assigned[l]).all(|l| {
                let lower: i64 = (0..n)
                    .map(|j| if assigned[j] { m[l][j] * d[j] } else { m[l][j] })
                    .sum();
                lower < 0
            });
            if feasible && !rec(depth + 1, m, bound, order, d, assigned, visit) {
                assigned[v] = false;
                d[v] = 0;
                return false;
            }
        }
        assigned[v] = false;
        d[v] = 0;
        true
    }
    rec(0, m, bound, &order, &mut d, &mut assigned, &mut visit);
}

/// Ordered pairs `(i, j)` with a strictly anti-nef `D ∈ [1, bound]^n` having
/// `D[i] < D[j]`.
pub fn brute_force_coverage(m: &[Vec<i64>], bound: i64) -> BTreeSet<(usize, usize)> {
    let n = m.len();
    let total = n * (n - 1);
    let mut covered = BTreeSet::new();
    for_each_strict_point(m, bound, |d| {
        for i in 0..n {
            for j in 0..n {
                if d[i] < d[j] {
                    covered.insert((i, j));
                }
            }
        }
        covered.len() < total
    });
    covered
}

pub fn brute_force_witness(m: &[Vec<i64>], i: usize, j: usize, bound: i64) -> Option<Vec<i64>> {
    let mut found = None;
    for_each_strict_point(m, bound, |d| {
        if d[i] < d[j] {
            found = Some(d.to_vec());
            false
        } else {
            true
        }
    });
    found
}

/// Laufer's sequence, recomputed from scratch.
fn anti_nef(m: &[Vec<i64>], z: &[i64]) -> bool {
    mat_vec(m, z).iter().all(|&v| v <= 0)
}

/// No anti-nef cycle `Z'` with `E ≤ Z' ≤ Z`, `Z' ≠ Z` exists.
pub fn is_minimal_anti_nef(m: &[Vec<i64>], z: &[i64]) -> bool {
    let n = z.len();
    let mut cur = vec![1i64; n];
    loop {
        if cur != z && anti_nef(m, &cur) {
            return false;
        }
        let Some(p) = (0..n).rev().find(|&p| cur[p] < z[p]) else {
            return true;
        };
        cur[p] += 1;
        for v in &mut cur[p + 1..] {
            *v = 1;
        }
    }
}

/// `(D + E_i + K)·E_l + 2δ_il ≤ 0` for all `i, l`, evaluated directly.
pub fn adjoint_holds(g: &ResolutionGraph, d: &[i64]) -> bool {
    let m = matrix(g);
    let md = mat_vec(&m, d);
    let n = g.n();
    (0..n).all(|i| {
        (0..n).all(|l| {
            let k = 2 * i64::from(g.genera()[l]) - 2 - g.weights()[l];
            md[l] + m[i][l] + k + if i == l { 2 } else { 0 } <= 0
        })
    })
}

/// Smallest `t ≥ 1` with `t·D` passing the adjoint criterion, by iteration.
pub fn naive_multiplier(g: &ResolutionGraph, d: &[i64], limit: i64) -> Option<i64> {
    (1..=limit).find(|&t| adjoint_holds(g, &d.iter().map(|a| a * t).collect::<Vec<_>>()))
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
}

/// Pseudo-random connected negative-definite graphs with at most
/// `max_vertices` vertices, weights in `[−5, −1]`, genera in `{0, 1}` and
/// edge multiplicities in `{0, 1, 2}`.
pub fn random_graphs(seed: u64, count: usize, max_vertices: usize) -> Vec<ResolutionGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(1..=max_vertices);
        let weights: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=-1)).collect();
        let genera: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=1)).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let m = match rng.gen_range(0..10) {
                    0..=4 => 0,
                    5..=8 => 1,
                    _ => 2,
                };
                if m > 0 {
                    edges.push((i, j, m));
                }
            }
        }
        let g = ResolutionGraph::new(weights, genera, &edges).unwrap();
        if lipman::validate(&g).is_analyzable() {
            out.push(g);
        }
    }
    out
}
