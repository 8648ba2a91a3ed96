//! Numerical criteria guaranteeing that a cycle is the exceptional part of
//! `div(f ∘ π)` for some function `f` vanishing at the singular point.
//!
//! Only the inequalities are evaluated here. Two criteria are available:
//!
//! * the adjoint criterion `(D + E_i + K)·E_j + 2δ_ij ≤ 0` for all `i, j`;
//! * Laufer's base-point-freeness bound `(D + 2K)·E_i ≤ 0` for all `i`.
//!
//! Neither implies the other.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::cone::Divisor;
use crate::error::{Error, Result};
use crate::graph::{canonical_intersections, ResolutionGraph};

/// Outcome of evaluating one criterion; `values` holds every left-hand side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionResult<K: Ord> {
    pub satisfied: bool,
    pub violating: Vec<K>,
    pub values: BTreeMap<K, BigInt>,
}

impl<K: Ord + Copy> CriterionResult<K> {
    fn from_values(values: BTreeMap<K, BigInt>) -> Self {
        let violating: Vec<K> = values.iter().filter(|(_, v)| v.is_positive()).map(|(k, _)| *k).collect();
        CriterionResult {
            satisfied: violating.is_empty(),
            violating,
            values,
        }
    }
}

fn check_divisor(g: &ResolutionGraph, d: &Divisor) -> Result<()> {
    if d.len() != g.n() {
        return Err(Error::DimensionMismatch {
            what: "divisor",
            expected: g.n(),
            found: d.len(),
        });
    }
    if !d.is_effective() {
        return Err(Error::NotEffective);
    }
    if d.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    Ok(())
}

/// Evaluates `(D + E_i + K)·E_l + 2δ_il` for every ordered `(i, l)`.
pub fn adjoint_criterion_satisfied(g: &ResolutionGraph, d: &Divisor) -> Result<CriterionResult<(usize, usize)>> {
    check_divisor(g, d)?;
    let m = g.intersection_matrix();
    let md = m.apply(d);
    let k = canonical_intersections(g);
    let n = g.n();
    let mut values = BTreeMap::new();
    for i in 0..n {
        for l in 0..n {
            let delta = if i == l { 2 } else { 0 };
            values.insert((i, l), &md[l] + m.get(i, l) + k[l] + delta);
        }
    }
    Ok(CriterionResult::from_values(values))
}

/// Evaluates `D·E_i + 2 K·E_i` for every `i`.
pub fn laufer_criterion_satisfied(g: &ResolutionGraph, d: &Divisor) -> Result<CriterionResult<usize>> {
    check_divisor(g, d)?;
    let md = g.intersection_matrix().apply(d);
    let k = canonical_intersections(g);
    let values = md
        .into_iter()
        .zip(k)
        .enumerate()
        .map(|(i, (x, ki))| (i, x + 2 * ki))
        .collect();
    Ok(CriterionResult::from_values(values))
}

/// Least `n ≥ 1` such that `n·D` satisfies the adjoint criterion.
///
/// With `g_l = −D·E_l > 0` the value at `(k, l)` for `n·D` is
/// `−n·g_l + E_k·E_l + K·E_l + 2δ_kl`, so
/// `n = max(1, max_{k,l} ⌈(E_k·E_l + K·E_l + 2δ_kl) / g_l⌉)`.
pub fn min_adjoint_multiplier(g: &ResolutionGraph, d: &Divisor) -> Result<BigInt> {
    check_divisor(g, d)?;
    let m = g.intersection_matrix();
    let md = m.apply(d);
    if let Some((l, v)) = md.iter().enumerate().find(|(_, v)| !v.is_negative()) {
        return Err(Error::NoMultiplierGuarantee {
            vertex: l + 1,
            value: v.to_string(),
        });
    }
    let k = canonical_intersections(g);
    let n = g.n();
    let mut best = BigInt::one();
    for (l, dl) in md.iter().enumerate() {
        let gap = -dl;
        for row in 0..n {
            let delta = if row == l { 2 } else { 0 };
            let num = BigInt::from(m.get(row, l) + k[l] + delta);
            let need = num.div_ceil(&gap);
            if need > best {
                best = need;
            }
        }
    }
    Ok(best)
}
