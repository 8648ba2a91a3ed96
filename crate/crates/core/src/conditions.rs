//! Conditions (*) and (**) with explicit integral witnesses.
//!
//! A fundamental half-space is the open set `{a_i < a_j}` for an ordered
//! pair `(i, j)`. Since the closed Lipman cone is the non-negative span of
//! the columns of `C = −M⁻¹`, the strict cone meets `{a_i < a_j}` exactly
//! when some column has `C[i][k] < C[j][k]`; otherwise every point of the
//! closed cone has `a_i ≥ a_j`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::cone::{column_generator, lipman_status, neg_inverse, ConeStatus, Divisor};
use crate::error::{Error, Result};
use crate::graph::{require_analyzable, IntersectionMatrix, ResolutionGraph};
use crate::linalg::{self, RationalMatrix};
use crate::vanishing::min_adjoint_multiplier;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarStarReport {
    pub holds: bool,
    /// Vertices with `E·E_i ≥ 0`.
    pub violations: Vec<usize>,
}

/// Condition (**): the reduced cycle `E` is strictly anti-nef.
pub fn check_star_star(g: &ResolutionGraph) -> StarStarReport {
    let violations: Vec<usize> = g
        .intersection_matrix()
        .row_sums()
        .into_iter()
        .enumerate()
        .filter(|&(_, v)| v >= 0)
        .map(|(i, _)| i)
        .collect();
    StarStarReport {
        holds: violations.is_empty(),
        violations,
    }
}

/// A strictly anti-nef divisor `W` with `W[i] < W[j]`, together with the
/// least `n` for which `n·W` passes the adjoint vanishing criterion and the
/// valuation vector `n·W` realized by the resulting function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairWitness {
    pub divisor: Divisor,
    pub multiplier: BigInt,
    pub valuations: Divisor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarCertificate {
    pub holds: bool,
    pub witnesses: BTreeMap<(usize, usize), PairWitness>,
    /// Pairs whose half-space misses the closed Lipman cone entirely.
    pub failing_pairs: Vec<(usize, usize)>,
}

/// Whether `w` is a valid witness for the half-space `{a_i < a_j}`.
pub fn verify_witness(m: &IntersectionMatrix, w: &Divisor, i: usize, j: usize) -> bool {
    w.len() == m.n() && w[i] < w[j] && lipman_status(w, m) == ConeStatus::StrictLipman
}

struct Generators {
    m: IntersectionMatrix,
    c: RationalMatrix,
    /// Primitive integral point on the ray of `C·(1,…,1)ᵀ`.
    center: Vec<BigInt>,
}

impl Generators {
    fn new(g: &ResolutionGraph) -> Result<Self> {
        require_analyzable(g)?;
        let m = g.intersection_matrix();
        let c = neg_inverse(&m)?;
        let center = linalg::primitive_integer_vector(&c.row_sums());
        Ok(Generators { m, c, center })
    }

    /// Columns `k` with `C[i][k] < C[j][k]`.
    fn separating_columns(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.c.n())
            .filter(|&k| self.c.get(i, k) < self.c.get(j, k))
            .collect()
    }

    /// Pushes a separating column into the open cone by adding the central
    /// ray with weight 1, 1/2, 1/4, … relative to the column until the
    /// ordering survives. Each candidate is re-verified.
    fn synthesize(&self, i: usize, j: usize, columns: &[usize]) -> Result<Divisor> {
        let gens: Vec<Vec<BigInt>> = columns.iter().map(|&k| column_generator(&self.c, k)).collect();
        let max_steps = self.center.iter().map(|x| x.bits()).max().unwrap_or(0) + 2;
        let mut scale = BigInt::from(1);
        for _ in 0..=max_steps {
            for p in &gens {
                let raw: Vec<BigInt> = p.iter().zip(&self.center).map(|(a, s)| a * &scale + s).collect();
                let w = Divisor::new(linalg::primitive(raw));
                if verify_witness(&self.m, &w, i, j) {
                    return Ok(w);
                }
            }
            scale <<= 1;
        }
        Err(Error::Internal(format!(
            "no verified witness synthesized for pair ({}, {})",
            i + 1,
            j + 1
        )))
    }

    fn witness(&self, i: usize, j: usize) -> Result<Option<Divisor>> {
        let columns = self.separating_columns(i, j);
        if columns.is_empty() {
            return Ok(None);
        }
        self.synthesize(i, j, &columns).map(Some)
    }
}

/// Condition (*), decided pair by pair with a verified witness for every
/// half-space that meets the strict cone.
pub fn check_star(g: &ResolutionGraph) -> Result<StarCertificate> {
    let gens = Generators::new(g)?;
    let n = g.n();
    let mut witnesses = BTreeMap::new();
    let mut failing_pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            match gens.witness(i, j)? {
                Some(divisor) => {
                    let multiplier = min_adjoint_multiplier(g, &divisor)?;
                    let valuations = divisor.scaled(&multiplier);
                    witnesses.insert(
                        (i, j),
                        PairWitness {
                            divisor,
                            multiplier,
                            valuations,
                        },
                    );
                }
                None => failing_pairs.push((i, j)),
            }
        }
    }
    Ok(StarCertificate {
        holds: failing_pairs.is_empty(),
        witnesses,
        failing_pairs,
    })
}

/// Witness for the single half-space `{a_i < a_j}`, or `None` when it
/// misses the Lipman cone.
pub fn star_witness(g: &ResolutionGraph, i: usize, j: usize) -> Result<Option<Divisor>> {
    let n = g.n();
    for v in [i, j] {
        if v >= n {
            return Err(Error::VertexOutOfRange { index: v + 1, n });
        }
    }
    if i == j {
        return Err(Error::SameVertex(i + 1));
    }
    Generators::new(g)?.witness(i, j)
}

/// Ordered pairs `(i, j)` such that some listed divisor has `D[i] < D[j]`.
pub fn halfspace_coverage(divisors: &[Divisor]) -> Result<BTreeSet<(usize, usize)>> {
    let mut out = BTreeSet::new();
    let Some(first) = divisors.first() else {
        return Ok(out);
    };
    let n = first.len();
    for d in divisors {
        if d.len() != n {
            return Err(Error::DimensionMismatch {
                what: "divisor",
                expected: n,
                found: d.len(),
            });
        }
        for i in 0..n {
            for j in 0..n {
                if d[i] < d[j] {
                    out.insert((i, j));
                }
            }
        }
    }
    Ok(out)
}

/// Ordered pairs of distinct vertices, i.e. all fundamental half-spaces.
pub fn all_pairs(n: usize) -> BTreeSet<(usize, usize)> {
    (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect()
}
