//! Exceptional divisors and the Lipman cone.
//!
//! The closed cone `{D : D·E_i ≤ 0 ∀i}` is spanned by the columns of
//! `C = −M⁻¹`; column `k` is the rational divisor dual to `−E_k`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{require_analyzable, IntersectionMatrix, ResolutionGraph};
use crate::linalg::{self, RationalMatrix};

/// An integral cycle `Σ a_i E_i` supported on the exceptional set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Divisor(Vec<BigInt>);

impl Divisor {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        Divisor(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Divisor(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(n: usize) -> Self {
        Divisor(vec![BigInt::zero(); n])
    }

    /// The reduced cycle `E = Σ E_i`.
    pub fn reduced(n: usize) -> Self {
        Divisor(vec![BigInt::one(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn scaled(&self, m: &BigInt) -> Divisor {
        Divisor(self.0.iter().map(|c| c * m).collect())
    }

    /// Coefficients as `i64` when they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl std::ops::Index<usize> for Divisor {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Parses `a1,a2,...` (whitespace tolerated).
impl FromStr for Divisor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| {
                BigInt::from_str(t.trim())
                    .map_err(|_| Error::syntax(1, format!("divisor coefficient {:?} is not an integer", t.trim())))
            })
            .collect::<Result<Vec<_>>>()
            .map(Divisor)
    }
}

impl Serialize for Divisor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(JsonInt))
    }
}

/// Serializes a `BigInt` as a plain JSON number of any size.
pub(crate) struct JsonInt<'a>(pub &'a BigInt);

impl Serialize for JsonInt<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => serde_json::Number::from_str(&self.0.to_string())
                .map_err(serde::ser::Error::custom)?
                .serialize(s),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ConeStatus {
    NotInCone,
    /// `D·E_i ≤ 0` everywhere with equality somewhere.
    LipmanBoundary,
    /// `D·E_i < 0` everywhere.
    StrictLipman,
}

/// `D1ᵀ·M·D2`.
pub fn pair(d1: &Divisor, d2: &Divisor, m: &IntersectionMatrix) -> Result<BigInt> {
    for d in [d1, d2] {
        if d.len() != m.n() {
            return Err(Error::DimensionMismatch {
                what: "divisor",
                expected: m.n(),
                found: d.len(),
            });
        }
    }
    Ok(m.apply(d2).iter().zip(d1.coeffs()).map(|(x, a)| x * a).sum())
}

/// `C = −M⁻¹`, exactly.
pub fn neg_inverse(m: &IntersectionMatrix) -> Result<RationalMatrix> {
    let neg: Vec<Vec<BigInt>> = m
        .rows()
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(-x)).collect())
        .collect();
    linalg::invert(&neg)
}

pub fn lipman_status(d: &Divisor, m: &IntersectionMatrix) -> ConeStatus {
    if d.is_zero() {
        return ConeStatus::NotInCone;
    }
    let md = m.apply(d);
    if md.iter().any(Signed::is_positive) {
        ConeStatus::NotInCone
    } else if md.iter().any(Zero::is_zero) {
        ConeStatus::LipmanBoundary
    } else {
        ConeStatus::StrictLipman
    }
}

/// Artin's fundamental cycle via Laufer's computation sequence, raising the
/// lowest-indexed vertex with positive intersection first.
pub fn fundamental_cycle(g: &ResolutionGraph) -> Result<Divisor> {
    let order: Vec<usize> = (0..g.n()).collect();
    fundamental_cycle_with_priority(g, &order)
}

/// Laufer's sequence where, among vertices with `Z·E_i > 0`, the one
/// appearing first in `priority` is raised.
pub fn fundamental_cycle_with_priority(g: &ResolutionGraph, priority: &[usize]) -> Result<Divisor> {
    require_analyzable(g)?;
    let n = g.n();
    if priority.len() != n {
        return Err(Error::DimensionMismatch {
            what: "priority order",
            expected: n,
            found: priority.len(),
        });
    }
    let m = g.intersection_matrix();
    let mut z: Vec<i64> = vec![1; n];
    // Z·E_i, updated incrementally.
    let mut zm: Vec<i64> = m.row_sums();
    while let Some(&i) = priority.iter().find(|&&i| zm[i] > 0) {
        let overflow = || Error::Internal("fundamental cycle coefficient overflow".into());
        z[i] = z[i].checked_add(1).ok_or_else(overflow)?;
        for (j, v) in zm.iter_mut().enumerate() {
            *v = v.checked_add(m.get(i, j)).ok_or_else(overflow)?;
        }
    }
    Ok(Divisor::from_ints(&z))
}

/// An integral point of the strict Lipman cone: `C·(1,…,1)ᵀ` with
/// denominators cleared, so that `M·D = −s·(1,…,1)ᵀ` for some `s > 0`.
pub fn strict_interior_divisor(g: &ResolutionGraph) -> Result<Divisor> {
    require_analyzable(g)?;
    let c = neg_inverse(&g.intersection_matrix())?;
    Ok(Divisor(linalg::primitive_integer_vector(&c.row_sums())))
}

/// Primitive integral generator of the ray through column `k` of `C`.
pub(crate) fn column_generator(c: &RationalMatrix, k: usize) -> Vec<BigInt> {
    linalg::primitive_integer_vector(&c.column(k))
}
