//! Exact integer and rational linear algebra on small dense matrices.
//!
//! Determinants use fraction-free (Bareiss) elimination so every
//! intermediate value stays an integer minor; inverses use Gauss-Jordan
//! over `BigRational`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense square matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    entries: Vec<Vec<BigRational>>,
}

impl RationalMatrix {
    pub fn from_rows(entries: Vec<Vec<BigRational>>) -> Self {
        let n = entries.len();
        assert!(entries.iter().all(|r| r.len() == n), "matrix must be square");
        RationalMatrix { entries }
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                    .collect()
            })
            .collect();
        RationalMatrix { entries }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.entries
    }

    pub fn column(&self, k: usize) -> Vec<BigRational> {
        self.entries.iter().map(|row| row[k].clone()).collect()
    }

    /// `self · v`.
    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.n());
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Sum of each row, i.e. `self · (1,…,1)ᵀ`.
    pub fn row_sums(&self) -> Vec<BigRational> {
        self.entries.iter().map(|row| row.iter().sum()).collect()
    }

    /// `lhs · self` where `lhs` is an integer matrix.
    pub fn left_mul_int(&self, lhs: &[Vec<i64>]) -> RationalMatrix {
        let n = self.n();
        assert_eq!(lhs.len(), n);
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| BigRational::from_integer(lhs[i][k].into()) * &self.entries[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        RationalMatrix { entries }
    }

    pub fn neg(&self) -> RationalMatrix {
        RationalMatrix {
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|x| -x).collect())
                .collect(),
        }
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Determinant by Bareiss elimination with row pivoting.
pub fn determinant(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let mut prev = BigInt::one();
    let mut negate = false;
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Leading principal minors `d_1, …, d_n`, each computed exactly.
pub fn leading_principal_minors(rows: &[Vec<BigInt>]) -> Vec<BigInt> {
    (1..=rows.len())
        .map(|k| {
            let sub: Vec<Vec<BigInt>> = rows[..k].iter().map(|r| r[..k].to_vec()).collect();
            determinant(&sub)
        })
        .collect()
}

/// Sylvester test: true iff every leading principal minor is positive.
///
/// Without pivoting the k-th Bareiss pivot equals the k-th leading
/// principal minor, so one elimination pass suffices and a non-positive
/// pivot ends it.
pub fn is_positive_definite(rows: &[Vec<BigInt>]) -> bool {
    let n = rows.len();
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let mut prev = BigInt::one();
    for k in 0..n {
        if !a[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    true
}

/// Exact inverse by Gauss-Jordan elimination over the rationals.
pub fn invert(rows: &[Vec<BigInt>]) -> Result<RationalMatrix> {
    let n = rows.len();
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().cloned().map(BigRational::from_integer).collect())
        .collect();
    let mut inv = RationalMatrix::identity(n).entries;
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let p = a[col][col].recip();
        for j in 0..n {
            a[col][j] *= &p;
            inv[col][j] *= &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..n {
                let t = &factor * &a[col][j];
                a[r][j] -= t;
                let t = &factor * &inv[col][j];
                inv[r][j] -= t;
            }
        }
    }
    Ok(RationalMatrix { entries: inv })
}

/// The primitive integer vector on the ray through `v`: multiply by the
/// lcm of denominators, then divide by the gcd of the numerators. The
/// scaling factor is positive, so signs are preserved. The zero vector maps
/// to the zero vector.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = v
        .iter()
        .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    primitive(scaled)
}

/// Divides an integer vector by the gcd of its entries.
pub fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}
