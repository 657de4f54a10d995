//! Exact matrix kernels: echelon forms, Hermite and Smith normal forms,
//! lattice/row-space membership, determinants and characteristic
//! polynomials.

mod echelon;
mod sparse;

pub use echelon::{Echelon, FieldEchelon, LatticeEchelon};
pub use sparse::{SparseMatrix, SparseVec};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Base, Scalar};

/// Reduced row echelon form together with its pivot data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: SparseMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Reduced row echelon form over ℚ or 𝔽_p. Zero rows are kept at the bottom
/// so the shape is unchanged.
pub fn rref(m: &SparseMatrix) -> Result<Rref> {
    let mut e = FieldEchelon::new(m.base(), m.cols())?;
    for row in m.row_vectors() {
        e.insert(&row);
    }
    let rows = e.rows_by_pivot();
    let mut out = SparseMatrix::from_rows(&rows, m.cols(), m.base())?;
    out = pad_rows(out, m.rows());
    Ok(Rref {
        matrix: out,
        pivots: e.pivot_columns(),
        rank: e.rank(),
    })
}

fn pad_rows(m: SparseMatrix, rows: usize) -> SparseMatrix {
    let mut out = SparseMatrix::zeros(rows.max(m.rows()), m.cols(), m.base());
    for (i, row) in m.row_vectors().into_iter().enumerate() {
        for (j, c) in row.iter() {
            out.set(i, j, c.clone());
        }
    }
    out
}

fn require_integers(m: &SparseMatrix) -> Result<()> {
    if m.base() != Base::Integers {
        return Err(Error::WrongBase {
            expected: Base::Integers,
            found: m.base(),
        });
    }
    Ok(())
}

fn lattice_of(m: &SparseMatrix) -> LatticeEchelon {
    let mut l = LatticeEchelon::new(m.cols());
    for row in m.row_vectors() {
        l.insert(&row);
    }
    l
}

/// Row-style Hermite normal form over ℤ, padded with zero rows.
pub fn hnf(m: &SparseMatrix) -> Result<SparseMatrix> {
    require_integers(m)?;
    let l = lattice_of(m);
    let out = SparseMatrix::from_rows(&l.rows_by_pivot(), m.cols(), m.base())?;
    Ok(pad_rows(out, m.rows()))
}

fn is_diagonal(m: &SparseMatrix) -> bool {
    m.row_vectors()
        .iter()
        .enumerate()
        .all(|(i, r)| r.is_zero() || (r.nnz() == 1 && r.leading().unwrap().0 == i))
}

/// Invariant factors `d_1 | d_2 | ... | d_r` (all positive, `r` = rank) of an
/// integer matrix, by alternating row and column Hermite passes followed by
/// a gcd/lcm fix-up of the diagonal.
pub fn snf(m: &SparseMatrix) -> Result<Vec<BigInt>> {
    require_integers(m)?;
    let mut cur = hnf(m)?;
    while !is_diagonal(&cur) {
        cur = hnf(&cur.transpose())?;
    }
    let mut diag: Vec<BigInt> = cur
        .row_vectors()
        .iter()
        .filter_map(|r| r.leading().map(|(_, c)| c.as_bigint().unwrap().abs()))
        .collect();
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            if g != diag[i] {
                let l = &diag[i] / &g * &diag[j];
                diag[i] = g;
                diag[j] = l;
            }
        }
    }
    Ok(diag)
}

/// Membership of `v` in the row space (fields) or integer row lattice (ℤ).
pub fn member(m: &SparseMatrix, v: &SparseVec) -> Result<bool> {
    if let Some(j) = v.max_index() {
        if j >= m.cols() {
            return Err(Error::DimensionMismatch {
                expected: m.cols(),
                found: j + 1,
            });
        }
    }
    if let Some((_, c)) = v.leading() {
        if c.base() != m.base() {
            return Err(Error::WrongBase {
                expected: m.base(),
                found: c.base(),
            });
        }
    }
    if m.base().is_field() {
        let mut e = FieldEchelon::new(m.base(), m.cols())?;
        for row in m.row_vectors() {
            e.insert(&row);
        }
        Ok(e.contains(v))
    } else {
        Ok(lattice_of(m).contains(v))
    }
}

/// Determinant: Gaussian elimination over fields, fraction-free Bareiss
/// elimination over ℤ (every division is exact).
pub fn det(m: &SparseMatrix) -> Result<Scalar> {
    if m.rows() != m.cols() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    det_dense(m.to_dense(), m.base())
}

pub(crate) fn det_dense(mut a: Vec<Vec<Scalar>>, base: Base) -> Result<Scalar> {
    let n = a.len();
    if n == 0 {
        return Ok(base.one());
    }
    if base.is_field() {
        let mut d = base.one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(base.zero());
            };
            if p != k {
                a.swap(p, k);
                d = -d;
            }
            d = &d * &a[k][k];
            let inv = a[k][k].inverse().unwrap();
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] * &inv;
                for j in k..n {
                    let t = &f * &a[k][j];
                    a[i][j] = &a[i][j] - &t;
                }
            }
        }
        return Ok(d);
    }
    // Bareiss
    let mut a: Vec<Vec<BigInt>> = a
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.as_bigint().unwrap()).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(base.zero());
            };
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let (q, r) = num.div_rem(&prev);
                if !r.is_zero() {
                    return Err(Error::InexactDivision("Bareiss elimination"));
                }
                a[i][j] = q;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(Scalar::Int(sign * &a[n - 1][n - 1]))
}

/// Coefficients `[1, c_1, ..., c_n]` of `det(xI - A)` (highest degree first),
/// by Berkowitz's division-free recurrence. Valid over any commutative base.
pub fn berkowitz(a: &[Vec<Scalar>], base: Base) -> Vec<Scalar> {
    let n = a.len();
    let mut v = vec![base.one()];
    for r in 0..n {
        // leading principal block of size r+1: [[M, C], [R, a_rr]]
        let mut q = Vec::with_capacity(r + 2);
        q.push(base.one());
        q.push(-&a[r][r]);
        // w = M^k C, starting at k = 0
        let mut w: Vec<Scalar> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            let rc = (0..r).fold(base.zero(), |acc, i| &acc + &(&a[r][i] * &w[i]));
            q.push(-&rc);
            w = (0..r)
                .map(|i| (0..r).fold(base.zero(), |acc, j| &acc + &(&a[i][j] * &w[j])))
                .collect();
        }
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..=r + 1 {
            let mut acc = base.zero();
            for j in 0..=i.min(r) {
                if i - j < q.len() {
                    acc = &acc + &(&q[i - j] * &v[j]);
                }
            }
            next.push(acc);
        }
        v = next;
    }
    v
}
