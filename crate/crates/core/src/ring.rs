//! Rings of rank n presented by structure constants.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{self, SparseMatrix};
use crate::scalar::{Base, Scalar};

/// A violated ring axiom, with the basis indices that witness it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `b_0 * b_j` is not `b_j`.
    NonUnital(usize),
    NonCommutative(usize, usize),
    NonAssociative(usize, usize, usize),
    /// Table shape or base problems found before the axioms were checked.
    Malformed(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonUnital(j) => write!(f, "basis 0 is not a unity: b0*b{j} != b{j}"),
            Violation::NonCommutative(i, j) => write!(f, "b{i}*b{j} != b{j}*b{i}"),
            Violation::NonAssociative(i, j, k) => {
                write!(f, "(b{i}*b{j})*b{k} != b{i}*(b{j}*b{k}) at ({i},{j},{k})")
            }
            Violation::Malformed(msg) => write!(f, "{msg}"),
        }
    }
}

/// A free B-algebra of rank n with basis `b_0 = 1, b_1, ..., b_{n-1}` and
/// structure constants `b_i b_j = Σ_k c[i][j][k] b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankRing {
    base: Base,
    names: Vec<String>,
    table: Vec<Vec<Vec<Scalar>>>,
}

/// An element of a [`RankRing`], as coordinates in its basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    coords: Vec<Scalar>,
}

impl RingElement {
    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }
}

/// `x^n - s_1 x^{n-1} + s_2 x^{n-2} - ... + (-1)^n s_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    // polynomial coefficients, highest degree first
    coeffs: Vec<Scalar>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The unsigned coefficient `s_j`; `s(0) = 1`.
    pub fn s(&self, j: usize) -> Scalar {
        let c = &self.coeffs[j];
        if j.is_multiple_of(2) {
            c.clone()
        } else {
            -c
        }
    }

    /// Coefficients of the polynomial, highest degree first.
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficients of the reverse polynomial `Q(T) = det(1 - aT)`, lowest
    /// degree first: `[1, -s_1, s_2, ...]`.
    pub fn reverse(&self) -> Vec<Scalar> {
        self.coeffs.clone()
    }
}

impl RankRing {
    /// Checks shape, base, unity, commutativity and associativity, reporting
    /// every violation found.
    pub fn validate(
        base: Base,
        names: Vec<String>,
        table: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<RankRing> {
        let n = table.len();
        let mut bad = Vec::new();
        if n == 0 {
            bad.push(Violation::Malformed("rank must be positive".into()));
        }
        if names.len() != n {
            bad.push(Violation::Malformed(format!(
                "{} names for rank {n}",
                names.len()
            )));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                bad.push(Violation::Malformed(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
                continue;
            }
            for (j, v) in row.iter().enumerate() {
                if v.len() != n {
                    bad.push(Violation::Malformed(format!(
                        "entry ({i},{j}) has {} coordinates, expected {n}",
                        v.len()
                    )));
                } else if let Some(s) = v.iter().find(|s| s.base() != base) {
                    bad.push(Violation::Malformed(format!(
                        "entry ({i},{j}) has a {} scalar in a {base} table",
                        s.base()
                    )));
                }
            }
        }
        if !bad.is_empty() {
            return Err(Error::InvalidRing(bad));
        }
        let ring = RankRing { base, names, table };
        let bad = ring.violations();
        if bad.is_empty() {
            Ok(ring)
        } else {
            Err(Error::InvalidRing(bad))
        }
    }

    fn violations(&self) -> Vec<Violation> {
        let n = self.rank();
        let mut bad = Vec::new();
        for j in 0..n {
            let e = unit_vec(n, j, self.base);
            if self.table[0][j] != e {
                bad.push(Violation::NonUnital(j));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if self.table[i][j] != self.table[j][i] {
                    bad.push(Violation::NonCommutative(i, j));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.mul_coords(&self.table[i][j], &unit_vec(n, k, self.base));
                    let right = self.mul_coords(&unit_vec(n, i, self.base), &self.table[j][k]);
                    if left != right {
                        bad.push(Violation::NonAssociative(i, j, k));
                    }
                }
            }
        }
        bad
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn rank(&self) -> usize {
        self.table.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Coordinates of `b_i * b_j`.
    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i][j]
    }

    pub fn table(&self) -> &[Vec<Vec<Scalar>>] {
        &self.table
    }

    fn mul_coords(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.rank();
        let mut out = vec![self.base.zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = &out[k] + &(&xy * c);
                    }
                }
            }
        }
        out
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Result<RingElement> {
        if coords.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: coords.len(),
            });
        }
        if let Some(s) = coords.iter().find(|s| s.base() != self.base) {
            return Err(Error::WrongBase {
                expected: self.base,
                found: s.base(),
            });
        }
        Ok(RingElement { coords })
    }

    pub fn element_i64(&self, coords: &[i64]) -> Result<RingElement> {
        self.element(coords.iter().map(|c| self.base.from_i64(*c)).collect())
    }

    pub fn basis_element(&self, i: usize) -> RingElement {
        RingElement {
            coords: unit_vec(self.rank(), i, self.base),
        }
    }

    pub fn one(&self) -> RingElement {
        self.basis_element(0)
    }

    pub fn zero(&self) -> RingElement {
        RingElement {
            coords: vec![self.base.zero(); self.rank()],
        }
    }

    fn check(&self, a: &RingElement) -> Result<()> {
        if a.coords.len() != self.rank() || a.coords.iter().any(|s| s.base() != self.base) {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(RingElement {
            coords: self.mul_coords(&a.coords, &b.coords),
        })
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(RingElement {
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect(),
        })
    }

    pub fn scale(&self, c: &Scalar, a: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        Ok(RingElement {
            coords: a.coords.iter().map(|x| c * x).collect(),
        })
    }

    pub fn pow(&self, a: &RingElement, e: usize) -> Result<RingElement> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    fn mult_dense(&self, a: &RingElement) -> Vec<Vec<Scalar>> {
        let n = self.rank();
        let mut m = vec![vec![self.base.zero(); n]; n];
        for j in 0..n {
            let col = self.mul_coords(&a.coords, &unit_vec(n, j, self.base));
            for (i, c) in col.into_iter().enumerate() {
                m[i][j] = c;
            }
        }
        m
    }

    /// Matrix of `x -> a x`; column `j` holds the coordinates of `a b_j`.
    pub fn mult_matrix(&self, a: &RingElement) -> Result<SparseMatrix> {
        self.check(a)?;
        SparseMatrix::from_dense(&self.mult_dense(a), self.base)
    }

    /// Characteristic polynomial of multiplication by `a`, division-free.
    pub fn char_poly(&self, a: &RingElement) -> Result<CharPoly> {
        self.check(a)?;
        Ok(CharPoly {
            coeffs: linalg::berkowitz(&self.mult_dense(a), self.base),
        })
    }

    /// `s_1(a)`.
    pub fn trace(&self, a: &RingElement) -> Result<Scalar> {
        self.check(a)?;
        let m = self.mult_dense(a);
        Ok((0..self.rank()).fold(self.base.zero(), |acc, i| &acc + &m[i][i]))
    }

    /// Evaluates `P_a(a)` inside the ring and tests it for zero.
    pub fn cayley_hamilton(&self, a: &RingElement) -> Result<bool> {
        let p = self.char_poly(a)?;
        let mut acc = self.zero();
        for c in p.coeffs() {
            acc = self.mul(&acc, a)?;
            acc.coords[0] = &acc.coords[0] + c;
        }
        Ok(acc.coords.iter().all(Scalar::is_zero))
    }

    pub fn trace_form(&self) -> Vec<Vec<Scalar>> {
        let n = self.rank();
        let traces: Vec<Scalar> = (0..n)
            .map(|k| self.trace(&self.basis_element(k)).unwrap())
            .collect();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        self.table[i][j]
                            .iter()
                            .zip(&traces)
                            .fold(self.base.zero(), |acc, (c, t)| &acc + &(c * t))
                    })
                    .collect()
            })
            .collect()
    }

    /// Gram determinant of `(a, a') -> Tr(a a')` in the given basis, with no
    /// sign normalization.
    pub fn discriminant(&self) -> Scalar {
        linalg::det_dense(self.trace_form(), self.base).expect("square Gram matrix")
    }

    pub fn is_etale(&self) -> bool {
        self.discriminant().is_unit()
    }

    /// Whether every product of two non-unity basis elements vanishes, i.e.
    /// the ring is `B[x_1, ..., x_{n-1}] / (x_1, ..., x_{n-1})^2` in this basis.
    pub fn is_degenerate(&self) -> bool {
        let n = self.rank();
        (1..n).all(|i| (1..n).all(|j| self.table[i][j].iter().all(Scalar::is_zero)))
    }

    /// The same table read in another base (reduction mod p of a ℤ-ring, or
    /// ℤ → ℚ).
    pub fn change_base(&self, base: Base) -> Result<RankRing> {
        let table = self
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.iter().map(|s| base.coerce(s)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        RankRing::validate(base, self.names.clone(), table)
    }
}

pub(crate) fn unit_vec(n: usize, j: usize, base: Base) -> Vec<Scalar> {
    let mut v = vec![base.zero(); n];
    v[j] = base.one();
    v
}
