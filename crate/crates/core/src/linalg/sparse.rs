use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{Base, Scalar};

/// Sparse coordinate vector: entries sorted by index, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec {
            entries: Vec::new(),
        }
    }

    pub fn unit(index: usize, base: Base) -> Self {
        SparseVec {
            entries: vec![(index, base.one())],
        }
    }

    /// Builds a vector from unsorted terms, summing duplicates and dropping zeros.
    pub fn from_terms(mut terms: Vec<(usize, Scalar)>) -> Self {
        terms.sort_by_key(|t| t.0);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(terms.len());
        for (i, c) in terms {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc = &*acc + &c,
                _ => {
                    if let Some((_, acc)) = entries.last() {
                        if acc.is_zero() {
                            entries.pop();
                        }
                    }
                    entries.push((i, c));
                }
            }
        }
        if let Some((_, acc)) = entries.last() {
            if acc.is_zero() {
                entries.pop();
            }
        }
        SparseVec { entries }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize, base: Base) -> Vec<Scalar> {
        let mut out = vec![base.zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&index, |t| t.0)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|t| t.0)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (*i, v * c))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect(),
        }
    }

    /// `self + c * other`, by a sorted merge.
    pub fn add_scaled(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (
            self.entries.iter().peekable(),
            other.entries.iter().peekable(),
        );
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        let v = y * c;
                        if !v.is_zero() {
                            out.push((*j, v));
                        }
                        b.next();
                    } else {
                        let v = x + &(y * c);
                        if !v.is_zero() {
                            out.push((*i, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    let v = y * c;
                    if !v.is_zero() {
                        out.push((*j, v));
                    }
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.add_scaled(&c.base().one(), other),
        }
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.add_scaled(&-&c.base().one(), other),
        }
    }

    /// Relabels indices through `f` (which must be injective).
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        let mut entries: Vec<(usize, Scalar)> = self
            .entries
            .iter()
            .map(|(i, c)| (f(*i), c.clone()))
            .collect();
        entries.sort_by_key(|t| t.0);
        SparseVec { entries }
    }

    pub(crate) fn from_sorted_unchecked(entries: Vec<(usize, Scalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|t| !t.1.is_zero()));
        SparseVec { entries }
    }
}

/// Sparse matrix keyed by `(row, col)`; all entries share one base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    base: Base,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize, base: Base) -> Self {
        SparseMatrix {
            rows,
            cols,
            base,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize, base: Base) -> Self {
        let mut m = Self::zeros(n, n, base);
        for i in 0..n {
            m.set(i, i, base.one());
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], base: Base) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols, base);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, v) in r.iter().enumerate() {
                m.set(i, j, base.from_i64(*v));
            }
        }
        m
    }

    pub fn from_rows(rows: &[SparseVec], cols: usize, base: Base) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols, base);
        for (i, r) in rows.iter().enumerate() {
            for (j, c) in r.iter() {
                if j >= cols {
                    return Err(Error::DimensionMismatch {
                        expected: cols,
                        found: j + 1,
                    });
                }
                if c.base() != base {
                    return Err(Error::WrongBase {
                        expected: base,
                        found: c.base(),
                    });
                }
                m.entries.insert((i, j), c.clone());
            }
        }
        Ok(m)
    }

    pub fn from_dense(rows: &[Vec<Scalar>], base: Base) -> Result<Self> {
        let sparse: Vec<SparseVec> = rows.iter().map(|r| SparseVec::from_dense(r)).collect();
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(&sparse, cols, base)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| self.base.zero())
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        assert_eq!(v.base(), self.base, "entry base differs from matrix base");
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn row_vectors(&self) -> Vec<SparseVec> {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for ((i, j), c) in &self.entries {
            rows[*i].push((*j, c.clone()));
        }
        rows.into_iter()
            .map(SparseVec::from_sorted_unchecked)
            .collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![self.base.zero(); self.cols]; self.rows];
        for ((i, j), c) in &self.entries {
            out[*i][*j] = c.clone();
        }
        out
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            base: self.base,
            entries: self
                .entries
                .iter()
                .map(|((i, j), c)| ((*j, *i), c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let rhs = other.row_vectors();
        let mut out = Vec::with_capacity(self.rows);
        for row in self.row_vectors() {
            let mut acc = SparseVec::new();
            for (k, c) in row.iter() {
                acc = acc.add_scaled(c, &rhs[k]);
            }
            out.push(acc);
        }
        SparseMatrix::from_rows(&out, other.cols, self.base)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_terms_combines_and_drops_zeros() {
        let z = Base::Integers;
        let v = SparseVec::from_terms(vec![
            (3, z.from_i64(2)),
            (1, z.from_i64(1)),
            (3, z.from_i64(-2)),
            (1, z.from_i64(4)),
        ]);
        assert_eq!(v.entries(), &[(1, z.from_i64(5))]);
    }

    #[test]
    fn add_scaled_cancels() {
        let q = Base::Rationals;
        let a = SparseVec::from_dense(&[q.from_i64(1), q.from_i64(2), q.zero()]);
        let b = SparseVec::from_dense(&[q.zero(), q.from_i64(1), q.from_i64(3)]);
        let c = a.add_scaled(&q.from_i64(-2), &b);
        assert_eq!(
            c.to_dense(3, q),
            vec![q.from_i64(1), q.zero(), q.from_i64(-6)]
        );
    }

    #[test]
    fn set_zero_removes_entry() {
        let mut m = SparseMatrix::identity(2, Base::Integers);
        m.set(0, 0, Base::Integers.zero());
        assert_eq!(m.nnz(), 1);
    }
}
