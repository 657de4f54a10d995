//! The n-fold tensor power `A^{⊗n}` in the word basis.
//!
//! A word is a list of n basis indices, one per slot; its linear index reads
//! the digits in base n with slot 1 most significant, so linear order is
//! lexicographic order on digit lists.

use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::ring::{RankRing, RingElement};
use crate::scalar::{Base, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorWord {
    digits: Vec<usize>,
}

impl TensorWord {
    pub fn new(digits: Vec<usize>) -> Self {
        TensorWord { digits }
    }

    pub fn digits(&self) -> &[usize] {
        &self.digits
    }

    pub fn index(&self, n: usize) -> usize {
        self.digits.iter().fold(0, |acc, d| {
            assert!(*d < n, "digit out of range");
            acc * n + d
        })
    }

    pub fn from_index(mut index: usize, n: usize) -> Self {
        let mut digits = vec![0; n];
        for k in (0..n).rev() {
            digits[k] = index % n;
            index /= n;
        }
        TensorWord { digits }
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.digits.len()];
        self.digits
            .iter()
            .all(|&d| !std::mem::replace(&mut seen[d], true))
    }
}

/// An element of `A^{⊗n}`: a sparse vector over the `n^n` words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorElement {
    n: usize,
    base: Base,
    vec: SparseVec,
}

impl TensorElement {
    pub fn vec(&self) -> &SparseVec {
        &self.vec
    }

    pub fn into_vec(self) -> SparseVec {
        self.vec
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn is_zero(&self) -> bool {
        self.vec.is_zero()
    }

    /// Coefficient of a word (zero when absent).
    pub fn coeff(&self, word: &TensorWord) -> Scalar {
        self.vec
            .get(word.index(self.n))
            .cloned()
            .unwrap_or_else(|| self.base.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (TensorWord, &Scalar)> + '_ {
        self.vec
            .iter()
            .map(|(i, c)| (TensorWord::from_index(i, self.n), c))
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        TensorElement {
            vec: self.vec.add(&other.vec),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        TensorElement {
            vec: self.vec.sub(&other.vec),
            ..self.clone()
        }
    }

    pub fn scale(&self, c: &Scalar) -> TensorElement {
        TensorElement {
            vec: self.vec.scale(c),
            ..self.clone()
        }
    }
}

/// `A^{⊗n}` for a ring `A` of rank n, with precomputed product tables.
#[derive(Clone, Debug)]
pub struct TensorSpace {
    ring: RankRing,
    n: usize,
    dim: usize,
    // place[s] = n^(n-1-s)
    place: Vec<usize>,
    // products[d][e] = sparse coordinates of b_d b_e
    products: Vec<Vec<Vec<(usize, Scalar)>>>,
}

impl TensorSpace {
    /// Builds the space; `n^n` must fit in memory-sized indices.
    pub fn new(ring: &RankRing) -> Self {
        let n = ring.rank();
        let dim = n.checked_pow(n as u32).expect("n^n overflows usize");
        let place = (0..n).map(|s| n.pow((n - 1 - s) as u32)).collect();
        let products = (0..n)
            .map(|d| {
                (0..n)
                    .map(|e| {
                        ring.product(d, e)
                            .iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(l, c)| (l, c.clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        TensorSpace {
            ring: ring.clone(),
            n,
            dim,
            place,
            products,
        }
    }

    pub fn ring(&self) -> &RankRing {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn base(&self) -> Base {
        self.ring.base()
    }

    pub fn digit(&self, index: usize, slot: usize) -> usize {
        (index / self.place[slot]) % self.n
    }

    pub fn word(&self, index: usize) -> TensorWord {
        TensorWord::from_index(index, self.n)
    }

    pub fn element(&self, vec: SparseVec) -> Result<TensorElement> {
        if let Some(m) = vec.max_index() {
            if m >= self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: m + 1,
                });
            }
        }
        if let Some((_, c)) = vec.iter().find(|(_, c)| c.base() != self.base()) {
            return Err(Error::WrongBase {
                expected: self.base(),
                found: c.base(),
            });
        }
        Ok(TensorElement {
            n: self.n,
            base: self.base(),
            vec,
        })
    }

    fn wrap(&self, vec: SparseVec) -> TensorElement {
        TensorElement {
            n: self.n,
            base: self.base(),
            vec,
        }
    }

    pub fn zero(&self) -> TensorElement {
        self.wrap(SparseVec::new())
    }

    pub fn one(&self) -> TensorElement {
        self.wrap(SparseVec::unit(0, self.base()))
    }

    pub fn word_element(&self, word: &TensorWord) -> Result<TensorElement> {
        if word.digits().len() != self.n || word.digits().iter().any(|d| *d >= self.n) {
            return Err(Error::ParentMismatch);
        }
        Ok(self.wrap(SparseVec::unit(word.index(self.n), self.base())))
    }

    fn check(&self, u: &TensorElement) -> Result<()> {
        if u.n != self.n || u.base != self.base() {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }

    /// `a^{(i)}`: `a` in slot `i` (1-based) and 1 elsewhere.
    pub fn embed(&self, a: &RingElement, i: usize) -> Result<TensorElement> {
        if i == 0 || i > self.n {
            return Err(Error::PositionOutOfRange {
                position: i,
                n: self.n,
            });
        }
        if a.coords().len() != self.n || a.coords().iter().any(|c| c.base() != self.base()) {
            return Err(Error::ParentMismatch);
        }
        let terms = a
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| (d * self.place[i - 1], c.clone()))
            .collect();
        Ok(self.wrap(SparseVec::from_terms(terms)))
    }

    /// Product of two words as sparse terms.
    fn word_product(&self, u: usize, v: usize, coeff: &Scalar, out: &mut Vec<(usize, Scalar)>) {
        let mut partial: Vec<(usize, Scalar)> = vec![(0, coeff.clone())];
        for s in 0..self.n {
            let terms = &self.products[self.digit(u, s)][self.digit(v, s)];
            if terms.is_empty() {
                return;
            }
            let mut next = Vec::with_capacity(partial.len() * terms.len());
            for (idx, c) in &partial {
                for (l, t) in terms {
                    next.push((idx + l * self.place[s], c * t));
                }
            }
            partial = next;
        }
        out.extend(partial);
    }

    /// Slotwise product, extended bilinearly.
    pub fn mult(&self, u: &TensorElement, v: &TensorElement) -> Result<TensorElement> {
        self.check(u)?;
        self.check(v)?;
        let mut terms = Vec::new();
        for (i, a) in u.vec.iter() {
            for (j, b) in v.vec.iter() {
                self.word_product(i, j, &(a * b), &mut terms);
            }
        }
        Ok(self.wrap(SparseVec::from_terms(terms)))
    }

    /// Multiplies by the generator `b_k^{(slot+1)}`. Indices of `v` are
    /// read through `flip` (an involution on `0..dim`), and the result uses
    /// the same convention.
    pub(crate) fn mul_generator(
        &self,
        v: &SparseVec,
        slot: usize,
        k: usize,
        flip: bool,
    ) -> SparseVec {
        let map = |i: usize| if flip { self.dim - 1 - i } else { i };
        let place = self.place[slot];
        let mut terms = Vec::with_capacity(v.nnz());
        for (i, c) in v.iter() {
            let w = map(i);
            let d = self.digit(w, slot);
            let stem = w - d * place;
            for (l, t) in &self.products[d][k] {
                terms.push((map(stem + l * place), c * t));
            }
        }
        SparseVec::from_terms(terms)
    }

    /// Applies `σ` (0-based, `sigma[k]` is the slot receiving slot `k`'s
    /// digit) to a vector of word coefficients.
    pub(crate) fn permute_vec(&self, sigma: &[usize], v: &SparseVec, flip: bool) -> SparseVec {
        let map = |i: usize| if flip { self.dim - 1 - i } else { i };
        let terms = v
            .iter()
            .map(|(i, c)| {
                let w = map(i);
                let mut out = 0;
                for k in 0..self.n {
                    out += self.digit(w, k) * self.place[sigma[k]];
                }
                (map(out), c.clone())
            })
            .collect();
        SparseVec::from_terms(terms)
    }

    /// The `S_n` action permuting tensor factors.
    pub fn sn_act(&self, sigma: &[usize], u: &TensorElement) -> Result<TensorElement> {
        self.check(u)?;
        check_permutation(sigma, self.n)?;
        Ok(self.wrap(self.permute_vec(sigma, &u.vec, false)))
    }
}

pub(crate) fn check_permutation(sigma: &[usize], n: usize) -> Result<()> {
    if sigma.len() != n {
        return Err(Error::BadPermutation {
            expected: n,
            found: sigma.len(),
        });
    }
    let mut seen = vec![false; n];
    for &s in sigma {
        if s >= n || std::mem::replace(&mut seen[s], true) {
            return Err(Error::BadPermutation {
                expected: n,
                found: n,
            });
        }
    }
    Ok(())
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}
