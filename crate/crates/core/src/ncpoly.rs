//! Noncommutative polynomials in `X, Y` and the sequence `f_k(X, Y)` with
//! `1 - (X+Y)T = (1-XT)(1-YT) prod_k (1 - f_k(X,Y) XY T^{k+2})`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{RankRing, RingElement};
use crate::scalar::Scalar;

/// A ℤ-combination of words in `X` and `Y`, stored as strings.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NCPoly {
    terms: BTreeMap<String, i64>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::monomial("", 1)
    }

    pub fn x() -> Self {
        NCPoly::monomial("X", 1)
    }

    pub fn y() -> Self {
        NCPoly::monomial("Y", 1)
    }

    /// `c * word`; panics on letters other than `X` and `Y`.
    pub fn monomial(word: &str, c: i64) -> Self {
        assert!(
            word.chars().all(|ch| ch == 'X' || ch == 'Y'),
            "word {word:?} outside {{X, Y}}"
        );
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(word.to_string(), c);
        }
        NCPoly { terms }
    }

    pub fn terms(&self) -> &BTreeMap<String, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, word: &str) -> i64 {
        self.terms.get(word).copied().unwrap_or(0)
    }

    fn accumulate(&mut self, word: String, c: i64) {
        let e = self.terms.entry(word).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.accumulate(w.clone(), *c);
        }
        out
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> NCPoly {
        if c == 0 {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    /// Concatenation product.
    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.accumulate(format!("{u}{v}"), a * b);
            }
        }
        out
    }

    /// `Some(d)` when every word has length `d` (the zero polynomial is
    /// homogeneous of every degree and reports `None`).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut lens = self.terms.keys().map(|w| w.len());
        let d = lens.next()?;
        lens.all(|l| l == d).then_some(d)
    }

    /// Exact right division by `XY`.
    pub fn div_xy(&self) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            let q = w
                .strip_suffix("XY")
                .ok_or(Error::InexactDivision("right division by XY"))?;
            out.accumulate(q.to_string(), *c);
        }
        Ok(out)
    }

    /// Value at commuting `x, y` in a ring.
    pub fn eval(&self, ring: &RankRing, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        let mut acc = ring.zero();
        for (w, c) in &self.terms {
            let mut m = ring.one();
            for ch in w.chars() {
                m = ring.mul(&m, if ch == 'X' { x } else { y })?;
            }
            acc = ring.add(&acc, &ring.scale(&ring.base().from_i64(*c), &m)?)?;
        }
        Ok(acc)
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, w: &str) -> fmt::Result {
    let b = w.as_bytes();
    let mut i = 0;
    while i < b.len() {
        let mut j = i;
        while j < b.len() && b[j] == b[i] {
            j += 1;
        }
        write!(f, "{}", b[i] as char)?;
        if j - i > 1 {
            write!(f, "^{}", j - i)?;
        }
        i = j;
    }
    Ok(())
}

/// Words in lexicographic order, runs written as powers: `X^2 + YX + Y^2`.
impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, &c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            match (k, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}")?;
                }
                write_word(f, w)?;
            }
        }
        Ok(())
    }
}

/// A power series in `T` with [`NCPoly`] coefficients, truncated after
/// `T^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCSeries {
    order: usize,
    coeffs: Vec<NCPoly>,
}

impl NCSeries {
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![NCPoly::zero(); order + 1];
        coeffs[0] = NCPoly::one();
        NCSeries { order, coeffs }
    }

    /// `1 - p T^k`.
    pub fn one_minus(p: &NCPoly, k: usize, order: usize) -> Self {
        let mut s = NCSeries::one(order);
        if k <= order {
            s.coeffs[k] = s.coeffs[k].sub(p);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> &NCPoly {
        &self.coeffs[k]
    }

    pub fn mul(&self, other: &NCSeries) -> NCSeries {
        let order = self.order.min(other.order);
        let mut coeffs = vec![NCPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        NCSeries { order, coeffs }
    }
}

fn xy() -> NCPoly {
    NCPoly::monomial("XY", 1)
}

/// `f_0, ..., f_k`.
pub fn desmit_sequence(k: usize) -> Result<Vec<NCPoly>> {
    let mut fs: Vec<NCPoly> = Vec::with_capacity(k + 1);
    for m in 0..=k {
        let order = m + 2;
        let mut prod = NCSeries::one_minus(&NCPoly::x(), 1, order).mul(&NCSeries::one_minus(
            &NCPoly::y(),
            1,
            order,
        ));
        for (j, f) in fs.iter().enumerate() {
            prod = prod.mul(&NCSeries::one_minus(&f.mul(&xy()), j + 2, order));
        }
        fs.push(prod.coeff(order).div_xy()?);
    }
    Ok(fs)
}

pub fn desmit_f(k: usize) -> Result<NCPoly> {
    Ok(desmit_sequence(k)?.pop().expect("nonempty sequence"))
}

/// Checks the factorization through `T^{m+2}` with `f_0, ..., f_m`.
pub fn verify_factorization(m: usize) -> Result<bool> {
    let order = m + 2;
    let fs = desmit_sequence(m)?;
    let mut rhs = NCSeries::one_minus(&NCPoly::x(), 1, order).mul(&NCSeries::one_minus(
        &NCPoly::y(),
        1,
        order,
    ));
    for (k, f) in fs.iter().enumerate() {
        rhs = rhs.mul(&NCSeries::one_minus(&f.mul(&xy()), k + 2, order));
    }
    let lhs = NCSeries::one_minus(&NCPoly::x().add(&NCPoly::y()), 1, order);
    Ok(lhs == rhs)
}

fn series_mul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let len = a.len().min(b.len());
    let mut out = vec![a[0].base().zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// `Q_a(T^step) mod T^{len}`.
fn reverse_charpoly_series(
    ring: &RankRing,
    a: &RingElement,
    step: usize,
    len: usize,
) -> Result<Vec<Scalar>> {
    let q = ring.char_poly(a)?.reverse();
    let mut out = vec![ring.base().zero(); len];
    for (k, c) in q.into_iter().enumerate() {
        if k * step < len {
            out[k * step] = c;
        }
    }
    Ok(out)
}

/// `Q_{x+y} = Q_x Q_y prod_{k <= n-2} Q_{f_k(x,y) xy}(T^{k+2}) mod T^{n+1}`.
pub fn charpoly_product_check(ring: &RankRing, x: &RingElement, y: &RingElement) -> Result<bool> {
    let n = ring.rank();
    let len = n + 1;
    let lhs = reverse_charpoly_series(ring, &ring.add(x, y)?, 1, len)?;
    let mut rhs = series_mul(
        &reverse_charpoly_series(ring, x, 1, len)?,
        &reverse_charpoly_series(ring, y, 1, len)?,
    );
    let xy = ring.mul(x, y)?;
    for (k, f) in desmit_sequence(n.saturating_sub(2))?
        .iter()
        .enumerate()
        .take(n.saturating_sub(1))
    {
        let g = ring.mul(&f.eval(ring, x, y)?, &xy)?;
        rhs = series_mul(&rhs, &reverse_charpoly_series(ring, &g, k + 2, len)?);
    }
    Ok(lhs == rhs)
}

/// The displayed formulas for `s_1(x+y)`, `s_2(x+y)` and `s_3(x+y)`, each
/// checked when the rank allows it.
pub fn s_addition_check(ring: &RankRing, x: &RingElement, y: &RingElement) -> Result<bool> {
    let n = ring.rank();
    let s = |a: &RingElement, j: usize| -> Result<Scalar> {
        if j > n {
            return Ok(ring.base().zero());
        }
        Ok(ring.char_poly(a)?.s(j))
    };
    let sum = ring.add(x, y)?;
    let xy = ring.mul(x, y)?;
    let ok1 = s(&sum, 1)? == &s(x, 1)? + &s(y, 1)?;
    let rhs2 = &(&(&s(x, 2)? + &(&s(x, 1)? * &s(y, 1)?)) + &s(y, 2)?) - &s(&xy, 1)?;
    let ok2 = n < 2 || s(&sum, 2)? == rhs2;
    let xxy = ring.mul(x, &xy)?;
    let xyy = ring.mul(&xy, y)?;
    let rhs3 = [
        s(x, 3)?,
        &s(x, 2)? * &s(y, 1)?,
        &s(x, 1)? * &s(y, 2)?,
        s(y, 3)?,
        s(&xxy, 1)?,
        s(&xyy, 1)?,
        -(&(&s(x, 1)? + &s(y, 1)?) * &s(&xy, 1)?),
    ]
    .into_iter()
    .fold(ring.base().zero(), |acc, t| &acc + &t);
    let ok3 = n < 3 || s(&sum, 3)? == rhs3;
    Ok(ok1 && ok2 && ok3)
}
