//! Incrementally maintained canonical forms for row spaces.
//!
//! [`FieldEchelon`] keeps a fully reduced row echelon basis over ℚ or 𝔽_p;
//! [`LatticeEchelon`] keeps a row Hermite normal form of a ℤ-lattice. Both
//! are canonical for the span they hold, so the final basis does not depend
//! on insertion order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::sparse::SparseVec;
use crate::error::{Error, Result};
use crate::scalar::{Base, Scalar};

const NO_ROW: u32 = u32::MAX;

/// Reduced row echelon basis of a subspace of `base^cols`, grown one vector
/// at a time. Every row has leading coefficient 1 at its pivot and zeros at
/// every other pivot column.
#[derive(Clone, Debug)]
pub struct FieldEchelon {
    base: Base,
    cols: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    pivot_row: Vec<u32>,
    // rows that may have a nonzero in each non-pivot column (superset)
    col_rows: Vec<Vec<u32>>,
}

impl FieldEchelon {
    pub fn new(base: Base, cols: usize) -> Result<Self> {
        if !base.is_field() {
            return Err(Error::WrongBase {
                expected: Base::Rationals,
                found: base,
            });
        }
        Ok(FieldEchelon {
            base,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![NO_ROW; cols],
            col_rows: vec![Vec::new(); cols],
        })
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col] != NO_ROW
    }

    /// Normal form of `v` modulo the span: no entries left in pivot columns.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut terms: Vec<(usize, Scalar)> = Vec::new();
        let mut touched = false;
        for (c, x) in v.iter() {
            let r = self.pivot_row[c];
            if r == NO_ROW {
                terms.push((c, x.clone()));
            } else {
                touched = true;
                let neg = -x;
                for (j, y) in self.rows[r as usize].iter() {
                    if j != c {
                        terms.push((j, &neg * y));
                    }
                }
            }
        }
        if !touched {
            return v.clone();
        }
        SparseVec::from_terms(terms)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        if r.is_zero() {
            return false;
        }
        self.insert_reduced(r);
        true
    }

    fn insert_reduced(&mut self, r: SparseVec) {
        let (p, lead) = r.leading().expect("nonzero");
        let r = if lead.is_one() {
            r
        } else {
            r.scale(&lead.inverse().expect("field element"))
        };
        let mut touching = std::mem::take(&mut self.col_rows[p]);
        touching.sort_unstable();
        touching.dedup();
        for rid in touching {
            let row = &self.rows[rid as usize];
            let Some(x) = row.get(p) else { continue };
            let updated = row.add_scaled(&-x, &r);
            for (j, _) in r.iter() {
                if j != p {
                    self.col_rows[j].push(rid);
                }
            }
            self.rows[rid as usize] = updated;
        }
        let id = self.rows.len() as u32;
        for (j, _) in r.iter() {
            if j != p {
                self.col_rows[j].push(id);
            }
        }
        self.pivot_row[p] = id;
        self.pivots.push(p);
        self.rows.push(r);
    }

    /// Pivot columns, increasing.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut p = self.pivots.clone();
        p.sort_unstable();
        p
    }

    pub fn non_pivot_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|&c| !self.is_pivot(c)).collect()
    }

    /// Basis rows sorted by pivot column.
    pub fn rows_by_pivot(&self) -> Vec<SparseVec> {
        self.pivot_columns()
            .into_iter()
            .map(|c| self.rows[self.pivot_row[c] as usize].clone())
            .collect()
    }

    pub fn row_for_pivot(&self, col: usize) -> Option<&SparseVec> {
        let r = self.pivot_row[col];
        (r != NO_ROW).then(|| &self.rows[r as usize])
    }
}

type IntRow = Vec<(usize, BigInt)>;

/// Row Hermite normal form of a sublattice of ℤ^cols, grown one vector at
/// a time. Pivots are positive and entries above each pivot lie in
/// `[0, pivot)`.
#[derive(Clone, Debug)]
pub struct LatticeEchelon {
    cols: usize,
    rows: Vec<IntRow>,
    pivot_row: Vec<u32>,
    by_pivot: BTreeMap<usize, u32>,
}

fn to_int_map(v: &SparseVec) -> BTreeMap<usize, BigInt> {
    v.iter()
        .map(|(i, c)| match c {
            Scalar::Int(x) => (i, x.clone()),
            other => panic!("lattice vector with non-integer entry {other}"),
        })
        .collect()
}

fn axpy_map(acc: &mut BTreeMap<usize, BigInt>, q: &BigInt, row: &IntRow) {
    for (j, y) in row {
        let e = acc.entry(*j).or_insert_with(BigInt::zero);
        *e -= q * y;
        if e.is_zero() {
            acc.remove(j);
        }
    }
}

fn combine_rows(a: &BigInt, x: &IntRow, b: &BigInt, y: &IntRow) -> IntRow {
    let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
    for (j, v) in x {
        *acc.entry(*j).or_insert_with(BigInt::zero) += a * v;
    }
    for (j, v) in y {
        *acc.entry(*j).or_insert_with(BigInt::zero) += b * v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

impl LatticeEchelon {
    pub fn new(cols: usize) -> Self {
        LatticeEchelon {
            cols,
            rows: Vec::new(),
            pivot_row: vec![NO_ROW; cols],
            by_pivot: BTreeMap::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col] != NO_ROW
    }

    fn pivot_value(&self, rid: u32) -> &BigInt {
        &self.rows[rid as usize][0].1
    }

    fn reduce_map_from(&self, acc: &mut BTreeMap<usize, BigInt>, start: usize) {
        let mut cursor = start;
        loop {
            let Some((&c, x)) = acc.range(cursor..).next() else {
                break;
            };
            let rid = self.pivot_row[c];
            if rid != NO_ROW {
                let q = x.div_floor(self.pivot_value(rid));
                if !q.is_zero() {
                    axpy_map(acc, &q, &self.rows[rid as usize]);
                }
            }
            cursor = c + 1;
        }
    }

    /// Canonical remainder of `v` modulo the lattice: every pivot-column
    /// entry is reduced into `[0, pivot)`. Zero exactly for members.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc = to_int_map(v);
        self.reduce_map_from(&mut acc, 0);
        SparseVec::from_sorted_unchecked(
            acc.into_iter().map(|(i, x)| (i, Scalar::Int(x))).collect(),
        )
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the lattice; returns whether the lattice grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut v = to_int_map(v);
        let mut changed = false;
        loop {
            let Some((&c, b)) = v.iter().next() else {
                break;
            };
            let b = b.clone();
            let rid = self.pivot_row[c];
            if rid == NO_ROW {
                let mut row: IntRow = v.into_iter().collect();
                if row[0].1.is_negative() {
                    for e in row.iter_mut() {
                        e.1 = -&e.1;
                    }
                }
                let id = self.rows.len() as u32;
                self.rows.push(row);
                self.pivot_row[c] = id;
                self.by_pivot.insert(c, id);
                self.renormalize(c);
                return true;
            }
            let d = self.pivot_value(rid).clone();
            let (q, r) = b.div_rem(&d);
            if r.is_zero() {
                axpy_map(&mut v, &q, &self.rows[rid as usize]);
                continue;
            }
            let eg = d.extended_gcd(&b);
            let (mut g, mut s, mut t) = (eg.gcd, eg.x, eg.y);
            if g.is_negative() {
                g = -g;
                s = -s;
                t = -t;
            }
            let vrow: IntRow = v.iter().map(|(i, x)| (*i, x.clone())).collect();
            let old = std::mem::take(&mut self.rows[rid as usize]);
            let new_row = combine_rows(&s, &old, &t, &vrow);
            let rest = combine_rows(&(&d / &g), &vrow, &-(&b / &g), &old);
            debug_assert_eq!(new_row[0], (c, g.clone()));
            self.rows[rid as usize] = new_row;
            self.renormalize(c);
            v = rest.into_iter().collect();
            changed = true;
        }
        changed
    }

    // Restores full reduction after the row with pivot `c` changed.
    fn renormalize(&mut self, c: usize) {
        let rid = self.pivot_row[c] as usize;
        let mut own: BTreeMap<usize, BigInt> =
            std::mem::take(&mut self.rows[rid]).into_iter().collect();
        self.reduce_map_from(&mut own, c + 1);
        self.rows[rid] = own.into_iter().collect();
        let above: Vec<u32> = self.by_pivot.range(..c).map(|(_, r)| *r).collect();
        for r in above.into_iter().rev() {
            let row = &self.rows[r as usize];
            if !row
                .iter()
                .any(|(j, _)| *j >= c && self.pivot_row[*j] != NO_ROW)
            {
                continue;
            }
            let mut acc: BTreeMap<usize, BigInt> = std::mem::take(&mut self.rows[r as usize])
                .into_iter()
                .collect();
            self.reduce_map_from(&mut acc, c);
            self.rows[r as usize] = acc.into_iter().collect();
        }
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.by_pivot.keys().copied().collect()
    }

    /// Pivot values in increasing pivot-column order.
    pub fn pivot_values(&self) -> Vec<BigInt> {
        self.by_pivot
            .values()
            .map(|r| self.pivot_value(*r).clone())
            .collect()
    }

    pub fn non_pivot_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|&c| !self.is_pivot(c)).collect()
    }

    pub fn rows_by_pivot(&self) -> Vec<SparseVec> {
        self.by_pivot
            .values()
            .map(|r| {
                SparseVec::from_sorted_unchecked(
                    self.rows[*r as usize]
                        .iter()
                        .map(|(i, x)| (*i, Scalar::Int(x.clone())))
                        .collect(),
                )
            })
            .collect()
    }

    /// Whether every pivot equals 1 (the non-pivot unit vectors then give a
    /// basis of the quotient).
    pub fn unit_pivots(&self) -> bool {
        self.rows.iter().all(|r| r[0].1.is_one())
    }
}

/// Either canonical form, chosen by the base.
#[derive(Clone, Debug)]
pub enum Echelon {
    Field(FieldEchelon),
    Lattice(LatticeEchelon),
}

impl Echelon {
    pub fn new(base: Base, cols: usize) -> Self {
        if base.is_field() {
            Echelon::Field(FieldEchelon::new(base, cols).expect("field base"))
        } else {
            Echelon::Lattice(LatticeEchelon::new(cols))
        }
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        match self {
            Echelon::Field(e) => e.reduce(v),
            Echelon::Lattice(e) => e.reduce(v),
        }
    }

    pub fn insert(&mut self, v: &SparseVec) -> bool {
        match self {
            Echelon::Field(e) => e.insert(v),
            Echelon::Lattice(e) => e.insert(v),
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn rank(&self) -> usize {
        match self {
            Echelon::Field(e) => e.rank(),
            Echelon::Lattice(e) => e.rank(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            Echelon::Field(e) => e.cols(),
            Echelon::Lattice(e) => e.cols(),
        }
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        match self {
            Echelon::Field(e) => e.is_pivot(col),
            Echelon::Lattice(e) => e.is_pivot(col),
        }
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        match self {
            Echelon::Field(e) => e.pivot_columns(),
            Echelon::Lattice(e) => e.pivot_columns(),
        }
    }

    pub fn non_pivot_columns(&self) -> Vec<usize> {
        match self {
            Echelon::Field(e) => e.non_pivot_columns(),
            Echelon::Lattice(e) => e.non_pivot_columns(),
        }
    }

    pub fn rows_by_pivot(&self) -> Vec<SparseVec> {
        match self {
            Echelon::Field(e) => e.rows_by_pivot(),
            Echelon::Lattice(e) => e.rows_by_pivot(),
        }
    }
}
