//! The fundamental relations, their saturation to the ideal `I(A, B)` and
//! the quotient `G(A/B) = A^{⊗n} / I(A, B)`.
//!
//! The ideal is stored with word indices reversed (column `c` is word
//! `n^n - 1 - c`), so echelon pivots land on the largest words and the unit
//! word is never a pivot unless `1 ∈ I`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{self, Echelon, SparseMatrix, SparseVec};
use crate::partition::Partition;
use crate::ring::{RankRing, RingElement};
use crate::scalar::{Base, Scalar};
use crate::tensor::{check_permutation, TensorElement, TensorSpace, TensorWord};

/// Largest rank closed without an explicit override.
pub const DEFAULT_MAX_N: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CloseOptions {
    pub max_n: usize,
    /// Use the rayon pool for product generation and batch reduction.
    /// Ignored when the `parallel` feature is off.
    pub parallel: bool,
    /// Vectors reduced against one snapshot of the echelon form.
    pub batch: usize,
}

impl Default for CloseOptions {
    fn default() -> Self {
        CloseOptions {
            max_n: DEFAULT_MAX_N,
            parallel: cfg!(feature = "parallel"),
            batch: 1024,
        }
    }
}

impl CloseOptions {
    pub fn sequential() -> Self {
        CloseOptions {
            parallel: false,
            ..Self::default()
        }
    }
}

fn par_map<T: Sync, U: Send>(
    items: &[T],
    parallel: bool,
    f: impl Fn(&T) -> U + Sync + Send,
) -> Vec<U> {
    #[cfg(feature = "parallel")]
    {
        if parallel {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
    }
    let _ = parallel;
    items.iter().map(f).collect()
}

/// One generator `e_j(b^{(1)}, ..., b^{(n)}) - s_j(b)`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub basis_index: usize,
    pub degree: usize,
    pub element: TensorElement,
}

#[derive(Clone, Debug)]
pub struct RelationSet {
    pub relations: Vec<Relation>,
}

impl RelationSet {
    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }
}

/// `e_j(a^{(1)}, ..., a^{(n)}) - s_j(a)` for `j = 1..n`.
pub fn fundamental_relations(space: &TensorSpace, a: &RingElement) -> Result<Vec<TensorElement>> {
    let n = space.n();
    let ring = space.ring();
    let p = ring.char_poly(a)?;
    let mut e: Vec<TensorElement> = vec![space.zero(); n + 1];
    e[0] = space.one();
    for i in 1..=n {
        let ai = space.embed(a, i)?;
        for j in (1..=i).rev() {
            let term = space.mult(&e[j - 1], &ai)?;
            e[j] = e[j].add(&term);
        }
    }
    Ok((1..=n)
        .map(|j| e[j].sub(&space.one().scale(&p.s(j))))
        .collect())
}

/// The generators on the non-unity basis elements.
pub fn relations(space: &TensorSpace) -> RelationSet {
    let ring = space.ring();
    let mut out = Vec::new();
    for b in 1..ring.rank() {
        let rels = fundamental_relations(space, &ring.basis_element(b))
            .expect("basis element of the ring");
        for (j, element) in rels.into_iter().enumerate() {
            out.push(Relation {
                basis_index: b,
                degree: j + 1,
                element,
            });
        }
    }
    RelationSet { relations: out }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SaturationStats {
    /// Generator products formed.
    pub products: usize,
    /// Worklist rounds.
    pub rounds: usize,
}

fn flip(space: &TensorSpace, v: &SparseVec) -> SparseVec {
    let top = space.dim() - 1;
    v.map_indices(|i| top - i)
}

/// Closes the span of `gens` under multiplication by every `b_k^{(i)}`,
/// which generate `A^{⊗n}` as an algebra. Vectors are in flipped
/// coordinates.
fn saturate_flipped(
    space: &TensorSpace,
    gens: Vec<SparseVec>,
    opts: &CloseOptions,
) -> (Echelon, SaturationStats) {
    let n = space.n();
    let mut ideal = Echelon::new(space.base(), space.dim());
    let mut stats = SaturationStats::default();
    let moves: Vec<(usize, usize)> = (0..n).flat_map(|s| (1..n).map(move |k| (s, k))).collect();
    let mut frontier = gens;
    while !frontier.is_empty() {
        stats.rounds += 1;
        let mut grown: Vec<SparseVec> = Vec::new();
        for chunk in frontier.chunks(opts.batch.max(1)) {
            let reduced = par_map(chunk, opts.parallel, |v| ideal.reduce(v));
            for r in reduced {
                if !r.is_zero() && ideal.insert(&r) {
                    grown.push(r);
                }
            }
        }
        let products = par_map(&grown, opts.parallel, |v| {
            moves
                .iter()
                .map(|&(s, k)| space.mul_generator(v, s, k, true))
                .filter(|p| !p.is_zero())
                .collect::<Vec<_>>()
        });
        frontier = products.into_iter().flatten().collect();
        stats.products += grown.len() * moves.len();
    }
    (ideal, stats)
}

/// A module basis of the ideal generated by `gens`, in canonical form
/// (RREF over a field, row HNF over ℤ), as word-indexed vectors.
pub fn saturate(
    space: &TensorSpace,
    gens: &RelationSet,
    opts: &CloseOptions,
) -> Vec<TensorElement> {
    let start = gens
        .relations
        .iter()
        .map(|r| flip(space, r.element.vec()))
        .collect();
    let (ideal, _) = saturate_flipped(space, start, opts);
    ideal
        .rows_by_pivot()
        .iter()
        .map(|r| space.element(flip(space, r)).unwrap())
        .collect()
}

/// Dimensions of `G(R_n/K)` per content class and per content partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims {
    /// Content `(a_0, ..., a_{n-1})`: how many slots hold each basis index.
    pub by_content: BTreeMap<Vec<usize>, usize>,
    /// Totals over the classes whose content sorts to each partition
    /// `(a_0, a_{(1)}, a_{(2)}, ...)` with `a_0` at least every other count.
    pub by_partition: BTreeMap<Partition, usize>,
    /// Total over classes with some `a_k > a_0`.
    pub off_partition: usize,
}

impl GradedDims {
    pub fn total(&self) -> usize {
        self.by_content.values().sum()
    }
}

/// Partition attached to a content vector, if `a_0` is a largest count.
pub fn content_partition(content: &[usize]) -> Option<Partition> {
    let a0 = content[0];
    if content[1..].iter().any(|&a| a > a0) {
        return None;
    }
    let mut rest: Vec<usize> = content[1..].to_vec();
    rest.sort_unstable_by(|a, b| b.cmp(a));
    let mut parts = vec![a0];
    parts.extend(rest);
    Partition::new(parts).ok()
}

/// `G(A/B)` with its ideal in canonical form.
#[derive(Clone, Debug)]
pub struct ClosureRing {
    space: TensorSpace,
    ideal: Echelon,
    generators: usize,
    stats: SaturationStats,
    torsion: Vec<BigInt>,
    // words (ascending) giving a basis of the quotient, when one exists
    residue_words: Option<Vec<usize>>,
}

/// `close_with` under the default options.
pub fn close(ring: &RankRing) -> Result<ClosureRing> {
    close_with(ring, &CloseOptions::default())
}

pub fn close_with(ring: &RankRing, opts: &CloseOptions) -> Result<ClosureRing> {
    let n = ring.rank();
    if n > opts.max_n {
        return Err(Error::ResourceGuard { n, max: opts.max_n });
    }
    let space = TensorSpace::new(ring);
    let gens = relations(&space);
    let start = gens
        .relations
        .iter()
        .map(|r| flip(&space, r.element.vec()))
        .collect();
    let (ideal, stats) = saturate_flipped(&space, start, opts);
    let (torsion, has_word_basis) = match &ideal {
        Echelon::Field(_) => (Vec::new(), true),
        Echelon::Lattice(l) => {
            if l.unit_pivots() {
                (Vec::new(), true)
            } else {
                let m =
                    SparseMatrix::from_rows(&ideal.rows_by_pivot(), space.dim(), Base::Integers)?;
                let factors = linalg::snf(&m)?;
                (factors.into_iter().filter(|d| !d.is_one()).collect(), false)
            }
        }
    };
    let residue_words = has_word_basis.then(|| {
        let top = space.dim() - 1;
        let mut w: Vec<usize> = ideal
            .non_pivot_columns()
            .into_iter()
            .map(|c| top - c)
            .collect();
        w.sort_unstable();
        w
    });
    Ok(ClosureRing {
        space,
        ideal,
        generators: gens.len(),
        stats,
        torsion,
        residue_words,
    })
}

impl ClosureRing {
    pub fn space(&self) -> &TensorSpace {
        &self.space
    }

    pub fn ring(&self) -> &RankRing {
        self.space.ring()
    }

    pub fn base(&self) -> Base {
        self.space.base()
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn ambient_dim(&self) -> usize {
        self.space.dim()
    }

    pub fn ideal_rank(&self) -> usize {
        self.ideal.rank()
    }

    pub fn free_rank(&self) -> usize {
        self.space.dim() - self.ideal.rank()
    }

    /// Invariant factors greater than 1 of the ideal lattice (ℤ only).
    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn stats(&self) -> SaturationStats {
        self.stats
    }

    /// The canonical ideal basis, as word-indexed vectors.
    pub fn ideal_basis(&self) -> Vec<TensorElement> {
        self.ideal
            .rows_by_pivot()
            .iter()
            .map(|r| self.space.element(flip(&self.space, r)).unwrap())
            .collect()
    }

    /// Non-pivot words, when they form a basis of the quotient: always over
    /// a field, and over ℤ when every pivot of the HNF is 1.
    pub fn residue_basis(&self) -> Option<Vec<TensorWord>> {
        self.residue_words
            .as_ref()
            .map(|w| w.iter().map(|&i| self.space.word(i)).collect())
    }

    fn check(&self, u: &TensorElement) -> Result<()> {
        if u.base() != self.base() || u.vec().max_index().is_some_and(|m| m >= self.ambient_dim()) {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }

    /// Canonical representative of `u` modulo the ideal.
    pub fn reduce(&self, u: &TensorElement) -> Result<TensorElement> {
        self.check(u)?;
        let r = self.ideal.reduce(&flip(&self.space, u.vec()));
        self.space.element(flip(&self.space, &r))
    }

    pub fn ideal_contains(&self, u: &TensorElement) -> Result<bool> {
        self.check(u)?;
        Ok(self.ideal.contains(&flip(&self.space, u.vec())))
    }

    pub fn quotient_mult(&self, u: &TensorElement, v: &TensorElement) -> Result<TensorElement> {
        let p = self.space.mult(u, v)?;
        self.reduce(&p)
    }

    /// Coordinates of `reduce(u)` in the residue basis.
    pub fn residue_coords(&self, u: &TensorElement) -> Result<Vec<Scalar>> {
        let words = self
            .residue_words
            .as_ref()
            .ok_or(if self.torsion.is_empty() {
                Error::NoWordBasis
            } else {
                Error::TorsionPresent
            })?;
        let r = self.reduce(u)?;
        Ok(words
            .iter()
            .map(|&w| {
                r.vec()
                    .get(w)
                    .cloned()
                    .unwrap_or_else(|| self.base().zero())
            })
            .collect())
    }

    /// Whether `σ w ∈ I` for every adjacent transposition `σ` and every
    /// ideal basis vector `w`.
    pub fn is_sn_stable(&self, parallel: bool) -> bool {
        let n = self.n();
        let rows = self.ideal.rows_by_pivot();
        let checks = par_map(&rows, parallel, |w| {
            (0..n.saturating_sub(1)).all(|i| {
                let mut sigma: Vec<usize> = (0..n).collect();
                sigma.swap(i, i + 1);
                self.ideal
                    .contains(&self.space.permute_vec(&sigma, w, true))
            })
        });
        checks.into_iter().all(|ok| ok)
    }

    pub fn sn_act(&self, sigma: &[usize], u: &TensorElement) -> Result<TensorElement> {
        check_permutation(sigma, self.n())?;
        self.space.sn_act(sigma, u)
    }

    /// Structure constants of the quotient in the residue basis:
    /// `out[i][j][k]` is the coefficient of word `k` in `w_i w_j`.
    pub fn structure_constants(&self) -> Result<Vec<Vec<Vec<Scalar>>>> {
        let words = self.residue_basis().ok_or(if self.torsion.is_empty() {
            Error::NoWordBasis
        } else {
            Error::TorsionPresent
        })?;
        let elems: Vec<TensorElement> = words
            .iter()
            .map(|w| self.space.word_element(w).unwrap())
            .collect();
        let r = elems.len();
        let mut out = vec![vec![Vec::new(); r]; r];
        for i in 0..r {
            for j in i..r {
                let c = self.residue_coords(&self.space.mult(&elems[i], &elems[j])?)?;
                out[j][i] = c.clone();
                out[i][j] = c;
            }
        }
        Ok(out)
    }

    /// Gram determinant of the trace form of `G` in the residue basis.
    pub fn closure_discriminant(&self) -> Result<Scalar> {
        let c = self.structure_constants()?;
        let r = c.len();
        let base = self.base();
        let traces: Vec<Scalar> = (0..r)
            .map(|i| (0..r).fold(base.zero(), |acc, k| &acc + &c[i][k][k]))
            .collect();
        let gram: Vec<Vec<Scalar>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        c[i][j]
                            .iter()
                            .zip(&traces)
                            .fold(base.zero(), |acc, (x, t)| &acc + &(x * t))
                    })
                    .collect()
            })
            .collect();
        linalg::det_dense(gram, base)
    }

    /// Traces of multiplication by each residue basis word.
    fn residue_traces(&self) -> Result<Vec<Scalar>> {
        let words = self.residue_basis().ok_or(if self.torsion.is_empty() {
            Error::NoWordBasis
        } else {
            Error::TorsionPresent
        })?;
        let elems: Vec<TensorElement> = words
            .iter()
            .map(|w| self.space.word_element(w).unwrap())
            .collect();
        elems
            .iter()
            .map(|u| {
                let mut t = self.base().zero();
                for (k, w) in elems.iter().enumerate() {
                    t = &t + &self.residue_coords(&self.space.mult(u, w)?)?[k];
                }
                Ok(t)
            })
            .collect()
    }

    /// Gram determinant of the trace form on the given elements. Over a
    /// field this depends on the basis up to a nonzero square, so it is the
    /// way to compare against a discriminant stated for a specific basis.
    pub fn discriminant_of(&self, elems: &[TensorElement]) -> Result<Scalar> {
        let traces = self.residue_traces()?;
        let base = self.base();
        let mut gram = vec![vec![base.zero(); elems.len()]; elems.len()];
        for i in 0..elems.len() {
            for j in i..elems.len() {
                let c = self.residue_coords(&self.space.mult(&elems[i], &elems[j])?)?;
                let t = c
                    .iter()
                    .zip(&traces)
                    .fold(base.zero(), |acc, (x, t)| &acc + &(x * t));
                gram[j][i] = t.clone();
                gram[i][j] = t;
            }
        }
        linalg::det_dense(gram, base)
    }

    /// Quotient dimensions per content class; defined only when every
    /// product of non-unity basis elements vanishes.
    pub fn graded_dims(&self) -> Result<GradedDims> {
        if !self.ring().is_degenerate() {
            return Err(Error::NotDegenerate);
        }
        let words = self.residue_words.as_ref().ok_or(Error::NoWordBasis)?;
        let n = self.n();
        let mut by_content: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for w in 0..self.ambient_dim() {
            by_content.entry(self.content(w)).or_insert(0);
        }
        for &w in words {
            *by_content.get_mut(&self.content(w)).unwrap() += 1;
        }
        let mut by_partition = BTreeMap::new();
        let mut off_partition = 0;
        for (content, dim) in &by_content {
            debug_assert_eq!(content.len(), n);
            match content_partition(content) {
                Some(p) => *by_partition.entry(p).or_insert(0) += dim,
                None => off_partition += dim,
            }
        }
        Ok(GradedDims {
            by_content,
            by_partition,
            off_partition,
        })
    }

    fn content(&self, word: usize) -> Vec<usize> {
        let n = self.n();
        let mut c = vec![0; n];
        for s in 0..n {
            c[self.space.digit(word, s)] += 1;
        }
        c
    }

    /// Whether the given words reduce to a basis of the quotient: over a
    /// field, independent and `free_rank` many; over ℤ, a unimodular
    /// change of basis from the residue basis.
    pub fn is_residue_basis(&self, words: &[TensorWord]) -> Result<bool> {
        if words.len() != self.free_rank() {
            return Ok(false);
        }
        let rows = words
            .iter()
            .map(|w| self.residue_coords(&self.space.word_element(w)?))
            .collect::<Result<Vec<_>>>()?;
        let d = linalg::det_dense(rows, self.base())?;
        Ok(d.is_unit())
    }

    /// The same closure reduced modulo a prime, for comparison with
    /// `close(A mod p)`: `free_rank + #{invariant factors divisible by p}`.
    pub fn predicted_dim_mod(&self, p: u64) -> usize {
        let p = BigInt::from(p);
        self.free_rank()
            + self
                .torsion
                .iter()
                .filter(|d| (*d % &p) == BigInt::from(0))
                .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn rank_one_closure_is_the_base() {
        for base in [Base::Integers, Base::Rationals, Base::PrimeField(3)] {
            let g = close(&gallery::make_split(base, 1)).unwrap();
            assert_eq!(g.free_rank(), 1);
            assert_eq!(g.ideal_rank(), 0);
        }
    }

    #[test]
    fn split_rank_two() {
        let g = close(&gallery::make_split(Base::Integers, 2)).unwrap();
        assert_eq!(g.ambient_dim(), 4);
        assert_eq!(g.ideal_rank(), 2);
        assert_eq!(g.free_rank(), 2);
        assert!(g.torsion().is_empty());
    }

    #[test]
    fn relation_shapes() {
        let z = Base::Integers;
        let s = TensorSpace::new(&gallery::make_split(z, 2));
        let rels = relations(&s);
        assert_eq!(rels.len(), 2);
        // e2^(1) + e2^(2) - 1
        let want = s
            .embed(&s.ring().basis_element(1), 1)
            .unwrap()
            .add(&s.embed(&s.ring().basis_element(1), 2).unwrap())
            .sub(&s.one());
        assert_eq!(rels.relations[0].element, want);
        let r4 = TensorSpace::new(&gallery::make_degenerate(Base::Rationals, 4).unwrap());
        assert_eq!(relations(&r4).len(), 12);
    }

    #[test]
    fn relations_reduce_to_zero_and_unit_survives() {
        let z = Base::Integers;
        let ring = gallery::make_monogenic_i64(z, &[-1, -1, 0, 1]).unwrap();
        let g = close(&ring).unwrap();
        for r in relations(g.space()).relations {
            assert!(g.ideal_contains(&r.element).unwrap());
            assert!(g.reduce(&r.element).unwrap().is_zero());
        }
        let one = g.space().one();
        assert_eq!(g.reduce(&one).unwrap(), one);
    }

    #[test]
    fn resource_guard() {
        let ring = gallery::make_split(Base::Integers, 3);
        let opts = CloseOptions {
            max_n: 2,
            ..CloseOptions::default()
        };
        assert!(matches!(
            close_with(&ring, &opts),
            Err(Error::ResourceGuard { n: 3, max: 2 })
        ));
    }

    #[test]
    fn graded_needs_degenerate() {
        let g = close(&gallery::make_split(Base::Rationals, 3)).unwrap();
        assert!(matches!(g.graded_dims(), Err(Error::NotDegenerate)));
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let ring = gallery::make_cubic(
            Base::Integers,
            [1, 2, -1, 3].map(|v| Base::Integers.from_i64(v)),
        );
        let a = close_with(&ring, &CloseOptions::default()).unwrap();
        let b = close_with(&ring, &CloseOptions::sequential()).unwrap();
        assert_eq!(a.ideal_basis(), b.ideal_basis());
    }
}
