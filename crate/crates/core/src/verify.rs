//! The verification suites run by `snclosure verify` and the acceptance
//! test: golden numbers (criteria 1-8) and property checks (criterion 9).
//! Every comparison is exact.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::closure::{close, close_with, CloseOptions, ClosureRing};
use crate::error::Result;
use crate::gallery;
use crate::ncpoly;
use crate::partition::{self, Partition};
use crate::ring::{RankRing, RingElement};
use crate::scalar::{Base, Scalar};
use crate::tensor::{permutations, TensorElement, TensorSpace, TensorWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Paper,
    Properties,
    All,
}

impl Suite {
    pub fn criteria(self) -> Vec<u8> {
        match self {
            Suite::Paper => (1..=8).collect(),
            Suite::Properties => vec![9],
            Suite::All => (1..=9).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    /// What was observed, and what was expected where they differ.
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] criterion {}: {} ({:.2} s, limit {} s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs(),
            self.detail
        )
    }
}

/// Outcome of the individual comparisons inside one criterion.
#[derive(Default)]
struct Tally {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn finish(self, id: u8, title: &'static str, start: Instant, limit: Duration) -> Check {
        let elapsed = start.elapsed();
        let mut failures = self.failures;
        if elapsed > limit {
            failures.push(format!("took {:.1} s", elapsed.as_secs_f64()));
        }
        let passed = failures.is_empty();
        let mut parts = self.notes;
        if !passed {
            parts.push(format!("mismatches: {}", failures.join("; ")));
        }
        Check {
            id,
            title,
            passed,
            detail: parts.join("; "),
            elapsed,
            limit,
        }
    }
}

fn errored(id: u8, title: &'static str, start: Instant, limit: Duration, e: crate::Error) -> Check {
    Check {
        id,
        title,
        passed: false,
        detail: format!("error: {e}"),
        elapsed: start.elapsed(),
        limit,
    }
}

pub fn run(suite: Suite) -> Vec<Check> {
    suite.criteria().into_iter().map(criterion).collect()
}

pub fn criterion(id: u8) -> Check {
    type Body = fn(&mut Tally) -> Result<()>;
    let (title, limit, body): (&'static str, u64, Body) = match id {
        1 => ("degenerate dimension ladder", 600, degenerate_ladder),
        2 => ("split rings", 10, split_rings),
        3 => ("monogenic rings", 60, monogenic_rings),
        4 => ("cubic rings", 30, cubic_rings),
        5 => ("torsion example", 120, torsion_example),
        6 => ("representation tables", 1, representation_tables),
        7 => ("noncommutative factorization suite", 10, desmit_suite),
        8 => ("grading of G(R_4)", 10, grading),
        9 => ("property suites", 300, properties),
        _ => panic!("no criterion {id}"),
    };
    let limit = Duration::from_secs(limit);
    let start = Instant::now();
    let mut tally = Tally::default();
    match body(&mut tally) {
        Ok(()) => tally.finish(id, title, start, limit),
        Err(e) => errored(id, title, start, limit, e),
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn int(v: i64) -> Scalar {
    Base::Integers.from_i64(v)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Published values for dim G(R_n/Q), n = 1..5.
pub const DEGENERATE_LADDER: [usize; 5] = [1, 2, 6, 32, 230];

fn degenerate_ladder(t: &mut Tally) -> Result<()> {
    let mut observed = Vec::new();
    for n in 1..=5 {
        let g = close(&gallery::make_degenerate(Base::Rationals, n)?)?;
        observed.push(g.free_rank());
    }
    t.note(format!("dim G(R_n/QQ), n=1..5: {}", join(&observed)));
    t.expect(observed == DEGENERATE_LADDER, || {
        format!("expected {}", join(&DEGENERATE_LADDER))
    });
    let p6 = partition::predicted_dimension(6);
    t.note(format!("predicted n=6: {p6}"));
    t.expect(p6 == 1857, || {
        format!("predicted n=6 is {p6}, expected 1857")
    });
    Ok(())
}

/// `e_0 = 1 - e_2 - ... - e_n` (the implicit first idempotent), then the
/// basis idempotents.
fn split_idempotents(ring: &RankRing) -> Vec<RingElement> {
    let n = ring.rank();
    let mut e0 = ring.one();
    for k in 1..n {
        e0 = ring
            .add(
                &e0,
                &ring
                    .scale(&ring.base().from_i64(-1), &ring.basis_element(k))
                    .unwrap(),
            )
            .unwrap();
    }
    std::iter::once(e0)
        .chain((1..n).map(|k| ring.basis_element(k)))
        .collect()
}

/// `e_σ = prod_i e_{σ(i)}^{(i)}`.
fn coset_idempotent(
    space: &TensorSpace,
    e: &[RingElement],
    sigma: &[usize],
) -> Result<TensorElement> {
    let mut acc = space.one();
    for (i, &s) in sigma.iter().enumerate() {
        acc = space.mult(&acc, &space.embed(&e[s], i + 1)?)?;
    }
    Ok(acc)
}

fn split_rings(t: &mut Tally) -> Result<()> {
    for n in 1..=4 {
        let ring = gallery::make_split(Base::Integers, n);
        let g = close(&ring)?;
        let space = g.space();
        t.expect(g.free_rank() == factorial(n), || {
            format!("n={n}: free rank {}", g.free_rank())
        });
        t.expect(g.torsion().is_empty(), || {
            format!("n={n}: torsion {}", join(g.torsion()))
        });
        let perms: Vec<TensorWord> = permutations(n).into_iter().map(TensorWord::new).collect();
        t.expect(g.is_residue_basis(&perms)?, || {
            format!("n={n}: permutation words are not a residue basis")
        });
        let e = split_idempotents(&ring);
        let es: Vec<TensorElement> = permutations(n)
            .iter()
            .map(|s| coset_idempotent(space, &e, s))
            .collect::<Result<_>>()?;
        let mut orthogonal = true;
        for (i, a) in es.iter().enumerate() {
            for (j, b) in es.iter().enumerate() {
                let p = space.mult(a, b)?;
                let target = if i == j { p.sub(a) } else { p };
                orthogonal &= g.ideal_contains(&target)?;
            }
        }
        t.expect(orthogonal, || {
            format!("n={n}: e_sigma are not orthogonal idempotents")
        });
        let sum = es.iter().fold(space.zero(), |acc, x| acc.add(x));
        t.expect(g.ideal_contains(&sum.sub(&space.one()))?, || {
            format!("n={n}: sum of e_sigma is not 1")
        });
        let d = g.closure_discriminant()?;
        t.expect(d.is_one(), || format!("n={n}: closure discriminant {d}"));
    }
    t.note("n=1..4: free rank n!, no torsion, permutation words a basis, n! orthogonal idempotents, disc 1");
    Ok(())
}

/// Words `prod x_i^{e_i}` with `0 <= e_i < i`.
pub fn monomial_words(n: usize) -> Vec<TensorWord> {
    let mut out = vec![Vec::new()];
    for i in 0..n {
        out = out
            .into_iter()
            .flat_map(|w: Vec<usize>| {
                (0..=i).map(move |e| {
                    let mut v = w.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(TensorWord::new).collect()
}

fn monogenic_rings(t: &mut Tally) -> Result<()> {
    // (coefficients from the constant term, polynomial discriminant)
    let cases: [(&[i64], i64); 3] = [
        (&[-1, -1, 1], 5),
        (&[-1, -1, 0, 1], -23),
        (&[-1, -1, 0, 0, 1], -283),
    ];
    let mut seen = Vec::new();
    for (coeffs, disc) in cases {
        let ring = gallery::make_monogenic_i64(Base::Integers, coeffs)?;
        let n = ring.rank();
        let g = close(&ring)?;
        t.expect(g.free_rank() == factorial(n), || {
            format!("n={n}: free rank {}", g.free_rank())
        });
        t.expect(g.torsion().is_empty(), || {
            format!("n={n}: torsion {}", join(g.torsion()))
        });
        t.expect(g.is_residue_basis(&monomial_words(n))?, || {
            format!("n={n}: monomial words not a basis")
        });
        t.expect(ring.discriminant() == int(disc), || {
            format!("n={n}: Disc(A) = {}", ring.discriminant())
        });
        let e = (factorial(n) / 2) as u32;
        let d = g.closure_discriminant()?;
        t.expect(d == int(disc).pow(e), || {
            format!("n={n}: Disc(G) = {d}, expected ({disc})^{e}")
        });
        seen.push(format!("n={n} Disc(G)=({disc})^{e}"));
    }
    t.note(seen.join(", "));
    Ok(())
}

/// Discriminant of the binary cubic form `a x^3 + b x^2 y + c x y^2 + d y^3`.
pub fn cubic_form_discriminant(abcd: &[Scalar; 4]) -> Scalar {
    let [a, b, c, d] = abcd;
    let base = a.base();
    let k = |v: i64| base.from_i64(v);
    let terms = [
        &(b * b) * &(c * c),
        &(&k(-4) * a) * &c.pow(3),
        &(&k(-4) * &b.pow(3)) * d,
        &(&k(-27) * &(a * a)) * &(d * d),
        &(&(&k(18) * a) * &(b * c)) * d,
    ];
    terms.into_iter().fold(base.zero(), |acc, x| &acc + &x)
}

/// The linear relations among `x_i, y_i` that reduce the 9 products
/// `{1, x_1, y_1} {1, x_2, y_2}` to the six-element basis.
pub fn cubic_identities(space: &TensorSpace, abcd: &[Scalar; 4]) -> Result<Vec<TensorElement>> {
    let ring = space.ring();
    let [a, b, c, d] = abcd;
    let x = |i| space.embed(&ring.basis_element(1), i);
    let y = |i| space.embed(&ring.basis_element(2), i);
    let one = space.one();
    let (x1, x2, x3, y1, y2, y3) = (x(1)?, x(2)?, x(3)?, y(1)?, y(2)?, y(3)?);
    let cst = |s: &Scalar| one.scale(s);
    let x3_val = cst(b).sub(&x1).sub(&x2);
    let y3_val = cst(c).sub(&y1).sub(&y2);
    let y1x2_val = cst(&(&(b * c) - &(a * d)))
        .sub(&y3_val.scale(b))
        .sub(&x3_val.scale(c))
        .sub(&space.mult(&x1, &y2)?);
    Ok(vec![
        x3.sub(&x3_val),
        y3.sub(&y3_val),
        space.mult(&x1, &x2)?.sub(&y3_val.scale(a)),
        space.mult(&y1, &y2)?.sub(&x3_val.scale(d)),
        space.mult(&y1, &x2)?.sub(&y1x2_val),
    ])
}

/// `1, x_1, y_1, x_2, y_2, x_1 y_2`.
pub fn cubic_basis_words() -> Vec<TensorWord> {
    [
        [0, 0, 0],
        [1, 0, 0],
        [2, 0, 0],
        [0, 1, 0],
        [0, 2, 0],
        [1, 2, 0],
    ]
    .into_iter()
    .map(|d| TensorWord::new(d.to_vec()))
    .collect()
}

fn cubic_rings(t: &mut Tally) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut count = 0;
    for base in [Base::Rationals, Base::prime_field(7)?] {
        let mut done = 0;
        while done < 10 {
            use rand::Rng;
            let abcd: [Scalar; 4] = std::array::from_fn(|_| base.from_i64(rng.gen_range(-3..=3)));
            let df = cubic_form_discriminant(&abcd);
            if df.is_zero() {
                continue;
            }
            done += 1;
            let label = format!("{base} ({})", join(&abcd));
            let ring = gallery::make_cubic(base, abcd.clone());
            let g = close(&ring)?;
            t.expect(g.free_rank() == 6, || {
                format!("{label}: dim {}", g.free_rank())
            });
            t.expect(ring.discriminant() == df, || {
                format!("{label}: Disc(A) != form discriminant")
            });
            t.expect(g.is_residue_basis(&cubic_basis_words())?, || {
                format!("{label}: six-element basis fails")
            });
            for (k, rel) in cubic_identities(g.space(), &abcd)?.iter().enumerate() {
                t.expect(g.ideal_contains(rel)?, || {
                    format!("{label}: identity {} fails", k + 1)
                });
            }
            let basis: Vec<TensorElement> = cubic_basis_words()
                .iter()
                .map(|w| g.space().word_element(w))
                .collect::<Result<_>>()?;
            let d = g.discriminant_of(&basis)?;
            t.expect(d == df.pow(3), || {
                format!("{label}: Disc(G) = {d}, Disc(f)^3 = {}", df.pow(3))
            });
            count += 1;
        }
    }
    t.note(format!(
        "{count} cubic rings over QQ and GF(7): dim 6, basis, identities, Disc(G) = Disc(f)^3"
    ));
    Ok(())
}

fn torsion_example(t: &mut Tally) -> Result<()> {
    let ring = gallery::make_imprimitive_quartic_order();
    let g = close(&ring)?;
    let torsion: Vec<BigInt> = g.torsion().to_vec();
    t.note(format!(
        "free rank {}, invariant factors [{}]",
        g.free_rank(),
        join(&torsion)
    ));
    t.expect(g.free_rank() == 24, || {
        format!("free rank {}", g.free_rank())
    });
    t.expect(torsion == vec![BigInt::from(2); 8], || {
        "expected invariant factors [2,2,2,2,2,2,2,2]".into()
    });
    let reduced = close(&ring.change_base(Base::prime_field(2)?)?)?;
    t.note(format!("dim over GF(2) {}", reduced.free_rank()));
    t.expect(reduced.free_rank() == 32, || {
        format!("dim over GF(2) is {}", reduced.free_rank())
    });
    t.expect(reduced.free_rank() == g.predicted_dim_mod(2), || {
        "GF(2) dimension disagrees with the Z structure".into()
    });
    let two = int(2);
    let mut not_doubled = Vec::new();
    for i in 1..=4 {
        for j in i + 1..=4 {
            for (k, e) in gallery::imprimitive_torsion_elements(g.space(), i, j)?
                .iter()
                .enumerate()
            {
                t.expect(!g.ideal_contains(e)?, || {
                    format!("row {} for ({i},{j}) already in I", k + 1)
                });
                if !g.ideal_contains(&e.scale(&two))? {
                    not_doubled.push(format!("row {} ({i},{j})", k + 1));
                }
            }
        }
    }
    if !not_doubled.is_empty() {
        let n = not_doubled.len();
        t.expect(false, || {
            format!("{n} doubled elements not in I: {}", not_doubled.join(" "))
        });
    }
    Ok(())
}

/// One table row: `(μ, dim V_μ, [(λ, m_λ, K_λμ)])`.
pub type TableRow = (Vec<usize>, u64, Vec<(Vec<usize>, u64, u64)>);

/// The printed tables for n = 3 and 4.
pub fn golden_table(n: usize) -> Option<Vec<TableRow>> {
    match n {
        3 => Some(vec![
            (vec![3], 1, vec![(vec![3], 1, 1)]),
            (vec![2, 1], 2, vec![(vec![2, 1], 2, 1)]),
            (vec![1, 1, 1], 1, vec![(vec![1, 1, 1], 1, 1)]),
        ]),
        4 => Some(vec![
            (vec![4], 1, vec![(vec![4], 1, 1)]),
            (vec![3, 1], 3, vec![(vec![3, 1], 3, 1)]),
            (
                vec![2, 2],
                2,
                vec![(vec![2, 2], 3, 1), (vec![2, 1, 1], 3, 1)],
            ),
            (vec![2, 1, 1], 3, vec![(vec![2, 1, 1], 3, 1)]),
            (vec![1, 1, 1, 1], 1, vec![(vec![1, 1, 1, 1], 1, 1)]),
        ]),
        _ => None,
    }
}

fn table_cells(t: &partition::DecompositionTable) -> Vec<TableRow> {
    t.rows
        .iter()
        .map(|r| {
            (
                r.mu.parts().to_vec(),
                r.dim,
                r.contributions
                    .iter()
                    .map(|c| (c.lambda.parts().to_vec(), c.m_lambda, c.kostka))
                    .collect(),
            )
        })
        .collect()
}

fn representation_tables(t: &mut Tally) -> Result<()> {
    for n in [3, 4] {
        let table = partition::predicted_decomposition(n);
        let golden = golden_table(n).expect("golden table");
        t.expect(table_cells(&table) == golden, || {
            format!("n={n}: table cells differ")
        });
    }
    let t3 = partition::predicted_decomposition(3);
    t.expect(t3.rows.iter().all(|r| r.multiplicity() == r.dim), || {
        "n=3 is not the regular representation".into()
    });
    let t4 = partition::predicted_decomposition(4);
    let m22 = t4
        .row(&Partition::new(vec![2, 2])?)
        .map(|r| r.multiplicity());
    t.expect(m22 == Some(6), || {
        format!("multiplicity of V_(2,2) is {m22:?}")
    });
    t.expect(t3.total() == 6 && t4.total() == 32, || {
        format!("totals {} and {}", t3.total(), t4.total())
    });
    t.note("n=3 and n=4 tables match cell for cell; V_(2,2) multiplicity 6");
    Ok(())
}

/// The listed values of `f_0, ..., f_4`.
pub const DESMIT_LISTED: [&str; 5] = [
    "1",
    "X + Y",
    "X^2 + YX + Y^2",
    "X^3 + XYX + XY^2 + YX^2 + Y^2X + Y^3",
    "X^4 + XYX^2 + XY^2X + XY^3 + YX^3 + Y^2X^2 + Y^3X + Y^4",
];

fn desmit_suite(t: &mut Tally) -> Result<()> {
    for (k, f) in ncpoly::desmit_sequence(4)?.iter().enumerate() {
        let s = f.to_string();
        t.expect(s == DESMIT_LISTED[k], || format!("f_{k} = {s}"));
    }
    for m in 0..=10 {
        t.expect(ncpoly::verify_factorization(m)?, || {
            format!("factorization fails at m={m}")
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let bases = [Base::Integers, Base::prime_field(5)?, Base::prime_field(7)?];
    for i in 0..50 {
        let ring = gallery::random_ring(bases[i % 3], 2 + i % 3, &mut rng);
        let x = gallery::random_element(&ring, &mut rng);
        let y = gallery::random_element(&ring, &mut rng);
        t.expect(ncpoly::charpoly_product_check(&ring, &x, &y)?, || {
            format!("determinant identity fails on input {i}")
        });
        t.expect(ncpoly::s_addition_check(&ring, &x, &y)?, || {
            format!("s addition fails on input {i}")
        });
    }
    t.note(
        "f_0..f_4 as listed; factorization through m=10; 50 random determinant and addition checks",
    );
    Ok(())
}

/// Dimensions of the pieces of `G(R_4)` by content `(a_0, a_x, a_y, a_z)`:
/// 1 for the base, 3 for each `T`, 2 for each `U`, 5 for each `V`, 1 for `W`.
pub fn r4_content_dims(content: &[usize]) -> usize {
    let mut rest = content[1..].to_vec();
    rest.sort_unstable_by(|a, b| b.cmp(a));
    match (content[0], rest.as_slice()) {
        (4, [0, 0, 0]) => 1,
        (3, [1, 0, 0]) => 3,
        (2, [2, 0, 0]) => 2,
        (2, [1, 1, 0]) => 5,
        (1, [1, 1, 1]) => 1,
        _ => 0,
    }
}

fn grading(t: &mut Tally) -> Result<()> {
    let g = close(&gallery::make_degenerate(Base::Rationals, 4)?)?;
    let dims = g.graded_dims()?;
    t.expect(dims.total() == 32, || format!("total {}", dims.total()));
    for (content, &dim) in &dims.by_content {
        let want = r4_content_dims(content);
        t.expect(dim == want, || {
            format!("content {content:?}: {dim}, expected {want}")
        });
    }
    t.expect(dims.off_partition == 0, || {
        format!(
            "{} dimensions off the partition classes",
            dims.off_partition
        )
    });
    for lambda in partition::partitions(4) {
        let want = (partition::m_lambda(&lambda) * partition::quotient_dim(&lambda)?) as usize;
        let got = dims.by_partition.get(&lambda).copied().unwrap_or(0);
        t.expect(got == want, || {
            format!("lambda {lambda}: {got}, expected {want}")
        });
    }
    t.note(
        "total 32 = 1 + 3*3 + 3*2 + 3*5 + 1, per-lambda sums match m_lambda * quotient dimension",
    );
    Ok(())
}

fn gallery_rings() -> Result<Vec<RankRing>> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push(gallery::make_split(Base::Integers, n));
        out.push(gallery::make_degenerate(Base::Rationals, n)?);
    }
    out.push(gallery::make_monogenic_i64(Base::Integers, &[-1, -1, 1])?);
    out.push(gallery::make_monogenic_i64(
        Base::Integers,
        &[-1, -1, 0, 1],
    )?);
    out.push(gallery::make_monogenic_i64(
        Base::Integers,
        &[-1, -1, 0, 0, 1],
    )?);
    out.push(gallery::make_cubic(Base::Integers, [1, 0, 0, 1].map(int)));
    out.push(gallery::make_imprimitive_quartic_order());
    out.push(gallery::make_finite_field(2, 3)?);
    out.push(gallery::make_finite_field(3, 2)?);
    out.push(gallery::make_finite_field(5, 4)?);
    Ok(out)
}

fn properties(t: &mut Tally) -> Result<()> {
    let opts = CloseOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut checked_rings = 0;
    let mut stable = 0;
    for ring in gallery_rings()? {
        for k in 0..ring.rank() {
            t.expect(ring.cayley_hamilton(&ring.basis_element(k))?, || {
                format!("Cayley-Hamilton fails on {:?}", ring.names())
            });
        }
        let r = gallery::random_element(&ring, &mut rng);
        t.expect(ring.cayley_hamilton(&r)?, || {
            format!("Cayley-Hamilton fails on {:?}", ring.names())
        });
        let g = close_with(&ring, &opts)?;
        t.expect(g.is_sn_stable(opts.parallel), || {
            format!("ideal of {:?} is not S_n-stable", ring.names())
        });
        checked_rings += 1;
        stable += 1;
    }
    let mut sampled = 0;
    for base in [Base::Rationals, Base::prime_field(5)?] {
        let max: Vec<usize> = (1..=4)
            .map(|n| close(&gallery::make_degenerate(base, n).unwrap()).map(|g| g.free_rank()))
            .collect::<Result<_>>()?;
        for i in 0..50 {
            let n = 1 + i % 4;
            let ring = gallery::random_ring(base, n, &mut rng);
            let g: ClosureRing = close_with(&ring, &opts)?;
            let d = g.free_rank();
            t.expect(d <= max[n - 1], || {
                format!(
                    "{base} sample {i}: dim {d} exceeds dim G(R_{n}) = {}",
                    max[n - 1]
                )
            });
            t.expect(d >= factorial(n), || {
                format!("{base} sample {i}: dim {d} below {n}!")
            });
            t.expect(g.is_sn_stable(opts.parallel), || {
                format!("{base} sample {i}: ideal not S_n-stable")
            });
            stable += 1;
            sampled += 1;
        }
    }
    for n in 1..=7 {
        let ps = partition::partitions(n);
        for lambda in &ps {
            t.expect(partition::youngs_rule_check(lambda)?, || {
                format!("Young's rule fails for {lambda}")
            });
            for mu in &ps {
                if partition::kostka(lambda, mu)? > 0 {
                    t.expect(partition::dominates(mu, lambda)?, || {
                        format!("K({lambda},{mu}) > 0 without dominance")
                    });
                }
            }
        }
    }
    for n in 1..=8 {
        let sum: u64 = partition::partitions(n)
            .iter()
            .map(|mu| partition::hook_dim(mu).unwrap().pow(2))
            .sum();
        t.expect(sum == factorial(n) as u64, || {
            format!("sum of squared dimensions for n={n} is {sum}")
        });
    }
    t.note(format!(
        "Cayley-Hamilton on {checked_rings} gallery rings; {stable} ideals S_n-stable; {sampled} random rings within [n!, dim G(R_n)]; \
         Kostka dominance and Young's rule n<=7; sum of squares n<=8"
    ));
    Ok(())
}
