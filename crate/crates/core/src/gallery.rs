//! Constructors for the example rings, plus seeded random rings for the
//! property suites.

use rand::Rng;

use crate::error::{Error, Result};
use crate::ring::{unit_vec, RankRing, RingElement};
use crate::scalar::{Base, Scalar};
use crate::tensor::{TensorElement, TensorSpace, TensorWord};

fn zero_table(n: usize, base: Base) -> Vec<Vec<Vec<Scalar>>> {
    vec![vec![vec![base.zero(); n]; n]; n]
}

fn with_unity(mut table: Vec<Vec<Vec<Scalar>>>, base: Base) -> Vec<Vec<Vec<Scalar>>> {
    let n = table.len();
    for j in 0..n {
        table[0][j] = unit_vec(n, j, base);
        table[j][0] = unit_vec(n, j, base);
    }
    table
}

fn build(base: Base, names: Vec<String>, table: Vec<Vec<Vec<Scalar>>>) -> RankRing {
    RankRing::validate(base, names, table).expect("gallery tables are valid")
}

/// `B^n` with basis `1, e2, ..., en`; `e1 = 1 - e2 - ... - en` is implicit.
pub fn make_split(base: Base, n: usize) -> RankRing {
    assert!(n > 0, "rank must be positive");
    let mut t = with_unity(zero_table(n, base), base);
    for i in 1..n {
        t[i][i] = unit_vec(n, i, base);
    }
    let names = std::iter::once("1".to_string())
        .chain((2..=n).map(|i| format!("e{i}")))
        .collect();
    build(base, names, t)
}

/// `B[t]/f` with basis `1, t, ..., t^{n-1}`. Coefficients run from the
/// constant term up; the last one must be 1.
pub fn make_monogenic(base: Base, coeffs: &[Scalar]) -> Result<RankRing> {
    let n = coeffs
        .len()
        .checked_sub(1)
        .filter(|&n| n > 0)
        .ok_or(Error::NonMonic)?;
    if let Some(s) = coeffs.iter().find(|s| s.base() != base) {
        return Err(Error::WrongBase {
            expected: base,
            found: s.base(),
        });
    }
    if !coeffs[n].is_one() {
        return Err(Error::NonMonic);
    }
    // powers[k] = t^k reduced mod f, for k < 2n - 1
    let mut powers: Vec<Vec<Scalar>> = (0..n).map(|k| unit_vec(n, k, base)).collect();
    for k in n..2 * n - 1 {
        let prev = &powers[k - 1];
        let top = prev[n - 1].clone();
        let mut next = vec![base.zero(); n];
        next[1..n].clone_from_slice(&prev[..n - 1]);
        for i in 0..n {
            next[i] = &next[i] - &(&top * &coeffs[i]);
        }
        powers.push(next);
    }
    let mut t = zero_table(n, base);
    for i in 0..n {
        for j in 0..n {
            t[i][j] = powers[i + j].clone();
        }
    }
    let names = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        })
        .collect();
    Ok(build(base, names, t))
}

pub fn make_monogenic_i64(base: Base, coeffs: &[i64]) -> Result<RankRing> {
    let c: Vec<Scalar> = coeffs.iter().map(|v| base.from_i64(*v)).collect();
    make_monogenic(base, &c)
}

/// The rank-3 ring with basis `1, x, y` and
/// `xy = ad, x^2 = -ac + bx + ay, y^2 = -bd + dx + cy`.
pub fn make_cubic(base: Base, abcd: [Scalar; 4]) -> RankRing {
    let [a, b, c, d] = abcd;
    let z = base.zero();
    let mut t = with_unity(zero_table(3, base), base);
    t[1][1] = vec![-(&a * &c), b.clone(), a.clone()];
    t[2][2] = vec![-(&b * &d), d.clone(), c.clone()];
    t[1][2] = vec![&a * &d, z.clone(), z];
    t[2][1] = t[1][2].clone();
    build(base, vec!["1".into(), "x".into(), "y".into()], t)
}

/// `K[x_1, ..., x_{n-1}] / (x_1, ..., x_{n-1})^2`.
pub fn make_degenerate(base: Base, n: usize) -> Result<RankRing> {
    if !base.is_field() {
        return Err(Error::DegenerateNeedsField(base));
    }
    assert!(n > 0, "rank must be positive");
    let t = with_unity(zero_table(n, base), base);
    let names = std::iter::once("1".to_string())
        .chain((1..n).map(|i| format!("x{i}")))
        .collect();
    Ok(build(base, names, t))
}

/// The order `Z + 2 Z[t]/(t^4 - 2)` with basis `1, X = 2t, Y = 2t^2, Z = 2t^3`.
pub fn make_imprimitive_quartic_order() -> RankRing {
    let z = Base::Integers;
    let v = |c: [i64; 4]| c.iter().map(|x| z.from_i64(*x)).collect::<Vec<_>>();
    let mut t = with_unity(zero_table(4, z), z);
    t[1][1] = v([0, 0, 2, 0]);
    t[1][2] = v([0, 0, 0, 2]);
    t[1][3] = v([8, 0, 0, 0]);
    t[2][2] = v([8, 0, 0, 0]);
    t[2][3] = v([0, 4, 0, 0]);
    t[3][3] = v([0, 0, 4, 0]);
    for i in 1..4 {
        for j in 1..i {
            t[i][j] = t[j][i].clone();
        }
    }
    build(z, ["1", "X", "Y", "Z"].map(String::from).to_vec(), t)
}

/// The four elements of `R^{⊗4}` obtained by rewriting
/// `t_i^3 + t_i^2 t_j + t_i t_j^2 + t_j^3` (times `2 t_i^k t_j^l`) in the
/// basis `1, X, Y, Z` of the imprimitive order, for slots `1 <= i < j <= 4`.
pub fn imprimitive_torsion_elements(
    space: &TensorSpace,
    i: usize,
    j: usize,
) -> Result<Vec<TensorElement>> {
    if space.n() != 4 || !(1 <= i && i < j && j <= 4) {
        return Err(Error::InvalidArgument(format!(
            "slots {i}, {j} in a rank {} tensor space",
            space.n()
        )));
    }
    let z = space.base();
    let term = |c: i64, bi: usize, bj: usize| -> Result<TensorElement> {
        let mut d = vec![0; 4];
        d[i - 1] = bi;
        d[j - 1] = bj;
        Ok(space
            .word_element(&TensorWord::new(d))?
            .scale(&z.from_i64(c)))
    };
    let sum = |terms: [(i64, usize, usize); 4]| -> Result<TensorElement> {
        let mut acc = space.zero();
        for (c, bi, bj) in terms {
            acc = acc.add(&term(c, bi, bj)?);
        }
        Ok(acc)
    };
    Ok(vec![
        sum([(2, 3, 0), (1, 2, 1), (1, 1, 2), (2, 0, 3)])?,
        sum([(8, 0, 0), (1, 3, 1), (1, 2, 2), (1, 1, 3)])?,
        sum([(4, 0, 1), (1, 3, 2), (1, 2, 3), (4, 1, 0)])?,
        sum([(4, 0, 2), (1, 3, 3), (4, 2, 0), (2, 1, 1)])?,
    ])
}

/// The lexicographically first monic irreducible polynomial of degree `n`
/// over `F_p`, coefficients from the constant term up.
pub fn irreducible_poly(p: u64, n: usize) -> Result<Vec<u64>> {
    Base::prime_field(p)?;
    assert!(n > 0, "degree must be positive");
    let count = p.checked_pow(n as u32).expect("search space fits in u64");
    for code in 0..count {
        let mut f = digits(code, p, n);
        f.push(1);
        if is_irreducible(&f, p) {
            return Ok(f);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn digits(mut code: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len + 1);
    for _ in 0..len {
        out.push(code % p);
        code /= p;
    }
    out
}

fn poly_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    // g monic
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        for (i, gi) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - lead * gi % p) % p;
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = f.len() - 1;
    for d in 1..=n / 2 {
        for code in 0..p.pow(d as u32) {
            let mut g = digits(code, p, d);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// `F_{p^n}` as `F_p[t]/f` for the first irreducible `f` of degree `n`.
pub fn make_finite_field(p: u64, n: usize) -> Result<RankRing> {
    let base = Base::prime_field(p)?;
    let f = irreducible_poly(p, n)?;
    let c: Vec<Scalar> = f.iter().map(|v| base.from_i64(*v as i64)).collect();
    make_monogenic(base, &c)
}

/// `A x C` with basis `(1,1)`, `(a_i, 0)`, `(0, 1)`, `(0, c_j)`.
pub fn make_product(a: &RankRing, c: &RankRing) -> Result<RankRing> {
    let base = a.base();
    if c.base() != base {
        return Err(Error::WrongBase {
            expected: base,
            found: c.base(),
        });
    }
    let (k, m) = (a.rank(), c.rank());
    let n = k + m;
    // coordinates of (alpha, gamma) in the product basis
    let embed = |alpha: &[Scalar], gamma: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![base.zero(); n];
        out[0] = alpha[0].clone();
        out[1..k].clone_from_slice(&alpha[1..k]);
        out[k] = &gamma[0] - &alpha[0];
        out[k + 1..n].clone_from_slice(&gamma[1..m]);
        out
    };
    let zero_a = vec![base.zero(); k];
    let zero_c = vec![base.zero(); m];
    // components of each product basis element
    let comps: Vec<(Vec<Scalar>, Vec<Scalar>)> = (0..n)
        .map(|i| {
            if i == 0 {
                (unit_vec(k, 0, base), unit_vec(m, 0, base))
            } else if i < k {
                (unit_vec(k, i, base), zero_c.clone())
            } else {
                (zero_a.clone(), unit_vec(m, i - k, base))
            }
        })
        .collect();
    let a_mul = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
        let ex = a.element(x.to_vec()).unwrap();
        let ey = a.element(y.to_vec()).unwrap();
        a.mul(&ex, &ey).unwrap().coords().to_vec()
    };
    let c_mul = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
        let ex = c.element(x.to_vec()).unwrap();
        let ey = c.element(y.to_vec()).unwrap();
        c.mul(&ex, &ey).unwrap().coords().to_vec()
    };
    let mut t = zero_table(n, base);
    for i in 0..n {
        for j in 0..n {
            t[i][j] = embed(
                &a_mul(&comps[i].0, &comps[j].0),
                &c_mul(&comps[i].1, &comps[j].1),
            );
        }
    }
    let names = std::iter::once("1".to_string())
        .chain(a.names()[1..].iter().map(|s| format!("({s},0)")))
        .chain(std::iter::once("(0,1)".to_string()))
        .chain(c.names()[1..].iter().map(|s| format!("(0,{s})")))
        .collect();
    RankRing::validate(base, names, t)
}

/// Re-expresses `A` in the basis `b'_0 = 1`, `b'_i = b_i + Σ_{j<i} m[i][j] b_j`.
/// The change of basis is unitriangular, hence invertible over any base.
pub fn change_basis(a: &RankRing, m: &[Vec<Scalar>]) -> Result<RankRing> {
    let n = a.rank();
    let base = a.base();
    let rows: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut r = unit_vec(n, i, base);
            r[..i].clone_from_slice(&m[i][..i]);
            r
        })
        .collect();
    // old coordinates v -> new coordinates w with Σ w_i rows[i] = v
    let to_new = |v: Vec<Scalar>| -> Vec<Scalar> {
        let mut v = v;
        let mut w = vec![base.zero(); n];
        for i in (0..n).rev() {
            let c = v[i].clone();
            if !c.is_zero() {
                for j in 0..=i {
                    v[j] = &v[j] - &(&c * &rows[i][j]);
                }
            }
            w[i] = c;
        }
        w
    };
    let mut t = zero_table(n, base);
    for i in 0..n {
        for j in 0..n {
            let x = a.element(rows[i].clone())?;
            let y = a.element(rows[j].clone())?;
            t[i][j] = to_new(a.mul(&x, &y)?.coords().to_vec());
        }
    }
    let names = (0..n)
        .map(|i| {
            if i == 0 {
                "1".to_string()
            } else {
                format!("b{i}")
            }
        })
        .collect();
    RankRing::validate(base, names, t)
}

fn random_scalar<R: Rng>(base: Base, rng: &mut R, bound: i64) -> Scalar {
    match base {
        Base::PrimeField(p) => base.from_i64(rng.gen_range(0..p as i64)),
        Base::Rationals if rng.gen_bool(0.25) => {
            let num = base.from_i64(rng.gen_range(-bound..=bound));
            let den = base.from_i64(rng.gen_range(1..=3));
            &num * &den.inverse().unwrap()
        }
        _ => base.from_i64(rng.gen_range(-bound..=bound)),
    }
}

/// A random element with small coordinates.
pub fn random_element<R: Rng>(ring: &RankRing, rng: &mut R) -> RingElement {
    let c = (0..ring.rank())
        .map(|_| random_scalar(ring.base(), rng, 3))
        .collect();
    ring.element(c).expect("coordinates in the ring's base")
}

/// A random monic polynomial of degree `n`, constant term first.
pub fn random_monic<R: Rng>(base: Base, n: usize, rng: &mut R) -> Vec<Scalar> {
    let mut f: Vec<Scalar> = (0..n).map(|_| random_scalar(base, rng, 3)).collect();
    f.push(base.one());
    f
}

/// A random valid ring of rank `n`: monogenic, cubic, degenerate or a
/// product of smaller random rings, followed by a random unitriangular
/// change of basis.
pub fn random_ring<R: Rng>(base: Base, n: usize, rng: &mut R) -> RankRing {
    assert!(n > 0, "rank must be positive");
    let kinds = 4;
    let ring = loop {
        let candidate = match rng.gen_range(0..kinds) {
            0 => Some(make_monogenic(base, &random_monic(base, n, rng)).unwrap()),
            1 if n == 3 => Some(make_cubic(
                base,
                std::array::from_fn(|_| random_scalar(base, rng, 3)),
            )),
            2 if base.is_field() => Some(make_degenerate(base, n).unwrap()),
            3 if n >= 2 => {
                let k = rng.gen_range(1..n);
                let a = random_ring(base, k, rng);
                let c = random_ring(base, n - k, rng);
                Some(make_product(&a, &c).unwrap())
            }
            _ => None,
        };
        if let Some(r) = candidate {
            break r;
        }
    };
    let m: Vec<Vec<Scalar>> = (0..n)
        .map(|_| (0..n).map(|_| random_scalar(base, rng, 2)).collect())
        .collect();
    change_basis(&ring, &m).unwrap()
}

/// Names accepted by [`gallery`], with placeholders.
pub const GALLERY_NAMES: &str = "split-<n>, monogenic-<c_n,...,c_0> (leading coefficient first), \
cubic-<a,b,c,d>, degenerate-<n>, imprimitive-quartic, finite-field-<p,n>";

fn parse_list(text: &str) -> Option<Vec<i64>> {
    text.split(',').map(|s| s.trim().parse().ok()).collect()
}

/// Looks up a gallery ring by name. `base` overrides the default base
/// (ℤ for most rings, ℚ for `degenerate-<n>`, `F_p` for finite fields).
pub fn gallery(name: &str, base: Option<Base>) -> Result<RankRing> {
    let unknown = || Error::UnknownGallery {
        name: name.to_string(),
        available: GALLERY_NAMES.to_string(),
    };
    let small = |n: usize| {
        if (1..=12).contains(&n) {
            Ok(n)
        } else {
            Err(unknown())
        }
    };
    if name == "imprimitive-quartic" {
        let r = make_imprimitive_quartic_order();
        return match base {
            None | Some(Base::Integers) => Ok(r),
            Some(b) => r.change_base(b),
        };
    }
    if let Some(rest) = name.strip_prefix("split-") {
        let n = small(rest.parse().map_err(|_| unknown())?)?;
        return Ok(make_split(base.unwrap_or(Base::Integers), n));
    }
    if let Some(rest) = name.strip_prefix("degenerate-") {
        let n = small(rest.parse().map_err(|_| unknown())?)?;
        return make_degenerate(base.unwrap_or(Base::Rationals), n);
    }
    if let Some(rest) = name.strip_prefix("monogenic-") {
        let mut c = parse_list(rest).ok_or_else(unknown)?;
        small(c.len().saturating_sub(1))?;
        c.reverse();
        return make_monogenic_i64(base.unwrap_or(Base::Integers), &c);
    }
    if let Some(rest) = name.strip_prefix("cubic-") {
        let c = parse_list(rest).ok_or_else(unknown)?;
        let abcd: [i64; 4] = c.try_into().map_err(|_| unknown())?;
        let b = base.unwrap_or(Base::Integers);
        return Ok(make_cubic(b, abcd.map(|v| b.from_i64(v))));
    }
    if let Some(rest) = name.strip_prefix("finite-field-") {
        let c = parse_list(rest).ok_or_else(unknown)?;
        let [p, n]: [i64; 2] = c.try_into().map_err(|_| unknown())?;
        if p < 2 {
            return Err(Error::NotPrime(p.max(0) as u64));
        }
        let n = small(usize::try_from(n).map_err(|_| unknown())?)?;
        if let Some(b) = base {
            if b != Base::PrimeField(p as u64) {
                return Err(Error::WrongBase {
                    expected: Base::PrimeField(p as u64),
                    found: b,
                });
            }
        }
        return make_finite_field(p as u64, n);
    }
    Err(unknown())
}
