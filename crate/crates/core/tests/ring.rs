use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sn_closure::linalg::{det, SparseMatrix};
use sn_closure::ring::Violation;
use sn_closure::spec_file::RingSpecFile;
use sn_closure::{gallery, Base, Error, RankRing, RingElement, Scalar};

fn bases() -> impl Strategy<Value = Base> {
    prop_oneof![
        Just(Base::Rationals),
        Just(Base::prime_field(5).unwrap()),
        Just(Base::prime_field(2).unwrap())
    ]
}

fn dense(ring: &RankRing, a: &RingElement) -> Vec<Vec<Scalar>> {
    ring.mult_matrix(a).unwrap().to_dense()
}

/// Sum of the principal j x j minors of `m`.
fn principal_minor_sum(m: &[Vec<Scalar>], j: usize, base: Base) -> Scalar {
    let n = m.len();
    let mut total = base.zero();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != j {
            continue;
        }
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let minor: Vec<Vec<Scalar>> = idx
            .iter()
            .map(|&r| idx.iter().map(|&c| m[r][c].clone()).collect())
            .collect();
        let d = if j == 0 {
            base.one()
        } else {
            det(&SparseMatrix::from_dense(&minor, base).unwrap()).unwrap()
        };
        total = &total + &d;
    }
    total
}

fn poly_mul(a: &[Scalar], b: &[Scalar], base: Base) -> Vec<Scalar> {
    let mut out = vec![base.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_rings_satisfy_the_axioms(base in bases(), n in 1usize..=4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ring = gallery::random_ring(base, n, &mut rng);
        let a = gallery::random_element(&ring, &mut rng);
        let b = gallery::random_element(&ring, &mut rng);
        let c = gallery::random_element(&ring, &mut rng);
        let ab = ring.mul(&a, &b).unwrap();
        prop_assert_eq!(&ab, &ring.mul(&b, &a).unwrap());
        prop_assert_eq!(ring.mul(&ab, &c).unwrap(), ring.mul(&a, &ring.mul(&b, &c).unwrap()).unwrap());
        prop_assert_eq!(ring.mul(&ring.one(), &a).unwrap(), a.clone());
        let bc = ring.add(&b, &c).unwrap();
        prop_assert_eq!(ring.mul(&a, &bc).unwrap(), ring.add(&ab, &ring.mul(&a, &c).unwrap()).unwrap());
    }

    #[test]
    fn char_poly_coefficients_are_principal_minor_sums(base in bases(), n in 1usize..=4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ring = gallery::random_ring(base, n, &mut rng);
        let a = gallery::random_element(&ring, &mut rng);
        let p = ring.char_poly(&a).unwrap();
        prop_assert_eq!(p.degree(), n);
        let m = dense(&ring, &a);
        for j in 0..=n {
            prop_assert_eq!(p.s(j), principal_minor_sum(&m, j, base));
        }
        prop_assert_eq!(ring.trace(&a).unwrap(), p.s(1));
        prop_assert!(ring.cayley_hamilton(&a).unwrap());
    }

    #[test]
    fn unitriangular_basis_change_keeps_the_discriminant(base in bases(), n in 1usize..=4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ring = gallery::random_ring(base, n, &mut rng);
        let m: Vec<Vec<Scalar>> = (0..n)
            .map(|i| (0..n).map(|j| base.from_i64((i * 3 + j) as i64 % 4 - 1)).collect())
            .collect();
        let other = gallery::change_basis(&ring, &m).unwrap();
        prop_assert_eq!(other.discriminant(), ring.discriminant());
    }

    #[test]
    fn products_multiply_char_polys_and_discriminants(base in bases(), k in 1usize..=2, m in 1usize..=2, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = gallery::random_ring(base, k, &mut rng);
        let c = gallery::random_ring(base, m, &mut rng);
        let prod = gallery::make_product(&a, &c).unwrap();
        prop_assert_eq!(prod.discriminant(), &a.discriminant() * &c.discriminant());
        let x = gallery::random_element(&a, &mut rng);
        let y = gallery::random_element(&c, &mut rng);
        // (x, y) in the product basis: (1,1) x_0, (a_i,0) x_i, (0,1) (y_0 - x_0), (0,c_j) y_j
        let mut coords = x.coords().to_vec();
        coords.push(&y.coords()[0] - &x.coords()[0]);
        coords.extend_from_slice(&y.coords()[1..]);
        let xy = prod.element(coords).unwrap();
        let expected = poly_mul(a.char_poly(&x).unwrap().coeffs(), c.char_poly(&y).unwrap().coeffs(), base);
        let got = prod.char_poly(&xy).unwrap();
        prop_assert_eq!(got.coeffs(), expected.as_slice());
    }
}

#[test]
fn reduction_mod_p_commutes_with_char_polys() {
    let ring = gallery::make_imprimitive_quartic_order();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for p in [2u64, 3, 5] {
        let f = Base::prime_field(p).unwrap();
        let reduced = ring.change_base(f).unwrap();
        assert_eq!(
            reduced.discriminant(),
            f.coerce(&ring.discriminant()).unwrap()
        );
        for _ in 0..5 {
            let a = gallery::random_element(&ring, &mut rng);
            let a_mod = reduced
                .element(a.coords().iter().map(|c| f.coerce(c).unwrap()).collect())
                .unwrap();
            let expected: Vec<Scalar> = ring
                .char_poly(&a)
                .unwrap()
                .coeffs()
                .iter()
                .map(|c| f.coerce(c).unwrap())
                .collect();
            assert_eq!(
                reduced.char_poly(&a_mod).unwrap().coeffs(),
                expected.as_slice()
            );
        }
    }
}

#[test]
fn monogenic_discriminant_is_the_polynomial_discriminant() {
    // disc(t^2 - t - 1) = 5, disc(t^3 - t - 1) = -23, disc(t^3 + a t + b) = -4a^3 - 27b^2
    let z = Base::Integers;
    let r = gallery::make_monogenic_i64(z, &[-1, -1, 1]).unwrap();
    assert_eq!(r.discriminant(), z.from_i64(5));
    let r = gallery::make_monogenic_i64(z, &[-1, -1, 0, 1]).unwrap();
    assert_eq!(r.discriminant(), z.from_i64(-23));
    for (a, b) in [(2i64, 3i64), (-5, 1), (0, 2), (4, -7)] {
        let r = gallery::make_monogenic_i64(z, &[b, a, 0, 1]).unwrap();
        assert_eq!(
            r.discriminant(),
            z.from_i64(-4 * a * a * a - 27 * b * b),
            "t^3 + {a}t + {b}"
        );
    }
}

#[test]
fn etale_and_degenerate_flags() {
    let z = Base::Integers;
    assert!(gallery::make_split(z, 3).is_etale());
    assert!(!gallery::make_monogenic_i64(z, &[-1, -1, 1])
        .unwrap()
        .is_etale());
    let f = Base::prime_field(7).unwrap();
    assert!(gallery::make_monogenic_i64(f, &[-1, -1, 1])
        .unwrap()
        .is_etale());
    let d = gallery::make_degenerate(Base::Rationals, 4).unwrap();
    assert!(d.is_degenerate() && !d.is_etale());
    assert!(!gallery::make_split(z, 3).is_degenerate());
}

fn spec_with_table(table: &str) -> Result<RankRing, Error> {
    let text =
        format!("{{\"base\": \"ZZ\", \"rank\": 2, \"names\": [\"1\", \"x\"], \"table\": {table}}}");
    RingSpecFile::parse(&text)?.to_ring()
}

#[test]
fn invalid_tables_report_witnesses() {
    // x*1 = 2x breaks unity and commutativity
    let err = spec_with_table(r#"[[["1","0"],["0","1"]],[["0","2"],["0","0"]]]"#).unwrap_err();
    let Error::InvalidRing(v) = err else {
        panic!("{err}")
    };
    assert!(v.contains(&Violation::NonCommutative(0, 1)), "{v:?}");

    // x^2 = y, xy = 1, y^2 = 0: commutative with unity, but (x x) y = 0
    // while x (x y) = x
    let text = r#"{"base": "ZZ", "rank": 3, "names": ["1", "x", "y"], "table": [
        [["1","0","0"], ["0","1","0"], ["0","0","1"]],
        [["0","1","0"], ["0","0","1"], ["1","0","0"]],
        [["0","0","1"], ["1","0","0"], ["0","0","0"]]]}"#;
    let err = RingSpecFile::parse(text).unwrap().to_ring().unwrap_err();
    let Error::InvalidRing(v) = err else {
        panic!("{err}")
    };
    assert!(
        v.iter().any(|w| matches!(w, Violation::NonAssociative(..))),
        "{v:?}"
    );
    assert!(
        v.iter().all(|w| matches!(w, Violation::NonAssociative(..))),
        "{v:?}"
    );
}
