use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sn_closure::gallery;
use sn_closure::ncpoly::{
    charpoly_product_check, desmit_f, desmit_sequence, s_addition_check, verify_factorization,
    NCPoly,
};
use sn_closure::{Base, RankRing, RingElement};

type Mat = [[i64; 2]; 2];

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

fn eval_mat(p: &NCPoly, x: &Mat, y: &Mat) -> Mat {
    let mut out = [[0; 2]; 2];
    for (w, c) in p.terms() {
        let mut m = [[1, 0], [0, 1]];
        for ch in w.chars() {
            m = mat_mul(&m, if ch == 'X' { x } else { y });
        }
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] += c * m[i][j];
            }
        }
    }
    out
}

// Power series with 2x2 integer matrix coefficients, truncated at T^order.
fn series_mul(a: &[Mat], b: &[Mat]) -> Vec<Mat> {
    let mut out = vec![[[0; 2]; 2]; a.len()];
    for i in 0..a.len() {
        for j in 0..a.len() - i {
            let p = mat_mul(&a[i], &b[j]);
            for r in 0..2 {
                for c in 0..2 {
                    out[i + j][r][c] += p[r][c];
                }
            }
        }
    }
    out
}

fn one_minus(m: &Mat, k: usize, len: usize) -> Vec<Mat> {
    let mut s = vec![[[0; 2]; 2]; len];
    s[0] = [[1, 0], [0, 1]];
    if k < len {
        for r in 0..2 {
            for c in 0..2 {
                s[k][r][c] -= m[r][c];
            }
        }
    }
    s
}

#[test]
fn first_polynomials_match_the_listed_values() {
    let expect = [
        "1",
        "X + Y",
        "X^2 + YX + Y^2",
        "X^3 + XYX + XY^2 + YX^2 + Y^2X + Y^3",
        "X^4 + XYX^2 + XY^2X + XY^3 + YX^3 + Y^2X^2 + Y^3X + Y^4",
    ];
    for (k, e) in expect.iter().enumerate() {
        assert_eq!(desmit_f(k).unwrap().to_string(), *e);
    }
}

#[test]
fn polynomials_are_homogeneous() {
    for (k, f) in desmit_sequence(9).unwrap().iter().enumerate() {
        assert_eq!(f.homogeneous_degree(), Some(k));
    }
}

#[test]
fn factorization_holds_through_order_ten() {
    for m in 0..=10 {
        assert!(verify_factorization(m).unwrap(), "m = {m}");
    }
}

#[test]
fn factorization_under_matrix_substitution() {
    // Independent oracle: evaluate both sides at integer matrices.
    let x: Mat = [[1, 2], [0, -1]];
    let y: Mat = [[0, 1], [3, 2]];
    let m = 6;
    let len = m + 3;
    let fs = desmit_sequence(m).unwrap();
    let xy = mat_mul(&x, &y);
    let mut rhs = series_mul(&one_minus(&x, 1, len), &one_minus(&y, 1, len));
    for (k, f) in fs.iter().enumerate() {
        let g = mat_mul(&eval_mat(f, &x, &y), &xy);
        rhs = series_mul(&rhs, &one_minus(&g, k + 2, len));
    }
    let sum = [
        [x[0][0] + y[0][0], x[0][1] + y[0][1]],
        [x[1][0] + y[1][0], x[1][1] + y[1][1]],
    ];
    assert_eq!(rhs, one_minus(&sum, 1, len));
}

#[test]
fn perturbed_sequence_breaks_the_factorization() {
    let mut fs = desmit_sequence(3).unwrap();
    fs[2] = fs[2].add(&NCPoly::monomial("XX", 1));
    let x: Mat = [[1, 1], [0, 1]];
    let y: Mat = [[2, 0], [1, 1]];
    let len = 5;
    let xy = mat_mul(&x, &y);
    let mut rhs = series_mul(&one_minus(&x, 1, len), &one_minus(&y, 1, len));
    for (k, f) in fs.iter().enumerate() {
        rhs = series_mul(
            &rhs,
            &one_minus(&mat_mul(&eval_mat(f, &x, &y), &xy), k + 2, len),
        );
    }
    let sum = [[3, 1], [1, 2]];
    assert_ne!(rhs, one_minus(&sum, 1, len));
}

fn el(r: &RankRing, c: &[i64]) -> RingElement {
    r.element_i64(c).unwrap()
}

#[test]
fn zero_x_reduces_to_q_y() {
    let r = gallery::make_monogenic_i64(Base::Integers, &[-1, -1, 0, 1]).unwrap();
    assert!(charpoly_product_check(&r, &r.zero(), &el(&r, &[2, -1, 3])).unwrap());
    assert!(s_addition_check(&r, &r.zero(), &r.zero()).unwrap());
}

#[test]
fn split_idempotents() {
    let r = gallery::make_split(Base::Integers, 4);
    assert!(charpoly_product_check(&r, &r.basis_element(1), &r.basis_element(2)).unwrap());
}

// s_j as the sum of principal j x j minors, each by cofactor expansion.
fn det_i64(m: &[Vec<i64>]) -> i64 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .map(|c| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != c)
                        .map(|(_, v)| *v)
                        .collect()
                })
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * m[0][c] * det_i64(&minor)
        })
        .sum()
}

fn minors_s(m: &[Vec<i64>], j: usize) -> i64 {
    let n = m.len();
    (0u32..1 << n)
        .filter(|mask| mask.count_ones() as usize == j)
        .map(|mask| {
            let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let sub: Vec<Vec<i64>> = idx
                .iter()
                .map(|&r| idx.iter().map(|&c| m[r][c]).collect())
                .collect();
            det_i64(&sub)
        })
        .sum()
}

#[test]
fn addition_identities_on_t_and_t_squared() {
    let r = gallery::make_monogenic_i64(Base::Integers, &[-1, -1, 0, 1]).unwrap();
    let x = el(&r, &[0, 1, 0]);
    let y = el(&r, &[0, 0, 1]);
    assert!(s_addition_check(&r, &x, &y).unwrap());
    // t + t^2 acts on 1, t, t^2 (t^3 = t + 1, t^4 = t^2 + t).
    let m = vec![vec![0, 1, 1], vec![1, 1, 2], vec![1, 1, 1]];
    let cp = r.char_poly(&r.add(&x, &y).unwrap()).unwrap();
    for j in 1..=3 {
        assert_eq!(cp.s(j), Base::Integers.from_i64(minors_s(&m, j)), "s_{j}");
    }
}

#[test]
fn fifty_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let bases = [
        Base::Integers,
        Base::prime_field(5).unwrap(),
        Base::prime_field(7).unwrap(),
    ];
    for i in 0..50 {
        let base = bases[i % 3];
        let n = 2 + i % 3;
        let r = gallery::random_ring(base, n, &mut rng);
        let x = gallery::random_element(&r, &mut rng);
        let y = gallery::random_element(&r, &mut rng);
        assert!(charpoly_product_check(&r, &x, &y).unwrap(), "triple {i}");
        assert!(s_addition_check(&r, &x, &y).unwrap(), "triple {i}");
    }
}

#[test]
fn parent_mismatch_is_reported() {
    let a = gallery::make_split(Base::Integers, 3);
    let b = gallery::make_split(Base::Integers, 2);
    assert!(charpoly_product_check(&a, &b.one(), &a.one()).is_err());
    assert!(s_addition_check(&a, &a.one(), &b.one()).is_err());
}

proptest! {
    #[test]
    fn cubic_rings_over_f7(a in 0i64..7, b in 0i64..7, c in 0i64..7, d in 0i64..7,
                           x in proptest::collection::vec(0i64..7, 3),
                           y in proptest::collection::vec(0i64..7, 3)) {
        let base = Base::prime_field(7).unwrap();
        let r = gallery::make_cubic(base, [a, b, c, d].map(|v| base.from_i64(v)));
        let x = r.element_i64(&x).unwrap();
        let y = r.element_i64(&y).unwrap();
        prop_assert!(charpoly_product_check(&r, &x, &y).unwrap());
        prop_assert!(s_addition_check(&r, &x, &y).unwrap());
    }
}
