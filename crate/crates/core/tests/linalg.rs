use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use sn_closure::linalg::{berkowitz, det, hnf, member, rref, snf, SparseMatrix, SparseVec};
use sn_closure::tensor::permutations;
use sn_closure::{Base, Scalar};

/// Leibniz expansion over i128; fine for the small entries used here.
fn leibniz(a: &[Vec<i64>]) -> i128 {
    let n = a.len();
    permutations(n)
        .into_iter()
        .map(|p| {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            sign * (0..n).map(|i| a[i][p[i]] as i128).product::<i128>()
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from determinantal divisors: `d_k` is the gcd of the
/// k x k minors and the k-th factor is `d_k / d_{k-1}`.
fn invariant_factors_by_minors(a: &[Vec<i64>]) -> Vec<BigInt> {
    let (r, c) = (a.len(), a[0].len());
    let mut prev = BigInt::from(1);
    let mut out = Vec::new();
    for k in 1..=r.min(c) {
        let mut g = BigInt::zero();
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                let minor: Vec<Vec<i64>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| a[i][j]).collect())
                    .collect();
                g = g.gcd(&BigInt::from(leibniz(&minor)));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(proptest::collection::vec(-6i64..=6, cols), rows)
}

fn zmat(a: &[Vec<i64>]) -> SparseMatrix {
    SparseMatrix::from_i64_rows(a, Base::Integers)
}

fn row(a: &[i64], base: Base) -> SparseVec {
    SparseVec::from_dense(&a.iter().map(|&x| base.from_i64(x)).collect::<Vec<_>>())
}

proptest! {
    #[test]
    fn det_matches_leibniz(a in small_matrix(4, 4)) {
        let expected = leibniz(&a);
        prop_assert_eq!(det(&zmat(&a)).unwrap(), Base::Integers.from_bigint(&BigInt::from(expected)));
        let q = Base::Rationals;
        prop_assert_eq!(det(&SparseMatrix::from_i64_rows(&a, q)).unwrap(), q.from_bigint(&BigInt::from(expected)));
        let f = Base::prime_field(7).unwrap();
        prop_assert_eq!(det(&SparseMatrix::from_i64_rows(&a, f)).unwrap(), f.from_bigint(&BigInt::from(expected)));
    }

    #[test]
    fn snf_matches_determinantal_divisors(a in small_matrix(3, 4)) {
        prop_assert_eq!(snf(&zmat(&a)).unwrap(), invariant_factors_by_minors(&a));
    }

    #[test]
    fn hnf_spans_the_same_lattice(a in small_matrix(4, 3)) {
        let m = zmat(&a);
        let h = hnf(&m).unwrap();
        prop_assert_eq!(h.rows(), m.rows());
        for r in m.row_vectors() {
            prop_assert!(member(&h, &r).unwrap());
        }
        for r in h.row_vectors() {
            prop_assert!(member(&m, &r).unwrap());
        }
        // echelon with positive pivots and reduced entries above them
        let mut last = None;
        for (i, r) in h.row_vectors().iter().enumerate() {
            let Some((col, pivot)) = r.leading() else { continue };
            prop_assert!(last.is_none_or(|l| col > l));
            last = Some(col);
            let p = pivot.as_bigint().unwrap();
            prop_assert!(p.is_positive());
            for above in 0..i {
                let e = h.get(above, col).as_bigint().unwrap();
                prop_assert!(!e.is_negative() && e < p);
            }
        }
    }

    #[test]
    fn rref_rank_is_determinantal(a in small_matrix(3, 4)) {
        let f = Base::prime_field(5).unwrap();
        let r = rref(&SparseMatrix::from_i64_rows(&a, f)).unwrap();
        // largest k with a nonzero k x k minor mod 5
        let mut rank = 0;
        for k in 1..=3 {
            let nonzero = subsets(3, k).iter().any(|rows| {
                subsets(4, k).iter().any(|cols| {
                    let minor: Vec<Vec<i64>> = rows.iter().map(|&i| cols.iter().map(|&j| a[i][j]).collect()).collect();
                    leibniz(&minor) % 5 != 0
                })
            });
            if nonzero {
                rank = k;
            }
        }
        prop_assert_eq!(r.rank, rank);
        prop_assert_eq!(r.pivots.len(), rank);
        for (i, &p) in r.pivots.iter().enumerate() {
            prop_assert!(r.matrix.get(i, p).is_one());
            for other in 0..r.matrix.rows() {
                if other != i {
                    prop_assert!(r.matrix.get(other, p).is_zero());
                }
            }
        }
    }

    #[test]
    fn integer_combinations_are_members(a in small_matrix(3, 4), c in proptest::collection::vec(-5i64..=5, 3)) {
        let combo: Vec<i64> = (0..4).map(|j| (0..3).map(|i| c[i] * a[i][j]).sum()).collect();
        prop_assert!(member(&zmat(&a), &row(&combo, Base::Integers)).unwrap());
    }

    #[test]
    fn berkowitz_matches_det_of_shifted_matrix(a in small_matrix(3, 3), t in -4i64..=4) {
        let z = Base::Integers;
        let dense: Vec<Vec<Scalar>> = a.iter().map(|r| r.iter().map(|&x| z.from_i64(x)).collect()).collect();
        let coeffs = berkowitz(&dense, z);
        prop_assert_eq!(coeffs.len(), 4);
        let value = coeffs.iter().fold(z.zero(), |acc, c| &(&acc * &z.from_i64(t)) + c);
        let shifted: Vec<Vec<i64>> = (0..3)
            .map(|i| (0..3).map(|j| if i == j { t - a[i][j] } else { -a[i][j] }).collect())
            .collect();
        prop_assert_eq!(value, z.from_bigint(&BigInt::from(leibniz(&shifted))));
    }
}

#[test]
fn lattice_membership_detects_index() {
    // (2,0), (0,3), (1,1) span Z^2; (2,0), (0,2), (1,1) have index 2
    let m = zmat(&[vec![2, 0], vec![0, 3], vec![1, 1]]);
    assert!(member(&m, &row(&[1, 0], Base::Integers)).unwrap());
    let m = zmat(&[vec![2, 0], vec![0, 2], vec![1, 1]]);
    assert!(!member(&m, &row(&[1, 0], Base::Integers)).unwrap());
    assert!(member(&m, &row(&[1, 3], Base::Integers)).unwrap());
}

#[test]
fn snf_of_known_lattice_quotients() {
    // Z^3 / <(2,4,4), (-6,6,12), (10,-4,-16)> = Z/2 + Z/6 + Z/12
    let m = zmat(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let got: Vec<i64> = snf(&m)
        .unwrap()
        .iter()
        .map(|d| d.try_into().unwrap())
        .collect();
    assert_eq!(
        got,
        invariant_factors_by_minors(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect::<Vec<_>>()
    );
    assert_eq!(got, vec![2, 6, 12]);
}
