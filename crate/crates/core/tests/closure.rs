use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sn_closure::closure::{fundamental_relations, relations};
use sn_closure::tensor::permutations;
use sn_closure::{
    close, close_with, gallery, Base, CloseOptions, Error, RankRing, TensorElement, TensorSpace,
    TensorWord,
};

fn field_bases() -> impl Strategy<Value = Base> {
    prop_oneof![
        Just(Base::Rationals),
        Just(Base::prime_field(2).unwrap()),
        Just(Base::prime_field(3).unwrap())
    ]
}

fn random_tensor(space: &TensorSpace, rng: &mut ChaCha8Rng) -> TensorElement {
    let ring = space.ring();
    let mut acc = space.one();
    for i in 1..=space.n() {
        acc = space
            .mult(
                &acc,
                &space.embed(&gallery::random_element(ring, rng), i).unwrap(),
            )
            .unwrap();
    }
    acc.add(&space.embed(&gallery::random_element(ring, rng), 1).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tensor_power_is_a_commutative_ring(base in field_bases(), n in 1usize..=3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ring = gallery::random_ring(base, n, &mut rng);
        let space = TensorSpace::new(&ring);
        let (u, v, w) = (random_tensor(&space, &mut rng), random_tensor(&space, &mut rng), random_tensor(&space, &mut rng));
        let uv = space.mult(&u, &v).unwrap();
        prop_assert_eq!(&uv, &space.mult(&v, &u).unwrap());
        prop_assert_eq!(space.mult(&uv, &w).unwrap(), space.mult(&u, &space.mult(&v, &w).unwrap()).unwrap());
        prop_assert_eq!(space.mult(&space.one(), &u).unwrap(), u.clone());
        // each embedding is a ring map
        let a = gallery::random_element(&ring, &mut rng);
        let b = gallery::random_element(&ring, &mut rng);
        for i in 1..=n {
            let ab = space.embed(&ring.mul(&a, &b).unwrap(), i).unwrap();
            prop_assert_eq!(ab, space.mult(&space.embed(&a, i).unwrap(), &space.embed(&b, i).unwrap()).unwrap());
        }
    }

    #[test]
    fn permutations_act_by_automorphisms(base in field_bases(), n in 1usize..=3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ring = gallery::random_ring(base, n, &mut rng);
        let space = TensorSpace::new(&ring);
        let (u, v) = (random_tensor(&space, &mut rng), random_tensor(&space, &mut rng));
        let a = gallery::random_element(&ring, &mut rng);
        for sigma in permutations(n) {
            let su = space.sn_act(&sigma, &u).unwrap();
            let sv = space.sn_act(&sigma, &v).unwrap();
            prop_assert_eq!(space.sn_act(&sigma, &space.mult(&u, &v).unwrap()).unwrap(), space.mult(&su, &sv).unwrap());
            for i in 1..=n {
                let moved = space.sn_act(&sigma, &space.embed(&a, i).unwrap()).unwrap();
                prop_assert_eq!(moved, space.embed(&a, sigma[i - 1] + 1).unwrap());
            }
        }
    }

    /// Relations imposed on basis elements force them for every element.
    #[test]
    fn relations_hold_for_all_elements(base in field_bases(), n in 2usize..=3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ring = gallery::random_ring(base, n, &mut rng);
        let g = close(&ring).unwrap();
        prop_assert!(g.is_sn_stable(false));
        for _ in 0..3 {
            let a = gallery::random_element(&ring, &mut rng);
            for rel in fundamental_relations(g.space(), &a).unwrap() {
                prop_assert!(g.ideal_contains(&rel).unwrap());
            }
        }
        prop_assert!(!g.ideal_contains(&g.space().one()).unwrap());
    }

    #[test]
    fn closure_commutes_with_reduction_mod_p(n in 2usize..=3, seed in any::<u64>(), p in prop_oneof![Just(2u64), Just(3), Just(5)]) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = gallery::random_monic(Base::Integers, n, &mut rng);
        let ring = gallery::make_monogenic(Base::Integers, &f).unwrap();
        let m: Vec<Vec<_>> = (0..n).map(|i| (0..n).map(|j| Base::Integers.from_i64((seed as i64 >> (i + 2 * j)) % 3)).collect()).collect();
        let ring = gallery::change_basis(&ring, &m).unwrap();
        let g = close(&ring).unwrap();
        let reduced = close(&ring.change_base(Base::prime_field(p).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(reduced.free_rank(), g.predicted_dim_mod(p));
        let rational = close(&ring.change_base(Base::Rationals).unwrap()).unwrap();
        prop_assert_eq!(rational.free_rank(), g.free_rank());
    }

    /// Rank-3 rings from binary cubic forms always have a closure of rank 6.
    #[test]
    fn cubic_rings_close_to_rank_six(abcd in proptest::array::uniform4(-4i64..=4)) {
        let z = Base::Integers;
        let ring = gallery::make_cubic(z, abcd.map(|c| z.from_i64(c)));
        let g = close(&ring).unwrap();
        prop_assert_eq!(g.free_rank(), 6);
        prop_assert!(g.torsion().is_empty());
    }
}

#[test]
fn rank_two_closure_is_the_ring_itself() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..10 {
        let f = gallery::random_monic(Base::Integers, 2, &mut rng);
        let ring = gallery::make_monogenic(Base::Integers, &f).unwrap();
        let g = close(&ring).unwrap();
        assert_eq!((g.free_rank(), g.torsion().len()), (2, 0));
        // a -> a^(1) is an isomorphism: the images of 1 and t form a basis
        let words = [TensorWord::new(vec![0, 0]), TensorWord::new(vec![1, 0])];
        assert!(g.is_residue_basis(&words).unwrap());
        assert_eq!(g.closure_discriminant().unwrap(), ring.discriminant());
    }
}

/// In G(B^n), `e_i^{(j)}` is the sum of the `e_σ` with `σ(j) = i`.
#[test]
fn split_idempotents_decompose_into_cosets() {
    let n = 3;
    let ring = gallery::make_split(Base::Integers, n);
    let g = close(&ring).unwrap();
    let space = g.space();
    let z = ring.base();
    let mut e0 = ring.one();
    for k in 1..n {
        e0 = ring
            .add(
                &e0,
                &ring.scale(&z.from_i64(-1), &ring.basis_element(k)).unwrap(),
            )
            .unwrap();
    }
    let e: Vec<_> = std::iter::once(e0)
        .chain((1..n).map(|k| ring.basis_element(k)))
        .collect();
    let e_sigma = |sigma: &[usize]| {
        let mut acc = space.one();
        for (slot, &s) in sigma.iter().enumerate() {
            acc = space
                .mult(&acc, &space.embed(&e[s], slot + 1).unwrap())
                .unwrap();
        }
        acc
    };
    for i in 0..n {
        for j in 0..n {
            let sum = permutations(n)
                .iter()
                .filter(|s| s[j] == i)
                .fold(space.zero(), |acc, s| acc.add(&e_sigma(s)));
            let lhs = space.embed(&e[i], j + 1).unwrap();
            assert!(
                g.ideal_contains(&lhs.sub(&sum)).unwrap(),
                "e_{i}^({})",
                j + 1
            );
        }
    }
    // a word with a repeated idempotent vanishes in G
    let repeated = space
        .mult(
            &space.embed(&e[1], 1).unwrap(),
            &space.embed(&e[1], 2).unwrap(),
        )
        .unwrap();
    assert!(g.ideal_contains(&repeated).unwrap());
}

#[test]
fn relation_counts_and_degrees() {
    let ring = gallery::make_monogenic_i64(Base::Integers, &[1, 0, 2, 1]).unwrap();
    let space = TensorSpace::new(&ring);
    let rels = relations(&space);
    assert_eq!(rels.len(), 2 * 3);
    for (k, r) in rels.relations.iter().enumerate() {
        assert_eq!((r.basis_index, r.degree), (k / 3 + 1, k % 3 + 1));
    }
}

#[test]
fn parallel_and_sequential_saturation_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut rings: Vec<RankRing> = vec![
        gallery::make_degenerate(Base::Rationals, 4).unwrap(),
        gallery::make_imprimitive_quartic_order(),
    ];
    rings.extend((0..3).map(|_| gallery::random_ring(Base::prime_field(3).unwrap(), 4, &mut rng)));
    for ring in rings {
        let a = close_with(&ring, &CloseOptions::default()).unwrap();
        let small = CloseOptions {
            batch: 7,
            ..CloseOptions::sequential()
        };
        let b = close_with(&ring, &small).unwrap();
        assert_eq!(a.ideal_basis(), b.ideal_basis());
        assert_eq!(a.torsion(), b.torsion());
    }
}

#[test]
fn degenerate_closures_do_not_depend_on_the_field() {
    let q = close(&gallery::make_degenerate(Base::Rationals, 4).unwrap()).unwrap();
    for p in [2u64, 3, 5] {
        let g =
            close(&gallery::make_degenerate(Base::prime_field(p).unwrap(), 4).unwrap()).unwrap();
        assert_eq!(g.free_rank(), q.free_rank());
        assert_eq!(
            g.graded_dims().unwrap().by_content,
            q.graded_dims().unwrap().by_content
        );
    }
}

#[test]
fn imprimitive_order_torsion_and_reductions() {
    let ring = gallery::make_imprimitive_quartic_order();
    let g = close(&ring).unwrap();
    let two = BigInt::from(2);
    let four = BigInt::from(4);
    assert_eq!(g.free_rank(), 24);
    assert_eq!(
        g.torsion(),
        [&two, &two, &two, &two, &four, &four, &four, &four]
            .map(Clone::clone)
            .as_slice()
    );
    for p in [2u64, 3, 5, 7] {
        let reduced = close(&ring.change_base(Base::prime_field(p).unwrap()).unwrap()).unwrap();
        assert_eq!(reduced.free_rank(), g.predicted_dim_mod(p), "p = {p}");
    }
    assert!(matches!(
        g.closure_discriminant(),
        Err(Error::TorsionPresent)
    ));
}

#[test]
fn guard_stops_large_ranks() {
    let ring = gallery::make_degenerate(Base::Rationals, 6).unwrap();
    assert!(matches!(close(&ring), Err(Error::ResourceGuard { .. })));
    let tight = CloseOptions {
        max_n: 3,
        ..CloseOptions::default()
    };
    assert!(matches!(
        close_with(&gallery::make_split(Base::Integers, 4), &tight),
        Err(Error::ResourceGuard { .. })
    ));
}
