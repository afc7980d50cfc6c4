use proptest::prelude::*;

use schur_core::algebra::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = DenseMatrix> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows)
        .prop_map(|m| m.into_iter().map(|r| r.into_iter().map(q).collect()).collect())
}

fn invertible(n: usize) -> impl Strategy<Value = DenseMatrix> {
    matrix(n, n).prop_filter("singular", |m| dense_rank(m) == m.len())
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(64) })]

    #[test]
    fn rank_of_transpose(m in matrix(4, 6)) {
        prop_assert_eq!(dense_rank(&m), dense_rank(&transpose(&m)));
        let r = RationalMatrix::<usize, usize>::from_dense(&m);
        prop_assert_eq!(r.rank(), r.transpose().rank());
    }

    #[test]
    fn rank_survives_invertible_factors(m in matrix(4, 5), a in invertible(4), b in invertible(5)) {
        let r = dense_rank(&m);
        prop_assert_eq!(dense_rank(&mat_mul(&mat_mul(&a, &m), &b)), r);
        let mut rows = m.clone();
        rows.reverse();
        prop_assert_eq!(dense_rank(&rows), r);
    }

    #[test]
    fn kernel_vectors_are_killed(m in matrix(3, 6)) {
        let r = RationalMatrix::<usize, usize>::from_dense(&m);
        let ker = r.kernel_basis();
        prop_assert_eq!(ker.len() + r.rank(), 6);
        for v in ker {
            prop_assert!(is_zero_vec(&r.mul_vec(&v.dense())));
        }
    }

    #[test]
    fn inverse_and_determinant(a in invertible(4)) {
        let ai = inverse(&a).unwrap();
        prop_assert_eq!(mat_mul(&a, &ai), identity(4));
        prop_assert_eq!(determinant(&a) * determinant(&ai), q(1));
    }

    #[test]
    fn intersection_of_two_hyperplanes(a in matrix(1, 4), b in matrix(1, 4)) {
        let ha = RationalMatrix::<usize, usize>::from_dense(&a).kernel_basis();
        let hb = RationalMatrix::<usize, usize>::from_dense(&b).kernel_basis();
        let both: Vec<Vec<Q>> = a.iter().chain(&b).cloned().collect();
        let cut = intersect(&[ha.into_iter().map(|v| v.entries).collect(), hb.into_iter().map(|v| v.entries).collect()]);
        prop_assert_eq!(cut.len(), 4 - dense_rank(&both));
    }
}
