//! Property tests for the linear-algebra substrate: rank-nullity, solve
//! exactness, cokernel contracts, all on random small-rational matrices.

use arknit::{Mat, Scalar};
use proptest::prelude::*;

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn small_mat() -> impl Strategy<Value = Mat> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(small_scalar(), r * c).prop_map(move |data| {
            let mut m = Mat::zeros(r, c);
            for i in 0..r {
                for j in 0..c {
                    m.set(i, j, data[i * c + j].clone());
                }
            }
            m
        })
    })
}

proptest! {
    #[test]
    fn rank_nullity(m in small_mat()) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        prop_assert!(m.mul(&k).is_zero());
        // Kernel columns are independent: stacking them has full rank.
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn rref_idempotent(m in small_mat()) {
        let rr = m.rref();
        let rr2 = rr.mat.rref();
        prop_assert_eq!(&rr.mat, &rr2.mat);
        prop_assert_eq!(&rr.pivots, &rr2.pivots);
    }

    #[test]
    fn solve_is_exact(m in small_mat(), xs in proptest::collection::vec(small_scalar(), 5)) {
        // Build a consistent rhs from a known solution, then solve.
        let mut x = Mat::zeros(m.cols(), 1);
        for (j, v) in xs.iter().enumerate().take(m.cols()) {
            x.set(j, 0, v.clone());
        }
        let b = m.mul(&x);
        let sol = m.solve(&b).expect("consistent system must solve");
        prop_assert_eq!(m.mul(&sol), b);
    }

    #[test]
    fn cokernel_is_a_retraction(m in small_mat()) {
        let ck = m.cokernel_data();
        prop_assert_eq!(ck.dim, m.rows() - m.rank());
        prop_assert!(ck.proj.mul(&m).is_zero());
        prop_assert!(ck.proj.mul(&ck.section).is_identity());
    }

    #[test]
    fn transpose_involution(m in small_mat()) {
        prop_assert_eq!(m.transpose().transpose(), m);
    }
}
