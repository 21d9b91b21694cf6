use num_traits::Signed;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use schurweyl::majorization::{
    extreme_points_weakstar, in_cone_c_lambda, in_norm_hull, in_orbit_closure, in_weakstar_hull,
    is_extreme_weakstar, separating_vector, support_functional, RationalWeight,
};
use schurweyl::momentum::sampling::random_unitary;
use schurweyl::momentum::{d_lambda, spectral_s_k, triple_decompose, Matrix};
use schurweyl::rational::{cq, q, qr, Q};
use schurweyl::weights::{
    canonicalize, from_partition_pair, orbit_equal, split_signs, to_partition_pair, PartitionPair,
};
use schurweyl::Weight;

fn weight(max_len: usize, bound: i64) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-bound..=bound, 0..=max_len).prop_map(|v| Weight::from_values(&v))
}

fn permuted(w: &Weight, seed: u64) -> Weight {
    let span = w.span() + 3;
    let mut perm: Vec<usize> = (0..span).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    w.relabel(|j| perm[j])
}

fn rational(v: &[Q]) -> RationalWeight {
    RationalWeight::from_values(v)
}

fn small_q() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| qr(a, b))
}

fn hermitian(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec((small_q(), small_q()), n * n).prop_map(move |e| {
        let a = Matrix::from_fn(n, |i, j| cq(e[i * n + j].0.clone(), e[i * n + j].1.clone()));
        &a + &a.adjoint()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn split_signs_reassembles(lam in weight(6, 4)) {
        let (plus, minus) = split_signs(&lam);
        prop_assert!(plus.is_nonnegative() && minus.is_nonnegative());
        prop_assert!(plus.support().all(|j| minus.get(j) == 0));
        prop_assert_eq!(plus.sub(&minus), lam);
    }

    #[test]
    fn partition_pairs_round_trip(plus in prop::collection::vec(1u64..5, 0..4), minus in prop::collection::vec(1u64..5, 0..4)) {
        let mut plus = plus;
        let mut minus = minus;
        plus.sort_by(|a, b| b.cmp(a));
        minus.sort_by(|a, b| b.cmp(a));
        let pair = PartitionPair::new(plus, minus).unwrap();
        prop_assert_eq!(to_partition_pair(&from_partition_pair(&pair)), pair);
    }

    #[test]
    fn l1_norm_from_multiplicities(lam in weight(6, 4)) {
        let by_sig: u64 = canonicalize(&lam).iter().map(|(k, m)| k.unsigned_abs() * m as u64).sum();
        prop_assert_eq!(lam.l1_norm(), by_sig);
    }

    #[test]
    fn extreme_points_lie_in_orbit_closure_and_hull(lam in weight(4, 3), seed in any::<u64>()) {
        for sig in &extreme_points_weakstar(&lam).signatures {
            let mu = permuted(&sig.representative(), seed);
            prop_assert!(is_extreme_weakstar(&mu, &lam));
            prop_assert!(in_orbit_closure(&mu, &lam));
            prop_assert!(in_weakstar_hull(&RationalWeight::from(&mu), &lam));
        }
    }

    #[test]
    fn extreme_and_norm_member_iff_same_orbit(mu in weight(4, 3), lam in weight(4, 3)) {
        let both = is_extreme_weakstar(&mu, &lam) && in_norm_hull(&RationalWeight::from(&mu), &lam);
        prop_assert_eq!(both, orbit_equal(&mu, &lam));
    }

    #[test]
    fn shrinking_a_nonnegative_member_stays_inside(lam in weight(4, 3), mu in prop::collection::vec(0i64..=3, 0..5), cut in prop::collection::vec(0i64..=4, 5)) {
        let mu_q: Vec<Q> = mu.iter().map(|&x| q(x)).collect();
        prop_assume!(in_weakstar_hull(&rational(&mu_q), &lam));
        let smaller: Vec<Q> = mu.iter().zip(&cut).map(|(&x, &c)| qr(x * c, 4)).collect();
        prop_assert!(in_weakstar_hull(&rational(&smaller), &lam));
    }

    #[test]
    fn minkowski_difference_of_sign_parts(lam in weight(4, 3), s1 in any::<u64>(), s2 in any::<u64>()) {
        let (plus, minus) = split_signs(&lam);
        // a member of co(lambda_+) on even slots, a member of co(lambda_-) on odd slots
        let pick = |w: &Weight, seed: u64, offset: usize| {
            let set = extreme_points_weakstar(w);
            let sigs: Vec<_> = set.signatures.iter().collect();
            let sig = sigs[(seed % sigs.len() as u64) as usize];
            sig.representative().relabel(|j| 2 * j + offset)
        };
        let mu = pick(&plus, s1, 0).sub(&pick(&minus, s2, 1));
        prop_assert!(in_weakstar_hull(&RationalWeight::from(&mu), &lam));
    }

    #[test]
    fn support_functional_dominates_every_rearrangement(lam in weight(5, 3), x in prop::collection::vec(small_q(), 0..6), seed in any::<u64>()) {
        let xw = rational(&x);
        let s = support_functional(&lam, &xw);
        let moved = permuted(&lam, seed);
        prop_assert!(RationalWeight::from(&moved).pair(&xw) <= s);
    }

    #[test]
    fn orbit_differences_lie_in_the_cone(lam in weight(5, 3), seed in any::<u64>()) {
        let diff = lam.sub(&permuted(&lam, seed));
        prop_assert!(in_cone_c_lambda(&RationalWeight::from(&diff), &lam));
    }

    #[test]
    fn separation_is_strict(lam in weight(4, 3), mu in weight(4, 3)) {
        prop_assume!(!orbit_equal(&lam, &mu));
        let cert = separating_vector(&lam, &mu).unwrap();
        prop_assert!(cert.verify(&lam, &mu));
        prop_assert!(cert.gap >= q(1));
    }

    #[test]
    fn l1_distance_bounded_by_twice_the_exposing_gap(lam in weight(4, 3), coeffs in prop::collection::vec(1i64..=5, 1..4), seed in any::<u64>()) {
        // nu: convex combination of permuted extreme points of co(lambda)
        let set = extreme_points_weakstar(&lam);
        let sigs: Vec<_> = set.signatures.iter().collect();
        let total: i64 = coeffs.iter().sum();
        let mut nu = RationalWeight::default();
        for (i, c) in coeffs.iter().enumerate() {
            let p = permuted(&sigs[(seed as usize + i) % sigs.len()].representative(), seed ^ i as u64);
            let scaled = RationalWeight::new(p.iter().map(|(j, v)| (j, qr(c * v, total))));
            nu = nu.sub(&scaled.neg());
        }
        let x = RationalWeight::from(&lam);
        let gap = x.pair(&x) - nu.pair(&x);
        prop_assert!(nu.sub(&x).l1_norm() <= gap * q(2));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn triple_parts_reassemble(x in hermitian(3), lam in weight(3, 2)) {
        let t = triple_decompose(&x, &lam, 3).unwrap();
        prop_assert_eq!(&t.reconstruct(), &x);
        let d = d_lambda(&lam, 3).unwrap();
        prop_assert!(t.block_diagonal.commutator(&d).is_zero());
        // a permutation preserving the eigenvalue pattern of D maps each part to itself
        let dense = lam.to_dense(3).unwrap();
        for p in [[1usize, 0, 2], [0, 2, 1], [2, 1, 0]] {
            if (0..3).all(|i| dense[p[i]] == dense[i]) {
                let u = Matrix::permutation(&p);
                let moved = triple_decompose(&x.conjugate_by(&u), &lam, 3).unwrap();
                prop_assert_eq!(moved.lower, t.lower.conjugate_by(&u));
                prop_assert_eq!(moved.upper, t.upper.conjugate_by(&u));
            }
        }
    }

    #[test]
    fn s_k_is_unitarily_invariant(d in prop::collection::vec(small_q(), 3), k in 1usize..=3, seed in any::<u64>()) {
        let x = Matrix::diagonal(&d);
        let u = random_unitary(3, 2, &mut ChaCha8Rng::seed_from_u64(seed));
        let a = spectral_s_k(&x, k).unwrap();
        let b = spectral_s_k(&x.conjugate_by(&u), k).unwrap();
        prop_assert_eq!(&a, &b);
        let mut sorted = d.clone();
        sorted.sort_by(|p, q| q.cmp(p));
        let top: Q = sorted[..k].iter().sum();
        prop_assert_eq!(a.as_exact(), Some(&top));
    }

    #[test]
    fn s_k_interval_encloses_the_true_value(x in hermitian(2), k in 1usize..=2) {
        // 2x2: eigenvalues are t/2 ± sqrt(disc)/2
        let a = spectral_s_k(&x, k).unwrap();
        let tr = x.trace().re;
        if k == 2 {
            prop_assert_eq!(a.as_exact(), Some(&tr));
        } else {
            let (p, r) = (x.get(0, 0).re.clone(), x.get(1, 1).re.clone());
            let off = x.get(0, 1);
            let disc = (&p - &r) * (&p - &r) + (&off.re * &off.re + &off.im * &off.im) * q(4);
            // lambda_max = (tr + sqrt(disc)) / 2, so (2 lo - tr)^2 <= disc <= (2 hi - tr)^2
            let lo = &a.lo * q(2) - &tr;
            let hi = &a.hi * q(2) - &tr;
            prop_assert!(!lo.is_negative() || disc.is_positive());
            if !lo.is_negative() {
                prop_assert!(&lo * &lo <= disc);
            }
            prop_assert!(!hi.is_negative() && disc <= &hi * &hi);
        }
    }
}
