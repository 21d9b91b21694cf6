//! Acceptance suite. Each criterion prints one `PASS` or `FAIL` line; the
//! process exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use schurweyl::majorization::{
    extreme_points_weakstar, in_norm_hull, in_weakstar_hull, separating_vector, RationalWeight,
    SeparationDirection,
};
use schurweyl::momentum::sampling::{random_unitary, sample_diagonal_member, sample_member};
use schurweyl::momentum::{
    coadjoint_orbit_member, d_lambda, diagonal_rep_norm, eigenvector_identity_check,
    in_momentum_set_matrix, in_momentum_set_via_spectrum, in_norm_momentum_set_matrix,
    kaehler_closed_form, kaehler_direct, lowering_expectation_vanishes, momentum_value, psi_eval,
    strong_exposure_gap, Matrix,
};
use schurweyl::oracle::{
    brute_top_sum, distinct_permutations, hull_member_bruteforce, hull_vertices, orbit_points,
    permutahedron_vertices, polytope_vertices, weakstar_distance, AmbientVector,
};
use schurweyl::rational::{c_i, c_real, c_zero, cq, norm_sqr, q, qr, Q};
use schurweyl::tensor::partition::semistandard_contents;
use schurweyl::tensor::space::isotypic_weight_vectors;
use schurweyl::tensor::{
    highest_weight_vector, isotypic_projector, partitions, schur_weyl_decompose,
    semistandard_count, standard_tableaux, weight_multiset, GroupAlgebraElement, Partition,
};
use schurweyl::weights::{is_contractive, orbit_equal};
use schurweyl::Weight;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T>(r: schurweyl::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Every dense vector of length `n` with at most `max_support` nonzero
/// entries, each in `values`.
fn sparse_vectors(n: usize, max_support: usize, values: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for v in &out {
            let used = v.iter().filter(|&&x| x != 0).count();
            next.push([v.as_slice(), &[0]].concat());
            if used < max_support {
                for &x in values {
                    next.push([v.as_slice(), &[x]].concat());
                }
            }
        }
        out = next;
    }
    out
}

/// Non-increasing value lists of length at most `len` drawn from `values`.
fn multisets(len: usize, values: &[i64]) -> Vec<Vec<i64>> {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    let mut out = vec![Vec::new()];
    let mut frontier = vec![(Vec::new(), 0usize)];
    for _ in 0..len {
        let mut next = Vec::new();
        for (v, start) in &frontier {
            for (i, &x) in sorted.iter().enumerate().skip(*start) {
                let w = [v.as_slice(), &[x]].concat();
                out.push(w.clone());
                next.push((w, i));
            }
        }
        frontier = next;
    }
    out
}

fn qs(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

fn rand_q(rng: &mut impl Rng) -> Q {
    qr(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

fn random_weight(rng: &mut impl Rng, max_support: usize, bound: i64, n: usize) -> Weight {
    let s = rng.gen_range(0..=max_support.min(n));
    let mut vals = vec![0i64; n];
    for slot in vals.iter_mut().take(s) {
        let mut x = 0;
        while x == 0 {
            x = rng.gen_range(-bound..=bound);
        }
        *slot = x;
    }
    Weight::from_values(&vals)
}

fn top_k_finite(v: &[i64], k: usize) -> i64 {
    let mut s = v.to_vec();
    s.sort_by(|a, b| b.cmp(a));
    s[..k].iter().sum()
}

fn partition(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

fn hull_equivalence() -> Outcome {
    let n = 5;
    let vals = [-2, -1, 1, 2];
    let vectors = sparse_vectors(n, 3, &vals);
    let orbits = multisets(3, &vals);
    let mut lp_checks = 0usize;
    let mut pairs = 0usize;
    for rep in &orbits {
        let rep_weight = Weight::from_values(rep);
        let lambda_dense = AmbientVector::from_weight(&rep_weight, n).map_err(|e| e.to_string())?;
        let members: Vec<&Vec<i64>> = vectors
            .iter()
            .filter(|v| orbit_equal(&Weight::from_values(v), &rep_weight))
            .collect();
        for mu in &vectors {
            let truth = ok(hull_member_bruteforce(
                &AmbientVector::from_ints(mu),
                &lambda_dense,
            ))?;
            lp_checks += 1;
            let mu_r = RationalWeight::from_values(&qs(mu));
            for lambda in &members {
                pairs += 1;
                let got = in_norm_hull(&mu_r, &Weight::from_values(lambda));
                ensure(got == truth, || {
                    format!("mu={mu:?} lambda={lambda:?}: majorization {got}, LP {truth}")
                })?;
            }
        }
    }
    ensure(pairs == vectors.len() * vectors.len(), || {
        format!("covered {pairs} pairs")
    })?;
    Ok(format!(
        "{pairs} (lambda, mu) pairs, {lp_checks} exact LP hulls"
    ))
}

fn totals_forced() -> Outcome {
    let vals: Vec<i64> = (-2..=2).collect();
    let mut checked = 0usize;
    let mut finite_members = 0usize;
    let mut padded_only = 0usize;
    for n in 1..=4 {
        let vectors = sparse_vectors(n, n, &[-2, -1, 1, 2]);
        debug_assert_eq!(vectors.len(), vals.len().pow(n as u32));
        for lambda in &vectors {
            let neg_l: Vec<i64> = lambda.iter().map(|x| -x).collect();
            for mu in &vectors {
                checked += 1;
                let neg_m: Vec<i64> = mu.iter().map(|x| -x).collect();
                let (sl, sm) = (lambda.iter().sum::<i64>(), mu.iter().sum::<i64>());
                let finite = (1..=n).all(|k| {
                    top_k_finite(mu, k) <= top_k_finite(lambda, k)
                        && top_k_finite(&neg_m, k) <= top_k_finite(&neg_l, k)
                });
                if finite {
                    finite_members += 1;
                    ensure(sl == sm, || {
                        format!("n={n} lambda={lambda:?} mu={mu:?}: totals differ")
                    })?;
                }
                let padded = (1..=n).all(|k| {
                    brute_top_sum(mu, k) <= brute_top_sum(lambda, k)
                        && brute_top_sum(&neg_m, k) <= brute_top_sum(&neg_l, k)
                });
                if padded && sl != sm {
                    padded_only += 1;
                    let strict = brute_top_sum(mu, n) < brute_top_sum(lambda, n)
                        || brute_top_sum(&neg_m, n) < brute_top_sum(&neg_l, n);
                    ensure(strict, || {
                        format!("n={n} lambda={lambda:?} mu={mu:?}: no strict inequality at k=n")
                    })?;
                }
            }
        }
    }
    ensure(padded_only > 0, || "no pair separates the two hulls".into())?;
    Ok(format!(
        "{checked} pairs; {finite_members} finite-ambient members all have equal totals; \
         {padded_only} zero-padded members with unequal totals, all strict at k=n"
    ))
}

fn extreme_classification() -> Outcome {
    let n = 4;
    let vectors = sparse_vectors(n, 3, &[-2, -1, 1, 2]);
    for v in &vectors {
        let lambda = Weight::from_values(v);
        let mut predicted = BTreeSet::new();
        for sig in &extreme_points_weakstar(&lambda).signatures {
            let dense = ok(AmbientVector::from_weight(&sig.representative(), n))?;
            predicted.extend(distinct_permutations(&dense));
        }
        let vertices = ok(polytope_vertices(&lambda, n))?;
        ensure(vertices == predicted, || {
            format!("lambda={v:?}: vertices {vertices:?}, predicted {predicted:?}")
        })?;
        let perm = ok(permutahedron_vertices(&lambda, n))?;
        let orbit = ok(orbit_points(&lambda, n))?;
        ensure(perm == orbit, || {
            format!("lambda={v:?}: permutahedron vertices differ from orbit")
        })?;
    }
    Ok(format!("{} weights in ambient {n}", vectors.len()))
}

fn separation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e9a);
    let mut done = 0;
    let mut min_gap: Option<Q> = None;
    while done < 500 {
        let lambda = random_weight(&mut rng, 4, 3, 6);
        let mu = random_weight(&mut rng, 4, 3, 6);
        if orbit_equal(&lambda, &mu) {
            continue;
        }
        done += 1;
        let cert = ok(separating_vector(&lambda, &mu))?;
        ensure(cert.verify(&lambda, &mu), || {
            format!("{lambda:?} vs {mu:?}: certificate fails")
        })?;
        let (outside, inside) = match cert.direction {
            SeparationDirection::OutsideCoLambda => (&mu, &lambda),
            SeparationDirection::LambdaOutsideCoMu => (&lambda, &mu),
        };
        let entries: Vec<Q> = cert.witness.iter().map(|(_, x)| x.clone()).collect();
        let sign = entries.first().cloned().unwrap_or_else(|| q(1));
        ensure(
            entries.iter().all(|x| x == &sign) && sign.abs() == q(1),
            || format!("witness {:?} is not a signed indicator", cert.witness),
        )?;
        let k = entries.len();
        let lhs: Q = cert
            .witness
            .iter()
            .map(|(j, x)| x * q(outside.get(j)))
            .sum();
        let inside_vals: Vec<i64> = if sign.is_positive() {
            inside.values()
        } else {
            inside.values().iter().map(|v| -v).collect()
        };
        let rhs = q(brute_top_sum(&inside_vals, k));
        let gap = lhs - rhs;
        ensure(gap >= q(1) && gap == cert.gap, || {
            format!(
                "{lambda:?} vs {mu:?}: gap {} (certificate says {})",
                gap, cert.gap
            )
        })?;
        if min_gap.as_ref().is_none_or(|m| &gap < m) {
            min_gap = Some(gap);
        }
    }
    Ok(format!(
        "500 pairs, smallest gap {}",
        min_gap.unwrap_or_default()
    ))
}

fn schur_weyl() -> Outcome {
    let mut components = 0;
    for k in 1..=4 {
        let shapes = partitions(k);
        let projectors: Vec<GroupAlgebraElement> = shapes
            .iter()
            .map(isotypic_projector)
            .collect::<schurweyl::Result<_>>()
            .map_err(|e| e.to_string())?;
        let mut sum = GroupAlgebraElement::zero(k);
        for (i, p) in projectors.iter().enumerate() {
            sum = &sum + p;
            ensure(p.is_central(), || format!("P_{} is not central", shapes[i]))?;
            for (j, r) in projectors.iter().enumerate() {
                let expect = if i == j {
                    p.clone()
                } else {
                    GroupAlgebraElement::zero(k)
                };
                ensure((p * r) == expect, || {
                    format!("P_{} P_{} is wrong", shapes[i], shapes[j])
                })?;
            }
        }
        ensure(sum == GroupAlgebraElement::identity(k), || {
            format!("projectors of S_{k} do not sum to 1")
        })?;
        for n in 1..=3 {
            let decomposition = ok(schur_weyl_decompose(n, k))?;
            let total: usize = decomposition.iter().map(|c| c.dim_s * c.dim_m).sum();
            ensure(total == n.pow(k as u32), || {
                format!("(n,k)=({n},{k}): total {total}")
            })?;
            for c in &decomposition {
                components += 1;
                let syt = standard_tableaux(&c.partition).len();
                let ssyt = semistandard_count(&c.partition, n) as usize;
                ensure(
                    c.dim_m == syt
                        && c.dim_m as u128 == c.partition.hook_length_count()
                        && c.dim_s == ssyt
                        && c.projector_rank == syt * ssyt,
                    || {
                        format!(
                            "(n,k)=({n},{k}) {}: {c:?}, SYT {syt}, SSYT {ssyt}",
                            c.partition
                        )
                    },
                )?;
                if c.partition.num_rows() <= n {
                    let v = ok(highest_weight_vector(&c.partition, n))?;
                    ensure(!v.is_zero(), || {
                        format!("{} highest weight vector vanishes", c.partition)
                    })?;
                    for i in 0..n {
                        for j in i + 1..n {
                            ensure(v.apply_elementary(i, j).is_zero(), || {
                                format!("E_{i}{j} does not kill the {} vector (n={n})", c.partition)
                            })?;
                        }
                    }
                }
            }
        }
    }
    Ok(format!(
        "{components} isotypic components over n <= 3, k <= 4"
    ))
}

fn weight_sets() -> Outcome {
    let shapes: [&[usize]; 5] = [&[2], &[1, 1], &[2, 1], &[3, 1], &[2, 2]];
    let mut cases = 0;
    for parts in shapes {
        let shape = partition(parts);
        let lambda = shape.to_weight();
        let size = shape.size() as i64;
        for n in [2usize, 3] {
            cases += 1;
            let weights: BTreeSet<Weight> = ok(weight_multiset(&shape, n))?.into_keys().collect();
            let candidates = sparse_vectors(n, n, &(1..=size).collect::<Vec<_>>());
            let hull: BTreeSet<Weight> = candidates
                .iter()
                .filter(|mu| in_norm_hull(&RationalWeight::from_values(&qs(mu)), &lambda))
                .map(|mu| Weight::from_values(mu))
                .collect();
            ensure(weights == hull, || {
                format!("{shape}, n={n}: weights {weights:?} vs hull {hull:?}")
            })?;
            let points: Vec<AmbientVector> = weights
                .iter()
                .map(|w| AmbientVector::from_weight(w, n))
                .collect::<schurweyl::Result<_>>()
                .map_err(|e| e.to_string())?;
            let orbit = ok(orbit_points(&lambda, n))?;
            ensure(hull_vertices(&points) == orbit, || {
                format!("{shape}, n={n}: vertex set differs")
            })?;
        }
    }
    Ok(format!("{cases} (shape, n) cases"))
}

fn u_basis(n: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for j in 0..n {
        out.push(Matrix::elementary(n, j, j).times_i());
        for k in j + 1..n {
            let (a, b) = (Matrix::elementary(n, j, k), Matrix::elementary(n, k, j));
            out.push(&a - &b);
            out.push((&a + &b).times_i());
        }
    }
    out
}

/// `-i Tr(D [X, IX])` with `X = Z - Z*`, `IX = i (Z + Z*)`, by explicit sums.
fn kaehler_by_hand(lambda: &[i64], z: &Matrix) -> Q {
    let n = z.dim();
    let x = |a: usize, b: usize| z.get(a, b) - z.get(b, a).conj();
    let ix = |a: usize, b: usize| c_i() * (z.get(a, b) + z.get(b, a).conj());
    let mut tr = c_zero();
    for (j, &l) in lambda.iter().enumerate() {
        let mut cjj = c_zero();
        for m in 0..n {
            cjj = cjj + x(j, m) * ix(m, j) - ix(j, m) * x(m, j);
        }
        tr += cjj * c_real(q(l));
    }
    let v = -c_i() * tr;
    assert!(v.im.is_zero());
    v.re
}

fn momentum_identities() -> Outcome {
    let shapes: [&[usize]; 4] = [&[1], &[2], &[1, 1], &[2, 1]];
    let mut basis_checks = 0;
    let mut elementary_checks = 0;
    for parts in shapes {
        let shape = partition(parts);
        for n in 1..=3 {
            if shape.num_rows() > n {
                continue;
            }
            let v = ok(highest_weight_vector(&shape, n))?;
            let lambda = shape.to_weight();
            for x in u_basis(n) {
                basis_checks += 1;
                let phi = ok(momentum_value(&shape, n, &v, &x))?;
                let psi = ok(psi_eval(&lambda, &x))?;
                ensure(phi == psi, || {
                    format!("{shape}, n={n}: Phi {phi} vs psi {psi} at {x:?}")
                })?;
            }
            let dense = ok(lambda.to_dense(n))?;
            for i in 0..n {
                for j in 0..n {
                    elementary_checks += 1;
                    let e = Matrix::elementary(n, i, j);
                    let holds = if dense[i] >= dense[j] {
                        ok(eigenvector_identity_check(&shape, n, &e))?
                    } else {
                        ok(lowering_expectation_vanishes(&shape, n, &e))?
                    };
                    ensure(holds, || {
                        format!("{shape}, n={n}: identity fails at E_{i}{j}")
                    })?;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xcae1);
    let mut positive = 0;
    for _ in 0..200 {
        let n = rng.gen_range(2..=4);
        let lambda = random_weight(&mut rng, n, 3, n);
        let dense = ok(lambda.to_dense(n))?;
        let z = Matrix::from_fn(n, |a, b| {
            if dense[a] > dense[b] && rng.gen_bool(0.7) {
                cq(rand_q(&mut rng), rand_q(&mut rng))
            } else {
                c_zero()
            }
        });
        let closed = ok(kaehler_closed_form(&lambda, &z))?;
        let direct = ok(kaehler_direct(&lambda, &z))?;
        let by_hand = kaehler_by_hand(&dense, &z);
        let floor: Q = z.nonzero_entries().map(|(_, _, c)| norm_sqr(c)).sum::<Q>() * q(2);
        ensure(
            closed == direct && direct == by_hand && closed >= floor,
            || {
                format!("lambda={lambda:?} Z={z:?}: closed {closed}, direct {direct}, by hand {by_hand}")
            },
        )?;
        if closed.is_positive() {
            positive += 1;
        }
    }
    Ok(format!(
        "{basis_checks} basis evaluations, {elementary_checks} elementary matrices, \
         200 Kähler values ({positive} nonzero)"
    ))
}

fn matrix_tests() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xd1a9);
    let (mut members, mut equalities) = (0, 0);
    for case in 0..1000 {
        let n = rng.gen_range(1..=4);
        let lambda = random_weight(&mut rng, n, 3, n);
        let sampled = case % 2 == 0;
        let diag: Vec<Q> = if sampled {
            ok(sample_diagonal_member(
                &lambda,
                n,
                case % 4 == 0,
                3,
                &mut rng,
            ))?
        } else {
            (0..n).map(|_| rand_q(&mut rng)).collect()
        };
        let mu = RationalWeight::from_values(&diag);
        let (weak, norm) = (in_weakstar_hull(&mu, &lambda), in_norm_hull(&mu, &lambda));
        let x = Matrix::diagonal(&diag);
        let checks = [
            (ok(in_momentum_set_via_spectrum(&x, &lambda, false))?, weak),
            (ok(in_momentum_set_via_spectrum(&x, &lambda, true))?, norm),
            (ok(in_momentum_set_matrix(&x, &lambda))?, weak),
            (ok(in_norm_momentum_set_matrix(&x, &lambda))?, norm),
        ];
        ensure(checks.iter().all(|(a, b)| a == b), || {
            format!("lambda={lambda:?} diag={diag:?}: {checks:?}")
        })?;
        let u = random_unitary(n, 2, &mut rng);
        let y = x.conjugate_by(&u);
        ensure(
            ok(in_momentum_set_matrix(&y, &lambda))? == weak
                && ok(in_norm_momentum_set_matrix(&y, &lambda))? == norm,
            || format!("lambda={lambda:?} diag={diag:?}: conjugated matrix disagrees"),
        )?;
        if weak {
            members += 1;
            let d_norm = ok(d_lambda(&lambda, n))?.hs_norm_sqr();
            let x_norm = y.hs_norm_sqr();
            let in_orbit = ok(coadjoint_orbit_member(&y, &lambda))?;
            ensure(x_norm <= d_norm && ((x_norm == d_norm) == in_orbit), || {
                format!(
                    "lambda={lambda:?} diag={diag:?}: norm {x_norm} vs {d_norm}, orbit {in_orbit}"
                )
            })?;
            if in_orbit {
                equalities += 1;
            }
        }
    }
    ensure(equalities > 0, || {
        "no sampled member reached the orbit".into()
    })?;
    Ok(format!(
        "1000 diagonals agree; rigidity on {members} members ({equalities} on the orbit)"
    ))
}

fn strong_exposure() -> Outcome {
    let list: [&[i64]; 6] = [&[1], &[2, -1], &[1, 1, -1], &[3, 1], &[2, -2], &[2, 1, -1]];
    let mut rng = ChaCha8Rng::seed_from_u64(0xe4b0);
    let mut tight = 0;
    for vals in list {
        let lambda = Weight::from_values(vals);
        let n = (vals.len() + 1).min(4);
        let d = ok(d_lambda(&lambda, n))?;
        for i in 0..1000 {
            let t = ok(sample_member(&lambda, n, i % 2 == 1, &mut rng))?;
            let report = ok(strong_exposure_gap(&t, &lambda))?;
            let diff = &t - &d;
            let hs: Q = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .map(|(a, b)| norm_sqr(diff.get(a, b)))
                .sum();
            let gap = (d.trace_product(&d) - d.trace_product(&t)).re;
            ensure(report.hs_dist_sq == hs && report.gap == gap, || {
                format!("lambda={vals:?}: report {report:?} vs recomputed ({hs}, {gap})")
            })?;
            ensure(hs <= &gap * q(2), || {
                format!("lambda={vals:?} T={t:?}: {hs} > 2*{gap}")
            })?;
            if hs == &gap * q(2) {
                tight += 1;
            }
        }
    }
    Ok(format!("6000 samples, {tight} with equality"))
}

fn closure_approximation() -> Outcome {
    let lambda = Weight::from_values(&[3, 2, 1]);
    let vals = [3i64, 2, 1];
    let mut lines = Vec::new();
    for c in 0..=3 {
        let mu = Weight::from_values(&vals[..c]);
        let dropped: i64 = vals[c..].iter().sum();
        let mut last: Option<Q> = None;
        let mut row = Vec::new();
        for n in 3..=7usize {
            let dist = ok(weakstar_distance(&mu, &lambda, n))?;
            let bound = if dropped == 0 {
                q(0)
            } else {
                qr(dropped, (n - c) as i64)
            };
            let mut witness = qs(&vals[..c]);
            witness.resize(n, bound.clone());
            let lambda_dense = ok(AmbientVector::from_weight(&lambda, n))?;
            ensure(
                ok(hull_member_bruteforce(
                    &AmbientVector(witness),
                    &lambda_dense,
                ))?,
                || format!("c={c}, n={n}: averaging witness outside the hull"),
            )?;
            ensure(dist <= bound, || {
                format!("c={c}, n={n}: distance {dist} exceeds {bound}")
            })?;
            // coarser witness: average over m disjoint placements of the dropped block
            let block = (vals.len() - c) as i64;
            let m = if block == 0 { 0 } else { (n - c) as i64 / block };
            if m > 0 {
                let coarse = qr(vals[c] * block, m);
                ensure(bound <= coarse, || {
                    format!("c={c}, n={n}: uniform witness {bound} above block witness {coarse}")
                })?;
            }
            if let Some(prev) = &last {
                ensure(&dist <= prev, || {
                    format!("c={c}: distance rises to {dist} at n={n}")
                })?;
            }
            row.push(dist.to_string());
            last = Some(dist);
        }
        lines.push(format!("|F|={c}: [{}]", row.join(", ")));
    }
    Ok(lines.join("; "))
}

fn contractivity() -> Outcome {
    let mut count = 0;
    for a in -3..=3i64 {
        for b in -3..=3i64 {
            count += 1;
            let lambda = Weight::from_values(&[a, b]);
            ensure(is_contractive(&lambda) == (lambda.l1_norm() == 1), || {
                format!("({a},{b}): is_contractive disagrees with the l1 norm")
            })?;
        }
    }
    let shapes: [&[usize]; 6] = [&[1], &[2], &[1, 1], &[2, 1], &[3], &[2, 2]];
    let mut rng = ChaCha8Rng::seed_from_u64(0xc047);
    for _ in 0..100 {
        let shape = partition(shapes[rng.gen_range(0..shapes.len())]);
        let n = rng.gen_range(shape.num_rows().max(2)..=3);
        let x: Vec<Q> = (0..n).map(|_| rand_q(&mut rng)).collect();
        let norm = ok(diagonal_rep_norm(&shape, n, &x))?;
        let by_contents = semistandard_contents(&shape, n)
            .keys()
            .map(|c| {
                c.iter()
                    .zip(&x)
                    .map(|(&m, xi)| q(m as i64) * xi)
                    .sum::<Q>()
                    .abs()
            })
            .max()
            .unwrap_or_default();
        ensure(norm == by_contents, || {
            format!("{shape}, x={x:?}: {norm} vs contents {by_contents}")
        })?;
        let ix = Matrix::diagonal(&x).times_i();
        let vectors = ok(isotypic_weight_vectors(&shape, n))?;
        let mut best = Q::zero();
        for v in &vectors {
            let phi = ok(momentum_value(&shape, n, v, &ix))?.abs();
            ensure(phi <= norm, || {
                format!("{shape}, x={x:?}: |Phi| {phi} > {norm}")
            })?;
            best = best.max(phi);
        }
        for _ in 0..5 {
            let mut v = vectors[rng.gen_range(0..vectors.len())].clone();
            for _ in 0..2 {
                let w = &vectors[rng.gen_range(0..vectors.len())];
                v = ok(v.add(&w.scale(&rand_q(&mut rng))))?;
            }
            if v.is_zero() {
                continue;
            }
            let phi = ok(momentum_value(&shape, n, &v, &ix))?.abs();
            ensure(phi <= norm, || {
                format!("{shape}, x={x:?}: |Phi| {phi} > {norm}")
            })?;
        }
        ensure(best == norm, || {
            format!("{shape}, x={x:?}: sup {best} never reaches {norm}")
        })?;
    }
    Ok(format!(
        "{count} weights; 100 diagonal norms attained at weight vectors"
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("hull equivalence", hull_equivalence),
        ("finite-ambient totals", totals_forced),
        ("extreme points", extreme_classification),
        ("separation", separation),
        ("Schur-Weyl", schur_weyl),
        ("weight sets", weight_sets),
        ("momentum identities", momentum_identities),
        ("matrix tests", matrix_tests),
        ("strong exposure", strong_exposure),
        ("closure approximation", closure_approximation),
        ("contractivity", contractivity),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|p| Err(format!("panicked: {:?}", p.downcast_ref::<String>())));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(msg) => println!("criterion {:>2} {name}: PASS ({secs:.1}s) {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({secs:.1}s) {msg}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
