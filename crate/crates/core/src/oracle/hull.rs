//! Brute-force ground truth for hull questions in a finite ambient
//! `J_n = {0, .., n-1}`: orbit enumeration, LP membership, vertex
//! enumeration and Chebyshev distances. Nothing here calls into the
//! majorization module.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::lp::{lp_feasible, Direction, LinearProgram, LpOutcome, Sense};
use crate::error::{Error, Result};
use crate::rational::{q, Q};
use crate::weights::Weight;

pub const MAX_ORBIT_AMBIENT: usize = 7;
pub const MAX_VERTEX_AMBIENT: usize = 5;

/// A dense point of `Q^n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AmbientVector(pub Vec<Q>);

impl AmbientVector {
    pub fn from_ints(v: &[i64]) -> Self {
        Self(v.iter().map(|&x| q(x)).collect())
    }

    pub fn from_weight(w: &Weight, n: usize) -> Result<Self> {
        Ok(Self::from_ints(&w.to_dense(n)?))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Converts back to an integral weight, if every coordinate is an integer.
    pub fn to_weight(&self) -> Option<Weight> {
        let vals: Option<Vec<i64>> = self.0.iter().map(crate::rational::to_i64).collect();
        vals.map(|v| Weight::from_values(&v))
    }
}

fn check_ambient(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::Resource {
            what: "ambient dimension",
            value: n,
            limit,
        });
    }
    Ok(())
}

/// Rearranges `v` into the lexicographically next permutation; false at the last one.
fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All distinct coordinate permutations of `v` (multinomially many).
pub fn distinct_permutations(v: &AmbientVector) -> Vec<AmbientVector> {
    let mut cur = v.0.clone();
    cur.sort();
    let mut out = vec![AmbientVector(cur.clone())];
    while next_permutation(&mut cur) {
        out.push(AmbientVector(cur.clone()));
    }
    out
}

/// Is `mu` a convex combination of the points in `points`? Exact LP.
fn in_convex_hull(mu: &AmbientVector, points: &[AmbientVector]) -> bool {
    if points.is_empty() {
        return false;
    }
    let n = mu.dim();
    let mut lp = LinearProgram::new(points.len());
    for i in 0..n {
        let row = points.iter().map(|p| p.0[i].clone()).collect();
        lp.add_constraint(row, Sense::Eq, mu.0[i].clone())
            .expect("row width");
    }
    lp.add_constraint(vec![Q::one(); points.len()], Sense::Eq, Q::one())
        .expect("row width");
    lp_feasible(&lp).is_some()
}

/// Does `mu` lie in the convex hull of all coordinate permutations of `lambda`?
pub fn hull_member_bruteforce(mu: &AmbientVector, lambda: &AmbientVector) -> Result<bool> {
    if mu.dim() != lambda.dim() {
        return Err(Error::Dimension {
            expected: lambda.dim(),
            found: mu.dim(),
        });
    }
    check_ambient(lambda.dim(), MAX_ORBIT_AMBIENT)?;
    Ok(in_convex_hull(mu, &distinct_permutations(lambda)))
}

/// Does `mu` lie in the convex hull of all permuted truncations of `lambda`
/// (every sub-multiset of its nonzero values, zero-filled) inside `mu`'s ambient?
pub fn weakstar_member_bruteforce(mu: &AmbientVector, lambda: &Weight) -> Result<bool> {
    let n = mu.dim();
    check_ambient(n, MAX_ORBIT_AMBIENT)?;
    let values = lambda.values();
    if values.len() > n {
        return Err(Error::Dimension {
            expected: values.len(),
            found: n,
        });
    }
    let mut points = BTreeSet::new();
    for mask in 0u32..(1 << values.len()) {
        let mut dense: Vec<i64> = (0..values.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| values[i])
            .collect();
        dense.resize(n, 0);
        points.extend(distinct_permutations(&AmbientVector::from_ints(&dense)));
    }
    let points: Vec<AmbientVector> = points.into_iter().collect();
    Ok(in_convex_hull(mu, &points))
}

/// Vertices of `conv(S_n lambda)`.
pub fn permutahedron_vertices(lambda: &Weight, n: usize) -> Result<BTreeSet<AmbientVector>> {
    check_ambient(n, MAX_ORBIT_AMBIENT)?;
    Ok(hull_vertices(&distinct_permutations(
        &AmbientVector::from_weight(lambda, n)?,
    )))
}

/// Vertices of the convex hull of a finite point set, found by discarding
/// every point that is a convex combination of the others.
pub fn hull_vertices(points: &[AmbientVector]) -> BTreeSet<AmbientVector> {
    let distinct: Vec<AmbientVector> = points
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let keep: Vec<bool> = (0..distinct.len())
        .into_par_iter()
        .map(|i| {
            let others: Vec<AmbientVector> = distinct
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, p)| p.clone())
                .collect();
            !in_convex_hull(&distinct[i], &others)
        })
        .collect();
    distinct
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(p, _)| p)
        .collect()
}

/// Largest sum of `k` entries of `values` padded with `k` zeros, by exhaustive
/// search over index subsets.
pub fn brute_top_sum(values: &[i64], k: usize) -> i64 {
    let mut padded = values.to_vec();
    padded.extend(std::iter::repeat_n(0, k));
    let mut best = i64::MIN;
    for_each_combination(padded.len(), k, |c| {
        best = best.max(c.iter().map(|&i| padded[i]).sum());
    });
    best
}

fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Half-spaces `row . mu <= rhs` cutting out `{ mu : L_k(±mu) <= L_k(±lambda) }` in `Q^n`.
fn region_constraints(lambda: &Weight, n: usize) -> Vec<(Vec<i64>, i64)> {
    let vals = lambda.values();
    let neg: Vec<i64> = vals.iter().map(|v| -v).collect();
    let mut out = Vec::with_capacity(2 * ((1 << n) - 1));
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        let ind: Vec<i64> = (0..n).map(|i| ((mask >> i) & 1) as i64).collect();
        out.push((ind.clone(), brute_top_sum(&vals, size)));
        out.push((ind.iter().map(|x| -x).collect(), brute_top_sum(&neg, size)));
    }
    out
}

/// Solves the square integer system `a x = b` by fraction-free elimination.
/// Returns `(numerators, denominator)` with `denominator > 0`, or `None` when
/// singular.
fn solve_integer_system(a: &[Vec<i64>], b: &[i64]) -> Option<(Vec<i128>, i128)> {
    let n = b.len();
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .zip(b)
        .map(|(r, &bi)| r.iter().map(|&x| x as i128).chain([bi as i128]).collect())
        .collect();
    let mut prev = 1i128;
    for k in 0..n {
        let p = (k..n).find(|&r| m[r][k] != 0)?;
        m.swap(k, p);
        for i in k + 1..n {
            for j in k + 1..=n {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    // back substitution in rationals over the common denominator det
    let det = m[n - 1][n - 1];
    let mut x = vec![0i128; n]; // x_i = num_i / det
    for i in (0..n).rev() {
        // m[i][i] * x_i = m[i][n] - sum_{j>i} m[i][j] x_j
        let mut acc = m[i][n] * det;
        for j in i + 1..n {
            acc -= m[i][j] * x[j];
        }
        debug_assert_eq!(acc % m[i][i], 0);
        x[i] = acc / m[i][i];
    }
    if det < 0 {
        Some((x.into_iter().map(|v| -v).collect(), -det))
    } else {
        Some((x, det))
    }
}

/// Vertices of `R_n = { mu in Q^n : sum_A mu <= L_|A|(lambda), sum_A -mu <= L_|A|(-lambda) }`,
/// by enumerating every `n`-subset of the defining half-spaces.
pub fn polytope_vertices(lambda: &Weight, n: usize) -> Result<BTreeSet<AmbientVector>> {
    check_ambient(n, MAX_VERTEX_AMBIENT)?;
    if n == 0 {
        return Ok(BTreeSet::from([AmbientVector(Vec::new())]));
    }
    let cons = region_constraints(lambda, n);
    let m = cons.len();
    let found: BTreeSet<(Vec<i128>, i128)> = (0..m)
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut local = BTreeSet::new();
            let rest = m - first - 1;
            for_each_combination(rest, n - 1, |c| {
                let pick: Vec<usize> = std::iter::once(first)
                    .chain(c.iter().map(|&i| first + 1 + i))
                    .collect();
                let a: Vec<Vec<i64>> = pick.iter().map(|&i| cons[i].0.clone()).collect();
                let b: Vec<i64> = pick.iter().map(|&i| cons[i].1).collect();
                if let Some((num, den)) = solve_integer_system(&a, &b) {
                    let feasible = cons.iter().all(|(row, rhs)| {
                        let lhs: i128 = row.iter().zip(&num).map(|(&r, &x)| r as i128 * x).sum();
                        lhs <= *rhs as i128 * den
                    });
                    if feasible {
                        local.insert(reduce(num, den));
                    }
                }
            });
            local
        })
        .collect();
    Ok(found
        .into_iter()
        .map(|(num, den)| {
            AmbientVector(
                num.into_iter()
                    .map(|x| Q::new(x.into(), den.into()))
                    .collect(),
            )
        })
        .collect())
}

fn reduce(num: Vec<i128>, den: i128) -> (Vec<i128>, i128) {
    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    let g = num.iter().fold(den, |g, &x| gcd(g, x));
    (num.into_iter().map(|x| x / g).collect(), den / g)
}

/// `min { ||mu - nu||_inf : nu in conv(S_n lambda) }`, exact.
pub fn weakstar_distance(mu: &Weight, lambda: &Weight, n: usize) -> Result<Q> {
    check_ambient(n, MAX_ORBIT_AMBIENT)?;
    let need = mu.span().max(lambda.span());
    if n < need {
        return Err(Error::Dimension {
            expected: need,
            found: n,
        });
    }
    let target = AmbientVector::from_weight(mu, n)?;
    let orbit = distinct_permutations(&AmbientVector::from_weight(lambda, n)?);
    let p = orbit.len();
    // variables: c_1..c_p (convex weights), t
    let mut lp = LinearProgram::new(p + 1);
    for i in 0..n {
        let mut up: Vec<Q> = orbit.iter().map(|o| o.0[i].clone()).collect();
        up.push(-Q::one());
        let down: Vec<Q> = orbit.iter().map(|o| -&o.0[i]).chain([-Q::one()]).collect();
        lp.add_constraint(up, Sense::Le, target.0[i].clone())?;
        lp.add_constraint(down, Sense::Le, -&target.0[i])?;
    }
    let mut sum = vec![Q::one(); p];
    sum.push(Q::zero());
    lp.add_constraint(sum, Sense::Eq, Q::one())?;
    let mut obj = vec![Q::zero(); p];
    obj.push(Q::one());
    lp.set_objective(obj, Direction::Minimize)?;
    match lp.solve() {
        LpOutcome::Optimal { value, .. } => {
            debug_assert!(!value.is_negative());
            Ok(value)
        }
        other => unreachable!("distance LP is always feasible and bounded: {other:?}"),
    }
}

/// Orbit points of `lambda` in the ambient, as a set.
pub fn orbit_points(lambda: &Weight, n: usize) -> Result<BTreeSet<AmbientVector>> {
    check_ambient(n, MAX_ORBIT_AMBIENT)?;
    Ok(
        distinct_permutations(&AmbientVector::from_weight(lambda, n)?)
            .into_iter()
            .collect(),
    )
}

impl From<Vec<Q>> for AmbientVector {
    fn from(v: Vec<Q>) -> Self {
        Self(v)
    }
}
