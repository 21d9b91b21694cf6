//! Seeded generators for rational unitaries and momentum-set members.

use rand::seq::SliceRandom;
use rand::Rng;

use super::matrix::Matrix;
use crate::error::Result;
use crate::majorization::{extreme_points_norm_hull, extreme_points_weakstar};
use crate::rational::{c_real, c_zero, cq, q, qr, Cq, Q};
use crate::weights::Weight;

/// Rational points `(c, s)` on the unit circle.
const PYTHAGOREAN: [(i64, i64, i64); 3] = [(3, 4, 5), (5, 12, 13), (8, 15, 17)];

fn random_phase(rng: &mut impl Rng) -> Cq {
    match rng.gen_range(0..4) {
        0 => c_real(q(1)),
        1 => c_real(q(-1)),
        2 => cq(q(0), q(1)),
        _ => cq(q(0), q(-1)),
    }
}

/// A random unitary with Gaussian-rational entries: a permutation, unit
/// phases and `rotations` random rational Givens rotations.
pub fn random_unitary(n: usize, rotations: usize, rng: &mut impl Rng) -> Matrix {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    let phases = Matrix::from_fn(n, |i, j| if i == j { random_phase(rng) } else { c_zero() });
    let mut u = &Matrix::permutation(&p) * &phases;
    if n < 2 {
        return u;
    }
    for _ in 0..rotations {
        let a = rng.gen_range(0..n);
        let b = (a + rng.gen_range(1..n)) % n;
        let (x, y, r) = PYTHAGOREAN[rng.gen_range(0..PYTHAGOREAN.len())];
        let (c, s) = (qr(x, r), qr(y, r) * q(if rng.gen() { 1 } else { -1 }));
        let mut g = Matrix::identity(n);
        g.set(a, a, c_real(c.clone()));
        g.set(b, b, c_real(c));
        g.set(a, b, c_real(-s.clone()));
        g.set(b, a, c_real(s));
        u = &g * &u;
    }
    u
}

fn random_point(extremes: &[Weight], n: usize, rng: &mut impl Rng) -> Result<Vec<i64>> {
    let w = extremes.choose(rng).expect("nonempty extreme set");
    let mut dense = w.to_dense(n)?;
    dense.shuffle(rng);
    Ok(dense)
}

/// A random convex combination of up to `terms` extreme points of the
/// momentum set, as a rational diagonal.
pub fn sample_diagonal_member(
    lambda: &Weight,
    n: usize,
    norm_closed: bool,
    terms: usize,
    rng: &mut impl Rng,
) -> Result<Vec<Q>> {
    let set = if norm_closed {
        extreme_points_norm_hull(lambda)
    } else {
        extreme_points_weakstar(lambda)
    };
    let extremes: Vec<Weight> = set.signatures.iter().map(|s| s.representative()).collect();
    let m = rng.gen_range(1..=terms.max(1));
    let coeffs: Vec<i64> = (0..m).map(|_| rng.gen_range(1..=6)).collect();
    let total: i64 = coeffs.iter().sum();
    let mut diag = vec![q(0); n];
    for c in coeffs {
        let point = random_point(&extremes, n, rng)?;
        for (d, v) in diag.iter_mut().zip(point) {
            *d += qr(c * v, total);
        }
    }
    Ok(diag)
}

/// `U diag U*` for a sampled diagonal member and a random rational unitary.
pub fn sample_member(
    lambda: &Weight,
    n: usize,
    norm_closed: bool,
    rng: &mut impl Rng,
) -> Result<Matrix> {
    let diag = sample_diagonal_member(lambda, n, norm_closed, 3, rng)?;
    let u = random_unitary(n, 2, rng);
    Ok(Matrix::diagonal(&diag).conjugate_by(&u))
}
