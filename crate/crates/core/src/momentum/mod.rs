//! Matrix-level momentum sets of `U(n)`.
//!
//! Functionals act on skew-Hermitian arguments and return reals:
//! `psi_D(X) = -i Tr(D X)`. Hermitian arguments are accepted only by the
//! spectral functions.

pub mod matrix;
pub mod sampling;
pub mod spectrum;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

pub use matrix::{Matrix, Symmetry};
pub use spectrum::{Interval, Spectrum};

use crate::error::{arg, Error, Result};
use crate::majorization::{in_norm_hull, in_weakstar_hull, RationalWeight};
use crate::rational::{c_i, c_real, norm_sqr, q, Cq, Q};
use crate::tensor::partition::Partition;
use crate::tensor::space::{
    highest_weight_vector, in_isotypic_component, weight_multiset, TensorVector,
};
use crate::weights::Weight;

/// `D_lambda = diag(lambda_0, .., lambda_{n-1})`.
pub fn d_lambda(lambda: &Weight, n: usize) -> Result<Matrix> {
    let dense = lambda.to_dense(n)?;
    Ok(Matrix::diagonal(
        &dense.into_iter().map(q).collect::<Vec<_>>(),
    ))
}

/// `X -> -i Tr(D X)` on skew-Hermitian `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentumFunctional {
    d: Matrix,
}

impl MomentumFunctional {
    pub fn new(d: Matrix) -> Self {
        Self { d }
    }

    pub fn psi(lambda: &Weight, n: usize) -> Result<Self> {
        Ok(Self::new(d_lambda(lambda, n)?))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.d
    }

    pub fn eval(&self, x: &Matrix) -> Result<Q> {
        self.d.check_dim(x)?;
        if !x.is_skew_hermitian() {
            return arg("functional argument must be skew-Hermitian");
        }
        real(-c_i() * self.d.trace_product(x), "functional value")
    }
}

fn real(z: Cq, what: &str) -> Result<Q> {
    if z.im.is_zero() {
        Ok(z.re)
    } else {
        Err(Error::OracleMismatch(format!("{what} is not real")))
    }
}

/// `psi_lambda(X) = -i Tr(D_lambda X)`.
pub fn psi_eval(lambda: &Weight, x: &Matrix) -> Result<Q> {
    MomentumFunctional::psi(lambda, x.dim())?.eval(x)
}

/// `<dpi(X) v, v>` for a real tensor `v`, where `dpi(X)` is the derivation
/// `sum_p 1 ⊗ .. ⊗ X ⊗ .. ⊗ 1`.
fn derivation_form(v: &TensorVector, x: &Matrix) -> Cq {
    x.nonzero_entries()
        .fold(c_real(Q::zero()), |acc, (a, b, z)| {
            acc + z * c_real(v.apply_elementary(a, b).dot(v))
        })
}

/// `dpi(X) v` split into real and imaginary tensor parts.
fn derivation_apply(v: &TensorVector, x: &Matrix) -> Result<(TensorVector, TensorVector)> {
    let n = v.dim_v();
    let k = v.order();
    let (mut re, mut im) = (TensorVector::zero(n, k), TensorVector::zero(n, k));
    for (a, b, z) in x.nonzero_entries() {
        let w = v.apply_elementary(a, b);
        re = re.add(&w.scale(&z.re))?;
        im = im.add(&w.scale(&z.im))?;
    }
    Ok((re, im))
}

fn check_tensor_input(shape: &Partition, n: usize, v: &TensorVector, x: &Matrix) -> Result<()> {
    if x.dim() != n || v.dim_v() != n {
        return Err(Error::Dimension {
            expected: n,
            found: if x.dim() != n { x.dim() } else { v.dim_v() },
        });
    }
    if v.order() != shape.size() {
        return Err(Error::Dimension {
            expected: shape.size(),
            found: v.order(),
        });
    }
    Ok(())
}

/// `Phi([v])(X) = <-i dpi(X) v, v> / <v, v>` for `v` in the image of the
/// isotypic projector of `shape` inside `(Q^n)^{⊗k}`.
pub fn momentum_value(shape: &Partition, n: usize, v: &TensorVector, x: &Matrix) -> Result<Q> {
    check_tensor_input(shape, n, v, x)?;
    if v.is_zero() {
        return arg("momentum map is undefined at the zero vector");
    }
    if !x.is_skew_hermitian() {
        return arg("momentum map argument must be skew-Hermitian");
    }
    if !in_isotypic_component(v, shape)? {
        return arg(format!("vector is not in the {shape}-isotypic component"));
    }
    let form = derivation_form(v, x);
    real(-c_i() * form, "momentum value").map(|r| r / v.dot(v))
}

/// `s_k(X)`: the sum of the `k` largest eigenvalues of a Hermitian `X`,
/// `1 <= k <= n`. Exact when the spectrum is rational; otherwise each
/// irrational eigenvalue is pinned to within `2^-32`.
pub fn spectral_s_k(x: &Matrix, k: usize) -> Result<Interval> {
    let mut spec = Spectrum::of(x)?;
    spec.refine_to(&Q::new(1.into(), BigInt::one() << 32usize));
    spec.top_sum(k)
}

fn momentum_set_test(x: &Matrix, lambda: &Weight, norm_closed: bool) -> Result<bool> {
    lambda.to_dense(x.dim())?;
    if !x.is_hermitian() {
        return arg("momentum-set test requires a Hermitian matrix");
    }
    let spec = Spectrum::of(x)?;
    match spec.exact_values() {
        Some(values) => {
            let mu = RationalWeight::from_values(&values);
            Ok(if norm_closed {
                in_norm_hull(&mu, lambda)
            } else {
                in_weakstar_hull(&mu, lambda)
            })
        }
        None => spectral_route(x, &spec, lambda, norm_closed),
    }
}

/// The same test decided only through zero-padded `s_k(±X)` intervals,
/// without the eigenvalue majorization shortcut.
pub fn in_momentum_set_via_spectrum(
    x: &Matrix,
    lambda: &Weight,
    norm_closed: bool,
) -> Result<bool> {
    lambda.to_dense(x.dim())?;
    if !x.is_hermitian() {
        return arg("momentum-set test requires a Hermitian matrix");
    }
    spectral_route(x, &Spectrum::of(x)?, lambda, norm_closed)
}

fn spectral_route(x: &Matrix, spec: &Spectrum, lambda: &Weight, norm_closed: bool) -> Result<bool> {
    let n = x.dim();
    if norm_closed && real(x.trace(), "trace")? != q(lambda.total()) {
        return Ok(false);
    }
    // X ⊕ 0 on a larger space: zero-padded sums on both sides
    let dense: Vec<Q> = lambda.to_dense(n)?.into_iter().map(q).collect();
    let target = Spectrum::from_values(&dense);
    let (neg_spec, neg_target) = (spec.negate(), target.negate());
    for k in 1..=n {
        for (s, t) in [(spec, &target), (&neg_spec, &neg_target)] {
            let bound = t.padded_top_sum(k)?.lo;
            if !s.decide_le(&bound, |s| s.padded_top_sum(k))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Weak-* momentum set of `lambda`: `s_k(±X) <= s_k(±D_lambda)` for all `k`,
/// with `s_k` taken for `X ⊕ 0` on an infinite-dimensional space.
pub fn in_momentum_set_matrix(x: &Matrix, lambda: &Weight) -> Result<bool> {
    momentum_set_test(x, lambda, false)
}

/// Norm-closed momentum set: the weak-* conditions plus `Tr X = Tr D_lambda`.
pub fn in_norm_momentum_set_matrix(x: &Matrix, lambda: &Weight) -> Result<bool> {
    momentum_set_test(x, lambda, true)
}

/// Splitting of a matrix by the eigenvalue order of `D_lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleDecomposition {
    /// Entries `(i, j)` with `lambda_i < lambda_j`.
    pub lower: Matrix,
    /// Entries with `lambda_i = lambda_j`: the commutant of `D_lambda`.
    pub block_diagonal: Matrix,
    /// Entries `(i, j)` with `lambda_i > lambda_j`.
    pub upper: Matrix,
}

impl TripleDecomposition {
    pub fn reconstruct(&self) -> Matrix {
        &(&self.lower + &self.block_diagonal) + &self.upper
    }
}

pub fn triple_decompose(x: &Matrix, lambda: &Weight, n: usize) -> Result<TripleDecomposition> {
    if x.dim() != n {
        return Err(Error::Dimension {
            expected: n,
            found: x.dim(),
        });
    }
    let l = lambda.to_dense(n)?;
    let part = |keep: fn(i64, i64) -> bool| {
        Matrix::from_fn(n, |i, j| {
            if keep(l[i], l[j]) {
                x.get(i, j).clone()
            } else {
                c_real(Q::zero())
            }
        })
    };
    Ok(TripleDecomposition {
        lower: part(|a, b| a < b),
        block_diagonal: part(|a, b| a == b),
        upper: part(|a, b| a > b),
    })
}

/// `2 sum_{lambda_j > lambda_k} |z_jk|^2 (lambda_j - lambda_k)`.
pub fn kaehler_closed_form(lambda: &Weight, z: &Matrix) -> Result<Q> {
    let l = lambda.to_dense(z.dim())?;
    let mut acc = Q::zero();
    for (j, k, zjk) in z.nonzero_entries() {
        if l[j] <= l[k] {
            return arg(format!(
                "entry ({}, {}) lies outside the allowed pattern",
                j + 1,
                k + 1
            ));
        }
        acc += norm_sqr(zjk) * q(2 * (l[j] - l[k]));
    }
    Ok(acc)
}

/// `psi_lambda([X, IX])` with `X = Z - Z*` and `IX = i (Z + Z*)`, by forming
/// the commutator.
pub fn kaehler_direct(lambda: &Weight, z: &Matrix) -> Result<Q> {
    let adj = z.adjoint();
    let x = z - &adj;
    let ix = (z + &adj).times_i();
    psi_eval(lambda, &x.commutator(&ix))
}

/// The Kähler form value, computed both ways; they must agree exactly.
pub fn kaehler_value(lambda: &Weight, z: &Matrix) -> Result<Q> {
    let closed = kaehler_closed_form(lambda, z)?;
    let direct = kaehler_direct(lambda, z)?;
    if closed != direct {
        return Err(Error::OracleMismatch(format!(
            "Kähler closed form {closed} differs from commutator value {direct}"
        )));
    }
    Ok(closed)
}

fn shape_weight(shape: &Partition, n: usize) -> Result<Vec<i64>> {
    shape.to_weight().to_dense(n)
}

/// Checks `dpi(X) v = (sum_j lambda_j X_jj) v` on the highest weight vector,
/// for `X` supported where `lambda_i >= lambda_j`.
pub fn eigenvector_identity_check(shape: &Partition, n: usize, x: &Matrix) -> Result<bool> {
    let l = shape_weight(shape, n)?;
    if x.dim() != n {
        return Err(Error::Dimension {
            expected: n,
            found: x.dim(),
        });
    }
    if let Some((i, j, _)) = x.nonzero_entries().find(|&(i, j, _)| l[i] < l[j]) {
        return arg(format!(
            "entry ({}, {}) is outside the parabolic pattern lambda_i >= lambda_j",
            i + 1,
            j + 1
        ));
    }
    let v = highest_weight_vector(shape, n)?;
    let (re, im) = derivation_apply(&v, x)?;
    let c: Cq = (0..n).fold(c_real(Q::zero()), |acc, j| {
        acc + x.get(j, j) * c_real(q(l[j]))
    });
    Ok(re == v.scale(&c.re) && im == v.scale(&c.im))
}

/// `<dpi(X) v, v> / <v, v>` at the highest weight vector.
pub fn highest_weight_expectation(shape: &Partition, n: usize, x: &Matrix) -> Result<Cq> {
    if x.dim() != n {
        return Err(Error::Dimension {
            expected: n,
            found: x.dim(),
        });
    }
    let v = highest_weight_vector(shape, n)?;
    let norm = v.dot(&v);
    let form = derivation_form(&v, x);
    Ok(Cq::new(form.re / &norm, form.im / norm))
}

/// For `X` supported where `lambda_i < lambda_j`: `<dpi(X) v, v> = 0` at the
/// highest weight vector.
pub fn lowering_expectation_vanishes(shape: &Partition, n: usize, x: &Matrix) -> Result<bool> {
    let l = shape_weight(shape, n)?;
    if x.nonzero_entries().any(|(i, j, _)| l[i] >= l[j]) {
        return arg("matrix is not supported where lambda_i < lambda_j");
    }
    Ok(highest_weight_expectation(shape, n, x)?.is_zero())
}

/// `X` is unitarily conjugate to `D_lambda` (equal characteristic polynomials).
pub fn coadjoint_orbit_member(x: &Matrix, lambda: &Weight) -> Result<bool> {
    let d = d_lambda(lambda, x.dim())?;
    if !x.is_hermitian() {
        return Ok(false);
    }
    Ok(spectrum::characteristic_polynomial(x)? == spectrum::characteristic_polynomial(&d)?)
}

/// Exposure data of `T` relative to `f(X) = Tr(D_lambda X)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExposureReport {
    /// `f(D_lambda) - f(T)`.
    #[serde(serialize_with = "ser_q")]
    pub gap: Q,
    /// `||T - D_lambda||_2^2`.
    #[serde(serialize_with = "ser_q")]
    pub hs_dist_sq: Q,
    /// `||T - D_lambda||_1`, exact or as an enclosing interval.
    pub trace_dist: Interval,
}

fn ser_q<S: serde::Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::rational::format_q(x))
}

impl ExposureReport {
    /// `||T - D||_2^2 <= 2 (f(D) - f(T))`.
    pub fn bound_holds(&self) -> bool {
        self.hs_dist_sq <= &self.gap * q(2)
    }
}

pub fn strong_exposure_gap(t: &Matrix, lambda: &Weight) -> Result<ExposureReport> {
    if !in_momentum_set_matrix(t, lambda)? {
        return arg("matrix is not in the momentum set");
    }
    let d = d_lambda(lambda, t.dim())?;
    let f = |x: &Matrix| real(d.trace_product(x), "Tr(D X)");
    let gap = f(&d)? - f(t)?;
    let diff = t - &d;
    Ok(ExposureReport {
        gap,
        hs_dist_sq: diff.hs_norm_sqr(),
        trace_dist: Spectrum::of(&diff)?.trace_norm(),
    })
}

/// Operator norm of `dpi(i diag(x))` on the `shape` component:
/// `max |<alpha, x>|` over its weights.
pub fn diagonal_rep_norm(shape: &Partition, n: usize, x: &[Q]) -> Result<Q> {
    if x.len() != n {
        return Err(Error::Dimension {
            expected: n,
            found: x.len(),
        });
    }
    Ok(weight_multiset(shape, n)?
        .keys()
        .map(|alpha| alpha.iter().map(|(j, a)| &x[j] * q(a)).sum::<Q>().abs())
        .max()
        .unwrap_or_else(Q::zero))
}
