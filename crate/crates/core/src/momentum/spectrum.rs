//! Exact spectra of rational Hermitian matrices.
//!
//! Eigenvalues are roots of the characteristic polynomial. Rational roots are
//! found exactly; the rest are kept as isolating intervals that can be refined
//! on demand. No floating point is involved.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::matrix::Matrix;
use crate::error::{arg, Error, Result};
use crate::rational::{c_real, c_zero, format_q, q, Cq, Q};

/// Bisection rounds spent before a comparison is reported as undecided.
pub const MAX_REFINEMENT: usize = 200;

/// Dense polynomial, coefficients from the constant term up.
pub type Poly = Vec<Q>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn degree(p: &Poly) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn eval(p: &Poly, x: &Q) -> Q {
    p.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
}

fn derivative(p: &Poly) -> Poly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * q(i as i64))
            .collect(),
    )
}

fn monic(p: Poly) -> Poly {
    match p.last() {
        Some(lead) if !lead.is_one() => {
            let lead = lead.clone();
            p.into_iter().map(|c| c / &lead).collect()
        }
        _ => p,
    }
}

/// `(quotient, remainder)` of polynomial division.
fn div_rem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut r = a.clone();
    let mut quo = vec![Q::zero(); a.len().saturating_sub(db)];
    let lead = b[db].clone();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &lead;
        for (i, bi) in b.iter().enumerate() {
            r[dr - db + i] -= &c * bi;
        }
        quo[dr - db] = c;
        r = trim(r);
    }
    (trim(quo), r)
}

fn sub(a: &Poly, b: &Poly) -> Poly {
    let zero = Q::zero();
    trim(
        (0..a.len().max(b.len()))
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

fn exact_div(a: &Poly, b: &Poly) -> Poly {
    let (quo, r) = div_rem(a, b);
    debug_assert!(r.is_empty(), "inexact polynomial division");
    quo
}

/// Yun's square-free factorization: `p = c * prod_i f_i^i`, returned as
/// `(f_i, i)` with each `f_i` square-free, monic and non-constant.
pub fn square_free_factors(p: &Poly) -> Vec<(Poly, usize)> {
    let p = monic(trim(p.clone()));
    if degree(&p).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let dp = derivative(&p);
    let a0 = gcd(&p, &dp);
    let mut b = exact_div(&p, &a0);
    let mut d = sub(&exact_div(&dp, &a0), &derivative(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while degree(&b).unwrap_or(0) > 0 {
        let a = gcd(&b, &d);
        if degree(&a).unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        b = exact_div(&b, &a);
        d = sub(&exact_div(&d, &a), &derivative(&b));
        i += 1;
    }
    out
}

/// `det(x I - A)` by the Faddeev–LeVerrier recursion, over the Gaussian
/// rationals.
pub fn characteristic_polynomial_complex(a: &Matrix) -> Vec<Cq> {
    let n = a.dim();
    let mut coeffs = vec![c_zero(); n + 1];
    coeffs[n] = Cq::new(Q::one(), Q::zero());
    let mut m = Matrix::zero(n);
    for k in 1..=n {
        let mut next = a * &m;
        for i in 0..n {
            let z = next.get(i, i) + &coeffs[n - k + 1];
            next.set(i, i, z);
        }
        let tr = a.trace_product(&next);
        coeffs[n - k] = -tr / c_real(q(k as i64));
        m = next;
    }
    coeffs
}

/// Real characteristic polynomial of a Hermitian matrix.
pub fn characteristic_polynomial(a: &Matrix) -> Result<Poly> {
    if !a.is_hermitian() {
        return arg("characteristic polynomial requires a Hermitian matrix");
    }
    characteristic_polynomial_complex(a)
        .into_iter()
        .map(|z| {
            if z.im.is_zero() {
                Ok(z.re)
            } else {
                Err(Error::OracleMismatch(
                    "non-real characteristic coefficient of a Hermitian matrix".into(),
                ))
            }
        })
        .collect()
}

/// Number of sign changes of the Sturm sequence at `x`.
fn sign_changes(seq: &[Poly], x: &Q) -> usize {
    let signs: Vec<i8> = seq
        .iter()
        .map(|p| eval(p, x))
        .filter(|v| !v.is_zero())
        .map(|v| if v.is_positive() { 1 } else { -1 })
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone(), derivative(p)];
    loop {
        let len = seq.len();
        let (_, r) = div_rem(&seq[len - 2], &seq[len - 1]);
        if r.is_empty() {
            return seq;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
}

/// Cauchy bound: every root lies in `(-B, B)`.
fn root_bound(p: &Poly) -> Q {
    let lead = p.last().expect("nonzero polynomial").abs();
    let m = p[..p.len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Q::zero);
    m + Q::one()
}

/// `p` scaled to integer coefficients; returns the leading coefficient.
fn integral_lead(p: &Poly) -> BigInt {
    let l = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    (p.last().expect("nonzero polynomial") * Q::from_integer(l))
        .to_integer()
        .abs()
}

/// A real eigenvalue: exact, or the unique root of a square-free rational
/// polynomial in `(lo, hi]`. Isolated roots are irrational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealRoot {
    Exact(Q),
    Isolated { poly: Poly, lo: Q, hi: Q },
}

impl RealRoot {
    pub fn lo(&self) -> &Q {
        match self {
            RealRoot::Exact(x) => x,
            RealRoot::Isolated { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> &Q {
        match self {
            RealRoot::Exact(x) => x,
            RealRoot::Isolated { hi, .. } => hi,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, RealRoot::Exact(_))
    }

    /// Halves the isolating interval.
    pub fn refine(&mut self) {
        if let RealRoot::Isolated { poly, lo, hi } = self {
            let mid = (&*lo + &*hi) / q(2);
            // `lo` may be a neighbouring root; `hi` never is
            let (fh, fm) = (eval(poly, hi), eval(poly, &mid));
            if fm.is_zero() {
                *self = RealRoot::Exact(mid);
            } else if fh.is_positive() == fm.is_positive() {
                *hi = mid;
            } else {
                *lo = mid;
            }
        }
    }

    fn negate(&self) -> RealRoot {
        match self {
            RealRoot::Exact(x) => RealRoot::Exact(-x),
            RealRoot::Isolated { poly, lo, hi } => RealRoot::Isolated {
                poly: poly
                    .iter()
                    .enumerate()
                    .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                    .collect(),
                lo: -hi,
                hi: -lo,
            },
        }
    }
}

/// Roots of a square-free polynomial, each isolated in an interval narrow
/// enough that a rational root would have been found exactly.
fn isolate_roots(p: &Poly) -> Vec<RealRoot> {
    let seq = sturm_sequence(p);
    let b = root_bound(p);
    let grid = Q::new(BigInt::one(), integral_lead(p));
    let mut out = Vec::new();
    // stack of half-open intervals (lo, hi] with their root counts
    let mut stack = vec![(-b.clone(), b.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let count = sign_changes(&seq, &lo) - sign_changes(&seq, &hi);
        if count == 0 {
            continue;
        }
        if count == 1 && &hi - &lo < grid {
            out.push(settle(p, lo, hi, &grid));
            continue;
        }
        let mid = (&lo + &hi) / q(2);
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out
}

/// The single root in `(lo, hi]` with `hi - lo < 1/L`: rational roots have
/// the form `a/L`, so at most one candidate needs an exact test.
fn settle(p: &Poly, lo: Q, hi: Q, grid: &Q) -> RealRoot {
    let candidate = ((&lo / grid).floor() + Q::one()) * grid;
    if candidate <= hi && eval(p, &candidate).is_zero() {
        return RealRoot::Exact(candidate);
    }
    RealRoot::Isolated {
        poly: p.clone(),
        lo,
        hi,
    }
}

/// Eigenvalues with multiplicity.
#[derive(Clone, Debug)]
pub struct Spectrum {
    roots: Vec<(RealRoot, usize)>,
    dim: usize,
}

impl Spectrum {
    pub fn of(a: &Matrix) -> Result<Self> {
        if !a.is_hermitian() {
            return arg("spectrum requires a Hermitian matrix");
        }
        if a.is_diagonal() {
            return Ok(Self::from_values(&a.real_diag()));
        }
        let p = characteristic_polynomial(a)?;
        let mut roots = Vec::new();
        for (f, mult) in square_free_factors(&p) {
            roots.extend(isolate_roots(&f).into_iter().map(|r| (r, mult)));
        }
        let mut s = Self {
            roots,
            dim: a.dim(),
        };
        if s.roots.iter().map(|(_, m)| m).sum::<usize>() != s.dim {
            return Err(Error::OracleMismatch(
                "eigenvalue count differs from dimension".into(),
            ));
        }
        s.separate();
        Ok(s)
    }

    pub fn from_values(values: &[Q]) -> Self {
        let mut v = values.to_vec();
        v.sort_by(|a, b| b.cmp(a));
        let mut roots: Vec<(RealRoot, usize)> = Vec::new();
        for x in v {
            match roots.last_mut() {
                Some((RealRoot::Exact(y), m)) if *y == x => *m += 1,
                _ => roots.push((RealRoot::Exact(x), 1)),
            }
        }
        Self {
            roots,
            dim: values.len(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn roots(&self) -> &[(RealRoot, usize)] {
        &self.roots
    }

    /// All eigenvalues, if rational.
    pub fn exact_values(&self) -> Option<Vec<Q>> {
        let mut out = Vec::with_capacity(self.dim);
        for (r, m) in &self.roots {
            match r {
                RealRoot::Exact(x) => out.extend(std::iter::repeat_n(x.clone(), *m)),
                RealRoot::Isolated { .. } => return None,
            }
        }
        Some(out)
    }

    pub fn negate(&self) -> Self {
        let mut roots: Vec<_> = self.roots.iter().map(|(r, m)| (r.negate(), *m)).collect();
        roots.reverse();
        Self {
            roots,
            dim: self.dim,
        }
    }

    /// Refines until roots sit in pairwise disjoint intervals that avoid 0,
    /// then sorts them in decreasing order.
    fn separate(&mut self) {
        loop {
            let mut clash = vec![false; self.roots.len()];
            for (i, (r, _)) in self.roots.iter().enumerate() {
                if !r.is_exact() && r.lo() < &Q::zero() && r.hi() > &Q::zero() {
                    clash[i] = true;
                }
                for (j, (s, _)) in self.roots.iter().enumerate().skip(i + 1) {
                    if r.lo() <= s.hi() && s.lo() <= r.hi() && !(r.is_exact() && s.is_exact()) {
                        clash[i] = true;
                        clash[j] = true;
                    }
                }
            }
            if !clash.contains(&true) {
                break;
            }
            for (i, (r, _)) in self.roots.iter_mut().enumerate() {
                if clash[i] {
                    r.refine();
                }
            }
        }
        self.roots.sort_by(|(a, _), (b, _)| b.lo().cmp(a.lo()));
    }

    fn refine_all(&mut self) {
        for (r, _) in &mut self.roots {
            r.refine();
        }
    }

    /// Narrows every isolating interval to width at most `width > 0`.
    pub fn refine_to(&mut self, width: &Q) {
        for (r, _) in &mut self.roots {
            while &(r.hi() - r.lo()) > width {
                r.refine();
            }
        }
    }

    /// Sum of the `k` largest eigenvalues (`1 <= k <= n`).
    pub fn top_sum(&self, k: usize) -> Result<Interval> {
        if k == 0 || k > self.dim {
            return arg(format!("k = {k} outside 1..={}", self.dim));
        }
        Ok(self.sum_leading(k, false))
    }

    /// Sum of the `k` largest entries of the spectrum padded by infinitely
    /// many zeros (`k >= 1`): the value for `A ⊕ 0` on a larger space.
    pub fn padded_top_sum(&self, k: usize) -> Result<Interval> {
        if k == 0 {
            return arg("k must be at least 1");
        }
        Ok(self.sum_leading(k, true))
    }

    /// Roots of one square-free factor that are taken in full contribute
    /// the exact value `-m * c_{d-1} / c_d`.
    fn sum_leading(&self, k: usize, positive_only: bool) -> Interval {
        let mut acc = Interval::exact(Q::zero());
        let mut groups: Vec<(&Poly, usize, Interval)> = Vec::new();
        let mut left = k;
        for (r, m) in &self.roots {
            if left == 0 || (positive_only && r.hi() <= &Q::zero()) {
                break;
            }
            let take = left.min(*m);
            let t = q(take as i64);
            let part = Interval {
                lo: r.lo() * &t,
                hi: r.hi() * &t,
            };
            left -= take;
            match r {
                RealRoot::Isolated { poly, .. } if take == *m => {
                    match groups.iter_mut().find(|(p, _, _)| *p == poly) {
                        Some(g) => {
                            g.1 += 1;
                            g.2 = g.2.add(&part);
                        }
                        None => groups.push((poly, 1, part)),
                    }
                }
                _ => acc = acc.add(&part),
            }
        }
        for (poly, count, sum) in groups {
            let d = poly.len() - 1;
            if count == d {
                let m = self
                    .roots
                    .iter()
                    .find(|(r, _)| matches!(r, RealRoot::Isolated { poly: p, .. } if p == poly))
                    .map_or(1, |(_, m)| *m);
                let exact = -&poly[d - 1] / &poly[d] * q(m as i64);
                acc = acc.add(&Interval::exact(exact));
            } else {
                acc = acc.add(&sum);
            }
        }
        acc
    }

    /// Decides `f(self) <= bound` for an interval-valued `f`, refining as
    /// needed.
    pub fn decide_le(&self, bound: &Q, f: impl Fn(&Spectrum) -> Result<Interval>) -> Result<bool> {
        let mut s = self.clone();
        for _ in 0..MAX_REFINEMENT {
            let v = f(&s)?;
            if &v.hi <= bound {
                return Ok(true);
            }
            if &v.lo > bound {
                return Ok(false);
            }
            s.refine_all();
        }
        Err(Error::Undecided)
    }

    /// `sum |eigenvalue|`, the trace norm.
    pub fn trace_norm(&self) -> Interval {
        let mut acc = Interval::exact(Q::zero());
        for (r, m) in &self.roots {
            let t = q(*m as i64);
            let (lo, hi) = if r.lo() >= &Q::zero() {
                (r.lo().clone(), r.hi().clone())
            } else {
                (-r.hi(), -r.lo())
            };
            acc = Interval {
                lo: acc.lo + lo * &t,
                hi: acc.hi + hi * &t,
            };
        }
        acc
    }
}

/// Closed rational interval `[lo, hi]`; `lo == hi` means the value is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Q,
    pub hi: Q,
}

impl Interval {
    pub fn exact(x: Q) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn as_exact(&self) -> Option<&Q> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    pub fn cmp_value(&self, x: &Q) -> Option<Ordering> {
        if &self.hi < x {
            Some(Ordering::Less)
        } else if &self.lo > x {
            Some(Ordering::Greater)
        } else if self.as_exact() == Some(x) {
            Some(Ordering::Equal)
        } else {
            None
        }
    }
}

impl Serialize for Interval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        match self.as_exact() {
            Some(x) => m.serialize_entry("exact", &format_q(x))?,
            None => {
                m.serialize_entry("lo", &format_q(&self.lo))?;
                m.serialize_entry("hi", &format_q(&self.hi))?;
            }
        }
        m.end()
    }
}
