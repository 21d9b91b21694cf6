//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Q = BigRational;

/// Gaussian rational `a + bi` with `a, b` exact rationals.
pub type Cq = Complex<Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn cq(re: Q, im: Q) -> Cq {
    Complex::new(re, im)
}

pub fn c_real(re: Q) -> Cq {
    Complex::new(re, Q::zero())
}

pub fn c_zero() -> Cq {
    Complex::new(Q::zero(), Q::zero())
}

pub fn c_one() -> Cq {
    Complex::new(Q::one(), Q::zero())
}

/// The imaginary unit.
pub fn c_i() -> Cq {
    Complex::new(Q::zero(), Q::one())
}

/// `|z|^2 = a^2 + b^2`, exact.
pub fn norm_sqr(z: &Cq) -> Q {
    &z.re * &z.re + &z.im * &z.im
}

/// Parses `"p/q"`, `"p"` or `"-p/q"` into an exact rational.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Q::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Q::from_integer(n))
        }
    }
}

/// Canonical text form: `"p"` for integers, otherwise `"p/q"` with `q > 0`.
pub fn format_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Converts an integral rational to `i64` if it fits.
pub fn to_i64(x: &Q) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    i64::try_from(x.numer().clone()).ok()
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}

/// Approximate value for display only; never used in decisions.
pub fn to_f64(x: &Q) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}
