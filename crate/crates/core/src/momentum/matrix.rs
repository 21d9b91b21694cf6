//! Square matrices over the Gaussian rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{arg, Error, Result};
use crate::rational::{c_i, c_one, c_real, c_zero, format_q, norm_sqr, parse_q, Cq, Q};

/// Which adjoint symmetry a matrix satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    Hermitian,
    SkewHermitian,
    /// Only the zero matrix is both.
    Both,
    General,
}

/// Dense `n x n` matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    a: Vec<Cq>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            a: vec![c_zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { c_one() } else { c_zero() })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Cq) -> Self {
        let mut a = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                a.push(f(i, j));
            }
        }
        Self { n, a }
    }

    pub fn from_rows(rows: Vec<Vec<Cq>>) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Dimension {
                expected: n,
                found: r.len(),
            });
        }
        Ok(Self {
            n,
            a: rows.into_iter().flatten().collect(),
        })
    }

    pub fn diagonal(d: &[Q]) -> Self {
        Self::from_fn(d.len(), |i, j| {
            if i == j {
                c_real(d[i].clone())
            } else {
                c_zero()
            }
        })
    }

    /// `E_ij` (0-based): a single 1 in row `i`, column `j`.
    pub fn elementary(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(n);
        m.set(i, j, c_one());
        m
    }

    /// Permutation matrix sending `e_j` to `e_{p[j]}`.
    pub fn permutation(p: &[usize]) -> Self {
        Self::from_fn(p.len(), |i, j| if p[j] == i { c_one() } else { c_zero() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Cq {
        &self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, z: Cq) {
        self.a[i * self.n + j] = z;
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).conj())
    }

    pub fn scale(&self, z: &Cq) -> Self {
        Self {
            n: self.n,
            a: self.a.iter().map(|x| x * z).collect(),
        }
    }

    pub fn scale_real(&self, x: &Q) -> Self {
        self.scale(&c_real(x.clone()))
    }

    pub fn times_i(&self) -> Self {
        self.scale(&c_i())
    }

    pub fn trace(&self) -> Cq {
        (0..self.n).fold(c_zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn diag(&self) -> Vec<Cq> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    /// Real parts of the diagonal.
    pub fn real_diag(&self) -> Vec<Q> {
        (0..self.n).map(|i| self.get(i, i).re.clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        self.nonzero_entries().all(|(i, j, _)| i == j)
    }

    pub fn symmetry(&self) -> Symmetry {
        let adj = self.adjoint();
        match (adj == *self, adj == -self) {
            (true, true) => Symmetry::Both,
            (true, false) => Symmetry::Hermitian,
            (false, true) => Symmetry::SkewHermitian,
            (false, false) => Symmetry::General,
        }
    }

    pub fn is_hermitian(&self) -> bool {
        matches!(self.symmetry(), Symmetry::Hermitian | Symmetry::Both)
    }

    pub fn is_skew_hermitian(&self) -> bool {
        matches!(self.symmetry(), Symmetry::SkewHermitian | Symmetry::Both)
    }

    pub fn is_unitary(&self) -> bool {
        (self * &self.adjoint()) == Matrix::identity(self.n)
    }

    /// `(i, j, a_ij)` for every nonzero entry.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &Cq)> {
        let n = self.n;
        self.a
            .iter()
            .enumerate()
            .filter(|(_, z)| !z.is_zero())
            .map(move |(k, z)| (k / n, k % n, z))
    }

    /// Squared Hilbert–Schmidt norm `Tr(A* A)`.
    pub fn hs_norm_sqr(&self) -> Q {
        self.a.iter().map(norm_sqr).sum()
    }

    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    /// `U A U*`.
    pub fn conjugate_by(&self, u: &Matrix) -> Matrix {
        &(u * self) * &u.adjoint()
    }

    /// `Tr(A B)` without forming the product.
    pub fn trace_product(&self, other: &Matrix) -> Cq {
        self.check_dim(other).expect("dimension");
        let mut acc = c_zero();
        for i in 0..self.n {
            for j in 0..self.n {
                acc += self.get(i, j) * other.get(j, i);
            }
        }
        acc
    }

    /// `A ⊕ 0` of size `m >= n`.
    pub fn pad(&self, m: usize) -> Matrix {
        assert!(m >= self.n);
        Self::from_fn(m, |i, j| {
            if i < self.n && j < self.n {
                self.get(i, j).clone()
            } else {
                c_zero()
            }
        })
    }

    pub(crate) fn check_dim(&self, other: &Matrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "matrix dimension");
        Matrix {
            n: self.n,
            a: self.a.iter().zip(&rhs.a).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "matrix dimension");
        Matrix {
            n: self.n,
            a: self.a.iter().zip(&rhs.a).map(|(x, y)| x - y).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            n: self.n,
            a: self.a.iter().map(|x| -x.clone()).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "matrix dimension");
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = rhs.get(k, j);
                    if !y.is_zero() {
                        out.a[i * n + j] = &out.a[i * n + j] + x * y;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            serde_json::to_string(self).map_err(|_| fmt::Error)?
        )
    }
}

/// Wire form: `{"n":2,"re":[["1","0"],..],"im":[..]}`; entries are `"p/q"`
/// strings (integers are accepted on input).
#[derive(Serialize, Deserialize)]
struct MatrixWire {
    n: usize,
    re: Vec<Vec<QText>>,
    #[serde(default)]
    im: Option<Vec<Vec<QText>>>,
}

struct QText(Q);

impl Serialize for QText {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_q(&self.0))
    }
}

impl<'de> Deserialize<'de> for QText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::String(s) => parse_q(&s).map(QText).map_err(D::Error::custom),
            serde_json::Value::Number(n) if n.is_i64() => Ok(QText(Q::from_integer(
                n.as_i64().unwrap_or_default().into(),
            ))),
            other => Err(D::Error::custom(format!(
                "expected a rational string, got {other}"
            ))),
        }
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let grid = |f: &dyn Fn(&Cq) -> Q| -> Vec<Vec<QText>> {
            (0..self.n)
                .map(|i| (0..self.n).map(|j| QText(f(self.get(i, j)))).collect())
                .collect()
        };
        MatrixWire {
            n: self.n,
            re: grid(&|z| z.re.clone()),
            im: Some(grid(&|z| z.im.clone())),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = MatrixWire::deserialize(d)?;
        Matrix::from_wire(w).map_err(D::Error::custom)
    }
}

impl Matrix {
    fn from_wire(w: MatrixWire) -> Result<Self> {
        let n = w.n;
        let shape_ok = |g: &Vec<Vec<QText>>| g.len() == n && g.iter().all(|r| r.len() == n);
        if !shape_ok(&w.re) || !w.im.as_ref().is_none_or(shape_ok) {
            return arg(format!("matrix payload is not {n} x {n}"));
        }
        Ok(Self::from_fn(n, |i, j| {
            let re = w.re[i][j].0.clone();
            let im = w.im.as_ref().map_or_else(Q::zero, |g| g[i][j].0.clone());
            Cq::new(re, im)
        }))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serializes")
    }
}
