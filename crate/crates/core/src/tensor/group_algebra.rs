//! The rational group algebra `Q[S_k]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use super::characters::{character, dimension};
use super::partition::{Partition, Tableau};
use super::perm::Perm;
use crate::error::{Error, Result};
use crate::rational::{format_q, q, Q};

/// Largest symmetric group for which full-group sums are formed.
pub const MAX_GROUP_DEGREE: usize = 7;

/// A finite formal sum `sum_sigma c_sigma sigma` over `S_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<Perm, Q>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(degree: usize) -> Self {
        Self::basis(Perm::identity(degree))
    }

    pub fn basis(p: Perm) -> Self {
        Self {
            degree: p.degree(),
            terms: BTreeMap::from([(p, Q::one())]),
        }
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Perm, Q)>) -> Self {
        let mut out = Self::zero(degree);
        for (p, c) in terms {
            assert_eq!(p.degree(), degree, "permutation degree");
            out.add_term(p, c);
        }
        out
    }

    fn add_term(&mut self, p: Perm, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(p.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, p: &Perm) -> Q {
        self.terms.get(p).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        Self {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    /// Commutes with every basis permutation (checked on transpositions,
    /// which generate `S_k`).
    pub fn is_central(&self) -> bool {
        (0..self.degree.saturating_sub(1)).all(|i| {
            let t = Self::basis(Perm::transposition(self.degree, i, i + 1));
            &t * self == self * &t
        })
    }
}

impl Add for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn add(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        assert_eq!(self.degree, rhs.degree);
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn sub(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        self + &rhs.scale(&-Q::one())
    }
}

impl Mul for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    /// `(sum a_s s)(sum b_t t) = sum a_s b_t (s t)`.
    fn mul(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        assert_eq!(self.degree, rhs.degree);
        let mut acc: BTreeMap<Perm, Q> = BTreeMap::new();
        for (s, a) in &self.terms {
            for (t, b) in &rhs.terms {
                *acc.entry(s.compose(t)).or_insert_with(Q::zero) += a * b;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        GroupAlgebraElement {
            degree: self.degree,
            terms: acc,
        }
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| {
                if c.is_one() {
                    p.to_string()
                } else {
                    format!("{}*{}", format_q(c), p)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn check_degree(k: usize) -> Result<()> {
    if k > MAX_GROUP_DEGREE {
        return Err(Error::Resource {
            what: "symmetric group degree",
            value: k,
            limit: MAX_GROUP_DEGREE,
        });
    }
    Ok(())
}

/// `r(T) = sum of the row group`.
pub fn row_symmetrizer(t: &Tableau) -> GroupAlgebraElement {
    let k = t.shape().size();
    GroupAlgebraElement::from_terms(k, t.row_group().into_iter().map(|p| (p, Q::one())))
}

/// `c(T) = sum of sgn(s) s over the column group`.
pub fn column_antisymmetrizer(t: &Tableau) -> GroupAlgebraElement {
    let k = t.shape().size();
    GroupAlgebraElement::from_terms(
        k,
        t.column_group().into_iter().map(|p| {
            let s = q(p.sign());
            (p, s)
        }),
    )
}

/// `s(T) = c(T) r(T)`.
pub fn young_symmetrizer(t: &Tableau) -> Result<GroupAlgebraElement> {
    check_degree(t.shape().size())?;
    Ok(&column_antisymmetrizer(t) * &row_symmetrizer(t))
}

/// Central idempotent `P_shape = (f/k!) sum_s chi(s) s` of the isotypic component.
pub fn isotypic_projector(shape: &Partition) -> Result<GroupAlgebraElement> {
    let k = shape.size();
    check_degree(k)?;
    let perms = Perm::all(k);
    let scale = Q::new(dimension(shape).into(), (perms.len() as i64).into());
    Ok(GroupAlgebraElement::from_terms(
        k,
        perms.into_iter().map(|p| {
            let chi = character(shape, &p.cycle_type());
            (p, &scale * q(chi))
        }),
    ))
}

/// Dimension of the left ideal `Q[S_k] s(T)`, computed as the rank of the
/// vectors `sigma s(T)`; equals the number of standard tableaux of the shape.
pub fn left_ideal_dimension(t: &Tableau) -> Result<usize> {
    let s = young_symmetrizer(t)?;
    let k = s.degree();
    let perms = Perm::all(k);
    let index: BTreeMap<&Perm, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let rows: Vec<Vec<Q>> = perms
        .iter()
        .map(|sigma| {
            let prod = &GroupAlgebraElement::basis(sigma.clone()) * &s;
            let mut row = vec![Q::zero(); perms.len()];
            for (p, c) in prod.terms() {
                row[index[p]] = c.clone();
            }
            row
        })
        .collect();
    Ok(rank(rows))
}

/// Rank of a rational matrix given by rows, by Gaussian elimination.
pub(crate) fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        let prow = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot;
            for (v, pv) in row.iter_mut().zip(&prow).skip(c) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}
