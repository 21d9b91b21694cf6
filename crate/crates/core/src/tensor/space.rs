//! Tensor powers `V^{⊗k}` of `V = Q^n` and the commuting actions of `S_k`
//! and `gl(n)` on them.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::characters::dimension;
use super::group_algebra::{isotypic_projector, rank, GroupAlgebraElement};
use super::partition::{partitions, semistandard_count, standard_tableaux, Partition, Tableau};
use super::perm::Perm;
use crate::error::{arg, Error, Result};
use crate::rational::Q;
use crate::weights::Weight;

/// Largest `n^k` for which tensor computations run.
pub const MAX_TENSOR_DIM: usize = 4096;

/// Basis label `(i_1, .., i_k)` with `0 <= i_p < n` (0-based `e_{i+1}`).
pub type IndexTuple = Vec<u8>;

/// A vector of `V^{⊗k}` in the standard basis `e_{i_1} ⊗ .. ⊗ e_{i_k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorVector {
    n: usize,
    k: usize,
    coeffs: BTreeMap<IndexTuple, Q>,
}

impl TensorVector {
    pub fn zero(n: usize, k: usize) -> Self {
        Self {
            n,
            k,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(n: usize, tuple: IndexTuple) -> Result<Self> {
        if tuple.iter().any(|&i| i as usize >= n) {
            return arg(format!("basis index out of range for dim V = {n}"));
        }
        let k = tuple.len();
        Ok(Self {
            n,
            k,
            coeffs: BTreeMap::from([(tuple, Q::one())]),
        })
    }

    pub fn from_terms(
        n: usize,
        k: usize,
        terms: impl IntoIterator<Item = (IndexTuple, Q)>,
    ) -> Self {
        let mut v = Self::zero(n, k);
        for (t, c) in terms {
            debug_assert_eq!(t.len(), k);
            v.add_term(t, c);
        }
        v
    }

    pub(crate) fn add_term(&mut self, t: IndexTuple, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(t.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&t);
        }
    }

    pub fn dim_v(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn coefficient(&self, t: &[u8]) -> Q {
        self.coeffs.get(t).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IndexTuple, &Q)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::from_terms(
            self.n,
            self.k,
            self.coeffs.iter().map(|(t, v)| (t.clone(), v * c)),
        )
    }

    pub fn add(&self, other: &TensorVector) -> Result<Self> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        for (t, c) in &other.coeffs {
            out.add_term(t.clone(), c.clone());
        }
        Ok(out)
    }

    /// Standard (real) inner product.
    pub fn dot(&self, other: &TensorVector) -> Q {
        self.coeffs
            .iter()
            .filter_map(|(t, a)| other.coeffs.get(t).map(|b| a * b))
            .sum()
    }

    fn check_same_space(&self, other: &TensorVector) -> Result<()> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::Dimension {
                expected: self.n.pow(self.k as u32),
                found: other.n.pow(other.k as u32),
            });
        }
        Ok(())
    }

    /// The common diagonal-torus weight if `self` is a nonzero weight vector.
    pub fn weight(&self) -> Option<Vec<usize>> {
        let mut it = self.coeffs.keys().map(|t| tuple_weight(t, self.n));
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    /// `E_{row,col}` acting as the derivation `sum_p 1 ⊗ .. ⊗ E ⊗ .. ⊗ 1`,
    /// where `E_{row,col} e_col = e_row` (0-based).
    pub fn apply_elementary(&self, row: usize, col: usize) -> Self {
        let mut out = Self::zero(self.n, self.k);
        for (t, c) in &self.coeffs {
            for p in 0..self.k {
                if t[p] as usize == col {
                    let mut s = t.clone();
                    s[p] = row as u8;
                    out.add_term(s, c.clone());
                }
            }
        }
        out
    }
}

/// Multiplicities of each basis index in a tuple.
pub fn tuple_weight(t: &[u8], n: usize) -> Vec<usize> {
    let mut w = vec![0; n];
    for &i in t {
        w[i as usize] += 1;
    }
    w
}

/// `sigma . (v_1 ⊗ .. ⊗ v_k) = v_{sigma^-1(1)} ⊗ .. ⊗ v_{sigma^-1(k)}`.
pub fn permute_tuple(sigma: &Perm, t: &[u8]) -> IndexTuple {
    let mut out = vec![0; t.len()];
    for (q, &i) in t.iter().enumerate() {
        out[sigma.apply(q)] = i;
    }
    out
}

/// A group-algebra element acting on `V^{⊗k}` by place permutations.
#[derive(Clone, Debug)]
pub struct TensorAction {
    n: usize,
    element: GroupAlgebraElement,
}

pub fn act_on_tensor(a: &GroupAlgebraElement, n: usize, k: usize) -> Result<TensorAction> {
    if a.degree() != k {
        return Err(Error::Dimension {
            expected: k,
            found: a.degree(),
        });
    }
    Ok(TensorAction {
        n,
        element: a.clone(),
    })
}

impl TensorAction {
    pub fn apply_basis(&self, t: &[u8]) -> TensorVector {
        let k = self.element.degree();
        TensorVector::from_terms(
            self.n,
            k,
            self.element
                .terms()
                .map(|(s, c)| (permute_tuple(s, t), c.clone())),
        )
    }

    pub fn apply(&self, v: &TensorVector) -> Result<TensorVector> {
        if v.n != self.n || v.k != self.element.degree() {
            return Err(Error::Dimension {
                expected: self.n.pow(self.element.degree() as u32),
                found: v.n.pow(v.k as u32),
            });
        }
        let mut out = TensorVector::zero(self.n, v.k);
        for (t, c) in &v.coeffs {
            for (s, a) in self.element.terms() {
                out.add_term(permute_tuple(s, t), a * c);
            }
        }
        Ok(out)
    }
}

fn check_tensor_dim(n: usize, k: usize) -> Result<()> {
    let dim = (n as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if dim > MAX_TENSOR_DIM as u128 {
        return Err(Error::Resource {
            what: "tensor dimension n^k",
            value: usize::try_from(dim).unwrap_or(usize::MAX),
            limit: MAX_TENSOR_DIM,
        });
    }
    Ok(())
}

/// `c(T) e_T`, where `e_T` puts `e_r` in slot `j` when `j` sits in row `r` of `T`.
pub fn tableau_vector(t: &Tableau, n: usize) -> Result<TensorVector> {
    if t.shape().num_rows() > n {
        return arg(format!(
            "shape {} has more than dim V = {n} rows",
            t.shape()
        ));
    }
    let k = t.shape().size();
    check_tensor_dim(n, k)?;
    let e_t: IndexTuple = t.row_of().into_iter().map(|r| r as u8).collect();
    let c = super::group_algebra::column_antisymmetrizer(t);
    Ok(act_on_tensor(&c, n, k)?.apply_basis(&e_t))
}

/// Highest weight vector `c(T) e_T` of the canonical (row-by-row) tableau.
pub fn highest_weight_vector(shape: &Partition, n: usize) -> Result<TensorVector> {
    tableau_vector(&Tableau::canonical(shape), n)
}

/// All weight spaces of `V^{⊗k}`: weight -> basis tuples of that weight.
pub fn weight_spaces(n: usize, k: usize) -> Result<BTreeMap<Vec<usize>, Vec<IndexTuple>>> {
    check_tensor_dim(n, k)?;
    let mut out: BTreeMap<Vec<usize>, Vec<IndexTuple>> = BTreeMap::new();
    if n == 0 && k > 0 {
        return Ok(out);
    }
    let mut t = vec![0u8; k];
    loop {
        out.entry(tuple_weight(&t, n)).or_default().push(t.clone());
        // odometer
        let mut p = k;
        loop {
            if p == 0 {
                return Ok(out);
            }
            p -= 1;
            t[p] += 1;
            if (t[p] as usize) < n {
                break;
            }
            t[p] = 0;
        }
    }
}

/// Rank of `a` restricted to the span of `tuples` (which it must preserve).
fn restricted_rank(action: &TensorAction, tuples: &[IndexTuple]) -> usize {
    let index: BTreeMap<&IndexTuple, usize> =
        tuples.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let rows: Vec<Vec<Q>> = tuples
        .iter()
        .map(|t| {
            let img = action.apply_basis(t);
            let mut row = vec![Q::zero(); tuples.len()];
            for (s, c) in img.iter() {
                row[index[s]] = c.clone();
            }
            row
        })
        .collect();
    rank(rows)
}

/// Rank of the isotypic projector on each weight space.
fn projector_ranks(shape: &Partition, n: usize) -> Result<BTreeMap<Vec<usize>, usize>> {
    let k = shape.size();
    let spaces = weight_spaces(n, k)?;
    let action = act_on_tensor(&isotypic_projector(shape)?, n, k)?;
    Ok(spaces
        .into_par_iter()
        .map(|(w, tuples)| {
            let r = restricted_rank(&action, &tuples);
            (w, r)
        })
        .collect())
}

/// One summand `S_shape(V) ⊗ M^shape` of `V^{⊗k}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsotypicComponent {
    pub partition: Partition,
    /// `dim S_shape(V)` = projector rank / `dim M^shape`.
    #[serde(rename = "dimS")]
    pub dim_s: usize,
    /// `dim M^shape`, the number of standard tableaux.
    #[serde(rename = "dimM")]
    pub dim_m: usize,
    #[serde(skip)]
    pub projector_rank: usize,
    #[serde(skip)]
    pub semistandard: usize,
}

/// `V^{⊗k} = ⊕_shape S_shape(V) ⊗ M^shape` with every rank computed from the
/// isotypic projectors.
pub fn schur_weyl_decompose(n: usize, k: usize) -> Result<Vec<IsotypicComponent>> {
    check_tensor_dim(n, k)?;
    partitions(k)
        .into_iter()
        .map(|shape| {
            let projector_rank: usize = projector_ranks(&shape, n)?.values().sum();
            let dim_m = standard_tableaux(&shape).len();
            if !projector_rank.is_multiple_of(dim_m) {
                return Err(Error::OracleMismatch(format!(
                    "projector rank {projector_rank} of {shape} not divisible by {dim_m}"
                )));
            }
            Ok(IsotypicComponent {
                dim_s: projector_rank / dim_m,
                dim_m,
                projector_rank,
                semistandard: semistandard_count(&shape, n) as usize,
                partition: shape,
            })
        })
        .collect()
}

/// Diagonal-torus weights of `S_shape(V)` with multiplicity.
pub fn weight_multiset(shape: &Partition, n: usize) -> Result<BTreeMap<Weight, usize>> {
    let f = dimension(shape) as usize;
    let mut out = BTreeMap::new();
    for (w, r) in projector_ranks(shape, n)? {
        if r == 0 {
            continue;
        }
        if r % f != 0 {
            return Err(Error::OracleMismatch(format!(
                "weight space {w:?} rank {r} not divisible by {f}"
            )));
        }
        let vals: Vec<i64> = w.iter().map(|&x| x as i64).collect();
        out.insert(Weight::from_values(&vals), r / f);
    }
    Ok(out)
}

/// Is `v` fixed by the isotypic projector of `shape`?
pub fn in_isotypic_component(v: &TensorVector, shape: &Partition) -> Result<bool> {
    if shape.size() != v.order() {
        return Ok(false);
    }
    let p = act_on_tensor(&isotypic_projector(shape)?, v.dim_v(), v.order())?;
    Ok(p.apply(v)? == *v)
}

/// Basis tuples spanning the image of the isotypic projector inside each
/// weight space, as projected vectors `P e_t`.
pub fn isotypic_weight_vectors(shape: &Partition, n: usize) -> Result<Vec<TensorVector>> {
    let k = shape.size();
    let action = act_on_tensor(&isotypic_projector(shape)?, n, k)?;
    let mut out = Vec::new();
    for (_, tuples) in weight_spaces(n, k)? {
        for t in tuples {
            let v = action.apply_basis(&t);
            if !v.is_zero() {
                out.push(v);
            }
        }
    }
    Ok(out)
}

/// Rank of a family of tensor vectors.
pub fn span_dimension(vectors: &[TensorVector]) -> usize {
    let mut keys: Vec<&IndexTuple> = vectors.iter().flat_map(|v| v.coeffs.keys()).collect();
    keys.sort();
    keys.dedup();
    let index: BTreeMap<&IndexTuple, usize> =
        keys.iter().enumerate().map(|(i, t)| (*t, i)).collect();
    let rows = vectors
        .iter()
        .map(|v| {
            let mut row = vec![Q::zero(); keys.len()];
            for (t, c) in &v.coeffs {
                row[index[t]] = c.clone();
            }
            row
        })
        .collect();
    rank(rows)
}

/// Every tableau (any bijective filling) of a shape.
pub fn all_tableaux(shape: &Partition) -> Vec<Tableau> {
    let k = shape.size();
    Perm::all(k)
        .into_iter()
        .map(|p| {
            let mut next = 0;
            let rows = shape
                .parts()
                .iter()
                .map(|&len| {
                    let r: Vec<usize> = (next..next + len).map(|i| p.apply(i) + 1).collect();
                    next += len;
                    r
                })
                .collect();
            Tableau::new(rows).expect("bijective filling")
        })
        .collect()
}
