//! Majorization calculus for Weyl-orbit hulls in `l^1(J)`.
//!
//! `co(lambda)` (weak-* closed hull of the orbit) and `co^n(lambda)` (norm
//! closed hull) are never materialised. They are membership predicates built
//! from the functionals `L_k`, where `L_k(mu)` is the largest sum of `mu`
//! over `k` distinct indices. The index set is infinite, so zero slots are
//! always available and `L_k(mu) = L_k(mu_+)`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::Value;

use crate::error::{arg, Error, Result};
use crate::oracle::lp::{lp_feasible, LinearProgram, Sense};
use crate::rational::{format_q, parse_q, q, Q};
use crate::weights::{canonicalize, orbit_equal, split_signs, OrbitSignature, Weight};

/// A finitely supported rational point of `l^1(J)`; zero entries absent.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct RationalWeight {
    entries: BTreeMap<usize, Q>,
}

impl RationalWeight {
    pub fn new(pairs: impl IntoIterator<Item = (usize, Q)>) -> Self {
        let mut entries = BTreeMap::new();
        for (j, v) in pairs {
            let e: &mut Q = entries.entry(j).or_insert_with(Q::zero);
            *e += v;
        }
        entries.retain(|_, v| !v.is_zero());
        Self { entries }
    }

    pub fn from_values(values: &[Q]) -> Self {
        Self::new(values.iter().cloned().enumerate())
    }

    /// Parses `{"0":"1/2","3":-1}`: values may be integers or `"p/q"` strings.
    pub fn from_json(text: &str) -> Result<Self> {
        let map: BTreeMap<String, Value> =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("weight: {e}")))?;
        let mut pairs = Vec::with_capacity(map.len());
        for (k, v) in map {
            let j: usize = k
                .parse()
                .map_err(|_| Error::Parse(format!("index {k:?} is not a non-negative integer")))?;
            let x = match v {
                Value::String(s) => parse_q(&s)?,
                Value::Number(n) if n.is_i64() => q(n.as_i64().unwrap_or_default()),
                other => return Err(Error::Parse(format!("value {other} is not rational"))),
            };
            pairs.push((j, x));
        }
        Ok(Self::new(pairs))
    }

    /// The inverse of [`RationalWeight::from_json`], with every value a string.
    pub fn to_json(&self) -> Value {
        Value::Object(
            self.entries
                .iter()
                .map(|(j, v)| (j.to_string(), Value::String(format_q(v))))
                .collect(),
        )
    }

    pub fn get(&self, j: usize) -> Q {
        self.entries.get(&j).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.entries.iter().map(|(&j, v)| (j, v))
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn values(&self) -> Vec<Q> {
        self.entries.values().cloned().collect()
    }

    pub fn neg(&self) -> Self {
        Self {
            entries: self.entries.iter().map(|(&j, v)| (j, -v)).collect(),
        }
    }

    pub fn positive_part(&self) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .filter(|(_, v)| v.is_positive())
                .map(|(&j, v)| (j, v.clone()))
                .collect(),
        }
    }

    /// `<self, x>` as a pairing of finitely supported functions.
    pub fn pair(&self, x: &RationalWeight) -> Q {
        self.entries
            .iter()
            .filter_map(|(j, v)| x.entries.get(j).map(|w| v * w))
            .sum()
    }

    pub fn sub(&self, other: &RationalWeight) -> RationalWeight {
        Self::new(
            self.entries
                .iter()
                .map(|(&j, v)| (j, v.clone()))
                .chain(other.entries.iter().map(|(&j, v)| (j, -v))),
        )
    }

    pub fn l1_norm(&self) -> Q {
        self.entries.values().map(|v| v.abs()).sum()
    }
}

impl From<&Weight> for RationalWeight {
    fn from(w: &Weight) -> Self {
        Self::new(w.iter().map(|(j, v)| (j, q(v))))
    }
}

/// `L_k(mu)`: sum of the `k` largest values of `mu`, zero-padded.
pub fn l_k(mu: &RationalWeight, k: usize) -> Result<Q> {
    if k < 1 {
        return arg("L_k needs k >= 1");
    }
    let mut pos: Vec<&Q> = mu.entries.values().filter(|v| v.is_positive()).collect();
    pos.sort_by(|a, b| b.cmp(a));
    Ok(pos.into_iter().take(k).sum())
}

fn l_k_unchecked(mu: &RationalWeight, k: usize) -> Q {
    l_k(mu, k.max(1)).expect("k >= 1")
}

pub fn total(mu: &RationalWeight) -> Q {
    mu.entries.values().sum()
}

/// `L_k(mu) <= L_k(lambda)` and `L_k(-mu) <= L_k(-lambda)` for all `k`. Both sides are constant once `k` passes the
/// joint support size, so only finitely many `k` are checked.
pub fn in_weakstar_hull(mu: &RationalWeight, lambda: &Weight) -> bool {
    let lam = RationalWeight::from(lambda);
    let top = mu.support_len() + lam.support_len();
    let (neg_mu, neg_lam) = (mu.neg(), lam.neg());
    (1..=top.max(1)).all(|k| {
        l_k_unchecked(mu, k) <= l_k_unchecked(&lam, k)
            && l_k_unchecked(&neg_mu, k) <= l_k_unchecked(&neg_lam, k)
    })
}

/// The weak-* conditions plus equal totals.
pub fn in_norm_hull(mu: &RationalWeight, lambda: &Weight) -> bool {
    total(mu) == q(lambda.total()) && in_weakstar_hull(mu, lambda)
}

/// `mu` lies in the weak-* closure of the orbit `W lambda`, i.e. it is a
/// permuted truncation `w lambda_F`.
pub fn in_orbit_closure(mu: &Weight, lambda: &Weight) -> bool {
    let (sm, sl) = (canonicalize(mu), canonicalize(lambda));
    let fits = sm.iter().all(|(k, m)| m <= sl.multiplicity(k));
    fits
}

/// Signatures of a finite set of orbits.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HullExtremeSet {
    pub signatures: BTreeSet<OrbitSignature>,
}

impl HullExtremeSet {
    pub fn contains(&self, sig: &OrbitSignature) -> bool {
        self.signatures.contains(sig)
    }

    pub fn len(&self) -> usize {
        self.signatures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signatures.is_empty()
    }
}

/// Value lists of the upper parts of a non-negative weight: the `c` largest
/// values for `c = 0, .., |supp|`.
fn upper_part_values(values_desc: &[i64]) -> Vec<Vec<i64>> {
    (0..=values_desc.len())
        .map(|c| values_desc[..c].to_vec())
        .collect()
}

fn signature_of(values: impl IntoIterator<Item = i64>) -> OrbitSignature {
    values.into_iter().map(|v| (v, 1)).collect()
}

/// Orbits of the upper parts `lambda_F` of a non-negative `lambda`.
pub fn upper_parts(lambda: &Weight) -> Result<HullExtremeSet> {
    if !lambda.is_nonnegative() {
        return arg("upper parts are defined for non-negative weights only");
    }
    let vals = canonicalize(lambda).sorted_values();
    Ok(HullExtremeSet {
        signatures: upper_part_values(&vals)
            .into_iter()
            .map(signature_of)
            .collect(),
    })
}

/// Orbits of `lambda_+ - (upper part of lambda_-)` and
/// `(upper part of lambda_+) - lambda_-`: the extreme points of `co(lambda)`.
pub fn extreme_points_weakstar(lambda: &Weight) -> HullExtremeSet {
    let (plus, minus) = split_signs(lambda);
    let pv = canonicalize(&plus).sorted_values();
    let mv = canonicalize(&minus).sorted_values();
    let mut signatures = BTreeSet::new();
    for up in upper_part_values(&mv) {
        signatures.insert(signature_of(
            pv.iter().copied().chain(up.iter().map(|v| -v)),
        ));
    }
    for up in upper_part_values(&pv) {
        signatures.insert(signature_of(
            up.iter().copied().chain(mv.iter().map(|v| -v)),
        ));
    }
    HullExtremeSet { signatures }
}

pub fn is_extreme_weakstar(mu: &Weight, lambda: &Weight) -> bool {
    extreme_points_weakstar(lambda).contains(&canonicalize(mu))
}

/// The norm-closed hull has exactly the orbit of `lambda` as extreme points.
pub fn extreme_points_norm_hull(lambda: &Weight) -> HullExtremeSet {
    HullExtremeSet {
        signatures: BTreeSet::from([canonicalize(lambda)]),
    }
}

/// `s_lambda(x) = max_w <w lambda, x>`: zero-pad both value lists to a common
/// length, sort decreasingly and pair up.
pub fn support_functional(lambda: &Weight, x: &RationalWeight) -> Q {
    let len = lambda.support_len() + x.support_len();
    let mut lv: Vec<Q> = lambda.values().into_iter().map(q).collect();
    let mut xv = x.values();
    lv.resize(len, Q::zero());
    xv.resize(len, Q::zero());
    lv.sort_by(|a, b| b.cmp(a));
    xv.sort_by(|a, b| b.cmp(a));
    lv.iter().zip(&xv).map(|(a, b)| a * b).sum()
}

/// `x_lambda = sum_j lambda_j e_j`, the functional exposing `lambda` in `co(lambda)`.
pub fn exposing_vector(lambda: &Weight) -> RationalWeight {
    RationalWeight::from(lambda)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SeparationDirection {
    /// `mu(x) > s_lambda(x)`: `mu` lies outside `co(lambda)`.
    OutsideCoLambda,
    /// `lambda(x) > s_mu(x)`: `lambda` lies outside `co(mu)`.
    LambdaOutsideCoMu,
}

/// A functional `x` that tells two orbit hulls apart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationCertificate {
    pub direction: SeparationDirection,
    /// Indicator of a finite index set, with sign `+1` (positive parts
    /// differ) or `-1` (negative parts differ).
    pub witness: RationalWeight,
    pub gap: Q,
}

impl SeparationCertificate {
    /// Recomputes both sides of the strict inequality from scratch.
    pub fn verify(&self, lambda: &Weight, mu: &Weight) -> bool {
        let (outside, inside) = match self.direction {
            SeparationDirection::OutsideCoLambda => (mu, lambda),
            SeparationDirection::LambdaOutsideCoMu => (lambda, mu),
        };
        let lhs = RationalWeight::from(outside).pair(&self.witness);
        let rhs = support_functional(inside, &self.witness);
        let unit = self.witness.iter().all(|(_, v)| v.is_one())
            || self.witness.iter().all(|(_, v)| *v == -Q::one());
        unit && lhs > rhs && lhs - rhs == self.gap
    }
}

/// Smallest `k` with `L_k(a) > L_k(b)`, if any.
fn first_violation(a: &Weight, b: &Weight) -> Option<usize> {
    let (ra, rb) = (RationalWeight::from(a), RationalWeight::from(b));
    let top = a.support_len() + b.support_len();
    (1..=top).find(|&k| l_k_unchecked(&ra, k) > l_k_unchecked(&rb, k))
}

/// Indicator (with `sign`) of the indices carrying the `k` largest values of `w`.
fn top_k_indicator(w: &Weight, k: usize, sign: i64) -> RationalWeight {
    let mut idx: Vec<(i64, usize)> = w.iter().map(|(j, v)| (v, j)).collect();
    idx.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    RationalWeight::new(idx.into_iter().take(k).map(|(_, j)| (j, q(sign))))
}

/// Constructs a separating functional for two weights in different orbits.
///
/// Positive parts are compared first (`mu_+` against `co(lambda_+)`, then the
/// reverse), then negative parts. The first failing `L_k` picks `x` as the
/// indicator of the top-`k` indices of the offending weight, negated when the
/// failure sits in the negative parts.
pub fn separating_vector(lambda: &Weight, mu: &Weight) -> Result<SeparationCertificate> {
    if orbit_equal(lambda, mu) {
        return arg("weights lie in the same Weyl orbit; no separation exists");
    }
    let (lp, lm) = split_signs(lambda);
    let (mp, mm) = split_signs(mu);
    // (offending part, reference part, outside weight, inside weight, sign, direction)
    let cases: [(&Weight, &Weight, &Weight, &Weight, i64, SeparationDirection); 4] = [
        (
            &mp,
            &lp,
            mu,
            lambda,
            1,
            SeparationDirection::OutsideCoLambda,
        ),
        (
            &lp,
            &mp,
            lambda,
            mu,
            1,
            SeparationDirection::LambdaOutsideCoMu,
        ),
        (
            &mm,
            &lm,
            mu,
            lambda,
            -1,
            SeparationDirection::OutsideCoLambda,
        ),
        (
            &lm,
            &mm,
            lambda,
            mu,
            -1,
            SeparationDirection::LambdaOutsideCoMu,
        ),
    ];
    for (part, reference, outside, inside, sign, direction) in cases {
        if let Some(k) = first_violation(part, reference) {
            let witness = top_k_indicator(part, k, sign);
            let gap =
                RationalWeight::from(outside).pair(&witness) - support_functional(inside, &witness);
            return Ok(SeparationCertificate {
                direction,
                witness,
                gap,
            });
        }
    }
    unreachable!("equal L_k profiles on both sign parts force equal orbits")
}

/// Positive roots `eps_i - eps_j` with `lambda_i > lambda_j` over the joint
/// support of `lambda` and `v`.
fn cone_generators(v: &RationalWeight, lambda: &Weight) -> (Vec<usize>, Vec<(usize, usize)>) {
    let idx: Vec<usize> = lambda
        .support()
        .chain(v.iter().map(|(j, _)| j))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut gens = Vec::new();
    for &i in &idx {
        for &j in &idx {
            if lambda.get(i) > lambda.get(j) {
                gens.push((i, j));
            }
        }
    }
    (idx, gens)
}

/// Non-negative coefficients writing `v` in `C_lambda = cone{eps_i - eps_j : lambda_i > lambda_j}`.
pub fn cone_decomposition(v: &RationalWeight, lambda: &Weight) -> Option<Vec<((usize, usize), Q)>> {
    let (idx, gens) = cone_generators(v, lambda);
    let mut lp = LinearProgram::new(gens.len());
    for &r in &idx {
        let row = gens
            .iter()
            .map(|&(i, j)| {
                if i == r {
                    Q::one()
                } else if j == r {
                    -Q::one()
                } else {
                    Q::zero()
                }
            })
            .collect();
        lp.add_constraint(row, Sense::Eq, v.get(r))
            .expect("row width");
    }
    lp_feasible(&lp).map(|c| {
        gens.into_iter()
            .zip(c)
            .filter(|(_, c)| !c.is_zero())
            .collect()
    })
}

pub fn in_cone_c_lambda(v: &RationalWeight, lambda: &Weight) -> bool {
    cone_decomposition(v, lambda).is_some()
}
