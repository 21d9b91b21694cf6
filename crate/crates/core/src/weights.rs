//! Finitely supported integer weights, their Weyl orbits and the
//! orbit/partition-pair correspondence.
//!
//! The index set is modelled as the non-negative integers; only finite
//! supports are ever stored, so the Weyl group (finitary permutations of the
//! index set) acts by relabelling keys.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finitely supported function `J -> Z` with zero entries absent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    entries: BTreeMap<usize, i64>,
}

impl Weight {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds a weight from `(index, value)` pairs. Zero values and repeated
    /// indices are rejected.
    pub fn new(pairs: impl IntoIterator<Item = (usize, i64)>) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (j, v) in pairs {
            if v == 0 {
                return Err(Error::Parse(format!("zero value stored at index {j}")));
            }
            if entries.insert(j, v).is_some() {
                return Err(Error::Parse(format!("index {j} given twice")));
            }
        }
        Ok(Self { entries })
    }

    /// Reads `values[i]` as the value at index `i`, dropping zeros.
    pub fn from_values(values: &[i64]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| (i, v))
            .collect();
        Self { entries }
    }

    pub fn get(&self, j: usize) -> i64 {
        self.entries.get(&j).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.entries.iter().map(|(&j, &v)| (j, v))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero values in index order.
    pub fn values(&self) -> Vec<i64> {
        self.entries.values().copied().collect()
    }

    /// One past the largest index in the support (0 for the zero weight).
    pub fn span(&self) -> usize {
        self.entries.keys().next_back().map_or(0, |&j| j + 1)
    }

    pub fn l1_norm(&self) -> u64 {
        self.entries.values().map(|v| v.unsigned_abs()).sum()
    }

    pub fn total(&self) -> i64 {
        self.entries.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|&v| v > 0)
    }

    pub fn neg(&self) -> Self {
        Self {
            entries: self.entries.iter().map(|(&j, &v)| (j, -v)).collect(),
        }
    }

    /// Dense vector of length `n`; fails if the support does not fit.
    pub fn to_dense(&self, n: usize) -> Result<Vec<i64>> {
        if self.span() > n {
            return Err(Error::Dimension {
                expected: n,
                found: self.span(),
            });
        }
        let mut out = vec![0; n];
        for (j, v) in self.iter() {
            out[j] = v;
        }
        Ok(out)
    }

    /// Relabels indices by `perm` (which must be injective on the support).
    pub fn relabel(&self, perm: impl Fn(usize) -> usize) -> Self {
        Self {
            entries: self.entries.iter().map(|(&j, &v)| (perm(j), v)).collect(),
        }
    }

    /// Restriction to the indices in `keep`.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .filter(|(&j, _)| keep(j))
                .map(|(&j, &v)| (j, v))
                .collect(),
        }
    }

    /// Entrywise difference; zeros are dropped.
    pub fn sub(&self, other: &Weight) -> Weight {
        let mut entries = self.entries.clone();
        for (j, v) in other.iter() {
            let e = entries.entry(j).or_insert(0);
            *e -= v;
            if *e == 0 {
                entries.remove(&j);
            }
        }
        Weight { entries }
    }

    /// Signed-integer inner product `<self, other>`.
    pub fn dot(&self, other: &Weight) -> i64 {
        self.iter().map(|(j, v)| v * other.get(j)).sum()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (j, v)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{j}:{v}")?;
        }
        write!(f, "}}")
    }
}

/// The multiplicity function `k -> |{j : lambda_j = k}|` over `k != 0`. Two
/// weights share a signature iff they lie in the same Weyl orbit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrbitSignature {
    multiplicities: BTreeMap<i64, usize>,
}

impl OrbitSignature {
    pub fn multiplicity(&self, value: i64) -> usize {
        self.multiplicities.get(&value).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.multiplicities.iter().map(|(&k, &m)| (k, m))
    }

    pub fn len(&self) -> usize {
        self.multiplicities.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// All values with multiplicity, in decreasing order.
    pub fn sorted_values(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.len());
        for (&k, &m) in self.multiplicities.iter().rev() {
            out.extend(std::iter::repeat_n(k, m));
        }
        out
    }

    /// Canonical representative: values in decreasing order at indices `0, 1, ...`.
    pub fn representative(&self) -> Weight {
        Weight::from_values(&self.sorted_values())
    }

    pub fn l1_norm(&self) -> u64 {
        self.iter().map(|(k, m)| k.unsigned_abs() * m as u64).sum()
    }
}

impl FromIterator<(i64, usize)> for OrbitSignature {
    fn from_iter<I: IntoIterator<Item = (i64, usize)>>(iter: I) -> Self {
        let mut multiplicities = BTreeMap::new();
        for (k, m) in iter {
            if k != 0 && m > 0 {
                *multiplicities.entry(k).or_insert(0) += m;
            }
        }
        Self { multiplicities }
    }
}

/// A pair of partitions `(plus, minus)` classifying a Weyl orbit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionPair {
    pub plus: Vec<u64>,
    pub minus: Vec<u64>,
}

impl PartitionPair {
    pub fn new(plus: Vec<u64>, minus: Vec<u64>) -> Result<Self> {
        for (name, p) in [("plus", &plus), ("minus", &minus)] {
            if p.contains(&0) {
                return Err(Error::Argument(format!("{name} has a zero part")));
            }
            if p.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::Argument(format!("{name} is not non-increasing")));
            }
        }
        Ok(Self { plus, minus })
    }
}

pub fn canonicalize(lambda: &Weight) -> OrbitSignature {
    lambda.iter().map(|(_, v)| (v, 1)).collect()
}

pub fn orbit_equal(lambda: &Weight, mu: &Weight) -> bool {
    canonicalize(lambda) == canonicalize(mu)
}

/// `(lambda_+, lambda_-)` with `lambda = lambda_+ - lambda_-`, both non-negative.
pub fn split_signs(lambda: &Weight) -> (Weight, Weight) {
    let plus = lambda.restrict(|j| lambda.get(j) > 0);
    let minus = lambda.restrict(|j| lambda.get(j) < 0).neg();
    (plus, minus)
}

pub fn to_partition_pair(lambda: &Weight) -> PartitionPair {
    let sig = canonicalize(lambda);
    let vals = sig.sorted_values();
    let plus = vals.iter().filter(|&&v| v > 0).map(|&v| v as u64).collect();
    let mut minus: Vec<u64> = vals
        .iter()
        .filter(|&&v| v < 0)
        .map(|&v| v.unsigned_abs())
        .collect();
    minus.reverse();
    PartitionPair { plus, minus }
}

/// Places the plus-parts at indices `0..p` and the negated minus-parts after
/// them, smallest magnitude first, so that the result is non-increasing.
pub fn from_partition_pair(pair: &PartitionPair) -> Weight {
    let mut vals: Vec<i64> = pair.plus.iter().map(|&p| p as i64).collect();
    vals.extend(pair.minus.iter().rev().map(|&m| -(m as i64)));
    Weight::from_values(&vals)
}

/// `lambda = +-eps_j`, i.e. `||lambda||_1 = 1`.
pub fn is_contractive(lambda: &Weight) -> bool {
    lambda.support_len() == 1 && lambda.iter().all(|(_, v)| v.abs() == 1)
}

// JSON: `{"entries": {"3": -1}}` is the canonical form; the bare map
// `{"3": -1}` is accepted on input as a shorthand.
#[derive(Serialize, Deserialize)]
struct WeightWire {
    entries: BTreeMap<String, i64>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WeightInput {
    Wrapped(WeightWire),
    Bare(BTreeMap<String, i64>),
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WeightWire {
            entries: self.iter().map(|(j, v)| (j.to_string(), v)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let map = match WeightInput::deserialize(d)? {
            WeightInput::Wrapped(w) => w.entries,
            WeightInput::Bare(m) => m,
        };
        let mut pairs = Vec::with_capacity(map.len());
        for (k, v) in map {
            let j: usize = k.parse().map_err(|_| {
                D::Error::custom(format!("index {k:?} is not a non-negative integer"))
            })?;
            pairs.push((j, v));
        }
        Weight::new(pairs).map_err(D::Error::custom)
    }
}
