//! Irreducible characters of `S_k` by the Murnaghan–Nakayama rule.
//!
//! Shapes are handled through beta-sets (first-column hook lengths): removing
//! a rim hook of length `r` moves one bead from `b` to `b - r` onto an empty
//! position, and the hook's leg length is the number of beads jumped over.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::partition::Partition;

type Key = (Vec<usize>, Vec<usize>);

fn cache() -> &'static Mutex<HashMap<Key, i64>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, i64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn beta_set(shape: &[usize]) -> Vec<usize> {
    let m = shape.len();
    shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p + m - 1 - i)
        .collect()
}

fn from_beta_set(mut beta: Vec<usize>) -> Vec<usize> {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let m = beta.len();
    beta.iter()
        .enumerate()
        .map(|(i, &b)| b + i + 1 - m)
        .filter(|&p| p > 0)
        .collect()
}

fn mn(shape: &[usize], cycles: &[usize]) -> i64 {
    if cycles.is_empty() {
        return i64::from(shape.is_empty());
    }
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(&v) = cache().lock().expect("cache").get(&key) {
        return v;
    }
    let r = cycles[0];
    let rest = &cycles[1..];
    let beta = beta_set(shape);
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut moved = beta.clone();
        moved[i] = b - r;
        total += sign * mn(&from_beta_set(moved), rest);
    }
    cache().lock().expect("cache").insert(key, total);
    total
}

/// `chi^shape` at any permutation of cycle type `cycle_type` (any order of parts).
pub fn character(shape: &Partition, cycle_type: &[usize]) -> i64 {
    assert_eq!(
        shape.size(),
        cycle_type.iter().sum::<usize>(),
        "shape and cycle type must have the same size"
    );
    let mut cycles: Vec<usize> = cycle_type.iter().copied().filter(|&c| c > 0).collect();
    cycles.sort_unstable_by(|a, b| b.cmp(a));
    mn(shape.parts(), &cycles)
}

/// `f^shape = chi^shape(e)`.
pub fn dimension(shape: &Partition) -> i64 {
    character(shape, &vec![1; shape.size()])
}
