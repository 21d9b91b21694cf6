//! Partitions, tableaux and their counts.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::perm::Perm;
use crate::error::{arg, Error, Result};
use crate::weights::Weight;

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return arg("partition parts must be positive");
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return arg("partition parts must be non-increasing");
        }
        Ok(Self(parts))
    }

    /// Parses `[2,1]`, or a weight `{"0":2,"1":1}` with positive values at
    /// indices `0, 1, ..`.
    pub fn from_json(text: &str) -> Result<Self> {
        if let Ok(parts) = serde_json::from_str::<Vec<usize>>(text) {
            return Partition::new(parts).map_err(|e| Error::Parse(e.to_string()));
        }
        let w: Weight =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("partition: {e}")))?;
        let dense = w
            .to_dense(w.span())
            .map_err(|e| Error::Parse(e.to_string()))?;
        if dense.iter().any(|&v| v <= 0) {
            return Err(Error::Parse(
                "a partition needs positive parts at indices 0, 1, ..".into(),
            ));
        }
        Partition::new(dense.into_iter().map(|v| v as usize).collect())
            .map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition(
            (0..cols)
                .map(|c| self.0.iter().filter(|&&r| r > c).count())
                .collect(),
        )
    }

    /// The weight with the parts at indices `0, 1, ..`.
    pub fn to_weight(&self) -> Weight {
        Weight::from_values(&self.0.iter().map(|&p| p as i64).collect::<Vec<_>>())
    }

    /// `prod hook lengths`-formula count of standard tableaux.
    pub fn hook_length_count(&self) -> u128 {
        let conj = self.conjugate();
        let mut denom: u128 = 1;
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = conj.0[c] - r - 1;
                denom *= (arm + leg + 1) as u128;
            }
        }
        (1..=self.size() as u128).product::<u128>() / denom
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A bijective filling of the boxes of a shape by `1..=n`, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return arg(format!("tableau entries must be a bijection onto 1..={n}"));
            }
            seen[x] = true;
        }
        Ok(Self { shape, rows })
    }

    /// Boxes filled `1, 2, ..` row by row.
    pub fn canonical(shape: &Partition) -> Self {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let r: Vec<usize> = (next..next + len).collect();
                next += len;
                r
            })
            .collect();
        Self {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.shape.parts().first().copied().unwrap_or(0);
        (0..width)
            .map(|c| self.rows.iter().filter_map(|r| r.get(c).copied()).collect())
            .collect()
    }

    /// Row index (0-based) of each entry `1..=n`, indexed by `entry - 1`.
    pub fn row_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.shape.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for &x in row {
                out[x - 1] = r;
            }
        }
        out
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .columns()
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] < w[1]));
        rows_ok && cols_ok
    }

    /// Permutations (on `0..n`) preserving each block of `blocks`.
    fn block_group(&self, blocks: &[Vec<usize>]) -> Vec<Perm> {
        let n = self.shape.size();
        let mut block_of = vec![0; n];
        for (b, block) in blocks.iter().enumerate() {
            for &x in block {
                block_of[x - 1] = b;
            }
        }
        // product of symmetric groups, generated block by block
        let mut group = vec![Perm::identity(n)];
        for block in blocks.iter().filter(|b| b.len() > 1) {
            let local = Perm::all(block.len());
            let mut next = Vec::with_capacity(group.len() * local.len());
            for g in &group {
                for l in &local {
                    let mut img: Vec<u8> = g.images().to_vec();
                    for (i, &x) in block.iter().enumerate() {
                        img[x - 1] = (block[l.apply(i)] - 1) as u8;
                    }
                    next.push(Perm::from_images(img).expect("block permutation"));
                }
            }
            group = next;
        }
        debug_assert!(group
            .iter()
            .all(|p| (0..n).all(|i| block_of[p.apply(i)] == block_of[i])));
        group
    }

    pub fn row_group(&self) -> Vec<Perm> {
        self.block_group(&self.rows)
    }

    pub fn column_group(&self) -> Vec<Perm> {
        self.block_group(&self.columns())
    }
}

/// Every standard tableau of the given shape.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn rec(
        shape: &[usize],
        rows: &mut Vec<Vec<usize>>,
        next: usize,
        n: usize,
        out: &mut Vec<Tableau>,
    ) {
        if next > n {
            out.push(Tableau {
                shape: Partition(shape.to_vec()),
                rows: rows.clone(),
            });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                rec(shape, rows, next + 1, n, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.num_rows()];
    rec(shape.parts(), &mut rows, 1, shape.size(), &mut out);
    out
}

/// Number of semistandard fillings with entries in `1..=n` (rows weakly
/// increasing, columns strictly increasing), by direct enumeration.
pub fn semistandard_count(shape: &Partition, n: usize) -> u64 {
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    fn rec(cells: &[(usize, usize)], i: usize, grid: &mut Vec<Vec<usize>>, n: usize) -> u64 {
        let Some(&(r, c)) = cells.get(i) else {
            return 1;
        };
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..=n {
            grid[r][c] = v;
            total += rec(cells, i + 1, grid, n);
        }
        total
    }
    let mut grid: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    rec(&cells, 0, &mut grid, n)
}

/// Semistandard fillings with entries in `1..=n`, counted by content
/// (how often each entry occurs): the Kostka numbers `K_{shape, content}`.
pub fn semistandard_contents(shape: &Partition, n: usize) -> BTreeMap<Vec<usize>, u64> {
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    fn rec(
        cells: &[(usize, usize)],
        i: usize,
        grid: &mut Vec<Vec<usize>>,
        content: &mut Vec<usize>,
        out: &mut BTreeMap<Vec<usize>, u64>,
    ) {
        let Some(&(r, c)) = cells.get(i) else {
            *out.entry(content.clone()).or_insert(0) += 1;
            return;
        };
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=content.len() {
            grid[r][c] = v;
            content[v - 1] += 1;
            rec(cells, i + 1, grid, content, out);
            content[v - 1] -= 1;
        }
    }
    let mut grid: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let mut out = BTreeMap::new();
    rec(&cells, 0, &mut grid, &mut vec![0; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn partition_lists() {
        assert_eq!(partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions(0), vec![p(&[])]);
        assert_eq!(partitions(4).len(), 5);
        // partition numbers 1,1,2,3,5,7,11,15,22
        let counts: Vec<usize> = (0..9).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn tableau_validation() {
        assert!(Tableau::new(vec![vec![1, 2], vec![3]]).is_ok());
        assert!(Tableau::new(vec![vec![1, 1], vec![3]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
        let t = Tableau::canonical(&p(&[3, 1]));
        assert_eq!(t.rows(), &[vec![1, 2, 3], vec![4]]);
        assert_eq!(t.columns(), vec![vec![1, 4], vec![2], vec![3]]);
        assert_eq!(t.row_of(), vec![0, 0, 0, 1]);
        assert!(t.is_standard());
    }

    #[test]
    fn standard_counts_match_hook_formula() {
        for n in 0..=7 {
            for shape in partitions(n) {
                let syt = standard_tableaux(&shape);
                assert!(syt.iter().all(Tableau::is_standard));
                assert_eq!(syt.len() as u128, shape.hook_length_count(), "{shape}");
            }
        }
    }

    #[test]
    fn semistandard_counts() {
        assert_eq!(semistandard_count(&p(&[2]), 2), 3);
        assert_eq!(semistandard_count(&p(&[1, 1]), 2), 1);
        assert_eq!(semistandard_count(&p(&[2, 1]), 2), 2);
        assert_eq!(semistandard_count(&p(&[1, 1, 1]), 2), 0);
        assert_eq!(semistandard_count(&p(&[2, 1]), 3), 8);
        assert_eq!(semistandard_count(&p(&[]), 3), 1);
    }

    #[test]
    fn kostka_numbers() {
        let k = semistandard_contents(&p(&[2, 1]), 3);
        assert_eq!(k[&vec![1, 1, 1]], 2);
        assert_eq!(k[&vec![2, 1, 0]], 1);
        assert_eq!(k.values().sum::<u64>(), semistandard_count(&p(&[2, 1]), 3));
        assert!(semistandard_contents(&p(&[1, 1, 1]), 2).is_empty());
    }

    #[test]
    fn groups() {
        let t = Tableau::canonical(&p(&[2, 1]));
        assert_eq!(t.row_group().len(), 2);
        assert_eq!(t.column_group().len(), 2);
        let t = Tableau::canonical(&p(&[3, 2]));
        assert_eq!(t.row_group().len(), 12);
        assert_eq!(t.column_group().len(), 4);
    }
}
