//! Enumeration of Mackey matrices: grids of root vectors with prescribed
//! row and column sums, together with the degree twist attached to each
//! grid.
//!
//! A matrix decomposes independently over each simple-root index into a
//! nonnegative integer contingency table, so enumeration runs per index
//! and takes the product of the per-index tables.

use crate::error::{Error, Result};
use crate::root_lattice::{form_on_vectors, RootIndex, RootVector};

/// Default cap on the total height of an enumeration.
pub const DEFAULT_MACKEY_CAP: u32 = 16;

/// A `k x l` grid of root vectors whose row sums and column sums match the
/// defining tuples.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MackeyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RootVector>,
}

impl MackeyMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &RootVector {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = &RootVector> {
        (0..self.cols).map(move |j| self.entry(i, j))
    }

    /// The degree twist: minus the form summed over all inverted pairs of
    /// entries (one strictly lower-left of the other).
    pub fn degree(&self) -> i64 {
        let mut total = 0i64;
        for i in 0..self.rows {
            for ip in (i + 1)..self.rows {
                for j in 0..self.cols {
                    for jp in 0..j {
                        total -= form_on_vectors(self.entry(i, j), self.entry(ip, jp));
                    }
                }
            }
        }
        total
    }
}

/// All matrices with the given row and column sums, each exactly once.
pub fn enumerate(betas: &[RootVector], gammas: &[RootVector]) -> Result<Vec<MackeyMatrix>> {
    enumerate_capped(betas, gammas, DEFAULT_MACKEY_CAP)
}

/// As [`enumerate`], with an explicit total-height cap.
pub fn enumerate_capped(
    betas: &[RootVector],
    gammas: &[RootVector],
    cap: u32,
) -> Result<Vec<MackeyMatrix>> {
    let total_rows = betas.iter().fold(RootVector::zero(), |acc, b| acc.plus(b));
    let total_cols = gammas.iter().fold(RootVector::zero(), |acc, g| acc.plus(g));
    if total_rows != total_cols {
        return Err(Error::WeightMismatch);
    }
    let height = total_rows.height();
    if height > cap {
        return Err(Error::CapExceeded { height, cap });
    }
    let k = betas.len();
    let l = gammas.len();
    let indices: Vec<RootIndex> = total_rows.iter().map(|(i, _)| i).collect();
    if indices.is_empty() {
        return Ok(vec![MackeyMatrix {
            rows: k,
            cols: l,
            entries: vec![RootVector::zero(); k * l],
        }]);
    }

    // per-index contingency tables
    let mut per_index: Vec<Vec<Vec<u32>>> = Vec::with_capacity(indices.len());
    for &idx in &indices {
        let row_sums: Vec<u32> = betas.iter().map(|b| b.multiplicity(idx)).collect();
        let col_sums: Vec<u32> = gammas.iter().map(|g| g.multiplicity(idx)).collect();
        per_index.push(contingency_tables(&row_sums, &col_sums));
    }

    let mut out = Vec::new();
    let mut choice = vec![0usize; indices.len()];
    loop {
        let mut entries = vec![RootVector::zero(); k * l];
        for (x, &idx) in indices.iter().enumerate() {
            let table = &per_index[x][choice[x]];
            for (cell, &count) in table.iter().enumerate() {
                if count > 0 {
                    entries[cell] = entries[cell].plus(&RootVector::from_pairs([(idx, count)]));
                }
            }
        }
        out.push(MackeyMatrix {
            rows: k,
            cols: l,
            entries,
        });
        // advance the mixed-radix choice vector
        let mut pos = 0;
        loop {
            if pos == indices.len() {
                out.sort();
                return Ok(out);
            }
            choice[pos] += 1;
            if choice[pos] < per_index[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// All `k x l` nonnegative integer tables with the given margins, as flat
/// row-major vectors.
fn contingency_tables(row_sums: &[u32], col_sums: &[u32]) -> Vec<Vec<u32>> {
    let k = row_sums.len();
    let l = col_sums.len();
    let mut out = Vec::new();
    let mut table = vec![0u32; k * l];
    let mut col_left: Vec<u32> = col_sums.to_vec();
    fill(
        0,
        0,
        row_sums.first().copied().unwrap_or(0),
        row_sums,
        &mut col_left,
        &mut table,
        l,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn fill(
    i: usize,
    j: usize,
    row_left: u32,
    row_sums: &[u32],
    col_left: &mut Vec<u32>,
    table: &mut Vec<u32>,
    l: usize,
    out: &mut Vec<Vec<u32>>,
) {
    if i == row_sums.len() {
        if col_left.iter().all(|&c| c == 0) {
            out.push(table.clone());
        }
        return;
    }
    if j == l {
        if row_left == 0 {
            fill(
                i + 1,
                0,
                row_sums.get(i + 1).copied().unwrap_or(0),
                row_sums,
                col_left,
                table,
                l,
                out,
            );
        }
        return;
    }
    let max_here = row_left.min(col_left[j]);
    for v in 0..=max_here {
        table[i * l + j] = v;
        col_left[j] -= v;
        fill(i, j + 1, row_left - v, row_sums, col_left, table, l, out);
        col_left[j] += v;
        table[i * l + j] = 0;
    }
}
