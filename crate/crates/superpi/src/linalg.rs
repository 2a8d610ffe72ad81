//! Exact linear algebra over the rationals.
//!
//! The workhorse is [`RowEchelon`], an incrementally maintained reduced row
//! echelon form. Rows are inserted one at a time in whatever order the caller
//! enumerates them; pivoting is deterministic (leftmost nonzero coordinate of
//! the reduced row), so every computation downstream of this module is
//! reproducible bit for bit.

use crate::rat::Rat;
use num_traits::{One, Zero};

/// Reduced row echelon form of a growing set of rows, all of one fixed width.
///
/// Invariants kept after every `insert`:
/// * `rows` are sorted by strictly increasing pivot column,
/// * each row has a leading 1 in its pivot column,
/// * every pivot column is zero in all other rows (fully reduced).
#[derive(Clone, Debug)]
pub struct RowEchelon {
    width: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn new(width: usize) -> Self {
        RowEchelon { width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The reduced rows, parallel to `pivots()`.
    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Entry of the reduced row with pivot position `i` at column `col`.
    pub fn entry(&self, i: usize, col: usize) -> &Rat {
        &self.rows[i][col]
    }

    /// Reduces `row` against the current basis in place.
    fn reduce_in_place(&self, row: &mut [Rat]) {
        assert_eq!(row.len(), self.width, "row width mismatch");
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, y) in row.iter_mut().zip(r) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
    }

    /// Residue of `row` modulo the current row space.
    pub fn reduce(&self, mut row: Vec<Rat>) -> Vec<Rat> {
        self.reduce_in_place(&mut row);
        row
    }

    /// True if `row` lies in the current row space.
    pub fn contains(&self, row: &[Rat]) -> bool {
        let mut r = row.to_vec();
        self.reduce_in_place(&mut r);
        r.iter().all(Rat::is_zero)
    }

    /// Inserts `row`, returning `true` if it enlarged the row space.
    pub fn insert(&mut self, mut row: Vec<Rat>) -> bool {
        self.reduce_in_place(&mut row);
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = row[p].clone();
        if !lead.is_one() {
            for x in row.iter_mut() {
                if !x.is_zero() {
                    *x /= &lead;
                }
            }
        }
        // Clear column p from the existing rows to stay fully reduced.
        for r in self.rows.iter_mut() {
            if !r[p].is_zero() {
                let c = r[p].clone();
                for (x, y) in r.iter_mut().zip(&row) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, row);
        true
    }

    /// Basis of the kernel of the matrix whose rows were inserted: one vector
    /// per non-pivot column `j`, with `x_j = 1` and the pivot coordinates
    /// solved from the reduced rows. Deterministic, in increasing `j`.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let mut is_pivot = vec![false; self.width];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for j in 0..self.width {
            if is_pivot[j] {
                continue;
            }
            let mut v = vec![Rat::zero(); self.width];
            v[j] = Rat::one();
            for (r, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = -r[j].clone();
            }
            out.push(v);
        }
        out
    }
}

/// Rank of an explicit list of rows.
pub fn rank_of(rows: &[Vec<Rat>], width: usize) -> usize {
    let mut ech = RowEchelon::new(width);
    for r in rows {
        ech.insert(r.clone());
    }
    ech.rank()
}
