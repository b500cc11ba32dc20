//! Dense matrices and exact rank.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::scalar::Field;

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    /// Builds from row vectors; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix row");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn push_row(&mut self, row: Vec<T>) {
        assert_eq!(row.len(), self.cols, "ragged matrix row");
        self.data.extend(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }
}

impl<T: Field> Matrix<T> {
    /// Rank by plain Gaussian elimination; exact for exact fields.
    pub fn rank_gauss(&self) -> usize {
        let mut rows: Vec<Vec<T>> = self.rows().map(<[T]>::to_vec).collect();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = rows[rank][c].inv().unwrap();
            let pivot = rows[rank].clone();
            for row in rows.iter_mut().skip(rank + 1) {
                if row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone() * inv.clone();
                for k in c..self.cols {
                    row[k] = row[k].clone() - f.clone() * pivot[k].clone();
                }
            }
            rank += 1;
        }
        rank
    }
}

impl Matrix<BigRational> {
    /// Each row scaled by the lcm of its denominators; the row space over Q
    /// is unchanged.
    pub fn cleared_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows()
            .map(|row| {
                let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                row.iter().map(|v| v.numer() * (&l / v.denom())).collect()
            })
            .collect()
    }

    /// Exact rank over Q.
    pub fn rank(&self) -> usize {
        bareiss_rank(self.cleared_rows(), self.cols)
    }
}

impl Matrix<BigInt> {
    pub fn rank(&self) -> usize {
        bareiss_rank(self.rows().map(<[BigInt]>::to_vec).collect(), self.cols)
    }
}

/// Fraction-free (Bareiss) elimination. In each column the pivot is the
/// entry of largest magnitude among the remaining rows, lowest index on
/// ties, so the elimination order is a function of the input alone.
/// Row updates within one step run in parallel; each is independent.
pub fn bareiss_rank(mut rows: Vec<Vec<BigInt>>, cols: usize) -> usize {
    // Shorter rows first keeps the early pivots small.
    rows.sort_by_key(|r| r.iter().map(BigInt::bits).sum::<u64>());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows.len() {
            break;
        }
        let mut best: Option<usize> = None;
        for r in rank..rows.len() {
            if rows[r][c].is_zero() {
                continue;
            }
            match best {
                Some(b) if rows[b][c].abs() >= rows[r][c].abs() => {}
                _ => best = Some(r),
            }
        }
        let Some(p) = best else { continue };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pv = &pivot_row[c];
        tail.par_iter_mut().for_each(|row| {
            let rc = row[c].clone();
            for k in c + 1..cols {
                let v = &row[k] * pv - &rc * &pivot_row[k];
                row[k] = if prev.is_one() { v } else { v / &prev };
            }
            row[c] = BigInt::zero();
        });
        prev = pv.clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{q, qf};

    fn qm(rows: &[&[i64]]) -> Matrix<BigRational> {
        Matrix::from_rows(
            rows[0].len(),
            rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect(),
        )
    }

    #[test]
    fn small_ranks() {
        assert_eq!(qm(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).rank(), 3);
        assert_eq!(qm(&[&[2, 4], &[1, 2]]).rank(), 1);
        assert_eq!(qm(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(Matrix::<BigRational>::zeros(0, 4).rank(), 0);
        assert_eq!(qm(&[&[0, 1, 2], &[0, 2, 4], &[1, 0, 0]]).rank(), 2);
    }

    #[test]
    fn rational_entries_match_gauss() {
        let m = Matrix::from_rows(
            3,
            vec![
                vec![qf(1, 2), qf(1, 3), qf(1, 4)],
                vec![qf(1, 3), qf(1, 4), qf(1, 5)],
                vec![qf(5, 6), qf(7, 12), qf(9, 20)],
            ],
        );
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_gauss(), 2);
        assert_eq!(m.transpose().rank(), 2);
    }
}
