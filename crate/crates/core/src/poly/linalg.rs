//! Exact Gaussian elimination over a field.

use alloc::vec;
use alloc::vec::Vec;

use super::ring::Field;

/// Outcome of solving `A x = b`.
#[derive(Debug, Clone, PartialEq)]
pub enum Solution<E> {
    Unique(Vec<E>),
    Inconsistent,
    /// Consistent, with a solution space of the given dimension.
    Underdetermined {
        free: usize,
    },
}

/// A linear system with a fixed number of unknowns, built row by row.
#[derive(Debug, Clone)]
pub struct LinearSystem<F: Field> {
    field: F,
    unknowns: usize,
    rows: Vec<Vec<F::Elem>>,
}

impl<F: Field> LinearSystem<F> {
    pub fn new(field: F, unknowns: usize) -> Self {
        LinearSystem { field, unknowns, rows: Vec::new() }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Adds the equation `sum coeffs[i] * x_i = rhs`.
    pub fn push(&mut self, coeffs: Vec<F::Elem>, rhs: F::Elem) {
        assert_eq!(coeffs.len(), self.unknowns, "equation length must match the unknowns");
        let mut row = coeffs;
        row.push(rhs);
        self.rows.push(row);
    }

    pub fn solve(&self) -> Solution<F::Elem> {
        let f = &self.field;
        let (rows, pivots) = row_echelon(f, self.rows.clone(), self.unknowns + 1, self.unknowns);
        // Any pivot in the augmented column means 0 = nonzero.
        for row in &rows[pivots.len()..] {
            if !f.is_zero(&row[self.unknowns]) {
                return Solution::Inconsistent;
            }
        }
        if pivots.len() < self.unknowns {
            return Solution::Underdetermined { free: self.unknowns - pivots.len() };
        }
        let mut x = vec![f.zero(); self.unknowns];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = rows[r][self.unknowns].clone();
        }
        Solution::Unique(x)
    }
}

/// Rank of a list of equal-length vectors.
pub fn rank<F: Field>(field: &F, vectors: Vec<Vec<F::Elem>>) -> usize {
    let width = vectors.first().map_or(0, Vec::len);
    row_echelon(field, vectors, width, width).1.len()
}

/// Reduced row echelon form restricted to the first `pivot_cols` columns.
///
/// Among the candidate rows of a column, the entry of least height is taken
/// as pivot to keep the growth of rational entries down. Returns the rows
/// (pivot rows first, in pivot order) and the pivot columns.
fn row_echelon<F: Field>(
    f: &F,
    mut rows: Vec<Vec<F::Elem>>,
    width: usize,
    pivot_cols: usize,
) -> (Vec<Vec<F::Elem>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..pivot_cols {
        let best = (next..rows.len()).filter(|&r| !f.is_zero(&rows[r][col])).min_by_key(|&r| f.height(&rows[r][col]));
        let Some(p) = best else { continue };
        rows.swap(next, p);
        let inv = f.inv(&rows[next][col]).expect("pivot is non-zero");
        for entry in &mut rows[next][col..width] {
            *entry = f.mul(entry, &inv);
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || f.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for c in col..width {
                let t = f.mul(&factor, &pivot_row[c]);
                row[c] = f.sub(&row[c], &t);
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    (rows, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ring::{PrimeField, QQ};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn unique_solution() {
        let mut s = LinearSystem::new(QQ, 2);
        s.push(vec![q(1, 1), q(1, 1)], q(3, 1));
        s.push(vec![q(1, 1), q(-1, 1)], q(1, 2));
        s.push(vec![q(2, 1), q(2, 1)], q(6, 1));
        assert_eq!(s.solve(), Solution::Unique(vec![q(7, 4), q(5, 4)]));
    }

    #[test]
    fn inconsistent_and_underdetermined_are_distinct() {
        let mut s = LinearSystem::new(QQ, 2);
        s.push(vec![q(1, 1), q(1, 1)], q(1, 1));
        s.push(vec![q(2, 1), q(2, 1)], q(3, 1));
        assert_eq!(s.solve(), Solution::Inconsistent);

        let mut s = LinearSystem::new(QQ, 3);
        s.push(vec![q(1, 1), q(1, 1), q(0, 1)], q(1, 1));
        assert_eq!(s.solve(), Solution::Underdetermined { free: 2 });

        let s = LinearSystem::new(QQ, 0);
        assert_eq!(s.solve(), Solution::Unique(vec![]));
        let mut s = LinearSystem::<crate::poly::RationalField>::new(QQ, 0);
        s.push(vec![], q(1, 1));
        assert_eq!(s.solve(), Solution::Inconsistent);
    }

    #[test]
    fn rank_over_prime_field() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(rank(&f, vec![vec![1, 2], vec![2, 4], vec![0, 0]]), 1);
        assert_eq!(rank(&f, vec![vec![1, 2], vec![3, 6]]), 1);
        assert_eq!(rank(&f, vec![vec![1, 2], vec![3, 1]]), 2);
        assert_eq!(rank(&QQ, vec![vec![q(1, 1), q(2, 1)], vec![q(3, 1), q(1, 1)]]), 2);
    }
}
