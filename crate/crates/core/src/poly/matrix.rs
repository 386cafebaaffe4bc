use alloc::sync::Arc;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::polynomial::{Polynomial, TermAccumulator};
use super::ring::Ring;
use super::vars::VariableSet;
use super::PolyError;

/// Largest dimension accepted by [`PolyMatrix::determinant`]; the column
/// subset recursion touches up to `2^n` minors.
pub const MAX_DETERMINANT_DIM: usize = 12;

/// A square matrix of polynomials over one ring and variable set.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix<R: Ring> {
    n: usize,
    entries: Vec<Polynomial<R>>,
}

impl<R: Ring> PolyMatrix<R> {
    pub fn from_rows(rows: Vec<Vec<Polynomial<R>>>) -> Result<Self, PolyError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(PolyError::NotSquare { rows: n, cols: row.len() });
            }
            entries.extend(row);
        }
        if let Some(first) = entries.first() {
            for e in &entries {
                if e.ring() != first.ring() {
                    return Err(PolyError::RingMismatch);
                }
                if !super::vars::same_vars(e.vars(), first.vars()) {
                    return Err(PolyError::VariableMismatch);
                }
            }
        }
        Ok(PolyMatrix { n, entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Polynomial<R>) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { n, entries }
    }

    pub fn zero(ring: R, vars: Arc<VariableSet>, n: usize) -> Self {
        Self::from_fn(n, |_, _| Polynomial::zero(ring.clone(), vars.clone()))
    }

    pub fn identity(ring: R, vars: Arc<VariableSet>, n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                Polynomial::one(ring.clone(), vars.clone())
            } else {
                Polynomial::zero(ring.clone(), vars.clone())
            }
        })
    }

    /// Constant matrix from integer entries.
    pub fn from_ints(ring: R, vars: Arc<VariableSet>, rows: &[&[i64]]) -> Self {
        Self::from_fn(rows.len(), |i, j| Polynomial::from_i64(ring.clone(), vars.clone(), rows[i][j]))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<R> {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial<R>) {
        self.entries[i * self.n + j] = p;
    }

    pub fn entries(&self) -> &[Polynomial<R>] {
        &self.entries
    }

    pub fn map(&self, f: impl Fn(&Polynomial<R>) -> Polynomial<R>) -> Self {
        PolyMatrix { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_dim(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.try_add(b)).collect::<Result<_, _>>()?;
        Ok(PolyMatrix { n: self.n, entries })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_dim(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.try_sub(b)).collect::<Result<_, _>>()?;
        Ok(PolyMatrix { n: self.n, entries })
    }

    pub fn scale(&self, p: &Polynomial<R>) -> Result<Self, PolyError> {
        let entries = self.entries.iter().map(|e| e.try_mul(p)).collect::<Result<_, _>>()?;
        Ok(PolyMatrix { n: self.n, entries })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_dim(other)?;
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let first = self.get(i, 0);
                let mut acc = TermAccumulator::new(first.ring().clone(), first.vars().clone());
                let one = first.ring().one();
                for k in 0..n {
                    acc.add_product(self.get(i, k), other.get(k, j), &one, None)?;
                }
                entries.push(acc.finish());
            }
        }
        Ok(PolyMatrix { n, entries })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.n {
            self.entries.swap(a * self.n + j, b * self.n + j);
        }
    }

    pub fn trace(&self) -> Result<Polynomial<R>, PolyError> {
        let mut acc = self.get(0, 0).clone();
        for i in 1..self.n {
            acc = acc.try_add(self.get(i, i))?;
        }
        Ok(acc)
    }

    /// Assembles a block matrix; `None` blocks are zero. All blocks are `k x k`.
    pub fn from_blocks(blocks: &[Vec<Option<&PolyMatrix<R>>>], ring: R, vars: Arc<VariableSet>) -> Self {
        let nb = blocks.len();
        let k = blocks.iter().flatten().flatten().map(|b| b.n).next().expect("at least one non-zero block");
        Self::from_fn(nb * k, |i, j| match blocks[i / k][j / k] {
            Some(b) => b.get(i % k, j % k).clone(),
            None => Polynomial::zero(ring.clone(), vars.clone()),
        })
    }

    fn check_dim(&self, other: &Self) -> Result<(), PolyError> {
        if self.n != other.n {
            return Err(PolyError::NotSquare { rows: self.n, cols: other.n });
        }
        Ok(())
    }

    /// Exact determinant by row-by-row expansion over column subsets.
    pub fn determinant(&self) -> Result<Polynomial<R>, PolyError> {
        self.determinant_bounded(None, None)
    }

    /// Determinant with optional exponent caps and a term budget.
    ///
    /// Partial products only ever gain exponents, so a monomial that exceeds
    /// `caps` in some minor can be discarded there: the result is the exact
    /// determinant with every term above the caps removed. Zero entries are
    /// skipped, which keeps sparse block matrices cheap.
    pub fn determinant_bounded(&self, caps: Option<&[u8]>, budget: Option<usize>) -> Result<Polynomial<R>, PolyError> {
        let n = self.n;
        if n > MAX_DETERMINANT_DIM {
            return Err(PolyError::TooLarge(n));
        }
        let (ring, vars) = match self.entries.first() {
            Some(e) => (e.ring().clone(), e.vars().clone()),
            None => panic!("determinant of an empty matrix needs a ring; use a 1x1 matrix"),
        };
        let one = ring.one();
        let minus_one = ring.neg(&one);
        let mut layer: HashMap<u32, Polynomial<R>> = HashMap::new();
        layer.insert(0, Polynomial::one(ring.clone(), vars.clone()));
        for i in 0..n {
            let mut next: HashMap<u32, TermAccumulator<R>> = HashMap::new();
            let mut masks: Vec<&u32> = layer.keys().collect();
            masks.sort_unstable();
            for mask in masks {
                let minor = &layer[mask];
                for j in 0..n {
                    if mask & (1 << j) != 0 {
                        continue;
                    }
                    let entry = self.get(i, j);
                    if entry.is_zero() {
                        continue;
                    }
                    // Earlier rows that sit in columns right of j each add an inversion.
                    let inversions = (mask >> (j + 1)).count_ones();
                    let sign = if inversions % 2 == 0 { &one } else { &minus_one };
                    let acc = next
                        .entry(mask | (1 << j))
                        .or_insert_with(|| TermAccumulator::new(ring.clone(), vars.clone()).with_budget(budget));
                    acc.add_product(minor, entry, sign, caps)?;
                }
            }
            layer = next.into_iter().map(|(m, acc)| (m, acc.finish())).filter(|(_, p)| !p.is_zero()).collect();
        }
        let full = (1u32 << n) - 1;
        Ok(layer.remove(&full).unwrap_or_else(|| Polynomial::zero(ring, vars)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ring::{IntegerRing, ZZ};
    use crate::poly::{Integer, Monomial};
    use alloc::vec;

    fn vars4() -> Arc<VariableSet> {
        VariableSet::new(["x", "y", "z", "w"]).unwrap()
    }

    fn v(name: &str) -> Polynomial<IntegerRing> {
        Polynomial::var(ZZ, vars4(), name).unwrap()
    }

    #[test]
    fn two_by_two() {
        let m = PolyMatrix::from_rows(vec![vec![v("x"), v("y")], vec![v("z"), v("w")]]).unwrap();
        assert_eq!(m.determinant().unwrap(), &(&v("x") * &v("w")) - &(&v("y") * &v("z")));
    }

    #[test]
    fn non_square_is_rejected() {
        let r = PolyMatrix::from_rows(vec![vec![v("x"), v("y")], vec![v("z")]]);
        assert!(matches!(r, Err(PolyError::NotSquare { .. })));
    }

    #[test]
    fn generic_three_by_three_signs() {
        let vars = crate::poly::vars::numbered("a", 9);
        let m = PolyMatrix::from_fn(3, |i, j| Polynomial::var_at(ZZ, vars.clone(), 3 * i + j));
        let d = m.determinant().unwrap();
        assert_eq!(d.len(), 6);
        let mut signs = vec![];
        for perm in [[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1], [1, 0, 2], [2, 1, 0]] {
            let mut e = [0u8; 9];
            for (i, &j) in perm.iter().enumerate() {
                e[3 * i + j] = 1;
            }
            signs.push(d.coefficient(&Monomial::from_exponents(&e)));
        }
        let expect: Vec<Integer> = [1, 1, 1, -1, -1, -1].iter().map(|&s| Integer::Small(s)).collect();
        assert_eq!(signs, expect);
    }

    #[test]
    fn block_swap_permutation() {
        let vars = vars4();
        let id = PolyMatrix::identity(ZZ, vars.clone(), 3);
        let m = PolyMatrix::from_blocks(&[vec![None, Some(&id)], vec![Some(&id), None]], ZZ, vars.clone());
        assert_eq!(m.dim(), 6);
        assert_eq!(m.determinant().unwrap(), Polynomial::from_i64(ZZ, vars, -1));
    }

    #[test]
    fn capped_determinant_keeps_low_terms() {
        // det [[x, 1], [1, x]] = x^2 - 1; capping x at 1 leaves only -1.
        let one = Polynomial::one(ZZ, vars4());
        let m = PolyMatrix::from_rows(vec![vec![v("x"), one.clone()], vec![one, v("x")]]).unwrap();
        let d = m.determinant_bounded(Some(&[1, 9, 9, 9]), None).unwrap();
        assert_eq!(d, Polynomial::from_i64(ZZ, vars4(), -1));
    }
}
