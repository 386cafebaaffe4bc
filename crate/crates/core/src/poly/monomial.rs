use core::cmp::Ordering;

use smallvec::SmallVec;

/// Inline capacity; covers the 27 matrix coordinates plus formal parameters.
const INLINE: usize = 40;

/// Exponent vector over a fixed [`VariableSet`](super::VariableSet).
///
/// Exponents are bytes. Every object in this crate stays far below that, and
/// arithmetic that would exceed 255 panics instead of wrapping.
///
/// `Ord` is graded lexicographic: total degree first, then the exponent of
/// the first variable, then the second, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exps: SmallVec<[u8; INLINE]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial { degree: 0, exps: SmallVec::from_elem(0, nvars) }
    }

    pub fn from_exponents(exps: &[u8]) -> Monomial {
        Monomial { degree: exps.iter().map(|&e| e as u32).sum(), exps: SmallVec::from_slice(exps) }
    }

    /// The single variable `index` raised to `exp`.
    pub fn var(nvars: usize, index: usize, exp: u8) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[index] = exp;
        m.degree = exp as u32;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u8 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("monomial exponent exceeds 255"))
            .collect();
        Monomial { degree: self.degree + other.degree, exps }
    }

    /// Product, or `None` if some exponent would exceed `caps`.
    pub fn mul_capped(&self, other: &Monomial, caps: &[u8]) -> Option<Monomial> {
        let mut exps: SmallVec<[u8; INLINE]> = SmallVec::with_capacity(self.exps.len());
        for ((a, b), cap) in self.exps.iter().zip(other.exps.iter()).zip(caps) {
            let e = a.checked_add(*b).expect("monomial exponent exceeds 255");
            if e > *cap {
                return None;
            }
            exps.push(e);
        }
        Some(Monomial { degree: self.degree + other.degree, exps })
    }

    pub fn pow(&self, e: u32) -> Monomial {
        let exps =
            self.exps.iter().map(|a| u8::try_from(*a as u32 * e).expect("monomial exponent exceeds 255")).collect();
        Monomial { degree: self.degree * e, exps }
    }

    /// Sum of exponents over a subset of variables.
    pub fn partial_degree(&self, subset: &[usize]) -> u32 {
        subset.iter().map(|&i| self.exps[i] as u32).sum()
    }

    /// Keeps the exponents at `keep` (in that order), dropping the rest.
    pub fn project(&self, keep: &[usize]) -> Monomial {
        let exps: SmallVec<[u8; INLINE]> = keep.iter().map(|&i| self.exps[i]).collect();
        Monomial { degree: exps.iter().map(|&e| e as u32).sum(), exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let x2 = Monomial::from_exponents(&[2, 0]);
        let xy = Monomial::from_exponents(&[1, 1]);
        let y2 = Monomial::from_exponents(&[0, 2]);
        let x = Monomial::from_exponents(&[1, 0]);
        let y3 = Monomial::from_exponents(&[0, 3]);
        assert!(x2 > xy && xy > y2 && y2 > x);
        assert!(y3 > x2);
    }

    #[test]
    fn capped_product() {
        let a = Monomial::from_exponents(&[1, 2]);
        let b = Monomial::from_exponents(&[1, 0]);
        assert_eq!(a.mul_capped(&b, &[2, 2]), Some(Monomial::from_exponents(&[2, 2])));
        assert_eq!(a.mul_capped(&b, &[1, 9]), None);
        assert_eq!(a.mul(&b).degree(), 4);
    }
}
