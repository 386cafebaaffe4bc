//! Torus weights, fixedness under the unipotent radical, and the linear
//! systems that pin down highest weight corrections.
//!
//! Fixedness is tested with the transvections `I + E_ij` at parameter 1.
//! `I + E_12` and `I + E_23` generate a Zariski dense subgroup of the upper
//! unitriangular group; adding `I + E_21` and `I + E_32` gives a Zariski
//! dense subgroup of `SL3`. A polynomial fixed by these generators is
//! therefore fixed by the whole group.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::generators::{act_by, act_on_function, coordinates, f_span_action, FTable, GeneratorError, GroupElement};
use crate::identity::IdentityTask;
use crate::poly::linalg::{LinearSystem, Solution};
use crate::poly::{IntegerRing, Monomial, PolyError, PolyMatrix, Polynomial, RationalField, Ring, VariableSet, QQ};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HwvError {
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error("the correction system is inconsistent: no combination is fixed by the unipotents")]
    Inconsistent,
    #[error("the correction system is underdetermined ({free} free parameters)")]
    Underdetermined { free: usize },
    #[error("polynomial coefficients are not rational")]
    NotRational,
}

impl From<PolyError> for HwvError {
    fn from(e: PolyError) -> Self {
        HwvError::Generator(e.into())
    }
}

/// The upper transvections that generate a dense subgroup of the unipotent radical.
pub fn upper_unipotents() -> [GroupElement; 2] {
    [GroupElement::transvection(1, 2), GroupElement::transvection(2, 3)]
}

/// The four transvections that generate a dense subgroup of `SL3`.
pub fn sl3_generators() -> [GroupElement; 4] {
    [
        GroupElement::transvection(1, 2),
        GroupElement::transvection(2, 3),
        GroupElement::transvection(2, 1),
        GroupElement::transvection(3, 2),
    ]
}

/// Degrees in the entries of `A1`, `A2`, `A3`, when `F` is multihomogeneous.
pub fn multidegree<R: Ring>(f: &Polynomial<R>) -> Option<[u32; 3]> {
    let blocks: [Vec<usize>; 3] = core::array::from_fn(|r| (9 * r..9 * r + 9).collect());
    let refs: [&[usize]; 3] = [&blocks[0], &blocks[1], &blocks[2]];
    let d = f.block_degrees(&refs)?;
    Some([d[0], d[1], d[2]])
}

/// Whether `diag(z1, z2, z3) . F = z1^a1 z2^a2 z3^a3 F` with symbolic `z`s.
pub fn is_weight_vector<R: Ring>(f: &Polynomial<R>, alpha: [u32; 3]) -> Result<bool, HwvError> {
    let ring = f.ring().clone();
    let ext: Arc<VariableSet> = coordinates().extended(&["z1", "z2", "z3"])?;
    let z = |k: usize| Polynomial::var_at(ring.clone(), ext.clone(), 27 + k);
    let zero = Polynomial::zero(ring.clone(), ext.clone());
    let g = PolyMatrix::from_rows(alloc::vec![
        alloc::vec![z(0), zero.clone(), zero.clone()],
        alloc::vec![zero.clone(), z(1), zero.clone()],
        alloc::vec![zero.clone(), zero, z(2)],
    ])?;
    let acted = act_on_function(&g, f)?;
    let mut e = alloc::vec![0u8; 30];
    for k in 0..3 {
        e[27 + k] = u8::try_from(alpha[k]).map_err(|_| PolyError::TooLarge(alpha[k] as usize))?;
    }
    let expected = f.embed(&ext)?.mul_monomial(&Monomial::from_exponents(&e), &ring.one());
    Ok(acted == expected)
}

/// Whether `g . F = F` for every `g` in `gens`.
pub fn is_fixed_by<R: Ring>(f: &Polynomial<R>, gens: &[GroupElement]) -> Result<bool, HwvError> {
    for g in gens {
        if act_by(g, f)? != *f {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `F` is fixed by `I + E_12` and `I + E_23`.
pub fn is_fixed_by_unipotents<R: Ring>(f: &Polynomial<R>) -> Result<bool, HwvError> {
    is_fixed_by(f, &upper_unipotents())
}

/// Whether `F` is fixed by all four elementary transvections, i.e. `SL3`-invariant.
pub fn sl3_invariance_certificate<R: Ring>(f: &Polynomial<R>) -> Result<bool, HwvError> {
    is_fixed_by(f, &sl3_generators())
}

/// Same as [`sl3_invariance_certificate`], for a rational polynomial, after
/// clearing denominators (integer arithmetic is much cheaper).
pub fn sl3_invariance_certificate_rational(f: &Polynomial<RationalField>) -> Result<bool, HwvError> {
    sl3_invariance_certificate(&f.clear_denominators().0)
}

/// The `beta` with `base + sum beta_i basis_i` fixed by `I + E_12` and
/// `I + E_23`, found by exact rational elimination over the coefficients of
/// every monomial of `u . P - P`.
pub fn solve_hwv_correction<R: Ring>(
    base: &Polynomial<R>,
    basis: &[Polynomial<R>],
) -> Result<Vec<BigRational>, HwvError> {
    let mut system = LinearSystem::new(QQ, basis.len());
    for g in upper_unipotents() {
        let delta = |p: &Polynomial<R>| -> Result<Polynomial<R>, HwvError> { Ok(act_by(&g, p)?.try_sub(p)?) };
        let db = delta(base)?;
        let dm = basis.iter().map(delta).collect::<Result<Vec<_>, _>>()?;
        let mut monomials: Vec<&Monomial> = db.terms().iter().map(|(m, _)| m).collect();
        for d in &dm {
            monomials.extend(d.terms().iter().map(|(m, _)| m));
        }
        monomials.sort_unstable();
        monomials.dedup();
        let ring = base.ring();
        let mut seen: hashbrown::HashSet<Vec<BigRational>> = hashbrown::HashSet::new();
        for m in monomials {
            let mut row = Vec::with_capacity(basis.len() + 1);
            for d in &dm {
                row.push(ring.to_rational(&d.coefficient(m)).ok_or(HwvError::NotRational)?);
            }
            let rhs = -ring.to_rational(&db.coefficient(m)).ok_or(HwvError::NotRational)?;
            row.push(rhs);
            if row.iter().all(Zero::is_zero) || !seen.insert(row.clone()) {
                continue;
            }
            let rhs = row.pop().expect("non-empty");
            system.push(row, rhs);
        }
    }
    match system.solve() {
        Solution::Unique(beta) => Ok(beta),
        Solution::Inconsistent => Err(HwvError::Inconsistent),
        Solution::Underdetermined { free } => Err(HwvError::Underdetermined { free }),
    }
}

/// Action of `g` on a polynomial in the ten `f`s (named `f1..f10`; other
/// variables are left alone), through the linear action on their span.
pub fn act_on_f_polynomial(
    g: &GroupElement,
    p: &Polynomial<RationalField>,
) -> Result<Polynomial<RationalField>, HwvError> {
    let m = f_span_action(g);
    let vars = p.vars().clone();
    let mut bindings = alloc::vec![None; vars.len()];
    let mut slots = Vec::with_capacity(10);
    for n in 1..=10 {
        slots.push(vars.index_of(&alloc::format!("f{n}")));
    }
    for (a, slot) in slots.iter().enumerate() {
        let Some(i) = slot else { continue };
        let mut image = Polynomial::zero(QQ, vars.clone());
        for (b, other) in slots.iter().enumerate() {
            if m[a][b].is_zero() {
                continue;
            }
            let Some(j) = other else {
                // The image leaves the variables present in `p`.
                return Err(PolyError::UnknownVariable(alloc::format!("f{}", b + 1)).into());
            };
            image = image.try_add(&Polynomial::var_at(QQ, vars.clone(), *j).scale(&m[a][b]))?;
        }
        bindings[*i] = Some(image);
    }
    Ok(p.substitute(&vars, &bindings)?)
}

/// `SL3`-invariance of a polynomial in the `f`s, checked exactly through the
/// action on their span.
pub fn sl3_invariance_in_f(p: &Polynomial<RationalField>) -> Result<bool, HwvError> {
    for g in sl3_generators() {
        if act_on_f_polynomial(&g, p)? != *p {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `P(f(T.g)) - P(f(T))` as an identity in the 27 coordinates, for a
/// polynomial `P` in the `f`s only (given in the abstract ring).
pub fn f_invariance_task(
    name: &str,
    p: &Polynomial<RationalField>,
    f: &FTable<IntegerRing>,
    g: &GroupElement,
) -> Result<IdentityTask, HwvError> {
    let abstract_vars = p.vars().clone();
    let n = abstract_vars.len();
    let (q_at, h_at) = (abstract_vars.require("q")?, abstract_vars.require("h")?);
    let f_only = p.coefficient_of(&[q_at, h_at], &Monomial::one(n))?;
    let names: Vec<String> =
        (1..=10).map(|i| alloc::format!("f{i}")).chain((1..=10).map(|i| alloc::format!("g{i}"))).collect();
    let both = VariableSet::new(names)?;
    let before = f_only.embed(&both)?;
    let mut bindings = alloc::vec![None; 20];
    for (i, slot) in bindings.iter_mut().take(10).enumerate() {
        *slot = Some(Polynomial::var_at(QQ, both.clone(), 10 + i));
    }
    let after = before.substitute(&both, &bindings)?;
    let outer = after.try_sub(&before)?;
    let mut task = IdentityTask::new(name);
    let mut leaves = Vec::with_capacity(20);
    for k in 1..=10 {
        leaves.push(task.leaf(f.numbered(k).to_rational().expect("integers are rational")));
    }
    for k in 1..=10 {
        let acted = act_by(g, f.numbered(k))?;
        leaves.push(task.leaf(acted.to_rational().expect("integers are rational")));
    }
    let root = task.compose(outer, &leaves);
    task.set_root(root);
    Ok(task)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{f_all, h_poly, MatrixTriple};
    use crate::poly::ZZ;

    #[test]
    fn f_weights() {
        let f = f_all(&MatrixTriple::generic(ZZ)).unwrap();
        let f210 = f.get(2, 1, 0);
        assert_eq!(multidegree(f210), Some([2, 1, 0]));
        assert!(is_weight_vector(f210, [2, 1, 0]).unwrap());
        assert!(!is_weight_vector(f210, [1, 1, 1]).unwrap());
    }

    #[test]
    fn f300_is_highest_but_f030_is_not() {
        let f = f_all(&MatrixTriple::generic(ZZ)).unwrap();
        assert!(is_fixed_by_unipotents(f.get(3, 0, 0)).unwrap());
        assert!(!is_fixed_by_unipotents(f.get(0, 3, 0)).unwrap());
        assert_eq!(solve_hwv_correction(f.get(0, 3, 0), &[]), Err(HwvError::Inconsistent));
        assert_eq!(solve_hwv_correction(f.get(3, 0, 0), &[]), Ok(Vec::new()));
    }

    #[test]
    fn h_is_not_fixed() {
        let h = h_poly(&MatrixTriple::generic(ZZ)).unwrap();
        assert!(!is_fixed_by_unipotents(&h).unwrap());
    }

    #[test]
    fn underdetermined_is_reported() {
        let f = f_all(&MatrixTriple::generic(ZZ)).unwrap();
        let f300 = f.get(3, 0, 0).clone();
        let r = solve_hwv_correction(&f300, &[f300.clone(), f300.scale(&crate::poly::Integer::Small(2))]);
        assert_eq!(r, Err(HwvError::Underdetermined { free: 2 }));
    }
}
