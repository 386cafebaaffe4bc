//! The generators `f_{i,j,k}`, `h`, `q` of the semi-invariants of matrix
//! triples, their highest weight corrections `H`, `Q`, and the right action
//! of `GL3` on triples.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::linalg::{LinearSystem, Solution};
use crate::poly::vars::{coordinate_index, matrix_coordinates, numbered};
use crate::poly::{IntegerRing, Monomial, PolyError, PolyMatrix, Polynomial, RationalField, Ring, VariableSet, QQ, ZZ};

/// Exponents `(i, j, k)` of the ten `f`s, listed in their numbering `f1..f10`.
pub const F_EXPONENTS: [(u8, u8, u8); 10] =
    [(3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1), (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3)];

/// Position (0-based) of `f_{i,j,k}` in [`F_EXPONENTS`].
pub fn f_position(i: u8, j: u8, k: u8) -> Option<usize> {
    F_EXPONENTS.iter().position(|&e| e == (i, j, k))
}

/// Exponent caps and target monomial of `t1^2 t2^2 t3^2` in the 6x6 block determinant.
const H_TARGET: [u8; 3] = [2, 2, 2];
/// Target `t1^2 t2 t3^2 t4 t5^2 t6` in the 9x9 block determinant.
const Q_TARGET: [u8; 6] = [2, 1, 2, 1, 2, 1];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("a triple needs three 3x3 matrices over one ring and variable set")]
    BadTriple,
    #[error("the correction coefficients need denominators 2, 3 and 12 to be invertible")]
    NeedsDivision,
    #[error("group element must be 3x3")]
    BadGroupElement,
}

/// The 27 coordinates `x1_11 .. x3_33`.
pub fn coordinates() -> Arc<VariableSet> {
    matrix_coordinates(3)
}

/// A triple `(A1, A2, A3)` of 3x3 polynomial matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixTriple<R: Ring> {
    mats: [PolyMatrix<R>; 3],
}

impl<R: Ring> MatrixTriple<R> {
    pub fn new(a1: PolyMatrix<R>, a2: PolyMatrix<R>, a3: PolyMatrix<R>) -> Result<Self, GeneratorError> {
        let mats = [a1, a2, a3];
        let first = mats[0].get(0, 0);
        for m in &mats {
            if m.dim() != 3 {
                return Err(GeneratorError::BadTriple);
            }
            for e in m.entries() {
                if e.ring() != first.ring() || !crate::poly::vars::same_vars(e.vars(), first.vars()) {
                    return Err(GeneratorError::BadTriple);
                }
            }
        }
        Ok(MatrixTriple { mats })
    }

    /// The triple whose `(i, j)` entry of `A_r` is the coordinate `x{r}_{ij}`.
    pub fn generic(ring: R) -> Self {
        let vars = coordinates();
        let mk = |r: usize| {
            PolyMatrix::from_fn(3, |i, j| {
                Polynomial::var_at(ring.clone(), vars.clone(), coordinate_index(r, i + 1, j + 1))
            })
        };
        MatrixTriple { mats: [mk(1), mk(2), mk(3)] }
    }

    /// A triple of constant matrices over an arbitrary (possibly empty) variable set.
    pub fn constant(ring: R, vars: Arc<VariableSet>, values: &[[[i64; 3]; 3]; 3]) -> Self {
        let mk =
            |r: usize| PolyMatrix::from_fn(3, |i, j| Polynomial::from_i64(ring.clone(), vars.clone(), values[r][i][j]));
        MatrixTriple { mats: [mk(0), mk(1), mk(2)] }
    }

    /// A triple of constant matrices given by ring elements.
    pub fn from_elements(ring: R, vars: Arc<VariableSet>, values: &[R::Elem]) -> Self {
        assert_eq!(values.len(), 27, "a triple has 27 entries");
        let mk = |r: usize| {
            PolyMatrix::from_fn(3, |i, j| {
                Polynomial::constant(ring.clone(), vars.clone(), values[9 * r + 3 * i + j].clone())
            })
        };
        MatrixTriple { mats: [mk(0), mk(1), mk(2)] }
    }

    pub fn component(&self, r: usize) -> &PolyMatrix<R> {
        &self.mats[r]
    }

    pub fn components(&self) -> &[PolyMatrix<R>; 3] {
        &self.mats
    }

    pub fn ring(&self) -> &R {
        self.mats[0].get(0, 0).ring()
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        self.mats[0].get(0, 0).vars()
    }

    fn embedded(&self, ext: &Arc<VariableSet>) -> Result<[PolyMatrix<R>; 3], PolyError> {
        let mut out = Vec::with_capacity(3);
        for m in &self.mats {
            let mut e = Vec::with_capacity(3);
            for i in 0..3 {
                let mut row = Vec::with_capacity(3);
                for j in 0..3 {
                    row.push(m.get(i, j).embed(ext)?);
                }
                e.push(row);
            }
            out.push(PolyMatrix::from_rows(e)?);
        }
        Ok(out.try_into().unwrap_or_else(|_| unreachable!()))
    }
}

/// The ten `f_{i,j,k}`, stored in the order `f1..f10`.
#[derive(Clone, Debug, PartialEq)]
pub struct FTable<R: Ring> {
    polys: [Polynomial<R>; 10],
}

impl<R: Ring> FTable<R> {
    pub fn from_array(polys: [Polynomial<R>; 10]) -> Self {
        FTable { polys }
    }

    pub fn get(&self, i: u8, j: u8, k: u8) -> &Polynomial<R> {
        &self.polys[f_position(i, j, k).expect("i + j + k = 3")]
    }

    /// `f{n}` in the 1-based numbering `f1 = f_{3,0,0}` ... `f10 = f_{0,0,3}`.
    pub fn numbered(&self, n: usize) -> &Polynomial<R> {
        &self.polys[n - 1]
    }

    pub fn as_slice(&self) -> &[Polynomial<R>] {
        &self.polys
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&Polynomial<R>) -> Polynomial<S>) -> FTable<S> {
        FTable { polys: core::array::from_fn(|i| f(&self.polys[i])) }
    }
}

fn t_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("t{i}")).collect()
}

/// Coefficient of `prod t_i^{e_i}` in `p`, as a polynomial over `base`.
fn t_coefficient<R: Ring>(p: &Polynomial<R>, base: &Arc<VariableSet>, exps: &[u8]) -> Result<Polynomial<R>, PolyError> {
    let nb = base.len();
    let subset: Vec<usize> = (nb..nb + exps.len()).collect();
    let mut e = vec![0u8; nb];
    e.extend_from_slice(exps);
    p.coefficient_of(&subset, &Monomial::from_exponents(&e))?.with_vars(base)
}

fn caps_for(base: usize, target: &[u8]) -> Vec<u8> {
    let mut caps = vec![u8::MAX; base];
    caps.extend_from_slice(target);
    caps
}

/// All ten coefficients of `det(t1 A1 + t2 A2 + t3 A3)`.
pub fn f_all<R: Ring>(triple: &MatrixTriple<R>) -> Result<FTable<R>, GeneratorError> {
    let base = triple.vars().clone();
    let ext = base.extended(&t_names(3))?;
    let mats = triple.embedded(&ext)?;
    let ring = triple.ring().clone();
    let nb = base.len();
    let t: Vec<_> = (0..3).map(|k| Polynomial::var_at(ring.clone(), ext.clone(), nb + k)).collect();
    let pencil = mats[0].scale(&t[0])?.add(&mats[1].scale(&t[1])?)?.add(&mats[2].scale(&t[2])?)?;
    let det = pencil.determinant()?;
    let mut out = Vec::with_capacity(10);
    for &(i, j, k) in &F_EXPONENTS {
        out.push(t_coefficient(&det, &base, &[i, j, k])?);
    }
    Ok(FTable { polys: out.try_into().unwrap_or_else(|_| unreachable!()) })
}

/// The coefficient of `t1^2 t2^2 t3^2` in `det [[t2 A2, t1 A1], [t1 A1, t3 A3]]`.
pub fn h_poly<R: Ring>(triple: &MatrixTriple<R>) -> Result<Polynomial<R>, GeneratorError> {
    let base = triple.vars().clone();
    let ext = base.extended(&t_names(3))?;
    let [a1, a2, a3] = triple.embedded(&ext)?;
    let ring = triple.ring().clone();
    let nb = base.len();
    let t = |k: usize| Polynomial::var_at(ring.clone(), ext.clone(), nb + k);
    let (b11, b12, b22) = (a2.scale(&t(1))?, a1.scale(&t(0))?, a3.scale(&t(2))?);
    let m = PolyMatrix::from_blocks(&[vec![Some(&b11), Some(&b12)], vec![Some(&b12), Some(&b22)]], ring, ext.clone());
    let det = m.determinant_bounded(Some(&caps_for(nb, &H_TARGET)), None)?;
    Ok(t_coefficient(&det, &base, &H_TARGET)?)
}

/// The coefficient of `t1^2 t2 t3^2 t4 t5^2 t6` in
/// `det [[0, t1 A1, t2 A2], [t4 A1, 0, t3 A3], [t5 A2, t6 A3, 0]]`.
pub fn q_poly<R: Ring>(triple: &MatrixTriple<R>) -> Result<Polynomial<R>, GeneratorError> {
    let base = triple.vars().clone();
    let ext = base.extended(&t_names(6))?;
    let [a1, a2, a3] = triple.embedded(&ext)?;
    let ring = triple.ring().clone();
    let nb = base.len();
    let t = |k: usize| Polynomial::var_at(ring.clone(), ext.clone(), nb + k - 1);
    let (b12, b13) = (a1.scale(&t(1))?, a2.scale(&t(2))?);
    let (b21, b23) = (a1.scale(&t(4))?, a3.scale(&t(3))?);
    let (b31, b32) = (a2.scale(&t(5))?, a3.scale(&t(6))?);
    let m = PolyMatrix::from_blocks(
        &[vec![None, Some(&b12), Some(&b13)], vec![Some(&b21), None, Some(&b23)], vec![Some(&b31), Some(&b32), None]],
        ring,
        ext.clone(),
    );
    let det = m.determinant_bounded(Some(&caps_for(nb, &Q_TARGET)), None)?;
    Ok(t_coefficient(&det, &base, &Q_TARGET)?)
}

/// One correction term `coefficient * h^h_power * prod f_n` of a highest
/// weight form; `f_factors` uses the 1-based numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorrectionTerm {
    pub h_power: u8,
    pub f_factors: &'static [usize],
}

impl core::fmt::Display for CorrectionTerm {
    /// `h*f5`, `f1*f7*f10`, ...
    fn fmt(&self, out: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let mut parts: Vec<String> = (0..self.h_power).map(|_| String::from("h")).collect();
        parts.extend(self.f_factors.iter().map(|n| format!("f{n}")));
        if parts.is_empty() {
            return out.write_str("1");
        }
        out.write_str(&parts.join("*"))
    }
}

/// Products corrected for in `H = h + sum beta_i m_i`.
pub const H_CORRECTION_BASIS: [CorrectionTerm; 4] = [
    CorrectionTerm { h_power: 0, f_factors: &[2, 9] },
    CorrectionTerm { h_power: 0, f_factors: &[3, 8] },
    CorrectionTerm { h_power: 0, f_factors: &[4, 6] },
    CorrectionTerm { h_power: 0, f_factors: &[5, 5] },
];

/// The coefficients `beta` of `H` as `(numerator, denominator)`.
pub const H_BETA: [(i64, i64); 4] = [(-1, 3), (-1, 3), (2, 3), (1, 12)];

/// Products corrected for in `Q = q + sum beta_i m_i`.
pub const Q_CORRECTION_BASIS: [CorrectionTerm; 8] = [
    CorrectionTerm { h_power: 1, f_factors: &[5] },
    CorrectionTerm { h_power: 0, f_factors: &[1, 7, 10] },
    CorrectionTerm { h_power: 0, f_factors: &[1, 8, 9] },
    CorrectionTerm { h_power: 0, f_factors: &[7, 3, 6] },
    CorrectionTerm { h_power: 0, f_factors: &[10, 2, 4] },
    CorrectionTerm { h_power: 0, f_factors: &[5, 4, 6] },
    CorrectionTerm { h_power: 0, f_factors: &[2, 6, 8] },
    CorrectionTerm { h_power: 0, f_factors: &[4, 3, 9] },
];

pub const Q_BETA: [(i64, i64); 8] = [(-1, 2), (3, 2), (-1, 2), (-1, 2), (-1, 2), (-1, 2), (1, 2), (1, 2)];

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn h_beta() -> Vec<BigRational> {
    H_BETA.iter().map(|&(n, d)| rational(n, d)).collect()
}

pub fn q_beta() -> Vec<BigRational> {
    Q_BETA.iter().map(|&(n, d)| rational(n, d)).collect()
}

/// Evaluates a correction product from given `h` and `f`s.
pub fn correction_product<R: Ring>(
    term: &CorrectionTerm,
    h: &Polynomial<R>,
    f: &FTable<R>,
) -> Result<Polynomial<R>, PolyError> {
    let mut p = h.pow(term.h_power as u32);
    for &n in term.f_factors {
        p = p.try_mul(f.numbered(n))?;
    }
    Ok(p)
}

/// `base + sum beta_i * basis_i`, with `beta` mapped into the ring.
pub fn corrected<R: Ring>(
    base: &Polynomial<R>,
    h: &Polynomial<R>,
    f: &FTable<R>,
    basis: &[CorrectionTerm],
    beta: &[BigRational],
) -> Result<Polynomial<R>, GeneratorError> {
    let ring = base.ring();
    let mut acc = base.clone();
    for (term, b) in basis.iter().zip(beta) {
        let c = ring.from_rational(b).ok_or(GeneratorError::NeedsDivision)?;
        acc = acc.try_add(&correction_product(term, h, f)?.scale(&c))?;
    }
    Ok(acc)
}

/// The highest weight vector `H` of weight (2,2,2) built from `h` and the `f`s.
pub fn hw_h_from<R: Ring>(h: &Polynomial<R>, f: &FTable<R>) -> Result<Polynomial<R>, GeneratorError> {
    corrected(h, h, f, &H_CORRECTION_BASIS, &h_beta())
}

/// The highest weight vector `Q` of weight (3,3,3).
pub fn hw_q_from<R: Ring>(
    q: &Polynomial<R>,
    h: &Polynomial<R>,
    f: &FTable<R>,
) -> Result<Polynomial<R>, GeneratorError> {
    corrected(q, h, f, &Q_CORRECTION_BASIS, &q_beta())
}

/// `H` of a triple. Needs a ring where 3 and 12 are invertible.
pub fn hw_h_poly<R: Ring>(triple: &MatrixTriple<R>) -> Result<Polynomial<R>, GeneratorError> {
    hw_h_from(&h_poly(triple)?, &f_all(triple)?)
}

/// `Q` of a triple. Needs a ring where 2 is invertible.
pub fn hw_q_poly<R: Ring>(triple: &MatrixTriple<R>) -> Result<Polynomial<R>, GeneratorError> {
    let f = f_all(triple)?;
    let h = h_poly(triple)?;
    hw_q_from(&q_poly(triple)?, &h, &f)
}

/// An element of `GL3` with rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    entries: [[BigRational; 3]; 3],
}

impl GroupElement {
    pub fn new(entries: [[BigRational; 3]; 3]) -> Self {
        GroupElement { entries }
    }

    pub fn from_ints(m: [[i64; 3]; 3]) -> Self {
        GroupElement { entries: core::array::from_fn(|i| core::array::from_fn(|j| rational(m[i][j], 1))) }
    }

    pub fn identity() -> Self {
        Self::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    /// The elementary transvection `I + E_{ij}` (1-based, `i != j`).
    pub fn transvection(i: usize, j: usize) -> Self {
        assert!(i != j && (1..=3).contains(&i) && (1..=3).contains(&j));
        let mut m = [[0i64; 3]; 3];
        for (k, row) in m.iter_mut().enumerate() {
            row[k] = 1;
        }
        m[i - 1][j - 1] = 1;
        Self::from_ints(m)
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i][j]
    }

    pub fn det(&self) -> BigRational {
        let e = &self.entries;
        &e[0][0] * (&e[1][1] * &e[2][2] - &e[1][2] * &e[2][1]) - &e[0][1] * (&e[1][0] * &e[2][2] - &e[1][2] * &e[2][0])
            + &e[0][2] * (&e[1][0] * &e[2][1] - &e[1][1] * &e[2][0])
    }

    pub fn is_unipotent_upper(&self) -> bool {
        (0..3).all(|i| {
            (0..3).all(|j| {
                let e = &self.entries[i][j];
                match i.cmp(&j) {
                    core::cmp::Ordering::Equal => e.is_one(),
                    core::cmp::Ordering::Greater => e.is_zero(),
                    core::cmp::Ordering::Less => true,
                }
            })
        })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| i == j || self.entries[i][j].is_zero()))
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            entries: core::array::from_fn(|i| {
                core::array::from_fn(|j| {
                    (0..3).fold(BigRational::zero(), |acc, k| acc + &self.entries[i][k] * &other.entries[k][j])
                })
            }),
        }
    }

    /// The element as a constant matrix over a ring, if its entries map there.
    pub fn to_matrix<R: Ring>(&self, ring: &R, vars: &Arc<VariableSet>) -> Option<PolyMatrix<R>> {
        let mut rows = Vec::with_capacity(3);
        for i in 0..3 {
            let mut row = Vec::with_capacity(3);
            for j in 0..3 {
                let c = ring.from_rational(&self.entries[i][j])?;
                row.push(Polynomial::constant(ring.clone(), vars.clone(), c));
            }
            rows.push(row);
        }
        PolyMatrix::from_rows(rows).ok()
    }
}

/// `(A1, A2, A3) . g`: component `r` becomes `sum_i g_{i r} A_i`.
pub fn act_on_triple<R: Ring>(g: &PolyMatrix<R>, triple: &MatrixTriple<R>) -> Result<MatrixTriple<R>, GeneratorError> {
    if g.dim() != 3 {
        return Err(GeneratorError::BadGroupElement);
    }
    let mut out = Vec::with_capacity(3);
    for r in 0..3 {
        let mut acc = triple.mats[0].scale(g.get(0, r))?;
        for i in 1..3 {
            acc = acc.add(&triple.mats[i].scale(g.get(i, r))?)?;
        }
        out.push(acc);
    }
    let [a, b, c]: [PolyMatrix<R>; 3] = out.try_into().unwrap_or_else(|_| unreachable!());
    MatrixTriple::new(a, b, c)
}

/// `(g . F)(T) = F(T . g)` for `F` in the 27 coordinates.
///
/// The entries of `g` live over `target`, which must contain the coordinate
/// names; symbolic group elements such as `diag(z1, z2, z3)` are allowed.
pub fn act_on_function<R: Ring>(g: &PolyMatrix<R>, f: &Polynomial<R>) -> Result<Polynomial<R>, GeneratorError> {
    if g.dim() != 3 {
        return Err(GeneratorError::BadGroupElement);
    }
    let target = g.get(0, 0).vars().clone();
    let ring = f.ring().clone();
    let coords = coordinates();
    if !crate::poly::vars::same_vars(f.vars(), &coords) {
        return Err(PolyError::VariableMismatch.into());
    }
    let mut bindings = Vec::with_capacity(27);
    for r in 1..=3 {
        for i in 1..=3 {
            for j in 1..=3 {
                // Coordinate x{r}_{ij} of T.g is sum_s g_{s r} x{s}_{ij}.
                let mut image = Polynomial::zero(ring.clone(), target.clone());
                for s in 1..=3 {
                    let x = Polynomial::var(ring.clone(), target.clone(), coords.name(coordinate_index(s, i, j)))?;
                    image = image.try_add(&x.try_mul(g.get(s - 1, r - 1))?)?;
                }
                let own = Polynomial::var(ring.clone(), target.clone(), coords.name(coordinate_index(r, i, j)))?;
                bindings.push(if image == own { None } else { Some(image) });
            }
        }
    }
    Ok(f.substitute(&target, &bindings)?)
}

/// Convenience: the action of a rational group element on `F`.
pub fn act_by<R: Ring>(g: &GroupElement, f: &Polynomial<R>) -> Result<Polynomial<R>, GeneratorError> {
    let m = g.to_matrix(f.ring(), f.vars()).ok_or(GeneratorError::NeedsDivision)?;
    act_on_function(&m, f)
}

/// Matrix of `g` acting on the span of the `f`s, read off from
/// `sum (g.f_{ijk}) t^{ijk} = sum f_{lmn} (sum_r g_{1r} t_r)^l (sum_r g_{2r} t_r)^m (sum_r g_{3r} t_r)^n`.
///
/// Row `a` holds the coordinates of `g . f_{a+1}` in the basis `f1..f10`.
pub fn f_span_action(g: &GroupElement) -> [[BigRational; 10]; 10] {
    let tv = numbered("t", 3);
    let linear: Vec<Polynomial<RationalField>> = (0..3)
        .map(|i| {
            let terms = (0..3).map(|r| (Monomial::var(3, r, 1), g.entry(i, r).clone()));
            Polynomial::from_terms(QQ, tv.clone(), terms)
        })
        .collect();
    let mut out: [[BigRational; 10]; 10] = core::array::from_fn(|_| core::array::from_fn(|_| BigRational::zero()));
    for (src, &(l, m, n)) in F_EXPONENTS.iter().enumerate() {
        let p = &(&linear[0].pow(l as u32) * &linear[1].pow(m as u32)) * &linear[2].pow(n as u32);
        for (dst, &(i, j, k)) in F_EXPONENTS.iter().enumerate() {
            out[dst][src] = p.coefficient(&Monomial::from_exponents(&[i, j, k]));
        }
    }
    out
}

/// Coordinates of `p` in the basis `basis`, by exact linear solving over the
/// coefficients of every monomial. `None` when `p` is not in the span.
pub fn decompose<R: Ring>(p: &Polynomial<R>, basis: &[Polynomial<R>]) -> Option<Vec<BigRational>> {
    let mut monomials: Vec<&Monomial> = p.terms().iter().map(|(m, _)| m).collect();
    for b in basis {
        monomials.extend(b.terms().iter().map(|(m, _)| m));
    }
    monomials.sort_unstable();
    monomials.dedup();
    let ring = p.ring();
    let mut system = LinearSystem::new(QQ, basis.len());
    for m in monomials {
        let row = basis.iter().map(|b| ring.to_rational(&b.coefficient(m))).collect::<Option<Vec<_>>>()?;
        system.push(row, ring.to_rational(&p.coefficient(m))?);
    }
    match system.solve() {
        Solution::Unique(x) => Some(x),
        _ => None,
    }
}

/// The cubic coefficient names `a a2 a3 b b1 b3 c c1 c2 m` of
/// `aX^3 + bY^3 + cZ^3 + 3a2 X^2Y + 3a3 X^2Z + 3b1 XY^2 + 3b3 Y^2Z + 3c1 XZ^2 + 3c2 YZ^2 + 6m XYZ`.
pub const CUBIC_COEFFICIENTS: [&str; 10] = ["a", "a2", "a3", "b", "b1", "b3", "c", "c1", "c2", "m"];

/// For each `f1..f10`: the cubic coefficient it replaces and the scale, so
/// that `f_n = scale * coefficient`.
pub const CUBIC_TABLE: [(&str, i64); 10] =
    [("a", 1), ("a2", 3), ("a3", 3), ("b1", 3), ("m", 6), ("c1", 3), ("b", 1), ("b3", 3), ("c2", 3), ("c", 1)];

pub fn cubic_vars() -> Arc<VariableSet> {
    VariableSet::new(CUBIC_COEFFICIENTS).expect("distinct names")
}

/// Rewrites a polynomial in `f1..f10` (other variables absent) in the cubic
/// coefficients by inverting the substitution table.
pub fn to_cubic_coefficients(p: &Polynomial<RationalField>) -> Result<Polynomial<RationalField>, PolyError> {
    let target = cubic_vars();
    let mut bindings = vec![None; p.vars().len()];
    for (i, name) in p.vars().names().iter().enumerate() {
        bindings[i] = Some(match name.strip_prefix('f').and_then(|n| n.parse::<usize>().ok()) {
            Some(n) if (1..=10).contains(&n) => {
                let (coef, scale) = CUBIC_TABLE[n - 1];
                Polynomial::var(QQ, target.clone(), coef)?.scale(&rational(scale, 1))
            }
            _ => {
                if p.degree_in(i) > 0 {
                    return Err(PolyError::UnknownVariable(name.clone()));
                }
                Polynomial::zero(QQ, target.clone())
            }
        });
    }
    p.substitute(&target, &bindings)
}

/// The generators of the generic triple as explicit polynomials.
#[derive(Clone, Debug)]
pub struct GeneratorTable {
    pub f: FTable<IntegerRing>,
    pub h: Polynomial<IntegerRing>,
    pub q: Polynomial<IntegerRing>,
    pub hw_h: Polynomial<RationalField>,
    pub hw_q: Polynomial<RationalField>,
}

impl GeneratorTable {
    pub fn build() -> Result<Self, GeneratorError> {
        let triple = MatrixTriple::generic(ZZ);
        let f = f_all(&triple)?;
        let h = h_poly(&triple)?;
        let q = q_poly(&triple)?;
        let fq = f.map(|p| p.to_rational().expect("integer"));
        let hq = h.to_rational().expect("integer");
        let hw_h = hw_h_from(&hq, &fq)?;
        let hw_q = hw_q_from(&q.to_rational().expect("integer"), &hq, &fq)?;
        Ok(GeneratorTable { f, h, q, hw_h, hw_q })
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        self.h.vars()
    }

    /// The `f`s, then `h`, then `q`, named as in the 12-variable ring.
    pub fn named(&self) -> Vec<(String, &Polynomial<IntegerRing>)> {
        let mut out = vec![("q".into(), &self.q), ("h".into(), &self.h)];
        for n in 1..=10 {
            out.push((format!("f{n}"), self.f.numbered(n)));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Integer;

    fn empty() -> Arc<VariableSet> {
        VariableSet::new(Vec::<String>::new()).unwrap()
    }

    fn id3() -> [[i64; 3]; 3] {
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    }

    fn constant_value(p: &Polynomial<IntegerRing>) -> Integer {
        assert!(p.is_constant());
        p.constant_term()
    }

    #[test]
    fn f_of_identity_and_zero() {
        let t = MatrixTriple::constant(ZZ, empty(), &[id3(), [[0; 3]; 3], [[0; 3]; 3]]);
        let f = f_all(&t).unwrap();
        assert_eq!(constant_value(f.get(3, 0, 0)), Integer::Small(1));
        for n in 2..=10 {
            assert!(f.numbered(n).is_zero());
        }
    }

    #[test]
    fn f_of_three_identities_is_multinomial() {
        let t = MatrixTriple::constant(ZZ, empty(), &[id3(), id3(), id3()]);
        let f = f_all(&t).unwrap();
        for &(i, j, k) in &F_EXPONENTS {
            let fact = |n: u8| (1..=n as i64).product::<i64>();
            let expect = 6 / (fact(i) * fact(j) * fact(k));
            assert_eq!(constant_value(f.get(i, j, k)), Integer::Small(expect), "{i}{j}{k}");
        }
    }

    #[test]
    fn generic_f300_is_det_a1() {
        let f = f_all(&MatrixTriple::generic(ZZ)).unwrap();
        let d = f.get(3, 0, 0);
        assert_eq!(d.len(), 6);
        assert_eq!(d, &MatrixTriple::generic(ZZ).component(0).determinant().unwrap());
    }

    #[test]
    fn h_and_q_of_three_identities() {
        // det = (t2 t3 - t1^2)^3 and (t1 t3 t5 + t2 t4 t6)^3 respectively.
        let t = MatrixTriple::constant(ZZ, empty(), &[id3(), id3(), id3()]);
        assert_eq!(constant_value(&h_poly(&t).unwrap()), Integer::Small(-3));
        assert_eq!(constant_value(&q_poly(&t).unwrap()), Integer::Small(3));
    }

    #[test]
    fn hw_forms_need_division() {
        let t = MatrixTriple::constant(ZZ, empty(), &[id3(), id3(), id3()]);
        assert_eq!(hw_h_poly(&t), Err(GeneratorError::NeedsDivision));
        let tq = MatrixTriple::constant(QQ, empty(), &[id3(), id3(), id3()]);
        // Plugging f = multinomials and h = -3 into the H formula gives 0.
        let hh = hw_h_poly(&tq).unwrap();
        assert!(hh.is_zero());
    }

    #[test]
    fn action_on_triple_laws() {
        let t = MatrixTriple::generic(ZZ);
        let vars = t.vars().clone();
        let id = GroupElement::identity().to_matrix(&ZZ, &vars).unwrap();
        assert_eq!(act_on_triple(&id, &t).unwrap(), t);
        let g = GroupElement::from_ints([[1, 2, 0], [0, 1, -1], [3, 0, 1]]);
        let h = GroupElement::from_ints([[2, 0, 1], [1, 1, 0], [0, -1, 1]]);
        let gm = g.to_matrix(&ZZ, &vars).unwrap();
        let hm = h.to_matrix(&ZZ, &vars).unwrap();
        let ghm = g.mul(&h).to_matrix(&ZZ, &vars).unwrap();
        let lhs = act_on_triple(&hm, &act_on_triple(&gm, &t).unwrap()).unwrap();
        assert_eq!(lhs, act_on_triple(&ghm, &t).unwrap());
    }

    #[test]
    fn diagonal_action_on_triple() {
        let t = MatrixTriple::generic(ZZ);
        let ext = t.vars().extended(&["z1", "z2", "z3"]).unwrap();
        let z = |k: usize| Polynomial::var(ZZ, ext.clone(), &format!("z{k}")).unwrap();
        let zero = Polynomial::zero(ZZ, ext.clone());
        let g = PolyMatrix::from_rows(vec![
            vec![z(1), zero.clone(), zero.clone()],
            vec![zero.clone(), z(2), zero.clone()],
            vec![zero.clone(), zero, z(3)],
        ])
        .unwrap();
        let te = MatrixTriple::new(
            t.component(0).map(|p| p.embed(&ext).unwrap()),
            t.component(1).map(|p| p.embed(&ext).unwrap()),
            t.component(2).map(|p| p.embed(&ext).unwrap()),
        )
        .unwrap();
        let acted = act_on_triple(&g, &te).unwrap();
        for r in 0..3 {
            assert_eq!(acted.component(r), &te.component(r).scale(&z(r + 1)).unwrap());
        }
    }

    #[test]
    fn span_action_matches_direct_substitution_for_u12() {
        let table = f_all(&MatrixTriple::generic(ZZ)).unwrap();
        let g = GroupElement::transvection(1, 2);
        let m = f_span_action(&g);
        for (a, row) in m.iter().enumerate() {
            let acted = act_by(&g, table.numbered(a + 1)).unwrap();
            let coords = decompose(&acted, table.as_slice()).expect("in the span");
            assert_eq!(coords.as_slice(), &row[..], "f{}", a + 1);
        }
        // g . f030 = det(A1 + A2) = f300 + f210 + f120 + f030.
        let row = &m[f_position(0, 3, 0).unwrap()];
        let ones: Vec<usize> = (0..10).filter(|&i| !row[i].is_zero()).collect();
        assert_eq!(ones, vec![0, 1, 3, 6]);
        assert!(row.iter().all(|c| c.is_zero() || c.is_one()));
    }

    #[test]
    fn cubic_table_round_trip() {
        let v = crate::relations::abstract_vars();
        let f5 = Polynomial::var(QQ, v.clone(), "f5").unwrap();
        let f1 = Polynomial::var(QQ, v, "f1").unwrap();
        let c = to_cubic_coefficients(&(&f5 * &f1)).unwrap();
        assert_eq!(alloc::format!("{c}"), "6*a*m");
    }
}
