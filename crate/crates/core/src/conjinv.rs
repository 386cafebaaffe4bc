//! Conjugation invariants of pairs of 3x3 matrices, reached from the
//! semi-invariants of triples by setting the third matrix to the identity.
//!
//! The invariant ring of pairs is generated by eleven traces
//! `t1 = t(A), s1 = s(A), d1 = d(A), t2 = t(B), s2 = s(B), d2 = d(B),
//! z = t(AB), w1 = t(A^2 B), w2 = t(A B^2), k = t(A^2 B^2), r = t(B^2 A^2 B A)`,
//! where `det(x I + M) = x^3 + t(M) x^2 + s(M) x + d(M)`. Pushing the
//! relation `A` through the images of the triple generators yields the single
//! relation among these traces.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::generators::GeneratorTable;
use crate::identity::IdentityTask;
use crate::poly::vars::{coordinate_index, matrix_coordinates};
use crate::poly::{parse_polynomial, IntegerRing, Monomial, PolyError, PolyMatrix, Polynomial, Ring, VariableSet, ZZ};
use crate::relations::Claim;

/// The relation among the eleven traces.
pub const PAIR_RELATION_TEXT: &str = include_str!("data/pair_relation.txt");

/// Number of terms of the pair relation.
pub const PAIR_RELATION_TERMS: usize = 170;

/// Variable priority of the conventional display of the pair relation
/// (terms in lex order, `r^2` first).
pub const PAIR_RELATION_DISPLAY_ORDER: [&str; 11] = ["r", "k", "w1", "w2", "z", "d1", "d2", "s1", "s2", "t1", "t2"];

/// Names of the trace generators, in their fixed order.
pub const TRACE_NAMES: [&str; 11] = ["t1", "s1", "d1", "t2", "s2", "d2", "z", "w1", "w2", "k", "r"];

/// Degrees of the trace generators in the entries of `A` and of `B`.
pub const TRACE_BIDEGREES: [(u32, u32); 11] =
    [(1, 0), (2, 0), (3, 0), (0, 1), (0, 2), (0, 3), (1, 1), (2, 1), (1, 2), (2, 2), (3, 3)];

/// Images of `f1..f10`, `h`, `q` in the trace generators.
pub const PHI_IMAGE_TEXTS: [(&str, &str); 12] = [
    ("f1", "d1"),
    ("f2", "w1 - z*t1 + s1*t2"),
    ("f3", "s1"),
    ("f4", "w2 - z*t2 + t1*s2"),
    ("f5", "t1*t2 - z"),
    ("f6", "t1"),
    ("f7", "d2"),
    ("f8", "s2"),
    ("f9", "t2"),
    ("f10", "1"),
    ("h", "-k + w1*t2 - t1^2*s2 + 2*s1*s2"),
    ("q", "r - s1*s2*z - w1*z*t2 - w2*z*t1 + z^2*t1*t2"),
];

/// The 18 entries `x1_ij` (of `A`) and `x2_ij` (of `B`).
pub fn pair_vars() -> Arc<VariableSet> {
    matrix_coordinates(2)
}

/// The abstract ring of the eleven trace generators.
pub fn trace_vars() -> Arc<VariableSet> {
    VariableSet::new(TRACE_NAMES).expect("distinct names")
}

/// A pair `(A, B)` of 3x3 polynomial matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixPair<R: Ring> {
    pub a: PolyMatrix<R>,
    pub b: PolyMatrix<R>,
}

impl<R: Ring> MatrixPair<R> {
    /// One variable per entry.
    pub fn generic(ring: R) -> Self {
        let v = pair_vars();
        let mk = |r: usize| {
            PolyMatrix::from_fn(3, |i, j| {
                Polynomial::var_at(ring.clone(), v.clone(), coordinate_index(r, i + 1, j + 1))
            })
        };
        MatrixPair { a: mk(1), b: mk(2) }
    }

    /// Constant matrices over `vars`.
    pub fn constant(ring: R, vars: Arc<VariableSet>, a: [[i64; 3]; 3], b: [[i64; 3]; 3]) -> Self {
        let mk =
            |m: [[i64; 3]; 3]| PolyMatrix::from_fn(3, |i, j| Polynomial::from_i64(ring.clone(), vars.clone(), m[i][j]));
        MatrixPair { a: mk(a), b: mk(b) }
    }
}

/// `(t, s, d)` with `det(x I + M) = x^3 + t x^2 + s x + d`.
pub fn tsd<R: Ring>(m: &PolyMatrix<R>) -> Result<[Polynomial<R>; 3], PolyError> {
    let first = m.get(0, 0);
    let (ring, base) = (first.ring().clone(), first.vars().clone());
    let mut name = String::from("lambda");
    while base.index_of(&name).is_some() {
        name.push('_');
    }
    let ext = base.extended(&[name.as_str()])?;
    let x = Polynomial::var_at(ring.clone(), ext.clone(), base.len());
    let shifted = PolyMatrix::from_fn(3, |i, j| {
        let e = m.get(i, j).embed(&ext).expect("sub-set of names");
        if i == j {
            e.try_add(&x).expect("same ring")
        } else {
            e
        }
    });
    let det = shifted.determinant()?;
    let nb = base.len();
    let coef = |e: u8| -> Result<Polynomial<R>, PolyError> {
        det.coefficient_of(&[nb], &Monomial::var(nb + 1, nb, e))?.with_vars(&base)
    };
    Ok([coef(2)?, coef(1)?, coef(0)?])
}

/// The eleven trace generators of a pair, in the order of [`TRACE_NAMES`].
#[derive(Clone, Debug, PartialEq)]
pub struct TraceGeneratorTable<R: Ring> {
    values: [Polynomial<R>; 11],
}

impl<R: Ring> TraceGeneratorTable<R> {
    pub fn of(pair: &MatrixPair<R>) -> Result<Self, PolyError> {
        let (a, b) = (&pair.a, &pair.b);
        let [t1, s1, d1] = tsd(a)?;
        let [t2, s2, d2] = tsd(b)?;
        let a2 = a.mul(a)?;
        let b2 = b.mul(b)?;
        let z = a.mul(b)?.trace()?;
        let w1 = a2.mul(b)?.trace()?;
        let w2 = a.mul(&b2)?.trace()?;
        let k = a2.mul(&b2)?.trace()?;
        let r = b2.mul(&a2)?.mul(b)?.mul(a)?.trace()?;
        Ok(TraceGeneratorTable { values: [t1, s1, d1, t2, s2, d2, z, w1, w2, k, r] })
    }

    pub fn get(&self, name: &str) -> Option<&Polynomial<R>> {
        TRACE_NAMES.iter().position(|&n| n == name).map(|i| &self.values[i])
    }

    pub fn values(&self) -> &[Polynomial<R>; 11] {
        &self.values
    }

    /// Substitutes the generators into a polynomial of the trace ring.
    pub fn compose(&self, p: &Polynomial<R>) -> Result<Polynomial<R>, PolyError> {
        let p = p.clone().with_vars(&trace_vars())?;
        let target = self.values[0].vars().clone();
        let bindings: Vec<_> = self.values.iter().cloned().map(Some).collect();
        p.substitute(&target, &bindings)
    }
}

/// Specialises the third matrix of a triple to the identity:
/// `x3_ij -> 1` if `i = j`, else `0`.
pub fn phi<R: Ring>(f: &Polynomial<R>) -> Result<Polynomial<R>, PolyError> {
    let target = pair_vars();
    let ring = f.ring().clone();
    let mut bindings = vec![None; f.vars().len()];
    for i in 1..=3 {
        for j in 1..=3 {
            let slot = f.vars().require(&alloc::format!("x3_{i}{j}"))?;
            bindings[slot] = Some(Polynomial::from_i64(ring.clone(), target.clone(), i64::from(i == j)));
        }
    }
    f.substitute(&target, &bindings)
}

/// The formula for the image of a triple generator, in the trace ring.
pub fn phi_image_formula(name: &str) -> Option<Polynomial<IntegerRing>> {
    PHI_IMAGE_TEXTS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| parse_polynomial(text, &ZZ, &trace_vars()).expect("valid formula"))
}

/// The relation among the traces, over the integers.
pub fn pair_relation() -> Polynomial<IntegerRing> {
    parse_polynomial(PAIR_RELATION_TEXT, &ZZ, &trace_vars()).expect("stored relation parses")
}

/// `A` rewritten in the trace ring through the image formulas.
pub fn relation_through_images(a: &Polynomial<IntegerRing>) -> Result<Polynomial<IntegerRing>, PolyError> {
    let target = trace_vars();
    let mut bindings = Vec::with_capacity(12);
    for name in a.vars().names() {
        bindings.push(Some(phi_image_formula(name).ok_or_else(|| PolyError::UnknownVariable(name.clone()))?));
    }
    a.substitute(&target, &bindings)
}

/// Terms present in exactly one of the two polynomials (or with different
/// coefficients), rendered as single-term polynomials.
pub fn term_difference(
    left: &Polynomial<IntegerRing>,
    right: &Polynomial<IntegerRing>,
) -> Result<Vec<String>, PolyError> {
    let diff = left.try_sub(right)?;
    Ok(diff
        .terms()
        .iter()
        .map(|(m, c)| Polynomial::monomial(ZZ, diff.vars().clone(), m.clone(), c.clone()).to_string())
        .collect())
}

/// Checks every image formula against `phi` of the actual generator.
pub fn verify_phi_images(
    table: &GeneratorTable,
    traces: &TraceGeneratorTable<IntegerRing>,
) -> Result<Vec<(String, bool)>, PolyError> {
    let mut out = Vec::with_capacity(12);
    for (name, gen) in table.named() {
        let formula = phi_image_formula(&name).ok_or_else(|| PolyError::UnknownVariable(name.clone()))?;
        out.push((name, phi(gen)? == traces.compose(&formula)?));
    }
    Ok(out)
}

/// `s(AB) = t(A^2B^2) + t(AB) t(A) t(B) - t(A^2B) t(B) - t(AB^2) t(A) - s(A) s(B)`
/// on a pair; returns the difference of the two sides.
pub fn s_ab_difference<R: Ring>(pair: &MatrixPair<R>) -> Result<Polynomial<R>, PolyError> {
    let traces = TraceGeneratorTable::of(pair)?;
    let [_, s_ab, _] = tsd(&pair.a.mul(&pair.b)?)?;
    let v = trace_vars();
    let rhs = parse_polynomial("k + z*t1*t2 - w1*t2 - w2*t1 - s1*s2", &ZZ, &v).expect("valid formula");
    let ring = s_ab.ring().clone();
    let rhs = rhs.map_ring(ring.clone(), |c| ring.from_integer(c));
    s_ab.try_sub(&traces.compose(&rhs)?)
}

/// `(E21 - E32, E12 + E23)`: every trace generator except `k` and `r`
/// vanishes there, and `r` does not.
pub fn nonvanishing_pair() -> MatrixPair<IntegerRing> {
    let empty = VariableSet::new(Vec::<String>::new()).expect("empty set");
    MatrixPair::constant(ZZ, empty, [[0, 0, 0], [1, 0, 0], [0, -1, 0]], [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
}

/// Values of the generators at [`nonvanishing_pair`], in trace order.
pub fn nonvanishing_values() -> Result<Vec<crate::poly::Integer>, PolyError> {
    let t = TraceGeneratorTable::of(&nonvanishing_pair())?;
    Ok(t.values().iter().map(Polynomial::constant_term).collect())
}

/// The pair relation composed with the generic trace generators.
pub fn pair_relation_task(traces: &TraceGeneratorTable<IntegerRing>, n: &Polynomial<IntegerRing>) -> IdentityTask {
    let mut task = IdentityTask::new("nakamoto");
    let leaves: Vec<_> =
        traces.values().iter().map(|p| task.leaf(p.to_rational().expect("integers are rational"))).collect();
    let root = task.compose(n.to_rational().expect("integers are rational"), &leaves);
    task.set_root(root);
    task
}

/// Whether every generator has its listed bidegree.
pub fn bidegrees_hold(traces: &TraceGeneratorTable<IntegerRing>) -> bool {
    let a: Vec<usize> = (0..9).collect();
    let b: Vec<usize> = (9..18).collect();
    traces
        .values()
        .iter()
        .zip(TRACE_BIDEGREES)
        .all(|(p, (da, db))| p.block_degrees(&[&a, &b]).is_some_and(|d| d == vec![da, db]))
}

/// Claims of the nonvanishing argument: the first nine generators vanish at
/// the pair and `r = -1`.
pub fn verify_nonvanishing_pair() -> Result<Vec<Claim>, PolyError> {
    let v = nonvanishing_values()?;
    Ok(vec![
        Claim { name: "first nine generators vanish", holds: v[..9].iter().all(|x| x.is_zero()) },
        Claim { name: "r = -1", holds: v[10] == crate::poly::Integer::Small(-1) },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Integer;

    #[test]
    fn identity_matrix_traces() {
        let empty = VariableSet::new(Vec::<String>::new()).unwrap();
        let id = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        let pair = MatrixPair::constant(ZZ, empty, id, id);
        let vals: Vec<Integer> =
            TraceGeneratorTable::of(&pair).unwrap().values().iter().map(|p| p.constant_term()).collect();
        let expect: Vec<Integer> = [3, 3, 1, 3, 3, 1, 3, 3, 3, 3, 3].iter().map(|&v| Integer::Small(v)).collect();
        assert_eq!(vals, expect);
        assert!(s_ab_difference(&pair).unwrap().is_zero());
    }

    #[test]
    fn generic_s_ab_and_bidegrees() {
        let pair = MatrixPair::generic(ZZ);
        assert!(s_ab_difference(&pair).unwrap().is_zero());
        assert!(bidegrees_hold(&TraceGeneratorTable::of(&pair).unwrap()));
    }

    #[test]
    fn nonvanishing() {
        let v = nonvanishing_values().unwrap();
        assert_eq!(v[9], Integer::Small(-1));
        for c in verify_nonvanishing_pair().unwrap() {
            assert!(c.holds, "{}", c.name);
        }
    }

    #[test]
    fn stored_pair_relation_matches_rewritten_relation() {
        let n = pair_relation();
        assert_eq!(n.len(), PAIR_RELATION_TERMS);
        let rewritten = relation_through_images(&crate::relations::main_relation()).unwrap();
        assert_eq!(term_difference(&rewritten, &n).unwrap(), Vec::<String>::new());
    }
}
