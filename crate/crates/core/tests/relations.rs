//! The stored relations: content lock, exact vanishing at random integer
//! points, and conjugation invariance of the trace generators.

use std::sync::Arc;

use proptest::prelude::*;
use sha2::{Digest, Sha256};

use semiinv_core::conjinv::{pair_relation, MatrixPair, TraceGeneratorTable, PAIR_RELATION_TERMS, PAIR_RELATION_TEXT};
use semiinv_core::generators::MatrixTriple;
use semiinv_core::poly::{Polynomial, VariableSet, QQ, ZZ};
use semiinv_core::relations::{
    derive_st, main_relation, main_relation_on, theorem1_on, AronholdPair, MAIN_RELATION_TERMS, MAIN_RELATION_TEXT,
};

type Mat = [[i64; 3]; 3];

const IDENTITY: Mat = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

fn hex_digest(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

fn no_vars() -> Arc<VariableSet> {
    VariableSet::new(Vec::<String>::new()).unwrap()
}

fn mat() -> impl Strategy<Value = Mat> {
    prop::array::uniform3(prop::array::uniform3(-3i64..=3))
}

fn mul(a: &Mat, b: &Mat) -> Mat {
    let mut out = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

/// A product of transvections together with its inverse.
fn unimodular_with_inverse() -> impl Strategy<Value = (Mat, Mat)> {
    prop::collection::vec((0usize..3, 0usize..3, -2i64..=2), 0..5).prop_map(|steps| {
        let steps: Vec<_> = steps.into_iter().filter(|(i, j, _)| i != j).collect();
        let elem = |i: usize, j: usize, c: i64| {
            let mut e = IDENTITY;
            e[i][j] = c;
            e
        };
        let g = steps.iter().fold(IDENTITY, |acc, &(i, j, c)| mul(&acc, &elem(i, j, c)));
        let inv = steps.iter().rev().fold(IDENTITY, |acc, &(i, j, c)| mul(&acc, &elem(i, j, -c)));
        (g, inv)
    })
}

fn st() -> &'static AronholdPair {
    use std::sync::OnceLock;
    static ST: OnceLock<AronholdPair> = OnceLock::new();
    ST.get_or_init(|| derive_st().unwrap())
}

#[test]
fn stored_texts_are_locked() {
    assert_eq!(hex_digest(MAIN_RELATION_TEXT), "8f1dcc89cb0c6ec74930e09e025cfbabbb21ead2a453cc7bd87b62c96587f227");
    assert_eq!(hex_digest(PAIR_RELATION_TEXT), "dd0fa67e4560473f7f56f477fdcdf38c564527b445b42dd4fb93e4580a9cfb7c");
    assert_eq!(main_relation().len(), MAIN_RELATION_TERMS);
    assert_eq!(pair_relation().len(), PAIR_RELATION_TERMS);
}

#[test]
fn relations_round_trip_through_text() {
    let a = main_relation();
    let again = semiinv_core::poly::parse_polynomial(&a.to_string(), &ZZ, a.vars()).unwrap();
    assert_eq!(again, a);
    let n = pair_relation();
    let again = semiinv_core::poly::parse_polynomial(&n.to_string(), &ZZ, n.vars()).unwrap();
    assert_eq!(again, n);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn main_relation_vanishes_at_integer_triples(a in mat(), b in mat(), c in mat()) {
        let triple = MatrixTriple::constant(QQ, no_vars(), &[a, b, c]);
        prop_assert!(main_relation_on(&triple, &main_relation()).unwrap().is_zero());
        prop_assert!(theorem1_on(&triple, st()).unwrap().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pair_relation_vanishes_at_integer_pairs(a in mat(), b in mat()) {
        let traces = TraceGeneratorTable::of(&MatrixPair::constant(ZZ, no_vars(), a, b)).unwrap();
        prop_assert!(traces.compose(&pair_relation()).unwrap().is_zero());
    }

    #[test]
    fn trace_generators_are_conjugation_invariant(a in mat(), b in mat(), (g, inv) in unimodular_with_inverse()) {
        prop_assert_eq!(mul(&g, &inv), IDENTITY);
        let moved = MatrixPair::constant(ZZ, no_vars(), mul(&mul(&g, &a), &inv), mul(&mul(&g, &b), &inv));
        let before = TraceGeneratorTable::of(&MatrixPair::constant(ZZ, no_vars(), a, b)).unwrap();
        let after = TraceGeneratorTable::of(&moved).unwrap();
        prop_assert_eq!(before.values(), after.values());
    }
}

#[test]
fn a_mutated_pair_relation_is_caught() {
    // Bumping one coefficient adds a single monomial in the traces; at (I, I)
    // every trace generator is non-zero, so the sum no longer vanishes.
    let n = pair_relation();
    let (m, _) = n.terms()[0].clone();
    let bump = Polynomial::monomial(ZZ, n.vars().clone(), m, 1i64.into());
    let mutated = n.try_add(&bump).unwrap();
    let traces = TraceGeneratorTable::of(&MatrixPair::constant(ZZ, no_vars(), IDENTITY, IDENTITY)).unwrap();
    assert!(traces.compose(&n).unwrap().is_zero());
    assert!(!traces.compose(&mutated).unwrap().is_zero());
}

fn collapse_whitespace(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

#[test]
fn priority_display_reproduces_the_stored_layout() {
    use semiinv_core::conjinv::PAIR_RELATION_DISPLAY_ORDER;
    use semiinv_core::relations::MAIN_RELATION_DISPLAY_ORDER;
    let a = main_relation().display_by_priority(&MAIN_RELATION_DISPLAY_ORDER).unwrap().to_string();
    assert!(a.starts_with("q^2 - q*h*f5"));
    assert_eq!(a, collapse_whitespace(MAIN_RELATION_TEXT));
    let n = pair_relation().display_by_priority(&PAIR_RELATION_DISPLAY_ORDER).unwrap().to_string();
    assert!(n.starts_with("r^2 - r*k*z"));
    assert_eq!(n, collapse_whitespace(PAIR_RELATION_TEXT));
}
