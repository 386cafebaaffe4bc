use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use hashbrown::HashMap;
use num_rational::BigRational;

use super::integer::Integer;
use super::monomial::Monomial;
use super::ring::{Field, IntegerRing, PrimeField, RationalField, Ring};
use super::vars::{same_vars, VariableSet};
use super::PolyError;

/// Products with fewer candidate terms than this are merged by sorting.
const SORT_MERGE_LIMIT: usize = 2048;

/// A sparse multivariate polynomial in canonical form.
///
/// Terms are stored in strictly descending graded-lex order with no zero
/// coefficients, so two polynomials are equal exactly when their term
/// vectors are.
#[derive(Clone, Debug)]
pub struct Polynomial<R: Ring> {
    ring: R,
    vars: Arc<VariableSet>,
    terms: Vec<(Monomial, R::Elem)>,
}

impl<R: Ring> PartialEq for Polynomial<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && same_vars(&self.vars, &other.vars) && self.terms == other.terms
    }
}

/// Hash accumulator for sums of many terms.
pub struct TermAccumulator<R: Ring> {
    ring: R,
    vars: Arc<VariableSet>,
    map: HashMap<Monomial, R::Elem>,
    budget: Option<usize>,
}

impl<R: Ring> TermAccumulator<R> {
    pub fn new(ring: R, vars: Arc<VariableSet>) -> Self {
        TermAccumulator { ring, vars, map: HashMap::new(), budget: None }
    }

    /// Fails any insertion that would grow the accumulator past `limit` terms.
    pub fn with_budget(mut self, limit: Option<usize>) -> Self {
        self.budget = limit;
        self
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: R::Elem) -> Result<(), PolyError> {
        match self.map.get_mut(&m) {
            Some(slot) => self.ring.add_assign(slot, &c),
            None => {
                if let Some(limit) = self.budget {
                    if self.map.len() >= limit {
                        return Err(PolyError::BudgetExceeded { limit });
                    }
                }
                self.map.insert(m, c);
            }
        }
        Ok(())
    }

    /// Adds `coef * a * b`, dropping monomials that exceed `caps`.
    pub fn add_product(
        &mut self,
        a: &Polynomial<R>,
        b: &Polynomial<R>,
        coef: &R::Elem,
        caps: Option<&[u8]>,
    ) -> Result<(), PolyError> {
        for (ma, ca) in &a.terms {
            let ca = self.ring.mul(ca, coef);
            for (mb, cb) in &b.terms {
                let m = match caps {
                    Some(caps) => match ma.mul_capped(mb, caps) {
                        Some(m) => m,
                        None => continue,
                    },
                    None => ma.mul(mb),
                };
                match self.map.get_mut(&m) {
                    Some(slot) => self.ring.add_mul_assign(slot, &ca, cb),
                    None => {
                        if let Some(limit) = self.budget {
                            if self.map.len() >= limit {
                                return Err(PolyError::BudgetExceeded { limit });
                            }
                        }
                        self.map.insert(m, self.ring.mul(&ca, cb));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn add_poly(&mut self, p: &Polynomial<R>) -> Result<(), PolyError> {
        for (m, c) in &p.terms {
            self.add_term(m.clone(), c.clone())?;
        }
        Ok(())
    }

    pub fn finish(self) -> Polynomial<R> {
        let ring = self.ring;
        let mut terms: Vec<_> = self.map.into_iter().filter(|(_, c)| !ring.is_zero(c)).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial { ring, vars: self.vars, terms }
    }
}

impl<R: Ring> Polynomial<R> {
    pub fn zero(ring: R, vars: Arc<VariableSet>) -> Self {
        Polynomial { ring, vars, terms: Vec::new() }
    }

    pub fn constant(ring: R, vars: Arc<VariableSet>, c: R::Elem) -> Self {
        let n = vars.len();
        let terms = if ring.is_zero(&c) { Vec::new() } else { vec![(Monomial::one(n), c)] };
        Polynomial { ring, vars, terms }
    }

    pub fn one(ring: R, vars: Arc<VariableSet>) -> Self {
        let c = ring.one();
        Self::constant(ring, vars, c)
    }

    pub fn from_i64(ring: R, vars: Arc<VariableSet>, v: i64) -> Self {
        let c = ring.from_i64(v);
        Self::constant(ring, vars, c)
    }

    /// The variable at position `index`.
    pub fn var_at(ring: R, vars: Arc<VariableSet>, index: usize) -> Self {
        let n = vars.len();
        let one = ring.one();
        Polynomial { ring, vars, terms: vec![(Monomial::var(n, index, 1), one)] }
    }

    pub fn var(ring: R, vars: Arc<VariableSet>, name: &str) -> Result<Self, PolyError> {
        let i = vars.require(name)?;
        Ok(Self::var_at(ring, vars, i))
    }

    pub fn monomial(ring: R, vars: Arc<VariableSet>, m: Monomial, c: R::Elem) -> Self {
        assert_eq!(m.nvars(), vars.len(), "monomial length must match the variable set");
        let terms = if ring.is_zero(&c) { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring, vars, terms }
    }

    /// Canonicalizes an arbitrary list of terms (duplicates summed, zeros dropped).
    pub fn from_terms<I>(ring: R, vars: Arc<VariableSet>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, R::Elem)>,
    {
        let mut terms: Vec<_> = terms.into_iter().collect();
        for (m, _) in &terms {
            assert_eq!(m.nvars(), vars.len(), "monomial length must match the variable set");
        }
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let terms = merge_sorted(&ring, terms);
        Polynomial { ring, vars, terms }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    pub fn terms(&self) -> &[(Monomial, R::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, R::Elem)> {
        self.terms
    }

    /// Same as [`is_zero`](Self::is_zero): no stored terms.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> R::Elem {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.ring.zero(),
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// Largest exponent of variable `index`.
    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(index) as u32).max().unwrap_or(0)
    }

    pub fn coefficient(&self, m: &Monomial) -> R::Elem {
        match self.terms.binary_search_by(|(t, _)| m.cmp(t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.ring.zero(),
        }
    }

    /// Degree vector with respect to blocks of variables, if every term agrees.
    pub fn block_degrees(&self, blocks: &[&[usize]]) -> Option<Vec<u32>> {
        let mut out: Option<Vec<u32>> = None;
        for (m, _) in &self.terms {
            let d: Vec<u32> = blocks.iter().map(|b| m.partial_degree(b)).collect();
            match &out {
                None => out = Some(d),
                Some(prev) if *prev == d => {}
                Some(_) => return None,
            }
        }
        out
    }

    /// Rebinds to an equal variable set (same names, same order).
    pub fn with_vars(mut self, vars: &Arc<VariableSet>) -> Result<Self, PolyError> {
        if !same_vars(&self.vars, vars) {
            return Err(PolyError::VariableMismatch);
        }
        self.vars = vars.clone();
        Ok(self)
    }

    /// Moves the polynomial into a variable set that contains all of its
    /// variables (matched by name).
    pub fn embed(&self, target: &Arc<VariableSet>) -> Result<Self, PolyError> {
        if same_vars(&self.vars, target) {
            return Ok(Polynomial { ring: self.ring.clone(), vars: target.clone(), terms: self.terms.clone() });
        }
        let map = (0..self.vars.len()).map(|i| target.require(self.vars.name(i))).collect::<Result<Vec<_>, _>>()?;
        let nt = target.len();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u8; nt];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[map[i]] = x;
            }
            (Monomial::from_exponents(&e), c.clone())
        });
        Ok(Polynomial::from_terms(self.ring.clone(), target.clone(), terms))
    }

    fn check_compatible(&self, other: &Self) -> Result<(), PolyError> {
        if self.ring != other.ring {
            return Err(PolyError::RingMismatch);
        }
        if !same_vars(&self.vars, &other.vars) {
            return Err(PolyError::VariableMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        Ok(self.merge_with(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        Ok(self.merge_with(other, true))
    }

    fn merge_with(&self, other: &Self, negate: bool) -> Self {
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let rhs = |c: &R::Elem| if negate { ring.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                core::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                core::cmp::Ordering::Less => {
                    out.push((b[j].0.clone(), rhs(&b[j].1)));
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    let c = if negate { ring.sub(&a[i].1, &b[j].1) } else { ring.add(&a[i].1, &b[j].1) };
                    if !ring.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), rhs(c))));
        Polynomial { ring: self.ring.clone(), vars: self.vars.clone(), terms: out }
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), self.ring.neg(c))).collect();
        Polynomial { ring: self.ring.clone(), vars: self.vars.clone(), terms }
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        if self.ring.is_zero(c) {
            return Self::zero(self.ring.clone(), self.vars.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), self.ring.mul(a, c)))
            .filter(|(_, a)| !self.ring.is_zero(a))
            .collect();
        Polynomial { ring: self.ring.clone(), vars: self.vars.clone(), terms }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &R::Elem) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(t, a)| (t.mul(m), self.ring.mul(a, c)))
            .filter(|(_, a)| !self.ring.is_zero(a))
            .collect();
        Polynomial { ring: self.ring.clone(), vars: self.vars.clone(), terms }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.mul_bounded(other, None, None)
    }

    /// Product that drops every monomial exceeding `caps` and fails once the
    /// result would exceed `budget` terms.
    pub fn mul_bounded(&self, other: &Self, caps: Option<&[u8]>, budget: Option<usize>) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ring.clone(), self.vars.clone()));
        }
        if caps.is_none() {
            if other.terms.len() == 1 {
                let (m, c) = &other.terms[0];
                return Ok(self.mul_monomial(m, c));
            }
            if self.terms.len() == 1 {
                let (m, c) = &self.terms[0];
                return Ok(other.mul_monomial(m, c));
            }
        }
        let candidates = self.terms.len().saturating_mul(other.terms.len());
        if candidates <= SORT_MERGE_LIMIT {
            let mut prods = Vec::with_capacity(candidates);
            for (ma, ca) in &self.terms {
                for (mb, cb) in &other.terms {
                    let m = match caps {
                        Some(caps) => match ma.mul_capped(mb, caps) {
                            Some(m) => m,
                            None => continue,
                        },
                        None => ma.mul(mb),
                    };
                    prods.push((m, self.ring.mul(ca, cb)));
                }
            }
            prods.sort_unstable_by(|a, b| b.0.cmp(&a.0));
            let terms = merge_sorted(&self.ring, prods);
            if let Some(limit) = budget {
                if terms.len() > limit {
                    return Err(PolyError::BudgetExceeded { limit });
                }
            }
            return Ok(Polynomial { ring: self.ring.clone(), vars: self.vars.clone(), terms });
        }
        let mut acc = TermAccumulator::new(self.ring.clone(), self.vars.clone()).with_budget(budget);
        let (small, large) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let one = self.ring.one();
        acc.add_product(small, large, &one, caps)?;
        Ok(acc.finish())
    }

    pub fn pow(&self, e: u32) -> Self {
        self.pow_bounded(e, None).expect("no budget was set")
    }

    pub fn pow_bounded(&self, mut e: u32, budget: Option<usize>) -> Result<Self, PolyError> {
        let mut acc = Self::one(self.ring.clone(), self.vars.clone());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_bounded(&base, None, budget)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_bounded(&base, None, budget)?;
            }
        }
        Ok(acc)
    }

    /// Changes the coefficient ring term by term, dropping coefficients that
    /// become zero.
    pub fn map_ring<S: Ring>(&self, target: S, f: impl Fn(&R::Elem) -> S::Elem) -> Polynomial<S> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), f(c))).filter(|(_, c)| !target.is_zero(c)).collect();
        Polynomial { ring: target, vars: self.vars.clone(), terms }
    }

    /// Exact image in the rationals; `None` over a prime field.
    pub fn to_rational(&self) -> Option<Polynomial<RationalField>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.clone(), self.ring.to_rational(c)?));
        }
        Some(Polynomial { ring: RationalField, vars: self.vars.clone(), terms })
    }

    /// Reduction of every coefficient modulo the field's prime.
    pub fn reduce_mod(&self, field: &PrimeField) -> Result<Polynomial<PrimeField>, PolyError> {
        let p = field.modulus();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let r = self.ring.reduce_mod(c, p).ok_or(PolyError::NotReducible(p))?;
            if r != 0 {
                terms.push((m.clone(), r));
            }
        }
        Ok(Polynomial { ring: *field, vars: self.vars.clone(), terms })
    }

    /// Coefficient of the monomial `m` in the variables `subset`, as a
    /// polynomial in the remaining variables.
    ///
    /// `m` is a full-length exponent vector that must vanish outside `subset`.
    /// The zero monomial extracts the part free of the subset variables.
    pub fn coefficient_of(&self, subset: &[usize], m: &Monomial) -> Result<Self, PolyError> {
        if m.nvars() != self.vars.len() {
            return Err(PolyError::VariableMismatch);
        }
        for i in 0..m.nvars() {
            if m.exponent(i) != 0 && !subset.contains(&i) {
                return Err(PolyError::OutsideSubset(self.vars.name(i).into()));
            }
        }
        let keep: Vec<usize> = (0..self.vars.len()).filter(|i| !subset.contains(i)).collect();
        let vars = self.vars.without(subset);
        let terms: Vec<_> = self
            .terms
            .iter()
            .filter(|(t, _)| subset.iter().all(|&i| t.exponent(i) == m.exponent(i)))
            .map(|(t, c)| (t.project(&keep), c.clone()))
            .collect();
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        Ok(Polynomial { ring: self.ring.clone(), vars, terms })
    }

    /// Convenience form of [`coefficient_of`](Self::coefficient_of) naming
    /// the subset variables with their exponents.
    pub fn coefficient_of_named(&self, spec: &[(&str, u8)]) -> Result<Self, PolyError> {
        let mut subset = Vec::with_capacity(spec.len());
        let mut m = Monomial::one(self.vars.len());
        for (name, e) in spec {
            let i = self.vars.require(name)?;
            subset.push(i);
            m = m.mul(&Monomial::var(self.vars.len(), i, *e));
        }
        self.coefficient_of(&subset, &m)
    }

    /// Simultaneous substitution of variables by polynomials over `target`.
    ///
    /// `bindings[i]` is the image of variable `i`; unbound variables are
    /// mapped to the variable of the same name in `target`.
    pub fn substitute(&self, target: &Arc<VariableSet>, bindings: &[Option<Polynomial<R>>]) -> Result<Self, PolyError> {
        self.substitute_bounded(target, bindings, None)
    }

    pub fn substitute_bounded(
        &self,
        target: &Arc<VariableSet>,
        bindings: &[Option<Polynomial<R>>],
        budget: Option<usize>,
    ) -> Result<Self, PolyError> {
        if bindings.len() != self.vars.len() {
            return Err(PolyError::VariableMismatch);
        }
        let nt = target.len();
        let mut passthrough = vec![None; self.vars.len()];
        for (i, b) in bindings.iter().enumerate() {
            match b {
                Some(p) => {
                    if p.ring != self.ring {
                        return Err(PolyError::RingMismatch);
                    }
                    if !same_vars(&p.vars, target) {
                        return Err(PolyError::VariableMismatch);
                    }
                }
                None => passthrough[i] = Some(target.require(self.vars.name(i))?),
            }
        }
        let mut powers: Vec<Vec<Polynomial<R>>> = vec![Vec::new(); self.vars.len()];
        let mut acc = TermAccumulator::new(self.ring.clone(), target.clone()).with_budget(budget);
        for (m, c) in &self.terms {
            let mut mono = Monomial::one(nt);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    if let Some(j) = passthrough[i] {
                        mono = mono.mul(&Monomial::var(nt, j, e));
                    }
                }
            }
            let mut term = Polynomial::monomial(self.ring.clone(), target.clone(), mono, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 || passthrough[i].is_some() {
                    continue;
                }
                let base = bindings[i].as_ref().expect("bound");
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(base.clone());
                }
                while cache.len() < e as usize {
                    let next = cache.last().unwrap().mul_bounded(base, None, budget)?;
                    cache.push(next);
                }
                term = term.mul_bounded(&cache[e as usize - 1], None, budget)?;
                if term.is_zero() {
                    break;
                }
            }
            acc.add_poly(&term)?;
        }
        Ok(acc.finish())
    }

    /// Same-ring substitution given by variable names.
    pub fn substitute_named(
        &self,
        target: &Arc<VariableSet>,
        bindings: &[(&str, Polynomial<R>)],
    ) -> Result<Self, PolyError> {
        let mut slots = vec![None; self.vars.len()];
        for (name, p) in bindings {
            slots[self.vars.require(name)?] = Some(p.clone());
        }
        self.substitute(target, &slots)
    }

    /// Value at a point given one ring element per variable.
    pub fn evaluate(&self, point: &[R::Elem]) -> Result<R::Elem, PolyError> {
        if point.len() != self.vars.len() {
            return Err(PolyError::VariableMismatch);
        }
        let ring = &self.ring;
        let mut powers: Vec<Vec<R::Elem>> = point.iter().map(|v| vec![ring.one(), v.clone()]).collect();
        let mut acc = ring.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = ring.mul(pw.last().unwrap(), &point[i]);
                    pw.push(next);
                }
                t = ring.mul(&t, &pw[e as usize]);
            }
            ring.add_assign(&mut acc, &t);
        }
        Ok(acc)
    }

    /// Value modulo `field`'s prime at a point of residues.
    pub fn evaluate_mod(&self, point: &[u64], field: &PrimeField) -> Result<u64, PolyError> {
        if point.len() != self.vars.len() {
            return Err(PolyError::VariableMismatch);
        }
        let p = field.modulus();
        let mut powers: Vec<Vec<u64>> = point.iter().map(|v| vec![1, v % p]).collect();
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let mut t = self.ring.reduce_mod(c, p).ok_or(PolyError::NotReducible(p))?;
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = field.mul_raw(*pw.last().unwrap(), pw[1]);
                    pw.push(next);
                }
                t = field.mul_raw(t, pw[e as usize]);
            }
            acc = field.add_raw(acc, t);
        }
        Ok(acc)
    }
}

impl Polynomial<RationalField> {
    /// Multiplies through by the lcm of the denominators.
    pub fn clear_denominators(&self) -> (Polynomial<IntegerRing>, Integer) {
        let mut l = num_bigint::BigInt::from(1);
        for (_, c) in &self.terms {
            l = num_integer::Integer::lcm(&l, c.denom());
        }
        let scale = BigRational::from_integer(l.clone());
        let p = self.map_ring(IntegerRing, |c| Integer::from_big((c * &scale).to_integer()));
        (p, Integer::from_big(l))
    }
}

impl<F: Field> Polynomial<F> {
    /// Divides by the leading coefficient.
    pub fn make_monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.ring.inv(c).expect("non-zero leading coefficient");
                self.scale(&inv)
            }
        }
    }
}

fn merge_sorted<R: Ring>(ring: &R, sorted: Vec<(Monomial, R::Elem)>) -> Vec<(Monomial, R::Elem)> {
    let mut out: Vec<(Monomial, R::Elem)> = Vec::with_capacity(sorted.len());
    for (m, c) in sorted {
        match out.last_mut() {
            Some((lm, lc)) if *lm == m => ring.add_assign(lc, &c),
            _ => {
                if let Some((_, lc)) = out.last() {
                    if ring.is_zero(lc) {
                        out.pop();
                    }
                }
                out.push((m, c));
            }
        }
    }
    if let Some((_, lc)) = out.last() {
        if ring.is_zero(lc) {
            out.pop();
        }
    }
    out
}

impl<R: Ring> Add for &Polynomial<R> {
    type Output = Polynomial<R>;

    /// Panics on mismatched rings or variable sets; see [`Polynomial::try_add`].
    fn add(self, rhs: Self) -> Polynomial<R> {
        self.try_add(rhs).expect("polynomials must share ring and variables")
    }
}

impl<R: Ring> Sub for &Polynomial<R> {
    type Output = Polynomial<R>;

    fn sub(self, rhs: Self) -> Polynomial<R> {
        self.try_sub(rhs).expect("polynomials must share ring and variables")
    }
}

impl<R: Ring> Mul for &Polynomial<R> {
    type Output = Polynomial<R>;

    fn mul(self, rhs: Self) -> Polynomial<R> {
        self.try_mul(rhs).expect("polynomials must share ring and variables")
    }
}

impl<R: Ring> Neg for &Polynomial<R> {
    type Output = Polynomial<R>;

    fn neg(self) -> Polynomial<R> {
        Polynomial::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ring::{QQ, ZZ};
    use crate::poly::vars::numbered;

    fn xyz() -> (Polynomial<IntegerRing>, Polynomial<IntegerRing>, Polynomial<IntegerRing>) {
        let v = VariableSet::new(["x", "y", "z"]).unwrap();
        (
            Polynomial::var(ZZ, v.clone(), "x").unwrap(),
            Polynomial::var(ZZ, v.clone(), "y").unwrap(),
            Polynomial::var(ZZ, v, "z").unwrap(),
        )
    }

    #[test]
    fn cancellation_and_identity() {
        let (x, y, _) = xyz();
        let s = &(&x + &y) + &(&x - &y);
        assert_eq!(s, x.scale(&Integer::Small(2)));
        let zero = Polynomial::zero(ZZ, x.vars().clone());
        assert_eq!(&s + &zero, s);
        let x2 = &x * &x;
        assert!((&x2 + &x2.neg()).is_zero());
    }

    #[test]
    fn products() {
        let (x, y, z) = xyz();
        let d = &(&x + &y) * &(&x - &y);
        assert_eq!(d, &(&x * &x) - &(&y * &y));
        let one = Polynomial::one(ZZ, x.vars().clone());
        assert_eq!(&d * &one, d);
        let cube = (&(&x + &y) + &z).pow(3);
        let xyz_m = Monomial::from_exponents(&[1, 1, 1]);
        assert_eq!(cube.coefficient(&xyz_m), Integer::Small(6));
        assert_eq!(cube.len(), 10);
    }

    #[test]
    fn mismatches_are_errors() {
        let (x, _, _) = xyz();
        let other = Polynomial::var(ZZ, numbered("t", 2), "t1").unwrap();
        assert_eq!(x.try_add(&other), Err(PolyError::VariableMismatch));
        let xq = x.to_rational().unwrap();
        let yq = Polynomial::var(QQ, x.vars().clone(), "y").unwrap();
        assert!(xq.try_mul(&yq).is_ok());
    }

    #[test]
    fn coefficient_extraction() {
        let v = VariableSet::new(["t1", "t2", "x", "y"]).unwrap();
        let t1 = Polynomial::var(ZZ, v.clone(), "t1").unwrap();
        let t2 = Polynomial::var(ZZ, v.clone(), "t2").unwrap();
        let x = Polynomial::var(ZZ, v.clone(), "x").unwrap();
        let y = Polynomial::var(ZZ, v.clone(), "y").unwrap();
        let p = (&t1 + &t2).pow(2);
        let c = p.coefficient_of_named(&[("t1", 1), ("t2", 1)]).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c.is_constant());
        assert_eq!(c.constant_term(), Integer::Small(2));
        assert_eq!(c.vars().names(), ["x", "y"]);

        let q = &(&(&t1 * &t1) * &x) + &(&t1 * &y);
        let c = q.coefficient_of_named(&[("t1", 2), ("t2", 0)]).unwrap();
        let xv = Polynomial::var(ZZ, c.vars().clone(), "x").unwrap();
        assert_eq!(c, xv);
        let free = q.coefficient_of_named(&[("t1", 0), ("t2", 0)]).unwrap();
        assert!(free.is_zero());

        let bad = Monomial::from_exponents(&[1, 0, 1, 0]);
        assert!(matches!(q.coefficient_of(&[0, 1], &bad), Err(PolyError::OutsideSubset(_))));
    }

    #[test]
    fn substitution() {
        let v = VariableSet::new(["x", "y"]).unwrap();
        let w = VariableSet::new(["a", "b", "y"]).unwrap();
        let x = Polynomial::var(ZZ, v.clone(), "x").unwrap();
        let a = Polynomial::var(ZZ, w.clone(), "a").unwrap();
        let b = Polynomial::var(ZZ, w.clone(), "b").unwrap();
        let sq = x.pow(2).substitute_named(&w, &[("x", &a + &b)]).unwrap();
        assert_eq!(sq, (&a + &b).pow(2));

        let y = Polynomial::var(ZZ, v.clone(), "y").unwrap();
        let s = &x + &y;
        assert_eq!(s.substitute(&v, &[None, None]).unwrap(), s);

        let one = Polynomial::one(ZZ, v.clone());
        assert_eq!(x.substitute_named(&v, &[("x", one.clone())]).unwrap(), one);
    }

    #[test]
    fn modular_evaluation() {
        let (x, _, _) = xyz();
        let one = Polynomial::one(ZZ, x.vars().clone());
        let p = &x.pow(2) + &one;
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(p.evaluate_mod(&[2, 0, 0], &f5).unwrap(), 0);
        let zero = Polynomial::zero(ZZ, x.vars().clone());
        assert_eq!(zero.evaluate_mod(&[1, 2, 3], &f5).unwrap(), 0);
    }

    #[test]
    fn budget_is_enforced() {
        let (x, y, z) = xyz();
        let s = &(&x + &y) + &z;
        let big = s.pow(6);
        assert!(matches!(big.mul_bounded(&big, None, Some(10)), Err(PolyError::BudgetExceeded { limit: 10 })));
    }
}
