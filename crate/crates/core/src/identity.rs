//! Polynomial identities built as small expression DAGs.
//!
//! Leaves are explicit polynomials over a common base variable set (usually
//! the 27 matrix coordinates). Inner nodes compose an outer polynomial with
//! earlier nodes: variable `i` of the outer polynomial is replaced by input
//! `i`. The root is claimed to vanish identically. It can be checked either
//! by exact expansion under a term budget or by evaluation at random points
//! modulo primes, where the Schwartz–Zippel lemma bounds the chance that a
//! non-zero root survives a trial by `degree / p`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::poly::{PolyError, Polynomial, PrimeField, RationalField};
use crate::sample::sample_point;

/// Index of a node inside an [`IdentityTask`].
pub type NodeId = usize;

#[derive(Clone, Debug)]
enum Node {
    Leaf(Polynomial<RationalField>),
    Compose { outer: Polynomial<RationalField>, inputs: Vec<NodeId> },
}

/// A claimed identity `root = 0`.
#[derive(Clone, Debug)]
pub struct IdentityTask {
    name: String,
    nodes: Vec<Node>,
    root: Option<NodeId>,
}

/// Result of one modular trial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialOutcome {
    pub prime: u64,
    pub trial: u64,
    /// The sampled point, kept only when the root did not vanish there.
    pub counterexample: Option<Vec<u64>>,
    pub value: u64,
}

/// Aggregated modular verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularReport {
    pub degree: u32,
    pub primes: Vec<u64>,
    pub trials: u64,
    pub failures: Vec<TrialOutcome>,
}

impl ModularReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl IdentityTask {
    pub fn new(name: impl Into<String>) -> Self {
        IdentityTask { name: name.into(), nodes: Vec::new(), root: None }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn leaf(&mut self, p: Polynomial<RationalField>) -> NodeId {
        if let Some(Node::Leaf(first)) = self.nodes.iter().find(|n| matches!(n, Node::Leaf(_))) {
            assert!(crate::poly::vars::same_vars(first.vars(), p.vars()), "all leaves share one variable set");
        }
        self.nodes.push(Node::Leaf(p));
        self.nodes.len() - 1
    }

    /// `outer(inputs[0], inputs[1], ...)`; the outer polynomial needs one
    /// input per variable.
    pub fn compose(&mut self, outer: Polynomial<RationalField>, inputs: &[NodeId]) -> NodeId {
        assert_eq!(outer.vars().len(), inputs.len(), "one input per outer variable");
        assert!(inputs.iter().all(|&i| i < self.nodes.len()), "inputs must exist");
        self.nodes.push(Node::Compose { outer, inputs: inputs.to_vec() });
        self.nodes.len() - 1
    }

    pub fn set_root(&mut self, node: NodeId) {
        assert!(node < self.nodes.len());
        self.root = Some(node);
    }

    fn root(&self) -> NodeId {
        self.root.expect("identity has a root")
    }

    /// Number of base variables (those of the leaves).
    pub fn arity(&self) -> usize {
        self.nodes
            .iter()
            .find_map(|n| match n {
                Node::Leaf(p) => Some(p.vars().len()),
                Node::Compose { .. } => None,
            })
            .unwrap_or(0)
    }

    pub fn base_vars(&self) -> Option<&alloc::sync::Arc<crate::poly::VariableSet>> {
        self.nodes.iter().find_map(|n| match n {
            Node::Leaf(p) => Some(p.vars()),
            Node::Compose { .. } => None,
        })
    }

    /// An upper bound for the total degree of the root in the base variables.
    pub fn degree(&self) -> u32 {
        let mut degrees: Vec<u32> = Vec::with_capacity(self.nodes.len());
        for n in &self.nodes {
            let d = match n {
                Node::Leaf(p) => p.total_degree().unwrap_or(0),
                Node::Compose { outer, inputs } => outer
                    .terms()
                    .iter()
                    .map(|(m, _)| m.exponents().iter().zip(inputs).map(|(&e, &i)| e as u32 * degrees[i]).sum::<u32>())
                    .max()
                    .unwrap_or(0),
            };
            degrees.push(d);
        }
        degrees[self.root()]
    }

    /// Reduces every polynomial modulo `field`'s prime, once.
    pub fn prepare(&self, field: &PrimeField) -> Result<PreparedTask, PolyError> {
        let nodes = self
            .nodes
            .iter()
            .map(|n| {
                Ok(match n {
                    Node::Leaf(p) => PreparedNode::Leaf(p.reduce_mod(field)?),
                    Node::Compose { outer, inputs } => {
                        PreparedNode::Compose { outer: outer.reduce_mod(field)?, inputs: inputs.clone() }
                    }
                })
            })
            .collect::<Result<Vec<_>, PolyError>>()?;
        Ok(PreparedTask { field: *field, nodes, root: self.root(), arity: self.arity() })
    }

    /// The root as an explicit polynomial; every intermediate expansion is
    /// limited to `budget` terms.
    pub fn expand(&self, budget: Option<usize>) -> Result<Polynomial<RationalField>, PolyError> {
        let mut values: Vec<Option<Polynomial<RationalField>>> = alloc::vec![None; self.nodes.len()];
        let needed = self.needed();
        for (k, n) in self.nodes.iter().enumerate() {
            if !needed[k] {
                continue;
            }
            let v = match n {
                Node::Leaf(p) => p.clone(),
                Node::Compose { outer, inputs } => {
                    let target = values[inputs[0]].as_ref().expect("evaluated").vars().clone();
                    let bindings: Vec<_> = inputs.iter().map(|&i| values[i].clone()).collect();
                    outer.substitute_bounded(&target, &bindings, budget)?
                }
            };
            values[k] = Some(v);
        }
        Ok(values[self.root()].take().expect("root evaluated"))
    }

    fn needed(&self) -> Vec<bool> {
        let mut needed = alloc::vec![false; self.nodes.len()];
        needed[self.root()] = true;
        for k in (0..self.nodes.len()).rev() {
            if needed[k] {
                if let Node::Compose { inputs, .. } = &self.nodes[k] {
                    for &i in inputs {
                        needed[i] = true;
                    }
                }
            }
        }
        needed
    }

    /// Runs `trials` random points for each prime, sequentially.
    pub fn check_modular(&self, primes: &[u64], trials: u64, seed: u64) -> Result<ModularReport, PolyError> {
        let mut failures = Vec::new();
        for &p in primes {
            let field = PrimeField::new(p).map_err(|_| PolyError::NotReducible(p))?;
            let prepared = self.prepare(&field)?;
            for t in 0..trials {
                let outcome = prepared.trial(seed, t)?;
                if outcome.counterexample.is_some() {
                    failures.push(outcome);
                }
            }
        }
        Ok(ModularReport { degree: self.degree(), primes: primes.to_vec(), trials, failures })
    }
}

#[derive(Clone, Debug)]
enum PreparedNode {
    Leaf(Polynomial<PrimeField>),
    Compose { outer: Polynomial<PrimeField>, inputs: Vec<NodeId> },
}

/// An identity reduced modulo one prime, ready for repeated evaluation.
#[derive(Clone, Debug)]
pub struct PreparedTask {
    field: PrimeField,
    nodes: Vec<PreparedNode>,
    root: NodeId,
    arity: usize,
}

impl PreparedTask {
    pub fn prime(&self) -> u64 {
        self.field.modulus()
    }

    /// Value of the root at a point of residues.
    pub fn evaluate(&self, point: &[u64]) -> Result<u64, PolyError> {
        let mut values: Vec<u64> = Vec::with_capacity(self.nodes.len());
        for n in &self.nodes {
            let v = match n {
                PreparedNode::Leaf(p) => p.evaluate_mod(point, &self.field)?,
                PreparedNode::Compose { outer, inputs } => {
                    let args: Vec<u64> = inputs.iter().map(|&i| values[i]).collect();
                    outer.evaluate_mod(&args, &self.field)?
                }
            };
            values.push(v);
        }
        Ok(values[self.root])
    }

    /// One keyed trial.
    pub fn trial(&self, seed: u64, trial: u64) -> Result<TrialOutcome, PolyError> {
        let point = sample_point(seed, self.prime(), trial, self.arity);
        let value = self.evaluate(&point)?;
        Ok(TrialOutcome { prime: self.prime(), trial, counterexample: (value != 0).then_some(point), value })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, VariableSet, QQ};

    fn task(claim: &str) -> IdentityTask {
        // (x + y)^2 - (x^2 + 2xy + y^2), written through a composition.
        let base = VariableSet::new(["x", "y"]).unwrap();
        let outer_vars = VariableSet::new(["s", "p"]).unwrap();
        let mut t = IdentityTask::new("square");
        let s = t.leaf(parse_polynomial("x + y", &QQ, &base).unwrap());
        let p = t.leaf(parse_polynomial(claim, &QQ, &base).unwrap());
        let root = t.compose(parse_polynomial("s^2 - p", &QQ, &outer_vars).unwrap(), &[s, p]);
        t.set_root(root);
        t
    }

    #[test]
    fn true_identity_passes_both_ways() {
        let t = task("x^2 + 2*x*y + y^2");
        assert_eq!(t.degree(), 2);
        assert!(t.expand(None).unwrap().is_zero());
        assert!(t.check_modular(&[2147483647, 5], 20, 0).unwrap().passed());
    }

    #[test]
    fn false_identity_fails_with_counterexample() {
        let t = task("x^2 + y^2");
        assert!(!t.expand(None).unwrap().is_zero());
        let r = t.check_modular(&[2147483647], 5, 0).unwrap();
        assert!(!r.passed());
        let bad = &r.failures[0];
        let point = bad.counterexample.as_ref().unwrap();
        assert_eq!(bad.value, 2 * point[0] % 2147483647 * point[1] % 2147483647);
    }

    #[test]
    fn budget_stops_expansion() {
        let t = task("x^2 + 2*x*y + y^2");
        assert!(matches!(t.expand(Some(1)), Err(PolyError::BudgetExceeded { .. })));
    }
}
