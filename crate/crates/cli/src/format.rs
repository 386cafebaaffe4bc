//! Serialized forms of polynomials: the canonical text rendering and a JSON
//! document that round-trips exactly.

use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use semiinv_core::poly::ring::{format_elem, parse_coefficient};
use semiinv_core::poly::{Monomial, Polynomial, Ring, VariableSet};

/// Output format of `emit`, `derive-st`, `solve-hwv` and `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    /// An integer or `num/den`, in lowest terms.
    pub coefficient: String,
    /// One exponent per variable, in the order of `variables`.
    pub exponents: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonPolynomial {
    pub name: String,
    pub ring: String,
    pub variables: Vec<String>,
    /// Terms in descending graded-lex order.
    pub terms: Vec<JsonTerm>,
}

impl JsonPolynomial {
    pub fn from_polynomial<R: Ring>(name: &str, p: &Polynomial<R>) -> Self {
        let ring = p.ring();
        JsonPolynomial {
            name: name.to_string(),
            ring: ring.tag().to_string(),
            variables: p.vars().names().to_vec(),
            terms: p
                .terms()
                .iter()
                .map(|(m, c)| JsonTerm { coefficient: format_elem(ring, c), exponents: m.exponents().to_vec() })
                .collect(),
        }
    }

    /// Rebuilds the polynomial over `ring`; the ring tag must match.
    pub fn to_polynomial<R: Ring>(&self, ring: &R) -> Result<Polynomial<R>> {
        if self.ring != ring.tag().to_string() {
            bail!("document is over {}, expected {}", self.ring, ring.tag());
        }
        let vars: Arc<VariableSet> = VariableSet::new(self.variables.iter().cloned())?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (k, t) in self.terms.iter().enumerate() {
            if t.exponents.len() != vars.len() {
                bail!("term {k} has {} exponents for {} variables", t.exponents.len(), vars.len());
            }
            let c = parse_coefficient(ring, &t.coefficient)
                .ok_or_else(|| anyhow!("term {k}: bad coefficient `{}`", t.coefficient))?;
            terms.push((Monomial::from_exponents(&t.exponents), c));
        }
        Ok(Polynomial::from_terms(ring.clone(), vars, terms))
    }
}

/// Renders one named polynomial in the requested format.
pub fn render<R: Ring>(name: &str, p: &Polynomial<R>, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => format!("{p}\n"),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&JsonPolynomial::from_polynomial(name, p))
                .context("serializing polynomial")?;
            s.push('\n');
            s
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use semiinv_core::poly::{parse_polynomial, QQ};

    #[test]
    fn json_round_trip() {
        let v = VariableSet::new(["x", "y"]).unwrap();
        let p = parse_polynomial("1/2*x^2*y - 3*y + 7/5", &QQ, &v).unwrap();
        let doc = JsonPolynomial::from_polynomial("p", &p);
        let text = serde_json::to_string(&doc).unwrap();
        let back: JsonPolynomial = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_polynomial(&QQ).unwrap(), p);
        assert!(back.to_polynomial(&semiinv_core::poly::ZZ).is_err());
    }
}
