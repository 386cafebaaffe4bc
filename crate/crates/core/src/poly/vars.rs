use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::PolyError;

/// An ordered list of distinct variable names.
///
/// The order fixes the monomial order: earlier variables compare larger in
/// the lexicographic tie-break.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableSet {
    names: Vec<String>,
}

impl VariableSet {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) {
                return Err(PolyError::BadVariableName(n.clone()));
            }
            if !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(PolyError::BadVariableName(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(VariableSet { names }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize, PolyError> {
        self.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    /// A new set with `extra` appended after the existing names.
    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> Result<Arc<Self>, PolyError> {
        VariableSet::new(self.names.iter().cloned().chain(extra.iter().map(|s| s.as_ref().to_string())))
    }

    /// The set with the given indices removed, order otherwise preserved.
    pub fn without(&self, drop: &[usize]) -> Arc<Self> {
        Arc::new(VariableSet {
            names: self.names.iter().enumerate().filter(|(i, _)| !drop.contains(i)).map(|(_, n)| n.clone()).collect(),
        })
    }
}

/// Variables `x{r}_{i}{j}` for matrices `r = 1..=count`, rows and columns 1..=3.
pub fn matrix_coordinates(count: usize) -> Arc<VariableSet> {
    let mut names = Vec::with_capacity(9 * count);
    for r in 1..=count {
        for i in 1..=3 {
            for j in 1..=3 {
                names.push(format!("x{r}_{i}{j}"));
            }
        }
    }
    VariableSet::new(names).expect("coordinate names are distinct")
}

/// Index of `x{r}_{i}{j}` (all 1-based) inside [`matrix_coordinates`].
pub fn coordinate_index(r: usize, i: usize, j: usize) -> usize {
    9 * (r - 1) + 3 * (i - 1) + (j - 1)
}

/// Variables `{prefix}1 ..= {prefix}{count}`.
pub fn numbered(prefix: &str, count: usize) -> Arc<VariableSet> {
    VariableSet::new((1..=count).map(|i| format!("{prefix}{i}"))).expect("names are distinct")
}

/// Two sets are interchangeable when they list the same names in the same order.
pub fn same_vars(a: &Arc<VariableSet>, b: &Arc<VariableSet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(matches!(VariableSet::new(["x", "y", "x"]), Err(PolyError::DuplicateVariable(_))));
        assert!(matches!(VariableSet::new(["1x"]), Err(PolyError::BadVariableName(_))));
        assert!(matches!(VariableSet::new(["a-b"]), Err(PolyError::BadVariableName(_))));
    }

    #[test]
    fn coordinate_layout() {
        let v = matrix_coordinates(3);
        assert_eq!(v.len(), 27);
        assert_eq!(v.name(0), "x1_11");
        assert_eq!(v.name(26), "x3_33");
        assert_eq!(v.name(coordinate_index(2, 3, 1)), "x2_31");
        let w = v.without(&[0, 26]);
        assert_eq!(w.len(), 25);
        assert_eq!(w.name(0), "x1_12");
    }
}
