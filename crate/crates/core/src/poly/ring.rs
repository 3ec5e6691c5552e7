use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::PolyError;

/// Ordered list of variable names that defines a polynomial ring over Q.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSignature {
    name: String,
    variables: Vec<String>,
}

/// Shared handle to a ring signature. Polynomials carry one of these.
pub type Ring = Arc<RingSignature>;

pub const MQL_VARIABLES: [&str; 7] = ["x1", "x2", "x3", "d1", "d2", "d3", "L"];
pub const EL_VARIABLES: [&str; 10] = [
    "E10", "E20", "E30", "E01", "E02", "E03", "E21", "E11", "E12", "L",
];

impl RingSignature {
    pub fn new<S: Into<String>>(
        name: impl Into<String>,
        variables: impl IntoIterator<Item = S>,
    ) -> Result<Ring, PolyError> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        for (i, v) in variables.iter().enumerate() {
            if variables[..i].contains(v) {
                return Err(PolyError::DuplicateVariable(v.clone()));
            }
        }
        Ok(Arc::new(RingSignature {
            name: name.into(),
            variables,
        }))
    }

    /// Q[x1,x2,x3,d1,d2,d3,L]: edges, face diagonals and space diagonal.
    pub fn mql() -> Ring {
        static MQL: OnceLock<Ring> = OnceLock::new();
        MQL.get_or_init(|| RingSignature::new("MQL", MQL_VARIABLES).unwrap())
            .clone()
    }

    /// Q[E10,E20,E30,E01,E02,E03,E21,E11,E12,L]: the E-form ring.
    pub fn el() -> Ring {
        static EL: OnceLock<Ring> = OnceLock::new();
        EL.get_or_init(|| RingSignature::new("EL", EL_VARIABLES).unwrap())
            .clone()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn len(&self) -> usize {
        self.variables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.variables.is_empty()
    }

    pub fn index_of(&self, var: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == var)
    }

    pub fn require(&self, var: &str) -> Result<usize, PolyError> {
        self.index_of(var)
            .ok_or_else(|| PolyError::UnknownVariable(var.to_string()))
    }
}

impl fmt::Display for RingSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.name, self.variables.join(","))
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub(crate) fn ensure_same(a: &Ring, b: &Ring) -> Result<(), PolyError> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(PolyError::RingMismatch {
            left: a.name().to_string(),
            right: b.name().to_string(),
        })
    }
}
