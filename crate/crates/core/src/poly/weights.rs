use std::collections::BTreeMap;
use std::fmt;

use super::Polynomial;
use crate::error::PolyError;

/// Positive integer weight per variable name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    weights: BTreeMap<String, u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightedDegree {
    /// The zero polynomial, homogeneous of every degree.
    Zero,
    Homogeneous(u64),
    NotHomogeneous {
        min: u64,
        max: u64,
    },
}

impl fmt::Display for WeightedDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightedDegree::Zero => f.write_str("zero"),
            WeightedDegree::Homogeneous(d) => write!(f, "{d}"),
            WeightedDegree::NotHomogeneous { min, max } => {
                write!(f, "not homogeneous ({min}..{max})")
            }
        }
    }
}

impl WeightSystem {
    pub fn new<S: Into<String>>(weights: impl IntoIterator<Item = (S, u32)>) -> Self {
        WeightSystem {
            weights: weights
                .into_iter()
                .map(|(k, w)| {
                    assert!(w > 0, "weights are positive");
                    (k.into(), w)
                })
                .collect(),
        }
    }

    /// The scaling weights of the E-form ring: E10,E01,L ↦ 1; E20,E02,E11 ↦ 2;
    /// E30,E03,E21,E12 ↦ 3.
    pub fn el() -> Self {
        Self::new([
            ("E10", 1),
            ("E01", 1),
            ("L", 1),
            ("E20", 2),
            ("E02", 2),
            ("E11", 2),
            ("E30", 3),
            ("E03", 3),
            ("E21", 3),
            ("E12", 3),
        ])
    }

    pub fn weight(&self, var: &str) -> Option<u32> {
        self.weights.get(var).copied()
    }

    pub fn weighted_degree(&self, p: &Polynomial) -> Result<WeightedDegree, PolyError> {
        let w = p
            .ring()
            .variables()
            .iter()
            .map(|v| {
                self.weight(v)
                    .ok_or_else(|| PolyError::MissingWeight(v.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut degrees = p.terms().map(|(m, _)| m.weighted_degree(&w));
        let Some(first) = degrees.next() else {
            return Ok(WeightedDegree::Zero);
        };
        let (min, max) = degrees.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d)));
        Ok(if min == max {
            WeightedDegree::Homogeneous(min)
        } else {
            WeightedDegree::NotHomogeneous { min, max }
        })
    }
}
