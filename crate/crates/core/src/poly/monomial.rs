use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

/// Exponent vector, one entry per ring variable.
///
/// `Ord` is graded reverse-lexicographic over the ring's variable order:
/// higher total degree is greater; ties are broken at the last variable
/// where the exponents differ, the smaller exponent there being greater.
#[derive(Debug, Clone)]
pub struct Monomial {
    degree: u32,
    exps: Box<[u16]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            degree: 0,
            exps: vec![0; nvars].into_boxed_slice(),
        }
    }

    pub fn var(nvars: usize, index: usize, exp: u16) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = exp;
        Monomial {
            degree: exp as u32,
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn from_exponents(exps: impl Into<Box<[u16]>>) -> Self {
        let exps = exps.into();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { degree, exps }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u16 {
        self.exps[index]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps: Box<[u16]> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            degree: self.degree + other.degree,
            exps,
        }
    }

    /// Same monomial with the exponent at `index` replaced.
    pub fn with_exponent(&self, index: usize, exp: u16) -> Monomial {
        let mut exps = self.exps.clone();
        let old = exps[index];
        exps[index] = exp;
        Monomial {
            degree: self.degree - old as u32 + exp as u32,
            exps,
        }
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (a, b) in self.exps.iter().zip(other.exps.iter()).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_examples() {
        // degree dominates
        assert!(m(&[0, 0, 3]) > m(&[2, 0, 0]));
        // x^2 > y^2 > z^2 in degree 2, and xz < y^2
        assert!(m(&[2, 0, 0]) > m(&[0, 2, 0]));
        assert!(m(&[0, 2, 0]) > m(&[0, 0, 2]));
        assert!(m(&[0, 2, 0]) > m(&[1, 0, 1]));
        assert!(m(&[1, 1, 0]) > m(&[0, 2, 0]));
    }

    #[test]
    fn mul_adds_exponents() {
        let p = m(&[1, 0, 2]).mul(&m(&[0, 3, 1]));
        assert_eq!(p.exponents(), &[1, 3, 3]);
        assert_eq!(p.degree(), 7);
        assert_eq!(p.with_exponent(1, 0).degree(), 4);
    }
}
