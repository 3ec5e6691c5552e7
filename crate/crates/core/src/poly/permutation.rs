use std::fmt;

use super::ring::{same_ring, RingSignature};
use super::{Monomial, Polynomial};
use crate::error::PolyError;

/// Element of S3 acting on the column index of (x_i, d_i); L is fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Permutation([u8; 3]);

impl Permutation {
    /// `images[i-1]` is the image of `i`; values are 1-based.
    pub fn new(images: [u8; 3]) -> Result<Self, PolyError> {
        let mut seen = [false; 3];
        for &i in &images {
            if !(1..=3).contains(&i) || seen[(i - 1) as usize] {
                return Err(PolyError::InvalidPermutation(images));
            }
            seen[(i - 1) as usize] = true;
        }
        Ok(Permutation([images[0] - 1, images[1] - 1, images[2] - 1]))
    }

    pub fn identity() -> Self {
        Permutation([0, 1, 2])
    }

    /// The transposition swapping `i` and `j` (1-based).
    pub fn transposition(i: u8, j: u8) -> Self {
        let mut images = [1, 2, 3];
        images.swap((i - 1) as usize, (j - 1) as usize);
        Self::new(images).expect("valid transposition")
    }

    /// All six elements, identity first.
    pub fn all() -> [Permutation; 6] {
        [
            [1, 2, 3],
            [2, 1, 3],
            [1, 3, 2],
            [3, 2, 1],
            [2, 3, 1],
            [3, 1, 2],
        ]
        .map(|im| Permutation::new(im).unwrap())
    }

    /// Image of `i` (1-based).
    pub fn image(&self, i: u8) -> u8 {
        self.0[(i - 1) as usize] + 1
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.map(|i| self.0[i as usize]))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = [0u8; 3];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Permutation(inv)
    }

    /// σ(x_i) = x_{σi}, σ(d_i) = d_{σi}, σ(L) = L on a polynomial over MQL.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial, PolyError> {
        let mql = RingSignature::mql();
        if !same_ring(p.ring(), &mql) {
            return Err(PolyError::WrongRing {
                expected: mql.name().to_string(),
                found: p.ring().name().to_string(),
            });
        }
        // MQL order is x1,x2,x3,d1,d2,d3,L
        let mut target = [0usize, 1, 2, 3, 4, 5, 6];
        for i in 0..3 {
            target[i] = self.0[i] as usize;
            target[3 + i] = 3 + self.0[i] as usize;
        }
        let terms = p.terms().map(|(m, c)| {
            let mut exps = vec![0u16; 7];
            for (v, &e) in m.exponents().iter().enumerate() {
                exps[target[v]] = e;
            }
            (Monomial::from_exponents(exps), c.clone())
        });
        Ok(Polynomial::from_terms(p.ring(), terms))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {} {}]", self.image(1), self.image(2), self.image(3))
    }
}
