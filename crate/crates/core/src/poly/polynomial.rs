use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::ring::{ensure_same, Ring};
use super::Rational;
use crate::error::PolyError;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// No stored coefficient is zero, so the zero polynomial is exactly the
/// empty term map.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        super::ring::same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        Self::monomial(ring, Monomial::one(ring.len()), c)
    }

    pub fn integer(ring: &Ring, c: i64) -> Self {
        Self::constant(ring, Rational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.len(), ring.len());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// The variable called `name`.
    pub fn var(ring: &Ring, name: &str) -> Result<Self, PolyError> {
        let index = ring.require(name)?;
        Ok(Self::var_at(ring, index))
    }

    pub fn var_at(ring: &Ring, index: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.len(), index, 1), Rational::one())
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.len(), ring.len());
            accumulate(&mut acc, m, c);
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &Ring, acc: HashMap<Monomial, Rational>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the leading (grevlex-largest) monomial down.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Largest combined exponent of the given variables over all terms.
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        self.terms
            .keys()
            .map(|m| vars.iter().map(|&v| m.exponent(v) as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(var) > 0)
    }

    /// Names of the variables that occur in some term, in ring order.
    pub fn support(&self) -> Vec<&str> {
        (0..self.ring.len())
            .filter(|&v| self.involves(v))
            .map(|v| self.ring.variables()[v].as_str())
            .collect()
    }

    /// Splits `self` as `sum_k coeff_k * var^k`; the coefficients do not involve `var`.
    pub fn collect_in(&self, var: usize) -> BTreeMap<u16, Polynomial> {
        let mut parts: BTreeMap<u16, BTreeMap<Monomial, Rational>> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts
                .entry(m.exponent(var))
                .or_default()
                .insert(m.with_exponent(var, 0), c.clone());
        }
        parts
            .into_iter()
            .map(|(k, terms)| {
                (
                    k,
                    Polynomial {
                        ring: self.ring.clone(),
                        terms,
                    },
                )
            })
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        ensure_same(&self.ring, &other.ring)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_into(&mut terms, m, c);
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        ensure_same(&self.ring, &other.ring)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_into(&mut terms, m, &-c);
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        ensure_same(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                accumulate(&mut acc, ma.mul(mb), ca * cb);
            }
        }
        Ok(Self::from_map(&self.ring, acc))
    }

    pub fn pow(&self, mut exp: u32) -> Polynomial {
        let mut base = self.clone();
        let mut result = Polynomial::one(&self.ring);
        while exp > 0 {
            if exp & 1 == 1 {
                result = &result * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Ring homomorphism sending variable `i` of `self.ring` to `images[i]`.
    ///
    /// All images must live in one target ring.
    pub fn substitute_all(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if images.len() < self.ring.len() {
            return Err(PolyError::MissingImage(
                self.ring.variables()[images.len()].clone(),
            ));
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        for im in images {
            ensure_same(&target, &im.ring)?;
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|im| vec![Polynomial::one(&target), im.clone()])
            .collect();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut factors: Vec<(usize, usize)> = Vec::new();
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[v].len() <= e {
                    let next = &powers[v][powers[v].len() - 1] * &images[v];
                    powers[v].push(next);
                }
                factors.push((v, e));
            }
            factors.sort_by_key(|&(v, e)| powers[v][e].num_terms());
            let mut prod = Polynomial::constant(&target, c.clone());
            for (v, e) in factors {
                prod = &prod * &powers[v][e];
            }
            for (pm, pc) in prod.terms {
                accumulate(&mut acc, pm, pc);
            }
        }
        Ok(Self::from_map(&target, acc))
    }

    /// Substitution by variable name; every variable of `self.ring` needs an image.
    pub fn substitute(
        &self,
        images: &HashMap<String, Polynomial>,
    ) -> Result<Polynomial, PolyError> {
        let ordered = self
            .ring
            .variables()
            .iter()
            .map(|v| {
                images
                    .get(v)
                    .cloned()
                    .ok_or_else(|| PolyError::MissingImage(v.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.substitute_all(&ordered)
    }

    /// Replaces only the listed variables, leaving the rest fixed.
    pub fn substitute_some(&self, images: &[(usize, Polynomial)]) -> Result<Polynomial, PolyError> {
        let mut all: Vec<Polynomial> = (0..self.ring.len())
            .map(|v| Polynomial::var_at(&self.ring, v))
            .collect();
        for (v, im) in images {
            ensure_same(&self.ring, &im.ring)?;
            all[*v] = im.clone();
        }
        self.substitute_all(&all)
    }

    /// Exact value at a point given positionally in ring order.
    pub fn evaluate_at(&self, values: &[Rational]) -> Result<Rational, PolyError> {
        if values.len() < self.ring.len() {
            return Err(PolyError::MissingAssignment(
                self.ring.variables()[values.len()].clone(),
            ));
        }
        if values.iter().all(|v| v.is_integer()) {
            return Ok(self.evaluate_integral(values));
        }
        let mut powers: Vec<Vec<Rational>> = values
            .iter()
            .map(|v| vec![Rational::one(), v.clone()])
            .collect();
        let mut sum = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[v].len() <= e {
                    let next = &powers[v][powers[v].len() - 1] * &values[v];
                    powers[v].push(next);
                }
                t *= &powers[v][e];
            }
            sum += t;
        }
        Ok(sum)
    }

    /// Integer points: sums stay in BigInt, one bucket per coefficient denominator.
    fn evaluate_integral(&self, values: &[Rational]) -> Rational {
        let values: Vec<BigInt> = values.iter().map(|v| v.to_integer()).collect();
        let mut powers: Vec<Vec<BigInt>> = values
            .iter()
            .map(|v| vec![BigInt::one(), v.clone()])
            .collect();
        let mut buckets: Vec<(BigInt, BigInt)> = Vec::new();
        for (m, c) in &self.terms {
            let mut t = c.numer().clone();
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[v].len() <= e {
                    let next = &powers[v][powers[v].len() - 1] * &values[v];
                    powers[v].push(next);
                }
                t *= &powers[v][e];
            }
            match buckets.iter_mut().find(|(d, _)| d == c.denom()) {
                Some((_, acc)) => *acc += t,
                None => buckets.push((c.denom().clone(), t)),
            }
        }
        buckets
            .into_iter()
            .map(|(d, n)| Rational::new(n, d))
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn evaluate(&self, point: &HashMap<String, Rational>) -> Result<Rational, PolyError> {
        let values = self
            .ring
            .variables()
            .iter()
            .map(|v| {
                point
                    .get(v)
                    .cloned()
                    .ok_or_else(|| PolyError::MissingAssignment(v.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.evaluate_at(&values)
    }

    /// Nonzero rational `c` with `self == c * other`, if one exists.
    pub fn scalar_ratio(&self, other: &Polynomial) -> Option<Rational> {
        let (m, c_other) = other.leading_term()?;
        let c = self.coefficient(m) / c_other;
        if c.is_zero() {
            return None;
        }
        (*self == other.scale(&c)).then_some(c)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn max_abs_coefficient(&self) -> Rational {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

fn accumulate(acc: &mut HashMap<Monomial, Rational>, m: Monomial, c: Rational) {
    match acc.entry(m) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

fn add_into(terms: &mut BTreeMap<Monomial, Rational>, m: &Monomial, c: &Rational) {
    if let Some(existing) = terms.get_mut(m) {
        *existing += c;
        if existing.is_zero() {
            terms.remove(m);
        }
    } else if !c.is_zero() {
        terms.insert(m.clone(), c.clone());
    }
}

// Operator forms panic on ring mismatch; use the `checked_*` methods when the
// rings are not known to agree.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, RingSignature};

    fn mql_vars() -> Vec<Polynomial> {
        let r = RingSignature::mql();
        (0..r.len()).map(|i| Polynomial::var_at(&r, i)).collect()
    }

    #[test]
    fn zero_is_empty() {
        let r = RingSignature::el();
        let z = Polynomial::zero(&r);
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
        assert_eq!(z.total_degree(), None);
        assert!(Polynomial::constant(&r, rat(0, 1)).is_zero());
    }

    #[test]
    fn add_identity_and_cancellation() {
        let v = mql_vars();
        let r = RingSignature::mql();
        let x1sq = &v[0] * &v[0];
        assert_eq!(&x1sq + &Polynomial::zero(&r), x1sq);
        assert!((&x1sq + &(-&x1sq)).is_zero());
    }

    #[test]
    fn mul_by_one() {
        let v = mql_vars();
        let p = &(&v[0] * &v[3]) + &v[6];
        assert_eq!(&p * &Polynomial::one(p.ring()), p);
    }

    #[test]
    fn square_of_sum_minus_pairs() {
        // (x1+x2+x3)^2 - 2(x1x2+x2x3+x3x1) = x1^2+x2^2+x3^2, term by term
        let v = mql_vars();
        let s = &(&v[0] + &v[1]) + &v[2];
        let pairs = &(&(&v[0] * &v[1]) + &(&v[1] * &v[2])) + &(&v[2] * &v[0]);
        let lhs = &s.pow(2) - &pairs.scale(&rat(2, 1));
        let rhs = &(&(&v[0] * &v[0]) + &(&v[1] * &v[1])) + &(&v[2] * &v[2]);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.num_terms(), 3);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Polynomial::one(&RingSignature::mql());
        let b = Polynomial::one(&RingSignature::el());
        assert!(matches!(
            a.checked_add(&b),
            Err(PolyError::RingMismatch { .. })
        ));
        assert!(matches!(
            a.checked_mul(&b),
            Err(PolyError::RingMismatch { .. })
        ));
    }

    #[test]
    fn missing_image_and_assignment() {
        let v = mql_vars();
        let images: HashMap<String, Polynomial> =
            [("x1".to_string(), v[0].clone())].into_iter().collect();
        assert_eq!(
            v[0].substitute(&images).unwrap_err(),
            PolyError::MissingImage("x2".into())
        );
        let point: HashMap<String, Rational> =
            [("x1".to_string(), rat(1, 1))].into_iter().collect();
        assert_eq!(
            v[0].evaluate(&point).unwrap_err(),
            PolyError::MissingAssignment("x2".into())
        );
    }

    #[test]
    fn identity_substitution() {
        let v = mql_vars();
        let p = &(&v[0].pow(3) * &v[4]) - &v[6].scale(&rat(5, 7));
        assert_eq!(p.substitute_all(&v).unwrap(), p);
    }

    #[test]
    fn collect_in_splits_by_power() {
        let v = mql_vars();
        let p = &(&v[0].pow(2) * &v[1]) + &(&v[0] + &v[2]);
        let parts = p.collect_in(0);
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[&2], v[1]);
        assert_eq!(parts[&0], v[2]);
        assert_eq!(parts[&1], Polynomial::one(p.ring()));
    }

    #[test]
    fn scalar_ratio_detects_multiples() {
        let v = mql_vars();
        let p = &v[0] - &v[1];
        assert_eq!(p.scale(&rat(-3, 2)).scalar_ratio(&p), Some(rat(-3, 2)));
        assert_eq!((&p + &v[2]).scalar_ratio(&p), None);
    }
}
