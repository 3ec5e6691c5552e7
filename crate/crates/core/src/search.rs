//! Integer search on the biquadratic
//! `4*e11^2 + (e01^2 + l^2 - e10^2)^2 - 8*e01^2*l^2 = 0`
//! and on the Heron equation for integer triangles.

use std::fmt;
use std::thread;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest accepted search bound; keeps every intermediate inside i128.
pub const MAX_BOUND: u32 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("bound must be at least 1")]
    ZeroBound,
    #[error("bound {0} exceeds the supported maximum {MAX_BOUND}")]
    BoundTooLarge(u32),
    #[error("shard count must be at least 1")]
    ZeroShards,
    #[error("({0}, {1}, {2}, {3}) is not a solution")]
    NotASolution(i64, i64, i64, i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub e10: i64,
    pub e01: i64,
    pub e11: i64,
    pub l: i64,
    pub positive: bool,
    pub primitive: bool,
}

impl SolutionRecord {
    pub fn values(&self) -> (i64, i64, i64, i64) {
        (self.e10, self.e01, self.e11, self.l)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

impl fmt::Display for SolutionRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.e10, self.e01, self.e11, self.l)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HeronRecord {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub s: u64,
}

impl fmt::Display for HeronRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{};{})", self.a, self.b, self.c, self.s)
    }
}

fn biquadratic_i128(e10: i128, e01: i128, e11: i128, l: i128) -> Option<i128> {
    let t = e01
        .checked_mul(e01)?
        .checked_add(l.checked_mul(l)?)?
        .checked_sub(e10.checked_mul(e10)?)?;
    let sq = e11.checked_mul(e11)?.checked_mul(4)?;
    let cross = e01.checked_mul(l)?;
    sq.checked_add(t.checked_mul(t)?)?
        .checked_sub(cross.checked_mul(cross)?.checked_mul(8)?)
}

/// Exact test of the biquadratic in arbitrary precision.
pub fn is_solution_big(e10: &BigInt, e01: &BigInt, e11: &BigInt, l: &BigInt) -> bool {
    let t = e01 * e01 + l * l - e10 * e10;
    let v = BigInt::from(4) * e11 * e11 + &t * &t - BigInt::from(8) * e01 * e01 * l * l;
    v.is_zero()
}

/// Exact test of the biquadratic.
pub fn is_solution(e10: i64, e01: i64, e11: i64, l: i64) -> bool {
    match biquadratic_i128(e10 as i128, e01 as i128, e11 as i128, l as i128) {
        Some(v) => v == 0,
        None => is_solution_big(&e10.into(), &e01.into(), &e11.into(), &l.into()),
    }
}

/// Largest alpha with alpha | gcd(e10, e01, l) and alpha^2 | e11, for
/// non-negative inputs not all zero: prime by prime,
/// v_p(alpha) = min(v_p(g), floor(v_p(e11) / 2)).
fn weighted_gcd(e10: u64, e01: u64, e11: u64, l: u64) -> u64 {
    let valuation = |mut n: u64, p: u64| {
        let mut k = 0u32;
        while n.is_multiple_of(p) {
            n /= p;
            k += 1;
        }
        (k, n)
    };
    let mut g = e10.gcd(&e01).gcd(&l);
    let mut alpha = 1u64;
    let mut p = 2u64;
    while g > 1 {
        if p.saturating_mul(p) > g {
            p = g;
        }
        let (kg, rest) = valuation(g, p);
        if kg > 0 {
            let ke = if e11 == 0 {
                u32::MAX
            } else {
                valuation(e11, p).0 / 2
            };
            alpha *= p.pow(kg.min(ke));
            g = rest;
        }
        p += 1;
    }
    alpha
}

fn record(e10: i64, e01: i64, e11: i64, l: i64) -> SolutionRecord {
    let all_zero = e10 == 0 && e01 == 0 && e11 == 0 && l == 0;
    let primitive = !all_zero && weighted_gcd(e10 as u64, e01 as u64, e11 as u64, l as u64) == 1;
    SolutionRecord {
        e10,
        e01,
        e11,
        l,
        positive: e10 > 0 && e01 > 0 && e11 > 0 && l > 0,
        primitive,
    }
}

/// Moves a solution to the non-negative orthant and, when `reduce` is set,
/// divides out the weighted scaling (alpha on e10, e01, l; alpha^2 on e11).
/// Returns the record and the alpha that was divided out (1 when not reducing).
pub fn canonicalize(
    e10: i64,
    e01: i64,
    e11: i64,
    l: i64,
    reduce: bool,
) -> Result<(SolutionRecord, u64), SearchError> {
    if !is_solution(e10, e01, e11, l) {
        return Err(SearchError::NotASolution(e10, e01, e11, l));
    }
    let [a, b, c, d] = [e10, e01, e11, l].map(|v| v.unsigned_abs());
    if !reduce || (a == 0 && b == 0 && c == 0 && d == 0) {
        return Ok((record(a as i64, b as i64, c as i64, d as i64), 1));
    }
    let alpha = weighted_gcd(a, b, c, d);
    let r = record(
        (a / alpha) as i64,
        (b / alpha) as i64,
        (c / (alpha * alpha)) as i64,
        (d / alpha) as i64,
    );
    Ok((r, alpha))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub bound: u32,
    pub positive_only: bool,
    pub primitive_only: bool,
    pub shards: usize,
}

impl SearchOptions {
    pub fn new(bound: u32) -> Self {
        SearchOptions {
            bound,
            positive_only: false,
            primitive_only: false,
            shards: 1,
        }
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.bound == 0 {
            return Err(SearchError::ZeroBound);
        }
        if self.bound > MAX_BOUND {
            return Err(SearchError::BoundTooLarge(self.bound));
        }
        if self.shards == 0 {
            return Err(SearchError::ZeroShards);
        }
        Ok(())
    }

    fn keep(&self, r: &SolutionRecord) -> bool {
        (!self.positive_only || r.positive) && (!self.primitive_only || r.primitive)
    }
}

/// All solutions with the given l, ordered by (e01, e10).
fn search_row(l: i64, opts: &SearchOptions) -> Vec<SolutionRecord> {
    let bound = opts.bound as i64;
    let mut out = Vec::new();
    let l2 = (l as i128) * (l as i128);
    for e01 in 0..=bound {
        let e01_2 = (e01 as i128) * (e01 as i128);
        let big_t = 8 * e01_2 * l2;
        for e10 in 0..=bound {
            let t = e01_2 + l2 - (e10 as i128) * (e10 as i128);
            let s = big_t - t * t;
            if s < 0 || s % 4 != 0 {
                continue;
            }
            let q = s / 4;
            let r = q.sqrt();
            if r * r != q {
                continue;
            }
            let rec = record(e10, e01, r as i64, l);
            if opts.keep(&rec) {
                out.push(rec);
            }
        }
    }
    out
}

/// Enumerates solutions with 0 <= e10, e01, l <= bound in (l, e01, e10)
/// order, calling `emit` for each. Rows of the grid are spread over
/// `opts.shards` threads a batch at a time and emitted in order, so the
/// output never depends on the shard count.
pub fn search_each(
    opts: &SearchOptions,
    mut emit: impl FnMut(SolutionRecord),
) -> Result<(), SearchError> {
    opts.validate()?;
    let bound = opts.bound as i64;
    let shards = opts.shards as i64;
    let mut start = 0i64;
    while start <= bound {
        let end = (start + shards).min(bound + 1);
        let rows: Vec<Vec<SolutionRecord>> = if shards == 1 {
            vec![search_row(start, opts)]
        } else {
            thread::scope(|scope| {
                let handles: Vec<_> = (start..end)
                    .map(|l| scope.spawn(move || search_row(l, opts)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("search shard panicked"))
                    .collect()
            })
        };
        for rec in rows.into_iter().flatten() {
            emit(rec);
        }
        start = end;
    }
    Ok(())
}

/// Collecting form of [`search_each`].
pub fn search(opts: &SearchOptions) -> Result<Vec<SolutionRecord>, SearchError> {
    let mut out = Vec::new();
    search_each(opts, |r| out.push(r))?;
    Ok(out)
}

/// Integer triangles a <= b <= c <= bound with integer area s, in (a, b, c) order.
pub fn heron_each(bound: u32, mut emit: impl FnMut(HeronRecord)) -> Result<(), SearchError> {
    if bound == 0 {
        return Err(SearchError::ZeroBound);
    }
    if bound > MAX_BOUND {
        return Err(SearchError::BoundTooLarge(bound));
    }
    let n = bound as i128;
    for a in 1..=n {
        for b in a..=n {
            for c in b..=n {
                let t = a * a + b * b - c * c;
                let x = 4 * a * a * b * b - t * t;
                if x <= 0 || x % 16 != 0 {
                    continue;
                }
                let q = x / 16;
                let s = q.sqrt();
                if s * s == q {
                    emit(HeronRecord {
                        a: a as u64,
                        b: b as u64,
                        c: c as u64,
                        s: s as u64,
                    });
                }
            }
        }
    }
    Ok(())
}

pub fn heron_search(bound: u32) -> Result<Vec<HeronRecord>, SearchError> {
    let mut out = Vec::new();
    heron_each(bound, |r| out.push(r))?;
    Ok(out)
}

/// 16*s^2 against the product form (a+b+c)(-a+b+c)(a-b+c)(a+b-c).
pub fn heron_area_holds(r: &HeronRecord) -> bool {
    let [a, b, c, s] = [r.a, r.b, r.c, r.s].map(BigInt::from);
    let prod = (&a + &b + &c) * (-&a + &b + &c) * (&a - &b + &c) * (&a + &b - &c);
    BigInt::from(16) * &s * &s == prod
}

/// The two-squares shape of a solution: (2*e11)^2 + (e01^2+l^2-e10^2)^2 = 8*e01^2*l^2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoSquares {
    pub first: String,
    pub second: String,
    pub rhs: String,
    pub holds: bool,
}

impl fmt::Display for TwoSquares {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.holds { "==" } else { "!=" };
        write!(f, "{}+{}{op}{}", self.first, self.second, self.rhs)
    }
}

/// Writes a biquadratic solution in the same sum-of-two-squares shape as
/// the Heron equation (4s)^2 + (a^2+b^2-c^2)^2 = (2ab)^2.
pub fn compare_heron_biquadratic(r: &SolutionRecord) -> TwoSquares {
    let [e10, e01, e11, l] = [r.e10, r.e01, r.e11, r.l].map(BigInt::from);
    let first = (BigInt::from(2) * &e11).pow(2);
    let second = (&e01 * &e01 + &l * &l - &e10 * &e10).pow(2);
    let rhs = BigInt::from(8) * &e01 * &e01 * &l * &l;
    TwoSquares {
        holds: &first + &second == rhs,
        first: first.abs().to_string(),
        second: second.to_string(),
        rhs: rhs.to_string(),
    }
}
