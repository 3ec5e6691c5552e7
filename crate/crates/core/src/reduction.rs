//! Elimination of the E-form system down to one biquadratic equation in
//! (E10, E01, E11, L), and the lift of its solutions back to full E-form points.
//!
//! Everything stays in the E-form ring; eliminated variables simply stop
//! occurring.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::parse::parse_expression;
use crate::poly::{int, rat, Polynomial, Rational, Ring, RingSignature, WeightSystem};
use crate::report::{Check, VerificationReport};
use crate::system::EFormSystem;

// EL variable indices.
pub const E10: usize = 0;
pub const E20: usize = 1;
pub const E30: usize = 2;
pub const E01: usize = 3;
pub const E02: usize = 4;
pub const E03: usize = 5;
pub const E21: usize = 6;
pub const E11: usize = 7;
pub const E12: usize = 8;
pub const L: usize = 9;

fn el(text: &str) -> Polynomial {
    parse_expression(text, &RingSignature::el()).expect("built-in EL transcription parses")
}

fn ring() -> Ring {
    RingSignature::el()
}

/// Which reading of the solved E21/E12 pair to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Solve the two linear equations ourselves.
    #[default]
    Derived,
    /// Use the printed closed forms as transcribed.
    Printed,
}

/// Expressions for E20, E02, E03, E30 in the remaining variables.
#[derive(Debug, Clone, PartialEq)]
pub struct EliminationMap {
    pub images: Vec<(usize, Polynomial)>,
}

impl EliminationMap {
    pub fn new() -> Self {
        EliminationMap {
            images: vec![
                (E20, el("1/2*E10^2-1/2*L^2")),
                (E02, el("1/2*E01^2-L^2")),
                (
                    E03,
                    el("-1/3*E21-1/6*E01*E10^2-5/6*E01*L^2+1/6*E01^3+1/3*E10*E11"),
                ),
                (
                    E30,
                    el("-1/3*E12-1/6*E10*E01^2-1/2*E10*L^2+1/6*E10^3+1/3*E01*E11"),
                ),
            ],
        }
    }

    pub fn image(&self, var: usize) -> Option<&Polynomial> {
        self.images.iter().find(|(v, _)| *v == var).map(|(_, p)| p)
    }

    /// Substitutes all four images; the result no longer involves E20, E02, E03, E30.
    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        p.substitute_some(&self.images).expect("EL polynomial")
    }
}

impl Default for EliminationMap {
    fn default() -> Self {
        Self::new()
    }
}

/// How a derived polynomial relates to a transcribed one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Comparison {
    Match,
    SignFlip,
    Scalar(String),
    Mismatch,
}

impl Comparison {
    pub fn of(derived: &Polynomial, printed: &Polynomial) -> Self {
        if derived == printed {
            return Comparison::Match;
        }
        match derived.scalar_ratio(printed) {
            Some(c) if c == int(-1) => Comparison::SignFlip,
            Some(c) => Comparison::Scalar(c.to_string()),
            None => Comparison::Mismatch,
        }
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Comparison::Match => write!(f, "match"),
            Comparison::SignFlip => write!(f, "sign-flip"),
            Comparison::Scalar(c) => write!(f, "scalar {c}"),
            Comparison::Mismatch => write!(f, "mismatch"),
        }
    }
}

/// The four equations left after the elimination, each in
/// (E10, E01, E11, E21, E12, L).
#[derive(Debug, Clone, PartialEq)]
pub struct MidpointEquations {
    /// Linear in E21, E12 with leading part E10*E21 + E01*E12.
    pub linear_first: Polynomial,
    /// Linear in E21, E12 with leading part -E01*E21 + E10*E12.
    pub linear_second: Polynomial,
    /// Free of E21, E12: the biquadratic equation.
    pub biquadratic: Polynomial,
    /// Quadratic in E21, E12.
    pub remaining: Polynomial,
}

impl MidpointEquations {
    pub fn named(&self) -> [(&'static str, &Polynomial); 4] {
        [
            ("linear-first", &self.linear_first),
            ("linear-second", &self.linear_second),
            ("biquadratic", &self.biquadratic),
            ("remaining", &self.remaining),
        ]
    }
}

/// Hand transcriptions of the four midpoint equations, moved to one side.
pub fn printed_midpoint_equations() -> MidpointEquations {
    MidpointEquations {
        linear_first: el("E10*E21+E01*E12
            -(1/4*E11*E10^2+1/4*E01^2*E11+3/4*E11*L^2-E10*E01*L^2)"),
        linear_second: el("-E01*E21+E10*E12
            -(1/8*E10^4-1/8*E01^4-3/4*E10^2*L^2+E01^2*L^2-3/8*L^4)"),
        biquadratic: el("4*E11^2+E10^4+E01^4-2*E10^2*E01^2-2*L^2*E10^2-6*E01^2*L^2+L^4"),
        remaining: el("8*E10*E11*E21+8*E01*E11*E12-4*E21^2-4*E12^2-8*E10*E12*L^2
            -(2*E10^2*E11^2+2*E01^2*E10^2*L^2+2*E01^2*E11^2-E01^4*L^2-2*E10^4*L^2
            -8*E01*E10*E11*L^2+8*E10^2*L^4+6*E01^2*L^4-2*E11^2*L^2-2*L^6)"),
    }
}

/// The biquadratic written as a sum of squares minus 8*E01^2*L^2.
pub fn biquadratic_square_form() -> Polynomial {
    el("(2*E11)^2+(E01^2+L^2-E10^2)^2-8*E01^2*L^2")
}

/// Applies the elimination map.
pub fn stage1_reduce(p: &Polynomial) -> Polynomial {
    standard_elimination().apply(p)
}

fn standard_elimination() -> &'static EliminationMap {
    static MAP: OnceLock<EliminationMap> = OnceLock::new();
    MAP.get_or_init(EliminationMap::new)
}

/// Combines the reduced E-forms of tp5..tp8 into the midpoint equations.
pub fn derive_midpoint_equations(eform: &EFormSystem) -> MidpointEquations {
    let s: Vec<Polynomial> = (5..=8).map(|k| stage1_reduce(eform.form(k))).collect();
    let (f5, f6, f7, f8) = (&s[0], &s[1], &s[2], &s[3]);
    MidpointEquations {
        linear_first: f5.scale(&rat(-3, 2)),
        linear_second: (f6 - f7).scale(&rat(1, 4)),
        biquadratic: (f6 + f7).scale(&int(-2)),
        remaining: f8.scale(&int(4)),
    }
}

/// E21 = e21 / denominator, E12 = e12 / denominator, all polynomial in
/// (E10, E01, E11, L).
#[derive(Debug, Clone, PartialEq)]
pub struct LinearSolution {
    pub e21: Polynomial,
    pub e12: Polynomial,
    pub denominator: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("equation {0} is not linear in E21, E12")]
    NotLinear(&'static str),
    #[error("the linear system in E21, E12 is singular")]
    Singular,
    #[error("equation {0} involves an odd power of E11")]
    OddInE11(&'static str),
    #[error("biquadratic does not involve E11^2")]
    NoE11Square,
}

/// Splits `p = a*E21 + b*E12 + c`.
fn linear_parts(p: &Polynomial, name: &'static str) -> Result<[Polynomial; 3], ReductionError> {
    if p.degree_in(&[E21, E12]) > 1 {
        return Err(ReductionError::NotLinear(name));
    }
    let r = ring();
    let by21 = p.collect_in(E21);
    let a = by21
        .get(&1)
        .cloned()
        .unwrap_or_else(|| Polynomial::zero(&r));
    let rest = by21
        .get(&0)
        .cloned()
        .unwrap_or_else(|| Polynomial::zero(&r));
    let by12 = rest.collect_in(E12);
    let b = by12
        .get(&1)
        .cloned()
        .unwrap_or_else(|| Polynomial::zero(&r));
    let c = by12
        .get(&0)
        .cloned()
        .unwrap_or_else(|| Polynomial::zero(&r));
    Ok([a, b, c])
}

/// Solves the two linear midpoint equations for E21 and E12 by Cramer's rule.
pub fn solve_linear_e21_e12(mid: &MidpointEquations) -> Result<LinearSolution, ReductionError> {
    let [a1, b1, c1] = linear_parts(&mid.linear_first, "linear-first")?;
    let [a2, b2, c2] = linear_parts(&mid.linear_second, "linear-second")?;
    let det = &(&a1 * &b2) - &(&a2 * &b1);
    if det.is_zero() {
        return Err(ReductionError::Singular);
    }
    // a1 E21 + b1 E12 = -c1, a2 E21 + b2 E12 = -c2
    let e21 = &(&b1 * &c2) - &(&c1 * &b2);
    let e12 = &(&a2 * &c1) - &(&a1 * &c2);
    Ok(LinearSolution {
        e21,
        e12,
        denominator: det,
    })
}

/// The printed closed forms, E21 = P21/(8D) and E12 = P12/(8D), D = E01^2+E10^2.
pub fn printed_linear_solution() -> LinearSolution {
    let eighth = rat(1, 8);
    LinearSolution {
        e21: el("2*E10^3*E11+2*E01^2*E10*E11-E01*E10^4+E01^5+6*E10*E11*L^2
            -2*E01*E10^2*L^2-8*E01^3*L^2+3*E01*L^4")
        .scale(&eighth),
        e12: el("E01^4*E10-2*E01^3*E11-2*E01*E10^2*E11-E10^5+6*E10^3*L^2
            -6*E01*E11*L^2+3*E10*L^4")
        .scale(&eighth),
        denominator: el("E01^2+E10^2"),
    }
}

impl LinearSolution {
    /// Compares numerators after bringing both to the same denominator.
    pub fn compare(&self, other: &LinearSolution) -> (Comparison, Comparison) {
        let a21 = &self.e21 * &other.denominator;
        let b21 = &other.e21 * &self.denominator;
        let a12 = &self.e12 * &other.denominator;
        let b12 = &other.e12 * &self.denominator;
        (Comparison::of(&a21, &b21), Comparison::of(&a12, &b12))
    }

    /// (E21, E12) at a point of the E-form ring; `None` on the denominator locus.
    pub fn evaluate_at(&self, point: &[Rational]) -> Option<(Rational, Rational)> {
        let den = self.denominator.evaluate_at(point).ok()?;
        if den.is_zero() {
            return None;
        }
        let e21 = self.e21.evaluate_at(point).ok()? / &den;
        let e12 = self.e12.evaluate_at(point).ok()? / &den;
        Some((e21, e12))
    }
}

/// `numerator / denominator^power`, with the denominator a fixed nonzero
/// polynomial. Zero iff the numerator is.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalizedPolynomial {
    pub numerator: Polynomial,
    pub denominator: Polynomial,
    pub power: u32,
}

impl LocalizedPolynomial {
    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Cross-multiplied equality.
    pub fn equals(&self, other: &LocalizedPolynomial) -> bool {
        let lhs = &self.numerator * &other.denominator.pow(other.power);
        let rhs = &other.numerator * &self.denominator.pow(self.power);
        lhs == rhs
    }

    pub fn evaluate_at(&self, point: &[Rational]) -> Option<Rational> {
        let den = self
            .denominator
            .evaluate_at(point)
            .ok()?
            .pow(self.power as i32);
        if den.is_zero() {
            return None;
        }
        Some(self.numerator.evaluate_at(point).ok()? / den)
    }
}

/// Splits the biquadratic as `c*(E11^2 - R)` and returns R.
pub fn e11_square_rhs(biquadratic: &Polynomial) -> Result<Polynomial, ReductionError> {
    let parts = biquadratic.collect_in(E11);
    if parts.keys().any(|&k| k % 2 == 1) {
        return Err(ReductionError::OddInE11("biquadratic"));
    }
    if parts.keys().any(|&k| k > 2) {
        return Err(ReductionError::NotLinear("biquadratic"));
    }
    let c = parts
        .get(&2)
        .and_then(|p| p.scalar_ratio(&Polynomial::one(&ring())))
        .ok_or(ReductionError::NoE11Square)?;
    let rest = parts
        .get(&0)
        .cloned()
        .unwrap_or_else(|| Polynomial::zero(&ring()));
    Ok(rest.scale(&(-c.recip())))
}

/// Transcribed right-hand side of the biquadratic solved for E11^2.
pub fn printed_e11_square_rhs() -> Polynomial {
    el("1/2*E01^2*E10^2-1/4*E10^4-1/4*E01^4+1/2*E10^2*L^2+3/2*E01^2*L^2-1/4*L^4")
}

/// Replaces E21 and E12 by the solution and clears denominators, then
/// reduces modulo `E11^2 - r`.
pub fn stage2_reduce(p: &Polynomial, sol: &LinearSolution, r: &Polynomial) -> LocalizedPolynomial {
    let rg = ring();
    let k = p.degree_in(&[E21, E12]);
    let mut numerator = Polynomial::zero(&rg);
    let den_pows: Vec<Polynomial> = (0..=k).map(|i| sol.denominator.pow(i)).collect();
    let e21_pows: Vec<Polynomial> = (0..=k).map(|i| sol.e21.pow(i)).collect();
    let e12_pows: Vec<Polynomial> = (0..=k).map(|i| sol.e12.pow(i)).collect();
    for (a, pa) in p.collect_in(E21) {
        for (b, pab) in pa.collect_in(E12) {
            let (a32, b32) = (a as u32, b as u32);
            let factor = &(&e21_pows[a as usize] * &e12_pows[b as usize])
                * &den_pows[(k - a32 - b32) as usize];
            numerator = &numerator + &(&pab * &factor);
        }
    }
    LocalizedPolynomial {
        numerator: reduce_e11(&numerator, r),
        denominator: sol.denominator.clone(),
        power: k,
    }
}

/// Remainder of `p` modulo `E11^2 - r`, r free of E11.
pub fn reduce_e11(p: &Polynomial, r: &Polynomial) -> Polynomial {
    let rg = ring();
    let e11 = Polynomial::var_at(&rg, E11);
    let mut out = Polynomial::zero(&rg);
    for (j, coeff) in p.collect_in(E11) {
        let j = j as u32;
        let mut term = &coeff * &r.pow(j / 2);
        if j % 2 == 1 {
            term = &term * &e11;
        }
        out = &out + &term;
    }
    out
}

/// Result of running the whole elimination on a system.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub midpoint: MidpointEquations,
    pub solution: LinearSolution,
    pub e11_square: Polynomial,
    pub report: VerificationReport,
}

fn stage2_targets(eform: &EFormSystem, mid: &MidpointEquations) -> Vec<(String, Polynomial)> {
    let mut targets = vec![("remaining".to_string(), mid.remaining.clone())];
    targets.extend(
        eform
            .kernel
            .iter()
            .map(|(n, q)| (n.clone(), stage1_reduce(q))),
    );
    targets
}

fn annihilation_checks(
    targets: &[(String, Polynomial)],
    sol: &LinearSolution,
    r: &Polynomial,
    prefix: &str,
) -> Vec<(Check, LocalizedPolynomial)> {
    targets
        .par_iter()
        .map(|(name, p)| {
            let red = stage2_reduce(p, sol, r);
            let check = Check::zero(format!("{prefix}/{name}"), &red.numerator)
                .with_detail(format!("cleared power {}", red.power));
            (check, red)
        })
        .collect()
}

/// Runs the elimination and checks that all fifteen remaining equations
/// (the quadratic midpoint equation and the fourteen kernel polynomials)
/// vanish identically once E21, E12 are solved for and E11^2 is replaced.
///
/// With [`Convention::Printed`], the printed closed forms drive the
/// substitution instead of the derived ones.
pub fn reduce_system(
    eform: &EFormSystem,
    convention: Convention,
) -> Result<Reduction, ReductionError> {
    let mut report = VerificationReport::new();

    for k in 1..=4 {
        report.push(Check::zero(
            format!("stage1/eform-tp{k}"),
            &stage1_reduce(eform.form(k)),
        ));
    }

    let mid = derive_midpoint_equations(eform);
    let printed = printed_midpoint_equations();
    for ((name, d), (_, p)) in mid.named().into_iter().zip(printed.named()) {
        report.observe(format!("compare/{name}"), Comparison::of(d, p).to_string());
    }
    report.push(Check::equal(
        "biquadratic/square-form",
        &mid.biquadratic,
        &biquadratic_square_form(),
    ));
    let w = WeightSystem::el();
    for (name, p) in mid.named() {
        let deg = w.weighted_degree(p).expect("EL weights");
        report.observe(format!("weight/{name}"), deg.to_string());
    }

    let derived = solve_linear_e21_e12(&mid)?;
    let printed_sol = printed_linear_solution();
    let (c21, c12) = derived.compare(&printed_sol);
    report.observe("compare/e21-solution", c21.to_string());
    report.observe("compare/e12-solution", c12.to_string());
    report.push(Check::zero(
        "solve/denominator",
        &(&derived.denominator - &printed_sol.denominator),
    ));

    let r = e11_square_rhs(&mid.biquadratic)?;
    report.observe(
        "compare/e11-square",
        Comparison::of(&r, &printed_e11_square_rhs()).to_string(),
    );
    let e11sq = Polynomial::var_at(&ring(), E11).pow(2);
    report.push(Check::equal(
        "biquadratic/e11-square",
        &mid.biquadratic,
        &(&e11sq - &r).scale(&int(4)),
    ));

    let sol = match convention {
        Convention::Derived => derived.clone(),
        Convention::Printed => printed_sol.clone(),
    };

    // The linear equations vanish by construction under the derived solution.
    for (name, p) in [
        ("linear-first", &mid.linear_first),
        ("linear-second", &mid.linear_second),
    ] {
        let red = stage2_reduce(p, &sol, &r);
        report.push(Check::zero(format!("solve/{name}"), &red.numerator));
    }

    let targets = stage2_targets(eform, &mid);
    for (check, _) in annihilation_checks(&targets, &sol, &r, "stage2") {
        report.push(check);
    }

    if convention == Convention::Derived {
        // Same run with the printed closed forms, as a non-gating observation.
        let alt = annihilation_checks(&targets, &printed_sol, &r, "printed");
        let nonzero = alt.iter().filter(|(c, _)| !c.passed()).count();
        report.observe(
            "printed-solution/stage2",
            format!(
                "{nonzero} of {} equations leave a nonzero residue",
                alt.len()
            ),
        );
    }

    Ok(Reduction {
        midpoint: mid,
        solution: sol,
        e11_square: r,
        report,
    })
}

/// Stage-2 residues of the fifteen targets with an arbitrary E11^2 replacement,
/// used to show that a wrong replacement is detected.
pub fn stage2_with_e11_square(
    eform: &EFormSystem,
    r: &Polynomial,
) -> Result<VerificationReport, ReductionError> {
    let mid = derive_midpoint_equations(eform);
    let sol = solve_linear_e21_e12(&mid)?;
    let targets = stage2_targets(eform, &mid);
    Ok(VerificationReport {
        checks: annihilation_checks(&targets, &sol, r, "stage2")
            .into_iter()
            .map(|(c, _)| c)
            .collect(),
        observations: Vec::new(),
    })
}

/// Ten E-form values, E10..L in ring order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EFormPoint {
    #[serde(rename = "E10")]
    pub e10: String,
    #[serde(rename = "E20")]
    pub e20: String,
    #[serde(rename = "E30")]
    pub e30: String,
    #[serde(rename = "E01")]
    pub e01: String,
    #[serde(rename = "E02")]
    pub e02: String,
    #[serde(rename = "E03")]
    pub e03: String,
    #[serde(rename = "E21")]
    pub e21: String,
    #[serde(rename = "E11")]
    pub e11: String,
    #[serde(rename = "E12")]
    pub e12: String,
    #[serde(rename = "L")]
    pub l: String,
}

impl EFormPoint {
    fn from_values(v: &[String]) -> Self {
        EFormPoint {
            e10: v[0].clone(),
            e20: v[1].clone(),
            e30: v[2].clone(),
            e01: v[3].clone(),
            e02: v[4].clone(),
            e03: v[5].clone(),
            e21: v[6].clone(),
            e11: v[7].clone(),
            e12: v[8].clone(),
            l: v[9].clone(),
        }
    }
}

/// An integer point of the biquadratic lifted to a point of the whole system.
/// Big integers and rationals are strings so JSON consumers keep every digit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftResult {
    pub rational_point: EFormPoint,
    pub scale_alpha: String,
    pub integer_point: EFormPoint,
    /// Names of the equations that vanish at `integer_point` (all 22 on success).
    pub equations_checked: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("point is not on the biquadratic (value {0})")]
    NotOnVariety(String),
    #[error("E01^2 + E10^2 vanishes; E21 and E12 are undetermined")]
    DenominatorLocus,
    #[error("lifted point fails {0}")]
    EquationFails(String),
}

/// Lifts an integer solution (e10, e01, e11, l) of the biquadratic.
///
/// The rational E-form point is scaled by alpha^weight with alpha the least
/// common multiple of its denominators, then every equation of `eform` is
/// evaluated exactly at the integer point.
pub fn lift_solution(
    eform: &EFormSystem,
    e10: &BigInt,
    e01: &BigInt,
    e11: &BigInt,
    l: &BigInt,
) -> Result<LiftResult, LiftError> {
    let q = |n: &BigInt| Rational::from_integer(n.clone());
    let mut point = vec![Rational::zero(); 10];
    point[E10] = q(e10);
    point[E01] = q(e01);
    point[E11] = q(e11);
    point[L] = q(l);

    let value = biquadratic_square_form()
        .evaluate_at(&point)
        .expect("ten values");
    if !value.is_zero() {
        return Err(LiftError::NotOnVariety(value.to_string()));
    }
    let (v21, v12) = derived_solution()
        .evaluate_at(&point)
        .ok_or(LiftError::DenominatorLocus)?;
    point[E21] = v21;
    point[E12] = v12;
    let elim = standard_elimination();
    for (var, image) in &elim.images {
        point[*var] = image.evaluate_at(&point).expect("ten values");
    }

    let alpha = point
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let weights = WeightSystem::el();
    let names = RingSignature::el();
    let scaled: Vec<Rational> = point
        .iter()
        .zip(names.variables())
        .map(|(v, name)| {
            let w = weights.weight(name).expect("EL weight");
            v * Rational::from_integer(num_traits::pow(alpha.clone(), w as usize))
        })
        .collect();
    debug_assert!(scaled.iter().all(|v| v.is_integer()));

    let equations = eform.equations();
    let vanishes: Vec<bool> = equations
        .par_iter()
        .map(|(_, eq)| eq.evaluate_at(&scaled).expect("ten values").is_zero())
        .collect();
    if let Some(i) = vanishes.iter().position(|ok| !ok) {
        return Err(LiftError::EquationFails(equations[i].0.clone()));
    }
    let checked = equations.len();

    let show = |vs: &[Rational]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>();
    Ok(LiftResult {
        rational_point: EFormPoint::from_values(&show(&point)),
        scale_alpha: alpha.to_string(),
        integer_point: EFormPoint::from_values(&show(&scaled)),
        equations_checked: checked,
    })
}

fn derived_solution() -> &'static LinearSolution {
    static SOL: OnceLock<LinearSolution> = OnceLock::new();
    SOL.get_or_init(|| {
        let sys = crate::system::CuboidSystem::standard().expect("embedded corpus");
        solve_linear_e21_e12(&derive_midpoint_equations(&sys.eform)).expect("solvable")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::CuboidSystem;

    fn eform() -> EFormSystem {
        CuboidSystem::standard().unwrap().eform
    }

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn elimination_kills_first_four() {
        let e = eform();
        for k in 1..=4 {
            assert!(stage1_reduce(e.form(k)).is_zero(), "tp{k}");
        }
        let s = stage1_reduce(e.form(8));
        for v in [E20, E02, E03, E30] {
            assert!(!s.involves(v));
        }
    }

    #[test]
    fn midpoint_comparisons() {
        let mid = derive_midpoint_equations(&eform());
        let p = printed_midpoint_equations();
        assert_eq!(
            Comparison::of(&mid.linear_first, &p.linear_first),
            Comparison::Match
        );
        assert_eq!(
            Comparison::of(&mid.linear_second, &p.linear_second),
            Comparison::Match
        );
        assert_eq!(
            Comparison::of(&mid.biquadratic, &p.biquadratic),
            Comparison::Match
        );
        assert_eq!(
            Comparison::of(&mid.remaining, &p.remaining),
            Comparison::SignFlip
        );
        assert_eq!(mid.biquadratic, biquadratic_square_form());
    }

    #[test]
    fn solution_compare_and_values() {
        let mid = derive_midpoint_equations(&eform());
        let sol = solve_linear_e21_e12(&mid).unwrap();
        assert_eq!(sol.denominator, el("E10^2+E01^2"));
        let (c21, c12) = sol.compare(&printed_linear_solution());
        assert_eq!(c21, Comparison::Match);
        assert_eq!(c12, Comparison::SignFlip);
        let mut pt = vec![int(0); 10];
        pt[E10] = int(2);
        pt[E01] = int(1);
        pt[E11] = int(1);
        pt[L] = int(1);
        assert_eq!(sol.evaluate_at(&pt), Some((rat(1, 10), rat(-1, 5))));
    }

    #[test]
    fn e11_square() {
        let mid = derive_midpoint_equations(&eform());
        assert_eq!(
            e11_square_rhs(&mid.biquadratic).unwrap(),
            printed_e11_square_rhs()
        );
        assert_eq!(
            e11_square_rhs(&el("E11^3")).unwrap_err(),
            ReductionError::OddInE11("biquadratic")
        );
    }

    #[test]
    fn reduce_e11_is_remainder() {
        let r = el("E10^2+L");
        let p = el("E11^5+E11^2*E01+3");
        assert_eq!(reduce_e11(&p, &r), el("E11*(E10^2+L)^2+(E10^2+L)*E01+3"));
    }

    #[test]
    fn lift_small_point() {
        let lift = lift_solution(&eform(), &bi(2), &bi(1), &bi(1), &bi(1)).unwrap();
        assert_eq!(lift.rational_point.e21, "1/10");
        assert_eq!(lift.rational_point.e12, "-1/5");
        assert_eq!(lift.equations_checked, 22);
        assert!(!lift.integer_point.e21.contains('/'));
        assert_eq!(
            lift_solution(&eform(), &bi(2), &bi(1), &bi(2), &bi(1)).unwrap_err(),
            LiftError::NotOnVariety("12".into())
        );
        assert_eq!(
            lift_solution(&eform(), &bi(0), &bi(0), &bi(0), &bi(0)).unwrap_err(),
            LiftError::DenominatorLocus
        );
    }

    #[test]
    fn full_reduction_and_negative_control() {
        let e = eform();
        let red = reduce_system(&e, Convention::Derived).unwrap();
        assert!(red.report.passed(), "{}", red.report.to_json());
        assert_eq!(
            red.report
                .checks
                .iter()
                .filter(|c| c.name.starts_with("stage2/"))
                .count(),
            15
        );
        assert_eq!(
            red.report.observation("compare/remaining"),
            Some("sign-flip")
        );
        assert_eq!(
            red.report.observation("compare/e12-solution"),
            Some("sign-flip")
        );
        assert_eq!(
            red.report.observation("printed-solution/stage2"),
            Some("15 of 15 equations leave a nonzero residue")
        );

        let bumped = &red.e11_square + &Polynomial::one(&ring());
        let bad = stage2_with_e11_square(&e, &bumped).unwrap();
        assert!(!bad.passed());

        let printed = reduce_system(&e, Convention::Printed).unwrap();
        assert!(!printed.report.passed());
    }
}
