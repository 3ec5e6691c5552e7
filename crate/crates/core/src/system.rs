//! The cuboid polynomials, their multisymmetric factor generators, the
//! E-form system and the substitution homomorphism `phi` from the E-form ring
//! to the multisymmetric subring of Q[x1,x2,x3,d1,d2,d3,L].

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::corpus::{self, CorpusError};
use crate::parse::{parse_expression, DefinitionSet};
use crate::poly::{
    int, Permutation, Polynomial, Rational, Ring, RingSignature, WeightSystem, WeightedDegree,
};
use crate::report::{Check, VerificationReport};

fn mql(text: &str) -> Polynomial {
    parse_expression(text, &RingSignature::mql()).expect("built-in MQL transcription parses")
}

fn el(text: &str) -> Polynomial {
    parse_expression(text, &RingSignature::el()).expect("built-in EL transcription parses")
}

/// The edge/diagonal relations p0..p3 of a perfect cuboid.
#[derive(Debug, Clone, PartialEq)]
pub struct CuboidGenerators {
    pub p0: Polynomial,
    pub p1: Polynomial,
    pub p2: Polynomial,
    pub p3: Polynomial,
}

impl CuboidGenerators {
    pub fn new() -> Self {
        CuboidGenerators {
            p0: mql("x1^2+x2^2+x3^2-L^2"),
            p1: mql("x2^2+x3^2-d1^2"),
            p2: mql("x3^2+x1^2-d2^2"),
            p3: mql("x1^2+x2^2-d3^2"),
        }
    }

    /// p_i for i in 1..=3.
    pub fn indexed(&self, i: u8) -> &Polynomial {
        match i {
            1 => &self.p1,
            2 => &self.p2,
            3 => &self.p3,
            _ => panic!("p_{i} is not one of p1, p2, p3"),
        }
    }
}

impl Default for CuboidGenerators {
    fn default() -> Self {
        Self::new()
    }
}

/// The column weights w_k(i) for which tp_k = w_k(1) p1 + w_k(2) p2 + w_k(3) p3,
/// k = 2..8, written with `{}` standing for the column index.
const FACTOR_WEIGHTS: [&str; 7] = [
    "1",
    "d{}",
    "x{}",
    "x{}*d{}",
    "x{}^2",
    "d{}^2",
    "x{}^2*d{}^2",
];

/// The eight multisymmetric factor generators tp1..tp8 (index 0 holds tp1).
#[derive(Debug, Clone, PartialEq)]
pub struct FactorGenerators {
    pub tp: [Polynomial; 8],
}

impl FactorGenerators {
    /// Builds each generator by ring arithmetic on p0..p3.
    pub fn build(gens: &CuboidGenerators) -> Self {
        let ring = RingSignature::mql();
        let x = |i: u8| Polynomial::var(&ring, &format!("x{i}")).unwrap();
        let d = |i: u8| Polynomial::var(&ring, &format!("d{i}")).unwrap();
        let weight = |k: usize, i: u8| -> Polynomial {
            match k {
                2 => Polynomial::one(&ring),
                3 => d(i),
                4 => x(i),
                5 => &x(i) * &d(i),
                6 => x(i).pow(2),
                7 => d(i).pow(2),
                8 => &x(i).pow(2) * &d(i).pow(2),
                _ => unreachable!(),
            }
        };
        let combo = |k: usize| {
            (1..=3u8).fold(Polynomial::zero(&ring), |acc, i| {
                &acc + &(&weight(k, i) * gens.indexed(i))
            })
        };
        FactorGenerators {
            tp: [
                gens.p0.clone(),
                combo(2),
                combo(3),
                combo(4),
                combo(5),
                combo(6),
                combo(7),
                combo(8),
            ],
        }
    }

    /// tp_k, 1-based.
    pub fn get(&self, k: usize) -> &Polynomial {
        &self.tp[k - 1]
    }
}

/// Hand-transcribed right-hand sides of the factor generators, expanded by the
/// parser. Index 0 holds tp1.
pub fn factor_transcriptions() -> [Polynomial; 8] {
    let p = ["(x2^2+x3^2-d1^2)", "(x3^2+x1^2-d2^2)", "(x1^2+x2^2-d3^2)"];
    let mut out = vec![mql("x1^2+x2^2+x3^2-L^2")];
    for w in FACTOR_WEIGHTS {
        let text = (1..=3)
            .map(|i| format!("{}*{}", w.replace("{}", &i.to_string()), p[i - 1]))
            .collect::<Vec<_>>()
            .join("+");
        out.push(mql(&text));
    }
    out.try_into().expect("eight transcriptions")
}

/// The elementary multisymmetric polynomials, in E-form ring order
/// (e10, e20, e30, e01, e02, e03, e21, e11, e12), followed by L.
#[derive(Debug, Clone, PartialEq)]
pub struct ElementaryBasis {
    pub images: Vec<Polynomial>,
}

impl ElementaryBasis {
    pub fn new() -> Self {
        let images = [
            "x1+x2+x3",
            "x1*x2+x2*x3+x3*x1",
            "x1*x2*x3",
            "d1+d2+d3",
            "d1*d2+d2*d3+d3*d1",
            "d1*d2*d3",
            "x1*x2*d3+x2*x3*d1+x3*x1*d2",
            "x1*d2+d1*x2+x2*d3+d2*x3+x3*d1+d3*x1",
            "x1*d2*d3+x2*d3*d1+x3*d1*d2",
            "L",
        ]
        .map(mql)
        .to_vec();
        ElementaryBasis { images }
    }

    /// The image of an E-form variable, e.g. `"E21"`.
    pub fn image(&self, var: &str) -> Option<&Polynomial> {
        RingSignature::el().index_of(var).map(|i| &self.images[i])
    }

    /// The substitution homomorphism from the E-form ring into Q[M,L].
    pub fn phi(&self, q: &Polynomial) -> Polynomial {
        q.substitute_all(&self.images)
            .expect("phi is defined on the E-form ring")
    }

    /// The E-form values of a point (x1,x2,x3,d1,d2,d3,L).
    pub fn evaluate_at(&self, point: &[Rational]) -> Vec<Rational> {
        self.images
            .iter()
            .map(|e| e.evaluate_at(point).expect("point has seven coordinates"))
            .collect()
    }
}

impl Default for ElementaryBasis {
    fn default() -> Self {
        Self::new()
    }
}

/// `phi` with the built-in elementary basis.
pub fn phi(q: &Polynomial) -> Polynomial {
    static BASIS: OnceLock<ElementaryBasis> = OnceLock::new();
    BASIS.get_or_init(ElementaryBasis::new).phi(q)
}

/// The eight factor equations in E-form, plus the fourteen kernel polynomials.
#[derive(Debug, Clone, PartialEq)]
pub struct EFormSystem {
    /// `forms[k-1]` is the E-form matching tp_k (up to the stated multiplier).
    pub forms: [Polynomial; 8],
    pub kernel: Vec<(String, Polynomial)>,
}

/// Multipliers applied to the E-forms of tp1..tp8 before they were written
/// down: the last three were scaled by 3 to clear denominators.
pub const STATED_MULTIPLIERS: [i64; 8] = [1, 1, 1, 1, 1, 3, 3, 3];

impl EFormSystem {
    pub fn new(kernel: DefinitionSet) -> Self {
        EFormSystem {
            forms: eform_transcriptions(),
            kernel: kernel.into_entries(),
        }
    }

    pub fn form(&self, k: usize) -> &Polynomial {
        &self.forms[k - 1]
    }

    /// All 22 equations with display names, forms first.
    pub fn equations(&self) -> Vec<(String, &Polynomial)> {
        let mut out: Vec<(String, &Polynomial)> = self
            .forms
            .iter()
            .enumerate()
            .map(|(i, p)| (eform_name(i + 1), p))
            .collect();
        out.extend(self.kernel.iter().map(|(n, p)| (n.clone(), p)));
        out
    }

    /// Exact value of every equation at a point of the E-form ring.
    pub fn residuals_at(&self, point: &[Rational]) -> Vec<(String, Rational)> {
        self.equations()
            .into_iter()
            .map(|(n, p)| (n, p.evaluate_at(point).expect("ten coordinates")))
            .collect()
    }
}

pub fn eform_name(k: usize) -> String {
    format!("eform-tp{k}")
}

/// The E-form factor equations as displayed, moved to one side.
pub fn eform_transcriptions() -> [Polynomial; 8] {
    [
        el("E10^2-2*E20-L^2"),
        el("2*E02-4*E20-E01^2+2*E10^2"),
        el("E10*E11-3*E03-E21+3*E01*E02-E20*E01-E01^3"),
        el("E01*E11-E12-3*E30+E10*E02+E20*E10-E01^2*E10"),
        el("-E10*E21-E01*E12-E01*E30-E01^3*E10+E01^2*E11
            -E02*E11+E11*E20-E10*E03+2*E10*E01*E02"),
        // scaled by 3
        el(
            "4*E01*E10*E11-3*E01^2*E10^2+2*E10^2*E02+2*E20*E01^2-2*E10*E12
            -2*E02*E20-2*E01*E21-E11^2-12*E10*E30+6*E20^2",
        ),
        // scaled by 3
        el("4*E01*E10*E11-4*E10^2*E02-4*E20*E01^2-2*E10*E12+10*E02*E20
            -2*E01*E21-E11^2-12*E01*E03-3*E01^4-6*E02^2+12*E01^2*E02"),
        // scaled by 3
        el("9*E01*E03*E20-7*E01^2*E02*E20+2*E02*E10*E12-2*E01^2*E10*E12
            +3*E03*E10*E11+4*E01^3*E10*E11-7*E01*E02*E10*E11-6*E01*E03*E10^2
            +8*E01^2*E02*E10^2+3*E01*E11*E30-2*E01*E20*E21+E10*E12*E20
            -E02*E10^2*E20+E01*E10*E11*E20+9*E02*E10*E30-2*E02*E20^2
            +2*E01^2*E20^2-E11^2*E20-3*E12*E30+E02*E11^2-E01^2*E11^2
            -2*E02^2*E10^2+2*E01^4*E20+2*E02^2*E20-3*E03*E21
            -2*E01^3*E21+5*E01*E02*E21-6*E01^2*E10*E30-3*E01^4*E10^2"),
    ]
}

/// Everything needed for the identity checks on the unreduced system.
#[derive(Debug, Clone)]
pub struct CuboidSystem {
    pub generators: CuboidGenerators,
    pub factors: FactorGenerators,
    pub factor_transcriptions: [Polynomial; 8],
    pub basis: ElementaryBasis,
    pub eform: EFormSystem,
}

impl CuboidSystem {
    pub fn new(kernel: DefinitionSet) -> Self {
        let generators = CuboidGenerators::new();
        let factors = FactorGenerators::build(&generators);
        CuboidSystem {
            generators,
            factors,
            factor_transcriptions: factor_transcriptions(),
            basis: ElementaryBasis::new(),
            eform: EFormSystem::new(kernel),
        }
    }

    /// The system over the embedded, checksum-verified kernel corpus.
    pub fn standard() -> Result<Self, CorpusError> {
        Ok(Self::new(corpus::embedded_kernel()?))
    }

    pub fn mql_ring(&self) -> Ring {
        RingSignature::mql()
    }

    /// σ(p0) = p0 and σ(p_i) = p_{σi} for all of S3, and invariance of every
    /// factor generator and elementary polynomial.
    pub fn verify_s3_invariance(&self) -> VerificationReport {
        let mut report = VerificationReport::new();
        let g = &self.generators;
        for sigma in Permutation::all() {
            let act = |p: &Polynomial| sigma.apply(p).expect("MQL polynomial");
            report.push(Check::equal(format!("s3/p0/{sigma}"), &act(&g.p0), &g.p0));
            for i in 1..=3u8 {
                report.push(Check::equal(
                    format!("s3/p{i}/{sigma}"),
                    &act(g.indexed(i)),
                    g.indexed(sigma.image(i)),
                ));
            }
            for (k, tp) in self.factors.tp.iter().enumerate() {
                report.push(Check::equal(
                    format!("s3/tp{}/{sigma}", k + 1),
                    &act(tp),
                    tp,
                ));
            }
            for (var, e) in RingSignature::el()
                .variables()
                .iter()
                .zip(&self.basis.images)
            {
                report.push(Check::equal(format!("s3/{var}/{sigma}"), &act(e), e));
            }
        }
        report
    }

    /// Built factor generators against their transcribed expansions.
    pub fn verify_factor_expansions(&self) -> VerificationReport {
        let mut report = VerificationReport::new();
        for k in 0..8 {
            report.push(
                Check::equal(
                    format!("factor/tp{}", k + 1),
                    &self.factors.tp[k],
                    &self.factor_transcriptions[k],
                )
                .with_detail(format!("{} terms", self.factors.tp[k].num_terms())),
            );
        }
        report
    }

    /// phi of each E-form must be a nonzero rational multiple c of its factor
    /// generator, and c must equal the stated multiplier.
    pub fn verify_eform(&self) -> VerificationReport {
        let mut report = VerificationReport::new();
        let images: Vec<Polynomial> = self
            .eform
            .forms
            .par_iter()
            .map(|q| self.basis.phi(q))
            .collect();
        for (k, image) in images.iter().enumerate() {
            let tp = &self.factors.tp[k];
            let stated = int(STATED_MULTIPLIERS[k]);
            let name = eform_name(k + 1);
            let check = match image.scalar_ratio(tp) {
                Some(c) if c == stated => Check::pass(name).with_detail(format!("c={c}")),
                Some(c) => Check::fail(name, &(image - &tp.scale(&stated)))
                    .with_detail(format!("c={c}, stated {stated}")),
                None => {
                    let residue = image - &tp.scale(&stated);
                    Check::fail(name, &residue).with_detail("not a scalar multiple".to_string())
                }
            };
            report.push(check);
        }
        report
    }

    /// phi(q) == 0 for every kernel polynomial.
    pub fn verify_kernel_membership(&self) -> VerificationReport {
        let checks: Vec<Check> = self
            .eform
            .kernel
            .par_iter()
            .map(|(name, q)| {
                Check::zero(format!("kernel/{name}"), &self.basis.phi(q)).with_detail(format!(
                    "{} terms, degree {}",
                    q.num_terms(),
                    q.total_degree().unwrap_or(0)
                ))
            })
            .collect();
        VerificationReport {
            checks,
            observations: Vec::new(),
        }
    }

    /// Weighted homogeneity of all 22 equations under the scaling weights.
    pub fn verify_weighted_homogeneity(&self) -> VerificationReport {
        let w = WeightSystem::el();
        let mut report = VerificationReport::new();
        for (name, p) in self.eform.equations() {
            let deg = w.weighted_degree(p).expect("EL weights cover the ring");
            let check = match deg {
                WeightedDegree::Homogeneous(d) => {
                    Check::pass(format!("weight/{name}")).with_detail(format!("degree {d}"))
                }
                WeightedDegree::Zero => Check::pass(format!("weight/{name}")).with_detail("zero"),
                WeightedDegree::NotHomogeneous { .. } => {
                    Check::fail(format!("weight/{name}"), p).with_detail(deg.to_string())
                }
            };
            report.push(check);
        }
        report
    }

    /// phi of each of the 22 equations is fixed by all of S3.
    pub fn verify_multisymmetric_images(&self) -> VerificationReport {
        let checks: Vec<Check> = self
            .eform
            .equations()
            .par_iter()
            .flat_map_iter(|(name, q)| {
                let image = self.basis.phi(q);
                Permutation::all()
                    .into_iter()
                    .skip(1)
                    .map(move |s| {
                        Check::equal(
                            format!("phi-invariant/{name}/{s}"),
                            &s.apply(&image).unwrap(),
                            &image,
                        )
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        VerificationReport {
            checks,
            observations: Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};
    use crate::report::Status;

    fn system() -> CuboidSystem {
        CuboidSystem::standard().unwrap()
    }

    #[test]
    fn generators_match_arithmetic_construction() {
        let r = RingSignature::mql();
        let v = |n: &str| Polynomial::var(&r, n).unwrap();
        let sq = |n: &str| v(n).pow(2);
        let g = CuboidGenerators::new();
        assert_eq!(g.p0, &(&(&sq("x1") + &sq("x2")) + &sq("x3")) - &sq("L"));
        assert_eq!(g.p1, &(&sq("x2") + &sq("x3")) - &sq("d1"));
        assert_eq!(g.p3, &(&sq("x1") + &sq("x2")) - &sq("d3"));
    }

    #[test]
    fn transposition_maps_p1_to_p2() {
        let g = CuboidGenerators::new();
        let s = Permutation::transposition(1, 2);
        assert_eq!(s.apply(&g.p1).unwrap(), g.p2);
        for s in Permutation::all() {
            assert_eq!(s.apply(&g.p0).unwrap(), g.p0);
        }
    }

    #[test]
    fn three_cycle_on_p1() {
        let g = CuboidGenerators::new();
        let s = Permutation::new([2, 3, 1]).unwrap();
        assert_eq!(&s.apply(&g.p1).unwrap(), g.indexed(s.image(1)));
        assert_eq!(s.apply(&g.p1).unwrap(), g.p2);
    }

    #[test]
    fn s3_suite_passes() {
        assert!(system().verify_s3_invariance().passed());
    }

    #[test]
    fn s3_negative_control() {
        let mut sys = system();
        let x1 = Polynomial::var(&RingSignature::mql(), "x1").unwrap();
        sys.generators.p1 = &sys.generators.p1 + &x1;
        let report = sys.verify_s3_invariance();
        assert!(!report.passed());
        for c in report.failures() {
            assert!(c.witness.as_deref().is_some_and(|w| w != "0"));
        }
    }

    #[test]
    fn factor_suite_and_negative_control() {
        let mut sys = system();
        assert!(sys.verify_factor_expansions().passed());
        let tp3 = &sys.factors.tp[2];
        assert_eq!(tp3.num_terms(), 9);
        let d1 = Polynomial::var(&RingSignature::mql(), "d1").unwrap();
        sys.factor_transcriptions[2] = &sys.factor_transcriptions[2] + &d1.pow(3);
        let rep = sys.verify_factor_expansions();
        assert_eq!(rep.check("factor/tp3").unwrap().status, Status::Fail);
        assert_eq!(
            rep.check("factor/tp3").unwrap().witness.as_deref(),
            Some("-d1^3")
        );
    }

    #[test]
    fn phi_examples() {
        let r = RingSignature::el();
        let l2 = Polynomial::var(&r, "L").unwrap().pow(2);
        assert_eq!(
            phi(&l2),
            Polynomial::var(&RingSignature::mql(), "L").unwrap().pow(2)
        );
        let g = CuboidGenerators::new();
        assert_eq!(phi(&el("E10^2-2*E20-L^2")), g.p0);
    }

    #[test]
    fn eform_multipliers() {
        let sys = system();
        let rep = sys.verify_eform();
        assert!(rep.passed(), "{}", rep.to_json());
        assert_eq!(
            rep.check("eform-tp1").unwrap().detail.as_deref(),
            Some("c=1")
        );
        assert_eq!(
            rep.check("eform-tp6").unwrap().detail.as_deref(),
            Some("c=3")
        );
        assert_eq!(
            rep.check("eform-tp8").unwrap().detail.as_deref(),
            Some("c=3")
        );
        assert_eq!(
            sys.basis
                .phi(sys.eform.form(8))
                .scalar_ratio(sys.factors.get(8)),
            Some(int(3))
        );
    }

    #[test]
    fn kernel_small_members_and_negative_control() {
        let sys = system();
        let q1 = sys.eform.kernel[0].1.clone();
        assert!(sys.basis.phi(&q1).is_zero());
        let e10 = Polynomial::var(&RingSignature::el(), "E10").unwrap();
        let bad = &q1 + &e10;
        assert_eq!(sys.basis.phi(&bad), sys.basis.phi(&e10));
        assert!(!sys.basis.phi(&bad).is_zero());
    }

    #[test]
    fn homogeneity_degrees() {
        let rep = system().verify_weighted_homogeneity();
        assert!(rep.passed());
        assert_eq!(
            rep.check("weight/eform-tp1").unwrap().detail.as_deref(),
            Some("degree 2")
        );
        assert_eq!(
            rep.check("weight/eform-tp8").unwrap().detail.as_deref(),
            Some("degree 6")
        );
    }

    #[test]
    fn point_evaluation_of_basis() {
        let b = ElementaryBasis::new();
        let pt: Vec<Rational> = [1, 2, 3, 4, 5, 6, 7].map(int).to_vec();
        let e = b.evaluate_at(&pt);
        assert_eq!(e[0], int(6));
        assert_eq!(e[1], int(11));
        assert_eq!(e[2], int(6));
        assert_eq!(e[3], int(15));
        assert_eq!(e[9], int(7));
        // e11 = x1 d2 + d1 x2 + x2 d3 + d2 x3 + x3 d1 + d3 x1
        assert_eq!(e[7], int(5 + 8 + 12 + 15 + 12 + 6));
        let _ = rat(1, 2);
    }
}
