//! The twelve acceptance criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Roots;

use cuboid_algebra::poly::{
    int, Permutation, Polynomial, RingSignature, WeightSystem, WeightedDegree,
};
use cuboid_algebra::reduction::{
    self, biquadratic_square_form, derive_midpoint_equations, printed_midpoint_equations,
    solve_linear_e21_e12, stage2_reduce, Comparison, Convention,
};
use cuboid_algebra::search::{
    self, heron_area_holds, is_solution, is_solution_big, HeronRecord, SearchOptions,
};
use cuboid_algebra::system::CuboidSystem;

fn system() -> CuboidSystem {
    CuboidSystem::standard().expect("embedded corpus loads")
}

fn criterion_1() -> Result<String, String> {
    let sys = system();
    let g = &sys.generators;
    for sigma in Permutation::all() {
        if sigma.apply(&g.p0).unwrap() != g.p0 {
            return Err(format!("{sigma} moves p0"));
        }
        for i in 1..=3 {
            if &sigma.apply(g.indexed(i)).unwrap() != g.indexed(sigma.image(i)) {
                return Err(format!("{sigma} p{i} != p{}", sigma.image(i)));
            }
        }
    }
    let rep = sys.verify_s3_invariance();
    if !rep.passed() {
        return Err(rep.failures().next().unwrap().name.clone());
    }
    Ok(format!("6 permutations, {} checks", rep.checks.len()))
}

fn criterion_2() -> Result<String, String> {
    let rep = system().verify_factor_expansions();
    if !rep.passed() {
        return Err(rep
            .failures()
            .map(|c| c.name.clone())
            .collect::<Vec<_>>()
            .join(","));
    }
    Ok(format!("{} expansions equal", rep.checks.len()))
}

fn criterion_3() -> Result<String, String> {
    let sys = system();
    let expected = [1, 1, 1, 1, 1, 3, 3, 3];
    let mut found = Vec::new();
    for k in 1..=8 {
        let image = sys.basis.phi(sys.eform.form(k));
        let c = image
            .scalar_ratio(sys.factors.get(k))
            .ok_or_else(|| format!("phi of E-form {k} is not a multiple of tp{k}"))?;
        if c != int(expected[k - 1]) {
            return Err(format!("tp{k}: c = {c}"));
        }
        found.push(c.to_string());
    }
    Ok(format!("c = [{}]", found.join(",")))
}

fn criterion_4() -> Result<String, String> {
    let sys = system();
    if sys.eform.kernel.len() != 14 {
        return Err(format!("{} kernel polynomials", sys.eform.kernel.len()));
    }
    let rep = sys.verify_kernel_membership();
    if !rep.passed() {
        return Err(rep
            .failures()
            .map(|c| c.name.clone())
            .collect::<Vec<_>>()
            .join(","));
    }
    Ok("14 of 14 map to zero".into())
}

fn criterion_5() -> Result<String, String> {
    let mid = derive_midpoint_equations(&system().eform);
    let printed = printed_midpoint_equations();
    if mid.biquadratic != printed.biquadratic {
        return Err("derived biquadratic differs from the transcription".into());
    }
    if mid.biquadratic != biquadratic_square_form() {
        return Err("derived biquadratic differs from the square form".into());
    }
    Ok("equal to both transcribed forms".into())
}

fn criterion_6() -> Result<String, String> {
    let red = reduction::reduce_system(&system().eform, Convention::Derived)
        .map_err(|e| e.to_string())?;
    let stage2: Vec<_> = red
        .report
        .checks
        .iter()
        .filter(|c| c.name.starts_with("stage2/"))
        .collect();
    if stage2.len() != 15 {
        return Err(format!("{} stage-2 targets", stage2.len()));
    }
    let bad: Vec<_> = stage2
        .iter()
        .filter(|c| !c.passed())
        .map(|c| c.name.clone())
        .collect();
    if !bad.is_empty() {
        return Err(format!("nonzero: {}", bad.join(",")));
    }
    let printed = red
        .report
        .observation("printed-solution/stage2")
        .unwrap_or("?");
    Ok(format!(
        "15 exact zeros; with printed closed forms: {printed}"
    ))
}

fn criterion_7() -> Result<String, String> {
    let mid = derive_midpoint_equations(&system().eform);
    let sol = solve_linear_e21_e12(&mid).map_err(|e| e.to_string())?;
    let ring = RingSignature::el();
    let det = &Polynomial::var(&ring, "E10").unwrap().pow(2)
        + &Polynomial::var(&ring, "E01").unwrap().pow(2);
    if sol.denominator != det {
        return Err(format!("determinant {}", sol.denominator));
    }
    let r = reduction::e11_square_rhs(&mid.biquadratic).map_err(|e| e.to_string())?;
    for (name, eq) in [("first", &mid.linear_first), ("second", &mid.linear_second)] {
        if !stage2_reduce(eq, &sol, &r).is_zero() {
            return Err(format!("linear-{name} not satisfied"));
        }
    }
    let (c21, c12) = sol.compare(&reduction::printed_linear_solution());
    let c413 = Comparison::of(&mid.remaining, &printed_midpoint_equations().remaining);
    Ok(format!(
        "det = E10^2+E01^2; vs printed: E21 {c21}, E12 {c12}; quadratic equation {c413}"
    ))
}

fn brute_force(bound: i64) -> Vec<(i64, i64, i64, i64)> {
    // (2 e11)^2 <= 8 e01^2 l^2 <= 8 bound^4
    let e11_max = (2 * bound.pow(4)).sqrt();
    let mut out = Vec::new();
    for l in 0..=bound {
        for e01 in 0..=bound {
            for e10 in 0..=bound {
                for e11 in 0..=e11_max {
                    let b = |v: i64| BigInt::from(v);
                    if is_solution_big(&b(e10), &b(e01), &b(e11), &b(l)) {
                        out.push((e10, e01, e11, l));
                    }
                }
            }
        }
    }
    out
}

fn criterion_8() -> Result<String, String> {
    let mut total = 0;
    for bound in [1u32, 2, 5, 10] {
        let found: Vec<_> = search::search(&SearchOptions::new(bound))
            .map_err(|e| e.to_string())?
            .iter()
            .map(|r| r.values())
            .collect();
        let oracle = brute_force(bound as i64);
        if found != oracle {
            return Err(format!(
                "bound {bound}: {} found vs {} by brute force",
                found.len(),
                oracle.len()
            ));
        }
        total = found.len();
    }
    let ten = brute_force(10);
    for p in [(0, 0, 0, 0), (1, 1, 0, 0), (0, 1, 1, 1), (2, 1, 1, 1)] {
        if !ten.contains(&p) {
            return Err(format!("missing {p:?}"));
        }
    }
    Ok(format!(
        "bounds 1,2,5,10 equal the brute force ({total} at bound 10)"
    ))
}

fn criterion_9() -> Result<String, String> {
    let sys = system();
    let mut lifted = 0;
    for r in search::search(&SearchOptions::new(20)).map_err(|e| e.to_string())? {
        if r.e10 == 0 && r.e01 == 0 {
            continue;
        }
        let b = |v: i64| BigInt::from(v);
        let lift = reduction::lift_solution(&sys.eform, &b(r.e10), &b(r.e01), &b(r.e11), &b(r.l))
            .map_err(|e| format!("{r}: {e}"))?;
        if lift.equations_checked != 22 {
            return Err(format!("{r}: {} equations", lift.equations_checked));
        }
        let point = [
            &lift.integer_point.e10,
            &lift.integer_point.e20,
            &lift.integer_point.e30,
            &lift.integer_point.e01,
            &lift.integer_point.e02,
            &lift.integer_point.e03,
            &lift.integer_point.e21,
            &lift.integer_point.e11,
            &lift.integer_point.e12,
            &lift.integer_point.l,
        ]
        .map(|s| {
            s.parse::<BigInt>()
                .map(cuboid_algebra::Rational::from_integer)
                .map_err(|_| format!("{r}: non-integer {s}"))
        });
        let point: Vec<_> = point.into_iter().collect::<Result<_, _>>()?;
        for (name, eq) in sys.eform.equations() {
            if !eq.evaluate_at(&point).unwrap().eq(&int(0)) {
                return Err(format!("{r}: {name} nonzero at the lift"));
            }
        }
        lifted += 1;
    }
    Ok(format!("{lifted} solutions lifted, 22 equations each"))
}

fn criterion_10() -> Result<String, String> {
    let sys = system();
    let w = WeightSystem::el();
    for (name, eq) in sys.eform.equations() {
        match w.weighted_degree(eq).map_err(|e| e.to_string())? {
            WeightedDegree::Homogeneous(_) => {}
            other => return Err(format!("{name}: {other}")),
        }
    }
    let mut scaled = 0;
    for r in search::search(&SearchOptions::new(10)).map_err(|e| e.to_string())? {
        for a in [2i64, 3, 5] {
            if !is_solution(a * r.e10, a * r.e01, a * a * r.e11, a * r.l) {
                return Err(format!("{r} scaled by {a}"));
            }
            scaled += 1;
        }
    }
    Ok(format!(
        "22 homogeneous; {scaled} scaled solutions verified"
    ))
}

fn criterion_11() -> Result<String, String> {
    let found = search::heron_search(10).map_err(|e| e.to_string())?;
    for (a, b, c, s) in [(3, 4, 5, 6), (5, 5, 6, 12), (5, 5, 8, 12), (6, 8, 10, 24)] {
        if !found.contains(&HeronRecord { a, b, c, s }) {
            return Err(format!("missing ({a},{b},{c};{s})"));
        }
    }
    if let Some(bad) = found.iter().find(|r| !heron_area_holds(r)) {
        return Err(format!("{bad} fails the area formula"));
    }
    Ok(format!(
        "{} triangles, all satisfy 16s^2 = product form",
        found.len()
    ))
}

fn criterion_12() -> Result<String, String> {
    let run = |shards: &str| {
        Command::new(env!("CARGO_BIN_EXE_cuboid"))
            .args(["search", "--bound", "10", "--shards", shards])
            .env_remove("CUBOID_SHARDS")
            .output()
            .map_err(|e| e.to_string())
    };
    let one = run("1")?;
    let four = run("4")?;
    if !one.status.success() || !four.status.success() {
        return Err("search exited with failure".into());
    }
    if one.stdout != four.stdout {
        return Err("outputs differ".into());
    }
    Ok(format!("{} bytes identical", one.stdout.len()))
}

type Criterion = (u8, &'static str, fn() -> Result<String, String>, Duration);

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        (
            1,
            "S3 action on p0..p3",
            criterion_1,
            Duration::from_secs(1),
        ),
        (
            2,
            "factor generator expansions",
            criterion_2,
            Duration::from_secs(1),
        ),
        (3, "E-form multipliers", criterion_3, Duration::from_secs(5)),
        (4, "kernel membership", criterion_4, Duration::from_secs(60)),
        (
            5,
            "biquadratic derivation",
            criterion_5,
            Duration::from_secs(1),
        ),
        (
            6,
            "fifteen annihilations",
            criterion_6,
            Duration::from_secs(300),
        ),
        (7, "linear solve", criterion_7, Duration::from_secs(1)),
        (
            8,
            "search vs brute force",
            criterion_8,
            Duration::from_secs(10),
        ),
        (
            9,
            "lift to integer points",
            criterion_9,
            Duration::from_secs(30),
        ),
        (
            10,
            "weighted homogeneity",
            criterion_10,
            Duration::from_secs(5),
        ),
        (
            11,
            "Heron cross-check",
            criterion_11,
            Duration::from_secs(5),
        ),
        (
            12,
            "shard determinism",
            criterion_12,
            Duration::from_secs(30),
        ),
    ];
    let mut failed = Vec::new();
    for (n, name, f, limit) in criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let result = match result {
            Ok(msg) if elapsed > limit => {
                Err(format!("{msg}, but took {elapsed:.2?} (limit {limit:?})"))
            }
            other => other,
        };
        match result {
            Ok(msg) => println!("criterion {n:>2} PASS {name} ({elapsed:.2?}): {msg}"),
            Err(msg) => {
                println!("criterion {n:>2} FAIL {name} ({elapsed:.2?}): {msg}");
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
