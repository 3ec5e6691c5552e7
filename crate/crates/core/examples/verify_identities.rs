// S3 invariance, the factor generator expansions and the E-form multipliers.

use cuboid_algebra::system::CuboidSystem;

pub fn run_example() -> (bool, Vec<String>) {
    let system = CuboidSystem::standard().expect("embedded corpus");
    let mut report = system.verify_s3_invariance();
    report.extend(system.verify_factor_expansions());
    report.extend(system.verify_eform());
    let lines = report
        .checks
        .iter()
        .filter(|c| c.name.starts_with("eform") || c.name.starts_with("factor"))
        .map(|c| {
            format!(
                "{:<12} {:?} {}",
                c.name,
                c.status,
                c.detail.as_deref().unwrap_or("")
            )
        })
        .collect();
    (report.passed(), lines)
}

fn main() {
    let (ok, lines) = run_example();
    for line in lines {
        println!("{line}");
    }
    println!("all passed: {ok}");
}
