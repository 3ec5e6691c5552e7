// Expands every kernel polynomial under phi and checks it vanishes.

use std::time::Instant;

use cuboid_algebra::system::CuboidSystem;

pub fn run_example() -> (usize, bool) {
    let system = CuboidSystem::standard().expect("embedded corpus");
    let report = system.verify_kernel_membership();
    for c in &report.checks {
        println!(
            "{:<12} {:?} {}",
            c.name,
            c.status,
            c.detail.as_deref().unwrap_or("")
        );
    }
    (report.checks.len(), report.passed())
}

fn main() {
    let start = Instant::now();
    let (n, ok) = run_example();
    println!("{n} polynomials, all zero: {ok} ({:.2?})", start.elapsed());
}
