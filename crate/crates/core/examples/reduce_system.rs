// Eliminates the E-form system down to the biquadratic and checks that the
// remaining equations collapse to 0 = 0.

use cuboid_algebra::reduction::{reduce_system, Convention};
use cuboid_algebra::system::CuboidSystem;

pub fn run_example() -> (bool, Vec<String>) {
    let system = CuboidSystem::standard().expect("embedded corpus");
    let red = reduce_system(&system.eform, Convention::Derived).expect("elimination succeeds");
    let mut lines = vec![
        format!("biquadratic: {} = 0", red.midpoint.biquadratic),
        format!(
            "E21 = ({}) / ({})",
            red.solution.e21, red.solution.denominator
        ),
        format!(
            "E12 = ({}) / ({})",
            red.solution.e12, red.solution.denominator
        ),
    ];
    for o in &red.report.observations {
        lines.push(format!("{}: {}", o.name, o.outcome));
    }
    let zeros = red
        .report
        .checks
        .iter()
        .filter(|c| c.name.starts_with("stage2/") && c.passed())
        .count();
    lines.push(format!("{zeros} equations reduce to zero"));
    (red.report.passed(), lines)
}

fn main() {
    let (ok, lines) = run_example();
    for line in lines {
        println!("{line}");
    }
    println!("all passed: {ok}");
}
