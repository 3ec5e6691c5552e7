// Lifts a solution of the biquadratic to an integer point of all 22 equations.

use num_bigint::BigInt;

use cuboid_algebra::reduction::{lift_solution, LiftResult};
use cuboid_algebra::system::CuboidSystem;

pub fn run_example() -> LiftResult {
    let system = CuboidSystem::standard().expect("embedded corpus");
    let [e10, e01, e11, l] = [2, 1, 1, 1].map(BigInt::from);
    lift_solution(&system.eform, &e10, &e01, &e11, &l).expect("(2,1,1,1) lifts")
}

fn main() {
    let lift = run_example();
    println!("{}", serde_json::to_string_pretty(&lift).unwrap());
}
