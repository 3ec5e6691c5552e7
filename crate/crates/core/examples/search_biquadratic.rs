// Positive primitive solutions of the biquadratic up to a bound.

use cuboid_algebra::search::{compare_heron_biquadratic, search, SearchOptions, SolutionRecord};

pub fn run_example() -> Vec<SolutionRecord> {
    let opts = SearchOptions {
        bound: 30,
        positive_only: true,
        primitive_only: true,
        shards: 4,
    };
    search(&opts).expect("valid options")
}

fn main() {
    for r in run_example() {
        println!("{r}  {}", compare_heron_biquadratic(&r));
    }
}
