// Parses the embedded kernel corpus and prints per-polynomial statistics.

use cuboid_algebra::cli::stats_line;
use cuboid_algebra::corpus;
use cuboid_algebra::poly::WeightSystem;

pub fn run_example() -> Vec<String> {
    let defs = corpus::embedded_kernel().expect("embedded corpus is intact");
    let weights = WeightSystem::el();
    defs.iter()
        .map(|(name, p)| stats_line(name, p, &weights))
        .collect()
}

fn main() {
    println!("sha256 {}", corpus::APPENDIX_SHA256);
    for line in run_example() {
        println!("{line}");
    }
}
