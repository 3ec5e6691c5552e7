// Integer triangles with integer area.

use cuboid_algebra::search::{heron_area_holds, heron_search, HeronRecord};

pub fn run_example() -> Vec<HeronRecord> {
    let found = heron_search(20).expect("valid bound");
    assert!(found.iter().all(heron_area_holds));
    found
}

fn main() {
    for t in run_example() {
        println!("{t}");
    }
}
