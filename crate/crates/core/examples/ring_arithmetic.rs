// Polynomial arithmetic, the S3 column action and substitution.

use cuboid_algebra::poly::{int, Permutation, Polynomial, RingSignature};

pub fn run_example() -> Vec<String> {
    let ring = RingSignature::mql();
    let v = |name: &str| Polynomial::var(&ring, name).unwrap();

    let p1 = &(&v("x2").pow(2) + &v("x3").pow(2)) - &v("d1").pow(2);
    let sigma = Permutation::new([2, 3, 1]).unwrap();
    let moved = sigma.apply(&p1).unwrap();

    let cube = (&v("x1") + &v("d1")).pow(3);
    let at_point = cube.evaluate_at(&[1, 0, 0, 2, 0, 0, 0].map(int)).unwrap();

    vec![
        format!("p1 = {p1}"),
        format!("{sigma} p1 = {moved}"),
        format!("(x1+d1)^3 = {cube}"),
        format!("(x1+d1)^3 at x1=1, d1=2: {at_point}"),
    ]
}

fn main() {
    for line in run_example() {
        println!("{line}");
    }
}
