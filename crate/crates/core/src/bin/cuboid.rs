fn main() {
    std::process::exit(cuboid_algebra::cli::run(std::env::args_os()));
}
