fn main() {
    std::process::exit(simplex_angles::cli::run());
}
