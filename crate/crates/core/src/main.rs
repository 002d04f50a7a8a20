fn main() {
    std::process::exit(hurwitz_wedge::cli::run());
}
