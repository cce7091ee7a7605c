fn main() {
    std::process::exit(fair_coalitions::cli::run());
}
