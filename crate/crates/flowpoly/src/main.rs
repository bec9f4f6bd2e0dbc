fn main() {
    std::process::exit(flowpoly::cli::run());
}
