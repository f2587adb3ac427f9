fn main() {
    std::process::exit(aibomkit::cli::run());
}
