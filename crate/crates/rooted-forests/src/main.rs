fn main() {
    std::process::exit(rooted_forests::cli::run());
}
