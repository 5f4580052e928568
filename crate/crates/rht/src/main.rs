fn main() {
    std::process::exit(rht::cli::run());
}
