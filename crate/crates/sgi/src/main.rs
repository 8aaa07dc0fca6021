fn main() {
    std::process::exit(sgi::cli::run());
}
