fn main() {
    std::process::exit(pisgraph::harness::cli::run(std::env::args_os()));
}
