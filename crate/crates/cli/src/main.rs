fn main() {
    std::process::exit(opial_cli::run(std::env::args().collect()));
}
