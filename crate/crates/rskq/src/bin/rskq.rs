fn main() {
    std::process::exit(rskq::cli::run(std::env::args().collect()))
}
