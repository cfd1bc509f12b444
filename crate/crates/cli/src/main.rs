fn main() {
    std::process::exit(arknit_cli::run(std::env::args().collect()));
}
