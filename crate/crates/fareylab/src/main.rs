fn main() {
    std::process::exit(fareylab::cli::run(std::env::args_os()));
}
