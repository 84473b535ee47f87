fn main() {
    std::process::exit(lagrangia::cli::run(std::env::args_os()));
}
