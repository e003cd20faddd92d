fn main() {
    std::process::exit(rademacher::cli::run(std::env::args_os()));
}
