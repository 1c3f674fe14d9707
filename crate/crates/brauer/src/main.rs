fn main() {
    std::process::exit(brauer::cli::run(std::env::args_os()));
}
