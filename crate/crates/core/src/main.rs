fn main() {
    std::process::exit(arcgen::cli::run(std::env::args_os()));
}
