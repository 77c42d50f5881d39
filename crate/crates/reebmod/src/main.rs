fn main() {
    std::process::exit(reebmod::cli::run(std::env::args_os()));
}
