fn main() {
    std::process::exit(lojasiewicz::cli::run(std::env::args_os()));
}
