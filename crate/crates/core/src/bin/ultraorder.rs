fn main() {
    std::process::exit(ultraorder::cli::run_cli(std::env::args_os()));
}
