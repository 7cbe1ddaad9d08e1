fn main() {
    std::process::exit(hopfcoh::cli::main_with_args(std::env::args_os()));
}
