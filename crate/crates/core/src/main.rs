fn main() {
    std::process::exit(simplest_cubic::cli::main_with_args(std::env::args_os()));
}
