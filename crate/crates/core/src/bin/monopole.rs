fn main() {
    std::process::exit(monopole::cli::main_with_args(std::env::args_os()));
}
