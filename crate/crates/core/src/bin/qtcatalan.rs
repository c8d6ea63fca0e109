fn main() {
    std::process::exit(qtcatalan::cli::main_with_args(std::env::args_os()));
}
