fn main() {
    std::process::exit(domset::cli::main_with_args(std::env::args_os()));
}
