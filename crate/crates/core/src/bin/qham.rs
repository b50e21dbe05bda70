fn main() {
    std::process::exit(quasihamming::cli::main_with_args(std::env::args_os()));
}
