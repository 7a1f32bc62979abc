fn main() {
    std::process::exit(toric_poset::cli::main_with_args(std::env::args_os()));
}
