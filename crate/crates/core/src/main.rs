fn main() {
    std::process::exit(transversal_lab::cli::run(std::env::args_os()));
}
