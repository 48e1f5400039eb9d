fn main() {
    std::process::exit(hl::cli::run(std::env::args_os()));
}
