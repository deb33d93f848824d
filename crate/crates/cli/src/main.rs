fn main() {
    std::process::exit(mmisr_cli::run(std::env::args_os()));
}
