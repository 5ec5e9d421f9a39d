fn main() {
    let code = boundsing::cli::run(std::env::args_os());
    std::process::exit(code);
}
