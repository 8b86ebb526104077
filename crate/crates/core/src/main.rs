fn main() {
    let code = convexdiff::cli::run(std::env::args_os());
    std::process::exit(code);
}
