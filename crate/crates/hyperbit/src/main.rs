fn main() {
    let code = hyperbit::cli::run(std::env::args().skip(1));
    std::process::exit(code);
}
