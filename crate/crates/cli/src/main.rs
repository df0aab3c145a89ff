fn main() {
    std::process::exit(nilcent_cli::run(std::env::args_os()));
}
