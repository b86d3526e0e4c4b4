fn main() {
    std::process::exit(survnet::cli::run(std::env::args_os()));
}
