fn main() {
    std::process::exit(parsigames::cli::run(std::env::args_os()));
}
