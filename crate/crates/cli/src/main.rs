fn main() {
    std::process::exit(partlab::run(std::env::args_os()));
}
