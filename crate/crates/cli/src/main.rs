fn main() {
    std::process::exit(qjac::run(std::env::args_os()));
}
