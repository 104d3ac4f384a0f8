fn main() {
    std::process::exit(fiberspec::run(std::env::args_os()));
}
