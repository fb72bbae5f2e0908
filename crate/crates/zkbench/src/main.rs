fn main() {
    std::process::exit(zkbench::cli::run(std::env::args_os()));
}
