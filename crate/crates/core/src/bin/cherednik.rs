fn main() {
    std::process::exit(cherednik::cli::main());
}
