fn main() {
    std::process::exit(isotopy::cli::main());
}
