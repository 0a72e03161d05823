fn main() {
    std::process::exit(hopf_core::cli::main());
}
