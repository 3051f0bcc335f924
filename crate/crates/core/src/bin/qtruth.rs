fn main() {
    std::process::exit(quantum_truth::cli::main());
}
