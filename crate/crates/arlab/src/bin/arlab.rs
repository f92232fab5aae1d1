fn main() {
    std::process::exit(arlab::cli::main_entry());
}
