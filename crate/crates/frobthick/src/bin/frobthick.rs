fn main() {
    std::process::exit(frobthick::cli::main());
}
