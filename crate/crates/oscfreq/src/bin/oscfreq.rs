fn main() {
    std::process::exit(oscfreq::cli::main());
}
