fn main() {
    std::process::exit(reflalg::cli::run());
}
