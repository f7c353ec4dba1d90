fn main() {
    std::process::exit(ncst::cli::run(std::env::args_os()));
}
