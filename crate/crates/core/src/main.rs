fn main() {
    std::process::exit(hullclip::cli::run(std::env::args_os()));
}
