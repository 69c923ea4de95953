fn main() {
    std::process::exit(hecke_dirac::cli::run(std::env::args_os()));
}
