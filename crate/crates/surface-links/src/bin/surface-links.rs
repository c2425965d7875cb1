fn main() {
    std::process::exit(surface_links::cli::main());
}
