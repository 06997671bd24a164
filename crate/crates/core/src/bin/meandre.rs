fn main() {
    std::process::exit(meandre::cli::main());
}
