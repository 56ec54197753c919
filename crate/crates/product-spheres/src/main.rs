fn main() {
    std::process::exit(product_spheres::cli::run());
}
