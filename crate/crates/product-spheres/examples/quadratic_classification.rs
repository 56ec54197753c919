//! Degree-2 fields tangent to S_{p,q} are exactly those whose coefficients
//! satisfy a finite list of linear relations pinned by the cofactor
//! coefficients alpha. Build a random admissible sample, verify the
//! relations agree with the division check, then break one slot.

use product_spheres::families::build_degree_two_sample;
use product_spheres::parse::parse_poly;
use product_spheres::poly::{rat, ratio};
use product_spheres::surface::{verify_degree_two, ProductSpheresSurface};
use product_spheres::VectorField;

fn main() {
    let (p, q) = (2, 2);
    let a = ratio(3, 2);
    let surface = ProductSpheresSurface::new(p, q, a.clone()).unwrap();
    let alphas = [rat(1), rat(-2)];
    let field = build_degree_two_sample(p, q, &a, &alphas, 42).unwrap();

    let report = verify_degree_two(&field, &surface).unwrap();
    println!("relations hold:     {}", report.relations_hold);
    println!("predicted cofactor: {}", report.predicted_cofactor);
    println!(
        "division cofactor:  {}",
        report.division_cofactor.as_ref().unwrap()
    );
    println!("checks agree:       {}", report.consistent);

    // perturb a single structural slot: add x1^2 to the first component
    let mut components = field.components().to_vec();
    components[0] = components[0].add(&parse_poly("x1^2", surface.nvars()).unwrap());
    let broken = VectorField::new(components).unwrap();
    let report = verify_degree_two(&broken, &surface).unwrap();
    println!("after perturbation: relations hold = {}", report.relations_hold);
    for v in report.violations.iter().take(3) {
        println!("  violated: {v}");
    }
    println!(
        "  still invariant: {}",
        report.division_cofactor.is_some()
    );
}
