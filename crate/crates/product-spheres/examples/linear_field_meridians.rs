//! Classify a degree-1 vector field on S_{2,2} and list its invariant
//! meridians from the kernel of the upper rotation block.

use product_spheres::parse::parse_poly;
use product_spheres::poly::rat;
use product_spheres::surface::{
    check_invariant_section, classify_degree_one, degree_one_meridians, ProductSpheresSurface,
};
use product_spheres::VectorField;

fn main() {
    let surface = ProductSpheresSurface::new(2, 2, rat(2)).unwrap();
    let n = surface.nvars();
    let p = |s: &str| parse_poly(s, n).unwrap();

    // linear field: skew rotation upstairs, zero downstairs
    let field = VectorField::new(vec![
        p("-x2"),
        p("x1 - x3"),
        p("x2"),
        p("0"),
        p("0"),
    ])
    .unwrap();

    let report = classify_degree_one(&field, &surface).unwrap();
    println!("admissible:       {}", report.admissible);
    println!("on surface:       {}", report.on_surface);
    println!("upper block rank: {}", report.upper_block.rank());

    let found = degree_one_meridians(&field, &surface).unwrap();
    println!("kernel is everything: {}", found.kernel_full);
    for meridian in &found.meridians {
        let r = check_invariant_section(&field, &surface, meridian).unwrap();
        println!(
            "meridian {meridian}: invariant = {}, multiplicity = {:?}",
            r.invariant, r.extactic_multiplicity
        );
    }
}
