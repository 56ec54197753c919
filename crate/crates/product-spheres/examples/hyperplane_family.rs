//! Stack invariant hyperplanes x_i = c_j along one chosen coordinate of
//! S_{p,q}: every component of a base field with surface cofactor
//! 2 x1 x_{p+2} gets multiplied by G = prod(x_i - c_j), making each root an
//! invariant section that shows up as a linear factor of the extactic
//! polynomial over {1, x_i}.

use product_spheres::derivation::BasisW;
use product_spheres::families::build_hyperplane_family;
use product_spheres::parse::parse_poly;
use product_spheres::poly::{rat, ratio};
use product_spheres::surface::{is_field_on_surface, ProductSpheresSurface};

fn main() {
    let (p, q) = (2, 2);
    let a = rat(2);
    let surface = ProductSpheresSurface::new(p, q, a.clone()).unwrap();
    let n = surface.nvars();

    // stack along the first parallel coordinate x4, heights 1/2 and -1/4
    let roots = [ratio(1, 2), ratio(-1, 4)];
    let field = build_hyperplane_family(p, q, &a, 4, &roots).unwrap();

    let on = is_field_on_surface(&field, &surface).unwrap();
    println!("on surface: {} (cofactor {})", on.on_surface, on.cofactor_h.unwrap());

    let basis = BasisW::new(vec![
        parse_poly("1", n).unwrap(),
        parse_poly("x4", n).unwrap(),
    ])
    .unwrap();
    let e = field.extactic(&basis).unwrap();
    println!("extactic over {{1, x4}}: {e}");
    for c in ["1", "-1", "1/2", "-1/4"] {
        let factor = parse_poly(&format!("x4 - ({c})"), n).unwrap();
        println!(
            "  multiplicity of x4 = {c}: {}",
            e.factor_multiplicity(&factor).unwrap()
        );
    }

    // the same machinery stacks along an upper coordinate: x1 = c with the
    // boundary heights x1 = a and x1 = -a appearing automatically
    let field = build_hyperplane_family(p, q, &a, 1, &[ratio(1, 2)]).unwrap();
    let basis = BasisW::new(vec![
        parse_poly("1", n).unwrap(),
        parse_poly("x1", n).unwrap(),
    ])
    .unwrap();
    let e = field.extactic(&basis).unwrap();
    for c in ["2", "-2", "1/2"] {
        let factor = parse_poly(&format!("x1 - ({c})"), n).unwrap();
        println!(
            "  multiplicity of x1 = {c}: {}",
            e.factor_multiplicity(&factor).unwrap()
        );
    }
}
