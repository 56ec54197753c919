//! On S_{p,1} a degree-m field can carry m-1 invariant parallels
//! x_{p+2} = c: always c = 1 and c = -1, plus any m-3 chosen heights
//! strictly between. The extactic polynomial over {1, x_{p+2}} is the last
//! field component and splits into exactly those linear factors.

use product_spheres::derivation::BasisW;
use product_spheres::families::build_sp1_parallels;
use product_spheres::parse::parse_poly;
use product_spheres::poly::{rat, ratio};
use product_spheres::surface::{is_field_on_surface, ProductSpheresSurface};

fn main() {
    let a = rat(2);
    let p = 2;
    let m = 5;
    let roots = [ratio(1, 2), ratio(-1, 3)]; // the m - 3 interior heights
    let field = build_sp1_parallels(p, m, &a, &roots).unwrap();
    let surface = ProductSpheresSurface::new(p, 1, a).unwrap();
    let n = surface.nvars();

    println!(
        "on surface: {}",
        is_field_on_surface(&field, &surface).unwrap().on_surface
    );

    let e = field.extactic(&BasisW::parallel(n, p)).unwrap();
    println!("extactic over {{1, x4}}: {e}");
    for c in ["1", "-1", "1/2", "-1/3"] {
        let factor = parse_poly(&format!("x4 - ({c})"), n).unwrap();
        println!(
            "  multiplicity of x4 = {c}: {}",
            e.factor_multiplicity(&factor).unwrap()
        );
    }

    // component total: the c = 1 and c = -1 sections are single p-spheres,
    // every interior height contributes two
    println!("component total: {}", 2 + 2 * roots.len());
}
