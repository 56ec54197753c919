//! Fields with infinitely many invariant hyperplane sections: on S_{1,q}
//! every meridian a1 x1 + a2 x2 = 0 is invariant at once, and on S_{p,1}
//! every meridian through the upper sphere is. Compare against the finite
//! threshold above which a field must admit a rational first integral.

use product_spheres::families::{build_s1q_first_integral, build_sp1_first_integral};
use product_spheres::parse::parse_poly;
use product_spheres::poly::rat;
use product_spheres::surface::{
    cofactor, first_integral_threshold, is_field_on_surface, ProductSpheresSurface,
};

fn main() {
    // S_{1,2}: cofactor of every meridian is (x3 + x4)/4
    let a = rat(2);
    let field = build_s1q_first_integral(2, &a).unwrap();
    let surface = ProductSpheresSurface::new(1, 2, a.clone()).unwrap();
    let n = surface.nvars();
    let on = is_field_on_surface(&field, &surface).unwrap();
    println!("S_{{1,2}} surface cofactor: {}", on.cofactor_h.unwrap());
    for m in ["x1", "x2", "3*x1 - 7*x2"] {
        let f = parse_poly(m, n).unwrap();
        println!("  cofactor of {m}: {}", cofactor(&field, &f).unwrap().unwrap());
    }

    // S_{2,1}: cofactor of every meridian is x4/4
    let field = build_sp1_first_integral(2, &a).unwrap();
    let surface = ProductSpheresSurface::new(2, 1, a).unwrap();
    let n = surface.nvars();
    let on = is_field_on_surface(&field, &surface).unwrap();
    println!("S_{{2,1}} surface cofactor: {}", on.cofactor_h.unwrap());
    let f = parse_poly("x1 + 2*x2 + 3*x3", n).unwrap();
    println!("  meridian cofactor: {}", cofactor(&field, &f).unwrap().unwrap());

    // a degree-m field with more invariant sections than this threshold has
    // a rational first integral; infinitely many always qualifies
    for m in [1, 2, 5] {
        println!(
            "threshold on S_{{2,1}} at degree {m}: {}",
            first_integral_threshold(&surface, m).unwrap()
        );
    }
}
