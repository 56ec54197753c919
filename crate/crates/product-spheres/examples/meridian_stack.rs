//! Degree-m fields on S_{2,q} and S_{3,q} built so that one chosen meridian
//! is invariant, with explicit cofactors. These constructions have an
//! identically zero extactic polynomial over the meridian basis — the
//! columns for the basis elements x2..x_{p+1} are proportional by design —
//! so no finite algebraic multiplicity is defined for them.

use product_spheres::derivation::BasisW;
use product_spheres::families::{build_p2_meridian_stack, build_p3_meridian_stack};
use product_spheres::parse::parse_poly;
use product_spheres::poly::rat;
use product_spheres::surface::{cofactor, is_field_on_surface, ProductSpheresSurface};

fn main() {
    let a = rat(2);
    let m = 5;

    // p = 2: meridian x1 + x2 + x3 on S_{2,2}
    let field = build_p2_meridian_stack(m, &a, &[rat(1), rat(1), rat(1)], 2).unwrap();
    let surface = ProductSpheresSurface::new(2, 2, a.clone()).unwrap();
    let n = surface.nvars();
    let f = parse_poly("x1 + x2 + x3", n).unwrap();

    let on = is_field_on_surface(&field, &surface).unwrap();
    println!("degree:          {}", field.field_degree());
    println!("surface cofactor: {}", on.cofactor_h.unwrap());
    println!("meridian cofactor: {}", cofactor(&field, &f).unwrap().unwrap());

    let e = field.extactic(&BasisW::meridian(n, 2)).unwrap();
    println!("extactic over {{x1,x2,x3}} is zero: {}", e.is_zero());

    // p = 3: same story one dimension up, on S_{3,1}
    let field = build_p3_meridian_stack(m, &a, &[rat(1), rat(1), rat(1), rat(1)], 1).unwrap();
    let surface = ProductSpheresSurface::new(3, 1, a).unwrap();
    let n = surface.nvars();
    let f = parse_poly("x1 + x2 + x3 + x4", n).unwrap();
    println!(
        "p = 3 meridian cofactor: {}",
        cofactor(&field, &f).unwrap().unwrap()
    );
    let e = field.extactic(&BasisW::meridian(n, 3)).unwrap();
    println!("p = 3 extactic is zero: {}", e.is_zero());
}
