//! On S_{1,q} a field can be arranged to have any prescribed finite set of
//! invariant meridians a1 x1 + a2 x2 = 0; the extactic polynomial over
//! {x1, x2} factors into exactly those lines times x1^2 + x2^2.

use product_spheres::derivation::BasisW;
use product_spheres::families::build_s1q_meridians;
use product_spheres::poly::{rat, Rational};
use product_spheres::surface::{
    component_count, is_field_on_surface, ProductSpheresSurface, SectionKind,
};
use num_traits::Zero;

fn main() {
    let a = rat(2);
    let lines = [(rat(1), rat(1)), (rat(1), rat(-1)), (rat(2), rat(1))];
    let field = build_s1q_meridians(2, &a, &lines).unwrap();
    let surface = ProductSpheresSurface::new(1, 2, a).unwrap();

    let on = is_field_on_surface(&field, &surface).unwrap();
    println!("on surface: {} (cofactor {})", on.on_surface, on.cofactor_h.unwrap());
    println!("degree: {}", field.field_degree());

    let e = field.extactic(&BasisW::meridian(surface.nvars(), 1)).unwrap();
    println!("extactic over {{x1, x2}}: {e}");

    // each invariant meridian meets S_{1,q} in two (q-1)-spheres
    let per = component_count(SectionKind::Meridian, 1, 2, &Rational::zero()).unwrap();
    println!(
        "{} meridians x {} components each = {} spheres",
        lines.len(),
        per,
        lines.len() as u32 * per
    );
}
