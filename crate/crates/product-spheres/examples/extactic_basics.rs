//! Compute extactic polynomials: the determinant whose linear factors are
//! exactly the invariant hyperplane sections spanned by a chosen basis,
//! with multiplicities.

use product_spheres::derivation::BasisW;
use product_spheres::parse::parse_poly;
use product_spheres::VectorField;

fn main() {
    let n = 5; // S_{2,2}: meridian coordinates x1..x3, parallel x4..x5
    let p = |s: &str| parse_poly(s, n).unwrap();
    let field = VectorField::new(vec![
        p("-x2"),
        p("x1 - x3"),
        p("x2"),
        p("0"),
        p("0"),
    ])
    .unwrap();

    // meridian basis {x1, x2, x3}
    let e = field.extactic(&BasisW::meridian(n, 2)).unwrap();
    println!("meridian extactic: {e}");
    let f = p("x1 + x3");
    println!(
        "multiplicity of x1 + x3: {}",
        e.factor_multiplicity(&f).unwrap()
    );

    // the extactic transforms by det(M) under a change of basis, so its
    // linear factors are basis-independent; see the property tests
    let w = BasisW::new(vec![p("x1 + x2"), p("x2"), p("x3 - x1")]).unwrap();
    let e2 = field.extactic(&w).unwrap();
    println!("same factor in another basis: multiplicity {}",
        e2.factor_multiplicity(&f).unwrap());

    // parallel basis {1, x4, x5}: this field fixes the parallel directions,
    // so every column past the first row vanishes
    let ep = field.extactic(&BasisW::parallel(n, 2)).unwrap();
    println!("parallel extactic: {ep}");
}
