//! Exact polynomial arithmetic: parsing, products, exact division, and
//! factor multiplicities, all over the rationals.

use product_spheres::parse::parse_poly;

fn main() {
    let n = 3;
    let f = parse_poly("x1^2 - 2*x2 + 1/3", n).unwrap();
    let g = parse_poly("x1 + x3", n).unwrap();

    println!("f     = {f}");
    println!("g     = {g}");
    println!("f + g = {}", f.add(&g));
    println!("f * g = {}", f.mul(&g));
    println!("g^3   = {}", g.pow(3));

    // exact division either returns the quotient or reports non-divisibility
    let product = f.mul(&g);
    println!("(f*g)/g = {}", product.exact_div(&g).unwrap());
    assert_eq!(f.exact_div(&g), None);
    println!("f is not divisible by g");

    // multiplicity of a factor by repeated exact division
    let h = g.pow(4).mul(&f);
    println!("multiplicity of g in g^4*f: {}", h.factor_multiplicity(&g).unwrap());

    // partial derivatives are exact too
    println!("df/dx1 = {}", f.partial_derivative(1));

    // printing and parsing round-trip exactly
    let back = parse_poly(&h.to_string(), n).unwrap();
    assert_eq!(back, h);
    println!("text round-trip is exact");
}
