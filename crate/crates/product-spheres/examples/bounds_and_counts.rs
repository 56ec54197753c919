//! Upper bounds on how many invariant meridians and parallels a field of a
//! given degree vector can carry, and how many connected components each
//! section contributes.

use product_spheres::poly::{rat, ratio, Rational};
use product_spheres::surface::{
    component_count, meridian_bound, parallel_bound, SectionKind,
};
use num_traits::Zero;

fn main() {
    // uniform degree m on S_{2,q}: bound 3m; on S_{3,q}: bound 6m - 2
    for m in 1..=5u32 {
        let d2 = vec![Some(m); 5];
        let d3 = vec![Some(m); 6];
        println!(
            "m = {m}: meridian bound {} (p = 2), {} (p = 3), parallel bound {} (q = 2)",
            meridian_bound(&d2, 2).unwrap(),
            meridian_bound(&d3, 3).unwrap(),
            parallel_bound(&d2, 2, 2).unwrap(),
        );
    }

    // mixed degrees: the formula sorts each block internally
    let degrees = vec![Some(4), Some(4), Some(4), Some(3), Some(3)];
    println!(
        "degrees (4,4,4,3,3) on S_{{2,2}}: meridian bound {}",
        meridian_bound(&degrees, 2).unwrap()
    );

    // zero components are skipped; for q = 1 the parallel formula does not
    // apply (the sharp count there is m - 1)
    let degrees = vec![Some(4), None, Some(4), Some(3)];
    println!(
        "degrees (4,-,4,3) on S_{{2,1}}: meridian bound {}, parallel bound: {:?}",
        meridian_bound(&degrees, 2).unwrap(),
        parallel_bound(&degrees, 2, 1).err().map(|e| e.to_string()),
    );

    // connected components per section
    println!(
        "meridian components: {} on S_{{2,2}}, {} on S_{{1,2}}",
        component_count(SectionKind::Meridian, 2, 2, &Rational::zero()).unwrap(),
        component_count(SectionKind::Meridian, 1, 2, &Rational::zero()).unwrap(),
    );
    println!(
        "parallel x4 = 1/2 components: {} on S_{{2,2}}, {} on S_{{2,1}}",
        component_count(SectionKind::Parallel, 2, 2, &ratio(1, 2)).unwrap(),
        component_count(SectionKind::Parallel, 2, 1, &ratio(1, 2)).unwrap(),
    );
    println!(
        "parallel |c| >= 1 is not a section: {:?}",
        component_count(SectionKind::Parallel, 2, 2, &rat(2))
            .err()
            .map(|e| e.to_string()),
    );
}
