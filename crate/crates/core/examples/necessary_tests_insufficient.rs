// (199,119) has a slope inside the cone of <(0,1),(11,10),(10,3)> and
// passes the d2 test, yet it has no factorization.

use affine_elasticity::intlin::{d2_test, det_divisors, D2Verdict, Mat2xP};
use affine_elasticity::solve3::member3_general;
use affine_elasticity::{phi, vec2, CanonicalMonoid3};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = CanonicalMonoid3::new(11, 10, 10, 3)?;
    let gens = m.generators();
    let mat = Mat2xP::from_vecs(&gens)?;
    let (d1, d2) = det_divisors(&mat);
    println!(
        "generators (0,1) (11,10) (10,3): d1 = {d1}, d2 = {d2}, bc-ad=1: {}",
        m.star()
    );

    for s in [vec2(199, 119), vec2(199, 120)] {
        let slope_ok = phi(&s)? <= phi(&gens[2])?;
        let d2_ok = d2_test(&mat, &s) == D2Verdict::Inconclusive;
        let facts = member3_general(&m, &s);
        println!(
            "({s}): slope in range {slope_ok}, d2 passes {d2_ok}, factorizations {}",
            facts.len()
        );
        for f in &facts {
            println!("  {f}");
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
