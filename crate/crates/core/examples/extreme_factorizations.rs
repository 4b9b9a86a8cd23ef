// Shortest and longest factorizations, and the progression of lengths
// between them.

use affine_elasticity::oracle::enumerate_factorizations;
use affine_elasticity::solve3::{elasticity3, extreme_factorizations};
use affine_elasticity::{vec2, CanonicalMonoid3};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = CanonicalMonoid3::new(1, 2, 3, 5)?;
    for s in [vec2(6, 13), vec2(6, 20), vec2(7, 12)] {
        let e = extreme_factorizations(&m, &s)?;
        println!(
            "({s}) {} slope, t_max {}: shortest {}, longest {}, elasticity {}",
            e.branch.as_str(),
            e.t_max,
            e.shortest(),
            e.longest(),
            elasticity3(&m, &s)?
        );
        let lengths = enumerate_factorizations(&m.generators(), &s)?.lengths;
        let lengths: Vec<String> = lengths.iter().map(ToString::to_string).collect();
        println!("  all lengths: {}", lengths.join(" "));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
