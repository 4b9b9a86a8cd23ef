// Checks the closed forms against brute-force enumeration on a small grid.

use affine_elasticity::oracle::{elasticity_oracle, enumerate_factorizations};
use affine_elasticity::solve3::{elasticity3, member3_star};
use affine_elasticity::{vec2, CanonicalMonoid3};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = CanonicalMonoid3::new(3, 2, 5, 3)?;
    let gens = m.generators();
    let (mut members, mut agreed) = (0, 0);
    for x in 0..=30 {
        for y in 0..=30 {
            let s = vec2(x, y);
            let brute = enumerate_factorizations(&gens, &s)?;
            if member3_star(&m, &s)?.is_member() != brute.is_member() {
                return Err(format!("membership disagrees at ({s})").into());
            }
            if brute.is_member() && !s.is_zero() {
                members += 1;
                if elasticity3(&m, &s)? == elasticity_oracle(&gens, &s)? {
                    agreed += 1;
                }
            }
        }
    }
    println!("(0,1) (3,2) (5,3): {agreed} of {members} nonzero members agree on elasticity");
    if agreed != members {
        return Err("elasticity disagrees".into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
