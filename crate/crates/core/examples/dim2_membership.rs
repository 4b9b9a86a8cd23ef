// Two generators: membership is a slope bound plus a divisibility check,
// and factorizations are unique.

use affine_elasticity::solve2::{elasticity2, member2, Membership2};
use affine_elasticity::{vec2, CanonicalMonoid2};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = CanonicalMonoid2::new(3, 2)?;
    for s in [vec2(6, 5), vec2(6, 3), vec2(5, 9), vec2(0, 4)] {
        match member2(&m, &s) {
            Membership2::Member(f) => {
                let rho = if s.is_zero() {
                    "undefined".to_string()
                } else {
                    elasticity2(&m, &s)?.to_string()
                };
                println!("({s}) = {f}, elasticity {rho}");
            }
            Membership2::NotMember(why) => println!("({s}) not a member: {why:?}"),
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
