// Elasticity of k*s for periodic k next to the limit as k grows.

use affine_elasticity::asymptotics::{rho_limit, rho_special_ac, rho_special_c};
use affine_elasticity::solve3::{elasticity3, Branch};
use affine_elasticity::{vec2, CanonicalMonoid3};
use num_bigint::BigInt;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = CanonicalMonoid3::new(1, 2, 3, 5)?;
    for s in [vec2(1, 3), vec2(4, 7)] {
        let (lft, limit) = rho_limit(&m, &s)?;
        let branch = Branch::of(&m, &s);
        println!(
            "({s}) {} the middle slope: {lft} -> {limit}",
            branch.as_str()
        );
        for kp in 1..=3u32 {
            let (k, special) = if branch == Branch::Upper {
                let k = m.c() * kp;
                let r = rho_special_c(&m, &s, &k)?;
                (k, r)
            } else {
                let k = m.a() * m.c() * kp;
                let r = rho_special_ac(&m, &s, &k)?;
                (k, r)
            };
            println!(
                "  k = {k}: closed form {special}, exact {}",
                elasticity3(&m, &s.scale(&k)?)?
            );
        }
        let k = BigInt::from(1000);
        println!("  k = 1000: exact {}", elasticity3(&m, &s.scale(&k)?)?);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
