// CSV of rho(k*s), its limit and the gap, as the `scan` command prints it.

use affine_elasticity::asymptotics::{scan_csv, scan_multiples};
use affine_elasticity::{vec2, CanonicalMonoid3};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = CanonicalMonoid3::new(1, 2, 3, 5)?;
    let rows = scan_multiples(&m, &vec2(1, 3), 12)?;
    print!("{}", scan_csv(&rows));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
