// Brings an arbitrary generating set to the form <(0,1), (a,b), (c,d)>.

use affine_elasticity::cli::parse_monoid;
use affine_elasticity::monoid::validate_minimal_generation;
use affine_elasticity::{canonicalize, vec2};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["2,1;3,1", "3,1;0,1;1,2", "2,5;3,5", "5,2;7,3;1,1"] {
        let raw = parse_monoid(text)?;
        let canon = canonicalize(&raw)?;
        let gens: Vec<String> = canon
            .generators()
            .iter()
            .map(|g| format!("({g})"))
            .collect();
        println!("{text:>14} -> {} via {}", gens.join(" "), canon.transform());
        println!(
            "{:>14}    order {:?}, bc-ad=1: {:?}, minimal: {}",
            "",
            canon.order(),
            canon.star(),
            validate_minimal_generation(&canon)
        );
    }

    let raw = parse_monoid("5,2;7,3;1,1")?;
    let canon = canonicalize(&raw)?;
    let s = vec2(13, 6);
    println!(
        "({s}) maps to {:?}",
        canon.to_canonical(&s).map(|t| t.to_string())
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
