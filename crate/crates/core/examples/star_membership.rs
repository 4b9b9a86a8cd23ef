// Three generators with bc - ad = 1: membership from the representation
// x = alpha*a + beta*c with 0 <= alpha < c.

use affine_elasticity::solve3::{canonical_rep, delta, member3_star, Membership3};
use affine_elasticity::{vec2, CanonicalMonoid3};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = CanonicalMonoid3::new(2, 1, 3, 1)?;
    for s in [vec2(7, 4), vec2(7, 2), vec2(1, 5), vec2(12, 4)] {
        let rep = canonical_rep(m.a(), m.c(), s.x())?;
        let forced = match &rep {
            Some(r) => Some(delta(&m, &s, &r.alpha, &r.beta)?),
            None => None,
        };
        let verdict = match member3_star(&m, &s)? {
            Membership3::Member(f) => format!("member {f}"),
            Membership3::NotMember(why) => format!("not a member ({why:?})"),
        };
        println!(
            "({s}): alpha,beta = {:?}, delta = {forced:?}: {verdict}",
            rep.map(|r| (r.alpha, r.beta))
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
