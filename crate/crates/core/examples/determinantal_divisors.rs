// d1 and d2 stay put under unimodular changes of basis and when a member
// is appended as a column.

use affine_elasticity::intlin::{det_divisors, row_swapped_hnf, Mat2xP};
use affine_elasticity::{vec2, UniMat2};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = Mat2xP::from_vecs(&[vec2(2, 5), vec2(3, 5), vec2(1, 4)])?;
    println!("d1, d2 = {:?}", det_divisors(&m));

    let u = UniMat2::from_i64([[2, 1], [7, 4]]).ok_or("not unimodular")?;
    println!("after {u}: {:?}", det_divisors(&m.left_mul(&u)));

    let (u, out) = row_swapped_hnf(&Mat2xP::from_vecs(&[vec2(2, 5), vec2(3, 5)])?)?;
    let cols: Vec<String> = out
        .cols()
        .iter()
        .map(|[x, y]| format!("({x},{y})"))
        .collect();
    println!("normal form {} via {u}", cols.join(" "));

    let member = vec2(2 * 2 + 3, 2 * 5 + 5);
    println!(
        "with ({member}) appended: {:?}",
        det_divisors(&m.with_column(&member))
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
