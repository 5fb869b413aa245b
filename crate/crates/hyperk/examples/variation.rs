//! Total variation three ways: monotone decomposition, refinement
//! estimation, and the grid brute force.
//!
//!     cargo run --example variation

use hyperk::variation::{
    total_variation_bruteforce, total_variation_separable, variation_sum, Grid,
};
use hyperk::{Hyp, HypInterval, SeparableFn};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let i = HypInterval::new(Hyp::new(-1.0, -1.0), Hyp::new(1.0, 1.0))?;

    // Smooth components take the exact route: sample the derivative,
    // bisect its sign changes, sum over the monotone pieces.
    let smooth = SeparableFn::parse("x^2", "sin(x)")?;
    let r = total_variation_separable(&smooth, &i)?;
    println!("V(x^2, sin x) on [-1,1]^2 = {}", r.value);
    println!("  exact route: {}, partitions examined: {}", r.exact, r.partitions_examined);
    // The witness chain reproduces the value through the generic sum.
    println!("  witness reproduces it  : {}", variation_sum(&smooth, &r.witness)? == r.value);

    // abs has no derivative at the kink, so that component falls back to
    // doubling refinement; the answer is still V = 2 (down 1, up 1).
    let kinked = SeparableFn::parse("abs(x)", "x")?;
    let r = total_variation_separable(&kinked, &i)?;
    println!("V(|x|, x)                 = {}", r.value);
    println!("  exact route: {}", r.exact);

    // The brute force maximizes over every maximal staircase path of a
    // finite grid and needs no separability at all.
    let grid = Grid::uniform(&i, 7, 7)?;
    let b = total_variation_bruteforce(&smooth, &grid)?;
    println!("grid maximum over {} paths = {}", b.paths, b.value);
    println!("  e1 witness: {} points", b.witness_e1.points().len());
    Ok(())
}
