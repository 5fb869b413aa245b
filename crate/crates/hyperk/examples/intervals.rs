//! Intervals as order rectangles, degenerate ones included.
//!
//!     cargo run --example intervals

use hyperk::{Hyp, HypInterval};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let i = HypInterval::new(Hyp::new(0.0, 1.0), Hyp::new(2.0, 3.0))?;
    println!("I               = [{}, {}]", i.lo(), i.hi());
    println!("length(I)       = {}", i.length());
    let ([a1, b1], [a2, b2]) = i.project();
    println!("projections     = [{a1}, {b1}] x [{a2}, {b2}]");

    let inside = Hyp::new(1.0, 2.0);
    let outside = Hyp::new(1.0, 4.0);
    println!("{inside} in I    : {}", i.contains(inside));
    println!("{outside} in I    : {}", i.contains(outside));

    // Collapse one axis and the interval becomes a vertical segment: a
    // perfectly valid interval with zero e1-extent.
    let seg = HypInterval::new(Hyp::new(2.0, 0.0), Hyp::new(2.0, 3.0))?;
    println!("segment         = [{}, {}]", seg.lo(), seg.hi());
    println!("degenerate      : {}", seg.is_degenerate());
    println!("length          = {}", seg.length());
    // A degenerate interval has no interior points.
    println!("open contains   : {}", seg.contains_open(Hyp::new(2.0, 1.0)));

    // Endpoints must be ordered; incomparable corners are rejected.
    let bad = HypInterval::new(Hyp::new(0.0, 3.0), Hyp::new(2.0, 1.0));
    println!("bad corners     : {:?}", bad.err());
    Ok(())
}
