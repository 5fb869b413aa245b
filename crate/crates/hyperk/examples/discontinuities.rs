//! Jump sets of separable step functions: planar-null, hyperbolically
//! long.
//!
//!     cargo run --example discontinuities

use hyperk::sweep::union_area;
use hyperk::variation::discontinuity_lines;
use hyperk::{Hyp, HypInterval, SeparableFn};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A double step in e1 and a single step in e2, with the jump
    // abscissae declared up front.
    let f = SeparableFn::from_natives(
        |x| if x < 0.25 { 0.0 } else if x < 0.75 { 1.0 } else { 3.0 },
        |y| if y < 0.5 { -1.0 } else { 2.0 },
    )
    .with_jumps(vec![0.25, 0.75], vec![0.5]);

    let i = HypInterval::from_real(0.0, 1.0)?;
    let lines = discontinuity_lines(&f, &i)?;
    println!("vertical lines at   {:?}", lines.vertical);
    println!("horizontal lines at {:?}", lines.horizontal);

    for seg in lines.segments() {
        println!(
            "segment [{}, {}]  length {}  degenerate {}",
            seg.lo(),
            seg.hi(),
            seg.length(),
            seg.is_degenerate()
        );
    }

    // As plane sets the lines are null: the rational sweep says so
    // exactly. As hyperbolic intervals they still have nonzero length.
    println!("planar area of all lines = {}", union_area(&lines.rects()));
    println!("on a line: {}", lines.contains(Hyp::new(0.25, 0.9)));
    println!("off lines: {}", lines.contains(Hyp::new(0.1, 0.1)));

    // Declaring a jump outside the window is refused.
    let bad = SeparableFn::parse("x", "x")?.with_jumps(vec![1.5], vec![]);
    println!("jump at 1.5 in [0,1]: {:?}", discontinuity_lines(&bad, &i).err());
    Ok(())
}
