//! The three partition notions pulled apart on one parent square.
//!
//!     cargo run --example partitions

use hyperk::partition::{
    check_regular, check_strong, check_weak, IntervalCollection, StrongVerdict,
};
use hyperk::{Hyp, HypInterval};

fn cell(x0: f64, x1: f64, y0: f64, y1: f64) -> HypInterval {
    HypInterval::new(Hyp::new(x0, y0), Hyp::new(x1, y1)).unwrap()
}

fn main() {
    let parent = HypInterval::from_real(0.0, 1.0).unwrap();
    let t = 1.0 / 3.0;

    // Nine congruent cells tile the square exactly: regular. But their
    // lengths add up to (3, 3), three times the parent length: not weak.
    let mut nine = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let (x0, y0) = (i as f64 * t, j as f64 * t);
            nine.push(cell(x0, x0 + t, y0, y0 + t));
        }
    }
    let nine = IntervalCollection { parent, pieces: nine };
    println!("nine cells   regular: {:?}", check_regular(&nine));
    println!("nine cells   weak   : {:?}", check_weak(&nine).unwrap());

    // Three blocks down the diagonal sum to exactly the parent length:
    // weak. They leave the off-diagonal uncovered: not regular.
    let diag = IntervalCollection {
        parent,
        pieces: (0..3)
            .map(|i| {
                let a = i as f64 * t;
                cell(a, a + t, a, a + t)
            })
            .collect(),
    };
    println!("diagonal     regular: {:?}", check_regular(&diag));
    println!("diagonal     weak   : {:?}", check_weak(&diag).unwrap());

    // A strong partition is a chain of comparable points through the
    // interval. The rejection reasons are specific.
    let chain = vec![
        Hyp::new(0.0, 0.0),
        Hyp::new(t, t),
        Hyp::new(t, 1.0),
        Hyp::new(1.0, 1.0),
    ];
    println!("chain               : {:?}", check_strong(&chain, &parent));

    let broken = vec![Hyp::new(0.0, 0.0), Hyp::new(0.8, 0.2), Hyp::new(0.3, 1.0)];
    match check_strong(&broken, &parent) {
        StrongVerdict::Strong => println!("broken chain        : strong?!"),
        StrongVerdict::Violation(v) => println!("broken chain        : {v}"),
    }
}
