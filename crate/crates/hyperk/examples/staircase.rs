//! Lifting two real partitions to staircase chains, then refining.
//!
//!     cargo run --example staircase

use hyperk::{gen_strong, Hyp, RealPartition, Strategy};

fn show(label: &str, points: &[Hyp]) {
    let path: Vec<String> = points.iter().map(|p| format!("({}, {})", p.a1, p.a2)).collect();
    println!("{label:<14} {}", path.join(" -> "));
}

fn main() {
    let p = RealPartition::new(vec![0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0]).unwrap();
    let q = RealPartition::new(vec![0.0, 0.5, 1.0]).unwrap();

    // Same marginals, different walks through the lattice.
    for (label, strat) in [
        ("e1 first:", Strategy::E1First),
        ("e2 first:", Strategy::E2First),
        ("diagonal:", Strategy::Diagonal),
        ("seeded 42:", Strategy::SeededRandom(42)),
    ] {
        let sp = gen_strong(&p, &q, strat);
        show(label, sp.points());
    }

    let sp = gen_strong(&p, &q, Strategy::Diagonal);
    let (pp, qq) = sp.project();
    println!("projections keep every abscissa: {:?} / {:?}", pp.points(), qq.points());
    println!("diameter      ({}, {})", sp.diameter().a1, sp.diameter().a2);

    // Refinement subdivides long steps diagonally and never drops a
    // point the chain already has.
    let fine = sp.refine(Hyp::new(0.2, 0.2));
    show("refined:", fine.points());
    println!("new diameter  ({}, {})", fine.diameter().a1, fine.diameter().a2);
}
