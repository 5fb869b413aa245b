//! Basic arithmetic in the idempotent representation.
//!
//!     cargo run --example arithmetic

use hyperk::Hyp;

fn main() {
    // 2 + 1k in the standard basis is (3, 1) in the idempotent one.
    let alpha = Hyp::from_standard(2.0, 1.0);
    let (t, s) = alpha.to_standard();
    println!("alpha           = {alpha}  (t = {t}, s = {s})");

    // Multiplication is component-wise, and k * k = 1.
    println!("k * k           = {}", Hyp::K * Hyp::K);
    println!("e1 * e2         = {}", Hyp::E1 * Hyp::E2);

    // e1 and e2 are zero divisors: neither is invertible.
    println!("e1 / e2         = {:?}", Hyp::E1.div(Hyp::E2));
    let beta = Hyp::new(4.0, 0.5);
    println!("alpha / beta    = {}", alpha.div(beta).unwrap());

    // The order compares both components at once, so some pairs simply
    // do not compare.
    let gamma = Hyp::new(1.0, 5.0);
    println!("alpha <= beta   : {}", alpha.leq(beta));
    println!("alpha ~  gamma  : {}", alpha.comparable(gamma));
    println!("sup(alpha,gamma)= {}", alpha.sup(gamma));
    println!("inf(alpha,gamma)= {}", alpha.inf(gamma));

    // Conjugation swaps the components; alpha * conj(alpha) is real.
    println!("conj(alpha)     = {}", alpha.conjugate());
    println!("alpha * conj    = {}", alpha * alpha.conjugate());

    // The modulus and the distance it induces are hyperbolic-valued.
    let delta = Hyp::new(-3.0, 2.0);
    println!("|delta|_k       = {}", delta.k_module());
    println!("D_k(alpha,delta)= {}", alpha.metric(delta));
}
