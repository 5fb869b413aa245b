//! Checking ∫ F d_kG against ∫ F·G' d_kξ.
//!
//!     cargo run --example by_parts

use hyperk::stieltjes::verify_integration_by_parts;
use hyperk::{Hyp, HypInterval, SeparableFn};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let i = HypInterval::from_real(0.0, 1.0)?;
    let tol = Hyp::new(1e-6, 1e-6);

    // ∫ ξ d(ξ²) = ∫ 2ξ² d_kξ = (2/3, 2/3).
    let f = SeparableFn::identity();
    let g = SeparableFn::parse("x^2", "x^2")?;
    let check = verify_integration_by_parts(&f, &g, &i, tol)?;
    println!("∫ ξ d(ξ²)      = {}", check.direct.value);
    println!("∫ ξ·2ξ d_kξ    = {}", check.reduced.value);
    println!("residual       = {}", check.residual);
    println!("within {tol}: {}", check.within_tolerance);

    // A messier pair: the two routes still land together.
    let f = SeparableFn::parse("sin(x)", "exp(x/2)")?;
    let g = SeparableFn::parse("x^2/2 + x", "x - cos(x)")?;
    let check = verify_integration_by_parts(&f, &g, &i, tol)?;
    println!("\nsin/exp against quadratic/cosine integrators");
    println!("direct         = {}", check.direct.value);
    println!("reduced        = {}", check.reduced.value);
    println!("residual       = {}", check.residual);
    println!("within {tol}: {}", check.within_tolerance);

    // G with a kink cannot be differentiated, and says so.
    let g = SeparableFn::parse("abs(x - 0.5)", "x")?;
    println!("\nkinked G       : {:?}", verify_integration_by_parts(&f, &g, &i, tol).err());
    Ok(())
}
