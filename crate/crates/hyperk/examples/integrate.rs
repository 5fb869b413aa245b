//! Riemann-Stieltjes integration with the refinement trace.
//!
//!     cargo run --example integrate

use hyperk::stieltjes::{rs_integral, rs_integral_components, rs_integral_with, IntegrateOpts, Mode};
use hyperk::{HypInterval, SeparableFn};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = SeparableFn::parse("x^2", "sin(x)")?;
    let g = SeparableFn::parse("x^3", "x")?;
    let i = HypInterval::from_real(0.0, 1.0)?;

    let r = rs_integral(&f, &g, &i)?;
    println!("∫ (x^2, sin x) d(x^3, x) over the unit square");
    println!("value          {}", r.value);
    println!("converged      {} after {} refinements", r.converged, r.refinements);
    if let Some(err) = r.error_estimate {
        println!("error estimate {err}");
    }
    println!("trace (every 3rd level):");
    for entry in r.trace.iter().step_by(3) {
        println!("  diameter {:>12.6e}  sum {}", entry.diameter.a1, entry.sum);
    }

    // The independent route: one classical real integral per component.
    let other = rs_integral_components(&f, &g, &i)?;
    println!("component route {other}");
    println!("agreement       {}", (r.value - other).k_module());

    // Closed forms for this pair: ∫x² d(x³) = 3/5, ∫sin dx = 1 - cos 1.
    println!("closed form     ({}, {})", 0.6, 1.0 - 1.0f64.cos());

    // Absolute mode weighs increments by hyperbolic modulus instead.
    let abs = rs_integral_with(
        &f,
        &g,
        &i,
        &IntegrateOpts { mode: Mode::Absolute, ..IntegrateOpts::default() },
    )?;
    println!("absolute mode   {}", abs.value);
    Ok(())
}
