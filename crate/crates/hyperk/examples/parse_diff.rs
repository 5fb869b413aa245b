//! The expression language: parse, evaluate, differentiate, print.
//!
//!     cargo run --example parse_diff

use hyperk::{Error, Expr};

fn main() {
    let e = Expr::parse("x^2 * sin(x) + 1/x").unwrap();
    println!("parsed      {e}");
    println!("at x = 2    {}", e.eval(2.0).unwrap());

    let d = e.differentiate().unwrap();
    println!("derivative  {d}");
    println!("d at x = 2  {}", d.eval(2.0).unwrap());

    // Printing respects precedence, and reparsing the print is stable.
    let round = Expr::parse(&d.to_string()).unwrap();
    assert_eq!(round.to_string(), d.to_string());

    // Unary minus binds tighter than the power: -x^2 squares the negation.
    let neg = Expr::parse("-x^2").unwrap();
    println!("-x^2 at 3   {}", neg.eval(3.0).unwrap());

    // Errors carry byte positions.
    for bad in ["x + ", "foo(x)", "(x", "x 5"] {
        match Expr::parse(bad) {
            Err(Error::Syntax { pos, msg }) => println!("{bad:>8}    syntax error at {pos}: {msg}"),
            Err(Error::UnknownFunction { pos, name }) => {
                println!("{bad:>8}    unknown function {name:?} at {pos}")
            }
            other => println!("{bad:>8}    {other:?}"),
        }
    }

    // Domain trouble is a runtime answer, not a parse failure.
    let log = Expr::parse("log(x)").unwrap();
    println!("log(-1)     {:?}", log.eval(-1.0));

    // abs parses and evaluates, but has no derivative here.
    let kinked = Expr::parse("abs(x - 1) + x").unwrap();
    println!("kinked      {:?}", kinked.differentiate());
}
