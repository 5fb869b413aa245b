//! Analysis over the hyperbolic (split-complex) numbers.
//!
//! The plane `K = {t + s·k : k² = 1}` is a commutative ring with zero
//! divisors. Everything here works in the idempotent basis `e1 = (1+k)/2`,
//! `e2 = (1-k)/2`, where arithmetic is component-wise and the natural
//! partial order `⪯` compares both components at once.
//!
//! The crate builds up, in order: the number type and its partial order
//! ([`hyp`]), rectangles as order intervals ([`interval`]), three partition
//! taxonomies and staircase chains ([`partition`]), a small expression
//! language with symbolic differentiation ([`expr`]), separable
//! hyperbolic-valued functions ([`func`]), bounded variation ([`variation`]),
//! and Riemann-Stieltjes integration ([`stieltjes`]). Exact rectangle-cover
//! verdicts are decided by a rational sweep in [`sweep`].
//!
//! Start with the runnable examples in `examples/`; each one exercises a
//! single capability end to end.

pub mod error;
pub mod expr;
pub mod func;
pub mod hyp;
pub mod interval;
pub mod partition;
pub mod stieltjes;
pub mod sweep;
pub mod variation;

pub use error::Error;
pub use expr::Expr;
pub use func::SeparableFn;
pub use hyp::Hyp;
pub use interval::HypInterval;
pub use partition::{gen_strong, IntervalCollection, RealPartition, Strategy, StrongPartition};
