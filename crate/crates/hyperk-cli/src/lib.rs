//! Command line front end for [`hyperk`].
//!
//! Five subcommands cover the library's surface: `classify` runs the
//! partition taxonomy checks on a JSON interval collection, `partition-gen`
//! lifts two real partitions to a strong partition, `variation` computes
//! hyperbolic total variation, `integrate` drives the adaptive
//! Riemann-Stieltjes integrator, and `verify parts` checks integration by
//! parts numerically.
//!
//! Every subcommand prints one JSON document to stdout. `--out` writes the
//! same bytes to a file, `--plot` (where offered) writes a whitespace table
//! with a `#` header line. Output is deterministic: the same invocation
//! produces the same bytes.
//!
//! Exit codes: `0` success with a positive verdict, `1` success with a
//! negative verdict (a failed classification, an unbounded variation, an
//! unconverged integral, a rejected identity), `2` bad input or a
//! computation error.

pub mod args;
pub mod run;
pub mod wire;

pub use args::Cli;
pub use run::run;
