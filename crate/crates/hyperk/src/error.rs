//! One error type for the whole crate.
//!
//! Verdicts are not errors: a collection that fails a partition check or an
//! integral that reports non-convergence comes back as an ordinary value.
//! `Error` is reserved for inputs that violate a precondition or leave the
//! real domain during evaluation.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Supremum or infimum of an empty set.
    EmptySet,
    /// A partition needs at least one point.
    EmptyPartition,
    /// Interval endpoints are incomparable or reversed.
    NotOrdered,
    /// A denominator component is zero; the divisor is a zero divisor (or zero).
    ZeroDivisorDenominator,
    /// A coordinate was NaN or infinite where a finite value is required.
    NonFinite,
    /// Malformed expression text; `pos` is a byte offset into the input.
    Syntax { pos: usize, msg: String },
    /// A call to a function name the expression language does not know.
    UnknownFunction { pos: usize, name: String },
    /// Evaluation left the real domain (log/sqrt argument, division by zero).
    Domain(String),
    /// Symbolic differentiation refused; the tree contains an `abs` node.
    NotDifferentiable,
    /// A collection piece is not contained in the parent interval.
    PieceOutsideParent,
    /// A declared jump abscissa lies outside the projected domain.
    JumpOutsideDomain { component: u8, abscissa: f64 },
    /// Brute-force grid exceeds the supported size.
    GridTooLarge { points: usize, max: usize },
    /// An adaptive loop hit its refinement cap without meeting tolerance.
    NoConvergence { context: &'static str, refinements: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptySet => write!(f, "supremum of an empty set"),
            Error::EmptyPartition => write!(f, "partition has no points"),
            Error::NotOrdered => write!(f, "endpoints are not ordered lo ⪯ hi"),
            Error::ZeroDivisorDenominator => {
                write!(f, "division by a zero divisor (a component is zero)")
            }
            Error::NonFinite => write!(f, "coordinate is NaN or infinite"),
            Error::Syntax { pos, msg } => write!(f, "syntax error at {}: {}", pos, msg),
            Error::UnknownFunction { pos, name } => {
                write!(f, "unknown function `{}` at {}", name, pos)
            }
            Error::Domain(msg) => write!(f, "domain error: {}", msg),
            Error::NotDifferentiable => write!(f, "expression is not differentiable (abs)"),
            Error::PieceOutsideParent => write!(f, "piece lies outside the parent interval"),
            Error::JumpOutsideDomain { component, abscissa } => {
                write!(f, "jump at {} outside component-{} domain", abscissa, component)
            }
            Error::GridTooLarge { points, max } => {
                write!(f, "grid has {} points, limit is {}", points, max)
            }
            Error::NoConvergence { context, refinements } => {
                write!(f, "{}: no convergence after {} refinements", context, refinements)
            }
        }
    }
}

impl std::error::Error for Error {}
