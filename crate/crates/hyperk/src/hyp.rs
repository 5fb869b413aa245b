//! Hyperbolic numbers `t + s·k`, `k² = 1`, in idempotent coordinates.
//!
//! The basis `e1 = (1+k)/2`, `e2 = (1-k)/2` satisfies `e1² = e1`,
//! `e2² = e2`, `e1·e2 = 0`, `e1 + e2 = 1`. A number `α = a1·e1 + a2·e2`
//! multiplies, divides and compares component-wise in this basis, so it is
//! the canonical internal form; standard coordinates are a view.
//!
//! ```
//! use hyperk::Hyp;
//!
//! let a = Hyp::from_standard(2.0, 1.0);
//! assert_eq!(a, Hyp::new(3.0, 1.0));
//! assert_eq!(Hyp::K * Hyp::K, Hyp::ONE);
//! assert_eq!(Hyp::E1 * Hyp::E2, Hyp::ZERO);
//! ```

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A hyperbolic number `a1·e1 + a2·e2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyp {
    pub a1: f64,
    pub a2: f64,
}

impl Hyp {
    pub const ZERO: Hyp = Hyp { a1: 0.0, a2: 0.0 };
    pub const ONE: Hyp = Hyp { a1: 1.0, a2: 1.0 };
    pub const E1: Hyp = Hyp { a1: 1.0, a2: 0.0 };
    pub const E2: Hyp = Hyp { a1: 0.0, a2: 1.0 };
    pub const K: Hyp = Hyp { a1: 1.0, a2: -1.0 };

    pub fn new(a1: f64, a2: f64) -> Hyp {
        Hyp { a1, a2 }
    }

    /// Embeds a real number: the diagonal `x·e1 + x·e2`.
    pub fn real(x: f64) -> Hyp {
        Hyp { a1: x, a2: x }
    }

    /// From standard coordinates `t + s·k`: `a1 = t + s`, `a2 = t - s`.
    pub fn from_standard(t: f64, s: f64) -> Hyp {
        Hyp { a1: t + s, a2: t - s }
    }

    /// Standard coordinates `(t, s)` with `t = (a1+a2)/2`, `s = (a1-a2)/2`.
    pub fn to_standard(self) -> (f64, f64) {
        ((self.a1 + self.a2) / 2.0, (self.a1 - self.a2) / 2.0)
    }

    /// Conjugation swaps the idempotent components (`t + s·k ↦ t - s·k`).
    pub fn conjugate(self) -> Hyp {
        Hyp { a1: self.a2, a2: self.a1 }
    }

    /// The hyperbolic module `|α|_k = |a1|·e1 + |a2|·e2`.
    pub fn k_module(self) -> Hyp {
        Hyp { a1: self.a1.abs(), a2: self.a2.abs() }
    }

    /// The hyperbolic-valued distance `D_k(α, β) = |α - β|_k`.
    pub fn metric(self, other: Hyp) -> Hyp {
        (self - other).k_module()
    }

    /// Component-wise division. The divisor must have both components
    /// nonzero: zero divisors (and zero) are not invertible. Fallible, so
    /// deliberately not `std::ops::Div`.
    #[allow(clippy::should_implement_trait)]
    pub fn div(self, rhs: Hyp) -> Result<Hyp, Error> {
        if rhs.a1 == 0.0 || rhs.a2 == 0.0 {
            return Err(Error::ZeroDivisorDenominator);
        }
        Ok(Hyp { a1: self.a1 / rhs.a1, a2: self.a2 / rhs.a2 })
    }

    /// The partial order `self ⪯ other`: both components `≤`.
    pub fn leq(self, other: Hyp) -> bool {
        self.a1 <= other.a1 && self.a2 <= other.a2
    }

    /// The strict order `self ≺ other`: both components `<`. Note this is
    /// stronger than `⪯ and ≠`, which is why `Hyp` has no `PartialOrd`:
    /// the `<` operator would disagree with `≺`.
    pub fn strict_lt(self, other: Hyp) -> bool {
        self.a1 < other.a1 && self.a2 < other.a2
    }

    /// Whether the pair is comparable under `⪯` in either direction.
    pub fn comparable(self, other: Hyp) -> bool {
        self.leq(other) || other.leq(self)
    }

    /// Component-wise maximum: the supremum of the two-element set.
    pub fn sup(self, other: Hyp) -> Hyp {
        Hyp { a1: self.a1.max(other.a1), a2: self.a2.max(other.a2) }
    }

    /// Component-wise minimum.
    pub fn inf(self, other: Hyp) -> Hyp {
        Hyp { a1: self.a1.min(other.a1), a2: self.a2.min(other.a2) }
    }

    pub fn is_finite(self) -> bool {
        self.a1.is_finite() && self.a2.is_finite()
    }
}

/// `Sup` of a finite set: component-wise suprema over the e1- and
/// e2-projections. Need not belong to the set.
pub fn sup_set(set: &[Hyp]) -> Result<Hyp, Error> {
    match set.split_first() {
        None => Err(Error::EmptySet),
        Some((&first, rest)) => Ok(rest.iter().fold(first, |acc, &x| acc.sup(x))),
    }
}

/// `Inf` of a finite set, component-wise.
pub fn inf_set(set: &[Hyp]) -> Result<Hyp, Error> {
    match set.split_first() {
        None => Err(Error::EmptySet),
        Some((&first, rest)) => Ok(rest.iter().fold(first, |acc, &x| acc.inf(x))),
    }
}

impl Add for Hyp {
    type Output = Hyp;
    fn add(self, rhs: Hyp) -> Hyp {
        Hyp { a1: self.a1 + rhs.a1, a2: self.a2 + rhs.a2 }
    }
}

impl Sub for Hyp {
    type Output = Hyp;
    fn sub(self, rhs: Hyp) -> Hyp {
        Hyp { a1: self.a1 - rhs.a1, a2: self.a2 - rhs.a2 }
    }
}

impl Mul for Hyp {
    type Output = Hyp;
    fn mul(self, rhs: Hyp) -> Hyp {
        Hyp { a1: self.a1 * rhs.a1, a2: self.a2 * rhs.a2 }
    }
}

impl Mul<f64> for Hyp {
    type Output = Hyp;
    fn mul(self, rhs: f64) -> Hyp {
        Hyp { a1: self.a1 * rhs, a2: self.a2 * rhs }
    }
}

impl Neg for Hyp {
    type Output = Hyp;
    fn neg(self) -> Hyp {
        Hyp { a1: -self.a1, a2: -self.a2 }
    }
}

impl fmt::Display for Hyp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a2 < 0.0 {
            write!(f, "{}e1 - {}e2", self.a1, -self.a2)
        } else {
            write!(f, "{}e1 + {}e2", self.a1, self.a2)
        }
    }
}

impl Serialize for Hyp {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        // Writers always emit the idempotent form.
        #[derive(Serialize)]
        struct Idem {
            e1: f64,
            e2: f64,
        }
        Idem { e1: self.a1, e2: self.a2 }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Hyp {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Hyp, D::Error> {
        // Readers accept standard or idempotent coordinates.
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Idem { e1: f64, e2: f64 },
            Std { t: f64, s: f64 },
        }
        Ok(match Repr::deserialize(deserializer)? {
            Repr::Idem { e1, e2 } => Hyp::new(e1, e2),
            Repr::Std { t, s } => Hyp::from_standard(t, s),
        })
    }
}
