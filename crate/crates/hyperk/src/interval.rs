//! Order intervals `[α, β]_k = {ξ : α ⪯ ξ ⪯ β}`.
//!
//! Geometrically an axis-aligned rectangle in the idempotent plane: the
//! product of the two projected real intervals. An interval is degenerate
//! when at least one projection collapses to a point; degenerate intervals
//! are ordinary values here, not errors, because partition arithmetic and
//! integration bounds rely on them.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::hyp::Hyp;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawInterval")]
pub struct HypInterval {
    lo: Hyp,
    hi: Hyp,
}

#[derive(Deserialize)]
struct RawInterval {
    lo: Hyp,
    hi: Hyp,
}

impl TryFrom<RawInterval> for HypInterval {
    type Error = Error;
    fn try_from(raw: RawInterval) -> Result<HypInterval, Error> {
        HypInterval::new(raw.lo, raw.hi)
    }
}

impl HypInterval {
    /// Requires `lo ⪯ hi`; incomparable or reversed endpoints are rejected.
    pub fn new(lo: Hyp, hi: Hyp) -> Result<HypInterval, Error> {
        if !lo.is_finite() || !hi.is_finite() || !lo.leq(hi) {
            return Err(Error::NotOrdered);
        }
        Ok(HypInterval { lo, hi })
    }

    /// The embedded real interval `[a, b]`, a segment on the diagonal.
    pub fn from_real(a: f64, b: f64) -> Result<HypInterval, Error> {
        HypInterval::new(Hyp::real(a), Hyp::real(b))
    }

    pub fn lo(&self) -> Hyp {
        self.lo
    }

    pub fn hi(&self) -> Hyp {
        self.hi
    }

    /// The hyperbolic length `λ_k = β - α`. Always `⪰ 0`.
    pub fn length(&self) -> Hyp {
        self.hi - self.lo
    }

    /// Degenerate iff some projection is a single point.
    pub fn is_degenerate(&self) -> bool {
        self.lo.a1 == self.hi.a1 || self.lo.a2 == self.hi.a2
    }

    /// Both projections are points.
    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Closed membership `α ⪯ ξ ⪯ β`.
    pub fn contains(&self, xi: Hyp) -> bool {
        self.lo.leq(xi) && xi.leq(self.hi)
    }

    /// Open membership `α ≺ ξ ≺ β`. A degenerate interval has no
    /// interior points.
    pub fn contains_open(&self, xi: Hyp) -> bool {
        self.lo.strict_lt(xi) && xi.strict_lt(self.hi)
    }

    /// The projected real intervals `([a1, b1], [a2, b2])`.
    pub fn project(&self) -> ([f64; 2], [f64; 2]) {
        ([self.lo.a1, self.hi.a1], [self.lo.a2, self.hi.a2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints_must_be_ordered() {
        assert!(HypInterval::new(Hyp::ZERO, Hyp::ONE).is_ok());
        // Incomparable endpoints span no order interval.
        let r = HypInterval::new(Hyp::new(1.0, 2.0), Hyp::new(2.0, 1.0));
        assert_eq!(r.unwrap_err(), Error::NotOrdered);
        let r = HypInterval::new(Hyp::ONE, Hyp::ZERO);
        assert_eq!(r.unwrap_err(), Error::NotOrdered);
    }

    #[test]
    fn length_is_endpoint_difference() {
        let i = HypInterval::new(Hyp::ZERO, Hyp::new(2.0, 3.0)).unwrap();
        assert_eq!(i.length(), Hyp::new(2.0, 3.0));
        assert_eq!(i.length(), i.lo().metric(i.hi()));
        assert_eq!(HypInterval::from_real(0.0, 1.0).unwrap().length(), Hyp::ONE);
    }

    #[test]
    fn degenerate_intervals_are_values() {
        let seg = HypInterval::new(Hyp::new(1.0, 2.0), Hyp::new(1.0, 5.0)).unwrap();
        assert!(seg.is_degenerate());
        assert!(!seg.is_point());
        assert_eq!(seg.length(), Hyp::new(0.0, 3.0));
        let pt = HypInterval::new(Hyp::ONE, Hyp::ONE).unwrap();
        assert!(pt.is_degenerate() && pt.is_point());
        let full = HypInterval::from_real(0.0, 1.0).unwrap();
        assert!(!full.is_degenerate());
    }

    #[test]
    fn membership_closed_and_open() {
        let i = HypInterval::from_real(0.0, 1.0).unwrap();
        assert!(i.contains(Hyp::ZERO));
        assert!(i.contains(Hyp::new(0.5, 0.25)));
        assert!(!i.contains(Hyp::new(0.5, 1.25)));
        assert!(!i.contains_open(Hyp::ZERO));
        assert!(i.contains_open(Hyp::new(0.5, 0.25)));
        // Degenerate: closed membership on the segment, empty interior.
        let seg = HypInterval::new(Hyp::new(1.0, 0.0), Hyp::new(1.0, 1.0)).unwrap();
        assert!(seg.contains(Hyp::new(1.0, 0.5)));
        assert!(!seg.contains_open(Hyp::new(1.0, 0.5)));
    }

    #[test]
    fn projections() {
        let i = HypInterval::new(Hyp::new(0.0, 1.0), Hyp::new(2.0, 3.0)).unwrap();
        assert_eq!(i.project(), ([0.0, 2.0], [1.0, 3.0]));
    }

    #[test]
    fn json_round_trip_validates() {
        let i = HypInterval::new(Hyp::ZERO, Hyp::new(2.0, 3.0)).unwrap();
        let s = serde_json::to_string(&i).unwrap();
        assert_eq!(s, r#"{"lo":{"e1":0.0,"e2":0.0},"hi":{"e1":2.0,"e2":3.0}}"#);
        let back: HypInterval = serde_json::from_str(&s).unwrap();
        assert_eq!(back, i);
        let bad = r#"{"lo":{"e1":1.0,"e2":2.0},"hi":{"e1":2.0,"e2":1.0}}"#;
        assert!(serde_json::from_str::<HypInterval>(bad).is_err());
    }
}
