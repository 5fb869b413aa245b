//! Partitions of hyperbolic intervals, three ways.
//!
//! A *regular* partition tiles the parent rectangle as a planar set. A
//! *weak* partition only balances hyperbolic lengths: the piece lengths sum
//! to the parent length, with no coverage requirement. A *strong* partition
//! is a `⪯`-chain of points from `α` to `β`. The three notions genuinely
//! differ; the checks here return verdicts, not errors, so callers can
//! exhibit the differences.
//!
//! Strong partitions are built from two real partitions by staircase
//! lifting ([`gen_strong`]): walk the lattice of index pairs, advancing at
//! least one projection per step. The result is never unique; four
//! deterministic strategies are provided.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::hyp::Hyp;
use crate::interval::HypInterval;
use crate::sweep::{self, CoverVerdict, Rect};

/// A strictly increasing list of reals; the first and last entries are the
/// endpoints of the partitioned interval. A single point is allowed and
/// stands for a degenerate (zero-width) projection.
#[derive(Debug, Clone, PartialEq)]
pub struct RealPartition {
    points: Vec<f64>,
}

impl RealPartition {
    pub fn new(points: Vec<f64>) -> Result<RealPartition, Error> {
        if points.is_empty() {
            return Err(Error::EmptyPartition);
        }
        if points.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotOrdered);
        }
        Ok(RealPartition { points })
    }

    /// `n` equal subintervals of `[a, b]`; a single point when `a == b`.
    pub fn uniform(a: f64, b: f64, n: usize) -> Result<RealPartition, Error> {
        if a == b {
            return RealPartition::new(vec![a]);
        }
        if n == 0 {
            return Err(Error::EmptyPartition);
        }
        let mut points = Vec::with_capacity(n + 1);
        for i in 0..=n {
            points.push(a + (b - a) * (i as f64 / n as f64));
        }
        // Endpoints exactly, whatever rounding did in between.
        points[0] = a;
        points[n] = b;
        RealPartition::new(points)
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn a(&self) -> f64 {
        self.points[0]
    }

    pub fn b(&self) -> f64 {
        *self.points.last().unwrap()
    }

    /// Largest gap between consecutive points; 0 for a single point.
    pub fn max_gap(&self) -> f64 {
        self.points.windows(2).map(|w| w[1] - w[0]).fold(0.0, f64::max)
    }
}

/// Why a point list fails to be a strong partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainViolation {
    Empty,
    Duplicate,
    IncomparablePair,
    NotSorted,
    WrongEndpoints,
}

impl std::fmt::Display for ChainViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let msg = match self {
            ChainViolation::Empty => "no points",
            ChainViolation::Duplicate => "duplicate point",
            ChainViolation::IncomparablePair => "consecutive points are incomparable",
            ChainViolation::NotSorted => "points are not ascending",
            ChainViolation::WrongEndpoints => "endpoints do not match the parent interval",
        };
        f.write_str(msg)
    }
}

impl std::error::Error for ChainViolation {}

/// Verdict of [`check_strong`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrongVerdict {
    Strong,
    Violation(ChainViolation),
}

/// Classifies a raw point list against a parent interval.
pub fn check_strong(points: &[Hyp], parent: &HypInterval) -> StrongVerdict {
    match chain_violation(points) {
        Some(v) => StrongVerdict::Violation(v),
        None => {
            let last = points[points.len() - 1];
            if points[0] != parent.lo() || last != parent.hi() {
                StrongVerdict::Violation(ChainViolation::WrongEndpoints)
            } else {
                StrongVerdict::Strong
            }
        }
    }
}

fn chain_violation(points: &[Hyp]) -> Option<ChainViolation> {
    if points.is_empty() {
        return Some(ChainViolation::Empty);
    }
    for w in points.windows(2) {
        if w[0] == w[1] {
            return Some(ChainViolation::Duplicate);
        }
        if !w[0].comparable(w[1]) {
            return Some(ChainViolation::IncomparablePair);
        }
        if !w[0].leq(w[1]) {
            return Some(ChainViolation::NotSorted);
        }
    }
    // Ascending distinct consecutive points make the whole list a chain of
    // distinct points, so no further pair needs checking.
    None
}

/// A finite `⪯`-chain `ρ_0 ⪯ ρ_1 ⪯ … ⪯ ρ_n` of distinct points. The
/// endpoints are the partitioned interval's corners.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPartition")]
pub struct StrongPartition {
    points: Vec<Hyp>,
}

#[derive(Deserialize)]
struct RawPartition {
    points: Vec<Hyp>,
}

impl TryFrom<RawPartition> for StrongPartition {
    type Error = ChainViolation;
    fn try_from(raw: RawPartition) -> Result<StrongPartition, ChainViolation> {
        StrongPartition::new(raw.points)
    }
}

/// Tie-breaking rule for staircase lifting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Exhaust the e1-projection first, then climb the e2-projection.
    E1First,
    /// Exhaust the e2-projection first.
    E2First,
    /// Advance both projections whenever both can move.
    Diagonal,
    /// Choose uniformly among the feasible moves with the given seed.
    SeededRandom(u64),
}

/// Lifts two real partitions to a strong partition whose projections are
/// exactly `p` and `q`. Point count is at most `|p| + |q| - 1`; every step
/// advances at least one projection index.
pub fn gen_strong(p: &RealPartition, q: &RealPartition, strategy: Strategy) -> StrongPartition {
    let pv = p.points();
    let qv = q.points();
    let (s, t) = (pv.len() - 1, qv.len() - 1);
    let mut rng = match strategy {
        Strategy::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut points = Vec::with_capacity(s + t + 1);
    let (mut i, mut j) = (0usize, 0usize);
    points.push(Hyp::new(pv[0], qv[0]));
    while i < s || j < t {
        let (di, dj) = match strategy {
            Strategy::E1First => {
                if i < s {
                    (1, 0)
                } else {
                    (0, 1)
                }
            }
            Strategy::E2First => {
                if j < t {
                    (0, 1)
                } else {
                    (1, 0)
                }
            }
            Strategy::Diagonal => (usize::from(i < s), usize::from(j < t)),
            Strategy::SeededRandom(_) => {
                let rng = rng.as_mut().unwrap();
                if i < s && j < t {
                    match rng.gen_range(0..3) {
                        0 => (1, 0),
                        1 => (0, 1),
                        _ => (1, 1),
                    }
                } else if i < s {
                    (1, 0)
                } else {
                    (0, 1)
                }
            }
        };
        i += di;
        j += dj;
        points.push(Hyp::new(pv[i], qv[j]));
    }
    StrongPartition { points }
}

impl StrongPartition {
    /// Validates the chain: nonempty, distinct, consecutive pairs
    /// comparable and ascending.
    pub fn new(points: Vec<Hyp>) -> Result<StrongPartition, ChainViolation> {
        match chain_violation(&points) {
            Some(v) => Err(v),
            None => Ok(StrongPartition { points }),
        }
    }

    pub fn points(&self) -> &[Hyp] {
        &self.points
    }

    /// The partitioned interval `[ρ_0, ρ_n]`.
    pub fn parent(&self) -> HypInterval {
        HypInterval::new(self.points[0], self.points[self.points.len() - 1])
            .expect("chain endpoints are ordered")
    }

    /// The consecutive subintervals `[ρ_{j-1}, ρ_j]`. Degenerate members
    /// are expected whenever a step moves along one axis only.
    pub fn subintervals(&self) -> Vec<HypInterval> {
        self.points
            .windows(2)
            .map(|w| HypInterval::new(w[0], w[1]).expect("chain steps are ordered"))
            .collect()
    }

    /// Projections onto the axes, with repeated values collapsed.
    pub fn project(&self) -> (RealPartition, RealPartition) {
        let dedup = |mut v: Vec<f64>| {
            v.dedup();
            RealPartition::new(v).expect("chain projections ascend")
        };
        (
            dedup(self.points.iter().map(|p| p.a1).collect()),
            dedup(self.points.iter().map(|p| p.a2).collect()),
        )
    }

    /// Component-wise largest projection gap.
    pub fn diameter(&self) -> Hyp {
        let (p, q) = self.project();
        Hyp::new(p.max_gap(), q.max_gap())
    }

    /// Returns a strong partition extending `self` whose diameter is
    /// `⪯ target`. Each too-coarse step is subdivided along the straight
    /// segment between its endpoints, so the original points survive.
    /// A partition already within `target` comes back unchanged.
    pub fn refine(&self, target: Hyp) -> StrongPartition {
        assert!(
            target.a1 > 0.0 && target.a2 > 0.0,
            "refinement target must be strictly positive in both components"
        );
        let mut points = vec![self.points[0]];
        for w in self.points.windows(2) {
            let (a, b) = (w[0], w[1]);
            let d = b - a;
            let m = pieces_for(d.a1, target.a1).max(pieces_for(d.a2, target.a2));
            for idx in 1..m {
                let f = idx as f64 / m as f64;
                let pt = Hyp::new(a.a1 + d.a1 * f, a.a2 + d.a2 * f);
                if pt != *points.last().unwrap() {
                    points.push(pt);
                }
            }
            if b != *points.last().unwrap() {
                points.push(b);
            }
        }
        StrongPartition { points }
    }
}

/// Subdivision count leaving `gap/m` strictly below `target` whenever the
/// gap exceeds it; 1 (no subdivision) otherwise.
fn pieces_for(gap: f64, target: f64) -> usize {
    if gap <= target {
        1
    } else {
        (gap / target).floor() as usize + 1
    }
}

/// A parent interval together with candidate pieces, the input of the
/// regular and weak checks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalCollection {
    pub parent: HypInterval,
    pub pieces: Vec<HypInterval>,
}

/// The same data with exact rational coordinates, for callers that have
/// true rationals (thirds, fifths) rather than their float images.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactCollection {
    pub parent: Rect,
    pub pieces: Vec<Rect>,
}

impl From<&IntervalCollection> for ExactCollection {
    fn from(c: &IntervalCollection) -> ExactCollection {
        ExactCollection {
            parent: Rect::from_interval(&c.parent),
            pieces: c.pieces.iter().map(Rect::from_interval).collect(),
        }
    }
}

/// Verdict of the planar tiling check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegularVerdict {
    Regular,
    NotRegular(NotRegularReason),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotRegularReason {
    Overlap,
    Gap,
    PieceOutside(usize),
}

/// Verdict of the length-balance check. `deficit` is the signed difference
/// `Σ piece lengths - parent length`.
#[derive(Debug, Clone, PartialEq)]
pub enum WeakVerdict {
    Weak { length_sum: Hyp },
    NotWeak { length_sum: Hyp, deficit: Hyp },
}

impl WeakVerdict {
    pub fn is_weak(&self) -> bool {
        matches!(self, WeakVerdict::Weak { .. })
    }

    pub fn length_sum(&self) -> Hyp {
        match self {
            WeakVerdict::Weak { length_sum } | WeakVerdict::NotWeak { length_sum, .. } => {
                *length_sum
            }
        }
    }
}

/// Regular iff the pieces tile the parent as a planar set: containment,
/// no positive-area overlap, no positive-area gap. Exact: verdicts are
/// decided in rational arithmetic, never by tolerance.
pub fn check_regular(c: &IntervalCollection) -> RegularVerdict {
    check_regular_exact(&ExactCollection::from(c))
}

pub fn check_regular_exact(c: &ExactCollection) -> RegularVerdict {
    match sweep::cover(&c.parent, &c.pieces) {
        CoverVerdict::Tiles => RegularVerdict::Regular,
        CoverVerdict::Overlap => RegularVerdict::NotRegular(NotRegularReason::Overlap),
        CoverVerdict::Gap => RegularVerdict::NotRegular(NotRegularReason::Gap),
        CoverVerdict::PieceOutside(i) => {
            RegularVerdict::NotRegular(NotRegularReason::PieceOutside(i))
        }
    }
}

/// Weak iff the piece lengths sum to the parent length component-wise.
/// Pieces must lie inside the parent. The comparison is exact in rational
/// arithmetic, with a `1e-12` allowance so float images of non-dyadic
/// inputs are not misjudged. Coverage is *not* required: a chain of blocks
/// along a diagonal is weak while leaving most of the parent unfilled.
pub fn check_weak(c: &IntervalCollection) -> Result<WeakVerdict, Error> {
    check_weak_exact(&ExactCollection::from(c), false)
}

/// [`check_weak`] plus the planar coverage requirement: a collection whose
/// lengths balance but whose union misses part of the parent reports not
/// weak (the deficit may then be zero).
pub fn check_weak_strict(c: &IntervalCollection) -> Result<WeakVerdict, Error> {
    check_weak_exact(&ExactCollection::from(c), true)
}

pub fn check_weak_exact(c: &ExactCollection, require_cover: bool) -> Result<WeakVerdict, Error> {
    use num::{ToPrimitive, Zero};
    if c.pieces.iter().any(|p| !c.parent.contains_rect(p)) {
        return Err(Error::PieceOutsideParent);
    }
    let mut sum_w = sweep::Coord::zero();
    let mut sum_h = sweep::Coord::zero();
    for p in &c.pieces {
        sum_w += p.width();
        sum_h += p.height();
    }
    let d1 = &sum_w - c.parent.width();
    let d2 = &sum_h - c.parent.height();
    let tol = sweep::rat(1, 1_000_000_000_000);
    let balanced = num::abs(d1.clone()) <= tol && num::abs(d2.clone()) <= tol;
    let covered = !require_cover
        || !matches!(sweep::cover(&c.parent, &c.pieces), CoverVerdict::Gap);
    let to_f64 = |r: &sweep::Coord| r.to_f64().expect("length fits in f64");
    let length_sum = Hyp::new(to_f64(&sum_w), to_f64(&sum_h));
    if balanced && covered {
        Ok(WeakVerdict::Weak { length_sum })
    } else {
        Ok(WeakVerdict::NotWeak { length_sum, deficit: Hyp::new(to_f64(&d1), to_f64(&d2)) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sweep::rat;

    fn hp(a1: f64, a2: f64) -> Hyp {
        Hyp::new(a1, a2)
    }

    fn rp(points: &[f64]) -> RealPartition {
        RealPartition::new(points.to_vec()).unwrap()
    }

    #[test]
    fn real_partition_validation() {
        assert!(RealPartition::new(vec![0.0, 0.5, 1.0]).is_ok());
        assert_eq!(RealPartition::new(vec![]).unwrap_err(), Error::EmptyPartition);
        assert_eq!(RealPartition::new(vec![0.0, 0.0]).unwrap_err(), Error::NotOrdered);
        assert_eq!(RealPartition::new(vec![1.0, 0.5]).unwrap_err(), Error::NotOrdered);
        // Single point: the degenerate projection.
        let single = RealPartition::new(vec![2.0]).unwrap();
        assert_eq!(single.max_gap(), 0.0);
        let u = RealPartition::uniform(0.0, 1.0, 4).unwrap();
        assert_eq!(u.points(), &[0.0, 0.25, 0.5, 0.75, 1.0]);
        assert_eq!(RealPartition::uniform(2.0, 2.0, 7).unwrap().points(), &[2.0]);
    }

    #[test]
    fn staircase_strategies() {
        let p = rp(&[0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0]);
        let q = rp(&[0.0, 0.2, 0.4, 0.6, 0.8, 1.0]);
        let parent = HypInterval::from_real(0.0, 1.0).unwrap();

        for strat in [
            Strategy::E1First,
            Strategy::E2First,
            Strategy::Diagonal,
            Strategy::SeededRandom(7),
        ] {
            let sp = gen_strong(&p, &q, strat);
            // At most |P| + |Q| - 1 points.
            assert!(sp.points().len() < p.points().len() + q.points().len());
            assert_eq!(check_strong(sp.points(), &parent), StrongVerdict::Strong);
            let (pp, qq) = sp.project();
            assert_eq!(pp, p, "projection fidelity for {:?}", strat);
            assert_eq!(qq, q);
        }
        // The extreme strategies use the full point budget and differ.
        let a = gen_strong(&p, &q, Strategy::E1First);
        let b = gen_strong(&p, &q, Strategy::E2First);
        let c = gen_strong(&p, &q, Strategy::Diagonal);
        assert_eq!(a.points().len(), 9);
        assert_eq!(b.points().len(), 9);
        assert_eq!(c.points().len(), 6);
        assert_ne!(a, b);
        assert_ne!(a, c);
        // Same seed, same staircase.
        assert_eq!(
            gen_strong(&p, &q, Strategy::SeededRandom(42)),
            gen_strong(&p, &q, Strategy::SeededRandom(42))
        );
    }

    #[test]
    fn staircase_with_degenerate_projection() {
        let p = rp(&[2.0]);
        let q = rp(&[0.0, 0.5, 1.0]);
        let sp = gen_strong(&p, &q, Strategy::Diagonal);
        assert_eq!(sp.points(), &[hp(2.0, 0.0), hp(2.0, 0.5), hp(2.0, 1.0)]);
    }

    #[test]
    fn chain_verdicts() {
        let parent = HypInterval::from_real(0.0, 1.0).unwrap();
        let ok = vec![Hyp::ZERO, hp(0.5, 0.25), Hyp::ONE];
        assert_eq!(check_strong(&ok, &parent), StrongVerdict::Strong);

        let incomparable = vec![
            Hyp::ZERO,
            hp(1.0 / 3.0, 2.0 / 3.0),
            hp(2.0 / 3.0, 1.0 / 3.0),
            Hyp::ONE,
        ];
        assert_eq!(
            check_strong(&incomparable, &parent),
            StrongVerdict::Violation(ChainViolation::IncomparablePair)
        );

        let dup = vec![Hyp::ZERO, hp(0.5, 0.5), hp(0.5, 0.5), Hyp::ONE];
        assert_eq!(
            check_strong(&dup, &parent),
            StrongVerdict::Violation(ChainViolation::Duplicate)
        );

        let descending = vec![Hyp::ZERO, hp(0.75, 0.75), hp(0.5, 0.5), Hyp::ONE];
        assert_eq!(
            check_strong(&descending, &parent),
            StrongVerdict::Violation(ChainViolation::NotSorted)
        );

        let short = vec![Hyp::ZERO, hp(0.5, 0.5)];
        assert_eq!(
            check_strong(&short, &parent),
            StrongVerdict::Violation(ChainViolation::WrongEndpoints)
        );

        assert_eq!(check_strong(&[], &parent), StrongVerdict::Violation(ChainViolation::Empty));
    }

    #[test]
    fn subintervals_telescope() {
        let sp = StrongPartition::new(vec![Hyp::ZERO, hp(1.0 / 3.0, 0.0), Hyp::ONE]).unwrap();
        let subs = sp.subintervals();
        assert_eq!(subs.len(), 2);
        assert_eq!(subs[0].length(), hp(1.0 / 3.0, 0.0));
        assert!(subs[0].is_degenerate());
        assert_eq!(subs[1].length(), hp(1.0 - 1.0 / 3.0, 1.0));
        let total: Hyp = subs.iter().fold(Hyp::ZERO, |acc, i| acc + i.length());
        assert_eq!(total, sp.parent().length());
    }

    #[test]
    fn diameter_uses_deduplicated_projections() {
        let sp = StrongPartition::new(vec![
            Hyp::ZERO,
            hp(1.0 / 3.0, 0.0),
            hp(1.0 / 3.0, 0.5),
            Hyp::ONE,
        ])
        .unwrap();
        // The bigger e1-gap is 1 - 1/3, which is not the float 2/3.
        assert_eq!(sp.diameter(), hp(1.0 - 1.0 / 3.0, 0.5));
    }

    #[test]
    fn refine_reaches_target_and_keeps_points() {
        let sp = StrongPartition::new(vec![Hyp::ZERO, Hyp::ONE]).unwrap();
        let fine = sp.refine(hp(0.5, 0.5));
        // Subdivision leaves a margin below the target rather than landing
        // exactly on it.
        assert!(fine.diameter().strict_lt(hp(0.5, 0.5)));
        assert_eq!(fine.points().first(), Some(&Hyp::ZERO));
        assert_eq!(fine.points().last(), Some(&Hyp::ONE));

        let sp = StrongPartition::new(vec![Hyp::ZERO, hp(0.25, 0.5), Hyp::ONE]).unwrap();
        let target = hp(0.2, 0.2);
        let fine = sp.refine(target);
        assert!(fine.diameter().leq(target));
        for pt in sp.points() {
            assert!(fine.points().contains(pt), "refinement dropped {}", pt);
        }
        // Already fine: unchanged, even when the diameter equals the target.
        let same = fine.refine(fine.diameter());
        assert_eq!(same, fine);
    }

    #[test]
    fn refine_halving_shrinks_monotonically() {
        let sp = gen_strong(
            &rp(&[0.0, 0.375, 1.0]),
            &rp(&[0.0, 0.625, 1.0]),
            Strategy::Diagonal,
        );
        let mut current = sp;
        let mut target = hp(0.5, 0.5);
        let mut last = current.diameter();
        for _ in 0..6 {
            current = current.refine(target);
            let d = current.diameter();
            assert!(d.leq(target));
            assert!(d.leq(last));
            last = d;
            target = target * 0.5;
        }
    }

    fn nine_cells_exact() -> ExactCollection {
        let parent = Rect::new(rat(0, 1), rat(1, 1), rat(0, 1), rat(1, 1)).unwrap();
        let mut pieces = Vec::new();
        for i in 0..3i64 {
            for j in 0..3i64 {
                pieces.push(
                    Rect::new(rat(i, 3), rat(i + 1, 3), rat(j, 3), rat(j + 1, 3)).unwrap(),
                );
            }
        }
        ExactCollection { parent, pieces }
    }

    #[test]
    fn nine_cell_grid_is_regular_but_not_weak() {
        let c = nine_cells_exact();
        assert_eq!(check_regular_exact(&c), RegularVerdict::Regular);
        match check_weak_exact(&c, false).unwrap() {
            WeakVerdict::NotWeak { length_sum, deficit } => {
                // Nine cells of side 1/3: lengths sum to 3, not 1 — exactly.
                assert_eq!(length_sum, hp(3.0, 3.0));
                assert_eq!(deficit, hp(2.0, 2.0));
            }
            v => panic!("expected NotWeak, got {:?}", v),
        }
    }

    #[test]
    fn regular_verdict_ignores_piece_order() {
        let mut c = nine_cells_exact();
        c.pieces.reverse();
        assert_eq!(check_regular_exact(&c), RegularVerdict::Regular);
        c.pieces.swap(0, 4);
        assert_eq!(check_regular_exact(&c), RegularVerdict::Regular);
    }

    #[test]
    fn diagonal_squares_are_weak_but_not_regular() {
        let parent = Rect::new(rat(0, 1), rat(1, 1), rat(0, 1), rat(1, 1)).unwrap();
        let pieces = (0..3i64)
            .map(|i| Rect::new(rat(i, 3), rat(i + 1, 3), rat(i, 3), rat(i + 1, 3)).unwrap())
            .collect();
        let c = ExactCollection { parent, pieces };
        assert!(check_weak_exact(&c, false).unwrap().is_weak());
        assert_eq!(
            check_regular_exact(&c),
            RegularVerdict::NotRegular(NotRegularReason::Gap)
        );
        // Strict mode demands coverage as well.
        match check_weak_exact(&c, true).unwrap() {
            WeakVerdict::NotWeak { deficit, .. } => assert_eq!(deficit, Hyp::ZERO),
            v => panic!("expected NotWeak under strict coverage, got {:?}", v),
        }
    }

    #[test]
    fn degenerate_pieces_count_toward_weakness() {
        // Two diagonal squares joined by a horizontal and a vertical
        // segment: lengths sum to the parent length.
        let parent = Rect::new(rat(0, 1), rat(1, 1), rat(0, 1), rat(1, 1)).unwrap();
        let pieces = vec![
            Rect::new(rat(0, 1), rat(1, 3), rat(0, 1), rat(1, 3)).unwrap(),
            Rect::new(rat(1, 3), rat(2, 3), rat(1, 3), rat(1, 3)).unwrap(),
            Rect::new(rat(2, 3), rat(2, 3), rat(1, 3), rat(2, 3)).unwrap(),
            Rect::new(rat(2, 3), rat(1, 1), rat(2, 3), rat(1, 1)).unwrap(),
        ];
        let c = ExactCollection { parent, pieces };
        match check_weak_exact(&c, false).unwrap() {
            WeakVerdict::Weak { length_sum } => assert_eq!(length_sum, Hyp::ONE),
            v => panic!("expected Weak, got {:?}", v),
        }
    }

    #[test]
    fn float_collections_classify_through_the_exact_path() {
        let third = 1.0 / 3.0;
        let parent = HypInterval::from_real(0.0, 1.0).unwrap();
        let pieces = (0..3)
            .map(|i| {
                let a = i as f64 * third;
                let b = if i == 2 { 1.0 } else { (i + 1) as f64 * third };
                HypInterval::new(hp(a, a), hp(b, b)).unwrap()
            })
            .collect();
        let c = IntervalCollection { parent, pieces };
        // Float thirds miss 1/3 by rounding; the 1e-12 allowance absorbs it.
        assert!(check_weak(&c).unwrap().is_weak());
        assert_eq!(
            check_regular(&c),
            RegularVerdict::NotRegular(NotRegularReason::Gap)
        );
    }

    #[test]
    fn weak_requires_containment() {
        let parent = HypInterval::from_real(0.0, 1.0).unwrap();
        let c = IntervalCollection {
            parent,
            pieces: vec![HypInterval::from_real(0.0, 2.0).unwrap()],
        };
        assert_eq!(check_weak(&c).unwrap_err(), Error::PieceOutsideParent);
        // The regular check reports the same situation as a verdict.
        assert_eq!(
            check_regular(&c),
            RegularVerdict::NotRegular(NotRegularReason::PieceOutside(0))
        );
    }

    #[test]
    fn single_piece_equal_to_parent_is_regular_and_weak() {
        let parent = HypInterval::from_real(0.0, 1.0).unwrap();
        let c = IntervalCollection { parent, pieces: vec![parent] };
        assert_eq!(check_regular(&c), RegularVerdict::Regular);
        assert!(check_weak(&c).unwrap().is_weak());
    }

    #[test]
    fn staircase_blocks_weak_with_complement_regular() {
        // Chain blocks of the strong partition {0, (1/2, 1/4), 1} …
        let parent = HypInterval::from_real(0.0, 1.0).unwrap();
        let a = HypInterval::new(Hyp::ZERO, hp(0.5, 0.25)).unwrap();
        let b = HypInterval::new(hp(0.5, 0.25), Hyp::ONE).unwrap();
        let chain = IntervalCollection { parent, pieces: vec![a, b] };
        assert!(check_weak(&chain).unwrap().is_weak());
        assert_eq!(
            check_regular(&chain),
            RegularVerdict::NotRegular(NotRegularReason::Gap)
        );
        // … plus the two complement blocks tile the parent.
        let c1 = HypInterval::new(hp(0.0, 0.25), hp(0.5, 1.0)).unwrap();
        let c2 = HypInterval::new(hp(0.5, 0.0), hp(1.0, 0.25)).unwrap();
        let tiling = IntervalCollection { parent, pieces: vec![a, b, c1, c2] };
        assert_eq!(check_regular(&tiling), RegularVerdict::Regular);
        assert!(!check_weak(&tiling).unwrap().is_weak());
    }

    #[test]
    fn partition_json_round_trip() {
        let sp = StrongPartition::new(vec![Hyp::ZERO, hp(0.5, 0.25), Hyp::ONE]).unwrap();
        let s = serde_json::to_string(&sp).unwrap();
        let back: StrongPartition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, sp);
        let bad = r#"{"points":[{"e1":0.0,"e2":0.0},{"e1":1.0,"e2":2.0},{"e1":2.0,"e2":1.0}]}"#;
        assert!(serde_json::from_str::<StrongPartition>(bad).is_err());
    }
}
