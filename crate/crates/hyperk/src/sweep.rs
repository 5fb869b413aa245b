//! Exact rectangle-cover decisions by coordinate compression.
//!
//! Tiling verdicts must not depend on a tolerance, so this module works in
//! arbitrary-precision rationals. Every finite double is a rational, so
//! float-typed intervals convert losslessly; callers that start from true
//! rationals (thirds, fifths) keep them exact end to end.
//!
//! The sweep sorts the distinct x- and y-coordinates of all rectangle edges
//! and classifies each elementary cell by how many rectangles cover it.
//! No areas are accumulated to reach a verdict; area queries sum cell
//! products exactly.

use num::{BigRational, Zero};

use crate::error::Error;
use crate::interval::HypInterval;

/// Exact coordinate. The x-axis is the e1-projection, y the e2-projection.
pub type Coord = BigRational;

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Coord {
    BigRational::new(num.into(), den.into())
}

/// A closed axis-aligned rectangle with rational corners. Zero width or
/// height is allowed; such rectangles carry no area.
#[derive(Debug, Clone, PartialEq)]
pub struct Rect {
    pub x0: Coord,
    pub x1: Coord,
    pub y0: Coord,
    pub y1: Coord,
}

impl Rect {
    pub fn new(x0: Coord, x1: Coord, y0: Coord, y1: Coord) -> Result<Rect, Error> {
        if x0 > x1 || y0 > y1 {
            return Err(Error::NotOrdered);
        }
        Ok(Rect { x0, x1, y0, y1 })
    }

    /// Lossless conversion from a float-typed interval.
    pub fn from_interval(i: &HypInterval) -> Rect {
        let ([a1, b1], [a2, b2]) = i.project();
        // HypInterval guarantees finite ordered endpoints.
        let f = |v: f64| BigRational::from_float(v).expect("finite coordinate");
        Rect { x0: f(a1), x1: f(b1), y0: f(a2), y1: f(b2) }
    }

    pub fn width(&self) -> Coord {
        &self.x1 - &self.x0
    }

    pub fn height(&self) -> Coord {
        &self.y1 - &self.y0
    }

    pub fn area(&self) -> Coord {
        self.width() * self.height()
    }

    pub fn is_degenerate(&self) -> bool {
        self.x0 == self.x1 || self.y0 == self.y1
    }

    pub fn contains_rect(&self, other: &Rect) -> bool {
        self.x0 <= other.x0 && other.x1 <= self.x1 && self.y0 <= other.y0 && other.y1 <= self.y1
    }
}

/// Verdict of [`cover`]: does the piece set tile the parent exactly?
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverVerdict {
    /// Pieces cover the parent with no positive-area overlap.
    Tiles,
    /// Two pieces share a cell of positive area.
    Overlap,
    /// A positive-area cell of the parent is covered by no piece.
    Gap,
    /// The indexed piece is not contained in the parent.
    PieceOutside(usize),
}

/// Classifies a piece set against a parent rectangle. Degenerate pieces
/// never produce overlaps or fill gaps; only positive-area cells count.
pub fn cover(parent: &Rect, pieces: &[Rect]) -> CoverVerdict {
    for (idx, p) in pieces.iter().enumerate() {
        if !parent.contains_rect(p) {
            return CoverVerdict::PieceOutside(idx);
        }
    }
    let (xs, ys) = compress(std::iter::once(parent).chain(pieces.iter()));
    for w in 0..xs.len().saturating_sub(1) {
        if xs[w] == xs[w + 1] {
            continue;
        }
        for h in 0..ys.len() - 1 {
            if ys[h] == ys[h + 1] {
                continue;
            }
            let n = pieces
                .iter()
                .filter(|p| p.x0 <= xs[w] && xs[w + 1] <= p.x1 && p.y0 <= ys[h] && ys[h + 1] <= p.y1)
                .count();
            if n >= 2 {
                return CoverVerdict::Overlap;
            }
            // All cells lie inside the parent: pieces were contained, and
            // the grid is spanned by parent and piece edges.
            if n == 0 {
                return CoverVerdict::Gap;
            }
        }
    }
    CoverVerdict::Tiles
}

/// Exact area of the union of a rectangle set.
pub fn union_area(rects: &[Rect]) -> Coord {
    let (xs, ys) = compress(rects.iter());
    let mut total = Coord::zero();
    for w in 0..xs.len().saturating_sub(1) {
        for h in 0..ys.len() - 1 {
            let covered = rects
                .iter()
                .any(|p| p.x0 <= xs[w] && xs[w + 1] <= p.x1 && p.y0 <= ys[h] && ys[h + 1] <= p.y1);
            if covered {
                total += (&xs[w + 1] - &xs[w]) * (&ys[h + 1] - &ys[h]);
            }
        }
    }
    total
}

fn compress<'a>(rects: impl Iterator<Item = &'a Rect>) -> (Vec<Coord>, Vec<Coord>) {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for r in rects {
        xs.push(r.x0.clone());
        xs.push(r.x1.clone());
        ys.push(r.y0.clone());
        ys.push(r.y1.clone());
    }
    xs.sort();
    xs.dedup();
    ys.sort();
    ys.dedup();
    (xs, ys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    fn unit() -> Rect {
        Rect::new(rat(0, 1), rat(1, 1), rat(0, 1), rat(1, 1)).unwrap()
    }

    fn cells_3x3() -> Vec<Rect> {
        let mut v = Vec::new();
        for i in 0..3i64 {
            for j in 0..3i64 {
                v.push(
                    Rect::new(rat(i, 3), rat(i + 1, 3), rat(j, 3), rat(j + 1, 3)).unwrap(),
                );
            }
        }
        v
    }

    #[test]
    fn thirds_grid_tiles_exactly() {
        assert_eq!(cover(&unit(), &cells_3x3()), CoverVerdict::Tiles);
        assert_eq!(union_area(&cells_3x3()), Coord::one());
    }

    #[test]
    fn verdicts() {
        let p = unit();
        let half_l = Rect::new(rat(0, 1), rat(1, 2), rat(0, 1), rat(1, 1)).unwrap();
        let half_r = Rect::new(rat(1, 2), rat(1, 1), rat(0, 1), rat(1, 1)).unwrap();
        assert_eq!(cover(&p, &[half_l.clone(), half_r.clone()]), CoverVerdict::Tiles);
        assert_eq!(cover(&p, std::slice::from_ref(&half_l)), CoverVerdict::Gap);
        let wide = Rect::new(rat(0, 1), rat(3, 4), rat(0, 1), rat(1, 1)).unwrap();
        assert_eq!(cover(&p, &[half_l.clone(), wide]), CoverVerdict::Overlap);
        let out = Rect::new(rat(0, 1), rat(2, 1), rat(0, 1), rat(1, 1)).unwrap();
        assert_eq!(cover(&p, &[half_l, out]), CoverVerdict::PieceOutside(1));
    }

    #[test]
    fn degenerate_rects_carry_no_area() {
        let p = unit();
        let seg = Rect::new(rat(1, 2), rat(1, 2), rat(0, 1), rat(1, 1)).unwrap();
        assert!(seg.is_degenerate());
        assert_eq!(seg.area(), Coord::zero());
        assert_eq!(union_area(std::slice::from_ref(&seg)), Coord::zero());
        // A degenerate piece neither overlaps a full cover nor fills a gap.
        let half_l = Rect::new(rat(0, 1), rat(1, 2), rat(0, 1), rat(1, 1)).unwrap();
        let half_r = Rect::new(rat(1, 2), rat(1, 1), rat(0, 1), rat(1, 1)).unwrap();
        assert_eq!(
            cover(&p, &[half_l.clone(), half_r, seg.clone()]),
            CoverVerdict::Tiles
        );
        assert_eq!(cover(&p, &[half_l, seg]), CoverVerdict::Gap);
    }

    #[test]
    fn degenerate_parent_tiles_trivially() {
        let p = Rect::new(rat(0, 1), rat(1, 1), rat(1, 2), rat(1, 2)).unwrap();
        assert_eq!(cover(&p, &[]), CoverVerdict::Tiles);
        let seg = Rect::new(rat(0, 1), rat(1, 2), rat(1, 2), rat(1, 2)).unwrap();
        assert_eq!(cover(&p, &[seg]), CoverVerdict::Tiles);
    }

    #[test]
    fn float_conversion_is_lossless() {
        use crate::hyp::Hyp;
        let third = 1.0 / 3.0;
        let i = HypInterval::new(Hyp::new(third, 0.0), Hyp::new(2.0 * third, third)).unwrap();
        let r = Rect::from_interval(&i);
        // The float third is not 1/3, but its rational image is exact.
        assert_ne!(r.x0, rat(1, 3));
        assert_eq!(r.x0, BigRational::from_float(third).unwrap());
        assert_eq!(r.width(), BigRational::from_float(2.0 * third - third).unwrap());
    }
}
