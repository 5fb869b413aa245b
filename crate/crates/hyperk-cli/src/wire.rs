//! JSON shapes and text parsing shared by the subcommands.
//!
//! Coordinates on the wire are either JSON numbers or rational strings
//! ("1/3", "-2/5", "4"). Rationals reach the classifier exactly; numbers
//! are taken at their float value, which is itself a rational.

use hyperk::partition::ExactCollection;
use hyperk::sweep::Rect;
use hyperk::Hyp;
use num::{BigRational, ToPrimitive};
use serde::{Deserialize, Serialize};
use std::str::FromStr;

/// One coordinate as parsed from text or JSON: the exact rational and its
/// float image.
#[derive(Debug, Clone)]
pub struct Coordinate {
    pub exact: BigRational,
    pub value: f64,
}

/// Parses "p/q", "p", or a decimal literal.
pub fn parse_coord(text: &str) -> Result<Coordinate, String> {
    let text = text.trim();
    if text.contains('/') {
        let exact = BigRational::from_str(text)
            .map_err(|e| format!("bad rational `{}`: {}", text, e))?;
        let value = exact.to_f64().ok_or_else(|| format!("rational `{}` overflows", text))?;
        if !value.is_finite() {
            return Err(format!("rational `{}` overflows", text));
        }
        return Ok(Coordinate { exact, value });
    }
    let value: f64 =
        text.parse().map_err(|e| format!("bad number `{}`: {}", text, e))?;
    if !value.is_finite() {
        return Err(format!("`{}` is not finite", text));
    }
    // Exact binary value of the float, so both views agree.
    let exact = BigRational::from_float(value).unwrap();
    Ok(Coordinate { exact, value })
}

/// Parses a comma list of coordinates.
pub fn parse_coord_list(text: &str) -> Result<Vec<Coordinate>, String> {
    text.split(',').map(parse_coord).collect()
}

/// Parses a comma list into floats only.
pub fn parse_f64_list(text: &str) -> Result<Vec<f64>, String> {
    Ok(parse_coord_list(text)?.into_iter().map(|c| c.value).collect())
}

/// Parses an "a,b" pair into a hyperbolic point.
pub fn parse_hyp(text: &str) -> Result<Hyp, String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected \"e1,e2\", got `{}`", text));
    }
    Ok(Hyp::new(parse_coord(parts[0])?.value, parse_coord(parts[1])?.value))
}

/// Parses "MxN" into grid side counts.
pub fn parse_grid_shape(text: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = text.split('x').collect();
    if parts.len() != 2 {
        return Err(format!("expected \"MxN\", got `{}`", text));
    }
    let m = parts[0].trim().parse().map_err(|e| format!("bad grid size `{}`: {}", parts[0], e))?;
    let n = parts[1].trim().parse().map_err(|e| format!("bad grid size `{}`: {}", parts[1], e))?;
    Ok((m, n))
}

/// A coordinate on the wire: a number or a rational string.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WireCoord {
    Num(f64),
    Text(String),
}

impl WireCoord {
    pub fn to_rational(&self) -> Result<BigRational, String> {
        match self {
            WireCoord::Num(v) if v.is_finite() => Ok(BigRational::from_float(*v).unwrap()),
            WireCoord::Num(v) => Err(format!("coordinate {} is not finite", v)),
            WireCoord::Text(s) => Ok(parse_coord(s)?.exact),
        }
    }

    pub fn exact(r: &BigRational) -> WireCoord {
        WireCoord::Text(r.to_string())
    }
}

/// `[x0, x1, y0, y1]` on the wire.
pub type WireRect = [WireCoord; 4];

fn to_rect(w: &WireRect) -> Result<Rect, String> {
    Rect::new(
        w[0].to_rational()?,
        w[1].to_rational()?,
        w[2].to_rational()?,
        w[3].to_rational()?,
    )
    .map_err(|e| e.to_string())
}

/// Input of `classify` and output of `partition-gen`: a parent rectangle
/// with pieces. Extra fields are ignored on read, so `partition-gen`
/// output feeds straight back into `classify`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WireCollection {
    pub parent: WireRect,
    pub pieces: Vec<WireRect>,
}

impl WireCollection {
    pub fn to_exact(&self) -> Result<ExactCollection, String> {
        let parent = to_rect(&self.parent).map_err(|e| format!("parent: {}", e))?;
        let mut pieces = Vec::with_capacity(self.pieces.len());
        for (i, p) in self.pieces.iter().enumerate() {
            pieces.push(to_rect(p).map_err(|e| format!("piece {}: {}", i, e))?);
        }
        Ok(ExactCollection { parent, pieces })
    }
}
