//! Newton polygons: the lower convex hull of (index, valuation) points.
//!
//! A segment of horizontal length L and slope s certifies exactly L zeros
//! of valuation -s in the series variable. Length-1 segments with integer
//! slope certify simple zeros rational over the base completion.

use crate::error::{Result, SeriesError};
use std::fmt;

/// Exact rational slope, normalized with positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    pub num: i64,
    pub den: i64,
}

impl Ratio {
    pub fn new(num: i64, den: i64) -> Ratio {
        assert!(den != 0);
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i64;
        let sign = if den < 0 { -1 } else { 1 };
        Ratio {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub slope: Ratio,
    /// Horizontal length (number of zeros it accounts for).
    pub length: i64,
    /// Hull endpoints (start index, start valuation), (end index, end val).
    pub from: (i64, i64),
    pub to: (i64, i64),
}

#[derive(Clone, Debug)]
pub struct NewtonPolygon {
    /// Input points with None marking infinite valuation (zero coefficient).
    pub points: Vec<(i64, Option<i64>)>,
    /// Lower convex hull vertices.
    pub vertices: Vec<(i64, i64)>,
    /// Hull segments, slopes strictly increasing.
    pub segments: Vec<Segment>,
}

/// Build the polygon from (index, valuation-or-infinity) pairs. Requires a
/// finite valuation at index 0 (normalized power series) and at least one
/// other finite point for a nonempty hull.
pub fn newton_polygon(points: &[(i64, Option<i64>)]) -> Result<NewtonPolygon> {
    let finite: Vec<(i64, i64)> = points
        .iter()
        .filter_map(|&(i, v)| v.map(|v| (i, v)))
        .collect();
    if finite.is_empty() {
        return Err(SeriesError::EmptyPolygon);
    }
    let mut sorted = finite.clone();
    sorted.sort();
    // Monotone-chain lower hull with exact integer cross products.
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &pt in &sorted {
        if let Some(&last) = hull.last() {
            if last.0 == pt.0 {
                // Same index: keep the lower valuation.
                if pt.1 < last.1 {
                    hull.pop();
                } else {
                    continue;
                }
            }
        }
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            // Keep b only if it turns strictly left (below the chord a->pt).
            let cross = (b.0 - a.0) as i128 * (pt.1 - a.1) as i128
                - (b.1 - a.1) as i128 * (pt.0 - a.0) as i128;
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let segments = hull
        .windows(2)
        .map(|w| {
            let (x0, y0) = w[0];
            let (x1, y1) = w[1];
            Segment {
                slope: Ratio::new(y1 - y0, x1 - x0),
                length: x1 - x0,
                from: (x0, y0),
                to: (x1, y1),
            }
        })
        .collect();
    Ok(NewtonPolygon {
        points: points.to_vec(),
        vertices: hull,
        segments,
    })
}

impl NewtonPolygon {
    /// Total horizontal length of the hull.
    pub fn span(&self) -> i64 {
        self.segments.iter().map(|s| s.length).sum()
    }

    pub fn all_length_one_integer_slopes(&self) -> bool {
        self.segments
            .iter()
            .all(|s| s.length == 1 && s.slope.is_integer())
    }

    /// The hull value (lowest possible term valuation) at index i, linear
    /// interpolation along the segment containing i.
    pub fn hull_value_at(&self, i: i64) -> Option<i64> {
        for s in &self.segments {
            if s.from.0 <= i && i <= s.to.0 {
                let num = s.from.1 as i128 * s.slope.den as i128
                    + (i - s.from.0) as i128 * s.slope.num as i128;
                return Some(num.div_euclid(s.slope.den as i128) as i64);
            }
        }
        if self.vertices.len() == 1 && self.vertices[0].0 == i {
            return Some(self.vertices[0].1);
        }
        None
    }
}
