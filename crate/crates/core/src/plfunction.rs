//! Piecewise-linear interpolant through x-sorted breakpoints.

use std::cmp::Ordering;

use thiserror::Error;

use crate::polygon::Point;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlError {
    #[error("at least two breakpoints are required (got {0})")]
    TooFewBreakpoints(usize),
    #[error("breakpoint x-values must increase strictly (at breakpoint {0})")]
    NotIncreasing(usize),
    #[error("{0} lies outside the domain")]
    OutOfDomain(Scalar),
    #[error("empty interval: x1 must be less than x2")]
    EmptyInterval,
}

/// The function obtained by joining consecutive breakpoints with segments,
/// defined on `[x_1, x_n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PLFunction {
    breakpoints: Vec<Point>,
}

/// Slopes of the segments whose closed interval contains a query point.
///
/// Away from breakpoints `left == right`. At an interior breakpoint they are
/// the slopes of the two adjacent segments; at the domain ends one side is
/// absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentSlopes {
    pub left: Option<Scalar>,
    pub right: Option<Scalar>,
}

impl SegmentSlopes {
    pub fn choices(&self) -> impl Iterator<Item = &Scalar> {
        self.left.iter().chain(self.right.iter())
    }
}

impl PLFunction {
    pub fn new(breakpoints: Vec<Point>) -> Result<Self, PlError> {
        if breakpoints.len() < 2 {
            return Err(PlError::TooFewBreakpoints(breakpoints.len()));
        }
        if let Some(i) = breakpoints.windows(2).position(|w| w[0].x >= w[1].x) {
            return Err(PlError::NotIncreasing(i + 2));
        }
        Ok(PLFunction { breakpoints })
    }

    pub fn breakpoints(&self) -> &[Point] {
        &self.breakpoints
    }

    pub fn domain(&self) -> (&Scalar, &Scalar) {
        (&self.breakpoints[0].x, &self.breakpoints[self.breakpoints.len() - 1].x)
    }

    pub fn contains_x(&self, x: &Scalar) -> bool {
        let (lo, hi) = self.domain();
        lo <= x && x <= hi
    }

    /// Slope of segment `k` (0-based), joining breakpoints `k` and `k + 1`.
    pub fn segment_slope(&self, k: usize) -> Scalar {
        let (a, b) = (&self.breakpoints[k], &self.breakpoints[k + 1]);
        (&b.y - &a.y) / (&b.x - &a.x)
    }

    pub fn segment_count(&self) -> usize {
        self.breakpoints.len() - 1
    }

    /// Index of the segment used for evaluation: the one to the right of a
    /// shared breakpoint, or the last segment at the right end.
    fn segment_index(&self, x: &Scalar) -> Result<usize, PlError> {
        if !self.contains_x(x) {
            return Err(PlError::OutOfDomain(x.clone()));
        }
        // number of breakpoints with bp.x <= x, at least 1
        let upto = self.breakpoints.partition_point(|bp| &bp.x <= x);
        Ok((upto - 1).min(self.segment_count() - 1))
    }

    /// `t * y_i + (1 - t) * y_{i+1}` with `t = (x_{i+1} - x) / (x_{i+1} - x_i)`.
    pub fn eval(&self, x: &Scalar) -> Result<Scalar, PlError> {
        let i = self.segment_index(x)?;
        let (a, b) = (&self.breakpoints[i], &self.breakpoints[i + 1]);
        let t = (&b.x - x) / (&b.x - &a.x);
        let one_minus_t = Scalar::one() - &t;
        Ok(t * &a.y + one_minus_t * &b.y)
    }

    /// Slopes of the segment(s) containing `x`.
    pub fn slopes_at(&self, x: &Scalar) -> Result<SegmentSlopes, PlError> {
        if !self.contains_x(x) {
            return Err(PlError::OutOfDomain(x.clone()));
        }
        let bps = &self.breakpoints;
        match bps.binary_search_by(|bp| bp.x.cmp(x)) {
            Ok(i) => Ok(SegmentSlopes {
                left: (i > 0).then(|| self.segment_slope(i - 1)),
                right: (i + 1 < bps.len()).then(|| self.segment_slope(i)),
            }),
            Err(upto) => {
                let s = self.segment_slope(upto - 1);
                Ok(SegmentSlopes {
                    left: Some(s.clone()),
                    right: Some(s),
                })
            }
        }
    }

    /// Nondecreasing segment slopes, compared division-free.
    pub fn is_convex_function(&self) -> bool {
        self.breakpoints.windows(3).all(|w| {
            let (a, b, c) = (&w[0], &w[1], &w[2]);
            (&b.y - &a.y) * (&c.x - &b.x) <= (&c.y - &b.y) * (&b.x - &a.x)
        })
    }

    /// `p.x` in the domain and `f(p.x) <= p.y`.
    pub fn epigraph_contains(&self, p: &Point) -> bool {
        let Ok(i) = self.segment_index(&p.x) else {
            return false;
        };
        let (a, b) = (&self.breakpoints[i], &self.breakpoints[i + 1]);
        // f(x) = a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x), width positive
        let lhs = (&p.y - &a.y) * (&b.x - &a.x);
        let rhs = (&p.x - &a.x) * (&b.y - &a.y);
        lhs.cmp(&rhs) != Ordering::Less
    }

    /// `(f(x2) - f(x1)) / (x2 - x1)`.
    pub fn chord_slope(&self, x1: &Scalar, x2: &Scalar) -> Result<Scalar, PlError> {
        if x1 >= x2 {
            return Err(PlError::EmptyInterval);
        }
        let f1 = self.eval(x1)?;
        let f2 = self.eval(x2)?;
        Ok((f2 - f1) / (x2 - x1))
    }
}
