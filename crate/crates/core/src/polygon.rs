//! Slope-based convex polygon classification.
//!
//! For points `P_1, ..., P_n` sorted by strictly increasing x, the closed
//! polygon `P_1 P_2 ... P_n P_1` is convex and lies on or below the chord
//! `P_1 P_n` iff the edge slopes are nondecreasing, and on or above it iff
//! they are nonincreasing. [`classify`] decides this with division-free
//! comparisons.
//!
//! With endpoint relaxation the first and/or last edge may be vertical
//! (`x_1 = x_2`, `x_{n-1} = x_n`). A vertical edge is ordered as `-inf` when
//! it points down and `+inf` when it points up, which is how a vertical edge
//! of a convex chain compares with its neighbours.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::scalar::Scalar;
use crate::sequences::{analyze_sequence, RealSeq};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvalidPointSeq {
    #[error("n must be at least 3 (got {0})")]
    TooFewPoints(usize),
    #[error("x-coordinates must increase strictly at point {0}")]
    NotSorted(usize),
    #[error("x_1 must be less than x_n")]
    VerticalChord,
    #[error("point {0} duplicates an earlier point")]
    DuplicatePoint(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("invalid point sequence: {0}")]
    InvalidPointSeq(#[from] InvalidPointSeq),
    #[error("chord endpoints must satisfy first.x < last.x")]
    DegenerateChord,
    #[error("xs has {xs} values but ys has {ys}")]
    LengthMismatch { xs: usize, ys: usize },
    #[error("at least 3 values are required (got {0})")]
    TooFewValues(usize),
    #[error("hypotheses not satisfied: {}", .0.code())]
    PreconditionViolated(FailedCondition),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn from_integers(x: i64, y: i64) -> Self {
        Point::new(Scalar::from_integer(x), Scalar::from_integer(y))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Points sorted by x, validated at construction.
///
/// Interior x-values are strictly increasing. The first and last gaps are
/// strict too unless `endpoint_relaxation` is set, in which case
/// `x_1 = x_2` and `x_{n-1} = x_n` are allowed. `x_1 < x_n` always holds
/// and all points are distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSeq {
    points: Vec<Point>,
    endpoint_relaxation: bool,
}

impl PointSeq {
    pub fn new(points: Vec<Point>, endpoint_relaxation: bool) -> Result<Self, PolygonError> {
        let n = points.len();
        if n < 3 {
            return Err(InvalidPointSeq::TooFewPoints(n).into());
        }
        for i in 1..n {
            let relaxed_gap = endpoint_relaxation && (i == 1 || i == n - 1);
            let ok = match points[i - 1].x.cmp(&points[i].x) {
                Ordering::Less => true,
                Ordering::Equal => relaxed_gap,
                Ordering::Greater => false,
            };
            if !ok {
                return Err(InvalidPointSeq::NotSorted(i + 1).into());
            }
        }
        if points[0].x >= points[n - 1].x {
            return Err(InvalidPointSeq::VerticalChord.into());
        }
        // Sorted by x, so a duplicate can only sit next to its twin.
        if let Some(i) = (1..n).find(|&i| points[i - 1] == points[i]) {
            return Err(InvalidPointSeq::DuplicatePoint(i + 1).into());
        }
        Ok(PointSeq {
            points,
            endpoint_relaxation,
        })
    }

    pub fn from_integers(coords: &[(i64, i64)], endpoint_relaxation: bool) -> Result<Self, PolygonError> {
        Self::new(
            coords.iter().map(|&(x, y)| Point::from_integers(x, y)).collect(),
            endpoint_relaxation,
        )
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn endpoint_relaxation(&self) -> bool {
        self.endpoint_relaxation
    }

    pub fn first(&self) -> &Point {
        &self.points[0]
    }

    pub fn last(&self) -> &Point {
        &self.points[self.points.len() - 1]
    }

    /// Reflection across the x-axis. Validity is preserved.
    pub fn mirrored(&self) -> PointSeq {
        PointSeq {
            points: self.points.iter().map(|p| Point::new(p.x.clone(), -&p.y)).collect(),
            endpoint_relaxation: self.endpoint_relaxation,
        }
    }
}

/// Slope of one edge `P_i P_{i+1}`.
#[derive(Clone, PartialEq, Eq)]
pub enum Slope {
    Finite(Scalar),
    /// `x_i = x_{i+1}`; `upward` when `y_{i+1} > y_i`.
    Vertical {
        upward: bool,
    },
}

impl Slope {
    fn rank(&self) -> i8 {
        match self {
            Slope::Vertical { upward: false } => -1,
            Slope::Finite(_) => 0,
            Slope::Vertical { upward: true } => 1,
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(s) => write!(f, "{s}"),
            Slope::Vertical { upward: true } => f.write_str("inf"),
            Slope::Vertical { upward: false } => f.write_str("-inf"),
        }
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeProfile {
    /// `slopes[i]` is the slope of edge `P_{i+1} P_{i+2}` (0-based storage).
    pub slopes: Vec<Slope>,
    /// `comparisons[k]` orders `slopes[k]` against `slopes[k+1]`, i.e. the
    /// condition at vertex `i = k + 2`.
    pub comparisons: Vec<Ordering>,
}

/// Orders the slopes of edges `a -> b` and `b -> c`, where
/// `a.x <= b.x <= c.x` and at most one of the two gaps is zero.
fn compare_edge_slopes(a: &Point, b: &Point, c: &Point) -> Ordering {
    let (dx1, dy1) = (&b.x - &a.x, &b.y - &a.y);
    let (dx2, dy2) = (&c.x - &b.x, &c.y - &b.y);
    if dx1.is_zero() || dx2.is_zero() {
        let s1 = edge_slope(a, b);
        let s2 = edge_slope(b, c);
        return s1.rank().cmp(&s2.rank());
    }
    // dy1/dx1 vs dy2/dx2 with both widths positive
    (&dy1 * &dx2).cmp(&(&dy2 * &dx1))
}

fn edge_slope(a: &Point, b: &Point) -> Slope {
    let dx = &b.x - &a.x;
    let dy = &b.y - &a.y;
    if dx.is_zero() {
        Slope::Vertical {
            upward: dy.is_positive(),
        }
    } else {
        Slope::Finite(dy / dx)
    }
}

pub fn slope_profile(p: &PointSeq) -> SlopeProfile {
    let pts = p.points();
    SlopeProfile {
        slopes: pts.windows(2).map(|w| edge_slope(&w[0], &w[1])).collect(),
        comparisons: pts
            .windows(3)
            .map(|w| compare_edge_slopes(&w[0], &w[1], &w[2]))
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    ConvexBelowChord,
    ConvexAboveChord,
    NotConvex,
    DegenerateCollinear,
}

impl VerdictKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::ConvexBelowChord => "ConvexBelowChord",
            VerdictKind::ConvexAboveChord => "ConvexAboveChord",
            VerdictKind::NotConvex => "NotConvex",
            VerdictKind::DegenerateCollinear => "DegenerateCollinear",
        }
    }

    pub fn mirrored(self) -> VerdictKind {
        match self {
            VerdictKind::ConvexBelowChord => VerdictKind::ConvexAboveChord,
            VerdictKind::ConvexAboveChord => VerdictKind::ConvexBelowChord,
            other => other,
        }
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonVerdict {
    pub kind: VerdictKind,
    /// No three cyclically consecutive vertices of `P_1 ... P_n P_1` are
    /// collinear.
    pub strict: bool,
    /// For `NotConvex`: the first vertex (1-based) at which the slopes
    /// decrease, i.e. where the below-chord condition fails.
    pub witness: Option<usize>,
}

impl PolygonVerdict {
    pub fn is_convex(&self) -> bool {
        matches!(self.kind, VerdictKind::ConvexBelowChord | VerdictKind::ConvexAboveChord)
    }
}

pub fn classify(p: &PointSeq) -> PolygonVerdict {
    let profile = slope_profile(p);
    let cmps = &profile.comparisons;
    // The closing turns at P_n and P_1 are degenerate exactly when P_{n-1}
    // or P_2 sits on the chord.
    let pts = p.points();
    let on_chord = |q: &Point| chord_side(q, p.first(), p.last()) == Ok(ChordSide::On);
    let strict = !cmps.contains(&Ordering::Equal) && !on_chord(&pts[1]) && !on_chord(&pts[pts.len() - 2]);
    let first_decrease = cmps.iter().position(|&o| o == Ordering::Greater);
    let any_increase = cmps.contains(&Ordering::Less);

    let (kind, witness) = match (first_decrease, any_increase) {
        (None, false) => (VerdictKind::DegenerateCollinear, None),
        (None, true) => (VerdictKind::ConvexBelowChord, None),
        (Some(_), false) => (VerdictKind::ConvexAboveChord, None),
        (Some(k), true) => (VerdictKind::NotConvex, Some(k + 2)),
    };
    PolygonVerdict { kind, strict, witness }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChordSide {
    Below,
    On,
    Above,
}

/// Position of `p` relative to the line through `first` and `last`.
pub fn chord_side(p: &Point, first: &Point, last: &Point) -> Result<ChordSide, PolygonError> {
    let width = &last.x - &first.x;
    if !width.is_positive() {
        return Err(PolygonError::DegenerateChord);
    }
    let lhs = (&p.y - &first.y) * &width;
    let rhs = (&p.x - &first.x) * (&last.y - &first.y);
    Ok(match lhs.cmp(&rhs) {
        Ordering::Less => ChordSide::Below,
        Ordering::Equal => ChordSide::On,
        Ordering::Greater => ChordSide::Above,
    })
}

/// Sufficient conditions on the coordinate sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Hypothesis {
    /// xs strictly increasing and concave, ys increasing and convex.
    Prop1,
    /// xs strictly increasing and convex, ys decreasing and convex.
    Prop2,
    /// Same hypotheses as `Prop1`, concluding a convex polygon.
    Thm15,
    /// Same hypotheses as `Prop2`, concluding a convex polygon.
    Thm16,
    /// ys convex with minimum at `m`, xs increasing, convex up to `m` and
    /// concave from `m`.
    Thm17,
}

impl Hypothesis {
    pub const ALL: [Hypothesis; 5] = [
        Hypothesis::Prop1,
        Hypothesis::Prop2,
        Hypothesis::Thm15,
        Hypothesis::Thm16,
        Hypothesis::Thm17,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Hypothesis::Prop1 => "Prop1",
            Hypothesis::Prop2 => "Prop2",
            Hypothesis::Thm15 => "Thm15",
            Hypothesis::Thm16 => "Thm16",
            Hypothesis::Thm17 => "Thm17",
        }
    }
}

impl std::str::FromStr for Hypothesis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Hypothesis::ALL
            .into_iter()
            .find(|h| h.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown hypothesis {s:?}; expected one of Prop1, Prop2, Thm15, Thm16, Thm17"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailedCondition {
    XsNotStrictlyIncreasing,
    XsNotConcave,
    XsNotConvex,
    YsNotIncreasing,
    YsNotDecreasing,
    YsNotConvex,
    XsPrefixNotConvex,
    XsSuffixNotConcave,
}

impl FailedCondition {
    pub fn code(self) -> &'static str {
        match self {
            FailedCondition::XsNotStrictlyIncreasing => "xs_not_strictly_increasing",
            FailedCondition::XsNotConcave => "xs_not_concave",
            FailedCondition::XsNotConvex => "xs_not_convex",
            FailedCondition::YsNotIncreasing => "ys_not_increasing",
            FailedCondition::YsNotDecreasing => "ys_not_decreasing",
            FailedCondition::YsNotConvex => "ys_not_convex",
            FailedCondition::XsPrefixNotConvex => "xs_prefix_not_convex",
            FailedCondition::XsSuffixNotConcave => "xs_suffix_not_concave",
        }
    }
}

/// Which end of a flat minimum plateau of ys served as the split point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotSplit {
    Leftmost,
    Rightmost,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    pub theorem: Hypothesis,
    pub satisfied: bool,
    pub failed_condition: Option<FailedCondition>,
    /// Split index (1-based) for `Thm17`.
    pub pivot_m: Option<usize>,
    pub pivot_split: Option<PivotSplit>,
}

pub fn check_hypotheses(xs: &RealSeq, ys: &RealSeq, theorem: Hypothesis) -> Result<HypothesisReport, PolygonError> {
    if xs.len() != ys.len() {
        return Err(PolygonError::LengthMismatch {
            xs: xs.len(),
            ys: ys.len(),
        });
    }
    if xs.len() < 3 {
        return Err(PolygonError::TooFewValues(xs.len()));
    }
    let xr = analyze_sequence(xs);
    let yr = analyze_sequence(ys);

    let first_failure = |checks: &[(bool, FailedCondition)]| checks.iter().find(|(ok, _)| !ok).map(|&(_, c)| c);

    let mut report = HypothesisReport {
        theorem,
        satisfied: false,
        failed_condition: None,
        pivot_m: None,
        pivot_split: None,
    };
    report.failed_condition = match theorem {
        Hypothesis::Prop1 | Hypothesis::Thm15 => first_failure(&[
            (xr.is_strictly_increasing, FailedCondition::XsNotStrictlyIncreasing),
            (xr.is_concave, FailedCondition::XsNotConcave),
            (yr.is_convex, FailedCondition::YsNotConvex),
            (yr.is_increasing, FailedCondition::YsNotIncreasing),
        ]),
        Hypothesis::Prop2 | Hypothesis::Thm16 => first_failure(&[
            (xr.is_strictly_increasing, FailedCondition::XsNotStrictlyIncreasing),
            (xr.is_convex, FailedCondition::XsNotConvex),
            (yr.is_convex, FailedCondition::YsNotConvex),
            (yr.is_decreasing, FailedCondition::YsNotDecreasing),
        ]),
        Hypothesis::Thm17 => {
            if let Some(c) = first_failure(&[
                (yr.is_convex, FailedCondition::YsNotConvex),
                (xr.is_strictly_increasing, FailedCondition::XsNotStrictlyIncreasing),
            ]) {
                Some(c)
            } else {
                let (left, right) = minimum_plateau(ys);
                let left_failure = split_failure(xs, left);
                if left_failure.is_none() {
                    report.pivot_m = Some(left);
                    report.pivot_split = Some(PivotSplit::Leftmost);
                    None
                } else if right != left && split_failure(xs, right).is_none() {
                    report.pivot_m = Some(right);
                    report.pivot_split = Some(PivotSplit::Rightmost);
                    None
                } else {
                    report.pivot_m = Some(left);
                    left_failure
                }
            }
        }
    };
    report.satisfied = report.failed_condition.is_none();
    Ok(report)
}

/// 1-based leftmost and rightmost indices attaining the minimum.
fn minimum_plateau(ys: &RealSeq) -> (usize, usize) {
    let v = ys.values();
    let min = v.iter().min().expect("non-empty");
    let left = v.iter().position(|y| y == min).expect("present");
    let right = v.iter().rposition(|y| y == min).expect("present");
    (left + 1, right + 1)
}

fn split_failure(xs: &RealSeq, m: usize) -> Option<FailedCondition> {
    let prefix = xs.slice(1, m).expect("in range");
    let suffix = xs.slice(m, xs.len()).expect("in range");
    if !analyze_sequence(&prefix).is_convex {
        Some(FailedCondition::XsPrefixNotConvex)
    } else if !analyze_sequence(&suffix).is_concave {
        Some(FailedCondition::XsSuffixNotConcave)
    } else {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlopeProposition {
    Prop1,
    Prop2,
}

/// Evaluates `(y_i - y_{i-1})/(x_i - x_{i-1}) <= (y_{i+1} - y_i)/(x_{i+1} - x_i)`
/// at every interior index, after confirming the proposition's hypotheses.
/// Under those hypotheses the result is always `true`.
pub fn slope_inequality_from_hypotheses(
    xs: &RealSeq,
    ys: &RealSeq,
    which: SlopeProposition,
) -> Result<bool, PolygonError> {
    let hypothesis = match which {
        SlopeProposition::Prop1 => Hypothesis::Prop1,
        SlopeProposition::Prop2 => Hypothesis::Prop2,
    };
    let report = check_hypotheses(xs, ys, hypothesis)?;
    if let Some(c) = report.failed_condition {
        return Err(PolygonError::PreconditionViolated(c));
    }
    let (x, y) = (xs.values(), ys.values());
    Ok((1..x.len() - 1).all(|i| {
        let left = (&y[i] - &y[i - 1]) * (&x[i + 1] - &x[i]);
        let right = (&y[i + 1] - &y[i]) * (&x[i] - &x[i - 1]);
        left <= right
    }))
}
