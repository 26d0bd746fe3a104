//! Exact convex-polygon detection for x-sorted point sequences.
//!
//! Points `P_1, ..., P_n` with increasing x-coordinates form a convex polygon
//! lying below the chord `P_1 P_n` exactly when the consecutive difference
//! quotients `(y_{i+1} - y_i) / (x_{i+1} - x_i)` are nondecreasing, and one
//! lying above the chord exactly when they are nonincreasing. This crate
//! decides that condition with exact rational arithmetic and ships the
//! supporting pieces:
//!
//! - [`scalar`]: exact rational [`Scalar`] with parsing and canonical rendering.
//! - [`sequences`]: convexity and monotonicity predicates for finite sequences,
//!   mediant and mean bounds, and pivot search.
//! - [`polygon`]: the slope-based classifier, chord side test and checkers for
//!   sufficient conditions on the coordinate sequences.
//! - [`plfunction`]: the piecewise-linear interpolant through the points, its
//!   convexity and epigraph.
//! - [`oracle`]: an independent orientation-based classifier and a strict
//!   convex hull, used to cross-check the classifier.

pub mod oracle;
pub mod plfunction;
pub mod polygon;
pub mod scalar;
pub mod sequences;

pub use oracle::{convex_hull, hull_verdict, oracle_classify, orient, HullVerdict, OracleError, Orientation};
pub use plfunction::{PLFunction, PlError, SegmentSlopes};
pub use polygon::{
    check_hypotheses, chord_side, classify, slope_inequality_from_hypotheses, slope_profile, ChordSide,
    FailedCondition, Hypothesis, HypothesisReport, PivotSplit, Point, PointSeq, PolygonError, PolygonVerdict, Slope,
    SlopeProfile, SlopeProposition, VerdictKind,
};
pub use scalar::{parse_scalar, Scalar, ScalarError};
pub use sequences::{
    analyze_sequence, check_pivot, find_pivot, mean_bounds, mediant_bounds, MeanBounds, MeanKind, MediantBounds,
    RatioList, RealSeq, SeqReport, SequenceError, Violations,
};
