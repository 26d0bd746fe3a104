//! Slope-free ground truth for the classifier.
//!
//! [`oracle_classify`] decides convexity from the orientation signs around
//! the closed vertex cycle, and [`hull_verdict`] from a strict convex hull
//! together with the order in which the cycle visits the hull boundary.
//! Neither compares edge slopes, so they can check [`crate::classify`]
//! independently.

use std::cmp::Ordering;

use thiserror::Error;

use crate::polygon::{chord_side, ChordSide, Point, PointSeq, PolygonVerdict, VerdictKind};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle inconsistency: {0}")]
    OracleInconsistency(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
    Collinear,
}

fn cross(a: &Point, b: &Point, c: &Point) -> Scalar {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// Sign of `(b - a) x (c - a)`.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Orientation {
    match cross(a, b, c).signum() {
        Ordering::Greater => Orientation::CounterClockwise,
        Ordering::Less => Orientation::Clockwise,
        Ordering::Equal => Orientation::Collinear,
    }
}

/// Orientation at each vertex of the closed cycle `P_1 ... P_n P_1`,
/// index `k` holding the turn at `P_{k+1}`.
fn cycle_orientations(pts: &[Point]) -> Vec<Orientation> {
    let n = pts.len();
    (0..n)
        .map(|k| orient(&pts[(k + n - 1) % n], &pts[k], &pts[(k + 1) % n]))
        .collect()
}

pub fn oracle_classify(p: &PointSeq) -> Result<PolygonVerdict, OracleError> {
    let pts = p.points();
    let n = pts.len();
    let turns = cycle_orientations(pts);
    let strict = !turns.contains(&Orientation::Collinear);

    if turns.iter().all(|&o| o == Orientation::Collinear) {
        return Ok(PolygonVerdict {
            kind: VerdictKind::DegenerateCollinear,
            strict,
            witness: None,
        });
    }
    let has_cw = turns.contains(&Orientation::Clockwise);
    let has_ccw = turns.contains(&Orientation::CounterClockwise);
    if has_cw && has_ccw {
        let is_cw = |k: &usize| turns[*k] == Orientation::Clockwise;
        let witness = (1..n - 1).find(is_cw).or_else(|| (0..n).find(is_cw)).map(|k| k + 1);
        return Ok(PolygonVerdict {
            kind: VerdictKind::NotConvex,
            strict,
            witness,
        });
    }

    let mut side = None;
    for (i, pt) in pts.iter().enumerate() {
        let s = chord_side(pt, p.first(), p.last()).map_err(|e| OracleError::OracleInconsistency(e.to_string()))?;
        if s == ChordSide::On {
            continue;
        }
        match side {
            None => side = Some(s),
            Some(prev) if prev != s => {
                return Err(OracleError::OracleInconsistency(format!(
                    "convex cycle has vertices on both sides of the chord (vertex {})",
                    i + 1
                )))
            }
            Some(_) => {}
        }
    }
    let kind = match side {
        Some(ChordSide::Below) => VerdictKind::ConvexBelowChord,
        Some(ChordSide::Above) => VerdictKind::ConvexAboveChord,
        _ => {
            return Err(OracleError::OracleInconsistency(
                "non-collinear cycle has every vertex on the chord".to_owned(),
            ))
        }
    };
    Ok(PolygonVerdict {
        kind,
        strict,
        witness: None,
    })
}

/// Strict convex hull in counterclockwise order, starting from the
/// lowest-x (then lowest-y) point. Collinear boundary points are dropped.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort_by(|a, b| a.x.cmp(&b.x).then_with(|| a.y.cmp(&b.y)));
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }

    fn chain<'a>(iter: impl Iterator<Item = &'a Point>) -> Vec<Point> {
        let mut out: Vec<Point> = Vec::new();
        for p in iter {
            while out.len() >= 2 && orient(&out[out.len() - 2], &out[out.len() - 1], p) != Orientation::CounterClockwise
            {
                out.pop();
            }
            out.push(p.clone());
        }
        out
    }

    let mut lower = chain(pts.iter());
    let mut upper = chain(pts.iter().rev());
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Classification derived from the convex hull alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HullVerdict {
    /// The hull has at most two vertices: all points are collinear.
    Degenerate,
    /// Every point lies on the hull boundary and the cycle walks the boundary
    /// in order. `strict` when every point is a hull vertex.
    Convex {
        strict: bool,
    },
    NotConvex,
}

pub fn hull_verdict(p: &PointSeq) -> HullVerdict {
    let pts = p.points();
    let hull = convex_hull(pts);
    if hull.len() <= 2 {
        return HullVerdict::Degenerate;
    }
    let keys: Option<Vec<(usize, Scalar)>> = pts.iter().map(|q| boundary_position(&hull, q)).collect();
    let Some(keys) = keys else {
        return HullVerdict::NotConvex;
    };
    let n = keys.len();
    let descents = (0..n).filter(|&i| keys[(i + 1) % n] < keys[i]).count();
    let ascents = n - descents;
    if descents == 1 || ascents == 1 {
        HullVerdict::Convex {
            strict: hull.len() == n,
        }
    } else {
        HullVerdict::NotConvex
    }
}

/// Position of `q` along the hull boundary as (edge index, fraction along
/// the edge in `[0, 1)`), or `None` when `q` is not on the boundary.
fn boundary_position(hull: &[Point], q: &Point) -> Option<(usize, Scalar)> {
    if let Some(k) = hull.iter().position(|h| h == q) {
        return Some((k, Scalar::zero()));
    }
    let h = hull.len();
    (0..h).find_map(|k| {
        let (a, b) = (&hull[k], &hull[(k + 1) % h]);
        if orient(a, b, q) != Orientation::Collinear {
            return None;
        }
        let (ex, ey) = (&b.x - &a.x, &b.y - &a.y);
        let dot = (&q.x - &a.x) * &ex + (&q.y - &a.y) * &ey;
        let len2 = &ex * &ex + &ey * &ey;
        let t = dot / len2;
        (t.is_positive() && t < Scalar::one()).then_some((k, t))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_integers(x, y)
    }

    fn pts(coords: &[(i64, i64)]) -> PointSeq {
        PointSeq::from_integers(coords, false).unwrap()
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orient(&pt(0, 0), &pt(1, 0), &pt(0, 1)), Orientation::CounterClockwise);
        assert_eq!(orient(&pt(0, 0), &pt(1, 1), &pt(2, 2)), Orientation::Collinear);
        // 2*1 - 2*3 = -4
        assert_eq!(orient(&pt(0, 0), &pt(2, 2), &pt(3, 1)), Orientation::Clockwise);
    }

    #[test]
    fn oracle_examples() {
        let v = oracle_classify(&pts(&[(0, 0), (1, 0), (2, 1), (3, 3)])).unwrap();
        assert_eq!((v.kind, v.strict), (VerdictKind::ConvexBelowChord, true));
        let v = oracle_classify(&pts(&[(0, 0), (2, 2), (3, 1)])).unwrap();
        assert_eq!((v.kind, v.strict), (VerdictKind::ConvexAboveChord, true));
        let v = oracle_classify(&pts(&[(0, 0), (1, 2), (2, 1), (3, 3)])).unwrap();
        assert_eq!((v.kind, v.witness), (VerdictKind::NotConvex, Some(2)));
        let v = oracle_classify(&pts(&[(0, 0), (1, 1), (2, 2)])).unwrap();
        assert_eq!((v.kind, v.strict), (VerdictKind::DegenerateCollinear, false));
    }

    #[test]
    fn hull_examples() {
        assert_eq!(convex_hull(&[pt(0, 0)]), vec![pt(0, 0)]);
        assert_eq!(
            convex_hull(&[pt(0, 0), pt(1, 1), pt(2, 2), pt(1, 0)]),
            vec![pt(0, 0), pt(1, 0), pt(2, 2)]
        );
        assert_eq!(
            convex_hull(&[pt(1, 1), pt(0, 0), pt(1, 0), pt(0, 1)]),
            vec![pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)]
        );
        assert_eq!(convex_hull(&[pt(2, 2), pt(0, 0), pt(1, 1)]), vec![pt(0, 0), pt(2, 2)]);
        assert_eq!(convex_hull(&[pt(3, 3), pt(3, 3)]), vec![pt(3, 3)]);
    }

    #[test]
    fn hull_verdicts() {
        assert_eq!(
            hull_verdict(&pts(&[(0, 0), (1, 0), (2, 1), (3, 3)])),
            HullVerdict::Convex { strict: true }
        );
        assert_eq!(
            hull_verdict(&pts(&[(0, 0), (1, 0), (2, 0), (3, 3)])),
            HullVerdict::Convex { strict: false }
        );
        assert_eq!(hull_verdict(&pts(&[(0, 0), (1, 1), (2, 2)])), HullVerdict::Degenerate);
        // reflex vertex (2,1) sits inside the hull
        assert_eq!(
            hull_verdict(&pts(&[(0, 0), (1, 2), (2, 1), (3, 3)])),
            HullVerdict::NotConvex
        );
        // all four points are hull vertices but the x-order cycle crosses itself
        assert_eq!(
            hull_verdict(&pts(&[(0, 0), (1, 1), (2, -1), (3, 0)])),
            HullVerdict::NotConvex
        );
    }

    #[test]
    fn strictness_counts_closing_turns() {
        // (2,2) lies on the chord y = x, making the closing turn at P_4 collinear
        let p = pts(&[(0, 0), (1, 5), (2, 2), (3, 3)]);
        let v = oracle_classify(&p).unwrap();
        assert_eq!((v.kind, v.strict), (VerdictKind::NotConvex, false));
    }
}
