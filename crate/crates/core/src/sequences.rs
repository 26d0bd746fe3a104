//! Predicates on finite real sequences.
//!
//! A sequence `u_1, ..., u_n` is convex when `2 u_i <= u_{i-1} + u_{i+1}` at
//! every interior index and concave when the reverse holds. Sequences of
//! length one or two have no interior index and are both.

use std::cmp::Ordering;

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("sequence must contain at least one value")]
    Empty,
    #[error("denominator b_{index} must be positive")]
    NonPositiveDenominator { index: usize },
    #[error("value x_{index} must be positive for the harmonic mean")]
    NonPositiveValue { index: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("index {index} is outside 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
}

/// A non-empty finite sequence of exact values. Indices in the public API are
/// 1-based, matching how the sequences are usually written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealSeq(Vec<Scalar>);

impl RealSeq {
    pub fn new(values: Vec<Scalar>) -> Result<Self, SequenceError> {
        if values.is_empty() {
            return Err(SequenceError::Empty);
        }
        Ok(RealSeq(values))
    }

    pub fn from_integers(values: &[i64]) -> Result<Self, SequenceError> {
        Self::new(values.iter().map(|&v| Scalar::from_integer(v)).collect())
    }

    pub fn values(&self) -> &[Scalar] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// 1-based access.
    pub fn get(&self, index: usize) -> Option<&Scalar> {
        index.checked_sub(1).and_then(|i| self.0.get(i))
    }

    /// Consecutive differences `u_{i+1} - u_i`, length `n - 1`.
    pub fn differences(&self) -> Vec<Scalar> {
        self.0.windows(2).map(|w| &w[1] - &w[0]).collect()
    }

    /// Elementwise negation.
    pub fn negated(&self) -> RealSeq {
        RealSeq(self.0.iter().map(|v| -v).collect())
    }

    /// The contiguous 1-based slice `from..=to`.
    pub fn slice(&self, from: usize, to: usize) -> Option<RealSeq> {
        if from == 0 || from > to || to > self.len() {
            return None;
        }
        Some(RealSeq(self.0[from - 1..to].to_vec()))
    }
}

/// Pairs `(a_i, b_i)` with every `b_i > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioList(Vec<(Scalar, Scalar)>);

impl RatioList {
    pub fn new(pairs: Vec<(Scalar, Scalar)>) -> Result<Self, SequenceError> {
        if pairs.is_empty() {
            return Err(SequenceError::Empty);
        }
        if let Some(pos) = pairs.iter().position(|(_, b)| !b.is_positive()) {
            return Err(SequenceError::NonPositiveDenominator { index: pos + 1 });
        }
        Ok(RatioList(pairs))
    }

    pub fn pairs(&self) -> &[(Scalar, Scalar)] {
        &self.0
    }
}

/// First failing 1-based index for each property, `None` when it holds.
///
/// Convexity indices name the interior position `i` of the failing
/// `u_{i-1}, u_i, u_{i+1}` triple; monotonicity indices name the later
/// element `i` of the failing pair `u_{i-1}, u_i`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Violations {
    pub convex: Option<usize>,
    pub concave: Option<usize>,
    pub increasing: Option<usize>,
    pub strictly_increasing: Option<usize>,
    pub decreasing: Option<usize>,
    pub strictly_decreasing: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqReport {
    pub is_convex: bool,
    pub is_concave: bool,
    pub is_increasing: bool,
    pub is_strictly_increasing: bool,
    pub is_decreasing: bool,
    pub is_strictly_decreasing: bool,
    /// First interior index where the convexity inequality fails.
    pub first_violation_index: Option<usize>,
    pub violations: Violations,
}

pub fn analyze_sequence(u: &RealSeq) -> SeqReport {
    let v = u.values();
    let first_triple = |pred: &dyn Fn(Ordering) -> bool| {
        v.windows(3)
            .position(|w| !pred((&w[1] + &w[1]).cmp(&(&w[0] + &w[2]))))
            .map(|p| p + 2)
    };
    let first_pair = |pred: &dyn Fn(Ordering) -> bool| v.windows(2).position(|w| !pred(w[0].cmp(&w[1]))).map(|p| p + 2);

    let violations = Violations {
        convex: first_triple(&|o| o != Ordering::Greater),
        concave: first_triple(&|o| o != Ordering::Less),
        increasing: first_pair(&|o| o != Ordering::Greater),
        strictly_increasing: first_pair(&|o| o == Ordering::Less),
        decreasing: first_pair(&|o| o != Ordering::Less),
        strictly_decreasing: first_pair(&|o| o == Ordering::Greater),
    };
    SeqReport {
        is_convex: violations.convex.is_none(),
        is_concave: violations.concave.is_none(),
        is_increasing: violations.increasing.is_none(),
        is_strictly_increasing: violations.strictly_increasing.is_none(),
        is_decreasing: violations.decreasing.is_none(),
        is_strictly_decreasing: violations.strictly_decreasing.is_none(),
        first_violation_index: violations.convex,
        violations,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MediantBounds {
    pub lo: Scalar,
    pub mid: Scalar,
    pub hi: Scalar,
}

/// Minimum ratio, mediant `sum(a) / sum(b)`, and maximum ratio.
///
/// Ratios are compared by cross-multiplication, which is sound because
/// every `b_i` is positive.
pub fn mediant_bounds(r: &RatioList) -> MediantBounds {
    let pairs = r.pairs();
    let cross = |p: &(Scalar, Scalar), q: &(Scalar, Scalar)| (&p.0 * &q.1).cmp(&(&q.0 * &p.1));
    let lo = pairs.iter().min_by(|p, q| cross(p, q)).expect("non-empty");
    let hi = pairs.iter().max_by(|p, q| cross(p, q)).expect("non-empty");
    let sum_a: Scalar = pairs.iter().map(|(a, _)| a).sum();
    let sum_b: Scalar = pairs.iter().map(|(_, b)| b).sum();
    MediantBounds {
        lo: &lo.0 / &lo.1,
        mid: sum_a / sum_b,
        hi: &hi.0 / &hi.1,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeanKind {
    Arithmetic,
    Harmonic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeanBounds {
    pub lo: Scalar,
    pub mean: Scalar,
    pub hi: Scalar,
}

/// Arithmetic or harmonic mean together with the min and max, all obtained
/// as a mediant: `a_i = x_i, b_i = 1` for the arithmetic mean and
/// `a_i = 1, b_i = 1/x_i` for the harmonic mean.
pub fn mean_bounds(x: &RealSeq, kind: MeanKind) -> Result<MeanBounds, SequenceError> {
    let pairs = match kind {
        MeanKind::Arithmetic => x.values().iter().map(|v| (v.clone(), Scalar::one())).collect(),
        MeanKind::Harmonic => {
            if let Some(pos) = x.values().iter().position(|v| !v.is_positive()) {
                return Err(SequenceError::NonPositiveValue { index: pos + 1 });
            }
            x.values()
                .iter()
                .map(|v| (Scalar::one(), v.recip().expect("positive")))
                .collect()
        }
    };
    let MediantBounds { lo, mid, hi } = mediant_bounds(&RatioList::new(pairs)?);
    Ok(MeanBounds { lo, mean: mid, hi })
}

/// Whether `m` (1-based) satisfies `u_i <= u_m` for all `i < m`, or
/// `u_m <= u_i` for all `i > m`. Both clauses are evaluated independently.
pub fn check_pivot(u: &RealSeq, m: usize) -> Result<bool, SequenceError> {
    if !analyze_sequence(u).is_convex {
        return Err(SequenceError::PreconditionViolated("sequence is not convex"));
    }
    pivot_holds(u, m)
}

fn pivot_holds(u: &RealSeq, m: usize) -> Result<bool, SequenceError> {
    let v = u.values();
    if m == 0 || m > v.len() {
        return Err(SequenceError::IndexOutOfRange { index: m, len: v.len() });
    }
    let um = &v[m - 1];
    let left = v[..m - 1].iter().all(|ui| ui <= um);
    let right = v[m..].iter().all(|ui| um <= ui);
    Ok(left || right)
}

/// Smallest 1-based index accepted by [`check_pivot`].
pub fn find_pivot(u: &RealSeq) -> Result<usize, SequenceError> {
    if !analyze_sequence(u).is_convex {
        return Err(SequenceError::PreconditionViolated("sequence is not convex"));
    }
    for m in 1..=u.len() {
        if pivot_holds(u, m)? {
            return Ok(m);
        }
    }
    Err(SequenceError::PreconditionViolated("no pivot exists"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(v: &[i64]) -> RealSeq {
        RealSeq::from_integers(v).unwrap()
    }

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d).unwrap()
    }

    fn ratios(pairs: &[(i64, i64)]) -> RatioList {
        RatioList::new(pairs.iter().map(|&(a, b)| (q(a, 1), q(b, 1))).collect()).unwrap()
    }

    #[test]
    fn analyze_examples() {
        let r = analyze_sequence(&seq(&[0, 1, 3, 6]));
        assert!(r.is_convex && !r.is_concave && r.is_strictly_increasing);
        assert_eq!(r.violations.concave, Some(2));

        let r = analyze_sequence(&seq(&[0, 2, 3]));
        assert!(r.is_concave && !r.is_convex);
        assert_eq!(r.first_violation_index, Some(2));

        let r = analyze_sequence(&seq(&[5, 5, 5]));
        assert!(r.is_convex && r.is_concave && r.is_increasing && r.is_decreasing);
        assert!(!r.is_strictly_increasing && !r.is_strictly_decreasing);
        assert_eq!(r.violations.strictly_increasing, Some(2));

        let r = analyze_sequence(&seq(&[0, 2, 1]));
        assert_eq!(r.first_violation_index, Some(2));
        assert_eq!(r.violations.increasing, Some(3));
    }

    #[test]
    fn short_sequences_are_convex_and_concave() {
        for v in [&[7][..], &[1, -4][..]] {
            let r = analyze_sequence(&seq(v));
            assert!(r.is_convex && r.is_concave);
            assert_eq!(r.first_violation_index, None);
        }
    }

    #[test]
    fn empty_sequence_rejected() {
        assert_eq!(RealSeq::new(vec![]), Err(SequenceError::Empty));
    }

    #[test]
    fn mediant_examples() {
        let b = mediant_bounds(&ratios(&[(1, 2), (3, 4)]));
        assert_eq!((b.lo, b.mid, b.hi), (q(1, 2), q(2, 3), q(3, 4)));

        let b = mediant_bounds(&ratios(&[(-7, 3)]));
        assert_eq!((b.lo.clone(), b.mid.clone()), (q(-7, 3), q(-7, 3)));
        assert_eq!(b.hi, q(-7, 3));

        let b = mediant_bounds(&ratios(&[(-1, 1), (1, 1), (4, 2)]));
        assert_eq!((b.lo, b.mid, b.hi), (q(-1, 1), q(1, 1), q(2, 1)));
    }

    #[test]
    fn ratio_list_rejects_nonpositive_denominators() {
        let bad = RatioList::new(vec![(q(1, 1), q(1, 1)), (q(1, 1), q(0, 1))]);
        assert_eq!(bad, Err(SequenceError::NonPositiveDenominator { index: 2 }));
        let bad = RatioList::new(vec![(q(1, 1), q(-1, 2))]);
        assert_eq!(bad, Err(SequenceError::NonPositiveDenominator { index: 1 }));
    }

    #[test]
    fn mean_examples() {
        let m = mean_bounds(&seq(&[1, 2, 3]), MeanKind::Arithmetic).unwrap();
        assert_eq!((m.lo, m.mean, m.hi), (q(1, 1), q(2, 1), q(3, 1)));
        let m = mean_bounds(&seq(&[1, 1, 1]), MeanKind::Harmonic).unwrap();
        assert_eq!((m.lo, m.mean, m.hi), (q(1, 1), q(1, 1), q(1, 1)));
        // 3 / (1/2 + 1/3 + 1/6) = 3
        let m = mean_bounds(&seq(&[2, 3, 6]), MeanKind::Harmonic).unwrap();
        assert_eq!((m.lo, m.mean, m.hi), (q(2, 1), q(3, 1), q(6, 1)));
    }

    #[test]
    fn harmonic_mean_requires_positive_values() {
        assert_eq!(
            mean_bounds(&seq(&[2, 0, 1]), MeanKind::Harmonic),
            Err(SequenceError::NonPositiveValue { index: 2 })
        );
        // arithmetic mean has no such restriction
        assert!(mean_bounds(&seq(&[2, 0, -1]), MeanKind::Arithmetic).is_ok());
    }

    #[test]
    fn pivot_examples() {
        let u = seq(&[3, 1, 0, 2, 5]);
        assert_eq!(check_pivot(&u, 3), Ok(true));
        assert_eq!(check_pivot(&u, 2), Ok(false));
        assert_eq!(check_pivot(&seq(&[0, 1, 2]), 1), Ok(true));
        assert_eq!(find_pivot(&seq(&[0, 1, 2, 3])), Ok(1));
        assert_eq!(find_pivot(&u), Ok(1));
        assert_eq!(find_pivot(&seq(&[3, 2, 1])), Ok(1));
    }

    #[test]
    fn pivot_errors() {
        let not_convex = seq(&[0, 2, 1]);
        assert!(matches!(
            check_pivot(&not_convex, 1),
            Err(SequenceError::PreconditionViolated(_))
        ));
        assert!(matches!(
            find_pivot(&not_convex),
            Err(SequenceError::PreconditionViolated(_))
        ));
        assert_eq!(
            check_pivot(&seq(&[1, 2]), 3),
            Err(SequenceError::IndexOutOfRange { index: 3, len: 2 })
        );
        assert!(check_pivot(&seq(&[1, 2]), 0).is_err());
    }

    fn convex_from_diffs(start: i64, mut diffs: Vec<i64>) -> RealSeq {
        diffs.sort();
        let mut v = vec![start];
        for d in diffs {
            v.push(v.last().unwrap() + d);
        }
        seq(&v)
    }

    proptest! {
        #[test]
        fn convexity_matches_nondecreasing_differences(v in prop::collection::vec(-20i64..20, 1..10)) {
            let u = seq(&v);
            let d = u.differences();
            let diffs_nondecreasing = d.windows(2).all(|w| w[0] <= w[1]);
            prop_assert_eq!(analyze_sequence(&u).is_convex, diffs_nondecreasing);
        }

        #[test]
        fn negation_swaps_convex_and_concave(v in prop::collection::vec(-20i64..20, 1..10)) {
            let u = seq(&v);
            let a = analyze_sequence(&u);
            let b = analyze_sequence(&u.negated());
            prop_assert_eq!(a.is_convex, b.is_concave);
            prop_assert_eq!(a.is_concave, b.is_convex);
            prop_assert_eq!(a.is_increasing, b.is_decreasing);
        }

        #[test]
        fn two_term_mediant_between_ratios(a1 in -100i64..100, b1 in 1i64..100, a2 in -100i64..100, b2 in 1i64..100) {
            let (r1, r2) = (q(a1, b1), q(a2, b2));
            let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
            let mid = q(a1 + a2, b1 + b2);
            prop_assert!(lo <= mid && mid <= hi);
        }

        #[test]
        fn pivot_is_smallest_valid_index(start in -20i64..20, diffs in prop::collection::vec(-10i64..10, 0..9)) {
            let u = convex_from_diffs(start, diffs);
            let m = find_pivot(&u).unwrap();
            prop_assert!(check_pivot(&u, m).unwrap());
            let brute = (1..=u.len()).find(|&k| {
                let v = u.values();
                (0..k - 1).all(|i| v[i] <= v[k - 1]) || (k..v.len()).all(|i| v[k - 1] <= v[i])
            });
            prop_assert_eq!(Some(m), brute);
        }
    }
}
