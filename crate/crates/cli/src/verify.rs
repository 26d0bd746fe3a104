//! Seeded fuzz verification of the classifier against the oracles.
//!
//! Instance `i` of a run is drawn from a ChaCha8 generator seeded with the
//! run seed and switched to stream `i`, so every instance is reproducible on
//! its own and runs can be split across threads without changing results.

use std::fmt;
use std::str::FromStr;

use convexseq::{
    check_hypotheses, classify, hull_verdict, oracle_classify, HullVerdict, Hypothesis, Point, PointSeq,
    PolygonVerdict, RealSeq, Scalar, VerdictKind,
};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::input::points_to_json;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Uniformly random ys mixed with convex, weakly convex and collinear
    /// instances.
    Mixed,
    /// Convex chains only, below or above the chord.
    ConvexOnly,
    /// Coordinate sequences satisfying the given sufficient condition.
    Hypothesis(Hypothesis),
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mixed" => Ok(Mode::Mixed),
            "convex-only" => Ok(Mode::ConvexOnly),
            _ => match s.strip_prefix("hypothesis:") {
                Some(h) => match h.parse::<Hypothesis>()? {
                    t @ (Hypothesis::Thm15 | Hypothesis::Thm16 | Hypothesis::Thm17) => Ok(Mode::Hypothesis(t)),
                    other => Err(format!(
                        "{} is not a polygon theorem; use Thm15, Thm16 or Thm17",
                        other.as_str()
                    )),
                },
                None => Err(format!(
                    "unknown mode {s:?}; expected mixed, convex-only or hypothesis:Thm15|Thm16|Thm17"
                )),
            },
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Mixed => f.write_str("mixed"),
            Mode::ConvexOnly => f.write_str("convex-only"),
            Mode::Hypothesis(h) => write!(f, "hypothesis:{}", h.as_str()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid verify configuration: {0}")]
pub struct ConfigError(pub String);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzConfig {
    pub seed: u64,
    pub instances: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub coord_range: i64,
    pub mode: Mode,
    /// Generate instances with `x_1 = x_2` (and sometimes `x_{n-1} = x_n`).
    pub relax_endpoints: bool,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: 42,
            instances: 1000,
            n_min: 3,
            n_max: 12,
            coord_range: 50,
            mode: Mode::Mixed,
            relax_endpoints: false,
        }
    }
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        let fail = |m: String| Err(ConfigError(m));
        if self.instances < 1 {
            return fail("--instances must be at least 1".into());
        }
        if self.n_min < 3 {
            return fail("--n-min must be at least 3".into());
        }
        if self.n_max < self.n_min {
            return fail(format!("--n-max ({}) is below --n-min ({})", self.n_max, self.n_min));
        }
        if self.coord_range < 1 {
            return fail("--coord-range must be at least 1".into());
        }
        let distinct_xs = (2 * self.coord_range + 1) as usize;
        if matches!(self.mode, Mode::Mixed | Mode::ConvexOnly) && distinct_xs < self.n_max {
            return fail(format!(
                "--coord-range {} offers only {distinct_xs} distinct x values for up to {} points",
                self.coord_range, self.n_max
            ));
        }
        if self.relax_endpoints && matches!(self.mode, Mode::Hypothesis(_)) {
            return fail("--relax-endpoints cannot be combined with hypothesis modes".into());
        }
        Ok(())
    }

    fn rng_for(&self, index: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64);
        rng
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Random,
    Convex { upper: bool },
    Collinear,
}

/// Sorted xs, `n - dups` of them distinct, with the first (and when
/// `dups == 2` the last) value repeated.
fn draw_xs(rng: &mut ChaCha8Rng, n: usize, r: i64, dups: usize) -> Vec<i64> {
    let span = (2 * r + 1) as usize;
    let mut xs: Vec<i64> = sample(rng, span, n - dups).into_iter().map(|i| i as i64 - r).collect();
    xs.sort_unstable();
    if dups >= 1 {
        xs.insert(0, xs[0]);
    }
    if dups == 2 {
        xs.push(xs[xs.len() - 1]);
    }
    xs
}

fn points_from(xs: &[i64], ys: &[i64]) -> Vec<Point> {
    xs.iter().zip(ys).map(|(&x, &y)| Point::from_integers(x, y)).collect()
}

fn generate_shaped(rng: &mut ChaCha8Rng, cfg: &FuzzConfig, shape: Shape) -> PointSeq {
    let r = cfg.coord_range;
    let n = rng.random_range(cfg.n_min..=cfg.n_max);
    let dups = match (cfg.relax_endpoints, n >= 4 && rng.random_bool(0.5)) {
        (false, _) => 0,
        (true, false) => 1,
        (true, true) => 2,
    };
    let xs = draw_xs(rng, n, r, dups);
    let mut ys: Vec<i64> = match shape {
        Shape::Random => (0..n).map(|_| rng.random_range(-r..=r)).collect(),
        Shape::Collinear => {
            let (a, b) = (rng.random_range(-3..=3), rng.random_range(-r..=r));
            xs.iter().map(|x| a * x + b).collect()
        }
        Shape::Convex { .. } => {
            // few distinct slopes, so repeated slopes (collinear vertices) show up
            let spread = rng.random_range(1..=4);
            let mut slopes: Vec<i64> = (0..n - 1).map(|_| rng.random_range(-spread..=spread)).collect();
            slopes.sort_unstable();
            let mut ys = vec![rng.random_range(-r..=r)];
            for i in 0..n - 1 {
                let dy = if xs[i] == xs[i + 1] {
                    // vertical end edges of a below-chord chain point down on
                    // the left and up on the right
                    let h = rng.random_range(1..=r);
                    if i == 0 {
                        -h
                    } else {
                        h
                    }
                } else {
                    slopes[i] * (xs[i + 1] - xs[i])
                };
                ys.push(ys[i] + dy);
            }
            ys
        }
    };
    if let Shape::Convex { upper: true } = shape {
        ys.iter_mut().for_each(|y| *y = -*y);
    }
    // vertical pairs must not coincide
    if xs[0] == xs[1] && ys[0] == ys[1] {
        ys[0] += 1;
    }
    if xs[n - 2] == xs[n - 1] && ys[n - 2] == ys[n - 1] {
        ys[n - 1] += 1;
    }
    PointSeq::new(points_from(&xs, &ys), cfg.relax_endpoints).expect("generator yields valid point sequences")
}

fn prefix_sums(start: i64, diffs: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(diffs.len() + 1);
    out.push(start);
    for d in diffs {
        out.push(out[out.len() - 1] + d);
    }
    out
}

fn sorted_diffs(rng: &mut ChaCha8Rng, len: usize, lo: i64, hi: i64, descending: bool) -> Vec<i64> {
    let mut d: Vec<i64> = (0..len).map(|_| rng.random_range(lo..=hi)).collect();
    d.sort_unstable();
    if descending {
        d.reverse();
    }
    d
}

/// Coordinate sequences satisfying the theorem's hypotheses by construction.
pub fn generate_hypothesis_sequences(
    rng: &mut ChaCha8Rng,
    n: usize,
    r: i64,
    theorem: Hypothesis,
) -> (Vec<i64>, Vec<i64>) {
    let x0 = rng.random_range(-r..=r);
    let y0 = rng.random_range(-r..=r);
    match theorem {
        Hypothesis::Prop1 | Hypothesis::Thm15 => {
            // x gaps positive and shrinking, y gaps nonnegative and growing
            let dx = sorted_diffs(rng, n - 1, 1, r, true);
            let dy = sorted_diffs(rng, n - 1, 0, r, false);
            (prefix_sums(x0, &dx), prefix_sums(y0, &dy))
        }
        Hypothesis::Prop2 | Hypothesis::Thm16 => {
            let dx = sorted_diffs(rng, n - 1, 1, r, false);
            let dy = sorted_diffs(rng, n - 1, -r, 0, false);
            (prefix_sums(x0, &dx), prefix_sums(y0, &dy))
        }
        Hypothesis::Thm17 => {
            let m = rng.random_range(1..=n);
            let mut dx = sorted_diffs(rng, m - 1, 1, r, false);
            dx.extend(sorted_diffs(rng, n - m, 1, r, true));
            let mut dy = sorted_diffs(rng, m - 1, -r, -1, false);
            dy.extend(sorted_diffs(rng, n - m, 0, r, false));
            (prefix_sums(x0, &dx), prefix_sums(y0, &dy))
        }
    }
}

/// Instance `index` of the run described by `cfg`.
pub fn generate_instance(cfg: &FuzzConfig, index: usize) -> PointSeq {
    let mut rng = cfg.rng_for(index);
    match cfg.mode {
        Mode::Mixed => {
            let shape = match rng.random_range(0..8) {
                0..=3 => Shape::Random,
                4 | 5 => Shape::Convex { upper: false },
                6 => Shape::Convex { upper: true },
                _ => Shape::Collinear,
            };
            generate_shaped(&mut rng, cfg, shape)
        }
        Mode::ConvexOnly => {
            let upper = rng.random_bool(0.5);
            generate_shaped(&mut rng, cfg, Shape::Convex { upper })
        }
        Mode::Hypothesis(theorem) => {
            let n = rng.random_range(cfg.n_min..=cfg.n_max);
            let (xs, ys) = generate_hypothesis_sequences(&mut rng, n, cfg.coord_range, theorem);
            PointSeq::new(points_from(&xs, &ys), false).expect("strictly increasing xs")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub index: usize,
    pub points: Vec<Point>,
    pub relax_endpoints: bool,
    pub reason: String,
}

impl Disagreement {
    /// The offending instance as a JSON instance file.
    pub fn instance_json(&self) -> String {
        points_to_json(&self.points, self.relax_endpoints)
    }
}

fn describe(v: &PolygonVerdict) -> String {
    format!("{} (strict={})", v.kind, v.strict)
}

/// Runs every check on one instance; `Err` carries the reason for the first
/// failed check.
pub fn check_instance(p: &PointSeq, mode: Mode) -> Result<(), String> {
    let main = classify(p);
    let oracle = oracle_classify(p).map_err(|e| e.to_string())?;
    if main.kind != oracle.kind || main.strict != oracle.strict {
        return Err(format!(
            "classify gave {} but the orientation oracle gave {}",
            describe(&main),
            describe(&oracle)
        ));
    }
    let hull = hull_verdict(p);
    let expected_hull = match main.kind {
        VerdictKind::DegenerateCollinear => HullVerdict::Degenerate,
        VerdictKind::NotConvex => HullVerdict::NotConvex,
        VerdictKind::ConvexBelowChord | VerdictKind::ConvexAboveChord => HullVerdict::Convex { strict: main.strict },
    };
    if hull != expected_hull {
        return Err(format!(
            "classify gave {} but the hull check gave {hull:?}",
            describe(&main)
        ));
    }
    if let Mode::Hypothesis(theorem) = mode {
        let xs = RealSeq::new(p.points().iter().map(|q| q.x.clone()).collect::<Vec<Scalar>>()).expect("non-empty");
        let ys = RealSeq::new(p.points().iter().map(|q| q.y.clone()).collect::<Vec<Scalar>>()).expect("non-empty");
        let report = check_hypotheses(&xs, &ys, theorem).map_err(|e| e.to_string())?;
        if !report.satisfied {
            return Err(format!(
                "generated instance fails {} hypotheses ({})",
                theorem.as_str(),
                report.failed_condition.map(|c| c.code()).unwrap_or("unknown")
            ));
        }
        if !matches!(
            main.kind,
            VerdictKind::ConvexBelowChord | VerdictKind::DegenerateCollinear
        ) {
            return Err(format!(
                "{} hypotheses hold but classify gave {}",
                theorem.as_str(),
                describe(&main)
            ));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub instances: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub seed: u64,
    /// Lowest-index disagreement, if any.
    #[serde(skip)]
    pub first_disagreement: Option<Disagreement>,
}

pub fn run_verify(cfg: &FuzzConfig) -> Result<VerifySummary, ConfigError> {
    cfg.validate()?;
    let mut failures: Vec<Disagreement> = (0..cfg.instances)
        .into_par_iter()
        .filter_map(|i| {
            let p = generate_instance(cfg, i);
            check_instance(&p, cfg.mode).err().map(|reason| Disagreement {
                index: i,
                points: p.points().to_vec(),
                relax_endpoints: p.endpoint_relaxation(),
                reason,
            })
        })
        .collect();
    failures.sort_by_key(|d| d.index);
    let disagreements = failures.len();
    Ok(VerifySummary {
        instances: cfg.instances,
        agreements: cfg.instances - disagreements,
        disagreements,
        seed: cfg.seed,
        first_disagreement: failures.into_iter().next(),
    })
}
