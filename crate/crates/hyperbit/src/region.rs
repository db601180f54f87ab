//! Geometry of the equivalence claim: target function `t(x,y,z) = y + xz`,
//! the quantum region C, the strategy-feasible parallelepiped D, z-aware
//! strategies, the minimax gap on C\D, and the boundary helices.
//!
//! Strategy feasibility questions reduce to the differences
//! `(i, s) = (k1−k2, k3−k4)`, which range over the diamond `|i|+|s| ≤ 1`
//! exactly as the weights range over the simplex; slack is distributed
//! canonically when lifting back to weights so outputs are reproducible.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::protocol::{pw_q, CounterRng, StrategyWeights};
use crate::sign::Sign;

/// Boundary tolerance on all region predicates; points within `tol` of a
/// boundary classify inclusively.
pub const REGION_TOL: f64 = 1e-9;

/// Cosine threshold below which the helix z-component takes its limit value.
const HELIX_SINGULARITY_TOL: f64 = 1e-8;

/// A coordinate triple `(x, y, z)` of a branch.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegionPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl RegionPoint {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    /// The target value `t = y + x·z`.
    pub fn target(&self) -> f64 {
        self.y + self.x * self.z
    }
}

/// Classification of a point against the two regions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RegionLabel {
    InsideD,
    InCNotD,
    OutsideC,
}

/// Quantum region: `x² + y² ≤ 1`, `|t| ≤ 1`, `|z| ≤ 1`.
pub fn in_c(p: RegionPoint) -> bool {
    p.x * p.x + p.y * p.y <= 1.0 + REGION_TOL
        && p.target().abs() <= 1.0 + REGION_TOL
        && p.z.abs() <= 1.0 + REGION_TOL
}

/// Strategy-feasible parallelepiped: `|z| ≤ 1` and `|x| + |y| ≤ 1`
/// (both signs of the `|y| ± x ≤ 1` constraint at once).
pub fn in_d(p: RegionPoint) -> bool {
    p.z.abs() <= 1.0 + REGION_TOL && p.x.abs() + p.y.abs() <= 1.0 + REGION_TOL
}

pub fn classify(p: RegionPoint) -> RegionLabel {
    if !in_c(p) {
        RegionLabel::OutsideC
    } else if in_d(p) {
        RegionLabel::InsideD
    } else {
        RegionLabel::InCNotD
    }
}

/// Lift reduced coordinates `(i, s) = (k1−k2, k3−k4)` back to weights,
/// splitting the slack `1 − |i| − |s|` equally between discard mass and
/// pass mass. Inputs within boundary tolerance of the diamond are clamped
/// onto it so the simplex invariants hold at machine precision.
fn weights_from_reduced(i: f64, s: f64) -> Result<StrategyWeights> {
    let i = i.clamp(-1.0, 1.0);
    let s_cap = 1.0 - i.abs();
    let s = s.clamp(-s_cap, s_cap);
    let slack = (1.0 - i.abs() - s.abs()).max(0.0);
    let k1 = ((i.abs() + slack / 2.0) + i) / 2.0;
    let k2 = ((i.abs() + slack / 2.0) - i) / 2.0;
    let k3 = ((s.abs() + slack / 2.0) + s) / 2.0;
    let k4 = ((s.abs() + slack / 2.0) - s) / 2.0;
    StrategyWeights::new(k1, k2, k3, k4)
}

/// The z-independent strategy with `k1−k2 = y` and `k3−k4 = x`, feasible
/// iff `|x| + |y| ≤ 1`.
pub fn weights_for(x: f64, y: f64) -> Result<StrategyWeights> {
    let excess = x.abs() + y.abs() - 1.0;
    if excess > REGION_TOL {
        return Err(Error::Infeasible { excess });
    }
    weights_from_reduced(y, x)
}

/// A strategy matching `t(x,y,z)` at one known `z` (the z-aware relaxation):
/// weights with `k1−k2 + (k3−k4)·z = y + x·z`, preferring minimal
/// `|k3−k4 − x|`. Exists whenever `|t| ≤ 1`, i.e. on all of C.
pub fn z_aware_weights(x: f64, y: f64, z: f64) -> Result<StrategyWeights> {
    let t = y + x * z;
    if t.abs() > 1.0 + REGION_TOL {
        return Err(Error::Infeasible {
            excess: t.abs() - 1.0,
        });
    }
    // feasible set of s under φ(s) = |t − s·z| + |s| ≤ 1 is an interval
    // containing 0; φ is piecewise linear with breakpoints at 0 and t/z
    let phi = |s: f64| (t - s * z).abs() + s.abs();
    let mut breakpoints = vec![-1.0, 0.0, 1.0];
    if z.abs() > 1e-15 {
        let kink = t / z;
        if kink > -1.0 && kink < 1.0 {
            breakpoints.push(kink);
        }
    }
    breakpoints.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    let mut note = |s: f64| {
        lo = lo.min(s);
        hi = hi.max(s);
    };
    for pair in breakpoints.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let (fa, fb) = (phi(a), phi(b));
        if fa <= 1.0 + 1e-12 {
            note(a);
        }
        if fb <= 1.0 + 1e-12 {
            note(b);
        }
        if (fa - 1.0) * (fb - 1.0) < 0.0 {
            note(a + (b - a) * (1.0 - fa) / (fb - fa));
        }
    }
    if lo > hi {
        return Err(Error::Infeasible {
            excess: phi(0.0) - 1.0,
        });
    }
    let s = x.clamp(lo, hi);
    let i = t - s * z;
    weights_from_reduced(i, s)
}

/// A closed interval of admissible z values.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn contains(&self, z: f64) -> bool {
        z >= self.lo - REGION_TOL && z <= self.hi + REGION_TOL
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// The set `{z : |z| ≤ 1 and |y + x·z| ≤ 1}` at fixed `(x, y)` with
/// `x² + y² ≤ 1`; never empty there since `z = 0` always qualifies.
pub fn admissible_z_interval(x: f64, y: f64) -> Result<Interval> {
    let (mut lo, mut hi) = (-1.0f64, 1.0f64);
    if x.abs() > 1e-15 {
        let a = (-1.0 - y) / x;
        let b = (1.0 - y) / x;
        lo = lo.max(a.min(b));
        hi = hi.min(a.max(b));
    }
    if lo > hi + REGION_TOL {
        return Err(Error::EmptyInterval);
    }
    Ok(Interval { lo, hi })
}

/// Outcome of the minimax analysis at a point of the disk.
#[derive(Clone, Debug, Serialize)]
pub struct GapReport {
    pub point_xy: (f64, f64),
    pub admissible_z: Interval,
    /// Minimizer of the worst-case deviation over the strategy simplex.
    pub best_weights: StrategyWeights,
    /// Admissible z at which the best strategy still misses `t` by `gap`.
    pub worst_z: f64,
    /// `min_k max_z |t(x,y,z) − g(k,z)|`; zero exactly on `|x|+|y| ≤ 1`.
    pub gap: f64,
}

/// Exact minimax gap: minimize over the reduced diamond `|i|+|s| ≤ 1` the
/// larger deviation `|t − g|` at the two admissible-z endpoints (both
/// functions are affine in z, so the interval maximum sits at an endpoint).
/// The objective is piecewise-linear convex, so the minimum is attained at
/// one of the enumerable breakpoints on the diamond boundary — or is zero
/// when `(y, x)` itself lies inside the diamond.
pub fn minimax_gap(x: f64, y: f64) -> Result<GapReport> {
    let interval = admissible_z_interval(x, y)?;
    let (z1, z2) = (interval.lo, interval.hi);
    let (t1, t2) = (y + x * z1, y + x * z2);

    if x.abs() + y.abs() <= 1.0 {
        return Ok(GapReport {
            point_xy: (x, y),
            admissible_z: interval,
            best_weights: weights_for(x, y)?,
            worst_z: z1,
            gap: 0.0,
        });
    }

    let score = |i: f64, s: f64| -> (f64, f64) {
        let e1 = (t1 - (i + s * z1)).abs();
        let e2 = (t2 - (i + s * z2)).abs();
        if e1 >= e2 {
            (e1, z1)
        } else {
            (e2, z2)
        }
    };

    let mut candidates: Vec<(f64, f64)> = Vec::new();
    // single-endpoint exact fits (interior of the diamond when |t| ≤ 1)
    if t1.abs() <= 1.0 {
        candidates.push((t1, 0.0));
    }
    if t2.abs() <= 1.0 {
        candidates.push((t2, 0.0));
    }
    // boundary breakpoints: per edge, zeros of each deviation and the
    // points where the two deviations tie
    let vertices = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];
    for k in 0..4 {
        let (i0, s0) = vertices[k];
        let (i1, s1) = vertices[(k + 1) % 4];
        let (di, ds) = (i1 - i0, s1 - s0);
        let a1 = t1 - i0 - s0 * z1;
        let b1 = di + ds * z1;
        let a2 = t2 - i0 - s0 * z2;
        let b2 = di + ds * z2;
        let mut params = vec![0.0, 1.0];
        for (a, b) in [(a1, b1), (a2, b2)] {
            if b.abs() > 1e-15 {
                params.push(a / b);
            }
        }
        if (b1 - b2).abs() > 1e-15 {
            params.push((a1 - a2) / (b1 - b2));
        }
        if (b1 + b2).abs() > 1e-15 {
            params.push((a1 + a2) / (b1 + b2));
        }
        for p in params {
            if (0.0..=1.0).contains(&p) {
                candidates.push((i0 + p * di, s0 + p * ds));
            }
        }
    }

    let mut best = (f64::INFINITY, (0.0, 0.0), z1);
    for (i, s) in candidates {
        let (value, worst) = score(i, s);
        if value < best.0 {
            best = (value, (i, s), worst);
        }
    }
    let (gap, (i, s), worst_z) = best;
    Ok(GapReport {
        point_xy: (x, y),
        admissible_z: interval,
        best_weights: weights_from_reduced(i, s)?,
        worst_z,
        gap,
    })
}

/// Dense-grid reference for [`minimax_gap`]: scan the `(i, s)` diamond at
/// `resolution` steps per axis and take the best worst-endpoint deviation.
/// Retained as the independent oracle for the exact path.
pub fn minimax_gap_grid(x: f64, y: f64, resolution: usize) -> Result<f64> {
    let interval = admissible_z_interval(x, y)?;
    let (z1, z2) = (interval.lo, interval.hi);
    let (t1, t2) = (y + x * z1, y + x * z2);
    let steps = resolution.max(1);
    let mut best = f64::INFINITY;
    for a in 0..=steps {
        let i = -1.0 + 2.0 * a as f64 / steps as f64;
        for b in 0..=steps {
            let s = -1.0 + 2.0 * b as f64 / steps as f64;
            if i.abs() + s.abs() > 1.0 + 1e-12 {
                continue;
            }
            let e1 = (t1 - (i + s * z1)).abs();
            let e2 = (t2 - (i + s * z2)).abs();
            best = best.min(e1.max(e2));
        }
    }
    Ok(best)
}

/// Point of the boundary helix `{cos τ, ±sin τ, ±(1−sin τ)/cos τ}` for
/// `τ ∈ [0, π]`; the removable singularity at `τ = π/2` evaluates to its
/// limit `z = 0`. Every point satisfies `x² + y² = 1` and `|t| = 1`.
pub fn helix_point(tau: f64, branch: Sign) -> RegionPoint {
    let (sin, cos) = tau.sin_cos();
    let beta = branch.value();
    let z = if cos.abs() < HELIX_SINGULARITY_TOL {
        0.0
    } else {
        beta * (1.0 - sin) / cos
    };
    RegionPoint::new(cos, beta * sin, z)
}

/// Grid and sampling parameters for a region scan.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanConfig {
    pub nx: usize,
    pub ny: usize,
    pub nz: usize,
    pub seed: u64,
    pub volume_samples: u64,
    pub with_gap: bool,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            nx: 41,
            ny: 41,
            nz: 41,
            seed: 1,
            volume_samples: 200_000,
            with_gap: false,
        }
    }
}

/// One labeled grid point of a scan.
#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub point: RegionPoint,
    pub t: f64,
    pub in_c: bool,
    pub in_d: bool,
    pub q: Option<f64>,
    pub q_valid: bool,
    pub gap: Option<f64>,
}

impl ScanRow {
    pub fn csv_header() -> &'static str {
        "x,y,z,t,in_C,in_D,q,q_valid,gap"
    }

    pub fn to_csv(&self) -> String {
        let opt = |v: Option<f64>| v.map(|v| v.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.point.x,
            self.point.y,
            self.point.z,
            self.t,
            u8::from(self.in_c),
            u8::from(self.in_d),
            opt(self.q),
            u8::from(self.q_valid),
            opt(self.gap),
        )
    }
}

/// Counts plus the Monte Carlo volume fraction `vol(D)/vol(C)`.
#[derive(Clone, Debug, Serialize)]
pub struct ScanSummary {
    pub total: usize,
    pub inside_d: usize,
    pub in_c_not_d: usize,
    pub outside_c: usize,
    pub volume_samples: u64,
    pub seed: u64,
    pub volume_fraction_d_in_c: f64,
}

pub(crate) fn grid_1d(n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => (0..n)
            .map(|i| -1.0 + 2.0 * i as f64 / (n - 1) as f64)
            .collect(),
    }
}

// RNG channels for the volume estimate.
const VOL_X: u64 = 16;
const VOL_Y: u64 = 17;
const VOL_Z: u64 = 18;

/// Label every grid point and estimate vol(D)/vol(C) by seeded sampling of
/// the bounding cube. Output ordering is by grid index, so identical
/// configurations give identical output.
pub fn scan_region(cfg: &ScanConfig) -> (Vec<ScanRow>, ScanSummary) {
    let xs = grid_1d(cfg.nx);
    let ys = grid_1d(cfg.ny);
    let zs = grid_1d(cfg.nz);
    let mut rows = Vec::with_capacity(xs.len() * ys.len() * zs.len());
    let (mut inside_d, mut in_c_not_d, mut outside_c) = (0usize, 0usize, 0usize);
    for &x in &xs {
        for &y in &ys {
            let (q, q_valid) = match pw_q(x, y) {
                Ok(q) => (Some(q), true),
                Err(Error::InvalidFlipProbability { q }) => (Some(q), false),
                Err(_) => (None, false),
            };
            let gap = (cfg.with_gap && x * x + y * y <= 1.0 + REGION_TOL)
                .then(|| minimax_gap(x, y).map(|r| r.gap))
                .transpose()
                .ok()
                .flatten();
            for &z in &zs {
                let point = RegionPoint::new(x, y, z);
                match classify(point) {
                    RegionLabel::InsideD => inside_d += 1,
                    RegionLabel::InCNotD => in_c_not_d += 1,
                    RegionLabel::OutsideC => outside_c += 1,
                }
                rows.push(ScanRow {
                    point,
                    t: point.target(),
                    in_c: in_c(point),
                    in_d: in_d(point),
                    q,
                    q_valid,
                    gap,
                });
            }
        }
    }

    let rng = CounterRng::new(cfg.seed);
    let (mut c_hits, mut d_hits) = (0u64, 0u64);
    for i in 0..cfg.volume_samples {
        let p = RegionPoint::new(
            2.0 * rng.uniform(i, VOL_X) - 1.0,
            2.0 * rng.uniform(i, VOL_Y) - 1.0,
            2.0 * rng.uniform(i, VOL_Z) - 1.0,
        );
        if in_c(p) {
            c_hits += 1;
            if in_d(p) {
                d_hits += 1;
            }
        }
    }
    let volume_fraction_d_in_c = if c_hits > 0 {
        d_hits as f64 / c_hits as f64
    } else {
        0.0
    };

    let summary = ScanSummary {
        total: rows.len(),
        inside_d,
        in_c_not_d,
        outside_c,
        volume_samples: cfg.volume_samples,
        seed: cfg.seed,
        volume_fraction_d_in_c,
    };
    (rows, summary)
}
