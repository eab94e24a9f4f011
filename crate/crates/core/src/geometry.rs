//! Half-plane geometry for down-closed rate regions in the nonnegative
//! quadrant: polygon construction, support functions, containment, and
//! union envelopes over parameter sweeps.
//!
//! Every region here is an intersection of half-planes `a·Rs + b·Rp ≤ c`
//! with `(a, b) ≥ 0` clipped to `Rs, Rp ≥ 0`, hence convex, bounded (when a
//! cap on each axis exists) and down-closed. A union of such regions is not
//! convex in general; it is represented by its upper boundary `Rp(Rs)`
//! sampled on a grid ([`Envelope`]) rather than by polygon booleans.

use crate::error::{Error, Result};
use crate::regions::RateRegion;

/// Absolute tolerance for vertex deduplication, feasibility and containment
/// slack.
pub const GEOM_EPS: f64 = 1e-9;

/// A point in the `(Rs, Rp)` rate plane, bits per channel use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatePoint {
    pub rs: f64,
    pub rp: f64,
}

impl RatePoint {
    pub fn new(rs: f64, rp: f64) -> Self {
        Self { rs, rp }
    }
}

/// Half-plane constraint `a·Rs + b·Rp ≤ c` with `(a, b) ≥ (0, 0)`,
/// `(a, b) ≠ (0, 0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constraint {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Constraint {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        Self { a, b, c }
    }

    /// Whether `point` satisfies the constraint with `slack` of headroom.
    pub fn holds_at(&self, point: RatePoint, slack: f64) -> bool {
        self.a * point.rs + self.b * point.rp <= self.c + slack
    }

    fn validate(&self) -> Result<()> {
        let ok = self.a.is_finite()
            && self.b.is_finite()
            && self.c.is_finite()
            && self.a >= 0.0
            && self.b >= 0.0
            && (self.a > 0.0 || self.b > 0.0);
        if ok {
            Ok(())
        } else {
            Err(Error::MalformedConstraint { a: self.a, b: self.b, c: self.c })
        }
    }
}

/// Intersection of `constraints` with the nonnegative quadrant, as a
/// counterclockwise vertex list starting at the lexicographically smallest
/// vertex. Collinear and duplicate vertices (within [`GEOM_EPS`]) are
/// removed. The result is empty only when some `c < 0`.
pub fn polygon_from_constraints(constraints: &[Constraint]) -> Result<Vec<RatePoint>> {
    for c in constraints {
        c.validate()?;
    }
    if constraints.iter().any(|c| c.c < 0.0) {
        return Ok(Vec::new());
    }

    // Lines a·x + b·y = c: the constraints plus the two axes.
    let mut lines: Vec<(f64, f64, f64)> =
        constraints.iter().map(|c| (c.a, c.b, c.c)).collect();
    lines.push((1.0, 0.0, 0.0));
    lines.push((0.0, 1.0, 0.0));

    let mut candidates: Vec<RatePoint> = Vec::new();
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            let (a1, b1, c1) = lines[i];
            let (a2, b2, c2) = lines[j];
            let det = a1 * b2 - a2 * b1;
            if det.abs() <= 1e-12 * (a1.abs() + b1.abs()) * (a2.abs() + b2.abs()) {
                continue;
            }
            let x = (c1 * b2 - c2 * b1) / det;
            let y = (a1 * c2 - a2 * c1) / det;
            if x < -GEOM_EPS || y < -GEOM_EPS {
                continue;
            }
            let p = RatePoint::new(x.max(0.0), y.max(0.0));
            if constraints.iter().all(|c| c.holds_at(p, GEOM_EPS)) {
                candidates.push(p);
            }
        }
    }

    dedup_points(&mut candidates);
    Ok(convex_hull_ccw(candidates))
}

fn dedup_points(points: &mut Vec<RatePoint>) {
    let mut kept: Vec<RatePoint> = Vec::with_capacity(points.len());
    for &p in points.iter() {
        if !kept
            .iter()
            .any(|q| (p.rs - q.rs).abs() < GEOM_EPS && (p.rp - q.rp).abs() < GEOM_EPS)
        {
            kept.push(p);
        }
    }
    *points = kept;
}

fn cross(o: RatePoint, a: RatePoint, b: RatePoint) -> f64 {
    (a.rs - o.rs) * (b.rp - o.rp) - (a.rp - o.rp) * (b.rs - o.rs)
}

/// Monotone-chain hull, counterclockwise from the lexicographic minimum.
/// Collinear points are dropped.
fn convex_hull_ccw(mut points: Vec<RatePoint>) -> Vec<RatePoint> {
    points.sort_by(|p, q| {
        p.rs.partial_cmp(&q.rs).unwrap().then(p.rp.partial_cmp(&q.rp).unwrap())
    });
    if points.len() <= 2 {
        return points;
    }
    let scale = points
        .iter()
        .map(|p| p.rs.abs().max(p.rp.abs()))
        .fold(1.0_f64, f64::max);
    let eps_area = 1e-12 * scale * scale;

    let mut hull: Vec<RatePoint> = Vec::with_capacity(points.len() + 1);
    // Lower chain, then upper chain.
    for &p in &points {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= eps_area {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in points.iter().rev().skip(1) {
        while hull.len() >= lower_len
            && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= eps_area
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop(); // closing point repeats the start
    hull
}

/// Support function: the maximum of `a·Rs + b·Rp` over the vertex list, for
/// a direction `(a, b) ≥ 0`.
pub fn support(vertices: &[RatePoint], direction: (f64, f64)) -> Result<f64> {
    let (a, b) = direction;
    if !a.is_finite() || !b.is_finite() || a < 0.0 || b < 0.0 || (a == 0.0 && b == 0.0) {
        return Err(Error::InvalidInput {
            name: "direction",
            reason: format!("expected finite (a, b) >= 0, not both zero, got ({a}, {b})"),
        });
    }
    vertices
        .iter()
        .map(|p| a * p.rs + b * p.rp)
        .fold(None, |acc: Option<f64>, v| Some(acc.map_or(v, |m| m.max(v))))
        .ok_or(Error::EmptyRegion)
}

/// True when every vertex of `inner` satisfies every constraint of `outer`
/// with [`GEOM_EPS`] slack.
pub fn contains_region(inner: &RateRegion, outer: &RateRegion) -> bool {
    inner
        .vertices
        .iter()
        .all(|&p| outer.constraints.iter().all(|c| c.holds_at(p, GEOM_EPS)))
}

/// Largest `Rp` with `(rs, Rp)` in the region described by `constraints`,
/// or `None` when `rs` is infeasible. Requires some constraint with
/// `b > 0`; an unbounded column also yields `None`.
pub fn max_rp_at(constraints: &[Constraint], rs: f64) -> Option<f64> {
    let mut best = f64::INFINITY;
    for c in constraints {
        if c.b == 0.0 {
            if c.a * rs > c.c + GEOM_EPS {
                return None;
            }
        } else {
            best = best.min((c.c - c.a * rs) / c.b);
        }
    }
    if !best.is_finite() || best < -GEOM_EPS {
        None
    } else {
        Some(best.max(0.0))
    }
}

/// Piecewise-sampled upper boundary `Rp(Rs)` of a union of down-closed
/// regions: a strictly increasing `Rs` grid with the nonincreasing maximum
/// `Rp` per grid point (zero where every region is infeasible).
#[derive(Debug, Clone, PartialEq)]
pub struct Envelope {
    rs_grid: Vec<f64>,
    rp_max: Vec<f64>,
}

impl Envelope {
    pub fn new(rs_grid: Vec<f64>, rp_max: Vec<f64>) -> Result<Self> {
        if rs_grid.len() != rp_max.len() || rs_grid.is_empty() {
            return Err(Error::InvalidInput {
                name: "envelope",
                reason: format!(
                    "grid and value lengths must match and be nonempty, got {} and {}",
                    rs_grid.len(),
                    rp_max.len()
                ),
            });
        }
        let grid_ok = rs_grid.iter().all(|v| v.is_finite() && *v >= 0.0)
            && rs_grid.windows(2).all(|w| w[0] < w[1]);
        if !grid_ok {
            return Err(Error::InvalidInput {
                name: "envelope rs_grid",
                reason: "grid must be finite, nonnegative and strictly increasing".into(),
            });
        }
        let rp_ok = rp_max.iter().all(|v| v.is_finite() && *v >= 0.0)
            && rp_max.windows(2).all(|w| w[1] <= w[0] + 1e-12);
        if !rp_ok {
            return Err(Error::InvalidInput {
                name: "envelope rp_max",
                reason: "values must be finite, nonnegative and nonincreasing".into(),
            });
        }
        Ok(Self { rs_grid, rp_max })
    }

    pub fn rs_grid(&self) -> &[f64] {
        &self.rs_grid
    }

    pub fn rp_max(&self) -> &[f64] {
        &self.rp_max
    }

    pub fn len(&self) -> usize {
        self.rs_grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rs_grid.is_empty()
    }

    /// Upper concave majorant of the envelope on the same grid: the
    /// time-sharing closure of the union's boundary.
    pub fn upper_concave_hull(&self) -> Envelope {
        let n = self.len();
        if n <= 2 {
            return self.clone();
        }
        // Upper hull of the sample points, left to right.
        let mut hull: Vec<(f64, f64)> = Vec::with_capacity(n);
        for k in 0..n {
            let p = (self.rs_grid[k], self.rp_max[k]);
            while hull.len() >= 2 {
                let o = hull[hull.len() - 2];
                let a = hull[hull.len() - 1];
                let turn = (a.0 - o.0) * (p.1 - o.1) - (a.1 - o.1) * (p.0 - o.0);
                if turn >= 0.0 {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(p);
        }
        // Interpolate the hull back onto the grid.
        let mut rp = Vec::with_capacity(n);
        let mut seg = 0;
        for k in 0..n {
            let x = self.rs_grid[k];
            while seg + 1 < hull.len() && hull[seg + 1].0 < x {
                seg += 1;
            }
            let v = if seg + 1 < hull.len() && hull[seg + 1].0 > hull[seg].0 {
                let (x0, y0) = hull[seg];
                let (x1, y1) = hull[seg + 1];
                y0 + (y1 - y0) * ((x - x0) / (x1 - x0))
            } else {
                hull[seg].1
            };
            // Interpolation rounding must not dip below the sampled value.
            rp.push(v.max(self.rp_max[k]));
        }
        Envelope::new(self.rs_grid.clone(), rp).expect("hull preserves envelope invariants")
    }
}

/// Pointwise-maximum envelope of `regions` sampled at `rs_grid`.
pub fn union_envelope(regions: &[RateRegion], rs_grid: &[f64]) -> Result<Envelope> {
    if regions.is_empty() {
        return Err(Error::InvalidInput {
            name: "regions",
            reason: "union of zero regions".into(),
        });
    }
    let rp_max: Vec<f64> = rs_grid
        .iter()
        .map(|&rs| {
            regions
                .iter()
                .filter_map(|r| max_rp_at(&r.constraints, rs))
                .fold(0.0_f64, f64::max)
        })
        .collect();
    Envelope::new(rs_grid.to_vec(), rp_max)
}

/// Uniform grid of `points ≥ 2` samples over `[0, end]`.
pub fn uniform_grid(end: f64, points: usize) -> Result<Vec<f64>> {
    if points < 2 || !end.is_finite() || end <= 0.0 {
        return Err(Error::InvalidInput {
            name: "grid",
            reason: format!("need >= 2 points over a positive span, got {points} over {end}"),
        });
    }
    let step = end / (points - 1) as f64;
    Ok((0..points)
        .map(|k| if k == points - 1 { end } else { k as f64 * step })
        .collect())
}
