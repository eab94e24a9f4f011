//! Independent projection oracle for the 4-dimensional rate polytopes.
//!
//! The closed-form regions in `regions` are projections of polytopes over
//! `(r1, r2, s, t)`. This module re-derives any support value straight from
//! the inequality systems by exhaustive vertex enumeration: pick 4
//! hyperplanes among the constraint rows and the nonnegativity planes,
//! solve the 4×4 system, keep feasible solutions, and maximize over them.
//! With at most 14 rows plus 4 axes that is a few thousand small solves —
//! slow next to the closed forms and entirely independent of them, which
//! is the point.
//!
//! Enumerated combinations are canonicalized by row content, so results do
//! not depend on the order constraints are supplied in.

use crate::error::{Error, Result};
use crate::gaussian::MiBundle;
use crate::geometry::RatePoint;
use crate::regions::DeltaTuple;

/// Feasibility slack for vertex filtering.
const FEAS_EPS: f64 = 1e-9;

/// Which inequality system over `(r1, r2, s, t)` to project.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaSystem {
    /// The ten no-decode inequalities.
    NoDecode,
    /// The fourteen decode inequalities for the bundle's indexed user.
    Decode,
}

/// Constraint rows `coeff · (r1, r2, s, t) ≤ rhs` of the chosen system.
pub fn delta_rows(mi: &MiBundle, system: DeltaSystem) -> Vec<([f64; 4], f64)> {
    let shared = [
        ([1.0, 0.0, 0.0, 0.0], mi.yp_xi_given_wxj),
        ([0.0, 1.0, 0.0, 0.0], mi.yp_xj_given_wxi),
        ([0.0, 0.0, 0.0, 1.0], mi.yp_w_given_x1x2),
        ([1.0, 1.0, 0.0, 0.0], mi.yp_x1x2_given_w),
        ([1.0, 0.0, 0.0, 1.0], mi.yp_wxi_given_xj),
        ([0.0, 1.0, 0.0, 1.0], mi.yp_wxj_given_xi),
        ([1.0, 1.0, 0.0, 1.0], mi.yp_wx1x2),
    ];
    let mut rows: Vec<([f64; 4], f64)> = shared.to_vec();
    match system {
        DeltaSystem::NoDecode => {
            rows.push(([0.0, 0.0, 1.0, 0.0], mi.ys_u_given_w));
            rows.push(([0.0, 0.0, 0.0, 1.0], mi.ys_w_given_u));
            rows.push(([0.0, 0.0, 1.0, 1.0], mi.ys_uw));
        }
        DeltaSystem::Decode => {
            rows.push(([0.0, 0.0, 1.0, 0.0], mi.ys_u_given_wxi));
            rows.push(([0.0, 0.0, 0.0, 1.0], mi.ys_w_given_uxi));
            rows.push(([1.0, 0.0, 0.0, 0.0], mi.ys_xi_given_uw));
            rows.push(([0.0, 0.0, 1.0, 1.0], mi.ys_uw_given_xi));
            rows.push(([1.0, 0.0, 1.0, 0.0], mi.ys_uxi_given_w));
            rows.push(([1.0, 0.0, 0.0, 1.0], mi.ys_wxi_given_u));
            rows.push(([1.0, 0.0, 1.0, 1.0], mi.ys_uwxi));
        }
    }
    rows
}

/// Gaussian elimination with partial pivoting on a 4×4 system; `None` when
/// the chosen planes are (near-)dependent.
fn solve4(planes: &[([f64; 4], f64); 4]) -> Option<[f64; 4]> {
    let mut m = [[0.0_f64; 5]; 4];
    for (r, (coeff, rhs)) in planes.iter().enumerate() {
        m[r][..4].copy_from_slice(coeff);
        m[r][4] = *rhs;
    }
    for col in 0..4 {
        let pivot_row = (col..4)
            .max_by(|&a, &b| m[a][col].abs().partial_cmp(&m[b][col].abs()).unwrap())?;
        if m[pivot_row][col].abs() < 1e-10 {
            return None;
        }
        m.swap(col, pivot_row);
        for r in (col + 1)..4 {
            let f = m[r][col] / m[col][col];
            for k in col..5 {
                m[r][k] -= f * m[col][k];
            }
        }
    }
    let mut x = [0.0_f64; 4];
    for r in (0..4).rev() {
        let mut v = m[r][4];
        for k in (r + 1)..4 {
            v -= m[r][k] * x[k];
        }
        x[r] = v / m[r][r];
    }
    x.iter().all(|v| v.is_finite()).then_some(x)
}

fn sorted_hyperplanes(rows: &[([f64; 4], f64)]) -> Vec<([f64; 4], f64)> {
    let mut planes: Vec<([f64; 4], f64)> = rows.to_vec();
    for axis in 0..4 {
        let mut coeff = [0.0; 4];
        coeff[axis] = 1.0;
        planes.push((coeff, 0.0));
    }
    planes.sort_by(|x, y| {
        x.0.iter()
            .zip(y.0.iter())
            .map(|(a, b)| a.partial_cmp(b).unwrap())
            .fold(std::cmp::Ordering::Equal, |acc, ord| acc.then(ord))
            .then(x.1.partial_cmp(&y.1).unwrap())
    });
    planes
}

fn feasible(rows: &[([f64; 4], f64)], x: &[f64; 4], slack: f64) -> bool {
    x.iter().all(|&v| v >= -slack)
        && rows.iter().all(|(coeff, rhs)| {
            coeff.iter().zip(x.iter()).map(|(c, v)| c * v).sum::<f64>() <= rhs + slack
        })
}

/// All vertices of `{ x ≥ 0 : rows · x ≤ rhs }`.
pub fn enumerate_vertices(rows: &[([f64; 4], f64)]) -> Vec<[f64; 4]> {
    let planes = sorted_hyperplanes(rows);
    let n = planes.len();
    let mut vertices = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                for l in (k + 1)..n {
                    let combo = [planes[i], planes[j], planes[k], planes[l]];
                    if let Some(x) = solve4(&combo) {
                        if feasible(rows, &x, FEAS_EPS) {
                            vertices.push(x);
                        }
                    }
                }
            }
        }
    }
    vertices
}

/// Exact support values of the projection of the chosen polytope onto
/// `(Rs, Rp) = (s + t, r1 + r2)`, one per direction `(a, b) ≥ 0`.
pub fn project_delta(
    mi: &MiBundle,
    system: DeltaSystem,
    directions: &[(f64, f64)],
) -> Result<Vec<f64>> {
    if directions.is_empty() {
        return Err(Error::InvalidInput {
            name: "directions",
            reason: "need at least one projection direction".into(),
        });
    }
    for &(a, b) in directions {
        if !a.is_finite() || !b.is_finite() || a < 0.0 || b < 0.0 || (a == 0.0 && b == 0.0) {
            return Err(Error::InvalidInput {
                name: "direction",
                reason: format!("expected finite (a, b) >= 0, not both zero, got ({a}, {b})"),
            });
        }
    }
    let rows = delta_rows(mi, system);
    let vertices = enumerate_vertices(&rows);
    if vertices.is_empty() {
        return Err(Error::DegeneratePolytope(
            "no feasible vertex; some bound must be missing or non-finite".into(),
        ));
    }
    Ok(directions
        .iter()
        .map(|&(a, b)| {
            vertices
                .iter()
                .map(|v| b * (v[0] + v[1]) + a * (v[2] + v[3]))
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .collect())
}

/// A rate tuple in the chosen polytope whose `(Rs, Rp)` equals `target`,
/// if one exists: the slice of the polytope by the two rate sums is
/// searched through its own vertex set.
pub fn find_witness(
    mi: &MiBundle,
    system: DeltaSystem,
    target: RatePoint,
) -> Option<DeltaTuple> {
    let rows = delta_rows(mi, system);
    let planes = sorted_hyperplanes(&rows);
    let eq_rs = ([0.0, 0.0, 1.0, 1.0], target.rs);
    let eq_rp = ([1.0, 1.0, 0.0, 0.0], target.rp);
    let n = planes.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let combo = [eq_rs, eq_rp, planes[i], planes[j]];
            let Some(x) = solve4(&combo) else { continue };
            if !feasible(&rows, &x, FEAS_EPS) {
                continue;
            }
            if (x[2] + x[3] - target.rs).abs() > FEAS_EPS
                || (x[0] + x[1] - target.rp).abs() > FEAS_EPS
            {
                continue;
            }
            return Some(DeltaTuple::new(
                x[0].max(0.0),
                x[1].max(0.0),
                x[2].max(0.0),
                x[3].max(0.0),
            ));
        }
    }
    None
}
