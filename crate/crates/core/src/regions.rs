//! Closed-form achievable rate regions and their corner points, plus the
//! 4-rate membership predicates they project from.
//!
//! Two coding schemes are covered. In the *no-decode* scheme the secondary
//! receiver treats both primary signals as noise; the achievable `(Rs, Rp)`
//! set is a triangle-clipped rectangle with bounds `ρs°, ρp°, ρsp°`
//! ([`region_no_decode`]). In the *decode* scheme the secondary receiver
//! also decodes the signal of primary user `i` (the [`MiBundle`]'s indexed
//! user); the region gains slope-2 cuts `2Rs + Rp ≤ ρ2pʳ` and
//! `Rs + 2Rp ≤ ρs2ʳ` ([`region_decode`]).
//!
//! Both regions are projections of 4-dimensional polytopes over rate tuples
//! `(R1, R2, S, T)` — `R1, R2` the primary rates (`R1` is the indexed
//! user's), `S` the secondary private rate and `T` the public rate — onto
//! `(Rs, Rp) = (S + T, R1 + R2)`. The predicates [`delta_o_contains`] /
//! [`delta_r_contains`] decide membership in those polytopes directly; the
//! `oracle` module re-projects them by linear programming as an independent
//! check of every closed form here.
//!
//! Constraints are stored exactly as the formulas give them, including ones
//! that happen to be slack; redundancy removal is the geometry layer's job.

use crate::error::Result;
use crate::gaussian::MiBundle;
use crate::geometry::{self, Constraint, RatePoint};

/// Slack for the non-strict `≤` comparisons of the membership predicates.
pub const PREDICATE_SLACK: f64 = 1e-12;

/// A 4-rate tuple `(r1, r2, s, t)`: primary rates of the indexed user `i`
/// and the other user `j`, secondary private rate, secondary public rate.
/// All in bits per channel use, nonnegative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaTuple {
    pub r1: f64,
    pub r2: f64,
    pub s: f64,
    pub t: f64,
}

impl DeltaTuple {
    pub fn new(r1: f64, r2: f64, s: f64, t: f64) -> Self {
        Self { r1, r2, s, t }
    }

    pub const ZERO: DeltaTuple = DeltaTuple { r1: 0.0, r2: 0.0, s: 0.0, t: 0.0 };

    /// `(Rs, Rp) = (s + t, r1 + r2)`.
    pub fn rate_pair(&self) -> RatePoint {
        RatePoint::new(self.s + self.t, self.r1 + self.r2)
    }
}

/// A rate region: the defining half-planes and the vertex polygon of their
/// intersection with the nonnegative quadrant (counterclockwise,
/// deduplicated at the geometric tolerance).
#[derive(Debug, Clone, PartialEq)]
pub struct RateRegion {
    pub constraints: Vec<Constraint>,
    pub vertices: Vec<RatePoint>,
}

impl RateRegion {
    pub fn from_constraints(constraints: Vec<Constraint>) -> Result<Self> {
        let vertices = geometry::polygon_from_constraints(&constraints)?;
        Ok(Self { constraints, vertices })
    }

    /// Support function over the vertex polygon.
    pub fn support(&self, direction: (f64, f64)) -> Result<f64> {
        geometry::support(&self.vertices, direction)
    }

    /// Largest feasible `Rp` at the given `Rs`, `None` outside the region.
    pub fn max_rp_at(&self, rs: f64) -> Option<f64> {
        geometry::max_rp_at(&self.constraints, rs)
    }

    /// Whether `self` is contained in `outer` (vertex-in-constraint test
    /// with the geometric slack).
    pub fn contained_in(&self, outer: &RateRegion) -> bool {
        geometry::contains_region(self, outer)
    }
}

#[inline]
fn pos(x: f64) -> f64 {
    x.max(0.0)
}

#[inline]
fn le(x: f64, bound: f64) -> bool {
    x <= bound + PREDICATE_SLACK
}

/// Membership in the no-decode rate polytope: the ten inequalities over
/// `(r1, r2, s, t)`, all with [`PREDICATE_SLACK`].
pub fn delta_o_contains(mi: &MiBundle, t: &DeltaTuple) -> bool {
    t.r1 >= 0.0
        && t.r2 >= 0.0
        && t.s >= 0.0
        && t.t >= 0.0
        && le(t.r1, mi.yp_xi_given_wxj)
        && le(t.r2, mi.yp_xj_given_wxi)
        && le(t.t, mi.yp_w_given_x1x2)
        && le(t.r1 + t.r2, mi.yp_x1x2_given_w)
        && le(t.t + t.r1, mi.yp_wxi_given_xj)
        && le(t.t + t.r2, mi.yp_wxj_given_xi)
        && le(t.t + t.r1 + t.r2, mi.yp_wx1x2)
        && le(t.s, mi.ys_u_given_w)
        && le(t.t, mi.ys_w_given_u)
        && le(t.s + t.t, mi.ys_uw)
}

/// Membership in the decode rate polytope for the indexed user: the
/// fourteen inequalities over `(r1, r2, s, t)`.
pub fn delta_r_contains(mi: &MiBundle, t: &DeltaTuple) -> bool {
    t.r1 >= 0.0
        && t.r2 >= 0.0
        && t.s >= 0.0
        && t.t >= 0.0
        && le(t.r1, mi.yp_xi_given_wxj)
        && le(t.r2, mi.yp_xj_given_wxi)
        && le(t.t, mi.yp_w_given_x1x2)
        && le(t.r1 + t.r2, mi.yp_x1x2_given_w)
        && le(t.r1 + t.t, mi.yp_wxi_given_xj)
        && le(t.r2 + t.t, mi.yp_wxj_given_xi)
        && le(t.r1 + t.r2 + t.t, mi.yp_wx1x2)
        && le(t.s, mi.ys_u_given_wxi)
        && le(t.t, mi.ys_w_given_uxi)
        && le(t.r1, mi.ys_xi_given_uw)
        && le(t.s + t.t, mi.ys_uw_given_xi)
        && le(t.r1 + t.s, mi.ys_uxi_given_w)
        && le(t.r1 + t.t, mi.ys_wxi_given_u)
        && le(t.r1 + t.s + t.t, mi.ys_uwxi)
}

/// `σ* = min{ I(Yp; W | X1 X2 Q), I(Ys; W | Q) }` — the public rate
/// achievable at zero primary rate in the no-decode scheme.
pub fn sigma_star(mi: &MiBundle) -> f64 {
    mi.yp_w_given_x1x2.min(mi.ys_w)
}

/// `σs* = min{ I(Ys; W | Xi Q), I(Yp; W | X1 X2 Q) }`.
pub fn sigma_s_star(mi: &MiBundle) -> f64 {
    mi.ys_w_given_xi.min(mi.yp_w_given_x1x2)
}

/// `σp* = min{ I(Yp; Xi | W Q), I(Ys; Xi | U W Q) }` — the indexed user's
/// rate decodable at both receivers.
pub fn sigma_p_star(mi: &MiBundle) -> f64 {
    mi.yp_xi_given_w.min(mi.ys_xi_given_uw)
}

/// The three no-decode bounds `(ρs°, ρp°, ρsp°)`.
pub fn no_decode_bounds(mi: &MiBundle) -> (f64, f64, f64) {
    let rho_p = mi.yp_x1x2_given_w;
    let rho_s = mi.ys_u_given_w + sigma_star(mi);
    let rho_sp = rho_p + mi.ys_u_given_w + mi.ys_w.min(mi.yp_w);
    (rho_s, rho_p, rho_sp)
}

/// No-decode region: `Rp ≤ ρp°`, `Rs ≤ ρs°`, `Rs + Rp ≤ ρsp°`.
pub fn region_no_decode(mi: &MiBundle) -> RateRegion {
    let (rho_s, rho_p, rho_sp) = no_decode_bounds(mi);
    RateRegion::from_constraints(vec![
        Constraint::new(0.0, 1.0, rho_p),
        Constraint::new(1.0, 0.0, rho_s),
        Constraint::new(1.0, 1.0, rho_sp),
    ])
    .expect("no-decode bounds are finite and nonnegative")
}

/// Corner points of [`region_no_decode`], counterclockwise from the `Rp`
/// axis: `A` and `B` at full primary rate, `C` and `D` at full secondary
/// rate. `B` and `C` lie on the line `Rs + Rp = ρsp°`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoDecodeCorners {
    pub a: RatePoint,
    pub b: RatePoint,
    pub c: RatePoint,
    pub d: RatePoint,
}

impl NoDecodeCorners {
    pub fn labeled(&self) -> [(&'static str, RatePoint); 4] {
        [("A", self.a), ("B", self.b), ("C", self.c), ("D", self.d)]
    }
}

pub fn corners_no_decode(mi: &MiBundle) -> NoDecodeCorners {
    let (rho_s, rho_p, _) = no_decode_bounds(mi);
    NoDecodeCorners {
        a: RatePoint::new(0.0, rho_p),
        b: RatePoint::new(mi.ys_u_given_w + mi.yp_w.min(mi.ys_w), rho_p),
        c: RatePoint::new(rho_s, mi.yp_x1x2_given_w - pos(sigma_star(mi) - mi.yp_w)),
        d: RatePoint::new(rho_s, 0.0),
    }
}

/// The five decode bounds `(ρsʳ, ρpʳ, ρspʳ, ρ2pʳ, ρs2ʳ)` for the bundle's
/// indexed user.
pub fn decode_bounds(mi: &MiBundle) -> (f64, f64, f64, f64, f64) {
    let ss = sigma_s_star(mi);
    let sp = sigma_p_star(mi);
    let yp_w_given_xi = mi.yp_w_given_xi();

    let rho_s = mi.ys_u_given_wxi + ss;
    let rho_p = mi.yp_xj_given_wxi + sp;
    let rho_sp = mi.ys_u_given_wxi
        + mi.yp_xj_given_wxi
        + mi.yp_wxi
            .min(mi.ys_wxi)
            .min(yp_w_given_xi + mi.ys_xi_given_w)
            .min(mi.yp_xi_given_w + mi.ys_w_given_xi);
    let rho_2p = 2.0 * mi.ys_u_given_wxi + 2.0 * ss + mi.yp_xj_given_wxi
        - pos(ss - yp_w_given_xi)
        + mi.ys_xi_given_w
            .min(mi.ys_wxi - ss)
            .min(mi.yp_xi + pos(yp_w_given_xi - ss))
            .min(mi.yp_xi_given_w);
    let rho_s2 = 2.0 * mi.yp_xj_given_wxi + 2.0 * sp + mi.ys_u_given_wxi
        - pos(sp - mi.ys_xi_given_w)
        + yp_w_given_xi
            .min(mi.yp_wxi - sp)
            .min(mi.ys_w + pos(mi.ys_xi_given_w - sp))
            .min(mi.ys_w_given_xi);
    (rho_s, rho_p, rho_sp, rho_2p, rho_s2)
}

/// Decode region for the indexed user: `Rs ≤ ρsʳ`, `Rp ≤ ρpʳ`,
/// `Rs + Rp ≤ ρspʳ`, `2Rs + Rp ≤ ρ2pʳ`, `Rs + 2Rp ≤ ρs2ʳ`.
pub fn region_decode(mi: &MiBundle) -> RateRegion {
    let (rho_s, rho_p, rho_sp, rho_2p, rho_s2) = decode_bounds(mi);
    RateRegion::from_constraints(vec![
        Constraint::new(1.0, 0.0, rho_s),
        Constraint::new(0.0, 1.0, rho_p),
        Constraint::new(1.0, 1.0, rho_sp),
        Constraint::new(2.0, 1.0, rho_2p),
        Constraint::new(1.0, 2.0, rho_s2),
    ])
    .expect("decode bounds are finite and nonnegative")
}

/// Corner points of [`region_decode`], counterclockwise from the `Rp`
/// axis. `C` and `D` sit on `Rs + Rp = ρspʳ`; `B` on `Rp = ρpʳ`; `E` on
/// `Rs = ρsʳ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecodeCorners {
    pub a: RatePoint,
    pub b: RatePoint,
    pub c: RatePoint,
    pub d: RatePoint,
    pub e: RatePoint,
    pub f: RatePoint,
}

impl DecodeCorners {
    pub fn labeled(&self) -> [(&'static str, RatePoint); 6] {
        [
            ("A", self.a),
            ("B", self.b),
            ("C", self.c),
            ("D", self.d),
            ("E", self.e),
            ("F", self.f),
        ]
    }
}

pub fn corners_decode(mi: &MiBundle) -> DecodeCorners {
    let ss = sigma_s_star(mi);
    let sp = sigma_p_star(mi);
    let yp_w_given_xi = mi.yp_w_given_xi();
    let (rho_s, rho_p, rho_sp, rho_2p, rho_s2) = decode_bounds(mi);

    // B's secondary rate and E's primary rate, written out as stated; they
    // equal ρs2ʳ − 2ρpʳ and ρ2pʳ − 2ρsʳ respectively.
    let rs_b = mi.ys_u_given_wxi - pos(sp - mi.ys_xi_given_w)
        + yp_w_given_xi
            .min(mi.yp_wxi - sp)
            .min(mi.ys_w + pos(mi.ys_xi_given_w - sp))
            .min(mi.ys_w_given_xi);
    let rp_e = mi.yp_xj_given_wxi - pos(ss - yp_w_given_xi)
        + mi.ys_xi_given_w
            .min(mi.ys_wxi - ss)
            .min(mi.yp_xi + pos(yp_w_given_xi - ss))
            .min(mi.yp_xi_given_w);

    DecodeCorners {
        a: RatePoint::new(0.0, rho_p),
        b: RatePoint::new(rs_b, rho_p),
        // C joins the slope −1 and slope −1/2 cuts, D the slope −1 and
        // slope −2 cuts.
        c: RatePoint::new(2.0 * rho_sp - rho_s2, rho_s2 - rho_sp),
        d: RatePoint::new(rho_2p - rho_sp, 2.0 * rho_sp - rho_2p),
        e: RatePoint::new(rho_s, rp_e),
        f: RatePoint::new(rho_s, 0.0),
    }
}

/// The no-decode region with the primary-side limit on the public part
/// dropped. Its `Rs` cap replaces `σ*` by
/// `min{ I(Ys; W|Q), I(Yp; W Xi|Xj Q), I(Yp; W Xj|Xi Q) }`, which is never
/// smaller, so the region always contains [`region_no_decode`].
pub fn region_no_decode_relaxed(mi: &MiBundle) -> RateRegion {
    let (_, rho_p, rho_sp) = no_decode_bounds(mi);
    let rs_cap = mi.ys_u_given_w
        + mi.ys_w.min(mi.yp_wxi_given_xj).min(mi.yp_wxj_given_xi);
    RateRegion::from_constraints(vec![
        Constraint::new(0.0, 1.0, rho_p),
        Constraint::new(1.0, 0.0, rs_cap),
        Constraint::new(1.0, 1.0, rho_sp),
    ])
    .expect("relaxed bounds are finite and nonnegative")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::{
        mi_bundle_gaussian, ChannelGains, PowerConfig, PrimaryUser, Split,
    };

    fn bundle(lambda: f64) -> MiBundle {
        let g = ChannelGains::new(2.5664, 3.7653, 2.3620, 0.1812, 0.1784, 8.6065).unwrap();
        let p = PowerConfig::new(10.0, 10.0, 10.0, 1.0).unwrap();
        mi_bundle_gaussian(&g, &p, Split::new(lambda).unwrap(), PrimaryUser::User1)
    }

    #[test]
    fn zero_tuple_is_always_achievable() {
        let mi = bundle(0.4);
        assert!(delta_o_contains(&mi, &DeltaTuple::ZERO));
        assert!(delta_r_contains(&mi, &DeltaTuple::ZERO));
    }

    #[test]
    fn public_rate_cap_binds() {
        let mi = bundle(0.4);
        let t = DeltaTuple::new(0.0, 0.0, 0.0, mi.yp_w_given_x1x2 + 1.0);
        assert!(!delta_o_contains(&mi, &t));
        assert!(!delta_r_contains(&mi, &t));
    }

    #[test]
    fn decoded_rate_cap_binds() {
        let mi = bundle(0.4);
        let t = DeltaTuple::new(mi.ys_xi_given_uw + 1.0, 0.0, 0.0, 0.0);
        assert!(!delta_r_contains(&mi, &t));
    }

    #[test]
    fn negative_rates_rejected() {
        let mi = bundle(0.4);
        assert!(!delta_o_contains(&mi, &DeltaTuple::new(-0.1, 0.0, 0.0, 0.0)));
        assert!(!delta_r_contains(&mi, &DeltaTuple::new(0.0, 0.0, -0.1, 0.0)));
    }

    #[test]
    fn corner_b_witness_accepted() {
        // Split the full-primary-rate corner across both users and load the
        // secondary with its private cap plus the public minimum.
        for lam in [0.0, 0.3, 0.7, 1.0] {
            let mi = bundle(lam);
            let witness = DeltaTuple::new(
                mi.yp_xi_given_wxj.min(mi.yp_x1x2_given_w),
                mi.yp_x1x2_given_w - mi.yp_xi_given_wxj.min(mi.yp_x1x2_given_w),
                mi.ys_u_given_w,
                mi.yp_w.min(mi.ys_w),
            );
            assert!(delta_o_contains(&mi, &witness), "lambda = {lam}");
            let b = corners_no_decode(&mi).b;
            let pair = witness.rate_pair();
            assert!((pair.rs - b.rs).abs() < 1e-12 && (pair.rp - b.rp).abs() < 1e-12);
        }
    }

    #[test]
    fn point_f_witness_accepted() {
        for lam in [0.0, 0.3, 0.7, 1.0] {
            let mi = bundle(lam);
            let witness =
                DeltaTuple::new(0.0, 0.0, mi.ys_u_given_wxi, sigma_s_star(&mi));
            assert!(delta_r_contains(&mi, &witness), "lambda = {lam}");
            let f = corners_decode(&mi).f;
            assert!((witness.rate_pair().rs - f.rs).abs() < 1e-12);
        }
    }

    #[test]
    fn sigma_star_selects_minimum() {
        let mi = bundle(0.5);
        assert_eq!(sigma_star(&mi), mi.yp_w_given_x1x2.min(mi.ys_w));
        // At λ = 1 the public part is empty, so both arguments vanish.
        assert_eq!(sigma_star(&bundle(1.0)), 0.0);
    }

    #[test]
    fn no_decode_region_at_full_private_power_is_a_rectangle() {
        let mi = bundle(1.0);
        let (rho_s, rho_p, rho_sp) = no_decode_bounds(&mi);
        assert_eq!(rho_s, mi.ys_u_given_w);
        assert!((rho_sp - (rho_s + rho_p)).abs() < 1e-12);
        let r = region_no_decode(&mi);
        assert_eq!(r.vertices.len(), 4);
        let corners = corners_no_decode(&mi);
        assert!((corners.b.rs - rho_s).abs() < 1e-12);
        assert!((corners.c.rp - rho_p).abs() < 1e-12);
    }

    #[test]
    fn no_decode_region_at_full_public_power() {
        let mi = bundle(0.0);
        let (rho_s, _, rho_sp) = no_decode_bounds(&mi);
        assert!((rho_s - mi.yp_w_given_x1x2.min(mi.ys_w)).abs() < 1e-15);
        assert!(
            (rho_sp - (mi.yp_x1x2_given_w + mi.ys_w.min(mi.yp_w))).abs() < 1e-15
        );
    }

    #[test]
    fn corner_a_matches_strong_interference_example() {
        let mi = bundle(0.0);
        let a = corners_no_decode(&mi).a;
        assert_eq!(a.rs, 0.0);
        assert!((a.rp - 3.003_564_104_977_128_2).abs() < 1e-12);
    }

    #[test]
    fn corners_b_c_lie_on_the_sum_line() {
        for lam in [0.0, 0.25, 0.5, 0.75, 1.0] {
            let mi = bundle(lam);
            let (_, _, rho_sp) = no_decode_bounds(&mi);
            let cs = corners_no_decode(&mi);
            assert!((cs.b.rs + cs.b.rp - rho_sp).abs() < 1e-9, "B at {lam}");
            assert!((cs.c.rs + cs.c.rp - rho_sp).abs() < 1e-9, "C at {lam}");
        }
    }

    #[test]
    fn no_slope_minus_two_bound_in_no_decode() {
        for lam in [0.0, 0.3, 0.8] {
            let mi = bundle(lam);
            let (_, _, rho_sp) = no_decode_bounds(&mi);
            let max_sum = region_no_decode(&mi).support((1.0, 1.0)).unwrap();
            assert!((max_sum - rho_sp).abs() < 1e-9);
        }
    }

    #[test]
    fn decode_region_line_memberships() {
        for lam in [0.0, 0.3, 0.6, 1.0] {
            let mi = bundle(lam);
            let (rho_s, rho_p, rho_sp, _, _) = decode_bounds(&mi);
            let cs = corners_decode(&mi);
            assert!((cs.b.rp - rho_p).abs() < 1e-12);
            assert!((cs.c.rs + cs.c.rp - rho_sp).abs() < 1e-9);
            assert!((cs.d.rs + cs.d.rp - rho_sp).abs() < 1e-9);
            assert!((cs.e.rs - rho_s).abs() < 1e-12);
            assert!((cs.f.rs - rho_s).abs() < 1e-12 && cs.f.rp == 0.0);
        }
    }

    #[test]
    fn decode_region_at_full_private_power() {
        // With no public part, the secondary cap is the private rate
        // against the other user's interference alone.
        let g = ChannelGains::new(2.5664, 3.7653, 2.3620, 0.1812, 0.1784, 8.6065).unwrap();
        let p = PowerConfig::new(10.0, 10.0, 10.0, 1.0).unwrap();
        let mi = mi_bundle_gaussian(&g, &p, Split::PRIVATE_ONLY, PrimaryUser::User1);
        let (rho_s, ..) = decode_bounds(&mi);
        let direct = crate::gaussian::tau(g.gss * p.ps / (g.g2s * p.p2 + p.n0)).unwrap();
        assert!((rho_s - direct).abs() < 1e-12);
    }

    #[test]
    fn decode_region_symmetric_under_user_swap() {
        // Mirror-symmetric gains: swapping the decoded user relabels the
        // same region.
        let g = ChannelGains::new(1.7, 1.7, 0.9, 0.4, 0.4, 5.0).unwrap();
        let p = PowerConfig::new(6.0, 6.0, 4.0, 1.0).unwrap();
        let s = Split::new(0.42).unwrap();
        let r1 = region_decode(&mi_bundle_gaussian(&g, &p, s, PrimaryUser::User1));
        let r2 = region_decode(&mi_bundle_gaussian(&g, &p, s, PrimaryUser::User2));
        assert_eq!(r1, r2);
    }

    #[test]
    fn relaxed_region_contains_no_decode_region() {
        for lam in [0.0, 0.5, 1.0] {
            let mi = bundle(lam);
            assert!(region_no_decode(&mi).contained_in(&region_no_decode_relaxed(&mi)));
        }
    }

    #[test]
    fn relaxed_region_equals_no_decode_at_full_private_power() {
        let mi = bundle(1.0);
        let relaxed = region_no_decode_relaxed(&mi);
        let base = region_no_decode(&mi);
        assert!(relaxed.contained_in(&base) && base.contained_in(&relaxed));
    }

    #[test]
    fn region_polygon_matches_decode_corners() {
        let mi = bundle(0.35);
        let region = region_decode(&mi);
        for (name, corner) in corners_decode(&mi).labeled() {
            let inside = region
                .constraints
                .iter()
                .all(|c| c.holds_at(corner, 1e-9));
            assert!(inside, "corner {name} outside region");
            let on_polygon = region
                .vertices
                .iter()
                .any(|v| (v.rs - corner.rs).abs() < 1e-7 && (v.rp - corner.rp).abs() < 1e-7);
            assert!(on_polygon, "corner {name} not a polygon vertex");
        }
    }
}
