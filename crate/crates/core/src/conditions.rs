//! Closed-form conditions that settle when decoding a primary signal costs
//! nothing and when rate-splitting buys nothing.
//!
//! * [`pdc`] — at the current power split, the no-decode region is
//!   contained in the decode region for user `i` iff the primary receiver's
//!   rate for `Xi` never exceeds what the secondary receiver can decode.
//! * [`pdcg`] — the split-independent Gaussian form of the same test; it
//!   holds for some split iff it holds for every split, so only the gains,
//!   the other user's power and the noise floor enter.
//! * [`no_split_condition_o`] / [`no_split_condition_r`] — when these hold,
//!   the full swept union of regions is already achieved at `λ = 0` (the
//!   entire secondary signal decodable by the primary receiver); when they
//!   fail, regions at different splits never nest.
//!
//! Boundary equality counts as satisfied: every inequality is non-strict.

use crate::gaussian::{ChannelGains, MiBundle, PowerConfig, PrimaryUser};

/// Slack for the non-strict comparisons on mutual-information values.
const MI_SLACK: f64 = 1e-12;

/// A left side / right side pair of an evaluated inequality `lhs ≤ rhs`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Comparison {
    pub lhs: f64,
    pub rhs: f64,
}

impl Comparison {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs + MI_SLACK
    }
}

/// Primary decodability condition at one power split, for the bundle's
/// indexed user: `I(Yp; Xi | W Q) ≤ I(Ys; Xi | U W Q)`.
pub fn pdc(mi: &MiBundle) -> bool {
    pdc_comparison(mi).holds()
}

pub fn pdc_comparison(mi: &MiBundle) -> Comparison {
    Comparison { lhs: mi.yp_xi_given_w, rhs: mi.ys_xi_given_uw }
}

/// Split-independent primary decodability for user `i`:
/// `g_i^p / (g_j^p·Pj + N0) ≤ g_i^s / (g_j^s·Pj + N0)`.
pub fn pdcg(gains: &ChannelGains, power: &PowerConfig, user: PrimaryUser) -> bool {
    pdcg_comparison(gains, power, user).holds()
}

pub fn pdcg_comparison(
    gains: &ChannelGains,
    power: &PowerConfig,
    user: PrimaryUser,
) -> Comparison {
    let (gip, gjp, gis, gjs, pj) = match user {
        PrimaryUser::User1 => (gains.g1p, gains.g2p, gains.g1s, gains.g2s, power.p2),
        PrimaryUser::User2 => (gains.g2p, gains.g1p, gains.g2s, gains.g1s, power.p1),
    };
    Comparison {
        lhs: gip / (gjp * pj + power.n0),
        rhs: gis / (gjs * pj + power.n0),
    }
}

/// Rate-splitting is useless for the no-decode scheme iff
/// `gss·N0 ≤ gsp·(g1s·P1 + g2s·P2 + N0)`.
pub fn no_split_condition_o(gains: &ChannelGains, power: &PowerConfig) -> bool {
    no_split_condition_o_comparison(gains, power).holds()
}

pub fn no_split_condition_o_comparison(
    gains: &ChannelGains,
    power: &PowerConfig,
) -> Comparison {
    Comparison {
        lhs: gains.gss * power.n0,
        rhs: gains.gsp * (gains.g1s * power.p1 + gains.g2s * power.p2 + power.n0),
    }
}

/// Rate-splitting is useless for the decode-user-`i` scheme iff
/// `gss·N0 ≤ gsp·(g_j^s·Pj + N0)`, `j ≠ i`.
pub fn no_split_condition_r(
    gains: &ChannelGains,
    power: &PowerConfig,
    user: PrimaryUser,
) -> bool {
    no_split_condition_r_comparison(gains, power, user).holds()
}

pub fn no_split_condition_r_comparison(
    gains: &ChannelGains,
    power: &PowerConfig,
    user: PrimaryUser,
) -> Comparison {
    let (gjs, pj) = match user {
        PrimaryUser::User1 => (gains.g2s, power.p2),
        PrimaryUser::User2 => (gains.g1s, power.p1),
    };
    Comparison {
        lhs: gains.gss * power.n0,
        rhs: gains.gsp * (gjs * pj + power.n0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::{mi_bundle_gaussian, Split};
    use crate::presets;

    fn tens() -> PowerConfig {
        PowerConfig::new(10.0, 10.0, 10.0, 1.0).unwrap()
    }

    #[test]
    fn pdc_boundary_equality_counts() {
        // Symmetric links: both sides of the comparison coincide.
        let g = ChannelGains::new(1.0, 2.0, 0.5, 1.0, 2.0, 0.5).unwrap();
        let p = PowerConfig::new(3.0, 4.0, 0.0, 1.0).unwrap();
        let mi = mi_bundle_gaussian(&g, &p, Split::new(0.5).unwrap(), PrimaryUser::User1);
        let cmp = pdc_comparison(&mi);
        assert_eq!(cmp.lhs, cmp.rhs);
        assert!(pdc(&mi));
    }

    #[test]
    fn asymmetric_preset_decodability_split() {
        let g = presets::ASYMMETRIC_DECODABILITY.gains();
        let p = tens();
        for lam in [0.0, 0.5, 1.0] {
            let mi1 = mi_bundle_gaussian(&g, &p, Split::new(lam).unwrap(), PrimaryUser::User1);
            let mi2 = mi_bundle_gaussian(&g, &p, Split::new(lam).unwrap(), PrimaryUser::User2);
            assert!(pdc(&mi1), "user 1 decodable at lambda = {lam}");
            assert!(!pdc(&mi2), "user 2 not decodable at lambda = {lam}");
        }
        assert!(pdcg(&g, &p, PrimaryUser::User1));
        assert!(!pdcg(&g, &p, PrimaryUser::User2));
    }

    #[test]
    fn pdcg_symmetric_gains_hold_with_equality() {
        let g = ChannelGains::new(1.3, 0.6, 0.2, 1.3, 0.6, 9.0).unwrap();
        let p = tens();
        for user in PrimaryUser::BOTH {
            let cmp = pdcg_comparison(&g, &p, user);
            assert_eq!(cmp.lhs, cmp.rhs);
            assert!(cmp.holds());
        }
    }

    #[test]
    fn pdcg_with_idle_interferer_compares_direct_gains() {
        let g = ChannelGains::new(0.8, 2.0, 0.1, 0.9, 5.0, 1.0).unwrap();
        let p = PowerConfig::new(7.0, 0.0, 1.0, 1.0).unwrap();
        let cmp = pdcg_comparison(&g, &p, PrimaryUser::User1);
        assert_eq!((cmp.lhs, cmp.rhs), (g.g1p / p.n0, g.g1s / p.n0));
        assert!(cmp.holds());
    }

    #[test]
    fn no_split_condition_o_on_presets() {
        let p = tens();
        assert!(no_split_condition_o(&presets::NESTED_NO_DECODE.gains(), &p));
        assert!(!no_split_condition_o(&presets::CROSSING_NO_DECODE.gains(), &p));
        let zero_gss = ChannelGains::new(1.0, 1.0, 0.4, 1.0, 1.0, 0.0).unwrap();
        assert!(no_split_condition_o(&zero_gss, &p));
    }

    #[test]
    fn no_split_condition_r_on_presets() {
        let p = tens();
        assert!(no_split_condition_r(
            &presets::NESTED_DECODE_USER1.gains(),
            &p,
            PrimaryUser::User1
        ));
        assert!(!no_split_condition_r(
            &presets::CROSSING_DECODE_USER1.gains(),
            &p,
            PrimaryUser::User1
        ));
    }

    #[test]
    fn no_split_condition_r_under_heavy_interference() {
        // Huge other-user power makes the right side as large as needed.
        let g = ChannelGains::new(1.0, 1.0, 0.01, 1.0, 1.0, 50.0).unwrap();
        let p = PowerConfig::new(1.0, 1e7, 1.0, 1.0).unwrap();
        assert!(no_split_condition_r(&g, &p, PrimaryUser::User1));
    }
}
