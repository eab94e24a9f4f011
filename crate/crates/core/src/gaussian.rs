//! Gaussian system model.
//!
//! Two primary transmitters and one rate-splitting secondary transmitter
//! share a band. The secondary signal is the sum of a private part `U`
//! (power `λ·Ps`, decoded only by the secondary receiver) and a public part
//! `W` (power `λ̄·Ps`, decodable by both receivers). Each receiver observes a
//! superposition weighted by per-link power gains plus white noise of
//! variance `N0`.
//!
//! Every rate bound in this crate is a conditional mutual information
//! between a receiver output and a subset of the four signal components
//! `{Xi, Xj, U, W}` (with `i` the indexed primary user and `j` the other).
//! For independent Gaussian components, conditioning removes a component
//! from the received sum and anything neither measured nor conditioned is
//! interference, so
//!
//! ```text
//! I(Y; S | C) = τ( Σ_{k ∈ S} P_k  /  (N0 + Σ_{k ∉ S ∪ C} P_k) ),
//! τ(x) = 0.5·log2(1 + x),
//! ```
//!
//! with `P_k` the component's received power. [`mi_bundle_gaussian`]
//! evaluates that rule for every quantity the rate-region formulas consume
//! and packs them into a [`MiBundle`]. Rates are in bits per channel use.
//!
//! The time-sharing variable is held constant: the power split `λ` is the
//! only free parameter of the input distribution.

use crate::error::{Error, Result};

const LN_2: f64 = std::f64::consts::LN_2;

/// `τ(x) = 0.5·log2(1 + x)`, the Gaussian mutual-information map from SNR
/// to bits per channel use.
///
/// Fails on negative or non-finite input.
pub fn tau(x: f64) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::InvalidInput {
            name: "tau argument",
            reason: format!("expected a finite nonnegative SNR, got {x}"),
        });
    }
    Ok(tau_raw(x))
}

/// `τ` without the domain check, for internal ratios that are nonnegative
/// by construction. `ln_1p` keeps absolute error small near zero.
#[inline]
pub(crate) fn tau_raw(x: f64) -> f64 {
    0.5 * x.ln_1p() / LN_2
}

/// Which primary user's signal is indexed as `Xi` in a [`MiBundle`] (and,
/// for the decode scheme, which signal the secondary receiver decodes).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrimaryUser {
    User1,
    User2,
}

impl PrimaryUser {
    pub const BOTH: [PrimaryUser; 2] = [PrimaryUser::User1, PrimaryUser::User2];

    pub fn index(self) -> u8 {
        match self {
            PrimaryUser::User1 => 1,
            PrimaryUser::User2 => 2,
        }
    }

    pub fn other(self) -> Self {
        match self {
            PrimaryUser::User1 => PrimaryUser::User2,
            PrimaryUser::User2 => PrimaryUser::User1,
        }
    }

    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            1 => Ok(PrimaryUser::User1),
            2 => Ok(PrimaryUser::User2),
            _ => Err(Error::InvalidInput {
                name: "primary user index",
                reason: format!("expected 1 or 2, got {i}"),
            }),
        }
    }
}

/// The six channel power gains: `g1p, g2p, gsp` into the primary receiver,
/// `g1s, g2s, gss` into the secondary receiver. Dimensionless, finite, ≥ 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelGains {
    pub g1p: f64,
    pub g2p: f64,
    pub gsp: f64,
    pub g1s: f64,
    pub g2s: f64,
    pub gss: f64,
}

impl ChannelGains {
    pub fn new(g1p: f64, g2p: f64, gsp: f64, g1s: f64, g2s: f64, gss: f64) -> Result<Self> {
        for (name, v) in [
            ("g1p", g1p),
            ("g2p", g2p),
            ("gsp", gsp),
            ("g1s", g1s),
            ("g2s", g2s),
            ("gss", gss),
        ] {
            check_nonnegative(name, v)?;
        }
        Ok(Self { g1p, g2p, gsp, g1s, g2s, gss })
    }
}

/// Transmit powers `P1, P2, Ps` (≥ 0) and noise variance `N0` (> 0), all in
/// linear units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerConfig {
    pub p1: f64,
    pub p2: f64,
    pub ps: f64,
    pub n0: f64,
}

impl PowerConfig {
    pub fn new(p1: f64, p2: f64, ps: f64, n0: f64) -> Result<Self> {
        check_nonnegative("p1", p1)?;
        check_nonnegative("p2", p2)?;
        check_nonnegative("ps", ps)?;
        if !n0.is_finite() || n0 <= 0.0 {
            return Err(Error::InvalidInput {
                name: "n0",
                reason: format!("noise variance must be finite and positive, got {n0}"),
            });
        }
        Ok(Self { p1, p2, ps, n0 })
    }
}

fn check_nonnegative(name: &'static str, v: f64) -> Result<()> {
    if !v.is_finite() || v < 0.0 {
        return Err(Error::InvalidInput {
            name,
            reason: format!("must be finite and nonnegative, got {v}"),
        });
    }
    Ok(())
}

/// Secondary power split: fraction `λ ∈ [0, 1]` of `Ps` on the private part
/// `U`; the public part `W` gets `λ̄ = 1 − λ`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Split {
    lambda: f64,
}

impl Split {
    pub fn new(lambda: f64) -> Result<Self> {
        if !lambda.is_finite() || !(0.0..=1.0).contains(&lambda) {
            return Err(Error::InvalidInput {
                name: "lambda",
                reason: format!("power split must lie in [0, 1], got {lambda}"),
            });
        }
        Ok(Self { lambda })
    }

    /// All power on the private part.
    pub const PRIVATE_ONLY: Split = Split { lambda: 1.0 };
    /// All power on the public part.
    pub const PUBLIC_ONLY: Split = Split { lambda: 0.0 };

    pub fn lambda(self) -> f64 {
        self.lambda
    }

    pub fn lambda_bar(self) -> f64 {
        1.0 - self.lambda
    }
}

/// The named mutual-information quantities, in bits per channel use,
/// consumed by the rate-region formulas.
///
/// Naming: the `yp_`/`ys_` prefix is the receiver the information is
/// measured at; then the measured components; `_given_` introduces the
/// conditioning components. `xi` is the indexed primary user, `xj` the
/// other, `x1x2` both; the constant time-sharing variable is implicitly in
/// every conditioning set. So `ys_u_given_wxi` is `I(Ys; U | W Xi Q)`.
///
/// Invariants for bundles produced by this crate: every field is finite and
/// nonnegative, and the chain-rule identities (`ys_uw = ys_w +
/// ys_u_given_w`, `yp_wx1x2 = yp_w + yp_x1x2_given_w`, `ys_uwxi = ys_wxi +
/// ys_u_given_wxi`, and their relabelings) hold up to rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MiBundle {
    // Primary receiver.
    pub yp_xi_given_wxj: f64,
    pub yp_xj_given_wxi: f64,
    pub yp_w_given_x1x2: f64,
    pub yp_x1x2_given_w: f64,
    pub yp_wxi_given_xj: f64,
    pub yp_wxj_given_xi: f64,
    pub yp_wx1x2: f64,
    pub yp_w: f64,
    pub yp_xi_given_w: f64,
    pub yp_xi: f64,
    pub yp_wxi: f64,
    pub yp_x1x2: f64,
    // Secondary receiver.
    pub ys_u_given_w: f64,
    pub ys_w_given_u: f64,
    pub ys_uw: f64,
    pub ys_w: f64,
    pub ys_u_given_wxi: f64,
    pub ys_w_given_uxi: f64,
    pub ys_xi_given_uw: f64,
    pub ys_uw_given_xi: f64,
    pub ys_uxi_given_w: f64,
    pub ys_wxi_given_u: f64,
    pub ys_uwxi: f64,
    pub ys_xi_given_w: f64,
    pub ys_wxi: f64,
    pub ys_w_given_xi: f64,
    pub ys_xi: f64,
}

impl MiBundle {
    /// `I(Yp; W | Xi Q)`, by the chain rule on `yp_wxi`. Not stored as a
    /// field; several decode-region bounds need it.
    pub fn yp_w_given_xi(&self) -> f64 {
        self.yp_wxi - self.yp_xi
    }

    /// All 27 fields paired with their names, for diagnostics and checks.
    pub fn fields(&self) -> [(&'static str, f64); 27] {
        [
            ("yp_xi_given_wxj", self.yp_xi_given_wxj),
            ("yp_xj_given_wxi", self.yp_xj_given_wxi),
            ("yp_w_given_x1x2", self.yp_w_given_x1x2),
            ("yp_x1x2_given_w", self.yp_x1x2_given_w),
            ("yp_wxi_given_xj", self.yp_wxi_given_xj),
            ("yp_wxj_given_xi", self.yp_wxj_given_xi),
            ("yp_wx1x2", self.yp_wx1x2),
            ("yp_w", self.yp_w),
            ("yp_xi_given_w", self.yp_xi_given_w),
            ("yp_xi", self.yp_xi),
            ("yp_wxi", self.yp_wxi),
            ("yp_x1x2", self.yp_x1x2),
            ("ys_u_given_w", self.ys_u_given_w),
            ("ys_w_given_u", self.ys_w_given_u),
            ("ys_uw", self.ys_uw),
            ("ys_w", self.ys_w),
            ("ys_u_given_wxi", self.ys_u_given_wxi),
            ("ys_w_given_uxi", self.ys_w_given_uxi),
            ("ys_xi_given_uw", self.ys_xi_given_uw),
            ("ys_uw_given_xi", self.ys_uw_given_xi),
            ("ys_uxi_given_w", self.ys_uxi_given_w),
            ("ys_wxi_given_u", self.ys_wxi_given_u),
            ("ys_uwxi", self.ys_uwxi),
            ("ys_xi_given_w", self.ys_xi_given_w),
            ("ys_wxi", self.ys_wxi),
            ("ys_w_given_xi", self.ys_w_given_xi),
            ("ys_xi", self.ys_xi),
        ]
    }
}

// Component bits, indexing ReceiverSide::powers.
const XI: u8 = 0b0001;
const XJ: u8 = 0b0010;
const U: u8 = 0b0100;
const W: u8 = 0b1000;

/// Received component powers `[Xi, Xj, U, W]` at one receiver.
#[derive(Clone, Copy)]
struct ReceiverSide {
    powers: [f64; 4],
    n0: f64,
}

impl ReceiverSide {
    fn mi(&self, measured: u8, conditioned: u8) -> f64 {
        debug_assert_eq!(measured & conditioned, 0);
        let mut signal = 0.0;
        let mut noise = self.n0;
        for (k, &p) in self.powers.iter().enumerate() {
            let bit = 1u8 << k;
            if measured & bit != 0 {
                signal += p;
            } else if conditioned & bit == 0 {
                noise += p;
            }
        }
        tau_raw(signal / noise)
    }
}

/// Evaluates every [`MiBundle`] quantity for the Gaussian model at power
/// split `λ`, with `decoded_user` as the indexed user `i`.
///
/// Swapping `decoded_user` swaps the `(i, j)` roles in every indexed field;
/// zero-power degeneracies (`λ ∈ {0, 1}`, a zero power) fall out of
/// `τ(0) = 0` with no special-casing.
pub fn mi_bundle_gaussian(
    gains: &ChannelGains,
    power: &PowerConfig,
    split: Split,
    decoded_user: PrimaryUser,
) -> MiBundle {
    let (gip, gjp, gis, gjs, pi, pj) = match decoded_user {
        PrimaryUser::User1 => (gains.g1p, gains.g2p, gains.g1s, gains.g2s, power.p1, power.p2),
        PrimaryUser::User2 => (gains.g2p, gains.g1p, gains.g2s, gains.g1s, power.p2, power.p1),
    };
    let (private, public) = (split.lambda() * power.ps, split.lambda_bar() * power.ps);
    let yp = ReceiverSide {
        powers: [gip * pi, gjp * pj, gains.gsp * private, gains.gsp * public],
        n0: power.n0,
    };
    let ys = ReceiverSide {
        powers: [gis * pi, gjs * pj, gains.gss * private, gains.gss * public],
        n0: power.n0,
    };

    MiBundle {
        yp_xi_given_wxj: yp.mi(XI, W | XJ),
        yp_xj_given_wxi: yp.mi(XJ, W | XI),
        yp_w_given_x1x2: yp.mi(W, XI | XJ),
        yp_x1x2_given_w: yp.mi(XI | XJ, W),
        yp_wxi_given_xj: yp.mi(W | XI, XJ),
        yp_wxj_given_xi: yp.mi(W | XJ, XI),
        yp_wx1x2: yp.mi(W | XI | XJ, 0),
        yp_w: yp.mi(W, 0),
        yp_xi_given_w: yp.mi(XI, W),
        yp_xi: yp.mi(XI, 0),
        yp_wxi: yp.mi(W | XI, 0),
        yp_x1x2: yp.mi(XI | XJ, 0),
        ys_u_given_w: ys.mi(U, W),
        ys_w_given_u: ys.mi(W, U),
        ys_uw: ys.mi(U | W, 0),
        ys_w: ys.mi(W, 0),
        ys_u_given_wxi: ys.mi(U, W | XI),
        ys_w_given_uxi: ys.mi(W, U | XI),
        ys_xi_given_uw: ys.mi(XI, U | W),
        ys_uw_given_xi: ys.mi(U | W, XI),
        ys_uxi_given_w: ys.mi(U | XI, W),
        ys_wxi_given_u: ys.mi(W | XI, U),
        ys_uwxi: ys.mi(U | W | XI, 0),
        ys_xi_given_w: ys.mi(XI, W),
        ys_wxi: ys.mi(W | XI, 0),
        ys_w_given_xi: ys.mi(W, XI),
        ys_xi: ys.mi(XI, 0),
    }
}
