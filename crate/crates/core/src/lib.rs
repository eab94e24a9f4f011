//! Achievable rate regions for a two-transmitter multiple-access network
//! whose band is shared by a rate-splitting secondary link.
//!
//! The secondary transmitter splits its signal into a private part, decoded
//! only by its own receiver, and a public part decodable by both receivers.
//! For a given channel this crate computes the set of achievable
//! `(secondary rate, primary sum rate)` pairs under two schemes — the
//! secondary receiver treating all primary signals as noise, or decoding
//! one primary signal — together with the closed-form conditions for when
//! the schemes nest and when rate-splitting is useless.
//!
//! Layout:
//!
//! * [`gaussian`] — the Gaussian channel model and its mutual-information
//!   bundle; [`discrete`] computes the same bundle for tiny
//!   finite-alphabet channels by entropy sums.
//! * [`regions`] — closed-form regions, corner points and the 4-rate
//!   membership predicates; [`geometry`] the polygon/envelope machinery
//!   underneath.
//! * [`conditions`] — the decodability and no-splitting conditions.
//! * [`oracle`] — an independent linear-programming projection used to
//!   cross-check every closed form.
//! * [`montecarlo`] — reproducible estimation of how often fading channels
//!   admit a freely decodable primary user.
//! * [`presets`] — example gain sets used by the demo and the test suites.

pub mod conditions;
pub mod discrete;
mod error;
pub mod gaussian;
pub mod geometry;
pub mod montecarlo;
pub mod oracle;
pub mod presets;
pub mod regions;

pub use error::{Error, Result};
pub use gaussian::{
    mi_bundle_gaussian, tau, ChannelGains, MiBundle, PowerConfig, PrimaryUser, Split,
};
pub use geometry::{Constraint, Envelope, RatePoint, GEOM_EPS};
pub use regions::{DeltaTuple, RateRegion};
