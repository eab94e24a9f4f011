#![allow(dead_code)]

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ratesplit_core::{ChannelGains, PowerConfig, Split};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform in (0, 1), open at both ends.
pub fn unit_open(rng: &mut ChaCha8Rng) -> f64 {
    ((rng.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
}

pub fn exp_draw(rng: &mut ChaCha8Rng, mean: f64) -> f64 {
    -mean * unit_open(rng).ln()
}

pub fn log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    (lo.ln() + (hi.ln() - lo.ln()) * unit_open(rng)).exp()
}

/// Random instance of the property suites: exponential unit-mean gains and
/// log-uniform powers in [0.1, 100] over unit noise.
pub fn random_instance(rng: &mut ChaCha8Rng) -> (ChannelGains, PowerConfig, Split) {
    let gains = ChannelGains::new(
        exp_draw(rng, 1.0),
        exp_draw(rng, 1.0),
        exp_draw(rng, 1.0),
        exp_draw(rng, 1.0),
        exp_draw(rng, 1.0),
        exp_draw(rng, 1.0),
    )
    .unwrap();
    let power = PowerConfig::new(
        log_uniform(rng, 0.1, 100.0),
        log_uniform(rng, 0.1, 100.0),
        log_uniform(rng, 0.1, 100.0),
        1.0,
    )
    .unwrap();
    let split = Split::new(unit_open(rng)).unwrap();
    (gains, power, split)
}

pub const TEN_DB: PowerConfig = PowerConfig { p1: 10.0, p2: 10.0, ps: 10.0, n0: 1.0 };
