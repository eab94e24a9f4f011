//! Named example gain sets.
//!
//! Each preset pins the six channel power gains of a scenario that
//! exercises one regime of the theory; all are intended for the symmetric
//! power setup `P1 = P2 = Ps = 10`, `N0 = 1` (10 dB). They back the demo
//! page's scenario picker and the test suites.

use crate::gaussian::ChannelGains;

#[derive(Debug, Clone, Copy)]
pub struct GainPreset {
    pub name: &'static str,
    pub summary: &'static str,
    pub g1p: f64,
    pub g2p: f64,
    pub gsp: f64,
    pub g1s: f64,
    pub g2s: f64,
    pub gss: f64,
}

impl GainPreset {
    pub fn gains(&self) -> ChannelGains {
        ChannelGains::new(self.g1p, self.g2p, self.gsp, self.g1s, self.g2s, self.gss)
            .expect("preset gains are valid")
    }
}

/// The no-splitting condition holds for the no-decode scheme: swept regions
/// nest and the `λ = 0` region is the whole union.
pub const NESTED_NO_DECODE: GainPreset = GainPreset {
    name: "nested-no-decode",
    summary: "no-decode regions nest; λ = 0 achieves the union",
    g1p: 2.5664,
    g2p: 3.7653,
    gsp: 2.3620,
    g1s: 0.1812,
    g2s: 0.1784,
    gss: 8.6065,
};

/// The no-splitting condition fails for the no-decode scheme: regions at
/// different splits cross, and the network sum rate grows with `λ`.
pub const CROSSING_NO_DECODE: GainPreset = GainPreset {
    name: "crossing-no-decode",
    summary: "no-decode regions cross; the sweep is needed",
    g1p: 1.5066,
    g2p: 0.8290,
    gsp: 1.1953,
    g1s: 0.1902,
    g2s: 0.0122,
    gss: 10.3229,
};

/// The no-splitting condition holds for the decode-user-1 scheme.
pub const NESTED_DECODE_USER1: GainPreset = GainPreset {
    name: "nested-decode-user1",
    summary: "decode-user-1 regions nest; λ = 0 achieves the union",
    g1p: 5.5303,
    g2p: 4.2865,
    gsp: 3.9334,
    g1s: 0.6542,
    g2s: 0.8121,
    gss: 8.1575,
};

/// The no-splitting condition fails for the decode-user-1 scheme.
pub const CROSSING_DECODE_USER1: GainPreset = GainPreset {
    name: "crossing-decode-user1",
    summary: "decode-user-1 regions cross; the sweep is needed",
    g1p: 9.566,
    g2p: 14.5045,
    gsp: 0.7032,
    g1s: 0.0808,
    g2s: 0.2894,
    gss: 16.6226,
};

/// Primary user 1 satisfies the Gaussian decodability condition and user 2
/// does not: decoding user 1 at the secondary receiver widens the
/// secondary's rates at no primary cost.
pub const ASYMMETRIC_DECODABILITY: GainPreset = GainPreset {
    name: "asymmetric-decodability",
    summary: "only user 1 is decodable for free at the secondary receiver",
    g1p: 0.3413,
    g2p: 10.2047,
    gsp: 0.2495,
    g1s: 0.2821,
    g2s: 0.3782,
    gss: 6.3337,
};

pub const ALL: [&GainPreset; 5] = [
    &NESTED_NO_DECODE,
    &CROSSING_NO_DECODE,
    &NESTED_DECODE_USER1,
    &CROSSING_DECODE_USER1,
    &ASYMMETRIC_DECODABILITY,
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_construct_valid_gains() {
        for preset in ALL {
            let g = preset.gains();
            assert!(g.gss > 0.0, "{}", preset.name);
        }
    }

    #[test]
    fn preset_names_unique() {
        let mut names: Vec<_> = ALL.iter().map(|p| p.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), ALL.len());
    }
}
