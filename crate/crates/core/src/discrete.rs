//! Finite-alphabet channel evaluation by brute-force entropy sums.
//!
//! A small discrete memoryless channel plus an input distribution with the
//! required factorization — `X1, X2, U, W` independent given the
//! time-sharing variable `Q`, and `Xs` a deterministic function of
//! `(U, W, Q)` — yields the same [`MiBundle`] as the Gaussian path, here
//! computed from the materialized joint pmf as conditional-entropy
//! differences. The module exists to exercise the rate predicates beyond
//! the Gaussian family, not to search for good input distributions, so
//! alphabets are expected to stay tiny.

use crate::error::{Error, Result};
use crate::gaussian::{MiBundle, PrimaryUser};

/// Cell budget for the materialized joint pmf.
pub const MAX_JOINT_CELLS: u128 = 10_000_000;

const PMF_TOL: f64 = 1e-12;
const LOG2_E: f64 = std::f64::consts::LOG2_E;

/// Conditional channel table `ω(yp, ys | x1, x2, xs)` over finite
/// alphabets.
#[derive(Debug, Clone, PartialEq)]
pub struct Dmc {
    pub nx1: usize,
    pub nx2: usize,
    pub nxs: usize,
    pub nyp: usize,
    pub nys: usize,
    omega: Vec<f64>,
}

impl Dmc {
    /// `omega` is indexed `[x1][x2][xs][yp][ys]`, row-major. Every
    /// conditional slice must be a pmf.
    pub fn new(
        nx1: usize,
        nx2: usize,
        nxs: usize,
        nyp: usize,
        nys: usize,
        omega: Vec<f64>,
    ) -> Result<Self> {
        let cells = nx1 * nx2 * nxs * nyp * nys;
        if cells == 0 || omega.len() != cells {
            return Err(Error::InvalidDistribution(format!(
                "channel table needs {} entries, got {}",
                cells,
                omega.len()
            )));
        }
        if omega.iter().any(|&v| !v.is_finite() || v < 0.0) {
            return Err(Error::InvalidDistribution(
                "channel probabilities must be finite and nonnegative".into(),
            ));
        }
        let out = nyp * nys;
        for slice in omega.chunks(out) {
            let total: f64 = slice.iter().sum();
            if (total - 1.0).abs() > PMF_TOL {
                return Err(Error::InvalidDistribution(format!(
                    "conditional slice sums to {total}, expected 1"
                )));
            }
        }
        Ok(Self { nx1, nx2, nxs, nyp, nys, omega })
    }

    fn prob(&self, x1: usize, x2: usize, xs: usize, yp: usize, ys: usize) -> f64 {
        let idx = (((x1 * self.nx2 + x2) * self.nxs + xs) * self.nyp + yp) * self.nys + ys;
        self.omega[idx]
    }
}

fn check_pmf(name: &'static str, pmf: &[f64]) -> Result<()> {
    if pmf.is_empty() || pmf.iter().any(|&v| !v.is_finite() || v < 0.0) {
        return Err(Error::InvalidDistribution(format!(
            "{name} must be a nonempty table of finite nonnegative entries"
        )));
    }
    let total: f64 = pmf.iter().sum();
    if (total - 1.0).abs() > PMF_TOL {
        return Err(Error::InvalidDistribution(format!(
            "{name} sums to {total}, expected 1"
        )));
    }
    Ok(())
}

/// Input distribution with the required factorization. Only the per-factor
/// marginals are stored, so the conditional independence holds by
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub struct InputDistribution {
    q: Vec<f64>,
    u_given_q: Vec<Vec<f64>>,
    w_given_q: Vec<Vec<f64>>,
    x1_given_q: Vec<Vec<f64>>,
    x2_given_q: Vec<Vec<f64>>,
    /// `xs_map[q][u][w]` is the secondary letter sent for `(u, w)` at `q`.
    xs_map: Vec<Vec<Vec<usize>>>,
}

impl InputDistribution {
    pub fn new(
        q: Vec<f64>,
        u_given_q: Vec<Vec<f64>>,
        w_given_q: Vec<Vec<f64>>,
        x1_given_q: Vec<Vec<f64>>,
        x2_given_q: Vec<Vec<f64>>,
        xs_map: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        check_pmf("q", &q)?;
        let nq = q.len();
        for (name, table) in [
            ("u_given_q", &u_given_q),
            ("w_given_q", &w_given_q),
            ("x1_given_q", &x1_given_q),
            ("x2_given_q", &x2_given_q),
        ] {
            if table.len() != nq {
                return Err(Error::InvalidDistribution(format!(
                    "{name} needs one pmf per q value"
                )));
            }
            for pmf in table.iter() {
                check_pmf(name, pmf)?;
            }
        }
        let (nu, nw) = (u_given_q[0].len(), w_given_q[0].len());
        let rectangular = xs_map.len() == nq
            && xs_map.iter().all(|per_q| {
                per_q.len() == nu && per_q.iter().all(|per_u| per_u.len() == nw)
            });
        if !rectangular {
            return Err(Error::InvalidDistribution(
                "xs_map must be indexed [q][u][w]".into(),
            ));
        }
        Ok(Self { q, u_given_q, w_given_q, x1_given_q, x2_given_q, xs_map })
    }

    pub fn nq(&self) -> usize {
        self.q.len()
    }
    pub fn nu(&self) -> usize {
        self.u_given_q[0].len()
    }
    pub fn nw(&self) -> usize {
        self.w_given_q[0].len()
    }
}

/// Dense pmf over `(Q, U, W, X1, X2, Xs, Yp, Ys)`, row-major in that axis
/// order.
#[derive(Debug, Clone, PartialEq)]
pub struct JointPmf {
    pub dims: [usize; 8],
    p: Vec<f64>,
}

pub const AXIS_Q: usize = 0;
pub const AXIS_U: usize = 1;
pub const AXIS_W: usize = 2;
pub const AXIS_X1: usize = 3;
pub const AXIS_X2: usize = 4;
pub const AXIS_XS: usize = 5;
pub const AXIS_YP: usize = 6;
pub const AXIS_YS: usize = 7;

impl JointPmf {
    pub fn total_mass(&self) -> f64 {
        self.p.iter().sum()
    }

    pub fn cells(&self) -> &[f64] {
        &self.p
    }

    /// Marginal table over the listed axes, in the listed order.
    pub fn marginal(&self, axes: &[usize]) -> NdTable {
        let dims_all: Vec<usize> = self.dims.to_vec();
        marginalize(&self.p, &dims_all, axes)
    }
}

/// Small dense n-dimensional probability table.
#[derive(Debug, Clone, PartialEq)]
pub struct NdTable {
    pub dims: Vec<usize>,
    pub p: Vec<f64>,
}

impl NdTable {
    /// Marginal over a subset of this table's axes, in the given order.
    pub fn marginal(&self, axes: &[usize]) -> NdTable {
        marginalize(&self.p, &self.dims, axes)
    }
}

fn marginalize(p: &[f64], dims: &[usize], keep: &[usize]) -> NdTable {
    let out_dims: Vec<usize> = keep.iter().map(|&a| dims[a]).collect();
    let out_len: usize = out_dims.iter().product::<usize>().max(1);
    let mut out = vec![0.0; out_len];
    let mut idx = vec![0usize; dims.len()];
    for (flat, &mass) in p.iter().enumerate() {
        if mass != 0.0 {
            // Decode the row-major multi-index.
            let mut rem = flat;
            for (axis, &d) in dims.iter().enumerate().rev() {
                idx[axis] = rem % d;
                rem /= d;
            }
            let mut o = 0usize;
            for &a in keep {
                o = o * dims[a] + idx[a];
            }
            out[o] += mass;
        }
    }
    NdTable { dims: out_dims, p: out }
}

/// `H(rest | cond)` of a table, with `cond` given as axis positions of the
/// table itself. Uses the `0·log 0 = 0` convention.
fn cond_entropy(t: &NdTable, cond: &[usize]) -> f64 {
    let pc = t.marginal(cond);
    let mut h = 0.0;
    let mut idx = vec![0usize; t.dims.len()];
    for (flat, &mass) in t.p.iter().enumerate() {
        if mass > 0.0 {
            let mut rem = flat;
            for (axis, &d) in t.dims.iter().enumerate().rev() {
                idx[axis] = rem % d;
                rem /= d;
            }
            let mut o = 0usize;
            for &a in cond {
                o = o * t.dims[a] + idx[a];
            }
            h -= mass * (mass / pc.p[o]).ln() * LOG2_E;
        }
    }
    h
}

/// Materializes the joint pmf implied by the factorization of `z` pushed
/// through the channel.
pub fn joint_distribution(dmc: &Dmc, z: &InputDistribution) -> Result<JointPmf> {
    let dims = [
        z.nq(),
        z.nu(),
        z.nw(),
        dmc.nx1,
        dmc.nx2,
        dmc.nxs,
        dmc.nyp,
        dmc.nys,
    ];
    let cells: u128 = dims.iter().map(|&d| d as u128).product();
    if cells > MAX_JOINT_CELLS {
        return Err(Error::AlphabetTooLarge { cells, limit: MAX_JOINT_CELLS });
    }
    if z.x1_given_q[0].len() != dmc.nx1 || z.x2_given_q[0].len() != dmc.nx2 {
        return Err(Error::InvalidDistribution(
            "input alphabet sizes do not match the channel".into(),
        ));
    }
    for per_q in &z.xs_map {
        for per_u in per_q {
            if per_u.iter().any(|&xs| xs >= dmc.nxs) {
                return Err(Error::InvalidDistribution(
                    "xs_map points outside the channel's secondary alphabet".into(),
                ));
            }
        }
    }

    let mut p = vec![0.0; cells as usize];
    let [_, _, _, _, _, nxs, nyp, nys] = dims;
    for (q, &pq) in z.q.iter().enumerate() {
        for (u, &pu) in z.u_given_q[q].iter().enumerate() {
            for (w, &pw) in z.w_given_q[q].iter().enumerate() {
                let xs = z.xs_map[q][u][w];
                let base = pq * pu * pw;
                if base == 0.0 {
                    continue;
                }
                for (x1, &p1) in z.x1_given_q[q].iter().enumerate() {
                    for (x2, &p2) in z.x2_given_q[q].iter().enumerate() {
                        let input_mass = base * p1 * p2;
                        if input_mass == 0.0 {
                            continue;
                        }
                        for yp in 0..nyp {
                            for ys in 0..nys {
                                let mass = input_mass * dmc.prob(x1, x2, xs, yp, ys);
                                if mass != 0.0 {
                                    let flat = ((((((q * dims[1] + u) * dims[2] + w)
                                        * dims[3]
                                        + x1)
                                        * dims[4]
                                        + x2)
                                        * nxs
                                        + xs)
                                        * nyp
                                        + yp)
                                        * nys
                                        + ys;
                                    p[flat] += mass;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let joint = JointPmf { dims, p };
    debug_assert!((joint.total_mass() - 1.0).abs() < 1e-9);
    Ok(joint)
}

/// Axes of the reduced table `(Q, U, W, Xi, Xj, Y)` used below.
const RQ: usize = 0;
const RU: usize = 1;
const RW: usize = 2;
const RXI: usize = 3;
const RXJ: usize = 4;
const RY: usize = 5;

/// `I(Y; measured | given, Q)` from a reduced table, as
/// `H(Y | given) − H(Y | measured, given)`, clamped to zero against
/// rounding.
fn mi_term(t: &NdTable, measured: &[usize], given: &[usize]) -> f64 {
    let mut cond: Vec<usize> = given.to_vec();
    cond.push(RQ);
    let narrow = t.marginal(&[&[RY], cond.as_slice()].concat());
    let h_given = cond_entropy(&narrow, &(1..narrow.dims.len()).collect::<Vec<_>>());
    let mut both: Vec<usize> = measured.to_vec();
    both.extend_from_slice(&cond);
    let wide = t.marginal(&[&[RY], both.as_slice()].concat());
    let h_both = cond_entropy(&wide, &(1..wide.dims.len()).collect::<Vec<_>>());
    let v = h_given - h_both;
    debug_assert!(v > -1e-9, "conditional MI at {v}");
    v.max(0.0)
}

/// Computes the full [`MiBundle`] of a small channel by entropy sums over
/// the joint distribution.
pub fn mi_bundle_discrete(
    dmc: &Dmc,
    z: &InputDistribution,
    decoded_user: PrimaryUser,
) -> Result<MiBundle> {
    let joint = joint_distribution(dmc, z)?;
    let (axis_xi, axis_xj) = match decoded_user {
        PrimaryUser::User1 => (AXIS_X1, AXIS_X2),
        PrimaryUser::User2 => (AXIS_X2, AXIS_X1),
    };
    let red_p = joint.marginal(&[AXIS_Q, AXIS_U, AXIS_W, axis_xi, axis_xj, AXIS_YP]);
    let red_s = joint.marginal(&[AXIS_Q, AXIS_U, AXIS_W, axis_xi, axis_xj, AXIS_YS]);
    let ip = |measured: &[usize], given: &[usize]| mi_term(&red_p, measured, given);
    let is = |measured: &[usize], given: &[usize]| mi_term(&red_s, measured, given);

    Ok(MiBundle {
        yp_xi_given_wxj: ip(&[RXI], &[RW, RXJ]),
        yp_xj_given_wxi: ip(&[RXJ], &[RW, RXI]),
        yp_w_given_x1x2: ip(&[RW], &[RXI, RXJ]),
        yp_x1x2_given_w: ip(&[RXI, RXJ], &[RW]),
        yp_wxi_given_xj: ip(&[RW, RXI], &[RXJ]),
        yp_wxj_given_xi: ip(&[RW, RXJ], &[RXI]),
        yp_wx1x2: ip(&[RW, RXI, RXJ], &[]),
        yp_w: ip(&[RW], &[]),
        yp_xi_given_w: ip(&[RXI], &[RW]),
        yp_xi: ip(&[RXI], &[]),
        yp_wxi: ip(&[RW, RXI], &[]),
        yp_x1x2: ip(&[RXI, RXJ], &[]),
        ys_u_given_w: is(&[RU], &[RW]),
        ys_w_given_u: is(&[RW], &[RU]),
        ys_uw: is(&[RU, RW], &[]),
        ys_w: is(&[RW], &[]),
        ys_u_given_wxi: is(&[RU], &[RW, RXI]),
        ys_w_given_uxi: is(&[RW], &[RU, RXI]),
        ys_xi_given_uw: is(&[RXI], &[RU, RW]),
        ys_uw_given_xi: is(&[RU, RW], &[RXI]),
        ys_uxi_given_w: is(&[RU, RXI], &[RW]),
        ys_wxi_given_u: is(&[RW, RXI], &[RU]),
        ys_uwxi: is(&[RU, RW, RXI], &[]),
        ys_xi_given_w: is(&[RXI], &[RW]),
        ys_wxi: is(&[RW, RXI], &[]),
        ys_w_given_xi: is(&[RW], &[RXI]),
        ys_xi: is(&[RXI], &[]),
    })
}
