//! Semi-infinite radial integrals driven panel-by-panel between consecutive
//! oscillation nodes (or caller-chosen nodes for smooth integrands), with an
//! analytic tail closing the range.
//!
//! The tail callback returns a (value, error-bound) pair — see
//! [`super::tails`] for why node-aligned truncation makes the bound
//! O(drift/Z^2) relative to the tail. The driver stops at the first node Z
//! where that bound drops below the requested tolerance. The tail itself may
//! still be a sizable fraction of the result; only its uncertainty has to be
//! negligible, which is what makes slowly-converging near-threshold
//! integrals affordable.

use super::finite::{integrate_f64, integrate_log, QuadOpts};
use crate::error::{Error, Result};
use crate::specfun::LogReal;

#[derive(Clone, Copy, Debug)]
pub struct OscOpts {
    pub rel_tol: f64,
    pub max_panels: u32,
    pub panel_depth: u32,
    /// Noise floor (log scale) seeding the log-domain driver before its
    /// running total can provide one; panels below it are accepted as-is.
    /// Callers with cusped integrands should seed this from a cheap estimate
    /// of the integral, or the first panel can refine without bound chasing
    /// evaluation noise around density zeros.
    pub floor_ln: f64,
    /// Same seed for the plain-f64 driver, as an absolute contribution.
    pub abs_floor: f64,
}

impl Default for OscOpts {
    fn default() -> Self {
        OscOpts {
            rel_tol: 1e-9,
            max_panels: 20_000,
            panel_depth: 40,
            floor_ln: f64::NEG_INFINITY,
            abs_floor: 0.0,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SemiResult<T> {
    pub value: T,
    /// tail contribution included in `value`
    pub tail: T,
    pub panels: u32,
    pub err_rel: f64,
    pub evals: usize,
}

/// Decay exponent fitted from the last two panel contributions; used to tell
/// "diverges" from "converges too slowly" when the panel cap is hit.
fn fitted_decay(p_prev_ln: f64, p_last_ln: f64, z_prev: f64, z_last: f64) -> f64 {
    (p_prev_ln - p_last_ln) / (z_last / z_prev).ln()
}

/// Non-negative integrand in log form, nodes from `node(k)` (1-based,
/// strictly increasing, first panel is [0, node(1)]), analytic remainder
/// with error bound from `tail_from`.
pub fn oscillatory_log(
    f: &mut dyn FnMut(f64) -> LogReal,
    node: &mut dyn FnMut(u32) -> Result<f64>,
    tail_from: &mut dyn FnMut(f64) -> Result<(LogReal, LogReal)>,
    o: &OscOpts,
) -> Result<SemiResult<LogReal>> {
    let mut total = LogReal::ZERO;
    let mut err_w = LogReal::ZERO;
    let mut evals = 0usize;
    let mut prev = 0.0f64;
    let mut trace: Option<(f64, f64)> = None; // (panel ln, z) of previous panel
    let mut last: Option<(f64, f64)> = None;
    for k in 1..=o.max_panels {
        let zk = node(k)?;
        if !(zk > prev) {
            return Err(Error::Domain(format!("nodes not increasing: node({k}) = {zk}")));
        }
        let popts = QuadOpts {
            rel_tol: 0.5 * o.rel_tol,
            floor_ln: if total.is_zero() {
                o.floor_ln
            } else {
                (total.ln_abs() + (1e-4 * o.rel_tol).ln()).max(o.floor_ln)
            },
            max_depth: o.panel_depth,
            ..Default::default()
        };
        let q = integrate_log(f, prev, zk, &popts)?;
        evals += q.evals;
        total = total.add(q.value);
        err_w = err_w.add(q.value.mul(LogReal::from_f64(q.err_rel)));
        trace = last;
        last = if q.value.is_zero() { None } else { Some((q.value.ln_abs(), zk)) };
        if k >= 3 {
            let (tail, tail_err) = tail_from(zk)?;
            let with_tail = total.add(tail);
            let target = with_tail.mul(LogReal::from_f64(0.5 * o.rel_tol));
            if tail_err.ln_abs() <= target.ln_abs() {
                let err_rel = if with_tail.is_zero() {
                    0.0
                } else {
                    err_w.add(tail_err).div(with_tail).to_f64()
                };
                return Ok(SemiResult {
                    value: with_tail,
                    tail,
                    panels: k,
                    err_rel,
                    evals,
                });
            }
        }
        prev = zk;
    }
    match (trace, last) {
        (Some((p1, z1)), Some((p2, z2))) if fitted_decay(p1, p2, z1, z2) <= 1.05 => {
            Err(Error::Divergent(format!(
                "panel contributions decay like z^(-{:.3}) at z = {z2:.1}: integral diverges \
                 (or sits too close to its convergence threshold)",
                fitted_decay(p1, p2, z1, z2)
            )))
        }
        _ => Err(Error::ToleranceNotMet { best: total.to_f64(), err_rel: f64::NAN }),
    }
}

/// Signed integrand (entropy-type) in plain f64. Same contract as
/// [`oscillatory_log`]; the stopping scale is max(|total|, sum of |panel|)
/// so near-cancelling totals cannot stall the driver.
pub fn oscillatory_f64(
    f: &mut dyn FnMut(f64) -> f64,
    node: &mut dyn FnMut(u32) -> Result<f64>,
    tail_from: &mut dyn FnMut(f64) -> Result<(f64, f64)>,
    o: &OscOpts,
) -> Result<SemiResult<f64>> {
    let mut total = 0.0f64;
    let mut sum_abs = 0.0f64;
    let mut err_acc = 0.0f64;
    let mut evals = 0usize;
    let mut prev = 0.0f64;
    let mut trace: Option<(f64, f64)> = None;
    let mut last: Option<(f64, f64)> = None;
    for k in 1..=o.max_panels {
        let zk = node(k)?;
        if !(zk > prev) {
            return Err(Error::Domain(format!("nodes not increasing: node({k}) = {zk}")));
        }
        let popts = QuadOpts {
            rel_tol: 0.5 * o.rel_tol,
            abs_floor: (1e-4 * o.rel_tol * sum_abs).max(o.abs_floor),
            max_depth: o.panel_depth,
            ..Default::default()
        };
        let q = integrate_f64(f, prev, zk, &popts)?;
        evals += q.evals;
        total += q.value;
        sum_abs += q.value.abs();
        err_acc += q.err_abs;
        trace = last;
        last = if q.value == 0.0 { None } else { Some((q.value.abs().ln(), zk)) };
        if k >= 3 {
            let (tail, tail_err) = tail_from(zk)?;
            let scale = (total + tail).abs().max(0.2 * sum_abs);
            if tail_err.abs() <= 0.5 * o.rel_tol * scale {
                return Ok(SemiResult {
                    value: total + tail,
                    tail,
                    panels: k,
                    err_rel: (err_acc + tail_err.abs()) / scale.max(f64::MIN_POSITIVE),
                    evals,
                });
            }
        }
        prev = zk;
    }
    match (trace, last) {
        (Some((p1, z1)), Some((p2, z2))) if fitted_decay(p1, p2, z1, z2) <= 1.05 => {
            Err(Error::Divergent(format!(
                "panel contributions decay like z^(-{:.3}) at z = {z2:.1}: integral diverges \
                 (or sits too close to its convergence threshold)",
                fitted_decay(p1, p2, z1, z2)
            )))
        }
        _ => Err(Error::ToleranceNotMet { best: total, err_rel: f64::NAN }),
    }
}

/// Running integrals at each node: (z_k, int_0^{z_k} f), for convergence /
/// divergence trend inspection. No tail is added.
pub fn oscillatory_partials_log(
    f: &mut dyn FnMut(f64) -> LogReal,
    node: &mut dyn FnMut(u32) -> Result<f64>,
    panels: u32,
    o: &OscOpts,
) -> Result<Vec<(f64, LogReal)>> {
    let mut out = Vec::with_capacity(panels as usize);
    let mut total = LogReal::ZERO;
    let mut prev = 0.0f64;
    for k in 1..=panels {
        let zk = node(k)?;
        let popts = QuadOpts {
            rel_tol: 0.5 * o.rel_tol,
            floor_ln: if total.is_zero() {
                o.floor_ln
            } else {
                (total.ln_abs() + (1e-4 * o.rel_tol).ln()).max(o.floor_ln)
            },
            max_depth: o.panel_depth,
            ..Default::default()
        };
        let q = integrate_log(f, prev, zk, &popts)?;
        total = total.add(q.value);
        out.push((zk, total));
        prev = zk;
    }
    Ok(out)
}

/// Node generator for smooth (non-oscillatory) semi-infinite integrands:
/// geometric progression `first * ratio^(k-1)`.
pub fn geometric_nodes(first: f64, ratio: f64) -> impl FnMut(u32) -> Result<f64> {
    move |k: u32| Ok(first * ratio.powi(k as i32 - 1))
}
