//! Density integrals of a single radial profile: power integrals, entropy
//! integrals, plain moments, gradient norms, and the density supremum. Each
//! routine routes the profile to the right machinery — adaptive panels
//! between density zeros on a finite support, the node-aligned oscillatory
//! driver with analytic tails on the half-line, or a truncated range when
//! the density decays exponentially.
//!
//! Everything here is radial and dimensionless: integrands carry the volume
//! weight x^(d-1) (shifted by the moment order where applicable) and no
//! angular factor. Callers fold in angular constants and length scales.

use crate::error::{Error, Result};
use crate::quadrature::{
    integrate_f64, integrate_log, oscillatory_f64, oscillatory_log, OscOpts, QuadOpts,
};
use crate::specfun::LogReal;
use crate::systems::Profile;

/// Half-line profiles with an exponential density tail are cut where the
/// integrand of `int rho^alpha x^(extra) dx` drops hopelessly below any
/// tolerance in use (~70 decades past the last turning point).
fn power_support_cut(p: &Profile, alpha: f64, extra: f64) -> Option<f64> {
    let t = p.exp_tail()?;
    let poly = alpha * t.degree + extra.max(0.0);
    Some(t.scale / alpha * (160.0 + 4.0 * poly))
}

/// Panel edges of a finite or truncated support: 0, the interior density
/// zeros, and the upper end.
fn support_edges(p: &Profile, upper: f64) -> Result<Vec<f64>> {
    let mut edges = vec![0.0];
    edges.extend(p.interior_zeros()?.into_iter().filter(|x| *x < upper));
    edges.push(upper);
    Ok(edges)
}

fn finite_opts(rel_tol: f64) -> QuadOpts {
    QuadOpts { rel_tol, ..Default::default() }
}

fn osc_opts(rel_tol: f64) -> OscOpts {
    OscOpts { rel_tol: 10.0 * rel_tol, ..Default::default() }
}

/// Cheap low-accuracy pass whose value seeds a negligibility floor for the
/// full-accuracy pass. Fractional density powers have |t|^(2 alpha) cusps at
/// every profile zero, where the bisection rule's coarse/fine comparison is
/// eventually defeated by evaluation noise and would otherwise refine the
/// cusp neighborhood to the noise scale. A floor a few orders below
/// rel_tol * total lets those segments be accepted long before that.
fn estimate_opts() -> QuadOpts {
    QuadOpts { rel_tol: 1e-3, max_depth: 20, ..Default::default() }
}

fn floor_from_estimate(est: LogReal, rel_tol: f64) -> f64 {
    if est.is_zero() {
        f64::NEG_INFINITY
    } else {
        est.ln_abs() + (1e-4 * rel_tol).ln()
    }
}

/// `int |profile|^(2 alpha) x^(d-1) dx` over the support, in log form.
/// Errors with [`Error::Divergent`] when the large-argument tail does not
/// decay fast enough (momentum space, alpha at or below the threshold).
pub fn power_integral_ln(p: &Profile, alpha: f64, rel_tol: f64) -> Result<LogReal> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::Domain(format!(
            "power integral needs finite alpha > 0, got {alpha}"
        )));
    }
    let w = p.dim() as f64 - 1.0;
    let mut f = |x: f64| {
        p.value_ln(x)
            .abs()
            .powf(2.0 * alpha)
            .mul(LogReal::from_ln(w * x.ln()))
    };
    if let Some(upper) = p.upper_limit().or_else(|| power_support_cut(p, alpha, w)) {
        let edges = support_edges(p, upper)?;
        let mut est = LogReal::ZERO;
        for pair in edges.windows(2) {
            est = est.add(integrate_log(&mut f, pair[0], pair[1], &estimate_opts())?.value);
        }
        let opts = QuadOpts {
            rel_tol,
            floor_ln: floor_from_estimate(est, rel_tol),
            ..Default::default()
        };
        let mut total = LogReal::ZERO;
        for pair in edges.windows(2) {
            total = total.add(integrate_log(&mut f, pair[0], pair[1], &opts)?.value);
        }
        Ok(total)
    } else {
        let env = p
            .envelope()
            .ok_or_else(|| Error::Domain("half-line profile without decay data".into()))?;
        let mut opts = osc_opts(rel_tol);
        opts.floor_ln = floor_from_estimate(first_panels_ln(p, &mut f, 3)?, opts.rel_tol);
        let r = oscillatory_log(
            &mut f,
            &mut |k: u32| p.node(k),
            &mut |z: f64| env.density_power_tail(alpha, w, z),
            &opts,
        )?;
        Ok(r.value)
    }
}

/// Estimate of the integral over the first few oscillation panels (a lower
/// bound on the half-line total up to the loose-pass accuracy), to seed
/// panel floors before the driver's running total can.
fn first_panels_ln(
    p: &Profile,
    f: &mut dyn FnMut(f64) -> LogReal,
    panels: u32,
) -> Result<LogReal> {
    let mut est = LogReal::ZERO;
    let mut lo = 0.0f64;
    for k in 1..=panels {
        let hi = p.node(k)?;
        est = est.add(integrate_log(f, lo, hi, &estimate_opts())?.value);
        lo = hi;
    }
    Ok(est)
}

/// Running cutoffs and partial values of the half-line power integral after
/// 1..=panels oscillation panels, with no tail correction. Exposes how (and
/// whether) the integral settles as the cutoff grows.
pub fn power_partial_sums(
    p: &Profile,
    alpha: f64,
    panels: u32,
    rel_tol: f64,
) -> Result<Vec<(f64, LogReal)>> {
    if p.upper_limit().is_some() || p.exp_tail().is_some() {
        return Err(Error::Domain(
            "partial sums are for half-line power-tailed profiles".into(),
        ));
    }
    let w = p.dim() as f64 - 1.0;
    let mut f = |x: f64| {
        p.value_ln(x)
            .abs()
            .powf(2.0 * alpha)
            .mul(LogReal::from_ln(w * x.ln()))
    };
    let mut opts = osc_opts(rel_tol);
    opts.floor_ln = floor_from_estimate(first_panels_ln(p, &mut f, 2)?, opts.rel_tol);
    crate::quadrature::oscillatory_partials_log(&mut f, &mut |k: u32| p.node(k), panels, &opts)
}

/// Radial Shannon integral `-int q ln q x^(d-1) dx` with q the squared
/// profile (no volume weight inside the logarithm).
pub fn entropy_radial(p: &Profile, rel_tol: f64) -> Result<f64> {
    let w = p.dim() as f64 - 1.0;
    let mut f = |x: f64| {
        let v = p.value_ln(x);
        if v.is_zero() || x == 0.0 {
            return 0.0;
        }
        let q = v.powf(2.0).mul(LogReal::from_ln(w * x.ln())).to_f64();
        -q * 2.0 * v.ln_abs()
    };
    // entropy integrands have t^2 ln t cusps at every density zero: give the
    // panels a small absolute floor so the cusp neighborhoods can be
    // accepted instead of endlessly re-bisected
    let floor = 1e-4 * rel_tol;
    if let Some(upper) = p.upper_limit().or_else(|| power_support_cut(p, 1.0, w + 8.0)) {
        let opts = QuadOpts { rel_tol, abs_floor: floor, ..Default::default() };
        let mut total = 0.0;
        for pair in support_edges(p, upper)?.windows(2) {
            total += integrate_f64(&mut f, pair[0], pair[1], &opts)?.value;
        }
        Ok(total)
    } else {
        let env = p
            .envelope()
            .ok_or_else(|| Error::Domain("half-line profile without decay data".into()))?;
        let mut est_abs = 0.0f64;
        let mut lo = 0.0f64;
        for k in 1..=3u32 {
            let hi = p.node(k)?;
            est_abs += integrate_f64(&mut |x: f64| f(x).abs(), lo, hi, &estimate_opts())?.value;
            lo = hi;
        }
        let mut opts = osc_opts(rel_tol);
        opts.abs_floor = 1e-4 * opts.rel_tol * est_abs;
        let r = oscillatory_f64(
            &mut f,
            &mut |k: u32| p.node(k),
            &mut |z: f64| env.entropy_tail(w, z),
            &opts,
        )?;
        Ok(r.value)
    }
}

/// Second logarithmic moment `int q (ln q)^2 x^(d-1) dx` of the squared
/// profile. Used only for the small `|alpha - 1|` expansion of the Renyi
/// entropy, so moderate accuracy suffices; half-line versions run panels
/// until three consecutive ones stop mattering.
pub fn entropy_square_radial(p: &Profile, rel_tol: f64) -> Result<f64> {
    let w = p.dim() as f64 - 1.0;
    let mut f = |x: f64| {
        let v = p.value_ln(x);
        if v.is_zero() || x == 0.0 {
            return 0.0;
        }
        let q = v.powf(2.0).mul(LogReal::from_ln(w * x.ln())).to_f64();
        let lnq = 2.0 * v.ln_abs();
        q * lnq * lnq
    };
    let opts = QuadOpts { rel_tol, abs_floor: 1e-4 * rel_tol, ..Default::default() };
    if let Some(upper) = p.upper_limit().or_else(|| power_support_cut(p, 1.0, w + 12.0)) {
        let mut total = 0.0;
        for pair in support_edges(p, upper)?.windows(2) {
            total += integrate_f64(&mut f, pair[0], pair[1], &opts)?.value;
        }
        Ok(total)
    } else {
        let mut total = 0.0f64;
        let mut calm = 0u32;
        let mut prev = 0.0f64;
        for k in 1..=600u32 {
            let zk = p.node(k)?;
            let q = integrate_f64(&mut f, prev, zk, &opts)?;
            total += q.value;
            prev = zk;
            if k > 8 && q.value.abs() <= 1e-9 * total.abs().max(1e-300) {
                calm += 1;
                if calm >= 3 {
                    return Ok(total);
                }
            } else {
                calm = 0;
            }
        }
        Err(Error::Convergence {
            context: "entropy_square_radial",
            detail: "panel contributions kept mattering after 600 panels".into(),
        })
    }
}

/// Plain density moment `int profile^2 x^(d-1+order) dx` on a finite or
/// exponentially decaying support (position space).
pub fn moment(p: &Profile, order: f64, rel_tol: f64) -> Result<f64> {
    let w = p.dim() as f64 - 1.0 + order;
    let upper = p
        .upper_limit()
        .or_else(|| power_support_cut(p, 1.0, w))
        .ok_or_else(|| {
            Error::Domain("density moments are for finite/exponential supports".into())
        })?;
    let mut f = |x: f64| {
        if x == 0.0 {
            return LogReal::ZERO;
        }
        p.value_ln(x).powf(2.0).mul(LogReal::from_ln(w * x.ln()))
    };
    let opts = finite_opts(rel_tol);
    let mut total = LogReal::ZERO;
    for pair in support_edges(p, upper)?.windows(2) {
        total = total.add(integrate_log(&mut f, pair[0], pair[1], &opts)?.value);
    }
    Ok(total.to_f64())
}

/// `int (d profile / dx)^2 x^(d-1) dx` — the radial part of the gradient
/// functional (position space).
pub fn gradient_square(p: &Profile, rel_tol: f64) -> Result<f64> {
    let w = p.dim() as f64 - 1.0;
    let upper = p
        .upper_limit()
        .or_else(|| power_support_cut(p, 1.0, w + 4.0))
        .ok_or_else(|| {
            Error::Domain("gradient integrals are for finite/exponential supports".into())
        })?;
    let mut f = |x: f64| {
        if x == 0.0 {
            return LogReal::ZERO;
        }
        p.deriv_ln(x).powf(2.0).mul(LogReal::from_ln(w * x.ln()))
    };
    let opts = finite_opts(rel_tol);
    let mut total = LogReal::ZERO;
    for pair in support_edges(p, upper)?.windows(2) {
        total = total.add(integrate_log(&mut f, pair[0], pair[1], &opts)?.value);
    }
    Ok(total.to_f64())
}

fn golden_max(g: &mut dyn FnMut(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut g1 = g(x1);
    let mut g2 = g(x2);
    for _ in 0..80 {
        if g1 < g2 {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + INV_PHI * (b - a);
            g2 = g(x2);
        } else {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - INV_PHI * (b - a);
            g1 = g(x1);
        }
        if b - a <= 1e-13 * b.abs().max(1.0) {
            break;
        }
    }
    g1.max(g2)
}

fn scan_max(p: &Profile, lo: f64, hi: f64, points: u32) -> f64 {
    let mut best_ln = f64::NEG_INFINITY;
    let mut best_x = lo;
    for i in 0..=points {
        let x = lo + (hi - lo) * i as f64 / points as f64;
        let v = p.value_ln(x).ln_abs();
        if v > best_ln {
            best_ln = v;
            best_x = x;
        }
    }
    let step = (hi - lo) / points as f64;
    let a = (best_x - step).max(lo);
    let b = (best_x + step).min(hi);
    golden_max(&mut |x: f64| p.value_ln(x).ln_abs(), a, b).max(best_ln)
}

/// Supremum of the squared profile over its support, in log form. (The
/// density supremum without volume weight or angular factor.)
pub fn sup_density_ln(p: &Profile) -> Result<LogReal> {
    const POINTS: u32 = 4096;
    let ln_max = if let Some(upper) = p.upper_limit() {
        scan_max(p, 0.0, upper, POINTS)
    } else if let Some(t) = p.exp_tail() {
        scan_max(p, 0.0, crate::systems::exp_support_cut(&t), POINTS)
    } else {
        let env = p
            .envelope()
            .ok_or_else(|| Error::Domain("half-line profile without decay data".into()))?;
        let mut hi = p.node(12)?;
        let mut best = scan_max(p, 0.0, hi, POINTS);
        // the envelope bounds the squared profile at large argument, so stop
        // extending once it falls below the best lobe already seen
        while env.ln_c - env.s * hi.ln() + env.drift / (hi * hi) > 2.0 * best && hi < 1e8 {
            let next = 2.0 * hi;
            best = best.max(scan_max(p, hi, next, POINTS));
            hi = next;
        }
        best
    };
    Ok(LogReal::from_ln(2.0 * ln_max))
}
