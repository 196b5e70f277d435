//! Adaptive Gauss–Legendre integration on a finite interval, in two
//! arithmetic flavors:
//!
//! * [`integrate_f64`] — plain f64 values, possibly signed (entropy-type
//!   integrands, moments, derivative terms);
//! * [`integrate_log`] — non-negative integrands supplied and accumulated in
//!   log form, for density powers whose values or totals leave f64 range.
//!
//! Both bisect on the embedded GL16/GL32 error estimate. A segment is
//! accepted when its estimate meets `rel_tol`, or when its own value is
//! below the caller's negligibility floor (`abs_floor` / `floor_ln`). The
//! floor branch matters for integrands with self-similar endpoint behavior
//! like t^2 ln t, where the local relative error of any fixed rule is
//! constant under bisection and only the absolute contribution shrinks.

use super::gauss::{rule16, rule32};
use crate::error::{Error, Result};
use crate::specfun::LogReal;

#[derive(Clone, Copy, Debug)]
pub struct QuadOpts {
    /// target relative accuracy per segment (and hence of the total for
    /// non-negative integrands)
    pub rel_tol: f64,
    /// segments with |value| below this are accepted without refinement
    pub abs_floor: f64,
    /// log-engine counterpart of `abs_floor` (ln of the negligible scale)
    pub floor_ln: f64,
    pub max_depth: u32,
}

impl Default for QuadOpts {
    fn default() -> Self {
        QuadOpts { rel_tol: 1e-10, abs_floor: 0.0, floor_ln: f64::NEG_INFINITY, max_depth: 44 }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct QuadF64 {
    pub value: f64,
    /// accumulated |GL32-GL16| over accepted segments (conservative)
    pub err_abs: f64,
    pub evals: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct QuadLog {
    pub value: LogReal,
    /// error estimate relative to `value`
    pub err_rel: f64,
    pub evals: usize,
}

const MAX_EVALS: usize = 4_000_000;

struct AccF64 {
    sum: f64,
    sum_abs: f64,
    err_refinable: f64, // doubt in segments accepted on merit (or depth)
    err_floor: f64,     // doubt in segments accepted as negligible
    evals: usize,
}

fn seg_pair_f64(f: &mut dyn FnMut(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut i16v = 0.0;
    for (x, w) in rule16().nodes.iter().zip(&rule16().weights) {
        i16v += w * f(c + h * x);
    }
    let mut i32v = 0.0;
    for (x, w) in rule32().nodes.iter().zip(&rule32().weights) {
        i32v += w * f(c + h * x);
    }
    (h * i16v, h * i32v)
}

fn rec_f64(
    f: &mut dyn FnMut(f64) -> f64,
    a: f64,
    b: f64,
    opts: &QuadOpts,
    depth: u32,
    acc: &mut AccF64,
) -> Result<()> {
    let (coarse, fine) = seg_pair_f64(f, a, b);
    acc.evals += 48;
    if acc.evals > MAX_EVALS {
        return Err(Error::ToleranceNotMet { best: acc.sum, err_rel: f64::NAN });
    }
    if !fine.is_finite() {
        return Err(Error::Domain(format!("integrand not finite on [{a}, {b}]")));
    }
    let err = (fine - coarse).abs();
    if err <= opts.rel_tol * fine.abs() || depth >= opts.max_depth {
        acc.sum += fine;
        acc.sum_abs += fine.abs();
        acc.err_refinable += err;
        return Ok(());
    }
    if fine.abs() <= opts.abs_floor {
        acc.sum += fine;
        acc.sum_abs += fine.abs();
        acc.err_floor += err.min(fine.abs().max(opts.abs_floor));
        return Ok(());
    }
    let m = 0.5 * (a + b);
    rec_f64(f, a, m, opts, depth + 1, acc)?;
    rec_f64(f, m, b, opts, depth + 1, acc)
}

/// Adaptive integral of a plain-f64 integrand over [a, b].
pub fn integrate_f64(
    f: &mut dyn FnMut(f64) -> f64,
    a: f64,
    b: f64,
    opts: &QuadOpts,
) -> Result<QuadF64> {
    if !(a <= b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!("bad interval [{a}, {b}]")));
    }
    if a == b {
        return Ok(QuadF64 { value: 0.0, err_abs: 0.0, evals: 0 });
    }
    let mut acc = AccF64 { sum: 0.0, sum_abs: 0.0, err_refinable: 0.0, err_floor: 0.0, evals: 0 };
    rec_f64(f, a, b, opts, 0, &mut acc)?;
    // cancellation leaves |sum| << sum_abs; judge accuracy on the gross scale
    let scale = acc
        .sum
        .abs()
        .max(0.1 * acc.sum_abs)
        .max(opts.abs_floor)
        .max(f64::MIN_POSITIVE);
    if acc.err_refinable > 50.0 * opts.rel_tol * scale {
        return Err(Error::ToleranceNotMet {
            best: acc.sum,
            err_rel: acc.err_refinable / scale,
        });
    }
    Ok(QuadF64 { value: acc.sum, err_abs: acc.err_refinable + acc.err_floor, evals: acc.evals })
}

struct AccLog {
    sum: LogReal,
    err_refinable: LogReal, // sum of err_rel_seg * seg_value
    err_floor: LogReal,
    evals: usize,
}

fn seg_pair_log(f: &mut dyn FnMut(f64) -> LogReal, a: f64, b: f64) -> (LogReal, LogReal) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let v16: Vec<LogReal> = rule16().nodes.iter().map(|x| f(c + h * x)).collect();
    let v32: Vec<LogReal> = rule32().nodes.iter().map(|x| f(c + h * x)).collect();
    let m = v16
        .iter()
        .chain(&v32)
        .map(LogReal::ln_abs)
        .fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return (LogReal::ZERO, LogReal::ZERO);
    }
    let scale = |vals: &[LogReal], ws: &[f64]| -> f64 {
        vals.iter()
            .zip(ws)
            .map(|(v, w)| w * v.sign() as f64 * (v.ln_abs() - m).exp())
            .sum()
    };
    let s16 = scale(&v16, &rule16().weights);
    let s32 = scale(&v32, &rule32().weights);
    let mk = |s: f64| {
        if s <= 0.0 {
            // non-negative integrand: a negative sum is pure rounding noise
            LogReal::ZERO
        } else {
            LogReal::from_ln(m + (h * s).ln())
        }
    };
    (mk(s16), mk(s32))
}

fn rec_log(
    f: &mut dyn FnMut(f64) -> LogReal,
    a: f64,
    b: f64,
    opts: &QuadOpts,
    depth: u32,
    acc: &mut AccLog,
) -> Result<()> {
    let (coarse, fine) = seg_pair_log(f, a, b);
    acc.evals += 48;
    if acc.evals > MAX_EVALS {
        return Err(Error::ToleranceNotMet { best: acc.sum.to_f64(), err_rel: f64::NAN });
    }
    let err_rel = if fine.is_zero() {
        if coarse.is_zero() { 0.0 } else { 1.0 }
    } else {
        coarse.sub(fine).div(fine).to_f64().abs()
    };
    if err_rel <= opts.rel_tol || depth >= opts.max_depth {
        acc.sum = acc.sum.add(fine);
        acc.err_refinable = acc.err_refinable.add(fine.mul(LogReal::from_f64(err_rel)));
        return Ok(());
    }
    if fine.ln_abs() <= opts.floor_ln {
        acc.sum = acc.sum.add(fine);
        acc.err_floor = acc.err_floor.add(fine.mul(LogReal::from_f64(err_rel.min(1.0))));
        return Ok(());
    }
    let m = 0.5 * (a + b);
    rec_log(f, a, m, opts, depth + 1, acc)?;
    rec_log(f, m, b, opts, depth + 1, acc)
}

/// Adaptive integral of a non-negative integrand given in log form.
pub fn integrate_log(
    f: &mut dyn FnMut(f64) -> LogReal,
    a: f64,
    b: f64,
    opts: &QuadOpts,
) -> Result<QuadLog> {
    if !(a <= b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!("bad interval [{a}, {b}]")));
    }
    if a == b {
        return Ok(QuadLog { value: LogReal::ZERO, err_rel: 0.0, evals: 0 });
    }
    let mut acc = AccLog {
        sum: LogReal::ZERO,
        err_refinable: LogReal::ZERO,
        err_floor: LogReal::ZERO,
        evals: 0,
    };
    rec_log(f, a, b, opts, 0, &mut acc)?;
    if acc.sum.is_zero() {
        return Ok(QuadLog { value: LogReal::ZERO, err_rel: 0.0, evals: acc.evals });
    }
    let gate = acc.err_refinable.div(acc.sum).to_f64().abs();
    if gate > 50.0 * opts.rel_tol {
        return Err(Error::ToleranceNotMet { best: acc.sum.to_f64(), err_rel: gate });
    }
    let err_rel = acc.err_refinable.add(acc.err_floor).div(acc.sum).to_f64().abs();
    Ok(QuadLog { value: acc.sum, err_rel, evals: acc.evals })
}
