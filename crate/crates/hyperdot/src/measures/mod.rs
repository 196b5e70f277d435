//! Information measures of a stationary state's position and momentum
//! densities: Shannon and Renyi entropies, Tsallis functionals, Onicescu
//! energies, Fisher informations, and the complexity products built from
//! them.
//!
//! Conventions. For l = 0 the measures describe the full d-dimensional
//! densities (the uniform angular factor 1/Omega_d is folded in); for l > 0
//! the angular part is left out and results describe the radial density with
//! respect to the x^(d-1) dx measure — such values carry `radial_only`
//! semantics. The physical length scale of the spec shifts entropies by
//! +/- d ln(length) and rescales Fisher/Onicescu values, leaving every
//! uncertainty sum and product invariant.

pub mod density;

use crate::error::{Error, Result};
use crate::specfun::LogReal;
use crate::systems::angular::ln_sphere_area;
use crate::systems::{QuantumNumbers, Space, SystemKind, SystemSpec};

/// Accuracy knobs for the quadrature behind the measures.
#[derive(Clone, Copy, Debug)]
pub struct EvalOpts {
    /// target relative tolerance of each radial integral (oscillatory
    /// half-line integrals run at 10x this value)
    pub rel_tol: f64,
}

impl Default for EvalOpts {
    fn default() -> Self {
        EvalOpts { rel_tol: 1e-10 }
    }
}

/// How a Renyi entropy evaluation ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenyiStatus {
    /// finite value
    Finite,
    /// the defining integral has no finite value for this state (e.g. the
    /// order-0 limit of an unbounded support)
    Diverged,
    /// momentum-space order at or below the convergence threshold
    /// d / (momentum decay exponent)
    BelowThreshold,
}

/// One evaluated Renyi entropy point.
#[derive(Clone, Copy, Debug)]
pub struct RenyiPoint {
    pub alpha: f64,
    pub space: Space,
    /// entropy value; +inf when not finite
    pub value: f64,
    pub status: RenyiStatus,
    /// true for l > 0, where the angular share is not included
    pub radial_only: bool,
}

/// Convergence thresholds of the momentum-space Renyi entropy: the first
/// element is alpha_TH (R_gamma(alpha) finite only for alpha > alpha_TH),
/// the second the upper end of the conjugated-sum domain (None = infinity).
pub fn thresholds(spec: &SystemSpec, l: u32) -> (f64, Option<f64>) {
    let d = spec.d as f64;
    match spec.kind {
        SystemKind::DirichletDot => (
            d / (d + 3.0),
            if spec.d > 3 { Some(d / (d - 3.0)) } else { None },
        ),
        SystemKind::NeumannDot => (d / (d + 1.0), Some(d / (d - 1.0))),
        SystemKind::Hydrogen => (0.5 * d / (d + l as f64 + 1.0), None),
    }
}

/// Additive constant folded into every entropy-like value: the uniform
/// angular share (l = 0 only) plus the length-scale shift of the space.
fn entropy_offset(spec: &SystemSpec, qn: QuantumNumbers, space: Space) -> f64 {
    let angular = if qn.l == 0 { ln_sphere_area(spec.d) } else { 0.0 };
    let scale = spec.d as f64 * spec.length.ln();
    angular
        + match space {
            Space::Position => scale,
            Space::Momentum => -scale,
        }
}

/// Shannon entropy of the state's density in the requested space.
pub fn shannon(
    spec: &SystemSpec,
    qn: QuantumNumbers,
    space: Space,
    opts: &EvalOpts,
) -> Result<f64> {
    let p = spec.profile(qn, space)?;
    Ok(entropy_offset(spec, qn, space) + density::entropy_radial(&p, opts.rel_tol)?)
}

/// Renyi entropy of order alpha (alpha >= 0, +inf allowed).
pub fn renyi(
    spec: &SystemSpec,
    qn: QuantumNumbers,
    space: Space,
    alpha: f64,
    opts: &EvalOpts,
) -> Result<RenyiPoint> {
    if alpha.is_nan() || alpha < 0.0 {
        return Err(Error::Domain(format!("Renyi order must be >= 0, got {alpha}")));
    }
    let radial_only = qn.l > 0;
    let point = |value: f64, status: RenyiStatus| RenyiPoint {
        alpha,
        space,
        value,
        status,
        radial_only,
    };
    if space == Space::Momentum {
        let (alpha_th, _) = thresholds(spec, qn.l);
        if alpha <= alpha_th {
            return Ok(point(f64::INFINITY, RenyiStatus::BelowThreshold));
        }
    }
    let offset = entropy_offset(spec, qn, space);
    if alpha == 0.0 {
        // position space only (momentum was caught above): the log of the
        // support volume, infinite for the ion
        return Ok(match spec.kind {
            SystemKind::Hydrogen => point(f64::INFINITY, RenyiStatus::Diverged),
            _ => point(offset - (spec.d as f64).ln(), RenyiStatus::Finite),
        });
    }
    let p = spec.profile(qn, space)?;
    if alpha.is_infinite() {
        let sup = density::sup_density_ln(&p)?;
        return Ok(point(offset - sup.ln_abs(), RenyiStatus::Finite));
    }
    if (alpha - 1.0).abs() <= 1e-6 {
        // the order-1 limit is the Shannon entropy; nearby orders use the
        // variance expansion R(alpha) = S - (alpha - 1) Var[ln rho] / 2,
        // which is immune to the 1/(1 - alpha) cancellation
        let s_rad = density::entropy_radial(&p, opts.rel_tol)?;
        if alpha == 1.0 {
            return Ok(point(offset + s_rad, RenyiStatus::Finite));
        }
        let m2 = density::entropy_square_radial(&p, (opts.rel_tol * 100.0).min(1e-7))?;
        let var = m2 - s_rad * s_rad;
        return Ok(point(
            offset + s_rad - 0.5 * (alpha - 1.0) * var,
            RenyiStatus::Finite,
        ));
    }
    let i = density::power_integral_ln(&p, alpha, opts.rel_tol)?;
    Ok(point(offset + i.ln_abs() / (1.0 - alpha), RenyiStatus::Finite))
}

/// Tsallis functional of order alpha (finite, > 0) together with the Renyi
/// point it was derived from. The order-1 value is the Shannon entropy.
pub fn tsallis(
    spec: &SystemSpec,
    qn: QuantumNumbers,
    space: Space,
    alpha: f64,
    opts: &EvalOpts,
) -> Result<(f64, RenyiPoint)> {
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(Error::Domain(format!(
            "Tsallis order must be finite and positive, got {alpha}"
        )));
    }
    let point = renyi(spec, qn, space, alpha, opts)?;
    if point.status != RenyiStatus::Finite {
        return Ok((f64::INFINITY, point));
    }
    if alpha == 1.0 {
        return Ok((point.value, point));
    }
    // int rho^alpha = exp((1 - alpha) R)
    let t = f64::exp_m1((1.0 - alpha) * point.value) / (1.0 - alpha);
    Ok((t, point))
}

/// Onicescu energy (disequilibrium) `int rho^2` in the requested space, in
/// log form — the values collapse double-exponentially with the dimension.
pub fn onicescu(
    spec: &SystemSpec,
    qn: QuantumNumbers,
    space: Space,
    opts: &EvalOpts,
) -> Result<LogReal> {
    let p = spec.profile(qn, space)?;
    let i = density::power_integral_ln(&p, 2.0, opts.rel_tol)?;
    Ok(i.mul(LogReal::from_ln(-entropy_offset(spec, qn, space))))
}

/// Fisher information of the state in the requested space (m = 0 sector of
/// a central potential). Position values come from the kinetic identity
/// (4 <k^2>, closed in the eigenvalue), momentum values from the second
/// position moment 4 <x^2>.
pub fn fisher(
    spec: &SystemSpec,
    qn: QuantumNumbers,
    space: Space,
    opts: &EvalOpts,
) -> Result<f64> {
    let l2 = spec.length * spec.length;
    match space {
        Space::Position => {
            let e = spec.energy(qn)?;
            let base = match spec.kind {
                // <k^2> equals the eigenvalue of the free confined problem
                SystemKind::DirichletDot | SystemKind::NeumannDot => 4.0 * e,
                // virial: <k^2> = -2 epsilon = 1/(4 lambda^2)
                SystemKind::Hydrogen => -8.0 * e,
            };
            Ok(base / l2)
        }
        Space::Momentum => {
            let pos = spec.profile(qn, Space::Position)?;
            Ok(4.0 * density::moment(&pos, 2.0, opts.rel_tol)? * l2)
        }
    }
}

/// Position-space Fisher information evaluated the long way, as the
/// gradient functional 4 [ int (dR/dx)^2 x^(d-1) dx
/// + l (l + d - 2) int R^2 x^(d-3) dx ]. Cross-checks [`fisher`].
pub fn fisher_gradient(spec: &SystemSpec, qn: QuantumNumbers, opts: &EvalOpts) -> Result<f64> {
    let p = spec.profile(qn, Space::Position)?;
    let grad = density::gradient_square(&p, opts.rel_tol)?;
    let cf = qn.l as f64 * (qn.l as f64 + spec.d as f64 - 2.0);
    let centrifugal = if cf == 0.0 {
        0.0
    } else {
        cf * density::moment(&p, -2.0, opts.rel_tol)?
    };
    Ok(4.0 * (grad + centrifugal) / (spec.length * spec.length))
}

/// The momentum-space Fisher values that reduce to closed forms, plus their
/// high-index/high-dimension approximations.
#[derive(Clone, Copy, Debug)]
pub enum FisherClosedForm {
    /// hard wall, d = 3, l = 0, any n: (2/3)(2 n^2 pi^2 - 3)/(n^2 pi^2)
    HardWallMomentum3d { n: u32 },
    /// the same quantity written as its large-n expansion 4/3 - 2/(n^2 pi^2)
    HardWallMomentum3dHighN { n: u32 },
    /// d = 4, l = 0: exactly 4/3 (hard wall any n; reflecting wall n >= 2)
    BallMomentum4d,
    /// reflecting wall ground state: 4 d/(d + 2)
    ReflectingGroundMomentum { d: u32 },
    /// its large-d expansion 4 (1 - 2/d)
    ReflectingGroundMomentumHighD { d: u32 },
}

pub fn fisher_closed_form(form: FisherClosedForm) -> f64 {
    use std::f64::consts::PI;
    match form {
        FisherClosedForm::HardWallMomentum3d { n } => {
            let np2 = (n as f64 * PI).powi(2);
            2.0 / 3.0 * (2.0 * np2 - 3.0) / np2
        }
        FisherClosedForm::HardWallMomentum3dHighN { n } => {
            4.0 / 3.0 - 2.0 / (n as f64 * PI).powi(2)
        }
        FisherClosedForm::BallMomentum4d => 4.0 / 3.0,
        FisherClosedForm::ReflectingGroundMomentum { d } => {
            4.0 * d as f64 / (d as f64 + 2.0)
        }
        FisherClosedForm::ReflectingGroundMomentumHighD { d } => 4.0 * (1.0 - 2.0 / d as f64),
    }
}

/// Every scalar measure of one state, both spaces, at the spec's length.
#[derive(Clone, Debug)]
pub struct MeasureReport {
    pub spec: SystemSpec,
    pub qn: QuantumNumbers,
    /// true for l > 0: entropic values describe the radial density only
    pub radial_only: bool,
    pub shannon_rho: f64,
    pub shannon_gamma: f64,
    pub fisher_rho: f64,
    pub fisher_gamma: f64,
    pub onicescu_rho: LogReal,
    pub onicescu_gamma: LogReal,
}

impl MeasureReport {
    pub fn shannon_sum(&self) -> f64 {
        self.shannon_rho + self.shannon_gamma
    }

    /// Entropic uncertainty bound d (1 + ln pi), which the Shannon sum obeys.
    pub fn shannon_bound(&self) -> f64 {
        self.spec.d as f64 * (1.0 + std::f64::consts::PI.ln())
    }

    pub fn fisher_product(&self) -> f64 {
        self.fisher_rho * self.fisher_gamma
    }

    pub fn onicescu_product(&self) -> LogReal {
        self.onicescu_rho.mul(self.onicescu_gamma)
    }

    pub fn csv_header() -> &'static str {
        "system,d,n,l,shannon_rho,shannon_gamma,shannon_sum,shannon_bound,\
         fisher_rho,fisher_gamma,fisher_product,onicescu_rho,onicescu_gamma,onicescu_product"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.spec.label(),
            self.spec.d,
            self.qn.n,
            self.qn.l,
            format_paper(self.shannon_rho),
            format_paper(self.shannon_gamma),
            format_paper(self.shannon_sum()),
            format_paper(self.shannon_bound()),
            format_paper(self.fisher_rho),
            format_paper(self.fisher_gamma),
            format_paper(self.fisher_product()),
            format_paper_log(&self.onicescu_rho),
            format_paper_log(&self.onicescu_gamma),
            format_paper_log(&self.onicescu_product()),
        )
    }
}

/// Evaluate the full set of scalar measures for one state.
pub fn measure_report(
    spec: &SystemSpec,
    qn: QuantumNumbers,
    opts: &EvalOpts,
) -> Result<MeasureReport> {
    Ok(MeasureReport {
        spec: *spec,
        qn,
        radial_only: qn.l > 0,
        shannon_rho: shannon(spec, qn, Space::Position, opts)?,
        shannon_gamma: shannon(spec, qn, Space::Momentum, opts)?,
        fisher_rho: fisher(spec, qn, Space::Position, opts)?,
        fisher_gamma: fisher(spec, qn, Space::Momentum, opts)?,
        onicescu_rho: onicescu(spec, qn, Space::Position, opts)?,
        onicescu_gamma: onicescu(spec, qn, Space::Momentum, opts)?,
    })
}

/// Statistical complexity products of one state.
#[derive(Clone, Debug)]
pub struct ComplexityReport {
    /// e^S * O per space; >= 1, with equality only for a uniform density
    pub shape_rho: LogReal,
    pub shape_gamma: LogReal,
    /// (1/(2 pi e)) e^(2S/d) * I per space
    pub fisher_shannon_rho: f64,
    pub fisher_shannon_gamma: f64,
    /// e^R(alpha) * O per space, when a finite order was requested
    pub renyi_shape_rho: Option<LogReal>,
    pub renyi_shape_gamma: Option<LogReal>,
    pub alpha: Option<f64>,
}

pub fn complexity(
    report: &MeasureReport,
    alpha: Option<f64>,
    opts: &EvalOpts,
) -> Result<ComplexityReport> {
    let d = report.spec.d as f64;
    let fs_norm = 1.0 / (2.0 * std::f64::consts::PI * std::f64::consts::E);
    let renyi_shape = |space: Space, o: &LogReal| -> Result<Option<LogReal>> {
        match alpha {
            None => Ok(None),
            Some(a) => {
                let pt = renyi(&report.spec, report.qn, space, a, opts)?;
                if pt.status != RenyiStatus::Finite {
                    return Ok(None);
                }
                Ok(Some(LogReal::from_ln(pt.value).mul(*o)))
            }
        }
    };
    Ok(ComplexityReport {
        shape_rho: LogReal::from_ln(report.shannon_rho).mul(report.onicescu_rho),
        shape_gamma: LogReal::from_ln(report.shannon_gamma).mul(report.onicescu_gamma),
        fisher_shannon_rho: fs_norm * (2.0 * report.shannon_rho / d).exp() * report.fisher_rho,
        fisher_shannon_gamma: fs_norm
            * (2.0 * report.shannon_gamma / d).exp()
            * report.fisher_gamma,
        renyi_shape_rho: renyi_shape(Space::Position, &report.onicescu_rho)?,
        renyi_shape_gamma: renyi_shape(Space::Momentum, &report.onicescu_gamma)?,
        alpha,
    })
}

/// Format a value the way the reference tables print them: five significant
/// digits, plain decimal inside [0.1, 1000), otherwise mantissa-exponent
/// form `0.18494E-87`.
pub fn format_paper(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return if v.is_nan() {
            "nan".to_string()
        } else if v > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let a = v.abs();
    if (0.1..1000.0).contains(&a) {
        let prec = (4 - a.log10().floor() as i32).max(0) as usize;
        format!("{v:.prec$}")
    } else {
        format!("{}", LogReal::from_f64(v))
    }
}

/// Same convention for log-domain values.
pub fn format_paper_log(v: &LogReal) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    let a = v.ln_abs();
    if (0.1f64.ln()..1000.0f64.ln()).contains(&a) {
        format_paper(v.to_f64())
    } else {
        format!("{v}")
    }
}
