//! Position/momentum uncertainty relations built on the entropy machinery:
//! the Shannon sum bound, the conjugated-order Renyi relation, the
//! Sobolev-type Tsallis inequality, and closed hydrogen ground-state forms
//! used to study how the Renyi sum depends on its order.
//!
//! All relation checks cover hyperspherically symmetric states (l = 0),
//! where position and momentum densities carry the same uniform angular
//! factor and the entropic sums are complete. For l > 0 the angular share
//! of the entropies is outside this library's scope and the checks refuse
//! to run rather than compare radial-only numbers against full-space
//! bounds.

use crate::error::{Error, Result};
use crate::measures::{density, renyi, shannon, EvalOpts, RenyiStatus};
use crate::specfun::{digamma, ln_gamma};
use crate::systems::angular::ln_sphere_area;
use crate::systems::{QuantumNumbers, Space, SystemSpec};

const PI: f64 = std::f64::consts::PI;

/// |slack| below this is treated as an analytic identity; slack below its
/// negative is a violation (and an implementation bug).
pub const IDENTITY_TOL: f64 = 1e-6;

/// Conjugated entropic order: 1/alpha + 1/beta = 2.
///
/// An involution on (1/2, inf): applying it twice returns alpha.
pub fn conjugate_beta(alpha: f64) -> Result<f64> {
    if !(alpha > 0.5) {
        return Err(Error::Domain(format!(
            "conjugated order needs alpha > 1/2, got {alpha}"
        )));
    }
    Ok(alpha / (2.0 * alpha - 1.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationKind {
    Shannon,
    Renyi,
    Tsallis,
}

impl RelationKind {
    pub fn label(&self) -> &'static str {
        match self {
            RelationKind::Shannon => "shannon",
            RelationKind::Renyi => "renyi",
            RelationKind::Tsallis => "tsallis",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// the two sides agree within [`IDENTITY_TOL`]
    Identity,
    /// left side strictly above the right
    Strict,
    /// left side below the right beyond tolerance — never expected
    Violated,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Identity => "identity",
            Verdict::Strict => "strict",
            Verdict::Violated => "violated",
        }
    }
}

/// One evaluated uncertainty-relation instance: an inequality of the form
/// left >= right together with where it was evaluated.
#[derive(Clone, Copy, Debug)]
pub struct RelationCheck {
    pub kind: RelationKind,
    pub spec: SystemSpec,
    pub qn: QuantumNumbers,
    pub alpha: f64,
    /// conjugated order actually used on the momentum side (+inf at
    /// alpha = 1/2)
    pub beta: f64,
    pub left: f64,
    pub right: f64,
}

impl RelationCheck {
    pub fn slack(&self) -> f64 {
        self.left - self.right
    }

    pub fn verdict(&self) -> Verdict {
        let s = self.slack();
        if s.abs() < IDENTITY_TOL {
            Verdict::Identity
        } else if s < 0.0 {
            Verdict::Violated
        } else {
            Verdict::Strict
        }
    }

    pub fn csv_header() -> &'static str {
        "kind,d,system,n,l,alpha,beta,left,right,slack,verdict"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.kind.label(),
            self.spec.d,
            self.spec.label(),
            self.qn.n,
            self.qn.l,
            self.alpha,
            self.beta,
            self.left,
            self.right,
            self.slack(),
            self.verdict().label()
        )
    }
}

fn require_symmetric(qn: QuantumNumbers) -> Result<()> {
    if qn.l != 0 {
        return Err(Error::Domain(format!(
            "uncertainty checks cover hyperspherically symmetric states only \
             (l = 0), got l = {}: the angular entropy share of l > 0 states \
             is not evaluated by this library",
            qn.l
        )));
    }
    Ok(())
}

/// Shannon entropic uncertainty: S_rho + S_gamma >= d (1 + ln pi).
pub fn shannon_check(
    spec: &SystemSpec,
    qn: QuantumNumbers,
    opts: &EvalOpts,
) -> Result<RelationCheck> {
    require_symmetric(qn)?;
    let left = shannon(spec, qn, Space::Position, opts)?
        + shannon(spec, qn, Space::Momentum, opts)?;
    let d = spec.d as f64;
    Ok(RelationCheck {
        kind: RelationKind::Shannon,
        spec: *spec,
        qn,
        alpha: 1.0,
        beta: 1.0,
        left,
        right: d * (1.0 + PI.ln()),
    })
}

/// Upper end of the Renyi relation's order window [1/2, alpha_R): the order
/// whose conjugate hits the momentum convergence threshold. `None` means the
/// window is unbounded.
pub fn renyi_order_limit(spec: &SystemSpec) -> Option<f64> {
    crate::measures::thresholds(spec, 0).1
}

/// Right side of the Renyi uncertainty relation,
/// -(d/2) [ ln(alpha/pi)/(1 - alpha) + ln(beta/pi)/(1 - beta) ],
/// with its removable singularities at alpha = 1/2 and alpha = 1 evaluated
/// as analytic limits (d ln 2pi and d (1 + ln pi)).
pub fn renyi_sum_bound(d: u32, alpha: f64) -> Result<f64> {
    if !(alpha >= 0.5) {
        return Err(Error::Domain(format!(
            "Renyi relation bound is defined for alpha >= 1/2, got {alpha}"
        )));
    }
    let df = d as f64;
    if alpha == 0.5 {
        return Ok(df * (2.0 * PI).ln());
    }
    if (alpha - 1.0).abs() <= 1e-7 {
        // the bracket expands to -2 - 2 ln pi + (alpha-1)^2/3 + ...:
        // no linear term, so the limit is accurate to ~d 1e-14 here
        return Ok(df * (1.0 + PI.ln()));
    }
    let beta = alpha / (2.0 * alpha - 1.0);
    let bracket = (alpha.ln() - (2.0 * alpha - 1.0) * beta.ln()) / (1.0 - alpha)
        - 2.0 * PI.ln();
    Ok(-0.5 * df * bracket)
}

/// Two-term expansion of [`renyi_sum_bound`] just above alpha = 1/2:
/// d [ ln 2pi - (1 + ln(2 alpha - 1)) (2 alpha - 1) ].
pub fn near_half_expansion(d: u32, alpha: f64) -> Result<f64> {
    let t = 2.0 * alpha - 1.0;
    if t < 0.0 {
        return Err(Error::Domain(format!(
            "expansion point must satisfy alpha >= 1/2, got {alpha}"
        )));
    }
    let df = d as f64;
    if t == 0.0 {
        return Ok(df * (2.0 * PI).ln());
    }
    Ok(df * ((2.0 * PI).ln() - (1.0 + t.ln()) * t))
}

/// Renyi uncertainty relation R_rho(alpha) + R_gamma(beta) >= bound at the
/// conjugated pair (alpha, beta). Ground states turn it into an identity at
/// alpha = 1/2; all valid states satisfy it strictly elsewhere.
pub fn renyi_sum(
    spec: &SystemSpec,
    qn: QuantumNumbers,
    alpha: f64,
    opts: &EvalOpts,
) -> Result<RelationCheck> {
    require_symmetric(qn)?;
    if !(alpha >= 0.5) {
        return Err(Error::Domain(format!(
            "Renyi relation holds for alpha in [1/2, alpha_R), got {alpha}"
        )));
    }
    if let Some(limit) = renyi_order_limit(spec) {
        if alpha >= limit {
            return Err(Error::Domain(format!(
                "alpha = {alpha} is outside [1/2, {limit}): the conjugated \
                 momentum entropy has no finite value there"
            )));
        }
    }
    let beta = if alpha == 0.5 { f64::INFINITY } else { conjugate_beta(alpha)? };
    let rho = renyi(spec, qn, Space::Position, alpha, opts)?;
    let gamma = renyi(spec, qn, Space::Momentum, beta, opts)?;
    for point in [&rho, &gamma] {
        if point.status != RenyiStatus::Finite {
            return Err(Error::Convergence {
                context: "renyi_sum",
                detail: format!(
                    "entropy at order {} in {:?} space came back {:?}",
                    point.alpha, point.space, point.status
                ),
            });
        }
    }
    Ok(RelationCheck {
        kind: RelationKind::Renyi,
        spec: *spec,
        qn,
        alpha,
        beta,
        left: rho.value + gamma.value,
        right: renyi_sum_bound(spec.d, alpha)?,
    })
}

/// One side of the Tsallis relation at order omega: the angular share times
/// (omega/pi)^(d/(4 omega)) times the radial power integral to 1/(2 omega).
/// At omega = +inf (momentum side of alpha = 1/2) the power integral factor
/// degenerates to the square root of the density supremum.
fn tsallis_side(
    spec: &SystemSpec,
    qn: QuantumNumbers,
    space: Space,
    omega: f64,
    opts: &EvalOpts,
) -> Result<f64> {
    let d = spec.d as f64;
    let ln_omega_d = ln_sphere_area(spec.d);
    let p = spec.profile(qn, space)?;
    let scale_sign = match space {
        Space::Position => 1.0,
        Space::Momentum => -1.0,
    };
    let ln_t = if omega.is_infinite() {
        -0.5 * ln_omega_d + 0.5 * density::sup_density_ln(&p)?.ln_abs()
            - 0.5 * d * scale_sign * spec.length.ln()
    } else {
        let shape = 0.5 / omega - 0.5;
        shape * ln_omega_d
            + d / (4.0 * omega) * (omega / PI).ln()
            + 0.5 / omega * density::power_integral_ln(&p, omega, opts.rel_tol)?.ln_abs()
            + shape * d * scale_sign * spec.length.ln()
    };
    Ok(ln_t.exp())
}

/// Tsallis (Sobolev-type) uncertainty relation on 1/2 <= alpha <= 1:
/// t_rho(alpha) >= t_gamma(beta). Both sides equal pi^(-d/4) at alpha = 1,
/// and ground states make alpha = 1/2 an identity whose common value is the
/// momentum wavefunction at zero.
pub fn tsallis_sides(
    spec: &SystemSpec,
    qn: QuantumNumbers,
    alpha: f64,
    opts: &EvalOpts,
) -> Result<RelationCheck> {
    require_symmetric(qn)?;
    if !(0.5..=1.0).contains(&alpha) {
        return Err(Error::Domain(format!(
            "Tsallis relation holds on 1/2 <= alpha <= 1 only, got {alpha}"
        )));
    }
    let beta = if alpha == 0.5 { f64::INFINITY } else { conjugate_beta(alpha)? };
    Ok(RelationCheck {
        kind: RelationKind::Tsallis,
        spec: *spec,
        qn,
        alpha,
        beta,
        left: tsallis_side(spec, qn, Space::Position, alpha, opts)?,
        right: tsallis_side(spec, qn, Space::Momentum, beta, opts)?,
    })
}

fn require_hydrogen_dim(d: u32) -> Result<()> {
    if d < 3 {
        return Err(Error::Domain(format!(
            "hydrogen closed forms need d >= 3, got {d}"
        )));
    }
    Ok(())
}

/// Closed-form ground-state Renyi entropy of the d-dimensional hydrogen ion
/// (log-Gamma arithmetic throughout, dimensionless r0 = 1 units).
///
/// Position orders: alpha > 0, +inf allowed. Momentum orders:
/// alpha > d/(2(d+1)) (the Gamma pole below which the integral diverges),
/// +inf allowed. Order 1 returns the Shannon limit.
pub fn hydrogen_renyi_closed(d: u32, alpha: f64, space: Space) -> Result<f64> {
    require_hydrogen_dim(d)?;
    if alpha.is_nan() {
        return Err(Error::Domain("Renyi order must not be NaN".into()));
    }
    let df = d as f64;
    let lambda = 0.25 * (df - 1.0); // ground-state spectral scale
    let ln_omega = ln_sphere_area(d);
    match space {
        Space::Position => {
            if !(alpha > 0.0) {
                return Err(Error::Domain(format!(
                    "position-space order must be positive, got {alpha}"
                )));
            }
            // R = d ln lambda + ln Omega + ln Gamma(d) + d ln(alpha)/(alpha-1)
            let order_term = if alpha.is_infinite() {
                0.0
            } else if alpha == 1.0 {
                1.0
            } else {
                alpha.ln() / (alpha - 1.0)
            };
            Ok(df * lambda.ln() + ln_omega + ln_gamma(df) + df * order_term)
        }
        Space::Momentum => {
            let pole = 0.5 * df / (df + 1.0);
            if !(alpha > pole) {
                return Err(Error::Domain(format!(
                    "momentum-space order must exceed d/(2(d+1)) = {pole}, \
                     got {alpha}: the defining integral diverges there"
                )));
            }
            let ln_p = lambda.ln() + 2.0 * ln_gamma(0.5 * (df - 1.0))
                - PI.ln()
                - ln_gamma(df - 1.0);
            let base = -df * lambda.ln() + ln_omega;
            if alpha.is_infinite() {
                // ln Gamma(a(d+1) - d/2) - ln Gamma(a(d+1)) ~ -(d/2) ln(a(d+1));
                // the surviving constant is -(3 d ln 2 + ln P)
                return Ok(base - 3.0 * df * 2.0f64.ln() - ln_p);
            }
            if (alpha - 1.0).abs() <= 1e-6 {
                // numerator vanishes at alpha = 1; the limit needs digammas
                let shannon_term = -(3.0 * df * 2.0f64.ln()
                    + ln_p
                    + (df + 1.0) * (digamma(0.5 * df + 1.0) - digamma(df + 1.0)));
                return Ok(base + shannon_term);
            }
            let numerator = (3.0 * df * alpha - df - 1.0) * 2.0f64.ln()
                + alpha * ln_p
                + ln_gamma(alpha * (df + 1.0) - 0.5 * df)
                + ln_gamma(0.5 * df)
                - ln_gamma(alpha * (df + 1.0));
            Ok(base + numerator / (1.0 - alpha))
        }
    }
}

/// Closed-form Renyi uncertainty sum R_rho(alpha) + R_gamma(alpha/(2alpha-1))
/// for the hydrogen ground state, alpha in [1/2, +inf].
pub fn hydrogen_renyi_sum_closed(d: u32, alpha: f64) -> Result<f64> {
    if !(alpha >= 0.5) {
        return Err(Error::Domain(format!(
            "conjugated sum is defined for alpha >= 1/2, got {alpha}"
        )));
    }
    let beta = if alpha == 0.5 {
        f64::INFINITY
    } else if alpha.is_infinite() {
        0.5
    } else {
        conjugate_beta(alpha)?
    };
    Ok(hydrogen_renyi_closed(d, alpha, Space::Position)?
        + hydrogen_renyi_closed(d, beta, Space::Momentum)?)
}

/// Order maximizing the hydrogen ground-state Renyi sum, found by bisecting
/// the sign change of the sum's finite-difference derivative. The maximum
/// sits just above 1 and drifts toward 1 as d grows.
pub fn hydrogen_alpha_max(d: u32) -> Result<f64> {
    require_hydrogen_dim(d)?;
    let h = 1e-5;
    let slope = |a: f64| -> Result<f64> {
        Ok((hydrogen_renyi_sum_closed(d, a + h)? - hydrogen_renyi_sum_closed(d, a - h)?)
            / (2.0 * h))
    };
    let mut lo = 1.0005;
    let mut hi = 2.5;
    if !(slope(lo)? > 0.0 && slope(hi)? < 0.0) {
        return Err(Error::Convergence {
            context: "hydrogen_alpha_max",
            detail: format!("no slope sign change on [{lo}, {hi}] at d = {d}"),
        });
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if slope(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-7 {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Large-order limit of the hydrogen ground-state Renyi sum: the value
/// approached as alpha -> inf (and the conjugated order -> 1/2).
pub fn hydrogen_sum_asymptote(d: u32) -> Result<f64> {
    hydrogen_renyi_sum_closed(d, f64::INFINITY)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::EvalOpts;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn qn(n: u32, l: u32) -> QuantumNumbers {
        QuantumNumbers { n, l }
    }

    fn opts() -> EvalOpts {
        EvalOpts::default()
    }

    #[test]
    fn conjugation_is_an_involution() {
        let mut alpha = 0.5000001;
        while alpha <= 10.0 {
            let twice = conjugate_beta(conjugate_beta(alpha).unwrap()).unwrap();
            assert_abs_diff_eq!(twice, alpha, epsilon = 1e-14 * alpha);
            alpha += 0.37;
        }
        assert_eq!(conjugate_beta(1.0).unwrap(), 1.0);
        assert_eq!(conjugate_beta(0.75).unwrap(), 1.5);
        // just above the edge the conjugate blows up but stays finite
        let near_edge = conjugate_beta(0.5 + 1e-9).unwrap();
        assert!(near_edge.is_finite() && near_edge > 1e8);
        assert_relative_eq!(near_edge, 2.5e8, max_relative = 1e-5);
        assert!(conjugate_beta(0.5).is_err());
        assert!(conjugate_beta(0.2).is_err());
    }

    #[test]
    fn shannon_sums_beat_the_dimensional_bound() {
        // reference rows: (system, left, right)
        let cases = [
            (SystemSpec::dirichlet(3), 6.6173, 6.4342),
            (SystemSpec::neumann(3), 8.2108, 6.4342),
            (SystemSpec::neumann(4), 11.005, 8.5789),
        ];
        for (spec, left, right) in cases {
            let c = shannon_check(&spec, qn(1, 0), &opts()).unwrap();
            assert_relative_eq!(c.left, left, max_relative = 1e-4);
            assert_relative_eq!(c.right, right, max_relative = 1e-4);
            assert_eq!(c.verdict(), Verdict::Strict);
        }
    }

    #[test]
    fn renyi_bound_limits_and_expansion() {
        // alpha = 1/2: d ln 2pi
        assert_relative_eq!(
            renyi_sum_bound(3, 0.5).unwrap(),
            3.0 * (2.0 * PI).ln(),
            max_relative = 1e-15
        );
        assert_relative_eq!(renyi_sum_bound(3, 0.5).unwrap(), 5.51363, max_relative = 1e-5);
        // alpha = 1 (and a window around it): the Shannon bound
        let shannon_bound = 3.0 * (1.0 + PI.ln());
        for a in [1.0, 1.0 + 1e-8, 1.0 - 1e-8] {
            assert_relative_eq!(
                renyi_sum_bound(3, a).unwrap(),
                shannon_bound,
                max_relative = 1e-12
            );
        }
        // continuity just outside the window
        assert_abs_diff_eq!(
            renyi_sum_bound(3, 1.0 + 2e-7).unwrap(),
            shannon_bound,
            epsilon = 1e-9
        );
        // two-term expansion validates the exact bound near 1/2
        for (d, alpha) in [(3u32, 0.51), (3, 0.52), (5, 0.53), (2, 0.51)] {
            let t = 2.0 * alpha - 1.0;
            let exact = renyi_sum_bound(d, alpha).unwrap();
            let expanded = near_half_expansion(d, alpha).unwrap();
            assert!(
                (exact - expanded).abs() <= 5.0 * t * t * d as f64,
                "d={d} alpha={alpha}: {exact} vs {expanded}"
            );
        }
        // worked value: 3 [ln 2pi - (1 + ln 0.02) 0.02]
        let e = near_half_expansion(3, 0.51).unwrap();
        assert_relative_eq!(e, 5.6884, max_relative = 1e-4);
        assert_abs_diff_eq!(e, renyi_sum_bound(3, 0.51).unwrap(), epsilon = 1e-2);
        // expansion error shrinks roughly quadratically toward 1/2
        let err = |t: f64| {
            let alpha = 0.5 + 0.5 * t;
            (renyi_sum_bound(3, alpha).unwrap() - near_half_expansion(3, alpha).unwrap())
                .abs()
        };
        let (e4, e2, e1) = (err(0.04), err(0.02), err(0.01));
        assert!(e4 / e2 > 2.8 && e2 / e1 > 2.8, "{e4} {e2} {e1}");
        assert!(near_half_expansion(3, 0.5).unwrap() == 3.0 * (2.0 * PI).ln());
        assert!(near_half_expansion(3, 0.4).is_err());
    }

    #[test]
    fn ground_states_saturate_the_renyi_relation_at_half() {
        for spec in [
            SystemSpec::dirichlet(3),
            SystemSpec::neumann(4),
            SystemSpec::hydrogen(3),
        ] {
            let c = renyi_sum(&spec, qn(1, 0), 0.5, &opts()).unwrap();
            assert_eq!(c.verdict(), Verdict::Identity, "{}: slack {}", spec.label(), c.slack());
            assert!(c.beta.is_infinite());
            assert_relative_eq!(
                c.right,
                spec.d as f64 * (2.0 * PI).ln(),
                max_relative = 1e-14
            );
        }
    }

    #[test]
    fn excited_states_keep_strict_slack_at_half() {
        for spec in [SystemSpec::dirichlet(3), SystemSpec::neumann(4), SystemSpec::hydrogen(3)]
        {
            let c = renyi_sum(&spec, qn(2, 0), 0.5, &opts()).unwrap();
            assert!(c.slack() > 1e-3, "{}: slack {}", spec.label(), c.slack());
            assert_eq!(c.verdict(), Verdict::Strict);
        }
    }

    #[test]
    fn renyi_sum_at_order_one_is_the_shannon_sum() {
        for spec in [SystemSpec::dirichlet(6), SystemSpec::neumann(3), SystemSpec::hydrogen(4)]
        {
            let r = renyi_sum(&spec, qn(1, 0), 1.0, &opts()).unwrap();
            let s = shannon_check(&spec, qn(1, 0), &opts()).unwrap();
            assert_abs_diff_eq!(r.left, s.left, epsilon = 1e-6);
            assert_abs_diff_eq!(r.right, s.right, epsilon = 1e-12);
        }
    }

    #[test]
    fn renyi_sum_grows_toward_the_order_window_edge() {
        // reflecting dot d = 3: window ends at alpha_R = 3/2, where the
        // conjugated order meets the momentum threshold 3/4; the sum
        // diverges logarithmically into that corner
        let spec = SystemSpec::neumann(3);
        assert_relative_eq!(renyi_order_limit(&spec).unwrap(), 1.5, max_relative = 1e-15);
        let loose = EvalOpts { rel_tol: 1e-6 };
        let mut prev = f64::NEG_INFINITY;
        for alpha in [1.4, 1.45, 1.49] {
            let c = renyi_sum(&spec, qn(1, 0), alpha, &loose).unwrap();
            assert!(c.left > prev, "alpha={alpha}: {} !> {prev}", c.left);
            assert_eq!(c.verdict(), Verdict::Strict);
            prev = c.left;
        }
    }

    #[test]
    fn renyi_sum_rejects_out_of_window_orders() {
        let spec = SystemSpec::neumann(3);
        assert!(renyi_sum(&spec, qn(1, 0), 0.4, &opts()).is_err());
        assert!(renyi_sum(&spec, qn(1, 0), 1.5, &opts()).is_err());
        assert!(renyi_sum(&spec, qn(1, 0), 2.0, &opts()).is_err());
        // hard wall d <= 3 and hydrogen have no upper edge
        assert!(renyi_order_limit(&SystemSpec::dirichlet(3)).is_none());
        assert!(renyi_order_limit(&SystemSpec::hydrogen(5)).is_none());
        assert_relative_eq!(
            renyi_order_limit(&SystemSpec::dirichlet(5)).unwrap(),
            2.5,
            max_relative = 1e-15
        );
        // l > 0 is out of scope for relation checks
        assert!(renyi_sum(&SystemSpec::dirichlet(3), qn(1, 1), 0.8, &opts()).is_err());
        assert!(shannon_check(&SystemSpec::dirichlet(3), qn(1, 1), &opts()).is_err());
        assert!(tsallis_sides(&SystemSpec::dirichlet(3), qn(1, 1), 0.8, &opts()).is_err());
    }

    #[test]
    fn relation_checks_are_length_invariant() {
        let unit = SystemSpec::dirichlet(4);
        let wide = unit.with_length(2.5);
        let a = renyi_sum(&unit, qn(1, 0), 0.8, &opts()).unwrap();
        let b = renyi_sum(&wide, qn(1, 0), 0.8, &opts()).unwrap();
        assert_abs_diff_eq!(a.left, b.left, epsilon = 1e-9);
        assert_eq!(a.right, b.right);
        let ta = tsallis_sides(&unit, qn(1, 0), 0.75, &opts()).unwrap();
        let tb = tsallis_sides(&wide, qn(1, 0), 0.75, &opts()).unwrap();
        // the sides themselves scale with L but their ratio does not
        assert_relative_eq!(ta.left / ta.right, tb.left / tb.right, max_relative = 1e-9);
    }

    #[test]
    fn tsallis_sides_meet_at_order_one() {
        for spec in [SystemSpec::dirichlet(3), SystemSpec::neumann(4), SystemSpec::hydrogen(3)]
        {
            let c = tsallis_sides(&spec, qn(1, 0), 1.0, &opts()).unwrap();
            let expected = PI.powf(-(spec.d as f64) / 4.0);
            assert_relative_eq!(c.left, expected, max_relative = 1e-9);
            assert_abs_diff_eq!(c.left, c.right, epsilon = 1e-10);
        }
        // d = 3 value quoted to five digits
        let c = tsallis_sides(&SystemSpec::dirichlet(3), qn(1, 0), 1.0, &opts()).unwrap();
        assert_relative_eq!(c.left, 0.42377, max_relative = 1e-4);
    }

    #[test]
    fn tsallis_ground_identity_at_half() {
        // common value is the momentum wavefunction at zero; for the d = 3
        // hard wall that is 1/pi^2
        let c = tsallis_sides(&SystemSpec::dirichlet(3), qn(1, 0), 0.5, &opts()).unwrap();
        assert_relative_eq!(c.left, 1.0 / (PI * PI), max_relative = 1e-8);
        assert_relative_eq!(c.left, 0.10132, max_relative = 1e-4);
        assert_abs_diff_eq!(c.left, c.right, epsilon = 1e-8);
        assert_eq!(c.verdict(), Verdict::Identity);
        // interior orders separate the sides strictly (left above right)
        let mid = tsallis_sides(&SystemSpec::dirichlet(3), qn(1, 0), 0.75, &opts()).unwrap();
        assert!(mid.slack() > 1e-4, "slack {}", mid.slack());
        // outside [1/2, 1] the relation does not hold and is refused
        assert!(tsallis_sides(&SystemSpec::dirichlet(3), qn(1, 0), 1.2, &opts()).is_err());
        assert!(tsallis_sides(&SystemSpec::dirichlet(3), qn(1, 0), 0.45, &opts()).is_err());
    }

    #[test]
    fn hydrogen_closed_position_values() {
        // d = 3, alpha = 2: ln 8 pi
        let r = hydrogen_renyi_closed(3, 2.0, Space::Position).unwrap();
        assert_relative_eq!(r, (8.0 * PI).ln(), max_relative = 1e-14);
        // order-1 limit matches the quadrature Shannon entropy
        let s = shannon(&SystemSpec::hydrogen(3), qn(1, 0), Space::Position, &opts()).unwrap();
        for a in [1.0, 1.0 + 1e-6, 1.0 - 1e-6] {
            let r1 = hydrogen_renyi_closed(3, a, Space::Position).unwrap();
            assert_abs_diff_eq!(r1, s, epsilon = 1e-4);
        }
        // general orders agree with direct quadrature
        for (d, a) in [(3u32, 0.7), (4, 2.5), (5, 1.6)] {
            let closed = hydrogen_renyi_closed(d, a, Space::Position).unwrap();
            let quad = renyi(&SystemSpec::hydrogen(d), qn(1, 0), Space::Position, a, &opts())
                .unwrap();
            assert_relative_eq!(closed, quad.value, max_relative = 1e-8);
        }
        assert!(hydrogen_renyi_closed(3, 0.0, Space::Position).is_err());
        assert!(hydrogen_renyi_closed(2, 1.0, Space::Position).is_err());
    }

    #[test]
    fn hydrogen_closed_momentum_values() {
        // against direct quadrature at assorted orders and dimensions
        for (d, a) in [(3u32, 2.0), (3, 0.6), (4, 1.4), (5, 1.3)] {
            let closed = hydrogen_renyi_closed(d, a, Space::Momentum).unwrap();
            let quad = renyi(&SystemSpec::hydrogen(d), qn(1, 0), Space::Momentum, a, &opts())
                .unwrap();
            assert_relative_eq!(closed, quad.value, max_relative = 1e-7);
        }
        // Shannon limit branch against quadrature
        let s = shannon(&SystemSpec::hydrogen(3), qn(1, 0), Space::Momentum, &opts()).unwrap();
        assert_abs_diff_eq!(
            hydrogen_renyi_closed(3, 1.0, Space::Momentum).unwrap(),
            s,
            epsilon = 1e-6
        );
        // the entropy grows without bound (logarithmically in the distance)
        // toward the Gamma pole at 3/8
        let tiny = hydrogen_renyi_closed(3, 0.375 + 1e-8, Space::Momentum).unwrap();
        let near = hydrogen_renyi_closed(3, 0.375 + 1e-3, Space::Momentum).unwrap();
        let mid = hydrogen_renyi_closed(3, 0.375 + 1e-2, Space::Momentum).unwrap();
        let far = hydrogen_renyi_closed(3, 0.375 + 1e-1, Space::Momentum).unwrap();
        assert!(tiny > near && near > mid && mid > far, "{tiny} {near} {mid} {far}");
        assert!(tiny > near + 10.0);
        // at and below the pole: domain error
        assert!(hydrogen_renyi_closed(3, 0.375, Space::Momentum).is_err());
        assert!(hydrogen_renyi_closed(3, 0.2, Space::Momentum).is_err());
        // the infinite-order branch matches the supremum route
        let closed_inf = hydrogen_renyi_closed(3, f64::INFINITY, Space::Momentum).unwrap();
        let sup = renyi(
            &SystemSpec::hydrogen(3),
            qn(1, 0),
            Space::Momentum,
            f64::INFINITY,
            &opts(),
        )
        .unwrap();
        assert_relative_eq!(closed_inf, sup.value, max_relative = 1e-9);
    }

    #[test]
    fn hydrogen_alpha_max_reference_values() {
        assert_abs_diff_eq!(hydrogen_alpha_max(3).unwrap(), 1.1798, epsilon = 1e-3);
        assert_abs_diff_eq!(hydrogen_alpha_max(4).unwrap(), 1.1498, epsilon = 1e-3);
        assert_abs_diff_eq!(hydrogen_alpha_max(5).unwrap(), 1.1272, epsilon = 1e-3);
        // drifts toward 1 from above as the dimension grows
        let mut prev = f64::INFINITY;
        for d in [3u32, 4, 5, 8, 12, 20] {
            let a = hydrogen_alpha_max(d).unwrap();
            assert!(a > 1.0 && a < prev, "d={d}: {a} !in (1, {prev})");
            prev = a;
        }
    }

    #[test]
    fn hydrogen_sum_asymptote_values() {
        // d = 3: 2 ln 4pi + ln(pi/2) = ln 8 pi^3
        let a3 = hydrogen_sum_asymptote(3).unwrap();
        assert_relative_eq!(a3, (8.0 * PI.powi(3)).ln(), max_relative = 1e-14);
        assert_abs_diff_eq!(a3, 5.5136, epsilon = 1e-3);
        // (8 pi^3 = (2 pi)^3, so at d = 3 the asymptote coincides with the
        // d ln 2pi bound of the opposite order corner; not asserted for
        // general d)
        let a4 = hydrogen_sum_asymptote(4).unwrap();
        assert!(a4 > a3);
        // large but finite orders approach the asymptote monotonically
        let s3 = hydrogen_renyi_sum_closed(3, 1e3).unwrap();
        let s4 = hydrogen_renyi_sum_closed(3, 1e4).unwrap();
        assert!((s4 - a3).abs() < (s3 - a3).abs());
        assert_abs_diff_eq!(s4, a3, epsilon = 1e-2);
    }

    #[test]
    fn mini_sweep_produces_no_violations() {
        let opts = EvalOpts { rel_tol: 1e-8 };
        let mut checked = 0usize;
        for d in [2u32, 3, 4] {
            let mut specs = vec![SystemSpec::dirichlet(d), SystemSpec::neumann(d)];
            if d >= 3 {
                specs.push(SystemSpec::hydrogen(d));
            }
            for spec in specs {
                for n in [1u32, 2] {
                    let s = shannon_check(&spec, qn(n, 0), &opts).unwrap();
                    assert_ne!(s.verdict(), Verdict::Violated, "{}", s.csv_row());
                    let hi = renyi_order_limit(&spec)
                        .map(|r| 0.5 + 0.8 * (r - 0.5))
                        .unwrap_or(2.0);
                    for i in 0..6 {
                        let alpha = 0.5 + (hi - 0.5) * i as f64 / 5.0;
                        let c = renyi_sum(&spec, qn(n, 0), alpha, &opts).unwrap();
                        assert_ne!(c.verdict(), Verdict::Violated, "{}", c.csv_row());
                        checked += 1;
                    }
                    for alpha in [0.5, 0.8, 1.0] {
                        let t = tsallis_sides(&spec, qn(n, 0), alpha, &opts).unwrap();
                        assert_ne!(t.verdict(), Verdict::Violated, "{}", t.csv_row());
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked >= 100, "sweep too small: {checked}");
    }

    #[test]
    fn csv_rows_have_the_documented_shape() {
        let c = renyi_sum(&SystemSpec::dirichlet(3), qn(1, 0), 0.5, &opts()).unwrap();
        let row = c.csv_row();
        assert_eq!(RelationCheck::csv_header().split(',').count(), 11);
        assert_eq!(row.split(',').count(), 11);
        assert!(row.starts_with("renyi,3,dirichlet,1,0,0.5,inf,"));
        assert!(row.ends_with(",identity"));
    }
}
