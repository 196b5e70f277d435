//! Radial profiles of a particle confined to the unit d-ball with a hard
//! (value-clamping) or reflecting (slope-clamping) wall, in position and
//! momentum space. All lengths are in units of the ball radius, momenta in
//! its inverse; the dimensionless energy is the squared spectral parameter.
//!
//! Position space, hard wall:   Rbar(x) = sqrt(2) j^(d1) K_l(j x) / J_{nu+1}(j)
//! Position space, reflecting:  Rbar(x) = sqrt(2) A K_l(a x) / K_l(a),
//!                              A = a / sqrt(a^2 - l(l+d-2)); ground = sqrt(d)
//! Momentum space, hard wall:   Kbar(z) = sqrt(2) j K_l(z) / (j^2 - z^2)
//! Momentum space, reflecting:  Kbar(z) = sqrt(2) A z K_l'(z) / (a^2 - z^2),
//!                              ground: sqrt(d) J_{d/2}(z) / z^(d/2)
//!
//! with K_l the radial kernel J_{l+d/2-1}(z)/z^(d/2-1), j the n-th zero of
//! J_nu, and a the n-th slope-condition root. The momentum profiles have a
//! removable point at the spectral parameter, evaluated through a local
//! Taylor patch so quadrature nodes can land arbitrarily close to it.

use super::{BoundaryCondition, QuantumNumbers, Space};
use crate::error::{Error, Result};
use crate::quadrature::PowerEnvelope;
use crate::specfun::{
    bessel_j_pair_ln, bessel_zero, global_zeros, neumann_zero, radial_kernel,
    radial_kernel_deriv, LogReal,
};

/// Relative half-width of the Taylor patch around the removable point.
const PATCH_REL: f64 = 1e-5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Form {
    HardPos,
    HardMom,
    ReflPosGround,
    ReflPosExcited,
    ReflMomGround,
    ReflMomExcited,
}

/// One radial profile (fixed system, state and space), with everything
/// derived from the eigenvalue precomputed.
#[derive(Clone, Debug)]
pub struct DotProfile {
    d: u32,
    bc: BoundaryCondition,
    qn: QuantumNumbers,
    space: Space,
    form: Form,
    nu: f64,
    d1: f64,
    /// spectral parameter: j_{nu,n} or a_{l,n} (0 for the flat ground state)
    eig: f64,
    /// branch-specific constant factor (see value_ln)
    pref: LogReal,
    /// J_{nu+1} at the eigenvalue (hard-wall momentum patch)
    edge: LogReal,
    /// kernel''..kernel'''' at the eigenvalue (reflecting momentum patch)
    k2a: LogReal,
    k3a: LogReal,
    k4a: LogReal,
}

/// Kernel value and first four derivatives at z > 0, assembled from the
/// ladder K_m' = (m/z) K_m - K_{m+1}.
fn kernel_derivs(d: u32, l: u32, z: f64) -> [LogReal; 5] {
    let lf = l as f64;
    let k: Vec<LogReal> = (0..5).map(|m| radial_kernel(d, l + m, z)).collect();
    let d1: Vec<LogReal> = (0..4)
        .map(|m| k[m].mul(LogReal::from_f64((lf + m as f64) / z)).sub(k[m + 1]))
        .collect();
    let d2: Vec<LogReal> = (0..3)
        .map(|m| {
            let mf = lf + m as f64;
            k[m].mul(LogReal::from_f64(-mf / (z * z)))
                .add(d1[m].mul(LogReal::from_f64(mf / z)))
                .sub(d1[m + 1])
        })
        .collect();
    let d3: Vec<LogReal> = (0..2)
        .map(|m| {
            let mf = lf + m as f64;
            k[m].mul(LogReal::from_f64(2.0 * mf / (z * z * z)))
                .sub(d1[m].mul(LogReal::from_f64(2.0 * mf / (z * z))))
                .add(d2[m].mul(LogReal::from_f64(mf / z)))
                .sub(d2[m + 1])
        })
        .collect();
    let d4 = k[0]
        .mul(LogReal::from_f64(-6.0 * lf / (z * z * z * z)))
        .add(d1[0].mul(LogReal::from_f64(6.0 * lf / (z * z * z))))
        .sub(d2[0].mul(LogReal::from_f64(3.0 * lf / (z * z))))
        .add(d3[0].mul(LogReal::from_f64(lf / z)))
        .sub(d3[1]);
    [k[0], d1[0], d2[0], d3[0], d4]
}

impl DotProfile {
    pub fn new(d: u32, bc: BoundaryCondition, qn: QuantumNumbers, space: Space) -> Result<Self> {
        if d < 2 {
            return Err(Error::Domain(format!("dimension d = {d} not supported (need d >= 2)")));
        }
        if qn.n < 1 {
            return Err(Error::QuantumNumbers(format!("radial index n = {} (need n >= 1)", qn.n)));
        }
        let df = d as f64;
        let lf = qn.l as f64;
        let nu = lf + 0.5 * df - 1.0;
        let d1 = 0.5 * df - 1.0;
        let half_ln2 = 0.5 * std::f64::consts::LN_2;
        let mut p = DotProfile {
            d,
            bc,
            qn,
            space,
            form: Form::HardPos,
            nu,
            d1,
            eig: 0.0,
            pref: LogReal::ONE,
            edge: LogReal::ZERO,
            k2a: LogReal::ZERO,
            k3a: LogReal::ZERO,
            k4a: LogReal::ZERO,
        };
        match bc {
            BoundaryCondition::Dirichlet => {
                let j = bessel_zero(nu, qn.n)?;
                p.eig = j;
                p.edge = bessel_j_pair_ln(nu, j).1;
                match space {
                    Space::Position => {
                        p.form = Form::HardPos;
                        p.pref = LogReal::from_ln(half_ln2 + d1 * j.ln()).div(p.edge);
                    }
                    Space::Momentum => {
                        p.form = Form::HardMom;
                        p.pref = LogReal::from_ln(half_ln2 + j.ln());
                    }
                }
            }
            BoundaryCondition::Neumann => {
                if qn.n == 1 && qn.l == 0 {
                    p.form = match space {
                        Space::Position => Form::ReflPosGround,
                        Space::Momentum => Form::ReflMomGround,
                    };
                    p.pref = LogReal::from_ln(0.5 * df.ln());
                    return Ok(p);
                }
                let a = neumann_zero(d, qn.l, qn.n)?;
                let gap = a * a - lf * (lf + df - 2.0);
                if gap <= 0.0 {
                    return Err(Error::Domain(format!(
                        "slope-condition root a = {a} below the centrifugal threshold \
                         for l = {}, d = {d}",
                        qn.l
                    )));
                }
                let amp = a / gap.sqrt();
                p.eig = a;
                let dv = kernel_derivs(d, qn.l, a);
                p.k2a = dv[2];
                p.k3a = dv[3];
                p.k4a = dv[4];
                match space {
                    Space::Position => {
                        p.form = Form::ReflPosExcited;
                        p.pref =
                            LogReal::from_ln(half_ln2 + amp.ln()).div(radial_kernel(d, qn.l, a));
                    }
                    Space::Momentum => {
                        p.form = Form::ReflMomExcited;
                        p.pref = LogReal::from_ln(half_ln2 + amp.ln());
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn dim(&self) -> u32 {
        self.d
    }

    pub fn boundary(&self) -> BoundaryCondition {
        self.bc
    }

    pub fn qn(&self) -> QuantumNumbers {
        self.qn
    }

    pub fn space(&self) -> Space {
        self.space
    }

    /// Spectral parameter (zero for the flat reflecting ground state).
    pub fn eigenvalue(&self) -> f64 {
        self.eig
    }

    /// Dimensionless energy: square of the spectral parameter.
    pub fn energy(&self) -> f64 {
        self.eig * self.eig
    }

    pub fn upper_limit(&self) -> Option<f64> {
        match self.space {
            Space::Position => Some(1.0),
            Space::Momentum => None,
        }
    }

    fn in_patch(&self, z: f64) -> bool {
        (z - self.eig).abs() <= PATCH_REL * self.eig.max(1.0)
    }

    /// Taylor form of kernel'(z)/(a - z) near the slope root a, where both
    /// factors vanish: -[K''(a) + K'''(a) d/2 + K''''(a) d^2/6], d = z - a.
    fn taylor_slope_ratio(&self, delta: f64) -> LogReal {
        self.k2a
            .add(self.k3a.mul(LogReal::from_f64(0.5 * delta)))
            .add(self.k4a.mul(LogReal::from_f64(delta * delta / 6.0)))
            .neg()
    }

    /// Radial profile value, signed, in log form.
    pub fn value_ln(&self, x: f64) -> LogReal {
        match self.form {
            Form::HardPos => {
                if !(0.0..=1.0).contains(&x) {
                    return LogReal::ZERO;
                }
                self.pref.mul(radial_kernel(self.d, self.qn.l, self.eig * x))
            }
            Form::ReflPosGround => {
                if (0.0..=1.0).contains(&x) {
                    self.pref
                } else {
                    LogReal::ZERO
                }
            }
            Form::ReflPosExcited => {
                if !(0.0..=1.0).contains(&x) {
                    return LogReal::ZERO;
                }
                self.pref.mul(radial_kernel(self.d, self.qn.l, self.eig * x))
            }
            Form::HardMom => {
                let j = self.eig;
                if self.in_patch(x) {
                    let delta = x - j;
                    let c2 = ((2.0 + self.nu * self.nu) / (j * j) - 1.0) / 6.0;
                    let corr = 1.0 - delta / (2.0 * j) + c2 * delta * delta;
                    self.pref
                        .mul(self.edge)
                        .mul(LogReal::from_ln(-self.d1 * x.ln()))
                        .mul(LogReal::from_f64(corr / (j + x)))
                } else {
                    self.pref
                        .mul(radial_kernel(self.d, self.qn.l, x))
                        .div(LogReal::from_f64((j - x) * (j + x)))
                }
            }
            Form::ReflMomGround => {
                if x == 0.0 {
                    let df = self.d as f64;
                    return LogReal::from_ln(
                        0.5 * df.ln()
                            - 0.5 * df * std::f64::consts::LN_2
                            - crate::specfun::gamma::ln_gamma(0.5 * df + 1.0),
                    );
                }
                self.pref
                    .mul(radial_kernel(self.d, 1, x))
                    .div(LogReal::from_f64(x))
            }
            Form::ReflMomExcited => {
                let a = self.eig;
                if self.in_patch(x) {
                    let delta = x - a;
                    let g = self.taylor_slope_ratio(delta);
                    g.mul(self.pref).mul(LogReal::from_f64(x / (a + x)))
                } else {
                    self.pref
                        .mul(LogReal::from_f64(x))
                        .mul(radial_kernel_deriv(self.d, self.qn.l, x))
                        .div(LogReal::from_f64((a - x) * (a + x)))
                }
            }
        }
    }

    /// d/dx of the profile, signed, in log form.
    pub fn deriv_ln(&self, x: f64) -> LogReal {
        match self.form {
            Form::HardPos | Form::ReflPosExcited => {
                if !(0.0..=1.0).contains(&x) {
                    return LogReal::ZERO;
                }
                self.pref
                    .mul(radial_kernel_deriv(self.d, self.qn.l, self.eig * x))
                    .mul(LogReal::from_f64(self.eig))
            }
            Form::ReflPosGround => LogReal::ZERO,
            Form::HardMom => {
                let j = self.eig;
                if self.in_patch(x) {
                    let delta = x - j;
                    let c2 = ((2.0 + self.nu * self.nu) / (j * j) - 1.0) / 6.0;
                    let corr = 1.0 - delta / (2.0 * j) + c2 * delta * delta;
                    let corr_d = -1.0 / (2.0 * j) + 2.0 * c2 * delta;
                    let bracket = corr * (-self.d1 / x - 1.0 / (j + x)) + corr_d;
                    self.pref
                        .mul(self.edge)
                        .mul(LogReal::from_ln(-self.d1 * x.ln()))
                        .mul(LogReal::from_f64(bracket / (j + x)))
                } else {
                    let den = LogReal::from_f64((j - x) * (j + x));
                    let t1 = radial_kernel_deriv(self.d, self.qn.l, x).div(den);
                    let t2 = radial_kernel(self.d, self.qn.l, x)
                        .mul(LogReal::from_f64(2.0 * x))
                        .div(den.mul(den));
                    self.pref.mul(t1.add(t2))
                }
            }
            Form::ReflMomGround => {
                if x == 0.0 {
                    return LogReal::ZERO;
                }
                // d/dz [sqrt(d) K_1(z)/z] = -sqrt(d) K_2(z)/z
                self.pref
                    .mul(radial_kernel(self.d, 2, x))
                    .div(LogReal::from_f64(x))
                    .neg()
            }
            Form::ReflMomExcited => {
                let a = self.eig;
                if self.in_patch(x) {
                    let delta = x - a;
                    let g = self.taylor_slope_ratio(delta);
                    let g_d = self
                        .k3a
                        .mul(LogReal::from_f64(0.5))
                        .add(self.k4a.mul(LogReal::from_f64(delta / 3.0)))
                        .neg();
                    let q = x / (a + x);
                    let q_d = a / ((a + x) * (a + x));
                    self.pref
                        .mul(g.mul(LogReal::from_f64(q_d)).add(g_d.mul(LogReal::from_f64(q))))
                } else {
                    let dv = kernel_derivs(self.d, self.qn.l, x);
                    let den = LogReal::from_f64((a - x) * (a + x));
                    let t1 = dv[1]
                        .add(dv[2].mul(LogReal::from_f64(x)))
                        .div(den);
                    let t2 = dv[1]
                        .mul(LogReal::from_f64(2.0 * x * x))
                        .div(den.mul(den));
                    self.pref.mul(t1.add(t2))
                }
            }
        }
    }

    /// Zeros of the density strictly inside (0, 1) — position space only.
    pub fn interior_zeros(&self) -> Result<Vec<f64>> {
        match self.form {
            Form::HardPos | Form::ReflPosExcited => {
                if self.qn.n < 2 {
                    return Ok(Vec::new());
                }
                let zs = global_zeros().bessel_zeros_upto(self.nu, self.qn.n - 1)?;
                Ok(zs.into_iter().filter(|z| *z < self.eig).map(|z| z / self.eig).collect())
            }
            _ => Ok(Vec::new()),
        }
    }

    /// k-th endpoint of the momentum panel chain: zeros of the underlying
    /// oscillation, suitable both for subdivision and for node-aligned tails.
    pub fn node(&self, k: u32) -> Result<f64> {
        match self.form {
            Form::HardMom => bessel_zero(self.nu, k),
            Form::ReflMomGround => neumann_zero(self.d, 0, k + 1),
            Form::ReflMomExcited => {
                if self.qn.l == 0 {
                    neumann_zero(self.d, 0, k + 1)
                } else {
                    neumann_zero(self.d, self.qn.l, k)
                }
            }
            _ => Err(Error::Domain(
                "panel nodes are defined for momentum profiles only".into(),
            )),
        }
    }

    /// Large-argument envelope of the squared momentum profile.
    pub fn envelope(&self) -> Option<PowerEnvelope> {
        let df = self.d as f64;
        let ln_4pi = (4.0 / std::f64::consts::PI).ln();
        match self.form {
            Form::HardMom => Some(PowerEnvelope {
                ln_c: ln_4pi + 2.0 * self.eig.ln(),
                s: df + 3.0,
                oscillatory: true,
                drift: 0.5 * self.nu * self.nu + 2.0 * self.eig * self.eig + 4.0,
            }),
            Form::ReflMomGround => Some(PowerEnvelope {
                ln_c: (2.0 * df / std::f64::consts::PI).ln(),
                s: df + 1.0,
                oscillatory: true,
                drift: 0.125 * df * df + 4.0,
            }),
            Form::ReflMomExcited => {
                // pref = sqrt(2) A: envelope constant 4 A^2 / pi
                let ln_a2 = 2.0 * self.pref.ln_abs() - std::f64::consts::LN_2;
                Some(PowerEnvelope {
                    ln_c: ln_4pi + ln_a2,
                    s: df + 1.0,
                    oscillatory: true,
                    drift: 0.5 * (self.nu + 1.0) * (self.nu + 1.0)
                        + 2.0 * self.eig * self.eig
                        + 4.0,
                })
            }
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{integrate_log, oscillatory_log, OscOpts, QuadOpts};
    use approx::assert_relative_eq;

    const PI: f64 = std::f64::consts::PI;

    fn dot(d: u32, bc: BoundaryCondition, n: u32, l: u32, space: Space) -> DotProfile {
        DotProfile::new(d, bc, QuantumNumbers { n, l }, space).unwrap()
    }

    /// d = 3, l = 0 reduces to elementary functions:
    /// hard wall: Rbar = sqrt(2) sin(n pi x) / x (up to overall sign).
    #[test]
    fn hard_wall_3d_reduces_to_sine() {
        for n in [1u32, 3] {
            let p = dot(3, BoundaryCondition::Dirichlet, n, 0, Space::Position);
            let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
            for x in [0.17, 0.5, 0.83] {
                let expect = sign * std::f64::consts::SQRT_2 * (n as f64 * PI * x).sin() / x;
                assert_relative_eq!(p.value_ln(x).to_f64(), expect, max_relative = 1e-12);
            }
        }
    }

    /// d = 3, l = 0 reflecting excited states: Rbar = sqrt(2) sin(a x)/(x sin a)
    /// with tan a = a; their normalization is exact by the same identity.
    #[test]
    fn reflecting_3d_matches_tan_root_form() {
        let p = dot(3, BoundaryCondition::Neumann, 2, 0, Space::Position);
        let a = p.eigenvalue();
        assert_relative_eq!(a.tan(), a, max_relative = 1e-9);
        for x in [0.21, 0.6, 0.94] {
            let expect = std::f64::consts::SQRT_2 * (a * x).sin() / (x * a.sin());
            assert_relative_eq!(p.value_ln(x).to_f64(), expect, max_relative = 1e-10);
        }
    }

    #[test]
    fn frozen_profile_values() {
        // independent high-precision evaluations of the defining formulas
        let p = dot(2, BoundaryCondition::Dirichlet, 1, 0, Space::Position);
        assert_relative_eq!(p.value_ln(0.5).to_f64(), 1.8249605895349965, max_relative = 1e-13);
        let k = dot(2, BoundaryCondition::Dirichlet, 1, 0, Space::Momentum);
        assert_relative_eq!(k.value_ln(1.7).to_f64(), 0.46783076475628882, max_relative = 1e-13);
        assert_relative_eq!(
            k.value_ln(k.eigenvalue()).to_f64(),
            0.36709271576940677,
            max_relative = 1e-13
        );

        let p = dot(5, BoundaryCondition::Dirichlet, 2, 2, Space::Position);
        assert_relative_eq!(p.eigenvalue(), 10.417118547379365, max_relative = 1e-14);
        assert_relative_eq!(p.value_ln(0.63).to_f64(), -1.4256877672002105, max_relative = 1e-13);
        let k = dot(5, BoundaryCondition::Dirichlet, 2, 2, Space::Momentum);
        assert_relative_eq!(k.value_ln(4.0).to_f64(), 0.007281516721738593, max_relative = 1e-12);

        let p = dot(5, BoundaryCondition::Neumann, 2, 1, Space::Position);
        assert_relative_eq!(p.eigenvalue(), 7.1360087921901218, max_relative = 1e-14);
        assert_relative_eq!(p.value_ln(0.3).to_f64(), -7.7320194415888967, max_relative = 1e-12);
        let k = dot(5, BoundaryCondition::Neumann, 2, 1, Space::Momentum);
        assert_relative_eq!(
            k.value_ln(2.9).to_f64(),
            -0.0011412314679177692,
            max_relative = 1e-11
        );
        assert_relative_eq!(
            k.value_ln(k.eigenvalue()).to_f64(),
            -0.0104793645435,
            max_relative = 1e-9
        );

        let k = dot(7, BoundaryCondition::Neumann, 1, 0, Space::Momentum);
        assert_relative_eq!(k.value_ln(3.3).to_f64(), 0.010567346749893585, max_relative = 1e-13);
        assert_relative_eq!(k.value_ln(0.0).to_f64(), 0.020104801169736915, max_relative = 1e-14);
    }

    #[test]
    fn ground_reflecting_state_is_flat() {
        let p = dot(6, BoundaryCondition::Neumann, 1, 0, Space::Position);
        assert_relative_eq!(p.value_ln(0.3).to_f64(), 6.0f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(p.value_ln(0.9).to_f64(), 6.0f64.sqrt(), max_relative = 1e-15);
        assert!(p.deriv_ln(0.5).is_zero());
        assert_relative_eq!(p.energy(), 0.0);
    }

    #[test]
    fn wall_conditions_hold() {
        // hard wall: value vanishes; reflecting wall: slope vanishes
        for (n, l) in [(1u32, 0u32), (2, 1), (3, 2)] {
            let p = dot(4, BoundaryCondition::Dirichlet, n, l, Space::Position);
            assert!(
                p.value_ln(1.0).to_f64().abs() <= 1e-8,
                "hard-wall value {}",
                p.value_ln(1.0).to_f64()
            );
            let q = dot(4, BoundaryCondition::Neumann, n, l, Space::Position);
            if (n, l) == (1, 0) {
                continue;
            }
            let slope = q.deriv_ln(1.0).to_f64();
            let scale = q.eigenvalue() * q.value_ln(1.0).to_f64().abs();
            assert!(slope.abs() <= 1e-8 * scale, "slope {slope} vs scale {scale}");
        }
    }

    #[test]
    fn position_profiles_are_normalized() {
        let opts = QuadOpts { rel_tol: 1e-12, ..Default::default() };
        for (d, bc, n, l) in [
            (2, BoundaryCondition::Dirichlet, 1, 0),
            (5, BoundaryCondition::Dirichlet, 3, 1),
            (10, BoundaryCondition::Dirichlet, 2, 2),
            (3, BoundaryCondition::Neumann, 2, 0),
            (6, BoundaryCondition::Neumann, 2, 1),
            (100, BoundaryCondition::Dirichlet, 1, 0),
            (100, BoundaryCondition::Neumann, 2, 0),
        ] {
            let p = dot(d, bc, n, l, Space::Position);
            let mut pts = vec![0.0];
            pts.extend(p.interior_zeros().unwrap());
            pts.push(1.0);
            let mut total = LogReal::ZERO;
            for w in pts.windows(2) {
                let q = integrate_log(
                    &mut |x: f64| {
                        p.value_ln(x)
                            .powf(2.0)
                            .mul(LogReal::from_ln((d as f64 - 1.0) * x.ln()))
                    },
                    w[0],
                    w[1],
                    &opts,
                )
                .unwrap();
                total = total.add(q.value);
            }
            assert_relative_eq!(total.to_f64(), 1.0, max_relative = 1e-10);
        }
    }

    #[test]
    fn momentum_profiles_are_normalized() {
        // full pipeline: panel chain at oscillation nodes + analytic tail
        for (d, bc, n, l) in [
            (3, BoundaryCondition::Dirichlet, 1, 0),
            (4, BoundaryCondition::Dirichlet, 2, 1),
            (7, BoundaryCondition::Neumann, 1, 0),
            (4, BoundaryCondition::Neumann, 2, 1),
            (5, BoundaryCondition::Neumann, 2, 0),
        ] {
            let p = dot(d, bc, n, l, Space::Momentum);
            let env = p.envelope().unwrap();
            let w = d as f64 - 1.0;
            let o = OscOpts { rel_tol: 1e-9, ..Default::default() };
            let r = oscillatory_log(
                &mut |z: f64| p.value_ln(z).powf(2.0).mul(LogReal::from_ln(w * z.ln())),
                &mut |k: u32| p.node(k),
                &mut |z: f64| env.density_power_tail(1.0, w, z),
                &o,
            )
            .unwrap();
            assert_relative_eq!(r.value.to_f64(), 1.0, max_relative = 1e-8);
        }
    }

    #[test]
    fn momentum_patch_is_seamless() {
        // value and slope cross the patch boundary without a visible seam
        for (d, bc, n, l) in [
            (4, BoundaryCondition::Dirichlet, 2, 1),
            (5, BoundaryCondition::Neumann, 2, 1),
        ] {
            let p = dot(d, bc, n, l, Space::Momentum);
            let e = p.eigenvalue();
            let w = PATCH_REL * e.max(1.0);
            for side in [-1.0, 1.0] {
                let inside = e + side * w * 0.999999;
                let outside = e + side * w * 1.000001;
                let vi = p.value_ln(inside).to_f64();
                let vo = p.value_ln(outside).to_f64();
                assert_relative_eq!(vi, vo, max_relative = 1e-8);
                let di = p.deriv_ln(inside).to_f64();
                let do_ = p.deriv_ln(outside).to_f64();
                assert_relative_eq!(di, do_, max_relative = 1e-5, epsilon = 1e-10 * vi.abs());
            }
        }
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let h = 1e-6;
        let cases: Vec<(DotProfile, f64)> = vec![
            (dot(5, BoundaryCondition::Dirichlet, 2, 1, Space::Position), 0.63),
            (dot(4, BoundaryCondition::Neumann, 2, 1, Space::Position), 0.41),
            (dot(3, BoundaryCondition::Dirichlet, 1, 0, Space::Momentum), 2.77),
            (dot(5, BoundaryCondition::Neumann, 2, 1, Space::Momentum), 4.1),
            (dot(7, BoundaryCondition::Neumann, 1, 0, Space::Momentum), 1.3),
        ];
        for (p, x) in cases {
            let fd =
                (p.value_ln(x + h).to_f64() - p.value_ln(x - h).to_f64()) / (2.0 * h);
            let an = p.deriv_ln(x).to_f64();
            assert_relative_eq!(an, fd, max_relative = 1e-6, epsilon = 1e-9);
        }
    }

    #[test]
    fn interior_zeros_are_density_nodes() {
        for (bc, n, l) in [
            (BoundaryCondition::Dirichlet, 3u32, 1u32),
            (BoundaryCondition::Neumann, 3, 1),
        ] {
            let p = dot(4, bc, n, l, Space::Position);
            let zs = p.interior_zeros().unwrap();
            assert_eq!(zs.len(), (n - 1) as usize);
            let scale = p.value_ln(0.5).to_f64().abs().max(1.0);
            for z in zs {
                assert!(z > 0.0 && z < 1.0);
                assert!(
                    p.value_ln(z).to_f64().abs() <= 1e-9 * p.eigenvalue() * scale,
                    "profile at claimed node {z}: {}",
                    p.value_ln(z).to_f64()
                );
            }
        }
    }

    #[test]
    fn energies_follow_known_spectra() {
        // d = 3 hard wall, l = 0: eigenvalues n pi
        for n in 1..=3u32 {
            let p = dot(3, BoundaryCondition::Dirichlet, n, 0, Space::Position);
            assert_relative_eq!(p.energy(), (n as f64 * PI).powi(2), max_relative = 1e-12);
        }
        // reflecting l = 0 chain: a_{0,n} equals the hard-wall eigenvalue
        // of the order-(d/2) function one index down
        let p = dot(6, BoundaryCondition::Neumann, 3, 0, Space::Position);
        let j = bessel_zero(3.0, 2).unwrap();
        assert_relative_eq!(p.eigenvalue(), j, max_relative = 1e-13);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            DotProfile::new(1, BoundaryCondition::Dirichlet, QuantumNumbers { n: 1, l: 0 }, Space::Position),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            DotProfile::new(3, BoundaryCondition::Dirichlet, QuantumNumbers { n: 0, l: 0 }, Space::Position),
            Err(Error::QuantumNumbers(_))
        ));
    }
}
