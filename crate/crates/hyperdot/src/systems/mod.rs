//! The two families of d-dimensional single-particle systems this crate
//! evaluates: a particle in the unit ball (hard or reflecting wall) and a
//! one-electron ion, each as normalized radial profiles in position and
//! momentum space. Profiles expose exactly what the integration layer needs:
//! signed log-domain values and slopes, panel node chains, interior density
//! zeros, and decay descriptors for analytic tails.

pub mod angular;
pub mod dot;
pub mod hydrogen;

pub use dot::DotProfile;
pub use hydrogen::HydrogenProfile;

use crate::error::{Error, Result};
use crate::quadrature::{integrate_f64, oscillatory_f64, OscOpts, PowerEnvelope, QuadOpts};
use crate::specfun::{bessel_zero, neumann_zero, radial_kernel, LogReal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundaryCondition {
    /// wavefunction vanishes at the wall (hard confinement)
    Dirichlet,
    /// radial slope vanishes at the wall (reflecting confinement)
    Neumann,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    Position,
    Momentum,
}

/// Radial index n (1-based) and orbital index l (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    pub n: u32,
    pub l: u32,
}

/// Which family of radial problems a spec describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SystemKind {
    /// particle in a ball, wavefunction pinned to zero at the wall
    DirichletDot,
    /// particle in a ball, radial slope pinned to zero at the wall
    NeumannDot,
    /// one-electron ion with unit nuclear charge
    Hydrogen,
}

/// A system instance: family, dimensionality, and physical length scale.
///
/// Profiles are always built on the dimensionless radius x = r / length
/// (wall at x = 1 for the dots); `length` never enters the quadrature. It
/// only shifts reported measures: entropies by +/- d ln(length), Onicescu
/// values by length^(-+ d), Fisher values by length^(-+ 2), so that
/// uncertainty sums and products stay scale-free.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SystemSpec {
    pub kind: SystemKind,
    pub d: u32,
    pub length: f64,
}

impl SystemSpec {
    /// Hard-wall ball of unit radius in d dimensions.
    pub fn dirichlet(d: u32) -> Self {
        SystemSpec { kind: SystemKind::DirichletDot, d, length: 1.0 }
    }

    /// Reflecting-wall ball of unit radius in d dimensions.
    pub fn neumann(d: u32) -> Self {
        SystemSpec { kind: SystemKind::NeumannDot, d, length: 1.0 }
    }

    /// One-electron ion in d >= 3 dimensions, unit Bohr-type length.
    pub fn hydrogen(d: u32) -> Self {
        SystemSpec { kind: SystemKind::Hydrogen, d, length: 1.0 }
    }

    /// Same system at a different physical scale (ball radius or length
    /// unit of the ion).
    pub fn with_length(mut self, length: f64) -> Self {
        self.length = length;
        self
    }

    pub fn dim(&self) -> u32 {
        self.d
    }

    /// Boundary condition for the confined families, None for the ion.
    pub fn boundary(&self) -> Option<BoundaryCondition> {
        match self.kind {
            SystemKind::DirichletDot => Some(BoundaryCondition::Dirichlet),
            SystemKind::NeumannDot => Some(BoundaryCondition::Neumann),
            SystemKind::Hydrogen => None,
        }
    }

    /// Short name used in CSV output.
    pub fn label(&self) -> &'static str {
        match self.kind {
            SystemKind::DirichletDot => "dirichlet",
            SystemKind::NeumannDot => "neumann",
            SystemKind::Hydrogen => "hydrogen",
        }
    }

    fn validate(&self) -> Result<()> {
        if !self.length.is_finite() || self.length <= 0.0 {
            return Err(Error::Domain(format!(
                "length scale must be positive and finite, got {}",
                self.length
            )));
        }
        Ok(())
    }

    /// Dimensionless radial profile of the state in the requested space.
    pub fn profile(&self, qn: QuantumNumbers, space: Space) -> Result<Profile> {
        self.validate()?;
        match self.kind {
            SystemKind::DirichletDot => Ok(Profile::Dot(DotProfile::new(
                self.d,
                BoundaryCondition::Dirichlet,
                qn,
                space,
            )?)),
            SystemKind::NeumannDot => Ok(Profile::Dot(DotProfile::new(
                self.d,
                BoundaryCondition::Neumann,
                qn,
                space,
            )?)),
            SystemKind::Hydrogen => {
                Ok(Profile::Hydrogen(HydrogenProfile::new(self.d, qn, space)?))
            }
        }
    }

    /// Dimensionless energy of the state: squared spectral parameter for the
    /// confined systems, -1/(8 lambda^2) for the ion.
    pub fn energy(&self, qn: QuantumNumbers) -> Result<f64> {
        Ok(self.profile(qn, Space::Position)?.energy())
    }
}

/// Exponential decay descriptor of a density: ~ x^degree e^(-x/scale).
#[derive(Clone, Copy, Debug)]
pub struct ExpTail {
    pub scale: f64,
    pub degree: f64,
}

/// A radial profile of either system family, behind one interface.
#[derive(Clone, Debug)]
pub enum Profile {
    Dot(DotProfile),
    Hydrogen(HydrogenProfile),
}

impl Profile {
    pub fn dim(&self) -> u32 {
        match self {
            Profile::Dot(p) => p.dim(),
            Profile::Hydrogen(p) => p.dim(),
        }
    }

    pub fn qn(&self) -> QuantumNumbers {
        match self {
            Profile::Dot(p) => p.qn(),
            Profile::Hydrogen(p) => p.qn(),
        }
    }

    pub fn space(&self) -> Space {
        match self {
            Profile::Dot(p) => p.space(),
            Profile::Hydrogen(p) => p.space(),
        }
    }

    pub fn energy(&self) -> f64 {
        match self {
            Profile::Dot(p) => p.energy(),
            Profile::Hydrogen(p) => p.energy(),
        }
    }

    /// Signed profile value in log form.
    pub fn value_ln(&self, x: f64) -> LogReal {
        match self {
            Profile::Dot(p) => p.value_ln(x),
            Profile::Hydrogen(p) => p.value_ln(x),
        }
    }

    /// Signed d/dx of the profile in log form.
    pub fn deriv_ln(&self, x: f64) -> LogReal {
        match self {
            Profile::Dot(p) => p.deriv_ln(x),
            Profile::Hydrogen(p) => p.deriv_ln(x),
        }
    }

    /// Upper end of the support; None means the half-line.
    pub fn upper_limit(&self) -> Option<f64> {
        match self {
            Profile::Dot(p) => p.upper_limit(),
            Profile::Hydrogen(p) => p.upper_limit(),
        }
    }

    /// Panel edges for half-line integration (momentum space, or the ion's
    /// position space). Oscillatory profiles return their oscillation zeros,
    /// so node-aligned tails apply.
    pub fn node(&self, k: u32) -> Result<f64> {
        match self {
            Profile::Dot(p) => p.node(k),
            Profile::Hydrogen(p) => p.node(k),
        }
    }

    /// Density zeros strictly inside a finite support.
    pub fn interior_zeros(&self) -> Result<Vec<f64>> {
        match self {
            Profile::Dot(p) => p.interior_zeros(),
            Profile::Hydrogen(p) => p.interior_zeros(),
        }
    }

    /// Power-law envelope of the squared profile at large argument, if it
    /// has one (all momentum profiles do).
    pub fn envelope(&self) -> Option<PowerEnvelope> {
        match self {
            Profile::Dot(p) => p.envelope(),
            Profile::Hydrogen(p) => p.envelope(),
        }
    }

    /// Exponential decay descriptor, if the squared profile has one (the
    /// ion's position space).
    pub fn exp_tail(&self) -> Option<ExpTail> {
        match self {
            Profile::Dot(_) => None,
            Profile::Hydrogen(p) => p.exp_tail(),
        }
    }

    /// Whether the squared profile oscillates at large argument.
    pub fn oscillatory(&self) -> bool {
        self.envelope().map(|e| e.oscillatory).unwrap_or(false)
    }
}

/// Practical truncation of an exponentially decaying density integral.
pub(crate) fn exp_support_cut(t: &ExpTail) -> f64 {
    t.scale * (140.0 + 4.0 * t.degree)
}

/// One momentum-space value obtained directly from the position profile:
/// Kbar(z) = int Rbar(x) K_l(z x) x^(d-1) dx over the support. Plain-f64
/// quadrature — intended for moderate dimensions, as a consistency check of
/// the closed momentum profiles.
pub fn momentum_transform(pos: &Profile, z: f64, rel_tol: f64) -> Result<f64> {
    if pos.space() != Space::Position {
        return Err(Error::Domain("momentum_transform expects a position profile".into()));
    }
    let d = pos.dim();
    let l = pos.qn().l;
    let w = d as f64 - 1.0;
    let upper = match pos.upper_limit() {
        Some(u) => u,
        None => {
            let t = pos
                .exp_tail()
                .ok_or_else(|| Error::Domain("half-line profile without decay data".into()))?;
            exp_support_cut(&t)
        }
    };
    let mut edges = vec![0.0];
    edges.extend(pos.interior_zeros()?.into_iter().filter(|x| *x < upper));
    edges.push(upper);
    let opts = QuadOpts { rel_tol, ..Default::default() };
    let mut total = 0.0;
    for pair in edges.windows(2) {
        let q = integrate_f64(
            &mut |x: f64| {
                pos.value_ln(x)
                    .mul(radial_kernel(d, l, z * x))
                    .mul(LogReal::from_ln(w * x.ln()))
                    .to_f64()
            },
            pair[0],
            pair[1],
            &opts,
        )?;
        total += q.value;
    }
    Ok(total)
}

/// Worst absolute deviation between the closed momentum profile of a state
/// and the Fourier-Bessel transform of its position profile, over a grid of
/// momenta. Near zero for every valid state.
pub fn fourier_consistency(
    spec: &SystemSpec,
    qn: QuantumNumbers,
    momenta: &[f64],
    rel_tol: f64,
) -> Result<f64> {
    let pos = spec.profile(qn, Space::Position)?;
    let mom = spec.profile(qn, Space::Momentum)?;
    let mut worst = 0.0f64;
    for &z in momenta {
        let direct = momentum_transform(&pos, z, rel_tol)?;
        let closed = mom.value_ln(z).to_f64();
        worst = worst.max((direct - closed).abs());
    }
    Ok(worst)
}

/// Radial overlap int Rbar_p Rbar_q x^(d-1) dx of two profiles of the same
/// dimension living in the same space: 1 on the diagonal, 0 across a
/// spectrum. Position profiles integrate over their (possibly truncated)
/// support; momentum profiles go through the oscillatory driver with an
/// envelope bound standing in for the tail.
pub fn radial_overlap(p: &Profile, q: &Profile, rel_tol: f64) -> Result<f64> {
    if p.space() != q.space() {
        return Err(Error::Domain("radial_overlap needs profiles in one space".into()));
    }
    if p.dim() != q.dim() {
        return Err(Error::Domain("radial_overlap needs matching dimensions".into()));
    }
    if p.space() == Space::Momentum {
        return momentum_overlap(p, q, rel_tol);
    }
    let d = p.dim();
    let w = d as f64 - 1.0;
    let upper = match (p.upper_limit(), q.upper_limit()) {
        (Some(a), Some(b)) => a.min(b),
        _ => {
            let t = p
                .exp_tail()
                .or_else(|| q.exp_tail())
                .ok_or_else(|| Error::Domain("half-line profiles without decay data".into()))?;
            exp_support_cut(&t)
        }
    };
    let mut edges = vec![0.0];
    edges.extend(p.interior_zeros()?);
    edges.extend(q.interior_zeros()?);
    edges.retain(|x| *x < upper);
    edges.push(upper);
    edges.sort_by(|a, b| a.partial_cmp(b).unwrap());
    // different spectra can place zeros arbitrarily close together (at
    // half-integer orders even equal up to rounding); such sliver segments
    // hold nothing but evaluation noise, so merge them away
    edges.dedup_by(|b, a| *b - *a <= 1e-12 * upper);
    let opts = QuadOpts { rel_tol, ..Default::default() };
    let mut total = 0.0;
    for pair in edges.windows(2) {
        if pair[1] <= pair[0] {
            continue;
        }
        let r = integrate_f64(
            &mut |x: f64| {
                p.value_ln(x)
                    .mul(q.value_ln(x))
                    .mul(LogReal::from_ln(w * x.ln()))
                    .to_f64()
            },
            pair[0],
            pair[1],
            &opts,
        )?;
        total += r.value;
    }
    Ok(total)
}

/// Half-line signed overlap. Within one family the two profiles share the
/// large-z oscillation (identical phase, since the order nu depends only on
/// d and l) or, for the ion, the same rational decay, and in both cases the
/// asymptotic amplitudes have a positive product. The remainder past a
/// cutoff Z therefore carries the DC part of the product envelope,
/// sqrt(Cp Cq) <cos^2> Z^(1-m)/(m-1) with m = (sp + sq)/2 - (d-1), which is
/// handed to the driver as an explicit tail. Stopping at oscillation nodes
/// kills the leading boundary term of the filtered-out oscillation, so the
/// tail's relative error bar is O(1/Z^2) — essential here, because the
/// reflecting wall makes the integrand decay only like z^(-2).
fn momentum_overlap(p: &Profile, q: &Profile, rel_tol: f64) -> Result<f64> {
    let w = p.dim() as f64 - 1.0;
    let (ep, eq) = match (p.envelope(), q.envelope()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::Domain("half-line profiles without decay data".into())),
    };
    if ep.oscillatory != eq.oscillatory
        || (ep.oscillatory && (p.node(1)? - q.node(1)?).abs() > 1e-9 * p.node(1)?)
    {
        return Err(Error::Domain(
            "momentum overlaps need a shared tail structure (same family, d and l)".into(),
        ));
    }
    let m = 0.5 * (ep.s + eq.s) - w;
    if m <= 1.0 {
        return Err(Error::Divergent(format!(
            "overlap tail exponent {m:.3} <= 1: integral diverges"
        )));
    }
    let mut ln_c = 0.5 * (ep.ln_c + eq.ln_c);
    if ep.oscillatory {
        ln_c += crate::specfun::ln_cos_power_mean(1.0);
    }
    let roughness = 2.0 + m * m + ep.drift + eq.drift;
    let mut f = |z: f64| {
        if z == 0.0 {
            return 0.0;
        }
        p.value_ln(z)
            .mul(q.value_ln(z))
            .mul(LogReal::from_ln(w * z.ln()))
            .to_f64()
    };
    let o = OscOpts { rel_tol: 10.0 * rel_tol, ..Default::default() };
    let r = oscillatory_f64(
        &mut f,
        &mut |k: u32| p.node(k),
        &mut |z: f64| {
            let v = (ln_c + (1.0 - m) * z.ln()).exp() / (m - 1.0);
            let rel = roughness / (z * z);
            // the expansion behind the error bar is only certified once the
            // subleading terms are actually small
            let err = if rel < 0.1 { 2.0 * v * rel } else { v };
            Ok((v, err))
        },
        &o,
    )?;
    Ok(r.value)
}

/// Spectral parameters for the confined systems without building a profile.
pub fn spectral_parameter(d: u32, bc: BoundaryCondition, qn: QuantumNumbers) -> Result<f64> {
    let nu = qn.l as f64 + 0.5 * d as f64 - 1.0;
    match bc {
        BoundaryCondition::Dirichlet => bessel_zero(nu, qn.n),
        BoundaryCondition::Neumann => neumann_zero(d, qn.l, qn.n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(spec: SystemSpec, n: u32, l: u32, space: Space) -> Profile {
        spec.profile(QuantumNumbers { n, l }, space).unwrap()
    }

    /// The closed momentum profiles are the actual transforms of the
    /// position profiles — checked pointwise, including at a point close to
    /// the removable singularity of the confined systems.
    #[test]
    fn momentum_profiles_match_direct_transform() {
        let cases: Vec<(SystemSpec, u32, u32)> = vec![
            (SystemSpec::dirichlet(3), 2, 1),
            (SystemSpec::dirichlet(6), 1, 0),
            (SystemSpec::neumann(3), 2, 0),
            (SystemSpec::neumann(5), 1, 2),
            (SystemSpec::neumann(4), 1, 0),
            (SystemSpec::hydrogen(3), 2, 1),
            (SystemSpec::hydrogen(5), 1, 0),
        ];
        for (spec, n, l) in cases {
            let pos = profile(spec, n, l, Space::Position);
            let mom = profile(spec, n, l, Space::Momentum);
            for z in [0.4, 1.7, 6.3] {
                let direct = momentum_transform(&pos, z, 1e-11).unwrap();
                let closed = mom.value_ln(z).to_f64();
                let tol = 1e-8 * (1.0 + closed.abs());
                assert!(
                    (direct - closed).abs() <= tol,
                    "{spec:?} n={n} l={l} z={z}: transform {direct} vs closed {closed}"
                );
            }
        }
    }

    #[test]
    fn consistency_helper_reports_small_residuals() {
        let worst =
            fourier_consistency(&SystemSpec::dirichlet(4), QuantumNumbers { n: 1, l: 1 }, &[
                0.3, 2.1, 5.0,
            ], 1e-11)
            .unwrap();
        assert!(worst <= 1e-9, "residual {worst}");
    }

    #[test]
    fn cross_state_overlaps_vanish() {
        let specs = [
            SystemSpec::dirichlet(5),
            SystemSpec::neumann(4),
            SystemSpec::hydrogen(3),
        ];
        for spec in specs {
            let a = profile(spec, 1, 0, Space::Position);
            let b = profile(spec, 2, 0, Space::Position);
            let off = radial_overlap(&a, &b, 1e-11).unwrap();
            assert!(off.abs() <= 1e-9, "{spec:?}: <1|2> = {off}");
            let on = radial_overlap(&a, &a, 1e-11).unwrap();
            assert!((on - 1.0).abs() <= 1e-9, "{spec:?}: <1|1> = {on}");
        }
    }

    #[test]
    fn momentum_overlaps_are_orthonormal_too() {
        let specs = [
            SystemSpec::dirichlet(3),
            SystemSpec::dirichlet(6),
            SystemSpec::neumann(4),
            SystemSpec::hydrogen(3),
            SystemSpec::hydrogen(5),
        ];
        for spec in specs {
            let a = profile(spec, 1, 0, Space::Momentum);
            let b = profile(spec, 2, 0, Space::Momentum);
            let off = radial_overlap(&a, &b, 1e-9).unwrap();
            assert!(off.abs() <= 1e-8, "{spec:?}: <1|2> = {off}");
            let on = radial_overlap(&a, &a, 1e-9).unwrap();
            assert!((on - 1.0).abs() <= 1e-8, "{spec:?}: <1|1> = {on}");
        }
        let p = profile(SystemSpec::dirichlet(3), 1, 0, Space::Momentum);
        let x = profile(SystemSpec::dirichlet(3), 1, 0, Space::Position);
        assert!(radial_overlap(&p, &x, 1e-9).is_err());
    }

    #[test]
    fn spectral_parameter_shortcut_agrees_with_profiles() {
        let qn = QuantumNumbers { n: 2, l: 1 };
        let p = profile(SystemSpec::neumann(5), qn.n, qn.l, Space::Position);
        let a = spectral_parameter(5, BoundaryCondition::Neumann, qn).unwrap();
        match &p {
            Profile::Dot(dp) => assert_eq!(dp.eigenvalue(), a),
            _ => unreachable!(),
        }
    }

    #[test]
    fn energy_signs_distinguish_families() {
        let qn = QuantumNumbers { n: 1, l: 0 };
        assert!(SystemSpec::dirichlet(3).energy(qn).unwrap() > 0.0);
        assert_eq!(SystemSpec::neumann(3).energy(qn).unwrap(), 0.0);
        assert!(SystemSpec::hydrogen(3).energy(qn).unwrap() < 0.0);
    }

    #[test]
    fn length_is_a_reporting_scale_only() {
        // The profile itself is built on the dimensionless radius, so any
        // positive length gives identical values; a bad length is refused.
        let qn = QuantumNumbers { n: 1, l: 0 };
        let unit = SystemSpec::dirichlet(3);
        let wide = unit.with_length(17.5);
        assert_eq!(wide.length, 17.5);
        let a = profile(unit, qn.n, qn.l, Space::Position).value_ln(0.37);
        let b = profile(wide, qn.n, qn.l, Space::Position).value_ln(0.37);
        assert_eq!(a.to_f64(), b.to_f64());
        assert!(matches!(
            unit.with_length(-2.0).profile(qn, Space::Position),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            unit.with_length(f64::NAN).profile(qn, Space::Position),
            Err(Error::Domain(_))
        ));
    }
}
