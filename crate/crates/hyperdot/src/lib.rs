//! Quantum-information measures of hyperspherical quantum dots and
//! hydrogen-like ions.
//!
//! This crate evaluates position- and momentum-space information measures —
//! Shannon, Rényi and Tsallis entropies, Onicescu energy, Fisher
//! information — for two families of d-dimensional, single-particle bound
//! systems:
//!
//! * a particle in a hyperspherical box of unit radius with either a
//!   hard-wall (Dirichlet) or zero-slope (Neumann) surface;
//! * the d-dimensional hydrogen atom (attractive Coulomb potential).
//!
//! Everything is computed from dimensionless radial profiles at unit length
//! scale; measures for other radii or nuclear charges follow from exact
//! logarithmic/power shift rules applied at report time. Momentum profiles
//! come from the radial Fourier–Bessel transform of the position profile
//! (closed forms for every family), so position/momentum pairs are exactly
//! consistent and satisfy the entropic, Fisher and Onicescu uncertainty
//! relations that the `uncertainty` module checks.
//!
//! The numerical core is deliberately explicit: log-scaled Bessel
//! evaluation valid from the deep evanescent region to arguments of a few
//! thousand, guaranteed-bracket zero finding, and adaptive Gauss–Legendre
//! panels (between consecutive oscillation nodes on semi-infinite ranges)
//! with analytic tail corrections. Radial integrands are assembled in the
//! log domain throughout, which keeps d = 100 workable in plain f64.
//!
//! Entry points:
//!
//! * [`systems`] — quantum numbers, radial profiles, closed-form momentum
//!   companions;
//! * [`measures`] — the information measures themselves;
//! * [`uncertainty`] — two-sided relation checks and closed-form bounds;
//! * [`workbench`] — the table/figure/check/zeros commands behind the
//!   `hyperdot` binary.

pub mod error;
pub mod measures;
pub mod quadrature;
pub mod specfun;
pub mod systems;
pub mod uncertainty;
pub mod workbench;

pub use error::{Error, Result};
