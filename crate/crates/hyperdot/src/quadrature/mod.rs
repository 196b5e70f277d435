//! Adaptive quadrature engines: Gauss–Legendre panel rules, finite-interval
//! adaptive bisection in plain and log arithmetic, an oscillatory
//! semi-infinite driver with analytic tail closure, and the closed-form tail
//! envelopes themselves.

pub mod finite;
pub mod gauss;
pub mod semi;
pub mod tails;

pub use finite::{integrate_f64, integrate_log, QuadF64, QuadLog, QuadOpts};
pub use semi::{
    geometric_nodes, oscillatory_f64, oscillatory_log, oscillatory_partials_log, OscOpts,
    SemiResult,
};
pub use tails::PowerEnvelope;
